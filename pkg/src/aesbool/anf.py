"""Sparse algebraic-normal-form algebra over a shared GF(2) variable space.

An ANF is an XOR-set of monomials.  Each monomial is stored as an int
bitmask: bit i set means variable x_i participates; the empty mask is the
constant-1 monomial.  Adding a monomial twice cancels it, multiplication
unions variable sets (x^2 = x), so the term set is always canonical and two
ANFs are equal exactly when their term sets are equal.

The canonical *ordering* of monomials (used for printing and for the
one-line-per-monomial file format) sorts masks as big-endian integers with
variable 0 in the most significant position.  It is materialized only when
needed; the working representation is an unordered frozenset.
"""

from __future__ import annotations

from typing import Iterable, Mapping, Sequence

# Ceiling on the term count a product/substitution may produce.  Flattening
# many AES rounds into one ANF blows up exponentially; failing loudly beats
# exhausting memory.
DEFAULT_MAX_TERMS = 1 << 22


class TermLimitError(RuntimeError):
    """A product or substitution exceeded the configured term budget."""


class VarSpace:
    """Named, contiguous variable segments partitioning [0, width).

    Built from (name, length) pairs; segment starts are cumulative.
    """

    def __init__(self, segments: Sequence[tuple[str, int]]):
        self._starts: dict[str, int] = {}
        self._lengths: dict[str, int] = {}
        self.names: tuple[str, ...] = tuple(name for name, _ in segments)
        pos = 0
        for name, length in segments:
            if name in self._starts:
                raise ValueError(f"duplicate segment name {name!r}")
            if length <= 0:
                raise ValueError(f"segment {name!r} must have positive length")
            self._starts[name] = pos
            self._lengths[name] = length
            pos += length
        self.width = pos

    def start(self, name: str) -> int:
        return self._starts[name]

    def length(self, name: str) -> int:
        return self._lengths[name]

    def segment(self, name: str) -> range:
        s = self._starts[name]
        return range(s, s + self._lengths[name])

    def __eq__(self, other):
        if not isinstance(other, VarSpace):
            return NotImplemented
        return (self.names == other.names
                and self._starts == other._starts
                and self._lengths == other._lengths)

    def __hash__(self):
        return hash((self.names, tuple(self._lengths[n] for n in self.names)))

    def __repr__(self):
        parts = ", ".join(f"{n}:{self._lengths[n]}" for n in self.names)
        return f"VarSpace({parts})"


def _mask_from_vars(vars_: Iterable[int], width: int) -> int:
    mask = 0
    for v in vars_:
        if not 0 <= v < width:
            raise ValueError(f"variable index {v} outside space of width {width}")
        mask |= 1 << v
    return mask


def _vars_from_mask(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


def _xor_fold(masks: Iterable[int]) -> frozenset[int]:
    acc: set[int] = set()
    for m in masks:
        if m in acc:
            acc.remove(m)
        else:
            acc.add(m)
    return frozenset(acc)


class Anf:
    """An XOR-set of monomial masks over a variable space of fixed width."""

    __slots__ = ("width", "terms")

    def __init__(self, width: int, terms: Iterable[int] = (), *, _terms: frozenset[int] | None = None):
        if width < 0:
            raise ValueError("width must be non-negative")
        self.width = width
        if _terms is not None:
            self.terms = _terms
        else:
            folded = _xor_fold(terms)
            limit = (1 << width) - 1
            for m in folded:
                if m < 0 or m > limit:
                    raise ValueError(f"monomial mask {m:#x} outside space of width {width}")
            self.terms = folded

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls, width: int) -> "Anf":
        return cls(width, _terms=frozenset())

    @classmethod
    def one(cls, width: int) -> "Anf":
        return cls(width, _terms=frozenset((0,)))

    @classmethod
    def variable(cls, width: int, index: int) -> "Anf":
        if not 0 <= index < width:
            raise ValueError(f"variable index {index} outside space of width {width}")
        return cls(width, _terms=frozenset((1 << index,)))

    @classmethod
    def from_terms(cls, width: int, terms: Iterable[Iterable[int]]) -> "Anf":
        """Build from an iterable of variable-index collections (XOR-folded)."""
        return cls(width, (_mask_from_vars(t, width) for t in terms))

    # -- queries ---------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def term_count(self) -> int:
        return len(self.terms)

    def degree(self) -> int:
        """Largest monomial size; -1 for the zero function."""
        if not self.terms:
            return -1
        return max(m.bit_count() for m in self.terms)

    def variables(self) -> frozenset[int]:
        """All variable indices appearing in any monomial."""
        used = 0
        for m in self.terms:
            used |= m
        return frozenset(_vars_from_mask(used))

    def monomials(self) -> list[tuple[int, ...]]:
        """Monomials as sorted index tuples, in canonical file order."""
        order = sorted(self.terms, key=lambda m: _canonical_key(m, self.width))
        return [_vars_from_mask(m) for m in order]

    def terms_as_sets(self) -> frozenset[frozenset[int]]:
        return frozenset(frozenset(_vars_from_mask(m)) for m in self.terms)

    # -- algebra ----------------------------------------------------------

    def __xor__(self, other: "Anf") -> "Anf":
        self._check_space(other)
        return Anf(self.width, _terms=self.terms ^ other.terms)

    def multiply(self, other: "Anf", max_terms: int = DEFAULT_MAX_TERMS) -> "Anf":
        """GF(2) product with idempotent variables; guards term blowup."""
        self._check_space(other)
        if len(self.terms) > len(other.terms):
            a, b = other.terms, self.terms
        else:
            a, b = self.terms, other.terms
        acc: set[int] = set()
        for ma in a:
            for mb in b:
                m = ma | mb
                if m in acc:
                    acc.remove(m)
                else:
                    acc.add(m)
            if len(acc) > max_terms:
                raise TermLimitError(
                    f"product exceeds {max_terms} terms "
                    f"({len(self.terms)} x {len(other.terms)} inputs)")
        return Anf(self.width, _terms=frozenset(acc))

    def __mul__(self, other: "Anf") -> "Anf":
        return self.multiply(other)

    def substitute(self, bindings: Mapping[int, "Anf"],
                   max_terms: int = DEFAULT_MAX_TERMS) -> "Anf":
        """Replace every variable by its bound ANF (functional composition).

        All bound ANFs must share one target space; every variable occurring
        in a monomial must be bound.
        """
        target = None
        for g in bindings.values():
            if target is None:
                target = g.width
            elif g.width != target:
                raise ValueError("bindings span different variable spaces")
        if target is None:
            target = self.width
        acc: set[int] = set()
        one = Anf.one(target)
        prod_cache: dict[int, Anf] = {0: one}
        for mask in self.terms:
            prod = _substituted_product(mask, bindings, one, prod_cache, max_terms)
            for m in prod.terms:
                if m in acc:
                    acc.remove(m)
                else:
                    acc.add(m)
            if len(acc) > max_terms:
                raise TermLimitError(f"substitution exceeds {max_terms} terms")
        return Anf(target, _terms=frozenset(acc))

    def rename(self, mapping, width: int | None = None) -> "Anf":
        """Injectively remap variable indices.

        ``mapping`` is an int offset, a sequence indexed by old variable, or
        a mapping {old: new}.  ``width`` sets the target space (defaults to
        the current width).
        """
        new_width = self.width if width is None else width
        used = self.variables()
        if isinstance(mapping, int):
            table = {v: v + mapping for v in used}
        elif isinstance(mapping, Mapping):
            table = {v: mapping[v] for v in used}
        else:
            table = {v: mapping[v] for v in used}
        images = set(table.values())
        if len(images) != len(table):
            raise ValueError("rename mapping is not injective")
        for img in images:
            if not 0 <= img < new_width:
                raise ValueError(f"renamed index {img} outside space of width {new_width}")
        new_terms = []
        for mask in self.terms:
            m = 0
            for v in _vars_from_mask(mask):
                m |= 1 << table[v]
            new_terms.append(m)
        return Anf(new_width, _terms=frozenset(new_terms))

    # -- evaluation --------------------------------------------------------

    def evaluate(self, assignment: Sequence[int]) -> int:
        """Evaluate at a bit sequence covering every used variable."""
        used = self.variables()
        if used and max(used) >= len(assignment):
            raise ValueError(
                f"assignment of length {len(assignment)} does not cover variable {max(used)}")
        ones = 0
        for i, bit in enumerate(assignment):
            if bit:
                ones |= 1 << i
        return self.evaluate_mask(ones)

    def evaluate_mask(self, ones: int) -> int:
        """Evaluate at an assignment packed as an int (bit i = x_i)."""
        acc = 0
        for m in self.terms:
            if m & ones == m:
                acc ^= 1
        return acc

    # -- plumbing -----------------------------------------------------------

    def _check_space(self, other: "Anf") -> None:
        if self.width != other.width:
            raise ValueError(
                f"variable spaces differ (width {self.width} vs {other.width})")

    def __eq__(self, other):
        if not isinstance(other, Anf):
            return NotImplemented
        return self.width == other.width and self.terms == other.terms

    def __hash__(self):
        return hash((self.width, self.terms))

    def __repr__(self):
        return f"Anf(width={self.width}, terms={len(self.terms)})"

    def __str__(self):
        return self.to_str()

    def to_str(self, prefix: str = "x") -> str:
        """Human-readable sum of monomials in canonical order."""
        if not self.terms:
            return "0"
        parts = []
        for mono in self.monomials():
            if not mono:
                parts.append("1")
            else:
                parts.append("".join(f"{prefix}{v}" for v in mono))
        return " + ".join(parts)


def _substituted_product(mask: int, bindings: Mapping[int, Anf], one: Anf,
                         cache: dict[int, Anf], max_terms: int) -> Anf:
    if mask in cache:
        return cache[mask]
    prod = one
    for v in _vars_from_mask(mask):
        try:
            g = bindings[v]
        except KeyError:
            raise ValueError(f"variable {v} is unbound in substitution") from None
        prod = prod.multiply(g, max_terms)
    cache[mask] = prod
    return prod


def _canonical_key(mask: int, width: int) -> int:
    """Value of the mask string read big-endian with variable 0 leftmost."""
    key = 0
    for v in _vars_from_mask(mask):
        key |= 1 << (width - 1 - v)
    return key


def xor(a: Anf, b: Anf) -> Anf:
    return a ^ b


def multiply(a: Anf, b: Anf, max_terms: int = DEFAULT_MAX_TERMS) -> Anf:
    return a.multiply(b, max_terms)


def substitute(f: Anf, bindings: Mapping[int, Anf],
               max_terms: int = DEFAULT_MAX_TERMS) -> Anf:
    return f.substitute(bindings, max_terms)


def rename(f: Anf, mapping, width: int | None = None) -> Anf:
    return f.rename(mapping, width)


def batch_evaluate(equations: Sequence[Anf], inputs: Sequence[int]) -> list[int]:
    """Evaluate many equations on many packed assignments at once.

    ``inputs`` are int masks (bit v = value of x_v).  Returns one output
    mask per input, bit j carrying the value of ``equations[j]``.

    Works column-wise: variable columns are packed across the batch into
    single big ints so each monomial costs one AND per variable for the
    whole batch instead of one test per input.
    """
    n = len(inputs)
    if n == 0:
        return []
    width = equations[0].width if equations else 0
    for eq in equations:
        if eq.width != width:
            raise ValueError("equations span different variable spaces")
    full = (1 << n) - 1
    columns = [0] * width
    for b, ones in enumerate(inputs):
        bit = 1 << b
        while ones:
            low = ones & -ones
            columns[low.bit_length() - 1] |= bit
            ones ^= low
    outputs = [0] * n
    for j, eq in enumerate(equations):
        acc = 0
        for mask in eq.terms:
            sat = full
            for v in _vars_from_mask(mask):
                sat &= columns[v]
                if not sat:
                    break
            acc ^= sat
        if acc:
            out_bit = 1 << j
            b = 0
            while acc:
                low = acc & -acc
                outputs[low.bit_length() - 1] |= out_bit
                acc ^= low
    return outputs

"""Layered AES-128 equation systems and their stage-by-stage evaluation.

Each stage holds 128 equations over its *own* input variables: 128 state
variables, plus 128 key variables for AddRoundKey stages.  A stage's output
bits become the next stage's input variables, so the layering introduces a
fresh 128-variable set per stage instead of flattening ten rounds into one
(astronomically large) ANF.  No operation here ever produces a flattened
multi-round ANF.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from . import aes
from .anf import Anf, VarSpace, batch_evaluate

STATE_SPACE = VarSpace([("state", 128)])
ARK_SPACE = VarSpace([("state", 128), ("key", 128)])

# stage kinds
ADD_ROUND_KEY = "AddRoundKey"
ROUND = "Round"
FINAL_ROUND = "FinalRound"
INV_ROUND = "InvRound"
INV_MIX_COLUMNS = "InvMixColumns"

_ROUND_KINDS = (ROUND, FINAL_ROUND, INV_ROUND)


@dataclass(frozen=True)
class Stage:
    """One layer of 128 equations mapping its input variables to output bits."""

    kind: str
    round_index: int
    gen_label: str      # progress line printed while generating files
    trace_label: str    # line printed while evaluating, and the directory name
    space: VarSpace
    equations: tuple[Anf, ...]

    def __post_init__(self):
        if len(self.equations) != aes.BLOCK_BITS:
            raise ValueError(f"stage needs 128 equations, got {len(self.equations)}")
        for eq in self.equations:
            if eq.width != self.space.width:
                raise ValueError(
                    f"equation width {eq.width} does not match stage space {self.space.width}")

    @property
    def state_width(self) -> int:
        return self.space.length("state")

    @property
    def key_width(self) -> int:
        return self.space.length("key") if "key" in self.space.names else 0


def make_stage(direction: str, kind: str, round_index: int,
               equations: Sequence[Anf]) -> Stage:
    """Build a stage with the labels the generate/control outputs use."""
    if kind == ADD_ROUND_KEY:
        space = ARK_SPACE
        gen = f"AddRoundKey{round_index}"
        trace = f"addRoundKey{round_index}"
    elif kind in (ROUND, FINAL_ROUND):
        space = STATE_SPACE
        gen = f"Round{round_index}"
        trace = f"Round{round_index}"
    elif kind == INV_ROUND:
        space = STATE_SPACE
        gen = f"Round {round_index}"
        trace = f"Round{round_index}"
    elif kind == INV_MIX_COLUMNS:
        space = STATE_SPACE
        gen = f"InvMixColumns {round_index}"
        trace = f"invMixColumns{round_index}"
    else:
        raise ValueError(f"unknown stage kind {kind!r}")
    if direction not in ("enc", "dec"):
        raise ValueError(f"direction must be 'enc' or 'dec', got {direction!r}")
    return Stage(kind, round_index, gen, trace, space, tuple(equations))


@dataclass(frozen=True)
class EquationSystem:
    """An ordered stack of stages, either the ciphering or deciphering chain."""

    direction: str
    stages: tuple[Stage, ...]

    def stage_counts(self) -> dict[str, int]:
        counts: dict[str, int] = {}
        for st in self.stages:
            counts[st.kind] = counts.get(st.kind, 0) + 1
        return counts

    def key_segment_count(self) -> int:
        """Distinct 128-variable key sets (one per AddRoundKey stage)."""
        return sum(1 for st in self.stages if st.kind == ADD_ROUND_KEY)

    def state_segment_count(self) -> int:
        """Structural count: the input set plus one fresh set per round stage."""
        return 1 + sum(1 for st in self.stages if st.kind in _ROUND_KINDS)

    def variable_accounting(self) -> dict[str, int]:
        """Variable totals, in the convention of one fresh 128-variable set
        for the block and one for the key at each of the ten rounds
        (1280 + 1280 = 2560).  The structural segment counts, which also
        include the initial input and cipher-key sets, are reported
        alongside.
        """
        rounds = sum(1 for st in self.stages if st.kind in _ROUND_KINDS)
        state_vars = aes.BLOCK_BITS * rounds
        key_vars = aes.BLOCK_BITS * max(0, self.key_segment_count() - 1)
        return {
            "state_variables": state_vars,
            "key_variables": key_vars,
            "total": state_vars + key_vars,
            "state_segments": self.state_segment_count(),
            "key_segments": self.key_segment_count(),
        }


def _composed_round_equations() -> tuple[Anf, ...]:
    """Full-round equations: column mix of row-shifted substituted bits."""
    sb = aes.subbytes_equations(STATE_SPACE)
    mc = aes.mixcolumns_equations(STATE_SPACE)
    bindings = {j: sb[aes.SHIFTROWS_SOURCE[j]] for j in range(aes.BLOCK_BITS)}
    return tuple(mc[i].substitute(bindings) for i in range(aes.BLOCK_BITS))


def _final_round_equations() -> tuple[Anf, ...]:
    sb = aes.subbytes_equations(STATE_SPACE)
    return tuple(sb[aes.SHIFTROWS_SOURCE[i]] for i in range(aes.BLOCK_BITS))


def _inv_round_equations() -> tuple[Anf, ...]:
    """Byte-inverse of the shifted state: substitution applied after the
    inverse row shift, kept separate from the inverse column mix."""
    isb = aes.inv_subbytes_equations(STATE_SPACE)
    bindings = {
        j: Anf.variable(aes.BLOCK_BITS, aes.INV_SHIFTROWS_SOURCE[j])
        for j in range(aes.BLOCK_BITS)
    }
    return tuple(isb[i].substitute(bindings) for i in range(aes.BLOCK_BITS))


def build_encryption_system() -> EquationSystem:
    """AddRoundKey0, Round0..Round8, AddRoundKey9, Round9 (no column mix),
    AddRoundKey10 -- with each AddRoundKey introducing a fresh key set."""
    ark = tuple(aes.addroundkey_equations(ARK_SPACE))
    round_eqs = _composed_round_equations()
    final_eqs = _final_round_equations()
    stages = [make_stage("enc", ADD_ROUND_KEY, 0, ark)]
    for r in range(9):
        stages.append(make_stage("enc", ROUND, r, round_eqs))
        stages.append(make_stage("enc", ADD_ROUND_KEY, r + 1, ark))
    stages.append(make_stage("enc", FINAL_ROUND, 9, final_eqs))
    stages.append(make_stage("enc", ADD_ROUND_KEY, 10, ark))
    return EquationSystem("enc", tuple(stages))


def build_decryption_system() -> EquationSystem:
    """AddRoundKey10, then per round r = 9..1: Round r (inverse bytes after
    inverse shift), AddRoundKey r, InvMixColumns r; finally Round 0 and
    AddRoundKey0.  The key addition sits between the byte inversion and the
    standalone inverse column mix."""
    ark = tuple(aes.addroundkey_equations(ARK_SPACE))
    inv_round = _inv_round_equations()
    imc = tuple(aes.inv_mixcolumns_equations(STATE_SPACE))
    stages = [make_stage("dec", ADD_ROUND_KEY, 10, ark)]
    for r in range(9, 0, -1):
        stages.append(make_stage("dec", INV_ROUND, r, inv_round))
        stages.append(make_stage("dec", ADD_ROUND_KEY, r, ark))
        stages.append(make_stage("dec", INV_MIX_COLUMNS, r, imc))
    stages.append(make_stage("dec", INV_ROUND, 0, inv_round))
    stages.append(make_stage("dec", ADD_ROUND_KEY, 0, ark))
    return EquationSystem("dec", tuple(stages))


def _stage_assignment(stage: Stage, state_mask: int, key_masks: Sequence[int]) -> int:
    if stage.kind == ADD_ROUND_KEY:
        return state_mask | (key_masks[stage.round_index] << aes.BLOCK_BITS)
    return state_mask


def evaluate_system(system: EquationSystem, block: bytes,
                    key: bytes) -> tuple[bytes, list[tuple[str, str]]]:
    """Fold a block through every stage, binding concrete round keys.

    Returns the output block and the trace of (stage label, 32-hex-char
    state) after every stage.
    """
    key_masks = [aes.block_to_mask(k) for k in aes.reference_key_schedule(key)]
    state = aes.block_to_mask(block)
    trace = []
    for stage in system.stages:
        assignment = _stage_assignment(stage, state, key_masks)
        out = 0
        for i, eq in enumerate(stage.equations):
            if eq.evaluate_mask(assignment):
                out |= 1 << i
        state = out
        trace.append((stage.trace_label, aes.mask_to_block(state).hex()))
    return aes.mask_to_block(state), trace


def evaluate_system_batch(system: EquationSystem, blocks: Sequence[bytes],
                          keys: Sequence[bytes]) -> list[bytes]:
    """Evaluate many (block, key) pairs at once; no trace.

    Column-packed evaluation: much faster than repeated evaluate_system
    when checking the system against the reference cipher in bulk.
    """
    if len(blocks) != len(keys):
        raise ValueError("need one key per block")
    schedules = [[aes.block_to_mask(rk) for rk in aes.reference_key_schedule(k)]
                 for k in keys]
    states = [aes.block_to_mask(b) for b in blocks]
    for stage in system.stages:
        inputs = [
            _stage_assignment(stage, st, ks)
            for st, ks in zip(states, schedules)
        ]
        states = batch_evaluate(stage.equations, inputs)
    return [aes.mask_to_block(s) for s in states]


def reference_trace(direction: str, block: bytes, key: bytes) -> list[tuple[str, str]]:
    """Byte-level oracle trace with the same labels evaluate_system emits."""
    if direction == "enc":
        raw = aes.reference_encrypt_trace(block, key)
    elif direction == "dec":
        raw = aes.reference_decrypt_trace(block, key)
    else:
        raise ValueError(f"direction must be 'enc' or 'dec', got {direction!r}")
    return [(label, state.hex()) for label, state in raw]

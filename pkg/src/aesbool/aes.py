"""AES-128 building blocks, twice over.

Byte-level reference primitives (the oracle everything is checked against)
and symbolic per-bit ANF builders for every cipher sub-function and its
inverse.  Bit conventions, used consistently:

  * a 128-bit block is a 16-byte string in FIPS hex order;
  * bit b_i lives in byte i // 8, most significant bit first;
  * symbolic variable x_i corresponds to bit b_i of a stage's input.

The substitution table is embedded as data; its inverse is derived from it.
"""

from __future__ import annotations

from functools import lru_cache

from .anf import Anf, VarSpace

SBOX = (
    0x63, 0x7c, 0x77, 0x7b, 0xf2, 0x6b, 0x6f, 0xc5, 0x30, 0x01, 0x67, 0x2b, 0xfe, 0xd7, 0xab, 0x76,
    0xca, 0x82, 0xc9, 0x7d, 0xfa, 0x59, 0x47, 0xf0, 0xad, 0xd4, 0xa2, 0xaf, 0x9c, 0xa4, 0x72, 0xc0,
    0xb7, 0xfd, 0x93, 0x26, 0x36, 0x3f, 0xf7, 0xcc, 0x34, 0xa5, 0xe5, 0xf1, 0x71, 0xd8, 0x31, 0x15,
    0x04, 0xc7, 0x23, 0xc3, 0x18, 0x96, 0x05, 0x9a, 0x07, 0x12, 0x80, 0xe2, 0xeb, 0x27, 0xb2, 0x75,
    0x09, 0x83, 0x2c, 0x1a, 0x1b, 0x6e, 0x5a, 0xa0, 0x52, 0x3b, 0xd6, 0xb3, 0x29, 0xe3, 0x2f, 0x84,
    0x53, 0xd1, 0x00, 0xed, 0x20, 0xfc, 0xb1, 0x5b, 0x6a, 0xcb, 0xbe, 0x39, 0x4a, 0x4c, 0x58, 0xcf,
    0xd0, 0xef, 0xaa, 0xfb, 0x43, 0x4d, 0x33, 0x85, 0x45, 0xf9, 0x02, 0x7f, 0x50, 0x3c, 0x9f, 0xa8,
    0x51, 0xa3, 0x40, 0x8f, 0x92, 0x9d, 0x38, 0xf5, 0xbc, 0xb6, 0xda, 0x21, 0x10, 0xff, 0xf3, 0xd2,
    0xcd, 0x0c, 0x13, 0xec, 0x5f, 0x97, 0x44, 0x17, 0xc4, 0xa7, 0x7e, 0x3d, 0x64, 0x5d, 0x19, 0x73,
    0x60, 0x81, 0x4f, 0xdc, 0x22, 0x2a, 0x90, 0x88, 0x46, 0xee, 0xb8, 0x14, 0xde, 0x5e, 0x0b, 0xdb,
    0xe0, 0x32, 0x3a, 0x0a, 0x49, 0x06, 0x24, 0x5c, 0xc2, 0xd3, 0xac, 0x62, 0x91, 0x95, 0xe4, 0x79,
    0xe7, 0xc8, 0x37, 0x6d, 0x8d, 0xd5, 0x4e, 0xa9, 0x6c, 0x56, 0xf4, 0xea, 0x65, 0x7a, 0xae, 0x08,
    0xba, 0x78, 0x25, 0x2e, 0x1c, 0xa6, 0xb4, 0xc6, 0xe8, 0xdd, 0x74, 0x1f, 0x4b, 0xbd, 0x8b, 0x8a,
    0x70, 0x3e, 0xb5, 0x66, 0x48, 0x03, 0xf6, 0x0e, 0x61, 0x35, 0x57, 0xb9, 0x86, 0xc1, 0x1d, 0x9e,
    0xe1, 0xf8, 0x98, 0x11, 0x69, 0xd9, 0x8e, 0x94, 0x9b, 0x1e, 0x87, 0xe9, 0xce, 0x55, 0x28, 0xdf,
    0x8c, 0xa1, 0x89, 0x0d, 0xbf, 0xe6, 0x42, 0x68, 0x41, 0x99, 0x2d, 0x0f, 0xb0, 0x54, 0xbb, 0x16,
)

INV_SBOX = tuple(SBOX.index(v) for v in range(256))

RCON = (0x01, 0x02, 0x04, 0x08, 0x10, 0x20, 0x40, 0x80, 0x1B, 0x36)

BLOCK_BITS = 128
BLOCK_BYTES = 16

# Source index of every output bit of ShiftRows: output bit i reads input
# bit SHIFTROWS_SOURCE[i].  This is the published flat 128-index table.
SHIFTROWS_SOURCE = (
    0, 1, 2, 3, 4, 5, 6, 7,
    40, 41, 42, 43, 44, 45, 46, 47,
    80, 81, 82, 83, 84, 85, 86, 87,
    120, 121, 122, 123, 124, 125, 126, 127,
    32, 33, 34, 35, 36, 37, 38, 39,
    72, 73, 74, 75, 76, 77, 78, 79,
    112, 113, 114, 115, 116, 117, 118, 119,
    24, 25, 26, 27, 28, 29, 30, 31,
    64, 65, 66, 67, 68, 69, 70, 71,
    104, 105, 106, 107, 108, 109, 110, 111,
    16, 17, 18, 19, 20, 21, 22, 23,
    56, 57, 58, 59, 60, 61, 62, 63,
    96, 97, 98, 99, 100, 101, 102, 103,
    8, 9, 10, 11, 12, 13, 14, 15,
    48, 49, 50, 51, 52, 53, 54, 55,
    88, 89, 90, 91, 92, 93, 94, 95,
)

_INV_SHIFTROWS_SOURCE = [0] * BLOCK_BITS
for _i, _src in enumerate(SHIFTROWS_SOURCE):
    _INV_SHIFTROWS_SOURCE[_src] = _i
INV_SHIFTROWS_SOURCE = tuple(_INV_SHIFTROWS_SOURCE)

MIX_COEFFS = (0x02, 0x03, 0x01, 0x01)
INV_MIX_COEFFS = (0x0E, 0x0B, 0x0D, 0x09)


# ---------------------------------------------------------------------------
# GF(2^8) arithmetic and block/bit packing

def xtime(a: int) -> int:
    """Multiply by 02 modulo the AES polynomial (reduction constant 0x1B)."""
    a <<= 1
    if a & 0x100:
        a ^= 0x11B
    return a


def gf_mul(a: int, b: int) -> int:
    r = 0
    while b:
        if b & 1:
            r ^= a
        a = xtime(a)
        b >>= 1
    return r


_REV8 = tuple(int(f"{b:08b}"[::-1], 2) for b in range(256))


def block_to_mask(block: bytes) -> int:
    """Pack a 16-byte block into an int with bit i carrying b_i."""
    mask = 0
    for pos, byte in enumerate(block):
        mask |= _REV8[byte] << (8 * pos)
    return mask


def mask_to_block(mask: int) -> bytes:
    return bytes(_REV8[(mask >> (8 * pos)) & 0xFF] for pos in range(BLOCK_BYTES))


def block_from_hex(s: str) -> bytes:
    if len(s) != 32:
        raise ValueError(f"expected 32 hex characters, got {len(s)}")
    return bytes.fromhex(s)


def block_to_hex(block: bytes) -> str:
    return block.hex()


# ---------------------------------------------------------------------------
# Byte-level reference primitives

def sub_bytes(state: bytes) -> bytes:
    return bytes(SBOX[b] for b in state)


def inv_sub_bytes(state: bytes) -> bytes:
    return bytes(INV_SBOX[b] for b in state)


def shift_rows(state: bytes) -> bytes:
    # state byte r + 4c; row r rotates left by r columns
    return bytes(state[(b + 4 * (b % 4)) % 16] for b in range(16))


def inv_shift_rows(state: bytes) -> bytes:
    return bytes(state[(b - 4 * (b % 4)) % 16] for b in range(16))


def _mix_single(col: bytes, coeffs) -> bytes:
    return bytes(
        gf_mul(coeffs[-r % 4], col[0])
        ^ gf_mul(coeffs[(1 - r) % 4], col[1])
        ^ gf_mul(coeffs[(2 - r) % 4], col[2])
        ^ gf_mul(coeffs[(3 - r) % 4], col[3])
        for r in range(4)
    )


def mix_columns(state: bytes) -> bytes:
    return b"".join(_mix_single(state[c:c + 4], MIX_COEFFS) for c in range(0, 16, 4))


def inv_mix_columns(state: bytes) -> bytes:
    return b"".join(_mix_single(state[c:c + 4], INV_MIX_COEFFS) for c in range(0, 16, 4))


def add_round_key(state: bytes, round_key: bytes) -> bytes:
    return bytes(a ^ b for a, b in zip(state, round_key))


def reference_key_schedule(key: bytes) -> list[bytes]:
    """Expand a 16-byte key into the 11 round keys (44 words)."""
    if len(key) != BLOCK_BYTES:
        raise ValueError("key must be 16 bytes")
    words = [key[4 * i:4 * i + 4] for i in range(4)]
    for i in range(4, 44):
        prev = words[i - 1]
        if i % 4 == 0:
            rotated = prev[1:] + prev[:1]
            prev = bytes(SBOX[b] for b in rotated)
            prev = bytes((prev[0] ^ RCON[i // 4 - 1],)) + prev[1:]
        words.append(bytes(a ^ b for a, b in zip(words[i - 4], prev)))
    return [b"".join(words[4 * r:4 * r + 4]) for r in range(11)]


def reference_encrypt(block: bytes, key: bytes) -> bytes:
    return reference_encrypt_trace(block, key)[-1][1]


def reference_decrypt(block: bytes, key: bytes) -> bytes:
    return reference_decrypt_trace(block, key)[-1][1]


def reference_encrypt_trace(block: bytes, key: bytes) -> list[tuple[str, bytes]]:
    """Encrypt, recording every stage output under its trace label."""
    keys = reference_key_schedule(key)
    trace = []
    state = add_round_key(block, keys[0])
    trace.append(("addRoundKey0", state))
    for r in range(9):
        state = mix_columns(shift_rows(sub_bytes(state)))
        trace.append((f"Round{r}", state))
        state = add_round_key(state, keys[r + 1])
        trace.append((f"addRoundKey{r + 1}", state))
    state = shift_rows(sub_bytes(state))
    trace.append(("Round9", state))
    state = add_round_key(state, keys[10])
    trace.append(("addRoundKey10", state))
    return trace


def reference_decrypt_trace(block: bytes, key: bytes) -> list[tuple[str, bytes]]:
    """Decrypt with AddRoundKey between the byte inversion and the column mix."""
    keys = reference_key_schedule(key)
    trace = []
    state = add_round_key(block, keys[10])
    trace.append(("addRoundKey10", state))
    for r in range(9, 0, -1):
        state = inv_sub_bytes(inv_shift_rows(state))
        trace.append((f"Round{r}", state))
        state = add_round_key(state, keys[r])
        trace.append((f"addRoundKey{r}", state))
        state = inv_mix_columns(state)
        trace.append((f"invMixColumns{r}", state))
    state = inv_sub_bytes(inv_shift_rows(state))
    trace.append(("Round0", state))
    state = add_round_key(state, keys[0])
    trace.append(("addRoundKey0", state))
    return trace


# ---------------------------------------------------------------------------
# Symbolic per-bit equation builders

def _coordinate_anfs(table) -> tuple[Anf, ...]:
    # imported here to keep the module graph acyclic
    from .boolfn import TruthTable, anf_from_truth_table

    coords = []
    for c in range(8):
        bits = [(table[x] >> (7 - c)) & 1 for x in range(256)]
        coords.append(anf_from_truth_table(TruthTable(8, bits)))
    return tuple(coords)


@lru_cache(maxsize=None)
def sbox_coordinate_anfs() -> tuple[Anf, ...]:
    """ANFs of the 8 substitution output bits over an 8-variable space.

    Variable j is bit j (MSB first) of the input byte; coordinate c is
    output bit c.
    """
    return _coordinate_anfs(SBOX)


@lru_cache(maxsize=None)
def inv_sbox_coordinate_anfs() -> tuple[Anf, ...]:
    return _coordinate_anfs(INV_SBOX)


def _bytewise_equations(coords: tuple[Anf, ...], space: VarSpace, layer: str) -> list[Anf]:
    start = space.start(layer)
    if space.length(layer) != BLOCK_BITS:
        raise ValueError(f"layer {layer!r} must be {BLOCK_BITS} variables wide")
    eqs = []
    for i in range(BLOCK_BITS):
        byte, bit = divmod(i, 8)
        eqs.append(coords[bit].rename(start + 8 * byte, width=space.width))
    return eqs


def subbytes_equations(space: VarSpace, layer: str = "state") -> list[Anf]:
    """128 equations: the 8 coordinate ANFs placed on each byte position."""
    return _bytewise_equations(sbox_coordinate_anfs(), space, layer)


def inv_subbytes_equations(space: VarSpace, layer: str = "state") -> list[Anf]:
    return _bytewise_equations(inv_sbox_coordinate_anfs(), space, layer)


def _permutation_equations(source, space: VarSpace, layer: str) -> list[Anf]:
    start = space.start(layer)
    return [Anf.variable(space.width, start + src) for src in source]


def shiftrows_equations(space: VarSpace, layer: str = "state") -> list[Anf]:
    """128 single-variable equations following the published index table."""
    return _permutation_equations(SHIFTROWS_SOURCE, space, layer)


def inv_shiftrows_equations(space: VarSpace, layer: str = "state") -> list[Anf]:
    return _permutation_equations(INV_SHIFTROWS_SOURCE, space, layer)


def _coeff_bit_sources(coeff: int, bit: int) -> tuple[int, ...]:
    """Input-bit positions feeding output bit ``bit`` of coeff * byte."""
    return tuple(q for q in range(8) if (gf_mul(coeff, 0x80 >> q) >> (7 - bit)) & 1)


def _matrix_equations(coeffs, space: VarSpace, layer: str) -> list[Anf]:
    start = space.start(layer)
    eqs = []
    for i in range(BLOCK_BITS):
        byte, bit = divmod(i, 8)
        col, row = divmod(byte, 4)
        vars_ = []
        for src_row in range(4):
            coeff = coeffs[(src_row - row) % 4]
            base = start + 8 * (4 * col + src_row)
            vars_.extend(base + q for q in _coeff_bit_sources(coeff, bit))
        eqs.append(Anf.from_terms(space.width, ([v] for v in vars_)))
    return eqs


def mixcolumns_equations(space: VarSpace, layer: str = "state") -> list[Anf]:
    """128 linear equations from the circulant (02 03 01 01) column mix."""
    return _matrix_equations(MIX_COEFFS, space, layer)


def inv_mixcolumns_equations(space: VarSpace, layer: str = "state") -> list[Anf]:
    return _matrix_equations(INV_MIX_COEFFS, space, layer)


def addroundkey_equations(space: VarSpace, state_layer: str = "state",
                          key_layer: str = "key") -> list[Anf]:
    """128 equations x_i ^ k_i over a state+key space."""
    s = space.start(state_layer)
    k = space.start(key_layer)
    return [
        Anf(space.width, _terms=frozenset((1 << (s + i), 1 << (k + i))))
        for i in range(BLOCK_BITS)
    ]


def key_expansion_word_anf(num: int) -> list[Anf]:
    """32 bit-equations of expanded-key word ``num`` (0..43).

    Words 0..3 are the identity on the cipher-key variables.  Later words
    are expressed over the 128 variables of the previous round's key: the
    word-0 equation rotates the last word's bytes, applies the substitution
    coordinates, toggles constants per the round constant, and adds the
    previous word 0; words 1..3 chain by XOR.
    """
    if not 0 <= num <= 43:
        raise ValueError(f"word index {num} outside 0..43")
    if num < 4:
        return [Anf.variable(BLOCK_BITS, 32 * num + j) for j in range(32)]
    coords = sbox_coordinate_anfs()
    rcon = RCON[num // 4 - 1]
    words = []
    for j in range(32):
        byte, bit = divmod(j, 8)
        rotated_src = 96 + 8 * ((byte + 1) % 4)
        eq = coords[bit].rename(rotated_src, width=BLOCK_BITS)
        if byte == 0 and (rcon >> (7 - bit)) & 1:
            eq ^= Anf.one(BLOCK_BITS)
        eq ^= Anf.variable(BLOCK_BITS, j)
        words.append(eq)
    for n in range(1, num % 4 + 1):
        words = [eq ^ Anf.variable(BLOCK_BITS, 32 * n + j)
                 for j, eq in enumerate(words)]
    return words

"""Frozen expected monomial sets for selected bit equations.

Each entry is a tuple of variable-index tuples; () is the constant-1 term.
Order is canonical (ascending big-endian mask).  These sets were derived
and cross-checked during development and act as exact expectations for the
equation builders.
"""

# Substitution coordinate 7 placed on byte 15 (output bit 127), over the
# 128-variable state space.
SBOX_BIT127_TERMS = (
    (), (127,), (126,127), (125,),
    (125,126), (124,), (124,126), (124,125),
    (124,125,126), (124,125,126,127), (123,), (123,127),
    (123,126), (123,126,127), (123,125), (123,125,127),
    (123,125,126), (123,124,127), (123,124,126), (123,124,125,126,127),
    (122,127), (122,125,127), (122,125,126,127), (122,124,127),
    (122,124,125), (122,124,125,127), (122,124,125,126), (122,123,126,127),
    (122,123,125,127), (122,123,125,126,127), (122,123,124,125,127), (121,127),
    (121,126), (121,126,127), (121,125), (121,125,127),
    (121,125,126), (121,125,126,127), (121,124,127), (121,124,125,126),
    (121,124,125,126,127), (121,123), (121,123,127), (121,123,126),
    (121,123,125,126), (121,123,124,127), (121,123,124,126), (121,123,124,126,127),
    (121,123,124,125,127), (121,123,124,125,126,127), (121,122), (121,122,126),
    (121,122,125), (121,122,125,127), (121,122,124,127), (121,122,124,126,127),
    (121,122,124,125,126), (121,122,123), (121,122,123,127), (121,122,123,126),
    (121,122,123,126,127), (121,122,123,125), (121,122,123,125,126), (121,122,123,124,127),
    (121,122,123,124,125), (121,122,123,124,125,127), (120,126,127), (120,125),
    (120,125,127), (120,125,126,127), (120,124,126), (120,124,125),
    (120,124,125,127), (120,124,125,126), (120,124,125,126,127), (120,123,127),
    (120,123,126,127), (120,123,125), (120,123,125,127), (120,123,125,126),
    (120,123,125,126,127), (120,123,124), (120,123,124,125,126,127), (120,122),
    (120,122,125), (120,122,125,127), (120,122,125,126,127), (120,122,124),
    (120,122,124,126,127), (120,122,124,125), (120,122,124,125,126), (120,122,124,125,126,127),
    (120,122,123,127), (120,122,123,126), (120,122,123,125), (120,122,123,125,127),
    (120,122,123,125,126,127), (120,122,123,124,127), (120,122,123,124,126), (120,122,123,124,125),
    (120,122,123,124,125,127), (120,121), (120,121,125), (120,121,125,126),
    (120,121,125,126,127), (120,121,124), (120,121,124,126), (120,121,124,126,127),
    (120,121,124,125), (120,121,124,125,126,127), (120,121,123,127), (120,121,123,125,127),
    (120,121,123,125,126), (120,121,123,124,127), (120,121,123,124,126,127), (120,121,123,124,125,126),
    (120,121,123,124,125,126,127), (120,121,122), (120,121,122,126), (120,121,122,126,127),
    (120,121,122,125,126), (120,121,122,125,126,127), (120,121,122,124), (120,121,122,124,127),
    (120,121,122,124,125,127), (120,121,122,123,126,127), (120,121,122,123,125), (120,121,122,123,125,126),
    (120,121,122,123,125,126,127), (120,121,122,123,124,126), (120,121,122,123,124,125), (120,121,122,123,124,125,127),
)

# Inverse-substitution coordinate 0 on byte 0 (output bit 0), over the
# 8-variable byte space.
INV_SBOX_BIT0_TERMS = (
    (6,7), (5,6), (4,), (4,7), (4,5,7), (4,5,6), (4,5,6,7), (3,7),
    (3,6,7), (3,5), (3,5,6), (3,5,6,7), (3,4), (3,4,7), (3,4,6,7), (3,4,5,6),
    (3,4,5,6,7), (2,6), (2,5), (2,5,6), (2,5,6,7), (2,4,6), (2,4,6,7), (2,4,5,7),
    (2,3,7), (2,3,6,7), (2,3,5,7), (2,3,5,6,7), (2,3,4,6), (2,3,4,5,6), (1,7), (1,6),
    (1,6,7), (1,5), (1,4,6,7), (1,4,5,7), (1,3,6), (1,3,6,7), (1,3,5), (1,3,5,6,7),
    (1,2), (1,2,7), (1,2,6,7), (1,2,5,6,7), (1,2,4), (1,2,4,7), (1,2,4,6,7), (1,2,4,5,7),
    (1,2,4,5,6), (1,2,4,5,6,7), (1,2,3,7), (1,2,3,5,7), (1,2,3,5,6), (1,2,3,4), (1,2,3,4,6), (1,2,3,4,6,7),
    (1,2,3,4,5), (1,2,3,4,5,6), (0,7), (0,5,7), (0,5,6,7), (0,4,6,7), (0,4,5,6,7), (0,3),
    (0,3,6), (0,3,5), (0,3,5,7), (0,3,5,6,7), (0,3,4,6,7), (0,3,4,5), (0,3,4,5,7), (0,2,6),
    (0,2,5), (0,2,5,6), (0,2,5,6,7), (0,2,4), (0,2,4,7), (0,2,4,6), (0,2,4,5), (0,2,4,5,7),
    (0,2,3,5,6,7), (0,2,3,4), (0,2,3,4,6,7), (0,2,3,4,5), (0,2,3,4,5,6), (0,1,7), (0,1,5,7), (0,1,5,6,7),
    (0,1,4,7), (0,1,4,6,7), (0,1,4,5,6,7), (0,1,3), (0,1,3,6), (0,1,3,6,7), (0,1,3,5,6,7), (0,1,3,4,5,7),
    (0,1,2,6,7), (0,1,2,5), (0,1,2,5,7), (0,1,2,4), (0,1,2,4,6), (0,1,2,4,5), (0,1,2,4,5,7), (0,1,2,4,5,6),
    (0,1,2,3), (0,1,2,3,7), (0,1,2,3,5,7), (0,1,2,3,5,6), (0,1,2,3,5,6,7), (0,1,2,3,4,5),
)

# Bit 0 of expanded-key word 4, over the 128 variables of round 0's key.
KEY_WORD4_BIT0_TERMS = (
    (109,), (109,111), (109,110), (108,109,111), (108,109,110),
    (108,109,110,111), (107,), (107,110,111), (107,109), (107,109,110,111),
    (107,108,110,111), (107,108,109,110), (107,108,109,110,111), (106,), (106,110,111),
    (106,109,111), (106,109,110,111), (106,108), (106,108,111), (106,108,110),
    (106,108,109), (106,108,109,111), (106,108,109,110), (106,107,111), (106,107,109,110),
    (106,107,108), (106,107,108,110,111), (106,107,108,109,111), (105,111), (105,110,111),
    (105,109), (105,109,110), (105,108,111), (105,108,110), (105,108,110,111),
    (105,108,109,111), (105,108,109,110,111), (105,107), (105,107,109), (105,107,109,111),
    (105,107,109,110), (105,107,109,110,111), (105,107,108,111), (105,107,108,109,111), (105,106,111),
    (105,106,109), (105,106,108,111), (105,106,108,109,110), (105,106,107), (105,106,107,110,111),
    (105,106,107,109,110), (105,106,107,108), (105,106,107,108,111), (105,106,107,108,109), (105,106,107,108,109,111),
    (104,), (104,111), (104,110), (104,109,111), (104,109,110,111),
    (104,108,111), (104,108,109,111), (104,108,109,110), (104,107,110), (104,107,110,111),
    (104,107,109,111), (104,107,108,111), (104,107,108,110), (104,107,108,110,111), (104,107,108,109),
    (104,107,108,109,111), (104,106), (104,106,109,110,111), (104,106,108), (104,106,108,111),
    (104,106,107), (104,106,107,110), (104,106,107,110,111), (104,106,107,109,110,111), (104,106,107,108,110,111),
    (104,106,107,108,109,111), (104,105,111), (104,105,109), (104,105,109,110,111), (104,105,108,111),
    (104,105,108,110), (104,105,108,109,110,111), (104,105,107), (104,105,107,111), (104,105,107,110),
    (104,105,107,109), (104,105,107,109,110), (104,105,107,108,111), (104,105,107,108,110,111), (104,105,107,108,109,111),
    (104,105,106,110), (104,105,106,110,111), (104,105,106,109), (104,105,106,109,110), (104,105,106,108,111),
    (104,105,106,108,110), (104,105,106,108,110,111), (104,105,106,108,109,111), (104,105,106,107), (104,105,106,107,110),
    (104,105,106,107,109,111), (104,105,106,107,108), (104,105,106,107,108,110), (104,105,106,107,108,110,111), (104,105,106,107,108,109,111),
    (0,),
)

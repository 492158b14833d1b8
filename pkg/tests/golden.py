"""Values printed in the source text, transcribed as word -> coefficient."""

from fractions import Fraction

_H = Fraction(-1, 2)

# psi_3 in three noncommuting variables
PSI3_M3 = {
    (1, 1, 1): 1, (1, 1, 2): 1, (1, 1, 3): 1, (1, 2, 2): 1, (1, 2, 3): 1, (1, 3, 3): 1,
    (2, 1, 1): -1, (2, 1, 2): -1, (2, 1, 3): -1, (2, 2, 2): 1, (2, 2, 3): 1, (2, 3, 3): 1,
    (3, 1, 1): -1, (3, 1, 2): -1, (3, 1, 3): -1, (3, 2, 1): 1, (3, 2, 2): -1, (3, 2, 3): -1,
    (3, 3, 3): 1,
}

# phi_3 in three noncommuting variables
PHI3_M3 = {
    (1, 1, 1): 1, (1, 1, 2): 1, (1, 1, 3): 1, (1, 2, 1): _H, (1, 2, 2): 1, (1, 2, 3): 1,
    (1, 3, 1): _H, (1, 3, 2): _H, (1, 3, 3): 1,
    (2, 1, 1): _H, (2, 1, 2): _H, (2, 1, 3): _H, (2, 2, 1): _H, (2, 2, 2): 1, (2, 2, 3): 1,
    (2, 3, 1): _H, (2, 3, 2): _H, (2, 3, 3): 1,
    (3, 1, 1): _H, (3, 1, 2): _H, (3, 1, 3): _H, (3, 2, 1): 1, (3, 2, 2): _H, (3, 2, 3): _H,
    (3, 3, 1): _H, (3, 3, 2): _H, (3, 3, 3): 1,
}

# brick tabloids of shape (6,3) and type (3,3,2,1)
BRICK_COUNT, BRICK_WEIGHT, ORDERED_BRICK_COUNT = 8, 45, 3

# wall of shape (1,6,2,4) and type (1,1,3,2,2,3,1)
WALL_PB, WALL_FB = 6, 12
INDEXED_WALLS_243_22113 = 4

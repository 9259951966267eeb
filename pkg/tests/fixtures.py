"""Hand-written tableau literals, frozen as expected values for the suite."""

from soctab.tableaux import SkewTableau

# socle tableau of the bundled embedding m2 (shared by m3); the engine
# must reproduce this literal exactly
SOCLE_M2 = SkewTableau(
    (4, 2),
    (5, 3, 2),
    (3, 1),
    {(1, 3): 4, (2, 2): 3, (2, 3): 2, (3, 2): 1, (4, 1): 2, (5, 1): 1},
)

# LR tableau of the dual of m2; also the terminal state of switching
# applied to SOCLE_M2
DUAL_LR_M2 = SkewTableau(
    (3, 1),
    (5, 3, 2),
    (4, 2),
    {(1, 3): 1, (2, 3): 2, (3, 2): 1, (5, 1): 3},
)

# socle tableau of the bundled direct-sum embedding m1; the second of the
# two socle tableaux of this shape
SOCLE_M1 = SkewTableau(
    (4, 2),
    (5, 3, 2),
    (3, 1),
    {(1, 3): 2, (2, 2): 4, (2, 3): 1, (3, 2): 3, (4, 1): 2, (5, 1): 1},
)

# the three socle tableaux of shape (42, 642, 42); enumeration must return
# exactly this set
SOCLE_642 = [
    SkewTableau(
        (4, 2),
        (6, 4, 2),
        (4, 2),
        {(1, 3): 2, (2, 3): 1, (3, 2): 4, (4, 2): 3, (5, 1): 2, (6, 1): 1},
    ),
    SkewTableau(
        (4, 2),
        (6, 4, 2),
        (4, 2),
        {(1, 3): 4, (2, 3): 2, (3, 2): 3, (4, 2): 1, (5, 1): 2, (6, 1): 1},
    ),
    SkewTableau(
        (4, 2),
        (6, 4, 2),
        (4, 2),
        {(1, 3): 4, (2, 3): 3, (3, 2): 2, (4, 2): 1, (5, 1): 2, (6, 1): 1},
    ),
]

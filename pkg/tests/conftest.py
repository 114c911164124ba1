import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

from polyquot import minimalize


def ideal(nvars, *gens):
    return minimalize(nvars, gens)


# the running examples from the bivariate theory
I1_GENS = [(7, 0), (6, 5), (5, 8), (4, 10), (3, 13), (2, 17), (1, 20), (0, 25)]
I2_GENS = [(17, 0), (14, 1), (11, 2), (8, 3), (7, 4), (5, 5), (4, 6), (2, 7), (0, 8)]
I3_GENS = [
    (20, 0), (14, 1), (11, 2), (8, 3), (6, 4), (5, 9),
    (4, 13), (3, 14), (2, 16), (1, 17), (0, 21),
]
SEVEN_GENS = [(14, 2), (13, 3), (10, 4), (9, 5), (5, 6), (4, 12), (3, 13)]
SEVEN_ORDER = [(5, 6), (4, 12), (3, 13), (9, 5), (10, 4), (13, 3), (14, 2)]

# section-1 ideals (six and four variables)
NONPURE_ONLY = [
    (1, 0, 1, 1, 0, 0),
    (1, 0, 0, 1, 1, 0),
    (1, 1, 0, 1, 0, 0),
    (1, 2, 0, 0, 0, 1),
    (0, 0, 1, 2, 2, 0),
]
DUAL_ONLY = [(1, 1, 0, 0), (1, 0, 0, 2), (0, 1, 0, 2), (0, 0, 1, 2)]

# the componentwise polymatroidal ideal with strong exchange property whose
# square is not componentwise polymatroidal
SQUARE_REGRESSION = [
    (2, 0, 0), (0, 2, 1), (1, 1, 1), (1, 2, 0), (1, 0, 3), (0, 1, 3),
]

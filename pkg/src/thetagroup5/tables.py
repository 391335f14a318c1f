"""Matrix lists transcribed from the literature, kept as plain data.

Each list is validated by the test-suite rather than trusted.
"""

# Gamma(1) = union of Gamma_{theta,5} * M over these 30 matrices (a, b, c, d).
# The printed list has (-5, 2, 2, 1), which has determinant -9; the entry below
# is the unimodular matrix (-5, 2, 2, -1) from the accompanying Gamma(5) table.
GAMMA1_COSET_REPS = [
    (1, 0, 0, 1),
    (1, 1, 0, 1),
    (1, -1, 0, 1),
    (1, 2, 0, 1),
    (1, -2, 0, 1),
    (1, 0, -1, 1),
    (1, 1, -1, 0),
    (1, 2, -1, -1),
    (1, -2, -1, 3),
    (1, -1, -1, 2),
    (1, 0, -2, 1),
    (1, 1, -2, -1),
    (1, -1, -2, 3),
    (1, -2, -2, 5),
    (1, 2, -2, -3),
    (1, 0, 2, 1),
    (1, 1, 2, 3),
    (1, -1, 2, -1),
    (1, 2, 2, 5),
    (1, -2, 2, -3),
    (-3, 1, 2, -1),
    (-3, -2, 2, 1),
    (-3, -5, 2, 3),
    (-3, 2, -2, 1),
    (-3, 5, -2, 3),
    (-5, 2, 2, -1),
    (-5, 7, 2, -3),
    (5, 12, 2, 5),
    (5, 2, 2, 1),
    (5, 7, 2, 3),
]

GAMMA1_COSET_REPS_AS_PRINTED = (-5, 2, 2, 1)

# Signed classes mod 25: each entry stands for +M and -M.
_KERNEL_ODD_PAIRS = [
    (1, 0, 0, 1), (1, 5, 5, 1), (1, -5, -5, 1), (1, 10, 10, 1), (1, -10, -10, 1),
    (6, 0, 0, -4), (6, 5, 5, -4), (6, -5, -5, -4), (6, 10, 10, -4), (6, -10, -10, -4),
    (11, 0, 0, -9), (11, 5, 5, -9), (11, -5, -5, -9), (11, 10, 10, -9), (11, -10, -10, -9),
    (-9, 0, 0, 11), (-9, 5, 5, 11), (-9, -5, -5, 11), (-9, 10, 10, 11), (-9, -10, -10, 11),
    (-4, 0, 0, 6), (-4, 5, 5, 6), (-4, -5, -5, 6), (-4, 10, 10, 6), (-4, -10, -10, 6),
]

_KERNEL_EVEN_EXTRA_PAIRS = [
    (0, -1, 1, 0), (0, 4, 6, 0), (0, 9, 11, 0), (0, -11, -9, 0), (0, -6, -4, 0),
    (5, -1, 1, -5), (5, 4, 6, -5), (5, 9, 11, -5), (5, -11, -9, -5), (5, -6, -4, -5),
    (-5, -1, 1, 5), (-5, 4, 6, 5), (-5, 9, 11, 5), (-5, -11, -9, 5), (-5, -6, -4, 5),
    (10, -1, 1, -10), (10, 4, 6, -10), (10, 9, 11, -10), (10, -11, -9, -10), (10, -6, -4, -10),
    (-10, -1, 1, 10), (-10, 4, 6, 10), (-10, 9, 11, 10), (-10, -11, -9, 10), (-10, -6, -4, 10),
]


def _signed(pairs):
    out = []
    for a, b, c, d in pairs:
        out.append((a, b, c, d))
        out.append((-a, -b, -c, -d))
    return out


# mod-25 classes of Ker nu_{F^k} for k = +-1, +-3 (mod 10)
KERNEL_ODD_MOD25 = _signed(_KERNEL_ODD_PAIRS)
# mod-25 classes of Ker nu_{F^k} for k = +-2, +-4 (mod 10)
KERNEL_EVEN_MOD25 = _signed(_KERNEL_ODD_PAIRS + _KERNEL_EVEN_EXTRA_PAIRS)

# Transversals of Gamma_{theta,5} modulo Ker nu_{F^k}, as printed for each case of k mod 10.
PRINTED_KERNEL_TRANSVERSALS = {
    5: [(1, 0, 0, 1), (0, -1, 1, 0)],
    1: [(1, n, 0, 1) for n in (0, 5, 10, 15, 20)],
    2: [(1, n, 0, 1) for n in (0, 5, 10, 15, 20)] + [(n, -1, 1, 0) for n in (0, 5, 10, 15, 20)],
}

# Parabolic points as printed, (p, q) meaning p/q and (1, 0) meaning infinity.
PRINTED_PARABOLIC_POINTS = [(1, 0), (-1, 1), (1, 2), (-1, 2), (3, 2), (-3, 2), (5, 2), (-5, 2)]

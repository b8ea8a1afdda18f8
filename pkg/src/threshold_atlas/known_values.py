"""Published values used as regression fixtures.

Characteristic polynomials of the threshold arrangement for n = 2..10,
written highest power first, with the corresponding region counts; plus
the size-2 and size-3 listings of threshold pairs and their graphs.
"""

THRESHOLD_CHARPOLY_DESC = {
    2: (1, -1, 0),
    3: (1, -3, 3, -1),
    4: (1, -6, 15, -17, 7),
    5: (1, -10, 45, -105, 120, -51),
    6: (1, -15, 105, -410, 900, -1012, 431),
    7: (1, -21, 210, -1225, 4340, -9058, 9961, -4208),
    8: (1, -28, 378, -3066, 15855, -52234, 104433, -112163, 46824),
    9: (1, -36, 630, -6762, 47817, -226380, 703815, -1355427, 1422483, -586141),
    10: (1, -45, 990, -13560, 125265, -801507, 3541125, -10491450, 19546335, -20068391, 8161237),
}

THRESHOLD_REGIONS = {
    2: 2,
    3: 8,
    4: 46,
    5: 332,
    6: 2874,
    7: 29024,
    8: 334982,
    9: 4349492,
    10: 62749906,
}

# (threshold pair, threshold permutation, odd cycles), in published row order
PAIRS_SIZE_2 = [
    ((-1, -2), (-1, -2), 2),
    ((1, 2), (-1, 2), 1),
]

PAIRS_SIZE_3 = [
    ((-1, -2, 3), (-1, -2, -3), 3),
    ((1, 2, -3), (-1, 2, -3), 2),
    ((1, 3, -2), (-1, 3, -2), 2),
    ((-1, -2, -3), (-1, -2, 3), 2),
    ((-1, -3, 2), (-1, -3, -2), 1),
    ((-2, -3, 1), (-2, -3, -1), 1),
    ((1, 2, 3), (-1, 2, 3), 1),
    ((2, 3, -1), (2, -3, -1), 0),
]

# (convention-following construction, edges, odd anchors), in published row order
GRAPHS_SIZE_2 = [
    ((1, -2), (), 2),
    ((1, 2), ((1, 2),), 1),
]

GRAPHS_SIZE_3 = [
    ((1, -2, 3), ((1, 3), (2, 3)), 3),
    ((1, 3, -2), ((1, 3),), 2),
    ((1, 2, -3), ((1, 2),), 2),
    ((1, -2, -3), (), 2),
    ((1, 2, 3), ((1, 2), (1, 3), (2, 3)), 1),
    ((1, -3, 2), ((1, 2), (2, 3)), 1),
    ((-2, -3, 1), ((1, 2), (1, 3)), 1),
    ((2, 3, -1), ((2, 3),), 0),
]


def charpoly_low_to_high(n: int) -> tuple[int, ...]:
    return tuple(reversed(THRESHOLD_CHARPOLY_DESC[n]))

"""Published motif counts for ILTH started from a single hyperedge.

``GOLDEN[k][t]`` maps Lee motif number to count; a column missing from a
row (blank cell) means zero.
"""

from __future__ import annotations

_COLUMNS = {3: (2, 6, 11, 26), 4: (2, 6, 11, 12, 16, 26), 5: (2, 6, 11, 12, 16, 26), 6: (2, 6, 11, 12, 16, 26)}

_ROWS = {
    3: {
        1: (None, None, 3, 1),
        2: (45, 126, 75, 45),
        3: (3447, 4770, 1083, 1141),
        4: (161451, 115146, 12675, 22365),
        5: (5981355, 2301930, 133563, 382981),
        6: (195870195, 41818266, 1326675, 6071085),
        7: (5993456427, 720709290, 12718443, 91888021),
    },
    4: {
        1: (None, None, 6, None, 4, None),
        2: (90, 504, 474, 504, 188, 276),
        3: (16660, 75168, 14010, 42192, 5116, 34248),
        4: (2651330, 6088680, 305682, 1920888, 107712, 2341332),
        5: (305991860, 369517680, 5764506, 67434480, 2026684, 122766120),
        6: (28267339810, 19173430584, 100158594, 2066592024, 34911788, 1285323380),
    },
    5: {
        1: (None, None, 10, None, 10, None),
        2: (150, 1110, 1490, 2100, 1870, 420),
        3: (40210, 356670, 82030, 540720, 189610, 234360),
        4: (13613610, 77687610, 3114650, 71894820, 12725950, 50062740),
        5: (4067088850, 12719703750, 97894510, 6831291600, 680649610, 7078307400),
    },
    6: {
        0: (None, None, None, None, None, None),
        1: (None, None, 15, None, 20, None),
        2: (229, 2070, 3285, 5040, 7680, 120),
        3: (79096, 994680, 301515, 2610180, 1983740, 576720),
        4: (388621215, 409931190, 18710325, 815537880, 346117200, 370671840),
    },
}


def columns(k: int) -> tuple[int, ...]:
    return _COLUMNS[k]


def golden_row(k: int, t: int) -> dict[int, int]:
    return {col: (0 if v is None else v) for col, v in zip(_COLUMNS[k], _ROWS[k][t])}


def generations(k: int) -> list[int]:
    return sorted(_ROWS[k])


# Rows covered by the exact reproduction gate (k -> largest t).
ACCEPTANCE_T_MAX = {3: 5, 4: 4, 5: 3, 6: 3}

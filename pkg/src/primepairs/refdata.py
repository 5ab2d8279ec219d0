"""Published reference values used by the `verify` subcommand.

These are the numbers the package is expected to reproduce: exact pair
counts for selected gaps and checkpoints, singular-series prefix sums,
comparison-integral values, oscillation-term values, and the aggregated
error function.  Keeping them in one data module lets `verify` print a
pass/fail line per value without touching the test suite.
"""

from __future__ import annotations

#: pi_{2r}(x) for the published gaps at the desk-scale checkpoints.
#: Key: 2r; value: {x: count}.
PAIR_COUNTS = {
    2:   {10**3: 35,  10**4: 205, 10**6: 8169,  10**8: 440312},
    4:   {10**3: 41,  10**4: 203, 10**6: 8144,  10**8: 440258},
    6:   {10**3: 74,  10**4: 411, 10**6: 16386, 10**8: 879908},
    8:   {10**3: 38,  10**4: 208, 10**6: 8242,  10**8: 439908},
    10:  {10**3: 51,  10**4: 270, 10**6: 10934, 10**8: 586811},
    12:  {10**3: 70,  10**4: 404, 10**6: 16378, 10**8: 880196},
    14:  {10**3: 48,  10**4: 245, 10**6: 9878,  10**8: 528095},
    16:  {10**3: 39,  10**4: 200, 10**6: 8210,  10**8: 441055},
    18:  {10**3: 74,  10**4: 417, 10**6: 16451, 10**8: 880444},
    20:  {10**3: 48,  10**4: 269, 10**6: 10972, 10**8: 586267},
    22:  {10**3: 41,  10**4: 226, 10**6: 9171,  10**8: 489085},
    24:  {10**3: 79,  10**4: 404, 10**6: 16343, 10**8: 880927},
    30:  {10**3: 99,  10**4: 536, 10**6: 21990, 10**8: 1173934},
    210: {10**3: 107, 10**4: 641, 10**6: 26178, 10**8: 1409150},
}

#: Exact singular-series ratios for the published gaps, as (num, den).
RATIOS = {
    2: (1, 1), 4: (1, 1), 6: (2, 1), 8: (1, 1), 10: (4, 3), 12: (2, 1),
    14: (6, 5), 16: (1, 1), 18: (2, 1), 20: (4, 3), 22: (10, 9),
    24: (2, 1), 30: (8, 3), 210: (16, 5),
}

#: S_N/C2 prefix sums, published to 7 decimals.  Key: 2N.
S_OVER_C2 = {
    100: 73.6377551, 200: 149.3252708, 300: 225.4407734, 400: 300.3132204,
    500: 376.0636735, 600: 452.4693143, 700: 527.3827110, 800: 603.4536365,
    900: 679.4011178, 1000: 754.4223630, 2000: 1511.5853400,
    3000: 2269.6853566, 4000: 3026.0445409, 5000: 3783.8474197,
}

#: Aggregates Pi_N(x).  Key: x; value: {2N: Pi}.
PI_N = {
    10**6: {
        100: 605087, 200: 1226667, 300: 1851433, 400: 2465581, 500: 3086695,
        600: 3714028, 700: 4328507, 800: 4951873, 900: 5574196,
        1000: 6188960, 2000: 12391586, 3000: 18597363, 4000: 24783891,
        5000: 30975067,
    },
    10**8: {
        100: 32417440, 200: 65739481, 300: 99245855, 400: 132202659,
        500: 165551273, 600: 199186203, 700: 232164862, 800: 265651152,
        900: 299079601, 1000: 332105577, 2000: 665435604, 3000: 999175096,
        4000: 1332114654, 5000: 1665693721,
    },
}

#: Error-function values Delta_N(x).  Key: x; value: {2N: delta}.
DELTA_N = {
    10**6: {
        100: +0.09722, 200: -0.02199, 300: -0.12785, 400: -0.23344,
        500: -0.32860, 600: -0.31371, 700: -0.34805, 800: -0.42140,
        900: -0.48004, 1000: -0.52230, 2000: -0.78001, 3000: -0.95390,
        4000: -1.11135, 5000: -1.28953,
    },
    10**8: {
        100: -0.08872, 200: +0.03162, 300: -0.09833, 400: -0.23013,
        500: -0.18188, 600: -0.19507, 700: -0.18926, 800: -0.21737,
        900: -0.28690, 1000: -0.27582, 2000: -0.16751, 3000: -0.14446,
        4000: -0.23565, 5000: -0.28111,
    },
}

#: Oscillation term by the psi route at the checkpoints where it is published.
T_VALUES = {10**6: 0.41156, 10**8: 0.17554}

#: Comparison integral li2 at published points.
LI2_VALUES = {10**3: 34.6851, 10**4: 162.2412, 10**5: 945.75959, 10**6: 6246.9757}

#: Twin-pair main term L2(x) = 2 C2 li2(x) at published points.
L2_VALUES = {10**6: 8248.0297, 10**8: 440367.7942}

#: Reference twin-prime constant.
C2_VALUE = 0.6601618158

#: Checkpoints covered by the verify command without the --big flag.
DESK_CHECKPOINTS = (10**3, 10**4, 10**6, 10**8)

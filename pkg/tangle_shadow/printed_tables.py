"""
Coefficient tables for the closures of repeated tangles, as printed.

Each table lists rows n = 0..5 of [x^k] coefficients for one closure of
A_n. ``refs`` names every (closure kind, catalog entry) pair whose closure
polynomial the table lists; ``oeis`` is the sequence the table is indexed
under, when there is one. A row containing ``...`` was printed truncated:
the cells before it are the leading coefficients and the cells after it,
when present, are the trailing coefficients of the row.
"""

PRINTED_TABLES = {
    1: {
        "refs": (("D", "A1"),),
        "oeis": "A007318",
        "rows": [
            [0, 1],
            [0, 1, 1],
            [0, 1, 2, 1],
            [0, 1, 3, 3, 1],
            [0, 1, 4, 6, 4, 1],
            [0, 1, 5, 10, 10, 5, 1],
        ],
    },
    2: {
        "refs": (("N", "A1"),),
        "oeis": "A300453",
        "rows": [
            [0, 0, 1],
            [0, 1, 1],
            [0, 2, 2],
            [0, 3, 4, 1],
            [0, 4, 7, 4, 1],
            [0, 5, 11, 10, 5, 1],
        ],
    },
    3: {
        "refs": (("R", "A1"),),
        "oeis": "A300453",
        "rows": [
            [0, 1, 1],
            [0, 2, 2],
            [0, 3, 4, 1],
            [0, 4, 7, 4, 1],
            [0, 5, 11, 10, 5, 1],
            [0, 6, 16, 20, 15, 6, 1],
        ],
    },
    4: {
        "refs": (("D", "A2"), ("D", "A18")),
        "oeis": "A034870",
        "rows": [
            [0, 1],
            [0, 1, 2, 1],
            [0, 1, 4, 6, 4, 1],
            [0, 1, 6, 15, 20, 15, 6, 1],
            [0, 1, 8, 28, 56, 70, 56, 28, 8, 1],
            [0, 1, 10, 45, 120, 210, 252, 210, 120, 45, 10, 1],
        ],
    },
    5: {
        "refs": (("N", "A2"),),
        "rows": [
            [0, 0, 1],
            [0, 2, 2],
            [0, 4, 7, 4, 1],
            [0, 6, 16, 20, 15, 6, 1],
            [0, 8, 29, 56, 70, 56, 28, 8, 1],
            [0, 10, 46, 120, 210, 252, 210, 120, 45, 10, 1],
        ],
    },
    6: {
        "refs": (("R", "A2"),),
        "rows": [
            [0, 1, 1],
            [0, 3, 4, 1],
            [0, 5, 11, 10, 5, 1],
            [0, 7, 22, 35, 35, 21, 7, 1],
            [0, 9, 37, 84, 126, 126, 84, 36, 9, 1],
            [0, 11, 56, 165, 330, 462, 462, 330, 165, 55, 11, 1],
        ],
    },
    7: {
        "refs": (("D", "A3"),),
        "oeis": "A038208",
        "rows": [
            [0, 1],
            [0, 2, 2],
            [0, 4, 8, 4],
            [0, 8, 24, 24, 8],
            [0, 16, 64, 96, 64, 16],
            [0, 32, 160, 320, 320, 160, 32],
        ],
    },
    8: {
        "refs": (("N", "A3"),),
        "oeis": "A300184",
        "rows": [
            [0, 0, 1],
            [0, 1, 2, 1],
            [0, 4, 7, 4, 1],
            [0, 12, 26, 19, 6, 1],
            [0, 32, 88, 88, 39, 8, 1],
            [0, 80, 272, 360, 230, 71, 10, 1],
        ],
    },
    9: {
        "refs": (("R", "A3"),),
        "rows": [
            [0, 1, 1],
            [0, 3, 4, 1],
            [0, 8, 15, 8, 1],
            [0, 20, 50, 43, 14, 1],
            [0, 48, 152, 184, 103, 24, 1],
            [0, 112, 432, 680, 550, 231, 42, 1],
        ],
    },
    10: {
        "refs": (("D", "A4"), ("D", "A25"), ("D", "A19")),
        "rows": [
            [0, 1],
            [0, 1, 3, 3, 1],
            [0, 1, 6, 15, 20, 15, 6, 1],
            [0, 1, 9, 36, 84, 126, 126, 84, 36, 9, 1],
            [0, 1, 12, 66, 220, 495, 792, 924, 792, 495, 220, 66, 12, 1],
            [0, 1, 15, 105, 455, 1365, 3003, 5005, 6435, 6435, 5005, 3003, 1365, 455, ..., 105, 15, 1],
        ],
    },
    11: {
        "refs": (("N", "A4"),),
        "rows": [
            [0, 0, 1],
            [0, 3, 4, 1],
            [0, 6, 16, 20, 15, 6, 1],
            [0, 9, 37, 84, 126, 126, 84, 36, 9, 1],
            [0, 12, 67, 220, 495, 792, 924, 792, 495, 220, 66, 12, 1],
            [0, 15, 106, 455, 1365, 3003, 5005, 6435, 6435, 5005, 3003, 1365, 455, ...],
        ],
    },
    12: {
        "refs": (("R", "A4"),),
        "rows": [
            [0, 1, 1],
            [0, 4, 7, 4, 1],
            [0, 7, 22, 35, 35, 21, 7, 1],
            [0, 10, 46, 120, 210, 252, 210, 120, 45, 10, 1],
            [0, 13, 79, 286, 715, 1287, 1716, 1716, 1287, 715, 286, 78, 13, ...],
            [0, 16, 121, 560, 1820, 4368, 8008, 11440, 12870, 11440, 8008, 4368, 1820, ...],
        ],
    },
    13: {
        "refs": (("D", "A5"), ("D", "A7")),
        "oeis": "A299989",
        "rows": [
            [0, 1],
            [0, 3, 4, 1],
            [0, 9, 24, 22, 8, 1],
            [0, 27, 108, 171, 136, 57, 12, 1],
            [0, 81, 432, 972, 1200, 886, 400, 108, 16, 1],
            [0, 243, 1620, 4725, 7920, 8430, 5944, 2810, 880, 175, 20, 1],
        ],
    },
    14: {
        "refs": (("N", "A5"),),
        "rows": [
            [0, 0, 1],
            [0, 1, 3, 3, 1],
            [0, 6, 16, 20, 15, 6, 1],
            [0, 27, 90, 136, 129, 84, 36, 9, 1],
            [0, 108, 459, 876, 1021, 832, 501, 220, 66, 12, 1],
            [0, 405, 2133, 5085, 7350, 7321, 5420, 3103, 1375, 455, 105, 15, 1],
        ],
    },
    15: {
        "refs": (("R", "A5"),),
        "rows": [
            [0, 1, 1],
            [0, 4, 7, 4, 1],
            [0, 15, 40, 42, 23, 7, 1],
            [0, 54, 198, 307, 265, 141, 48, 10, 1],
            [0, 189, 891, 1848, 2221, 1718, 901, 328, 82, 13, 1],
            [0, 648, 3753, 9810, 15270, 15751, 11364, 5913, 2255, 630, 125, 16, 1],
        ],
    },
    16: {
        "refs": (("D", "A6"), ("D", "A28"), ("D", "A20")),
        "oeis": "A139548",
        "rows": [
            [0, 1],
            [0, 2, 4, 2],
            [0, 4, 16, 24, 16, 4],
            [0, 8, 48, 120, 160, 120, 48, 8],
            [0, 16, 128, 448, 896, 1120, 896, 448, 128, 16],
            [0, 32, 320, 1440, 3840, 6720, 8064, 6720, 3840, 1440, 320, 32],
        ],
    },
    17: {
        "refs": (("N", "A6"),),
        "rows": [
            [0, 0, 1],
            [0, 3, 4, 1],
            [0, 12, 27, 20, 5],
            [0, 36, 122, 171, 126, 49, 8],
            [0, 96, 440, 920, 1143, 904, 449, 128, 16],
            [0, 240, 1392, 3880, 6790, 8103, 6730, 3841, 1440, 320, 32],
        ],
    },
    18: {
        "refs": (("R", "A6"),),
        "rows": [
            [0, 1, 1],
            [0, 5, 8, 3],
            [0, 16, 43, 44, 21, 4],
            [0, 44, 170, 291, 286, 169, 56, 8],
            [0, 112, 568, 1368, 2039, 2024, 1345, 576, 144, 16],
            [0, 272, 1712, 5320, 10630, 14823, 14794, 10561, 5280, 1760, 352, 32],
        ],
    },
    19: {
        "refs": (("N", "A7"),),
        "rows": [
            [0, 0, 1],
            [0, 2, 4, 2],
            [0, 12, 27, 20, 5],
            [0, 54, 162, 182, 93, 20, 1],
            [0, 216, 837, 1320, 1086, 496, 124, 16, 1],
            [0, 810, 3888, 8010, 9270, 6632, 3050, 912, 175, 20, 1],
        ],
    },
    20: {
        "refs": (("R", "A7"),),
        "rows": [
            [0, 1, 1],
            [0, 5, 8, 3],
            [0, 21, 51, 42, 13, 1],
            [0, 81, 270, 353, 229, 77, 13, 1],
            [0, 297, 1269, 2292, 2286, 1382, 524, 124, 17, 1],
            [0, 1053, 5508, 12735, 17190, 15062, 8994, 3722, 1055, 195, 21, 1],
        ],
    },
    21: {
        "refs": (("D", "A8"), ("D", "A21"), ("D", "A26"), ("D", "A31")),
        "rows": [
            [0, 1],
            [0, 1, 4, 6, 4, 1],
            [0, 1, 8, 28, 56, 70, 56, 28, 8, 1],
            [0, 1, 12, 66, 220, 495, 792, 924, 792, 495, 220, 66, ...],
            [0, 1, 16, 120, 560, 1820, 4368, 8008, 11440, 12870, 11440, 8008, ...],
            [0, 1, 20, 190, 1140, 4845, 15504, 38760, 77520, 125970, 167960, 184756, ...],
        ],
    },
    22: {
        "refs": (("N", "A8"),),
        "rows": [
            [0, 0, 1],
            [0, 4, 7, 4, 1],
            [0, 8, 29, 56, 70, 56, 28, 8, 1],
            [0, 12, 67, 220, 495, 792, 924, 792, 495, 220, 66, ..., 12, 1],
            [0, 16, 121, 560, 1820, 4368, 8008, 11440, 12870, 11440, 8008, ..., 4368, 1820, 560, 120, 16, 1],
            [0, 20, 191, 1140, 4845, 15504, 38760, 77520, 125970, 167960, 184756, ..., 167960, 125970, 77520, 38760, 15504, 4845, 1140, 190, 20, 1],
        ],
    },
    23: {
        "refs": (("R", "A8"),),
        "rows": [
            [0, 1, 1],
            [0, 5, 11, 10, 5, 1],
            [0, 9, 37, 84, 126, 126, 84, 36, 9, 1],
            [0, 13, 79, 286, 715, 1287, 1716, 1716, 1287, 715, 286, ...],
            [0, 17, 137, 680, 2380, 6188, 12376, 19448, 24310, 24310, 19448, ...],
            [0, 21, 211, 1330, 5985, 20349, 54264, 116280, 203490, 293930, 352716, ...],
        ],
    },
    24: {
        "refs": (("D", "A9"), ("D", "A10"), ("D", "A17")),
        "rows": [
            [0, 1],
            [0, 4, 7, 4, 1],
            [0, 16, 56, 81, 64, 30, 8, 1],
            [0, 64, 336, 780, 1063, 948, 579, 244, 69, 12, 1],
            [0, 256, 1792, 5728, 11120, 14689, 13984, 9884, 5248, 2086, 608, ...],
            [0, 1024, 8960, 36480, 92000, 161300, 208967, 207300, 160805, 98600, 47910, ..., 18344, 5450, 1220, 195, 20, 1],
        ],
    },
    25: {
        "refs": (("N", "A9"),),
        "rows": [
            [0, 0, 1],
            [0, 1, 4, 6, 4, 1],
            [0, 8, 29, 56, 70, 56, 28, 8, 1],
            [0, 48, 220, 511, 804, 927, 792, 495, 220, 66, ...],
            [0, 256, 1504, 4336, 8273, 11744, 13036, 11488, 8014, 4368, ...],
            [0, 1280, 9344, 33120, 76500, 130151, 174020, 189301, 170120, 126630, ...],
        ],
    },
    26: {
        "refs": (("R", "A9"),),
        "rows": [
            [0, 1, 1],
            [0, 5, 11, 10, 5, 1],
            [0, 24, 85, 137, 134, 86, 36, 9, 1],
            [0, 112, 556, 1291, 1867, 1875, 1371, 739, 289, 78, ...],
            [0, 512, 3296, 10064, 19393, 26433, 27020, 21372, 13262, 6454, ...],
            [0, 2304, 18304, 69600, 168500, 291451, 382987, 396601, 330925, 225230, ...],
        ],
    },
    27: {
        "refs": (("N", "A10"),),
        "rows": [
            [0, 0, 1],
            [0, 4, 8, 4],
            [0, 32, 88, 88, 39, 8, 1],
            [0, 192, 736, 1180, 1056, 606, 244, 69, 12, 1],
            [0, 1024, 5120, 11456, 15472, 14416, 9965, 5248, 2086, 608, ...],
            [0, 5120, 31744, 91520, 165440, 213044, 208920, 161048, 98600, 47910, ...],
        ],
    },
    28: {
        "refs": (("R", "A10"),),
        "rows": [
            [0, 1, 1],
            [0, 8, 15, 8, 1],
            [0, 48, 144, 169, 103, 38, 9, 1],
            [0, 256, 1072, 1960, 2119, 1554, 823, 313, 81, 13, ...],
            [0, 1280, 6912, 17184, 26592, 29105, 23949, 15132, 7334, 2694, ...],
            [0, 6144, 40704, 128000, 257440, 374344, 417887, 368348, 259405, 146510, ...],
        ],
    },
    29: {
        "refs": (("D", "A11"), ("D", "A30")),
        "rows": [
            [0, 1],
            [0, 4, 8, 4],
            [0, 16, 64, 96, 64, 16],
            [0, 64, 384, 960, 1280, 960, 384, 64],
            [0, 256, 2048, 7168, 14336, 17920, 14336, 7168, 2048, 256],
            [0, 1024, 10240, 46080, 122880, 215040, 258048, 215040, 122880, 46080, ...],
        ],
    },
    30: {
        "refs": (("N", "A11"),),
        "rows": [
            [0, 0, 1],
            [0, 4, 7, 4, 1],
            [0, 32, 88, 88, 39, 8, 1],
            [0, 192, 784, 1312, 1140, 532, 123, 12, 1],
            [0, 1024, 5632, 13568, 18592, 15680, 8176, 2480, 367, 16, ...],
            [0, 5120, 35584, 112640, 213120, 265344, 225120, 129984, 49260, 11180, ...],
        ],
    },
    31: {
        "refs": (("R", "A11"),),
        "rows": [
            [0, 1, 1],
            [0, 8, 15, 8, 1],
            [0, 48, 152, 184, 103, 24, 1],
            [0, 256, 1168, 2272, 2420, 1492, 507, 76, 1],
            [0, 1280, 7680, 20736, 32928, 33600, 22512, 9648, 2415, 272, ...],
            [0, 6144, 45824, 158720, 336000, 480384, 483168, 345024, 172140, 57260, ...],
        ],
    },
    32: {
        "refs": (("D", "A12"), ("D", "A14")),
        "rows": [
            [0, 1],
            [0, 5, 8, 3],
            [0, 25, 80, 94, 48, 9],
            [0, 125, 600, 1185, 1232, 711, 216, 27],
            [0, 625, 4000, 11100, 17440, 16966, 10464, 3996, 864, 81],
            [0, 3125, 25000, 89375, 188000, 257650, 240368, 154590, 67680, 19305, ...],
        ],
    },
    33: {
        "refs": (("N", "A12"),),
        "rows": [
            [0, 0, 1],
            [0, 2, 6, 6, 2],
            [0, 20, 63, 84, 61, 24, 4],
            [0, 150, 620, 1106, 1125, 720, 295, 72, 8],
            [0, 1000, 5325, 12520, 17150, 15216, 9188, 3840, 1089, 192, ...],
            [0, 6250, 41250, 122750, 217500, 255392, 209430, 123216, 52585, 16200, ...],
        ],
    },
    34: {
        "refs": (("R", "A12"),),
        "rows": [
            [0, 1, 1],
            [0, 7, 14, 9, 2],
            [0, 45, 143, 178, 109, 33, 4],
            [0, 275, 1220, 2291, 2357, 1431, 511, 99, 8],
            [0, 1625, 9325, 23620, 34590, 32182, 19652, 7836, 1953, 273, ...],
            [0, 9375, 66250, 212125, 405500, 513042, 449798, 277806, 120265, 35505, ...],
        ],
    },
    35: {
        "refs": (("D", "A13"), ("D", "A23"), ("D", "A27"), ("D", "A29"), ("D", "A33")),
        "rows": [
            [0, 1],
            [0, 2, 6, 6, 2],
            [0, 4, 24, 60, 80, 60, 24, 4],
            [0, 8, 72, 288, 672, 1008, 1008, 672, 288, 72, 8],
            [0, 16, 192, 1056, 3520, 7920, 12672, 14784, 12672, 7920, 3520, ...],
            [0, 32, 480, 3360, 14560, 43680, 96096, 160160, 205920, 205920, 160160, ...],
        ],
    },
    36: {
        "refs": (("N", "A13"),),
        "rows": [
            [0, 0, 1],
            [0, 5, 8, 3],
            [0, 20, 63, 84, 61, 24, 4],
            [0, 60, 290, 683, 1014, 1009, 672, 288, 72, 8],
            [0, 160, 1048, 3544, 7943, 12680, 14785, 12672, 7920, 3520, 1056, ...],
            [0, 400, 3312, 14600, 43750, 96135, 160170, 205921, 205920, 160160, 96096, ...],
        ],
    },
    37: {
        "refs": (("R", "A13"),),
        "rows": [
            [0, 1, 1],
            [0, 7, 14, 9, 2],
            [0, 24, 87, 144, 141, 84, 28, 4],
            [0, 68, 362, 971, 1686, 2017, 1680, 960, 360, 80, ...],
            [0, 176, 1240, 4600, 11463, 20600, 27457, 27456, 20592, 11440, ...],
            [0, 432, 3792, 17960, 58310, 139815, 256266, 366081, 411840, 366080, ...],
        ],
    },
    38: {
        "refs": (("N", "A14"),),
        "rows": [
            [0, 0, 1],
            [0, 3, 7, 5, 1],
            [0, 30, 84, 88, 43, 10, 1],
            [0, 225, 860, 1332, 1071, 476, 116, 15, 1],
            [0, 1500, 7475, 15940, 18941, 13664, 6101, 1644, 250, 20, 1],
            [0, 9375, 58125, 159875, 256400, 264743, 183090, 85305, 26155, 4965, 517, ...],
        ],
    },
    39: {
        "refs": (("R", "A14"),),
        "rows": [
            [0, 1, 1],
            [0, 8, 15, 8, 1],
            [0, 55, 164, 182, 91, 19, 1],
            [0, 350, 1460, 2517, 2303, 1187, 332, 42, 1],
            [0, 2125, 11475, 27040, 36381, 30630, 16565, 5640, 1114, 101, ...],
            [0, 12500, 83125, 249250, 444400, 522393, 423458, 239895, 93835, 24270, ...],
        ],
    },
    40: {
        "refs": (("D", "A15"), ("D", "A16"), ("D", "A22"), ("D", "A24"), ("D", "A32")),
        "rows": [
            [0, 1],
            [0, 3, 7, 5, 1],
            [0, 9, 42, 79, 76, 39, 10, 1],
            [0, 27, 189, 576, 1000, 1086, 762, 344, 96, 15, ..., 1],
            [0, 81, 756, 3186, 8004, 13327, 15464, 12796, 7592, 3199, ..., 932, 178, 20, 1],
            [0, 243, 2835, 15255, 50175, 112695, 182887, 221275, 202995, 142185, ..., 75945, 30645, 9165, 1965, 285, 25, 1],
        ],
    },
    41: {
        "refs": (("N", "A15"),),
        "rows": [
            [0, 0, 1],
            [0, 5, 8, 3],
            [0, 30, 84, 88, 43, 10, 1],
            [0, 135, 567, 1046, 1122, 770, 344, 96, 15, 1],
            [0, 540, 3051, 8124, 13527, 15560, 12812, 7592, 3199, 932, ...],
            [0, 2025, 14418, 50265, 113535, 183575, 221515, 203027, 142185, 75945, ...],
        ],
    },
    42: {
        "refs": (("R", "A15"),),
        "rows": [
            [0, 1, 1],
            [0, 8, 15, 8, 1],
            [0, 39, 126, 167, 119, 49, 11, 1],
            [0, 162, 756, 1622, 2122, 1856, 1106, 440, 111, 16, ...],
            [0, 621, 3807, 11310, 21531, 28887, 28276, 20388, 10791, 4131, ...],
            [0, 2268, 17253, 65520, 163710, 296270, 404402, 424302, 345180, 218130, ...],
        ],
    },
    43: {
        "refs": (("N", "A16"),),
        "rows": [
            [0, 0, 1],
            [0, 4, 7, 4, 1],
            [0, 24, 73, 88, 53, 16, 2],
            [0, 108, 495, 1000, 1158, 834, 379, 105, 16, 1],
            [0, 432, 2673, 7680, 13462, 15896, 13189, 7796, 3264, 944, ...],
            [0, 1620, 12663, 47340, 111615, 184264, 223885, 205218, 143385, 76380, ...],
        ],
    },
    44: {
        "refs": (("R", "A16"),),
        "rows": [
            [0, 1, 1],
            [0, 7, 14, 9, 2],
            [0, 33, 115, 167, 129, 55, 12, 1],
            [0, 135, 684, 1576, 2158, 1920, 1141, 449, 112, 16, ...],
            [0, 513, 3429, 10866, 21466, 29223, 28653, 20592, 10856, 4143, ...],
            [0, 1863, 15498, 62595, 161790, 296959, 406772, 426493, 346380, 218565, ...],
        ],
    },
    45: {
        "refs": (("N", "A17"),),
        "rows": [
            [0, 0, 1],
            [0, 3, 7, 5, 1],
            [0, 24, 73, 88, 53, 16, 2],
            [0, 144, 604, 1095, 1128, 727, 303, 81, 13, 1],
            [0, 768, 4192, 10352, 15361, 15328, 10892, 5680, 2197, 624, ...],
            [0, 3840, 25984, 81760, 159380, 216263, 217380, 167909, 101780, 48850, ...],
        ],
    },
    46: {
        "refs": (("R", "A17"),),
        "rows": [
            [0, 1, 1],
            [0, 7, 14, 9, 2],
            [0, 40, 129, 169, 117, 46, 10, 1],
            [0, 208, 940, 1875, 2191, 1675, 882, 325, 82, 13, ...],
            [0, 1024, 5984, 16080, 26481, 30017, 24876, 15564, 7445, 2710, ...],
            [0, 4864, 34944, 118240, 251380, 377563, 426347, 375209, 262585, 147450, ...],
        ],
    },
    47: {
        "refs": (("N", "A18"),),
        "oeis": "A300192",
        "rows": [
            [0, 0, 1],
            [0, 1, 2, 1],
            [0, 2, 6, 6, 2],
            [0, 3, 13, 22, 18, 7, 1],
            [0, 4, 23, 56, 75, 60, 29, 8, 1],
            [0, 5, 36, 115, 215, 261, 215, 121, 45, 10, 1],
        ],
    },
    48: {
        "refs": (("R", "A18"),),
        "rows": [
            [0, 1, 1],
            [0, 2, 4, 2],
            [0, 3, 10, 12, 6, 1],
            [0, 4, 19, 37, 38, 22, 7, 1],
            [0, 5, 31, 84, 131, 130, 85, 36, 9, 1],
            [0, 6, 46, 160, 335, 471, 467, 331, 165, 55, 11, 1],
        ],
    },
    49: {
        "refs": (("N", "A19"),),
        "rows": [
            [0, 0, 1],
            [0, 2, 4, 2],
            [0, 4, 15, 22, 16, 6, 1],
            [0, 6, 34, 86, 129, 127, 84, 36, 9, 1],
            [0, 8, 61, 220, 500, 796, 925, 792, 495, 220, 66, 12, 1],
            [0, 10, 96, 450, 1370, 3012, 5010, 6436, 6435, 5005, 3003, 1365, 455, 105, ...],
        ],
    },
    50: {
        "refs": (("R", "A19"),),
        "rows": [
            [0, 1, 1],
            [0, 3, 7, 5, 1],
            [0, 5, 21, 37, 36, 21, 7, 1],
            [0, 7, 43, 122, 213, 253, 210, 120, 45, 10, 1],
            [0, 9, 73, 286, 720, 1291, 1717, 1716, 1287, 715, 286, 78, 13, ...],
            [0, 11, 111, 555, 1825, 4377, 8013, 11441, 12870, 11440, 8008, 4368, 1820, ...],
        ],
    },
    51: {
        "refs": (("N", "A20"),),
        "rows": [
            [0, 0, 1],
            [0, 1, 3, 3, 1],
            [0, 4, 15, 22, 16, 6, 1],
            [0, 12, 62, 133, 153, 102, 40, 9, 1],
            [0, 32, 216, 632, 1047, 1076, 707, 296, 77, 12, 1],
            [0, 80, 672, 2520, 5550, 7941, 7705, 5133, 2325, 695, 131, 15, 1],
        ],
    },
    52: {
        "refs": (("R", "A20"),),
        "rows": [
            [0, 1, 1],
            [0, 3, 7, 5, 1],
            [0, 8, 31, 46, 32, 10, 1],
            [0, 20, 110, 253, 313, 222, 88, 17, 1],
            [0, 48, 344, 1080, 1943, 2196, 1603, 744, 205, 28, 1],
            [0, 112, 992, 3960, 9390, 14661, 15769, 11853, 6165, 2135, 451, 47, 1],
        ],
    },
    53: {
        "refs": (("N", "A21"),),
        "rows": [
            [0, 0, 1],
            [0, 3, 7, 5, 1],
            [0, 6, 28, 58, 71, 56, 28, 8, 1],
            [0, 9, 64, 222, 498, 793, 924, 792, 495, 220, 66, ..., 12, 1],
            [0, 12, 115, 560, 1825, 4372, 8009, 11440, 12870, 11440, 8008, ..., 4368, 1820, 560, 120, 16, 1],
            [0, 15, 181, 1135, 4850, 15513, 38765, 77521, 125970, 167960, 184756, ..., 167960, 125970, 77520, 38760, 15504, 4845, 1140, 190, 20, 1],
        ],
    },
    54: {
        "refs": (("R", "A21"),),
        "rows": [
            [0, 1, 1],
            [0, 4, 11, 11, 5, 1],
            [0, 7, 36, 86, 127, 126, 84, 36, 9, 1],
            [0, 10, 76, 288, 718, 1288, 1716, 1716, 1287, 715, 286, ..., 78, 13, 1],
            [0, 13, 131, 680, 2385, 6192, 12377, 19448, 24310, 24310, 19448, ..., 12376, 6188, 2380, 680, 136, 17, 1],
            [0, 16, 201, 1325, 5990, 20358, 54269, 116281, 203490, 293930, 352716, ..., 352716, 293930, 203490, 116280, 54264, 20349, 5985, 1330, 210, 21, 1],
        ],
    },
    55: {
        "refs": (("N", "A22"),),
        "rows": [
            [0, 0, 1],
            [0, 1, 4, 6, 4, 1],
            [0, 6, 28, 58, 71, 56, 28, 8, 1],
            [0, 27, 171, 487, 834, 969, 811, 498, 220, 66, ..., 12, 1],
            [0, 108, 891, 3360, 7711, 12116, 13918, 12176, 8301, 4432, ..., 1826, 560, 120, 16, 1],
            [0, 405, 4158, 19800, 58155, 118276, 177445, 204471, 186135, 136515, ..., 81581, 39775, 15654, 4855, 1140, 190, 20, 1],
        ],
    },
    56: {
        "refs": (("R", "A22"),),
        "rows": [
            [0, 1, 1],
            [0, 4, 11, 11, 5, 1],
            [0, 15, 70, 137, 147, 95, 38, 9, 1],
            [0, 54, 360, 1063, 1834, 2055, 1573, 842, 316, 81, ..., 13, 1],
            [0, 189, 1647, 6546, 15715, 25443, 29382, 24972, 15893, 7631, ..., 2758, 738, 140, 17, 1],
            [0, 648, 6993, 35055, 108330, 230971, 360332, 425746, 389130, 278700, ..., 157526, 70420, 24819, 6820, 1425, 215, 21, 1],
        ],
    },
    57: {
        "refs": (("N", "A23"),),
        "rows": [
            [0, 0, 1],
            [0, 3, 7, 5, 1],
            [0, 12, 51, 86, 72, 30, 5],
            [0, 36, 230, 645, 1041, 1062, 704, 297, 73, 8],
            [0, 96, 824, 3256, 7847, 12852, 15043, 12840, 7981, 3532, ..., 1057, 192, 16],
            [0, 240, 2592, 13240, 42510, 95973, 161145, 207213, 206805, 160535, ..., 96195, 43695, 14561, 3360, 480, 32],
        ],
    },
    58: {
        "refs": (("R", "A23"),),
        "rows": [
            [0, 1, 1],
            [0, 5, 13, 11, 3],
            [0, 16, 75, 146, 152, 90, 29, 4],
            [0, 44, 302, 933, 1713, 2070, 1712, 969, 361, 80, ..., 8],
            [0, 112, 1016, 4312, 11367, 20772, 27715, 27624, 20653, 11452, ..., 4577, 1248, 208, 16],
            [0, 272, 3072, 16600, 57070, 139653, 257241, 367373, 412725, 366455, ..., 256355, 139791, 58241, 17920, 3840, 512, 32],
        ],
    },
    59: {
        "refs": (("N", "A24"),),
        "rows": [
            [0, 0, 1],
            [0, 2, 6, 6, 2],
            [0, 12, 51, 86, 72, 30, 5],
            [0, 54, 324, 830, 1179, 1007, 522, 156, 23, 1],
            [0, 216, 1701, 5964, 12252, 16324, 14741, 9152, 3879, 1092, 194, ...],
            [0, 810, 7938, 35550, 96300, 176012, 229260, 219120, 155915, 82945, 32853, ...],
        ],
    },
    60: {
        "refs": (("R", "A24"),),
        "rows": [
            [0, 1, 1],
            [0, 5, 13, 11, 3],
            [0, 21, 93, 165, 148, 69, 15, 1],
            [0, 81, 513, 1406, 2179, 2093, 1284, 500, 119, 16, ..., 1],
            [0, 297, 2457, 9150, 20256, 29651, 30205, 21948, 11471, 4291, ..., 1126, 198, 21, 1],
            [0, 1053, 10773, 50805, 146475, 288707, 412147, 440395, 358910, 225130, ..., 108798, 40210, 11162, 2250, 310, 26, 1],
        ],
    },
    61: {
        "refs": (("N", "A25"),),
        "rows": [
            [0, 0, 1],
            [0, 1, 3, 3, 1],
            [0, 2, 10, 20, 20, 10, 2],
            [0, 3, 22, 70, 126, 140, 98, 42, 10, 1],
            [0, 4, 39, 172, 453, 792, 966, 840, 522, 228, 67, 12, 1],
            [0, 5, 61, 345, 1200, 2871, 5005, 6567, 6600, 5115, 3047, 1375, 456, 105, ...],
        ],
    },
    62: {
        "refs": (("R", "A25"),),
        "rows": [
            [0, 1, 1],
            [0, 2, 6, 6, 2],
            [0, 3, 16, 35, 40, 25, 8, 1],
            [0, 4, 31, 106, 210, 266, 224, 126, 46, 10, 1],
            [0, 5, 51, 238, 673, 1287, 1758, 1764, 1314, 723, 287, 78, 13, ...],
            [0, 6, 76, 450, 1655, 4236, 8008, 11572, 13035, 11550, 8052, 4378, 1821, ...],
        ],
    },
    63: {
        "refs": (("N", "A26"),),
        "rows": [
            [0, 0, 1],
            [0, 2, 6, 6, 2],
            [0, 4, 23, 56, 75, 60, 29, 8, 1],
            [0, 6, 52, 206, 495, 806, 938, 798, 496, 220, 66, ..., 12, 1],
            [0, 8, 93, 512, 1778, 4368, 8050, 11488, 12897, 11448, 8009, ..., 4368, 1820, 560, 120, 16, 1],
            [0, 10, 146, 1030, 4680, 15372, 38760, 77652, 126135, 168070, 184800, ..., 167970, 125971, 77520, 38760, 15504, 4845, 1140, 190, 20, 1],
        ],
    },
    64: {
        "refs": (("R", "A26"),),
        "rows": [
            [0, 1, 1],
            [0, 3, 10, 12, 6, 1],
            [0, 5, 31, 84, 131, 130, 85, 36, 9, 1],
            [0, 7, 64, 272, 715, 1301, 1730, 1722, 1288, 715, 286, ..., 78, 13, 1],
            [0, 9, 109, 632, 2338, 6188, 12418, 19496, 24337, 24318, 19449, ..., 12376, 6188, 2380, 680, 136, 17, 1],
            [0, 11, 166, 1220, 5820, 20217, 54264, 116412, 203655, 294040, 352760, ..., 352726, 293931, 203490, 116280, 54264, 20349, 5985, 1330, 210, 21, 1],
        ],
    },
    65: {
        "refs": (("N", "A27"),),
        "rows": [
            [0, 0, 1],
            [0, 1, 4, 6, 4, 1],
            [0, 4, 23, 56, 75, 60, 29, 8, 1],
            [0, 12, 98, 355, 750, 1022, 938, 588, 250, 70, 12, ..., 1],
            [0, 32, 344, 1688, 4999, 9952, 14037, 14400, 10854, 6000, 2402, ..., 680, 131, 16, 1],
            [0, 80, 1072, 6680, 25670, 68011, 131550, 191840, 214720, 185955, 124652, ..., 64240, 25094, 7265, 1510, 216, 20, 1],
        ],
    },
    66: {
        "refs": (("R", "A27"),),
        "rows": [
            [0, 1, 1],
            [0, 3, 10, 12, 6, 1],
            [0, 8, 47, 116, 155, 120, 53, 12, 1],
            [0, 20, 170, 643, 1422, 2030, 1946, 1260, 538, 142, ..., 20, 1],
            [0, 48, 536, 2744, 8519, 17872, 26709, 29184, 23526, 13920, ..., 5922, 1736, 323, 32, 1],
            [0, 112, 1552, 10040, 40230, 111691, 227646, 352000, 420640, 391875, ..., 284812, 160336, 68774, 21825, 4870, 696, 52, 1],
        ],
    },
    67: {
        "refs": (("N", "A28"),),
        "rows": [
            [0, 0, 1],
            [0, 2, 4, 2],
            [0, 8, 24, 24, 8],
            [0, 24, 104, 176, 144, 56, 8],
            [0, 64, 368, 896, 1200, 960, 464, 128, 16],
            [0, 160, 1152, 3680, 6880, 8352, 6880, 3872, 1440, 320, 32],
        ],
    },
    68: {
        "refs": (("R", "A28"),),
        "rows": [
            [0, 1, 1],
            [0, 4, 8, 4],
            [0, 12, 40, 48, 24, 4],
            [0, 32, 152, 296, 304, 176, 56, 8],
            [0, 80, 496, 1344, 2096, 2080, 1360, 576, 144, 16],
            [0, 192, 1472, 5120, 10720, 15072, 14944, 10592, 5280, 1760, 352, 32],
        ],
    },
    69: {
        "refs": (("N", "A29"),),
        "rows": [
            [0, 0, 1],
            [0, 4, 8, 4],
            [0, 16, 60, 88, 64, 24, 4],
            [0, 48, 272, 688, 1032, 1016, 672, 288, 72, 8],
            [0, 128, 976, 3520, 8000, 12736, 14800, 12672, 7920, 3520, ..., 1056, 192, 16],
            [0, 320, 3072, 14400, 43840, 96384, 160320, 205952, 205920, 160160, ..., 96096, 43680, 14560, 3360, 480, 32],
        ],
    },
    70: {
        "refs": (("R", "A29"),),
        "rows": [
            [0, 1, 1],
            [0, 6, 14, 10, 2],
            [0, 20, 84, 148, 144, 84, 28, 4],
            [0, 56, 344, 976, 1704, 2024, 1680, 960, 360, 80, ..., 8],
            [0, 144, 1168, 4576, 11520, 20656, 27472, 27456, 20592, 11440, ..., 4576, 1248, 208, 16],
            [0, 352, 3552, 17760, 58400, 140064, 256416, 366112, 411840, 366080, ..., 256256, 139776, 58240, 17920, 3840, 512, 32],
        ],
    },
    71: {
        "refs": (("N", "A30"),),
        "rows": [
            [0, 0, 1],
            [0, 2, 6, 6, 2],
            [0, 16, 60, 88, 64, 24, 4],
            [0, 96, 496, 1064, 1224, 816, 320, 72, 8],
            [0, 512, 3456, 10112, 16752, 17216, 11312, 4736, 1232, 192, 16],
            [0, 2560, 21504, 80640, 177600, 254112, 246560, 164256, 74400, 22240, 4192, ..., 480, 32],
        ],
    },
    72: {
        "refs": (("R", "A30"),),
        "rows": [
            [0, 1, 1],
            [0, 6, 14, 10, 2],
            [0, 32, 124, 184, 128, 40, 4],
            [0, 160, 880, 2024, 2504, 1776, 704, 136, 8],
            [0, 768, 5504, 17280, 31088, 35136, 25648, 11904, 3280, 448, ..., 16],
            [0, 3584, 31744, 126720, 300480, 469152, 504608, 379296, 197280, 68320, ..., 14432, 1504, 32],
        ],
    },
    73: {
        "refs": (("N", "A31"),),
        "rows": [
            [0, 0, 1],
            [0, 1, 4, 6, 4, 1],
            [0, 2, 14, 42, 70, 70, 42, 14, 2],
            [0, 3, 31, 145, 405, 750, 966, 882, 570, 255, 75, ..., 13, 1],
            [0, 4, 55, 352, 1391, 3796, 7579, 11440, 13299, 12012, 8437, ..., 4576, 1885, 572, 121, 16, 1],
            [0, 5, 86, 700, 3585, 12956, 35120, 74088, 124540, 169390, 188188, ..., 171600, 128518, 78780, 39200, 15608, 4860, 1141, 190, 20, 1],
        ],
    },
    74: {
        "refs": (("R", "A31"),),
        "rows": [
            [0, 1, 1],
            [0, 2, 8, 12, 8, 2],
            [0, 3, 22, 70, 126, 140, 98, 42, 10, 1],
            [0, 4, 43, 211, 625, 1245, 1758, 1806, 1362, 750, 295, ..., 79, 13, 1],
            [0, 5, 71, 472, 1951, 5616, 11947, 19448, 24739, 24882, 19877, ..., 12584, 6253, 2392, 681, 136, 17, 1],
            [0, 6, 106, 890, 4725, 17801, 50624, 112848, 202060, 295360, 356148, ..., 356356, 296478, 204750, 116720, 54368, 20364, 5986, 1330, 210, 21, 1],
        ],
    },
    75: {
        "refs": (("N", "A32"),),
        "rows": [
            [0, 0, 1],
            [0, 3, 7, 5, 1],
            [0, 18, 66, 92, 60, 18, 2],
            [0, 81, 432, 972, 1200, 886, 400, 108, 16, 1],
            [0, 324, 2295, 7236, 13413, 16264, 13574, 7976, 3306, 948, ..., 179, 20, 1],
            [0, 1215, 10773, 43875, 108990, 184863, 226895, 208059, 144820, 76805, ..., 30819, 9185, 1966, 285, 25, 1],
        ],
    },
    76: {
        "refs": (("R", "A32"),),
        "rows": [
            [0, 1, 1],
            [0, 6, 14, 10, 2],
            [0, 27, 108, 171, 136, 57, 12, 1],
            [0, 108, 621, 1548, 2200, 1972, 1162, 452, 112, 16, ..., 1],
            [0, 405, 3051, 10422, 21417, 29591, 29038, 20772, 10898, 4147, ..., 1111, 198, 21, 1],
            [0, 1458, 13608, 59130, 159165, 297558, 409782, 429334, 347815, 218990, ..., 106764, 39830, 11131, 2250, 310, 26, 1],
        ],
    },
    77: {
        "refs": (("N", "A33"),),
        "rows": [
            [0, 0, 1],
            [0, 2, 6, 6, 2],
            [0, 8, 40, 80, 80, 40, 8],
            [0, 24, 176, 560, 1008, 1120, 784, 336, 80, 8],
            [0, 64, 624, 2752, 7248, 12672, 15456, 13440, 8352, 3648, ..., 1072, 192, 16],
            [0, 160, 1952, 11040, 38400, 91872, 160160, 210144, 211200, 163680, ..., 97504, 44000, 14592, 3360, 480, 32],
        ],
    },
    78: {
        "refs": (("R", "A33"),),
        "rows": [
            [0, 1, 1],
            [0, 4, 12, 12, 4],
            [0, 12, 64, 140, 160, 100, 32, 4],
            [0, 32, 248, 848, 1680, 2128, 1792, 1008, 368, 80, ..., 8],
            [0, 80, 816, 3808, 10768, 20592, 28128, 28224, 21024, 11568, ..., 4592, 1248, 208, 16],
            [0, 192, 2432, 14400, 52960, 135552, 256256, 370304, 417120, 369600, ..., 257664, 140096, 58272, 17920, 3840, 512, 32],
        ],
    },
    79: {
        "refs": (("D", "A35"),),
        "oeis": "A129185",
        "rows": [
            [0, 1],
            [0, 0, 1],
            [0, 0, 0, 1],
            [0, 0, 0, 0, 1],
            [0, 0, 0, 0, 0, 1],
            [0, 0, 0, 0, 0, 0, 1],
        ],
    },
    80: {
        "refs": (("N", "A35"),),
        "rows": [
            [0, 0, 1],
            [0, 1],
            [0, 0, 1],
            [0, 0, 0, 1],
            [0, 0, 0, 0, 1],
            [0, 0, 0, 0, 0, 1],
        ],
    },
    81: {
        "refs": (("R", "A35"),),
        "rows": [
            [0, 1, 1],
            [0, 1, 1],
            [0, 0, 1, 1],
            [0, 0, 0, 1, 1],
            [0, 0, 0, 0, 1, 1],
            [0, 0, 0, 0, 0, 1, 1],
        ],
    },
}

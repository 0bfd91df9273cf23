"""Reference values for 1 <= n <= 25 (full package) and 1 <= n <= 60 (low dimensions).

Rows are keyed by n.  Transcribed once; :data:`EMBEDDED_CHECKSUM` pins them.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from pathlib import Path
from types import MappingProxyType
from typing import Mapping

# n -> (chi, b)
TABLE1 = {
    1: (1, 0),
    2: (1, 0),
    3: (1, 0),
    4: (1, 0),
    5: (1, 0),
    6: (1, 0),
    7: (1, 0),
    8: (2, 1),
    9: (3, 2),
    10: (6, 5),
    11: (11, 10),
    12: (20, 19),
    13: (33, 32),
    14: (56, 55),
    15: (88, 87),
    16: (138, 137),
    17: (208, 207),
    18: (311, 310),
    19: (452, 451),
    20: (653, 652),
    21: (922, 921),
    22: (1294, 1293),
    23: (1788, 1787),
    24: (2454, 2453),
    25: (3325, 3324),
}
# n -> (c_1..c_omega, omega, chi)
TABLE2 = {
    1: ((1,), 1, 1),
    2: ((2, 1,), 2, 1),
    3: ((3, 2,), 2, 1),
    4: ((5, 5, 1,), 3, 1),
    5: ((7, 9, 3,), 3, 1),
    6: ((11, 17, 7,), 3, 1),
    7: ((15, 28, 15, 1,), 4, 1),
    8: ((22, 47, 29, 2,), 4, 2),
    9: ((30, 73, 52, 6,), 4, 3),
    10: ((42, 114, 90, 12,), 4, 6),
    11: ((56, 170, 149, 25, 1,), 5, 11),
    12: ((77, 253, 239, 45, 2,), 5, 20),
    13: ((101, 365, 374, 82, 5,), 5, 33),
    14: ((135, 525, 572, 137, 11,), 5, 56),
    15: ((176, 738, 857, 229, 22,), 5, 88),
    16: ((231, 1033, 1264, 364, 41, 1,), 6, 138),
    17: ((297, 1422, 1835, 574, 74, 2,), 6, 208),
    18: ((385, 1948, 2628, 876, 127, 5,), 6, 311),
    19: ((490, 2634, 3719, 1326, 213, 10,), 6, 452),
    20: ((627, 3545, 5205, 1959, 346, 21,), 6, 653),
    21: ((792, 4721, 7210, 2871, 550, 38,), 6, 922),
    22: ((1002, 6259, 9898, 4133, 855, 70, 1,), 7, 1294),
    23: ((1255, 8227, 13471, 5902, 1308, 119, 2,), 7, 1788),
    24: ((1575, 10767, 18190, 8312, 1965, 202, 5,), 7, 2454),
    25: ((1958, 13990, 24384, 11621, 2912, 328, 10,), 7, 3325),
}
# n -> ((c_1..c_5), omega, leaders among sizes 1..5)
TABLE3 = {
    1: ((1, 0, 0, 0, 0), 1, frozenset({1})),
    2: ((2, 1, 0, 0, 0), 2, frozenset({1})),
    3: ((3, 2, 0, 0, 0), 2, frozenset({1})),
    4: ((5, 5, 1, 0, 0), 3, frozenset({1,2})),
    5: ((7, 9, 3, 0, 0), 3, frozenset({2})),
    6: ((11, 17, 7, 0, 0), 3, frozenset({2})),
    7: ((15, 28, 15, 1, 0), 4, frozenset({2})),
    8: ((22, 47, 29, 2, 0), 4, frozenset({2})),
    9: ((30, 73, 52, 6, 0), 4, frozenset({2})),
    10: ((42, 114, 90, 12, 0), 4, frozenset({2})),
    11: ((56, 170, 149, 25, 1), 5, frozenset({2})),
    12: ((77, 253, 239, 45, 2), 5, frozenset({2})),
    13: ((101, 365, 374, 82, 5), 5, frozenset({3})),
    14: ((135, 525, 572, 137, 11), 5, frozenset({3})),
    15: ((176, 738, 857, 229, 22), 5, frozenset({3})),
    16: ((231, 1033, 1264, 364, 41), 6, frozenset({3})),
    17: ((297, 1422, 1835, 574, 74), 6, frozenset({3})),
    18: ((385, 1948, 2628, 876, 127), 6, frozenset({3})),
    19: ((490, 2634, 3719, 1326, 213), 6, frozenset({3})),
    20: ((627, 3545, 5205, 1959, 346), 6, frozenset({3})),
    21: ((792, 4721, 7210, 2871, 550), 6, frozenset({3})),
    22: ((1002, 6259, 9898, 4133, 855), 7, frozenset({3})),
    23: ((1255, 8227, 13471, 5902, 1308), 7, frozenset({3})),
    24: ((1575, 10767, 18190, 8312, 1965), 7, frozenset({3})),
    25: ((1958, 13990, 24384, 11621, 2912), 7, frozenset({3})),
    26: ((2436, 18105, 32465, 16064, 4257), 7, frozenset({3})),
    27: ((3010, 23286, 42947, 22059, 6150), 7, frozenset({3})),
    28: ((3718, 29837, 56479, 30010, 8784), 7, frozenset({3})),
    29: ((4565, 38028, 73856, 40578, 12424), 8, frozenset({3})),
    30: ((5604, 48297, 96070, 54438, 17402), 8, frozenset({3})),
    31: ((6842, 61053, 124344, 72629, 24169), 8, frozenset({3})),
    32: ((8349, 76926, 160181, 96243, 33291), 8, frozenset({3})),
    33: ((10143, 96524, 205420, 126894, 45514), 8, frozenset({3})),
    34: ((12310, 120746, 262323, 166322, 61780), 8, frozenset({3})),
    35: ((14883, 150487, 333631, 216996, 83311), 8, frozenset({3})),
    36: ((17977, 187019, 422690, 281640, 111634), 8, frozenset({3})),
    37: ((21637, 231643, 533556, 364001, 148714), 9, frozenset({3})),
    38: ((26015, 286152, 671137, 468266, 197000), 9, frozenset({3})),
    39: ((31185, 352413, 841352, 600065, 259596), 9, frozenset({3})),
    40: ((37338, 432937, 1051351, 765758, 340359), 9, frozenset({3})),
    41: ((44583, 530383, 1309702, 973710, 444141), 9, frozenset({3})),
    42: ((53174, 648245, 1626702, 1233465, 576928), 9, frozenset({3})),
    43: ((63261, 790274, 2014671, 1557354, 746198), 9, frozenset({3})),
    44: ((75175, 961310, 2488330, 1959523, 961141), 9, frozenset({3})),
    45: ((89134, 1166600, 3065221, 2457998, 1233137), 9, frozenset({3})),
    46: ((105558, 1412811, 3766255, 3073550, 1576126), 10, frozenset({3})),
    47: ((124754, 1707235, 4616240, 3832301, 2007262), 10, frozenset({3})),
    48: ((147273, 2059004, 5644632, 4764468, 2547446), 10, frozenset({3})),
    49: ((173525, 2478182, 6886301, 5907638, 3222270), 10, frozenset({3})),
    50: ((204226, 2977224, 8382479, 7305371, 4062793), 10, frozenset({3})),
    51: ((239943, 3569927, 10181818, 9011367, 5106821), 10, frozenset({3})),
    52: ((281589, 4273195, 12341707, 11087943, 6400072), 10, frozenset({3})),
    53: ((329931, 5105841, 14929630, 13611274, 7997939), 10, frozenset({3})),
    54: ((386155, 6090698, 18024940, 16669854, 9967132), 10, frozenset({3})),
    55: ((451276, 7253275, 21720743, 20371070, 12388135), 10, frozenset({3})),
    56: ((526823, 8624287, 26126169, 24839688, 15357540), 11, frozenset({3})),
    57: ((614154, 10238140, 31368913, 30226176, 18991375), 11, frozenset({3})),
    58: ((715220, 12135975, 37598305, 36705325, 23428441), 11, frozenset({3})),
    59: ((831820, 14363982, 44988596, 44486708, 28834842), 11, frozenset({3})),
    60: ((966467, 16977037, 53743028, 53813706, 35408595), 11, frozenset({4})),
}
# n -> (nu_star, nu_top, nu_c, m_star, m_top, m_e, m_max)
TABLE4 = {
    1: (1, 1, 1, 0, 0, 0, 1),
    2: (1, 3, 3, 0, 0, 1, 1),
    3: (2, 5, 5, 0, 0, 2, 2),
    4: (3, 7, 8, 1, 0, 2, 3),
    5: (5, 11, 14, 2, 1, 2, 5),
    6: (7, 15, 20, 5, 2, 2, 9),
    7: (11, 22, 31, 7, 5, 2, 14),
    8: (15, 30, 43, 13, 10, 2, 25),
    9: (22, 42, 62, 18, 16, 2, 36),
    10: (30, 56, 84, 27, 27, 2, 56),
    11: (42, 77, 117, 38, 42, 2, 82),
    12: (56, 101, 155, 54, 62, 2, 118),
    13: (77, 135, 210, 71, 87, 2, 160),
    14: (101, 176, 275, 99, 128, 2, 229),
    15: (135, 231, 364, 131, 171, 2, 304),
    16: (176, 297, 471, 172, 236, 2, 410),
    17: (231, 385, 614, 226, 311, 2, 539),
    18: (297, 490, 785, 295, 417, 2, 714),
    19: (385, 627, 1010, 379, 540, 2, 921),
    20: (490, 792, 1280, 488, 706, 2, 1196),
    21: (627, 1002, 1627, 621, 896, 2, 1519),
    22: (792, 1255, 2045, 788, 1156, 2, 1946),
    23: (1002, 1575, 2575, 998, 1455, 2, 2455),
    24: (1255, 1958, 3211, 1253, 1846, 2, 3101),
    25: (1575, 2436, 4009, 1567, 2296, 2, 3865),
}
# n -> (mb_star, mb_top, mb_e)
TABLE5 = {
    1: (0, 0, 0),
    2: (0, 0, 2),
    3: (0, 0, 4),
    4: (3, 0, 4),
    5: (6, 3, 4),
    6: (15, 6, 4),
    7: (22, 15, 4),
    8: (41, 30, 4),
    9: (59, 49, 4),
    10: (91, 83, 4),
    11: (131, 131, 4),
    12: (191, 196, 4),
    13: (260, 281, 4),
    14: (369, 416, 4),
    15: (500, 569, 4),
    16: (676, 795, 4),
    17: (905, 1070, 4),
    18: (1208, 1453, 4),
    19: (1585, 1919, 4),
    20: (2083, 2546, 4),
    21: (2702, 3298, 4),
    22: (3498, 4312, 4),
    23: (4500, 5531, 4),
    24: (5759, 7117, 4),
    25: (7322, 9020, 4),
}

# c_6..c_11 at n = 60
N60_HIGH = (15387845, 4318590, 739742, 68940, 2712, 20)

EMBEDDED_CHECKSUM = "8c27c5b8cd0b27718811ecacce1159b29afbeac94e840ffa710962dcd2b8fcb5"


def _freeze(d: Mapping) -> Mapping:
    return MappingProxyType(dict(d))


@dataclass(frozen=True)
class ReferenceTables:
    table1: Mapping[int, tuple[int, int]]
    table2: Mapping[int, tuple[tuple[int, ...], int, int]]
    table3: Mapping[int, tuple[tuple[int, ...], int, frozenset[int]]]
    table4: Mapping[int, tuple[int, ...]]
    table5: Mapping[int, tuple[int, int, int]]
    n60_high: tuple[int, ...]

    def n60_full_profile(self) -> tuple[int, ...]:
        return tuple(self.table3[60][0]) + tuple(self.n60_high)

    def to_jsonable(self) -> dict:
        return {
            "table1": {str(n): list(v) for n, v in sorted(self.table1.items())},
            "table2": {str(n): [list(c), w, x] for n, (c, w, x) in sorted(self.table2.items())},
            "table3": {
                str(n): [list(c), w, sorted(lead)] for n, (c, w, lead) in sorted(self.table3.items())
            },
            "table4": {str(n): list(v) for n, v in sorted(self.table4.items())},
            "table5": {str(n): list(v) for n, v in sorted(self.table5.items())},
            "n60_high": list(self.n60_high),
        }

    @classmethod
    def from_jsonable(cls, data: dict) -> "ReferenceTables":
        def rows(key, conv):
            return _freeze({int(n): conv(v) for n, v in data[key].items()})

        return cls(
            rows("table1", tuple),
            rows("table2", lambda v: (tuple(v[0]), v[1], v[2])),
            rows("table3", lambda v: (tuple(v[0]), v[1], frozenset(v[2]))),
            rows("table4", tuple),
            rows("table5", tuple),
            tuple(data["n60_high"]),
        )

    def checksum(self) -> str:
        blob = json.dumps(self.to_jsonable(), sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(blob.encode()).hexdigest()

    def dump(self, path: str | Path) -> None:
        Path(path).write_text(json.dumps(self.to_jsonable(), indent=1) + "\n", encoding="utf-8")

    @classmethod
    def load(cls, path: str | Path) -> "ReferenceTables":
        return cls.from_jsonable(json.loads(Path(path).read_text(encoding="utf-8")))


REFERENCE = ReferenceTables(
    _freeze(TABLE1), _freeze(TABLE2), _freeze(TABLE3), _freeze(TABLE4), _freeze(TABLE5), N60_HIGH
)

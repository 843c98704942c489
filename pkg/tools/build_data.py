"""Regenerate the JSON data shipped in src/orbifolder/data.

Glue codes follow the usual component/glue description of the Niemeier
lattices (Conway and Sloane, SPLAG ch. 16, Table 16.1). Cyclic and
permutation shorthands are expanded here so the JSON holds explicit words.
"""

import itertools
import json
from pathlib import Path

DATA = Path(__file__).resolve().parents[1] / "src" / "orbifolder" / "data"


def cyc(head, tail):
    """head followed by every cyclic shift of tail."""
    out = []
    for k in range(len(tail)):
        out.append(list(head) + list(tail[k:] + tail[:k]))
    return out


def even_perms(vals):
    out = []
    for p in itertools.permutations(range(len(vals))):
        inv = sum(1 for i in range(len(p)) for j in range(i) if p[j] > p[i])
        if inv % 2 == 0:
            out.append([vals[i] for i in p])
    return out


NIEMEIER = [
    ("A1", "D24", [("D", 24)], [[1]]),
    ("A2", "D16E8", [("D", 16), ("E", 8)], [[1, 0]]),
    ("A3", "E8^3", [("E", 8)] * 3, []),
    ("A4", "A24", [("A", 24)], [[5]]),
    ("A5", "D12^2", [("D", 12)] * 2, [[1, 2], [2, 1]]),
    ("A6", "A17E7", [("A", 17), ("E", 7)], [[3, 1]]),
    ("A7", "D10E7^2", [("D", 10), ("E", 7), ("E", 7)], [[1, 1, 0], [3, 0, 1]]),
    ("A8", "A15D9", [("A", 15), ("D", 9)], [[2, 1]]),
    ("A9", "D8^3", [("D", 8)] * 3, cyc([], [1, 2, 2])),
    ("A10", "A12^2", [("A", 12)] * 2, [[1, 5]]),
    ("A11", "A11D7E6", [("A", 11), ("D", 7), ("E", 6)], [[1, 1, 1]]),
    ("A12", "E6^4", [("E", 6)] * 4, cyc([1], [0, 1, 2])),
    ("A13", "A9^2D6", [("A", 9), ("A", 9), ("D", 6)], [[2, 4, 0], [5, 0, 1], [0, 5, 3]]),
    ("A14", "D6^4", [("D", 6)] * 4, even_perms([0, 1, 2, 3])),
    ("A15", "A8^3", [("A", 8)] * 3, cyc([], [1, 1, 4])),
    ("A16", "A7^2D5^2", [("A", 7), ("A", 7), ("D", 5), ("D", 5)], [[1, 1, 1, 2], [1, 7, 2, 1]]),
    ("A17", "A6^4", [("A", 6)] * 4, cyc([1], [2, 1, 6])),
    ("A18", "A5^4D4", [("A", 5)] * 4 + [("D", 4)],
     [[2] + w + [0] for w in cyc([], [0, 2, 4])] + [[3, 3, 0, 0, 1], [3, 0, 3, 0, 2], [3, 0, 0, 3, 3]]),
    ("A19", "D4^6", [("D", 4)] * 6, [[1] * 6, [2] * 6] + cyc([0], [0, 2, 3, 3, 2])),
    ("A20", "A4^6", [("A", 4)] * 6, cyc([1], [0, 1, 4, 4, 1])),
    ("A21", "A3^8", [("A", 3)] * 8, cyc([3], [2, 0, 0, 1, 0, 1, 1])),
    ("A22", "A2^12", [("A", 2)] * 12, cyc([2], [1, 1, 2, 1, 1, 1, 2, 2, 2, 1, 2])),
    ("A23", "A1^24", [("A", 1)] * 24,
     cyc([1], [0, 0, 0, 0, 0, 1, 0, 1, 0, 0, 1, 1, 0, 0, 1, 1, 0, 1, 0, 1, 1, 1, 1])),
    ("A24", "Leech", [], []),
]

SCHELLEKENS = {
    0: "", 1: "U24", 2: "A1,4^12", 3: "A2,6 D4,12", 4: "C4,10", 5: "A1,2^16", 6: "A2,3^6",
    7: "A1,2 A3,4^3", 8: "A1,2 A5,6 B2,3", 9: "A4,5^2", 10: "A1,2 D5,8", 11: "A6,7",
    12: "B2,2^6", 13: "A2,2^4 D4,4", 14: "A2,2 F4,6", 15: "A1,1^24", 16: "A1,1^4 A3,2^4",
    17: "A1,1^3 A5,3 D4,3", 18: "A1,1^3 A7,4", 19: "A1,1^2 C3,2 D5,4", 20: "A1,1^2 D6,5",
    21: "A1,1 C5,3 G2,2", 22: "A4,2^2 C4,2", 23: "B3,2^4", 24: "A2,1^12",
    25: "B2,1^4 D4,2^2", 26: "A2,1^2 A5,2^2 B2,1", 27: "A2,1^2 A8,3", 28: "A2,1 B2,1 E6,4",
    29: "B4,2^3", 30: "A3,1^8", 31: "A3,1^2 D5,2^2", 32: "E6,3 G2,1^3",
    33: "A3,1 A7,2 C3,1^2", 34: "A3,1 D7,3 G2,1", 35: "A3,1 C7,2", 36: "A8,2 F4,2",
    37: "A4,1^6", 38: "C4,1^4", 39: "B3,1^2 C4,1 D6,2", 40: "A4,1 A9,2 B3,1",
    41: "B6,2^2", 42: "D4,1^6", 43: "A5,1^4 D4,1", 44: "A5,1 C5,1 E6,2", 45: "A5,1 E7,3",
    46: "A6,1^4", 47: "B4,1^2 D8,2", 48: "B4,1 C6,1^2", 49: "A7,1^2 D5,1^2",
    50: "A7,1 D9,2", 51: "A8,1^3", 52: "C8,1 F4,1^2", 53: "B5,1 E7,2 F4,1", 54: "D6,1^4",
    55: "A9,1^2 D6,1", 56: "B6,1 C10,1", 57: "B12,2", 58: "E6,1^4", 59: "A11,1 D7,1 E6,1",
    60: "A12,1^2", 61: "D8,1^3", 62: "B8,1 E8,2", 63: "A15,1 D9,1", 64: "D10,1 E7,1^2",
    65: "A17,1 E7,1", 66: "D12,1^2", 67: "A24,1", 68: "E8,1^3", 69: "D16,1 E8,1", 70: "D24,1",
}

FRAME_CLASSES = [
    ("A", {1: 24}, False, "II_{24,0}", 24, 24),
    ("B", {1: 8, 2: 8}, False, "II_{16,0}(2_II^{+10})", 17, 17),
    ("C", {1: 6, 3: 6}, False, "II_{12,0}(3^{-8})", 6, 6),
    ("D", {2: 12}, True, "II_{12,0}(2_II^{-10}4_II^{-2})", 2, 9),
    ("E", {1: 4, 2: 2, 4: 4}, False, "II_{10,0}(2_2^{+2}4_II^{+6})", 5, 5),
    ("F", {1: 4, 5: 4}, False, "II_{8,0}(5^{+6})", 2, 2),
    ("G", {1: 2, 2: 2, 3: 2, 6: 2}, False, "II_{8,0}(2_II^{+6}3^{-6})", 2, 2),
    ("H", {1: 3, 7: 3}, False, "II_{6,0}(7^{-5})", 1, 1),
    ("I", {1: 2, 2: 1, 4: 1, 8: 2}, False, "II_{6,0}(2_5^{+1}4_1^{+1}8_II^{+4})", 1, 1),
    ("J", {2: 3, 6: 3}, True, "II_{6,0}(2_II^{+4}4_II^{-2}3^{+5})", 1, 2),
    ("K", {2: 2, 10: 2}, True, "II_{4,0}(2_II^{-2}4_II^{-2}5^{+4})", 1, 1),
]

# counts per H-class, families A..K
TABLE2 = {
    "A1": "1 . . . . . . . . . .", "A2": "1 . . . . . . . . . .",
    "A3": "1 1 . . . . . . . . .", "A4": "1 . . 1 . . . . . . .",
    "A5": "1 . . 1 . . . . . . .", "A6": "1 2 . . . . . . . . .",
    "A7": "1 2 . . . . . . . . .", "A8": "1 4 . . . . . . . . .",
    "A9": "1 3 . . . . . . . . .", "A10": "1 . . 1 . . . . . . .",
    "A11": "1 5 . . . . . . . . .", "A12": "1 2,2 2 . . . 1 . . . .",
    "A13": "1 4 . . 2 . . . . . .", "A14": "1 3 2 1 . . . . . . .",
    "A15": "1 2 . 1,1 . . . . . . .", "A16": "1 6,4,4 . . . . . . . . .",
    "A17": "1 . 3 1 . . . . . 1 .", "A18": "1 4,5 5 . 4 . 4 . 1 . .",
    "A19": "1 2,3 2,3 1 2 1 2,3 . . . .", "A20": "1 3 . 1,1 5 2 . . . . 1",
    "A21": "1 3,6 3 1 7 . 4 1 . 1 .", "A22": "1 2 4 1,1 5 2 4 . 2 1,2 1",
    "A23": "1 3 2 1 5 2 7 1 2 . 1", "A24": "1 1 1 1 1 1 1 1 1 1 1",
}
TABLE2_TOTALS = {"H": [24, 24, 10, 15, 8, 5, 8, 3, 4, 5, 4], "Aut": [24, 76, 27, 15, 31, 8, 26, 3, 6, 6, 4],
                 "H_total": 110, "Aut_total": 226}
TABLE2_ROW_TOTALS = {
    "A1": (1, 1), "A2": (1, 1), "A3": (2, 2), "A4": (2, 2), "A5": (2, 2), "A6": (2, 3), "A7": (2, 3),
    "A8": (2, 5), "A9": (2, 4), "A10": (2, 2), "A11": (2, 6), "A12": (5, 8), "A13": (3, 7),
    "A14": (4, 7), "A15": (4, 5), "A16": (4, 15), "A17": (4, 6), "A18": (7, 24), "A19": (10, 20),
    "A20": (7, 14), "A21": (9, 27), "A22": (12, 26), "A23": (10, 25), "A24": (11, 11),
}


def golden(columns, rows):
    """columns: labels in table order; repeated labels get tags 1, 2, …"""
    seen = {}
    cols = []
    for c in columns:
        seen[c] = seen.get(c, 0) + 1
        cols.append([c, seen[c]])
    out_rows = []
    for rid, number, text in rows:
        counts = [0 if x == "." else int(x) for x in text.split()]
        assert len(counts) == len(cols), rid
        out_rows.append({"id": rid, "number": number, "counts": counts})
    return {"columns": cols, "rows": out_rows}


B_COLS = "A3 A6 A7 A8 A9 A11 A12 A12 A13 A14 A15 A16 A16 A16 A18 A18 A19 A19 A20 A21 A21 A22 A23 A24".split()
GOLDEN = {
    "A": golden([f"A{i}" for i in range(1, 25)], [
        (f"A{i}", n, " ".join("1" if j == i else "." for j in range(1, 25)))
        for i, n in zip(range(1, 25), [70, 69, 68, 67, 66, 65, 64, 63, 61, 60, 59, 58, 55, 54, 51, 49,
                                       46, 43, 42, 37, 30, 24, 15, 1])]),
    "B": golden(B_COLS, [
        ("B1", 62, "1 . 1 1 1 . . . . . . .  . . . . . . . . . . . ."),
        ("B2", 56, ". 1 . 1 . 1 . . 1 . . .  . . . . . . . . . . . ."),
        ("B3", 52, ". . . 1 . 1 1 . . . . 1  . . . . . . . . . . . ."),
        ("B4", 53, ". . 1 . . 1 . 1 . 1 . .  . 1 . . . . . . . . . ."),
        ("B5", 50, ". 1 . . 1 . . . . . 1 .  1 . . . . . . . . . . ."),
        ("B6", 47, ". . . 1 1 . . . . 1 . 1  . 1 . . . 1 . . . . . ."),
        ("B7", 48, ". . . . . 1 . . 1 . . 1  . . 1 . . . . . . . . ."),
        ("B8", 44, ". . . . . . . 1 1 . . .  1 . . 1 . . . . . . . ."),
        ("B9", 40, ". . . . . . . . . . 1 .  . 1 . 1 . . 1 . . . . ."),
        ("B10", 39, ". . . . . 1 . . . 1 . 1  1 . . 1 1 . . . 1 . . ."),
        ("B11", 38, ". . . . . . 1 . . . . 1  . . 1 . . . . 1 . . . ."),
        ("B12", 33, ". . . . . . . . . . . .  . 1 1 1 . . . . 1 . . ."),
        ("B13", 31, ". . . . . . . . 1 . . .  1 . . . . 1 1 . 1 . . ."),
        ("B14", 26, ". . . . . . . . . . . .  . . . 1 . . 1 . 1 1 . ."),
        ("B15", 25, ". . . . . . . . . . . 1  . . . . 1 1 . 1 1 . 1 ."),
        ("B16", 16, ". . . . . . . . . . . .  . . 1 . . . . . 1 1 1 ."),
        ("B17", 5, ". . . . . . . . . . . .  . . . . . . . 1 . . 1 1"),
    ]),
    "C": golden("A12 A14 A17 A18 A19 A19 A21 A22 A23 A24".split(), [
        ("C1", 45, "1 1 1 1 . . . . . ."),
        ("C2", 34, ". 1 1 1 . 1 1 . . ."),
        ("C3", 32, "1 . . 1 1 1 . 1 . ."),
        ("C4", 27, ". . 1 1 . . 1 1 . ."),
        ("C5", 17, ". . . 1 . 1 1 1 1 ."),
        ("C6", 6, ". . . . 1 . . 1 1 1"),
    ]),
    "D": golden("A4 A10 A15 A17 A20 A22 A5 A14 A19 A21 A23 A24 A15 A20 A22".split(), [
        ("D1a", 57, "1 . . . . . 1 . . . . . . . ."),
        ("D1b", 41, ". 1 . . . . . 1 . . . . . . ."),
        ("D1c", 29, ". . 1 . . . . . 1 . . . . . ."),
        ("D1d", 23, ". . . 1 . . . . . 1 . . . . ."),
        ("D1e", 12, ". . . . 1 . . . . . 1 . . . ."),
        ("D1f", 2, ". . . . . 1 . . . . . 1 . . ."),
        ("D2a", 36, ". . . . . . . . . . . . 1 . ."),
        ("D2b", 22, ". . . . . . . . . . . . . 1 ."),
        ("D2c", 13, ". . . . . . . . . . . . . . 1"),
    ]),
    "E": golden("A13 A18 A19 A20 A21 A22 A23 A24".split(), [
        ("E1", 35, "1 2 . 1 1 . . ."),
        ("E2", 28, "1 . 1 2 1 1 . ."),
        ("E3", 18, ". 1 . 1 1 2 1 ."),
        ("E4", 19, ". 1 1 1 3 1 2 ."),
        ("E5", 7, ". . . . 1 1 2 1"),
    ]),
    "F": golden("A19 A20 A22 A23 A24".split(), [
        ("F1", 20, "1 1 1 1 ."),
        ("F2", 9, ". 1 1 1 1"),
    ]),
    "G": golden("A12 A18 A19 A19 A21 A22 A23 A24".split(), [
        ("G1", 21, "1 3 2 1 2 2 2 ."),
        ("G2", 8, ". 1 1 1 2 2 5 1"),
    ]),
    "H": golden("A21 A23 A24".split(), [("H1", 11, "1 1 1")]),
    "I": golden("A18 A22 A23 A24".split(), [("I1", 10, "1 2 2 1")]),
    "J": golden("A17 A22 A21 A24 A22".split(), [
        ("J1a", 14, "1 . 1 . 1"),
        ("J1b", 3, ". 1 . 1 1"),
    ]),
    "K": golden("A20 A22 A23 A24".split(), [("K1", 4, "1 1 1 1")]),
}

# power tables: family -> prime p -> {column index: {row id: [row ids of g^p]}}
# entries are written as in the printed tables; "E3_2" style indices are dropped
POWERS = {
    "E": {"2": {
        "A13": {"E1": ["B7"], "E2": ["B13"]},
        "A18": {"E1": ["B7", "B12"], "E3": ["B16"], "E4": ["B12"]},
        "A19": {"E2": ["B13"], "E4": ["B15"]},
        "A20": {"E1": ["B9"], "E2": ["B13", "B14"], "E3": ["B14"], "E4": ["B9"]},
        "A21": {"E1": ["B12"], "E2": ["B13"], "E3": ["B16"], "E4": ["B12", "B15", "B16"], "E5": ["B16"]},
        "A22": {"E2": ["B14"], "E3": ["B14", "B16"], "E4": ["B14"], "E5": ["B14"]},
        "A23": {"E3": ["B16"], "E4": ["B15", "B16"], "E5": ["B16", "B17"]},
        "A24": {"E5": ["B17"]},
    }},
    "G": {
        "2": {
            "A12": {"G1": ["C3"]},
            "A18": {"G1": ["C3", "C3", "C5"], "G2": ["C5"]},
            "A19#1": {"G1": ["C3", "C5"], "G2": ["C5"]},
            "A19#2": {"G1": ["C3"], "G2": ["C6"]},
            "A21": {"G1": ["C5", "C5"], "G2": ["C5", "C5"]},
            "A22": {"G1": ["C3", "C5"], "G2": ["C5", "C6"]},
            "A23": {"G1": ["C5", "C5"], "G2": ["C5", "C5", "C6", "C6", "C6"]},
            "A24": {"G2": ["C6"]},
        },
        "3": {
            "A12": {"G1": ["B11"]},
            "A18": {"G1": ["B11", "B16", "B11"], "G2": ["B16"]},
            "A19#1": {"G1": ["B15", "B15"], "G2": ["B15"]},
            "A19#2": {"G1": ["B15"], "G2": ["B15"]},
            "A21": {"G1": ["B11", "B15"], "G2": ["B15", "B17"]},
            "A22": {"G1": ["B16", "B16"], "G2": ["B16", "B16"]},
            "A23": {"G1": ["B15", "B16"], "G2": ["B16", "B17", "B15", "B16", "B17"]},
            "A24": {"G2": ["B17"]},
        },
    },
    "I": {"2": {
        "A18": {"I1": ["E3"]},
        "A22": {"I1": ["E3", "E5"]},
        "A23": {"I1": ["E3", "E5"]},
        "A24": {"I1": ["E5"]},
    }},
    "J": {
        "2": {
            "A17": {"J1a": ["C4"]}, "A21": {"J1a": ["C4"]},
            "A22#1": {"J1b": ["C6"]}, "A24": {"J1b": ["C6"]},
            "A22#2": {"J1a": ["C4"], "J1b": ["C6"]},
        },
        "3": {
            "A17": {"J1a": ["D1d"]}, "A21": {"J1a": ["D1d"]},
            "A22#1": {"J1b": ["D1f"]}, "A24": {"J1b": ["D1f"]},
            "A22#2": {"J1a": ["D2c"], "J1b": ["D2c"]},
        },
    },
    "K": {
        "2": {"A20": {"K1": ["F2"]}, "A22": {"K1": ["F2"]}, "A23": {"K1": ["F2"]}, "A24": {"K1": ["F2"]}},
        "5": {"A20": {"K1": ["D1e"]}, "A22": {"K1": ["D1f"]}, "A23": {"K1": ["D1e"]}, "A24": {"K1": ["D1f"]}},
    },
}


def main():
    DATA.mkdir(parents=True, exist_ok=True)
    nie = [{"label": lab, "root_system": rs, "components": [[t, n] for t, n in comps], "glue": glue}
           for lab, rs, comps, glue in NIEMEIER]
    (DATA / "niemeier.json").write_text(json.dumps(nie, indent=1) + "\n")
    sch = [{"number": k, "lie": v} for k, v in sorted(SCHELLEKENS.items())]
    (DATA / "schellekens.json").write_text(json.dumps(sch, indent=1) + "\n")
    fc = [{"family": f, "frame_shape": {str(t): b for t, b in fs.items()}, "order_doubling": od,
           "genus": g, "class_number": cn, "voa_count": vc} for f, fs, od, g, cn, vc in FRAME_CLASSES]
    (DATA / "frame_classes.json").write_text(json.dumps(fc, indent=1) + "\n")
    t2 = {"families": list("ABCDEFGHIJK"),
          "rows": {lab: [[] if x == "." else [int(c) for c in x.split(",")] for x in s.split()]
                   for lab, s in TABLE2.items()},
          "row_totals": {k: list(v) for k, v in TABLE2_ROW_TOTALS.items()},
          "totals": TABLE2_TOTALS}
    (DATA / "table2.json").write_text(json.dumps(t2, indent=1) + "\n")
    (DATA / "golden.json").write_text(json.dumps(GOLDEN, indent=1) + "\n")
    (DATA / "powers.json").write_text(json.dumps(POWERS, indent=1) + "\n")


if __name__ == "__main__":
    main()

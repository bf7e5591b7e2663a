"""Reference tables: classical representatives with their decompositions,
eminent classes, overgroups and auxiliary invariant values.

Root supports are Bourbaki coefficient strings.  Unipotent representatives
are the products of x_beta(1) in the order listed.  Labels are ASCII: a
tilde follows the letter (A~2), and a characteristic subscript is written
(A7)_3.
"""
from __future__ import annotations

# (support, condition, nilpotent only, decomposition)
# condition 'any' rows hold for every p; 'p=2' rows only in characteristic 2
SP_ROWS = {
    2: [
        ("", "any", False, "W(1)^2"),
        ("10", "any", False, "W(2)"),
        ("01", "any", False, "W(1)+V(2)"),
        ("01,21", "p=2", False, "V(2)^2"),
        ("10,01", "any", False, "V(4)"),
    ],
    3: [
        ("", "any", False, "W(1)^3"),
        ("100,010", "any", False, "W(3)"),
        ("100", "any", False, "W(2)+W(1)"),
        ("100,001", "any", False, "W(2)+V(2)"),
        ("010,001", "any", False, "W(1)+V(4)"),
        ("001,221", "p=2", False, "W(1)+V(2)^2"),
        ("001", "any", False, "W(1)^2+V(2)"),
        ("010,001,221", "any", False, "V(4)+V(2)"),
        ("100,010,001", "any", False, "V(6)"),
        ("100,010,221", "p=2", True, "W_1(3)"),
    ],
    4: [
        ("", "any", False, "W(1)^4"),
        ("1000,0100,0010", "any", False, "W(4)"),
        ("1000,0100", "any", False, "W(3)+W(1)"),
        ("1000,0100,0001", "any", False, "W(3)+V(2)"),
        ("1000,0010", "any", False, "W(2)^2"),
        ("1000", "any", False, "W(2)+W(1)^2"),
        ("1000,0001", "any", False, "W(2)+W(1)+V(2)"),
        ("0100,0001,2221", "p=2", False, "W(2)+V(2)^2"),
        ("1000,0010,0001", "any", False, "W(2)+V(4)"),
        ("0001", "any", False, "W(1)^3+V(2)"),
        ("0001,2221", "p=2", False, "W(1)^2+V(2)^2"),
        ("0010,0001", "any", False, "W(1)^2+V(4)"),
        ("0010,0001,2221", "any", False, "W(1)+V(4)+V(2)"),
        ("0100,0010,0001", "any", False, "W(1)+V(6)"),
        ("0010,0001,0221,2221", "p=2", False, "V(4)+V(2)^2"),
        ("1000,0010,0001,0221", "p=2", False, "V(4)^2"),
        ("0100,0010,0001,2221", "any", False, "V(6)+V(2)"),
        ("1000,0100,0010,0001", "any", False, "V(8)"),
        ("1000,0100,0010,2221", "p=2", True, "W_1(4)"),
        ("0100,0010,0221", "p=2", True, "W_1(3)+W(1)"),
    ],
}

# SO_7: (support, p odd, p = 2), one list per kind; None = row absent
SO7_ROWS = {
    "unipotent": [
        ("", "W(1)^3+V(1)", "W(1)^3+R"),
        ("100,010", "W(3)+V(1)", "W(3)+R"),
        ("100", "W(2)+W(1)+V(1)", "W(2)+W(1)+R"),
        ("100,001", "W(2)+V(3)", "W(2)+V(2)+R"),
        ("001", "W(1)^2+V(3)", "W(1)^2+V(2)+R"),
        ("010,001", "W(1)+V(5)", "W(1)+V(4)+R"),
        ("100,122", None, "W(1)+V(2)^2+R"),
        ("100,010,012", None, "V(4)+V(2)+R"),
        ("100,010,001", "V(7)", "V(6)+R"),
    ],
    "nilpotent": [
        ("", "W(1)^3+V(1)", "W(1)^3+D(1)"),
        ("100,010", "W(3)+V(1)", "W(3)+D(1)"),
        ("100", "W(2)+W(1)+V(1)", "W(2)+W(1)+D(1)"),
        ("100,001", "W(2)+V(3)", "W(2)+D(2)"),
        ("001", "W(1)^2+V(3)", "W(1)^2+D(2)"),
        ("010,001", "W(1)+V(5)", "W(1)+D(3)"),
        ("100,122", None, "W_2(2)+W(1)+D(1)"),
        ("100,010,012", None, "W_3(3)+D(1)"),
        ("100,010,001", "V(7)", "D(4)"),
    ],
}

# SO_8 and SO_10: (support, p odd, p = 2 nilpotent, p = 2 unipotent)
SO_EVEN_ROWS = {
    4: [
        ("", "W(1)^4", "W(1)^4", "W(1)^4"),
        ("1000,0100,0010", "W(4)", "W(4)", "W(4)"),
        ("1000,0100,0001", "W(4)", "W(4)", "W(4)"),
        ("1000,0100", "W(3)+W(1)", "W(3)+W(1)", "W(3)+W(1)"),
        ("1000,0010", "W(2)^2", "W(2)^2", "W(2)^2"),
        ("1000,0001", "W(2)^2", "W(2)^2", "W(2)^2"),
        ("1000", "W(2)+W(1)^2", "W(2)+W(1)^2", "W(2)+W(1)^2"),
        ("1000,0010,0001", "W(2)+V(3)+V(1)", "W(2)+W_2(2)",
         "W(2)+V(2)^2"),
        ("0010,0001", "W(1)^2+V(3)+V(1)", "W(1)^2+W_2(2)",
         "W(1)^2+V(2)^2"),
        ("0100,0010,0001", "W(1)+V(5)+V(1)", "W(1)+W_3(3)",
         "W(1)+V(4)+V(2)"),
        ("1000,0100,0010,1101", "V(5)+V(3)", "W_3(4)", "V(4)^2"),
        ("1000,0100,0010,0001", "V(7)+V(1)", "W_4(4)", "V(6)+V(2)"),
    ],
    5: [
        ("", "W(1)^5", "W(1)^5", "W(1)^5"),
        ("10000,01000,00100,00010", "W(5)", "W(5)", "W(5)"),
        ("10000,01000,00100", "W(4)+W(1)", "W(4)+W(1)", "W(4)+W(1)"),
        ("10000,01000,00010", "W(3)+W(2)", "W(3)+W(2)", "W(3)+W(2)"),
        ("10000,01000", "W(3)+W(1)^2", "W(3)+W(1)^2", "W(3)+W(1)^2"),
        ("10000,00100", "W(2)^2+W(1)", "W(2)^2+W(1)", "W(2)^2+W(1)"),
        ("10000", "W(2)+W(1)^3", "W(2)+W(1)^3", "W(2)+W(1)^3"),
        ("10000,01000,00010,00001", "W(3)+V(3)+V(1)", "W(3)+W_2(2)",
         "W(3)+V(2)^2"),
        ("10000,00010,00001", "W(2)+W(1)+V(3)+V(1)", "W(2)+W(1)+W_2(2)",
         "W(2)+W(1)+V(2)^2"),
        ("00010,00001", "W(1)^3+V(3)+V(1)", "W(1)^3+W_2(2)",
         "W(1)^3+V(2)^2"),
        ("10000,00100,00010,00001", "W(2)+V(5)+V(1)", "W(2)+W_3(3)",
         "W(2)+V(4)+V(2)"),
        ("00100,00010,00001", "W(1)^2+V(5)+V(1)", "W(1)^2+W_3(3)",
         "W(1)^2+V(4)+V(2)"),
        ("01000,00100,00010,01101", "W(1)+V(5)+V(3)", "W(1)+W_3(4)",
         "W(1)+V(4)^2"),
        ("01000,00100,00010,00001", "W(1)+V(7)+V(1)", "W(1)+W_4(4)",
         "W(1)+V(6)+V(2)"),
        # printed as W(1)+V(6)+V(4), which has dimension 12
        ("10000,01000,00100,00010,01101", "V(7)+V(3)", "W_4(5)",
         "V(6)+V(4)"),
        # printed as W(1)+V(9)+V(1), which has dimension 12
        ("10000,01000,00100,00010,00001", "V(9)+V(1)", "W_5(5)",
         "V(8)+V(2)"),
    ],
}

# -- exceptional groups ----------------------------------------------------------

# eminent classes: (label, condition); the same lists serve both kinds
EMINENT = {
    "G2": [("G2", "any"), ("(A~1)_3", "p=3")],
    "F4": [("F4", "any"), ("F4(a2)", "p=2"), ("(A~2A1)_2", "p=2")],
    "E6": [("E6", "any"), ("E6(a1)", "any"), ("E6(a3)", "p=2")],
    "E7": [("E7", "any"), ("E7(a1)", "any"), ("E7(a2)", "any"),
           ("E7(a3)", "p=2")],
    "E8": [("E8", "any"), ("E8(a1)", "any"), ("E8(a2)", "any"),
           ("E8(a3)", "p=2"), ("E8(a4)", "p=2"), ("E8(a5)", "p=2"),
           ("(D5A2)_2", "p=2"), ("(A7)_3", "p=3")],
}

# overgroups of distinguished non-eminent classes:
# label -> (row condition, [(overgroup, condition)])
_UNIP_OVER = {
    "G2": {"G2(a1)": ("any", [("A2", "any"), ("A1A~1", "p!=2"),
                              ("A~2", "p=3")])},
    "F4": {
        "F4(a1)": ("any", [("B4", "any"), ("C4", "p=2")]),
        "F4(a2)": ("p!=2", [("A1C3", "any")]),
        "F4(a3)": ("any", [("B4", "any"), ("A2A~2", "p!=3"),
                           ("A1C3", "p!=2"), ("C4", "p=2")]),
        "(C3(a1))_2": ("p=2", [("B4", "any"), ("C4", "any")]),
    },
    "E6": {"E6(a3)": ("p!=2", [("A1A5", "any")])},
    "E7": {
        "E7(a3)": ("p!=2", [("A1D6", "any")]),
        "E7(a4)": ("any", [("A1D6", "any"), ("A7", "p=2")]),
        "E7(a5)": ("any", [("A1D6", "p!=2"), ("A2A5", "p!=3")]),
    },
    "E8": {
        "E8(a3)": ("p!=2", [("A1E7", "any")]),
        "E8(a4)": ("p!=2", [("D8", "any")]),
        "E8(a5)": ("p!=2", [("D8", "any")]),
        "E8(a6)": ("any", [("A8", "p!=3"), ("D8", "p!=2")]),
        "E8(a7)": ("any", [("A4A4", "p!=5"), ("A2E6", "p!=3"),
                           ("A1E7", "p!=2"), ("D8", "p!=2")]),
        "E8(b4)": ("any", [("A1E7", "any"), ("D8", "p=2")]),
        "E8(b5)": ("any", [("A2E6", "p!=3"), ("A1E7", "p!=2")]),
        "E8(b6)": ("any", [("A2E6", "any"), ("D8", "p!=2"), ("A8", "p=3")]),
        "(D7(a1))_2": ("p=2", [("A1E7", "any"), ("D8", "any")]),
    },
}


def _nil_over():
    import copy
    t = copy.deepcopy(_UNIP_OVER)
    t["G2"]["G2(a1)"] = ("any", [("A2", "any"), ("A1A~1", "p!=2")])
    t["F4"]["F4(a1)"] = ("any", [("B4", "any")])
    t["F4"]["(C3(a1))_2"] = ("p=2", [("B4", "any")])
    t["F4"]["F4(a3)"] = ("any", [("B4", "any"), ("A2A~2", "p!=3"),
                                 ("A1C3", "p!=2")])
    t["E7"]["E7(a4)"] = ("any", [("A1D6", "any")])
    t["E8"]["E8(b4)"] = ("any", [("A1E7", "any")])
    t["E8"]["E8(b6)"] = ("any", [("A2E6", "any"), ("D8", "p!=2")])
    del t["E8"]["(D7(a1))_2"]
    return t


OVERGROUPS = {"unipotent": _UNIP_OVER, "nilpotent": _nil_over()}


def condition_holds(cond: str, p: int) -> bool:
    cond = cond.replace(" ", "")
    if cond == "any":
        return True
    if cond.startswith("p!="):
        return p != int(cond[3:])
    if cond.startswith("p>="):
        return p >= int(cond[3:])
    if cond.startswith("p<="):
        return p <= int(cond[3:])
    if cond.startswith("p="):
        return p == int(cond[2:])
    raise ValueError(f"unknown condition {cond}")


# invariant fields that separate classes, per (type, kind) and prime range
# each entry: (condition, fields)
PROFILE_FIELDS = {
    ("G2", "nilpotent"): [("p!=3", ["jbs_min"]), ("p=3", ["jbs_adj"])],
    ("F4", "nilpotent"): [("p=2", ["jbs_min", "jbs_adj", "ds"]),
                          ("p=3", ["jbs_min", "jbs_adj"]),
                          ("p>=5", ["jbs_min"])],
    ("E6", "nilpotent"): [("p=2", ["jbs_adj", "ds"]),
                          ("p=3", ["jbs_adj", "alg"]),
                          ("p>=5", ["jbs_min"])],
    ("E7", "nilpotent"): [("p=2", ["jbs_adj", "ds", "alg"]),
                          ("p=3", ["jbs_min", "jbs_adj", "ds"]),
                          ("p>=5", ["jbs_min"])],
    ("E8", "nilpotent"): [("p=2", ["jbs_adj", "ds", "alg", "alg_prime"]),
                          ("p=3", ["jbs_adj", "nds", "nil"]),
                          ("p=5", ["jbs_adj", "ds"]),
                          ("p>=7", ["jbs_adj"])],
    ("G2", "unipotent"): [("p!=3", ["jbs_min"]), ("p=3", ["jbs_adj"])],
    ("F4", "unipotent"): [("p<=3", ["jbs_min", "jbs_adj"]),
                          ("p>=5", ["jbs_min"])],
    ("E6", "unipotent"): [("p!=3", ["jbs_min"]), ("p=3", ["jbs_adj"])],
    ("E7", "unipotent"): [("p=2", ["jbs_adj", "ls"]),
                          ("p=3", ["jbs_min", "jbs_adj"]),
                          ("p>=5", ["jbs_min"])],
    ("E8", "unipotent"): [("p=2", ["jbs_adj", "ls"]),
                          ("p>=3", ["jbs_adj"])],
}


def profile_fields(name: str, kind: str, p: int) -> list[str]:
    for cond, fields in PROFILE_FIELDS[(name, kind)]:
        if condition_holds(cond, p):
            return list(fields)
    raise ValueError(f"no invariant fields for {name}, {kind}, p={p}")


# Auxiliary tie-break data: (type, p, lattice, fields) -> tie groups.
# lattice None means the value was not tied to a lattice; fields is the
# tuple of profile fields the values refer to.
def _g(*rows):
    return list(rows)


AUX = {
    ("F4", 2, None, ("ds",)): [
        _g(("F4(a1)", (10, 5, 2, 0)), ("F4(a2)", (10, 3, 0))),
        _g(("B3", (14, 9, 6)), ("F4(a3)", (14, 7, 3, 0))),
        _g(("(C3(a1))_2", (16, 8, 4, 0)), ("(A~2A1)_2", (16, 8, 3, 0))),
        _g(("C3(a1)", (20, 16, 15, 7, 4, 0)),
           ("A~2A1", (20, 16, 15, 7, 1, 0))),
    ],
    ("E6", 2, None, ("ds",)): [
        _g(("D5", (12, 8, 6, 2, 0)), ("E6(a3)", (12, 6, 0))),
        _g(("D4", (20, 17, 16)), ("D4(a1)", (20, 15, 8, 0))),
        _g(("A3A1", (24, 21, 20, 14, 12, 4, 0)),
           ("A2^2A1", (24, 21, 20, 12, 1, 0))),
    ],
    ("E6", 3, "sc", ("alg",)): [_g(("E6", 31), ("E6(a1)", 60))],
    ("E6", 3, "ad", ("alg",)): [_g(("E6", 24), ("E6(a1)", 29))],
    ("E7", 3, None, ("ds",)): [
        _g(("E6", (15, 12, 9)), ("E6(a1)", (15, 9, 4, 0))),
        _g(("D6(a1)", (19, 15)), ("A6", (19, 17))),
    ],
    ("E7", 2, "sc", ("alg",)): [
        _g(("E7", 62), ("E7(a1)", 67)),
        _g(("D6", 58), ("E7(a4)", 63), ("D6(a1)", 70), ("(A6)_2", 75)),
        _g(("D5A1", 73), ("E7(a5)", 91)),
        _g(("D5", 70), ("E6(a3)", 84)),
        _g(("D4A1", 63), ("A3A2A1", 69), ("(A3A2)_2", 74),
           ("D4(a1)A1", 83)),
        _g(("D4", 66), ("D4(a1)", 82)),
    ],
    ("E7", 2, "sc", ("ds",)): [
        _g(("D6(a2)", (26, 21, 20, 12, 2, 0)),
           ("A5A1", (26, 21, 20, 12, 1, 0))),
        _g(("(A3A1)^(1)", (43, 39, 37, 29, 21, 20, 4, 0)),
           ("A2^2A1", (43, 39, 37, 27, 8, 0))),
    ],
    ("E7", 2, "ad", ("alg",)): [
        _g(("E7", 56), ("E7(a1)", 58)),
        _g(("D6", 52), ("E7(a4)", 54), ("D6(a1)", 56), ("(A6)_2", 57)),
        _g(("D5A1", 60), ("E7(a5)", 71)),
        _g(("D5", 42), ("E6(a3)", 50)),
        _g(("A4A2", 54), ("D5(a1)", 39)),
        _g(("D4A1", 57), ("A3A2A1", 58), ("(A3A2)_2", 60),
           ("D4(a1)A1", 65)),
        _g(("A2^2", 56), ("A3", 55)),
    ],
    ("E7", 2, "ad", ("ds",)): [
        _g(("D6(a2)", (26, 21, 20, 12, 2, 0)),
           ("A5A1", (26, 21, 20, 12, 1, 0))),
        _g(("A3A2", (39, 35, 26, 23, 7, 0)), ("D4", (39, 35, 28)),
           ("D4(a1)", (39, 35, 28, 26, 14, 0))),
        _g(("(A3A1)^(1)", (43, 40, 37, 29, 21, 20, 4, 0)),
           ("A2^2A1", (43, 40, 37, 27, 8, 0))),
    ],
    ("E8", 5, None, ("ds",)): [_g(("E8", (10, 7, 0)), ("E8(a1)", (10, 1, 0)))],
    ("E8", 3, None, ("nds",)): [
        _g(("E8", (15, 18, 248)), ("E8(a1)", (16, 18, 248))),
        _g(("E6A1", (32, 33, 39)), ("E8(b6)", (33, 34, 39, 60, 165, 248)),
           ("E6(a1)A1", (34, 40, 53, 132, 248)),
           ("(A7)_3", (33, 35, 47, 105, 248))),
        _g(("A7", (36, 36, 36)), ("E6", (36, 37, 59)),
           ("E6(a1)", (39, 56, 60))),
        _g(("E7(a4)", (40, 47, 63)), ("A6A1", (38, 38, 38))),
        _g(("D6(a1)", (43, 49)), ("A6", (41, 41))),
    ],
    ("E8", 3, None, ("nil",)): [_g(("E6(a3)A1", 36), ("D5(a1)A2", 43))],
    ("E8", 2, None, ("alg", "alg_prime")): [
        _g(("E8", (79, 74)), ("E8(a1)", (79, 73)), ("E8(a2)", (89, 85)),
           ("E8(a3)", (108, 103)), ("E8(a4)", (139, 136))),
        _g(("E7", (68, 64)), ("E8(b4)", (70, 63)), ("E7(a1)", (72, 69))),
        _g(("E8(a5)", (79, 72)), ("E8(b5)", (91, 86))),
        _g(("(D7)_2", (102, 98)), ("E8(a6)", (107, 101))),
        _g(("D7", (69, 65)), ("D7(a1)", (77, 70)), ("A7", (85, 72)),
           ("D7(a2)", (101, 93))),
        _g(("E7(a2)", (61, 57)), ("E6A1", (61, 53))),
        _g(("(D7(a1))_2", (69, 63)), ("E7(a3)", (82, 78))),
        _g(("D6", (71, 68)), ("(D5A2)_2", (72, 65)), ("E7(a4)", (74, 67)),
           ("A6A1", (77, 66)), ("D6(a1)", (82, 78)), ("(A6)_2", (85, 76))),
        _g(("D5A2", (76, 67)), ("E8(a7)", (102, 99))),
        _g(("D6(a2)", (73, 71)), ("A5A1", (73, 58))),
        _g(("D5", (64, 60)), ("E6(a3)", (70, 64))),
        _g(("(D4A2)_2", (64, 58)), ("A4A2A1", (64, 57)),
           ("D5(a1)A1", (71, 64))),
        _g(("D4A2", (83, 73)), ("A3^2", (88, 76)),
           ("D4(a1)A2", (99, 72))),
        _g(("D4A1", (91, 88)), ("A3A2A1", (92, 86)),
           ("(A3A2)_2", (101, 95)), ("D4(a1)A1", (109, 104))),
        _g(("D4", (88, 85)), ("D4(a1)", (92, 90))),
        _g(("A3A1", (94, 92)), ("A2^2A1", (94, 87))),
    ],
    ("E8", 2, None, ("ds",)): [
        _g(("D5A1", (44, 39, 37, 29, 19, 18, 2, 0)),
           ("E7(a5)", (44, 39, 37, 29, 17, 1, 0)),
           ("E6(a3)A1", (44, 39, 37, 27, 8, 0))),
        _g(("D5(a1)A2", (48, 43, 37, 21, 1, 0)),
           ("A4A3", (48, 43, 37, 19, 1, 0))),
        _g(("A3A1^2", (80, 76, 75, 71, 70, 54, 39, 38, 6, 0)),
           ("A2^2A1^2", (80, 76, 75, 71, 70, 50, 14, 0))),
    ],
}


def aux_rows():
    """Flatten AUX into (type, p, lattice, fields, label, value) rows."""
    for (name, p, lat, flds), groups in AUX.items():
        for grp in groups:
            for label, value in grp:
                yield name, p, lat, flds, label, value

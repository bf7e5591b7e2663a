import numpy as np
import pytest

from eminent.roots import (
    RootError, beta_l_root, build_root_system, closed_subsystems,
    maximal_generalized_subsystems, parse_root, root_from_bourbaki_string,
    subsystem_type, type_label,
)

# standard data: number of positive roots and Coxeter number
STANDARD = {
    ("A", 1): (1, 2), ("A", 5): (15, 6), ("B", 3): (9, 6), ("B", 5): (25, 10),
    ("C", 4): (16, 8), ("C", 6): (36, 12), ("D", 4): (12, 6),
    ("D", 5): (20, 8), ("D", 7): (42, 12), ("G", 2): (6, 6),
    ("F", 4): (24, 12), ("E", 6): (36, 12), ("E", 7): (63, 18),
    ("E", 8): (120, 30),
}


@pytest.mark.parametrize("typ,rank", sorted(STANDARD))
def test_counts_and_coxeter_number(typ, rank):
    rs = build_root_system(typ, rank)
    npos, h = STANDARD[(typ, rank)]
    assert len(rs.positive) == npos
    assert sum(rs.highest) + 1 == h
    assert len(rs.roots) == rank * h


@pytest.mark.parametrize("typ,rank", sorted(STANDARD))
def test_roots_closed_and_signed(typ, rank):
    rs = build_root_system(typ, rank)
    for r in rs.roots:
        assert all(c >= 0 for c in r) or all(c <= 0 for c in r)
        for i in range(rank):
            assert rs.is_root(rs.reflect(r, rs.simple[i]))


def test_epsilon_expressions():
    c4 = build_root_system("C", 4)
    assert c4.from_epsilon([2, 0, 0, 0]) == (2, 2, 2, 1)
    d5 = build_root_system("D", 5)
    assert d5.from_epsilon([1, 0, 0, 0, 1]) == (1, 1, 1, 0, 1)
    assert len(build_root_system("A", 1).positive) == 1


def test_bourbaki_strings():
    f4 = build_root_system("F", 4)
    r = root_from_bourbaki_string(f4, "1232")
    assert not f4.is_long(r)
    assert max((x for x in f4.positive if not f4.is_long(x)), key=sum) == r
    assert root_from_bourbaki_string(f4, "0100") == f4.simple[1]
    assert root_from_bourbaki_string(f4, (0, 1, 0, 0)) == f4.simple[1]
    with pytest.raises(RootError):
        root_from_bourbaki_string(f4, "9999")
    assert parse_root(f4, "-0100") == (0, -1, 0, 0)


def test_beta_l():
    assert beta_l_root(5, 4) == (0, 1, 1, 0, 1)
    assert beta_l_root(4, 3) == (1, 1, 0, 1)
    with pytest.raises(RootError):
        beta_l_root(5, 3)
    for n in range(4, 12):
        rs = build_root_system("D", n)
        for l in range(n // 2 + 1, n + 1):
            if 2 * l > n + 1:
                assert beta_l_root(n, l) in rs.positive


def _labels(out):
    return sorted(d.label for d in out)


def test_maximal_generalized_subsystems():
    assert _labels(maximal_generalized_subsystems("B", 4, 2)) == sorted(
        ["B1B3", "B2B2", "D4"])
    assert maximal_generalized_subsystems("A", 7, 3) == []
    assert _labels(maximal_generalized_subsystems("D", 6, 3)) == sorted(
        ["D2D4", "D3D3", "B5", "B1B4", "B2B3"])


def _closed(typ, rank):
    return {type_label(t) for _, _, t in
            closed_subsystems(build_root_system(typ, rank))}


def test_closed_subsystems():
    assert {"A2", "A1A~1"} <= _closed("G", 2)
    assert _closed("A", 1) == set()
    assert {"D8", "E7A1"} <= _closed("E", 8)
    assert _closed("E", 8) == {"D8", "A8", "A7A1", "A5A2A1", "A4^2", "D5A3",
                               "E6A2", "E7A1"}
    assert _closed("F", 4) == {"C3A1", "A2A~2", "A3A~1", "B4"}


@pytest.mark.parametrize("typ,rank", [("E", 8), ("F", 4), ("G", 2),
                                      ("E", 7), ("B", 5), ("C", 5)])
def test_closed_subsystem_cartan_consistency(typ, rank):
    rs = build_root_system(typ, rank)
    for _, simple, types in closed_subsystems(rs):
        assert len(simple) == rank
        assert all(rs.is_root(r) for r in simple)
        assert subsystem_type(rs, simple) == types
        g = np.array([[rs.ip(a, b) for b in simple] for a in simple])
        # a simple system: pairwise non-positive products
        assert np.all(g - np.diag(np.diag(g)) <= 0)


def test_subsystem_labels():
    f4 = build_root_system("F", 4)
    s = f4.simple
    assert type_label(subsystem_type(f4, [s[0], s[2], s[3]])) == "A~2A1"
    assert type_label(subsystem_type(f4, [s[1], s[2], s[3]])) == "C3"
    assert type_label(subsystem_type(f4, [s[0], s[1], s[2]])) == "B3"
    assert type_label([]) == "0"

import numpy as np
import pytest

from eminent.classical import (
    ClassicalError, FLAVORS, Summand, bm_bnm1_generators, decompose,
    element_from_support, eminent_representative, enumerate_decompositions,
    formed_space, is_eminent_classical, orthogonal_index, parse_decomposition,
    regular_representative, so_class_splitting, symplectic_index,
)
from eminent.linalg import jordan_partition
from eminent.modules import natural_module
from eminent.roots import beta_l_root, build_root_system
from eminent.verify import _support, classical_cases, classical_checks

rng = np.random.default_rng(11)


def test_golden_rows():
    bad = [c.line() for c in classical_checks() if not c.ok]
    assert bad == []


def test_golden_examples():
    rs = build_root_system("C", 3)
    x = element_from_support("C", 3, _support(rs, "100,010,221"), 2)
    assert str(decompose(x, formed_space("C", 3, 2))) == "W_1(3)"
    x = regular_representative("B", 3, "nilpotent", 2).matrix
    assert str(decompose(x, formed_space("B", 3, 2))) == "D(4)"
    x = regular_representative("D", 4, "nilpotent", 3).matrix
    assert str(decompose(x, formed_space("D", 4, 3))) == "V(7)+V(1)"


def _expected_regular(typ, n, p, kind):
    m = formed_space(typ, n, p).dim
    if typ == "A":
        return f"V({m})"
    if p != 2:
        return f"V({m - 1})+V(1)" if typ == "D" else f"V({m})"
    if typ == "C":
        return f"V({m})"
    if typ == "D":
        return f"W_{m // 2}({m // 2})" if kind == "nilpotent" \
            else f"V({m - 2})+V(2)"
    return f"D({(m + 1) // 2})" if kind == "nilpotent" else f"V({m - 1})+R"


@pytest.mark.parametrize("typ", "ABCD")
def test_regular_decompositions(typ):
    lo = {"A": 1, "B": 2, "C": 2, "D": 4}[typ]
    for n in range(lo, 11):
        for p in (2, 3, 5):
            for kind in ("nilpotent", "unipotent"):
                x = regular_representative(typ, n, kind, p).matrix
                d = decompose(x, formed_space(typ, n, p), kind)
                assert d == parse_decomposition(
                    _expected_regular(typ, n, p, kind)), (typ, n, p, kind)


def test_regular_type_a_single_block():
    for n in range(1, 8):
        x = regular_representative("A", n, "nilpotent", 3).matrix
        assert jordan_partition(x, 3) == [n + 1]


def test_counts():
    assert len(enumerate_decompositions("symplectic", 4, 2)) == 5
    assert len(enumerate_decompositions("symplectic", 6, 2)) == 10
    ds = enumerate_decompositions("orthogonal_even", 8, 3)
    space = formed_space("D", 4, 3)
    assert len(ds) == 10
    split = [so_class_splitting(d, space) == "splits_into_two" for d in ds]
    assert len(ds) + sum(split) == 12


def test_enumeration_no_duplicates():
    for flavor, dim in [("symplectic", 8), ("orthogonal_even", 10),
                        ("orthogonal_odd", 7)]:
        for p in (2, 3):
            for kind in ("nilpotent", "unipotent"):
                ds = enumerate_decompositions(flavor, dim, p, kind)
                assert len({str(d) for d in ds}) == len(ds)
                assert all(d.dim == dim for d in ds)


def test_enumeration_errors():
    with pytest.raises(ClassicalError):
        enumerate_decompositions("symplectic", 5, 2)
    with pytest.raises(ClassicalError):
        enumerate_decompositions("orthogonal_odd", 8, 3)


def test_c_nilpotent_family():
    for n in range(3, 13):
        space = formed_space("C", n, 2)
        for l in range(1, n):
            if 2 * l >= n:
                continue
            x = eminent_representative("C", n, 2, "nilpotent", l).matrix
            assert str(decompose(x, space)) == f"W_{l}({n})"
            assert symplectic_index(x, space) == l


def test_d_families():
    for n in range(4, 13):
        space = formed_space("D", n, 2)
        for l in range(1, n):
            if 2 * l <= n + 1:
                continue
            x = eminent_representative("D", n, 2, "nilpotent", l).matrix
            assert str(decompose(x, space)) == f"W_{l}({n})"
            assert orthogonal_index(x, space) == l
            u = eminent_representative("D", n, 2, "unipotent", l).matrix
            want = sorted([2 * n - 2 * l + 2, 2 * l - 2], reverse=True)
            assert jordan_partition(u, 2, "unipotent") == want
            assert decompose(u, space, "unipotent") == parse_decomposition(
                f"V({2 * n - 2 * l + 2})+V({2 * l - 2})")


def test_d_unipotent_odd_reduction():
    for p in (3, 5):
        for n in range(4, 10):
            rs = build_root_system("D", n)
            for l in range(1, n):
                if 2 * l <= n + 1:
                    continue
                supp = rs.simple[:-1] + [beta_l_root(n, l)]
                u = element_from_support("D", n, supp, p, "unipotent")
                want = sorted([2 * l - 1, 2 * n - 2 * l + 1], reverse=True)
                assert jordan_partition(u, p, "unipotent") == want


def test_eminent_representative_errors():
    with pytest.raises(ClassicalError):
        eminent_representative("C", 4, 2, "nilpotent", 2)
    with pytest.raises(ClassicalError):
        eminent_representative("C", 5, 3, "nilpotent", 1)
    with pytest.raises(ClassicalError):
        eminent_representative("D", 5, 2, "nilpotent", 2)
    with pytest.raises(ClassicalError):
        eminent_representative("D", 5, 2)


def test_index_of_zero():
    z = np.zeros((8, 8), dtype=np.int64)
    assert symplectic_index(z, formed_space("C", 4, 2)) == 0
    # Q itself is nonzero even though Q(v_i) = 0 on the basis
    assert orthogonal_index(z, formed_space("D", 4, 2)) == 1


def test_index_of_regular():
    x = regular_representative("D", 4, "nilpotent", 2).matrix
    assert orthogonal_index(x, formed_space("D", 4, 2)) == 4


def test_index_errors():
    x = regular_representative("C", 3, "nilpotent", 3).matrix
    with pytest.raises(ClassicalError):
        symplectic_index(x, formed_space("C", 3, 3))
    x = regular_representative("C", 3, "nilpotent", 2).matrix
    with pytest.raises(ClassicalError):
        orthogonal_index(x, formed_space("C", 3, 2))


def _table_eminent(typ, n, p, kind):
    """Eminent rows for (typ, n, p, kind), written out from the class tables."""
    out = set()
    if typ == "B":
        if p != 2:
            out.add(f"V({2 * n + 1})")
        elif kind == "nilpotent":
            out.add(f"D({n + 1})")
        else:
            out.add(f"V({2 * n})+R")
    elif typ == "C":
        out.add(f"V({2 * n})")
        if p == 2 and kind == "nilpotent":
            out.update(f"W_{l}({n})" for l in range(1, n) if 2 * l < n)
    elif typ == "D" and p == 2:
        for l in range(1, n):
            if 2 * l > n + 1:
                out.add(f"W_{l}({n})" if kind == "nilpotent"
                        else f"V({2 * n - 2 * l + 2})+V({2 * l - 2})")
    return {str(parse_decomposition(s)) for s in out}


@pytest.mark.parametrize("typ", "BCD")
@pytest.mark.parametrize("p", [2, 3])
@pytest.mark.parametrize("kind", ["nilpotent", "unipotent"])
def test_eminence_bijection(typ, p, kind):
    lo = 4 if typ == "D" else 2
    for n in range(lo, 7):
        dim = formed_space(typ, n, p).dim
        got = {str(d) for d in enumerate_decompositions(FLAVORS[typ], dim, p,
                                                        kind)
               if is_eminent_classical(d, typ, n, p, kind)}
        assert got == _table_eminent(typ, n, p, kind), (typ, n)


def test_d_regular_not_eminent():
    for n in range(4, 11):
        for p in (2, 3, 5):
            for kind in ("nilpotent", "unipotent"):
                x = regular_representative("D", n, kind, p).matrix
                d = decompose(x, formed_space("D", n, p), kind)
                assert not is_eminent_classical(d, "D", n, p, kind)


def test_b_with_w_part_not_eminent():
    d = parse_decomposition("W(2)+D(2)")
    assert not is_eminent_classical(d, "B", 3, 2, "nilpotent")


def random_isometry(rs, rep, p, length=12):
    g = np.eye(rep.dim, dtype=np.int64)
    gi = g.copy()
    for _ in range(length):
        r = rs.roots[rng.integers(len(rs.roots))]
        c = int(rng.integers(1, p))
        g = g @ rep.root_group(r, c, p) % p
        gi = rep.root_group(r, -c, p) @ gi % p
    return g, gi


def test_random_isometry_preserves_form():
    rs = build_root_system("D", 4)
    rep = natural_module("D", 4)
    space = formed_space("D", 4, 2)
    g, gi = random_isometry(rs, rep, 2)
    assert not np.any((g @ gi - np.eye(8, dtype=np.int64)) % 2)
    assert not np.any((g.T @ space.form @ g - space.form) % 2)


def test_conjugation_invariance_sampled():
    cases = list(classical_cases())
    for table, typ, n, support, p, kind, exp in cases[::3]:
        rs = build_root_system(typ, n)
        rep = natural_module(typ, n)
        space = formed_space(typ, n, p)
        x = element_from_support(typ, n, _support(rs, support), p, kind)
        d = decompose(x, space, kind)
        for _ in range(5):
            g, gi = random_isometry(rs, rep, p)
            assert decompose(g @ x @ gi % p, space, kind) == d


def test_so_class_splitting():
    odd = formed_space("D", 4, 3)
    assert so_class_splitting(parse_decomposition("W(4)^2"), odd) \
        == "splits_into_two"
    assert so_class_splitting(parse_decomposition("V(7)+V(1)"), odd) \
        == "one_class"
    two = formed_space("D", 4, 2)
    assert so_class_splitting(parse_decomposition("V(6)+V(2)"), two,
                              "unipotent") == "one_class"
    assert so_class_splitting(parse_decomposition("V(4)+W(2)"), two,
                              "unipotent") == "not_in_SO"
    assert so_class_splitting(parse_decomposition("W_3(4)"), two) \
        == "one_class"
    assert so_class_splitting(parse_decomposition("W(4)"), two) \
        == "splits_into_two"
    with pytest.raises(ClassicalError):
        so_class_splitting(parse_decomposition("V(6)"), formed_space("C", 3, 2))


def test_bm_bnm1():
    for n in range(4, 9):
        for m in range(1, n - 1):
            for p in (3, 5):
                g = bm_bnm1_generators(n, m, p)
                for a in g["H1"]:
                    for b in g["H2"]:
                        assert not np.any((a @ b - b @ a) % p)
                want = sorted([2 * m + 1, 2 * n - 2 * m - 1], reverse=True)
                assert jordan_partition(g["u"], p, "unipotent") == want
                assert jordan_partition(g["e"], p) == want


def test_bm_bnm1_errors():
    with pytest.raises(ClassicalError):
        bm_bnm1_generators(5, 2, 2)
    with pytest.raises(ClassicalError):
        bm_bnm1_generators(5, 4, 3)


def test_summand_strings():
    d = parse_decomposition("W_1(3)+V(2)^2")
    assert str(parse_decomposition(str(d))) == str(d)
    assert Summand("V", 4).dim == 4

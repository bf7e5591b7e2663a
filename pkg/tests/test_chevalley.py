import numpy as np
import pytest
import scipy.sparse as sp

from eminent.chevalley import (
    ChevalleyError, chevalley_algebra, divided_exp, structure_constants,
)
from eminent.modules import minimal_module, natural_module
from eminent.roots import add, build_root_system

rng = np.random.default_rng(7)

SMALL = [("A", 3), ("B", 3), ("C", 3), ("D", 4), ("G", 2), ("F", 4)]


def _jacobi_failures(typ, n, lattice, pairs=None):
    """ad [b_i, b_j] = [ad b_i, ad b_j] over Z, on all or sampled pairs."""
    alg = chevalley_algebra(typ, n, 2, lattice)
    d = alg.dim
    ads = [sp.csr_matrix(alg.int_ad(np.eye(d, dtype=np.int64)[i]))
           for i in range(d)]
    S = alg.int_struct
    if pairs is None:
        pairs = [(i, j) for i in range(d) for j in range(i + 1, d)]
    bad = 0
    for i, j in pairs:
        lhs = ads[i] @ ads[j] - ads[j] @ ads[i]
        row = S[i, j * d:(j + 1) * d]
        rhs = sp.csr_matrix((d, d), dtype=np.int64)
        for k, c in zip(row.indices, row.data):
            rhs = rhs + c * ads[k]
        bad += (lhs - rhs).count_nonzero() > 0
    return bad


@pytest.mark.parametrize("typ,n", SMALL)
@pytest.mark.parametrize("lattice", ["sc", "ad"])
def test_jacobi_full(typ, n, lattice):
    assert _jacobi_failures(typ, n, lattice) == 0


@pytest.mark.parametrize("typ,n", [("E", 6), ("E", 7), ("E", 8)])
def test_jacobi_sampled(typ, n):
    d = chevalley_algebra(typ, n, 2).dim
    pairs = {tuple(sorted(rng.choice(d, 2, replace=False))) for _ in range(300)}
    assert _jacobi_failures(typ, n, "sc", sorted(pairs)) == 0


@pytest.mark.parametrize("typ,n", SMALL + [("E", 6), ("E", 7), ("E", 8)])
def test_structure_constant_magnitudes(typ, n):
    rs = build_root_system(typ, n)
    sc = structure_constants(typ, n)
    for a in rs.roots:
        for b in rs.roots:
            if rs.is_root(add(a, b)):
                assert abs(sc.N(a, b)) == rs.string_down(b, a) + 1
                assert sc.N(a, b) == -sc.N(b, a)
    for xi, (a1, b1) in sc.extraspecial.items():
        assert sc.N(a1, b1) > 0


def test_dimensions_and_sl2():
    for typ, n in SMALL:
        rs = build_root_system(typ, n)
        assert chevalley_algebra(typ, n, 3).dim == n + len(rs.roots)
    a1 = chevalley_algebra("A", 1, 3)
    e = a1.element([(1,)])
    assert np.linalg.matrix_rank(a1.ad(e).astype(float)) == 2


def _E(n, i, j):
    m = np.zeros((n, n), dtype=np.int64)
    m[i - 1, j - 1] = 1
    return m


def _unit(n, i):
    v = [0] * n
    v[i - 1] = 1
    return np.array(v)


@pytest.mark.parametrize("n", [2, 3, 4, 6])
def test_symplectic_matrices_match_tables(n):
    rep = natural_module("C", n)
    rs = rep.rs
    N = 2 * n
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i != j:
                r = rs.from_epsilon(list(_unit(n, i) - _unit(n, j)))
                assert np.array_equal(rep.mats[r],
                                      _E(N, i, j) - _E(N, n + j, n + i))
                r = rs.from_epsilon(list(_unit(n, i) + _unit(n, j)))
                assert np.array_equal(rep.mats[r],
                                      _E(N, j, n + i) + _E(N, i, n + j))
                assert np.array_equal(rep.mats[tuple(-x for x in r)],
                                      _E(N, n + j, i) + _E(N, n + i, j))
        r = rs.from_epsilon(list(2 * _unit(n, i)))
        assert np.array_equal(rep.mats[r], _E(N, i, n + i))
        assert np.array_equal(rep.mats[tuple(-x for x in r)], _E(N, n + i, i))


@pytest.mark.parametrize("n", [4, 5, 7])
def test_orthogonal_matrices_match_tables(n):
    rep = natural_module("D", n)
    rs = rep.rs
    N = 2 * n
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i != j:
                r = rs.from_epsilon(list(_unit(n, i) - _unit(n, j)))
                assert np.array_equal(rep.mats[r],
                                      _E(N, i, j) - _E(N, n + j, n + i))
            if i < j:
                r = rs.from_epsilon(list(_unit(n, i) + _unit(n, j)))
                assert np.array_equal(rep.mats[r],
                                      _E(N, j, n + i) - _E(N, i, n + j))
                assert np.array_equal(rep.mats[tuple(-x for x in r)],
                                      _E(N, n + i, j) - _E(N, n + j, i))


def _relations_failures(rep):
    rs = rep.rs
    sc = structure_constants(rs.type, rs.rank)
    bad = 0
    for a in rs.roots:
        for b in rs.roots:
            lhs = rep.mats[a] @ rep.mats[b] - rep.mats[b] @ rep.mats[a]
            s = add(a, b)
            if not any(s):
                rhs = sum(c * rep.h(i) for i, c in enumerate(rs.coroot(a)))
            elif rs.is_root(s):
                rhs = sc.N(a, b) * rep.mats[s]
            else:
                rhs = 0
            bad += bool(np.any(lhs - rhs))
    return bad


@pytest.mark.parametrize("typ,n", [("A", 3), ("B", 2), ("B", 3), ("C", 3),
                                   ("D", 4), ("D", 5)])
def test_natural_module_relations(typ, n):
    rep = natural_module(typ, n)
    assert _relations_failures(rep) == 0
    if rep.form is not None:
        J = rep.form
        for m in rep.mats.values():
            assert not np.any(m.T @ J + J @ m)


@pytest.mark.parametrize("typ,n,dim", [("G", 2, 7), ("F", 4, 26),
                                       ("E", 6, 27), ("E", 7, 56)])
def test_minimal_module_relations(typ, n, dim):
    rep = minimal_module(typ, n)
    assert rep.dim == dim
    assert _relations_failures(rep) == 0


def _reps():
    yield "adjoint G2", lambda r, t, p: chevalley_algebra("G", 2, p).root_group(r, t), build_root_system("G", 2)
    yield "adjoint F4", lambda r, t, p: chevalley_algebra("F", 4, p).root_group(r, t), build_root_system("F", 4)
    yield "adjoint E6 ad", lambda r, t, p: chevalley_algebra("E", 6, p, "ad").root_group(r, t), build_root_system("E", 6)
    for typ, n in [("C", 3), ("B", 3), ("D", 4)]:
        rep = natural_module(typ, n)
        yield f"natural {typ}{n}", rep.root_group, rep.rs
    for typ, n in [("G", 2), ("F", 4), ("E", 7)]:
        rep = minimal_module(typ, n)
        yield f"minimal {typ}{n}", rep.root_group, rep.rs


@pytest.mark.parametrize("name,action,rs", list(_reps()),
                         ids=[r[0] for r in _reps()])
def test_one_parameter_law(name, action, rs):
    for _ in range(100):
        p = int(rng.choice([2, 3, 5, 7]))
        r = rs.roots[rng.integers(len(rs.roots))]
        t, s = (int(x) for x in rng.integers(0, p, size=2))
        lhs = action(r, t, p) @ action(r, s, p) % p
        assert np.array_equal(lhs, action(r, (t + s) % p, p))


def test_divided_exp_rejects_non_nilpotent():
    with pytest.raises(ChevalleyError):
        divided_exp(np.eye(2, dtype=np.int64), 1, 3)

"""Integral representations: natural classical modules and minimal modules.

A Representation stores an integer matrix for every root vector e_beta of
the Chevalley basis, so that x_beta(t) acts by the divided power
exponential and reductions mod p give the group over GF(p).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial, gcd

import numpy as np

from .chevalley import ChevalleyError, divided_exp, structure_constants
from .roots import RootSystem, add, build_root_system, neg, sub


def _E(n, i, j):
    m = np.zeros((n, n), dtype=np.int64)
    m[i, j] = 1
    return m


def _comm(a, b):
    return a @ b - b @ a


@dataclass
class Representation:
    rs: RootSystem
    dim: int
    mats: dict
    name: str = ""
    form: np.ndarray | None = None
    quad: list | None = field(default=None, repr=False)

    def h(self, i: int) -> np.ndarray:
        a = self.rs.simple[i]
        return _comm(self.mats[a], self.mats[neg(a)])

    def element(self, support, p: int) -> np.ndarray:
        x = np.zeros((self.dim, self.dim), dtype=np.int64)
        for item in support:
            r, c = (item if len(item) == 2 and not isinstance(item[0], int)
                    else (item, 1))
            x = x + c * self.mats[tuple(r)]
        return x % p

    def root_group(self, r, t: int, p: int) -> np.ndarray:
        return divided_exp(self.mats[tuple(r)], t, p)

    def unipotent(self, support, p: int) -> np.ndarray:
        """Product of x_beta(c) in the order given."""
        u = np.eye(self.dim, dtype=np.int64)
        for item in support:
            r, c = (item if len(item) == 2 and not isinstance(item[0], int)
                    else (item, 1))
            u = u @ self.root_group(r, c, p) % p
        return u


def _fill_from_simple(rs: RootSystem, e: list, f: list) -> dict:
    """All root matrices from simple ones through extraspecial brackets."""
    sc = structure_constants(rs.type, rs.rank)
    mats = {}
    for a, x, y in zip(rs.simple, e, f):
        mats[a] = x
        mats[neg(a)] = y
    for xi in rs.positive[rs.rank:]:
        a1, b1 = sc.extraspecial[xi]
        n1 = sc.N(a1, b1)
        top = _comm(mats[a1], mats[b1])
        bot = _comm(mats[neg(a1)], mats[neg(b1)])
        if np.any(top % n1) or np.any(bot % n1):
            raise ChevalleyError("non-integral root matrix")
        mats[xi] = top // n1
        mats[neg(xi)] = bot // (-n1)
    return mats


def _classical_simple(typ: str, n: int):
    """Simple e_i, f_i matrices of the natural module, plus the form."""
    if typ == "A":
        d = n + 1
        e = [_E(d, i, i + 1) for i in range(n)]
        f = [_E(d, i + 1, i) for i in range(n)]
        return e, f, None
    d = 2 * n + (1 if typ == "B" else 0)
    e, f = [], []
    for i in range(n - 1):
        e.append(_E(d, i, i + 1) - _E(d, n + i + 1, n + i))
        f.append(_E(d, i + 1, i) - _E(d, n + i, n + i + 1))
    J = np.zeros((d, d), dtype=np.int64)
    for i in range(n):
        J[i, n + i] = 1
        J[n + i, i] = -1 if typ == "C" else 1
    if typ == "C":
        e.append(_E(d, n - 1, 2 * n - 1))
        f.append(_E(d, 2 * n - 1, n - 1))
    elif typ == "D":
        i, j = n - 2, n - 1
        e.append(_E(d, j, n + i) - _E(d, i, n + j))
        f.append(_E(d, n + i, j) - _E(d, n + j, i))
    else:
        z = 2 * n  # the anisotropic vector v0
        J[z, z] = 2
        e.append(2 * _E(d, n - 1, z) - _E(d, z, 2 * n - 1))
        f.append(_E(d, z, n - 1) - 2 * _E(d, 2 * n - 1, z))
    return e, f, J


@lru_cache(maxsize=None)
def natural_module(typ: str, n: int) -> Representation:
    rs = build_root_system(typ, n)
    e, f, J = _classical_simple(rs.type, n)
    mats = _fill_from_simple(rs, e, f)
    quad = None
    if rs.type in "BD":
        quad = [0] * (2 * n) + ([1] if rs.type == "B" else [])
    return Representation(rs, e[0].shape[0], mats, f"{typ}{n} natural", J,
                          quad)


# -- minimal modules ---------------------------------------------------------

MINIMAL_WEIGHT = {"G2": 1, "F4": 4, "E6": 1, "E7": 7}


def _rank_q(rows):
    """Rank and chosen independent row indices over Q."""
    basis, chosen = [], []
    pivots = []
    for k, r in enumerate(rows):
        v = [Fraction(x) for x in r]
        for b, piv in zip(basis, pivots):
            if v[piv]:
                c = v[piv] / b[piv]
                v = [x - c * y for x, y in zip(v, b)]
        nz = [i for i, x in enumerate(v) if x]
        if nz:
            basis.append(v)
            pivots.append(nz[0])
            chosen.append(k)
    return chosen


def _solve_q(cols, target):
    """Coefficients c with sum c_k cols[k] = target (cols independent)."""
    m = len(cols)
    n = len(target)
    a = [[Fraction(cols[k][i]) for k in range(m)] + [Fraction(target[i])]
         for i in range(n)]
    piv_cols, r = [], 0
    for c in range(m):
        pr = next((i for i in range(r, n) if a[i][c]), None)
        if pr is None:
            continue
        a[r], a[pr] = a[pr], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(n):
            if i != r and a[i][c]:
                fac = a[i][c]
                a[i] = [x - fac * y for x, y in zip(a[i], a[r])]
        piv_cols.append(c)
        r += 1
    if any(a[i][m] for i in range(r, n)):
        raise ChevalleyError("vector outside span")
    out = [Fraction(0)] * m
    for i, c in enumerate(piv_cols):
        out[c] = a[i][m]
    return out


def highest_weight_module(rs: RootSystem, top: int):
    """Irreducible module with highest weight the fundamental weight top.

    Built weight space by weight space: a vector f_i b is determined by its
    images e_j f_i b, and in an irreducible module a vector of weight below
    the top is zero exactly when all these images vanish.
    Returns (weights, e matrices, f matrices) over Q.
    """
    l = rs.rank
    lam = tuple(int(i == top - 1) for i in range(l))
    alpha = [tuple(int(x) for x in rs.cartan[:, j]) for j in range(l)]
    # alpha[j] in Dynkin labels: <alpha_j, alpha_i^vee> for i
    spaces = {lam: 1}
    level = [lam]
    order = [lam]
    E = {}  # (j, mu) -> matrix V_mu -> V_{mu+alpha_j}, as list of rows
    F = {}  # (i, mu) -> matrix V_mu -> V_{mu-alpha_i}
    while level:
        cand_weights = set()
        for mu in level:
            for i in range(l):
                cand_weights.add(sub(mu, alpha[i]))
        nxt = []
        for nu in sorted(cand_weights):
            cands = []
            for i in range(l):
                mu = add(nu, alpha[i])
                for b in range(spaces.get(mu, 0)):
                    cands.append((i, b))
            sigs = []
            for i, b in cands:
                mu = add(nu, alpha[i])
                sig = []
                for j in range(l):
                    tgt = add(nu, alpha[j])
                    dt = spaces.get(tgt, 0)
                    vec = [Fraction(0)] * dt
                    up = add(mu, alpha[j])
                    if dt and (j, mu) in E and spaces.get(up, 0):
                        eb = [E[(j, mu)][r][b] for r in range(spaces[up])]
                        fm = F[(i, up)]
                        for r in range(dt):
                            vec[r] += sum(fm[r][s] * eb[s]
                                          for s in range(len(eb)))
                    if i == j:
                        vec[b] += mu[i]
                    sig.extend(vec)
                sigs.append(sig)
            chosen = _rank_q(sigs)
            if not chosen:
                continue
            spaces[nu] = len(chosen)
            nxt.append(nu)
            order.append(nu)
            basis_sigs = [sigs[k] for k in chosen]
            # E[(j, nu)]: columns are the j-parts of the chosen signatures
            offs = 0
            for j in range(l):
                tgt = add(nu, alpha[j])
                dt = spaces.get(tgt, 0)
                if dt:
                    E[(j, nu)] = [[basis_sigs[c][offs + r]
                                   for c in range(len(chosen))]
                                  for r in range(dt)]
                offs += dt
            for i in range(l):
                mu = add(nu, alpha[i])
                dm = spaces.get(mu, 0)
                if not dm:
                    continue
                cols = []
                for b in range(dm):
                    k = cands.index((i, b))
                    cols.append(_solve_q(basis_sigs, sigs[k]))
                F[(i, mu)] = [[cols[b][r] for b in range(dm)]
                              for r in range(len(chosen))]
        level = nxt
    return spaces, E, F, order


def _assemble(rs, spaces, E, F, weights):
    offs, n = {}, 0
    for w in weights:
        offs[w] = n
        n += spaces[w]
    alpha = [tuple(int(x) for x in rs.cartan[:, j]) for j in range(rs.rank)]
    e = [np.zeros((n, n), dtype=object) for _ in range(rs.rank)]
    f = [np.zeros((n, n), dtype=object) for _ in range(rs.rank)]
    for (j, mu), m in E.items():
        up = add(mu, alpha[j])
        for r, row in enumerate(m):
            for c, v in enumerate(row):
                e[j][offs[up] + r, offs[mu] + c] = v
    for (i, mu), m in F.items():
        dn = sub(mu, alpha[i])
        for r, row in enumerate(m):
            for c, v in enumerate(row):
                f[i][offs[dn] + r, offs[mu] + c] = v
    return e, f, n, offs


def _hnf_rows(vecs):
    """Z-basis (as rows) of the lattice spanned by rational vectors."""
    rows = [[Fraction(x) for x in v] for v in vecs if any(v)]
    if not rows:
        return []
    den = 1
    for r in rows:
        for x in r:
            den = den * x.denominator // gcd(den, x.denominator)
    rows = [[int(x * den) for x in r] for r in rows]
    out = []
    for c in range(len(rows[0])):
        while True:
            nz = [k for k in range(len(rows)) if rows[k][c]]
            if len(nz) <= 1:
                break
            k0 = min(nz, key=lambda k: abs(rows[k][c]))
            for k in nz:
                if k != k0:
                    q = rows[k][c] // rows[k0][c]
                    rows[k] = [x - q * y for x, y in zip(rows[k], rows[k0])]
        nz = [k for k in range(len(rows)) if rows[k][c]]
        if nz:
            v = rows.pop(nz[0])
            if v[c] < 0:
                v = [-x for x in v]
            out.append(v)
        rows = [x for x in rows if any(x)]
    # reduce above-pivot entries so the basis is canonical
    for i in range(len(out)):
        c = next(k for k, x in enumerate(out[i]) if x)
        for j in range(i):
            q = out[j][c] // out[i][c]
            out[j] = [x - q * y for x, y in zip(out[j], out[i])]
    return [[Fraction(x, den) for x in r] for r in out]


def _qnorm(num, den):
    g = np.gcd.reduce(np.append(num.ravel(), den))
    if g > 1:
        num, den = num // g, den // g
    return num, int(den)


def _to_q(m) -> tuple[np.ndarray, int]:
    """Object matrix of Fractions -> (int64 numerator, denominator)."""
    den = 1
    for v in m.flat:
        d = Fraction(v).denominator
        den = den * d // gcd(den, d)
    num = np.array([[int(Fraction(v) * den) for v in row] for row in m],
                   dtype=np.int64)
    return _qnorm(num, den)


def _admissible_basis(mats_q, n, weights, offs, spaces):
    """Z-span of divided powers of the lowering operators applied to v+.

    Lattices are kept per weight space, since every operator maps weight
    spaces to weight spaces.
    """
    powers = []
    for r, (num, den) in mats_q.items():
        if sum(r) < 0:
            acc, dacc = np.eye(n, dtype=np.int64), 1
            for k in range(1, n + 1):
                acc, dacc = _qnorm(acc @ num, dacc * den * k)
                if not acc.any():
                    break
                powers.append((acc, dacc))
    owner = {}
    for w in weights:
        for s in range(spaces[w]):
            owner[offs[w] + s] = w
    lat = {w: [] for w in weights}
    lat[weights[0]] = [[Fraction(1)]]
    changed = True
    while changed:
        changed = False
        for op, dop in powers:
            for w in weights:
                for row in list(lat[w]):
                    dv = 1
                    for x in row:
                        dv = dv * x.denominator // gcd(dv, x.denominator)
                    v = np.zeros(n, dtype=np.int64)
                    v[offs[w]:offs[w] + spaces[w]] = [int(x * dv) for x in row]
                    img = op @ v
                    nz = np.flatnonzero(img)
                    if nz.size == 0:
                        continue
                    tw = owner[int(nz[0])]
                    part = [Fraction(int(x), dop * dv)
                            for x in img[offs[tw]:offs[tw] + spaces[tw]]]
                    new = _hnf_rows(lat[tw] + [part])
                    if new != lat[tw]:
                        lat[tw] = new
                        changed = True
    return lat


@lru_cache(maxsize=None)
def minimal_module(typ: str, rank: int) -> Representation:
    """Integral form of V_min: G2 (7), F4 (26), E6 (27), E7 (56)."""
    rs = build_root_system(typ, rank)
    if rs.name not in MINIMAL_WEIGHT:
        raise ChevalleyError(f"no minimal module for {rs.name}")
    spaces, E, F, weights = highest_weight_module(rs, MINIMAL_WEIGHT[rs.name])
    e, f, n, offs = _assemble(rs, spaces, E, F, weights)
    mats_q = _fill_from_simple_q(rs, e, f)
    lat = _admissible_basis(mats_q, n, weights, offs, spaces)
    cols = []
    for w in weights:
        if len(lat[w]) != spaces[w]:
            raise ChevalleyError("lattice has wrong rank")
        for row in lat[w]:
            v = [Fraction(0)] * n
            for k, x in enumerate(row):
                v[offs[w] + k] = Fraction(x)
            cols.append(v)
    B, dB = _to_q(np.array(cols, dtype=object).T)
    Binv, dBinv = _to_q(_inverse_q(B))
    mats = {}
    for r, (num, den) in mats_q.items():
        z, dz = _qnorm(Binv @ num @ B, dBinv * den)
        if dz != 1:
            raise ChevalleyError("root matrix not integral on lattice")
        mats[r] = z
    return Representation(rs, n, mats, f"{rs.name} minimal")


def _fill_from_simple_q(rs, e, f):
    sc = structure_constants(rs.type, rs.rank)
    mats = {}
    for a, x, y in zip(rs.simple, e, f):
        mats[a] = _to_q(x)
        mats[neg(a)] = _to_q(y)

    def comm(x, y, c):
        (a, da), (b, db) = x, y
        return _qnorm(a @ b - b @ a, da * db * c)

    for xi in rs.positive[rs.rank:]:
        a1, b1 = sc.extraspecial[xi]
        n1 = sc.N(a1, b1)
        mats[xi] = comm(mats[a1], mats[b1], n1)
        num, den = comm(mats[neg(a1)], mats[neg(b1)], n1)
        mats[neg(xi)] = (-num, den)
    return mats


def _inverse_q(B):
    n = B.shape[0]
    a = [[Fraction(B[i, j]) for j in range(n)] +
         [Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for c in range(n):
        pr = next(i for i in range(c, n) if a[i][c])
        a[c], a[pr] = a[pr], a[c]
        inv = 1 / a[c][c]
        a[c] = [x * inv for x in a[c]]
        for i in range(n):
            if i != c and a[i][c]:
                fac = a[i][c]
                a[i] = [x - fac * y for x, y in zip(a[i], a[c])]
    return np.array([row[n:] for row in a], dtype=object)

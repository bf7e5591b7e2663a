"""Chevalley bases, structure constants and root group actions.

Structure constants follow Carter's scheme: N(a1, b1) = r + 1 > 0 on every
extraspecial pair, and everything else is forced by the Chevalley relations.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial

import numpy as np
import scipy.sparse as sp

from .linalg import LieAlgebra, as_mod
from .roots import RootSystem, add, build_root_system, neg, sub


class ChevalleyError(ValueError):
    pass


class StructureConstants:
    """N(alpha, beta) for roots alpha, beta with alpha + beta a root."""

    def __init__(self, rs: RootSystem):
        self.rs = rs
        self.pos: dict = {}
        self.extraspecial: dict = {}
        self._build()

    def _build(self):
        rs = self.rs
        order = {r: k for k, r in enumerate(rs.positive)}
        for xi in rs.positive[rs.rank:]:
            pairs = []
            for a in rs.positive:
                b = sub(xi, a)
                if rs.is_root(b) and sum(b) > 0 and order[a] < order[b]:
                    pairs.append((a, b))
            a1, b1 = min(pairs, key=lambda ab: order[ab[0]])
            n1 = rs.string_down(b1, a1) + 1
            self.extraspecial[xi] = (a1, b1)
            self.pos[(a1, b1)] = n1
            nx = rs.norm(xi)
            for a, b in pairs:
                if (a, b) == (a1, b1):
                    continue
                # four-term relation on (a1, b1, -a, -b)
                t = Fraction(0)
                d1 = sub(b1, a)
                if rs.is_root(d1):
                    t += Fraction(self.N(b1, neg(a)) * self.N(a1, neg(b)),
                                  rs.norm(d1))
                d2 = sub(a1, a)
                if rs.is_root(d2):
                    t += Fraction(self.N(neg(a), a1) * self.N(b1, neg(b)),
                                  rs.norm(d2))
                val = t * nx / n1
                if val.denominator != 1:
                    raise ChevalleyError("non-integral structure constant")
                self.pos[(a, b)] = int(val)

    def N(self, a, b) -> int:
        rs = self.rs
        a, b = tuple(a), tuple(b)
        s = add(a, b)
        if not rs.is_root(s):
            return 0
        ha, hb = sum(a), sum(b)
        if ha > 0 and hb > 0:
            if (a, b) in self.pos:
                return self.pos[(a, b)]
            return -self.pos[(b, a)]
        if ha < 0 and hb < 0:
            return -self.N(neg(a), neg(b))
        # mixed signs: N(a,b)/(c,c) = N(b,c)/(a,a) = N(c,a)/(b,b), c = -(a+b)
        c = neg(s)
        if sum(c) < 0:
            return _exact(self.N(b, c) * rs.norm(c), rs.norm(a))
        return _exact(self.N(c, a) * rs.norm(c), rs.norm(b))


def _exact(num, den):
    if num % den:
        raise ChevalleyError("non-integral structure constant")
    return num // den


@lru_cache(maxsize=None)
def structure_constants(typ: str, rank: int) -> StructureConstants:
    return StructureConstants(build_root_system(typ, rank))


def _coweight_coords(rs: RootSystem, alpha) -> list[int]:
    """h_alpha in the fundamental coweight basis: <alpha_j, alpha^vee>."""
    na = rs.norm(alpha)
    return [_exact(2 * rs.ip(rs.simple[j], alpha), na) for j in range(rs.rank)]


@lru_cache(maxsize=None)
def integer_structure(typ: str, rank: int, lattice: str = "sc"):
    """Integral structure constants as COO triples (i, j, k, c)."""
    if lattice not in ("sc", "ad"):
        raise ChevalleyError(f"unknown lattice {lattice}")
    sc = structure_constants(typ, rank)
    rs = sc.rs
    l = rs.rank
    roots = rs.roots
    idx = {r: l + k for k, r in enumerate(roots)}
    entries = []

    def put(i, j, k, c):
        if c:
            entries.append((i, j, k, c))
            entries.append((j, i, k, -c))

    for r in roots:
        for i in range(l):
            if lattice == "sc":
                w = rs.pairing(r, i)
            else:
                w = r[i]
            put(i, idx[r], idx[r], w)
    for x, a in enumerate(roots):
        for b in roots[x + 1:]:
            s = add(a, b)
            if not any(s):
                if sum(a) > 0:
                    h = (rs.coroot(a) if lattice == "sc"
                         else _coweight_coords(rs, a))
                    for i, c in enumerate(h):
                        put(idx[a], idx[b], i, c)
                else:
                    h = (rs.coroot(b) if lattice == "sc"
                         else _coweight_coords(rs, b))
                    for i, c in enumerate(h):
                        put(idx[a], idx[b], i, -c)
            elif rs.is_root(s):
                put(idx[a], idx[b], idx[s], sc.N(a, b))
    return np.array(entries, dtype=np.int64).reshape(-1, 4)


class ChevalleyAlgebra(LieAlgebra):
    """Lie(G) over GF(p) for the simply connected or adjoint lattice.

    Basis: h_1..h_l (coroots for 'sc', fundamental coweights for 'ad'),
    then e_alpha for the roots in RootSystem.roots order.
    """

    def __init__(self, typ: str, rank: int, p: int, lattice: str = "sc"):
        self.rs = build_root_system(typ, rank)
        self.lattice = lattice
        dim = self.rs.rank + len(self.rs.roots)
        e = integer_structure(self.rs.type, rank, lattice)
        self.int_struct = sp.csr_matrix(
            (e[:, 3], (e[:, 0], e[:, 1] * dim + e[:, 2])), shape=(dim, dim * dim))
        super().__init__(self.int_struct, p, dim)

    def root_index(self, r) -> int:
        return self.rs.rank + self.rs.index[tuple(r)]

    def element(self, support) -> np.ndarray:
        """Vector of sum c e_beta over (beta, c) pairs or plain roots."""
        x = np.zeros(self.dim, dtype=np.int64)
        for item in support:
            if len(item) == 2 and not isinstance(item[0], int):
                r, c = item
            else:
                r, c = item, 1
            x[self.root_index(r)] += c
        return x % self.p

    def int_ad(self, x) -> np.ndarray:
        """Integer ad matrix (column j = [x, b_j]) of an integral vector."""
        x = np.asarray(x, dtype=np.int64).reshape(1, -1)
        m = (sp.csr_matrix(x) @ self.int_struct).toarray()
        return m.reshape(self.dim, self.dim).T

    def root_group(self, r, t: int = 1) -> np.ndarray:
        """Ad x_r(t) on Lie(G) over GF(p)."""
        x = np.zeros(self.dim, dtype=np.int64)
        x[self.root_index(r)] = 1
        return divided_exp(self.int_ad(x), t, self.p)


@lru_cache(maxsize=None)
def chevalley_algebra(typ: str, rank: int, p: int,
                      lattice: str = "sc") -> ChevalleyAlgebra:
    return ChevalleyAlgebra(typ, rank, p, lattice)


def ad_matrix(alg: LieAlgebra, x) -> np.ndarray:
    return alg.ad(x)


def divided_exp(x_int: np.ndarray, t: int, p: int) -> np.ndarray:
    """sum_k t^k X^k / k! mod p for a nilpotent integer matrix X."""
    x_int = np.asarray(x_int, dtype=np.int64)
    n = x_int.shape[0]
    term = np.eye(n, dtype=np.int64)
    out = np.eye(n, dtype=np.int64)
    k = 0
    while True:
        k += 1
        term = term @ x_int
        if not np.any(term):
            break
        if k > n:
            raise ChevalleyError("matrix is not nilpotent")
        if np.abs(term).max() > 2 ** 40:
            raise ChevalleyError("entries too large")
        f = factorial(k)
        if np.any(term % f):
            raise ChevalleyError(f"X^{k}/{k}! is not integral")
        out = (out + (term // f) % p * pow(t, k, p)) % p
    return as_mod(out, p)


def unipotent_product(mats, p: int) -> np.ndarray:
    out = None
    for m in mats:
        out = m if out is None else out @ m % p
    return out

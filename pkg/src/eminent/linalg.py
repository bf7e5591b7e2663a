"""Exact linear algebra over GF(p) and Lie subalgebra invariants.

Matrices are numpy int64 arrays with entries in [0, p).  Vectors are rows;
subspaces are stored as reduced row echelon bases.  For p = 2 elimination
runs on bit-packed uint64 rows.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.sparse as sp


class LinalgError(ValueError):
    pass


def _check_prime(p: int):
    if p < 2 or any(p % q == 0 for q in range(2, int(p ** 0.5) + 1)):
        raise LinalgError(f"{p} is not a prime")


def as_mod(a, p: int) -> np.ndarray:
    return np.mod(np.asarray(a, dtype=np.int64), p)


# -- packed GF(2) ------------------------------------------------------------

def pack_gf2(a: np.ndarray) -> np.ndarray:
    a = np.asarray(a, dtype=np.uint8) & 1
    rows, cols = a.shape
    words = (cols + 63) // 64
    pad = np.zeros((rows, words * 64), dtype=np.uint8)
    pad[:, :cols] = a
    return np.packbits(pad, axis=1, bitorder="little").view(np.uint64)


def unpack_gf2(w: np.ndarray, cols: int) -> np.ndarray:
    bits = np.unpackbits(w.view(np.uint8), axis=1, bitorder="little")
    return bits[:, :cols].astype(np.int64)


def _rref_gf2(a: np.ndarray) -> tuple[np.ndarray, list[int]]:
    rows, cols = a.shape
    w = pack_gf2(a)
    r, pivots = 0, []
    for c in range(cols):
        if r == rows:
            break
        word, bit = divmod(c, 64)
        colbits = (w[r:, word] >> np.uint64(bit)) & np.uint64(1)
        nz = np.flatnonzero(colbits)
        if nz.size == 0:
            continue
        k = r + nz[0]
        if k != r:
            w[[r, k]] = w[[k, r]]
        hits = np.flatnonzero((w[:, word] >> np.uint64(bit)) & np.uint64(1))
        hits = hits[hits != r]
        if hits.size:
            w[hits] ^= w[r]
        pivots.append(c)
        r += 1
    return unpack_gf2(w[:r], cols), pivots


def _rref_generic(a: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    a = a.copy()
    rows, cols = a.shape
    r, pivots = 0, []
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(a[r:, c])
        if nz.size == 0:
            continue
        k = r + nz[0]
        if k != r:
            a[[r, k]] = a[[k, r]]
        inv = pow(int(a[r, c]), -1, p)
        if inv != 1:
            a[r] = a[r] * inv % p
        col = a[:, c].copy()
        col[r] = 0
        hits = np.flatnonzero(col)
        if hits.size:
            a[hits] = (a[hits] - np.outer(col[hits], a[r])) % p
        pivots.append(c)
        r += 1
    return a[:r], pivots


def rref(a, p: int, packed: bool | None = None):
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    a = as_mod(a, p)
    if a.ndim != 2:
        raise LinalgError("expected a matrix")
    if a.shape[0] == 0 or a.shape[1] == 0:
        return np.zeros((0, a.shape[1]), dtype=np.int64), []
    if packed is None:
        packed = p == 2
    if packed:
        if p != 2:
            raise LinalgError("packed elimination needs p = 2")
        return _rref_gf2(a)
    return _rref_generic(a, p)


def rank(a, p: int, packed: bool | None = None) -> int:
    return len(rref(a, p, packed)[1])


def kernel(a, p: int) -> np.ndarray:
    """Row basis of {v : a @ v = 0}."""
    a = as_mod(a, p)
    n = a.shape[1]
    r, piv = rref(a, p)
    free = [c for c in range(n) if c not in set(piv)]
    out = np.zeros((len(free), n), dtype=np.int64)
    for k, f in enumerate(free):
        out[k, f] = 1
        for i, c in enumerate(piv):
            out[k, c] = (-r[i, f]) % p
    return out


def solve(a, b, p: int) -> np.ndarray | None:
    """One solution x of a @ x = b, or None if there is none."""
    a, b = as_mod(a, p), as_mod(b, p).reshape(-1)
    aug = np.concatenate([a, b[:, None]], axis=1)
    r, piv = rref(aug, p)
    n = a.shape[1]
    if piv and piv[-1] == n:
        return None
    x = np.zeros(n, dtype=np.int64)
    for i, c in enumerate(piv):
        x[c] = r[i, n]
    return x


def matpow(a, k: int, p: int) -> np.ndarray:
    a = as_mod(a, p)
    out = np.eye(a.shape[0], dtype=np.int64)
    for _ in range(k):
        out = out @ a % p
    return out


@dataclass
class Subspace:
    """Row space of an RREF basis inside GF(p)^n."""
    basis: np.ndarray
    pivots: list
    p: int
    n: int

    @classmethod
    def span(cls, rows, p: int, n: int | None = None) -> "Subspace":
        rows = as_mod(rows, p)
        if rows.ndim == 1:
            rows = rows[None, :]
        if n is None:
            n = rows.shape[1]
        rows = rows.reshape(-1, n)
        b, piv = rref(rows, p)
        return cls(b, piv, p, n)

    @property
    def dim(self) -> int:
        return len(self.pivots)

    def coords(self, v) -> np.ndarray:
        """Coordinates of vectors in this subspace (rows in, rows out)."""
        v = as_mod(v, self.p)
        c = v[..., self.pivots]
        if np.any((c @ self.basis - v) % self.p):
            raise LinalgError("vector not in subspace")
        return c

    def contains(self, v) -> bool:
        v = as_mod(v, self.p)
        c = v[..., self.pivots]
        return not np.any((c @ self.basis - v) % self.p)

    def __eq__(self, other) -> bool:
        return (self.dim == other.dim and self.pivots == other.pivots
                and np.array_equal(self.basis, other.basis))


class Accumulator:
    """Grows an RREF row span chunk by chunk.

    New rows are first reduced against the current basis with a float
    matmul, which is exact while rank * p^2 stays below 2^53.
    """

    def __init__(self, n: int, p: int, chunk: int = 512):
        self.n, self.p, self.chunk = n, p, chunk
        self.basis = np.zeros((0, n), dtype=np.int64)
        self.pivots: list[int] = []
        self.pending = []
        self.count = 0

    def add(self, rows):
        rows = as_mod(rows, self.p).reshape(-1, self.n)
        if len(rows) == 0:
            return
        self.pending.append(rows)
        self.count += len(rows)
        if self.count >= self.chunk:
            self.flush()

    def _reduce(self, rows):
        if not self.pivots:
            return rows
        c = rows[:, self.pivots].astype(np.float64)
        red = np.rint(c @ self.basis.astype(np.float64)).astype(np.int64)
        return (rows - red) % self.p

    def flush(self):
        if not self.pending:
            return
        rows = np.concatenate(self.pending)
        self.pending, self.count = [], 0
        for k in range(0, len(rows), self.chunk):
            block = self._reduce(rows[k:k + self.chunk])
            block = block[np.any(block, axis=1)]
            if len(block) == 0:
                continue
            new, piv = rref(block, self.p)
            if self.pivots:
                c = self.basis[:, piv].astype(np.float64)
                red = np.rint(c @ new.astype(np.float64)).astype(np.int64)
                self.basis = (self.basis - red) % self.p
            allp = self.pivots + piv
            order = np.argsort(allp)
            self.basis = np.concatenate([self.basis, new])[order]
            self.pivots = [allp[i] for i in order]

    def rank(self) -> int:
        self.flush()
        return len(self.pivots)

    def subspace(self) -> Subspace:
        self.flush()
        return Subspace(self.basis, list(self.pivots), self.p, self.n)


# -- Jordan blocks -------------------------------------------------------------

def jordan_partition(x, p: int, kind: str = "nilpotent") -> list[int]:
    """Jordan block sizes (descending) of a nilpotent or unipotent matrix."""
    _check_prime(p)
    x = as_mod(x, p)
    n = x.shape[0]
    if kind == "unipotent":
        x = (x - np.eye(n, dtype=np.int64)) % p
    elif kind != "nilpotent":
        raise LinalgError(f"unknown kind {kind}")
    ranks = [n]
    power = x.copy()
    while ranks[-1] > 0:
        r = rank(power, p)
        if r == ranks[-1]:
            raise LinalgError(f"matrix is not {kind}")
        ranks.append(r)
        power = power @ x % p
    ranks.append(0)
    sizes = []
    for s in range(1, len(ranks) - 1):
        m = ranks[s - 1] - 2 * ranks[s] + ranks[s + 1]
        sizes += [s] * m
    return sorted(sizes, reverse=True)


# -- Lie algebras --------------------------------------------------------------

class LieAlgebra:
    """Lie algebra over GF(p) given by structure constants.

    struct is a sparse (dim, dim*dim) matrix with struct[i, j*dim + k] the
    coefficient of basis element k in [b_i, b_j].
    """

    def __init__(self, struct, p: int, dim: int):
        _check_prime(p)
        self.p, self.dim = p, dim
        s = sp.csr_matrix(struct, dtype=np.int64, copy=True)
        s.data %= p
        s.eliminate_zeros()
        self.struct = s

    @classmethod
    def from_tensor(cls, gamma, p: int) -> "LieAlgebra":
        g = np.asarray(gamma, dtype=np.int64)
        d = g.shape[0]
        return cls(sp.csr_matrix(g.reshape(d, d * d)), p, d)

    def ad(self, x) -> np.ndarray:
        """Matrix with column j equal to [x, b_j]."""
        x = as_mod(x, self.p).reshape(1, -1)
        m = (sp.csr_matrix(x) @ self.struct).toarray().reshape(self.dim,
                                                                self.dim)
        return m.T % self.p

    def bracket(self, x, y) -> np.ndarray:
        return self.ad(x) @ as_mod(y, self.p) % self.p

    def tensor(self) -> np.ndarray:
        d = self.dim
        return self.struct.toarray().reshape(d, d, d)


def bracket_span(alg: LieAlgebra, a: np.ndarray, b: np.ndarray) -> Subspace:
    """Span of [a_i, b_j] over the rows of a and b."""
    acc = Accumulator(alg.dim, alg.p)
    b = as_mod(b, alg.p)
    for row in as_mod(a, alg.p):
        if len(b):
            acc.add((alg.ad(row) @ b.T % alg.p).T)
    return acc.subspace()


def _series(alg: LieAlgebra, sub, lower: bool) -> list[int]:
    s = sub if isinstance(sub, Subspace) else Subspace.span(sub, alg.p,
                                                              alg.dim)
    terms = [s]
    while True:
        cur = terms[-1]
        left = s.basis if lower else cur.basis
        nxt = bracket_span(alg, left, cur.basis)
        if nxt.dim == cur.dim:
            break
        terms.append(nxt)
        if nxt.dim == 0:
            break
    return terms


def derived_series(alg: LieAlgebra, sub) -> list[int]:
    """Dimensions of C, [C,C], ... until two successive terms agree."""
    return [t.dim for t in _series(alg, sub, False)]


def derived_terms(alg: LieAlgebra, sub) -> list[Subspace]:
    return _series(alg, sub, False)


def lower_central_series(alg: LieAlgebra, sub) -> list[int]:
    return [t.dim for t in _series(alg, sub, True)]


def normalizer(alg: LieAlgebra, sub) -> Subspace:
    """{x : [x, s] in S for all s in S} inside the whole algebra."""
    s = sub if isinstance(sub, Subspace) else Subspace.span(sub, alg.p,
                                                              alg.dim)
    p = alg.p
    if s.dim == 0:
        return Subspace.span(np.eye(alg.dim, dtype=np.int64), p)
    ann = kernel(s.basis, p)  # functionals vanishing on S
    whole = Subspace.span(np.eye(alg.dim, dtype=np.int64), p)
    if len(ann) == 0:
        return whole
    acc = Accumulator(alg.dim, p)
    for row in s.basis:
        # [x, s] = -ad(s) x
        acc.add(ann @ alg.ad(row) % p)
    if acc.rank() == 0:
        return whole
    return Subspace.span(kernel(acc.subspace().basis, p), p, alg.dim)


def subalgebra_structure(alg: LieAlgebra, sub) -> np.ndarray:
    """gamma[i, j, k]: coefficient of c_k in [c_i, c_j] for a basis of sub."""
    s = sub if isinstance(sub, Subspace) else Subspace.span(sub, alg.p,
                                                              alg.dim)
    d, p = s.dim, alg.p
    gamma = np.zeros((d, d, d), dtype=np.int64)
    for i, row in enumerate(s.basis):
        prods = (alg.ad(row) @ s.basis.T % p).T
        gamma[i] = s.coords(prods)
    return gamma


def _group_keys(keys):
    """Map rows of an integer array to consecutive group ids."""
    _, inv = np.unique(keys, axis=0, return_inverse=True)
    return inv.reshape(-1)


def derivation_algebra(gamma, p: int, degrees=None) -> tuple[int, int, list]:
    """Derivations of the algebra with structure constants gamma.

    gamma[i, j, k] is the coefficient of c_k in [c_i, c_j].  If degrees is
    given (one integer vector per basis element, with gamma homogeneous),
    the linear system splits into one block per degree, which keeps large
    graded algebras tractable.  Returns (dim Der, dim [Der, Der], basis of
    Der as sparse d x d matrices acting on coordinate columns).
    """
    g = as_mod(gamma, p)
    d = g.shape[0]
    if d == 0:
        return 0, 0, []
    deg = (np.zeros((d, 1), dtype=np.int64) if degrees is None
           else np.asarray(degrees, dtype=np.int64).reshape(d, -1))
    nz = np.argwhere(g)
    val = g[nz[:, 0], nz[:, 1], nz[:, 2]]
    ks = np.arange(d)
    eqs, unks, coef = [], [], []
    # D[c_i, c_j] - [D c_i, c_j] - [c_i, D c_j] = 0 for i < j, coefficient k
    sel = nz[:, 0] < nz[:, 1]
    i, j, m = nz[sel].T
    v = val[sel]
    eqs.append(((i * d + j)[:, None] * d + ks[None, :]).ravel())
    unks.append((ks[None, :] * d + m[:, None]).ravel())
    coef.append(np.repeat(v, d))
    for which in (0, 1):
        a_, b_, c_ = nz.T
        # term 2: gamma[m, j, k] D[m, i]; term 3: gamma[i, m, k] D[m, j]
        fixed = b_ if which == 0 else a_
        mm = a_ if which == 0 else b_
        for other in range(d):
            if which == 0:
                ok = other < fixed
                ii, jj = np.full(ok.sum(), other), fixed[ok]
            else:
                ok = fixed < other
                ii, jj = fixed[ok], np.full(ok.sum(), other)
            if not ok.any():
                continue
            eqs.append((ii * d + jj) * d + c_[ok])
            unks.append(mm[ok] * d + other)
            coef.append(-val[ok])
    eqs = np.concatenate(eqs)
    unks = np.concatenate(unks)
    coef = np.concatenate(coef) % p
    # block of an unknown D[a, b] is deg a - deg b
    ua, ub = unks // d, unks % d
    blocks = _group_keys(deg[ua] - deg[ub])
    total_rank = 0
    ders = []
    order = np.lexsort((eqs, blocks))
    eqs, unks, coef, blocks = eqs[order], unks[order], coef[order], \
        blocks[order]
    cuts = np.flatnonzero(np.diff(blocks)) + 1
    seen_unknowns = set()
    for lo, hi in zip(np.r_[0, cuts], np.r_[cuts, len(blocks)]):
        be, bu, bc = eqs[lo:hi], unks[lo:hi], coef[lo:hi]
        cols, ucol = np.unique(bu, return_inverse=True)
        seen_unknowns.update(cols.tolist())
        rows, urow = np.unique(be, return_inverse=True)
        acc = Accumulator(len(cols), p)
        step = max(1, 4_000_000 // max(1, len(cols)))
        bounds = np.searchsorted(urow, np.arange(0, len(rows) + step, step))
        for r0, r1, s0, s1 in zip(range(0, len(rows), step),
                                  range(step, len(rows) + step, step),
                                  bounds[:-1], bounds[1:]):
            nrow = min(r1, len(rows)) - r0
            mat = np.zeros((nrow, len(cols)), dtype=np.int64)
            np.add.at(mat, (urow[s0:s1] - r0, ucol[s0:s1]), bc[s0:s1])
            mat %= p
            acc.add(mat[np.any(mat, axis=1)])
        sub = acc.subspace()
        total_rank += sub.dim
        for vec in kernel(sub.basis, p) if sub.dim else np.eye(
                len(cols), dtype=np.int64):
            nzv = np.flatnonzero(vec)
            ders.append(sp.csr_matrix(
                (vec[nzv], (cols[nzv] // d, cols[nzv] % d)), shape=(d, d)))
    for u in range(d * d):
        if u not in seen_unknowns:
            ders.append(sp.csr_matrix(([1], ([u // d], [u % d])),
                                      shape=(d, d)))
    dim_der = d * d - total_rank
    if len(ders) != dim_der:
        raise LinalgError("derivation count mismatch")
    return dim_der, _commutator_rank(ders, deg, p, d), ders


def _commutator_rank(ders, deg, p, d) -> int:
    """dim of the span of [D_a, D_b], split by degree."""
    if len(ders) < 2:
        return 0
    dkey = []
    for D in ders:
        coo = D.tocoo()
        dkey.append(tuple(deg[coo.row[0]] - deg[coo.col[0]]))
    accs: dict = {}
    for a in range(len(ders)):
        for b in range(a + 1, len(ders)):
            c = ders[a] @ ders[b] - ders[b] @ ders[a]
            c.data %= p
            c.eliminate_zeros()
            if c.nnz == 0:
                continue
            key = tuple(np.add(dkey[a], dkey[b]))
            if key not in accs:
                accs[key] = ({}, [])
            idx, rows = accs[key]
            coo = c.tocoo()
            flat = coo.row * d + coo.col
            for f in flat:
                if f not in idx:
                    idx[f] = len(idx)
            rows.append((flat, coo.data))
    total = 0
    for idx, rows in accs.values():
        acc = Accumulator(len(idx), p)
        buf = np.zeros((len(rows), len(idx)), dtype=np.int64)
        for r, (flat, data) in enumerate(rows):
            buf[r, [idx[f] for f in flat]] = data
        acc.add(buf)
        total += acc.rank()
    return total

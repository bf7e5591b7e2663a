"""Nilpotent and unipotent classes in classical groups.

Classes are described by orthogonal decompositions of the natural module
into indecomposable summands V(m), W(m), W_l(m), D(m) and R.  In odd
characteristic the Jordan type decides everything.  In characteristic 2
several candidate decompositions can share a Jordan type; decompose()
builds an explicit model for each candidate and keeps the one whose form
invariants agree with the input.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .linalg import as_mod, jordan_partition, kernel
from .modules import natural_module
from .roots import beta_l_root, build_root_system, root_string


class ClassicalError(ValueError):
    pass


FLAVORS = {"A": "linear", "B": "orthogonal_odd", "C": "symplectic",
           "D": "orthogonal_even"}


@dataclass
class FormedSpace:
    flavor: str
    dim: int
    p: int
    form: np.ndarray | None
    quad: list | None = None

    @property
    def orthogonal(self) -> bool:
        return self.flavor.startswith("orthogonal")


def formed_space(typ: str, rank: int, p: int) -> FormedSpace:
    rep = natural_module(typ, rank)
    flavor = FLAVORS[rep.rs.type]
    quad = rep.quad if (p == 2 and rep.quad is not None) else None
    return FormedSpace(flavor, rep.dim, p, rep.form, quad)


def classical_realization(typ: str, rank: int, p: int):
    """(natural module with integral root matrices, formed space)."""
    return natural_module(typ, rank), formed_space(typ, rank, p)


# -- decompositions ------------------------------------------------------------

@dataclass(frozen=True, order=True)
class Summand:
    kind: str  # 'W', 'Wl', 'V', 'D', 'R'
    m: int
    l: int = 0

    def __str__(self):
        if self.kind == "Wl":
            return f"W_{self.l}({self.m})"
        if self.kind == "R":
            return "R"
        return f"{self.kind}({self.m})"

    @property
    def dim(self) -> int:
        return {"W": 2 * self.m, "Wl": 2 * self.m, "V": self.m,
                "D": 2 * self.m - 1, "R": 1}[self.kind]

    @property
    def blocks(self) -> list[int]:
        if self.kind in ("W", "Wl"):
            return [self.m, self.m]
        if self.kind == "D":
            return [self.m, self.m - 1] if self.m > 1 else [1]
        return [self.m] if self.kind == "V" else [1]


def _skey(s: Summand):
    group = {"W": 0, "Wl": 0, "V": 1, "D": 2, "R": 3}[s.kind]
    return (group, -s.m, s.kind == "Wl", -s.l)


class Decomposition(tuple):
    """Sorted tuple of summands."""

    def __new__(cls, summands):
        return super().__new__(cls, sorted(summands, key=_skey))

    def __str__(self):
        out, i = [], 0
        while i < len(self):
            j = i
            while j < len(self) and self[j] == self[i]:
                j += 1
            out.append(str(self[i]) + (f"^{j - i}" if j - i > 1 else ""))
            i = j
        return "+".join(out) if out else "0"

    def __repr__(self):
        return f"Decomposition({str(self)!r})"

    @property
    def dim(self) -> int:
        return sum(s.dim for s in self)

    @property
    def partition(self) -> list[int]:
        return sorted((b for s in self for b in s.blocks), reverse=True)

    def count(self, kind: str) -> int:
        return sum(1 for s in self if s.kind == kind)


_TOKEN = re.compile(r"^(W|V|D)(?:_(\d+))?\((\d+)\)(?:\^(\d+))?$|^R(?:\^(\d+))?$")


def parse_decomposition(text: str) -> Decomposition:
    out = []
    for tok in text.replace(" ", "").split("+"):
        m = _TOKEN.match(tok)
        if not m:
            raise ClassicalError(f"cannot parse summand '{tok}'")
        if tok.startswith("R"):
            out += [Summand("R", 1)] * int(m.group(5) or 1)
            continue
        kind, l, size, k = m.group(1), m.group(2), int(m.group(3)), \
            int(m.group(4) or 1)
        if l is not None:
            out += [Summand("Wl", size, int(l))] * k
        else:
            out += [Summand(kind, size)] * k
    return Decomposition(out)


# -- enumeration ---------------------------------------------------------------

def _partitions(n: int, top: int | None = None):
    top = n if top is None else top
    if n == 0:
        yield []
        return
    for k in range(min(n, top), 0, -1):
        for rest in _partitions(n - k, k):
            yield [k] + rest


def _counts(lam) -> dict:
    c: dict[int, int] = {}
    for x in lam:
        c[x] = c.get(x, 0) + 1
    return c


def _odd_char(flavor: str, lam) -> Decomposition | None:
    """The unique decomposition in odd characteristic, or None if illegal."""
    if flavor == "linear":
        return Decomposition([Summand("V", m) for m in lam])
    vpar = 0 if flavor == "symplectic" else 1
    out = []
    for m, c in _counts(lam).items():
        if m % 2 == vpar:
            out += [Summand("W", m)] * (c // 2) + [Summand("V", m)] * (c % 2)
        elif c % 2:
            return None
        else:
            out += [Summand("W", m)] * (c // 2)
    return Decomposition(out)


def _size_options(case: str, s: int, c: int):
    """Ways to cover c Jordan blocks of size s by summands of one case."""
    opts = []
    wl_range = {"sp_nil": [l for l in range(1, s) if 2 * l < s],
                "o_nil": [l for l in range(1, s + 1) if 2 * l > s + 1],
                "unip": []}[case]
    vmax = 2 if (case in ("sp_nil", "unip") and s % 2 == 0) else 0
    for b in range(vmax + 1):
        for wl in [None] + wl_range:
            rest = c - b - (2 if wl else 0)
            if rest < 0 or rest % 2:
                continue
            opt = [Summand("W", s)] * (rest // 2) + [Summand("V", s)] * b
            if wl:
                opt.append(Summand("Wl", s, wl))
            opts.append(opt)
    return opts


def _legal(case: str, summands) -> bool:
    wls = sorted((s for s in summands if s.kind == "Wl"), key=lambda s: -s.m)
    for a, b in zip(wls, wls[1:]):
        if not (a.m > b.m and a.l > b.l and a.m - a.l > b.m - b.l):
            return False
    if case == "sp_nil":
        for v in (s for s in summands if s.kind == "V"):
            q = v.m // 2
            for w in wls:
                if not (q > w.m - w.l or q < w.l):
                    return False
    ds = [s for s in summands if s.kind == "D"]
    if ds and wls and not ds[0].m < wls[-1].l:
        return False
    return True


def _case(flavor: str, kind: str) -> str:
    if kind == "unipotent":
        return "unip"
    return "sp_nil" if flavor == "symplectic" else "o_nil"


def _candidates(flavor: str, kind: str, lam) -> list[Decomposition]:
    """Characteristic 2 decompositions with Jordan type lam."""
    case = _case(flavor, kind)
    lam = sorted(lam, reverse=True)
    heads = [([], lam)]
    if flavor == "orthogonal_odd" and kind == "nilpotent":
        heads = []
        for m in sorted(set(lam)):
            rest = list(lam)
            rest.remove(m)
            if m > 1:
                if m - 1 not in rest:
                    continue
                rest.remove(m - 1)
            heads.append(([Summand("D", m)], rest))
    out = set()
    for head, rest in heads:
        combos = [head]
        for s, c in sorted(_counts(rest).items(), reverse=True):
            combos = [x + o for x in combos for o in _size_options(case, s, c)]
        for x in combos:
            if _legal(case, x):
                out.add(Decomposition(x))
    return sorted(out, key=str)


def enumerate_decompositions(flavor: str, dim: int, p: int,
                             kind: str = "nilpotent") -> list[Decomposition]:
    """All legal decompositions, one per O(V)- or Sp(V)-class."""
    if kind not in ("nilpotent", "unipotent"):
        raise ClassicalError(f"unknown kind {kind}")
    if flavor.startswith("orthogonal") and (dim % 2 == 1) != (
            flavor == "orthogonal_odd"):
        raise ClassicalError("dimension parity does not match the form")
    if flavor == "symplectic" and dim % 2:
        raise ClassicalError("symplectic spaces have even dimension")
    out = set()
    if p != 2 or flavor == "linear":
        for lam in _partitions(dim):
            d = _odd_char(flavor, lam)
            if d is not None:
                out.add(d)
    elif flavor == "orthogonal_odd" and kind == "unipotent":
        for d in enumerate_decompositions("orthogonal_even", dim - 1, 2,
                                          "unipotent"):
            out.add(Decomposition(list(d) + [Summand("R", 1)]))
    else:
        for lam in _partitions(dim):
            out.update(_candidates(flavor, kind, lam))
    return sorted(out, key=lambda d: (d.partition, str(d)), reverse=True)


# -- invariants ----------------------------------------------------------------

def _vanishes(M: np.ndarray, p: int) -> bool:
    """Does u -> u^T M u vanish identically?"""
    M = M % p
    return not np.any(np.diag(M)) and not np.any((M + M.T) % p)


def _q_vanishes(Y: np.ndarray, J, quad, p: int) -> bool:
    """Does u -> Q(Y u) vanish identically?"""
    G = Y.T @ J @ Y % p
    U = np.triu(J, 1)
    qv = (np.asarray(quad) @ (Y * Y) + np.einsum("ik,ij,jk->k", Y, U, Y)) % p
    off = G.copy()
    np.fill_diagonal(off, 0)
    return not np.any(qv) and not np.any(off % p)


def form_signature(x, J, quad, p: int, kind: str) -> tuple:
    """Conjugation invariants of x (nilpotent) or x = u - 1 (unipotent)."""
    x = as_mod(x, p)
    n = len(x)
    lam = jordan_partition(x, p, "nilpotent")
    J = as_mod(J, p)
    sig = [tuple(lam)]
    pows = [np.eye(n, dtype=np.int64)]
    for _ in range(max(lam) + 1):
        pows.append(pows[-1] @ x % p)
    for m in range(1, max(lam) + 1):
        K = kernel(pows[m], p).T
        f1 = next(k for k in range(m + 1)
                  if _vanishes((pows[k + 1] @ K).T @ J @ (pows[k] @ K), p))
        f2 = tuple(not _vanishes((pows[a] @ K).T @ J @ K, p)
                   for a in range(m))
        f3 = None
        if quad is not None:
            f3 = next(k for k in range(m + 1)
                      if _q_vanishes(pows[k] @ K % p, J, quad, p))
        sig.append((m, f1, f2, f3))
    return tuple(sig)


# -- models --------------------------------------------------------------------

def _E(n, i, j):
    m = np.zeros((n, n), dtype=np.int64)
    m[i, j] = 1
    return m


def _hyperbolic(m: int, sign: int) -> np.ndarray:
    J = np.zeros((2 * m, 2 * m), dtype=np.int64)
    for i in range(m):
        J[i, m + i] = 1
        J[m + i, i] = sign
    return J


def _levi(m: int) -> np.ndarray:
    x = np.zeros((2 * m, 2 * m), dtype=np.int64)
    for i in range(m - 1):
        x += _E(2 * m, i, i + 1) - _E(2 * m, m + i + 1, m + i)
    return x


def _d_plus(m: int, i: int, j: int) -> np.ndarray:
    """e_{eps_i + eps_j} in D_m (0-based, i < j)."""
    return _E(2 * m, j, m + i) - _E(2 * m, i, m + j)


def _gl_unipotent(m: int) -> np.ndarray:
    a = np.eye(m, dtype=np.int64) + np.diag(np.ones(m - 1, dtype=np.int64), 1)
    ainv = np.round(np.linalg.inv(a)).astype(np.int64)
    out = np.zeros((2 * m, 2 * m), dtype=np.int64)
    out[:m, :m] = a
    out[m:, m:] = ainv.T
    return out


def _piece(s: Summand, flavor: str, kind: str, p: int):
    """(matrix, form, quad) of one summand model in characteristic 2."""
    m = s.m
    sym = flavor == "symplectic"
    if s.kind == "D":
        k = m - 1
        J = np.zeros((2 * m - 1, 2 * m - 1), dtype=np.int64)
        J[:2 * k, :2 * k] = _hyperbolic(k, 1)
        J[2 * k, 2 * k] = 2
        x = np.zeros_like(J)
        x[:2 * k, :2 * k] = _levi(k)
        if k:
            x[2 * k, 2 * k - 1] = -1
            x[k - 1, 2 * k] = 2
        return x, J, [0] * (2 * k) + [1]
    J = _hyperbolic(m if s.kind != "V" else m // 2, -1 if sym else 1)
    q = None if sym else [0] * len(J)
    if kind == "nilpotent":
        if s.kind == "W":
            x = _levi(m)
        elif s.kind == "V":
            h = m // 2
            x = _levi(h) + _E(m, h - 1, m - 1)
        elif sym:
            x = _levi(m) + _E(2 * m, s.l - 1, m + s.l - 1)
        else:
            x = _levi(m) + _d_plus(m, 2 * s.l - m - 2, m - 1)
        return x, J, q
    if s.kind == "W":
        return _gl_unipotent(m), J, q
    if s.kind == "V" and sym:
        h = m // 2
        u = np.eye(m, dtype=np.int64)
        for i in range(h - 1):
            u = u @ (np.eye(m, dtype=np.int64) + _E(m, i, i + 1)
                     - _E(m, h + i + 1, h + i))
        u = u @ (np.eye(m, dtype=np.int64) + _E(m, h - 1, m - 1))
        return u, J, q
    raise ClassicalError(f"no single-summand model for {s}")


def _vpair(a: int, b: int):
    """u_l in D_{a+b} with l = a + 1, giving V(2a) + V(2b)."""
    n, l = a + b, a + 1
    I = np.eye(2 * n, dtype=np.int64)
    u = I.copy()
    for i in range(n - 1):
        u = u @ (I + _E(2 * n, i, i + 1) - _E(2 * n, n + i + 1, n + i))
    u = u @ (I + _d_plus(n, 2 * l - n - 2, n - 1))
    return u, _hyperbolic(n, 1), [0] * (2 * n)


def _blockdiag(pieces):
    n = sum(len(J) for _, J, _ in pieces)
    X = np.zeros((n, n), dtype=np.int64)
    F = np.zeros((n, n), dtype=np.int64)
    quad, k, has_q = [], 0, False
    for x, J, q in pieces:
        d = len(J)
        X[k:k + d, k:k + d] = x
        F[k:k + d, k:k + d] = J
        if q is not None:
            has_q = True
        quad += list(q) if q is not None else [0] * d
        k += d
    return X, F, (quad if has_q else None)


def model(d: Decomposition, flavor: str, kind: str):
    """Explicit characteristic 2 representative (x, form, quad) of d."""
    parts = list(d)
    pieces = []
    if kind == "unipotent" and flavor != "symplectic":
        vs = sorted((s.m for s in parts if s.kind == "V"), reverse=True)
        if len(vs) % 2:
            raise ClassicalError(f"{d} does not meet SO(V)")
        for a, b in zip(vs[::2], vs[1::2]):
            pieces.append(_vpair(a // 2, b // 2))
        parts = [s for s in parts if s.kind != "V"]
    pieces += [_piece(s, flavor, kind, 2) for s in parts]
    return _blockdiag(pieces)


@lru_cache(maxsize=None)
def _model_signature(d: Decomposition, flavor: str, kind: str):
    x, J, q = model(d, flavor, kind)
    if kind == "unipotent":
        x = (x - np.eye(len(x), dtype=np.int64)) % 2
    return form_signature(x, J, q, 2, kind)


# -- decompose -----------------------------------------------------------------

def _check_member(x, space: FormedSpace, kind: str):
    p, J = space.p, space.form
    n = space.dim
    if x.shape != (n, n):
        raise ClassicalError("matrix has the wrong size")
    if J is None:
        return
    if kind == "nilpotent":
        if np.any((x.T @ J + J @ x) % p):
            raise ClassicalError("matrix is not in the Lie algebra")
        if p == 2 and space.orthogonal and np.any(np.diag(J @ x) % 2):
            raise ClassicalError("matrix does not preserve the quadratic form")
    else:
        if np.any((x.T @ J @ x - J) % p):
            raise ClassicalError("matrix does not preserve the form")
        if p == 2 and space.quad is not None:
            for k in range(n):
                if _qval(x[:, k], J, space.quad) != space.quad[k] % 2:
                    raise ClassicalError(
                        "matrix does not preserve the quadratic form")


def symplectic_index(x, space: FormedSpace) -> int:
    """Least n with (x^{n+1} v, x^n v) = 0 for all v (p = 2)."""
    if space.p != 2 or space.flavor != "symplectic":
        raise ClassicalError("symplectic index needs a symplectic space, p=2")
    x = as_mod(x, 2)
    _check_member(x, space, "nilpotent")
    J, n = space.form, space.dim
    xn = np.eye(n, dtype=np.int64)
    for k in range(n + 1):
        nxt = x @ xn % 2
        if _vanishes(nxt.T @ J @ xn, 2):
            return k
        xn = nxt
    raise ClassicalError("matrix is not nilpotent")


def orthogonal_index(x, space: FormedSpace) -> int:
    """Least n with Q(x^n v) = 0 for all v (p = 2)."""
    if space.p != 2 or not space.orthogonal:
        raise ClassicalError("orthogonal index needs an orthogonal space, p=2")
    x = as_mod(x, 2)
    _check_member(x, space, "nilpotent")
    n = space.dim
    xn = np.eye(n, dtype=np.int64)
    for k in range(n + 1):
        if _q_vanishes(xn, space.form, space.quad, 2):
            return k
        xn = x @ xn % 2
    raise ClassicalError("matrix is not nilpotent")


def _qval(v, J, quad) -> int:
    v = np.asarray(v) % 2
    total = int(np.asarray(quad) @ (v * v))
    n = len(v)
    for i in range(n):
        if v[i]:
            total += int(J[i, i + 1:] @ v[i + 1:])
    return total % 2


def decompose(x, space: FormedSpace, kind: str = "nilpotent") -> Decomposition:
    """Orthogonal decomposition describing the class of x."""
    if kind not in ("nilpotent", "unipotent"):
        raise ClassicalError(f"unknown kind {kind}")
    p = space.p
    x = as_mod(x, p)
    _check_member(x, space, kind)
    n = space.dim
    y = (x - np.eye(n, dtype=np.int64)) % p if kind == "unipotent" else x
    lam = jordan_partition(y, p, "nilpotent")
    if p != 2 or space.flavor == "linear":
        d = _odd_char(space.flavor, lam)
        if d is None:
            raise ClassicalError(f"Jordan type {lam} is impossible here")
        return d
    if space.flavor == "orthogonal_odd" and kind == "unipotent":
        # pass to V / R, where R is the radical of the bilinear form
        k = n - 1
        sub = FormedSpace("symplectic", k, 2, space.form[:k, :k])
        d = decompose(x[:k, :k], sub, "unipotent")
        return Decomposition(list(d) + [Summand("R", 1)])
    J = space.form
    sig = form_signature(y, J, space.quad, p, kind)
    cands = [c for c in _candidates(space.flavor, kind, lam)
             if kind == "nilpotent" or space.flavor == "symplectic"
             or c.count("V") % 2 == 0]
    hits = [c for c in cands if _model_signature(c, space.flavor, kind) == sig]
    if len(hits) != 1:
        raise ClassicalError(
            f"invariants matched {len(hits)} of {len(cands)} candidates")
    return hits[0]


def so_class_splitting(d: Decomposition, space: FormedSpace,
                       kind: str = "nilpotent") -> str:
    """'one_class', 'splits_into_two' or 'not_in_SO'."""
    if not space.orthogonal:
        raise ClassicalError("splitting only makes sense for orthogonal forms")
    if space.flavor == "orthogonal_odd":
        return "one_class"
    if space.p != 2:
        if d.count("V") == 0 and all(s.m % 2 == 0 for s in d):
            return "splits_into_two"
        return "one_class"
    if kind == "unipotent":
        if d.count("V") % 2:
            return "not_in_SO"
        return "splits_into_two" if d.count("V") == 0 else "one_class"
    return "splits_into_two" if d.count("Wl") == 0 else "one_class"


# -- representatives -----------------------------------------------------------

@dataclass
class Representative:
    type: str
    rank: int
    kind: str
    support: list  # roots, in product order for unipotent elements
    matrix: np.ndarray

    @property
    def support_strings(self) -> list[str]:
        return [root_string(r) for r in self.support]


def element_from_support(typ: str, rank: int, support, p: int,
                         kind: str = "nilpotent") -> np.ndarray:
    rep = natural_module(typ, rank)
    if kind == "nilpotent":
        return rep.element(support, p)
    return rep.unipotent(support, p)


def _rep(typ, rank, kind, support, p):
    return Representative(typ, rank, kind, list(support),
                          element_from_support(typ, rank, support, p, kind))


def regular_representative(typ: str, rank: int, kind: str = "nilpotent",
                           p: int = 2) -> Representative:
    rs = build_root_system(typ, rank)
    return _rep(rs.type, rank, kind, rs.simple, p)


def _two_eps(n: int, l: int) -> tuple:
    """2 alpha_l + ... + 2 alpha_{n-1} + alpha_n in C_n."""
    return tuple([0] * (l - 1) + [2] * (n - l) + [1])


def eminent_representative(typ: str, rank: int, p: int, kind: str = "nilpotent",
                           l: int | None = None) -> Representative:
    """Representatives of Tables of eminent classes in classical groups."""
    rs = build_root_system(typ, rank)
    n = rank
    if l is None:
        if rs.type == "D":
            raise ClassicalError("D_n needs an index l")
        return regular_representative(rs.type, n, kind, p)
    if p != 2:
        raise ClassicalError("non-regular eminent classes need p = 2")
    if rs.type == "C" and kind == "nilpotent" and 0 < l and 2 * l < n:
        return _rep("C", n, kind, rs.simple[:-1] + [_two_eps(n, l)], p)
    if rs.type == "D" and n + 1 < 2 * l and l < n:
        return _rep("D", n, kind, rs.simple[:-1] + [beta_l_root(n, l)], p)
    raise ClassicalError(f"no eminent class with l={l} for {rs.name}, {kind}")


def is_eminent_classical(d: Decomposition, typ: str, rank: int, p: int,
                         kind: str = "nilpotent") -> bool:
    n = rank
    ds = sorted(d, key=_skey)
    if typ == "A":
        return ds == [Summand("V", n + 1)]
    if typ == "B":
        if p != 2:
            return ds == [Summand("V", 2 * n + 1)]
        if kind == "nilpotent":
            return ds == [Summand("D", n + 1)]
        return ds == [Summand("V", 2 * n), Summand("R", 1)]
    if typ == "C":
        if ds == [Summand("V", 2 * n)]:
            return True
        return (p == 2 and kind == "nilpotent" and len(ds) == 1
                and ds[0].kind == "Wl" and ds[0].m == n
                and 0 < ds[0].l and 2 * ds[0].l < n)
    if typ == "D":
        if p != 2:
            return False
        if kind == "nilpotent":
            return (len(ds) == 1 and ds[0].kind == "Wl" and ds[0].m == n
                    and n + 1 < 2 * ds[0].l < 2 * n)
        if len(ds) != 2 or any(s.kind != "V" for s in ds):
            return False
        sizes = sorted(s.m for s in ds)
        return any(sizes == sorted([2 * n - 2 * l + 2, 2 * l - 2])
                   for l in range(1, n) if n + 1 < 2 * l)
    raise ClassicalError(f"{typ} is not classical")


def bm_bnm1_generators(n: int, m: int, p: int):
    """Commuting B_m and B_{n-m-1} inside D_n for p odd.

    Returns a dict with the Lie algebra generators of each factor, the
    nilpotent representative e and the unipotent representative u.
    """
    if p == 2:
        raise ClassicalError("B_m B_{n-m-1} needs p odd")
    if not 1 <= m <= n - 2:
        raise ClassicalError("need 1 <= m <= n - 2")
    rs = build_root_system("D", n)
    rep = natural_module("D", n)
    s = rs.simple
    beta = tuple(int(m - 1 <= i <= n - 3) for i in range(n))
    b1 = tuple(x + y for x, y in zip(beta, s[n - 2]))
    b2 = tuple(x + y for x, y in zip(beta, s[n - 1]))
    M = rep.mats

    def negr(r):
        return tuple(-x for x in r)

    h1 = [M[s[i]] for i in range(m - 1)] + [M[negr(s[i])] for i in range(m - 1)]
    h1 += [M[b1] - M[b2], M[negr(b1)] - M[negr(b2)]]
    h2 = [M[s[i]] for i in range(m, n - 2)] + \
        [M[negr(s[i])] for i in range(m, n - 2)]
    h2 += [M[s[n - 2]] + M[s[n - 1]], M[negr(s[n - 2])] + M[negr(s[n - 1])]]
    e = (M[b1] - M[b2] + sum(M[s[i]] for i in range(n) if i != m - 1)) % p
    u1 = [(s[i], 1) for i in range(m - 1)] + [(b1, 1), (b2, -1)]
    u2 = [(s[i], 1) for i in range(m, n)]
    u = rep.unipotent(u1 + u2, p)
    return {"H1": [x % p for x in h1], "H2": [x % p for x in h2],
            "e": e, "u": u, "u1": u1, "u2": u2}

"""Root systems in Bourbaki numbering.

Roots are integer coefficient tuples over the simple roots.  Inner products
come from an integer Gram matrix, scaled so that short roots have length 2
(length 1 for the short roots of C_n and for nothing else).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations

import numpy as np


class RootError(ValueError):
    pass


_E_EDGES = [(1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (2, 4)]


def _epsilon_simple(typ: str, n: int) -> list[list[int]]:
    """Simple roots of a classical type in epsilon coordinates."""
    width = n + 1 if typ == "A" else n
    rows = []
    for i in range(n - 1):
        v = [0] * width
        v[i], v[i + 1] = 1, -1
        rows.append(v)
    v = [0] * width
    if typ == "A":
        v[n - 1], v[n] = 1, -1
    elif typ == "B":
        v[n - 1] = 1
    elif typ == "C":
        v[n - 1] = 2
    else:
        v[n - 2], v[n - 1] = 1, 1
    rows.append(v)
    return rows


def _gram(typ: str, n: int) -> np.ndarray:
    if typ in "ABCD":
        e = np.array(_epsilon_simple(typ, n))
        g = e @ e.T
        return 2 * g if typ == "B" else g
    if typ == "E":
        g = 2 * np.eye(n, dtype=int)
        for a, b in _E_EDGES:
            if a <= n and b <= n:
                g[a - 1, b - 1] = g[b - 1, a - 1] = -1
        return g
    if typ == "F":
        return np.array([[4, -2, 0, 0], [-2, 4, -2, 0],
                         [0, -2, 2, -1], [0, 0, -1, 2]])
    if typ == "G":
        return np.array([[2, -3], [-3, 6]])
    raise RootError(f"unknown type {typ}")


def _check_rank(typ: str, n: int):
    ok = {"A": n >= 1, "B": n >= 2, "C": n >= 2, "D": n >= 3,
          "E": n in (6, 7, 8), "F": n == 4, "G": n == 2}
    if typ not in ok or not ok[typ]:
        raise RootError(f"unsupported root system {typ}{n}")


@dataclass
class RootSystem:
    type: str
    rank: int
    gram: np.ndarray
    positive: list[tuple[int, ...]]
    index: dict = field(repr=False, default_factory=dict)

    @property
    def name(self) -> str:
        return f"{self.type}{self.rank}"

    @property
    def roots(self) -> list[tuple[int, ...]]:
        """Positive roots followed by their negatives, in the same order."""
        return self.positive + [neg(r) for r in self.positive]

    @property
    def simple(self) -> list[tuple[int, ...]]:
        return self.positive[: self.rank]

    @property
    def cartan(self) -> np.ndarray:
        """cartan[i][j] = <alpha_j, alpha_i^vee>."""
        g = self.gram
        return np.array([[2 * g[i, j] // g[i, i] for j in range(self.rank)]
                         for i in range(self.rank)])

    def ip(self, a, b) -> int:
        return int(np.asarray(a) @ self.gram @ np.asarray(b))

    def norm(self, a) -> int:
        return self.ip(a, a)

    def pairing(self, beta, i: int) -> int:
        """<beta, alpha_i^vee> for a simple index i (0-based)."""
        g = self.gram
        return 2 * int(np.asarray(beta) @ g[:, i]) // int(g[i, i])

    def coroot(self, beta) -> list[int]:
        """Coefficients of beta^vee over the simple coroots."""
        nb = self.norm(beta)
        out = []
        for i, c in enumerate(beta):
            num = c * int(self.gram[i, i])
            if num % nb:
                raise RootError("non-integral coroot")
            out.append(num // nb)
        return out

    def is_root(self, r) -> bool:
        return tuple(r) in self.index

    def height(self, r) -> int:
        return sum(r)

    @property
    def highest(self) -> tuple[int, ...]:
        return self.positive[-1]

    @property
    def long_norm(self) -> int:
        return max(self.norm(r) for r in self.simple)

    def is_long(self, r) -> bool:
        return self.norm(r) == self.long_norm

    def string_down(self, beta, alpha) -> int:
        """Largest r with beta - r alpha a root."""
        r = 0
        while self.is_root(sub(beta, scale(alpha, r + 1))):
            r += 1
        return r

    def reflect(self, beta, alpha) -> tuple[int, ...]:
        c = 2 * self.ip(beta, alpha) // self.norm(alpha)
        return sub(beta, scale(alpha, c))

    def epsilon(self, r) -> list[int]:
        """Epsilon coordinates of a root of a classical system."""
        if self.type not in "ABCD":
            raise RootError("epsilon coordinates only for classical types")
        e = np.array(_epsilon_simple(self.type, self.rank))
        return list(np.asarray(r) @ e)

    def from_epsilon(self, v) -> tuple[int, ...]:
        e = np.array(_epsilon_simple(self.type, self.rank), dtype=float)
        sol, *_ = np.linalg.lstsq(e.T, np.asarray(v, dtype=float), rcond=None)
        r = tuple(int(round(x)) for x in sol)
        if not self.is_root(r) or self.epsilon(r) != list(v):
            raise RootError(f"{v} is not a root")
        return r


def add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def neg(a):
    return tuple(-x for x in a)


def scale(a, k):
    return tuple(k * x for x in a)


def root_key(r):
    """Order by height, then by descending coefficient tuple."""
    s = 1 if sum(r) > 0 else -1
    return (s < 0, abs(sum(r)), tuple(-s * x for x in r))


@lru_cache(maxsize=None)
def build_root_system(typ: str, rank: int) -> RootSystem:
    typ = typ.upper()
    _check_rank(typ, rank)
    g = _gram(typ, rank)
    rs = RootSystem(typ, rank, g, [])
    simple = [tuple(int(i == j) for j in range(rank)) for i in range(rank)]
    found = set(simple)
    layer = list(simple)
    while layer:
        nxt = set()
        for beta in layer:
            for i, a in enumerate(simple):
                # p = length of the downward string through beta
                p = 0
                while sub(beta, scale(a, p + 1)) in found:
                    p += 1
                q = p - 2 * int(np.asarray(beta) @ g[:, i]) // int(g[i, i])
                if q > 0:
                    nxt.add(add(beta, a))
        nxt -= found
        found |= nxt
        layer = sorted(nxt)
    rs.positive = sorted(found, key=root_key)
    for k, r in enumerate(rs.roots):
        rs.index[r] = k
    return rs


def parse_type(spec: str, rank: int | None = None) -> tuple[str, int]:
    """Accept 'E8' or ('E', 8)."""
    spec = spec.strip().upper()
    if len(spec) > 1:
        return spec[0], int(spec[1:])
    if rank is None:
        raise RootError("rank required")
    return spec, int(rank)


def root_from_bourbaki_string(rs: RootSystem, s) -> tuple[int, ...]:
    """'01101' or a digit sequence such as (0, 1, 1, 0, 1)."""
    if not isinstance(s, str):
        s = "".join(str(int(d)) for d in s)
    s = s.strip()
    if len(s) != rs.rank or not s.isdigit():
        raise RootError(f"'{s}' is not a coefficient string for {rs.name}")
    r = tuple(int(ch) for ch in s)
    if not rs.is_root(r):
        raise RootError(f"'{s}' is not a root of {rs.name}")
    return r


def parse_root(rs: RootSystem, s: str) -> tuple[int, ...]:
    s = s.strip()
    if s.startswith("-"):
        return neg(root_from_bourbaki_string(rs, s[1:]))
    return root_from_bourbaki_string(rs, s)


def root_string(r) -> str:
    if sum(r) < 0:
        return "-" + "".join(str(-x) for x in r)
    return "".join(str(x) for x in r)


def beta_l_root(n: int, l: int) -> tuple[int, ...]:
    """alpha_n + sum_{i=2l-n-1}^{n-2} alpha_i in D_n."""
    if not (2 * l > n + 1 and l <= n):
        raise RootError(f"beta_l needs (n+1)/2 < l <= n, got n={n}, l={l}")
    c = [0] * n
    c[n - 1] = 1
    for i in range(2 * l - n - 1, n - 1):
        c[i - 1] = 1
    return tuple(c)


# -- subsystem types ---------------------------------------------------------

def _components(gram: np.ndarray) -> list[list[int]]:
    n = len(gram)
    seen, comps = set(), []
    for s in range(n):
        if s in seen:
            continue
        comp, stack = [], [s]
        seen.add(s)
        while stack:
            a = stack.pop()
            comp.append(a)
            for b in range(n):
                if b not in seen and gram[a, b] != 0:
                    seen.add(b)
                    stack.append(b)
        comps.append(sorted(comp))
    return comps


def _component_type(g: np.ndarray) -> str:
    """Cartan type of an irreducible simple system with Gram matrix g."""
    k = len(g)
    norms = [int(g[i, i]) for i in range(k)]
    bonds = {}
    for i, j in combinations(range(k), 2):
        if g[i, j]:
            bonds[(i, j)] = 4 * int(g[i, j]) ** 2 // (norms[i] * norms[j])
    if k == 1:
        return "A1"
    mult = max(bonds.values())
    if mult == 3:
        return "G2"
    if mult == 1:
        deg = [sum(1 for e in bonds if a in e) for a in range(k)]
        if max(deg) <= 2:
            return f"A{k}"
        centre = deg.index(3)
        arms = []
        for nb in [b for e in bonds for b in e if centre in e and b != centre]:
            length, prev, cur = 1, centre, nb
            while True:
                nxt = [b for e in bonds for b in e
                       if cur in e and b not in (cur, prev)]
                if not nxt:
                    break
                prev, cur = cur, nxt[0]
                length += 1
            arms.append(length)
        arms.sort()
        if arms[:2] == [1, 1]:
            return f"D{k}"
        return f"E{k}"
    nlong = sum(1 for x in norms if x == max(norms))
    if k == 2:
        return "B2"
    if k == 4 and nlong == 2:
        (i, j), = [e for e, m in bonds.items() if m == 2]
        ends = [a for a in range(k)
                if sum(1 for e in bonds if a in e) == 1]
        if i not in ends and j not in ends:
            return "F4"
    return f"B{k}" if nlong == k - 1 else f"C{k}"


def subsystem_type(rs: RootSystem, simple_roots) -> list[str]:
    """Component types of the subsystem with the given simple roots.

    Type A components made of short roots in a non-simply-laced ambient
    system carry a tilde, written '~' after the letter.
    """
    roots = [tuple(r) for r in simple_roots]
    if not roots:
        return []
    g = np.array([[rs.ip(a, b) for b in roots] for a in roots])
    out = []
    multi = rs.type in "BCFG"
    for comp in _components(g):
        t = _component_type(g[np.ix_(comp, comp)])
        if multi and t[0] == "A" and not rs.is_long(roots[comp[0]]) \
                and rs.type in "FG":
            t = "A~" + t[1:]
        out.append(t)
    return out


_TYPE_ORDER = {"E": 0, "F": 1, "G": 2, "D": 3, "C": 4, "B": 5, "A": 6}


def type_label(types: list[str]) -> str:
    """Join component types into a label like 'D4A1' or 'A2^2A1'."""
    def key(t):
        return (_TYPE_ORDER[t[0]], -int(t.lstrip("ABCDEFG~")), "~" in t)
    counts: dict[str, int] = {}
    for t in types:
        counts[t] = counts.get(t, 0) + 1
    parts = []
    for t in sorted(counts, key=key):
        parts.append(t + (f"^{counts[t]}" if counts[t] > 1 else ""))
    return "".join(parts) if parts else "0"


@dataclass(frozen=True)
class SubsystemDescriptor:
    components: tuple
    condition: str = "any"

    @property
    def label(self) -> str:
        return "".join(f"{t}{r}" for t, r in self.components)


def maximal_generalized_subsystems(typ: str, rank: int, p: int):
    """Maximal non-Levi subgroups of maximal rank in a classical group."""
    typ = typ.upper()
    _check_rank(typ, rank)
    if typ not in "ABCD":
        raise RootError("classical types only")
    n = rank
    rows = []

    def pairs(t1, t2, lo, hi, cond):
        seen = set()
        for m in range(lo, hi + 1):
            comp = ((t1, m), (t2, m2(m)))
            if any(r < 1 for _, r in comp):
                continue
            k = tuple(sorted(comp))
            if k not in seen:
                seen.add(k)
                rows.append(SubsystemDescriptor(comp, cond))

    if typ == "B":
        if p != 2:
            # B_m D_{n-m}; m = n - 1 gives a Levi and m = n is everything
            for m in range(1, n - 1):
                rows.append(SubsystemDescriptor((("B", m), ("D", n - m)),
                                                "p!=2"))
        else:
            m2 = lambda m: n - m  # noqa: E731
            pairs("B", "B", 1, n // 2, "p=2")
        rows.append(SubsystemDescriptor((("D", n),), "any"))
    elif typ == "C":
        m2 = lambda m: n - m  # noqa: E731
        pairs("C", "C", 1, n // 2, "any")
        if p == 2:
            rows.append(SubsystemDescriptor((("D", n),), "p=2"))
    elif typ == "D":
        m2 = lambda m: n - m  # noqa: E731
        pairs("D", "D", 2, n // 2, "any")
        rows.append(SubsystemDescriptor((("B", n - 1),), "any"))
        if p != 2:
            m2 = lambda m: n - m - 1  # noqa: E731
            pairs("B", "B", 1, n // 2, "p!=2")
    return rows


def extended_marks(rs: RootSystem) -> list[int]:
    return list(rs.highest)


def closed_subsystems(rs: RootSystem):
    """Proper closed subsystems of maximal rank from one deletion step.

    Delete a node of mark at least 2 from the extended diagram.  Returns
    (deleted index, simple roots, component types); the lowest root is
    -theta.
    """
    theta = rs.highest
    out = []
    for i, mark in enumerate(theta):
        if mark < 2:
            continue
        simple = [r for j, r in enumerate(rs.simple) if j != i] + [neg(theta)]
        out.append((i + 1, simple, subsystem_type(rs, simple)))
    return out

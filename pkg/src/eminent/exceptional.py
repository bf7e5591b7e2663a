"""Exceptional groups: centralizer invariants, Levi classes, recognition."""
from __future__ import annotations

import hashlib
import re
from dataclasses import dataclass, field, fields as dc_fields
from fractions import Fraction
from functools import cached_property, lru_cache
from pathlib import Path

import numpy as np

from .chevalley import chevalley_algebra
from .linalg import (
    Accumulator, Subspace, derivation_algebra, derived_terms, jordan_partition,
    kernel, lower_central_series, normalizer, subalgebra_structure,
)
from .modules import minimal_module
from .roots import (
    build_root_system, parse_type, root_from_bourbaki_string, root_string,
    subsystem_type, type_label,
)
from .tables import (
    EMINENT, OVERGROUPS, aux_rows, condition_holds, profile_fields,
)

EXCEPTIONAL = ("G2", "F4", "E6", "E7", "E8")


class ExceptionalError(ValueError):
    pass


def group_of(name: str) -> tuple[str, int]:
    typ, rank = parse_type(name)
    if f"{typ}{rank}" not in EXCEPTIONAL:
        raise ExceptionalError(f"{name} is not an exceptional type")
    return typ, rank


def _support_items(support):
    out = []
    for item in support:
        if len(item) == 2 and not isinstance(item[0], (int, np.integer)):
            out.append((tuple(item[0]), int(item[1])))
        else:
            out.append((tuple(item), 1))
    return out


# -- grading ---------------------------------------------------------------

def _rational_kernel(rows, n):
    """Integer basis of {t in Q^n : r . t = 0 for all rows r}."""
    m = [[Fraction(v) for v in r] for r in rows]
    piv, r = [], 0
    for c in range(n):
        k = next((i for i in range(r, len(m)) if m[i][c]), None)
        if k is None:
            continue
        m[r], m[k] = m[k], m[r]
        m[r] = [v / m[r][c] for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        piv.append(c)
        r += 1
    out = []
    for c in range(n):
        if c in piv:
            continue
        t = [Fraction(0)] * n
        t[c] = Fraction(1)
        for i, pc in enumerate(piv):
            t[pc] = -m[i][c]
        den = 1
        for v in t:
            den = den * v.denominator // np.gcd(den, v.denominator)
        out.append([int(v * den) for v in t])
    return out


def lie_degrees(rs, roots) -> np.ndarray:
    """Torus grading of Lie(G) preserved by elements supported on roots.

    The torus is the subtorus on which every root in the support is
    trivial; h_i has degree 0 and e_alpha the image of alpha.
    """
    taus = _rational_kernel([list(r) for r in roots], rs.rank)
    dim = rs.rank + len(rs.roots)
    deg = np.zeros((dim, max(1, len(taus))), dtype=np.int64)
    if taus:
        T = np.array(taus, dtype=np.int64).T
        deg[rs.rank:] = np.array(rs.roots, dtype=np.int64) @ T
    return deg


def _blocks(deg):
    _, inv = np.unique(deg, axis=0, return_inverse=True)
    inv = inv.reshape(-1)
    return [np.flatnonzero(inv == b) for b in range(inv.max() + 1)]


# -- centralizers --------------------------------------------------------------

def centralizer(alg, x, kind: str = "nilpotent", degrees=None) -> Subspace:
    """C_{Lie(G)}(x): kernel of ad x, or of Ad u - 1 for a unipotent matrix.

    x is an algebra vector or an ad matrix when nilpotent, and the Ad
    matrix when unipotent.  With degrees the kernel is found blockwise.
    """
    p, dim = alg.p, alg.dim
    x = np.asarray(x, dtype=np.int64) % p
    if kind == "nilpotent":
        m = alg.ad(x) if x.ndim == 1 else x
    elif kind == "unipotent":
        m = (x - np.eye(dim, dtype=np.int64)) % p
    else:
        raise ExceptionalError(f"unknown kind {kind}")
    if degrees is None:
        return Subspace.span(kernel(m, p), p, dim)
    rows = []
    for blk in _blocks(np.asarray(degrees)):
        sub = m[np.ix_(blk, blk)]
        if np.any(m[:, blk][np.setdiff1d(np.arange(dim), blk)] % p):
            raise ExceptionalError("element does not preserve the grading")
        for v in kernel(sub, p):
            full = np.zeros(dim, dtype=np.int64)
            full[blk] = v
            rows.append(full)
    return Subspace.span(np.array(rows, dtype=np.int64).reshape(-1, dim),
                         p, dim)


# -- profiles -------------------------------------------------------------------

@dataclass
class InvariantProfile:
    """The recognition data; absent fields are None."""
    jbs_min: tuple | None = None
    jbs_adj: tuple | None = None
    ds: tuple | None = None
    ls: tuple | None = None
    nds: tuple | None = None
    alg: int | None = None
    alg_prime: int | None = None
    nil: str | None = None

    def present(self) -> dict:
        return {f.name: getattr(self, f.name) for f in dc_fields(self)
                if getattr(self, f.name) is not None}

    def __str__(self):
        parts = []
        for k, v in self.present().items():
            if isinstance(v, tuple):
                v = ",".join(map(str, v))
            parts.append(f"{k}={v}")
        return "; ".join(parts)


class ElementData:
    """One exceptional element with its invariants computed on demand."""

    def __init__(self, name: str, p: int, kind: str, support,
                 lattice: str = "sc"):
        self.typ, self.rank = group_of(name)
        self.name = f"{self.typ}{self.rank}"
        self.p, self.kind, self.lattice = p, kind, lattice
        if kind not in ("nilpotent", "unipotent"):
            raise ExceptionalError(f"unknown kind {kind}")
        self.items = _support_items(support)
        self.alg = chevalley_algebra(self.typ, self.rank, p, lattice)
        rs = self.alg.rs
        for r, _ in self.items:
            if not rs.is_root(r):
                raise ExceptionalError(f"{r} is not a root of {self.name}")
        self.degrees = lie_degrees(rs, [r for r, _ in self.items])

    @classmethod
    def from_matrix(cls, name: str, p: int, kind: str, matrix,
                    lattice: str = "sc") -> "ElementData":
        """An element given by its ad (or Ad) matrix on Lie(G)."""
        self = cls(name, p, kind, [], lattice)
        m = np.asarray(matrix, dtype=np.int64) % p
        if m.shape != (self.alg.dim, self.alg.dim):
            raise ExceptionalError(
                f"matrix must be {self.alg.dim} x {self.alg.dim}")
        self.__dict__["adjoint"] = m
        self.degrees = None
        self._from_matrix = True
        return self

    _from_matrix = False

    @cached_property
    def adjoint(self) -> np.ndarray:
        """ad x or Ad u on Lie(G)."""
        alg = self.alg
        if self.kind == "nilpotent":
            return alg.ad(alg.element(self.items))
        u = np.eye(alg.dim, dtype=np.int64)
        for r, c in self.items:
            u = u @ alg.root_group(r, c) % self.p
        return u

    @cached_property
    def minimal(self) -> np.ndarray | None:
        if self.name == "E8":
            return None
        if self._from_matrix:
            raise ExceptionalError("V_min data needs a root support")
        rep = minimal_module(self.typ, self.rank)
        if self.kind == "nilpotent":
            return rep.element(self.items, self.p)
        return rep.unipotent(self.items, self.p)

    @cached_property
    def centralizer(self) -> Subspace:
        return centralizer(self.alg, self.adjoint, self.kind, self.degrees)

    @cached_property
    def _terms(self):
        return derived_terms(self.alg, self.centralizer)

    @cached_property
    def _derivations(self):
        c = self.centralizer
        gamma = subalgebra_structure(self.alg, c)
        deg = self.degrees[c.pivots]
        return derivation_algebra(gamma, self.p, deg)[:2]

    def value(self, name: str):
        if name == "jbs_min":
            m = self.minimal if self.minimal is not None else self.adjoint
            return tuple(jordan_partition(m, self.p, self.kind))
        if name == "jbs_adj":
            return tuple(jordan_partition(self.adjoint, self.p, self.kind))
        if name == "ds":
            return tuple(t.dim for t in self._terms)
        if name == "ls":
            return tuple(lower_central_series(self.alg, self.centralizer))
        if name == "nds":
            return tuple(normalizer(self.alg, t).dim for t in self._terms)
        if name == "alg":
            return self._derivations[0]
        if name == "alg_prime":
            return self._derivations[1]
        if name == "nil":
            return "unavailable"
        raise ExceptionalError(f"unknown invariant {name}")

    def profile(self, names=None) -> InvariantProfile:
        if names is None:
            names = profile_fields(self.name, self.kind, self.p)
        return InvariantProfile(**{n: self.value(n) for n in names})


def invariant_profile(name: str, p: int, kind: str, support,
                      lattice: str = "sc") -> InvariantProfile:
    """The prescribed recognition fields for the element on support."""
    return ElementData(name, p, kind, support, lattice).profile()


# -- Levi subdiagrams up to conjugacy ----------------------------------------------

def _diagram_components(rs, nodes):
    nodes = sorted(nodes)
    comps, seen = [], set()
    for s in nodes:
        if s in seen:
            continue
        comp, stack = [], [s]
        seen.add(s)
        while stack:
            a = stack.pop()
            comp.append(a)
            for b in nodes:
                if b not in seen and rs.gram[a, b]:
                    seen.add(b)
                    stack.append(b)
        comps.append(sorted(comp))
    return comps


def _opposition(rs, comp) -> dict:
    """The permutation -w_0 of a connected subdiagram."""
    others = [i for i in range(rs.rank) if i not in comp]
    pos = [r for r in rs.positive if not any(r[i] for i in others)]
    v = tuple(int(x) for x in np.sum(pos, axis=0))
    seq = []
    while True:
        i = next((i for i in comp if rs.pairing(v, i) > 0), None)
        if i is None:
            break
        v = rs.reflect(v, rs.simple[i])
        seq.append(i)
    out = {}
    for j in comp:
        a = rs.simple[j]
        for i in seq:
            a = rs.reflect(a, rs.simple[i])
        out[j] = rs.simple.index(tuple(-x for x in a))
    return out


@dataclass(frozen=True)
class LeviClass:
    label: str
    nodes: tuple  # Bourbaki node numbers of the chosen subdiagram
    conjugates: tuple = field(repr=False, default=())


@lru_cache(maxsize=None)
def levi_classes(name: str) -> tuple[LeviClass, ...]:
    """Subdiagrams of the Dynkin diagram up to W-conjugacy.

    Two subsets are merged by the elementary moves J -> (J - K) + (-w_0^K)(J
    meet K) where K is the component of J + {a} containing a.  Classes
    sharing a label (only in E7) get a suffix: ^(1) marks the class with the
    smaller centralizer in good characteristic and ^(2) the larger one.
    """
    typ, rank = group_of(name)
    rs = build_root_system(typ, rank)
    l = rs.rank
    parent = list(range(1 << l))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    ops = {}
    for J in range(1 << l):
        for a in range(l):
            if J >> a & 1:
                continue
            K = [i for i in range(l) if (J | 1 << a) >> i & 1]
            comp = next(c for c in _diagram_components(rs, K) if a in c)
            key = tuple(comp)
            if key not in ops:
                ops[key] = _opposition(rs, comp)
            sigma = ops[key]
            J2 = J & ~sum(1 << i for i in comp)
            for i in comp:
                if J >> i & 1:
                    J2 |= 1 << sigma[i]
            ra, rb = find(J), find(J2)
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)
    groups: dict = {}
    for J in range(1 << l):
        groups.setdefault(find(J), []).append(
            tuple(i + 1 for i in range(l) if J >> i & 1))
    classes = []
    for members in groups.values():
        members.sort(key=lambda t: (len(t), t))
        nodes = members[0]
        lab = type_label(subsystem_type(rs, [rs.simple[i - 1] for i in nodes]))
        classes.append([lab, nodes, tuple(members)])
    by_label: dict = {}
    for c in classes:
        by_label.setdefault(c[0], []).append(c)
    good = next(q for q in (5, 7) if q not in _bad_primes(typ, rank))
    for lab, cs in by_label.items():
        if len(cs) == 1:
            continue
        if len(cs) != 2:
            raise ExceptionalError(f"{len(cs)} Levi classes labelled {lab}")
        dims = [ElementData(name, good, "nilpotent",
                            [rs.simple[i - 1] for i in c[1]]).centralizer.dim
                for c in cs]
        if dims[0] == dims[1]:
            raise ExceptionalError(f"cannot separate the two {lab} classes")
        small, big = (cs[0], cs[1]) if dims[0] < dims[1] else (cs[1], cs[0])
        small[0], big[0] = f"({lab})^(1)", f"({lab})^(2)"
    out = [LeviClass(lab, nodes, members) for lab, nodes, members in classes]
    out.sort(key=lambda c: (len(c.nodes), c.nodes))
    return tuple(out)


def _bad_primes(typ: str, rank: int = 8) -> set:
    return {2, 3, 5} if typ == "E" and rank == 8 else {2, 3}


# -- labels ---------------------------------------------------------------------

def normalize_label(label: str) -> str:
    """Accept TeX-ish spellings like 'D_4(a_1)A_1' or '\\tilde{A}_1'."""
    s = label.strip().replace("$", "").replace(" ", "")
    s = re.sub(r"\\tilde\{?([A-Z])\}?", r"\1~", s)
    s = s.replace("Ã", "A~").replace("_", "").replace("{", "").replace("}", "")
    # keep the (X)_p suffix form intact
    s = re.sub(r"\)(\d+)$", r")_\1", s)
    return s


# -- representative database ------------------------------------------------------

DATA_FILE = Path(__file__).with_name("data") / "representatives.txt"


@dataclass(frozen=True)
class RepresentativeEntry:
    type: str
    label: str
    kind: str
    condition: str
    support: tuple  # positive roots, in product order
    source: str = "levi_regular"

    @property
    def support_strings(self) -> list[str]:
        return [root_string(r) for r in self.support]


def _source(rs, support) -> str:
    return ("levi_regular" if all(r in rs.simple for r in support)
            and len(set(support)) == len(support) else "companion_reference")


def levi_regular_representative(name: str, levi_label: str,
                                kind: str = "nilpotent") -> RepresentativeEntry:
    """Sum of e_alpha (or product of x_alpha(1)) over a Levi subdiagram."""
    typ, rank = group_of(name)
    rs = build_root_system(typ, rank)
    lab = normalize_label(levi_label)
    want = {"0", "1"} if lab in ("0", "1") else {lab}
    for c in levi_classes(rs.name):
        if c.label in want:
            label = ("1" if kind == "unipotent" else "0") if not c.nodes \
                else c.label
            return RepresentativeEntry(
                rs.name, label, kind, "any",
                tuple(rs.simple[i - 1] for i in c.nodes))
    raise ExceptionalError(f"{levi_label} is not a Levi subdiagram of {name}")


def database_lines() -> list[str]:
    lines = []
    for name in EXCEPTIONAL:
        for c in levi_classes(name):
            for kind in ("nilpotent", "unipotent"):
                e = levi_regular_representative(name, c.label or "0", kind)
                lines.append("|".join([e.type, e.label, kind, e.condition,
                                       ",".join(e.support_strings)]))
    return lines


def _digest(lines) -> str:
    return hashlib.sha256("\n".join(lines).encode()).hexdigest()


def write_database(path=DATA_FILE, lines=None):
    lines = database_lines() if lines is None else list(lines)
    head = ["# sha256 " + _digest(lines),
            "# type|label|kind|char_condition|roots (Bourbaki digit strings)",
            "# Levi-regular classes: sum of e_alpha over a Levi subdiagram"]
    Path(path).parent.mkdir(parents=True, exist_ok=True)
    Path(path).write_text("\n".join(head + lines) + "\n", encoding="utf-8")


def load_database(path=DATA_FILE) -> list[RepresentativeEntry]:
    text = Path(path).read_text(encoding="utf-8").splitlines()
    digest, body = None, []
    for line in text:
        if line.startswith("# sha256 "):
            digest = line.split()[2]
        elif line.strip() and not line.startswith("#"):
            body.append(line.strip())
    if digest is None or digest != _digest(body):
        raise ExceptionalError(f"checksum mismatch in {path}")
    out = []
    for line in body:
        name, label, kind, cond, roots = line.split("|")
        typ, rank = group_of(name)
        rs = build_root_system(typ, rank)
        support = tuple(root_from_bourbaki_string(rs, s)
                        for s in roots.split(",") if s)
        if rank > 1 and support:
            _check_independent(support)
        out.append(RepresentativeEntry(name, label, kind, cond, support,
                                       _source(rs, support)))
    return out


def _check_independent(support):
    m = np.array(support, dtype=float)
    if np.linalg.matrix_rank(m) != len(support):
        raise ExceptionalError("support roots are not independent")


@lru_cache(maxsize=None)
def _default_database() -> tuple:
    return tuple(load_database())


def database_entries(name: str, p: int, kind: str, database=None):
    db = _default_database() if database is None else database
    return [e for e in db if e.type == name and e.kind == kind
            and condition_holds(e.condition, p)]


# -- recognition ----------------------------------------------------------------

@lru_cache(maxsize=4096)
def _element(name, p, kind, support, lattice) -> ElementData:
    return ElementData(name, p, kind, support, lattice)


@dataclass
class Recognition:
    status: str  # 'unique', 'ambiguous' or 'table'
    labels: tuple
    missing: tuple = ()
    profile: InvariantProfile | None = None

    @property
    def label(self) -> str | None:
        return self.labels[0] if self.status != "ambiguous" else None

    def __str__(self):
        if self.status == "ambiguous":
            return ("ambiguous: " + " or ".join(self.labels)
                    + (f" (needs {', '.join(self.missing)})"
                       if self.missing else ""))
        return self.labels[0]


def recognize(name: str, p: int, kind: str, profile: InvariantProfile,
              lattice: str = "sc", database=None) -> Recognition:
    """Match a profile against the database, field by field.

    Entry invariants are computed lazily, only for entries still tied on
    the earlier fields.  If no entry matches, the published tie-break
    values are consulted.  NIL is never computed, so a tie that only NIL
    could break is reported as ambiguous.
    """
    typ, rank = group_of(name)
    name = f"{typ}{rank}"
    fields = profile_fields(name, kind, p)
    have = profile.present()
    for f in fields:
        if f not in have:
            raise ExceptionalError(f"profile lacks the field {f}")
    left = database_entries(name, p, kind, database)
    for f in fields:
        if f == "nil":
            continue
        left = [e for e in left if _element(
            name, p, kind, e.support, lattice).value(f) == have[f]]
    if len(left) == 1:
        return Recognition("unique", (left[0].label,), profile=profile)
    if len(left) > 1:
        missing = ("nil",) if "nil" in fields else ()
        return Recognition("ambiguous", tuple(e.label for e in left),
                           missing, profile)
    hits = set()
    for n, q, lat, flds, label, value in aux_rows():
        if n != name or q != p or lat not in (None, lattice):
            continue
        if "nil" in flds or not all(f in have for f in flds):
            continue
        got = tuple(have[f] for f in flds)
        if got == (value if len(flds) > 1 else (value,)):
            hits.add(label)
    if len(hits) == 1:
        return Recognition("table", tuple(hits), (), profile)
    if hits:
        return Recognition("ambiguous", tuple(sorted(hits)), (), profile)
    raise ExceptionalError("profile matches no known class")


def classify(name: str, p: int, kind: str, support=None,
             lattice: str = "sc", database=None, matrix=None) -> Recognition:
    """Recognize the element on a root support (or given by its matrix)."""
    if matrix is not None:
        e = ElementData.from_matrix(name, p, kind, matrix, lattice)
    else:
        e = ElementData(name, p, kind, support, lattice)
    return recognize(name, p, kind, e.profile(), lattice, database)


# -- eminence and overgroups ------------------------------------------------------

def eminent_list(name: str, p: int, kind: str = "unipotent") -> list[str]:
    typ, rank = group_of(name)
    if kind not in ("nilpotent", "unipotent"):
        raise ExceptionalError(f"unknown kind {kind}")
    return [lab for lab, cond in EMINENT[f"{typ}{rank}"]
            if condition_holds(cond, p)]


def overgroups(name: str, p: int, kind: str, label: str) -> list[str]:
    """Maximal subsystem overgroups of a distinguished non-eminent class."""
    typ, rank = group_of(name)
    table = OVERGROUPS[kind][f"{typ}{rank}"]
    lab = normalize_label(label)
    if lab not in table or not condition_holds(table[lab][0], p):
        raise ExceptionalError(
            f"{label} is not a distinguished non-eminent {kind} class of "
            f"{name} for p={p}")
    return [g for g, cond in table[lab][1] if condition_holds(cond, p)]


def profile_ties(name: str, p: int, kind: str, lattice: str = "sc",
                 database=None) -> list[list[str]]:
    """Groups of database labels whose profiles coincide.

    Fields are refined in order, so later (costly) fields are computed only
    inside groups still tied.  NIL is skipped, so pairs separated only by
    NIL stay together.
    """
    typ, rank = group_of(name)
    name = f"{typ}{rank}"
    groups = [database_entries(name, p, kind, database)]
    for f in profile_fields(name, kind, p):
        if f == "nil":
            continue
        nxt = []
        for g in groups:
            if len(g) < 2:
                continue
            split: dict = {}
            for e in g:
                v = _element(name, p, kind, e.support, lattice).value(f)
                split.setdefault(v, []).append(e)
            nxt.extend(split.values())
        groups = nxt
    return [[e.label for e in g] for g in groups if len(g) > 1]

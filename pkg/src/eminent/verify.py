"""Table verification shared by the CLI and the test suites."""
from __future__ import annotations

from dataclasses import dataclass

from .classical import (
    decompose, element_from_support, formed_space, parse_decomposition,
)
from .exceptional import ElementData, group_of, levi_classes
from .roots import build_root_system, root_from_bourbaki_string
from .tables import SO7_ROWS, SO_EVEN_ROWS, SP_ROWS, aux_rows


@dataclass
class Check:
    table: str
    row: str
    expected: str
    got: str

    @property
    def ok(self) -> bool:
        return self.expected == self.got

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        out = f"{status} {self.table} {self.row}: {self.expected}"
        return out if self.ok else out + f" (got {self.got})"


def _support(rs, text: str):
    return [root_from_bourbaki_string(rs, s) for s in text.split(",") if s]


def classical_case(typ: str, n: int, support: str, p: int, kind: str) -> str:
    rs = build_root_system(typ, n)
    x = element_from_support(typ, n, _support(rs, support), p, kind)
    try:
        return str(decompose(x, formed_space(typ, n, p), kind))
    except ValueError as exc:
        return f"error: {exc}"


def classical_cases():
    """(table, typ, n, support, p, kind, expected) for every golden row."""
    for n, rows in SP_ROWS.items():
        for support, cond, nil_only, exp in rows:
            for p in ([2] if cond == "p=2" else [2, 3, 5]):
                kinds = ["nilpotent"] if nil_only else ["nilpotent",
                                                        "unipotent"]
                for kind in kinds:
                    yield f"Sp{2 * n}", "C", n, support, p, kind, exp
    for kind, rows in SO7_ROWS.items():
        for support, odd, two in rows:
            for p, exp in ((3, odd), (5, odd), (2, two)):
                if exp is not None:
                    yield "SO7", "B", 3, support, p, kind, exp
    for n, rows in SO_EVEN_ROWS.items():
        for support, odd, nil2, uni2 in rows:
            for p, kind, exp in ((3, "nilpotent", odd), (3, "unipotent", odd),
                                 (5, "nilpotent", odd), (5, "unipotent", odd),
                                 (2, "nilpotent", nil2),
                                 (2, "unipotent", uni2)):
                yield f"SO{2 * n}", "D", n, support, p, kind, exp


def classical_checks() -> list[Check]:
    out = []
    for table, typ, n, support, p, kind, exp in classical_cases():
        got = classical_case(typ, n, support, p, kind)
        want = str(parse_decomposition(exp))
        out.append(Check(table, f"[{support or 'identity'}] p={p} {kind}",
                         want, got))
    return out


def _fmt(v) -> str:
    if isinstance(v, tuple):
        return ",".join(_fmt(x) for x in v)
    return str(v)


def exceptional_cases(names=None):
    """Auxiliary-table rows whose label is realized by a Levi subdiagram."""
    for name, p, lat, flds, label, value in aux_rows():
        if "nil" in flds or (names is not None and name not in names):
            continue
        levis = {c.label: c for c in levi_classes(name)}
        if label not in levis:
            continue
        for lattice in ([lat] if lat else ["sc", "ad"]):
            yield name, p, lattice, flds, label, value, levis[label].nodes


def exceptional_checks(names=None) -> list[Check]:
    out = []
    for name, p, lattice, flds, label, value, nodes in \
            exceptional_cases(names):
        typ, rank = group_of(name)
        rs = build_root_system(typ, rank)
        e = ElementData(name, p, "nilpotent",
                        [rs.simple[i - 1] for i in nodes], lattice)
        got = tuple(e.value(f) for f in flds)
        want = value if len(flds) > 1 else (value,)
        out.append(Check(f"{name} p={p} ({lattice})",
                         f"{label} {'/'.join(flds)}", _fmt(want), _fmt(got)))
    return out


def run(scope: str) -> list[Check]:
    if scope not in ("classical", "exceptional", "all"):
        raise ValueError(f"unknown scope {scope}")
    checks = []
    if scope in ("classical", "all"):
        checks += classical_checks()
    if scope in ("exceptional", "all"):
        checks += exceptional_checks()
    return checks

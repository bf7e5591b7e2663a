"""Command line interface: eminent <subcommand> [options]."""
from __future__ import annotations

import argparse
import sys

import numpy as np

from . import exceptional as ex
from .classical import (
    FLAVORS, decompose, element_from_support, eminent_representative,
    enumerate_decompositions, formed_space, is_eminent_classical,
    regular_representative, so_class_splitting,
)
from .linalg import jordan_partition
from .roots import RootError, build_root_system, parse_root, parse_type
from .verify import run as run_checks

OK, DOMAIN_ERROR, VERIFY_FAILED = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _group(args):
    typ, rank = parse_type(args.type, args.rank)
    rs = build_root_system(typ, rank)
    return rs, rs.name in ex.EXCEPTIONAL


def _need_p(args):
    if args.p is None:
        raise ValueError("--p is required")
    return args.p


def _parse_support(rs, text: str):
    """'100,010,221' with optional coefficients like '2*100' or '-010'."""
    out = []
    for tok in filter(None, (t.strip() for t in text.split(","))):
        c = 1
        if "*" in tok:
            a, tok = tok.split("*", 1)
            c = int(a)
        r = parse_root(rs, tok)
        if sum(r) < 0:
            r, c = tuple(-x for x in r), -c
        out.append((r, c))
    return out


def _read_matrix(path: str) -> np.ndarray:
    with open(path, encoding="utf-8") as fh:
        rows = [[int(v) for v in line.split()] for line in fh
                if line.strip() and not line.lstrip().startswith("#")]
    if not rows or any(len(r) != len(rows[0]) for r in rows):
        raise ValueError(f"{path} does not hold a rectangular matrix")
    return np.array(rows, dtype=np.int64)


def _emit(args, header, rows, text=None):
    """TSV: header plus one line per row.  Text: one line per row from the
    text callback, or 'key: value' lines for a single record."""
    if args.format == "tsv":
        print("\t".join(header))
        for r in rows:
            print("\t".join(str(v) for v in r))
        return
    if text is not None:
        for r in rows:
            print(text(r))
        return
    for r in rows:
        for h, v in zip(header, r):
            if isinstance(v, str) and "\n" in v:
                print(f"{h}:")
                print(v)
            else:
                print(f"{h}: {v}")


def _matrix_text(m) -> str:
    return "\n".join(" ".join(str(int(v)) for v in row) for row in m)


def _support_text(support) -> str:
    parts = []
    for item in support:
        r, c = item if len(item) == 2 and not isinstance(item[0], int) \
            else (item, 1)
        s = "".join(map(str, r))
        parts.append(s if c == 1 else f"{c}*{s}")
    return ",".join(parts)


# -- subcommands ----------------------------------------------------------------

def cmd_represent(args):
    rs, exc = _group(args)
    if exc:
        if not args.label:
            raise ValueError("--label is required for exceptional types")
        e = ex.levi_regular_representative(rs.name, args.label, args.kind)
        _emit(args, ["type", "label", "kind", "support"],
              [[e.type, e.label, e.kind, _support_text(e.support)]])
        return OK
    p = _need_p(args)
    if args.eminent and args.eminent.lower() not in ("regular",) \
            and args.l is None:
        raise ValueError(f"--eminent {args.eminent} needs --l")
    if args.l is not None:
        rep = eminent_representative(rs.type, rs.rank, p, args.kind, args.l)
    else:
        rep = regular_representative(rs.type, rs.rank, args.kind, p)
    d = decompose(rep.matrix, formed_space(rs.type, rs.rank, p), args.kind)
    header = ["type", "kind", "support", "decomposition"]
    row = [rs.name, args.kind, _support_text(rep.support), str(d)]
    if args.format != "tsv":
        header.append("matrix")
        row.append(_matrix_text(rep.matrix))
    _emit(args, header, [row])
    return OK


def _classical_element(args, rs, p):
    if args.matrix_file:
        return _read_matrix(args.matrix_file) % p
    if args.support is None:
        raise ValueError("give --support or --matrix-file")
    return element_from_support(rs.type, rs.rank,
                                _parse_support(rs, args.support), p,
                                args.kind)


def _exceptional_element(args, rs, p) -> ex.ElementData:
    if args.matrix_file:
        return ex.ElementData.from_matrix(rs.name, p, args.kind,
                                          _read_matrix(args.matrix_file),
                                          args.lattice)
    if args.support is None:
        raise ValueError("give --support or --matrix-file")
    return ex.ElementData(rs.name, p, args.kind,
                          _parse_support(rs, args.support), args.lattice)


def cmd_classify(args):
    rs, exc = _group(args)
    p = _need_p(args)
    if exc:
        e = _exceptional_element(args, rs, p)
        res = ex.recognize(rs.name, p, args.kind, e.profile(), args.lattice)
        _emit(args, ["type", "kind", "result", "profile"],
              [[rs.name, args.kind, str(res), str(res.profile)]],
              lambda r: f"{r[2]}; profile: {r[3]}")
        return OK
    x = _classical_element(args, rs, p)
    space = formed_space(rs.type, rs.rank, p)
    d = decompose(x, space, args.kind)
    em = is_eminent_classical(d, rs.type, rs.rank, p, args.kind)
    header = ["type", "kind", "decomposition", "eminent"]
    row = [rs.name, args.kind, str(d), "yes" if em else "no"]
    if space.orthogonal:
        header.append("SO-classes")
        row.append(so_class_splitting(d, space, args.kind))
    if args.format == "tsv":
        _emit(args, header, [row])
    else:
        text = f"{d}; eminent: {row[3]}"
        if space.orthogonal:
            text += f"; SO-classes: {row[4]}"
        print(text)
    return OK


def cmd_invariants(args):
    rs, exc = _group(args)
    p = _need_p(args)
    if exc:
        e = _exceptional_element(args, rs, p)
        prof = e.profile()
        rows = [[k, ",".join(map(str, v)) if isinstance(v, tuple) else v]
                for k, v in prof.present().items()]
        rows.insert(0, ["centralizer_dim", e.centralizer.dim])
        _emit(args, ["invariant", "value"], rows, lambda r: f"{r[0]}: {r[1]}")
        return OK
    x = _classical_element(args, rs, p)
    lam = jordan_partition(x, p, args.kind)
    d = decompose(x, formed_space(rs.type, rs.rank, p), args.kind)
    _emit(args, ["invariant", "value"],
          [["jordan_blocks", ",".join(map(str, lam))],
           ["decomposition", str(d)]], lambda r: f"{r[0]}: {r[1]}")
    return OK


def cmd_eminent(args):
    rs, exc = _group(args)
    p = _need_p(args)
    if exc:
        labels = ex.eminent_list(rs.name, p, args.kind)
    else:
        flavor = FLAVORS[rs.type]
        dim = formed_space(rs.type, rs.rank, p).dim
        labels = [str(d) for d in enumerate_decompositions(
            flavor, dim, p, args.kind)
            if is_eminent_classical(d, rs.type, rs.rank, p, args.kind)]
    _emit(args, ["type", "p", "kind", "label"],
          [[rs.name, p, args.kind, lab] for lab in labels], lambda r: r[3])
    return OK


def cmd_overgroups(args):
    rs, exc = _group(args)
    p = _need_p(args)
    if not exc:
        raise ValueError("overgroup tables cover exceptional types only")
    if not args.label:
        raise ValueError("--label is required")
    groups = ex.overgroups(rs.name, p, args.kind, args.label)
    _emit(args, ["type", "label", "overgroup"],
          [[rs.name, ex.normalize_label(args.label), g] for g in groups],
          lambda r: r[2])
    return OK


def cmd_verify(args):
    checks = run_checks(args.scope)
    if args.format == "tsv":
        print("status\ttable\trow\texpected\tgot")
        for c in checks:
            print("\t".join(["PASS" if c.ok else "FAIL", c.table, c.row,
                             c.expected, c.got]))
    else:
        for c in checks:
            print(c.line())
        bad = sum(not c.ok for c in checks)
        print(f"{len(checks) - bad} of {len(checks)} checks passed")
    return OK if all(c.ok for c in checks) else VERIFY_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="eminent", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True,
                                parser_class=_Parser)

    def common(p, element=False):
        p.add_argument("--type", required=True,
                       help="A..G, optionally with the rank (E8)")
        p.add_argument("--rank", type=int)
        p.add_argument("--p", type=int, help="the characteristic")
        p.add_argument("--lattice", choices=["sc", "ad"], default="sc")
        p.add_argument("--kind", choices=["nilpotent", "unipotent"],
                       default="nilpotent")
        p.add_argument("--format", choices=["text", "tsv"], default="text")
        if element:
            p.add_argument("--support",
                           help="Bourbaki strings, e.g. 100,010,221")
            p.add_argument("--matrix-file")

    p = sub.add_parser("represent", help="print a class representative")
    common(p)
    p.add_argument("--label")
    p.add_argument("--eminent", help="eminent family, e.g. regular or Wl")
    p.add_argument("--l", type=int)
    p.set_defaults(func=cmd_represent)

    p = sub.add_parser("classify", help="decompose or recognize an element")
    common(p, element=True)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("invariants", help="print the invariant profile")
    common(p, element=True)
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("eminent", help="list the eminent classes")
    common(p)
    p.set_defaults(func=cmd_eminent)

    p = sub.add_parser("overgroups", help="maximal subsystem overgroups")
    common(p)
    p.add_argument("--label")
    p.set_defaults(func=cmd_overgroups)

    p = sub.add_parser("verify-tables", help="check the reference tables")
    p.add_argument("scope", choices=["classical", "exceptional", "all"])
    p.add_argument("--format", choices=["text", "tsv"], default="text")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(parser.format_usage().rstrip(), file=sys.stderr)
        print(f"error: {exc}", file=sys.stderr)
        return DOMAIN_ERROR
    except (ValueError, RootError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return DOMAIN_ERROR


if __name__ == "__main__":
    sys.exit(main())

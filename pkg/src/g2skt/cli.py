"""Command-line front end: ``g2skt check-all | metric | sample | group-check | emit``.

Exit codes: 0 when everything passes, 1 when a check fails, 2 on bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .checks import SCHEMA, check_ids, run_checks
from .forms import InvariantForm, d_one_form, format_linear
from .g2 import g2_bracket_table
from .hermitian import (
    MetricParams3,
    check_j_compatible,
    fundamental_form,
    gamma,
    hermitian_components,
    killing_metric,
    region_violations,
    skt_lambdas,
    skt_metric,
    torsion_c,
    torsion_dc,
    torus_invariance,
)
from .numeric import DEFAULT_BOX, DEFAULT_TOL, SampleConfig, group_check, sample
from .roots import LABELS, build_complex_basis, complex_bracket_table
from .scalars import FieldElement

EXIT_PASS, EXIT_FAIL, EXIT_BAD_INPUT = 0, 1, 2

TABLES = ("brackets", "brackets-complex", "droots", "d-table", "c70", "dc71", "metric-components")


class BadInput(Exception):
    """Raised for unparsable or out-of-range command-line values."""


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on usage errors already; keep the message on stderr
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"g2skt: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_BAD_INPUT)


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise BadInput(f"not a rational number: {text!r}") from exc


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False, sort_keys=False)


# -- check-all ----------------------------------------------------------------------


def cmd_check_all(args) -> int:
    only = args.only or None
    if only:
        unknown = [c for c in only if c not in check_ids()]
        if unknown:
            raise BadInput(f"unknown check id: {', '.join(unknown)} (known: {', '.join(check_ids())})")
    reports = run_checks(only)
    ok = all(r.status == "pass" for r in reports)
    if args.json:
        print(_dump({"schema": SCHEMA, "class": "exact", "checks": [r.to_dict() for r in reports], "pass": ok}))
    else:
        width = max(len(r.check_id) for r in reports)
        for r in reports:
            print(f"{r.status.upper():4}  {r.check_id:<{width}}  {r.elapsed_ms:>6} ms  {r.paper_anchor}: {r.detail}")
        passed = sum(r.status == "pass" for r in reports)
        print(f"{passed}/{len(reports)} exact checks passed")
    return EXIT_PASS if ok else EXIT_FAIL


# -- metric -------------------------------------------------------------------------


def _grid_text(rows: list[list[str]]) -> list[str]:
    width = max(len(x) for r in rows for x in r)
    return [" ".join(x.rjust(width) for x in r) for r in rows]


def _biinvariant_scale(a: MetricParams3) -> Fraction | None:
    if a.a1 == 3 * a.a2 and a.a3 == a.a1:
        return a.a1 / 96
    return None


def cmd_metric(args) -> int:
    a = MetricParams3(*(_rational(x) for x in (args.a1, args.a2, args.a3)))
    bad = region_violations(a)
    params = [str(x) for x in a.as_tuple()]
    if bad:
        if args.json:
            print(_dump({"schema": SCHEMA, "a": params, "in_region": False, "violations": bad}))
        else:
            print(f"a = ({', '.join(params)}) is outside the SKT region")
            for v in bad:
                print(f"  {v}")
        return EXIT_BAD_INPUT
    lam = skt_lambdas(a)
    g = skt_metric(a)
    dc = torsion_dc(fundamental_form(lam))
    certs = {
        "positive_definite": g.is_positive_definite(),
        "j_compatible": check_j_compatible(g),
        "torus_invariant": torus_invariance(g),
        "dc_zero": not dc,
    }
    scale = _biinvariant_scale(a)
    if scale is not None:
        certs["biinvariant"] = g == killing_metric(scale)
    ok = all(certs.values())
    if args.json:
        out = {
            "schema": SCHEMA,
            "a": params,
            "in_region": True,
            "gamma": str(gamma(a)),
            "lambdas": {f"lambda{k}": str(v) for k, v in enumerate(lam)},
            "metric": g.to_json(),
            "certificates": certs,
            "pass": ok,
        }
        if scale is not None:
            out["biinvariant_scale"] = str(scale)
        print(_dump(out))
        return EXIT_PASS if ok else EXIT_FAIL
    yes = {True: "yes", False: "NO"}
    print(f"a = ({', '.join(params)})")
    print(f"region: inside (gamma = {gamma(a)})")
    print("lambda = (" + ", ".join(str(x) for x in lam) + ")")
    print("metric on b1..b14:")
    for line in _grid_text(g.to_json()):
        print("  " + line)
    print(f"positive definite: {yes[certs['positive_definite']]}")
    print(f"J-compatible: {yes[certs['j_compatible']]}")
    print(f"torus invariant: {yes[certs['torus_invariant']]}")
    print(f"dc = 0: {yes[certs['dc_zero']]}")
    if scale is not None:
        print(f"bi-invariant: g = −K with λ = {scale} ({yes[certs['biinvariant']]})")
    print("PASS" if ok else "FAIL")
    return EXIT_PASS if ok else EXIT_FAIL


# -- sample / group-check -----------------------------------------------------------


def _box(values: list[str] | None):
    if values is None:
        return DEFAULT_BOX
    if len(values) != 6:
        raise BadInput("--box takes six values: A1LO A1HI A2LO A2HI A3LO A3HI")
    r = [_rational(v) for v in values]
    return ((r[0], r[1]), (r[2], r[3]), (r[4], r[5]))


def cmd_sample(args) -> int:
    point = None if args.point is None else tuple(_rational(x) for x in args.point)
    try:
        cfg = SampleConfig(
            samples=args.n, seed=args.seed, tolerance=args.tol, box=_box(args.box), max_draws=args.max_draws, point=point
        )
    except ValueError as exc:
        raise BadInput(str(exc)) from exc
    report = sample(cfg)
    print(report.to_json() if args.json else report.to_text())
    if report.accepted == 0:
        print("warning: no sampled point fell inside the SKT region", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_PASS if report.all_pass else EXIT_FAIL


def cmd_group_check(args) -> int:
    if args.n < 1:
        raise BadInput("--n must be at least 1")
    if not 0 <= args.seed < 2**64:
        raise BadInput("--seed must be a 64-bit unsigned integer")
    report = group_check(args.n, args.seed)
    print(report.to_json() if args.json else report.to_text())
    return EXIT_PASS if report.all_pass else EXIT_FAIL


# -- emit ---------------------------------------------------------------------------


def _scalar_terms(terms: dict, name) -> list[dict]:
    return [{"label": name(k), "c": str(c)} for k, c in terms.items()]


def _emit_brackets(as_json: bool):
    table = g2_bracket_table()
    rows = []
    for (i, j), terms in sorted(table.constants.items()):
        terms = dict(sorted(terms.items()))
        if as_json:
            rows.append({"i": i, "j": j, "terms": [{"k": k, "c": str(c)} for k, c in terms.items()]})
        else:
            lhs = f"[b{i},b{j}]"
            rhs = format_linear((f"b{k}", FieldElement(c)) for k, c in terms.items())
            rows.append(f"{lhs:<10} = {rhs}")
    return rows


def _emit_brackets_complex(as_json: bool):
    table = complex_bracket_table()
    rows = []
    for (p, q), terms in sorted(table.constants.items()):
        terms = dict(sorted(terms.items()))
        if as_json:
            rows.append({"x": LABELS[p], "y": LABELS[q], "terms": _scalar_terms(terms, LABELS.__getitem__)})
        else:
            lhs = f"[{LABELS[p]},{LABELS[q]}]"
            rows.append(f"{lhs:<14} = {format_linear((LABELS[k], c) for k, c in terms.items())}")
    return rows


def _emit_droots(as_json: bool):
    basis = build_complex_basis()
    rows = []
    for j, (E, root) in enumerate(zip(basis.E, basis.roots), start=1):
        vec = {k: c for k, c in enumerate(E.coeffs, start=1) if c}
        if as_json:
            rows.append(
                {
                    "root": f"alpha{j}",
                    "on_b1": str(root.value_on_b1),
                    "on_b12": str(root.value_on_b12),
                    "vector": [{"k": k, "c": str(c)} for k, c in vec.items()],
                }
            )
        else:
            rows.append(
                f"alpha{j}: b1 -> {root.value_on_b1}, b12 -> {root.value_on_b12};"
                f"  E{j} = {format_linear((f'b{k}', c) for k, c in vec.items())}"
            )
    return rows


def _form_records(form: InvariantForm) -> list[dict]:
    return form.to_json()


def _form_lines(form: InvariantForm) -> list[str]:
    return form.render().splitlines()


def _emit_d_table(as_json: bool):
    rows = []
    for k, name in enumerate(LABELS):
        form = d_one_form(k)
        if as_json:
            rows.append({"label": name + "*", "d": _form_records(form)})
        else:
            terms = (("^".join(LABELS[x] + "*" for x in idx), c) for idx, c in form.terms.items())
            rows.append(f"d{name}* = {format_linear(terms)}")
    return rows


def _emit_form(form: InvariantForm, as_json: bool):
    return _form_records(form) if as_json else _form_lines(form)


def _emit_metric_components(as_json: bool):
    m = hermitian_components()
    rows = []
    for (i, j), v in sorted(m.nonzero_upper().items()):
        if as_json:
            rows.append({"i": i, "j": j, "value": str(v)})
        else:
            rows.append(f"g(b{i},b{j}) = {v}")
    return rows


def emit_table(name: str, as_json: bool = False) -> str:
    """Text (or JSON) rendering of a computed table; deterministic byte for byte."""
    builders = {
        "brackets": _emit_brackets,
        "brackets-complex": _emit_brackets_complex,
        "droots": _emit_droots,
        "d-table": _emit_d_table,
        "c70": lambda j: _emit_form(torsion_c(), j),
        "dc71": lambda j: _emit_form(torsion_dc(), j),
        "metric-components": _emit_metric_components,
    }
    if name not in builders:
        raise BadInput(f"unknown table: {name!r} (known: {', '.join(TABLES)})")
    rows = builders[name](as_json)
    if as_json:
        return _dump({"schema": SCHEMA, "table": name, "entries": rows})
    return "\n".join(rows)


def cmd_emit(args) -> int:
    print(emit_table(args.table, args.json))
    return EXIT_PASS


# -- entry point --------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="g2skt", description="Exact SKT computations on the compact Lie group G2.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("check-all", help="run every exact certificate check")
    c.add_argument("--only", action="append", metavar="ID", help="run only this check (repeatable)")
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=cmd_check_all)

    m = sub.add_parser("metric", help="evaluate the SKT metric at (a1, a2, a3)")
    for name in ("a1", "a2", "a3"):
        m.add_argument(name, metavar=name.upper())
    m.add_argument("--json", action="store_true")
    m.set_defaults(func=cmd_metric)

    s = sub.add_parser("sample", help="randomized floating-point cross-check")
    s.add_argument("--n", type=int, default=1000, help="accepted points to test")
    s.add_argument("--seed", type=int, default=42)
    s.add_argument("--tol", type=float, default=DEFAULT_TOL)
    s.add_argument("--box", nargs=6, metavar="B", help="A1LO A1HI A2LO A2HI A3LO A3HI")
    s.add_argument("--point", nargs=3, metavar="A", help="test this single point instead of sampling")
    s.add_argument("--max-draws", type=int, default=None, help="draw cap (default 100 * n)")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_sample)

    g = sub.add_parser("group-check", help="exp(tX) preserves phi for random X in g2")
    g.add_argument("--n", type=int, default=100)
    g.add_argument("--seed", type=int, default=42)
    g.add_argument("--json", action="store_true")
    g.set_defaults(func=cmd_group_check)

    e = sub.add_parser("emit", help="print a computed table")
    e.add_argument("table", metavar="TABLE", help=" | ".join(TABLES))
    e.add_argument("--json", action="store_true")
    e.set_defaults(func=cmd_emit)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except BadInput as exc:
        print(f"g2skt: error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())

"""``markovcoe`` command line front end.

Exit codes: 0 every check passed, 1 some check failed, 2 malformed input,
3 input that violates a matrix, transducer or measure invariant.
"""

from __future__ import annotations

import argparse
import sys

from . import __version__
from .coe import orbit_table
from .cylfn import coboundary_witness, is_order_unit, is_positive_class
from .errors import NotOrderUnit, SchemaError, ValidationError
from .io import dumps, load_cylfn, load_measure, load_space, load_spec, read_json
from .measures import check_invariance, check_normalization, check_positivity, cylinder_table, parry_measure, pushforward
from .report import FAIL, PASS, CertReport, jsonable, verdict
from .suite import overall, run_jobs, verify_suite
from .zeta import check_zeta_theorem, det_invariant, weighted_zeta, zeta_series

EXIT_OK, EXIT_FAIL, EXIT_SCHEMA, EXIT_VALIDATION = 0, 1, 2, 3


def _load(path, role, inputs):
    data, digest = read_json(path)
    inputs[role] = "sha256:" + digest
    return data


def _report(command, params, inputs, checks, timings, **extra) -> dict:
    out = {
        "tool": "markovcoe",
        "version": __version__,
        "command": command,
        "parameters": params,
        "inputs": inputs,
    }
    out.update({k: jsonable(v) for k, v in extra.items()})
    if checks is not None:
        out["checks"] = [c.to_json(timings) for c in checks]
        out["verdict"] = overall(checks).verdict if checks else PASS
    return out


def _text(report: dict) -> str:
    lines = [f"markovcoe {report['version']} {report['command']}"]
    for role, digest in report["inputs"].items():
        lines.append(f"  input {role}: {digest}")
    for key in ("series", "rows", "decision", "mass", "cylinders"):
        if key not in report:
            continue
        val = report[key]
        if key == "series":
            for name, s in val.items():
                lines.append(f"  {name}: {', '.join(s['coeffs'])}")
        elif key == "rows":
            for r in val:
                mark = "=" if r["equal"] else "!="
                lines.append(f"  {_cyc(r['orbit'])} -> {_cyc(r['image'])}  |gamma|={r['period']}  "
                             f"|xi|={r['image_period']} {mark} beta={r['beta_c1']}")
        elif key == "cylinders":
            lines.append("  cylinder masses: " + ", ".join(f"[{w}]={m}" for w, m in val.items()))
        else:
            lines.append(f"  {key}: {val}")
    for c in report.get("checks", []):
        tail = f"  witness={c['witness']}" if "witness" in c else ""
        lines.append(f"{c['verdict'].upper():7} {c['name']}  ({c['identity']}){tail}")
    if "verdict" in report:
        lines.append(f"overall: {report['verdict']}")
    return "\n".join(lines) + "\n"


def _cyc(orbit_json):
    return "(" + "".join(str(a) for a in orbit_json) + ")"


def cmd_verify(args, inputs):
    spec = load_spec(_load(args.spec, "spec", inputs))
    checks = run_jobs(verify_suite(spec, args.bound, args.depth), args.threads)
    return _report("verify", {"bound": args.bound, "depth": args.depth}, inputs, checks, args.timings)


def _is_spec(data) -> bool:
    return isinstance(data, dict) and "h" in data


def cmd_zeta(args, inputs):
    data = _load(args.input, "input", inputs)
    L = args.truncate
    params = {"truncate": L, "weight": args.weight}
    series, checks = {}, []
    if _is_spec(data):
        spec = load_spec(data)
        series["zeta_A"] = zeta_series(spec.A, L)
        series["zeta_B"] = zeta_series(spec.B, L)
        if args.weight in (None, "c1"):
            series["weighted_c1"] = weighted_zeta(spec.A, spec.c1, L)
        if args.weight in (None, "c2"):
            series["weighted_c2"] = weighted_zeta(spec.B, spec.c2, L)
        if args.weight not in (None, "c1", "c2"):
            w = load_cylfn(spec.A, _load(args.weight, "weight", inputs))
            series["weighted"] = weighted_zeta(spec.A, w, L)
        checks = [check_zeta_theorem(spec, L), det_invariant(spec)]
    else:
        S = load_space(data)
        series["zeta"] = zeta_series(S, L)
        if args.weight in ("c1", "c2"):
            raise SchemaError(f"weight {args.weight} needs a spec file, not a matrix")
        if args.weight is not None:
            w = load_cylfn(S, _load(args.weight, "weight", inputs))
            series["weighted"] = weighted_zeta(S, w, L)
    return _report("zeta", params, inputs, checks, args.timings, series=series)


def cmd_cohomology(args, inputs):
    S = load_space(_load(args.matrix, "matrix", inputs))
    f = load_cylfn(S, _load(args.function, "function", inputs))
    decide = {"positive": is_positive_class, "order-unit": is_order_unit, "coboundary": coboundary_witness}
    d = decide[args.question](f)
    return _report("cohomology", {"question": args.question}, inputs, None, args.timings, decision=d)


def cmd_measure(args, inputs):
    spec = load_spec(_load(args.spec, "spec", inputs))
    if args.parry:
        mu = parry_measure(spec.A, args.tol)
    elif args.measure:
        mu = load_measure(spec.A, _load(args.measure, "measure", inputs))
    else:
        raise SchemaError("give a measure file or --parry")
    nu = pushforward(spec, mu)
    checks = [check_invariance(nu, args.depth), check_positivity(nu, args.depth), check_normalization(spec, mu)]
    params = {"depth": args.depth, "parry": bool(args.parry)}
    return _report("measure", params, inputs, sorted(checks, key=lambda c: c.name), args.timings,
                   base=mu, mass=checks[2].details["mass"], cylinders=cylinder_table(nu, args.depth))


def cmd_orbits(args, inputs):
    spec = load_spec(_load(args.spec, "spec", inputs))
    rows = orbit_table(spec, args.max_period)
    bad = next((r["orbit"] for r in rows if not r["equal"]), None)
    check = CertReport("orbit-length-table", verdict(bad is None), "|xi_h(gamma)| = beta_gamma([c1])",
                       args.max_period, bad, {"rows": len(rows)})
    return _report("orbits", {"max_period": args.max_period}, inputs, [check], args.timings, rows=rows)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", metavar="PATH", help="write the report here instead of stdout")
    common.add_argument("--threads", type=int, default=1, metavar="N", help="worker threads for independent checks")
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--timings", action="store_true", help="include runtime_ms per check (breaks byte equality)")

    p = argparse.ArgumentParser(prog="markovcoe", description="Exact checks for continuous orbit equivalences "
                                "of one-sided topological Markov shifts.")
    p.add_argument("--version", action="version", version=f"markovcoe {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", parents=[common], help="certify a spec file")
    v.add_argument("spec")
    v.add_argument("--bound", type=int, default=8)
    v.add_argument("--depth", type=int, default=5)
    v.set_defaults(func=cmd_verify)

    z = sub.add_parser("zeta", parents=[common], help="zeta series of a matrix or a spec")
    z.add_argument("input", help="spec or matrix file")
    z.add_argument("--truncate", type=int, default=12, metavar="L")
    z.add_argument("--weight", help="c1, c2 or a cylinder function file")
    z.set_defaults(func=cmd_zeta)

    c = sub.add_parser("cohomology", parents=[common], help="decide a question about a cohomology class")
    c.add_argument("matrix")
    c.add_argument("function")
    c.add_argument("--question", choices=("positive", "order-unit", "coboundary"), default="positive")
    c.set_defaults(func=cmd_cohomology)

    m = sub.add_parser("measure", parents=[common], help="push a Markov measure through Psi_h")
    m.add_argument("spec")
    m.add_argument("measure", nargs="?")
    m.add_argument("--parry", action="store_true", help="use the Parry measure of A")
    m.add_argument("--tol", type=float, default=1e-12)
    m.add_argument("--depth", type=int, default=4)
    m.set_defaults(func=cmd_measure)

    o = sub.add_parser("orbits", parents=[common], help="tabulate the periodic orbit correspondence")
    o.add_argument("spec")
    o.add_argument("--max-period", type=int, default=8, metavar="P")
    o.set_defaults(func=cmd_orbits)
    return p


def _emit(text, args):
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    inputs = {}
    try:
        report = args.func(args, inputs)
    except SchemaError as exc:
        print(f"markovcoe: schema error: {exc}", file=sys.stderr)
        return EXIT_SCHEMA
    except OSError as exc:
        print(f"markovcoe: cannot read input: {exc}", file=sys.stderr)
        return EXIT_SCHEMA
    except ValidationError as exc:
        print(f"markovcoe: invalid input ({type(exc).__name__}): {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except NotOrderUnit as exc:
        params = {k: v for k, v in vars(args).items() if k in ("truncate", "weight", "question")}
        report = _report(args.command, params, inputs, None, False,
                         error={"type": "NotOrderUnit", "mean": exc.mean, "cycle": exc.cycle,
                                "message": str(exc)})
        report["verdict"] = FAIL
        _emit(dumps(report), args)
        print(f"markovcoe: {exc}", file=sys.stderr)
        return EXIT_FAIL
    _emit(dumps(report) if args.format == "json" else _text(report), args)
    return EXIT_FAIL if report.get("verdict") == FAIL else EXIT_OK


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end.

Every subcommand prints one JSON report on stdout. Exit status is 0 on
success, 1 on errors (message on stderr) and 2 when ``demo --check`` finds a
verdict that differs from the gallery's expectation.
"""

from __future__ import annotations

import argparse
import sys
import time

from . import report
from .analyzer import CHECKS, PROPERTIES, analyze, default_radius, verify_duality_finite
from .constructions import GALLERY, named
from .document import AutomatonDocument, format_document, load_document, parse_document
from .engine import evolve, pair
from .errors import LCAError, UsageError
from .groupring import adjoint


def _read(path):
    if path == "-":
        return parse_document(sys.stdin.read())
    return load_document(path)


def _header(command, doc):
    return {
        "command": command,
        "field": doc.field.name,
        "group": doc.group.describe(),
        "n": doc.n,
    }


def cmd_adjoint(args):
    doc = _read(args.document)
    dual = AutomatonDocument(doc.field, doc.group, adjoint(doc.theta))
    if args.format == "doc":
        return 0, format_document(dual)
    out = _header("adjoint", doc)
    out["matrix"] = doc.theta.format_grid()
    out["adjoint"] = dual.theta.format_grid()
    return 0, report.dumps(out)


def cmd_evolve(args):
    doc = _read(args.document)
    if doc.config is None:
        raise UsageError("evolve needs a 'config:' block")
    if args.steps < 0:
        raise UsageError("--steps must be >= 0")
    c = doc.config
    trajectory = [report.configuration_to_json(c)]
    for _ in range(args.steps):
        c = evolve(doc.theta, c)
        trajectory.append(report.configuration_to_json(c))
    out = _header("evolve", doc)
    out["steps"] = args.steps
    out["trajectory"] = trajectory
    return 0, report.dumps(out)


def cmd_pair(args):
    doc = _read(args.document)
    if doc.config is None or doc.omega is None:
        raise UsageError("pair needs both 'omega:' and 'config:' blocks")
    out = _header("pair", doc)
    out["value"] = doc.field.format(pair(doc.omega, doc.config))
    return 0, report.dumps(out)


def _properties(arg, doc):
    if arg:
        props = tuple(p.strip() for p in arg.split(",") if p.strip())
    else:
        props = doc.properties or PROPERTIES
    for p in props:
        if p not in CHECKS:
            raise UsageError(f"unknown property {p!r}; choose from {', '.join(PROPERTIES)}")
    return props


def cmd_analyze(args):
    doc = _read(args.document)
    r = args.radius if args.radius is not None else doc.radius
    if r is None:
        r = default_radius(doc.group)
    out = _header("analyze", doc)
    out["radius"] = r
    out["verdicts"] = []
    for p in _properties(args.properties, doc):
        t0 = time.perf_counter()
        (v,) = analyze(doc.theta, (p,), r)
        elapsed = time.perf_counter() - t0 if args.timing else None
        out["verdicts"].append(report.verdict_to_json(v, doc.group, doc.field, elapsed))
    return 0, report.dumps(out)


def cmd_verify_finite(args):
    doc = _read(args.document)
    out = _header("verify-finite", doc)
    out["report"] = report.duality_report_to_json(verify_duality_finite(doc.theta))
    return 0, report.dumps(out)


def run_demo(name, field="F2", timing=False):
    """Analyze a gallery entry against its expectation table; returns (report, all_ok)."""
    entry = named(name, field)
    targets = {"theta": entry.theta, "adjoint": entry.adjoint}
    out = {
        "command": "demo",
        "name": entry.name,
        "description": entry.description,
        "field": entry.field.name,
        "group": entry.group.describe(),
        "n": entry.theta.n,
        "matrix": entry.theta.format_grid(),
        "adjoint": entry.adjoint.format_grid(),
        "checks": [],
    }
    all_ok = True
    for exp in entry.expected:
        t0 = time.perf_counter()
        v = CHECKS[exp.property](targets[exp.target], exp.radius)
        elapsed = time.perf_counter() - t0 if timing else None
        ok = v.status is exp.status
        all_ok &= ok
        out["checks"].append(
            {
                "target": exp.target,
                "expected": exp.status.value,
                "ok": ok,
                "verdict": report.verdict_to_json(v, entry.group, entry.field, elapsed),
            }
        )
    out["ok"] = all_ok
    return out, all_ok


def cmd_demo(args):
    out, ok = run_demo(args.name, args.field, args.timing)
    code = 2 if (args.check and not ok) else 0
    return code, report.dumps(out)


class _Parser(argparse.ArgumentParser):
    # usage errors exit with 1; status 2 is reserved for demo --check
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def build_parser():
    parser = _Parser(
        prog="lcaduality",
        description="Linear cellular automata over group rings: adjoints, evolution and property checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("adjoint", help="print the adjoint automaton")
    p.add_argument("document", help="automaton document, or - for stdin")
    p.add_argument("--format", choices=("json", "doc"), default="json")
    p.set_defaults(func=cmd_adjoint)

    p = sub.add_parser("evolve", help="apply the automaton to the document's configuration")
    p.add_argument("document")
    p.add_argument("--steps", type=int, default=1)
    p.set_defaults(func=cmd_evolve)

    p = sub.add_parser("pair", help="evaluate <omega|config>")
    p.add_argument("document")
    p.set_defaults(func=cmd_pair)

    p = sub.add_parser("analyze", help="run property checks up to a radius")
    p.add_argument("document")
    p.add_argument("--radius", type=int)
    p.add_argument("--properties", help=f"comma-separated subset of {','.join(PROPERTIES)}")
    p.add_argument("--timing", action="store_true", help="include wall-clock timings (not byte-stable)")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("verify-finite", help="check the four orthogonality relations on a finite group")
    p.add_argument("document")
    p.set_defaults(func=cmd_verify_finite)

    p = sub.add_parser("demo", help="analyze a gallery automaton")
    p.add_argument("name", choices=sorted(GALLERY))
    p.add_argument("--field", default="F2")
    p.add_argument("--check", action="store_true", help="exit with status 2 on any unexpected verdict")
    p.add_argument("--timing", action="store_true")
    p.set_defaults(func=cmd_demo)
    return parser


def run(argv):
    """Run a command line; returns ``(exit_code, stdout_text)`` and raises nothing."""
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (LCAError, OSError) as exc:
        print(f"lcaduality: error: {exc}", file=sys.stderr)
        return 1, ""


def main(argv=None):
    code, text = run(sys.argv[1:] if argv is None else argv)
    sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())

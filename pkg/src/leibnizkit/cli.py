"""Command-line entry point.

Exit codes: 0 all checks pass / property holds, 1 a check failed or a
counterexample was found, 2 invalid input (parse errors, failed side
conditions, identity failure before a structural command).
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from .algebra import (
    Algebra,
    Verdict,
    centers,
    check_left_leibniz,
    classify_subalgebra,
    generated_subalgebra,
    is_lie,
    leibniz_kernel,
    quotient,
    subalgebra,
    upper_idealizer_series,
)
from .derivations import derivation_space
from .errors import IdentityFailed, LeibnizError, ParseError
from .exactlinalg import Subspace
from .latticescan import ScanBudget, check_property_IorSI, nilpotent_radical, verify_declared_radical
from .report import Check, Report, Status
from .scalars import GF, QQ, FieldSpec, function_field
from .zoo import RECIPES, ZooRecipe


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.exit(2, f"error: {message}\n")


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="leibnizkit", description="Exact toolkit for finite-dimensional left Leibniz algebras.")
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    def with_file(name, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("file")
        p.add_argument("--json", metavar="OUT", help="write the JSON report here")
        return p

    with_file("check", "verify the left Leibniz identity on all basis triples")
    with_file("info", "dimension, Leibniz kernel, centers, Lie test")
    with_file("derivations", "basis of the derivation algebra")
    p = with_file("series", "upper idealizer series of a subalgebra")
    p.add_argument("--span", required=True)
    p = with_file("classify", "ideal / self-idealizing / neither")
    p.add_argument("--span", required=True)
    p = with_file("property", "check that every subalgebra is an ideal or self-idealizing")
    p.add_argument("--max-degree", type=int, default=2)
    p.add_argument("--max-subspaces", type=int, default=10**6)
    p = with_file("radical", "nilpotent radical, or verify a declared one")
    p.add_argument("--declare", metavar="S")
    p = with_file("quotient", "quotient by an ideal")
    p.add_argument("--span", required=True)
    p.add_argument("-o", "--output", required=True)

    z = sub.add_parser("zoo", help="build a named algebra")
    z.add_argument("recipe", choices=sorted(RECIPES))
    g = z.add_mutually_exclusive_group(required=True)
    g.add_argument("--p", type=int, help="prime field GF(p)")
    g.add_argument("--field", help="Q, GF(p), GF(p)(t) or FieldSpec JSON")
    z.add_argument("--param", action="append", default=[], metavar="NAME=VALUE")
    z.add_argument("-o", "--output", required=True)
    z.add_argument("--json", metavar="OUT")
    return parser


def parse_field(text: str) -> FieldSpec:
    import re

    text = text.strip()
    if text.startswith("{"):
        try:
            return FieldSpec.from_json(json.loads(text))
        except json.JSONDecodeError as exc:
            raise ParseError(f"--field: {exc}") from None
    if text in ("Q", "QQ", "rational", "rationals"):
        return QQ
    m = re.fullmatch(r"GF\((\d+)\)(?:\((\w+)\))?", text.replace(" ", ""))
    if not m:
        raise ParseError(f"--field: cannot read {text!r}")
    try:
        if m.group(2):
            return function_field(int(m.group(1)), m.group(2))
        return GF(int(m.group(1)))
    except ValueError as exc:
        raise ParseError(f"--field: {exc}") from None


def _rows(s: Subspace) -> list[list[str]]:
    return [[str(x) for x in row] for row in s.basis]


class _Run:
    def __init__(self, args, argv):
        self.args = args
        self.report = Report(" ".join(argv), "")
        self.out = []

    def say(self, line=""):
        self.out.append(line)

    def load(self) -> Algebra:
        try:
            alg = Algebra.load(self.args.file)
        except OSError as exc:
            raise ParseError(f"{self.args.file}: {exc.strerror}") from None
        self.report.algebra = alg.name
        return alg

    def require_identity(self, alg: Algebra):
        violations = check_left_leibniz(alg)
        self.report.identity = Status.FAIL if violations else Status.PASS
        if violations:
            self.report.details["violations"] = [[alg.basis_names[i] for i in v] for v in violations]
            raise IdentityFailed(f"{alg.name} fails the left Leibniz identity at {len(violations)} basis triple(s)", violations)

    def span(self, alg: Algebra, text: str) -> Subspace:
        return Subspace.parse(alg.field, alg.dim, text)


def _cmd_check(run: _Run) -> int:
    alg = run.load()
    violations = check_left_leibniz(alg)
    n = alg.dim
    run.report.identity = Status.FAIL if violations else Status.PASS
    names = [[alg.basis_names[i] for i in v] for v in violations]
    run.report.add(Check("left Leibniz identity", run.report.identity, names or None))
    run.report.details["triples"] = n**3
    if violations:
        run.say(f"{alg.name}: identity FAILS on {len(violations)} of {n**3} basis triples")
        for v in names:
            run.say(f"  ({', '.join(v)})")
        return 1
    run.say(f"{alg.name}: identity pass over {n**3} triples")
    return 0


def _cmd_info(run: _Run) -> int:
    alg = run.load()
    run.require_identity(alg)
    kern = leibniz_kernel(alg)
    left, right, full = centers(alg)
    lie = is_lie(alg)
    run.report.details.update(
        {
            "dim": alg.dim,
            "field": alg.field.to_json(),
            "is_lie": lie,
            "leibniz_kernel": _rows(kern),
            "left_center": _rows(left),
            "right_center": _rows(right),
            "center": _rows(full),
        }
    )
    run.say(f"{alg.name} over {alg.field}, dim {alg.dim}")
    run.say(f"  Lie algebra: {'yes' if lie else 'no'}")
    run.say(f"  Leib(L) = {alg.format_subspace(kern)}")
    run.say(f"  left center = {alg.format_subspace(left)}")
    run.say(f"  right center = {alg.format_subspace(right)}")
    run.say(f"  center = {alg.format_subspace(full)}")
    return 0


def _cmd_derivations(run: _Run) -> int:
    alg = run.load()
    run.require_identity(alg)
    d = derivation_space(alg)
    mats = [f.to_strings() for f in d.basis]
    run.report.details["dim"] = d.dim
    run.report.details["derivations"] = mats
    run.say(f"Der({alg.name}) has dimension {d.dim}")
    run.say(json.dumps(mats))
    return 0


def _closure(run: _Run, alg: Algebra):
    s = run.span(alg, run.args.span)
    h = subalgebra(alg, s)
    if not h.closed:
        h = generated_subalgebra(alg, s.basis)
        run.report.details["closure_enlarged"] = True
        run.say(f"  closure of the span: {alg.format_subspace(h.space)}")
    else:
        run.report.details["closure_enlarged"] = False
    run.report.details["span"] = _rows(h.space)
    return h


def _cmd_series(run: _Run) -> int:
    alg = run.load()
    run.require_identity(alg)
    h = _closure(run, alg)
    series = upper_idealizer_series(alg, h)
    run.report.details["series"] = [_rows(s) for s in series]
    run.say(f"upper idealizer series (length {len(series)}):")
    for s in series:
        run.say(f"  {alg.format_subspace(s)}")
    return 0


def _cmd_classify(run: _Run) -> int:
    alg = run.load()
    run.require_identity(alg)
    h = _closure(run, alg)
    c = classify_subalgebra(alg, h)
    series = upper_idealizer_series(alg, h)
    run.report.details.update(
        {
            "verdict": c.verdict.value,
            "idealizer": _rows(c.idealizer),
            "series": [_rows(s) for s in series],
            "witness": [str(x) for x in c.witness] if c.witness else None,
        }
    )
    run.report.add(
        Check(
            "ideal or self-idealizing",
            Status.FAIL if c.verdict is Verdict.NEITHER else Status.PASS,
            None if c.witness is None else [str(x) for x in c.witness],
        )
    )
    run.say(f"{alg.format_subspace(h.space)}: {c.verdict.value}")
    run.say(f"  idealizer = {alg.format_subspace(c.idealizer)}")
    if c.witness:
        run.say(f"  witness in idealizer but not in S: {alg.format_vector(c.witness)}")
    run.say(f"  upper idealizer series (length {len(series)}): " + " < ".join(alg.format_subspace(s) for s in series))
    return 0 if run.report.passed else 1


def _cmd_property(run: _Run) -> int:
    alg = run.load()
    run.require_identity(alg)
    budget = ScanBudget.for_field(alg.field, run.args.max_degree, run.args.max_subspaces)
    pr = check_property_IorSI(alg, budget)
    data = pr.to_json()
    run.report.details.update(data)
    status = Status.PASS if pr.holds else Status.FAIL
    if pr.holds and pr.mode == "sampled":
        status = Status.UNKNOWN
    run.report.add(Check("every subalgebra is an ideal or self-idealizing", status, data["counterexample"]))
    c = data["counts"]
    run.say(f"{alg.name}: {pr.claim} ({pr.mode})")
    run.say(
        f"  scanned {c['subspaces_scanned']} subspaces: {c['subalgebras']} subalgebras, "
        f"{c['ideals']} ideals, {c['self_idealizing']} self-idealizing, {c['neither']} neither"
    )
    if not pr.holds:
        h, cl = pr.counterexample, pr.classification
        run.say(f"  counterexample: {h.space.encode()}  ({alg.format_subspace(h.space)}) classified {cl.verdict.value}")
        series = upper_idealizer_series(alg, h)
        run.report.details["counterexample"]["series"] = [s.encode() for s in series]
        run.say("  upper idealizer series: " + " < ".join(alg.format_subspace(s) for s in series))
        return 1
    return 0


def _cmd_radical(run: _Run) -> int:
    alg = run.load()
    run.require_identity(alg)
    if run.args.declare is not None:
        s = run.span(alg, run.args.declare)
        rep = verify_declared_radical(alg, s)
        run.report.checks.extend(rep.checks)
        run.report.details.update(rep.details)
        for c in rep.checks:
            run.say(f"  {c.name}: {c.status.value}" + (f" ({c.witness})" if c.witness else ""))
        run.say(f"nilpotent ideal: {rep.details.get('nilpotent ideal', 'no')}")
        return 0 if rep.passed else 1
    if not alg.field.is_finite:
        raise ParseError(f"radical search needs a prime field; use --declare over {alg.field}")
    rad = nilpotent_radical(alg)
    run.report.details["radical"] = _rows(rad)
    run.say(f"Ln({alg.name}) = {alg.format_subspace(rad)}")
    return 0


def _cmd_quotient(run: _Run) -> int:
    alg = run.load()
    run.require_identity(alg)
    s = run.span(alg, run.args.span)
    q = quotient(alg, s)
    q.save(run.args.output)
    run.report.details["quotient"] = q.to_json()
    run.say(f"wrote {q.name} (dim {q.dim}) to {run.args.output}")
    return 0


def _cmd_zoo(run: _Run) -> int:
    args = run.args
    if args.p is not None:
        try:
            field = GF(args.p)
        except ValueError as exc:
            raise ParseError(f"--p: {exc}") from None
    else:
        field = parse_field(args.field)
    params = {}
    for item in args.param:
        if "=" not in item:
            raise ParseError(f"--param {item!r} is not NAME=VALUE")
        k, v = item.split("=", 1)
        params[k.strip()] = v.strip()
    try:
        alg = ZooRecipe(args.recipe, field, params).build()
    except ValueError as exc:
        raise ParseError(f"{args.recipe}: {exc}") from None
    alg.save(args.output)
    violations = check_left_leibniz(alg)
    run.report.algebra = alg.name
    run.report.identity = Status.FAIL if violations else Status.PASS
    run.say(f"wrote {alg.name} to {args.output}")
    if violations:
        names = [[alg.basis_names[i] for i in v] for v in violations]
        run.report.details["violations"] = names
        run.say(f"  warning: identity fails on {len(violations)} basis triple(s)")
    return 0


_COMMANDS = {
    "check": _cmd_check,
    "info": _cmd_info,
    "derivations": _cmd_derivations,
    "series": _cmd_series,
    "classify": _cmd_classify,
    "property": _cmd_property,
    "radical": _cmd_radical,
    "quotient": _cmd_quotient,
    "zoo": _cmd_zoo,
}


def run(argv: list[str] | None = None, stdout=None) -> int:
    """Parse ``argv``, dispatch, print a summary; returns the exit code."""
    argv = list(sys.argv[1:] if argv is None else argv)
    stdout = stdout or sys.stdout
    try:
        args = _build_parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    job = _Run(args, argv)
    start = time.perf_counter()
    try:
        code = _COMMANDS[args.verb](job)
    except IdentityFailed as exc:
        job.say(f"error: {exc}")
        for v in job.report.details.get("violations", []):
            job.say(f"  ({', '.join(v)})")
        code = 2
    except LeibnizError as exc:
        job.say(f"error: {exc}")
        job.report.details["error"] = str(exc)
        code = 2
    job.report.timing = round(time.perf_counter() - start, 6)
    for line in job.out:
        print(line, file=stdout)
    if getattr(args, "json", None):
        Path(args.json).write_text(job.report.dumps())
    return code


def main() -> None:
    sys.exit(run())

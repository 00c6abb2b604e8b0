"""Subspace enumeration and the ideal-or-self-idealizing property checker.

Over GF(p) every subspace of F^n is produced exactly once by walking RREF
patterns: pivot columns in lexicographic order, then free entries in
lexicographic residue order.  Over infinite fields the same walk runs with
free entries drawn from a fixed sample grid, which gives a deterministic
but incomplete scan.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from itertools import combinations, product
from typing import Iterator, Sequence

from .algebra import (
    Algebra,
    Classification,
    SubalgebraHandle,
    Verdict,
    check_left_leibniz,
    classify_subalgebra,
    generated_subalgebra,
    is_closed,
    is_ideal,
    is_nilpotent,
)
from .errors import BudgetExceeded, IdentityFailed, RadicalInconsistent
from .exactlinalg import Subspace, subspace_sum, zero_subspace
from .report import Check, Report, Status
from .scalars import FieldSpec, Scalar

__all__ = [
    "PropertyReport",
    "ScanBudget",
    "check_property_IorSI",
    "default_sample_set",
    "enumerate_ideals",
    "enumerate_subalgebras",
    "enumerate_subspaces",
    "gaussian_binomial",
    "nilpotent_radical",
    "rref_grid",
    "verify_declared_radical",
]

DEFAULT_MAX_STATES = 3**10
DEFAULT_MAX_SUBSPACES = 10**6


def gaussian_binomial(n: int, k: int, q: int) -> int:
    """Number of k-dimensional subspaces of GF(q)^n."""
    if k < 0 or k > n:
        return 0
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def default_sample_set(field: FieldSpec, max_degree: int = 2) -> list[Scalar]:
    """Sample coefficients for infinite fields.

    GF(p)(t): every polynomial of degree <= ``max_degree``, zero first.
    Rationals: a handful of small fractions.
    """
    if field.kind == "rational_function":
        out = [field.zero]
        for d in range(max_degree + 1):
            for lower in product(range(field.p), repeat=d):
                for lead in range(1, field.p):
                    out.append(field.poly(tuple(lower) + (lead,)))
        return out
    if field.kind == "rational":
        return [field(x) for x in ("0", "1", "-1", "2", "1/2", "-2")]
    return list(field.elements())


@dataclass(frozen=True)
class ScanBudget:
    mode: str = "exhaustive"
    max_coeff_degree: int = 2
    sample_set: tuple = ()
    max_subspaces: int = DEFAULT_MAX_SUBSPACES
    max_states: int = DEFAULT_MAX_STATES

    def __post_init__(self):
        if self.mode not in ("exhaustive", "sampled"):
            raise ValueError(f"unknown scan mode {self.mode!r}")
        if self.max_subspaces <= 0 or self.max_states <= 0 or self.max_coeff_degree < 0:
            raise ValueError("scan guards must be positive")

    @classmethod
    def for_field(cls, field: FieldSpec, max_degree: int = 2, max_subspaces: int = DEFAULT_MAX_SUBSPACES) -> ScanBudget:
        if field.is_finite:
            return cls("exhaustive", max_degree, (), max_subspaces)
        return cls("sampled", max_degree, tuple(default_sample_set(field, max_degree)), max_subspaces)


def _pattern_rows(field: FieldSpec, n: int, pivots: Sequence[int], values: Sequence[Scalar]):
    """Every RREF matrix with the given pivots and free entries from ``values``."""
    pivset = set(pivots)
    slots = [(r, c) for r, p in enumerate(pivots) for c in range(p + 1, n) if c not in pivset]
    zero, one = field.zero, field.one
    for fill in product(values, repeat=len(slots)):
        rows = [[zero] * n for _ in pivots]
        for r, p in enumerate(pivots):
            rows[r][p] = one
        for (r, c), v in zip(slots, fill):
            rows[r][c] = v
        yield Subspace(field, n, tuple(tuple(r) for r in rows), tuple(pivots))


def rref_grid(field: FieldSpec, n: int, values: Sequence[Scalar], dim: int | None = None) -> Iterator[Subspace]:
    """RREF patterns in canonical order (dimension, pivots, free entries)."""
    dims = range(n + 1) if dim is None else [dim]
    for k in dims:
        for pivots in combinations(range(n), k):
            yield from _pattern_rows(field, n, pivots, values)


def count_subspaces(q: int, n: int, dim: int | None = None) -> int:
    if dim is not None:
        return gaussian_binomial(n, dim, q)
    return sum(gaussian_binomial(n, k, q) for k in range(n + 1))


def enumerate_subspaces(
    field: FieldSpec,
    n: int,
    dim: int | None = None,
    *,
    max_subspaces: int = DEFAULT_MAX_SUBSPACES,
    max_states: int = DEFAULT_MAX_STATES,
) -> Iterator[Subspace]:
    """Every subspace of GF(p)^n (or those of one dimension), each once."""
    if not field.is_finite:
        raise BudgetExceeded(f"exhaustive enumeration needs a finite field, not {field}")
    q = field.p
    if q**n > max_states:
        raise BudgetExceeded(f"{q}^{n} vectors exceeds the state guard {max_states}")
    total = count_subspaces(q, n, dim)
    if total > max_subspaces:
        raise BudgetExceeded(f"{total} subspaces exceeds the guard {max_subspaces}")
    return rref_grid(field, n, list(field.elements()), dim)


def _budget(a: Algebra, budget: ScanBudget | None) -> ScanBudget:
    if budget is None:
        return ScanBudget.for_field(a.field)
    if budget.mode == "exhaustive" and not a.field.is_finite:
        raise BudgetExceeded(f"exhaustive scans need a prime field, not {a.field}")
    return budget


def enumerate_subalgebras(a: Algebra, budget: ScanBudget | None = None) -> Iterator[SubalgebraHandle]:
    budget = _budget(a, budget)
    for s in enumerate_subspaces(a.field, a.dim, max_subspaces=budget.max_subspaces, max_states=budget.max_states):
        if is_closed(a, s):
            yield SubalgebraHandle(a, s, True)


def enumerate_ideals(a: Algebra, budget: ScanBudget | None = None) -> Iterator[SubalgebraHandle]:
    for h in enumerate_subalgebras(a, budget):
        if is_ideal(a, h):
            yield h


@dataclass
class PropertyReport:
    """Counts and the first counterexample of an ideal-or-self-idealizing scan."""

    algebra: str
    mode: str
    holds: bool = True
    counterexample: SubalgebraHandle | None = None
    classification: Classification | None = None
    subspaces_scanned: int = 0
    subalgebras: int = 0
    ideals: int = 0
    self_idealizing: int = 0
    neither: int = 0
    _seen: set = dc_field(default_factory=set, repr=False)

    @property
    def claim(self) -> str:
        if not self.holds:
            return "counterexample found"
        if self.mode == "exhaustive":
            return "verified exhaustively"
        return "no counterexample found within budget"

    def record(self, h: SubalgebraHandle, c: Classification) -> None:
        self.subalgebras += 1
        if c.verdict is Verdict.IDEAL:
            self.ideals += 1
        elif c.verdict is Verdict.SELF_IDEALIZING:
            self.self_idealizing += 1
        else:
            self.neither += 1
            if self.counterexample is None:
                self.counterexample, self.classification = h, c
            self.holds = False

    def merge(self, other: PropertyReport) -> PropertyReport:
        """Combine two partial scans; the earlier report's counterexample wins."""
        out = PropertyReport(self.algebra, self.mode)
        for name in ("subspaces_scanned", "subalgebras", "ideals", "self_idealizing", "neither"):
            setattr(out, name, getattr(self, name) + getattr(other, name))
        out.holds = self.holds and other.holds
        first = self if self.counterexample is not None else other
        out.counterexample, out.classification = first.counterexample, first.classification
        return out

    def to_json(self, a: Algebra | None = None) -> dict:
        data = {
            "algebra": self.algebra,
            "mode": self.mode,
            "holds": self.holds,
            "claim": self.claim,
            "counts": {
                "subspaces_scanned": self.subspaces_scanned,
                "subalgebras": self.subalgebras,
                "ideals": self.ideals,
                "self_idealizing": self.self_idealizing,
                "neither": self.neither,
            },
            "counterexample": None,
        }
        if self.counterexample is not None:
            c = self.classification
            data["counterexample"] = {
                "span": self.counterexample.space.encode(),
                "verdict": c.verdict.value,
                "idealizer": c.idealizer.encode(),
                "witness": [str(x) for x in c.witness] if c.witness else None,
                "escape": [[str(x) for x in v] for v in c.escape] if c.escape else None,
            }
        return data


def check_property_IorSI(a: Algebra, budget: ScanBudget | None = None) -> PropertyReport:
    """Classify subalgebras: exhaustively over GF(p), on a sample grid otherwise."""
    violations = check_left_leibniz(a)
    if violations:
        raise IdentityFailed(f"{a.name} is not a left Leibniz algebra", violations)
    budget = _budget(a, budget)
    report = PropertyReport(a.name, budget.mode)
    if budget.mode == "exhaustive":
        for s in enumerate_subspaces(a.field, a.dim, max_subspaces=budget.max_subspaces, max_states=budget.max_states):
            report.subspaces_scanned += 1
            if is_closed(a, s):
                h = SubalgebraHandle(a, s, True)
                report.record(h, classify_subalgebra(a, h))
        return report

    values = list(budget.sample_set) or default_sample_set(a.field, budget.max_coeff_degree)
    seen = set()
    for s in rref_grid(a.field, a.dim, values):
        report.subspaces_scanned += 1
        if report.subspaces_scanned > budget.max_subspaces:
            raise BudgetExceeded(f"sample grid exceeds the guard {budget.max_subspaces}")
        h = generated_subalgebra(a, s.basis)
        if h.space in seen:
            continue
        seen.add(h.space)
        report.record(h, classify_subalgebra(a, h))
    return report


def nilpotent_radical(a: Algebra, budget: ScanBudget | None = None) -> Subspace:
    """Sum of all nilpotent ideals, found by enumerating ideals over GF(p)."""
    violations = check_left_leibniz(a)
    if violations:
        raise IdentityFailed(f"{a.name} is not a left Leibniz algebra", violations)
    nil = [h.space for h in enumerate_ideals(a, budget) if is_nilpotent(a, h)]
    total = zero_subspace(a.field, a.dim)
    for s in nil:
        total = subspace_sum(total, s)
    h = SubalgebraHandle(a, total, is_closed(a, total))
    if not (h.closed and is_ideal(a, h) and is_nilpotent(a, h)):
        raise RadicalInconsistent(f"sum of nilpotent ideals of {a.name} is not a nilpotent ideal")
    if not all(s <= total for s in nil):
        raise RadicalInconsistent("radical misses a nilpotent ideal")
    return total


def verify_declared_radical(a: Algebra, s: Subspace | SubalgebraHandle, budget: ScanBudget | None = None) -> Report:
    """Check that ``s`` is a nilpotent ideal, and over GF(p) that it is the largest one."""
    space = s.space if isinstance(s, SubalgebraHandle) else s
    report = Report("radical", a.name)
    violations = check_left_leibniz(a)
    report.identity = Status.FAIL if violations else Status.PASS
    if violations:
        report.details["violations"] = [list(v) for v in violations]
        return report
    closed = is_closed(a, space)
    report.add(Check("subalgebra", Status.PASS if closed else Status.FAIL))
    if not closed:
        return report
    h = SubalgebraHandle(a, space, True)
    ideal = is_ideal(a, h)
    nilp = is_nilpotent(a, h)
    report.add(Check("ideal", Status.PASS if ideal else Status.FAIL))
    report.add(Check("nilpotent", Status.PASS if nilp else Status.FAIL))
    if a.field.is_finite:
        radical = nilpotent_radical(a, budget)
        same = radical == space
        report.add(Check("maximal", Status.PASS if same else Status.FAIL, None if same else radical.encode()))
    else:
        report.add(Check("maximal", Status.UNKNOWN, "not verified (declared)"))
    report.details["nilpotent ideal"] = "yes" if ideal and nilp else "no"
    return report

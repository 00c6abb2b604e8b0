"""Derivation algebra ``Der(L)`` as the solution space of the derivation equations.

A derivation matrix ``f`` acts on column vectors: column ``j`` holds
``f(e_j)``.  Unknowns are the entries of ``f`` flattened row-major; one
block of ``n`` equations per ordered basis pair ``(i, j)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .algebra import Algebra, bracket, centers, check_left_leibniz
from .errors import DimensionMismatch, IdentityFailed
from .exactlinalg import Matrix, nullspace, unit_vector
from .report import Check, Report, Status

__all__ = ["DerivationSpace", "check_center_invariance", "commutator", "derivation_space", "is_derivation"]


@dataclass(frozen=True)
class DerivationSpace:
    algebra: Algebra = dc_field(repr=False, compare=False)
    basis: tuple

    @property
    def dim(self) -> int:
        return len(self.basis)


def derivation_space(a: Algebra) -> DerivationSpace:
    n = a.dim
    field = a.field
    t = a.tensor
    rows = []
    for i in range(n):
        for j in range(n):
            # f([e_i,e_j])_k - [f e_i, e_j]_k - [e_i, f e_j]_k = 0
            for k in range(n):
                row = [field.zero] * (n * n)
                for l in range(n):
                    c = t[i][j][l]
                    if c:
                        row[k * n + l] += c
                for r in range(n):
                    c = t[r][j][k]
                    if c:
                        row[r * n + i] -= c
                    c = t[i][r][k]
                    if c:
                        row[r * n + j] -= c
                rows.append(tuple(row))
    if rows:
        sol = nullspace(Matrix(field, tuple(rows), n * n))
        flat = sol.basis
    else:
        flat = ()
    basis = tuple(Matrix(field, tuple(tuple(v[r * n:(r + 1) * n]) for r in range(n)), n) for v in flat)
    return DerivationSpace(a, basis)


def is_derivation(a: Algebra, f: Matrix) -> bool:
    n = a.dim
    if f.shape != (n, n) or f.field != a.field:
        raise DimensionMismatch(f"{f.shape} matrix over {f.field} for {n}-dimensional {a.name}")
    e = [unit_vector(a.field, n, i) for i in range(n)]
    images = [f.column(i) for i in range(n)]
    for i in range(n):
        for j in range(n):
            lhs = f.apply(bracket(a, e[i], e[j]))
            rhs = tuple(p + q for p, q in zip(bracket(a, images[i], e[j]), bracket(a, e[i], images[j])))
            if lhs != rhs:
                return False
    return True


def commutator(f: Matrix, g: Matrix) -> Matrix:
    return (f @ g) - (g @ f)


def check_center_invariance(a: Algebra, d: DerivationSpace | None = None) -> Report:
    """Every basis derivation maps each center into itself."""
    violations = check_left_leibniz(a)
    if violations:
        raise IdentityFailed(f"{a.name} is not a left Leibniz algebra", violations)
    if d is None:
        d = derivation_space(a)
    report = Report("center-invariance", a.name, identity=Status.PASS)
    for label, center in zip(("left", "right", "full"), centers(a)):
        witness = None
        for idx, f in enumerate(d.basis):
            for z in center.basis:
                img = f.apply(z)
                if any(center.residue(img)):
                    witness = {
                        "derivation": idx,
                        "element": [str(x) for x in z],
                        "image": [str(x) for x in img],
                    }
                    break
            if witness:
                break
        report.add(Check(f"derivations preserve {label} center", Status.FAIL if witness else Status.PASS, witness))
    return report

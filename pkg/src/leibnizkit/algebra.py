"""Finite-dimensional left Leibniz algebras given by structure constants.

``Algebra.tensor[i][j][k]`` is the coefficient of ``e_k`` in ``[e_i, e_j]``.
The left Leibniz identity is ``[[a,b],c] = [a,[b,c]] - [b,[a,c]]``.

All structural operators return canonical :class:`Subspace` values, so
results can be compared with ``==``.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field as dc_field
from pathlib import Path
from typing import Iterable, Mapping, Sequence

from .errors import (
    DimensionMismatch,
    FieldMismatch,
    NotAnIdeal,
    NotClosed,
    ParseError,
)
from .exactlinalg import (
    Matrix,
    Subspace,
    Vector,
    nullspace,
    span,
    subspace_intersect,
    subspace_sum,
    unit_vector,
    zero_vector,
)
from .scalars import FieldSpec, Scalar

__all__ = [
    "Algebra",
    "Classification",
    "SubalgebraHandle",
    "Verdict",
    "analyze_action",
    "annihilators",
    "bracket",
    "bracket_span",
    "central_series",
    "centers",
    "check_left_leibniz",
    "classify_subalgebra",
    "direct_sum",
    "generated_subalgebra",
    "idealizer",
    "is_ideal",
    "is_left_ideal",
    "is_lie",
    "is_nilpotent",
    "leibniz_kernel",
    "left_idealizer",
    "left_multiplication",
    "quotient",
    "right_idealizer",
    "subalgebra",
    "upper_idealizer_series",
]


class Algebra:
    """A structure-constant tensor over a field, with named basis vectors.

    Construction does not check the Leibniz identity; call
    :func:`check_left_leibniz` for that.
    """

    __slots__ = ("field", "basis_names", "tensor", "name", "_table")

    def __init__(self, field: FieldSpec, basis_names: Sequence[str], tensor, name: str = "L"):
        names = tuple(basis_names)
        if len(set(names)) != len(names):
            raise ParseError(f"basis names are not distinct: {names}")
        for nm in names:
            if not nm or "," in nm or nm != nm.strip():
                raise ParseError(f"bad basis name {nm!r}")
        n = len(names)
        rows = []
        for i in range(n):
            row = []
            for j in range(n):
                try:
                    vec = tuple(field(c) for c in tensor[i][j])
                except FieldMismatch:
                    raise
                if len(vec) != n:
                    raise DimensionMismatch(f"tensor entry [{i}][{j}] has length {len(vec)}, expected {n}")
                row.append(vec)
            rows.append(tuple(row))
        if len(tensor) != n or any(len(r) != n for r in tensor):
            raise DimensionMismatch(f"tensor is not {n}x{n}x{n}")
        self.field = field
        self.basis_names = names
        self.tensor = tuple(rows)
        self.name = name
        # sparse view: _table[i][j] = ((k, c), ...) over nonzero c
        self._table = [[tuple((k, c) for k, c in enumerate(rows[i][j]) if c) for j in range(n)] for i in range(n)]

    @classmethod
    def from_brackets(
        cls,
        field: FieldSpec,
        basis: Sequence[str],
        brackets: Mapping[tuple[str, str], Mapping[str, object]],
        name: str = "L",
    ) -> Algebra:
        """Build from ``{(left, right): {target: coefficient}}``; absent pairs are zero."""
        basis = tuple(basis)
        index = {nm: i for i, nm in enumerate(basis)}
        n = len(basis)
        tensor = [[[field.zero] * n for _ in range(n)] for _ in range(n)]
        for (left, right), value in brackets.items():
            if left not in index or right not in index:
                raise ParseError(f"bracket [{left},{right}] names a basis element not in {list(basis)}")
            for target, coef in value.items():
                if target not in index:
                    raise ParseError(f"bracket [{left},{right}] has unknown target {target!r}")
                tensor[index[left]][index[right]][index[target]] = field(coef)
        return cls(field, basis, tensor, name)

    @classmethod
    def abelian(cls, field: FieldSpec, n: int, name: str | None = None) -> Algebra:
        names = [f"e{i + 1}" for i in range(n)]
        return cls.from_brackets(field, names, {}, name or f"abelian{n}")

    @property
    def dim(self) -> int:
        return len(self.basis_names)

    def __len__(self):
        return len(self.basis_names)

    def __eq__(self, other):
        if not isinstance(other, Algebra):
            return NotImplemented
        return (
            self.field == other.field
            and self.basis_names == other.basis_names
            and self.tensor == other.tensor
        )

    def __hash__(self):
        return hash((self.field, self.basis_names, self.tensor))

    def __repr__(self):
        return f"Algebra({self.name!r}, {self.field}, basis={list(self.basis_names)})"

    # -- elements ------------------------------------------------------------

    def index(self, name: str) -> int:
        try:
            return self.basis_names.index(name)
        except ValueError:
            raise ParseError(f"{name!r} is not a basis element of {self.name}") from None

    def basis_vector(self, name_or_index) -> Vector:
        i = name_or_index if isinstance(name_or_index, int) else self.index(name_or_index)
        return unit_vector(self.field, self.dim, i)

    def element(self, coords: Mapping[str, object] | None = None, **kwargs) -> Vector:
        """Vector from ``{basis name: coefficient}``."""
        coords = dict(coords or {}, **kwargs)
        v = [self.field.zero] * self.dim
        for nm, c in coords.items():
            v[self.index(nm)] = self.field(c)
        return tuple(v)

    def zero(self) -> Vector:
        return zero_vector(self.field, self.dim)

    def span(self, *vectors) -> Subspace:
        """Subspace spanned by vectors or basis names."""
        vecs = [self.basis_vector(v) if isinstance(v, (str, int)) else v for v in vectors]
        return span(self.field, self.dim, vecs)

    def whole(self) -> Subspace:
        return Subspace.full(self.field, self.dim)

    def format_vector(self, v: Sequence[Scalar]) -> str:
        """Human-readable linear combination, e.g. ``a + t·z``."""
        terms = []
        for c, nm in zip(v, self.basis_names):
            if not c:
                continue
            if c == self.field.one:
                terms.append(nm)
            else:
                s = str(c)
                if any(ch in s for ch in "+-/") and not s.lstrip("-").isdigit():
                    s = f"({s})"
                terms.append(f"{s}·{nm}")
        return " + ".join(terms) if terms else "0"

    def format_subspace(self, s: Subspace) -> str:
        return "span{" + ", ".join(self.format_vector(b) for b in s.basis) + "}"

    # -- serialization -------------------------------------------------------

    def to_json(self) -> dict:
        brackets = {}
        for i, left in enumerate(self.basis_names):
            for j, right in enumerate(self.basis_names):
                entry = self._table[i][j]
                if entry:
                    brackets[f"{left},{right}"] = {self.basis_names[k]: str(c) for k, c in entry}
        return {
            "name": self.name,
            "field": self.field.to_json(),
            "basis": list(self.basis_names),
            "brackets": brackets,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, ensure_ascii=False) + "\n"

    @classmethod
    def from_json(cls, data: Mapping) -> Algebra:
        if not isinstance(data, Mapping):
            raise ParseError("algebra file must hold a JSON object")
        for key in ("field", "basis"):
            if key not in data:
                raise ParseError(f"algebra file is missing {key!r}")
        field = FieldSpec.from_json(data["field"])
        basis = data["basis"]
        if not isinstance(basis, list) or not all(isinstance(b, str) for b in basis):
            raise ParseError("'basis' must be a list of strings")
        brackets = {}
        raw = data.get("brackets", {})
        if not isinstance(raw, Mapping):
            raise ParseError("'brackets' must be an object")
        for key, value in raw.items():
            parts = key.split(",")
            if len(parts) != 2:
                raise ParseError(f"bracket key {key!r} is not 'left,right'")
            if not isinstance(value, Mapping):
                raise ParseError(f"bracket {key!r} must map basis names to scalars")
            coeffs = {}
            for target, text in value.items():
                if not isinstance(text, str):
                    raise ParseError(f"bracket {key!r}: coefficient of {target!r} must be a string")
                try:
                    coeffs[target] = field.parse(text)
                except ParseError as exc:
                    raise ParseError(f"bracket {key!r}: {exc}") from None
            brackets[(parts[0].strip(), parts[1].strip())] = coeffs
        return cls.from_brackets(field, basis, brackets, data.get("name", "L"))

    @classmethod
    def loads(cls, text: str) -> Algebra:
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc}") from None
        return cls.from_json(data)

    @classmethod
    def load(cls, path) -> Algebra:
        return cls.loads(Path(path).read_text())

    def save(self, path) -> None:
        Path(path).write_text(self.dumps())


# ---------------------------------------------------------------------------
# bracket
# ---------------------------------------------------------------------------


def _check_vec(a: Algebra, x: Sequence) -> None:
    if len(x) != a.dim:
        raise DimensionMismatch(f"vector of length {len(x)} in {a.dim}-dimensional {a.name}")


def bracket(a: Algebra, x: Sequence[Scalar], y: Sequence[Scalar]) -> Vector:
    _check_vec(a, x)
    _check_vec(a, y)
    zero = a.field.zero
    out = [zero] * a.dim
    table = a._table
    for i, xi in enumerate(x):
        if not xi:
            continue
        row = table[i]
        for j, yj in enumerate(y):
            if not yj:
                continue
            entry = row[j]
            if entry:
                k2 = xi * yj
                for k, c in entry:
                    out[k] = out[k] + k2 * c
    return tuple(out)


def _e(a: Algebra, i: int) -> Vector:
    return unit_vector(a.field, a.dim, i)


def _sub(x, y):
    return tuple(p - q for p, q in zip(x, y))


def check_left_leibniz(a: Algebra) -> list[tuple[int, int, int]]:
    """All basis triples violating the identity, sorted; empty means it holds."""
    n = a.dim
    basis = [_e(a, i) for i in range(n)]
    prods = [[bracket(a, basis[i], basis[j]) for j in range(n)] for i in range(n)]
    bad = []
    for i in range(n):
        for j in range(n):
            for k in range(n):
                lhs = bracket(a, prods[i][j], basis[k])
                rhs = _sub(bracket(a, basis[i], prods[j][k]), bracket(a, basis[j], prods[i][k]))
                if lhs != rhs:
                    bad.append((i, j, k))
    return bad


def leibniz_identity_holds(a: Algebra, x, y, z) -> bool:
    """The identity on three arbitrary elements."""
    lhs = bracket(a, bracket(a, x, y), z)
    rhs = _sub(bracket(a, x, bracket(a, y, z)), bracket(a, y, bracket(a, x, z)))
    return lhs == rhs


def is_lie(a: Algebra) -> bool:
    n = a.dim
    t = a.tensor
    for i in range(n):
        if any(t[i][i]):
            return False
        for j in range(i + 1, n):
            if any(p + q for p, q in zip(t[i][j], t[j][i])):
                return False
    return True


def leibniz_kernel(a: Algebra) -> Subspace:
    """Span of all squares ``[x, x]``, via polarization on the basis."""
    n = a.dim
    t = a.tensor
    vecs = [t[i][i] for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            vecs.append(tuple(p + q for p, q in zip(t[i][j], t[j][i])))
    return span(a.field, n, vecs)


def bracket_span(a: Algebra, u: Subspace, w: Subspace) -> Subspace:
    """``[U, W]`` as a subspace."""
    return span(a.field, a.dim, [bracket(a, x, y) for x in u.basis for y in w.basis])


def _solve(a: Algebra, images_by_unknown: list[list[Vector]]) -> Subspace:
    """Nullspace of ``x -> (sum_i x_i images[i][r])_r``.

    ``images_by_unknown[i]`` lists, for the i-th basis vector, the vectors
    that must combine to zero.
    """
    n = a.dim
    if not images_by_unknown or not images_by_unknown[0]:
        return Subspace.full(a.field, n)
    rows = []
    for r in range(len(images_by_unknown[0])):
        width = len(images_by_unknown[0][r])
        for k in range(width):
            rows.append(tuple(images_by_unknown[i][r][k] for i in range(n)))
    return nullspace(Matrix(a.field, tuple(rows), n))


def _left_centralizer(a: Algebra, targets: Iterable[Vector]) -> Subspace:
    """``{x : [x, b] = 0 for all b in targets}``."""
    targets = list(targets)
    return _solve(a, [[bracket(a, _e(a, i), b) for b in targets] for i in range(a.dim)])


def _right_centralizer(a: Algebra, targets: Iterable[Vector]) -> Subspace:
    targets = list(targets)
    return _solve(a, [[bracket(a, b, _e(a, i)) for b in targets] for i in range(a.dim)])


def centers(a: Algebra) -> tuple[Subspace, Subspace, Subspace]:
    """Left, right and two-sided center."""
    basis = [_e(a, i) for i in range(a.dim)]
    left = _left_centralizer(a, basis)
    right = _right_centralizer(a, basis)
    return left, right, subspace_intersect(left, right)


def annihilators(a: Algebra, m: Subspace, h: Subspace | None = None) -> tuple[Subspace, Subspace, Subspace]:
    """Left, right and full annihilator of ``m`` inside ``h`` (default: all of ``a``)."""
    if h is None:
        h = a.whole()
    left = subspace_intersect(_left_centralizer(a, m.basis), h)
    right = subspace_intersect(_right_centralizer(a, m.basis), h)
    return left, right, subspace_intersect(left, right)


def left_multiplication(a: Algebra, x: Sequence[Scalar]) -> Matrix:
    """Matrix of ``y -> [x, y]``; column j is ``[x, e_j]``."""
    cols = [bracket(a, x, _e(a, j)) for j in range(a.dim)]
    return Matrix(a.field, tuple(zip(*cols)), a.dim) if cols else Matrix(a.field, (), 0)


def right_multiplication(a: Algebra, x: Sequence[Scalar]) -> Matrix:
    cols = [bracket(a, _e(a, j), x) for j in range(a.dim)]
    return Matrix(a.field, tuple(zip(*cols)), a.dim) if cols else Matrix(a.field, (), 0)


# ---------------------------------------------------------------------------
# subalgebras
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SubalgebraHandle:
    algebra: Algebra = dc_field(repr=False, compare=False)
    space: Subspace
    closed: bool

    @property
    def dim(self) -> int:
        return self.space.dim


def is_closed(a: Algebra, s: Subspace) -> bool:
    basis = s.basis
    for x in basis:
        for y in basis:
            if any(s.residue(bracket(a, x, y))):
                return False
    return True


def subalgebra(a: Algebra, s: Subspace | SubalgebraHandle) -> SubalgebraHandle:
    """Wrap a subspace, recording whether it is bracket-closed."""
    if isinstance(s, SubalgebraHandle):
        return s
    if s.ambient_dim != a.dim or s.field != a.field:
        raise DimensionMismatch(f"subspace of {s.field}^{s.ambient_dim} in {a.field}^{a.dim}")
    return SubalgebraHandle(a, s, is_closed(a, s))


def _closed(a: Algebra, s) -> SubalgebraHandle:
    h = subalgebra(a, s)
    if not h.closed:
        raise NotClosed(f"{a.format_subspace(h.space)} is not a subalgebra of {a.name}")
    return h


def generated_subalgebra(a: Algebra, gens: Iterable[Sequence[Scalar]]) -> SubalgebraHandle:
    s = span(a.field, a.dim, gens)
    while True:
        grown = subspace_sum(s, bracket_span(a, s, s))
        if grown.dim == s.dim:
            return SubalgebraHandle(a, s, True)
        s = grown


def _escape(a: Algebra, s: Subspace, side: str):
    """First ``(b, e_i)`` with ``[e_i, b]`` (side left) or ``[b, e_i]`` outside ``s``."""
    for b in s.basis:
        for i in range(a.dim):
            e = _e(a, i)
            prod = bracket(a, e, b) if side == "left" else bracket(a, b, e)
            if any(s.residue(prod)):
                return b, e, prod
    return None


def is_left_ideal(a: Algebra, s) -> bool:
    """``[L, S] <= S``."""
    h = _closed(a, s)
    return _escape(a, h.space, "left") is None


def is_right_ideal(a: Algebra, s) -> bool:
    """``[S, L] <= S``."""
    h = _closed(a, s)
    return _escape(a, h.space, "right") is None


def is_ideal(a: Algebra, s) -> bool:
    h = _closed(a, s)
    return _escape(a, h.space, "left") is None and _escape(a, h.space, "right") is None


def _idealizer(a: Algebra, s: Subspace, left: bool, right: bool) -> Subspace:
    if not s.basis:
        return a.whole()
    free = s.non_pivots()
    if not free:
        return a.whole()
    rows = []
    for b in s.basis:
        if left:
            imgs = [s.residue(bracket(a, _e(a, i), b)) for i in range(a.dim)]
            rows.extend(tuple(img[k] for img in imgs) for k in free)
        if right:
            imgs = [s.residue(bracket(a, b, _e(a, i))) for i in range(a.dim)]
            rows.extend(tuple(img[k] for img in imgs) for k in free)
    return nullspace(Matrix(a.field, tuple(rows), a.dim))


def idealizer(a: Algebra, s) -> Subspace:
    """``{x : [x, S] <= S and [S, x] <= S}``."""
    h = _closed(a, s)
    return _idealizer(a, h.space, True, True)


def left_idealizer(a: Algebra, s) -> Subspace:
    """``{x : [x, S] <= S}``; always a subalgebra."""
    h = _closed(a, s)
    return _idealizer(a, h.space, True, False)


def right_idealizer(a: Algebra, s) -> Subspace:
    """``{x : [S, x] <= S}``; need not be a subalgebra."""
    h = _closed(a, s)
    return _idealizer(a, h.space, False, True)


def upper_idealizer_series(a: Algebra, s) -> list[Subspace]:
    """``S, I(S), I(I(S)), ...`` up to and including the first fixpoint."""
    h = _closed(a, s)
    series = [h.space]
    while True:
        nxt = _idealizer(a, series[-1], True, True)
        if nxt == series[-1]:
            return series
        series.append(nxt)


class Verdict(str, enum.Enum):
    IDEAL = "Ideal"
    SELF_IDEALIZING = "SelfIdealizing"
    NEITHER = "Neither"


@dataclass(frozen=True)
class Classification:
    """Outcome of :func:`classify_subalgebra`.

    ``witness`` is an element of the idealizer outside ``S`` (for Neither);
    ``escape`` is ``(s, y, product)`` with ``product = [s, y]`` or ``[y, s]``
    outside ``S``, certifying that ``S`` is not an ideal.
    """

    verdict: Verdict
    idealizer: Subspace
    witness: Vector | None = None
    escape: tuple | None = None


def classify_subalgebra(a: Algebra, s) -> Classification:
    h = _closed(a, s)
    sp = h.space
    esc = _escape(a, sp, "left") or _escape(a, sp, "right")
    ide = _idealizer(a, sp, True, True)
    if esc is None:
        return Classification(Verdict.IDEAL, ide)
    if ide == sp:
        return Classification(Verdict.SELF_IDEALIZING, ide, escape=esc)
    witness = next(b for b in ide.basis if any(sp.residue(b)))
    return Classification(Verdict.NEITHER, ide, witness=witness, escape=esc)


# ---------------------------------------------------------------------------
# nilpotency, quotients, sums
# ---------------------------------------------------------------------------


def central_series(a: Algebra, s=None) -> list[Subspace]:
    """``C1 = S``, ``C_{k+1} = [S, C_k] + [C_k, S]`` until zero or stable.

    ``s`` defaults to the whole algebra; otherwise it must be a subalgebra
    and the series is taken inside it.
    """
    top = a.whole() if s is None else _closed(a, s).space
    series = [top]
    while series[-1].basis:
        c = series[-1]
        nxt = subspace_sum(bracket_span(a, top, c), bracket_span(a, c, top))
        if nxt == c:
            break
        series.append(nxt)
    return series


def is_nilpotent(a: Algebra, s=None) -> bool:
    return not central_series(a, s)[-1].basis


def quotient(a: Algebra, i, name: str | None = None) -> Algebra:
    """``L / I`` on the non-pivot basis vectors of ``I`` as coset representatives."""
    h = _closed(a, i)
    if not is_ideal(a, h):
        raise NotAnIdeal(f"{a.format_subspace(h.space)} is not an ideal of {a.name}")
    ideal = h.space
    reps = ideal.non_pivots()
    tensor = []
    for p in reps:
        row = []
        for q in reps:
            r = ideal.residue(bracket(a, _e(a, p), _e(a, q)))
            row.append([r[k] for k in reps])
        tensor.append(row)
    names = [a.basis_names[k] for k in reps]
    return Algebra(a.field, names, tensor, name or f"{a.name}/I")


def quotient_coordinates(ideal: Subspace, v: Sequence[Scalar]) -> Vector:
    """Coordinates of ``v + I`` in the quotient basis used by :func:`quotient`."""
    r = ideal.residue(v)
    return tuple(r[k] for k in ideal.non_pivots())


def direct_sum(a: Algebra, b: Algebra, name: str | None = None) -> Algebra:
    """Block tensor with zero cross brackets.

    Clashing basis names of ``b`` get a trailing prime.
    """
    if a.field != b.field:
        raise FieldMismatch(f"direct sum of {a.field} and {b.field} algebras")
    n, m = a.dim, b.dim
    names = list(a.basis_names)
    for nm in b.basis_names:
        while nm in names:
            nm = nm + "'"
        names.append(nm)
    zero = a.field.zero
    tensor = [[[zero] * (n + m) for _ in range(n + m)] for _ in range(n + m)]
    for i in range(n):
        for j in range(n):
            for k in range(n):
                tensor[i][j][k] = a.tensor[i][j][k]
    for i in range(m):
        for j in range(m):
            for k in range(m):
                tensor[n + i][n + j][n + k] = b.tensor[i][j][k]
    return Algebra(a.field, names, tensor, name or f"{a.name}+{b.name}")


def analyze_action(a: Algebra, x: Sequence[Scalar], space: Subspace) -> tuple[Scalar, Scalar] | None:
    """``(lam, rho)`` with ``[x, b] = lam b`` and ``[b, x] = rho b`` for all ``b`` in ``space``.

    Every basis row is tested; ``None`` when no such scalars exist.
    """
    _check_vec(a, x)
    lam = rho = None
    for b, c in zip(space.basis, space.pivots):
        left = bracket(a, x, b)
        right = bracket(a, b, x)
        # pivot entry of b is 1, so the candidate scalar sits in that slot
        if lam is None:
            lam, rho = left[c], right[c]
        if left != tuple(lam * y for y in b) or right != tuple(rho * y for y in b):
            return None
    if lam is None:
        return None
    return lam, rho

"""Constructors for the named algebras, with their field side conditions.

Builders raise as soon as a side condition fails (a quadratic that must be
rootless has a root, a square form that must be anisotropic is not, ...).
Apart from :func:`build_B_family`, which returns a :class:`Candidate`,
builders return the algebra without re-running the identity check.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from itertools import product
from math import isqrt
from typing import Callable, Mapping, Sequence

from .algebra import Algebra, centers, check_left_leibniz, quotient
from .errors import (
    BudgetExceeded,
    CharacteristicError,
    DimTooSmall,
    NotAnisotropic,
    NotStrong,
    ParseError,
    RootExists,
    RootUnknown,
    SigmaZero,
)
from .exactlinalg import Matrix, nullspace
from .latticescan import default_sample_set
from .scalars import Answer, FieldSpec, Scalar, is_square, quadratic_has_root, square_root_parts

__all__ = [
    "Candidate",
    "RECIPES",
    "ZooRecipe",
    "build_B_family",
    "build_cyclic_dim2",
    "build_example_3_10",
    "build_example_3_8",
    "build_heisenberg",
    "build_strong_extraspecial",
    "build_theorem_A",
    "build_theorem_C",
    "square_form_isotropic_vector",
]


def _require_char2(field: FieldSpec, recipe: str):
    if field.characteristic != 2:
        raise CharacteristicError(f"{recipe} needs characteristic 2, got {field}")


def _require_rootless(b: Scalar, c: Scalar, what: str):
    ans = quadratic_has_root(b, c)
    if ans is Answer.YES:
        raise RootExists(f"{what} has a root in {b.field}")
    if ans is Answer.UNKNOWN:
        raise RootUnknown(f"could not decide whether {what} has a root in {b.field}")


def build_cyclic_dim2(field: FieldSpec) -> Algebra:
    """``[a1, a1] = a2``, every other bracket zero."""
    return Algebra.from_brackets(field, ["a1", "a2"], {("a1", "a1"): {"a2": 1}}, f"cyclic2/{field}")


def build_theorem_A(field: FieldSpec, m: int, sigma) -> Algebra:
    """Abelian ``A = span{a1..am}`` with ``w`` acting by ``[w, a] = sigma a``.

    ``[a, w] = 0`` and ``[w, w] = 0``.
    """
    sigma = field(sigma)
    if m < 2:
        raise DimTooSmall(f"A must have dimension >= 2, got {m}")
    if not sigma:
        raise SigmaZero("sigma must be non-zero")
    names = [f"a{i + 1}" for i in range(m)] + ["w"]
    brackets = {("w", f"a{i + 1}"): {f"a{i + 1}": sigma} for i in range(m)}
    return Algebra.from_brackets(field, names, brackets, f"theoremA/{field}/m={m}/sigma={sigma}")


def build_theorem_C(field: FieldSpec, eta, lam, mu) -> Algebra:
    """Basis ``{z, a, v}``: ``[a,a]=z, [v,v]=eta z, [v,a]=a+lam z, [a,v]=a+mu z``.

    Requires characteristic 2 and ``X^2 + (mu+lam) X + eta`` rootless.  The
    identity only holds when ``lam == mu``; other values build an algebra
    that :func:`check_left_leibniz` rejects.
    """
    _require_char2(field, "theorem-c")
    eta, lam, mu = field(eta), field(lam), field(mu)
    _require_rootless(mu + lam, eta, f"X^2 + ({mu + lam})X + {eta}")
    brackets = {
        ("a", "a"): {"z": 1},
        ("v", "v"): {"z": eta},
        ("v", "a"): {"a": 1, "z": lam},
        ("a", "v"): {"a": 1, "z": mu},
    }
    return Algebra.from_brackets(field, ["z", "a", "v"], brackets, f"theoremC/{field}/eta={eta}/lambda={lam}/mu={mu}")


def build_example_3_10(field: FieldSpec, eta) -> Algebra:
    """``[a,a]=z, [v,v]=eta z, [v,a]=[a,v]=a`` with ``X^2 + eta`` rootless."""
    _require_char2(field, "example-3-10")
    eta = field(eta)
    _require_rootless(field.zero, eta, f"X^2 + {eta}")
    brackets = {
        ("a", "a"): {"z": 1},
        ("v", "v"): {"z": eta},
        ("v", "a"): {"a": 1},
        ("a", "v"): {"a": 1},
    }
    return Algebra.from_brackets(field, ["z", "a", "v"], brackets, f"example310/{field}/eta={eta}")


def build_example_3_8(field: FieldSpec, sigma, eta, variant: str = "printed") -> Algebra:
    """Four-dimensional algebra on ``{z, a, b, v}`` with central ``z``.

    ``variant="printed"`` uses ``[a,v]=a, [v,a]=a+z, [b,v]=b, [v,b]=b+z``
    verbatim; that table violates the left Leibniz identity on
    ``(a,v,v), (b,v,v), (v,a,v), (v,b,v)``.  ``variant="symmetric"`` sets
    ``[a,v]=a+z`` and ``[b,v]=b+z`` instead, which satisfies it.
    """
    _require_char2(field, "example-3-8")
    sigma, eta = field(sigma), field(eta)
    _require_rootless(field.zero, sigma, f"X^2 + {sigma}")
    _require_rootless(field.zero, eta, f"X^2 + {eta}")
    if variant not in ("printed", "symmetric"):
        raise ValueError(f"unknown variant {variant!r}")
    right_z = 0 if variant == "printed" else 1
    brackets = {
        ("a", "a"): {"z": 1},
        ("b", "b"): {"z": sigma},
        ("v", "v"): {"z": eta},
        ("a", "v"): {"a": 1, "z": right_z},
        ("v", "a"): {"a": 1, "z": 1},
        ("b", "v"): {"b": 1, "z": right_z},
        ("v", "b"): {"b": 1, "z": 1},
    }
    return Algebra.from_brackets(field, ["z", "a", "b", "v"], brackets, f"example38/{field}/sigma={sigma}/eta={eta}/{variant}")


def build_heisenberg(field: FieldSpec) -> Algebra:
    """``[x, y] = z = -[y, x]``; a Lie algebra used as a negative control."""
    return Algebra.from_brackets(field, ["x", "y", "z"], {("x", "y"): {"z": 1}, ("y", "x"): {"z": -1}}, f"heisenberg/{field}")


# ---------------------------------------------------------------------------
# strong extraspecial algebras
# ---------------------------------------------------------------------------


def square_form_isotropic_vector(field: FieldSpec, squares: Sequence[Scalar], max_states: int = 3**10):
    """Look for ``alpha != 0`` with ``sum squares[i] * alpha[i]^2 == 0``.

    Returns ``(answer, alpha)``: ``(YES, alpha)`` when an isotropic vector
    was found, ``(NO, None)`` when the form is provably anisotropic, and
    ``(UNKNOWN, None)`` when only a sample grid could be searched.

    Finite fields are scanned exhaustively.  Over GF(2)(t) the test is exact:
    writing ``squares[i] = u_i^2 + t w_i^2`` the form equals
    ``(sum alpha_i u_i)^2 + t (sum alpha_i w_i)^2``, which vanishes iff both
    linear forms do.
    """
    squares = [field(s) for s in squares]
    m = len(squares)
    for i, s in enumerate(squares):
        if not s:
            alpha = [field.zero] * m
            alpha[i] = field.one
            return Answer.YES, tuple(alpha)
    if m == 1:
        return Answer.NO, None
    if field.is_finite:
        if field.p**m > max_states:
            raise BudgetExceeded(f"{field.p}^{m} coefficient vectors exceeds the guard")
        for alpha in product(list(field.elements()), repeat=m):
            if any(alpha):
                total = field.zero
                for s, x in zip(squares, alpha):
                    total = total + s * x * x
                if not total:
                    return Answer.YES, alpha
        return Answer.NO, None
    if field.kind == "rational_function" and field.p == 2:
        parts = [square_root_parts(s) for s in squares]
        system = Matrix(field, (tuple(u for u, _ in parts), tuple(w for _, w in parts)), m)
        kernel = nullspace(system)
        if kernel.basis:
            return Answer.YES, kernel.basis[0]
        return Answer.NO, None
    if m == 2 and field.kind == "rational":
        ratio = -squares[1] / squares[0]
        if is_square(ratio):
            # alpha0^2 = ratio * alpha1^2 with alpha1 = 1
            r = ratio.value
            root = Fraction(isqrt(r.numerator), isqrt(r.denominator))
            return Answer.YES, (field(root), field.one)
        return Answer.NO, None
    grid = default_sample_set(field, 1)
    for alpha in product(grid, repeat=m):
        if any(alpha):
            total = field.zero
            for s, x in zip(squares, alpha):
                total = total + s * x * x
            if not total:
                return Answer.YES, alpha
    return Answer.UNKNOWN, None


def _extraspecial_brackets(m: int, squares: Sequence[Scalar]):
    names = [f"x{i + 1}" for i in range(m)] + ["z"]
    brackets = {(f"x{i + 1}", f"x{i + 1}"): {"z": squares[i]} for i in range(m)}
    return names, brackets


def build_strong_extraspecial(field: FieldSpec, m: int, squares: Sequence, error=NotStrong) -> Algebra:
    """``[x_i, x_i] = squares[i] z``, all other brackets zero.

    Raises ``NotStrong`` carrying a witness ``x`` outside ``span{z}`` with
    ``[x, x] = 0``.
    """
    if m < 1:
        raise DimTooSmall("need at least one generator")
    squares = [field(s) for s in squares]
    if len(squares) != m:
        raise ParseError(f"expected {m} squares, got {len(squares)}")
    ans, alpha = square_form_isotropic_vector(field, squares)
    if ans is Answer.YES:
        witness = tuple(alpha) + (field.zero,)
        terms = " + ".join(f"{'' if c == field.one else f'({c})·'}x{i + 1}" for i, c in enumerate(alpha) if c)
        raise error(f"[x, x] = 0 for x = {terms}", witness)
    names, brackets = _extraspecial_brackets(m, squares)
    alg = Algebra.from_brackets(field, names, brackets, f"extraspecial/{field}/m={m}")
    # extraspecial: center is span{z} and the central quotient is abelian
    full = centers(alg)[2]
    assert full == alg.span("z"), full
    assert not any(any(v) for row in quotient(alg, full).tensor for v in row)
    return alg


# ---------------------------------------------------------------------------
# B1 / B2 candidates
# ---------------------------------------------------------------------------


@dataclass
class Candidate:
    """A constructed algebra together with its identity-check outcome."""

    algebra: Algebra
    violations: list = dc_field(default_factory=list)

    @property
    def is_leibniz(self) -> bool:
        return not self.violations


def build_B_family(
    field: FieldSpec,
    variant: str,
    squares: Sequence,
    *,
    eta=None,
    nu=0,
    xi: Sequence | None = None,
    right_xi: Sequence | None = None,
) -> Candidate:
    """Candidate algebras ``K + <v>`` over a strong extraspecial ``K``.

    ``K`` has basis ``x_1..x_m, z`` with ``[x_i, x_i] = squares[i] z``;
    ``v`` acts by ``[v, x_i] = x_i + xi[i] z``.

    * ``b1`` (characteristic 2): ``z`` central, ``[v, v] = eta z`` with
      ``X^2 + eta`` rootless, ``[x_i, v] = x_i + right_xi[i] z``.
    * ``b2`` (characteristic not 2): ``[v, z] = 2z``, ``[v, v] = nu z``,
      ``[x_i, v] = -x_i + right_xi[i] z``.

    ``right_xi`` defaults to ``xi``.  The identity check is run and
    attached; the algebra is returned even when it fails.
    """
    squares = [field(s) for s in squares]
    m = len(squares)
    xi = [field(x) for x in (xi if xi is not None else [0] * m)]
    right_xi = [field(x) for x in (right_xi if right_xi is not None else xi)]
    if len(xi) != m or len(right_xi) != m:
        raise ParseError(f"xi and right_xi need {m} entries")
    if variant == "b1":
        _require_char2(field, "b1")
        if eta is None:
            raise ParseError("b1 needs eta")
        eta = field(eta)
        _require_rootless(field.zero, eta, f"X^2 + {eta}")
        build_strong_extraspecial(field, m, squares)
    elif variant == "b2":
        if field.characteristic == 2:
            raise CharacteristicError(f"b2 needs characteristic other than 2, got {field}")
        build_strong_extraspecial(field, m, squares, error=NotAnisotropic)
    else:
        raise ValueError(f"unknown variant {variant!r}")

    names, brackets = _extraspecial_brackets(m, squares)
    names.append("v")
    sign = 1 if variant == "b1" else -1
    for i in range(m):
        x = f"x{i + 1}"
        brackets[("v", x)] = {x: 1, "z": xi[i]}
        brackets[(x, "v")] = {x: sign, "z": right_xi[i]}
    if variant == "b1":
        brackets[("v", "v")] = {"z": eta}
    else:
        brackets[("v", "v")] = {"z": field(nu)}
        brackets[("v", "z")] = {"z": 2}
    alg = Algebra.from_brackets(field, names, brackets, f"{variant}/{field}/m={m}")
    return Candidate(alg, check_left_leibniz(alg))


# ---------------------------------------------------------------------------
# recipes by name
# ---------------------------------------------------------------------------


def _scalar_list(field: FieldSpec, value) -> list[Scalar]:
    if isinstance(value, str):
        return [field.parse(v) for v in value.split(",")]
    return [field(v) for v in value]


def _need(params, key):
    if key not in params:
        raise ParseError(f"missing parameter {key!r}")
    return params[key]


def _recipe_b(variant):
    def build(field, params):
        squares = _scalar_list(field, _need(params, "squares"))
        kwargs = {}
        if "xi" in params:
            kwargs["xi"] = _scalar_list(field, params["xi"])
        if "right_xi" in params:
            kwargs["right_xi"] = _scalar_list(field, params["right_xi"])
        if variant == "b1":
            kwargs["eta"] = field(_need(params, "eta"))
        elif "nu" in params:
            kwargs["nu"] = field(params["nu"])
        return build_B_family(field, variant, squares, **kwargs).algebra

    return build


RECIPES: dict[str, tuple[Callable, tuple[str, ...]]] = {
    "cyclic2": (lambda f, p: build_cyclic_dim2(f), ()),
    "theorem-a": (lambda f, p: build_theorem_A(f, int(_need(p, "m")), f(_need(p, "sigma"))), ("m", "sigma")),
    "example-3-8": (
        lambda f, p: build_example_3_8(f, f(_need(p, "sigma")), f(_need(p, "eta")), p.get("variant", "printed")),
        ("sigma", "eta", "variant"),
    ),
    "example-3-10": (lambda f, p: build_example_3_10(f, f(_need(p, "eta"))), ("eta",)),
    "theorem-c": (
        lambda f, p: build_theorem_C(f, f(_need(p, "eta")), f(p.get("lambda", "0")), f(p.get("mu", "0"))),
        ("eta", "lambda", "mu"),
    ),
    "heisenberg": (lambda f, p: build_heisenberg(f), ()),
    "b1": (_recipe_b("b1"), ("squares", "eta", "xi", "right_xi")),
    "b2": (_recipe_b("b2"), ("squares", "nu", "xi", "right_xi")),
    "extraspecial": (
        lambda f, p: build_strong_extraspecial(f, len(_scalar_list(f, _need(p, "squares"))), _scalar_list(f, p["squares"])),
        ("squares",),
    ),
}


@dataclass(frozen=True)
class ZooRecipe:
    """A recipe id, its field and named parameters (scalar strings or values)."""

    recipe: str
    field: FieldSpec
    parameters: Mapping[str, object] = dc_field(default_factory=dict)

    def build(self) -> Algebra:
        if self.recipe not in RECIPES:
            raise ParseError(f"unknown recipe {self.recipe!r}; choose from {', '.join(RECIPES)}")
        builder, allowed = RECIPES[self.recipe]
        unknown = set(self.parameters) - set(allowed)
        if unknown:
            raise ParseError(f"recipe {self.recipe} does not take {', '.join(sorted(unknown))}")
        return builder(self.field, dict(self.parameters))

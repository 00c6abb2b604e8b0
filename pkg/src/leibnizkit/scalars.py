"""Exact scalars over GF(p), the rationals, and GF(p)(t).

A :class:`FieldSpec` describes the coefficient field; a :class:`Scalar` is an
immutable element of it in canonical normal form, so ``==`` and ``hash`` are
purely syntactic.
"""

from __future__ import annotations

import enum
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Iterator

from .errors import DivisionByZero, FieldMismatch, ParseError, Unsupported

__all__ = [
    "Answer",
    "FieldSpec",
    "GF",
    "QQ",
    "RationalFunction",
    "Scalar",
    "function_field",
    "is_2_closed",
    "is_prime",
    "is_square",
    "quadratic_has_root",
]


def is_prime(n: int) -> bool:
    """Deterministic trial division."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


class Answer(str, enum.Enum):
    """Three-valued outcome of a semi-decidable test."""

    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"


# ---------------------------------------------------------------------------
# dense polynomials over GF(p), lowest degree first, no trailing zeros
# ---------------------------------------------------------------------------

Poly = tuple  # tuple[int, ...]


def _ptrim(c) -> Poly:
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def _padd(a: Poly, b: Poly, p: int) -> Poly:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, x in enumerate(b):
        out[i] = (out[i] + x) % p
    return _ptrim(out)


def _pneg(a: Poly, p: int) -> Poly:
    return tuple((-x) % p for x in a)


def _pmul(a: Poly, b: Poly, p: int) -> Poly:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _ptrim(v % p for v in out)


def _pscale(a: Poly, k: int, p: int) -> Poly:
    return _ptrim((x * k) % p for x in a)


def _pdivmod(a: Poly, b: Poly, p: int) -> tuple[Poly, Poly]:
    if not b:
        raise DivisionByZero("polynomial division by zero")
    r = list(a)
    inv = pow(b[-1], -1, p)
    db = len(b) - 1
    q = [0] * max(len(a) - db, 0)
    for shift in range(len(a) - 1 - db, -1, -1):
        coef = (r[shift + db] * inv) % p
        if coef:
            q[shift] = coef
            for j, y in enumerate(b):
                r[shift + j] = (r[shift + j] - coef * y) % p
    return _ptrim(q), _ptrim(r)


def _pgcd(a: Poly, b: Poly, p: int) -> Poly:
    while b:
        a, b = b, _pdivmod(a, b, p)[1]
    if not a:
        return ()
    return _pscale(a, pow(a[-1], -1, p), p)


def _all_polys(p: int, max_degree: int) -> Iterator[Poly]:
    """Every nonzero polynomial of degree <= max_degree."""
    for d in range(max_degree + 1):
        for lower in product(range(p), repeat=d):
            for lead in range(1, p):
                yield tuple(lower) + (lead,)


class RationalFunction:
    """Reduced fraction ``num/den`` of polynomials over GF(p); ``den`` monic."""

    __slots__ = ("num", "den", "p", "_hash")

    def __init__(self, num: Poly, den: Poly, p: int, *, reduced: bool = False):
        num = _ptrim(x % p for x in num)
        den = _ptrim(x % p for x in den)
        if not den:
            raise DivisionByZero("zero denominator")
        if not reduced:
            if not num:
                den = (1,)
            else:
                g = _pgcd(num, den, p)
                if len(g) > 1:
                    num = _pdivmod(num, g, p)[0]
                    den = _pdivmod(den, g, p)[0]
            lead = den[-1]
            if lead != 1:
                inv = pow(lead, -1, p)
                num = _pscale(num, inv, p)
                den = _pscale(den, inv, p)
        self.num = num
        self.den = den
        self.p = p
        self._hash = hash((num, den, p))

    def __eq__(self, other):
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self.p == other.p and self.num == other.num and self.den == other.den

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"RationalFunction({self.num}, {self.den}, p={self.p})"

    def is_zero(self) -> bool:
        return not self.num

    def add(self, other: RationalFunction) -> RationalFunction:
        p = self.p
        if self.den == other.den:
            return RationalFunction(_padd(self.num, other.num, p), self.den, p)
        num = _padd(_pmul(self.num, other.den, p), _pmul(other.num, self.den, p), p)
        return RationalFunction(num, _pmul(self.den, other.den, p), p)

    def neg(self) -> RationalFunction:
        return RationalFunction(_pneg(self.num, self.p), self.den, self.p, reduced=True)

    def mul(self, other: RationalFunction) -> RationalFunction:
        p = self.p
        if not self.num or not other.num:
            return RationalFunction((), (1,), p, reduced=True)
        return RationalFunction(_pmul(self.num, other.num, p), _pmul(self.den, other.den, p), p)

    def inv(self) -> RationalFunction:
        if not self.num:
            raise DivisionByZero("inverse of zero")
        return RationalFunction(self.den, self.num, self.p)


# ---------------------------------------------------------------------------
# fields
# ---------------------------------------------------------------------------

_KINDS = ("prime", "rational", "rational_function")


@dataclass(frozen=True)
class FieldSpec:
    """Descriptor of a supported coefficient field.

    Build with :func:`GF`, :data:`QQ` or :func:`function_field` rather than
    directly; those validate primality.
    """

    kind: str
    p: int = 0
    variable: str = "t"

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise ValueError(f"unknown field kind {self.kind!r}")
        if self.kind == "rational":
            object.__setattr__(self, "p", 0)
        elif not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")
        if self.kind == "rational_function" and not re.fullmatch(r"[A-Za-z_]\w*", self.variable):
            raise ValueError(f"bad variable name {self.variable!r}")

    # -- descriptors ---------------------------------------------------------

    @property
    def characteristic(self) -> int:
        return self.p

    @property
    def is_finite(self) -> bool:
        return self.kind == "prime"

    @property
    def order(self) -> int | None:
        return self.p if self.kind == "prime" else None

    def __str__(self):
        if self.kind == "prime":
            return f"GF({self.p})"
        if self.kind == "rational":
            return "Q"
        return f"GF({self.p})({self.variable})"

    def to_json(self) -> dict:
        if self.kind == "prime":
            return {"kind": "prime", "p": self.p}
        if self.kind == "rational":
            return {"kind": "rational"}
        return {"kind": "rational_function", "p": self.p, "variable": self.variable}

    @classmethod
    def from_json(cls, data: dict) -> FieldSpec:
        try:
            kind = data["kind"]
            if kind == "prime":
                return GF(int(data["p"]))
            if kind == "rational":
                return QQ
            if kind == "rational_function":
                return function_field(int(data["p"]), data.get("variable", "t"))
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"field: {exc}") from exc
        raise ParseError(f"field: unknown kind {kind!r}")

    # -- elements ------------------------------------------------------------

    @property
    def zero(self) -> Scalar:
        return self(0)

    @property
    def one(self) -> Scalar:
        return self(1)

    def gen(self) -> Scalar:
        """The transcendental ``t`` of GF(p)(t)."""
        if self.kind != "rational_function":
            raise Unsupported(f"{self} has no generator")
        return Scalar(self, RationalFunction((0, 1), (1,), self.p, reduced=True))

    def poly(self, coeffs) -> Scalar:
        """Polynomial with the given coefficients, lowest degree first."""
        if self.kind != "rational_function":
            raise Unsupported(f"{self} is not a function field")
        return Scalar(self, RationalFunction(tuple(coeffs), (1,), self.p))

    def __call__(self, value) -> Scalar:
        if isinstance(value, Scalar):
            if value.field != self:
                raise FieldMismatch(f"{value.field} element used in {self}")
            return value
        if isinstance(value, str):
            return self.parse(value)
        if self.kind == "prime":
            if isinstance(value, Fraction):
                return Scalar(self, value.numerator % self.p) / Scalar(self, value.denominator % self.p)
            return Scalar(self, int(value) % self.p)
        if self.kind == "rational":
            return Scalar(self, Fraction(value))
        if isinstance(value, Fraction):
            return self(value.numerator) / self(value.denominator)
        return Scalar(self, RationalFunction((int(value),), (1,), self.p))

    def elements(self) -> Iterator[Scalar]:
        """All elements of a finite field, in residue order."""
        if self.kind != "prime":
            raise Unsupported(f"{self} is infinite")
        for v in range(self.p):
            yield Scalar(self, v)

    def parse(self, text: str) -> Scalar:
        return _Parser(self, text).parse()

    def format(self, s: Scalar) -> str:
        return format(s)


def GF(p: int) -> FieldSpec:
    return _cached_field("prime", p, "t")


def function_field(p: int, variable: str = "t") -> FieldSpec:
    return _cached_field("rational_function", p, variable)


@lru_cache(maxsize=None)
def _cached_field(kind: str, p: int, variable: str) -> FieldSpec:
    return FieldSpec(kind, p, variable)


QQ = _cached_field("rational", 0, "t")


# ---------------------------------------------------------------------------
# scalars
# ---------------------------------------------------------------------------


class Scalar:
    """Immutable field element in canonical form.

    ``value`` is an ``int`` in ``[0, p)``, a :class:`~fractions.Fraction`, or
    a :class:`RationalFunction`, according to ``field.kind``.
    """

    __slots__ = ("field", "value")

    def __init__(self, field: FieldSpec, value):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "value", value)

    def __setattr__(self, name, value):
        raise AttributeError("Scalar is immutable")

    def _coerce(self, other) -> Scalar:
        if isinstance(other, Scalar):
            if other.field is not self.field and other.field != self.field:
                raise FieldMismatch(f"cannot combine {self.field} and {other.field}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field(other)
        return NotImplemented

    # -- predicates ----------------------------------------------------------

    def is_zero(self) -> bool:
        v = self.value
        if self.field.kind == "rational_function":
            return not v.num
        return v == 0

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.field == other.field and self.value == other.value
        if isinstance(other, (int, Fraction)):
            try:
                return self == self.field(other)
            except DivisionByZero:
                return False
        return NotImplemented

    def __hash__(self):
        return hash((self.field.kind, self.field.p, self.value))

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        f = self.field
        if f.kind == "prime":
            return Scalar(f, (self.value + other.value) % f.p)
        if f.kind == "rational":
            return Scalar(f, self.value + other.value)
        return Scalar(f, self.value.add(other.value))

    __radd__ = __add__

    def __neg__(self):
        f = self.field
        if f.kind == "prime":
            return Scalar(f, (-self.value) % f.p)
        if f.kind == "rational":
            return Scalar(f, -self.value)
        return Scalar(f, self.value.neg())

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        f = self.field
        if f.kind == "prime":
            return Scalar(f, (self.value * other.value) % f.p)
        if f.kind == "rational":
            return Scalar(f, self.value * other.value)
        return Scalar(f, self.value.mul(other.value))

    __rmul__ = __mul__

    def inverse(self) -> Scalar:
        f = self.field
        if self.is_zero():
            raise DivisionByZero(f"inverse of zero in {f}")
        if f.kind == "prime":
            return Scalar(f, pow(self.value, -1, f.p))
        if f.kind == "rational":
            return Scalar(f, 1 / self.value)
        return Scalar(f, self.value.inv())

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = self.field.one
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- text ----------------------------------------------------------------

    def __format__(self, spec):
        return str(self)

    def __str__(self):
        f = self.field
        if f.kind == "prime":
            return str(self.value)
        if f.kind == "rational":
            return str(self.value)
        num = _format_poly(self.value.num, f.variable)
        if self.value.den == (1,):
            return num
        den = _format_poly(self.value.den, f.variable)
        return f"{_wrap(num, self.value.num)}/{_wrap(den, self.value.den)}"

    def __repr__(self):
        return f"Scalar({self.field}, {self})"


def arith(a: Scalar, b: Scalar, op: str) -> Scalar:
    """``a op b`` for op in add/sub/mul/div."""
    if a.field != b.field:
        raise FieldMismatch(f"cannot combine {a.field} and {b.field}")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown op {op!r}")


def _format_poly(c: Poly, var: str) -> str:
    if not c:
        return "0"
    terms = []
    for deg in range(len(c) - 1, -1, -1):
        k = c[deg]
        if not k:
            continue
        if deg == 0:
            terms.append(str(k))
            continue
        mono = var if deg == 1 else f"{var}^{deg}"
        terms.append(mono if k == 1 else f"{k}*{mono}")
    return "+".join(terms)


def _wrap(text: str, c: Poly) -> str:
    nonzero = sum(1 for x in c if x)
    if nonzero > 1 or (nonzero == 1 and c[-1] != 1 and len(c) > 1):
        return f"({text})"
    return text


class _Parser:
    """Recursive descent over ``+ - * / ^ ( )``, integers and the variable.

    Juxtaposition ``2t`` means ``2*t``.
    """

    _token = re.compile(r"\s*(?:(\d+)|([A-Za-z_]\w*)|(.))")

    def __init__(self, field: FieldSpec, text: str):
        self.field = field
        self.text = text
        self.tokens = []
        for m in self._token.finditer(text):
            if m.group(1):
                self.tokens.append(("int", int(m.group(1))))
            elif m.group(2):
                self.tokens.append(("name", m.group(2)))
            elif m.group(3) and not m.group(3).isspace():
                self.tokens.append(("op", m.group(3)))
        self.pos = 0

    def fail(self, why: str):
        raise ParseError(f"scalar {self.text!r} over {self.field}: {why}")

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else (None, None)

    def take(self):
        tok = self.peek()
        self.pos += 1
        return tok

    def parse(self) -> Scalar:
        if not self.tokens:
            self.fail("empty")
        try:
            value = self.expr()
        except DivisionByZero:
            self.fail("division by zero")
        if self.pos != len(self.tokens):
            self.fail(f"unexpected {self.peek()[1]!r}")
        return value

    def expr(self) -> Scalar:
        value = self.term()
        while self.peek() in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self) -> Scalar:
        value = self.unary()
        while True:
            kind, tok = self.peek()
            if (kind, tok) in (("op", "*"), ("op", "/")):
                self.take()
                rhs = self.unary()
                value = value * rhs if tok == "*" else value / rhs
            elif kind == "name" or (kind, tok) == ("op", "("):
                value = value * self.unary()
            else:
                return value

    def unary(self) -> Scalar:
        if self.peek() == ("op", "-"):
            self.take()
            return -self.unary()
        if self.peek() == ("op", "+"):
            self.take()
            return self.unary()
        return self.power()

    def power(self) -> Scalar:
        base = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            kind, exp = self.take()
            if kind != "int":
                self.fail("exponent must be a non-negative integer")
            base = base**exp
        return base

    def atom(self) -> Scalar:
        kind, tok = self.take()
        if kind == "int":
            return self.field(tok)
        if kind == "name":
            if self.field.kind == "rational_function" and tok == self.field.variable:
                return self.field.gen()
            self.fail(f"unknown symbol {tok!r}")
        if (kind, tok) == ("op", "("):
            value = self.expr()
            if self.take() != ("op", ")"):
                self.fail("unbalanced parenthesis")
            return value
        self.fail(f"unexpected {tok!r}" if tok else "unexpected end")


# ---------------------------------------------------------------------------
# squares and quadratic roots
# ---------------------------------------------------------------------------


def _is_perfect_square(n: int) -> bool:
    return n >= 0 and math.isqrt(n) ** 2 == n


def is_square(a: Scalar) -> bool:
    """Whether ``a`` has a square root in its own field.

    Raises :class:`Unsupported` for GF(p)(t) with p odd.
    """
    f = a.field
    if a.is_zero():
        return True
    if f.kind == "prime":
        if f.p == 2:
            return True
        return pow(a.value, (f.p - 1) // 2, f.p) == 1
    if f.kind == "rational":
        return _is_perfect_square(a.value.numerator) and _is_perfect_square(a.value.denominator)
    if f.p != 2:
        raise Unsupported(f"square test over {f} is not implemented")
    # Frobenius: in characteristic 2 the squares are exactly the fractions
    # whose reduced numerator and denominator use only even exponents.
    r = a.value
    return all(not c for c in r.num[1::2]) and all(not c for c in r.den[1::2])


def square_root_parts(a: Scalar) -> tuple[Scalar, Scalar]:
    """Write ``a = u**2 + t*w**2`` over GF(2)(t) and return ``(u, w)``.

    GF(2)(t) has degree 2 over its subfield of squares with basis ``{1, t}``;
    ``a`` is a square iff ``w == 0``.
    """
    f = a.field
    if f.kind != "rational_function" or f.p != 2:
        raise Unsupported(f"square-root decomposition needs GF(2)(t), not {f}")
    num, den = a.value.num, a.value.den
    # a = num*den / den^2; split num*den into even and odd exponent parts
    nd = _pmul(num, den, 2)
    even = tuple(nd[0::2])
    odd = tuple(nd[1::2])
    inv_den = Scalar(f, RationalFunction(den, (1,), 2)).inverse() if den != (1,) else f.one
    return f.poly(even) * inv_den, f.poly(odd) * inv_den


_DIVISOR_SCAN_LIMIT = 200_000


def _rational_roots_poly(a: Poly, b: Poly, c: Poly, p: int, max_degree: int):
    """Roots of ``a X^2 + b X + c`` over GF(p)(t) by the rational root theorem.

    Every root ``u/w`` in lowest terms has ``u | c`` and ``w | a``.  Returns
    ``(found_root, complete)`` where ``complete`` says the candidate search
    covered all divisors.
    """
    while max_degree >= 0 and p ** (max_degree + 1) > _DIVISOR_SCAN_LIMIT:
        max_degree -= 1
    complete = len(c) - 1 <= max_degree and len(a) - 1 <= max_degree
    if not c:
        return True, True

    def divisors(q: Poly):
        bound = min(len(q) - 1, max_degree)
        while bound >= 0 and p ** (bound + 1) > _DIVISOR_SCAN_LIMIT:
            bound -= 1
        for d in _all_polys(p, bound):
            if d[-1] == 1 and not _pdivmod(q, d, p)[1]:
                yield d

    num_cands = list(divisors(c))
    den_cands = list(divisors(a))
    for u in num_cands:
        for unit in range(1, p):
            us = _pscale(u, unit, p)
            for w in den_cands:
                # a u^2 + b u w + c w^2 == 0
                val = _padd(
                    _padd(_pmul(a, _pmul(us, us, p), p), _pmul(b, _pmul(us, w, p), p), p),
                    _pmul(c, _pmul(w, w, p), p),
                    p,
                )
                if not val:
                    return True, True
    return False, complete


def quadratic_has_root(b: Scalar, c: Scalar, max_degree: int = 8) -> Answer:
    """Does ``X^2 + bX + c`` have a root in the field of ``b`` and ``c``?

    Finite fields are scanned exhaustively, the rationals use the
    discriminant.  Over GF(p)(t) the case ``b = 0`` in characteristic 2 is
    exact; otherwise candidate roots from the rational root theorem are
    searched up to ``max_degree`` and the answer is UNKNOWN when the divisor
    search could not be completed.
    """
    f = b.field
    if c.field != f:
        raise FieldMismatch(f"cannot combine {b.field} and {c.field}")
    if f.kind == "prime":
        if f.p > 1 << 16:
            raise Unsupported(f"exhaustive root scan over GF({f.p}) is too large")
        bv, cv, p = b.value, c.value, f.p
        return Answer.YES if any((x * x + bv * x + cv) % p == 0 for x in range(p)) else Answer.NO
    if f.kind == "rational":
        disc = b * b - 4 * c
        return Answer.YES if is_square(disc) else Answer.NO
    if f.p == 2 and b.is_zero():
        return Answer.YES if is_square(c) else Answer.NO
    # clear denominators: multiply through by lcm of denominators
    p = f.p
    db, dc = b.value.den, c.value.den
    lcm = _pdivmod(_pmul(db, dc, p), _pgcd(db, dc, p), p)[0]
    # X^2 + bX + c with X = Y / lcm  ->  Y^2 + (b lcm) Y + c lcm^2
    bl = (b * Scalar(f, RationalFunction(lcm, (1,), p))).value
    cl = (c * Scalar(f, RationalFunction(_pmul(lcm, lcm, p), (1,), p))).value
    if bl.den != (1,) or cl.den != (1,):
        raise AssertionError("denominator clearing failed")
    found, complete = _rational_roots_poly((1,), bl.num, cl.num, p, max_degree)
    if found:
        return Answer.YES
    return Answer.NO if complete else Answer.UNKNOWN


def is_2_closed(field: FieldSpec, p_bound: int = 1 << 16) -> Answer:
    """Is every element of ``field`` a square?

    Prime fields up to ``p_bound`` are decided by scanning for a non-square;
    beyond it the answer follows from the characteristic.  Function fields
    and the rationals are never 2-closed (``t`` and ``2`` are not squares).
    """
    if field.kind == "prime":
        if field.p <= p_bound:
            return Answer.YES if all(is_square(x) for x in field.elements()) else Answer.NO
        return Answer.YES if field.p == 2 else Answer.NO
    if field.kind == "rational":
        return Answer.NO
    # odd-degree elements are never squares in GF(p)(t)
    return Answer.NO

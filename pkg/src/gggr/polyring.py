"""Exact univariate polynomial and Laurent-polynomial arithmetic.

Everything downstream (Green polynomials, character values, order formulas)
is computed in these rings with `fractions.Fraction` coefficients — no floats
anywhere.  Two formal variables appear in practice:

* ``t`` — the Hall–Littlewood / Green polynomial variable,
* ``q`` — the field-size variable of the finite groups of Lie type.

Polynomials carry their variable name as a tag and refuse to combine with a
polynomial over a different variable; the substitution t -> eps*q (eps = +-1)
is the only sanctioned bridge between the two.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence, Union

from .errors import NegativeValuationError, NonExactDivisionError, VariableMismatchError

Scalar = Union[int, Fraction]


def _check_var(a: "RationalPoly", b: "RationalPoly") -> None:
    if a.var != b.var:
        raise VariableMismatchError(f"cannot combine '{a.var}' with '{b.var}'")


class RationalPoly:
    """Dense polynomial over Q.  ``coeffs[k]`` is the coefficient of x^k;
    the zero polynomial has an empty coefficient tuple."""

    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs: Iterable[Scalar] = (), var: str = "t"):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)
        self.var = var

    # -- constructors -------------------------------------------------

    @classmethod
    def const(cls, c: Scalar, var: str = "t") -> "RationalPoly":
        return cls((Fraction(c),), var)

    @classmethod
    def zero(cls, var: str = "t") -> "RationalPoly":
        return cls((), var)

    @classmethod
    def gen(cls, var: str = "t") -> "RationalPoly":
        """The variable itself."""
        return cls((0, 1), var)

    @classmethod
    def monomial(cls, k: int, c: Scalar = 1, var: str = "t") -> "RationalPoly":
        if k < 0:
            raise ValueError("monomial exponent must be >= 0 (use LaurentPoly)")
        return cls((0,) * k + (Fraction(c),), var)

    # -- structure ----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        """Degree; the zero polynomial reports -1."""
        return len(self.coeffs) - 1

    def leading(self) -> Fraction:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def coeff(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    # -- ring operations ----------------------------------------------

    def _coerce(self, other) -> "RationalPoly":
        if isinstance(other, RationalPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return RationalPoly.const(other, self.var)
        return NotImplemented

    def __add__(self, other) -> "RationalPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        _check_var(self, other)
        n = max(len(self.coeffs), len(other.coeffs))
        return RationalPoly(
            (self.coeff(k) + other.coeff(k) for k in range(n)), self.var
        )

    __radd__ = __add__

    def __neg__(self) -> "RationalPoly":
        return RationalPoly((-c for c in self.coeffs), self.var)

    def __sub__(self, other) -> "RationalPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "RationalPoly":
        return (-self) + other

    def __mul__(self, other) -> "RationalPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        _check_var(self, other)
        if self.is_zero() or other.is_zero():
            return RationalPoly((), self.var)
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return RationalPoly(out, self.var)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "RationalPoly":
        if k < 0:
            raise ValueError("negative power of a RationalPoly")
        result = RationalPoly.const(1, self.var)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = RationalPoly.const(other, self.var)
        return (
            isinstance(other, RationalPoly)
            and self.var == other.var
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.var, self.coeffs))

    def __repr__(self) -> str:
        return f"RationalPoly({pretty(self)!r})"

    def __call__(self, x: Scalar) -> Fraction:
        """Horner evaluation at an exact rational point."""
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc


def div_rem(f: RationalPoly, g: RationalPoly) -> tuple[RationalPoly, RationalPoly]:
    """Euclidean division f = q*g + r with deg r < deg g, all exact."""
    _check_var(f, g)
    if g.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(f.coeffs)
    gd, glead = g.degree, g.leading()
    quot = [Fraction(0)] * max(len(rem) - gd, 0)
    for k in range(len(rem) - 1, gd - 1, -1):
        c = rem[k]
        if c == 0:
            continue
        factor = c / glead
        quot[k - gd] = factor
        for j, gc in enumerate(g.coeffs):
            rem[k - gd + j] -= factor * gc
    return RationalPoly(quot, f.var), RationalPoly(rem, f.var)


def exact_div(f: RationalPoly, g: RationalPoly) -> RationalPoly:
    """Division that is required to be exact; nonzero remainder is an error."""
    q, r = div_rem(f, g)
    if not r.is_zero():
        raise NonExactDivisionError(
            f"division left remainder {pretty(r)} (dividing by {pretty(g)})"
        )
    return q


class LaurentPoly:
    """A Laurent polynomial c_v x^v + ... stored as (RationalPoly, valuation).

    Normal form: the underlying polynomial has a nonzero constant term (the
    valuation soaks up every factor of x), and the zero element is stored with
    valuation 0.
    """

    __slots__ = ("poly", "val")

    def __init__(self, poly: RationalPoly, val: int = 0):
        if poly.is_zero():
            poly, val = RationalPoly((), poly.var), 0
        else:
            shift = next(i for i, c in enumerate(poly.coeffs) if c != 0)
            if shift:
                poly = RationalPoly(poly.coeffs[shift:], poly.var)
                val += shift
        self.poly = poly
        self.val = val

    @classmethod
    def const(cls, c: Scalar, var: str = "t") -> "LaurentPoly":
        return cls(RationalPoly.const(c, var))

    @classmethod
    def monomial(cls, k: int, c: Scalar = 1, var: str = "t") -> "LaurentPoly":
        return cls(RationalPoly.const(c, var), k)

    @property
    def var(self) -> str:
        return self.poly.var

    def is_zero(self) -> bool:
        return self.poly.is_zero()

    @property
    def valuation(self) -> int:
        """Lowest exponent with nonzero coefficient (0 for the zero element)."""
        return self.val

    @property
    def degree(self) -> int:
        return self.poly.degree + self.val

    def coeff(self, k: int) -> Fraction:
        return self.poly.coeff(k - self.val)

    def leading(self) -> Fraction:
        return self.poly.leading()

    def is_monic(self) -> bool:
        return self.poly.is_monic()

    def is_polynomial(self) -> bool:
        """True when no genuinely negative power survives."""
        return self.is_zero() or self.val >= 0

    def as_poly(self) -> RationalPoly:
        """Forget the Laurent structure; requires valuation >= 0."""
        if not self.is_polynomial():
            raise ValueError(f"valuation {self.val} < 0: not a polynomial")
        return RationalPoly((0,) * self.val + tuple(self.poly.coeffs), self.var)

    def _coerce(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, RationalPoly):
            return LaurentPoly(other)
        if isinstance(other, (int, Fraction)):
            return LaurentPoly.const(other, self.var)
        return NotImplemented

    def __add__(self, other) -> "LaurentPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        v = min(self.val, other.val)
        a = RationalPoly((0,) * (self.val - v) + tuple(self.poly.coeffs), self.var)
        b = RationalPoly((0,) * (other.val - v) + tuple(other.poly.coeffs), other.var)
        return LaurentPoly(a + b, v)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(-self.poly, self.val)

    def __sub__(self, other) -> "LaurentPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "LaurentPoly":
        return (-self) + other

    def __mul__(self, other) -> "LaurentPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return LaurentPoly(self.poly * other.poly, self.val + other.val)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction, RationalPoly)):
            other = self._coerce(other)
        return (
            isinstance(other, LaurentPoly)
            and self.var == other.var
            and self.val == other.val
            and self.poly == other.poly
        )

    def __hash__(self):
        return hash((self.val, self.poly))

    def __repr__(self) -> str:
        return f"LaurentPoly({pretty(self)!r})"

    def __call__(self, x: Scalar) -> Fraction:
        if self.val < 0 and x == 0:
            raise NegativeValuationError(
                f"cannot evaluate valuation-{self.val} Laurent polynomial at 0"
            )
        base = self.poly(x)
        if self.val >= 0:
            return base * Fraction(x) ** self.val
        return base / Fraction(x) ** (-self.val)


def substitute_signed(f: Union[RationalPoly, LaurentPoly], eps: int) -> LaurentPoly:
    """Substitute t -> eps*q (eps = +1 or -1): the coefficient of t^d picks up
    a factor eps^d and the variable tag flips from 't' to 'q'."""
    if eps not in (1, -1):
        raise ValueError(f"eps must be +1 or -1, got {eps}")
    if isinstance(f, RationalPoly):
        f = LaurentPoly(f)
    if f.var != "t":
        raise VariableMismatchError(f"substitute_signed expects variable 't', got '{f.var}'")
    coeffs = [c * eps ** ((f.val + i) % 2) for i, c in enumerate(f.poly.coeffs)]
    return LaurentPoly(RationalPoly(coeffs, "q"), f.val)


def reciprocal_shift(f: Union[RationalPoly, LaurentPoly], d: int) -> LaurentPoly:
    """x^d * f(1/x): the term c*x^k becomes c*x^(d-k).  Same variable tag."""
    if isinstance(f, RationalPoly):
        f = LaurentPoly(f)
    if f.is_zero():
        return f
    coeffs = tuple(reversed(f.poly.coeffs))
    return LaurentPoly(RationalPoly(coeffs, f.var), d - f.degree)


# -- serialization ----------------------------------------------------


def poly_to_json(f: Union[RationalPoly, LaurentPoly]) -> dict:
    """Wire format: {"var": ..., "val": valuation, "coeffs": [[num, den], ...]}
    with coefficients lowest-degree first as decimal strings."""
    if isinstance(f, RationalPoly):
        f = LaurentPoly(f)
    return {
        "var": f.var,
        "val": f.val,
        "coeffs": [[str(c.numerator), str(c.denominator)] for c in f.poly.coeffs],
    }


def poly_from_json(data: dict) -> LaurentPoly:
    coeffs = [Fraction(int(num), int(den)) for num, den in data["coeffs"]]
    return LaurentPoly(RationalPoly(coeffs, data["var"]), int(data["val"]))


def pretty(f: Union[RationalPoly, LaurentPoly], var: str | None = None) -> str:
    """Render highest-degree first, e.g. 'q^5 - q^4 + 2q^2 - 1'."""
    if isinstance(f, RationalPoly):
        f = LaurentPoly(f)
    if f.is_zero():
        return "0"
    var = var or f.var
    pieces: list[tuple[str, str]] = []
    for i in range(len(f.poly.coeffs) - 1, -1, -1):
        c = f.poly.coeffs[i]
        if c == 0:
            continue
        k = i + f.val
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            pw = var if k == 1 else f"{var}^{k}"
            body = pw if mag == 1 else f"{mag}{pw}"
        pieces.append((sign, body))
    first_sign, first_body = pieces[0]
    out = ("-" if first_sign == "-" else "") + first_body
    for sign, body in pieces[1:]:
        out += f" {sign} {body}"
    return out

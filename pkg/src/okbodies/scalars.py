"""Exact scalars of the form a + b*sqrt(d) with a, b rational and d squarefree.

Every quantity in this package is either a rational number or lives in a
single real quadratic extension Q(sqrt(d)); mixing two distinct radicals is
rejected at construction time.  All comparisons are exact (sign analysis,
no floats).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

__all__ = ["ExactScalar", "sqrt_scalar", "squarefree_decomposition"]


def squarefree_decomposition(n: int) -> tuple[int, int]:
    """Write n = s*s*d with d squarefree; return (s, d)."""
    if n < 0:
        raise ValueError("negative radicand")
    if n == 0:
        return 0, 0
    s, d = 1, 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            k = 0
            while n % p == 0:
                n //= p
                k += 1
            s *= p ** (k // 2)
            if k % 2:
                d *= p
        p += 1 if p == 2 else 2
    d *= n
    return s, d


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    raise TypeError(f"not an exact rational: {x!r}")


@dataclass(frozen=True)
class ExactScalar:
    """Value a + b*sqrt(d), canonicalized so that b != 0 implies d squarefree, d > 1."""

    a: Fraction
    b: Fraction = Fraction(0)
    d: int = 0

    def __post_init__(self):
        a = _as_fraction(self.a)
        b = _as_fraction(self.b)
        d = self.d
        if d < 0:
            raise ValueError("radicand must be nonnegative")
        if d in (0, 1):
            # sqrt(0) = 0, sqrt(1) = 1: fold into the rational part
            a, b, d = (a + b if d == 1 else a), Fraction(0), 0
        elif b == 0:
            d = 0
        else:
            s, d0 = squarefree_decomposition(d)
            b, d = b * s, d0
            if d in (0, 1):
                a, b, d = a + b * d, Fraction(0), 0
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "d", d)

    # -- predicates ---------------------------------------------------
    @property
    def is_rational(self) -> bool:
        return self.b == 0

    def as_fraction(self) -> Fraction:
        if not self.is_rational:
            raise ValueError(f"{self} is irrational")
        return self.a

    def sign(self) -> int:
        a, b = self.a, self.b
        if b == 0:
            return (a > 0) - (a < 0)
        if a == 0:
            return 1 if b > 0 else -1
        sa = 1 if a > 0 else -1
        sb = 1 if b > 0 else -1
        if sa == sb:
            return sa
        # a and b*sqrt(d) pull in opposite directions: compare a^2 vs b^2*d
        lhs, rhs = a * a, b * b * self.d
        if lhs == rhs:
            return 0
        return sa if lhs > rhs else sb

    # -- arithmetic ---------------------------------------------------
    def _common_d(self, other: "ExactScalar") -> int:
        if self.d and other.d and self.d != other.d:
            raise ValueError(f"mixed radicals sqrt({self.d}) and sqrt({other.d})")
        return self.d or other.d

    def __add__(self, other):
        other = coerce(other)
        d = self._common_d(other)
        return ExactScalar(self.a + other.a, self.b + other.b, d)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-coerce(other))

    def __rsub__(self, other):
        return coerce(other) - self

    def __neg__(self):
        return ExactScalar(-self.a, -self.b, self.d)

    def __mul__(self, other):
        other = coerce(other)
        d = self._common_d(other)
        a = self.a * other.a + self.b * other.b * d
        b = self.a * other.b + self.b * other.a
        return ExactScalar(a, b, d)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = coerce(other)
        if other.sign() == 0:
            raise ZeroDivisionError
        if other.is_rational:
            return ExactScalar(self.a / other.a, self.b / other.a, self.d)
        # multiply by the conjugate; the norm a^2 - b^2 d is a nonzero rational
        conj = ExactScalar(other.a, -other.b, other.d)
        norm = other.a * other.a - other.b * other.b * other.d
        num = self * conj
        return ExactScalar(num.a / norm, num.b / norm, num.d)

    def __rtruediv__(self, other):
        return coerce(other) / self

    # -- total order --------------------------------------------------
    def __lt__(self, other):
        return (self - coerce(other)).sign() < 0

    def __le__(self, other):
        return (self - coerce(other)).sign() <= 0

    def __gt__(self, other):
        return (self - coerce(other)).sign() > 0

    def __ge__(self, other):
        return (self - coerce(other)).sign() >= 0

    def __eq__(self, other):
        try:
            other = coerce(other)
        except TypeError:
            return NotImplemented
        return self.a == other.a and self.b == other.b and self.d == other.d

    def __hash__(self):
        return hash((self.a, self.b, self.d))

    def __float__(self):
        return float(self.a) + float(self.b) * self.d ** 0.5

    def __repr__(self):
        if self.is_rational:
            return f"ExactScalar({self.a})"
        return f"ExactScalar({self.a} + {self.b}*sqrt({self.d}))"


def coerce(x) -> ExactScalar:
    if isinstance(x, ExactScalar):
        return x
    return ExactScalar(_as_fraction(x))


def sqrt_scalar(x) -> ExactScalar:
    """Exact square root of a nonnegative rational."""
    x = _as_fraction(x)
    if x < 0:
        raise ValueError("negative radicand")
    # sqrt(p/q) = sqrt(p*q)/q
    s, d = squarefree_decomposition(x.numerator * x.denominator)
    if d == 0:
        return ExactScalar(Fraction(0))
    if d == 1:
        return ExactScalar(Fraction(s, x.denominator))
    return ExactScalar(Fraction(0), Fraction(s, x.denominator), d)

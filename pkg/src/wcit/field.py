"""Exact coefficient fields: the rationals and prime fields F_p.

Rational scalars are `fractions.Fraction` values (always stored in lowest
terms with positive denominator).  Prime-field scalars are `FpElement`
values holding a residue in [0, p).  Both kinds support the usual
arithmetic operators, so the rest of the library is written against
operators and stays field-agnostic.

The prime-field mode exists as a fast pre-pass: ranks and quotient
dimensions computed modulo p are lower bounds for the corresponding
rational values, and they agree for all but finitely many primes.
Definitive results should be computed over the rationals.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import FieldMismatchError

__all__ = ["QQ", "Rationals", "PrimeField", "FpElement", "field_from_spec"]


def _is_probable_prime(n: int) -> bool:
    # deterministic Miller-Rabin for n < 3.3 * 10^24
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class Rationals:
    """The field of rational numbers.  Elements are `Fraction` values."""

    characteristic = 0
    spec = "q"

    def __call__(self, numerator, denominator=1) -> Fraction:
        return Fraction(numerator, denominator)

    @property
    def zero(self) -> Fraction:
        return Fraction(0)

    @property
    def one(self) -> Fraction:
        return Fraction(1)

    def from_fraction(self, value: Fraction) -> Fraction:
        return Fraction(value)

    def is_element(self, value) -> bool:
        return isinstance(value, (Fraction, int))

    def _check(self, value):
        if not self.is_element(value):
            raise FieldMismatchError(f"{value!r} is not a rational scalar")
        return Fraction(value)

    # functional facade over the operator protocol
    def add(self, a, b):
        return self._check(a) + self._check(b)

    def mul(self, a, b):
        return self._check(a) * self._check(b)

    def neg(self, a):
        return -self._check(a)

    def inv(self, a):
        a = self._check(a)
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / a

    def eq(self, a, b) -> bool:
        return self._check(a) == self._check(b)

    def __eq__(self, other) -> bool:
        return isinstance(other, Rationals)

    def __hash__(self) -> int:
        return hash("Rationals")

    def __repr__(self) -> str:
        return "QQ"


QQ = Rationals()


class FpElement:
    """A residue modulo the prime of its field."""

    __slots__ = ("residue", "field")

    def __init__(self, residue: int, field: "PrimeField"):
        self.residue = residue % field.p
        self.field = field

    def _coerce(self, other):
        if isinstance(other, FpElement):
            if other.field.p != self.field.p:
                raise FieldMismatchError(
                    f"mixed prime fields F_{self.field.p} and F_{other.field.p}"
            )
            return other
        if isinstance(other, int):
            return FpElement(other, self.field)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FpElement(self.residue + o.residue, self.field)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FpElement(self.residue - o.residue, self.field)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FpElement(o.residue - self.residue, self.field)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FpElement(self.residue * o.residue, self.field)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o._inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self._inverse()

    def __neg__(self):
        return FpElement(-self.residue, self.field)

    def __pow__(self, exponent: int):
        if exponent < 0:
            return self._inverse() ** (-exponent)
        return FpElement(pow(self.residue, exponent, self.field.p), self.field)

    def _inverse(self) -> "FpElement":
        if self.residue == 0:
            raise ZeroDivisionError(f"inverse of zero in F_{self.field.p}")
        return FpElement(pow(self.residue, -1, self.field.p), self.field)

    def __eq__(self, other) -> bool:
        if isinstance(other, FpElement):
            return self.field.p == other.field.p and self.residue == other.residue
        if isinstance(other, int):
            return self.residue == other % self.field.p
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.field.p, self.residue))

    def __bool__(self) -> bool:
        return self.residue != 0

    def __repr__(self) -> str:
        return str(self.residue)


class PrimeField:
    """The prime field F_p.  Elements are `FpElement` residues."""

    def __init__(self, p: int):
        if not _is_probable_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p

    @property
    def characteristic(self) -> int:
        return self.p

    @property
    def spec(self) -> str:
        return f"fp:{self.p}"

    def __call__(self, numerator, denominator=1) -> FpElement:
        value = FpElement(numerator, self)
        if denominator != 1:
            value = value / FpElement(denominator, self)
        return value

    @property
    def zero(self) -> FpElement:
        return FpElement(0, self)

    @property
    def one(self) -> FpElement:
        return FpElement(1, self)

    def from_fraction(self, value: Fraction) -> FpElement:
        value = Fraction(value)
        return self(value.numerator, value.denominator)

    def is_element(self, value) -> bool:
        return isinstance(value, FpElement) and value.field.p == self.p

    def _check(self, value) -> FpElement:
        if isinstance(value, int):
            return FpElement(value, self)
        if not self.is_element(value):
            raise FieldMismatchError(f"{value!r} is not an element of F_{self.p}")
        return value

    def add(self, a, b):
        return self._check(a) + self._check(b)

    def mul(self, a, b):
        return self._check(a) * self._check(b)

    def neg(self, a):
        return -self._check(a)

    def inv(self, a):
        return self._check(a)._inverse()

    def eq(self, a, b) -> bool:
        return self._check(a) == self._check(b)

    def __eq__(self, other) -> bool:
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self) -> int:
        return hash(("PrimeField", self.p))

    def __repr__(self) -> str:
        return f"GF({self.p})"


def field_from_spec(spec: str):
    """Resolve a field description: ``"q"`` or ``"fp:PRIME"``."""
    spec = spec.strip().lower()
    if spec == "q":
        return QQ
    if spec.startswith("fp:"):
        try:
            p = int(spec[3:])
        except ValueError:
            raise ValueError(f"bad prime in field spec {spec!r}") from None
        return PrimeField(p)
    raise ValueError(f"unknown field spec {spec!r} (expected 'q' or 'fp:PRIME')")

"""Exact scalar arithmetic over the three coefficient fields.

Supported fields: the rationals Q, the Gaussian rationals Q(i), and prime
fields F_p.  Every value is stored in a canonical form (lowest terms with a
positive denominator for rational parts, residues in [0, p) for prime
fields), so equality and hashing are structural and no floating point is
involved anywhere.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    BadModulusError,
    DivisionByZeroError,
    FieldMismatchError,
    ParseError,
)


class FieldKind(enum.Enum):
    RATIONAL = "Q"
    GAUSSIAN_RATIONAL = "Qi"
    PRIME_FIELD = "Fp"


def _is_prime(n):
    # deterministic Miller-Rabin, valid for machine-word sized n
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class FieldSpec:
    """A coefficient field: Q, Q(i), or F_p (p an odd or even prime)."""

    kind: FieldKind
    modulus: int | None = None

    def __post_init__(self):
        if self.kind is FieldKind.PRIME_FIELD:
            if self.modulus is None or not _is_prime(self.modulus):
                raise BadModulusError(f"modulus must be prime, got {self.modulus}")
        elif self.modulus is not None:
            raise BadModulusError("modulus only makes sense for prime fields")

    @property
    def characteristic(self):
        return self.modulus if self.kind is FieldKind.PRIME_FIELD else 0

    def zero(self):
        return self.from_int(0)

    def one(self):
        return self.from_int(1)

    def from_int(self, n):
        if self.kind is FieldKind.RATIONAL:
            return Scalar(self, Fraction(n))
        if self.kind is FieldKind.GAUSSIAN_RATIONAL:
            return Scalar(self, (Fraction(n), Fraction(0)))
        return Scalar(self, n % self.modulus)

    def from_fraction(self, num, den=1):
        fr = Fraction(num, den)
        if self.kind is FieldKind.RATIONAL:
            return Scalar(self, fr)
        if self.kind is FieldKind.GAUSSIAN_RATIONAL:
            return Scalar(self, (fr, Fraction(0)))
        if fr.denominator % self.modulus == 0:
            raise DivisionByZeroError(f"denominator of {fr} vanishes mod {self.modulus}")
        return Scalar(
            self,
            fr.numerator * pow(fr.denominator, -1, self.modulus) % self.modulus,
        )

    def from_pair(self, re, im):
        """Gaussian rational re + im*i."""
        if self.kind is not FieldKind.GAUSSIAN_RATIONAL:
            raise FieldMismatchError("real/imaginary pairs only exist over Q(i)")
        return Scalar(self, (Fraction(re), Fraction(im)))

    def __str__(self):
        if self.kind is FieldKind.PRIME_FIELD:
            return f"F{self.modulus}"
        return self.kind.value

    __repr__ = __str__


QQ = FieldSpec(FieldKind.RATIONAL)
QI = FieldSpec(FieldKind.GAUSSIAN_RATIONAL)


def GF(p):
    return FieldSpec(FieldKind.PRIME_FIELD, p)


def parse_field(text):
    """Parse a field name: ``Q``, ``Qi``, or ``Fp:<prime>``."""
    text = text.strip()
    if text == "Q":
        return QQ
    if text == "Qi":
        return QI
    if text.startswith("Fp:"):
        try:
            p = int(text[3:])
        except ValueError:
            raise ParseError(f"bad prime field spec {text!r}") from None
        return GF(p)
    raise ParseError(f"unknown field {text!r}, expected Q, Qi, or Fp:<prime>")


class Scalar:
    """An element of one of the supported fields, in canonical form.

    The payload depends on the field: a Fraction over Q, a pair of Fractions
    (real, imaginary) over Q(i), and a residue in [0, p) over F_p.  Arithmetic
    mixes freely with Python ints, which are promoted into the field.
    """

    __slots__ = ("field", "value")

    def __init__(self, field, value):
        self.field = field
        self.value = value

    def _coerce(self, other):
        if isinstance(other, Scalar):
            if other.field != self.field:
                raise FieldMismatchError(f"{self.field} vs {other.field}")
            return other
        if isinstance(other, int):
            return self.field.from_int(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        k = self.field.kind
        if k is FieldKind.RATIONAL:
            return Scalar(self.field, self.value + other.value)
        if k is FieldKind.GAUSSIAN_RATIONAL:
            a, b = self.value
            c, d = other.value
            return Scalar(self.field, (a + c, b + d))
        return Scalar(self.field, (self.value + other.value) % self.field.modulus)

    __radd__ = __add__

    def __neg__(self):
        k = self.field.kind
        if k is FieldKind.RATIONAL:
            return Scalar(self.field, -self.value)
        if k is FieldKind.GAUSSIAN_RATIONAL:
            a, b = self.value
            return Scalar(self.field, (-a, -b))
        return Scalar(self.field, -self.value % self.field.modulus)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        k = self.field.kind
        if k is FieldKind.RATIONAL:
            return Scalar(self.field, self.value * other.value)
        if k is FieldKind.GAUSSIAN_RATIONAL:
            a, b = self.value
            c, d = other.value
            return Scalar(self.field, (a * c - b * d, a * d + b * c))
        return Scalar(self.field, self.value * other.value % self.field.modulus)

    __rmul__ = __mul__

    def inverse(self):
        if not self:
            raise DivisionByZeroError("inverse of zero")
        k = self.field.kind
        if k is FieldKind.RATIONAL:
            return Scalar(self.field, 1 / self.value)
        if k is FieldKind.GAUSSIAN_RATIONAL:
            a, b = self.value
            n = a * a + b * b
            return Scalar(self.field, (a / n, -b / n))
        return Scalar(self.field, pow(self.value, -1, self.field.modulus))

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = self.field.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conjugate(self):
        """Complex conjugate; the identity on Q and F_p."""
        if self.field.kind is FieldKind.GAUSSIAN_RATIONAL:
            a, b = self.value
            return Scalar(self.field, (a, -b))
        return self

    def __bool__(self):
        if self.field.kind is FieldKind.GAUSSIAN_RATIONAL:
            return bool(self.value[0]) or bool(self.value[1])
        return bool(self.value)

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.field.from_int(other)
        if not isinstance(other, Scalar):
            return NotImplemented
        return self.field == other.field and self.value == other.value

    def __hash__(self):
        if self.field.kind is FieldKind.GAUSSIAN_RATIONAL:
            re, im = self.value
            return hash(re) if not im else hash((re, im))
        return hash(self.value)

    def __str__(self):
        k = self.field.kind
        if k is FieldKind.GAUSSIAN_RATIONAL:
            re, im = self.value
            if not im:
                return str(re)
            if im == 1:
                istr = "i"
            elif im == -1:
                istr = "-i"
            else:
                istr = f"{im}i"
            if not re:
                return istr
            return f"{re}+{istr}" if im > 0 else f"{re}{istr}"
        return str(self.value)

    def __repr__(self):
        return f"Scalar({self.field}, {self})"


class AutoKind(enum.Enum):
    IDENTITY = "id"
    CONJUGATION = "conj"
    FROBENIUS_POWER = "frob"


@dataclass(frozen=True)
class FieldAutomorphism:
    """A field automorphism usable entrywise on matrices and coefficients.

    Over Q only the identity exists; over Q(i) also complex conjugation; over
    F_p the Frobenius powers x -> x^(p^e), which act as the identity on the
    prime field itself but are kept as first-class values so code handling
    several fields stays uniform.
    """

    field: FieldSpec
    kind: AutoKind
    power: int = 0

    def __post_init__(self):
        if self.kind is AutoKind.CONJUGATION and self.field.kind is not FieldKind.GAUSSIAN_RATIONAL:
            raise FieldMismatchError("conjugation only exists over Q(i)")
        if self.kind is AutoKind.FROBENIUS_POWER:
            if self.field.kind is not FieldKind.PRIME_FIELD:
                raise FieldMismatchError("Frobenius only exists in positive characteristic")
            if self.power < 0:
                raise ParseError("Frobenius power must be nonnegative")

    def __call__(self, s):
        if not isinstance(s, Scalar) or s.field != self.field:
            raise FieldMismatchError("automorphism applied outside its field")
        if self.kind is AutoKind.IDENTITY:
            return s
        if self.kind is AutoKind.CONJUGATION:
            return s.conjugate()
        # x^(p^e) = x on the prime field
        return s

    def compose(self, other):
        """self after other."""
        if other.field != self.field:
            raise FieldMismatchError("cannot compose automorphisms of different fields")
        if self.kind is AutoKind.IDENTITY:
            return other
        if other.kind is AutoKind.IDENTITY:
            return self
        if self.kind is AutoKind.CONJUGATION and other.kind is AutoKind.CONJUGATION:
            return identity_automorphism(self.field)
        return FieldAutomorphism(self.field, AutoKind.FROBENIUS_POWER, self.power + other.power)

    @property
    def is_identity_action(self):
        return self.kind is not AutoKind.CONJUGATION

    def __str__(self):
        if self.kind is AutoKind.FROBENIUS_POWER:
            return f"frob^{self.power}"
        return self.kind.value


def identity_automorphism(field):
    return FieldAutomorphism(field, AutoKind.IDENTITY)


def conjugation(field=QI):
    return FieldAutomorphism(field, AutoKind.CONJUGATION)


def frobenius(field, power=1):
    return FieldAutomorphism(field, AutoKind.FROBENIUS_POWER, power)

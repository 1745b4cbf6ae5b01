"""Exact scalar fields: the rationals and prime fields F_p.

Scalars are plain Python numbers.  Over Q a scalar is an ``int`` or a
``Fraction`` (integers are kept as ``int`` for speed); over F_p it is an
``int`` in ``[0, p)``.  The :class:`Field` object carries the arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache


class FieldError(ValueError):
    pass


class FieldMismatch(FieldError):
    pass


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


def _prime_factors(n: int) -> list[int]:
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


@dataclass(frozen=True)
class Field:
    """Q when ``p is None``, otherwise the prime field F_p."""

    p: int | None = None

    def __post_init__(self):
        if self.p is not None and not _is_prime(self.p):
            raise FieldError(f"modulus {self.p} is not prime")

    @property
    def name(self) -> str:
        return "Q" if self.p is None else f"Fp:{self.p}"

    def __repr__(self):
        return self.name

    @property
    def characteristic(self) -> int:
        return 0 if self.p is None else self.p

    zero = 0
    one = 1

    def __call__(self, x) -> int | Fraction:
        """Coerce an int, Fraction or scalar string into the field."""
        if isinstance(x, str):
            return self.parse(x)
        if isinstance(x, bool) or isinstance(x, float):
            raise FieldError(f"refusing inexact scalar {x!r}")
        if self.p is None:
            return self.norm(Fraction(x))
        x = Fraction(x)
        return self.div(x.numerator % self.p, x.denominator % self.p)

    def norm(self, x):
        if self.p is not None:
            return x % self.p
        if type(x) is Fraction and x.denominator == 1:
            return x.numerator
        return x

    def add(self, a, b):
        return self.norm(a + b)

    def sub(self, a, b):
        return self.norm(a - b)

    def mul(self, a, b):
        return self.norm(a * b)

    def neg(self, a):
        return self.norm(-a)

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        if self.p is not None:
            return pow(a, -1, self.p)
        return self.norm(Fraction(1) / a)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def parse(self, s: str):
        s = s.strip()
        try:
            if "/" in s:
                num, den = s.split("/")
                num, den = int(num), int(den)
            else:
                num, den = int(s), 1
        except ValueError:
            raise FieldError(f"cannot parse scalar {s!r}") from None
        if den == 0 or (self.p is not None and den % self.p == 0):
            raise FieldError(f"zero denominator in scalar {s!r}")
        if self.p is None:
            return self.norm(Fraction(num, den))
        return self.div(num % self.p, den % self.p)

    def format(self, x) -> str:
        return str(x)

    def is_invertible_int(self, n: int) -> bool:
        return self.p is None or n % self.p != 0

    def primitive_root_of_unity(self, n: int):
        """Smallest positive primitive n-th root of unity.

        Over Q only n in {1, 2} are available.
        """
        if n < 1:
            raise FieldError("order must be positive")
        if self.p is None:
            if n == 1:
                return 1
            if n == 2:
                return -1
            raise FieldError(f"Q has no primitive {n}-th root of unity")
        if (self.p - 1) % n:
            raise FieldError(f"F_{self.p} has no primitive {n}-th root of unity (need p = 1 mod {n})")
        qs = _prime_factors(n)
        for z in range(1, self.p):
            if pow(z, n, self.p) == 1 and all(pow(z, n // q, self.p) != 1 for q in qs):
                return z
        raise AssertionError("unreachable")


QQ = Field(None)


@lru_cache(maxsize=None)
def GF(p: int) -> Field:
    return Field(p)


def field_from_name(name: str) -> Field:
    name = name.strip()
    if name in ("Q", "QQ"):
        return QQ
    if name.startswith("Fp:"):
        try:
            return GF(int(name[3:]))
        except ValueError:
            raise FieldError(f"bad field descriptor {name!r}") from None
    raise FieldError(f"unknown field {name!r}; expected 'Q' or 'Fp:<p>'")


def same_field(*fields: Field) -> Field:
    first = fields[0]
    for f in fields[1:]:
        if f != first:
            raise FieldMismatch(f"field mismatch: {first.name} vs {f.name}")
    return first

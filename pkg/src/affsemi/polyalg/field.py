"""Coefficient fields: Q (exact rationals) and prime fields F_p."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


@dataclass(frozen=True)
class Field:
    """``characteristic == 0`` means Q."""

    characteristic: int = 0

    def __post_init__(self):
        c = self.characteristic
        if c != 0 and not _is_prime(c):
            raise ValueError(f"characteristic must be 0 or prime, got {c}")

    def __str__(self) -> str:
        return "QQ" if self.characteristic == 0 else f"ZZ/{self.characteristic}"

    def __call__(self, x):
        p = self.characteristic
        if p == 0:
            return Fraction(x)
        if isinstance(x, Fraction):
            return x.numerator * pow(x.denominator, -1, p) % p
        return int(x) % p

    def inv(self, x):
        if self.characteristic == 0:
            return 1 / x
        return pow(x, -1, self.characteristic)

    def neg(self, x):
        if self.characteristic == 0:
            return -x
        return -x % self.characteristic

    def add(self, x, y):
        if self.characteristic == 0:
            return x + y
        return (x + y) % self.characteristic

    def mul(self, x, y):
        if self.characteristic == 0:
            return x * y
        return x * y % self.characteristic


QQ = Field(0)


def field_of(char: "int | Field") -> Field:
    return char if isinstance(char, Field) else Field(int(char))

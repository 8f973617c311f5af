"""Exact coefficient fields: prime fields F_p and the rationals Q.

Scalars are plain Python values: integers in [0, p) for F_p, gmpy2.mpq for
Q. Field objects are immutable descriptors providing normalization, parsing,
printing and the handful of arithmetic closures the linear algebra kernels
bind into local variables. No floating point is used anywhere.
"""

from __future__ import annotations

from fractions import Fraction

from gmpy2 import mpq
from sympy import isprime

from .errors import InputError

MAX_PRIME = 2**31


class PrimeField:
    """F_p for a prime p < 2**31. Scalars are ints reduced into [0, p)."""

    __slots__ = ("p",)

    def __init__(self, p: int):
        if not isinstance(p, int) or not 2 <= p < MAX_PRIME or not isprime(p):
            raise InputError(f"field characteristic must be a prime below 2**31, got {p!r}")
        object.__setattr__(self, "p", p)

    char = property(lambda self: self.p)
    zero = 0
    one = 1

    def __setattr__(self, *a):
        raise AttributeError("fields are immutable")

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("F", self.p))

    def __repr__(self):
        return f"F{self.p}"

    def normalize(self, x):
        """Coerce ints, strings like '7' or '3/2', Fractions and mpq into F_p."""
        if isinstance(x, int):
            return x % self.p
        if isinstance(x, str):
            x = Fraction(x)
        if isinstance(x, (Fraction, type(mpq(0)))):
            num, den = int(x.numerator), int(x.denominator)
            return (num * self.inv(den % self.p)) % self.p
        raise InputError(f"cannot coerce {x!r} into F_{self.p}")

    def inv(self, x: int) -> int:
        x %= self.p
        if x == 0:
            raise ZeroDivisionError(f"inverse of 0 in F_{self.p}")
        return pow(x, self.p - 2, self.p)

    def neg(self, x: int) -> int:
        return (-x) % self.p

    def add(self, x, y):
        return (x + y) % self.p

    def sub(self, x, y):
        return (x - y) % self.p

    def mul(self, x, y):
        return (x * y) % self.p

    def to_str(self, x) -> str:
        return str(x % self.p)

    def to_json(self):
        return {"p": self.p}


class RationalField:
    """The rationals, with gmpy2.mpq scalars."""

    __slots__ = ()

    char = 0
    zero = mpq(0)
    one = mpq(1)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "Q"

    def normalize(self, x):
        if isinstance(x, (int, Fraction)) or type(x) is type(mpq(0)):
            return mpq(x)
        if isinstance(x, str):
            try:
                return mpq(x)
            except ValueError:
                raise InputError(f"cannot parse rational scalar {x!r}")
        raise InputError(f"cannot coerce {x!r} into Q")

    def inv(self, x):
        if x == 0:
            raise ZeroDivisionError("inverse of 0 in Q")
        return 1 / mpq(x)

    def neg(self, x):
        return -x

    def add(self, x, y):
        return x + y

    def sub(self, x, y):
        return x - y

    def mul(self, x, y):
        return x * y

    def to_str(self, x) -> str:
        return str(x)

    def to_json(self):
        return "Q"


QQ = RationalField()

#: the default working field for everything that does not specify one
DEFAULT_PRIME = 32003


def GF(p: int) -> PrimeField:
    return PrimeField(p)


def default_field() -> PrimeField:
    return PrimeField(DEFAULT_PRIME)


def field_from_json(spec):
    """Decode the JSON form of a field: "Q" or {"p": prime}."""
    if spec == "Q":
        return QQ
    if isinstance(spec, dict) and set(spec) == {"p"}:
        return PrimeField(spec["p"])
    raise InputError(f'field must be "Q" or {{"p": prime}}, got {spec!r}')


def field_from_token(token: str):
    """Decode a CLI field token: 'Q', 'F101' or a bare prime like '101'."""
    token = token.strip()
    if token in ("Q", "q"):
        return QQ
    body = token[1:] if token[:1] in ("F", "f") else token
    if body.isdigit():
        return PrimeField(int(body))
    raise InputError(f"unrecognized field token {token!r}")

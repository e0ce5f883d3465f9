"""Exact scalar fields: the rationals, the Gaussian rationals and prime fields.

Rationals are plain :class:`fractions.Fraction` values.  Gaussian rationals
and prime-field residues get small immutable classes of their own.  A
:class:`Field` object ties a family of scalars together: it converts inputs,
parses and formats the string grammar used by the file formats, and tells
the linear algebra which family it is working in.

    >>> F5 = GF(5)
    >>> F5(3) * F5(2)
    Residue(1, 5)
    >>> QI.parse("1/2-3 i")
    GaussianRational(Fraction(1, 2), Fraction(-3, 1))
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from typing import Iterator, Union

from .errors import FieldMismatchError, NotInvertibleError, ParseError

__all__ = [
    "Field",
    "GaussianRational",
    "Residue",
    "Q",
    "QI",
    "GF",
    "I",
    "field_of",
    "is_prime",
]


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _rational(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int) and not isinstance(x, bool):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot convert {x!r} to an exact rational")


class GaussianRational:
    """An element ``re + im*i`` of Q(i) with both parts reduced fractions."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", _rational(re))
        object.__setattr__(self, "im", _rational(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    def __reduce__(self):
        return (GaussianRational, (self.re, self.im))

    @staticmethod
    def _coerce(other):
        if isinstance(other, GaussianRational):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return GaussianRational(other, 0)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(
            self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re
        )

    __rmul__ = __mul__

    def norm(self) -> Fraction:
        """The squared modulus ``re**2 + im**2``."""
        return self.re * self.re + self.im * self.im

    def conjugate(self) -> GaussianRational:
        return GaussianRational(self.re, -self.im)

    def inverse(self) -> GaussianRational:
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(i)")
        return GaussianRational(self.re / n, -self.im / n)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        base = self if k >= 0 else self.inverse()
        out = GaussianRational(1)
        for _ in range(abs(k)):
            out = out * base
        return out

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __repr__(self):
        return f"GaussianRational({self.re!r}, {self.im!r})"

    def __str__(self):
        return QI.format(self)


I = GaussianRational(0, 1)


@total_ordering
class Residue:
    """A residue class modulo a prime, stored as its representative in [0, p)."""

    __slots__ = ("value", "p")

    def __init__(self, value: int, p: int):
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "value", value % p)

    def __setattr__(self, name, value):
        raise AttributeError("Residue is immutable")

    def __reduce__(self):
        return (Residue, (self.value, self.p))

    def _coerce(self, other):
        if isinstance(other, Residue):
            if other.p != self.p:
                raise FieldMismatchError(f"residues mod {self.p} and mod {other.p}")
            return other
        if isinstance(other, int) and not isinstance(other, bool):
            return Residue(other, self.p)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Residue(self.value + o.value, self.p)

    __radd__ = __add__

    def __neg__(self):
        return Residue(-self.value, self.p)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Residue(self.value - o.value, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Residue(o.value - self.value, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Residue(self.value * o.value, self.p)

    __rmul__ = __mul__

    def inverse(self) -> Residue:
        try:
            return Residue(pow(self.value, -1, self.p), self.p)
        except ValueError:
            raise NotInvertibleError(f"{self.value} is not invertible mod {self.p}") from None

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        return Residue(pow(self.value, k, self.p), self.p)

    def __eq__(self, other):
        if isinstance(other, Residue):
            return self.p == other.p and self.value == other.value
        if isinstance(other, int) and not isinstance(other, bool):
            return (other - self.value) % self.p == 0
        return NotImplemented

    def __lt__(self, other):
        # ordering by representative; used only for deterministic sorting
        if isinstance(other, Residue):
            return (self.p, self.value) < (other.p, other.value)
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.p))

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"Residue({self.value}, {self.p})"

    def __str__(self):
        return f"{self.value} mod {self.p}"


Scalar = Union[Fraction, GaussianRational, Residue]

_RAT = r"-?\d+(?:/\d+)?"
_RAT_RE = re.compile(rf"^\s*({_RAT})\s*$")
_GAUSS_RE = re.compile(
    rf"^\s*(?P<re>{_RAT})\s*(?P<sign>[+-])\s*(?P<im>(?:\d+(?:/\d+)?)?)\s*\*?\s*i\s*$"
)
_IMAG_RE = re.compile(r"^\s*(?P<sign>[+-]?)\s*(?P<im>(?:\d+(?:/\d+)?)?)\s*\*?\s*i\s*$")
_MOD_RE = re.compile(r"^\s*(-?\d+)\s*(?:mod\s*(\d+))?\s*$")


@dataclass(frozen=True)
class Field:
    """One of the three supported scalar families.

    ``kind`` is ``"Q"``, ``"Qi"`` or ``"Fp"``; ``p`` is the modulus for prime fields.
    """

    kind: str
    p: int | None = None

    def __post_init__(self):
        if self.kind not in ("Q", "Qi", "Fp"):
            raise ValueError(f"unknown field kind {self.kind!r}")
        if self.kind == "Fp":
            if self.p is None or not is_prime(self.p):
                raise ValueError(f"prime field needs a prime modulus, got {self.p!r}")
        elif self.p is not None:
            raise ValueError("only prime fields carry a modulus")

    @property
    def is_finite(self) -> bool:
        return self.kind == "Fp"

    @property
    def advisory(self) -> bool:
        """True for F_2, which lies outside the characteristic-not-2 setting."""
        return self.kind == "Fp" and self.p == 2

    @property
    def order(self) -> int | None:
        return self.p

    @property
    def zero(self) -> Scalar:
        return self(0)

    @property
    def one(self) -> Scalar:
        return self(1)

    def __call__(self, x) -> Scalar:
        """Convert ``x`` into this field.

        Integers and fractions are accepted everywhere; Gaussian rationals only
        in Q(i).  Mapping into a prime field reduces numerators and inverts
        denominators; the imaginary unit has no image unless p = 1 mod 4 and is
        rejected otherwise (see :meth:`reduce`).
        """
        if isinstance(x, bool):
            raise TypeError("booleans are not scalars")
        if isinstance(x, str):
            return self.parse(x)
        if self.kind == "Q":
            if isinstance(x, GaussianRational):
                if x.im != 0:
                    raise FieldMismatchError(f"{x} is not rational")
                return x.re
            if isinstance(x, Residue):
                raise FieldMismatchError(f"{x} is a residue, not a rational")
            return _rational(x)
        if self.kind == "Qi":
            if isinstance(x, GaussianRational):
                return x
            if isinstance(x, Residue):
                raise FieldMismatchError(f"{x} is a residue, not a Gaussian rational")
            return GaussianRational(x, 0)
        # prime field
        if isinstance(x, Residue):
            if x.p != self.p:
                raise FieldMismatchError(f"{x} does not live in F_{self.p}")
            return x
        return self.reduce(x)

    def reduce(self, x, sqrt_minus_one: int | None = None) -> Residue:
        """Reduce an exact rational or Gaussian rational modulo p.

        Raises :class:`NotInvertibleError` when a denominator vanishes mod p and
        :class:`FieldMismatchError` when ``x`` has an imaginary part but F_p has no
        square root of -1.
        """
        if self.kind != "Fp":
            raise TypeError("reduce() is only defined for prime fields")
        p = self.p
        if isinstance(x, Residue):
            return self(x)
        if isinstance(x, GaussianRational):
            re_part = self.reduce(x.re)
            if x.im == 0:
                return re_part
            root = sqrt_minus_one if sqrt_minus_one is not None else self.sqrt_minus_one()
            if root is None:
                raise FieldMismatchError(f"i has no image in F_{p}")
            return re_part + self.reduce(x.im) * Residue(root, p)
        q = _rational(x)
        if q.denominator % p == 0:
            raise NotInvertibleError(f"denominator of {q} vanishes mod {p}")
        return Residue(q.numerator * pow(q.denominator, -1, p), p)

    def sqrt_minus_one(self) -> int | None:
        """Smallest r in [0, p) with r*r = -1 mod p, or None."""
        if self.kind != "Fp":
            raise TypeError("only prime fields")
        for r in range(self.p):
            if (r * r + 1) % self.p == 0:
                return r
        return None

    def elements(self) -> Iterator[Residue]:
        if not self.is_finite:
            raise TypeError(f"{self} is infinite")
        return (Residue(v, self.p) for v in range(self.p))

    def contains(self, x) -> bool:
        if self.kind == "Q":
            return isinstance(x, Fraction)
        if self.kind == "Qi":
            return isinstance(x, GaussianRational)
        return isinstance(x, Residue) and x.p == self.p

    def parse(self, text: str) -> Scalar:
        """Parse the scalar grammar of the algebra file format."""
        s = text.strip()
        if self.kind == "Q":
            if not _RAT_RE.match(s):
                raise ParseError(f"bad rational {text!r}")
            return Fraction(s)
        if self.kind == "Qi":
            if _RAT_RE.match(s):
                return GaussianRational(Fraction(s), 0)
            m = _GAUSS_RE.match(s) or _IMAG_RE.match(s)
            if not m:
                raise ParseError(f"bad Gaussian rational {text!r}")
            groups = m.groupdict()
            re_part = Fraction(groups["re"]) if groups.get("re") else Fraction(0)
            im_part = Fraction(groups["im"]) if groups["im"] else Fraction(1)
            if groups["sign"] == "-":
                im_part = -im_part
            return GaussianRational(re_part, im_part)
        m = _MOD_RE.match(s)
        if not m:
            raise ParseError(f"bad residue {text!r}")
        if m.group(2) is not None and int(m.group(2)) != self.p:
            raise FieldMismatchError(f"residue {text!r} is not mod {self.p}")
        return Residue(int(m.group(1)), self.p)

    def format(self, x, with_modulus: bool = False) -> str:
        x = self(x)
        if self.kind == "Q":
            return str(x)
        if self.kind == "Qi":
            sign = "-" if x.im < 0 else "+"
            return f"{x.re}{sign}{abs(x.im)} i"
        return f"{x.value} mod {self.p}" if with_modulus else str(x.value)

    def to_json(self):
        return {"Fp": self.p} if self.kind == "Fp" else self.kind

    @classmethod
    def from_json(cls, obj) -> Field:
        if obj == "Q":
            return Q
        if obj == "Qi":
            return QI
        if isinstance(obj, dict) and set(obj) == {"Fp"} and isinstance(obj["Fp"], int):
            try:
                return GF(obj["Fp"])
            except ValueError as exc:
                raise ParseError(str(exc)) from None
        raise ParseError(f"unknown field {obj!r}")

    def __str__(self):
        return f"F_{self.p}" if self.kind == "Fp" else {"Q": "Q", "Qi": "Q(i)"}[self.kind]


Q = Field("Q")
QI = Field("Qi")


def GF(p: int) -> Field:
    return Field("Fp", p)


def field_of(x) -> Field:
    if isinstance(x, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(x, Fraction):
        return Q
    if isinstance(x, GaussianRational):
        return QI
    if isinstance(x, Residue):
        return GF(x.p)
    raise TypeError(f"{x!r} is not an exact scalar")

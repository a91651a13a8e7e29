"""Exact arithmetic for Laurent polynomials and reduced fractions in q and t.

Coefficients are arbitrary-precision rationals (gmpy2.mpq under the hood;
ints and fractions.Fraction are accepted everywhere).  Values are immutable
and hashable; every operation returns a new canonical value, so they can be
shared freely between workers.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterator, Mapping, Tuple, Union

import gmpy2
from gmpy2 import mpq
from sympy import QQ
from sympy.polys.rings import ring

__all__ = [
    "QTError",
    "DivisionByZeroError",
    "PoleError",
    "ParseError",
    "QTLaurent",
    "QTFraction",
    "arith",
]

Exponent = Tuple[int, int]
Rational = Union[int, Fraction]
_MPQ = type(mpq())
_SCALARS = (int, Fraction, _MPQ)

_RING, _RQ, _RT = ring("q,t", QQ)


class QTError(Exception):
    """Base error for the q,t-arithmetic layer."""


class DivisionByZeroError(QTError):
    """Division by the zero fraction."""


class PoleError(QTError):
    """Specialization at a point where the reduced denominator vanishes."""


class ParseError(QTError):
    """Malformed canonical rendering."""


def _order_key(exp: Exponent) -> Tuple[int, int]:
    # graded lexicographic on (a+b, a)
    return (exp[0] + exp[1], exp[0])


class QTLaurent:
    """Sparse Laurent polynomial in q, t with rational coefficients.

    Invariants: no zero coefficients are stored; iteration follows the
    canonical graded-lex order on (a+b, a), ascending.
    """

    __slots__ = ("_terms", "_hash", "_rf")

    def __init__(self, terms: Mapping[Exponent, Rational] = ()):
        cleaned = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for (a, b), c in items:
            c = mpq(c)
            if c:
                key = (int(a), int(b))
                c0 = cleaned.get(key)
                c = c if c0 is None else c0 + c
                if c:
                    cleaned[key] = c
                elif key in cleaned:
                    del cleaned[key]
        self._terms = cleaned
        self._hash = None
        self._rf = None

    @classmethod
    def _raw(cls, terms: dict) -> "QTLaurent":
        out = cls.__new__(cls)
        out._terms = terms
        out._hash = None
        out._rf = None
        return out

    # -- constructors ----------------------------------------------------

    @classmethod
    def zero(cls) -> "QTLaurent":
        return cls._raw({})

    @classmethod
    def one(cls) -> "QTLaurent":
        return cls._raw({(0, 0): mpq(1)})

    @classmethod
    def monomial(cls, a: int, b: int, coeff: Rational = 1) -> "QTLaurent":
        return cls({(a, b): coeff})

    @classmethod
    def const(cls, c: Rational) -> "QTLaurent":
        return cls({(0, 0): c})

    @classmethod
    def var(cls, name: str) -> "QTLaurent":
        if name == "q":
            return cls._raw({(1, 0): mpq(1)})
        if name == "t":
            return cls._raw({(0, 1): mpq(1)})
        raise ValueError(f"unknown variable {name!r}")

    # -- basic queries ----------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    @property
    def is_one(self) -> bool:
        return len(self._terms) == 1 and self._terms.get((0, 0)) == 1

    def items(self) -> Iterator[Tuple[Exponent, mpq]]:
        """Terms in canonical (graded-lex ascending) order."""
        for exp in sorted(self._terms, key=_order_key):
            yield exp, self._terms[exp]

    def __len__(self) -> int:
        return len(self._terms)

    def coeff(self, a: int, b: int) -> mpq:
        return self._terms.get((a, b), mpq(0))

    def leading(self) -> Tuple[Exponent, mpq]:
        """Greatest term under the canonical order."""
        if not self._terms:
            raise QTError("zero polynomial has no leading term")
        exp = max(self._terms, key=_order_key)
        return exp, self._terms[exp]

    def min_exponents(self) -> Exponent:
        """Componentwise minimum of exponents (monomial content)."""
        if not self._terms:
            raise QTError("zero polynomial has no monomial content")
        return (
            min(a for a, _ in self._terms),
            min(b for _, b in self._terms),
        )

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other: "QTLaurent") -> "QTLaurent":
        if not isinstance(other, QTLaurent):
            return NotImplemented
        terms = dict(self._terms)
        for exp, c in other._terms.items():
            s = terms.get(exp)
            s = c if s is None else s + c
            if s:
                terms[exp] = s
            else:
                terms.pop(exp, None)
        return QTLaurent._raw(terms)

    def __neg__(self) -> "QTLaurent":
        return QTLaurent._raw({exp: -c for exp, c in self._terms.items()})

    def __sub__(self, other: "QTLaurent") -> "QTLaurent":
        return self + (-other)

    def __mul__(self, other: Union["QTLaurent", Rational]) -> "QTLaurent":
        if isinstance(other, _SCALARS):
            return self.scale(other)
        if not isinstance(other, QTLaurent):
            return NotImplemented
        if len(self._terms) * len(other._terms) > 100:
            # large products go through the fast sparse ring
            sa, sb, e1 = self._ring_form()
            oa, ob, e2 = other._ring_form()
            return _from_ring(e1 * e2).shift(sa + oa, sb + ob)
        terms: dict = {}
        for (a1, b1), c1 in self._terms.items():
            for (a2, b2), c2 in other._terms.items():
                exp = (a1 + a2, b1 + b2)
                s = terms.get(exp)
                p = c1 * c2
                s = p if s is None else s + p
                if s:
                    terms[exp] = s
                else:
                    terms.pop(exp, None)
        return QTLaurent._raw(terms)

    __rmul__ = __mul__

    def scale(self, c: Rational) -> "QTLaurent":
        c = mpq(c)
        if not c:
            return QTLaurent.zero()
        return QTLaurent._raw({exp: v * c for exp, v in self._terms.items()})

    def shift(self, da: int, db: int) -> "QTLaurent":
        """Multiply by the monomial q^da t^db."""
        if da == 0 and db == 0:
            return self
        return QTLaurent._raw(
            {(a + da, b + db): c for (a, b), c in self._terms.items()}
        )

    def __pow__(self, k: int) -> "QTLaurent":
        if k < 0:
            raise QTError("negative power of a Laurent polynomial; use QTFraction")
        result = QTLaurent.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def _ring_form(self):
        """(qshift, tshift, sympy ring element) with nonnegative exponents."""
        if self._rf is None:
            if not self._terms:
                self._rf = (0, 0, _RING.zero)
            else:
                amin, bmin = self.min_exponents()
                sa, sb = min(0, amin), min(0, bmin)
                elem = _RING.from_dict(
                    {(a - sa, b - sb): c for (a, b), c in self._terms.items()}
                )
                self._rf = (sa, sb, elem)
        return self._rf

    def exquo(self, other: "QTLaurent") -> "QTLaurent":
        """Exact division by a divisor (monomial shifts allowed)."""
        if other.is_zero:
            raise DivisionByZeroError("division by the zero polynomial")
        if self.is_zero:
            return QTLaurent.zero()
        sa, sb, e1 = self._ring_form()
        oa, ob, e2 = other._ring_form()
        quo, rem = divmod(e1, e2)
        if rem:
            raise QTError("inexact polynomial division")
        return _from_ring(quo).shift(sa - oa, sb - ob)

    def substitute_powers(self, k: int) -> "QTLaurent":
        """q -> q^k, t -> t^k."""
        if k < 1:
            raise QTError("power substitution index must be >= 1")
        return QTLaurent._raw(
            {(a * k, b * k): c for (a, b), c in self._terms.items()}
        )

    def swap_qt(self) -> "QTLaurent":
        return QTLaurent._raw({(b, a): c for (a, b), c in self._terms.items()})

    def specialize(self, q0: Rational, t0: Rational) -> Fraction:
        q0, t0 = mpq(q0), mpq(t0)
        total = mpq(0)
        for (a, b), c in self._terms.items():
            if (a < 0 and q0 == 0) or (b < 0 and t0 == 0):
                raise PoleError("negative exponent at a zero coordinate")
            total += c * q0**a * t0**b
        return Fraction(total.numerator, total.denominator)

    # -- equality / hashing ------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QTLaurent):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- rendering ----------------------------------------------------------

    @staticmethod
    def _render_exp(name: str, e: int) -> str:
        if e == 1:
            return name
        if e < 0:
            return f"{name}^(-{-e})"
        return f"{name}^{e}"

    @staticmethod
    def _render_term(exp: Exponent, c) -> str:
        a, b = exp
        parts = []
        if a != 0:
            parts.append(QTLaurent._render_exp("q", a))
        if b != 0:
            parts.append(QTLaurent._render_exp("t", b))
        if not parts:
            return str(c)
        mono = "*".join(parts)
        if c == 1:
            return mono
        if c == -1:
            return "-" + mono
        return f"{c}*{mono}"

    def render(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for i, (exp, c) in enumerate(self.items()):
            if i == 0:
                pieces.append(self._render_term(exp, c))
            elif c < 0:
                pieces.append(" - " + self._render_term(exp, -c))
            else:
                pieces.append(" + " + self._render_term(exp, c))
        return "".join(pieces)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"QTLaurent({self.render()!r})"

    _TERM_RE = re.compile(
        r"^(?:(?P<coef>-?\d+(?:/\d+)?)(?:\*(?P<mono1>.*))?|(?P<mono2>[qt].*))$"
    )
    _FACTOR_RE = re.compile(r"^(?P<var>[qt])(?:\^(?:(?P<pos>\d+)|\(-(?P<neg>\d+)\)))?$")

    @classmethod
    def parse(cls, text: str) -> "QTLaurent":
        """Inverse of :meth:`render` on canonical strings."""
        text = text.strip()
        if text == "0":
            return cls.zero()
        # split on top-level " + " / " - "
        chunks: list[tuple[int, str]] = []
        sign, rest = 1, text
        if rest.startswith("-"):
            sign, rest = -1, rest[1:]
        while True:
            plus = rest.find(" + ")
            minus = rest.find(" - ")
            cut = min(x for x in (plus, minus) if x >= 0) if max(plus, minus) >= 0 else -1
            if cut < 0:
                chunks.append((sign, rest))
                break
            chunks.append((sign, rest[:cut]))
            sign = 1 if rest[cut : cut + 3] == " + " else -1
            rest = rest[cut + 3 :]
        terms: dict = {}
        for sgn, chunk in chunks:
            m = cls._TERM_RE.match(chunk.strip())
            if not m:
                raise ParseError(f"bad term {chunk!r}")
            coef = mpq(m.group("coef")) if m.group("coef") else mpq(1)
            mono = m.group("mono1") or m.group("mono2") or ""
            a = b = 0
            if mono:
                for factor in mono.split("*"):
                    fm = cls._FACTOR_RE.match(factor)
                    if not fm:
                        raise ParseError(f"bad monomial factor {factor!r}")
                    if fm.group("pos") is not None:
                        e = int(fm.group("pos"))
                    elif fm.group("neg") is not None:
                        e = -int(fm.group("neg"))
                    else:
                        e = 1
                    if fm.group("var") == "q":
                        a += e
                    else:
                        b += e
            key = (a, b)
            terms[key] = terms.get(key, mpq(0)) + sgn * coef
        return cls(terms)


# -- sympy bridge (gcd / exact division) --------------------------------------


def _from_ring(elem) -> QTLaurent:
    return QTLaurent._raw(
        {
            (int(a), int(b)): mpq(c.numerator, c.denominator)
            for (a, b), c in elem.terms()
        }
    )


def _poly_gcd(f: QTLaurent, g: QTLaurent) -> QTLaurent:
    """GCD of the polynomial parts (monomial content ignored)."""
    _, _, e1 = f._ring_form()
    _, _, e2 = g._ring_form()
    return _from_ring(e1.gcd(e2))


class QTFraction:
    """Reduced quotient of two QTLaurent values; the coefficient field.

    Canonical form: the denominator is a true polynomial (its monomial
    content is folded into the numerator), with integer coefficients of
    content 1 and positive leading coefficient.  Equal fractions have
    identical components.
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num, den=None, _canonical: bool = False):
        if isinstance(num, QTFraction):
            if den is not None:
                raise QTError("cannot re-wrap a fraction with a denominator")
            self.num, self.den = num.num, num.den
            self._hash = None
            return
        if isinstance(num, _SCALARS):
            num = QTLaurent.const(num)
        if den is None:
            den = QTLaurent.one()
        elif isinstance(den, _SCALARS):
            den = QTLaurent.const(den)
        if den.is_zero:
            raise DivisionByZeroError("zero denominator")
        self._hash = None
        if _canonical:
            self.num, self.den = num, den
            return
        self.num, self.den = self._canonicalize(num, den)

    @staticmethod
    def _canonicalize(num: QTLaurent, den: QTLaurent) -> Tuple[QTLaurent, QTLaurent]:
        if num.is_zero:
            return QTLaurent.zero(), QTLaurent.one()
        # fold monomial content of both sides into the numerator
        na, nb = num.min_exponents()
        da, db = den.min_exponents()
        nump = num.shift(-na, -nb)
        denp = den.shift(-da, -db)
        if not denp.is_one and not nump.is_one:
            g = _poly_gcd(nump, denp)
            if not g.is_one:
                nump = nump.exquo(g)
                denp = denp.exquo(g)
        # scale so the denominator is integer-primitive with positive lead
        coeffs = [c for _, c in denp.items()]
        den_lcm = coeffs[0].denominator
        num_gcd = coeffs[0].numerator
        for c in coeffs[1:]:
            den_lcm = gmpy2.lcm(den_lcm, c.denominator)
            num_gcd = gmpy2.gcd(num_gcd, c.numerator)
        scale = mpq(den_lcm, num_gcd)
        if denp.leading()[1] * scale < 0:
            scale = -scale
        if scale != 1:
            denp = denp.scale(scale)
            nump = nump.scale(scale)
        return nump.shift(na - da, nb - db), denp

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> "QTFraction":
        return cls(QTLaurent.zero(), QTLaurent.one(), _canonical=True)

    @classmethod
    def one(cls) -> "QTFraction":
        return cls(QTLaurent.one(), QTLaurent.one(), _canonical=True)

    @classmethod
    def from_laurent(cls, p: QTLaurent) -> "QTFraction":
        return cls(p)

    @classmethod
    def var(cls, name: str) -> "QTFraction":
        return cls(QTLaurent.var(name), QTLaurent.one(), _canonical=True)

    # -- queries ------------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    def __bool__(self) -> bool:
        return not self.num.is_zero

    @property
    def is_one(self) -> bool:
        return self.num.is_one and self.den.is_one

    def is_laurent(self) -> bool:
        """True when the reduced denominator is 1."""
        return self.den.is_one

    def as_laurent(self) -> QTLaurent:
        if not self.den.is_one:
            raise QTError(f"not a Laurent polynomial: {self.render()}")
        return self.num

    # -- arithmetic -----------------------------------------------------------

    @staticmethod
    def _coerce(value) -> "QTFraction":
        if isinstance(value, QTFraction):
            return value
        if isinstance(value, (QTLaurent,) + _SCALARS):
            return QTFraction(value)
        raise TypeError(f"cannot coerce {value!r} to QTFraction")

    def __add__(self, other) -> "QTFraction":
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        if self.den == other.den:
            return QTFraction(self.num + other.num, self.den)
        return QTFraction(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    __radd__ = __add__

    def __neg__(self) -> "QTFraction":
        return QTFraction(-self.num, self.den, _canonical=True)

    def __sub__(self, other) -> "QTFraction":
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "QTFraction":
        return self._coerce(other) - self

    def __mul__(self, other) -> "QTFraction":
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        if self.is_zero or other.is_zero:
            return QTFraction.zero()
        if self.den.is_one and other.den.is_one:
            return QTFraction(self.num * other.num, QTLaurent.one(), _canonical=True)
        return QTFraction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "QTFraction":
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        if other.is_zero:
            raise DivisionByZeroError("division by zero fraction")
        return QTFraction(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other) -> "QTFraction":
        return self._coerce(other) / self

    def __pow__(self, k: int) -> "QTFraction":
        if k < 0:
            if self.is_zero:
                raise DivisionByZeroError("zero to a negative power")
            return (QTFraction.one() / self) ** (-k)
        return QTFraction(self.num**k, self.den**k)

    # -- structural operations -------------------------------------------------

    def substitute_powers(self, k: int) -> "QTFraction":
        return QTFraction(self.num.substitute_powers(k), self.den.substitute_powers(k))

    def swap_qt(self) -> "QTFraction":
        return QTFraction(self.num.swap_qt(), self.den.swap_qt())

    def specialize(self, q0: Rational, t0: Rational) -> Fraction:
        d = self.den.specialize(q0, t0)
        if d == 0:
            raise PoleError(f"denominator vanishes at ({q0}, {t0})")
        return self.num.specialize(q0, t0) / d

    # -- equality / hashing -------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (QTLaurent,) + _SCALARS):
            other = QTFraction(other)
        if not isinstance(other, QTFraction):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    # -- rendering --------------------------------------------------------------

    def render(self) -> str:
        if self.den.is_one:
            return self.num.render()
        return f"({self.num.render()})/({self.den.render()})"

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"QTFraction({self.render()!r})"

    @classmethod
    def parse(cls, text: str) -> "QTFraction":
        text = text.strip()
        cut = text.find(")/(")
        if text.startswith("(") and cut >= 0 and text.endswith(")"):
            num = QTLaurent.parse(text[1:cut])
            den = QTLaurent.parse(text[cut + 3 : -1])
            return cls(num, den)
        return cls(QTLaurent.parse(text))


def arith(op: str, lhs: QTFraction, rhs: QTFraction = None) -> QTFraction:
    """Named field arithmetic: add, sub, mul, div, neg."""
    if op == "neg":
        return -lhs
    if rhs is None:
        raise QTError(f"binary operation {op!r} needs two operands")
    if op == "add":
        return lhs + rhs
    if op == "sub":
        return lhs - rhs
    if op == "mul":
        return lhs * rhs
    if op == "div":
        return lhs / rhs
    raise QTError(f"unknown operation {op!r}")

"""Homogeneous symmetric functions over the field of q,t-fractions.

Five classical bases (monomial, elementary, homogeneous, power-sum, Schur)
plus a tag for the Macdonald basis, transitions between them, products, the
Hall pairing, and plethystic substitution by scalar q,t-alphabets.

Transition tables are built once per degree by iterated monomial-basis
multiplication and Jacobi-Trudi determinants, then cached; everything is
exact over arbitrary-precision rationals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations as _perms
from typing import Dict, Iterable, Mapping, Tuple

from sympy.utilities.iterables import multiset_permutations

from .partitions import Partition, partitions_of, z_lambda
from .qt_coeff import QTFraction, QTLaurent

__all__ = [
    "CLASSICAL_BASES",
    "SymFun",
    "PlethAlphabet",
    "ALPHABET_Z",
    "ALPHABET_Z_OVER_1MQ",
    "ALPHABET_Z_OVER_1MT",
    "ALPHABET_MZ",
    "ALPHABET_ONE",
    "convert",
    "multiply",
    "hall_inner",
    "plethysm",
    "eval_at_one",
    "transformed_schur",
]

CLASSICAL_BASES = ("m", "e", "h", "p", "s")
MACDONALD_BASIS = "H"

MDict = Dict[Partition, Fraction]


class BasisError(ValueError):
    """Unknown basis tag or unsupported basis for an operation."""


# ---------------------------------------------------------------------------
# transition tables (rational, per degree, memoized)
# ---------------------------------------------------------------------------


def _m_vectors(lam: Partition, nvars: int) -> Tuple[Tuple[int, ...], ...]:
    padded = list(lam.parts) + [0] * (nvars - len(lam.parts))
    return tuple(tuple(v) for v in multiset_permutations(padded))


def _m_product(d1: Mapping[Partition, object], d2: Mapping[Partition, object], n1: int, n2: int):
    """Product of two monomial-basis expansions (coefficients of any ring)."""
    nvars = n1 + n2
    acc: dict = {}
    for lam, c1 in d1.items():
        vecs1 = _m_vectors(lam, nvars)
        for nu, c2 in d2.items():
            c = c1 * c2
            for v2 in _m_vectors(nu, nvars):
                for v1 in vecs1:
                    s = tuple(a + b for a, b in zip(v1, v2))
                    if any(s[i] < s[i + 1] for i in range(nvars - 1)):
                        continue
                    key = Partition(tuple(p for p in s if p))
                    if key in acc:
                        acc[key] = acc[key] + c
                    else:
                        acc[key] = c
    return {k: v for k, v in acc.items() if v}


@lru_cache(maxsize=None)
def _gen_to_m(kind: str, k: int) -> Tuple[Tuple[Partition, Fraction], ...]:
    """e_k / h_k / p_k in the monomial basis."""
    if k == 0:
        return ((Partition(()), Fraction(1)),)
    if kind == "e":
        return ((Partition((1,) * k), Fraction(1)),)
    if kind == "p":
        return ((Partition((k,)), Fraction(1)),)
    if kind == "h":
        return tuple((lam, Fraction(1)) for lam in partitions_of(k))
    raise BasisError(f"unknown generator kind {kind!r}")


@lru_cache(maxsize=None)
def _multiplicative_to_m(kind: str, lam: Partition) -> Tuple[Tuple[Partition, Fraction], ...]:
    """x_lam in the monomial basis for a multiplicative family x in {e,h,p}."""
    expansion: MDict = {Partition(()): Fraction(1)}
    deg = 0
    for part in lam.parts:
        expansion = _m_product(expansion, dict(_gen_to_m(kind, part)), deg, part)
        deg += part
    return tuple(sorted(expansion.items(), key=lambda kv: kv[0].parts))


@lru_cache(maxsize=None)
def _schur_to_h(lam: Partition) -> Tuple[Tuple[Partition, Fraction], ...]:
    """Jacobi-Trudi: s_lam = det(h_{lam_i - i + j})."""
    ell = len(lam)
    if ell == 0:
        return ((Partition(()), Fraction(1)),)
    acc: MDict = {}
    for sigma in _perms(range(ell)):
        degrees = []
        ok = True
        for i in range(ell):
            d = lam.parts[i] - i + sigma[i]
            if d < 0:
                ok = False
                break
            if d > 0:
                degrees.append(d)
        if not ok:
            continue
        sign = 1
        seen = list(sigma)
        # parity via inversion count
        inv = sum(
            1 for i in range(ell) for j in range(i + 1, ell) if seen[i] > seen[j]
        )
        sign = -1 if inv % 2 else 1
        key = Partition(tuple(sorted(degrees, reverse=True)))
        acc[key] = acc.get(key, Fraction(0)) + sign
    return tuple((k, v) for k, v in acc.items() if v)


@lru_cache(maxsize=None)
def _to_m_table(degree: int, basis: str) -> Dict[Partition, MDict]:
    """x_lam in the monomial basis, for every lam of the degree."""
    table: Dict[Partition, MDict] = {}
    for lam in partitions_of(degree):
        if basis == "m":
            table[lam] = {lam: Fraction(1)}
        elif basis in ("e", "h", "p"):
            table[lam] = dict(_multiplicative_to_m(basis, lam))
        elif basis == "s":
            acc: MDict = {}
            for hlam, c in _schur_to_h(lam):
                for nu, d in _multiplicative_to_m("h", hlam):
                    acc[nu] = acc.get(nu, Fraction(0)) + c * d
            table[lam] = {k: v for k, v in acc.items() if v}
        else:
            raise BasisError(f"not a classical basis: {basis!r}")
    return table


@lru_cache(maxsize=None)
def _from_m_table(degree: int, basis: str) -> Dict[Partition, MDict]:
    """m_nu expanded in basis x: inverse of the transition matrix."""
    parts = partitions_of(degree)
    index = {lam: i for i, lam in enumerate(parts)}
    n = len(parts)
    forward = _to_m_table(degree, basis)
    # augmented [M | I] over Fraction, M[i][j] = coeff of m_{parts[i]} in x_{parts[j]}
    aug = [[Fraction(0)] * (2 * n) for _ in range(n)]
    for j, lam in enumerate(parts):
        for nu, c in forward[lam].items():
            aug[index[nu]][j] = c
    for i in range(n):
        aug[i][n + i] = Fraction(1)
    # Gauss-Jordan
    for col in range(n):
        pivot = next(i for i in range(col, n) if aug[i][col])
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for i in range(n):
            if i != col and aug[i][col]:
                f = aug[i][col]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[col])]
    # m_nu = sum_i inv[i][index(nu)] x_{parts[i]}: read off inverse columns
    table: Dict[Partition, MDict] = {}
    for j, nu in enumerate(parts):
        table[nu] = {parts[i]: aug[i][n + j] for i in range(n) if aug[i][n + j]}
    return table


# ---------------------------------------------------------------------------
# SymFun
# ---------------------------------------------------------------------------


class SymFun:
    """Homogeneous symmetric function: degree, basis tag, sparse coefficients."""

    __slots__ = ("degree", "basis", "coeffs")

    def __init__(self, degree: int, basis: str, coeffs: Mapping[Partition, object]):
        if basis not in CLASSICAL_BASES and basis != MACDONALD_BASIS:
            raise BasisError(f"unknown basis {basis!r}")
        self.degree = int(degree)
        self.basis = basis
        cleaned: Dict[Partition, QTFraction] = {}
        for lam, c in coeffs.items():
            if not isinstance(lam, Partition):
                lam = Partition(lam)
            if lam.size != self.degree:
                raise ValueError(f"key {lam} is not a partition of {self.degree}")
            c = QTFraction._coerce(c)
            if not c.is_zero:
                cleaned[lam] = c
        self.coeffs = cleaned

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls, degree: int, basis: str = "s") -> "SymFun":
        return cls(degree, basis, {})

    @classmethod
    def generator(cls, basis: str, n: int) -> "SymFun":
        """e_n, h_n, p_n, or s_(n) / m_(n)."""
        return cls(n, basis, {Partition((n,)): QTFraction.one()})

    @classmethod
    def scalar(cls, value) -> "SymFun":
        value = QTFraction._coerce(value)
        return cls(0, "m", {Partition(()): value} if not value.is_zero else {})

    def scalar_value(self) -> QTFraction:
        if self.degree != 0:
            raise ValueError("not a degree-0 function")
        return self.coeffs.get(Partition(()), QTFraction.zero())

    # -- structure -----------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def map_coeffs(self, fn) -> "SymFun":
        return SymFun(self.degree, self.basis, {k: fn(v) for k, v in self.coeffs.items()})

    def __add__(self, other: "SymFun") -> "SymFun":
        if not isinstance(other, SymFun):
            return NotImplemented
        if other.is_zero:
            return self
        if self.is_zero:
            return SymFun(other.degree, other.basis, other.coeffs)
        if self.degree != other.degree:
            raise ValueError("cannot add functions of different degrees")
        rhs = convert(other, self.basis) if other.basis != self.basis else other
        out = dict(self.coeffs)
        for lam, c in rhs.coeffs.items():
            out[lam] = out.get(lam, QTFraction.zero()) + c
        return SymFun(self.degree, self.basis, out)

    def __neg__(self) -> "SymFun":
        return self.map_coeffs(lambda c: -c)

    def __sub__(self, other: "SymFun") -> "SymFun":
        return self + (-other)

    def __mul__(self, other) -> "SymFun":
        if isinstance(other, SymFun):
            return multiply(self, other)
        return self.map_coeffs(lambda c: c * other)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SymFun):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return self.is_zero and other.is_zero
        if self.degree != other.degree:
            return False
        if self.basis == other.basis:
            if self.coeffs == other.coeffs:
                return True
        if self.basis == MACDONALD_BASIS or other.basis == MACDONALD_BASIS:
            return self.basis == other.basis and self.coeffs == other.coeffs
        return convert(self, "m").coeffs == convert(other, "m").coeffs

    def __hash__(self):
        raise TypeError("SymFun is unhashable (basis-aware equality)")

    # -- rendering -------------------------------------------------------------

    def render(self) -> str:
        if not self.coeffs:
            return "0"
        pieces = []
        for lam in partitions_of(self.degree):
            if lam not in self.coeffs:
                continue
            c = self.coeffs[lam]
            tag = f"{self.basis}[{lam}]"
            cstr = c.render()
            if cstr == "1":
                term, negative = tag, False
            elif cstr == "-1":
                term, negative = tag, True
            elif c.is_laurent() and c.num.is_monomial():
                (exp, coef) = c.num.leading()
                negative = coef < 0
                mono = QTLaurent.monomial(*exp, coeff=abs(coef))
                term = f"{mono.render()}*{tag}"
            else:
                term, negative = f"({cstr})*{tag}", False
            if not pieces:
                pieces.append(("-" if negative else "") + term)
            else:
                pieces.append((" - " if negative else " + ") + term)
        return "".join(pieces)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"SymFun({self.render()!r})"


# ---------------------------------------------------------------------------
# operations
# ---------------------------------------------------------------------------


def convert(f: SymFun, target: str) -> SymFun:
    """Re-express a classical-basis function in another classical basis."""
    if target not in CLASSICAL_BASES:
        raise BasisError(f"cannot convert into basis {target!r}")
    if f.basis == MACDONALD_BASIS:
        raise BasisError("Macdonald-basis functions convert via the macdonald module")
    if f.basis == target or f.degree == 0:
        return SymFun(f.degree, target, f.coeffs)
    # via the monomial basis
    if f.basis == "m":
        m_coeffs = f.coeffs
    else:
        table = _to_m_table(f.degree, f.basis)
        m_coeffs: Dict[Partition, QTFraction] = {}
        for lam, c in f.coeffs.items():
            for nu, r in table[lam].items():
                prev = m_coeffs.get(nu, QTFraction.zero())
                m_coeffs[nu] = prev + c * r
    if target == "m":
        return SymFun(f.degree, "m", m_coeffs)
    inv = _from_m_table(f.degree, target)
    out: Dict[Partition, QTFraction] = {}
    for nu, c in m_coeffs.items():
        if c.is_zero:
            continue
        for lam, r in inv[nu].items():
            prev = out.get(lam, QTFraction.zero())
            out[lam] = prev + c * r
    return SymFun(f.degree, target, out)


def multiply(f: SymFun, g: SymFun) -> SymFun:
    """Product, returned in the monomial basis."""
    if f.degree == 0:
        return g.map_coeffs(lambda c: c * f.scalar_value())
    if g.degree == 0:
        return f.map_coeffs(lambda c: c * g.scalar_value())
    fm, gm = convert(f, "m"), convert(g, "m")
    prod = _m_product(fm.coeffs, gm.coeffs, f.degree, g.degree)
    return SymFun(f.degree + g.degree, "m", prod)


def hall_inner(f: SymFun, g: SymFun) -> QTFraction:
    """Hall pairing: power sums orthogonal with <p_lam, p_lam> = z_lam."""
    if f.degree != g.degree or f.is_zero or g.is_zero:
        return QTFraction.zero()
    fp, gp = convert(f, "p"), convert(g, "p")
    total = QTFraction.zero()
    for lam, c in fp.coeffs.items():
        d = gp.coeffs.get(lam)
        if d is not None:
            total = total + c * d * z_lambda(lam)
    return total


@dataclass(frozen=True)
class PlethAlphabet:
    """Scalar q,t-alphabet: p_k picks up scalar_template(q^k, t^k), times p_k
    itself when the alphabet includes the z-variables."""

    scalar_template: QTFraction
    includes_z: bool

    def factor(self, k: int) -> QTFraction:
        return self.scalar_template.substitute_powers(k)


ALPHABET_Z = PlethAlphabet(QTFraction.one(), True)
ALPHABET_Z_OVER_1MQ = PlethAlphabet(
    QTFraction(1, QTLaurent.one() - QTLaurent.var("q")), True
)
ALPHABET_Z_OVER_1MT = PlethAlphabet(
    QTFraction(1, QTLaurent.one() - QTLaurent.var("t")), True
)
ALPHABET_MZ = PlethAlphabet(
    QTFraction(
        (QTLaurent.one() - QTLaurent.var("q")) * (QTLaurent.one() - QTLaurent.var("t"))
    ),
    True,
)
ALPHABET_ONE = PlethAlphabet(QTFraction.one(), False)


def plethysm(f: SymFun, alphabet: PlethAlphabet) -> SymFun:
    """Plethystic substitution by a scalar alphabet, determined on power sums."""
    if f.degree == 0:
        return f
    fp = convert(f, "p")
    if alphabet.includes_z:
        out: Dict[Partition, QTFraction] = {}
        for lam, c in fp.coeffs.items():
            for k in lam.parts:
                c = c * alphabet.factor(k)
            out[lam] = c
        result = SymFun(f.degree, "p", out)
        return convert(result, f.basis) if f.basis != "p" else result
    total = QTFraction.zero()
    for lam, c in fp.coeffs.items():
        for k in lam.parts:
            c = c * alphabet.factor(k)
        total = total + c
    return SymFun.scalar(total)


def eval_at_one(f: SymFun) -> QTFraction:
    """Plethystic evaluation at the one-letter alphabet (p_k -> 1)."""
    if f.degree == 0:
        return f.scalar_value()
    return plethysm(f, ALPHABET_ONE).scalar_value()


@lru_cache(maxsize=None)
def transformed_schur(lam: Partition, param: str) -> SymFun:
    """Schur expansion of s_lam[Z/(1-param)] for param q or t."""
    if param == "q":
        alphabet = ALPHABET_Z_OVER_1MQ
    elif param == "t":
        alphabet = ALPHABET_Z_OVER_1MT
    else:
        raise ValueError(f"param must be 'q' or 't', got {param!r}")
    s_lam = SymFun(lam.size, "s", {lam: QTFraction.one()})
    return convert(plethysm(convert(s_lam, "p"), alphabet), "s")

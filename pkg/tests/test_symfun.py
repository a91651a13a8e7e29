"""Classical symmetric-function bases, transitions, the Hall pairing, and
scalar-alphabet plethysm.

The conversion tests use an independent oracle: every basis element is
expanded as an honest polynomial in finitely many variables (monomial
orbits, subset/multiset sums, semistandard tableaux for Schur functions)
and coefficients are compared after specializing q,t at a generic rational
point.
"""

import itertools
import random
from fractions import Fraction

import pytest
from sympy.utilities.iterables import multiset_permutations

from nablaqt.partitions import Partition, partitions_of, z_lambda
from nablaqt.qt_coeff import QTFraction, QTLaurent
from nablaqt.symfun import (
    ALPHABET_MZ,
    ALPHABET_Z,
    ALPHABET_Z_OVER_1MQ,
    ALPHABET_Z_OVER_1MT,
    CLASSICAL_BASES,
    SymFun,
    convert,
    eval_at_one,
    hall_inner,
    multiply,
    plethysm,
    transformed_schur,
)

P = Partition
ONE = QTLaurent.one()
Q = QTLaurent.var("q")
T = QTLaurent.var("t")

Q0, T0 = Fraction(3, 7), Fraction(-2, 5)


def s(*parts):
    lam = P(parts)
    return SymFun(lam.size, "s", {lam: QTFraction.one()})


def gen(basis, *parts):
    lam = P(parts)
    f = SymFun.zero(lam.size, basis)
    out = dict(f.coeffs)
    out[lam] = QTFraction.one()
    return SymFun(lam.size, basis, out)


# ---------------------------------------------------------------------------
# independent polynomial oracle
# ---------------------------------------------------------------------------


def _monomial_poly(lam, nvars):
    out = {}
    padded = list(lam.parts) + [0] * (nvars - len(lam.parts))
    for perm in multiset_permutations(padded):
        out[tuple(perm)] = Fraction(1)
    return out


def _elementary_poly(k, nvars):
    out = {}
    for subset in itertools.combinations(range(nvars), k):
        exp = [0] * nvars
        for i in subset:
            exp[i] = 1
        out[tuple(exp)] = Fraction(1)
    return out


def _homogeneous_poly(k, nvars):
    out = {}
    for combo in itertools.combinations_with_replacement(range(nvars), k):
        exp = [0] * nvars
        for i in combo:
            exp[i] += 1
        key = tuple(exp)
        out[key] = out.get(key, Fraction(0)) + 1
    return out


def _power_poly(k, nvars):
    out = {}
    for i in range(nvars):
        exp = [0] * nvars
        exp[i] = k
        out[tuple(exp)] = Fraction(1)
    return out


def _schur_poly(lam, nvars):
    """Sum of content monomials over semistandard tableaux with entries
    1..nvars, built row by row."""
    rows = lam.parts
    out = {}

    def build(row_idx, prev_row, acc):
        if row_idx == len(rows):
            out[tuple(acc)] = out.get(tuple(acc), Fraction(0)) + 1
            return
        length = rows[row_idx]

        def extend(col, last, row):
            if col == length:
                build(row_idx + 1, row, acc)
                return
            lo = last
            if prev_row is not None:
                lo = max(lo, prev_row[col] + 1)
            for v in range(lo, nvars):
                row.append(v)
                acc[v] += 1
                extend(col + 1, v, row)
                acc[v] -= 1
                row.pop()

        extend(0, 0, [])

    build(0, None, [0] * nvars)
    return out


def _poly_scale(poly, c):
    return {k: v * c for k, v in poly.items()}


def _poly_add(p1, p2):
    out = dict(p1)
    for k, v in p2.items():
        out[k] = out.get(k, Fraction(0)) + v
    return {k: v for k, v in out.items() if v}


def _poly_mul(p1, p2):
    out = {}
    for k1, v1 in p1.items():
        for k2, v2 in p2.items():
            key = tuple(a + b for a, b in zip(k1, k2))
            out[key] = out.get(key, Fraction(0)) + v1 * v2
    return {k: v for k, v in out.items() if v}


def _basis_poly(basis, lam, nvars):
    if basis == "m":
        return _monomial_poly(lam, nvars)
    if basis == "s":
        return _schur_poly(lam, nvars)
    maker = {"e": _elementary_poly, "h": _homogeneous_poly, "p": _power_poly}[basis]
    poly = {(0,) * nvars: Fraction(1)}
    for k in lam.parts:
        poly = _poly_mul(poly, maker(k, nvars))
    return poly


def oracle_poly(f, nvars):
    total = {}
    for lam, c in f.coeffs.items():
        scaled = _poly_scale(_basis_poly(f.basis, lam, nvars), c.specialize(Q0, T0))
        total = _poly_add(total, scaled)
    return total


def random_symfun(degree, basis, rng):
    coeffs = {}
    for lam in partitions_of(degree):
        if rng.random() < 0.6:
            c = Fraction(rng.randint(-4, 4), rng.randint(1, 3))
            if c:
                coeffs[lam] = QTFraction(QTLaurent.const(c))
    if not coeffs:
        coeffs = {P((degree,)): QTFraction.one()}
    return SymFun(degree, basis, coeffs)


# ---------------------------------------------------------------------------
# conversions
# ---------------------------------------------------------------------------


class TestConvert:
    def test_examples(self):
        assert convert(gen("e", 2), "s") == s(1, 1)
        assert convert(gen("p", 2), "s") == s(2) - s(1, 1)
        # degree-1 everything coincides
        for b1 in CLASSICAL_BASES:
            for b2 in CLASSICAL_BASES:
                assert convert(gen(b1, 1), b2) == gen(b2, 1)

    def test_against_polynomial_oracle(self):
        rng = random.Random(7)
        for degree in (2, 3, 4):
            for basis in CLASSICAL_BASES:
                f = random_symfun(degree, basis, rng)
                reference = oracle_poly(f, degree)
                for target in CLASSICAL_BASES:
                    assert oracle_poly(convert(f, target), degree) == reference

    def test_round_trips(self):
        rng = random.Random(11)
        for degree in (3, 5, 6):
            for b1 in CLASSICAL_BASES:
                f = random_symfun(degree, b1, rng)
                for b2 in CLASSICAL_BASES:
                    assert convert(convert(f, b2), b1) == f


class TestMultiply:
    def test_pieri_example(self):
        prod = multiply(gen("h", 1), gen("h", 1))
        assert convert(prod, "s") == s(2) + s(1, 1)

    def test_unit(self):
        f = convert(gen("p", 2), "m")
        assert multiply(f, SymFun.scalar(QTFraction.one())) == f

    def test_power_sum_cube(self):
        cube = multiply(multiply(gen("p", 1), gen("p", 1)), gen("p", 1))
        assert convert(cube, "s") == s(3) + s(2, 1) + s(2, 1) + s(1, 1, 1)

    def test_against_polynomial_oracle(self):
        rng = random.Random(3)
        f = random_symfun(2, "s", rng)
        g = random_symfun(2, "e", rng)
        assert oracle_poly(multiply(f, g), 4) == _poly_mul(
            oracle_poly(f, 4), oracle_poly(g, 4)
        )


class TestHallInner:
    def test_power_sum_normalization(self):
        assert hall_inner(gen("p", 2), gen("p", 2)) == QTFraction(QTLaurent.const(2))
        for lam in partitions_of(4):
            plam = SymFun(4, "p", {lam: QTFraction.one()})
            assert hall_inner(plam, plam) == QTFraction(QTLaurent.const(z_lambda(lam)))

    def test_schur_orthonormality(self):
        for n in range(1, 7):
            for lam in partitions_of(n):
                for nu in partitions_of(n):
                    expected = QTFraction.one() if lam == nu else QTFraction.zero()
                    assert hall_inner(
                        SymFun(n, "s", {lam: QTFraction.one()}),
                        SymFun(n, "s", {nu: QTFraction.one()}),
                    ) == expected

    def test_symmetry_and_degree_mismatch(self):
        f = convert(gen("e", 2), "s")
        g = s(2) + s(1, 1)
        assert hall_inner(f, g) == hall_inner(g, f)
        assert hall_inner(gen("p", 1), gen("p", 2)).is_zero


class TestPlethysm:
    def test_power_sum_rules(self):
        p2 = gen("p", 2)
        expected = p2.map_coeffs(
            lambda c: c * QTFraction(
                (ONE - QTLaurent.monomial(2, 0)) * (ONE - QTLaurent.monomial(0, 2))
            )
        )
        assert plethysm(p2, ALPHABET_MZ) == expected
        assert plethysm(gen("p", 1), ALPHABET_Z) == gen("p", 1)
        p3 = gen("p", 3)
        assert plethysm(p3, ALPHABET_Z_OVER_1MQ) == p3.map_coeffs(
            lambda c: c / QTFraction(ONE - QTLaurent.monomial(3, 0))
        )

    def test_ring_homomorphism(self):
        rng = random.Random(5)
        for alphabet in (ALPHABET_Z_OVER_1MQ, ALPHABET_Z_OVER_1MT, ALPHABET_MZ):
            f = random_symfun(2, "p", rng)
            g = random_symfun(2, "s", rng)
            lhs = plethysm(multiply(f, g), alphabet)
            rhs = multiply(plethysm(f, alphabet), plethysm(g, alphabet))
            assert convert(lhs, "m") == convert(rhs, "m")


class TestEvalAtOne:
    def test_schur_rows_survive(self):
        for n in range(1, 7):
            for lam in partitions_of(n):
                value = eval_at_one(SymFun(n, "s", {lam: QTFraction.one()}))
                if len(lam) == 1:
                    assert value.is_one
                else:
                    assert value.is_zero

    def test_power_sum(self):
        assert eval_at_one(gen("p", 1)).is_one


class TestTransformedSchur:
    def test_degree_one(self):
        for param, var in (("q", Q), ("t", T)):
            expected = s(1).map_coeffs(lambda c: c / QTFraction(ONE - var))
            assert transformed_schur(P((1,)), param) == expected

    def test_two_row(self):
        den = QTFraction((ONE - Q) * (ONE - Q * Q))
        expected = (s(2) + s(1, 1).map_coeffs(lambda c: c * QTFraction(Q))).map_coeffs(
            lambda c: c / den
        )
        assert transformed_schur(P((2,)), "q") == expected

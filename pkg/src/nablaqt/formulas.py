"""Closed-form Macdonald-basis expansions of nabla e_n and the signed
nabla p_n, plus the symbolic term-by-term equivalence of the two published
p_n expansions.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .macdonald import macdonald_htilde
from .partitions import Partition, b_mu, bracket, partitions_of, pi_mu, t_mu
from .qt_coeff import QTFraction, QTLaurent
from .symfun import SymFun

__all__ = [
    "ExpansionTerm",
    "en_weight",
    "pn_weight",
    "pn_refined_weight",
    "rhs_en",
    "rhs_pn",
    "rhs_pn_refined",
    "verify_term",
]

_ONE = QTLaurent.one()


@dataclass(frozen=True)
class ExpansionTerm:
    """One summand: the rational-function weight multiplying the modified
    Macdonald polynomial indexed by mu."""

    mu: Partition
    weight: QTFraction


def _denominator_product(mu: Partition) -> QTFraction:
    """prod over cells of (1 - t^(1+l) q^(-a)) (1 - t^(-l) q^(1+a))."""
    prod = QTFraction.one()
    for cell in mu.cells():
        st = mu.cell_stats(cell)
        f1 = _ONE - QTLaurent.monomial(-st.arm, 1 + st.leg)
        f2 = _ONE - QTLaurent.monomial(1 + st.arm, -st.leg)
        prod = prod * QTFraction(f1) * QTFraction(f2)
    return prod


def en_weight(mu: Partition) -> ExpansionTerm:
    """Coefficient of the mu-term in the Macdonald expansion of nabla e_n."""
    numer = (
        QTFraction((_ONE - QTLaurent.var("q")) * (_ONE - QTLaurent.var("t")))
        * QTFraction(pi_mu(mu))
        * QTFraction(b_mu(mu))
    )
    return ExpansionTerm(mu, numer / _denominator_product(mu))


def pn_weight(mu: Partition) -> ExpansionTerm:
    """mu-term coefficient in the original signed nabla p_n expansion."""
    n = mu.size
    numer = (
        QTFraction(
            (_ONE - QTLaurent.monomial(0, n)) * (_ONE - QTLaurent.monomial(n, 0))
        )
        * QTFraction(pi_mu(mu))
        * QTFraction(t_mu(mu))
    )
    den = QTFraction.one()
    for cell in mu.cells():
        st = mu.cell_stats(cell)
        f1 = QTLaurent.monomial(st.arm, 0) - QTLaurent.monomial(0, 1 + st.leg)
        f2 = QTLaurent.monomial(0, st.leg) - QTLaurent.monomial(1 + st.arm, 0)
        den = den * QTFraction(f1) * QTFraction(f2)
    return ExpansionTerm(mu, numer / den)


def pn_refined_weight(mu: Partition) -> ExpansionTerm:
    """mu-term coefficient in the rewritten signed nabla p_n expansion."""
    n = mu.size
    numer = (
        QTFraction((_ONE - QTLaurent.var("q")) * (_ONE - QTLaurent.var("t")))
        * QTFraction(pi_mu(mu))
        * QTFraction(bracket("t", n) * bracket("q", n))
    )
    return ExpansionTerm(mu, numer / _denominator_product(mu))


def _assemble(terms: Iterator[ExpansionTerm], n: int) -> SymFun:
    total = SymFun.zero(n, "s")
    for term in terms:
        scaled = macdonald_htilde(term.mu).map_coeffs(
            lambda c, w=term.weight: c * w
        )
        total = total + scaled
    return total


def rhs_en(n: int) -> SymFun:
    """Schur expansion of the closed-form sum for nabla e_n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return _assemble((en_weight(mu) for mu in partitions_of(n)), n)


def rhs_pn(n: int) -> SymFun:
    """Schur expansion of the original closed-form sum for the signed p_n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return _assemble((pn_weight(mu) for mu in partitions_of(n)), n)


def rhs_pn_refined(n: int) -> SymFun:
    """Schur expansion of the rewritten closed-form sum for the signed p_n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return _assemble((pn_refined_weight(mu) for mu in partitions_of(n)), n)


def verify_term(mu: Partition) -> bool:
    """Symbolic equality of the mu-summand weights of the two p_n forms."""
    if mu.size < 1:
        raise ValueError("mu must be nonempty")
    return pn_weight(mu).weight == pn_refined_weight(mu).weight

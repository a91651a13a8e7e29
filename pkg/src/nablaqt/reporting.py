"""Schur-positivity reports, dimension specializations, run configuration,
and plain/JSON/LaTeX rendering of symmetric-function output.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Dict, Optional, Tuple

from .localization import Variant
from .macdonald import to_schur
from .partitions import Partition, num_standard_tableaux
from .qt_coeff import QTFraction, QTLaurent
from .symfun import SymFun

__all__ = [
    "CACHE_DIR_ENV",
    "NonPolynomialCoefficientError",
    "PositivityReport",
    "RunConfig",
    "schur_positivity",
    "dimension_at_one",
    "canonical_json",
    "latex_laurent",
    "latex_fraction",
    "latex_symfun",
]

CACHE_DIR_ENV = "NABLAQT_CACHE_DIR"


class NonPolynomialCoefficientError(Exception):
    """A Schur coefficient has a nontrivial denominator where a Laurent
    polynomial is required."""


@dataclass
class RunConfig:
    """Settings shared by every CLI subcommand."""

    cache_dir: Path = field(
        default_factory=lambda: Path(
            os.environ.get(CACHE_DIR_ENV, Path.home() / ".cache" / "nablaqt")
        )
    )
    output_format: str = "plain"
    variant: Variant = Variant.F
    residue_override: Optional[QTFraction] = None

    def __post_init__(self) -> None:
        if self.output_format not in ("plain", "json", "latex"):
            raise ValueError(f"unknown output format {self.output_format!r}")
        self.cache_dir = Path(self.cache_dir)


@dataclass
class PositivityReport:
    """Schur-positivity verdict with the first violation, if any.

    The violation triple is (partition, (q-exponent, t-exponent), coefficient)
    selected deterministically: partitions in reverse-lexicographic order,
    monomials in the graded order used for rendering.
    """

    description: str
    coefficients: Dict[Partition, QTLaurent]
    positive: bool
    violation: Optional[Tuple[Partition, Tuple[int, int], Fraction]] = None


def schur_positivity(f: SymFun, description: str = "") -> PositivityReport:
    """Check that every Schur coefficient of f is a polynomial in q,t with
    nonnegative integer coefficients."""
    schur = to_schur(f)
    coefficients: Dict[Partition, QTLaurent] = {}
    for lam, c in schur.coeffs.items():
        if not c.is_laurent():
            raise NonPolynomialCoefficientError(
                f"Schur coefficient of {lam} is not a Laurent polynomial: {c}"
            )
        coefficients[lam] = c.as_laurent()
    for lam in sorted(coefficients, key=lambda p: p.parts, reverse=True):
        for (a, b), coeff in coefficients[lam].items():
            frac = Fraction(coeff.numerator, coeff.denominator)
            if a < 0 or b < 0 or frac.denominator != 1 or frac < 0:
                return PositivityReport(description, coefficients, False, (lam, (a, b), frac))
    return PositivityReport(description, coefficients, True)


def dimension_at_one(f: SymFun) -> Fraction:
    """Dimension of the representation with Frobenius characteristic f:
    sum over lambda of (Schur coefficient at q=t=1) times the number of
    standard tableaux of shape lambda."""
    schur = to_schur(f)
    total = Fraction(0)
    for lam, c in schur.coeffs.items():
        total += c.specialize(1, 1) * num_standard_tableaux(lam)
    return total


def canonical_json(payload) -> str:
    """The one JSON serialization used everywhere, so that parsing and
    re-serializing a report is byte-identical."""
    return json.dumps(payload, sort_keys=True, indent=1) + "\n"


# ---------------------------------------------------------------------------
# LaTeX rendering
# ---------------------------------------------------------------------------


def _latex_exp(name: str, e: int) -> str:
    if e == 0:
        return ""
    if e == 1:
        return name
    return f"{name}^{{{e}}}"


def latex_laurent(p: QTLaurent) -> str:
    if p.is_zero:
        return "0"
    pieces = []
    for (a, b), coeff in p.items():
        mono = _latex_exp("q", a) + _latex_exp("t", b)
        frac = Fraction(coeff.numerator, coeff.denominator)
        mag = abs(frac)
        if mag == 1 and mono:
            body = mono
        else:
            num = str(mag.numerator) if mag.denominator == 1 else (
                f"\\tfrac{{{mag.numerator}}}{{{mag.denominator}}}"
            )
            body = num + mono
        if not pieces:
            pieces.append(body if frac > 0 else "-" + body)
        else:
            pieces.append(("+ " if frac > 0 else "- ") + body)
    return " ".join(pieces)


def latex_fraction(c: QTFraction) -> str:
    if c.den.is_one:
        return latex_laurent(c.num)
    return f"\\frac{{{latex_laurent(c.num)}}}{{{latex_laurent(c.den)}}}"


def latex_symfun(f: SymFun) -> str:
    if not f.coeffs:
        return "0"
    letter = {"s": "s", "m": "m", "e": "e", "h": "h", "p": "p", "H": "\\tilde H"}[f.basis]
    pieces = []
    for lam in sorted(f.coeffs, key=lambda p: p.parts, reverse=True):
        c = f.coeffs[lam]
        base = f"{letter}_{{{','.join(map(str, lam.parts))}}}"
        text = latex_fraction(c)
        if c.is_one:
            pieces.append(base)
        elif len(c.num) == 1 and c.den.is_one and not text.startswith("-"):
            pieces.append(f"{text}\\,{base}")
        else:
            pieces.append(f"\\left({text}\\right){base}")
    return " + ".join(pieces)

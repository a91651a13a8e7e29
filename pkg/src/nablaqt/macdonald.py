"""Modified Macdonald polynomials from their axiomatic characterization.

For each degree the solver intersects, by exact Gaussian elimination, the
span of {s_lam[Z/(1-q)] : lam >= mu} with the span of
{s_lam[Z/(1-t)] : lam >= mu'} and normalizes the coefficient of the one-row
Schur function to 1.  The resulting Schur expansions are cached in memory
and, optionally, on disk as versioned JSON.
"""

from __future__ import annotations

import json
import os
import tempfile
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path
from typing import Dict, Mapping

from . import linalg
from .partitions import Partition, dominance_leq, partitions_of, t_mu
from .qt_coeff import QTFraction, QTLaurent
from .symfun import (
    MACDONALD_BASIS,
    PlethAlphabet,
    SymFun,
    convert,
    plethysm,
    transformed_schur,
)

__all__ = [
    "SOLVER_VERSION",
    "MacdonaldError",
    "InconsistentSystemError",
    "CacheError",
    "MacdonaldTable",
    "macdonald_htilde",
    "macdonald_table",
    "expand_in_macdonald",
    "nabla",
    "nabla_target",
    "cache_store",
    "cache_load",
    "cache_path",
]

SOLVER_VERSION = "axiom-intersection-1"


class MacdonaldError(Exception):
    pass


class InconsistentSystemError(MacdonaldError):
    """The axiom system did not have a one-dimensional solution space."""


class CacheError(MacdonaldError):
    """Missing, unparsable, or axiom-violating cache file."""


@dataclass
class MacdonaldTable:
    degree: int
    entries: Dict[Partition, SymFun]
    provenance: str = SOLVER_VERSION


@lru_cache(maxsize=None)
def _mixed_schur(lam: Partition) -> SymFun:
    """Schur expansion of s_lam[Z(1-t)/(1-q)]: the coordinates of
    s_lam[Z/(1-q)] in the basis {s_kappa[Z/(1-t)]}."""
    one = QTLaurent.one()
    template = QTFraction(one - QTLaurent.var("t"), one - QTLaurent.var("q"))
    s_lam = SymFun(lam.size, "s", {lam: QTFraction.one()})
    return convert(plethysm(s_lam, PlethAlphabet(template, True)), "s")


def _solve_htilde(mu: Partition) -> SymFun:
    n = mu.size
    parts = partitions_of(n)
    mu_conj = mu.conjugate()
    cols_q = [lam for lam in parts if dominance_leq(mu, lam)]
    # The ansatz H = sum_lam x_lam s_lam[Z/(1-q)] over lam >= mu satisfies
    # the q-triangularity by construction; the t-triangularity says the
    # coordinates of H in {s_kappa[Z/(1-t)]} vanish outside kappa >= mu'.
    bad_rows = [nu for nu in parts if not dominance_leq(mu_conj, nu)]
    zero = QTFraction.zero()
    matrix = [
        [_mixed_schur(lam).coeffs.get(nu, zero) for lam in cols_q]
        for nu in bad_rows
    ]
    if bad_rows:
        kernel = linalg.nullspace(matrix)
    else:
        # no constraints (mu is a single row): the span must be a line
        kernel = [[QTFraction.one()] * len(cols_q)]
    if len(kernel) != 1:
        raise InconsistentSystemError(
            f"axiom system for {mu} has nullity {len(kernel)}, expected 1"
        )
    vec = kernel[0]
    coeffs: Dict[Partition, QTFraction] = {nu: QTFraction.zero() for nu in parts}
    for j, lam in enumerate(cols_q):
        x = vec[j]
        if x.is_zero:
            continue
        for nu, c in transformed_schur(lam, "q").coeffs.items():
            coeffs[nu] = coeffs[nu] + x * c
    lead = coeffs[Partition((n,))]
    if lead.is_zero:
        raise InconsistentSystemError(f"vanishing one-row coefficient for {mu}")
    coeffs = {nu: c / lead for nu, c in coeffs.items() if not c.is_zero}
    return SymFun(n, "s", coeffs)


@lru_cache(maxsize=None)
def macdonald_table(degree: int) -> MacdonaldTable:
    """All modified Macdonald polynomials of the degree, Schur-expanded.

    Only one member of each conjugate pair is solved for; the other follows
    from the q<->t symmetry of the axioms and is re-checked by the axiom
    verifier.
    """
    if degree < 1:
        raise MacdonaldError("degree must be >= 1")
    parts = partitions_of(degree)
    cheaper: Dict[Partition, Partition] = {}
    for mu in parts:
        conj = mu.conjugate()
        if conj in cheaper or mu == conj:
            continue
        k_mu = sum(1 for lam in parts if dominance_leq(mu, lam))
        k_conj = sum(1 for lam in parts if dominance_leq(conj, lam))
        cheaper[mu if k_mu <= k_conj else conj] = None
    entries: Dict[Partition, SymFun] = {}
    for mu in parts:
        conj = mu.conjugate()
        if mu == conj or mu in cheaper:
            entries[mu] = _solve_htilde(mu)
    for mu in parts:
        if mu not in entries:
            entries[mu] = entries[mu.conjugate()].map_coeffs(lambda c: c.swap_qt())
    return MacdonaldTable(degree=degree, entries=entries)


def macdonald_htilde(mu: Partition) -> SymFun:
    """Schur expansion of the modified Macdonald polynomial for mu."""
    return macdonald_table(mu.size).entries[mu]


def _schur_coeffs(f: SymFun) -> Mapping[Partition, QTFraction]:
    if f.basis == MACDONALD_BASIS:
        acc = SymFun.zero(f.degree, "s")
        for mu, c in f.coeffs.items():
            acc = acc + macdonald_htilde(mu).map_coeffs(lambda v, c=c: v * c)
        return acc.coeffs
    return convert(f, "s").coeffs


def to_schur(f: SymFun) -> SymFun:
    """Schur expansion of a function in any basis, Macdonald included."""
    return SymFun(f.degree, "s", dict(_schur_coeffs(f)))


def expand_in_macdonald(f: SymFun) -> Dict[Partition, QTFraction]:
    """Coefficients c_mu with f = sum c_mu Htilde_mu."""
    if f.degree < 1:
        raise MacdonaldError("degree must be >= 1")
    if f.basis == MACDONALD_BASIS:
        return dict(f.coeffs)
    n = f.degree
    parts = partitions_of(n)
    index = {lam: i for i, lam in enumerate(parts)}
    table = macdonald_table(n)
    matrix = [[QTFraction.zero()] * len(parts) for _ in parts]
    for j, mu in enumerate(parts):
        for nu, c in table.entries[mu].coeffs.items():
            matrix[index[nu]][j] = c
    target = _schur_coeffs(f)
    rhs = [target.get(nu, QTFraction.zero()) for nu in parts]
    solution = linalg.solve(matrix, rhs)
    return {mu: c for mu, c in zip(parts, solution) if not c.is_zero}


def nabla(f: SymFun) -> SymFun:
    """Apply the operator with Macdonald eigenbasis and eigenvalues T_mu."""
    if f.degree < 1:
        raise MacdonaldError("degree must be >= 1")
    expansion = expand_in_macdonald(f)
    out = SymFun.zero(f.degree, "s")
    for mu, c in expansion.items():
        scaled = c * QTFraction(t_mu(mu))
        out = out + macdonald_htilde(mu).map_coeffs(lambda v, s=scaled: v * s)
    return out


def nabla_target(kind: str, n: int) -> SymFun:
    """Schur expansion of nabla e_n, or of (-1)^(n-1) nabla p_n."""
    if n < 1:
        raise MacdonaldError("n must be >= 1")
    if kind == "e_n":
        return nabla(SymFun.generator("e", n))
    if kind == "signed_p_n":
        result = nabla(SymFun.generator("p", n))
        return result if n % 2 else -result
    raise MacdonaldError(f"unknown target kind {kind!r}")


# ---------------------------------------------------------------------------
# disk cache
# ---------------------------------------------------------------------------

CACHE_SCHEMA = 1


def cache_path(n: int, directory) -> Path:
    return Path(directory) / f"macdonald_{n}.json"


def _table_payload(table: MacdonaldTable) -> dict:
    entries = {}
    for mu in partitions_of(table.degree):
        fn = table.entries[mu]
        entries[str(mu)] = {
            str(nu): fn.coeffs[nu].render()
            for nu in partitions_of(table.degree)
            if nu in fn.coeffs
        }
    return {
        "schema": CACHE_SCHEMA,
        "degree": table.degree,
        "solver": table.provenance,
        "entries": entries,
    }


def cache_store(table: MacdonaldTable, directory) -> Path:
    """Write a degree table atomically (temp file, then rename)."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    target = cache_path(table.degree, directory)
    payload = json.dumps(_table_payload(table), indent=1, sort_keys=True)
    fd, tmp = tempfile.mkstemp(dir=directory, suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as handle:
            handle.write(payload)
        os.replace(tmp, target)
    finally:
        if os.path.exists(tmp):
            os.unlink(tmp)
    return target


def verify_axioms(table: MacdonaldTable) -> None:
    """Check triangularity in both transformed spans and the normalization."""
    from .symfun import eval_at_one

    n = table.degree
    parts = partitions_of(n)
    index = {lam: i for i, lam in enumerate(parts)}
    for mu in parts:
        fn = table.entries.get(mu)
        if fn is None:
            raise CacheError(f"missing entry for {mu}")
        one_row = fn.coeffs.get(Partition((n,)), QTFraction.zero())
        if not one_row.is_one:
            raise CacheError(f"one-row Schur coefficient of {mu} is not 1")
        if not eval_at_one(fn).is_one:
            raise CacheError(f"evaluation at the one-letter alphabet fails for {mu}")
        for param, base in (("q", mu), ("t", mu.conjugate())):
            cols = [lam for lam in parts if dominance_leq(base, lam)]
            matrix = [[QTFraction.zero()] * len(cols) for _ in parts]
            for j, lam in enumerate(cols):
                for nu, c in transformed_schur(lam, param).coeffs.items():
                    matrix[index[nu]][j] = c
            rhs = [fn.coeffs.get(nu, QTFraction.zero()) for nu in parts]
            try:
                linalg.solve(matrix, rhs)
            except linalg.SingularSystemError as exc:
                raise CacheError(
                    f"{mu} is outside the transformed-Schur span for {param}"
                ) from exc


def cache_load(n: int, directory) -> MacdonaldTable:
    """Load and re-verify a degree table; raises CacheError on any defect."""
    target = cache_path(n, directory)
    if not target.exists():
        raise FileNotFoundError(target)
    try:
        payload = json.loads(target.read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise CacheError(f"unreadable cache file {target}: {exc}") from exc
    if payload.get("schema") != CACHE_SCHEMA or payload.get("degree") != n:
        raise CacheError(f"wrong schema or degree in {target}")
    try:
        entries = {
            Partition.from_string(mu_key): SymFun(
                n,
                "s",
                {
                    Partition.from_string(nu_key): QTFraction.parse(text)
                    for nu_key, text in body.items()
                },
            )
            for mu_key, body in payload["entries"].items()
        }
    except (KeyError, ValueError) as exc:
        raise CacheError(f"malformed cache body in {target}: {exc}") from exc
    table = MacdonaldTable(degree=n, entries=entries, provenance=payload["solver"])
    verify_axioms(table)
    return table

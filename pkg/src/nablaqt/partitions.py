"""Integer partitions, diagram statistics, and their q,t-weights.

Cells are identified with their coordinates (coarm, coleg) = (column, row);
the arm of a cell counts cells with a larger column in the same row, the leg
counts cells with a larger row in the same column.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import factorial
from typing import Iterator, Sequence, Tuple

from .qt_coeff import QTLaurent

__all__ = [
    "Partition",
    "CellStats",
    "PartitionError",
    "partitions_of",
    "dominance_leq",
    "n_stat",
    "b_mu",
    "t_mu",
    "pi_mu",
    "bracket",
    "z_lambda",
    "num_standard_tableaux",
]

Cell = Tuple[int, int]  # (coarm, coleg)


class PartitionError(ValueError):
    """Invalid partition data or cell outside the diagram."""


@dataclass(frozen=True)
class CellStats:
    arm: int
    coarm: int
    leg: int
    coleg: int


class Partition:
    """Weakly decreasing sequence of positive integers."""

    __slots__ = ("parts", "size")

    def __init__(self, parts: Sequence[int] = ()):
        parts = tuple(int(p) for p in parts)
        for i, p in enumerate(parts):
            if p < 1:
                raise PartitionError(f"parts must be positive, got {p}")
            if i and parts[i - 1] < p:
                raise PartitionError(f"parts must be weakly decreasing: {parts}")
        self.parts = parts
        self.size = sum(parts)

    @classmethod
    def from_string(cls, text: str) -> "Partition":
        text = text.strip()
        if not text:
            return cls(())
        try:
            return cls(tuple(int(p) for p in text.split(",")))
        except ValueError as exc:
            raise PartitionError(f"bad partition string {text!r}") from exc

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __eq__(self, other) -> bool:
        if isinstance(other, tuple):
            return self.parts == other
        if isinstance(other, Partition):
            return self.parts == other.parts
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.parts)

    def __str__(self) -> str:
        return ",".join(str(p) for p in self.parts)

    def __repr__(self) -> str:
        return f"Partition({self.parts})"

    def conjugate(self) -> "Partition":
        if not self.parts:
            return Partition(())
        return Partition(
            tuple(
                sum(1 for p in self.parts if p >= i)
                for i in range(1, self.parts[0] + 1)
            )
        )

    def cells(self) -> Iterator[Cell]:
        """All cells (coarm, coleg) of the diagram, row by row."""
        for row, length in enumerate(self.parts):
            for col in range(length):
                yield (col, row)

    def contains_cell(self, x: Cell) -> bool:
        col, row = x
        return 0 <= row < len(self.parts) and 0 <= col < self.parts[row]

    def cell_stats(self, x: Cell) -> CellStats:
        if not self.contains_cell(x):
            raise PartitionError(f"cell {x} outside the diagram of {self}")
        col, row = x
        arm = self.parts[row] - col - 1
        leg = sum(1 for r in range(row + 1, len(self.parts)) if self.parts[r] > col)
        return CellStats(arm=arm, coarm=col, leg=leg, coleg=row)


@lru_cache(maxsize=None)
def partitions_of(n: int) -> Tuple[Partition, ...]:
    """All partitions of n in reverse-lexicographic order, largest first."""
    if n < 0:
        raise PartitionError("n must be nonnegative")

    def gen(remaining: int, cap: int, prefix: Tuple[int, ...]):
        if remaining == 0:
            yield Partition(prefix)
            return
        for part in range(min(cap, remaining), 0, -1):
            yield from gen(remaining - part, part, prefix + (part,))

    return tuple(gen(n, n, ()))


def dominance_leq(mu: Partition, lam: Partition) -> bool:
    """True iff every partial sum of mu is at most the one of lam."""
    if mu.size != lam.size:
        raise PartitionError(f"size mismatch: |{mu}| != |{lam}|")
    acc_mu = acc_lam = 0
    for i in range(max(len(mu), len(lam))):
        acc_mu += mu.parts[i] if i < len(mu) else 0
        acc_lam += lam.parts[i] if i < len(lam) else 0
        if acc_mu > acc_lam:
            return False
    return True


def n_stat(mu: Partition) -> int:
    return sum(i * p for i, p in enumerate(mu.parts))


def b_mu(mu: Partition) -> QTLaurent:
    """Sum of q^coarm t^coleg over all cells."""
    return QTLaurent({cell: 1 for cell in mu.cells()}) if mu.size else QTLaurent.zero()


def t_mu(mu: Partition) -> QTLaurent:
    """The monomial q^{n(mu')} t^{n(mu)}."""
    return QTLaurent.monomial(n_stat(mu.conjugate()), n_stat(mu))


def pi_mu(mu: Partition) -> QTLaurent:
    """Product of (1 - q^coarm t^coleg) over all cells except the origin."""
    if mu.size < 1:
        raise PartitionError("pi_mu needs a nonempty partition")
    prod = QTLaurent.one()
    for cell in mu.cells():
        if cell != (0, 0):
            prod = prod * (QTLaurent.one() - QTLaurent.monomial(*cell))
    return prod


def bracket(var: str, n: int) -> QTLaurent:
    """1 + var + ... + var^(n-1)."""
    if n < 1:
        raise PartitionError("bracket length must be >= 1")
    if var == "q":
        return QTLaurent({(k, 0): 1 for k in range(n)})
    if var == "t":
        return QTLaurent({(0, k): 1 for k in range(n)})
    raise ValueError(f"unknown variable {var!r}")


def z_lambda(lam: Partition) -> int:
    """Centralizer order: product of i^m_i * m_i! over multiplicities."""
    out = 1
    for part in set(lam.parts):
        m = lam.parts.count(part)
        out *= part**m * factorial(m)
    return out


def num_standard_tableaux(lam: Partition) -> int:
    """Number of standard Young tableaux of the given shape (hook lengths)."""
    if lam.size == 0:
        return 1
    hooks = 1
    for cell in lam.cells():
        st = lam.cell_stats(cell)
        hooks *= st.arm + st.leg + 1
    assert factorial(lam.size) % hooks == 0
    return factorial(lam.size) // hooks

"""Integer matrices, Smith normal form and invariants of lattice quotients.

Convention: the rows of a matrix generate a sublattice L0 of Z^cols, and the
invariants describe the quotient Z^cols / L0.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import prod
from typing import Sequence


class InfiniteQuotientError(ValueError):
    """The generators do not span a finite-index sublattice."""


@dataclass(frozen=True)
class IntMatrix:
    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if self.rows < 1 or self.cols < 1:
            raise ValueError("matrix must have at least one row and one column")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"expected {self.rows * self.cols} entries, got {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "IntMatrix":
        rows = [list(r) for r in rows]
        if not rows or not rows[0]:
            raise ValueError("matrix must be nonempty")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise ValueError("ragged matrix")
        flat = []
        for r in rows:
            for x in r:
                if isinstance(x, bool) or not isinstance(x, int):
                    raise TypeError(f"matrix entries must be ints, got {x!r}")
                flat.append(x)
        return cls(len(rows), width, tuple(flat))

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls.from_rows([[int(i == j) for j in range(n)] for i in range(n)])

    def to_rows(self) -> list[list[int]]:
        c = self.cols
        return [list(self.entries[i * c : (i + 1) * c]) for i in range(self.rows)]

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i * self.cols + j]


@dataclass(frozen=True)
class QuotientInvariants:
    """Nontrivial elementary divisors d1 | d2 | ... and the free rank."""

    elementary_divisors: tuple[int, ...]
    free_rank: int

    @property
    def is_finite(self) -> bool:
        return self.free_rank == 0

    @property
    def exponent(self) -> int:
        """Exponent of the torsion part (1 if trivial)."""
        return self.elementary_divisors[-1] if self.elementary_divisors else 1

    @property
    def order(self) -> int:
        if not self.is_finite:
            raise InfiniteQuotientError("infinite quotient")
        return prod(self.elementary_divisors)


def smith_diagonal(m: IntMatrix) -> list[int]:
    """Full Smith diagonal (including 1s, excluding zeros), nonnegative."""
    a = m.to_rows()
    nr, nc = m.rows, m.cols
    diag = []
    t = 0
    while t < min(nr, nc):
        # pivot: smallest nonzero |entry| in the remaining block
        pivot = None
        for i in range(t, nr):
            for j in range(t, nc):
                if a[i][j] and (pivot is None or abs(a[i][j]) < abs(a[pivot[0]][pivot[1]])):
                    pivot = (i, j)
        if pivot is None:
            break
        i, j = pivot
        a[t], a[i] = a[i], a[t]
        for row in a:
            row[t], row[j] = row[j], row[t]

        done = True
        p = a[t][t]
        for i in range(t + 1, nr):
            q = a[i][t] // p
            if q:
                a[i] = [x - q * y for x, y in zip(a[i], a[t])]
            if a[i][t]:
                done = False
        for j in range(t + 1, nc):
            q = a[t][j] // p
            if q:
                for row in a:
                    row[j] -= q * row[t]
            if a[t][j]:
                done = False
        if not done:
            # a remainder smaller than the pivot survived; pick a new pivot
            continue

        bad = next(
            (i for i in range(t + 1, nr) for j in range(t + 1, nc) if a[i][j] % p),
            None,
        )
        if bad is not None:
            # fold the offending row into the pivot row to force divisibility
            a[t] = [x + y for x, y in zip(a[t], a[bad])]
            continue
        diag.append(abs(p))
        t += 1
    return diag


def smith_normal_form(m: IntMatrix) -> QuotientInvariants:
    """Invariants of Z^cols modulo the row lattice of m."""
    diag = smith_diagonal(m)
    return QuotientInvariants(
        elementary_divisors=tuple(d for d in diag if d != 1),
        free_rank=m.cols - len(diag),
    )


def quotient_exponent(ambient_rank: int, sublattice_gens: IntMatrix) -> int:
    """Exponent of Z^ambient_rank / span(rows of sublattice_gens).

    Raises InfiniteQuotientError when the rows do not have full rank.
    """
    if sublattice_gens.cols != ambient_rank:
        raise ValueError(
            f"generators have {sublattice_gens.cols} columns, ambient rank is {ambient_rank}"
        )
    inv = smith_normal_form(sublattice_gens)
    if not inv.is_finite:
        raise InfiniteQuotientError("infinite quotient")
    return inv.exponent

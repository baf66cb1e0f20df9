"""Simple root systems: Cartan matrices, fundamental groups, minuscule weights.

Root systems live in their usual orthonormal realizations (Bourbaki):
A_n in the sum-zero hyperplane of Q^(n+1), B/C/D_n in Q^n, E6/E7/E8 inside
Q^8, F4 in Q^4 and G2 in the sum-zero hyperplane of Q^3.  All coordinates
are Fractions so reflections are exact.
"""
from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, lcm
from typing import Iterable, Sequence

from .landau import landau_table
from .lattice import IntMatrix, QuotientInvariants, smith_normal_form

Weight = tuple[Fraction, ...]

FAMILIES = "ABCDEFG"

# Low-rank labels that duplicate another system; rejected so that
# enumerations never count the same root system twice.
_ALIASES = {
    ("B", 1): "A1",
    ("C", 1): "A1",
    ("C", 2): "B2",
    ("D", 2): "A1+A1",
    ("D", 3): "A3",
    ("E", 3): "A2+A1",
    ("E", 4): "A4",
    ("E", 5): "D5",
}


class AdmissibilityError(ValueError):
    """A root-system label outside the supported classification."""


def _admissible(family: str, rank: int) -> bool:
    return {
        "A": rank >= 1,
        "B": rank >= 2,
        "C": rank >= 3,
        "D": rank >= 4,
        "E": rank in (6, 7, 8),
        "F": rank == 4,
        "G": rank == 2,
    }[family]


@dataclass(frozen=True, order=True)
class SimpleType:
    family: str
    rank: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise AdmissibilityError(f"unknown family {self.family!r}")
        if isinstance(self.rank, bool) or not isinstance(self.rank, int):
            raise AdmissibilityError(f"rank must be an int, got {self.rank!r}")
        if not _admissible(self.family, self.rank):
            alias = _ALIASES.get((self.family, self.rank))
            hint = f"; use {alias} instead" if alias else ""
            raise AdmissibilityError(f"{self.family}{self.rank} is not admissible{hint}")

    @classmethod
    def parse(cls, label: str) -> "SimpleType":
        """Parse labels like 'A4', 'd6', 'E7'."""
        m = re.fullmatch(r"\s*([A-Ga-g])\s*(\d+)\s*", label)
        if not m:
            raise AdmissibilityError(f"cannot parse root system label {label!r}")
        return cls(m.group(1).upper(), int(m.group(2)))

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


def admissible_types(max_rank: int) -> list[SimpleType]:
    """Every admissible simple type of rank <= max_rank, sorted by (rank, family)."""
    out = []
    for rank in range(1, max_rank + 1):
        for family in FAMILIES:
            if _admissible(family, rank):
                out.append(SimpleType(family, rank))
    return out


@dataclass(frozen=True)
class ReductiveShape:
    """Root datum shape: simple factors plus the rank of the central torus."""

    simple_factors: tuple[SimpleType, ...] = ()
    central_rank: int = 0

    def __post_init__(self):
        if self.central_rank < 0:
            raise ValueError("central_rank must be nonnegative")
        object.__setattr__(self, "simple_factors", tuple(sorted(self.simple_factors)))

    @property
    def rank(self) -> int:
        return sum(t.rank for t in self.simple_factors) + self.central_rank

    def __str__(self) -> str:
        parts = [str(t) for t in self.simple_factors]
        if self.central_rank:
            parts.append(f"T{self.central_rank}")
        return "+".join(parts) or "trivial"


# ---------------------------------------------------------------------------
# realizations

def _vec(dim: int, entries: dict[int, Fraction | int]) -> Weight:
    v = [Fraction(0)] * dim
    for i, x in entries.items():
        v[i] = Fraction(x)
    return tuple(v)


_H = Fraction(1, 2)


def _e8_simple_roots() -> list[Weight]:
    roots = [_vec(8, {0: _H, 1: -_H, 2: -_H, 3: -_H, 4: -_H, 5: -_H, 6: -_H, 7: _H}),
             _vec(8, {0: 1, 1: 1})]
    for i in range(1, 7):
        roots.append(_vec(8, {i: 1, i - 1: -1}))
    return roots


def ambient_dimension(t: SimpleType) -> int:
    return {"A": t.rank + 1, "E": 8, "G": 3}.get(t.family, t.rank)


def simple_roots(t: SimpleType) -> list[Weight]:
    """Simple roots alpha_1..alpha_n in Bourbaki numbering."""
    n, d = t.rank, ambient_dimension(t)
    if t.family == "E":
        return _e8_simple_roots()[:n]
    if t.family == "F":
        return [_vec(4, {1: 1, 2: -1}), _vec(4, {2: 1, 3: -1}), _vec(4, {3: 1}),
                _vec(4, {0: _H, 1: -_H, 2: -_H, 3: -_H})]
    if t.family == "G":
        return [_vec(3, {0: 1, 1: -1}), _vec(3, {0: -2, 1: 1, 2: 1})]
    roots = [_vec(d, {i: 1, i + 1: -1}) for i in range(n - 1)]
    if t.family == "A":
        last = _vec(d, {n - 1: 1, n: -1})
    elif t.family == "B":
        last = _vec(d, {n - 1: 1})
    elif t.family == "C":
        last = _vec(d, {n - 1: 2})
    else:
        last = _vec(d, {n - 2: 1, n - 1: 1})
    return roots + [last]


def dot(x: Sequence[Fraction], y: Sequence[Fraction]) -> Fraction:
    if len(x) != len(y):
        raise ValueError("dimension mismatch")
    return sum((a * b for a, b in zip(x, y)), Fraction(0))


def reflect(v: Weight, root: Weight) -> Weight:
    c = 2 * dot(v, root) / dot(root, root)
    if not c:
        return v
    return tuple(a - c * b for a, b in zip(v, root))


def cartan_matrix(t: SimpleType) -> IntMatrix:
    """Cartan matrix with entries 2(a_i, a_j)/(a_i, a_i), Bourbaki numbering."""
    roots = simple_roots(t)
    rows = []
    for ai in roots:
        row = []
        for aj in roots:
            x = 2 * dot(ai, aj) / dot(ai, ai)
            assert x.denominator == 1
            row.append(int(x))
        rows.append(row)
    return IntMatrix.from_rows(rows)


def fundamental_group_invariants(t: SimpleType) -> QuotientInvariants:
    """Invariants of weight lattice / root lattice, from the Cartan matrix."""
    return smith_normal_form(cartan_matrix(t))


def fundamental_group_exponent(t: SimpleType) -> int:
    return fundamental_group_invariants(t).exponent


def _solve(a: list[list[Fraction]], b: list[Fraction]) -> list[Fraction]:
    # Gauss-Jordan over Q; a is square and invertible here.
    n = len(a)
    m = [list(map(Fraction, row)) + [Fraction(x)] for row, x in zip(a, b)]
    for col in range(n):
        piv = next(r for r in range(col, n) if m[r][col])
        m[col], m[piv] = m[piv], m[col]
        p = m[col][col]
        m[col] = [x / p for x in m[col]]
        for r in range(n):
            if r != col and m[r][col]:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return [row[n] for row in m]


def fundamental_weight(t: SimpleType, k: int) -> Weight:
    """The k-th fundamental weight (1-based), inside the span of the roots."""
    if not 1 <= k <= t.rank:
        raise ValueError(f"{t} has no fundamental weight {k}")
    a = cartan_matrix(t).to_rows()
    coeffs = _solve(a, [Fraction(int(j == k - 1)) for j in range(t.rank)])
    roots = simple_roots(t)
    return tuple(
        sum((c * r[i] for c, r in zip(coeffs, roots)), Fraction(0))
        for i in range(ambient_dimension(t))
    )


def coroot_pairings(t: SimpleType, w: Sequence[Fraction]) -> tuple[Fraction, ...]:
    """<w, a_i^vee> for each simple root (Dynkin labels when w is a weight)."""
    return tuple(2 * dot(w, a) / dot(a, a) for a in simple_roots(t))


def weyl_orbit(t: SimpleType, w: Sequence) -> list[Weight]:
    """Closure of {w} under the simple reflections, sorted and duplicate-free."""
    start = tuple(Fraction(x) for x in w)
    if len(start) != ambient_dimension(t):
        raise ValueError(
            f"{t} acts on Q^{ambient_dimension(t)}, got a vector of length {len(start)}"
        )
    roots = simple_roots(t)
    orbit = _integral_orbit(start, roots)
    if orbit is not None:
        return orbit
    # per-root data so each reflection is one multiply-add per coordinate
    data = [(r, 2 / dot(r, r), [i for i, x in enumerate(r) if x]) for r in roots]
    seen = {start}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for r, scale, support in data:
            c = scale * sum((v[i] * r[i] for i in support), Fraction(0))
            if not c:
                continue
            u = list(v)
            for i in support:
                u[i] -= c * r[i]
            u = tuple(u)
            if u not in seen:
                seen.add(u)
                queue.append(u)
    return sorted(seen)


def _integral_orbit(start: Weight, roots: list[Weight]) -> list[Weight] | None:
    """Orbit BFS on integer vectors scaled by a common denominator.

    Returns None if some coroot pairing is not an integer (w is then not in
    the weight lattice and the exact Fraction path is used instead).
    """
    scale = lcm(*(x.denominator for v in [start, *roots] for x in v))
    data = []
    for r in roots:
        a = [int(x * scale) for x in r]
        support = [i for i, x in enumerate(a) if x]
        data.append(([(i, a[i]) for i in support], sum(x * x for x in a)))
    x0 = tuple(int(x * scale) for x in start)
    seen = {x0}
    queue = deque([x0])
    while queue:
        v = queue.popleft()
        for support, norm in data:
            k, rem = divmod(2 * sum(v[i] * ai for i, ai in support), norm)
            if rem:
                return None
            if not k:
                continue
            u = list(v)
            for i, ai in support:
                u[i] -= k * ai
            u = tuple(u)
            if u not in seen:
                seen.add(u)
                queue.append(u)
    return sorted(tuple(Fraction(x, scale) for x in v) for v in seen)


@dataclass(frozen=True)
class MinusculeRep:
    type: SimpleType
    fundamental_weight_index: int
    dimension: int

    @property
    def highest_weight(self) -> Weight:
        return fundamental_weight(self.type, self.fundamental_weight_index)


def minuscule_catalog(t: SimpleType) -> list[MinusculeRep]:
    """All minuscule fundamental representations of t with their dimensions."""
    n = t.rank
    if t.family == "A":
        pairs = [(k, comb(n + 1, k)) for k in range(1, n + 1)]
    elif t.family == "B":
        pairs = [(n, 2**n)]
    elif t.family == "C":
        pairs = [(1, 2 * n)]
    elif t.family == "D":
        pairs = [(1, 2 * n), (n - 1, 2 ** (n - 1)), (n, 2 ** (n - 1))]
    elif t == SimpleType("E", 6):
        pairs = [(1, 27), (6, 27)]
    elif t == SimpleType("E", 7):
        pairs = [(7, 56)]
    else:
        pairs = []
    return [MinusculeRep(t, k, d) for k, d in pairs]


def u_upper_bound(shape: ReductiveShape) -> int:
    """lcm of the fundamental-group exponents of the simple factors.

    u(G) divides this, since Lambda/Lambda_0 embeds in the product of the
    fundamental groups of the simple components.
    """
    return lcm(1, *(fundamental_group_exponent(t) for t in shape.simple_factors))


def gl_lattice_relations(n: int) -> IntMatrix:
    """Generators of Lambda_0 inside the character lattice Z^n of GL_n.

    Rows are the simple roots e_i - e_(i+1) together with the determinant
    character (1, ..., 1), which vanishes on T cap SL_n.
    """
    if n < 1:
        raise ValueError("n must be positive")
    rows = [[int(j == i) - int(j == i + 1) for j in range(n)] for i in range(n - 1)]
    rows.append([1] * n)
    return IntMatrix.from_rows(rows)


# ---------------------------------------------------------------------------
# exhaustive check of u(G) <= g1(rk G)

@dataclass
class UVerification:
    max_rank: int
    shapes_checked: int = 0
    violations: list[tuple[ReductiveShape, str]] = field(default_factory=list)
    # total rank -> (max lcm of exponents, first shape attaining it)
    best_per_rank: dict[int, tuple[int, ReductiveShape]] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.violations


def _multisets(types: list[SimpleType], budget: int, start: int = 0) -> Iterable[tuple[int, ...]]:
    yield ()
    for i in range(start, len(types)):
        if types[i].rank > budget:
            continue
        for rest in _multisets(types, budget - types[i].rank, i):
            yield (i,) + rest


def verify_u_vs_g1(max_rank: int) -> UVerification:
    """Enumerate semisimple shapes of rank <= max_rank and check the Landau bound.

    For each multiset of simple types with exponents e_i this checks
    lcm(e_i) <= g1(sum(e_i - 1)) <= g1(total rank).  A central torus only
    raises the rank, so shapes without one are the binding cases.
    """
    if max_rank < 1:
        raise ValueError("max_rank must be positive")
    types = admissible_types(max_rank)
    exps = [fundamental_group_exponent(t) for t in types]
    table = landau_table(max_rank)
    report = UVerification(max_rank)
    for combo in _multisets(types, max_rank):
        if not combo:
            continue
        shape = ReductiveShape(tuple(types[i] for i in combo))
        report.shapes_checked += 1
        u = lcm(*(exps[i] for i in combo))
        cost = sum(exps[i] - 1 for i in combo)
        rank = shape.rank
        if cost > rank:
            report.violations.append((shape, f"sum(e_i - 1) = {cost} > rank {rank}"))
        elif not u <= table.g1(cost) <= table.g1(rank):
            report.violations.append(
                (shape, f"lcm {u}, g1({cost}) = {table.g1(cost)}, g1({rank}) = {table.g1(rank)}")
            )
        best = report.best_per_rank.get(rank)
        if best is None or u > best[0]:
            report.best_per_rank[rank] = (u, shape)
    report.best_per_rank = dict(sorted(report.best_per_rank.items()))
    return report

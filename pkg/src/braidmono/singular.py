"""Local numeric invariants of a curve germ under the Kummer cover.

A germ on one coordinate axis (type 1) is pulled back by (u, v) -> (u^n, v);
a germ at a coordinate vertex (type 0) by (u, v) -> (u^n, v^n). All
arithmetic is exact.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction
from math import gcd

from .errors import ValidationError


@dataclass(frozen=True)
class Branch:
    """One local branch: its Milnor number and intersection multiplicities with the axes."""

    mu: int
    axis_mult: tuple[int, ...]
    components: int = 1


@dataclass(frozen=True)
class LocalPointData:
    """A singular point on one axis (type 1) or at a vertex (type 0).

    ``intersections`` maps a pair (i, j), i < j, of 0-based branch indices
    to their local intersection number.
    """

    point_type: int
    mu: int
    axis_mult: tuple[int, ...]
    branches: tuple[Branch, ...] = ()
    intersections: dict[tuple[int, int], int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.point_type not in (0, 1):
            raise ValidationError(f"point type must be 0 or 1, got {self.point_type}")
        axes = 2 - self.point_type
        if len(self.axis_mult) != axes:
            raise ValidationError(f"type {self.point_type} points need {axes} axis multiplicities")
        for b in self.branches:
            if len(b.axis_mult) != axes:
                raise ValidationError(f"every branch needs {axes} axis multiplicities")
            if b.mu < 0 or min(b.axis_mult) < 1:
                raise ValidationError("branch invariants must be nonnegative, multiplicities positive")
        if self.mu < 0 or min(self.axis_mult) < 1:
            raise ValidationError("Milnor number must be nonnegative, multiplicities positive")
        for (i, j), v in self.intersections.items():
            if not 0 <= i < j < len(self.branches) or v < 0:
                raise ValidationError(f"bad intersection record {(i, j)}: {v}")


def transform_type1(n: int, data: LocalPointData) -> LocalPointData:
    """Invariants at a preimage of a point lying on exactly one axis."""
    if data.point_type != 1:
        raise ValidationError("transform_type1 needs a type 1 point")
    _check_degree(n)
    (m,) = data.axis_mult
    branches = tuple(
        Branch(
            n * b.mu + (b.axis_mult[0] - 1) * (n - 1),
            b.axis_mult,
            b.components * gcd(n, b.axis_mult[0]),
        )
        for b in data.branches
    )
    return replace(
        data,
        mu=n * data.mu + (m - 1) * (n - 1),
        branches=branches,
        intersections={ij: n * v for ij, v in data.intersections.items()},
    )


def transform_type0(n: int, data: LocalPointData) -> LocalPointData:
    """Invariants at the preimage of a vertex, using the point and branch formulas as stated.

    The point formula omits the ``-1`` that the branch formula carries
    inside the bracket; the two disagree on a smooth branch (see
    :func:`type0_point_mu_branchwise`).
    """
    if data.point_type != 0:
        raise ValidationError("transform_type0 needs a type 0 point")
    _check_degree(n)
    m1, m2 = data.axis_mult
    branches = tuple(
        Branch(
            n * n * b.mu + (n - 1) * (n * (sum(b.axis_mult) - 1) - 1),
            tuple(n * x for x in b.axis_mult),
            b.components * n * gcd(n, *b.axis_mult),
        )
        for b in data.branches
    )
    return replace(
        data,
        mu=n * n * data.mu + (n - 1) * (n * (m1 + m2) - 1),
        axis_mult=(n * m1, n * m2),
        branches=branches,
        intersections={ij: n * n * v for ij, v in data.intersections.items()},
    )


def type0_point_mu_branchwise(n: int, mu: int, m1: int, m2: int) -> int:
    """The vertex formula with the bracket of the branch formula."""
    return n * n * mu + (n - 1) * (n * (m1 + m2 - 1) - 1)


def _check_degree(n: int) -> None:
    if n < 1:
        raise ValidationError(f"cover degree must be positive, got {n}")


def real_part_cubic(a1, a2, a3) -> tuple[Fraction, Fraction, Fraction]:
    """Coefficients (b1, b2, b3) of q(y) = y^3 - b1 y^2 + b2 y - b3.

    If the a_i are the elementary symmetric functions of t_1, t_2, t_3 then
    the roots of q are the pairwise averages (t_i + t_j) / 2.
    """
    a1, a2, a3 = Fraction(a1), Fraction(a2), Fraction(a3)
    return a1, (a1 * a1 + a2) / 4, (a1 * a2 - a3) / 8

"""Closed-form counts: section-space dimensions, codimensions, Cox data.

Everything returns plain Python ints computed with exact arithmetic.
Where two independent routes to the same number exist they are both
evaluated and compared (see :func:`dim_section_space`), so a silent
formula transcription bug cannot survive.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import TYPE_CHECKING

from .errors import InternalError, RouteMismatch

if TYPE_CHECKING:
    from .spaces import SpaceSpec

__all__ = [
    "FormulaResult",
    "minor_multiplicity",
    "secant_codim",
    "dim_section_space",
    "section_space_routes",
    "weyl_dim",
    "plucker_relation_count",
    "ambient_projective_dim",
    "cox_generator_count",
    "dim_cox",
    "osculating_degree",
]


@dataclass(frozen=True)
class FormulaResult:
    """A computed count together with the identifier of the route used."""

    value: int
    route: str


def minor_multiplicity(k: int, h: int) -> int:
    """Vanishing order of the degree-k minor hypersurface along the rank-h locus.

    Zero when h > k: the minors of size k+1 do not vanish there at all.
    """
    if k < 1 or h < 1:
        raise ValueError(f"minor_multiplicity needs k, h >= 1, got k={k}, h={h}")
    return max(k - h + 1, 0)


def secant_codim(kind: str, n: int, m: int | None, h: int) -> int:
    """Codimension of the h-th secant variety of a Segre or Veronese variety.

    For ``segre`` the ambient is the space of (n+1) x (m+1) matrices; for
    ``veronese`` it is the space of symmetric (n+1) x (n+1) matrices and
    ``m`` is ignored.
    """
    if not 1 <= h <= n:
        raise ValueError(f"secant index h={h} out of range 1..{n}")
    if kind == "segre":
        if m is None:
            raise ValueError("segre codimension needs m")
        if m < n:
            raise ValueError(f"segre codimension needs n <= m, got n={n}, m={m}")
        return (n - h + 1) * (m - h + 1)
    if kind == "veronese":
        num = n * n + 3 * n - h * (2 * n - h + 3) + 2
        if num % 2:
            raise InternalError(
                f"veronese secant codimension numerator {num} is odd "
                f"at n={n}, h={h}"
            )
        return num // 2
    raise ValueError(f"unknown secant kind {kind!r}")


def section_space_routes(n: int, k: int) -> tuple[FormulaResult, FormulaResult]:
    """Both evaluations behind :func:`dim_section_space`, unreconciled."""
    if not 0 <= k <= n - 1:
        raise ValueError(f"section space index k={k} out of range 0..{n - 1}")
    closed = comb(n + 1, k + 1) * comb(n + 2, k + 1) // (k + 2)
    prod = Fraction(1)
    for j in range(k + 2, n + 2):
        prod *= Fraction(comb(j + 1, 2), comb(j - k, 2))
    if prod.denominator != 1:
        raise InternalError(
            f"product route for dim_section_space({n}, {k}) is not integral"
        )
    return (
        FormulaResult(closed, "binomial-quotient"),
        FormulaResult(prod.numerator, "telescoping-product"),
    )


def dim_section_space(n: int, k: int) -> int:
    """Dimension of the space of sections cutting the rank-(k+1) quadric locus.

    Evaluated by two independent formulas; a disagreement raises
    :class:`RouteMismatch` because it can only mean a transcription bug.
    """
    closed, prod = section_space_routes(n, k)
    if closed.value != prod.value:
        raise RouteMismatch(
            f"dim_section_space({n}, {k}): {closed.route} gives "
            f"{closed.value} but {prod.route} gives {prod.value}"
        )
    return closed.value


def weyl_dim(n: int, k: int) -> int:
    """Dimension of the irreducible GL(n+1) representation of weight 2w_{k+1}.

    Weyl's formula specializes to a product over pairs i <= k+1 < j; every
    other factor is 1.
    """
    if not 0 <= k <= n - 1:
        raise ValueError(f"weight index k={k} out of range 0..{n - 1}")
    num = 1
    den = 1
    for i in range(1, k + 2):
        for j in range(k + 2, n + 2):
            num *= j - i + 2
            den *= j - i
    if num % den:
        raise InternalError(f"weyl_dim({n}, {k}) product is not integral")
    return num // den


def plucker_relation_count(n: int, k: int) -> int:
    """Number of quadratic relations among the (k+1)-minors of a symmetric matrix.

    Counted as dim Sym^2 of the Pluecker coordinate space minus the span of
    the minors themselves.
    """
    b = comb(n + 1, k + 1)
    return comb(b + 1, 2) - dim_section_space(n, k)


def ambient_projective_dim(s: SpaceSpec) -> int:
    """Dimension of the projective space the tower of blow-ups starts from."""
    if s.family == "quadrics":
        return comb(s.n + 2, 2) - 1
    return s.n * s.m + s.n + s.m


def cox_generator_count(s: SpaceSpec) -> int:
    """Number of Cox ring generators of a full (not intermediate) space."""
    if s.stage is not None:
        raise ValueError("Cox generator count applies to full-stage spaces only")
    n, m = s.n, s.m
    if s.family == "quadrics":
        return sum(dim_section_space(n, k) for k in range(n)) + n
    total = sum(comb(n + 1, k) * comb(m + 1, k) for k in range(1, n + 2))
    return total + (n - 1 if n == m else n)


def dim_cox(s: SpaceSpec) -> int:
    """Krull dimension of the Cox ring: ambient dimension plus Picard rank."""
    return ambient_projective_dim(s) + s.picard_rank


def osculating_degree(n: int, r: int) -> tuple[int, int]:
    """Degree and ambient dimension of the r-th osculating projection image.

    Returns ``(degree, ambient)`` where the rational normal curve swept out
    has the given degree inside a projective space of the given dimension.
    """
    if not 0 <= r <= n - 1:
        raise ValueError(f"osculating index r={r} out of range 0..{n - 1}")
    degree = (r + 1) * (n - r)
    return degree, comb(n + 1, r + 1) * (degree + 1)

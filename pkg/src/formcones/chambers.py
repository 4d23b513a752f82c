"""Chamber decompositions of the effective cone for Picard rank 2 and 3.

The chamber fan is computed from the grading-matrix columns: two divisor
classes share a chamber exactly when they lie in the same positive hulls
of column subsets.  Rank 2 is an angular sweep; rank 3 intersects the
induced plane arrangement with an affine cross-section of the effective
cone and classifies one sample point per 2-cell.

Merged fans (stable-base-locus decompositions) are data-driven: the wall
removals and base-locus labels ship as checksummed fixtures, because the
geometry behind them is not reproduced algorithmically.  A merged chamber
need not be convex, so each one keeps its list of convex pieces.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key, lru_cache
from math import lcm
from typing import Sequence

from .cones import (
    Cone,
    cone_from_halfspaces,
    cone_from_rays,
    dual,
    extremal_rays,
    interior_point,
    intersect,
)
from .errors import (
    BoundaryPoint,
    DegenerateSpace,
    DimensionMismatch,
    InternalError,
    OutsideEffective,
    RankUnsupported,
)
from .linalg import Vec, kernel_basis, primitive
from .spaces import SpaceSpec, effective_cone, grading_matrix, nef_cone

__all__ = [
    "Chamber",
    "Wall",
    "ChamberFan",
    "gkz_fan",
    "locate",
    "adjacency_graph",
    "sbl_merge",
]


@dataclass(frozen=True)
class Chamber:
    """A full-dimensional chamber of the effective cone.

    ``rays`` bound the chamber; ``pieces`` are the convex cones whose
    union it is (a single piece unless chambers were merged); ``sample``
    is strictly interior to the union.
    """

    rays: tuple[Vec, ...]
    sample: Vec
    label: str | None = None
    pieces: tuple[tuple[Vec, ...], ...] = ()
    erased_walls: tuple[Vec, ...] = ()

    def convex_pieces(self) -> tuple[tuple[Vec, ...], ...]:
        return self.pieces if self.pieces else (self.rays,)


@dataclass(frozen=True)
class Wall:
    """Interior wall between two chambers, with its primitive normal."""

    first: int
    second: int
    normal: Vec


@dataclass(frozen=True)
class ChamberFan:
    space: SpaceSpec
    chambers: tuple[Chamber, ...]
    walls: tuple[Wall, ...]
    kind: str = "gkz"
    notes: tuple[str, ...] = ()


@lru_cache(maxsize=None)
def _cone_of(rho: int, rays: tuple[Vec, ...]) -> Cone:
    return cone_from_rays(rho, rays)


def _cross2(u: Vec, v: Vec) -> int:
    return u[0] * v[1] - u[1] * v[0]


def _undirected(v: Vec) -> Vec:
    for x in v:
        if x:
            return v if x > 0 else tuple(-y for y in v)
    raise InternalError("zero vector has no direction")


def _fan_rank2(s: SpaceSpec, cols: tuple[Vec, ...]) -> tuple[list[Chamber], list[Wall]]:
    # All columns lie in the pointed effective cone, so the cross-product
    # comparator is a total order; sweep from one extremal ray of Eff to
    # the other.
    dirs = sorted(set(cols), key=cmp_to_key(lambda u, v: _cross2(u, v)))
    chambers = []
    for a, b in zip(dirs, dirs[1:]):
        cone = _cone_of(2, tuple(sorted((a, b))))
        chambers.append(Chamber(rays=cone.rays, sample=primitive(
            tuple(x + y for x, y in zip(a, b)))))
    walls = []
    for i in range(len(chambers) - 1):
        shared = dirs[i + 1]
        normal = kernel_basis((shared,))[0]
        walls.append(Wall(i, i + 1, normal))
    return chambers, walls


def _section_point(ray: Vec, w: Vec) -> tuple[Fraction, ...]:
    h = sum(a * b for a, b in zip(w, ray))
    return tuple(Fraction(x, h) for x in ray)


def _split_convex(poly, normal):
    """Split a convex polygon (list of Fraction points) by a plane through 0."""
    signs = [sum(a * x for a, x in zip(normal, v)) for v in poly]
    if all(s >= 0 for s in signs) or all(s <= 0 for s in signs):
        return [poly]
    pos, neg = [], []
    k = len(poly)
    for i in range(k):
        v, s = poly[i], signs[i]
        if s >= 0:
            pos.append(v)
        if s <= 0:
            neg.append(v)
        vn, sn = poly[(i + 1) % k], signs[(i + 1) % k]
        if s * sn < 0:
            t = s / (s - sn)
            cut = tuple(a + t * (b - a) for a, b in zip(v, vn))
            pos.append(cut)
            neg.append(cut)
    return [pos, neg]


def _to_integer_point(v: Sequence[Fraction]) -> Vec:
    scale = lcm(*(x.denominator for x in v))
    return primitive(tuple(int(x * scale) for x in v))


def _gkz_chamber(rho: int, cols: tuple[Vec, ...], point: Vec,
                 facet_table: dict[int, tuple[Vec, ...]]) -> tuple[Vec, ...]:
    """Rays of the intersection of all column-subset hulls containing point."""
    normals: set[Vec] = set()
    found = False
    for mask in range(1, 1 << len(cols)):
        facets = facet_table.get(mask)
        if facets is None:
            gens = tuple(cols[i] for i in range(len(cols)) if mask >> i & 1)
            facets = _cone_of(rho, gens).facets
            facet_table[mask] = facets
        if all(sum(a * b for a, b in zip(f, point)) >= 0 for f in facets):
            found = True
            normals.update(facets)
    if not found:
        raise InternalError(f"sample point {point} escapes every column hull")
    return cone_from_halfspaces(rho, tuple(sorted(normals))).rays


def _fan_rank3(s: SpaceSpec, cols: tuple[Vec, ...]) -> tuple[list[Chamber], list[Wall]]:
    eff = effective_cone(s)
    planes: set[Vec] = set()
    for i in range(len(cols)):
        for j in range(i + 1, len(cols)):
            kb = kernel_basis((cols[i], cols[j]))
            if len(kb) == 1:
                planes.add(_undirected(kb[0]))

    w = interior_point(dual(eff))
    cells = [[_section_point(r, w) for r in extremal_rays(eff)]]
    for normal in sorted(planes):
        cells = [piece for poly in cells for piece in _split_convex(poly, normal)]

    facet_table: dict[int, tuple[Vec, ...]] = {}
    seen: dict[tuple[Vec, ...], None] = {}
    for poly in cells:
        centroid = tuple(sum(col) / len(poly) for col in zip(*poly))
        sample = _to_integer_point(centroid)
        rays = _gkz_chamber(3, cols, sample, facet_table)
        seen.setdefault(rays, None)

    chambers = [
        Chamber(rays=rays, sample=interior_point(_cone_of(3, rays)))
        for rays in seen
    ]
    walls = []
    for i in range(len(chambers)):
        ci = _cone_of(3, chambers[i].rays)
        for j in range(i + 1, len(chambers)):
            shared = intersect(ci, _cone_of(3, chambers[j].rays))
            if shared.dim == 2:
                normal = _undirected(kernel_basis(shared.rays)[0])
                walls.append(Wall(i, j, normal))
    return chambers, walls


def gkz_fan(s: SpaceSpec) -> ChamberFan:
    """Chamber decomposition of the effective cone from the grading columns.

    Supports Picard rank 2 and 3; the rank restriction is structural, not
    a missing feature: higher ranks would need the full Cox ideal.
    """
    rho = s.picard_rank
    if rho < 2:
        raise DegenerateSpace(
            f"{s.describe()} has Picard rank 1; there is no chamber structure"
        )
    if rho > 3:
        raise RankUnsupported(
            f"chamber enumeration supports Picard rank 2 and 3, "
            f"got rank {rho} for {s.describe()}"
        )
    cols = grading_matrix(s).distinct_coords()
    if rho == 2:
        chambers, walls = _fan_rank2(s, cols)
    else:
        chambers, walls = _fan_rank3(s, cols)

    order = sorted(range(len(chambers)), key=lambda i: chambers[i].rays)
    rank_of = {old: new for new, old in enumerate(order)}
    nef_rays = extremal_rays(nef_cone(s))
    relabeled = []
    for old in order:
        ch = chambers[old]
        label = "Nef" if ch.rays == nef_rays else None
        relabeled.append(Chamber(rays=ch.rays, sample=ch.sample, label=label))
    remapped = sorted(
        (Wall(min(rank_of[w.first], rank_of[w.second]),
              max(rank_of[w.first], rank_of[w.second]), w.normal)
         for w in walls),
        key=lambda w: (w.first, w.second, w.normal),
    )
    return ChamberFan(s, tuple(relabeled), tuple(remapped), kind="gkz")


def _strictly_inside(ch: Chamber, rho: int, d: Vec) -> bool:
    erased = {_undirected(n) for n in ch.erased_walls}
    inside_closed = False
    for piece in ch.convex_pieces():
        cone = _cone_of(rho, piece)
        if not cone.contains(d):
            continue
        inside_closed = True
        for f in cone.facets:
            if sum(a * b for a, b in zip(f, d)) == 0 and _undirected(f) not in erased:
                return False
    return inside_closed


def locate(f: ChamberFan, d: Sequence[int]) -> int:
    """Index of the chamber whose interior contains the divisor class ``d``.

    Raises :class:`OutsideEffective` when ``d`` is not effective and
    :class:`BoundaryPoint` when it sits on a wall or on the boundary of
    the effective cone.
    """
    rho = f.space.picard_rank
    d = d.coords if hasattr(d, "coords") else tuple(d)
    if len(d) != rho:
        raise DimensionMismatch(
            f"class of rank {len(d)} located in a rank-{rho} fan"
        )
    if not effective_cone(f.space).contains(d):
        raise OutsideEffective(f"{d} is not an effective class of {f.space.describe()}")
    containing = [
        i for i, ch in enumerate(f.chambers)
        if any(_cone_of(rho, piece).contains(d) for piece in ch.convex_pieces())
    ]
    if not containing:
        raise InternalError(f"{d} is effective but lies in no chamber")
    if len(containing) > 1:
        raise BoundaryPoint(f"{d} lies on a wall between chambers {containing}")
    idx = containing[0]
    if not _strictly_inside(f.chambers[idx], rho, d):
        raise BoundaryPoint(f"{d} lies on the boundary of chamber {idx}")
    return idx


def adjacency_graph(f: ChamberFan) -> tuple[Wall, ...]:
    """Interior walls only; facets of the effective cone are not listed."""
    return f.walls


def sbl_merge(f: ChamberFan, s: SpaceSpec, *,
              fixtures_dir=None) -> ChamberFan:
    """Merge chambers that share a stable base locus, using bundled data.

    The merged fan comes from reference fixtures keyed by the space; the
    fixture's pieces are validated against the computed fan so stale data
    cannot pass silently.  Raises :class:`NoReferenceData` when no merge
    data is bundled for ``s``.
    """
    if f.space != s:
        raise ValueError(
            f"fan belongs to {f.space.describe()}, not {s.describe()}"
        )
    from .refdata import load_sbl_fixture

    fixture = load_sbl_fixture(s, fixtures_dir)
    computed = {ch.rays for ch in f.chambers}
    fixture_pieces = {piece for ch in fixture.chambers for piece in ch.convex_pieces()}
    if computed != fixture_pieces:
        raise InternalError(
            f"merge fixture for {s.describe()} does not match the computed "
            f"fan: computed {len(computed)} chambers, fixture covers "
            f"{len(fixture_pieces)} pieces"
        )
    return ChamberFan(s, fixture.chambers, fixture.walls, kind="sbl",
                      notes=fixture.notes)

"""Rational polyhedral cones with exact double-description conversion.

A cone is stored through up to four vector lists: the generators or
halfspace normals it was built from, and the canonical minimal
representations derived from them.  Canonical form means: primitive
vectors, a lineality space (or implied-equality space on the facet side)
stored as plus/minus pairs of a reduced-echelon basis, pointed rays
reduced modulo that space, everything sorted lexicographically.  Two
equal cones therefore compare equal structurally.

The single conversion primitive is :func:`_polar`, an incremental double
description pass: minimal generators of ``{x : <a, x> >= 0}``.  Both
directions of ``dd_convert`` are instances of it, because the minimal
generators of the dual cone are exactly the irredundant facet normals of
the primal one.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import (
    DegenerateRay,
    DimensionMismatch,
    InternalError,
    NotFullDimensional,
    NotPointed,
)
from .linalg import (
    Mat,
    Vec,
    negate,
    primitive,
    rank,
    reduce_mod_rowspace,
    row_space_basis,
)

__all__ = [
    "Cone",
    "cone_from_rays",
    "cone_from_halfspaces",
    "dd_convert",
    "dual",
    "intersect",
    "extremal_rays",
    "contains",
    "interior_point",
]


def _bit_indices(mask: int):
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


def _polar(normals: Sequence[Vec], d: int) -> tuple[Mat, Mat]:
    """Minimal generators of ``{x in Q^d : <a, x> >= 0 for all a}``.

    Returns ``(lineality_basis, rays)`` in canonical form.  Constraints are
    processed in lexicographic order; adjacency of rays is decided by the
    algebraic rank test (tight constraints of both rays must have rank
    ``d - dim lineality - 2``), never by the combinatorial shortcut.
    """
    rows = sorted({primitive(a) for a in normals if any(a)})
    lin: list[Vec] = [tuple(1 if j == i else 0 for j in range(d)) for i in range(d)]
    rays: list[tuple[Vec, int]] = []
    rank_cache: dict[int, int] = {}

    for idx, a in enumerate(rows):
        bit = 1 << idx
        # If some lineality direction leaves the hyperplane of ``a``, it is
        # retired: it becomes the single ray off the hyperplane and every
        # other generator is projected along it onto the hyperplane.
        w = None
        for t, v in enumerate(lin):
            s = sum(p * q for p, q in zip(a, v))
            if s:
                w = v if s > 0 else negate(v)
                del lin[t]
                break
        if w is not None:
            aw = sum(p * q for p, q in zip(a, w))
            new_lin = []
            for v in lin:
                av = sum(p * q for p, q in zip(a, v))
                if av:
                    v = primitive(tuple(x * aw - y * av for x, y in zip(v, w)))
                new_lin.append(v)
            lin = new_lin
            new_rays = []
            for r, mask in rays:
                ar = sum(p * q for p, q in zip(a, r))
                if ar:
                    r = primitive(tuple(x * aw - y * ar for x, y in zip(r, w)))
                new_rays.append((r, mask | bit))
            new_rays.append((w, bit - 1))
            rays = new_rays
            continue

        pos: list[tuple[Vec, int, int]] = []
        neg: list[tuple[Vec, int, int]] = []
        zero: list[tuple[Vec, int]] = []
        for r, mask in rays:
            s = sum(p * q for p, q in zip(a, r))
            if s > 0:
                pos.append((r, mask, s))
            elif s < 0:
                neg.append((r, mask, s))
            else:
                zero.append((r, mask | bit))
        if not neg:
            rays = [(r, m) for r, m, _ in pos] + zero
            continue
        out = [(r, m) for r, m, _ in pos] + zero
        target = d - len(lin) - 2
        made: set[Vec] = set()
        for p, pmask, ap in pos:
            for nvec, nmask, an in neg:
                common = pmask & nmask
                if common.bit_count() < target:
                    continue
                rk = rank_cache.get(common)
                if rk is None:
                    rk = rank([rows[i] for i in _bit_indices(common)])
                    rank_cache[common] = rk
                if rk != target:
                    continue
                comb = primitive(
                    tuple(x * (-an) + y * ap for x, y in zip(p, nvec))
                )
                if comb in made:
                    continue
                made.add(comb)
                out.append((comb, common | bit))
        rays = out

    lin_basis = row_space_basis(lin, width=d)
    reduced: set[Vec] = set()
    for r, _ in rays:
        rr = reduce_mod_rowspace(r, lin_basis)
        if rr is not None:
            reduced.add(rr)
    return tuple(sorted(lin_basis)), tuple(sorted(reduced))


def _merge_pairs(lineality: Mat, pointed: Mat) -> Mat:
    vecs = list(pointed)
    for b in lineality:
        vecs.append(b)
        vecs.append(negate(b))
    return tuple(sorted(vecs))


def _validated(vectors: Iterable[Sequence[int]], d: int, what: str) -> Mat:
    out = set()
    for v in vectors:
        t = tuple(v)
        if len(t) != d:
            raise DimensionMismatch(
                f"{what} of length {len(t)} in ambient rank {d}"
            )
        for x in t:
            if type(x) is not int:
                raise TypeError(f"{what} entries must be plain ints, got {x!r}")
        out.add(primitive(t))
    return tuple(sorted(out))


class Cone:
    """A rational polyhedral cone in a fixed ambient rank.

    Build instances through :func:`cone_from_rays` or
    :func:`cone_from_halfspaces`.  The canonical minimal representations
    are computed lazily and cached; ``rays`` and ``facets`` list the
    lineality (respectively implied-equality) space as plus/minus pairs
    alongside the pointed generators (respectively proper facets).
    """

    __slots__ = (
        "ambient_rank",
        "_gen_rays",
        "_given_normals",
        "_vdata",
        "_hdata",
        "_dim",
    )

    def __init__(self, ambient_rank: int, *, gen_rays=None, given_normals=None,
                 vdata=None, hdata=None):
        if ambient_rank < 1:
            raise ValueError("ambient rank must be at least 1")
        self.ambient_rank = ambient_rank
        self._gen_rays = gen_rays
        self._given_normals = given_normals
        self._vdata = vdata
        self._hdata = hdata
        self._dim = None

    # -- representation plumbing -----------------------------------------

    def _halfspace_list(self) -> Mat:
        """Some valid list of defining normals (not necessarily minimal)."""
        if self._given_normals is not None:
            return self._given_normals
        lin, facets = self._hpair()
        return _merge_pairs(lin, facets)

    def _vpair(self) -> tuple[Mat, Mat]:
        """Canonical (lineality basis, pointed rays)."""
        if self._vdata is None:
            if self._given_normals is not None:
                self._vdata = _polar(self._given_normals, self.ambient_rank)
            else:
                lin, facets = self._hpair()
                self._vdata = _polar(_merge_pairs(lin, facets), self.ambient_rank)
        return self._vdata

    def _hpair(self) -> tuple[Mat, Mat]:
        """Canonical (implied-equality basis, proper facet normals)."""
        if self._hdata is None:
            if self._gen_rays is not None:
                self._hdata = _polar(self._gen_rays, self.ambient_rank)
            else:
                lin, rays = self._vpair()
                self._hdata = _polar(_merge_pairs(lin, rays), self.ambient_rank)
        return self._hdata

    # -- public views ----------------------------------------------------

    @property
    def rays(self) -> Mat:
        """Canonical minimal generators (lineality as plus/minus pairs)."""
        lin, pointed = self._vpair()
        return _merge_pairs(lin, pointed)

    @property
    def facets(self) -> Mat:
        """Canonical irredundant facet normals (equalities as pairs)."""
        lin, facets = self._hpair()
        return _merge_pairs(lin, facets)

    @property
    def lineality_dim(self) -> int:
        if self._vdata is not None:
            return len(self._vdata[0])
        # The lineality space is the kernel of any defining normal list.
        if self._given_normals is not None:
            return self.ambient_rank - rank(self._given_normals)
        return len(self._vpair()[0])

    @property
    def dim(self) -> int:
        if self._dim is None:
            if self._hdata is not None:
                self._dim = self.ambient_rank - len(self._hdata[0])
            elif self._gen_rays is not None:
                self._dim = rank(self._gen_rays)
            else:
                lin, pointed = self._vpair()
                self._dim = len(lin) + rank(pointed)
        return self._dim

    @property
    def is_pointed(self) -> bool:
        return self.lineality_dim == 0

    @property
    def is_full_dimensional(self) -> bool:
        return self.dim == self.ambient_rank

    def contains(self, v: Sequence[int]) -> bool:
        v = tuple(v)
        if len(v) != self.ambient_rank:
            raise DimensionMismatch(
                f"point of length {len(v)} in ambient rank {self.ambient_rank}"
            )
        return all(sum(a * b for a, b in zip(n, v)) >= 0
                   for n in self._halfspace_list())

    def strictly_contains(self, v: Sequence[int]) -> bool:
        """True when ``v`` satisfies every facet inequality strictly."""
        v = tuple(v)
        if len(v) != self.ambient_rank:
            raise DimensionMismatch(
                f"point of length {len(v)} in ambient rank {self.ambient_rank}"
            )
        lin, facets = self._hpair()
        if lin:
            return False
        return all(sum(a * b for a, b in zip(n, v)) > 0 for n in facets)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Cone):
            return NotImplemented
        return (self.ambient_rank == other.ambient_rank
                and self.rays == other.rays)

    def __hash__(self) -> int:
        return hash((self.ambient_rank, self.rays))

    def __repr__(self) -> str:
        parts = [f"ambient_rank={self.ambient_rank}"]
        if self._vdata is not None:
            parts.append(f"rays={len(self.rays)}")
        elif self._gen_rays is not None:
            parts.append(f"generators={len(self._gen_rays)}")
        if self._hdata is not None:
            parts.append(f"facets={len(self.facets)}")
        elif self._given_normals is not None:
            parts.append(f"normals={len(self._given_normals)}")
        return f"Cone({', '.join(parts)})"


def cone_from_rays(ambient_rank: int, rays: Iterable[Sequence[int]]) -> Cone:
    """Cone generated by integer ray vectors.

    Zero vectors raise :class:`DegenerateRay`.  An empty list gives the
    zero cone.
    """
    gens = _validated(rays, ambient_rank, "ray")
    return Cone(ambient_rank, gen_rays=gens)


def cone_from_halfspaces(ambient_rank: int,
                         normals: Iterable[Sequence[int]]) -> Cone:
    """Cone of points satisfying ``<a, x> >= 0`` for every normal ``a``.

    An empty list gives the full space.  Redundant normals are tolerated;
    the canonical facet list prunes them.
    """
    ns = _validated(normals, ambient_rank, "normal")
    return Cone(ambient_rank, given_normals=ns)


def dd_convert(c: Cone) -> Cone:
    """Ensure both canonical representations are present.

    Idempotent: the canonical lists depend only on the cone, not on how it
    was described.
    """
    c._vpair()
    c._hpair()
    return c


def dual(c: Cone) -> Cone:
    """The dual cone ``{a : <a, x> >= 0 for all x in c}``.

    Pure representation swap: the facets of ``c`` generate the dual and
    the rays of ``c`` are its facet normals, equality/lineality roles
    exchanged.  Hence ``dual(dual(c)) == c`` on canonical forms.
    """
    dd_convert(c)
    lin, pointed = c._vpair()
    eqs, facets = c._hpair()
    return Cone(c.ambient_rank, vdata=(eqs, facets), hdata=(lin, pointed))


def intersect(a: Cone, b: Cone) -> Cone:
    """Intersection, by concatenating halfspace descriptions."""
    if a.ambient_rank != b.ambient_rank:
        raise DimensionMismatch(
            f"ambient ranks {a.ambient_rank} and {b.ambient_rank} differ"
        )
    normals = set(a._halfspace_list()) | set(b._halfspace_list())
    return Cone(a.ambient_rank, given_normals=tuple(sorted(normals)))


def extremal_rays(c: Cone, *, certify: bool = True) -> Mat:
    """Extremal rays of a pointed cone, in canonical order.

    With ``certify`` (the default) each ray is checked by the rank test:
    the defining normals tight at the ray must have rank
    ``ambient_rank - 1``.  A failure raises :class:`InternalError`, since
    the canonical rays are extremal by construction.
    """
    lin, pointed = c._vpair()
    if lin:
        raise NotPointed(
            f"cone has lineality dimension {len(lin)}; extremal rays are "
            "only defined for pointed cones"
        )
    if certify and pointed:
        normals = c._halfspace_list()
        for r in pointed:
            tight = [n for n in normals
                     if sum(a * b for a, b in zip(n, r)) == 0]
            if rank(tight) != c.ambient_rank - 1:
                raise InternalError(
                    f"extremality certificate failed for ray {r}"
                )
    return pointed


def contains(c: Cone, v: Sequence[int]) -> bool:
    return c.contains(v)


def interior_point(c: Cone) -> Vec:
    """A strictly interior primitive point of a full-dimensional cone.

    The sum of the canonical pointed rays works: any facet normal that
    vanished on all of them would vanish on the whole cone.  For the full
    space (no facets at all) the origin is returned.
    """
    if not c.is_full_dimensional:
        raise NotFullDimensional(
            f"cone has dimension {c.dim} in ambient rank {c.ambient_rank}"
        )
    _, pointed = c._vpair()
    if not pointed:
        return (0,) * c.ambient_rank
    total = tuple(sum(col) for col in zip(*pointed))
    try:
        return primitive(total)
    except DegenerateRay:
        raise InternalError(
            "pointed generators of a full-dimensional cone summed to zero"
        ) from None

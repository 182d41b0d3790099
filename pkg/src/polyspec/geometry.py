"""Lattice simplices and H-represented polytopes with the origin interior.

A ``Simplex`` is n+1 integer vertices in dimension n whose interior contains
the origin; construction validates this and rejects anything else with a
typed error, because every downstream formula depends on it. An ``HPolytope``
carries the facet-inequality presentation <u_F, x> <= 1 together with the
vertex list; it supplies the piecewise-linear facet-distance function nu and
the membership test the enumeration oracle runs on.
"""

from __future__ import annotations

import math
import operator
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from .errors import (
    DegenerateSimplex,
    InternalInconsistency,
    InvalidInput,
    OriginNotInterior,
)
from .exact import RatLike
from .linalg import det_bareiss, rank_exact, solve_exact

LatticePoint = tuple[int, ...]


def _as_lattice_point(point: Iterable, dim: int | None = None) -> LatticePoint:
    try:
        pt = tuple(operator.index(x) for x in point)
    except TypeError as exc:
        raise InvalidInput(f"vertex coordinates must be integers: {point!r}") from exc
    if dim is not None and len(pt) != dim:
        raise InvalidInput(
            f"vertex {pt} has {len(pt)} coordinates, expected {dim}"
        )
    return pt


def _dot(u: Sequence[Fraction], v: Sequence[int]) -> Fraction:
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


@dataclass(frozen=True)
class WeightVector:
    """Vertex weights of a simplex: q_i = |det of all vertices except v_i|.

    Entries follow the vertex order of the owning simplex, so that
    sum(q_i * v_i) = 0 holds coordinatewise.
    """

    q: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "q", tuple(operator.index(x) for x in self.q))
        if not self.q or any(x <= 0 for x in self.q):
            raise InvalidInput(f"weight entries must be positive: {self.q}")

    @property
    def milnor(self) -> int:
        """Normalized volume of the simplex: the sum of the weights."""
        return sum(self.q)

    @property
    def is_reduced(self) -> bool:
        """True iff the weights are coprime as a tuple."""
        return math.gcd(*self.q) == 1

    def __iter__(self) -> Iterator[int]:
        return iter(self.q)

    def __len__(self) -> int:
        return len(self.q)

    def __getitem__(self, i: int) -> int:
        return self.q[i]


def origin_barycentric(vertices: Sequence[Sequence[int]]) -> tuple[Fraction, ...]:
    """Barycentric coordinates of the origin in the given n+1 points.

    Returns the unique lambda with sum(lambda_i * v_i) = 0 and
    sum(lambda_i) = 1. The origin is interior exactly when every entry is
    strictly positive; this function does not require that, so callers can
    inspect failures. Raises DegenerateSimplex if the points are affinely
    dependent.
    """
    pts = [_as_lattice_point(v) for v in vertices]
    if not pts:
        raise InvalidInput("no vertices given")
    n = len(pts[0])
    if len(pts) != n + 1:
        raise InvalidInput(f"need {n + 1} vertices in dimension {n}, got {len(pts)}")
    for p in pts:
        _as_lattice_point(p, n)
    # Columns are the vertices, plus a final row of ones for the affine
    # constraint; the right side is (0, ..., 0, 1).
    matrix = [[pts[j][d] for j in range(n + 1)] for d in range(n)]
    matrix.append([1] * (n + 1))
    rhs = [0] * n + [1]
    try:
        solution = solve_exact(matrix, rhs)
    except ValueError as exc:
        raise DegenerateSimplex(
            f"vertices are affinely dependent: {pts}"
        ) from exc
    return tuple(solution)


class Simplex:
    """An n-dimensional lattice simplex whose interior contains the origin.

    Construction validates all invariants: exactly n+1 integer vertices,
    affine independence, and strictly positive barycentric coordinates for
    the origin. The weight vector and facet presentation are computed on
    first use and cached.
    """

    def __init__(self, vertices: Sequence[Sequence[int]]) -> None:
        pts = [_as_lattice_point(v) for v in vertices]
        if not pts:
            raise InvalidInput("no vertices given")
        n = len(pts[0])
        if n < 1:
            raise InvalidInput("dimension must be at least 1")
        if len(pts) != n + 1:
            raise InvalidInput(
                f"a simplex in dimension {n} needs {n + 1} vertices, got {len(pts)}"
            )
        for p in pts:
            _as_lattice_point(p, n)
        self.dim = n
        self.vertices: tuple[LatticePoint, ...] = tuple(pts)
        bary = origin_barycentric(self.vertices)
        if any(x <= 0 for x in bary):
            raise OriginNotInterior(
                f"origin has barycentric coordinates {tuple(str(b) for b in bary)}; "
                "all must be strictly positive"
            )
        self._barycentric = bary
        self._weight = self._compute_weight()

    def _compute_weight(self) -> WeightVector:
        n = self.dim
        qs = []
        for i in range(n + 1):
            minor = [self.vertices[j] for j in range(n + 1) if j != i]
            qs.append(abs(det_bareiss(minor)))
        if any(q == 0 for q in qs):
            raise DegenerateSimplex(
                f"a vertex-deleted determinant vanishes: weights {qs}"
            )
        weight = WeightVector(tuple(qs))
        # The absolute determinants and the barycentric coordinates are two
        # routes to the same weights (lambda_i = q_i / mu); they must agree.
        mu = weight.milnor
        for q, lam in zip(qs, self._barycentric):
            if Fraction(q, mu) != lam:
                raise InternalInconsistency(
                    f"weights {qs} disagree with barycentric coordinates "
                    f"{tuple(str(b) for b in self._barycentric)}"
                )
        return weight

    @property
    def weight(self) -> WeightVector:
        return self._weight

    @property
    def barycentric(self) -> tuple[Fraction, ...]:
        """Barycentric coordinates of the origin; equals q_i / mu."""
        return self._barycentric

    @cached_property
    def hrep(self) -> "HPolytope":
        """Facet presentation: for each i, the normal u with <u, v_j> = 1
        for every j != i."""
        n = self.dim
        normals = []
        for i in range(n + 1):
            rows = [self.vertices[j] for j in range(n + 1) if j != i]
            try:
                u = solve_exact(rows, [1] * n)
            except ValueError as exc:
                raise DegenerateSimplex(
                    f"facet system omitting vertex {i} is singular"
                ) from exc
            normals.append(tuple(u))
        return HPolytope(normals, self.vertices)

    def __repr__(self) -> str:
        return f"Simplex({list(self.vertices)!r})"


class HPolytope:
    """A lattice polytope given by facet inequalities <u_F, x> <= 1 plus its
    vertex list.

    The origin is interior by construction of the presentation (every
    inequality evaluates to 0 < 1 there). Validation checks that every
    vertex is feasible, lies on at least n facets, and that every facet is
    supported by at least n affinely independent vertices.
    """

    def __init__(
        self,
        facet_normals: Sequence[Sequence[RatLike]],
        vertices: Sequence[Sequence[int]],
        validate: bool = True,
    ) -> None:
        pts = [_as_lattice_point(v) for v in vertices]
        if not pts:
            raise InvalidInput("no vertices given")
        n = len(pts[0])
        if n < 1:
            raise InvalidInput("dimension must be at least 1")
        for p in pts:
            _as_lattice_point(p, n)
        normals = []
        for u in facet_normals:
            row = tuple(Fraction(x) for x in u)
            if len(row) != n:
                raise InvalidInput(
                    f"facet normal {row} has {len(row)} coordinates, expected {n}"
                )
            normals.append(row)
        if not normals:
            raise InvalidInput("no facet normals given")
        self.dim = n
        self.vertices: tuple[LatticePoint, ...] = tuple(pts)
        self.facet_normals: tuple[tuple[Fraction, ...], ...] = tuple(normals)
        if validate:
            self._validate()

    def _validate(self) -> None:
        n = self.dim
        on_facet: list[list[LatticePoint]] = [[] for _ in self.facet_normals]
        for v in self.vertices:
            equalities = 0
            for f, u in enumerate(self.facet_normals):
                value = _dot(u, v)
                if value > 1:
                    raise InvalidInput(
                        f"vertex {v} violates facet inequality: <{tuple(map(str, u))}, v> = {value} > 1"
                    )
                if value == 1:
                    equalities += 1
                    on_facet[f].append(v)
            if equalities < n:
                raise InvalidInput(
                    f"vertex {v} lies on only {equalities} facets; "
                    f"a vertex must lie on at least {n}"
                )
        for f, supported in enumerate(on_facet):
            if len(supported) < n:
                raise InvalidInput(
                    f"facet {f} touches only {len(supported)} vertices; needs {n}"
                )
            base = supported[0]
            diffs = [
                [a - b for a, b in zip(p, base)] for p in supported[1:]
            ]
            if rank_exact(diffs) < n - 1:
                raise InvalidInput(
                    f"facet {f} lacks {n} affinely independent supporting vertices"
                )

    @cached_property
    def scaled_normals(self) -> tuple[tuple[tuple[int, ...], ...], tuple[int, ...], int]:
        """Integer form of the normals: (w_F, L_F) with u_F = w_F / L_F, plus
        the common denominator L = lcm(L_F). Lets membership and nu run on
        integers only."""
        ws = []
        ls = []
        for u in self.facet_normals:
            lf = math.lcm(*(x.denominator for x in u))
            ws.append(tuple(int(x * lf) for x in u))
            ls.append(lf)
        return tuple(ws), tuple(ls), math.lcm(*ls)

    @property
    def common_denominator(self) -> int:
        return self.scaled_normals[2]

    def nu(self, point: Sequence[int]) -> Fraction:
        """Facet-distance function: max over facets of <u_F, point>.

        Takes the value 0 at the origin, 1 on the boundary, and m on the
        boundary of the m-th dilate.
        """
        v = _as_lattice_point(point, self.dim)
        ws, ls, _ = self.scaled_normals
        return max(
            Fraction(sum(a * b for a, b in zip(w, v)), lf)
            for w, lf in zip(ws, ls)
        )

    def nu_scaled(self, point: Sequence[int]) -> tuple[int, int]:
        """nu as an exact pair (T, L) with nu = T / L and L fixed per polytope."""
        v = _as_lattice_point(point, self.dim)
        ws, ls, common = self.scaled_normals
        t = max(
            sum(a * b for a, b in zip(w, v)) * (common // lf)
            for w, lf in zip(ws, ls)
        )
        return t, common

    def contains(self, point: Sequence[int], dilate: int = 1) -> bool:
        """Membership of an integer point in the dilate-th dilate."""
        v = _as_lattice_point(point, self.dim)
        ws, ls, _ = self.scaled_normals
        return all(
            sum(a * b for a, b in zip(w, v)) <= dilate * lf
            for w, lf in zip(ws, ls)
        )

    def polar_vertices(self) -> tuple[tuple[Fraction, ...], ...]:
        """Vertices of the polar dual: exactly the facet normals."""
        return self.facet_normals

    @property
    def is_reflexive(self) -> bool:
        """True iff every facet normal is integral, i.e. the polar dual is
        again a lattice polytope."""
        return all(
            x.denominator == 1 for u in self.facet_normals for x in u
        )

    def __repr__(self) -> str:
        return (
            f"HPolytope(dim={self.dim}, facets={len(self.facet_normals)}, "
            f"vertices={len(self.vertices)})"
        )

"""Rational polyhedral cones and fans.

A :class:`Cone` is identified by the sorted tuple of its primitive ray
generators; the zero cone has no rays.  A :class:`Fan` is a finite set of
cones together with an orientation sign per cone.  Signs are relative to the
canonical orientation of each cone, the one given by the Hermite basis of the
saturated span.  For a full-dimensional cone that basis is the identity, so
the default orientation (all signs ``+1``) orients every maximal cone of a
complete fan by the standard orientation of ``N_R``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from math import gcd
from typing import Iterable, Mapping, Sequence

from .errors import ConeNotInFan, NotFacet, NotStrictlyConvex
from .linalg import (
    IntMatrix,
    _rank_rows,
    clear_denominators,
    det,
    hnf_basis,
    kernel_basis,
    primitive,
    solve_integer,
    solve_rational,
)

Vector = tuple[int, ...]


def _dot(u: Sequence[int], v: Sequence[int]) -> int:
    return sum(a * b for a, b in zip(u, v))


def _sgn(x: int) -> int:
    return (x > 0) - (x < 0)


# ---------------------------------------------------------------------------
# Double description
# ---------------------------------------------------------------------------

def extreme_rays(constraints: Sequence[Sequence[int]], dim: int) -> list[Vector]:
    """Extreme rays of ``{y in R^dim : a . y >= 0 for every constraint a}``.

    Incremental double description in exact integer arithmetic.  The
    constraint matrix must have rank ``dim`` (the cone is pointed); new rays
    are formed only from adjacent pairs, using the algebraic rank test.
    Returned rays are primitive and sorted.
    """
    A = [tuple(int(x) for x in a) for a in constraints if any(a)]
    if dim == 0:
        return []
    start: list[int] = []
    for i, a in enumerate(A):
        if _rank_rows([list(A[j]) for j in start] + [list(a)]) > len(start):
            start.append(i)
            if len(start) == dim:
                break
    if len(start) < dim:
        raise ValueError("constraint system has a lineality space")

    rays: list[Vector] = []
    AK = [A[j] for j in start]
    for i in range(dim):
        e = [int(i == j) for j in range(dim)]
        rays.append(clear_denominators(solve_rational(AK, e)))

    done = list(start)
    for idx in range(len(A)):
        if idx in start:
            continue
        a = A[idx]
        vals = [_dot(a, r) for r in rays]
        pos = [r for r, v in zip(rays, vals) if v > 0]
        neg = [r for r, v in zip(rays, vals) if v < 0]
        new = [r for r, v in zip(rays, vals) if v >= 0]
        if pos and neg:
            tight = {r: frozenset(j for j in done if _dot(A[j], r) == 0) for r in pos + neg}
            for p in pos:
                ap = _dot(a, p)
                for q in neg:
                    common = tight[p] & tight[q]
                    if len(common) < dim - 2:
                        continue
                    if _rank_rows([list(A[j]) for j in common]) != dim - 2:
                        continue
                    aq = _dot(a, q)
                    new.append(primitive([ap * x - aq * y for x, y in zip(q, p)]))
        rays = sorted(set(new))
        done.append(idx)
    return sorted(set(rays))


# ---------------------------------------------------------------------------
# Cones
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Cone:
    """Cone in ``N = Z^ambient`` generated by ``rays`` (sorted, canonical form).

    The raw constructor does not check anything; use :meth:`from_rays` or
    :meth:`from_generators` for normalized input.
    """

    ambient: int
    rays: tuple[Vector, ...]

    @classmethod
    def from_rays(cls, rays: Iterable[Sequence[int]], ambient: int | None = None) -> Cone:
        rays = [tuple(int(x) for x in r) for r in rays]
        if ambient is None:
            if not rays:
                raise ValueError("ambient dimension needed for the zero cone")
            ambient = len(rays[0])
        if any(len(r) != ambient for r in rays):
            raise ValueError("ray of wrong length")
        return cls(ambient, tuple(sorted({primitive(r) for r in rays if any(r)})))

    @classmethod
    def zero(cls, ambient: int) -> Cone:
        return cls(ambient, ())

    @classmethod
    def from_generators(cls, gens: Iterable[Sequence[int]], ambient: int) -> Cone:
        """Cone generated by ``gens``, reduced to its extreme rays."""
        cone = cls.from_rays(gens, ambient)
        normals = cone._span_normals  # raises NotStrictlyConvex
        return cls(ambient, cone._extreme_subset(normals))

    # -- basic invariants -------------------------------------------------
    @cached_property
    def dim(self) -> int:
        return _rank_rows([list(r) for r in self.rays])

    @property
    def codim(self) -> int:
        return self.ambient - self.dim

    @property
    def is_zero(self) -> bool:
        return not self.rays

    @property
    def sort_key(self):
        return (self.dim, self.rays)

    def __lt__(self, other: Cone) -> bool:
        return self.sort_key < other.sort_key

    def __str__(self) -> str:
        if not self.rays:
            return "0"
        return "cone(" + ", ".join("(" + ",".join(map(str, r)) + ")" for r in self.rays) + ")"

    @cached_property
    def basis(self) -> IntMatrix:
        """Hermite basis of ``R sigma intersected with N`` (columns); the canonical orientation."""
        return hnf_basis(self.rays, self.ambient)

    @cached_property
    def _pivot_rows(self) -> tuple[int, ...]:
        # rows of `basis` carrying a nonzero maximal minor
        chosen: list[int] = []
        B = self.basis
        for i in range(B.rows):
            if _rank_rows([list(B.row(j)) for j in chosen] + [list(B.row(i))]) > len(chosen):
                chosen.append(i)
        return tuple(chosen)

    @cached_property
    def _ray_coords(self) -> IntMatrix:
        R = IntMatrix.from_columns(self.rays, self.ambient)
        X = solve_integer(self.basis, R)
        assert X is not None
        return X

    @cached_property
    def _span_normals(self) -> list[Vector]:
        """Facet normals in coordinates of :attr:`basis`."""
        d = self.dim
        if d == 0:
            return []
        coords = [self._ray_coords.column(j) for j in range(len(self.rays))]
        try:
            normals = extreme_rays(coords, d)
        except ValueError:
            normals = []
        total = [sum(col) for col in zip(*normals)] if normals else [0] * d
        if not normals or any(_dot(total, c) <= 0 for c in coords):
            raise NotStrictlyConvex(f"{self} contains a line")
        return normals

    @cached_property
    def facet_normals(self) -> tuple[Vector, ...]:
        """Primitive vectors of ``M`` cutting out the facets of the cone inside its span.

        Each normal is only determined modulo the orthogonal lattice; the
        representative is the deterministic integral lift of the normal
        computed in span coordinates.
        """
        out = []
        Bt = self.basis.T
        for nu in self._span_normals:
            u = solve_integer(Bt, IntMatrix.from_columns([nu], len(nu)))
            assert u is not None
            out.append(u.column(0))
        return tuple(out)

    def _extreme_subset(self, normals) -> tuple[Vector, ...]:
        d = self.dim
        keep = []
        for j, r in enumerate(self.rays):
            c = self._ray_coords.column(j)
            tight = [list(nu) for nu in normals if _dot(nu, c) == 0]
            if _rank_rows(tight) == d - 1:
                keep.append(r)
        return tuple(keep)

    @cached_property
    def is_strictly_convex(self) -> bool:
        try:
            self._span_normals
        except NotStrictlyConvex:
            return False
        return True

    @cached_property
    def redundant_rays(self) -> tuple[Vector, ...]:
        """Listed generators that are not extreme rays."""
        extreme = set(self._extreme_subset(self._span_normals))
        return tuple(r for r in self.rays if r not in extreme)

    @cached_property
    def orthogonal_basis(self) -> IntMatrix:
        """Hermite basis (columns) of ``sigma-perp intersected with M``; rank = codim."""
        if not self.rays:
            return IntMatrix.identity(self.ambient)
        return kernel_basis(IntMatrix.from_rows(self.rays, self.ambient))

    def contains(self, x: Sequence[int]) -> bool:
        """Exact membership test."""
        x = tuple(x)
        if not self.rays:
            return not any(x)
        if _rank_rows([list(r) for r in self.rays] + [list(x)]) > self.dim:
            return False
        return all(_dot(u, x) >= 0 for u in self.facet_normals)

    def face_ray_sets(self) -> frozenset[frozenset[Vector]]:
        return frozenset(frozenset(f.rays) for f in self.faces())

    def faces(self) -> list[Cone]:
        return faces(self)


def dual_description(rays: Iterable[Sequence[int]], ambient: int | None = None) -> tuple[Vector, ...]:
    """Facet normals of the cone generated by ``rays``.

    Returns a minimal list of primitive ``u`` in ``M`` such that the cone is
    its span intersected with the half-spaces ``<u, x> >= 0``.  Raises
    :class:`NotStrictlyConvex` if the cone contains a line.
    """
    return Cone.from_rays(rays, ambient).facet_normals


def faces(sigma: Cone) -> list[Cone]:
    """All faces of ``sigma``, from the zero cone up to ``sigma``, sorted.

    Faces are the intersections of subsets of facets; the closure is built
    by intersecting repeatedly instead of enumerating every subset.
    """
    if sigma.dim == 0:
        return [sigma]
    coords = [sigma._ray_coords.column(j) for j in range(len(sigma.rays))]
    facets = []
    for nu in sigma._span_normals:
        facets.append(frozenset(r for r, c in zip(sigma.rays, coords) if _dot(nu, c) == 0))
    found = {frozenset(sigma.rays)}
    frontier = set(facets)
    while frontier:
        found |= frontier
        nxt = set()
        for F in frontier:
            for G in facets:
                H = F & G
                if H not in found:
                    nxt.add(H)
        frontier = nxt
    return sorted(Cone(sigma.ambient, tuple(sorted(F))) for F in found)


def incidence_sign(
    tau: Cone,
    sigma: Cone,
    *,
    u: Sequence[int] | None = None,
    w: Sequence[int] | None = None,
    tau_orientation: int = 1,
    sigma_orientation: int = 1,
) -> int:
    """Compare the orientation ``sigma`` induces on its facet ``tau`` with ``tau``'s own.

    The induced orientation of ``tau`` is the one for which ``(w, tau basis)``
    is a positive basis of ``R sigma``, where ``w`` is any vector of
    ``R sigma`` with ``<u, w> > 0`` and ``u`` cuts out ``tau``.  By default
    ``u`` is the stored facet normal and ``w`` the sum of the rays of
    ``sigma`` off ``tau``.  Orientations are signs relative to the canonical
    Hermite bases.
    """
    if sigma.dim != tau.dim + 1 or not set(tau.rays) <= set(sigma.rays):
        raise NotFacet(f"{tau} is not a facet of {sigma}")
    tau_set = frozenset(tau.rays)
    if u is None:
        for cand in sigma.facet_normals:
            if frozenset(r for r in sigma.rays if _dot(cand, r) == 0) == tau_set:
                u = cand
                break
        else:
            raise NotFacet(f"{tau} is not a facet of {sigma}")
    else:
        u = tuple(u)
        if any(_dot(u, r) < 0 for r in sigma.rays) or frozenset(
            r for r in sigma.rays if _dot(u, r) == 0
        ) != tau_set:
            raise ValueError("u does not cut out tau from sigma")
    if w is None:
        off = [r for r in sigma.rays if _dot(u, r) > 0]
        w = tuple(sum(col) for col in zip(*off))
    else:
        w = tuple(w)
        if _dot(u, w) <= 0:
            raise ValueError("w must pair positively with u")
        if _rank_rows([list(r) for r in sigma.rays] + [list(w)]) > sigma.dim:
            raise ValueError("w is not in the span of sigma")
    rows = sigma._pivot_rows
    X = IntMatrix.from_columns([w] + tau.basis.columns(), sigma.ambient)
    s = _sgn(det(X.submatrix(rows, range(X.cols)))) * _sgn(
        det(sigma.basis.submatrix(rows, range(sigma.dim)))
    )
    if s == 0:
        raise ValueError("degenerate frame; w lies in the span of tau")
    return s * tau_orientation * sigma_orientation


# ---------------------------------------------------------------------------
# Fans
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Fan:
    """A finite set of cones in ``Z^rank`` with one orientation sign per cone.

    ``cones`` is kept in canonical order (dimension, then sorted rays) and
    ``orientation[i]`` is the sign of ``cones[i]`` relative to its canonical
    Hermite orientation.  Equality compares rank, cones and orientation.
    """

    rank: int
    cones: tuple[Cone, ...]
    orientation: tuple[int, ...] = ()
    name: str | None = field(default=None, compare=False)

    def __post_init__(self):
        signs = self.orientation or (1,) * len(self.cones)
        if len(signs) != len(self.cones):
            raise ValueError("one orientation sign per cone")
        if any(s not in (1, -1) for s in signs):
            raise ValueError("orientation signs must be +1 or -1")
        if any(c.ambient != self.rank for c in self.cones):
            raise ValueError("cone in the wrong lattice")
        pairs = sorted(dict(zip(self.cones, signs)).items(), key=lambda p: p[0].sort_key)
        object.__setattr__(self, "cones", tuple(c for c, _ in pairs))
        object.__setattr__(self, "orientation", tuple(s for _, s in pairs))

    # -- construction -----------------------------------------------------
    @classmethod
    def from_max_cones(
        cls,
        rank: int,
        rays: Sequence[Sequence[int]],
        max_cones: Sequence[Sequence[int]],
        name: str | None = None,
    ) -> Fan:
        """Fan generated by the given cones and all their faces."""
        cones: set[Cone] = {Cone.zero(rank)}
        for idx in max_cones:
            sigma = Cone.from_rays([rays[i] for i in idx], rank)
            if sigma.is_strictly_convex:
                cones.update(faces(sigma))
            else:
                cones.add(sigma)
        return cls(rank, tuple(cones), name=name)

    def with_orientation(self, signs: Mapping[Cone, int] | Sequence[int]) -> Fan:
        if isinstance(signs, Mapping):
            signs = tuple(signs.get(c, 1) for c in self.cones)
        return Fan(self.rank, self.cones, tuple(signs), name=self.name)

    def default_oriented(self) -> Fan:
        return Fan(self.rank, self.cones, name=self.name)

    def scrambled(self, rng: random.Random) -> Fan:
        """Same cones, uniformly random orientation signs."""
        return self.with_orientation(tuple(rng.choice((1, -1)) for _ in self.cones))

    # -- lookup -----------------------------------------------------------
    @cached_property
    def _index(self) -> dict[Cone, int]:
        return {c: i for i, c in enumerate(self.cones)}

    def __contains__(self, cone: Cone) -> bool:
        return cone in self._index

    def index(self, cone: Cone) -> int:
        try:
            return self._index[cone]
        except KeyError:
            raise ConeNotInFan(f"{cone} is not in the fan") from None

    def sign(self, cone: Cone) -> int:
        return self.orientation[self.index(cone)]

    def oriented_basis(self, cone: Cone) -> IntMatrix:
        """Basis of ``R cone`` in the fan's orientation (first column flipped if negative)."""
        B = self.basis_of(cone)
        if self.sign(cone) == 1 or B.cols == 0:
            return B
        cols = B.columns()
        cols[0] = tuple(-x for x in cols[0])
        return IntMatrix.from_columns(cols, B.rows)

    @staticmethod
    def basis_of(cone: Cone) -> IntMatrix:
        return cone.basis

    @cached_property
    def zero_cone(self) -> Cone:
        return Cone.zero(self.rank)

    @cached_property
    def _faces(self) -> dict[Cone, frozenset[Cone]]:
        out = {}
        for c in self.cones:
            out[c] = frozenset(faces(c)) if c.is_strictly_convex else frozenset([c])
        return out

    def faces_of(self, sigma: Cone) -> frozenset[Cone]:
        self.index(sigma)
        return self._faces[sigma]

    def is_face(self, tau: Cone, sigma: Cone) -> bool:
        return tau in self._faces.get(sigma, ())

    @cached_property
    def _cofaces(self) -> dict[Cone, tuple[Cone, ...]]:
        out: dict[Cone, list[Cone]] = {c: [] for c in self.cones}
        for s in self.cones:
            for t in self._faces[s]:
                if t in out:
                    out[t].append(s)
        return {t: tuple(sorted(v)) for t, v in out.items()}

    def star(self, sigma: Cone) -> tuple[Cone, ...]:
        """Cones of the fan having ``sigma`` as a face (``sigma`` included)."""
        self.index(sigma)
        return self._cofaces[sigma]

    @cached_property
    def face_relation(self) -> frozenset[tuple[Cone, Cone]]:
        return frozenset((t, s) for s in self.cones for t in self._faces[s] if t in self)

    @cached_property
    def codim_index(self) -> dict[int, tuple[Cone, ...]]:
        """``k -> cones of codimension k``, each list in canonical order."""
        out = {k: [] for k in range(self.rank + 1)}
        for c in self.cones:
            out[c.codim].append(c)
        return {k: tuple(v) for k, v in out.items()}

    def cones_of_codim(self, k: int) -> tuple[Cone, ...]:
        return self.codim_index.get(k, ())

    @cached_property
    def maximal_cones(self) -> tuple[Cone, ...]:
        return tuple(c for c in self.cones if len(self._cofaces[c]) == 1)

    @cached_property
    def rays(self) -> tuple[Vector, ...]:
        return tuple(c.rays[0] for c in self.cones if c.dim == 1)

    def facets_of(self, sigma: Cone) -> tuple[Cone, ...]:
        return tuple(sorted(t for t in self.faces_of(sigma) if t.dim == sigma.dim - 1))

    @cached_property
    def _eps(self) -> dict[tuple[Cone, Cone], int]:
        return {}

    def epsilon(self, tau: Cone, sigma: Cone) -> int:
        """Incidence sign of the facet pair ``tau < sigma`` in this orientation."""
        key = (tau, sigma)
        if key not in self._eps:
            self._eps[key] = incidence_sign(
                tau,
                sigma,
                tau_orientation=self.sign(tau),
                sigma_orientation=self.sign(sigma),
            )
        return self._eps[key]

    @cached_property
    def validation(self) -> ValidationReport:
        return validate_fan(self)

    def to_document(self) -> dict:
        """Fan document: rays plus maximal cones as ray indices."""
        rays = list(self.rays)
        pos = {r: i for i, r in enumerate(rays)}
        max_cones = [[pos[r] for r in c.rays] for c in self.maximal_cones if c.rays]
        doc = {"rank": self.rank, "rays": [list(r) for r in rays], "max_cones": max_cones}
        if self.name:
            doc["name"] = self.name
        return doc

    def __str__(self) -> str:
        return f"Fan({self.name or 'unnamed'}, rank {self.rank}, f-vector {self.f_vector})"

    @property
    def f_vector(self) -> tuple[int, ...]:
        """Number of cones per dimension 0..rank."""
        return tuple(len(self.cones_of_codim(self.rank - d)) for d in range(self.rank + 1))


# ---------------------------------------------------------------------------
# Validation
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Violation:
    kind: str
    detail: str

    def __str__(self) -> str:
        return f"{self.kind}: {self.detail}"


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    @property
    def is_fan(self) -> bool:
        return all(v.kind == "completeness" for v in self.violations)

    @property
    def is_complete(self) -> bool:
        return self.ok

    def to_json(self) -> dict:
        return {
            "valid": self.is_fan,
            "complete": self.is_complete,
            "violations": [{"kind": v.kind, "detail": v.detail} for v in self.violations],
        }


def _intersection_rays(a: Cone, b: Cone) -> frozenset[Vector]:
    """Extreme rays of the intersection of two strictly convex cones."""
    n = a.ambient
    O = a.orthogonal_basis.T.vstack(b.orthogonal_basis.T)
    B = kernel_basis(O)
    k = B.cols
    if k == 0:
        return frozenset()
    cons = [B.T.apply(u) for u in a.facet_normals + b.facet_normals]
    out = set()
    for y in extreme_rays(cons, k):
        out.add(primitive(B.apply(y)))
    assert all(len(x) == n for x in out)
    return frozenset(out)


def validate_fan(fan: Fan) -> ValidationReport:
    """Check fan axioms and completeness; never raises on bad fans."""
    bad: list[Violation] = []
    convex = []
    for c in fan.cones:
        for r in c.rays:
            g = 0
            for x in r:
                g = gcd(g, x)
            if g != 1:
                bad.append(Violation("primitivity", f"ray {r} of {c} is not primitive"))
        if not c.is_strictly_convex:
            bad.append(Violation("strict_convexity", f"{c} contains a line"))
            continue
        convex.append(c)
        if c.redundant_rays:
            bad.append(Violation("strict_convexity", f"{c} lists non-extreme generators {list(c.redundant_rays)}"))

    for c in convex:
        for f in faces(c):
            if f not in fan:
                bad.append(Violation("face_closure", f"face {f} of {c} is missing"))

    maximal = [c for c in fan.maximal_cones if c.is_strictly_convex]
    for a, b in combinations(maximal, 2):
        common = _intersection_rays(a, b)
        if common not in a.face_ray_sets() or common not in b.face_ray_sets():
            bad.append(
                Violation(
                    "intersection",
                    f"{a} and {b} meet in cone({sorted(common)}), not a common face",
                )
            )

    n = fan.rank
    low = [c for c in fan.maximal_cones if c.dim != n]
    if low:
        bad.append(Violation("completeness", f"not complete: maximal cones of dimension < {n}: {', '.join(map(str, low))}"))
    full = [c for c in fan.maximal_cones if c.dim == n]
    for wall in fan.cones_of_codim(1):
        k = sum(1 for s in full if fan.is_face(wall, s))
        if k != 2:
            bad.append(Violation("completeness", f"not complete: {wall} borders {k} maximal cone(s), expected 2"))
    if n > 0 and not full:
        bad.append(Violation("completeness", "not complete: no full-dimensional cones"))
    return ValidationReport(tuple(bad))


# ---------------------------------------------------------------------------
# Orthogonal lattices and quotient fans
# ---------------------------------------------------------------------------

def orthogonal_lattice_basis(fan: Fan, sigma: Cone) -> IntMatrix:
    """Basis of ``sigma-perp intersected with M`` as columns (Hermite form)."""
    fan.index(sigma)
    return sigma.orthogonal_basis


def inclusion_matrix(sigma: Cone, tau: Cone) -> IntMatrix:
    """Coordinates of ``sigma-perp`` basis vectors in the ``tau-perp`` basis, for ``tau <= sigma``."""
    X = solve_integer(tau.orthogonal_basis, sigma.orthogonal_basis)
    if X is None:
        raise ValueError(f"perp of {sigma} is not contained in perp of {tau}")
    return X


def _transport_sign(sigma: Cone, tau: Cone, tau_bar: Cone, P: IntMatrix) -> int:
    """Sign of ``(lift of tau_bar basis, sigma basis)`` against the basis of ``tau``."""
    H = tau.basis
    Y = (P @ H).to_rows()
    cols = []
    for h in tau_bar.basis.columns():
        c = solve_rational(Y, h)
        assert c is not None
        cols.append(clear_denominators(c))
    S = solve_integer(H, sigma.basis)
    assert S is not None
    cols.extend(S.columns())
    return _sgn(det(IntMatrix.from_columns(cols, tau.dim)))


def quotient_correspondence(fan: Fan, sigma: Cone) -> tuple[Fan, dict[Cone, Cone]]:
    """Quotient fan along ``sigma`` and the map ``tau -> tau_bar`` on the star of ``sigma``.

    The quotient lattice ``N / (R sigma intersected with N)`` is identified
    with ``Z^codim`` through the pairing with the Hermite basis of the
    orthogonal lattice.  Orientations are transported so that the orientation
    of ``tau`` is that of ``(lift of tau_bar, sigma)``.
    """
    fan.index(sigma)
    P = sigma.orthogonal_basis.T
    m = P.rows
    sig_rays = set(sigma.rays)
    mapping: dict[Cone, Cone] = {}
    signs: dict[Cone, int] = {}
    for tau in fan.star(sigma):
        gens = [P.apply(r) for r in tau.rays if r not in sig_rays]
        bar = Cone.from_generators(gens, m)
        mapping[tau] = bar
        signs[bar] = fan.sign(tau) * fan.sign(sigma) * _transport_sign(sigma, tau, bar, P)
    name = f"{fan.name}/{sigma}" if fan.name else None
    q = Fan(m, tuple(signs), tuple(signs.values()), name=name)
    return q, mapping


def quotient_fan(fan: Fan, sigma: Cone) -> Fan:
    return quotient_correspondence(fan, sigma)[0]

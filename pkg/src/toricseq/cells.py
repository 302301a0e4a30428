"""Flag complexes of fans, used as an independent check on the Cech complex.

The flag complex ``K(fan)`` has one vertex per cone (the zero cone
included) and one simplex per chain of strictly increasing cones.  Its
realization is a ball, and for every cone ``sigma`` the chains starting at
or above ``sigma`` form a subcomplex isomorphic to the flag complex of the
quotient fan along ``sigma``.  Everything here is combinatorial; no
geometric realization is built.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Hashable, Iterable, Mapping, Sequence

from .cech import build_cech_complex, require_complete
from .linalg import FgAbGroup, IntMatrix, homology_at
from .polyhedral import Cone, Fan, quotient_correspondence


@dataclass(frozen=True)
class SimplicialComplex:
    """Abstract simplicial complex on labelled, totally ordered vertices.

    ``simplices[k]`` lists the k-simplices as increasing tuples of vertex
    indices, sorted lexicographically.
    """

    vertices: tuple[Hashable, ...]
    simplices: tuple[tuple[tuple[int, ...], ...], ...]

    @classmethod
    def from_facets(cls, vertices: Sequence[Hashable], facets: Iterable[Iterable[Hashable]]) -> SimplicialComplex:
        """Downward closure of ``facets`` (given as collections of vertex labels)."""
        pos = {v: i for i, v in enumerate(vertices)}
        found: set[tuple[int, ...]] = {(i,) for i in range(len(vertices))}
        for f in facets:
            idx = sorted(pos[v] for v in f)
            for k in range(1, len(idx) + 1):
                found.update(combinations(idx, k))
        top = max((len(s) for s in found), default=0)
        by_dim = tuple(tuple(sorted(s for s in found if len(s) == k + 1)) for k in range(top))
        return cls(tuple(vertices), by_dim)

    @property
    def dim(self) -> int:
        return len(self.simplices) - 1

    @property
    def f_vector(self) -> tuple[int, ...]:
        return tuple(len(s) for s in self.simplices)

    def euler_characteristic(self) -> int:
        return sum((-1) ** k * f for k, f in enumerate(self.f_vector))

    def is_downward_closed(self) -> bool:
        present = {s for level in self.simplices for s in level}
        return all(
            face in present
            for level in self.simplices[1:]
            for s in level
            for face in combinations(s, len(s) - 1)
        )

    def boundary(self, k: int) -> IntMatrix:
        """``C_k -> C_{k-1}``; ``k = 0`` gives the augmentation onto ``Z``."""
        if k == 0:
            return IntMatrix.from_rows([[1] * self.f_vector[0]], self.f_vector[0])
        if k > self.dim:
            return IntMatrix.zeros(len(self.simplices[k - 1]) if k - 1 <= self.dim else 0, 0)
        lower = {s: i for i, s in enumerate(self.simplices[k - 1])}
        rows = [[0] * len(self.simplices[k]) for _ in lower]
        for j, s in enumerate(self.simplices[k]):
            for i in range(len(s)):
                rows[lower[s[:i] + s[i + 1:]]][j] = (-1) ** i
        return IntMatrix.from_rows(rows, len(self.simplices[k]))

    def labelled_simplices(self, relabel: Mapping | None = None) -> frozenset[frozenset]:
        out = set()
        for level in self.simplices:
            for s in level:
                labels = (self.vertices[i] for i in s)
                if relabel is not None:
                    labels = (relabel[v] for v in labels)
                out.add(frozenset(labels))
        return frozenset(out)


def simplicial_homology(K: SimplicialComplex) -> list[FgAbGroup]:
    """Reduced integral homology in degrees ``0..dim``."""
    return [homology_at(K.boundary(k + 1), K.boundary(k)) for k in range(K.dim + 1)]


def _chains(fan: Fan, cones: Sequence[Cone]) -> list[tuple[Cone, ...]]:
    allowed = set(cones)
    out = []

    def extend(chain):
        out.append(chain)
        for nxt in fan.star(chain[-1]):
            if nxt != chain[-1] and nxt in allowed:
                extend(chain + (nxt,))

    for c in cones:
        extend((c,))
    return out


def _flag_complex_on(fan: Fan, cones: Sequence[Cone]) -> SimplicialComplex:
    cones = tuple(sorted(cones))
    return SimplicialComplex.from_facets(cones, _chains(fan, cones))


def flag_complex(fan: Fan) -> SimplicialComplex:
    """Simplices are chains ``tau_0 < ... < tau_k`` of cones, zero cone included."""
    return _flag_complex_on(fan, fan.cones)


def dual_cell_subcomplex(fan: Fan, sigma: Cone) -> SimplicialComplex:
    """Flags whose smallest cone contains ``sigma``."""
    return _flag_complex_on(fan, fan.star(sigma))


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class OracleReport:
    checks: tuple[Check, ...]

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "checks": [{"name": c.name, "passed": c.passed, "detail": c.detail} for c in self.checks],
        }


def _acyclic(groups: list[FgAbGroup]) -> bool:
    return all(g.is_zero for g in groups)


def oracle_report(fan: Fan) -> OracleReport:
    """Cross-check the Cech complex against the flag complex and dual cells.

    Raises :class:`ValidationError` for fans that are not valid and complete.
    """
    require_complete(fan)
    checks: list[Check] = []
    K = flag_complex(fan)
    checks.append(Check("flag_complex_closed", K.is_downward_closed()))
    red = simplicial_homology(K)
    checks.append(Check("flag_complex_acyclic", _acyclic(red), ", ".join(map(str, red))))
    checks.append(Check("flag_complex_euler", K.euler_characteristic() == 1, f"chi = {K.euler_characteristic()}"))

    cells_by_dim = [0] * (fan.rank + 1)
    for sigma in fan.cones:
        D = dual_cell_subcomplex(fan, sigma)
        q, mapping = quotient_correspondence(fan, sigma)
        Kq = flag_complex(q)
        iso = D.labelled_simplices(mapping) == Kq.labelled_simplices() and len(D.vertices) == len(Kq.vertices)
        checks.append(Check(f"dual_cell_iso[{sigma}]", iso))
        checks.append(Check(f"dual_cell_ball[{sigma}]", _acyclic(simplicial_homology(D))))
        checks.append(Check(f"dual_cell_dim[{sigma}]", D.dim == sigma.codim, f"dim {D.dim}, codim {sigma.codim}"))
        if 0 <= D.dim <= fan.rank:
            cells_by_dim[D.dim] += 1

    cpx = build_cech_complex(fan)
    faces_per_codim = [len(fan.cones_of_codim(k)) for k in range(fan.rank + 1)]
    checks.append(
        Check(
            "rank_equalities",
            list(cpx.ranks) == faces_per_codim == cells_by_dim,
            f"cech {list(cpx.ranks)}, cones {faces_per_codim}, dual cells {cells_by_dim}",
        )
    )
    hom = cpx.homology()
    point = [FgAbGroup(1)] + [FgAbGroup(0)] * fan.rank
    checks.append(Check("cech_point_homology", hom == point, ", ".join(map(str, hom))))
    return OracleReport(tuple(checks))

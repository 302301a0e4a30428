"""First and second pages of the fan spectral sequence.

The first page is

    E1^{r,s} = sum over cones sigma of codimension s of  wedge^r(sigma-perp cap M)

(tensored with the coefficient ring of a point, which is free), and ``d1``
restricts from ``sigma`` to each of its facets ``tau`` through the inclusion
``sigma-perp -> tau-perp``, weighted by the incidence sign.  Both morphic and
singular cohomology of a torus are exterior algebras on the character
lattice, so both modes share the same page; they differ only in how the
second page is summed into tables.

Weights: in morphic mode the polynomial generator of the point's ring is
never represented symbolically.  A class in exterior degree ``r`` contributes
to weight ``q`` iff ``r <= q``; since ``d1`` preserves ``r`` this truncation
commutes with taking homology.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

from .cech import require_complete
from .errors import CompositionNotZero
from .linalg import FgAbGroup, IntMatrix, homology_at, wedge_power_matrix
from .polyhedral import Cone, Fan, inclusion_matrix

MODES = ("morphic", "singular")


@dataclass(frozen=True)
class E1Page:
    """Labelled free modules ``E1^{r,s}`` for ``0 <= r <= s <= n``.

    A basis element of block ``(r, s)`` is a pair ``(sigma, I)`` with
    ``sigma`` of codimension ``s`` and ``I`` an increasing ``r``-tuple of
    indices into the Hermite basis of ``sigma-perp cap M``.
    """

    fan: Fan
    mode: str
    labels: dict[tuple[int, int], tuple[tuple[Cone, tuple[int, ...]], ...]]

    @property
    def n(self) -> int:
        return self.fan.rank

    def rank(self, r: int, s: int) -> int:
        return len(self.labels.get((r, s), ()))

    def ranks(self) -> dict[tuple[int, int], int]:
        return {rs: len(b) for rs, b in self.labels.items()}

    def to_json(self) -> dict:
        return {
            "mode": self.mode,
            "rank": self.n,
            "blocks": [
                {"r": r, "s": s, "rank": len(b)}
                for (r, s), b in sorted(self.labels.items())
            ],
        }


@dataclass(frozen=True)
class FirstDifferential:
    """``d1^{r,s} : E1^{r,s} -> E1^{r,s+1}`` for every block."""

    page: E1Page
    maps: dict[tuple[int, int], IntMatrix]

    def d(self, r: int, s: int) -> IntMatrix:
        if (r, s) in self.maps:
            return self.maps[(r, s)]
        return IntMatrix.zeros(self.page.rank(r, s + 1), self.page.rank(r, s))


@dataclass(frozen=True)
class E2Page:
    groups: dict[tuple[int, int], FgAbGroup]
    n: int

    def group(self, r: int, s: int) -> FgAbGroup:
        return self.groups.get((r, s), FgAbGroup(0))

    def rank(self, r: int, s: int) -> int:
        return self.group(r, s).rank

    def to_json(self) -> dict:
        return {
            "rank": self.n,
            "groups": [
                {"r": r, "s": s, **g.to_json()} for (r, s), g in sorted(self.groups.items())
            ],
            "note": "integral E2 page; only the rational abutment is determined",
        }


def build_E1(fan: Fan, mode: str = "morphic") -> E1Page:
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}")
    require_complete(fan)
    n = fan.rank
    labels = {}
    for s in range(n + 1):
        cones = fan.cones_of_codim(s)
        for r in range(s + 1):
            labels[(r, s)] = tuple((c, I) for c in cones for I in combinations(range(s), r))
    return E1Page(fan, mode, labels)


def build_d1(fan: Fan, page: E1Page) -> FirstDifferential:
    """Signed restriction maps; ``d1 . d1 = 0`` is verified."""
    n = fan.rank
    maps = {}
    for s in range(n):
        src_cones = fan.cones_of_codim(s)
        dst_cones = fan.cones_of_codim(s + 1)
        for r in range(s + 2):
            a, b = comb(s, r), comb(s + 1, r)
            rows = [[0] * (a * len(src_cones)) for _ in range(b * len(dst_cones))]
            for j, sigma in enumerate(src_cones):
                for i, tau in enumerate(dst_cones):
                    if not fan.is_face(tau, sigma):
                        continue
                    eps = fan.epsilon(tau, sigma)
                    W = wedge_power_matrix(inclusion_matrix(sigma, tau), r)
                    for x in range(b):
                        for y in range(a):
                            rows[i * b + x][j * a + y] = eps * W[x, y]
            maps[(r, s)] = IntMatrix.from_rows(rows, a * len(src_cones))
    d1 = FirstDifferential(page, maps)
    for r in range(n + 1):
        for s in range(n - 1):
            if not (d1.d(r, s + 1) @ d1.d(r, s)).is_zero():
                raise CompositionNotZero(f"d1 d1 != 0 at (r, s) = ({r}, {s})")
    return d1


def compute_E2(page: E1Page, d1: FirstDifferential) -> E2Page:
    n = page.n
    groups = {}
    for s in range(n + 1):
        for r in range(s + 1):
            groups[(r, s)] = homology_at(d1.d(r, s - 1), d1.d(r, s))
    return E2Page(groups, n)


def e2_page(fan: Fan, mode: str = "morphic") -> E2Page:
    page = build_E1(fan, mode)
    return compute_E2(page, build_d1(fan, page))


@dataclass(frozen=True)
class MorphicTable:
    """``ranks[q][n]`` is the rank of the weight-``q``, degree-``n`` rational morphic group."""

    qmax: int
    ranks: tuple[tuple[int, ...], ...]

    def to_json(self) -> dict:
        return {"qmax": self.qmax, "ranks": [list(r) for r in self.ranks]}


def morphic_table(fan: Fan, qmax: int | None = None, e2: E2Page | None = None) -> MorphicTable:
    """Rational morphic ranks for ``0 <= q <= qmax`` and ``0 <= n <= 2 rank``."""
    if e2 is None:
        e2 = e2_page(fan, "morphic")
    dim = fan.rank
    if qmax is None:
        qmax = dim
    if qmax < 0:
        raise ValueError("qmax must be nonnegative")
    rows = []
    for q in range(qmax + 1):
        rows.append(
            tuple(
                sum(e2.rank(r, deg - r) for r in range(min(q, deg) + 1) if 0 <= deg - r <= dim)
                for deg in range(2 * dim + 1)
            )
        )
    return MorphicTable(qmax, tuple(rows))


@dataclass(frozen=True)
class BettiTable:
    betti: tuple[int, ...]

    @property
    def euler(self) -> int:
        return sum((-1) ** k * b for k, b in enumerate(self.betti))

    def to_json(self) -> dict:
        return {"betti": list(self.betti), "euler": self.euler}


def betti_table(fan: Fan, e2: E2Page | None = None) -> BettiTable:
    """Rational Betti numbers ``b_0 .. b_{2 rank}`` of the toric variety."""
    if e2 is None:
        e2 = e2_page(fan, "singular")
    dim = fan.rank
    return BettiTable(
        tuple(
            sum(e2.rank(r, deg - r) for r in range(deg + 1) if 0 <= deg - r <= dim)
            for deg in range(2 * dim + 1)
        )
    )


def weight_action_check(page: E1Page, d1: FirstDifferential, m: int) -> bool:
    """Scaling exterior degree ``r`` by ``m^r`` commutes with ``d1``.

    Also checks that ``wedge^r(m * identity) = m^r * identity`` on every
    block's lattice, the identity that makes the action multiplication by
    ``m^r``.
    """
    n = page.n
    for s in range(n + 1):
        for r in range(s + 1):
            if wedge_power_matrix(IntMatrix.identity(s) * m, r) != IntMatrix.identity(comb(s, r)) * m ** r:
                return False
    for (r, s), D in d1.maps.items():
        scale = m ** r
        src = IntMatrix.identity(page.rank(r, s)) * scale
        dst = IntMatrix.identity(page.rank(r, s + 1)) * scale
        if D @ src != dst @ D:
            return False
    return True

"""The oriented Cech complex of a complete fan.

Degree ``k`` is free on the cones of codimension ``k``.  The differential
``d_k`` sends a cone ``tau`` of codimension ``k`` to the signed sum of the
cones ``sigma`` of codimension ``k-1`` having ``tau`` as a facet, with the
incidence sign of the pair as coefficient.  Augmenting by the sum of the
coefficients of the maximal cones gives a resolution of ``Z`` exactly when
the maximal cones are coherently oriented.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CompositionNotZero, ResolutionFailure, ValidationError
from .linalg import FgAbGroup, IntMatrix, homology_at, invariant_factors
from .polyhedral import Cone, Fan


@dataclass(frozen=True)
class ChainComplex:
    """Free chain complex in degrees ``0..top`` with cone-labelled bases.

    ``differentials[k]`` is ``d_k : C_k -> C_{k-1}`` for ``1 <= k <= top``;
    rows are indexed by ``labels[k-1]`` and columns by ``labels[k]``.
    """

    labels: tuple[tuple[Cone, ...], ...]
    differentials: dict[int, IntMatrix]

    @property
    def top(self) -> int:
        return len(self.labels) - 1

    @property
    def ranks(self) -> tuple[int, ...]:
        return tuple(len(b) for b in self.labels)

    def d(self, k: int) -> IntMatrix:
        """``d_k`` including the zero maps at the ends of the complex."""
        if 1 <= k <= self.top:
            return self.differentials[k]
        src = len(self.labels[k]) if 0 <= k <= self.top else 0
        dst = len(self.labels[k - 1]) if 0 <= k - 1 <= self.top else 0
        return IntMatrix.zeros(dst, src)

    def check(self) -> None:
        for k in range(2, self.top + 1):
            if not (self.d(k - 1) @ self.d(k)).is_zero():
                raise CompositionNotZero(f"d_{k - 1} d_{k} != 0")

    def homology(self) -> list[FgAbGroup]:
        return [homology_at(self.d(k + 1), self.d(k)) for k in range(self.top + 1)]

    def euler_characteristic(self) -> int:
        return sum((-1) ** k * r for k, r in enumerate(self.ranks))

    def to_json(self) -> dict:
        return {
            "ranks": list(self.ranks),
            "labels": [[[list(r) for r in c.rays] for c in deg] for deg in self.labels],
            "differentials": {str(k): m.to_rows() for k, m in sorted(self.differentials.items())},
        }


def require_complete(fan: Fan) -> None:
    report = fan.validation
    if not report.ok:
        raise ValidationError(report)


def _restricted_complex(fan: Fan, cones_by_codim: list[tuple[Cone, ...]]) -> ChainComplex:
    diffs = {}
    for k in range(1, len(cones_by_codim)):
        src, dst = cones_by_codim[k], cones_by_codim[k - 1]
        rows = []
        for sigma in dst:
            row = []
            for tau in src:
                row.append(fan.epsilon(tau, sigma) if fan.is_face(tau, sigma) else 0)
            rows.append(row)
        diffs[k] = IntMatrix.from_rows(rows, len(src))
    cpx = ChainComplex(tuple(cones_by_codim), diffs)
    cpx.check()
    return cpx


def build_cech_complex(fan: Fan) -> ChainComplex:
    """Cech complex of a validated complete fan; ``d^2 = 0`` is checked."""
    require_complete(fan)
    return _restricted_complex(fan, [fan.cones_of_codim(k) for k in range(fan.rank + 1)])


def augmentation(cpx: ChainComplex) -> IntMatrix:
    return IntMatrix.from_rows([[1] * cpx.ranks[0]], cpx.ranks[0])


def augmentation_check(fan: Fan, cpx: ChainComplex | None = None) -> bool:
    """True iff ``a . d_1 = 0`` and ``a`` induces ``H_0 = Z``."""
    if cpx is None:
        cpx = build_cech_complex(fan)
    a = augmentation(cpx)
    if not (a @ cpx.d(1)).is_zero():
        return False
    if not homology_at(cpx.d(1), a).is_zero:
        return False
    # a must also be onto Z
    return invariant_factors(a) == (1,)


def cech_homology(fan: Fan) -> list[FgAbGroup]:
    """Homology of the Cech complex; raises unless it is ``(Z, 0, ..., 0)``."""
    hom = build_cech_complex(fan).homology()
    expected = [FgAbGroup(1)] + [FgAbGroup(0)] * fan.rank
    if hom != expected:
        raise ResolutionFailure(
            f"Cech homology of {fan} is {[str(h) for h in hom]}, expected point homology"
        )
    return hom


def fiber_complex(fan: Fan, sigma: Cone) -> ChainComplex:
    """Subcomplex spanned by the cones having ``sigma`` as a face.

    Degrees keep their codimension in the ambient fan, so degree ``k`` runs
    over ``0..codim(sigma)``.
    """
    star = set(fan.star(sigma))
    require_complete(fan)
    by_codim = [tuple(c for c in fan.cones_of_codim(k) if c in star) for k in range(sigma.codim + 1)]
    return _restricted_complex(fan, by_codim)

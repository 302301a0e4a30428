"""Closed-form Betti numbers for complete simplicial fans.

For a complete simplicial fan the even Betti numbers are the h-numbers of
the fan,

    b_{2k} = sum_{i >= k} (-1)^(i-k) * C(i, k) * f_i,

where ``f_i`` counts cones of codimension ``i``; odd Betti numbers vanish.
This uses nothing but cone counts, so it is independent of the spectral
sequence code.
"""

from __future__ import annotations

from math import comb

from .polyhedral import Fan


def is_simplicial(fan: Fan) -> bool:
    return all(len(c.rays) == c.dim for c in fan.cones)


def simplicial_betti(fan: Fan) -> tuple[int, ...]:
    if not is_simplicial(fan):
        raise ValueError("the counting formula needs a simplicial fan")
    n = fan.rank
    f = [len(fan.cones_of_codim(i)) for i in range(n + 1)]
    out = []
    for deg in range(2 * n + 1):
        if deg % 2:
            out.append(0)
            continue
        k = deg // 2
        out.append(sum((-1) ** (i - k) * comb(i, k) * f[i] for i in range(k, n + 1)))
    return tuple(out)

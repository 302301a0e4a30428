"""Acceptance suite: one test per criterion, each timed against its budget.

Every test records a ``PASS``/``FAIL`` line that is printed in the pytest
terminal summary; running this file directly prints the same lines.
"""

from __future__ import annotations

import random
import time
from contextlib import contextmanager
from math import comb

from toricseq.builtins import builtin_fan, random_complete_2d_fan, standard_builtins
from toricseq.cech import augmentation_check, build_cech_complex, cech_homology
from toricseq.cells import dual_cell_subcomplex, flag_complex, simplicial_homology
from toricseq.counting import simplicial_betti
from toricseq.linalg import FgAbGroup, IntMatrix, det, invariant_factors, kernel_basis, rank, smith_normal_form, wedge_power_matrix
from toricseq.polyhedral import Cone, faces, incidence_sign, quotient_correspondence
from toricseq.spectral import betti_table, build_d1, build_E1, compute_E2, morphic_table, weight_action_check

from _oracles import random_matrix

RESULTS: list[str] = []


@contextmanager
def criterion(num: int, title: str, limit: float | None = None):
    start = time.perf_counter()
    try:
        yield
    except BaseException as exc:
        elapsed = time.perf_counter() - start
        RESULTS.append(f"FAIL [{num}] {title} ({elapsed:.2f}s): {type(exc).__name__}: {exc}")
        raise
    elapsed = time.perf_counter() - start
    if limit is not None and elapsed >= limit:
        RESULTS.append(f"FAIL [{num}] {title} ({elapsed:.2f}s, limit {limit}s)")
        raise AssertionError(f"criterion {num} took {elapsed:.2f}s, limit {limit}s")
    budget = f", limit {limit}s" if limit is not None else ""
    RESULTS.append(f"PASS [{num}] {title} ({elapsed:.2f}s{budget})")


def _timed(fn, limit):
    t = time.perf_counter()
    out = fn()
    dt = time.perf_counter() - t
    assert dt < limit, f"{dt:.2f}s >= {limit}s"
    return out


def point(n):
    return [FgAbGroup(1)] + [FgAbGroup(0)] * n


# 1 -----------------------------------------------------------------------------------

def test_criterion_1_projective_morphic_tables():
    with criterion(1, "projective space morphic tables, k = 1, 2, 3 (< 1 s each)"):
        for k in (1, 2, 3):
            table = _timed(lambda: morphic_table(builtin_fan(f"p{k}"), k), 1.0)
            assert table.qmax == k
            for q in range(k + 1):
                for n in range(2 * k + 1):
                    expected = 1 if n % 2 == 0 and n // 2 <= min(q, k) else 0
                    assert table.ranks[q][n] == expected, (k, q, n)


# 2 -----------------------------------------------------------------------------------

def test_criterion_2_betti_numbers():
    with criterion(2, "Betti numbers of P1xP1, Hirzebruch 0/1/2, P(1,1,2) (< 1 s each)"):
        cases = {
            "p1xp1": (1, 0, 2, 0, 1),
            "hirzebruch:0": (1, 0, 2, 0, 1),
            "hirzebruch:1": (1, 0, 2, 0, 1),
            "hirzebruch:2": (1, 0, 2, 0, 1),
            "wp112": (1, 0, 1, 0, 1),
        }
        for name, expected in cases.items():
            fan = builtin_fan(name)
            got = _timed(lambda: betti_table(fan).betti, 1.0)
            assert got == expected, name
            assert simplicial_betti(fan) == expected, name


# 3 -----------------------------------------------------------------------------------

def _resolution_ok(fan):
    assert cech_homology(fan) == point(fan.rank)
    assert augmentation_check(fan), str(fan)


def test_criterion_3_resolution_suite():
    with criterion(3, "Cech resolution on builtins, their quotients and 100 random 2D fans (< 10 s)", 10.0):
        count = 0
        for name in standard_builtins():
            fan = builtin_fan(name)
            _resolution_ok(fan)
            count += 1
            for sigma in fan.cones:
                q, _ = quotient_correspondence(fan, sigma)
                _resolution_ok(q)
                count += 1
        rng = random.Random(20240)
        for _ in range(100):
            _resolution_ok(random_complete_2d_fan(rng, rng.randint(3, 12)))
            count += 1
        assert count >= 100 + len(standard_builtins())


# 4 -----------------------------------------------------------------------------------

def test_criterion_4_sign_robustness():
    with criterion(4, "50 orientation scrambles per builtin leave homology and E2 unchanged (< 30 s)", 30.0):
        rng = random.Random(4004)
        for name in standard_builtins():
            fan = builtin_fan(name)
            ref_h = build_cech_complex(fan).homology()
            page = build_E1(fan)
            ref_e2 = compute_E2(page, build_d1(fan, page)).groups
            for _ in range(50):
                f = fan.scrambled(rng)
                cpx = build_cech_complex(f)
                for k in range(2, cpx.top + 1):
                    assert (cpx.d(k - 1) @ cpx.d(k)).is_zero()
                assert cpx.homology() == ref_h
                pg = build_E1(f)
                d1 = build_d1(f, pg)
                for r in range(f.rank + 1):
                    for s in range(f.rank - 1):
                        assert (d1.d(r, s + 1) @ d1.d(r, s)).is_zero()
                assert compute_E2(pg, d1).groups == ref_e2


# 5 -----------------------------------------------------------------------------------

def _dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def _random_strict_cone(rng, n):
    from toricseq.errors import NotStrictlyConvex

    while True:
        gens = [tuple(rng.randint(-3, 3) for _ in range(n)) for _ in range(rng.randint(2, 6))]
        gens = [g for g in gens if any(g)]
        if not gens:
            continue
        try:
            sigma = Cone.from_generators(gens, n)
        except NotStrictlyConvex:
            continue
        if sigma.dim >= 1:
            return sigma


def test_criterion_5_epsilon_well_defined():
    with criterion(5, "1000 random (u, w) re-selections give identical incidence signs"):
        rng = random.Random(5005)
        for _ in range(1000):
            n = rng.choice((2, 3, 4))
            sigma = _random_strict_cone(rng, n)
            tau = rng.choice([f for f in faces(sigma) if f.dim == sigma.dim - 1])
            ref = incidence_sign(tau, sigma)
            base = next(
                u for u in sigma.facet_normals
                if frozenset(r for r in sigma.rays if _dot(u, r) == 0) == frozenset(tau.rays)
            )
            k = rng.randint(1, 4)
            u = [k * x for x in base]
            for p in sigma.orthogonal_basis.columns():
                c = rng.randint(-5, 5)
                u = [a + c * b for a, b in zip(u, p)]
            while True:
                w = [0] * n
                for r in sigma.rays:
                    c = rng.randint(-3, 5)
                    w = [a + c * b for a, b in zip(w, r)]
                if _dot(u, w) > 0:
                    break
            assert incidence_sign(tau, sigma, u=u, w=w) == ref


# 6 -----------------------------------------------------------------------------------

def test_criterion_6_linear_algebra_properties():
    with criterion(6, "500 random matrices: SNF, kernel saturation, exterior power functoriality (< 10 s)", 10.0):
        rng = random.Random(6006)
        for _ in range(500):
            m, n = rng.randint(1, 8), rng.randint(1, 8)
            A = random_matrix(rng, m, n)
            U, D, V = smith_normal_form(A)
            assert U @ D @ V == A
            assert abs(det(U)) == 1 and abs(det(V)) == 1
            diag = [D[i, i] for i in range(min(m, n)) if D[i, i]]
            assert all(D[i, j] == 0 for i in range(m) for j in range(n) if i != j)
            assert all(b % a == 0 for a, b in zip(diag, diag[1:]))

            K = kernel_basis(A)
            assert (A @ K).is_zero() and K.cols == n - rank(A)
            assert all(d == 1 for d in invariant_factors(K))

            p = rng.randint(1, 8)
            B = random_matrix(rng, n, p)
            AB = A @ B
            for r in range(4):
                assert wedge_power_matrix(AB, r) == wedge_power_matrix(A, r) @ wedge_power_matrix(B, r)


# 7 -----------------------------------------------------------------------------------

def test_criterion_7_oracle_agreement():
    with criterion(7, "flag complex acyclic, dual cells match quotient flag complexes, rank counts agree"):
        for name in standard_builtins():
            fan = builtin_fan(name)
            K = flag_complex(fan)
            assert all(g.is_zero for g in simplicial_homology(K)), name
            cells = [0] * (fan.rank + 1)
            for sigma in fan.cones:
                D = dual_cell_subcomplex(fan, sigma)
                q, mapping = quotient_correspondence(fan, sigma)
                Kq = flag_complex(q)
                assert D.labelled_simplices(mapping) == Kq.labelled_simplices(), (name, sigma)
                assert all(g.is_zero for g in simplicial_homology(D))
                cells[D.dim] += 1
            cpx = build_cech_complex(fan)
            per_codim = [len(fan.cones_of_codim(k)) for k in range(fan.rank + 1)]
            assert list(cpx.ranks) == per_codim == cells, name


# 8 -----------------------------------------------------------------------------------

def test_criterion_8_structural_invariants():
    with criterion(8, "E2 bottom row, Euler characteristics, weight action for m = 2, 3, 5"):
        for name in standard_builtins():
            fan = builtin_fan(name)
            page = build_E1(fan)
            d1 = build_d1(fan, page)
            e2 = compute_E2(page, d1)
            assert e2.group(0, 0) == FgAbGroup(1)
            assert all(e2.group(0, s).is_zero for s in range(1, fan.rank + 1))
            assert betti_table(fan, e2).euler == len(fan.cones_of_codim(0))
            for r in range(fan.rank + 1):
                chi1 = sum((-1) ** s * page.rank(r, s) for s in range(fan.rank + 1))
                chi2 = sum((-1) ** s * e2.rank(r, s) for s in range(fan.rank + 1))
                assert chi1 == chi2
                assert all(page.rank(r, s) == len(fan.cones_of_codim(s)) * comb(s, r) for s in range(r, fan.rank + 1))
            for m in (2, 3, 5):
                assert weight_action_check(page, d1, m)


if __name__ == "__main__":
    import sys

    failed = False
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except Exception:
                failed = True
    print("\n".join(RESULTS))
    sys.exit(1 if failed else 0)

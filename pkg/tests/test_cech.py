import random

import pytest

from toricseq.builtins import builtin_fan, random_complete_2d_fan, standard_builtins
from toricseq.cech import augmentation_check, build_cech_complex, cech_homology, fiber_complex
from toricseq.errors import ValidationError
from toricseq.linalg import FgAbGroup, homology_at
from toricseq.polyhedral import Cone, Fan, quotient_correspondence

from _oracles import cube_fan


def point(n):
    return [FgAbGroup(1)] + [FgAbGroup(0)] * n


def test_p1_complex():
    fan = builtin_fan("p1")
    cpx = build_cech_complex(fan)
    assert cpx.ranks == (2, 1)
    d1 = cpx.d(1)
    assert d1.shape == (2, 1)
    # column entry for each maximal cone; in the document ray order [1], [-1] this is (+1, -1)
    by_cone = {c.rays: d1[i, 0] for i, c in enumerate(cpx.labels[0])}
    assert (by_cone[((1,),)], by_cone[((-1,),)]) == (1, -1)


@pytest.mark.parametrize("name, ranks", [("p2", (3, 3, 1)), ("p1xp1", (4, 4, 1)), ("p3", (4, 6, 4, 1))])
def test_ranks(name, ranks):
    assert build_cech_complex(builtin_fan(name)).ranks == ranks


def test_d_squared_and_homology_builtins():
    rng = random.Random(2)
    for name in standard_builtins():
        fan = builtin_fan(name)
        for f in (fan, fan.scrambled(rng), fan.scrambled(rng)):
            cpx = build_cech_complex(f)
            cpx.check()
            assert cpx.homology() == point(fan.rank), name
        assert augmentation_check(fan)


@pytest.mark.parametrize("name", ["p1", "p2", "wp112"])
def test_cech_homology_examples(name):
    fan = builtin_fan(name)
    assert cech_homology(fan) == point(fan.rank)


def test_random_2d():
    rng = random.Random(8)
    for _ in range(25):
        fan = random_complete_2d_fan(rng, rng.randint(3, 12))
        assert cech_homology(fan) == point(2)
        assert augmentation_check(fan)
        assert build_cech_complex(fan.scrambled(rng)).homology() == point(2)


def test_augmentation_flipped_orientation():
    fan = builtin_fan("p1")
    sigma = fan.maximal_cones[0]
    flipped = fan.with_orientation({sigma: -1})
    assert not augmentation_check(flipped)
    cpx = build_cech_complex(flipped)
    assert cpx.homology()[0] == FgAbGroup(1)


def test_augmentation_p2():
    assert augmentation_check(builtin_fan("p2"))


def test_euler_characteristic_is_one():
    for name in standard_builtins():
        assert build_cech_complex(builtin_fan(name)).euler_characteristic() == 1
    assert build_cech_complex(cube_fan()).euler_characteristic() == 1


def test_incomplete_rejected():
    fan = Fan.from_max_cones(2, [(1, 0), (0, 1)], [[0, 1]])
    with pytest.raises(ValidationError):
        build_cech_complex(fan)


# -- fiber complexes ---------------------------------------------------------------

def test_fiber_of_zero_cone_is_full_complex():
    fan = builtin_fan("p2")
    assert fiber_complex(fan, fan.zero_cone) == build_cech_complex(fan)


def test_fiber_of_ray_in_p2():
    fan = builtin_fan("p2")
    fib = fiber_complex(fan, Cone.from_rays([(1, 0)]))
    assert fib.ranks == (2, 1)
    assert fib.homology() == point(1)


def test_fiber_of_maximal_cone():
    fan = builtin_fan("p2")
    fib = fiber_complex(fan, fan.maximal_cones[0])
    assert fib.ranks == (1,)
    assert fib.homology() == [FgAbGroup(1)]


def _fiber_equals_quotient(fan, sigma):
    fib = fiber_complex(fan, sigma)
    q, mapping = quotient_correspondence(fan, sigma)
    qc = build_cech_complex(q)
    assert fib.ranks == qc.ranks
    for k in range(1, fib.top + 1):
        src = [qc.labels[k].index(mapping[t]) for t in fib.labels[k]]
        dst = [qc.labels[k - 1].index(mapping[t]) for t in fib.labels[k - 1]]
        for i, a in enumerate(dst):
            for j, b in enumerate(src):
                assert fib.d(k)[i, j] == qc.d(k)[a, b]


def test_fiber_matches_quotient_complex():
    rng = random.Random(4)
    fans = [builtin_fan(n) for n in standard_builtins()] + [cube_fan()]
    for fan in fans:
        for f in (fan, fan.scrambled(rng)):
            for sigma in f.cones:
                _fiber_equals_quotient(f, sigma)
                assert fiber_complex(f, sigma).homology() == point(sigma.codim)


def test_augmentation_on_quotients():
    for name in standard_builtins():
        fan = builtin_fan(name)
        for sigma in fan.cones:
            q, _ = quotient_correspondence(fan, sigma)
            assert augmentation_check(q), (name, sigma)


def test_json_shape():
    out = build_cech_complex(builtin_fan("p1")).to_json()
    assert out["ranks"] == [2, 1]
    assert set(out["differentials"]) == {"1"}
    assert homology_at(
        build_cech_complex(builtin_fan("p1")).d(1), build_cech_complex(builtin_fan("p1")).d(0)
    ) == FgAbGroup(1)

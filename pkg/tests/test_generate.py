import numpy as np
import pytest

import potbranch as pb
from potbranch.generate import GenSpec, XorShift64Star, gen_general, gen_potential, perturb, splitmix64


def test_splitmix_reference_value():
    # first output of SplitMix64 seeded with 0 (published test vector)
    assert splitmix64(0) == 0xE220A8397B1DCDAF


def test_xorshift_matches_uint64_reimplementation():
    rng = XorShift64Star(12345)
    x = np.uint64(splitmix64(12345))
    with np.errstate(over="ignore"):
        for _ in range(1000):
            x ^= x >> np.uint64(12)
            x ^= x << np.uint64(25)
            x ^= x >> np.uint64(27)
            expected = int(x * np.uint64(0x2545F4914F6CDD1D))
            assert rng.next_u64() == expected


def test_rng_ranges():
    rng = XorShift64Star(1)
    draws = [rng.integer(-3, 3) for _ in range(2000)]
    assert set(draws) == set(range(-3, 4))
    assert all(0 <= rng.random() < 1 for _ in range(1000))
    assert XorShift64Star(2**64 - 1).next_u64() != 0


@pytest.mark.parametrize("seed", range(30))
@pytest.mark.parametrize("density", [0.1, 0.5, 1.0])
def test_potential_generator_contract(seed, density):
    spec = GenSpec(n=1 + seed % 15, density=density, seed=seed, weight_range=(-20, 20))
    phi = gen_potential(spec)
    assert pb.validate_phi(phi).ok
    assert all(a.weight >= 1 for a in pb.build_q(phi).arcs)
    assert len(pb.connected_components(phi.graph)) == 1
    assert all(float(w).is_integer() for *_, w in phi.edges)
    assert gen_potential(spec) == phi


def test_full_density_is_complete():
    phi = gen_potential(GenSpec(9, 1.0, 4))
    assert len(phi.edges) == 9 * 8 // 2
    g = gen_general(GenSpec(9, 1.0, 4))
    assert len(g.arcs) == 9 * 8


def test_general_generator():
    assert gen_general(GenSpec(1)).arcs == ()
    spec = GenSpec(7, 0.3, 99, (-50, 50))
    g = gen_general(spec)
    assert g == gen_general(spec)
    assert pb.msa.feasible_roots(g) == list(range(7))
    assert gen_general(spec.with_seed(100)) != g


def test_general_instances_are_rarely_potential():
    verdicts = [
        pb.recover_phi(gen_general(GenSpec(3, 1.0, seed, (1, 1000)))).potential for seed in range(100)
    ]
    assert sum(verdicts) == 0


@pytest.mark.parametrize(
    "kwargs",
    [
        dict(n=0),
        dict(n=3, density=0),
        dict(n=3, density=1.5),
        dict(n=3, weight_range=(5, 4)),
        dict(n=3, seed=-1),
        dict(n=3, seed=2**64),
    ],
)
def test_bad_spec(kwargs):
    with pytest.raises(pb.ConfigError):
        GenSpec(**kwargs)


def test_perturb_breaks_triangle(phi3):
    q = pb.build_q(phi3)
    for t, h, _ in q.arcs:
        assert not pb.recover_phi(perturb(q, (t, h), 1)).potential


def test_perturb_inverse_and_locality(phi3):
    q = pb.build_q(phi3)
    p = perturb(q, (2, 0), 3)
    assert p.weight(2, 0) == q.weight(2, 0) + 3
    assert [a for a in p.arcs if (a.tail, a.head) != (2, 0)] == [a for a in q.arcs if (a.tail, a.head) != (2, 0)]
    assert perturb(p, (2, 0), -3) == q


def test_perturb_on_tree_support_stays_potential():
    phi = pb.PotentialSystem(3, (0, 0, 0), ((0, 1, 5), (1, 2, 5)))
    q = perturb(pb.build_q(phi), (0, 1), 1)
    assert pb.recover_phi(q).potential


def test_perturb_errors(phi3):
    q = pb.build_q(phi3)
    with pytest.raises(KeyError):
        perturb(q, (0, 0), 1)
    with pytest.raises(ValueError):
        perturb(q, (0, 1), 0)

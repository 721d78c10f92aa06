import math

import numpy as np
import pytest

from paulicap.bounds import coherent_information
from paulicap.capacities import (
    BRANCH_EQUATORIAL,
    BRANCH_POLAR,
    classical_capacity,
    entanglement_assisted_capacity,
    mutual_information,
)
from paulicap.channel import BlochVector, ChannelParams
from paulicap.linalg import binary_entropy
from paulicap.oracles import oracle_holevo_classical, sample_params


# ------------------------------------------------------------------- classical

def test_classical_capacity_noiseless():
    res = classical_capacity(ChannelParams(1.0, 0.0))
    assert res.value == 1.0
    assert res.xi == 1.0
    assert res.branch == BRANCH_EQUATORIAL  # tie resolved to equatorial


def test_classical_capacity_pure_dephasing():
    res = classical_capacity(ChannelParams(0.5, 0.5))
    assert res.branch == BRANCH_POLAR
    assert res.xi == 1.0
    assert res.value == 1.0


def test_classical_capacity_equatorial_example():
    res = classical_capacity(ChannelParams(0.5, 0.0))
    assert res.branch == BRANCH_EQUATORIAL
    assert res.xi == pytest.approx(0.75, abs=1e-15)
    assert res.value == pytest.approx(0.1887218755, abs=1e-10)


def test_classical_capacity_fully_depolarizing():
    res = classical_capacity(ChannelParams(0.25, 0.25))
    assert res.value == pytest.approx(0.0, abs=1e-15)


def test_classical_capacity_consistency():
    rng = np.random.default_rng(0)
    for p in sample_params(rng, 30):
        res = classical_capacity(p)
        assert res.value == pytest.approx(1.0 - binary_entropy(res.xi), abs=1e-12)
        equatorial = (p.p0 - p.p3) ** 2 >= (2.0 * p.p0 + 2.0 * p.p3 - 1.0) ** 2
        assert res.branch == (BRANCH_EQUATORIAL if equatorial else BRANCH_POLAR)


def test_classical_capacity_against_theta_grid_oracle():
    rng = np.random.default_rng(1)
    for p in sample_params(rng, 10):
        oracle = oracle_holevo_classical(p, theta_grid_size=10_000)
        assert classical_capacity(p).value == pytest.approx(oracle, abs=1e-6)


def test_branch_continuity_on_both_boundary_lines():
    # The branch condition ties on p0 + 3 p3 = 1 and on 3 p0 + p3 = 1; the two
    # xi expressions must give the same capacity value there.
    for t in np.linspace(0.0, 1.0, 1000):
        for p0, p3 in ((t, (1.0 - t) / 3.0), ((1.0 - t) / 3.0, t)):
            xi_eq = 0.5 * (1.0 + p0 - p3)
            xi_po = p0 + p3
            v_eq = 1.0 - binary_entropy(min(max(xi_eq, 0.0), 1.0))
            v_po = 1.0 - binary_entropy(min(max(xi_po, 0.0), 1.0))
            assert abs(v_eq - v_po) < 1e-12


def test_capacity_bounds_on_simplex_grid():
    n = 201
    for i in range(n):
        for j in range(n - i):
            p = ChannelParams(i / (n - 1), j / (n - 1))
            c = classical_capacity(p).value
            e = entanglement_assisted_capacity(p)
            assert -1e-12 <= c <= 1.0 + 1e-12
            assert -1e-12 <= e <= 2.0 + 1e-12
            assert e >= c - 1e-12


# -------------------------------------------------------- entanglement assisted

def test_ea_capacity_examples():
    assert entanglement_assisted_capacity(ChannelParams(1.0, 0.0)) == 2.0
    assert entanglement_assisted_capacity(ChannelParams(0.25, 0.25)) == pytest.approx(0.0, abs=1e-15)
    assert entanglement_assisted_capacity(ChannelParams(0.5, 0.5)) == pytest.approx(1.0, abs=1e-15)
    assert entanglement_assisted_capacity(ChannelParams(0.5, 0.0)) == pytest.approx(0.5, abs=1e-15)


def test_ea_equals_shannon_complement():
    rng = np.random.default_rng(2)
    for p in sample_params(rng, 30):
        h = -sum(w * math.log2(w) for w in p.probs if w > 0.0)
        assert entanglement_assisted_capacity(p) == pytest.approx(2.0 - h, abs=1e-14)


def test_ea_equals_one_plus_coherent_information_at_center():
    rng = np.random.default_rng(3)
    for p in sample_params(rng, 30):
        lhs = entanglement_assisted_capacity(p)
        rhs = 1.0 + coherent_information(p, 0.0, 0.0)
        assert lhs == pytest.approx(rhs, abs=1e-12)


def test_exchange_symmetry():
    rng = np.random.default_rng(4)
    for p in sample_params(rng, 50):
        q = p.swapped()
        assert classical_capacity(p).value == pytest.approx(classical_capacity(q).value, abs=1e-12)
        assert entanglement_assisted_capacity(p) == pytest.approx(
            entanglement_assisted_capacity(q), abs=1e-12
        )


# ----------------------------------------------------------- mutual information

def test_mutual_information_center_equals_ea():
    rng = np.random.default_rng(5)
    center = BlochVector(0, 0, 0)
    for p in sample_params(rng, 20):
        assert mutual_information(p, center) == pytest.approx(
            entanglement_assisted_capacity(p), abs=1e-12
        )


def test_mutual_information_pure_input_identity_channel():
    assert mutual_information(ChannelParams(1, 0), BlochVector(0, 0, 1)) == pytest.approx(0.0, abs=1e-12)


def test_mutual_information_bounded_by_ea():
    rng = np.random.default_rng(6)
    for p in sample_params(rng, 10):
        cap = entanglement_assisted_capacity(p)
        for _ in range(20):
            cos_t = rng.uniform(-1, 1)
            phi = rng.uniform(0, 2 * math.pi)
            sin_t = math.sqrt(1 - cos_t**2)
            b = BlochVector(sin_t * math.cos(phi), sin_t * math.sin(phi), cos_t)
            assert mutual_information(p, b) <= cap + 1e-9

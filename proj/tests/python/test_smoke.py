import math

import numpy as np
import pytest

import monocert as mc


def test_witness_state():
    t = mc.measure_triple(mc.named_state("e223"), "ca")
    assert t.e_abc == pytest.approx(1.0, abs=1e-9)
    assert t.e_ab == pytest.approx(1.0, abs=1e-9)
    assert t.e_ac == pytest.approx(2 * math.sqrt(2) / 3, abs=1e-9)
    assert mc.is_witness(t)
    assert mc.solve_x(t, 2.0)["kind"] == "unbounded"


def test_entanglement_cost_certificates():
    t = mc.measure_triple(mc.named_state("afs"), "ec-lookup")
    cert = mc.certify_log_base(t)
    assert cert["alpha"] == pytest.approx(math.log(2) / math.log(math.log2(3)), abs=1e-12)
    assert mc.residual(t, cert["alpha"]) == pytest.approx(0.0, abs=1e-9)
    assert mc.certify_relaxed(t, 1.5)["alpha"] == pytest.approx(1.709511, abs=1e-5)
    with pytest.raises(mc.DomainError):
        mc.certify_relaxed(t, 1.7)


def test_state_construction_and_reduction():
    amps = np.zeros(8, dtype=complex)
    amps[0] = amps[7] = 1 / math.sqrt(2)
    ghz = mc.PureState([2, 2, 2], amps)
    assert list(ghz.dims) == [2, 2, 2]
    rho = mc.reduced_density(ghz, "AB")
    assert rho.shape == (4, 4)
    assert mc.wootters_concurrence(rho) == pytest.approx(0.0, abs=1e-12)
    assert mc.concurrence_of_assistance(rho) == pytest.approx(1.0, abs=1e-12)
    with pytest.raises(ValueError):
        mc.PureState([2, 2, 2], np.zeros(8, dtype=complex))
    with pytest.raises(ValueError):
        mc.reduced_density(ghz, "ABC")


def test_schmidt_closed_forms():
    s = mc.from_schmidt(0.5, 0.0, 0.5, 0.5, 0.5)
    t = mc.measure_triple(s, "c")
    assert t.e_abc == pytest.approx(math.sqrt(3) / 2, abs=1e-12)
    assert mc.solve_x(t, 2.0)["x"] == pytest.approx(0.5, abs=1e-12)


def test_min_alpha_symmetric():
    t = mc.MeasureTriple(0.9, 0.4, 0.4)
    m = mc.min_alpha(t, 1e-10)
    assert m["alpha"] == pytest.approx(math.log(2) / math.log(0.9 / 0.4), abs=1e-8)


def test_sweep_is_empirical_and_deterministic():
    a = mc.sweep(samples=500, seed=3)
    b = mc.sweep(samples=500, seed=3, threads=1)
    assert a["certificate"] == "empirical"
    assert a["certified_alpha"] == 2.0
    assert a["max_finite_x"] == b["max_finite_x"]


def test_figures():
    f1 = mc.figure1_rows()
    f2 = mc.figure2_rows()
    assert len(f1) == 300 and len(f2) == 391
    assert f1[-1][0] == pytest.approx(3.0)
    y, z1, z2 = f2[90]
    assert y == pytest.approx(1.0) and z1 == pytest.approx(1.7095112913514, abs=1e-9) and z2 == pytest.approx(1.0)

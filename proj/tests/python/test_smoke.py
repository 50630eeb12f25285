"""Smoke tests for the python bindings: one pass over each main operation."""

import math

import numpy as np
import pytest

import utq


def test_loop_norms_and_structures():
    f = utq.FourierLoop(4, coeffs=[(1, 1.0 + 0j)])
    assert math.isclose(utq.h_half_norm(f), math.sqrt(2.0), rel_tol=1e-14)

    g = utq.FourierLoop(4, coeffs=[(1, 1j)])
    assert math.isclose(utq.symplectic_form(f, g), -2.0, rel_tol=1e-14)
    assert math.isclose(utq.kahler_metric(f, f), 2.0, rel_tol=1e-14)
    assert utq.kahler_metric(f, g) == pytest.approx(
        utq.symplectic_form(f, utq.apply_J0(g)), abs=1e-14
    )


def test_ba_test_and_cross_ratio():
    rho = utq.cross_ratio(utq.Quadruple(1, 1j, -1, -1j))
    assert rho == 0.5 + 0j

    assert utq.ba_test(utq.CircleMap.identity(), 200, 1).epsilon_hat == 0.0
    zig = utq.ba_test(utq.CircleMap.zigzag(2.0), 500, 2)
    assert 0.0 < zig.epsilon_hat < 1.0


def test_composition_operator_and_siegel_point():
    spec = utq.ModeSpec(16)
    mob = utq.CircleMap.mobius(0.1 + 0.08j, 0.4)
    T = utq.build_th(mob, spec, 256)
    assert T.matrix.shape == (32, 32)
    a, b = utq.blocks(T)
    assert np.linalg.norm(b) < 1e-8
    Z, asym = utq.siegel_point_of(T)
    assert np.linalg.norm(Z) < 1e-8 and asym < 1e-8

    check = utq.operator_norm_bound_check(mob, T)
    assert check.norm_est <= check.bound + 1e-6


def test_siegel_action_group_law():
    A1 = utq.random_symplectic(4, 11, 4, 0.3)
    A2 = utq.random_symplectic(4, 12, 4, 0.3)
    assert A1.relations_defect() < 1e-10
    Z = utq.siegel_act(A2, np.zeros((4, 4), dtype=complex))
    lhs = utq.siegel_act(A1 * A2, Z)
    rhs = utq.siegel_act(A1, utq.siegel_act(A2, Z))
    assert np.linalg.norm(lhs - rhs) < 1e-8
    ok, min_eig, _ = utq.in_disc(lhs)
    assert ok and min_eig > 0


def test_quantum_differential_ratio_and_rank():
    f = utq.FourierLoop(4, coeffs=[(1, 0.3 - 0.2j), (3, 0.1 + 0.05j)])
    hs, sobolev, ratio = utq.hs_norm_vs_sobolev(f)
    assert math.isclose(ratio, utq.QDIFF_HS_RATIO, rel_tol=1e-12)

    spec = utq.ModeSpec(12, include_zero=True)
    zk = utq.FourierLoop(12, real=False, include_zero=True, coeffs=[(5, 1.0 + 0j)])
    dq = utq.quantum_differential(zk, spec)
    assert utq.matrix_rank(dq.matrix) == 5


def test_fock_space_smoke():
    basis = utq.FockBasis.make(utq.FockConfig(3, 10))
    vac = utq.vacuum(basis)
    assert utq.annihilation(1, basis).apply(vac).norm() == 0.0

    Z = np.diag([0.2, 0.1, 0.15]).astype(complex)
    truncated, closed = utq.coherent_inner(Z, Z, basis)
    assert abs(truncated - closed) / abs(closed) < 1e-4  # degree-10 truncation

    n = utq.second_quantize(np.eye(3, dtype=complex), basis)
    state = utq.basis_state(basis, [2, 1, 0])
    assert utq.fock_inner(state, n.apply(state)) == pytest.approx(3.0)


def test_cocycle_rank_one():
    z = np.zeros((2, 2), dtype=complex)
    b = z.copy()
    b[0, 0] = 1.0
    g = z.copy()
    g[0, 0] = 1.0
    X1 = utq.SpAlgebraElement(z, b, z)
    X2 = utq.SpAlgebraElement(z, z, g)
    basis = utq.FockBasis.make(utq.FockConfig(2, 8))
    scalar, closed, residual = utq.cocycle_defect(X1, X2, basis)
    assert abs(scalar - 0.5) < 1e-12
    assert closed == 0.5 + 0j
    assert residual < 1e-9


def test_acceptance_entry_point():
    name, passed, report_json = utq.run_acceptance(1)
    assert passed and "structure" in name


def test_json_interop():
    f = utq.loop_from_json('{"N": 2, "real": true, "coeffs": [[1, 1.0, 0.0]]}')
    assert math.isclose(utq.h_half_norm(f), math.sqrt(2.0), rel_tol=1e-14)
    h = utq.map_from_json('{"kind": "mobius", "a": [0.0, 0.0], "angle": 0.25}')
    assert h.lift(0.0) == pytest.approx(0.25)

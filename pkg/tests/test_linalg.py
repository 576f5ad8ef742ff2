"""Hermitian eigendecomposition and inverse helpers."""

import numpy as np
import pytest

from dmrbf import (
    ConditioningError,
    DimensionError,
    hermitian_evd,
    inv_hpd,
    inv_sqrt_hpd,
    pinv_hpsd,
)

from conftest import random_hermitian, random_hpd


def test_evd_reconstructs_and_orders():
    rng = np.random.default_rng(101)
    for _ in range(100):
        n = int(rng.integers(1, 9))
        m = random_hermitian(rng, n)
        evd = hermitian_evd(m)
        q, lam = evd.eigenvectors, evd.eigenvalues
        scale = max(1.0, np.linalg.norm(m))
        assert np.linalg.norm((q * lam) @ q.conj().T - m) <= 1e-12 * scale
        assert np.linalg.norm(q.conj().T @ q - np.eye(n)) <= 1e-12
        assert lam.dtype == np.float64
        assert np.all(np.diff(lam) <= 0)


def test_evd_matches_numpy_eigh():
    rng = np.random.default_rng(102)
    for _ in range(50):
        n = int(rng.integers(2, 9))
        m = random_hermitian(rng, n)
        lam = hermitian_evd(m).eigenvalues
        ref = np.linalg.eigvalsh(m)[::-1]
        assert np.allclose(lam, ref, rtol=0.0, atol=1e-12 * max(1.0, abs(ref).max()))


def test_evd_rank_one():
    # u u^H has one eigenvalue ||u||^2, the rest zero, top eigenvector || u.
    rng = np.random.default_rng(103)
    u = rng.standard_normal(6) + 1j * rng.standard_normal(6)
    evd = hermitian_evd(np.outer(u, u.conj()))
    assert abs(evd.eigenvalues[0] - np.vdot(u, u).real) <= 1e-12 * np.vdot(u, u).real
    assert np.all(np.abs(evd.eigenvalues[1:]) <= 1e-12 * np.vdot(u, u).real)
    q0 = evd.eigenvectors[:, 0]
    assert abs(abs(np.vdot(q0, u)) - np.linalg.norm(u)) <= 1e-10


def test_evd_rejects_bad_input():
    with pytest.raises(DimensionError):
        hermitian_evd(np.ones((2, 3), dtype=complex))
    with pytest.raises(DimensionError):
        hermitian_evd(np.array([[1.0, 2.0], [0.0, 1.0]], dtype=complex))


def test_inv_hpd_residual():
    rng = np.random.default_rng(104)
    for _ in range(60):
        n = int(rng.integers(2, 9))
        m = random_hpd(rng, n, cond=1e3)
        assert np.linalg.norm(m @ inv_hpd(m) - np.eye(n)) <= 1e-11
    # residual grows like cond * eps, so allow more room at cond 1e6
    for _ in range(60):
        n = int(rng.integers(2, 9))
        m = random_hpd(rng, n, cond=1e6)
        assert np.linalg.norm(m @ inv_hpd(m) - np.eye(n)) <= 1e-9


def test_inv_hpd_matches_rank_one_closed_form():
    # (s*I + a*u u^H)^-1 = I/s - (a/(s*(s + a*||u||^2))) u u^H
    rng = np.random.default_rng(105)
    for _ in range(40):
        n = int(rng.integers(2, 9))
        u = rng.standard_normal(n) + 1j * rng.standard_normal(n)
        s = float(10.0 ** rng.uniform(-2, 2))
        a = float(10.0 ** rng.uniform(-2, 2))
        m = s * np.eye(n) + a * np.outer(u, u.conj())
        uu = np.vdot(u, u).real
        ref = np.eye(n) / s - (a / (s * (s + a * uu))) * np.outer(u, u.conj())
        got = inv_hpd((m + m.conj().T) / 2)
        assert np.linalg.norm(got - ref) <= 1e-10 * np.linalg.norm(ref)


def test_inv_hpd_rejects_near_singular():
    q = np.eye(3, dtype=complex)
    m = (q * np.array([1.0, 1e-3, 1e-16])) @ q.conj().T
    with pytest.raises(ConditioningError) as exc:
        inv_hpd(m)
    assert exc.value.min_eig <= 1e-14 * exc.value.max_eig


def test_inv_sqrt_hpd_sandwich():
    rng = np.random.default_rng(106)
    for _ in range(60):
        n = int(rng.integers(2, 9))
        m = random_hpd(rng, n, cond=1e4)
        s = inv_sqrt_hpd(m)
        assert np.linalg.norm(s - s.conj().T) <= 1e-12 * np.linalg.norm(s)
        assert np.linalg.norm(s @ m @ s - np.eye(n)) <= 1e-10
        assert np.linalg.norm(s @ s - inv_hpd(m)) <= 1e-10 * np.linalg.norm(s @ s)


def test_pinv_hpsd_penrose_conditions():
    rng = np.random.default_rng(107)
    for _ in range(60):
        n = int(rng.integers(2, 9))
        r = int(rng.integers(1, n + 1))
        z = rng.standard_normal((n, r)) + 1j * rng.standard_normal((n, r))
        m = z @ z.conj().T
        m = (m + m.conj().T) / 2
        p = pinv_hpsd(m)
        scale = max(1.0, np.linalg.norm(m), np.linalg.norm(p))
        assert np.linalg.norm(m @ p @ m - m) <= 1e-9 * scale
        assert np.linalg.norm(p @ m @ p - p) <= 1e-9 * scale
        assert np.linalg.norm((m @ p) - (m @ p).conj().T) <= 1e-10 * scale
        assert np.linalg.norm(p - np.linalg.pinv(m, hermitian=True)) <= 1e-8 * scale


def test_pinv_hpsd_rank_one_and_zero():
    rng = np.random.default_rng(108)
    u = rng.standard_normal(5) + 1j * rng.standard_normal(5)
    uu = np.vdot(u, u).real
    p = pinv_hpsd(np.outer(u, u.conj()))
    assert np.linalg.norm(p - np.outer(u, u.conj()) / uu**2) <= 1e-12
    assert np.linalg.norm(pinv_hpsd(np.zeros((4, 4), dtype=complex))) == 0.0

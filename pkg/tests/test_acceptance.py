"""End-to-end gates for the headline numerical identities.

Every test pins its grid and tolerance; the margins were calibrated against
independent oracles (closed forms where they exist, adaptive quadrature or
asymptotic error laws elsewhere) before being frozen here.  One test is a
strict expected failure: the
transform identity on the coarse reference grid sits on a discretization
floor that no implementation can cross, and the companion test shows the
identity holds once the grid is refined.
"""

import math
import subprocess
import sys
import time
import warnings

import numpy as np
import pytest

from abelharm import (
    KernelSpec,
    SupportSpec,
    abel_ft,
    abel_from_gaussians,
    abel_kernel,
    abel_regularized_inverse,
    cauchy_represent,
    check_pl_bound,
    convolve,
    cr_residual,
    envelope_bound,
    estimate_type,
    evaluate_entire,
    evaluate_upper,
    forward_ft,
    half_kernel_ft,
    hardy_split,
    integrate,
    inverse_ft,
    make_grid,
    poisson_kernel,
    radial_integrate,
    sample_function,
    sample_kernel,
    sample_spectrum,
)
from abelharm.summability import default_schedule, summability_verdict


def test_poisson_kernel_unit_mass():
    t0 = time.perf_counter()
    for t in (0.1, 1.0, 10.0):
        # dimension one has an elementary antiderivative; check the
        # quadrature against it on a box before trusting the full mass
        box = radial_integrate(lambda r: poisson_kernel(1, t, r), 1, upper=50.0 * t)
        arctan = (2.0 / math.pi) * math.atan(50.0)
        assert abs(box - arctan) < 1e-12
        for n in (1, 2, 3):
            mass = radial_integrate(lambda r: poisson_kernel(n, t, r), n)
            assert abs(mass - 1.0) <= 1e-6
    assert time.perf_counter() - t0 < 5.0


@pytest.mark.xfail(
    strict=True,
    reason="the kernel kink at the origin aliases as (pi/3)*spacing^2, about "
           "2.5e-5 on the 16384-point box of half-width 40; no implementation "
           "of the lattice transform can beat that floor, and the refined-grid "
           "companion test shows the identity itself is sound",
)
def test_abel_transform_matches_poisson_on_reference_grid():
    grid = make_grid(1, 40.0, 2 ** 14)
    F = forward_ft(sample_kernel(grid, KernelSpec("abel", 1.0, 1)))
    xi = F.grid.axis()
    win = np.abs(xi) <= 4.0
    err = float(np.max(np.abs(F.values[win] - abel_ft(1, 1.0, xi[win]))))
    assert err <= 1e-6


def test_abel_transform_matches_poisson_on_refined_grid():
    t0 = time.perf_counter()
    grid = make_grid(1, 40.0, 2 ** 17)
    F = forward_ft(sample_kernel(grid, KernelSpec("abel", 1.0, 1)))
    xi = F.grid.axis()
    win = np.abs(xi) <= 4.0
    err = float(np.max(np.abs(F.values[win] - abel_ft(1, 1.0, xi[win]))))
    assert err <= 1e-6
    assert time.perf_counter() - t0 < 5.0


def test_half_line_transforms_match_closed_forms():
    grid = make_grid(1, 40.0, 2 ** 20)
    for fam, sign in (("abel_plus", "+"), ("abel_minus", "-")):
        F = forward_ft(sample_kernel(grid, KernelSpec(fam, 1.0, 1)))
        xi = F.grid.axis()
        win = np.abs(xi) <= 4.0
        err = float(np.max(np.abs(F.values[win] - half_kernel_ft(sign, 1.0, xi[win]))))
        assert err <= 1e-4
    xi = np.linspace(-4.0, 4.0, 1601)
    plus, minus = half_kernel_ft("+", 1.0, xi), half_kernel_ft("-", 1.0, xi)
    assert np.max(np.abs(minus - np.conjugate(plus))) <= 1e-12
    assert np.max(np.abs(plus + minus - abel_ft(1, 1.0, xi))) <= 1e-12


def test_gaussian_average_rebuilds_abel_kernel():
    t0 = time.perf_counter()
    x = np.linspace(-3.0, 3.0, 201)
    for t in (0.5, 1.0, 2.0):
        err = np.max(np.abs(abel_from_gaussians(t, x) - abel_kernel(t, x)))
        assert err <= 1e-8
    assert time.perf_counter() - t0 < 10.0


def test_poisson_semigroup_under_convolution():
    t0 = time.perf_counter()
    grid = make_grid(1, 200.0, 2 ** 16)
    p1 = sample_kernel(grid, KernelSpec("poisson", 1.0, 1))
    conv = convolve(p1, p1)
    x = grid.axis()
    win = np.abs(x) <= 10.0
    target = poisson_kernel(1, 2.0, x[win])
    rel = np.max(np.abs(conv.values[win] - target) / target)
    assert rel <= 1e-4
    assert time.perf_counter() - t0 < 30.0


def test_damped_means_recover_integrals():
    grid = make_grid(1, 2000.0, 400000)
    witnesses = [
        sample_function(grid, lambda x: np.exp(-math.pi * x * x)),
        sample_kernel(grid, KernelSpec("poisson", 1.0, 1)),
        sample_function(grid, lambda x: np.exp(-2.0 * math.pi * np.abs(x))),
    ]
    schedule = default_schedule()
    for h in witnesses:
        reference = integrate(h).real
        rep_a = summability_verdict(h, "abel", schedule)
        rep_g = summability_verdict(h, "gauss", schedule)
        assert rep_a.converged and rep_g.converged
        assert abs(rep_a.limit_estimate - reference) <= 1e-3
        assert abs(rep_a.limit_estimate - rep_g.limit_estimate) <= 2e-3


def test_damped_inverse_matches_poisson_convolution():
    grid = make_grid(1, 128.0, 81920)
    f = sample_function(grid, lambda x: np.exp(-math.pi * x * x))
    F = forward_ft(f)
    xq = np.linspace(-2.0, 2.0, 11)
    iq = np.round((xq + grid.half_width) / grid.spacing).astype(int)
    for t in (0.2, 0.1, 0.05):
        p = sample_kernel(grid, KernelSpec("poisson", t, 1))
        conv = convolve(p, f)
        reg = abel_regularized_inverse(F, t, xq)
        assert np.max(np.abs(reg - conv.values[iq])) <= 1e-5


def test_spectral_split_partitions_identity():
    grid = make_grid(1, 40.0, 2 ** 14)
    cases = [
        (lambda x: np.exp(-math.pi * x * x), "schwartz-like"),
        (lambda x: poisson_kernel(1, 1.0, x), "integrable"),
        (lambda x: np.exp(-2.0 * math.pi * np.abs(x)), "schwartz-like"),
    ]
    for func, tag in cases:
        f = sample_function(grid, func, decay_tag=tag)
        plus, minus = hardy_split(f)
        recon = inverse_ft(plus).values + inverse_ft(minus).values
        assert np.max(np.abs(recon - f.values)) <= 1e-8


def test_half_plane_representations_agree(
        exp_spectrum, exp_boundary, poisson_split, gauss_split):
    w_pois = poisson_split[0]
    w_gauss = gauss_split[0]
    f_pois = inverse_ft(w_pois)
    f_gauss = inverse_ft(w_gauss)
    xq = np.linspace(-2.0, 2.0, 25)
    for F, f_space in ((exp_spectrum, exp_boundary), (w_pois, f_pois), (w_gauss, f_gauss)):
        for t in (0.25, 0.5, 1.0):
            spectral = evaluate_upper(F, xq + 1j * t)
            damped = abel_regularized_inverse(F, t, xq)
            cauchy = cauchy_represent(f_space, "upper", t, xq)
            assert np.max(np.abs(spectral - damped)) <= 1e-5
            assert np.max(np.abs(spectral - cauchy)) <= 1e-5
            assert np.max(np.abs(damped - cauchy)) <= 1e-5


def test_boundary_values_recovered_continuously(exp_spectrum, poisson_split):
    xb = np.linspace(-2.0, 2.0, 81)
    for F in (exp_spectrum, poisson_split[0]):
        base = evaluate_upper(F, xb)
        sups = []
        for t in (0.2, 0.1, 0.05, 0.025):
            sups.append(float(np.max(np.abs(evaluate_upper(F, xb + 1j * t) - base))))
        assert all(b <= a for a, b in zip(sups, sups[1:]))
        assert sups[-1] <= 1e-2


def test_cr_residual_certifies_holomorphy(exp_spectrum):
    r_coarse = cr_residual(exp_spectrum, 1j, 1e-3)
    r_fine = cr_residual(exp_spectrum, 1j, 5e-4)
    assert r_coarse <= 1e-5
    # halving the step must shrink the second-order residual at least 3x
    assert r_coarse / r_fine >= 3.0
    anti = cr_residual(
        exp_spectrum, 1j, 1e-3,
        evaluator=lambda w: evaluate_upper(exp_spectrum, w).conjugate())
    assert anti >= 1e-2


def test_growth_bound_verdicts():
    grid = make_grid(1, 2.0, 2048)
    band = sample_spectrum(grid, lambda xi: np.ones_like(xi),
                           SupportSpec.interval(-1.0, 1.0))
    xs = np.linspace(-5.0, 5.0, 21)
    ys = np.linspace(-3.0, 3.0, 13)
    rep = check_pl_bound(band, 2.0 * math.pi, "measured", (xs, ys), tol=1e-6)
    assert rep.passed
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", RuntimeWarning)
        bad = check_pl_bound(band, math.pi, "measured", (xs, ys), tol=1e-6)
    assert not bad.passed
    spot = abs(evaluate_entire(band, 1j))
    want = math.sinh(2.0 * math.pi) / math.pi
    assert abs(spot - want) / want <= 1e-4
    env = envelope_bound(band, 1.0)
    want_env = 2.0 * math.exp(2.0 * math.pi)
    assert abs(env - want_env) / want_env <= 1e-4


def test_envelope_dominates_lattice():
    grid = make_grid(1, 2.0, 2048)
    spectra = [
        sample_spectrum(grid, lambda xi: np.ones_like(xi), SupportSpec.interval(-1.0, 1.0)),
        sample_spectrum(grid, lambda xi: np.ones_like(xi), SupportSpec.interval(0.0, 0.5)),
        sample_spectrum(grid, lambda xi: 1.0 - np.abs(xi), SupportSpec.interval(-1.0, 1.0)),
    ]
    xs = np.linspace(-5.0, 5.0, 21)
    ys = np.linspace(-3.0, 3.0, 13)
    for F in spectra:
        for y in ys:
            env = envelope_bound(F, float(y))
            vals = np.abs(evaluate_entire(F, xs + 1j * y))
            assert np.all(vals <= env * (1.0 + 1e-8))


def test_type_estimates_within_gate():
    grid = make_grid(1, 2.0, 2048)
    band = sample_spectrum(grid, lambda xi: np.ones_like(xi),
                           SupportSpec.interval(-1.0, 1.0))
    half = sample_spectrum(grid, lambda xi: np.ones_like(xi),
                           SupportSpec.interval(0.0, 0.5))
    heights = (2.0, 3.0, 4.0, 5.0)
    assert abs(estimate_type(band, heights) - 2.0 * math.pi) <= 0.3
    assert abs(estimate_type(half, heights) - math.pi) <= 0.3


def test_reports_are_deterministic(tmp_path):
    t0 = time.perf_counter()
    outs = []
    for tag in ("a", "b"):
        out = tmp_path / tag
        res = subprocess.run(
            [sys.executable, "-m", "abelharm.cli", "run", "--suite", "all",
             "--out", str(out)],
            capture_output=True, text=True, timeout=280,
        )
        assert res.returncode == 0, res.stderr + res.stdout[-2000:]
        assert "poisson_normalization n=1 t=1: pass" in res.stdout
        outs.append(out)
    elapsed = time.perf_counter() - t0
    a, b = outs
    csvs = sorted(p.relative_to(a) for p in a.rglob("*.csv"))
    assert len(csvs) >= 15
    for rel in csvs:
        assert (a / rel).read_bytes() == (b / rel).read_bytes(), str(rel)
    assert (a / "summary.txt").read_bytes() == (b / "summary.txt").read_bytes()
    assert (a / "summary.json").read_bytes() == (b / "summary.json").read_bytes()
    assert elapsed < 300.0

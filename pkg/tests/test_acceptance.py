"""Acceptance suite.  Each test prints one ``PASS``/``FAIL`` line and then asserts."""
import itertools
import time

import numpy as np
import pytest

from quasizeno import zeno
from quasizeno.hilbert import build_site_operators, spin_chain_basis
from quasizeno.labcli.config import build_system
from quasizeno.labcli.presets import preset_config
from quasizeno.labcli.runner import operator_error_history, run_experiment
from quasizeno.models import ModelSpec, ObservableSpec, build_hamiltonian, build_observable
from quasizeno.numkernel import op_norm

from conftest import ThreeLevel, random_hermitian


@pytest.fixture
def report_line(capsys):
    def emit(number, title, ok, detail):
        with capsys.disabled():
            print(f"\nacceptance {number} [{'PASS' if ok else 'FAIL'}] {title}: {detail}")
        assert ok, detail
    return emit


def test_1_three_level_analytic(report_line):
    start = time.perf_counter()
    worst = {"hz1": 0.0, "hz2": 0.0, "eig": 0.0, "dark": 0.0}
    for lam in (1.0, 0.3, 2.5):
        tl = ThreeLevel(lam)
        hz1 = zeno.quasi_zeno_hamiltonian(tl.h, tl.p1, 1)
        hz2 = zeno.quasi_zeno_hamiltonian(tl.h, tl.p1, 2)
        hand = lam**2 / 2 * np.array([[1, 0, 1], [0, 0, 0], [1, 0, 1]])
        eig = zeno.steady_state_analysis(zeno.effective_hamiltonian(tl.h, tl.p1, 1e-2)).eigenvalues
        worst["hz1"] = max(worst["hz1"], np.max(np.abs(hz1)))
        worst["hz2"] = max(worst["hz2"], np.max(np.abs(hz2 - hand)))
        worst["eig"] = max(worst["eig"], np.max(np.abs(eig - [0, lam**2])))
        worst["dark"] = max(worst["dark"], np.linalg.norm(tl.h @ tl.minus))
    elapsed = time.perf_counter() - start
    ok = (worst["hz1"] <= 1e-14 and worst["hz2"] <= 1e-12 and worst["eig"] <= 1e-12
          and worst["dark"] <= 1e-14 and elapsed < 1)
    detail = ", ".join(f"{k}={v:.1e}" for k, v in worst.items()) + f", {elapsed:.2f}s"
    report_line(1, "three-level closed forms", ok, detail)


def test_2_three_level_dynamics(report_line):
    start = time.perf_counter()
    tl, dt = ThreeLevel(1.0), 1e-3
    stack = zeno.effective_hamiltonian(tl.h, tl.p1, dt)
    analytic_err = exact_err = 0.0
    for x in np.linspace(0, 10, 21):  # x = tau * dt
        n = int(round(x / dt**2))
        tau = n * dt
        psi_eff = zeno.effective_evolution(stack, tau) @ tl.minus1
        expected = (np.exp(-tau * dt / 2) * tl.plus + tl.minus) / np.sqrt(2)
        analytic_err = max(analytic_err, np.max(np.abs(psi_eff - expected)))
        psi_exact = zeno.exact_stroboscopic(tl.h, tl.p1, dt, n) @ tl.minus1
        exact_err = max(exact_err, np.linalg.norm(psi_exact - psi_eff))
    late = zeno.effective_evolution(stack, 30 / dt) @ tl.minus1
    survival = np.vdot(late, late).real
    elapsed = time.perf_counter() - start
    ok = (analytic_err <= 1e-3 and abs(survival - 0.5) <= 1e-2 and exact_err <= 5e-3
          and elapsed < 10)
    detail = (f"analytic {analytic_err:.1e}, exact-vs-effective {exact_err:.1e}, "
              f"late survival {survival:.6f}, {elapsed:.2f}s")
    report_line(2, "three-level dynamics", ok, detail)


def test_3_fig4_qualitative(report_line):
    report = run_experiment(preset_config("fig4", mode="compare", stride=1))
    qzd = report.parts["qzd"]
    n0_dev = np.max(np.abs(qzd.column("n_0") - 1))
    n3_dev = np.max(np.abs(qzd.column("n_3")))
    growth = {m: float(np.max(report.parts[m].column("n_3"))) for m in ("exact", "effective")}
    monotone = all(np.all(np.diff(report.parts[m].survival) <= 0) for m in ("exact", "effective"))
    ok = n0_dev <= 1e-12 and n3_dev <= 1e-12 and min(growth.values()) > 0.1 and monotone
    detail = (f"qzd |n_0-1|={n0_dev:.1e} |n_3|={n3_dev:.1e}; max n_3 exact "
              f"{growth['exact']:.3f} effective {growth['effective']:.3f}; monotone={monotone}")
    report_line(3, "fig4 qualitative", ok, detail)


def test_4_error_scaling(report_line):
    start = time.perf_counter()
    system = build_system(preset_config("fig4"))
    p = system.projectors.projectors[system.subspace]
    tau = preset_config("fig4").tau
    errs = {}
    for dt in (1e-2, 5e-3):
        _, _, errs[dt], _ = operator_error_history(system.hamiltonian, p, dt,
                                                   int(round(tau / dt)), stride=10**9)
    ratio = errs[1e-2] / errs[5e-3]
    elapsed = time.perf_counter() - start
    ok = 1.5 <= ratio <= 2.5 and elapsed < 30
    detail = (f"tauJ={tau:g}, err(1e-2)={errs[1e-2]:.3e}, err(5e-3)={errs[5e-3]:.3e}, "
              f"ratio {ratio:.3f}, {elapsed:.1f}s")
    report_line(4, "error scaling", ok, detail)


def _naive(h, p, k):
    q = np.eye(len(p)) - p
    out = p @ h
    for _ in range(k - 1):
        out = out @ q @ h
    return out @ p


def test_5_property_suite(report_line):
    worst = dict.fromkeys(("projector", "hermitian", "support", "psd", "naive", "unitary", "norm_rise"),
                          0.0)
    cases = 0
    for seed in range(240):
        rng = np.random.default_rng(seed)
        dim = 1 + seed % 16
        h = random_hermitian(rng, dim)
        values = rng.integers(-2, 3, size=dim).astype(float)
        q, _ = np.linalg.qr(rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim)))
        ps = zeno.projectors_from_observable(q @ np.diag(values) @ q.conj().T)
        projs = ps.projectors
        err = op_norm(sum(projs) - np.eye(dim))
        for i, pi in enumerate(projs):
            err = max(err, op_norm(pi @ pi - pi))
            for pj in projs[i + 1:]:
                err = max(err, op_norm(pi @ pj))
        worst["projector"] = max(worst["projector"], err)
        p = projs[seed % len(projs)]
        scale = max(1.0, op_norm(h))
        for k in range(1, 5):
            hz = zeno.quasi_zeno_hamiltonian(h, p, k)
            worst["hermitian"] = max(worst["hermitian"], op_norm(hz - hz.conj().T) / scale**k)
            worst["support"] = max(worst["support"], op_norm(p @ hz @ p - hz) / scale**k)
            worst["naive"] = max(worst["naive"], op_norm(hz - _naive(h, p, k)) / scale**k)
            if k == 2:
                worst["psd"] = max(worst["psd"], -np.linalg.eigvalsh(hz).min() / scale**2)
        dt = rng.uniform(1e-3, 0.1)
        u1 = zeno.effective_evolution(zeno.effective_hamiltonian(h, p, dt, order=1),
                                      rng.uniform(0, 50))
        worst["unitary"] = max(worst["unitary"], op_norm(u1.conj().T @ u1 - np.eye(dim)))
        psi0 = p @ (rng.normal(size=dim) + 1j * rng.normal(size=dim))
        _, states = zeno.propagate(zeno.exact_step(h, p, dt), psi0 / np.linalg.norm(psi0), 40)
        norms = np.linalg.norm(states, axis=1)
        worst["norm_rise"] = max(worst["norm_rise"], float(np.max(np.diff(norms), initial=0)))
        cases += 1
    ok = (cases >= 200 and worst["projector"] <= 1e-10 and worst["hermitian"] <= 1e-10
          and worst["support"] <= 1e-10 and worst["psd"] <= 1e-10 and worst["naive"] <= 1e-12
          and worst["unitary"] <= 1e-10 and worst["norm_rise"] <= 1e-12)
    detail = f"{cases} cases; " + ", ".join(f"{k}={v:.1e}" for k, v in worst.items())
    report_line(5, "property suite", ok, detail)


def test_6_monte_carlo(report_line):
    start = time.perf_counter()
    tl, dt, n, runs = ThreeLevel(1.0), 1e-2, 500, 10**4
    ens = zeno.sample_ensemble(tl.h, tl.projset, tl.minus1, dt, n, runs, seed=2024)
    psi = zeno.exact_stroboscopic(tl.h, tl.p1, dt, n) @ tl.minus1
    p = np.vdot(psi, psi).real
    sigma = np.sqrt(p * (1 - p) / runs)
    z = (ens.no_jump_fraction - p) / sigma
    elapsed = time.perf_counter() - start
    ok = abs(z) <= 3 and elapsed < 60
    detail = (f"no-jump {ens.no_jump_fraction:.4f} vs {p:.4f} ({z:+.2f} sigma), "
              f"{elapsed:.1f}s")
    report_line(6, "Monte-Carlo consistency", ok, detail)


def test_7_generalizations(report_line):
    sys4 = build_system(preset_config("fig4"))
    h, p = sys4.hamiltonian, sys4.projectors.projectors[sys4.subspace]
    dt, n = 1e-2, 500
    equal = op_norm(zeno.nonuniform_effective_evolution(h, p, [dt] * n)
                    - zeno.effective_evolution(zeno.effective_hamiltonian(h, p, dt), n * dt))
    rng = np.random.default_rng(7)
    ratios = []
    for spread in (0.2, 0.5, 0.9):
        steps = dt * (1 + spread * rng.uniform(-1, 1, size=n))
        gap = op_norm(zeno.nonuniform_effective_evolution(h, p, steps)
                      - zeno.second_order_closed_form(h, p, steps))
        bound = np.ptp(steps) * op_norm(h) ** 3 * steps.sum()
        ratios.append(gap / bound)
    constant = op_norm(zeno.time_dependent_effective_evolution([h] * n, p, [dt] * n)
                       - zeno.nonuniform_effective_evolution(h, p, [dt] * n))
    ok = equal <= 1e-10 and max(ratios) <= 10 and constant <= 1e-10
    detail = (f"equal-step {equal:.1e}, closed-form gap/bound max {max(ratios):.2e}, "
              f"time-dependent {constant:.1e}")
    report_line(7, "generalizations", ok, detail)


def _kron_site(op, site, n):
    mats = [np.eye(2)] * n
    mats[site] = op
    out = np.eye(1)
    for m in mats:
        out = np.kron(out, m)
    return out


def test_8_spin_chain_structure(report_line):
    n, region, J = 4, (1, 2), 0.7
    basis = spin_chain_basis(n)
    assert list(basis.labels) == ["".join(t) for t in itertools.product("ud", repeat=n)]
    ops = build_site_operators(basis)
    h = build_hamiltonian(ModelSpec("XXChain", J=J, sites=n), ops)
    ps = zeno.projectors_from_observable(
        build_observable(ObservableSpec.region(region, "RegionMagnetization"), ops))

    # local basis (u, d): S+ = |u><d|
    sp = [_kron_site(np.array([[0, 1], [0, 0]]), i, n) for i in range(n)]
    sm = [m.T for m in sp]
    bonds = [(i, i + 1) for i in range(n - 1)]
    in_a = [i in region for i in range(n)]
    eq3 = np.zeros((2**n, 2**n))
    for a, b in bonds:
        if in_a[a] == in_a[b]:
            eq3 -= J * (sp[a] @ sm[b] + sp[b] @ sm[a])
    crossing = [(a, b) if in_a[a] else (b, a) for a, b in bonds if in_a[a] != in_a[b]]
    eq4 = np.zeros((2**n, 2**n))
    for (i, j), (k, l) in itertools.product(crossing, repeat=2):
        eq4 += J**2 * (sp[i] @ sm[j] @ sm[k] @ sp[l] + sm[i] @ sp[j] @ sp[k] @ sm[l])

    worst = 0.0
    for proj in ps.projectors:
        worst = max(worst,
                    np.max(np.abs(zeno.quasi_zeno_hamiltonian(h, proj, 1) - proj @ eq3 @ proj)),
                    np.max(np.abs(zeno.quasi_zeno_hamiltonian(h, proj, 2) - proj @ eq4 @ proj)))
    ok = worst <= 1e-12 and len(ps) == 3
    report_line(8, "spin-chain structure", ok, f"{len(ps)} subspaces, max entry error {worst:.1e}")

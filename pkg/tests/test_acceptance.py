"""Acceptance gate: eleven cross-verification criteria at full scale.

Each test prints one PASS/FAIL line (bypassing capture) and enforces its
tolerance and time budget.  Identity checks are exact rational comparisons;
only the spectrum and entropy criteria carry float tolerances, pinned here.
"""

import time
from fractions import Fraction as F

from grothcrystal.cli import main
from grothcrystal.meltingcrystal import z_box_det_series
from grothcrystal.partitions import count_boxed
from grothcrystal.suites import run_suite

SEED = 1


def _run_tags(suite: str, *tags: str):
    """Run the full-scale suite once per tag; return (cases, failures, elapsed)."""
    cases = 0
    failures = []
    t0 = time.perf_counter()
    for tag in tags:
        rep = run_suite(suite, "full", SEED, tags=tag)
        cases += rep.cases
        failures.extend(rep.failures)
    return cases, failures, time.perf_counter() - t0


def _announce(capsys, num: int, ok: bool, detail: str) -> None:
    with capsys.disabled():
        print(f"ACCEPTANCE {num:02d}: {'PASS' if ok else 'FAIL'} - {detail}")


def test_criterion_01_wavefunction_identities(capsys):
    # five-vertex amplitudes equal the closed form, both orientations,
    # chains up to 7 sites, 3 particles, 3 seeded parameter draws
    cases, failures, dt = _run_tags("fv", "fv.wavefunction")
    ok = cases == 138 and not failures and dt < 30.0
    _announce(capsys, 1, ok, f"{cases} exact amplitude checks in {dt:.1f}s")
    assert cases == 138
    assert failures == []
    assert dt < 30.0


def test_criterion_02_cauchy_and_summation(capsys):
    # pairing and box-sum identities for up to 3 variables, width 3, 5 draws
    cases, failures, dt = _run_tags("groth", "groth.cauchy", "groth.summation")
    ok = cases == 121 and not failures and dt < 10.0
    _announce(capsys, 2, ok, f"{cases} exact identity checks in {dt:.1f}s")
    assert cases == 121
    assert failures == []
    assert dt < 10.0


def test_criterion_03_chain_decompositions(capsys):
    # chain, one-variable addition, and multivariable branching, all shapes
    # in the 3x3 (and 3x4) boxes, exact
    cases, failures, dt = _run_tags(
        "groth", "groth.addition", "groth.chain", "groth.branching"
    )
    ok = cases == 3 and not failures and dt < 5.0
    _announce(capsys, 3, ok, f"exhaustive box decompositions in {dt:.1f}s")
    assert cases == 3
    assert failures == []
    assert dt < 5.0


def test_criterion_04_phase_model_wavefunctions(capsys):
    # lattice vs closed form on up to 5 sites / 3 particles, plus the
    # one-step matrix element identity with support = admissibility
    cases, failures, dt = _run_tags("pm", "pm.wavefunction", "pm.skew")
    ok = cases == 98 and not failures and dt < 30.0
    _announce(capsys, 4, ok, f"{cases} exact amplitude checks in {dt:.1f}s")
    assert cases == 98
    assert failures == []
    assert dt < 30.0


def test_criterion_05_scalar_product_and_boson_sum(capsys):
    # determinant formulas against brute-force state sums, 5 draws each
    cases, failures, dt = _run_tags("pm", "pm.scalar", "pm.sum")
    ok = cases == 61 and not failures and dt < 30.0
    _announce(capsys, 5, ok, f"{cases} determinant-vs-sum checks in {dt:.1f}s")
    assert cases == 61
    assert failures == []
    assert dt < 30.0


def test_criterion_06_hamiltonians(capsys):
    # logarithmic-derivative extraction equals the direct local form for
    # both models, including the exclusion-process point
    cases, failures, dt = _run_tags("fv", "fv.hamiltonian", "fv.tasep")
    pm_cases, pm_failures, pm_dt = _run_tags("pm", "pm.hamiltonian")
    cases += pm_cases
    failures += pm_failures
    dt += pm_dt
    ok = cases == 7 and not failures and dt < 60.0
    _announce(capsys, 6, ok, f"{cases} generator comparisons in {dt:.1f}s")
    assert cases == 7
    assert failures == []
    assert dt < 60.0


def test_criterion_07_boxed_crystal_triple_route(capsys):
    # enumeration, determinant, and (at beta=0) product formula agree for
    # all boxes up to 3x3x3 on a 3x4 grid of (q, beta), exactly
    cases, failures, dt = _run_tags("mc", "mc.zbox", "mc.counts")
    series_sum_ok = (
        sum(z_box_det_series(2, 2, F(0), 8).coeffs) == count_boxed(2, 2, 2) == 20
    )
    ok = cases == 109 and not failures and series_sum_ok and dt < 60.0
    _announce(capsys, 7, ok, f"{cases} partition-function checks in {dt:.1f}s")
    assert cases == 109
    assert failures == []
    assert series_sum_ok
    assert dt < 60.0


def test_criterion_08_series_expansions(capsys):
    # unbounded-crystal series against enumeration counts, box series
    # against the product route, and stabilization toward the limit
    cases, failures, dt = _run_tags(
        "mc", "mc.series", "mc.box-limit", "mc.stabilization", "mc.det-product"
    )
    ok = cases == 10 and not failures and dt < 60.0
    _announce(capsys, 8, ok, f"{cases} series checks in {dt:.1f}s")
    assert cases == 10
    assert failures == []
    assert dt < 60.0


def test_criterion_09_one_particle_spectrum(capsys):
    # eigenvalue, eigenvector, and transfer-matrix residuals below 1e-10
    # for chains of 2..4 sites at three deformation values
    cases, failures, dt = _run_tags("pm", "pm.bethe")
    ok = cases == 9 and not failures and dt < 30.0
    _announce(capsys, 9, ok, f"{cases} spectrum reports in {dt:.1f}s")
    assert cases == 9
    assert failures == []
    assert dt < 30.0


def test_criterion_10_entropy(capsys):
    # entropy ordering in the deformation, thermodynamic consistency below
    # 1e-6, and freezing at low temperature
    cases, failures, dt = _run_tags("mc", "mc.entropy")
    ok = cases == 4 and not failures and dt < 30.0
    _announce(capsys, 10, ok, f"{cases} entropy checks in {dt:.1f}s")
    assert cases == 4
    assert failures == []
    assert dt < 30.0


def test_criterion_11_cli_verification(capsys):
    # the command line runs every suite, exits clean, and its output is
    # byte-identical for a fixed seed
    t0 = time.perf_counter()
    code1 = main(["verify", "all", "--scale", "small"])
    out1 = capsys.readouterr().out
    code2 = main(["verify", "all", "--scale", "small"])
    out2 = capsys.readouterr().out
    dt = time.perf_counter() - t0
    ok = code1 == 0 and code2 == 0 and out1 == out2 and out1 != "" and dt < 120.0
    _announce(capsys, 11, ok, f"verify all twice in {dt:.1f}s, outputs identical")
    assert code1 == 0 and code2 == 0
    assert out1 == out2
    assert out1 != ""
    assert dt < 120.0

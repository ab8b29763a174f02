# superal/cli/suites.py
"""
Named check suites behind `check --suite NAME`. Each suite runs with fixed
documented defaults and a seed, and returns one VerificationReport whose
``checks`` map holds every individual assertion.
"""
from __future__ import annotations

import time
from math import factorial
from typing import Callable, Dict, List, Tuple

import numpy as np

from superal.algebra.graded_core import GradedDim, gl_basis, random_homogeneous
from superal.algebra.osp_construct import (
    ad_is_nilpotent,
    cube_vanishes,
    invariant_form_check,
    membership_check,
    osp_basis,
    random_odd_element,
    weyl_span_matches,
)
from superal.cohomology.forms import dot, dual_form, random_form, wedge
from superal.cohomology.transgression import (
    degree_operator_R,
    differential_d,
    differential_d_via_lie,
    homotopy_defect,
    is_invariant,
    random_unimodular_basis,
    s_map,
    supertrace_invariant_form,
    transgress,
    transgress_via_tau,
    transgression_matches,
)
from superal.core.errors import UnknownSuiteError
from superal.core.schemas import VerificationReport, Witness
from superal.identities.invariant_ring import generators_independent, verify_squared_ideal
from superal.identities.superpoly import (
    ArgTuple,
    classical_check,
    counterexample_gl,
    invariant_Lambda,
    invariant_P,
    prop41_check,
    sharpness_witness,
    standard_A_dp,
    standard_A_naive,
    standard_P_dp,
)
from superal.utils.logging_setup import get_logger

log = get_logger("superal.cli")

SuiteResult = Tuple[Dict[str, bool], Dict[str, str], int, List[Witness]]

# Per-suite sample counts; reports echo them in ``parameters``.
LAMBDA_SAMPLES = 200
COHOMOLOGY_FORMS = 50
DERIVATION_PAIRS = 50
BASIS_CHANGES = 20
OSP12_MEMBERSHIP = 100
OSP14_MEMBERSHIP = 20


def _random_args(dim: GradedDim, k: int, rng: np.random.Generator) -> ArgTuple:
    return ArgTuple(tuple(random_homogeneous(dim, int(rng.integers(0, 2)), rng, 2) for _ in range(k)))


def _random_osp_args(n: int, k: int, rng: np.random.Generator) -> ArgTuple:
    alg = osp_basis(n)
    return ArgTuple(tuple(alg.random_element(rng, int(rng.integers(0, 2)), 2) for _ in range(k)))


def suite_prop21(rng: np.random.Generator) -> SuiteResult:
    checks: Dict[str, bool] = {}
    count = 0
    for n in (1, 2, 3):
        alg = osp_basis(n)
        checks[f"odd_cube_zero_n{n}"] = all(
            cube_vanishes(alg.element(random_odd_element(alg, rng), "odd")) for _ in range(100)
        )
        count += 100
    for n in (1, 2):
        alg = osp_basis(n)
        checks[f"odd_ad_nilpotent_n{n}"] = all(ad_is_nilpotent(alg, random_odd_element(alg, rng)) for _ in range(25))
        count += 25
        checks[f"weyl_span_n{n}"] = weyl_span_matches(n)
        checks[f"space_form_invariant_n{n}"] = invariant_form_check(n)
    return checks, {"n": "1,2,3"}, count, []


def suite_prop41(rng: np.random.Generator) -> SuiteResult:
    dim = GradedDim(1, 2)
    checks: Dict[str, bool] = {}
    samples = 100
    for name, which, lengths in (("a", "a", (3, 5)), ("b", "b", (2, 4)), ("c", "c", (3, 5))):
        for k in lengths:
            checks[f"{name}_len{k}"] = all(prop41_check(which, _random_args(dim, k, rng)) for _ in range(samples))
    big = GradedDim(2, 2)
    for k in (2, 4, 6, 8):
        checks[f"lambda_{k}_zero_gl22"] = all(invariant_Lambda(_random_args(big, k, rng)) == 0 for _ in range(LAMBDA_SAMPLES))
    return checks, {"algebra": "gl(1,2); gl(2,2)", "samples": str(samples), "lambda_samples": str(LAMBDA_SAMPLES)}, samples * 6 + 4 * LAMBDA_SAMPLES, []


def suite_thm41(rng: np.random.Generator) -> SuiteResult:
    checks = {
        "gl12_k1": transgression_matches(gl_basis(1, 2), 1),
        "gl12_k2": transgression_matches(gl_basis(1, 2), 2),
        "osp12_k2": transgression_matches(osp_basis(1), 2),
    }
    return checks, {"algebras": "gl(1,2), osp(1,2)", "k": "1,2"}, 3, []


def suite_cohomology(rng: np.random.Generator) -> SuiteResult:
    checks: Dict[str, bool] = {}
    count = 0
    for label, alg in (("gl12", gl_basis(1, 2)), ("osp12", osp_basis(1))):
        ones = [dual_form(alg, i) for i in range(len(alg))]
        checks[f"{label}_d2_on_1forms"] = all(differential_d(differential_d(f)).is_zero() for f in ones)
        checks[f"{label}_d_via_lie_on_1forms"] = all(differential_d(f) == differential_d_via_lie(f) for f in ones)
        twos = [random_form(alg, 2, "skew", rng, parity=int(rng.integers(0, 2))) for _ in range(COHOMOLOGY_FORMS)]
        checks[f"{label}_d2_on_2forms"] = all(differential_d(differential_d(f)).is_zero() for f in twos)
        checks[f"{label}_d_via_lie_on_2forms"] = all(differential_d(f) == differential_d_via_lie(f) for f in twos)
        checks[f"{label}_homotopy"] = all(
            homotopy_defect(int(rng.integers(0, len(alg))), f).is_zero() for f in twos
        )
        p2 = supertrace_invariant_form(alg, 2, "P")
        t2 = transgress(p2)
        checks[f"{label}_dt_equals_sR"] = differential_d(t2) == s_map(degree_operator_R(p2))
        checks[f"{label}_t_P2_invariant"] = is_invariant(t2, "a")
        pairs = [
            (random_form(alg, 1, "sym", rng, parity=int(rng.integers(0, 2))), random_form(alg, 1, "sym", rng, parity=int(rng.integers(0, 2))))
            for _ in range(DERIVATION_PAIRS)
        ]
        checks[f"{label}_t_derivation"] = all(
            transgress(dot(p, q)) == wedge(transgress(p), s_map(q)) + wedge(s_map(p), transgress(q)) for p, q in pairs
        )
        count += len(ones) + len(twos) + len(pairs)
    osp = osp_basis(1)
    p2 = supertrace_invariant_form(osp, 2, "P")
    checks["osp12_s_P2_zero"] = s_map(p2).is_zero()
    checks["osp12_t_P2P2_zero"] = transgress(dot(p2, p2)).is_zero()
    reference = transgress(p2)
    checks["osp12_basis_independent"] = all(transgress_via_tau(p2, random_unimodular_basis(osp, rng)) == reference for _ in range(BASIS_CHANGES))
    params = {
        "algebras": "gl(1,2), osp(1,2)",
        "forms": str(COHOMOLOGY_FORMS),
        "derivation_pairs": str(DERIVATION_PAIRS),
        "basis_changes": str(BASIS_CHANGES),
    }
    return checks, params, count + BASIS_CHANGES, []


def suite_newton(rng: np.random.Generator) -> SuiteResult:
    checks: Dict[str, bool] = {}
    seed = int(rng.integers(0, 2**31))
    for n in (1, 2, 3, 4):
        report = verify_squared_ideal(n, trials=100, seed=seed + n)
        checks[f"squared_ideal_n{n}"] = report.verified
        checks[f"generators_independent_n{n}"] = generators_independent(n, seed=seed + n)
    return checks, {"n": "1..4", "trials": "100"}, 400, []


def suite_membership(rng: np.random.Generator) -> SuiteResult:
    checks: Dict[str, bool] = {}
    samples = OSP12_MEMBERSHIP
    members = {"P3": (standard_P_dp, 3), "P5": (standard_P_dp, 5), "A5": (standard_A_dp, 5), "A6": (standard_A_dp, 6)}
    for label, (fn, k) in members.items():
        ok = True
        for _ in range(samples):
            args = _random_osp_args(1, k, rng)
            ok &= membership_check(fn(args), 1)
        checks[f"{label}_in_osp12"] = ok
    checks["invariants_vanish_osp12"] = all(
        invariant_P(_random_osp_args(1, 3, rng)) == 0 and invariant_Lambda(_random_osp_args(1, 5, rng)) == 0
        for _ in range(samples)
    )
    for label, (fn, k) in {"P3": (standard_P_dp, 3), "A9": (standard_A_dp, 9), "A10": (standard_A_dp, 10)}.items():
        checks[f"{label}_in_osp14"] = all(membership_check(fn(_random_osp_args(2, k, rng)), 2) for _ in range(OSP14_MEMBERSHIP))
    return checks, {"samples_osp12": str(samples), "samples_osp14": str(OSP14_MEMBERSHIP)}, samples * 5 + 3 * OSP14_MEMBERSHIP, []


def suite_counterexample(rng: np.random.Generator) -> SuiteResult:
    checks: Dict[str, bool] = {}
    params: Dict[str, str] = {"algebra": "gl(1,1)"}
    for k in range(2, 9):
        x, value = counterexample_gl(1, 1, k)
        expected = x.power(k).scale(factorial(k))
        checks[f"A{k}_equals_k_factorial_power"] = value.flat() == expected.flat()
        checks[f"A{k}_matches_naive"] = standard_A_naive(ArgTuple((x,) * k)).flat() == value.flat()
        checks[f"A{k}_nonzero"] = not value.is_zero()
        params[f"A{k}_value"] = ";".join(",".join(r) for r in value.to_strings())
    return checks, params, 7, []


def suite_sharpness(rng: np.random.Generator) -> SuiteResult:
    mixed = sharpness_witness(1, "A_4n_mixed")
    five = sharpness_witness(1, "A_4n_plus_1")
    six = sharpness_witness(1, "A_4n_plus_2")
    nine = sharpness_witness(2, "A_4n_plus_1", seed=int(rng.integers(0, 2**31)))
    checks = {
        "A4_mixed_nonzero_n1": mixed is not None,
        "A5_nonzero_n1": five is not None,
        "A6_exhaustively_zero_n1": six is None,
        "A9_nonzero_n2": nine is not None,
    }
    alg = osp_basis(1)
    params: Dict[str, str] = {}
    for label, found in (("A4_witness", mixed), ("A5_witness", five)):
        if found is not None:
            params[label] = ",".join(str(alg.basis.index(m)) for m in found[0].matrices)
    for n in (2, 3):
        checks.update({f"classical_{name}": ok for name, ok in classical_check(n).items()})
    return checks, params, 4, []


SUITES: Dict[str, Tuple[str, Callable[[np.random.Generator], SuiteResult]]] = {
    "prop21": ("odd elements of osp(1,2n) cube to zero and act nilpotently", suite_prop21),
    "prop41": ("trace and bracket identities of P_k and A_k on gl(p,q)", suite_prop41),
    "thm41": ("t(P_k) = (-1)^(k-1) k Lambda_(2k-1)", suite_thm41),
    "cohomology": ("d^2 = 0, homotopy formula and transgression lemmas", suite_cohomology),
    "newton": ("P_(2n+2) lies in the square of the augmentation ideal", suite_newton),
    "membership": ("odd-length P_k and A_(4p+1), A_(4p+2) land in osp(1,2n)", suite_membership),
    "counterexample": ("A_k(X,...,X) = k! X^k != 0 in gl(1,1)", suite_counterexample),
    "sharpness": ("A_4 and A_5 do not vanish on osp(1,2), A_9 not on osp(1,4); A_6 vanishes on osp(1,2)", suite_sharpness),
}


def cmd_check_suite(suite: str, seed: int = 0) -> VerificationReport:
    if suite not in SUITES:
        raise UnknownSuiteError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
    claim, fn = SUITES[suite]
    log.info("suite %s: start (seed %d)", suite, seed)
    t0 = time.perf_counter()
    checks, params, count, witnesses = fn(np.random.default_rng(seed))
    report = VerificationReport(
        claim=f"{suite}: {claim}",
        mode="suite",
        parameters=params,
        tuples_checked=count,
        seed=seed,
        checks=checks,
        elapsed_s=round(time.perf_counter() - t0, 3),
    ).with_failures(witnesses + [Witness(indices=[], note=f"check failed: {name}") for name, ok in checks.items() if not ok])
    log.info("suite %s: %s (%d/%d checks)", suite, report.status, sum(checks.values()), len(checks))
    return report

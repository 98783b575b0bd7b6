"""Randomized verification suites and their report type.

A report row carries the two compared values, a non-negative residual, and
the tolerance the residual was judged against, so disagreements stay
auditable. Suites draw companion families, duals, and probe vectors from
child seeds of one master stream; the same seed reproduces the report
byte for byte.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

import numpy as np

from .duals import dual_proximity_bound, parseval_proximity_bound, random_alternate_dual, verify_alternate_dual
from .generators import random_parseval_gframe
from .identities import (
    canonical_dual_gap,
    frobenius_dual_decomposition,
    parseval_approx_decomposition,
    parseval_frobenius_budget,
    parseval_gap,
    parseval_weighted_energy,
    pointwise_dual_decomposition,
    power_trace_identity,
)
from .linalg import frobenius_norm_sq, trace
from .model import (
    GFrame,
    canonical_dual,
    canonical_parseval,
    frame_operator,
    total_frobenius_energy,
    validate_frame,
)
from .rng import complex_gaussian_matrix, standard_normals, stream

SUITE_NAMES = ("budgets", "parseval-approx", "duals", "bounds", "all")
POWER_EXPONENTS = (-1.0, -0.5, -0.25, 0.0, 0.25, 0.5, 1.0)
DEFAULT_TRIALS = 50


@dataclass(frozen=True)
class CheckResult:
    name: str
    lhs: float
    rhs: float
    residual: float
    tolerance: float
    passed: bool


@dataclass(frozen=True)
class VerificationReport:
    frame_summary: dict
    checks: list[CheckResult]
    overall: bool


def equality_check(name: str, lhs: float, rhs: float, tolerance: float) -> CheckResult:
    residual = abs(lhs - rhs)
    return CheckResult(name, float(lhs), float(rhs), residual, float(tolerance), residual <= tolerance)


def at_most_check(name: str, lhs: float, rhs: float, slack: float) -> CheckResult:
    """Passes when lhs <= rhs + slack; residual is the excess over rhs."""
    residual = max(0.0, lhs - rhs)
    return CheckResult(name, float(lhs), float(rhs), residual, float(slack), residual <= slack)


def at_least_check(name: str, lhs: float, rhs: float, slack: float) -> CheckResult:
    """Passes when lhs >= rhs - slack; residual is the shortfall below rhs."""
    residual = max(0.0, rhs - lhs)
    return CheckResult(name, float(lhs), float(rhs), residual, float(slack), residual <= slack)


def _guard(checks: list[CheckResult], name: str, fn) -> None:
    """Run one check builder; an exception becomes a failed row."""
    try:
        produced = fn()
    except Exception as exc:  # any check exception marks the report failed
        checks.append(
            CheckResult(f"{name} [error: {type(exc).__name__}: {exc}]", 0.0, 0.0, 0.0, -1.0, False)
        )
        return
    if isinstance(produced, CheckResult):
        checks.append(produced)
    else:
        checks.extend(produced)


def _child_seed(master: np.random.Generator) -> int:
    return int(master.integers(1 << 62))


def budgets_suite(f: GFrame, trials: int, seed: int) -> list[CheckResult]:
    """Energy interval, Parseval budget, power-trace equality, weighted-energy invariance."""
    checks: list[CheckResult] = []
    master = stream(seed, substream=1)
    bounds = validate_frame(f)
    n = f.dim_h

    energy = total_frobenius_energy(f)
    trace_s = trace(frame_operator(f).matrix).real
    _guard(checks, "energy-equals-trace", lambda: equality_check(
        "energy-equals-trace", energy, trace_s, 1e-10 * (1.0 + trace_s)))
    _guard(checks, "energy-interval-lower", lambda: at_least_check(
        "energy-interval-lower", energy, bounds.lower * n, 1e-9 * (1.0 + bounds.lower * n)))
    _guard(checks, "energy-interval-upper", lambda: at_most_check(
        "energy-interval-upper", energy, bounds.upper * n, 1e-9 * (1.0 + bounds.upper * n)))

    def budget_row():
        value = parseval_frobenius_budget(canonical_parseval(f))
        return equality_check("parseval-budget-canonical", value, float(n), 1e-8 * n)

    _guard(checks, "parseval-budget-canonical", budget_row)

    for a in POWER_EXPONENTS:
        def power_row(a=a):
            lhs, rhs = power_trace_identity(f, a)
            return equality_check(f"power-trace[a={a}]", lhs, rhs, 1e-8 * (1.0 + abs(rhs)))

        _guard(checks, f"power-trace[a={a}]", power_row)

    weight = complex_gaussian_matrix(master, n, n)
    weight_sq = frobenius_norm_sq(weight)
    values: list[float] = []
    for j in range(trials):
        def energy_row(j=j):
            companion = random_parseval_gframe(n, f.counts, _child_seed(master))
            value = parseval_weighted_energy(weight, companion)
            values.append(value)
            return equality_check(
                f"weighted-energy[trial={j}]", value, weight_sq, 1e-8 * (1.0 + weight_sq))

        _guard(checks, f"weighted-energy[trial={j}]", energy_row)
    if values:
        spread = max(values) - min(values)
        _guard(checks, "weighted-energy-spread", lambda: at_most_check(
            "weighted-energy-spread", spread, 0.0, 1e-7 * (1.0 + weight_sq)))
    return checks


def parseval_approx_suite(f: GFrame, trials: int, seed: int) -> list[CheckResult]:
    """Distance decomposition against Parseval companions and its minimality."""
    checks: list[CheckResult] = []
    master = stream(seed, substream=2)
    validate_frame(f)
    n = f.dim_h

    gap = parseval_gap(f)
    eig = frame_operator(f).eig
    spectral = float(np.sum((np.sqrt(eig.eigenvalues) - 1.0) ** 2))
    _guard(checks, "parseval-gap-two-path", lambda: equality_check(
        "parseval-gap-two-path", gap, spectral, 1e-8 * (1.0 + gap)))

    def canonical_rows():
        total, canonical_gap, cross = parseval_approx_decomposition(f, canonical_parseval(f))
        return [
            at_most_check("parseval-approx-canonical-cross", cross, 0.0, 1e-8),
            equality_check(
                "parseval-approx-canonical-total", total, canonical_gap, 1e-8 * (1.0 + total)),
        ]

    _guard(checks, "parseval-approx-canonical", canonical_rows)

    totals: list[float] = []
    for j in range(trials):
        def identity_row(j=j):
            companion = random_parseval_gframe(n, f.counts, _child_seed(master))
            total, canonical_gap, cross = parseval_approx_decomposition(f, companion)
            totals.append(total)
            return equality_check(
                f"parseval-approx-identity[trial={j}]",
                total, canonical_gap + cross, 1e-7 * (1.0 + total))

        _guard(checks, f"parseval-approx-identity[trial={j}]", identity_row)
    if totals:
        _guard(checks, "parseval-gap-minimality", lambda: at_least_check(
            "parseval-gap-minimality", min(totals), gap, 1e-9))
    return checks


def duals_suite(f: GFrame, trials: int, seed: int) -> list[CheckResult]:
    """Dual equation, both dual decompositions, and canonical-dual minimality."""
    checks: list[CheckResult] = []
    master = stream(seed, substream=3)
    validate_frame(f)
    n = f.dim_h

    canonical = canonical_dual(f)
    cert = verify_alternate_dual(f, canonical)
    checks.append(at_most_check("dual-equation-canonical", cert.residual, 0.0, cert.tolerance))

    def probe() -> np.ndarray:
        parts = standard_normals(master, 2 * n)
        return parts[:n] + 1j * parts[n:]

    def canonical_pointwise():
        worst = 0.0
        for _ in range(5):
            _, _, residual = pointwise_dual_decomposition(f, canonical, probe())
            worst = max(worst, residual)
        return at_most_check("pointwise-dual-canonical-residual", worst, 0.0, 1e-10)

    _guard(checks, "pointwise-dual-canonical-residual", canonical_pointwise)

    def closed_form_row():
        total, canonical_term, residual = frobenius_dual_decomposition(f, canonical)
        rows = [
            at_most_check("frobenius-dual-canonical-residual", residual, 0.0, 1e-9),
            equality_check(
                "frobenius-dual-closed-form",
                canonical_term, canonical_dual_gap(f), 1e-8 * (1.0 + canonical_term)),
        ]
        return rows

    _guard(checks, "frobenius-dual-closed-form", closed_form_row)

    for j in range(trials):
        def trial_rows(j=j):
            dual = random_alternate_dual(f, magnitude=1.0, seed=_child_seed(master))
            cert = verify_alternate_dual(f, dual)
            rows = [at_most_check(f"dual-equation[trial={j}]", cert.residual, 0.0, cert.tolerance)]
            total, canonical_term, residual = frobenius_dual_decomposition(f, dual)
            rows.append(equality_check(
                f"frobenius-dual-identity[trial={j}]",
                total, canonical_term + residual, 1e-7 * (1.0 + total)))
            x = probe()
            ptotal, pcanon, pres = pointwise_dual_decomposition(f, dual, x)
            rows.append(equality_check(
                f"pointwise-dual-identity[trial={j}]",
                ptotal, pcanon + pres, 1e-8 * (1.0 + ptotal)))
            rows.append(at_least_check(
                f"pointwise-dual-minimality[trial={j}]", ptotal, pcanon, 1e-9))
            return rows

        _guard(checks, f"dual-trial[trial={j}]", trial_rows)
    return checks


def bounds_suite(f: GFrame) -> list[CheckResult]:
    """Both proximity bounds; requires the nearly-Parseval rating below 1."""
    checks: list[CheckResult] = []
    bounds = validate_frame(f)
    eps = bounds.epsilon
    n = f.dim_h
    in_range = eps < 1.0
    checks.append(CheckResult(
        "epsilon-in-range", eps, 1.0, max(0.0, eps - 1.0), 0.0, in_range))
    if not in_range:
        return checks

    def parseval_row():
        gap, bound = parseval_proximity_bound(f)
        return at_most_check("parseval-proximity-bound", gap, bound, 1e-9 * n)

    def dual_row():
        gap, bound = dual_proximity_bound(f)
        return at_most_check("dual-proximity-bound", gap, bound, 1e-9 * n)

    _guard(checks, "parseval-proximity-bound", parseval_row)
    _guard(checks, "dual-proximity-bound", dual_row)
    return checks


def run_suite(f: GFrame, suite: str = "all", trials: int = DEFAULT_TRIALS, seed: int = 0) -> VerificationReport:
    """Assemble the report for one suite (or all of them) on a certified frame."""
    if suite not in SUITE_NAMES:
        raise ValueError(f"unknown suite {suite!r}, expected one of {SUITE_NAMES}")
    if trials < 0:
        raise ValueError(f"trials must be non-negative, got {trials}")
    bounds = validate_frame(f)
    summary = {
        "dim_h": f.dim_h,
        "counts": list(f.counts),
        "lower": bounds.lower,
        "upper": bounds.upper,
        "epsilon": bounds.epsilon,
    }
    checks: list[CheckResult] = []
    if suite in ("budgets", "all"):
        checks.extend(budgets_suite(f, trials, seed))
    if suite in ("parseval-approx", "all"):
        checks.extend(parseval_approx_suite(f, trials, seed))
    if suite in ("duals", "all"):
        checks.extend(duals_suite(f, trials, seed))
    if suite in ("bounds", "all"):
        checks.extend(bounds_suite(f))
    overall = all(c.passed for c in checks)
    return VerificationReport(frame_summary=summary, checks=checks, overall=overall)


def report_to_dict(report: VerificationReport) -> dict:
    return {
        "frame_summary": report.frame_summary,
        "checks": [
            {
                "name": c.name,
                "lhs": c.lhs,
                "rhs": c.rhs,
                "residual": c.residual,
                "tolerance": c.tolerance,
                "passed": c.passed,
            }
            for c in report.checks
        ],
        "overall": report.overall,
    }


def render_json(obj, indent: int = 0) -> str:
    """JSON text with floats at 17 significant digits, for byte-stable reports."""
    pad = "  " * indent
    if isinstance(obj, bool):
        return "true" if obj else "false"
    if obj is None:
        return "null"
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        if not math.isfinite(obj):
            raise ValueError(f"non-finite value in report: {obj!r}")
        return format(obj, ".17g")
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        inner = ",\n".join(
            f'{pad}  {render_json(key)}: {render_json(value, indent + 1)}'
            for key, value in obj.items()
        )
        return "{\n" + inner + "\n" + pad + "}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        inner = ",\n".join(f"{pad}  {render_json(item, indent + 1)}" for item in obj)
        return "[\n" + inner + "\n" + pad + "]"
    raise TypeError(f"cannot render {type(obj).__name__} in a report")


def render_text(report: VerificationReport) -> str:
    s = report.frame_summary
    lines = [
        f"frame: n={s['dim_h']} operators={len(s['counts'])} "
        f"counts={','.join(str(k) for k in s['counts'])}",
        f"bounds: A={s['lower']!r} B={s['upper']!r} epsilon={s['epsilon']!r}",
        "checks:",
    ]
    for c in report.checks:
        status = "PASS" if c.passed else "FAIL"
        lines.append(
            f"  {status} {c.name} lhs={c.lhs!r} rhs={c.rhs!r} "
            f"residual={c.residual!r} tolerance={c.tolerance!r}"
        )
    lines.append(f"overall: {'PASS' if report.overall else 'FAIL'}")
    return "\n".join(lines)

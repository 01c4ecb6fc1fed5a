import logging

from abc import ABC, abstractmethod
from fractions import Fraction
from typing import Iterable

from .entities import CheckResult, VerificationContext
from ..covering import (
    GAMMA3_ETA_QUOTIENT,
    LAMBDA_ETA_QUOTIENT,
    covering_from_coefficients,
    eisenstein_residuals,
    eta_quotient_expansion,
    invert_covering_series,
    log_series_coefficients,
)
from ..metric import ComplexPoint, Precision, make_context, metric_direct_eval, metric_expansion_eval
from ..picard import (
    exp_reciprocal_coefficients,
    lambda_closed_form_radius,
    picard_radius_bound,
    reciprocal_identity_residual,
)
from ..series import (
    TruncatedSeries,
    compare_series,
    factorial,
    invert_series_newton,
    schwarzian,
    schwarzian_direct,
    series_log_unit,
)

logger = logging.getLogger(__name__)


def _largest(values: Iterable[Fraction]) -> Fraction:
    return max((abs(v) for v in values), default=Fraction(0))


class AbstractCheck(ABC):
    """A named invariant evaluated against a :class:`VerificationContext`."""

    def __init__(self, name: str, description: str):
        self.name = name
        self.description = description

    @abstractmethod
    def __call__(self, context: VerificationContext) -> CheckResult: ...

    def result(self, passed: bool, residual="0", detail: str = "") -> CheckResult:
        return CheckResult(name=self.name, passed=passed, residual=str(residual), detail=detail)


class CompositionIdentity(AbstractCheck):
    def __init__(self):
        super().__init__(
            name="composition_identity",
            description="f(q(x)) = x exactly for built-in and random covering data.",
        )

    def __call__(self, context: VerificationContext) -> CheckResult:
        datasets = list(context.coverings.items()) + [
            (f"random[{i}]", covering_from_coefficients(c))
            for i, c in enumerate(context.random_coefficients())
        ]
        failures, worst = [], Fraction(0)
        for label, cov in datasets:
            residual = cov.composition_residual()
            worst = max(worst, _largest(residual))
            if any(residual):
                failures.append(label)
        return self.result(not failures, worst, f"failed for {failures}" if failures else "")


class BellVsNewton(AbstractCheck):
    def __init__(self):
        super().__init__(
            name="bell_vs_newton",
            description="Bell-polynomial reversion equals coefficient matching.",
        )

    def __call__(self, context: VerificationContext) -> CheckResult:
        failures = []
        samples = [list(cov.c) for cov in context.coverings.values()] + context.random_coefficients()
        for i, c in enumerate(samples):
            bell = invert_covering_series(c, len(c))
            newton = invert_series_newton(TruncatedSeries.from_dense([0, *c])).dense()[1:]
            if bell != newton:
                failures.append(i)
        return self.result(not failures, len(failures), f"mismatching samples {failures}" if failures else "")


class LogDualPath(AbstractCheck):
    def __init__(self):
        super().__init__(
            name="log_dual_path",
            description="Bell-formula l_m equal m! times the coefficients of log(1 + sum b_(m+1)/b_1 f^m).",
        )

    def __call__(self, context: VerificationContext) -> CheckResult:
        failures = []
        samples = [list(cov.b) for cov in context.coverings.values()] + [
            invert_covering_series(c, len(c)) for c in context.random_coefficients()
        ]
        for i, b in enumerate(samples):
            count = len(b) - 1
            bell = log_series_coefficients(b, count)
            unit = TruncatedSeries.from_dense([Fraction(1)] + [v / b[0] for v in b[1:]], count + 1)
            series = series_log_unit(unit).dense()
            if bell != [factorial(m) * series[m] for m in range(1, count + 1)]:
                failures.append(i)
        return self.result(not failures, len(failures), f"mismatching samples {failures}" if failures else "")


class SchwarzianTwoPath(AbstractCheck):
    def __init__(self):
        super().__init__(
            name="schwarzian_two_path",
            description="Schwarzian from (log f')' coefficients equals the derivative formula.",
        )

    def __call__(self, context: VerificationContext) -> CheckResult:
        failures = []
        samples = [cov.c_series() for cov in context.coverings.values()] + [
            TruncatedSeries.from_dense([0, *c]) for c in context.random_coefficients()
        ]
        for i, f in enumerate(samples):
            if not compare_series(schwarzian(f), schwarzian_direct(f)).equal:
                failures.append(i)
        return self.result(not failures, len(failures), f"mismatching samples {failures}" if failures else "")


class EtaOracle(AbstractCheck):
    """Covering coefficients against the q-expansion of an eta quotient."""

    def __init__(self, name: str, dataset: str, spec):
        super().__init__(name=name, description=f"{dataset} coefficients equal its eta quotient expansion.")
        self.dataset = dataset
        self.spec = spec

    def __call__(self, context: VerificationContext) -> CheckResult:
        cov = context.coverings[self.dataset]
        expected = eta_quotient_expansion(self.spec, cov.order + 1, scale_k=cov.scale_k).dense()[1:]
        differences = [a - b for a, b in zip(cov.c, expected)]
        mismatches = [m for m, d in enumerate(differences, start=1) if d]
        return self.result(
            not mismatches,
            _largest(differences),
            f"c_m differ at m = {mismatches}" if mismatches else "",
        )


class Gamma3Example(EtaOracle):
    def __init__(self):
        super().__init__("gamma3_example", "gamma3", GAMMA3_ETA_QUOTIENT)

    def __call__(self, context: VerificationContext) -> CheckResult:
        cov = context.coverings[self.dataset]
        printed = cov.c[2] == 9 and cov.b[:3] == (1, -3, 9)
        oracle = super().__call__(context)
        if not printed:
            return self.result(False, oracle.residual, f"expected c3 = 9 and b = 1, -3, 9, got c3 = {cov.c[2]}, b = {cov.b[:3]}")
        return oracle


class EisensteinConsistency(AbstractCheck):
    def __init__(self):
        super().__init__(
            name="eisenstein_consistency",
            description="1 - q^2 {f, q} reproduces 1 + 240 sum sigma3(m) q^(N m).",
        )

    def __call__(self, context: VerificationContext) -> CheckResult:
        failures, worst = [], Fraction(0)
        for label, cov in context.coverings.items():
            residuals = eisenstein_residuals(cov)
            worst = max(worst, _largest(residuals))
            if any(residuals):
                failures.append(label)
        return self.result(not failures, worst, f"failed for {failures}" if failures else "")


class ExpansionVsDirect(AbstractCheck):
    radii = ("1e-2", "1e-3", "1e-4")

    def __init__(self):
        super().__init__(
            name="expansion_vs_direct",
            description="Expansion with M = 6 approaches the direct series, ten times closer per decade of |p|.",
        )

    def __call__(self, context: VerificationContext) -> CheckResult:
        ctx = make_context(Precision.EXTENDED, context.dps)
        angles = [ctx.nstr(angle, context.dps + 5) for angle in (ctx.mpf(0), ctx.pi / 3, ctx.pi)]
        failures, worst = [], 0.0
        for label, cov in context.coverings.items():
            M = min(6, cov.max_truncation)
            for theta in angles:
                gaps = []
                for r in self.radii:
                    p = ComplexPoint.polar(r, theta, Precision.EXTENDED, context.dps)
                    expansion = metric_expansion_eval(p, 1, cov, M).value
                    direct = metric_direct_eval(p, 1, cov, context.divergence_ratio).value
                    gaps.append(abs(expansion - direct) / direct)
                worst = max(worst, float(gaps[0]))
                shrinking = all(later * 10 <= earlier for earlier, later in zip(gaps, gaps[1:]))
                if gaps[0] > context.expansion_tolerance or not shrinking:
                    failures.append(f"{label}@theta={float(theta):.4f}")
        return self.result(not failures, f"{worst:.3e}", f"failed for {failures}" if failures else "")


class PicardReciprocal(AbstractCheck):
    def __init__(self):
        super().__init__(
            name="picard_reciprocal",
            description="Radius bound matches 1 / chi(p; 1) and shrinks to 0 at the puncture.",
        )

    def __call__(self, context: VerificationContext) -> CheckResult:
        problems = []
        for label, cov in context.coverings.items():
            residual = reciprocal_identity_residual(
                cov.l, exp_reciprocal_coefficients(cov.l, cov.max_truncation)
            )
            if any(residual):
                problems.append(f"{label}: reciprocal identity")

        cov = context.coverings["lambda"]
        p = ComplexPoint(re="1e-3", precision=Precision.EXTENDED, dps=context.dps)
        bound = picard_radius_bound(p, cov, min(4, cov.max_truncation), divergence_ratio=context.divergence_ratio)
        gap = bound.relative_gap
        if gap is None or gap > context.picard_tolerance:
            problems.append(f"lambda: relative gap {gap}")

        previous = None
        for j in range(2, 7):
            p = ComplexPoint(re=f"1e-{j}", precision=Precision.EXTENDED, dps=context.dps)
            value = picard_radius_bound(p, cov, min(3, cov.max_truncation), with_direct=False).bound
            ratio = value / lambda_closed_form_radius(p)
            if previous is not None and not value < previous:
                problems.append(f"lambda: bound not decreasing at p=1e-{j}")
            if abs(ratio - 1) > 10 * 10.0**-j:
                problems.append(f"lambda: ratio {float(ratio):.6f} outside window at p=1e-{j}")
            previous = value
        residual = "n/a" if gap is None else f"{float(gap):.3e}"
        return self.result(not problems, residual, "; ".join(problems))


def default_checks() -> list[AbstractCheck]:
    return [
        CompositionIdentity(),
        BellVsNewton(),
        LogDualPath(),
        SchwarzianTwoPath(),
        EtaOracle("lambda_eta_oracle", "lambda", LAMBDA_ETA_QUOTIENT),
        Gamma3Example(),
        EisensteinConsistency(),
        ExpansionVsDirect(),
        PicardReciprocal(),
    ]

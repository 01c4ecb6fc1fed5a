import logging
import time

from random import Random

from .checks import AbstractCheck, default_checks
from .entities import CheckResult, VerificationContext, VerificationReport
from .sampling import random_rational_series
from ..config import MetricConfig
from ..covering import CoveringData, builtin_coverings

logger = logging.getLogger(__name__)


class VerificationRunner:
    """
    Runs the invariant suite behind ``puncture-metric verify``.

    Settings default to the ``verify`` section of :class:`MetricConfig`; explicit arguments
    win. Random series are drawn from a seeded generator so reports are reproducible.
    """

    def __init__(
        self,
        order: int | None = None,
        random_trials: int | None = None,
        random_order: int | None = None,
        seed: int | None = None,
        config: MetricConfig | None = None,
    ):
        config = config or MetricConfig.get_or_create_instance()
        verify = config.verify
        self.order = order if order is not None else verify["order"]
        self.random_trials = random_trials if random_trials is not None else verify["randomTrials"]
        self.random_order = random_order if random_order is not None else verify["randomOrder"]
        self.seed = seed if seed is not None else verify["seed"]
        self.dps = config.extendedDps
        self.divergence_ratio = config.divergenceRatio
        self.tolerances = config.tolerances

    def get_checks(self) -> list[AbstractCheck]:
        return default_checks()

    def get_datasets(self) -> dict[str, CoveringData]:
        return builtin_coverings(self.order)

    def build_context(self) -> VerificationContext:
        rng = Random(self.seed)
        return VerificationContext(
            order=self.order,
            coverings=self.get_datasets(),
            random_series=[
                random_rational_series(rng, self.random_order) for _ in range(self.random_trials)
            ],
            dps=self.dps,
            expansion_tolerance=self.tolerances["expansionVsDirect"],
            picard_tolerance=self.tolerances["picardReciprocal"],
            divergence_ratio=self.divergence_ratio,
        )

    def run(self) -> VerificationReport:
        logger.info(f"Starting verification at order {self.order} with seed {self.seed}")
        context = self.build_context()
        results = []
        for check in self.get_checks():
            started = time.perf_counter()
            try:
                result = check(context)
            except Exception as e:
                logger.error(f"Check {check.name} raised {e!r}")
                result = CheckResult(name=check.name, passed=False, residual="n/a", detail=repr(e))
            logger.info(
                f"{check.name}: {'PASS' if result.passed else 'FAIL'} "
                f"in {time.perf_counter() - started:.2f}s"
            )
            results.append(result)
        report = VerificationReport(order=self.order, checks=results)
        logger.info(f"Verification finished, passed={report.passed}")
        return report

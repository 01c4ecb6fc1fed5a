import logging

from functools import lru_cache

from .entities import CoveringData
from .recursion import solve_covering_coefficients

logger = logging.getLogger(__name__)

BUILTIN_EXAMPLES = ("lambda", "gamma3")


@lru_cache(maxsize=32)
def lambda_covering(order: int) -> CoveringData:
    """Modular lambda: ``N = 2``, ``c_1 = 16``, ``c_2 = -128`` in ``q_2``."""
    logger.info(f"Building lambda covering data to order {order}")
    return solve_covering_coefficients(2, 16, -128, order)


@lru_cache(maxsize=32)
def gamma3_covering(order: int) -> CoveringData:
    """Level-3 hauptmodul ``(eta(3 tau) / eta(tau/3))^3``: ``N = 3``, ``c_1 = 1``, ``c_2 = 3`` in ``q_3``."""
    logger.info(f"Building gamma3 covering data to order {order}")
    return solve_covering_coefficients(3, 1, 3, order)


def builtin_covering(name: str, order: int) -> CoveringData:
    if name == "lambda":
        return lambda_covering(order)
    if name == "gamma3":
        return gamma3_covering(order)
    raise ValueError(f"Unknown example {name!r}, expected one of {', '.join(BUILTIN_EXAMPLES)}")


def builtin_coverings(order: int) -> dict[str, CoveringData]:
    return {name: builtin_covering(name, order) for name in BUILTIN_EXAMPLES}

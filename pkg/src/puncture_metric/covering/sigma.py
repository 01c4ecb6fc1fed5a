from math import isqrt

from ..utils import SeriesPreconditionViolated


def sigma3(m: int) -> int:
    """Sum of the cubes of the positive divisors of ``m``."""
    if isinstance(m, bool) or not isinstance(m, int) or m < 1:
        raise SeriesPreconditionViolated("sigma3", f"expected a positive integer, got {m!r}")
    total = 0
    for d in range(1, isqrt(m) + 1):
        if m % d == 0:
            total += d**3
            other = m // d
            if other != d:
                total += other**3
    return total

from fractions import Fraction
from random import Random


def random_rational(rng: Random, bound: int = 9) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))


def random_rational_series(rng: Random, order: int, bound: int = 9) -> list[Fraction]:
    """``c_1 .. c_order`` with small random rationals and ``c_1 != 0``."""
    c1 = Fraction(0)
    while c1 == 0:
        c1 = random_rational(rng, bound)
    return [c1] + [random_rational(rng, bound) for _ in range(order - 1)]

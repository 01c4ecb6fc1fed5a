"""
Exponential (partial) Bell polynomials.

``B_{n,k}(t_1, ..., t_{n-k+1})`` is the sum, over all tuples ``r_1, ..., r_{n-k+1} >= 0``
with ``sum r_i = k`` and ``sum i r_i = n``, of

    n! t_1^{r_1} ... t_{n-k+1}^{r_{n-k+1}} / (r_1! ... (1!)^{r_1} ... )

The evaluation is ring-generic: the arguments may be ``Fraction``, mpmath numbers or
sympy expressions; only ``+``, ``*`` and integer powers are used.
"""

import logging

from functools import lru_cache
from math import factorial as _factorial
from typing import Any, Iterator, Sequence

from .entities import BellIndex
from ..utils import InvalidBellIndex

logger = logging.getLogger(__name__)


@lru_cache(maxsize=None)
def factorial(n: int) -> int:
    return _factorial(n)


def _multiplicities(
    remaining_n: int, remaining_k: int, largest: int, zero_parts: frozenset[int]
) -> Iterator[tuple[tuple[int, int], ...]]:
    """Yield ``((part, multiplicity), ...)`` for partitions of n into k parts <= largest."""
    if remaining_k == 0:
        if remaining_n == 0:
            yield ()
        return
    if largest == 0 or remaining_n < remaining_k or remaining_n > remaining_k * largest:
        return
    max_r = 0 if largest in zero_parts else min(remaining_k, remaining_n // largest)
    for r in range(max_r, -1, -1):
        for rest in _multiplicities(
            remaining_n - r * largest, remaining_k - r, largest - 1, zero_parts
        ):
            yield ((largest, r),) + rest if r else rest


@lru_cache(maxsize=4096)
def _bell_terms(
    n: int, k: int, zero_parts: frozenset[int]
) -> tuple[tuple[int, tuple[tuple[int, int], ...]], ...]:
    terms = []
    n_factorial = factorial(n)
    for parts in _multiplicities(n, k, n - k + 1, zero_parts):
        denominator = 1
        for part, r in parts:
            denominator *= factorial(r) * factorial(part) ** r
        terms.append((n_factorial // denominator, parts))
    return tuple(terms)


def partial_bell(n: int, k: int, t: Sequence[Any]) -> Any:
    """
    Evaluate ``B_{n,k}(t_1, ..., t_{n-k+1})``; ``t[0]`` is ``t_1``.

    Arguments equal to zero prune every partition that uses the corresponding part, so
    sparse argument lists (the reversion formula passes ``t_1 = 0``) stay cheap.

    :raises InvalidBellIndex: if ``k < 1``, ``k > n`` or ``t`` has fewer than
        ``n - k + 1`` entries.
    """
    if k < 1:
        raise InvalidBellIndex(n, k, "k must be at least 1")
    if k > n:
        raise InvalidBellIndex(n, k, "k must not exceed n")
    width = n - k + 1
    if len(t) < width:
        raise InvalidBellIndex(n, k, f"needs {width} arguments, got {len(t)}")

    zero_parts = frozenset(i + 1 for i in range(width) if t[i] == 0)
    total = t[0] - t[0]
    for coefficient, parts in _bell_terms(n, k, zero_parts):
        term = coefficient
        for part, r in parts:
            term = term * t[part - 1] ** r
        total = total + term
    return total


def bell_polynomial(idx: BellIndex | tuple[int, int], t: Sequence[Any]) -> Any:
    if not isinstance(idx, BellIndex):
        n, k = idx
        idx = BellIndex(n=n, k=k)
    return partial_bell(idx.n, idx.k, t)


def log_bell_coefficients(a: Sequence[Any], count: int, scale: Any = 1) -> list[Any]:
    """
    Coefficients ``L_m`` of ``log(1 + sum_{m>=1} a_m x^m / m!) = sum L_m x^m / m!``
    for ``m = 1..count``, with the ``a_m`` supplied pre-multiplied by ``scale``
    (``a[j-1] / scale`` is the j-th exponential coefficient).

    ``L_m = sum_k (-1)^(k-1) (k-1)! / scale^k * B_{m,k}(a_1, ..., a_{m-k+1})``
    """
    if len(a) < count:
        raise InvalidBellIndex(count, 1, f"needs {count} arguments, got {len(a)}")
    out = []
    for m in range(1, count + 1):
        value = a[0] - a[0]
        for k in range(1, m + 1):
            sign = 1 if k % 2 == 1 else -1
            value = value + sign * factorial(k - 1) * partial_bell(m, k, a[:m]) / scale**k
        out.append(value)
    return out

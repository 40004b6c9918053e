"""Independent oracles used by the tests.

Nothing here imports the package under test: values produced by these
helpers come from separate routes (formal power series, set-partition
enumeration, exact interpolation), so agreement is meaningful.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Sequence


def extended_pascal_grid(lo: int, hi: int) -> dict[tuple[int, int], int]:
    """Binomial table over [lo, hi]^2 assembled without closed-form shortcuts.

    Nonnegative rows come from the classic additive triangle.  Rows with
    n < 0 take their k >= 0 entries from the formal power series of
    (1+x)^n, obtained by inverting the polynomial (1+x)^(-n); the deep
    wedge k <= n uses the reflection C(n, k) = C(n, n-k), and the strip
    n < k < 0 is zero.
    """
    if not (lo < 0 <= hi):
        raise ValueError("grid must straddle zero")
    top = max(hi, -lo)
    rows = [[1]]
    for _ in range(top):
        prev = rows[-1]
        rows.append([1] + [prev[i] + prev[i + 1] for i in range(len(prev) - 1)] + [1])

    grid: dict[tuple[int, int], int] = {}
    for n in range(hi + 1):
        for k in range(lo, hi + 1):
            grid[n, k] = rows[n][k] if 0 <= k <= n else 0

    order = hi - lo + 1
    for n in range(-1, lo - 1, -1):
        denom = rows[-n]
        series = [1]
        for i in range(1, order):
            series.append(
                -sum(denom[j] * series[i - j] for j in range(1, min(i, len(denom) - 1) + 1))
            )
        for k in range(lo, hi + 1):
            if k >= 0:
                grid[n, k] = series[k]
            elif k <= n:
                grid[n, k] = series[n - k]
            else:
                grid[n, k] = 0
    return grid


def set_partitions(elements: Sequence[int]) -> Iterator[list[list[int]]]:
    """All partitions of the given elements into nonempty blocks."""
    if not elements:
        yield []
        return
    first, rest = elements[0], elements[1:]
    for partial in set_partitions(rest):
        for i in range(len(partial)):
            yield partial[:i] + [partial[i] + [first]] + partial[i + 1:]
        yield partial + [[first]]


def count_partitions(m: int, k: int, min_block: int = 1) -> int:
    """Partitions of an m-set into exactly k blocks of size >= min_block."""
    return sum(
        1
        for part in set_partitions(range(m))
        if len(part) == k and all(len(block) >= min_block for block in part)
    )


def interpolate(points: Iterable[tuple[int, int]]) -> list[Fraction]:
    """Exact polynomial through the points, ascending monomial coefficients.

    Newton divided differences over Fractions, then expansion of the Newton
    basis.  The points must have distinct x values; the result has one
    coefficient per point.
    """
    pts = list(points)
    xs = [Fraction(x) for x, _ in pts]
    diffs = [Fraction(y) for _, y in pts]
    newton = [diffs[0]]
    for level in range(1, len(pts)):
        diffs = [
            (diffs[i + 1] - diffs[i]) / (xs[i + level] - xs[i])
            for i in range(len(diffs) - 1)
        ]
        newton.append(diffs[0])

    poly = [Fraction(0)] * len(pts)
    basis = [Fraction(1)]
    for j, c in enumerate(newton):
        for d, b in enumerate(basis):
            poly[d] += c * b
        grown = [Fraction(0)] * (len(basis) + 1)
        for d, b in enumerate(basis):
            grown[d] -= xs[j] * b
            grown[d + 1] += b
        basis = grown
    return poly


def polyval(coeffs: Sequence[Fraction], x: int) -> Fraction:
    """Evaluate ascending coefficients at x, exactly."""
    return sum((c * Fraction(x) ** d for d, c in enumerate(coeffs)), Fraction(0))

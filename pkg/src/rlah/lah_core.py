"""Weight-polynomial triangles for distributions with distinguished elements.

``g_poly(n, k, r)`` is the exact polynomial in a and b whose coefficient
of a^i * b^j counts the distributions of n ordinary plus r distinguished
labels into k + r contents-ordered blocks (the r distinguished labels in
distinct blocks) having i elements that are not record lows and j record
lows that are not block minima.  Everything is filled row by row from the
two-term recurrence

    G(n+1, k) = G(n, k-1) + (a*n + b*k + (a+b)*r) * G(n, k)

with G(0, 0) = 1 and G(n, k) = 0 outside 0 <= k <= n.  Specialising
(a, b) to (1, 1), (1, 0) and (0, 1) yields the r-Lah, r-Stirling cycle
and r-Stirling subset numbers respectively.

r is always a concrete nonnegative integer parameter, never a variable;
each r owns its own triangle.
"""

from __future__ import annotations

from functools import lru_cache

from .poly import A, B, ONE, X, ZERO, Polynomial


class LahTriangle:
    """Cells G(n, k) for one fixed distinguished count r, filled on demand.

    A triangle is filled by its owner and extended rows are never
    mutated, so completed triangles can be shared across readers.
    """

    def __init__(self, r: int) -> None:
        if r < 0:
            raise ValueError("r must be nonnegative")
        self.r = r
        self._rows: list[dict[int, Polynomial]] = [{0: ONE}]
        self._r_term = (A + B) * r

    @property
    def max_n(self) -> int:
        return len(self._rows) - 1

    def poly(self, n: int, k: int) -> Polynomial:
        """The cell polynomial; zero for out-of-range (n, k)."""
        if n < 0 or k < 0 or k > n:
            return ZERO
        while self.max_n < n:
            self._extend()
        return self._rows[n].get(k, ZERO)

    def _extend(self) -> None:
        n = self.max_n
        prev = self._rows[n]
        nxt: dict[int, Polynomial] = {}
        for k in range(n + 2):
            cell = prev.get(k - 1, ZERO) + (A * n + B * k + self._r_term) * prev.get(k, ZERO)
            if cell:
                nxt[k] = cell
        self._rows.append(nxt)


@lru_cache(maxsize=None)
def _triangle(r: int) -> LahTriangle:
    return LahTriangle(r)


def g_poly(n: int, k: int, r: int) -> Polynomial:
    """Weight polynomial G(n, k; r); zero when k > n or k < 0."""
    if r < 0:
        raise ValueError("r must be nonnegative")
    return _triangle(r).poly(n, k)


def g_eval(n: int, k: int, r: int, a_val: int, b_val: int) -> int:
    """G(n, k; r) evaluated at integer weights (a, b)."""
    return g_poly(n, k, r).eval(a=a_val, b=b_val).as_int()


def r_lah(n: int, k: int, r: int) -> int:
    """Count of r-distinguished distributions into contents-ordered blocks."""
    return g_eval(n, k, r, 1, 1)


def r_stirling_cycle(n: int, k: int, r: int) -> int:
    """Count with the smallest element first within each block (cycle type)."""
    return g_eval(n, k, r, 1, 0)


def r_stirling_subset(n: int, k: int, r: int) -> int:
    """Count of plain set partitions with r distinguished elements."""
    return g_eval(n, k, r, 0, 1)


def row_sum_poly(n: int, r: int) -> Polynomial:
    """Sum of row n over all block counts k."""
    acc = ZERO
    for k in range(n + 1):
        acc = acc + g_poly(n, k, r)
    return acc


def row_sum_marked(n: int, r: int) -> Polynomial:
    """Row sum with x marking the number of non-distinguished blocks."""
    acc = ZERO
    for k in range(n + 1):
        acc = acc + g_poly(n, k, r) * X ** k
    return acc


@lru_cache(maxsize=None)
def binomial(n: int, k: int) -> int:
    """Binomial coefficient, zero outside 0 <= k <= n."""
    if k < 0 or n < 0 or k > n:
        return 0
    if k == 0 or k == n:
        return 1
    return binomial(n - 1, k - 1) + binomial(n - 1, k)


def rising_factorial(base: int, count: int) -> int:
    """base * (base+1) * ... * (base+count-1); empty product is 1."""
    if count < 0:
        raise ValueError("count must be nonnegative")
    acc = 1
    for i in range(count):
        acc *= base + i
    return acc


def falling_factorial(base: int, count: int) -> int:
    """base * (base-1) * ... * (base-count+1); empty product is 1."""
    if count < 0:
        raise ValueError("count must be nonnegative")
    acc = 1
    for i in range(count):
        acc *= base - i
    return acc

"""Brute-force ground truth: determinants by Laplace expansion and by
fraction-free (Bareiss) elimination, permanents by Ryser's method and by
full expansion.

Everything here is deliberately independent of the closed forms in
:mod:`banddet.band`; these are the oracles the closed forms get checked
against.  The exponential routines carry hard size guards, overridable
through ``BANDDET_LIMIT_<NAME>`` environment variables.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from itertools import permutations

from .errors import InexactDivisionError, SizeLimitError
from .rings import Integer, Poly, RingElement, as_element

__all__ = [
    "DenseMatrix",
    "det_laplace",
    "det_bareiss",
    "permanent_ryser",
    "permanent_expansion",
    "size_limit",
]

_DEFAULT_LIMITS = {
    "LAPLACE": 12,
    "RYSER_INT": 20,
    "RYSER_POLY": 14,
    "EXPANSION": 9,
    "PARITY_ENUM": 10,
    "CENSUS_ENUM": 9,
}


def size_limit(name: str) -> int:
    """Effective guard value; ``BANDDET_LIMIT_<NAME>`` overrides the default."""
    raw = os.environ.get(f"BANDDET_LIMIT_{name}")
    if raw is not None:
        return int(raw)
    return _DEFAULT_LIMITS[name]


def check_size(name: str, n: int, what: str) -> None:
    limit = size_limit(name)
    if n > limit:
        raise SizeLimitError(
            f"{what} refuses order {n} (limit {limit}; "
            f"set BANDDET_LIMIT_{name} to override)"
        )


@dataclass(frozen=True)
class DenseMatrix:
    """Row-major square matrix with all entries from one ring."""

    rows: tuple[tuple[RingElement, ...], ...]

    def __post_init__(self) -> None:
        n = len(self.rows)
        if n == 0:
            raise ValueError("matrix order must be positive")
        kind = type(self.rows[0][0]) if self.rows[0] else None
        for row in self.rows:
            if len(row) != n:
                raise ValueError("matrix must be square")
            for e in row:
                if type(e) is not kind:
                    raise ValueError("all entries must come from one ring")

    @classmethod
    def from_rows(cls, rows) -> "DenseMatrix":
        """Build from any iterable of iterables; plain ints become Integer."""
        return cls(tuple(tuple(as_element(e) for e in row) for row in rows))

    @property
    def n(self) -> int:
        return len(self.rows)

    def __getitem__(self, i: int) -> tuple[RingElement, ...]:
        return self.rows[i]

    def is_integer(self) -> bool:
        return isinstance(self.rows[0][0], Integer)

    def transpose(self) -> "DenseMatrix":
        return DenseMatrix(tuple(zip(*self.rows)))


def _raw_rows(m: DenseMatrix):
    """Unwrap to plain ints for the integer ring (fast path); polynomials
    are used as-is since they overload the arithmetic operators."""
    if m.is_integer():
        return [[e.value for e in row] for row in m.rows], True
    return [list(row) for row in m.rows], False


def _wrap(value, is_int: bool) -> RingElement:
    return Integer(value) if is_int else value


def det_laplace(m: DenseMatrix) -> RingElement:
    """Exact determinant by Laplace expansion along rows.

    Minors are shared across column subsets, so the cost is O(n * 2^n)
    ring operations rather than n!; still exponential, hence the guard.
    """
    n = m.n
    check_size("LAPLACE", n, "det_laplace")
    rows, is_int = _raw_rows(m)
    zero = 0 if is_int else Poly()
    one = 1 if is_int else Poly.constant(1)
    memo: dict[int, object] = {}

    def expand(mask: int):
        # mask = columns not yet consumed; row index follows the recursion depth
        if mask == 0:
            return one
        cached = memo.get(mask)
        if cached is not None:
            return cached
        r = n - bin(mask).count("1")
        row = rows[r]
        total = zero
        sign = 1
        mm = mask
        while mm:
            low = mm & -mm
            j = low.bit_length() - 1
            e = row[j]
            if e != zero:
                term = e * expand(mask ^ low)
                total = total + term if sign > 0 else total - term
            sign = -sign
            mm ^= low
        memo[mask] = total
        return total

    return _wrap(expand((1 << n) - 1), is_int)


def _exact_div(x: int, d: int) -> int:
    q, r = divmod(x, d)
    if r:
        raise InexactDivisionError(f"{x} is not divisible by {d}")
    return q


def det_bareiss(m: DenseMatrix) -> Integer:
    """Exact integer determinant by Bareiss fraction-free elimination.

    Every interior division is by the previous pivot and is exact by
    construction; inexactness is checked and reported as a bug.
    """
    if not m.is_integer():
        raise TypeError("det_bareiss requires the integer ring")
    n = m.n
    a = [[e.value for e in row] for row in m.rows]
    if n == 1:
        return Integer(a[0][0])
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return Integer(0)
        pk = a[k][k]
        rowk = a[k]
        rng = range(k + 1, n)
        for i in rng:
            rowi = a[i]
            f = rowi[k]
            if prev == 1:
                tail = [pk * rowi[j] - f * rowk[j] for j in rng]
            elif prev == -1:
                tail = [f * rowk[j] - pk * rowi[j] for j in rng]
            else:
                tail = [_exact_div(pk * rowi[j] - f * rowk[j], prev) for j in rng]
            rowi[k + 1 :] = tail
        prev = pk
    return Integer(sign * a[n - 1][n - 1])


def permanent_ryser(m: DenseMatrix) -> RingElement:
    """Exact permanent by Ryser's inclusion-exclusion:

        per A = (-1)^n * sum over nonempty column subsets S of
                (-1)^{|S|} * prod_i (sum_{j in S} a_ij)

    Row sums are maintained incrementally along a Gray code, so each of
    the 2^n - 1 subsets costs one row-sum update plus one n-term product.
    Ring-agnostic: needs only +, - and *.
    """
    n = m.n
    rows, is_int = _raw_rows(m)
    check_size("RYSER_INT" if is_int else "RYSER_POLY", n, "permanent_ryser")
    zero = 0 if is_int else Poly()
    sums = [zero] * n
    total = zero
    size = 0
    for g in range(1, 1 << n):
        low = g & -g
        j = low.bit_length() - 1
        if (g ^ (g >> 1)) & low:
            for i in range(n):
                sums[i] = sums[i] + rows[i][j]
            size += 1
        else:
            for i in range(n):
                sums[i] = sums[i] - rows[i][j]
            size -= 1
        prod = sums[0]
        for i in range(1, n):
            prod = prod * sums[i]
        if (n - size) & 1:
            total = total - prod
        else:
            total = total + prod
    return _wrap(total, is_int)


def permanent_expansion(m: DenseMatrix) -> RingElement:
    """Permanent by summing entry products over all n! permutations.

    The oracle for the oracle; only feasible at very small orders.
    """
    n = m.n
    check_size("EXPANSION", n, "permanent_expansion")
    rows, is_int = _raw_rows(m)
    zero = 0 if is_int else Poly()
    total = zero
    for perm in permutations(range(n)):
        prod = rows[0][perm[0]]
        for i in range(1, n):
            prod = prod * rows[i][perm[i]]
        total = total + prod
    return _wrap(total, is_int)

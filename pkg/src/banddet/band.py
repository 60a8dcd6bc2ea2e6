"""Generalized binary band (Toeplitz) matrices and their closed-form
determinants.

A :class:`BandSpec` (n, k, l, a, b) describes the n x n Toeplitz matrix
whose entry at (i, j) is b inside the band -l < j - i < k and a outside
it.  The determinant comes in O(1) ring operations from one of two closed
forms, dispatched on l; an independent recurrence path exists for
cross-checking the l = 1 case.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DivisibilityError, MixedRingError
from .oracle import DenseMatrix
from .rings import RingElement, as_element, element_from_json, element_to_json, scalar_mul

__all__ = [
    "BandSpec",
    "BandResidue",
    "FactoredDet",
    "entry",
    "materialize",
    "residue",
    "det_case1",
    "det_case2",
    "det_factored",
    "det_closed",
    "f_closed",
    "g_closed",
    "bordered_matrix",
    "det_recurrence",
    "all_b_row_count",
    "spec_to_json",
    "spec_from_json",
]


@dataclass(frozen=True)
class BandSpec:
    """Five-parameter band description with 1 <= l <= k <= n and a != b.

    l > k is accepted and normalized by swapping k and l.  The swap
    transposes the matrix, which leaves the determinant (and permanent)
    unchanged; entry positions reflect the normalized orientation.
    """

    n: int
    k: int
    l: int
    a: RingElement
    b: RingElement

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", as_element(self.a))
        object.__setattr__(self, "b", as_element(self.b))
        if self.l > self.k:
            k, l = self.l, self.k
            object.__setattr__(self, "k", k)
            object.__setattr__(self, "l", l)
        if self.n < 1:
            raise ValueError("order n must be positive")
        if not 1 <= self.l <= self.k <= self.n:
            raise ValueError(
                f"need 1 <= l <= k <= n, got n={self.n} k={self.k} l={self.l}"
            )
        if type(self.a) is not type(self.b):
            raise MixedRingError("a and b must come from the same ring")
        if self.a == self.b:
            raise ValueError("a and b must differ")


@dataclass(frozen=True)
class BandResidue:
    """Residue of n under the case-appropriate convention.

    case 1 (l = 1):  n = k*quotient + p with 0 < p <= k.
    case 2 (l > 1):  n = (k+l-1)*quotient + p with 0 <= p < k+l-1.

    The two conventions differ (case 1 excludes p = 0, case 2 includes
    it) and are kept separate on purpose.
    """

    p: int
    quotient: int
    case: int


def entry(spec: BandSpec, i: int, j: int) -> RingElement:
    """Entry at 1-based (i, j): b when -l < j-i < k, a otherwise."""
    if not (1 <= i <= spec.n and 1 <= j <= spec.n):
        raise IndexError(f"position ({i}, {j}) outside order {spec.n}")
    d = j - i
    return spec.b if -spec.l < d < spec.k else spec.a


def materialize(spec: BandSpec) -> DenseMatrix:
    """The full n x n matrix; Toeplitz and persymmetric by construction."""
    n, k, l = spec.n, spec.k, spec.l
    a, b = spec.a, spec.b
    return DenseMatrix(
        tuple(
            tuple(b if -l < j - i < k else a for j in range(n)) for i in range(n)
        )
    )


def residue(spec: BandSpec) -> BandResidue:
    if spec.l == 1:
        p = spec.n % spec.k or spec.k
        return BandResidue(p, (spec.n - p) // spec.k, 1)
    w = spec.k + spec.l - 1
    return BandResidue(spec.n % w, spec.n // w, 2)


@dataclass(frozen=True)
class FactoredDet:
    """Determinant kept as sign * base**exponent * tail.

    Avoids expanding the power at very large n and is what the CLI shows;
    :meth:`expand` produces the plain ring element.
    """

    sign: int
    base: RingElement
    exponent: int
    tail: RingElement

    def expand(self) -> RingElement:
        if self.tail.is_zero():
            return self.tail
        out = (self.base**self.exponent) * self.tail
        return -out if self.sign < 0 else out

    def __str__(self) -> str:
        parts = [] if self.sign > 0 else ["-1"]
        base = str(self.base)
        parts.append(f"({base})^{self.exponent}")
        tail = str(self.tail)
        parts.append(f"({tail})" if " " in tail else tail)
        return " * ".join(parts)


def _int_quotient(num: int, den: int) -> int:
    q, r = divmod(num, den)
    if r:
        raise DivisibilityError(f"{num} is not a multiple of {den}")
    return q


def _case1_factored(n: int, k: int, a: RingElement, b: RingElement) -> FactoredDet:
    if n < 1 or k < 1:
        raise ValueError(f"need n >= 1 and k >= 1, got n={n} k={k}")
    p = n % k or k
    q = _int_quotient(n - p, k)
    return FactoredDet(1, b - a, n - 1, b + scalar_mul(q, a))


def det_case1(n: int, k: int, a, b) -> RingElement:
    """Closed form for l = 1:

        (b - a)^(n-1) * (b + ((n - p)/k) * a),  n = p (mod k), 0 < p <= k

    with the quotient an exact integer scalar (never ring division).
    k > n is allowed: the band window saturates and the value reduces to
    the all-b-triangle form, matching the matrix the window rule gives.
    """
    return _case1_factored(n, k, as_element(a), as_element(b)).expand()


def _case2_factored(
    n: int, k: int, l: int, a: RingElement, b: RingElement
) -> FactoredDet:
    if n < 1 or not 1 < l <= k:
        raise ValueError(f"need n >= 1 and 1 < l <= k, got n={n} k={k} l={l}")
    w = k + l - 1
    p = n % w
    s = n // w
    if p == 0:
        tail = b + scalar_mul(_int_quotient(n - k - l + 1, w), a)
    elif p == 1:
        tail = b + scalar_mul(_int_quotient(n - 1, w), a)
    else:
        return FactoredDet(1, b - a, n - 1, a.ring_zero())
    sign = -1 if ((k - 1) * (l - 1) * s) & 1 else 1
    return FactoredDet(sign, b - a, n - 1, tail)


def det_case2(n: int, k: int, l: int, a, b) -> RingElement:
    """Closed form for l > 1, by the residue p of n mod k+l-1:

        p = 0:     (-1)^((k-1)(l-1)s) * (b-a)^(n-1) * (b + ((n-k-l+1)/(k+l-1)) a)
        p = 1:     (-1)^((k-1)(l-1)s) * (b-a)^(n-1) * (b + ((n-1)/(k+l-1)) a)
        otherwise: 0

    The sign uses the integer quotient s = n // (k+l-1), which on the two
    nonzero branches equals the fractional-looking exponent rewritten
    without division.  Widths beyond n are allowed; the window rule
    saturates and the formula stays exact.
    """
    return _case2_factored(n, k, l, as_element(a), as_element(b)).expand()


def det_factored(spec: BandSpec) -> FactoredDet:
    """Structured determinant of the spec, dispatching on l."""
    if spec.l == 1:
        return _case1_factored(spec.n, spec.k, spec.a, spec.b)
    return _case2_factored(spec.n, spec.k, spec.l, spec.a, spec.b)


def det_closed(spec: BandSpec) -> RingElement:
    """Expanded closed-form determinant; equals det of materialize(spec)."""
    return det_factored(spec).expand()


def f_closed(n: int, a, b) -> RingElement:
    """(b - a)^(n-1) * a: determinant of the order-n matrix built from an
    order-(n-1) l = 1 band block bordered by a last row and last column of
    all a.  The value does not depend on the block's band width."""
    if n < 1:
        raise ValueError("order n must be positive")
    a = as_element(a)
    b = as_element(b)
    return ((b - a) ** (n - 1)) * a


def g_closed(n: int, a, b) -> RingElement:
    """(b - a)^(n-1) * b: determinant of the k = n spec (upper triangle,
    diagonal included, all b)."""
    if n < 1:
        raise ValueError("order n must be positive")
    a = as_element(a)
    b = as_element(b)
    return ((b - a) ** (n - 1)) * b


def bordered_matrix(n: int, k: int, a, b) -> DenseMatrix:
    """The matrix whose determinant f_closed predicts: an (n-1)-order
    width-k band block with an all-a last row and column appended."""
    if n < 1:
        raise ValueError("order n must be positive")
    a = as_element(a)
    b = as_element(b)
    if n == 1:
        return DenseMatrix(((a,),))
    if not 1 <= k <= n - 1:
        raise ValueError(f"need 1 <= k <= n-1, got k={k} n={n}")
    last = n - 1
    return DenseMatrix(
        tuple(
            tuple(
                a
                if i == last or j == last
                else (b if -1 < j - i < k else a)
                for j in range(n)
            )
            for i in range(n)
        )
    )


def det_recurrence(n: int, k: int, a, b) -> RingElement:
    """The l = 1 determinant by literally unrolling the recurrence

        d_n = (b-a)^k d_{n-k} + (b-a)^(n-1) a     while 2k < n,
        d_m = (b-a)^(m-1) (b + a)                 once k >= m/2 (k < m),

    with the k = n spec handled by g_closed.  Independent of det_case1;
    used as a cross-check path."""
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got k={k} n={n}")
    a = as_element(a)
    b = as_element(b)
    if k == n:
        return g_closed(n, a, b)
    m = n
    while 2 * k < m:
        m -= k
    d = ((b - a) ** (m - 1)) * (b + a)
    while m < n:
        m += k
        d = ((b - a) ** k) * d + ((b - a) ** (m - 1)) * a
    return d


def all_b_row_count(spec: BandSpec) -> int:
    """How many rows consist entirely of b: max(k + l - n, 0)."""
    return max(spec.k + spec.l - spec.n, 0)


def spec_to_json(spec: BandSpec) -> dict:
    """JSON object {n, k, l, a, b} with ring elements in their exact
    serialization; reflects the normalized (l <= k) orientation."""
    return {
        "n": spec.n,
        "k": spec.k,
        "l": spec.l,
        "a": element_to_json(spec.a),
        "b": element_to_json(spec.b),
    }


def spec_from_json(obj: dict) -> BandSpec:
    return BandSpec(
        int(obj["n"]),
        int(obj["k"]),
        int(obj["l"]),
        element_from_json(obj["a"]),
        element_from_json(obj["b"]),
    )

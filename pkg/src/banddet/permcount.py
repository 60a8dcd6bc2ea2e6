"""Parity censuses of restricted permutation classes.

A 0/1 characteristic matrix A defines the class of permutations whose
incidence matrix is dominated entrywise by A.  The class has per(A)
members, and the even/odd split is (per + det)/2 and (per - det)/2.
This module builds the named families (two rectangular-table seating
variants and the weak-excedance matrix), computes their censuses through
the permanent/determinant route, and re-derives everything by direct
enumeration for cross-checking.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from math import comb, factorial

from .band import BandSpec, det_closed, materialize
from .errors import (
    InexactDivisionError,
    InvalidPermutationError,
    ParityError,
)
from .oracle import (
    DenseMatrix,
    check_size,
    det_bareiss,
    permanent_ryser,
)
from .rings import Integer, Poly

__all__ = [
    "CharMatrix",
    "ParityCount",
    "ExcedanceCensus",
    "perm_sign",
    "parity_counts",
    "brute_force_parity",
    "menage_a_matrix",
    "menage_a_permanent_rec",
    "menage_a_permanent_sum",
    "menage_a_det",
    "menage_b_matrix",
    "menage_b_det",
    "excedance_matrix",
    "excedance_census",
    "brute_force_excedance_census",
    "weak_excedance_count",
    "weak_excedance_class",
    "family_table",
]


@dataclass(frozen=True)
class CharMatrix:
    """0/1 characteristic matrix of a restricted-permutation class."""

    bits: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        n = len(self.bits)
        if n == 0:
            raise ValueError("order must be positive")
        for row in self.bits:
            if len(row) != n:
                raise ValueError("matrix must be square")
            for e in row:
                if e not in (0, 1):
                    raise ValueError("entries must be 0 or 1")

    @property
    def n(self) -> int:
        return len(self.bits)

    def __getitem__(self, i: int) -> tuple[int, ...]:
        return self.bits[i]

    def to_dense(self) -> DenseMatrix:
        return DenseMatrix(
            tuple(tuple(Integer(e) for e in row) for row in self.bits)
        )


@dataclass(frozen=True)
class ParityCount:
    """Even/odd class sizes with their permanent/determinant provenance."""

    even: int
    odd: int
    permanent: int
    determinant: int

    def __post_init__(self) -> None:
        if self.even < 0 or self.odd < 0:
            raise ParityError(f"negative count: even={self.even} odd={self.odd}")
        if self.even + self.odd != self.permanent:
            raise ParityError(
                f"even + odd != per ({self.even}+{self.odd} != {self.permanent})"
            )
        if self.even - self.odd != self.determinant:
            raise ParityError(
                f"even - odd != det ({self.even}-{self.odd} != {self.determinant})"
            )


def perm_sign(perm) -> int:
    """Sign of a 0-based permutation: (-1)^(n - number of cycles)."""
    n = len(perm)
    seen = bytearray(n)
    cycles = 0
    for s in range(n):
        if seen[s]:
            continue
        cycles += 1
        j = s
        while not seen[j]:
            seen[j] = 1
            j = perm[j]
    return 1 if ((n - cycles) & 1) == 0 else -1


def parity_counts(A: CharMatrix) -> ParityCount:
    """Census from (per +- det)/2, permanent via Ryser, determinant via
    Bareiss; the exact halving is asserted."""
    dense = A.to_dense()
    per = permanent_ryser(dense).value
    det = det_bareiss(dense).value
    if (per + det) & 1:
        raise ParityError(f"per + det is odd (per={per}, det={det})")
    return ParityCount((per + det) // 2, (per - det) // 2, per, det)


def brute_force_parity(A: CharMatrix) -> ParityCount:
    """Census by direct enumeration of S_n; the oracle for parity_counts."""
    n = A.n
    check_size("PARITY_ENUM", n, "brute_force_parity")
    bits = A.bits
    even = odd = 0
    for perm in permutations(range(n)):
        if all(bits[i][perm[i]] for i in range(n)):
            if perm_sign(perm) > 0:
                even += 1
            else:
                odd += 1
    return ParityCount(even, odd, even + odd, even - odd)


def _window_bits(n: int, k: int, l: int) -> CharMatrix:
    # 0 inside the window -l < j-i < k, 1 outside; unlike BandSpec this
    # stays valid when the window is wider than the matrix (tiny n)
    return CharMatrix(
        tuple(
            tuple(0 if -l < j - i < k else 1 for j in range(n)) for i in range(n)
        )
    )


def menage_a_matrix(n: int) -> CharMatrix:
    """Characteristic matrix of the seatings with pi(i) != i, i+1 and
    pi(n) != n: zeros on the main and first upper diagonals."""
    if n < 1:
        raise ValueError("order must be positive")
    return _window_bits(n, 2, 1)


def menage_b_matrix(n: int) -> CharMatrix:
    """Characteristic matrix of the seatings with |pi(i) - i| > 1: the
    zero tridiagonal."""
    if n < 1:
        raise ValueError("order must be positive")
    return _window_bits(n, 2, 2)


def menage_a_permanent_rec(n: int) -> int:
    """Class size of the A family by the recurrence

        (n-1) p_n = (n^2 - n - 1) p_{n-1} + n p_{n-2} + 2(-1)^(n+1)

    with p_1 = p_2 = 0.  The division by n-1 must land exactly."""
    if n < 1:
        raise ValueError("order must be positive")
    if n <= 2:
        return 0
    p_prev2, p_prev = 0, 0
    for m in range(3, n + 1):
        num = (m * m - m - 1) * p_prev + m * p_prev2 + (2 if m & 1 else -2)
        q, r = divmod(num, m - 1)
        if r:
            raise InexactDivisionError(
                f"recurrence numerator {num} not divisible by {m - 1} at order {m}"
            )
        p_prev2, p_prev = p_prev, q
    return p_prev


def menage_a_permanent_sum(n: int) -> int:
    """Class size of the A family by the alternating sum
    sum_k (-1)^k C(2n-k, k) (n-k)!."""
    if n < 1:
        raise ValueError("order must be positive")
    total = 0
    for k in range(n + 1):
        term = comb(2 * n - k, k) * factorial(n - k)
        total += -term if k & 1 else term
    return total


def menage_a_det(n: int) -> int:
    """Determinant of the A family, via both printed forms:
    (-1)^(n-1) (n-p)/2 with n = p (mod 2), 0 < p <= 2, and
    (-1)^(n-1) floor((n-1)/2).  The two must agree."""
    if n < 1:
        raise ValueError("order must be positive")
    p = 2 if n % 2 == 0 else 1
    residue_form = (n - p) // 2 if n & 1 else -((n - p) // 2)
    floor_form = (n - 1) // 2 if n & 1 else -((n - 1) // 2)
    if residue_form != floor_form:
        raise ArithmeticError(f"determinant forms disagree at n={n}")
    return residue_form


def menage_b_det(n: int) -> int:
    """Determinant of the B family: (3-n)/3, (n-1)/3 or 0 as n mod 3 is
    0, 1 or 2."""
    if n < 1:
        raise ValueError("order must be positive")
    p = n % 3
    if p == 2:
        return 0
    if p == 0:
        return (3 - n) // 3
    return (n - 1) // 3


def excedance_matrix(n: int) -> DenseMatrix:
    """Polynomial-ring matrix with the variable b on and above the main
    diagonal and 1 below; its permanent counts permutations by their
    number of weak excedances."""
    if n < 1:
        raise ValueError("order must be positive")
    return materialize(BandSpec(n, n, 1, Poly.constant(1), Poly.variable()))


@dataclass(frozen=True)
class ExcedanceCensus:
    """Per-k census of order-n permutations by weak-excedance count k.

    Coefficient tuples are indexed k-1 for k = 1..n.  per_coeffs holds
    the class sizes T(n, k), det_coeffs the signed binomials
    c(n, k) = (-1)^(n-k) C(n-1, k-1).
    """

    n: int
    per_coeffs: tuple[int, ...]
    det_coeffs: tuple[int, ...]
    even: tuple[int, ...]
    odd: tuple[int, ...]

    def __post_init__(self) -> None:
        n = self.n
        for t in (self.per_coeffs, self.det_coeffs, self.even, self.odd):
            if len(t) != n:
                raise ValueError("coefficient tuples must have length n")
        for i in range(n):
            k = i + 1
            t, c, e, o = (
                self.per_coeffs[i],
                self.det_coeffs[i],
                self.even[i],
                self.odd[i],
            )
            if e < 0 or o < 0 or e + o != t or e - o != c:
                raise ParityError(f"inconsistent census at n={n} k={k}")
            want = comb(n - 1, k - 1) if (n - k) % 2 == 0 else -comb(n - 1, k - 1)
            if c != want:
                raise ParityError(
                    f"det coefficient {c} != (-1)^(n-k) C(n-1,k-1) = {want} at k={k}"
                )


def excedance_census(n: int) -> ExcedanceCensus:
    """Census from the permanent and determinant of the weak-excedance
    matrix: the k-th coefficients give class size and even-odd gap."""
    if n < 1:
        raise ValueError("order must be positive")
    per = permanent_ryser(excedance_matrix(n))
    if per.coeff(0) != 0:
        raise ParityError("permutation with no weak excedance counted")
    det = det_closed(BandSpec(n, n, 1, Poly.constant(1), Poly.variable()))
    per_coeffs = tuple(per.coeff(k) for k in range(1, n + 1))
    det_coeffs = tuple(det.coeff(k) for k in range(1, n + 1))
    even = []
    odd = []
    for t, c in zip(per_coeffs, det_coeffs):
        if (t + c) & 1:
            raise ParityError(f"T + c is odd (T={t}, c={c})")
        even.append((t + c) // 2)
        odd.append((t - c) // 2)
    return ExcedanceCensus(n, per_coeffs, det_coeffs, tuple(even), tuple(odd))


def brute_force_excedance_census(n: int) -> ExcedanceCensus:
    """Census by enumerating S_n and bucketing by weak-excedance count
    and sign; the oracle for excedance_census."""
    if n < 1:
        raise ValueError("order must be positive")
    check_size("CENSUS_ENUM", n, "brute_force_excedance_census")
    even = [0] * n
    odd = [0] * n
    for perm in permutations(range(n)):
        k = sum(1 for i, v in enumerate(perm) if v >= i)
        if perm_sign(perm) > 0:
            even[k - 1] += 1
        else:
            odd[k - 1] += 1
    per_coeffs = tuple(e + o for e, o in zip(even, odd))
    det_coeffs = tuple(e - o for e, o in zip(even, odd))
    return ExcedanceCensus(n, per_coeffs, det_coeffs, tuple(even), tuple(odd))


def _validate_one_line(perm) -> tuple[int, ...]:
    p = tuple(perm)
    if sorted(p) != list(range(1, len(p) + 1)):
        raise InvalidPermutationError(
            f"not a permutation of 1..{len(p)} in one-line notation: {perm!r}"
        )
    return p


def weak_excedance_count(perm) -> int:
    """Number of positions i with pi(i) >= i; perm in 1-based one-line
    notation, e.g. (1, 4, 2, 3)."""
    p = _validate_one_line(perm)
    return sum(1 for i, v in enumerate(p, start=1) if v >= i)


def weak_excedance_class(n: int, count: int) -> list[tuple[int, ...]]:
    """All order-n permutations with exactly `count` weak excedances, in
    lexicographic one-line order."""
    check_size("CENSUS_ENUM", n, "weak_excedance_class")
    out = []
    for perm in permutations(range(1, n + 1)):
        if sum(1 for i, v in enumerate(perm, start=1) if v >= i) == count:
            out.append(perm)
    return out


def _excedance_k2_row(n: int) -> tuple[int, int, int, int, int]:
    census = excedance_census(n)
    if n < 2:
        return (n, 0, 0, 0, 0)
    return (n, census.per_coeffs[1], census.det_coeffs[1], census.even[1], census.odd[1])


def family_table(family: str, n_max: int) -> list[tuple[int, int, int, int, int]]:
    """Census rows for n = 1..n_max.

    menage-a, menage-b: (n, per, det, even, odd) with the permanent from
    Ryser and the determinant from the family closed form.
    excedance-k2: (n, T(n,2), c(n,2), even, odd).
    """
    if n_max < 1:
        raise ValueError("n_max must be positive")
    rows = []
    if family == "menage-a":
        for n in range(1, n_max + 1):
            per = permanent_ryser(menage_a_matrix(n).to_dense()).value
            det = menage_a_det(n)
            pc = ParityCount((per + det) // 2, (per - det) // 2, per, det)
            rows.append((n, pc.permanent, pc.determinant, pc.even, pc.odd))
    elif family == "menage-b":
        for n in range(1, n_max + 1):
            per = permanent_ryser(menage_b_matrix(n).to_dense()).value
            det = menage_b_det(n)
            pc = ParityCount((per + det) // 2, (per - det) // 2, per, det)
            rows.append((n, pc.permanent, pc.determinant, pc.even, pc.odd))
    elif family == "excedance-k2":
        for n in range(1, n_max + 1):
            rows.append(_excedance_k2_row(n))
    else:
        raise ValueError(f"unknown family {family!r}")
    return rows

"""Exact character values of Specht and permutation modules of S_n.

Everything here works over Python integers.  Specht characters come from the
Murnaghan-Nakayama rule on beta-sets; skew tableau counts come from the Aitken
determinant, evaluated by fraction-free elimination.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import factorial
from typing import Sequence

from .partitions import Partition, as_partition, conjugate, dimension, enumerate_partitions


def cycle_type(mu, n: int | None = None) -> Partition:
    """Sort ``mu`` into a partition and pad it with fixed points up to ``n``."""
    parts = sorted((int(p) for p in mu), reverse=True)
    if n is not None:
        missing = n - sum(parts)
        if missing < 0:
            raise ValueError(f"cycle type {tuple(mu)} is larger than n={n}")
        parts += [1] * missing
    return Partition(parts)


# ---------------------------------------------------------------------------
# Murnaghan-Nakayama

def _strip(beta: Sequence[int]) -> tuple[int, ...]:
    k = len(beta)
    parts = [b - (k - 1 - i) for i, b in enumerate(beta)]
    return tuple(p for p in parts if p > 0)


@lru_cache(maxsize=None)
def _mn(lam: tuple[int, ...], mu: tuple[int, ...]) -> int:
    # mu is sorted decreasingly so the cache key is canonical.  The cache is
    # unbounded; the sweeps in this package stay well inside a few MB.
    if not mu:
        return 1 if not lam else 0
    r, rest = mu[0], mu[1:]
    k = len(lam)
    beta = [p + k - 1 - i for i, p in enumerate(lam)]
    occupied = set(beta)
    total = 0
    for b in beta:
        target = b - r
        if target < 0 or target in occupied:
            continue
        # removing a rim hook of length r moves one bead down by r;
        # the leg length is the number of beads jumped over
        leg = sum(1 for c in beta if target < c < b)
        new_beta = sorted((occupied - {b}) | {target}, reverse=True)
        value = _mn(_strip(new_beta), rest)
        total += -value if leg % 2 else value
    return total


def mn_character(lam, mu) -> int:
    """chi_lam evaluated at a permutation of cycle type ``mu``.

    ``mu`` must have the same size as ``lam`` (include the fixed points).
    """
    lam = as_partition(lam)
    mu = cycle_type(mu)
    if lam.n != mu.n:
        raise ValueError(f"size mismatch: |{tuple(lam)}| = {lam.n} but |{tuple(mu)}| = {mu.n}")
    return _mn(tuple(lam), tuple(mu))


# ---------------------------------------------------------------------------
# skew tableaux

def bareiss_det(matrix: Sequence[Sequence[int]]) -> int:
    """Determinant of an integer matrix by Bareiss fraction-free elimination."""
    a = [list(row) for row in matrix]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                q, rem = divmod(row_i[j] * pivot - aik * row_k[j], prev)
                assert rem == 0, "Bareiss step not exact"
                row_i[j] = q
            row_i[k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def _falling(top: int, bottom: int) -> int:
    """top! / bottom! for 0 <= bottom <= top; 0 when bottom < 0 (1/m! = 0 for m < 0)."""
    if bottom < 0:
        return 0
    out = 1
    for m in range(bottom + 1, top + 1):
        out *= m
    return out


def skew_syt_count(lam, mu=()) -> int:
    """Number of standard Young tableaux on the skew shape lam/mu.

    Zero when mu does not fit inside lam.
    """
    lam = as_partition(lam)
    mu = as_partition(mu)
    if not lam.contains(mu):
        return 0
    if len(lam) > (lam[0] if lam else 0):
        # f_{lam/mu} = f_{lam'/mu'}; the transpose gives a smaller determinant
        lam, mu = conjugate(lam), conjugate(mu)
    ell = len(lam)
    if ell == 0:
        return 1
    mu_pad = list(mu) + [0] * (ell - len(mu))
    # row i scaled by tops[i]! = (lam_i - i + ell)! clears every denominator
    tops = [lam[i] - i + ell - 1 for i in range(ell)]
    mat = [[_falling(tops[i], lam[i] - mu_pad[j] - i + j) for j in range(ell)] for i in range(ell)]
    det = bareiss_det(mat)
    num = factorial(lam.n - mu.n) * det
    den = 1
    for t in tops:
        den *= factorial(t)
    f, rem = divmod(num, den)
    assert rem == 0, f"Aitken determinant not integral for {tuple(lam)}/{tuple(mu)}"
    return f


# ---------------------------------------------------------------------------
# the three character values the lifting criteria consume

@dataclass(frozen=True)
class CharTriple:
    """(chi(1), chi(s1), chi(s1 s3)) of a real character of S_n.

    For n < 4 there is no s1 s3; ``at_s1s3`` then stores the degree and
    ``s1s3_defined`` is False, which makes h = 0.
    """

    degree: int
    at_s1: int
    at_s1s3: int
    n: int
    s1s3_defined: bool = True

    def __post_init__(self):
        if self.degree < 0:
            raise ValueError("degree must be non-negative")
        if abs(self.at_s1) > self.degree or abs(self.at_s1s3) > self.degree:
            raise ValueError(f"character values exceed the degree: {self}")
        if self.n < 4 and self.s1s3_defined and self.at_s1s3 != self.degree:
            raise ValueError("chi(s1 s3) is undefined for n < 4")

    def __add__(self, other: "CharTriple") -> "CharTriple":
        if not isinstance(other, CharTriple):
            return NotImplemented
        if other.n != self.n:
            raise ValueError(f"cannot add characters of S_{self.n} and S_{other.n}")
        return CharTriple(
            self.degree + other.degree,
            self.at_s1 + other.at_s1,
            self.at_s1s3 + other.at_s1s3,
            self.n,
            self.s1s3_defined and other.s1s3_defined,
        )

    def scaled(self, m: int) -> "CharTriple":
        if m < 0:
            raise ValueError("multiplicity must be non-negative")
        return CharTriple(m * self.degree, m * self.at_s1, m * self.at_s1s3, self.n, self.s1s3_defined)

    @property
    def g(self) -> int:
        return g_and_h(self)[0]

    @property
    def h(self) -> int:
        return g_and_h(self)[1]


def zero_triple(n: int) -> CharTriple:
    return CharTriple(0, 0, 0, n, n >= 4)


def g_and_h(t: CharTriple) -> tuple[int, int]:
    """Multiplicities of the eigenvalue -1 of pi(s1) and pi(s1 s3).

    Raises ValueError when the triple cannot come from a real representation.
    """
    d1 = t.degree - t.at_s1
    d2 = t.degree - t.at_s1s3
    if d1 % 2:
        raise ValueError(f"chi(1) - chi(s1) must be even: {t}")
    if d2 % 4:
        raise ValueError(f"chi(1) - chi(s1 s3) must be divisible by 4: {t}")
    return d1 // 2, d2 // 2


def special_triple(lam) -> CharTriple:
    lam = as_partition(lam)
    n = lam.n
    if n < 1:
        raise ValueError("special_triple needs n >= 1")
    f = dimension(lam)
    # S_1 has no s1; storing chi(s1) = f keeps g = 0
    at_s1 = mn_character(lam, cycle_type((2,), n)) if n >= 2 else f
    if n >= 4:
        return CharTriple(f, at_s1, mn_character(lam, cycle_type((2, 2), n)), n)
    return CharTriple(f, at_s1, f, n, s1s3_defined=False)


def skew_g_h(lam) -> tuple[int, int]:
    """g and h of the Specht module read off from skew tableau counts."""
    g = skew_syt_count(lam, (1, 1))
    h = 2 * (skew_syt_count(lam, (3, 1)) + skew_syt_count(lam, (2, 1, 1)))
    return g, h


# ---------------------------------------------------------------------------
# permutation modules R[P_lam]

def multinomial(parts: Sequence[int]) -> int:
    if any(p < 0 for p in parts):
        return 0
    out = factorial(sum(parts))
    for p in parts:
        out //= factorial(p)
    return out


def perm_module_triple(lam) -> CharTriple:
    """Fixed-point counts of 1, s1, s1 s3 on ordered set partitions of shape lam."""
    lam = as_partition(lam)
    n = lam.n
    if n < 1:
        raise ValueError("perm_module_triple needs n >= 1")
    parts = list(lam)
    degree = multinomial(parts)

    def bumped(*changes: tuple[int, int]) -> list[int]:
        out = parts[:]
        for idx, delta in changes:
            out[idx] -= delta
        return out

    # s1 fixes (X_1..X_l) iff 1, 2 share a block
    at_s1 = sum(multinomial(bumped((i, 2))) for i, p in enumerate(parts) if p >= 2) if n >= 2 else degree
    if n < 4:
        return CharTriple(degree, at_s1, degree, n, s1s3_defined=False)
    # s1 s3 fixes iff {1,2} and {3,4} are each inside a block.  When the
    # blocks differ the pair (block of {1,2}, block of {3,4}) is ordered, so
    # each unordered pair of blocks i < j is counted twice.
    at_s1s3 = 0
    for i in range(len(parts)):
        for j in range(i + 1, len(parts)):
            if parts[i] >= 2 and parts[j] >= 2:
                at_s1s3 += 2 * multinomial(bumped((i, 2), (j, 2)))
    at_s1s3 += sum(multinomial(bumped((k, 4))) for k, p in enumerate(parts) if p >= 4)
    return CharTriple(degree, at_s1, at_s1s3, n)


# ---------------------------------------------------------------------------

def frobenius_skew_expansion(lam, mu) -> int:
    """sum over nu |- |mu| of chi_nu(w_mu) * f_{lam/nu}.

    Equals chi_lam at mu padded with fixed points; kept as an independent
    route for cross-checking :func:`mn_character`.
    """
    lam = as_partition(lam)
    mu = cycle_type(mu)
    k = mu.n
    if k > lam.n:
        raise ValueError(f"|mu| = {k} exceeds |lam| = {lam.n}")
    return sum(mn_character(nu, mu) * skew_syt_count(lam, nu) for nu in enumerate_partitions(k))

"""Lifting criteria for representations of S_n, A_n and S_n x S_n'.

Every verdict is decided from character values alone:

* S_n (n >= 4): spinorial iff g = 0 or 3 mod 4 and h = 0 mod 4.  For n = 2, 3
  the commuting relation does not occur and only the g condition remains.
* A_n restrictions (n >= 4): spinorial iff h = 0 mod 4, with a unique lift.
* External products: both restrictions spinorial and (ff' + 1) g g' even.
"""
from __future__ import annotations

import enum
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from fractions import Fraction

from .characters import CharTriple, g_and_h, skew_g_h, special_triple
from .partitions import Partition, as_partition, conjugate, enumerate_partitions, epsilon, partition_count
from .reps import RepDescriptor, Specht, triple_of
from .stiefel_whitney import w1_from_triple, w2_from_triple


@dataclass(frozen=True)
class SpinReport:
    group: str
    n: int
    degree: int
    g: int
    h: int
    chiral: bool | None
    spinorial: bool
    lift_count: int
    w1_coord: int | None = None
    w2_coords: tuple[int, int] | None = None
    n2: int | None = None

    def to_dict(self) -> dict:
        out = asdict(self)
        if out["w2_coords"] is not None:
            out["w2_coords"] = list(out["w2_coords"])
        if self.n2 is None:
            del out["n2"]
        return out


def g_condition(g: int) -> bool:
    """First (and third) lifting condition: c^2 = 1 for c a lift of an involution."""
    return g % 4 in (0, 3)


def h_condition(h: int) -> bool:
    """Second lifting condition: lifts of commuting s_i, s_k commute."""
    return h % 4 == 0


def _sn_verdict(g: int, h: int, n: int) -> bool:
    if n < 4:
        return g_condition(g)
    return g_condition(g) and h_condition(h)


def classify_triple_sn(t: CharTriple) -> SpinReport:
    if t.n < 2:
        raise ValueError(f"S_{t.n} has no transpositions; need n >= 2")
    g, h = g_and_h(t)
    spin = _sn_verdict(g, h, t.n)
    return SpinReport(
        group="sn",
        n=t.n,
        degree=t.degree,
        g=g,
        h=h,
        chiral=bool(g % 2),
        spinorial=spin,
        lift_count=2 if spin else 0,
        w1_coord=w1_from_triple(t).sgn_coef,
        w2_coords=w2_from_triple(t).coords,
    )


def classify_sn(rep: RepDescriptor) -> SpinReport:
    return classify_triple_sn(triple_of(rep))


def classify_triple_an(t: CharTriple) -> SpinReport:
    if t.n < 4:
        raise ValueError(f"A_n classification needs n >= 4, got n={t.n}")
    g, h = g_and_h(t)
    spin = h_condition(h)
    return SpinReport(
        group="an", n=t.n, degree=t.degree, g=g, h=h, chiral=None, spinorial=spin, lift_count=1 if spin else 0
    )


def classify_an_restriction(rep: RepDescriptor) -> SpinReport:
    return classify_triple_an(triple_of(rep))


class Variant(enum.Enum):
    RESTRICTION = "restriction"
    PLUS = "plus"
    MINUS = "minus"


@dataclass(frozen=True)
class AnIrreducibleLabel:
    """A real irreducible representation of A_n.

    RESTRICTION labels sigma_lam restricted to A_n, which is irreducible when
    lam != lam' or when lam = lam' with epsilon = -1.  PLUS/MINUS label the two
    real constituents of the restriction when lam = lam' and epsilon = +1.
    """

    shape: Partition
    variant: Variant = Variant.RESTRICTION

    def __post_init__(self):
        shape = as_partition(self.shape)
        variant = Variant(self.variant)
        object.__setattr__(self, "shape", shape)
        object.__setattr__(self, "variant", variant)
        split = shape == conjugate(shape) and epsilon(shape) == 1
        if variant is Variant.RESTRICTION and split:
            raise ValueError(
                f"{tuple(shape)} is self-conjugate with epsilon = +1; its restriction splits into plus/minus"
            )
        if variant is not Variant.RESTRICTION and not split:
            raise ValueError(f"{tuple(shape)} has no {variant.value} constituent")


def classify_an_irreducible(label: AnIrreducibleLabel) -> SpinReport:
    t = special_triple(label.shape)
    if t.n < 4:
        raise ValueError(f"A_n classification needs n >= 4, got n={t.n}")
    diff = t.degree - t.at_s1s3
    if label.variant is Variant.RESTRICTION:
        degree, h = t.degree, diff // 2
        spin = diff % 8 == 0
    else:
        # each constituent carries half of chi(1) and half of chi(s1 s3)
        degree, h = t.degree // 2, diff // 4
        spin = diff % 16 == 0
    return SpinReport(
        group="an", n=t.n, degree=degree, g=0, h=h, chiral=None, spinorial=spin, lift_count=1 if spin else 0
    )


# ---------------------------------------------------------------------------
# products

def _factor_spinorial(f_other: int, g: int, h: int, n: int) -> bool:
    # the restriction to one factor is f_other copies of that factor's rep
    return _sn_verdict(f_other * g, f_other * h, n)


def classify_product_triples(t: CharTriple, t2: CharTriple) -> SpinReport:
    for tt in (t, t2):
        if tt.n < 1:
            raise ValueError("factor groups need n >= 1")
    f, f2 = t.degree, t2.degree
    g, h = g_and_h(t)
    g2, h2 = g_and_h(t2)
    left_ok = t.n < 2 or _factor_spinorial(f2, g, h, t.n)
    right_ok = t2.n < 2 or _factor_spinorial(f, g2, h2, t2.n)
    cross_ok = (f * f2 + 1) * g * g2 % 2 == 0
    spin = left_ok and right_ok and cross_ok
    # distinct lifts differ by a homomorphism to {+1, -1}
    n_chars = 2 ** ((t.n >= 2) + (t2.n >= 2))
    return SpinReport(
        group="product",
        n=t.n,
        n2=t2.n,
        degree=f * f2,
        g=f2 * g,
        h=f2 * h,
        chiral=None,
        spinorial=spin,
        lift_count=n_chars if spin else 0,
    )


def classify_product(rep: RepDescriptor, rep2: RepDescriptor) -> SpinReport:
    return classify_product_triples(triple_of(rep), triple_of(rep2))


def product_five_conditions(f: int, g: int, h: int, f2: int, g2: int, h2: int) -> bool:
    """Spinoriality of an external product from the five parity conditions."""
    if h % 2 or h2 % 2:
        raise ValueError("h and h' must be even")
    quantities = (
        f2 * (h // 2),
        f2 * (g // 2) + (f2 + 1) * f2 // 2 * g,
        (f * f2 + 1) * g * g2,
        f * (h2 // 2),
        f * (g2 // 2) + (f + 1) * f // 2 * g2,
    )
    return all(q % 2 == 0 for q in quantities)


# ---------------------------------------------------------------------------
# density of achiral spinorial irreducibles

def _achiral_spinorial(lam: Partition) -> bool:
    g, h = skew_g_h(lam)
    return g % 4 == 0 and h % 4 == 0


def _count_chunk(chunk: list[tuple[int, ...]]) -> int:
    return sum(_achiral_spinorial(Partition(p)) for p in chunk)


def density_sweep(n: int, workers: int = 1) -> tuple[int, int, Fraction]:
    """Count lam |- n with sigma_lam achiral and spinorial.

    Returns (count, p(n), count / p(n)).  With ``workers > 1`` the partitions
    are split into chunks counted in separate processes; the result does not
    depend on the split.
    """
    if n < 4:
        raise ValueError("density sweep is defined for n >= 4")
    if workers is None or workers < 1:
        workers = os.cpu_count() or 1
    parts = [tuple(p) for p in enumerate_partitions(n)]
    if workers == 1 or len(parts) < 2000:
        count = _count_chunk(parts)
    else:
        size = -(-len(parts) // (4 * workers))
        chunks = [parts[i:i + size] for i in range(0, len(parts), size)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            count = sum(pool.map(_count_chunk, chunks))
    p_n = len(parts)
    assert p_n == partition_count(n)
    return count, p_n, Fraction(count, p_n)


def is_achiral_spinorial(lam) -> bool:
    return _achiral_spinorial(as_partition(lam))


def specht_report(lam) -> SpinReport:
    return classify_sn(Specht(as_partition(lam)))

"""First and second Stiefel-Whitney classes of representations of S_n and S_n x S_n'.

Classes are stored as coordinates over Z/2.  H^1(S_n) is spanned by
w1(sgn); H^2(S_n) has basis {e_cup, w2(pi_n)} for n >= 4 and is spanned by
e_cup alone for n = 2, 3.
"""
from __future__ import annotations

from dataclasses import dataclass

from .characters import CharTriple, g_and_h
from .reps import RepDescriptor, triple_of


@dataclass(frozen=True)
class H1Class:
    sgn_coef: int = 0

    def __post_init__(self):
        object.__setattr__(self, "sgn_coef", self.sgn_coef & 1)

    def __add__(self, other: "H1Class") -> "H1Class":
        return H1Class(self.sgn_coef ^ other.sgn_coef)

    def cup_square(self, n: int) -> "H2Class":
        return H2Class(self.sgn_coef, 0, n)


@dataclass(frozen=True)
class H2Class:
    e_cup_coef: int = 0
    w2_pin_coef: int = 0
    n: int = 4

    def __post_init__(self):
        object.__setattr__(self, "e_cup_coef", self.e_cup_coef & 1)
        object.__setattr__(self, "w2_pin_coef", self.w2_pin_coef & 1)
        if self.n < 4 and self.w2_pin_coef:
            raise ValueError(f"H^2(S_{self.n}) is spanned by e_cup alone")

    def __add__(self, other: "H2Class") -> "H2Class":
        if other.n != self.n:
            raise ValueError("classes live on different groups")
        return H2Class(self.e_cup_coef ^ other.e_cup_coef, self.w2_pin_coef ^ other.w2_pin_coef, self.n)

    def __mul__(self, k: int) -> "H2Class":
        k &= 1
        return H2Class(self.e_cup_coef * k, self.w2_pin_coef * k, self.n)

    __rmul__ = __mul__

    @property
    def coords(self) -> tuple[int, int]:
        return self.e_cup_coef, self.w2_pin_coef

    def is_zero(self) -> bool:
        return self.coords == (0, 0)


@dataclass(frozen=True)
class H2ProductClass:
    """Element of H^2(S_n) + H^1(S_n) (x) H^1(S_n') + H^2(S_n')."""

    left: H2Class
    cross: int
    right: H2Class

    def __post_init__(self):
        object.__setattr__(self, "cross", self.cross & 1)

    def __add__(self, other: "H2ProductClass") -> "H2ProductClass":
        return H2ProductClass(self.left + other.left, self.cross ^ other.cross, self.right + other.right)

    def is_zero(self) -> bool:
        return self.left.is_zero() and not self.cross and self.right.is_zero()


def binom2_parity(m: int) -> int:
    """C(m, 2) mod 2 without forming the binomial; by Lucas it is bit 1 of m."""
    return (m >> 1) & 1


def e_cup(n: int) -> H2Class:
    return H2Class(1, 0, n)


def w2_standard(n: int) -> H2Class:
    """Basis vector w2(pi_n); only exists for n >= 4."""
    return H2Class(0, 1, n)


def w1_from_triple(t: CharTriple) -> H1Class:
    g, _ = g_and_h(t)
    return H1Class(g % 2)


def w2_from_triple(t: CharTriple) -> H2Class:
    g, h = g_and_h(t)
    if t.n < 4:
        return H2Class((g // 2) % 2, 0, t.n)
    return H2Class((g // 2) % 2, (h // 2) % 2, t.n)


def w1_of(rep: RepDescriptor) -> H1Class:
    return w1_from_triple(triple_of(rep))


def w2_of(rep: RepDescriptor) -> H2Class:
    t = triple_of(rep)
    if t.n < 2:
        raise ValueError("w2 is computed for n >= 2")
    return w2_from_triple(t)


def spin_via_w(rep: RepDescriptor) -> bool:
    """Spinorial iff w2 = w1 cup w1."""
    t = triple_of(rep)
    if t.n < 2:
        raise ValueError("need n >= 2")
    return w2_from_triple(t) == w1_from_triple(t).cup_square(t.n)


def restriction_phi(c: H2Class) -> tuple[int, int]:
    """Restriction of c to H^2(<s1>) + H^2(<s1 s3>), as generator coefficients (b1, b2).

    e_cup restricts to (b1, 0) and w2(pi_n) to (0, b2), so on coordinates
    this is the identity, and in particular an isomorphism.
    """
    if c.n < 4:
        raise ValueError("the restriction map is defined for n >= 4")
    e_cup_image, w2_pin_image = (1, 0), (0, 1)
    b1, b2 = (
        (c.e_cup_coef * e + c.w2_pin_coef * w) % 2 for e, w in zip(e_cup_image, w2_pin_image)
    )
    return b1, b2


def _fgh(rep: RepDescriptor) -> tuple[CharTriple, int, int, int]:
    t = triple_of(rep)
    g, h = g_and_h(t)
    return t, t.degree, g, h


def w1_product(rep_left: RepDescriptor, rep_right: RepDescriptor) -> tuple[H1Class, H1Class]:
    """w1 of the external tensor product: deg(right) w1(left) + deg(left) w1(right)."""
    _, f, g, _ = _fgh(rep_left)
    _, f2, g2, _ = _fgh(rep_right)
    return H1Class(f2 * g), H1Class(f * g2)


def w2_product(rep_left: RepDescriptor, rep_right: RepDescriptor) -> H2ProductClass:
    tl, f, g, _ = _fgh(rep_left)
    tr, f2, g2, _ = _fgh(rep_right)
    w2l, w2r = w2_from_triple(tl), w2_from_triple(tr)
    left = f2 * w2l + e_cup(tl.n) * (binom2_parity(f2) * g)
    right = f * w2r + e_cup(tr.n) * (binom2_parity(f) * g2)
    # H^1 of S_1 vanishes, so there is no cross term there
    cross = (f * f2 - 1) * g * g2 if tl.n >= 2 and tr.n >= 2 else 0
    return H2ProductClass(left, cross, right)


def w1_cup_square_product(rep_left: RepDescriptor, rep_right: RepDescriptor) -> H2ProductClass:
    """w1(P) cup w1(P) for P the external product; the mixed terms cancel mod 2."""
    a, b = w1_product(rep_left, rep_right)
    n_l, n_r = triple_of(rep_left).n, triple_of(rep_right).n
    return H2ProductClass(a.cup_square(n_l), 0, b.cup_square(n_r))


def product_obstruction(rep_left: RepDescriptor, rep_right: RepDescriptor) -> H2ProductClass:
    """w2 + w1 cup w1 of the external product; zero iff spinorial."""
    return w2_product(rep_left, rep_right) + w1_cup_square_product(rep_left, rep_right)


def product_spin_via_w(rep_left: RepDescriptor, rep_right: RepDescriptor) -> bool:
    return product_obstruction(rep_left, rep_right).is_zero()

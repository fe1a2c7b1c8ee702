"""Numerical lift construction in the Clifford algebra C(R^d), used as an oracle.

Conventions: orthonormal generators e_0..e_{d-1} with e_j^2 = -1 and
e_i e_j = -e_j e_i.  A blade is stored at the bitmask of its generators, and
a product e_A e_B picks up (-1)^(swaps + |A & B|).

The twisted adjoint action is rho(x) v = alpha(x) v x^{-1}; a unit vector acts
as the reflection in its orthogonal hyperplane.  Lifts of an orthogonal matrix
are built as products of unit vectors, and the relations of S_n or A_n are
checked by multiplying out words in those vectors.
"""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

import numpy as np

from .partitions import Partition, as_partition

MAX_DIM = 14
RELATION_TOL = 1e-8
SCALAR_MIN = 0.5
NONSCALAR_TOL = 1e-6
RANK_TOL = 1e-6


class OracleError(ValueError):
    """Input rejected by the oracle or a product whose sign cannot be read off."""


@lru_cache(maxsize=None)
def _popcount(dim: int) -> np.ndarray:
    idx = np.arange(1 << dim)
    counts = np.zeros(1 << dim, dtype=np.int64)
    for j in range(dim):
        counts += (idx >> j) & 1
    return counts


@lru_cache(maxsize=4096)
def _blade_signs(dim: int, b: int) -> np.ndarray:
    """sign of e_A e_B for every A, with B = b fixed."""
    pc = _popcount(dim)
    idx = np.arange(1 << dim)
    swaps = np.zeros(1 << dim, dtype=np.int64)
    for j in range(dim):
        if b >> j & 1:
            swaps += pc[idx >> (j + 1)]
    swaps += pc[idx & b]
    return np.where(swaps % 2, -1.0, 1.0)


@lru_cache(maxsize=None)
def _grades(dim: int) -> np.ndarray:
    return _popcount(dim)


class Multivector:
    """Dense element of C(R^dim); ``coeffs[mask]`` is the coefficient of that blade."""

    __slots__ = ("dim", "coeffs")

    def __init__(self, dim: int, coeffs=None):
        if dim < 0 or dim > MAX_DIM:
            raise OracleError(f"dimension {dim} outside 0..{MAX_DIM}")
        self.dim = dim
        size = 1 << dim
        if coeffs is None:
            self.coeffs = np.zeros(size)
        else:
            self.coeffs = np.asarray(coeffs, dtype=float).copy()
            if self.coeffs.shape != (size,):
                raise OracleError(f"expected {size} coefficients, got {self.coeffs.shape}")

    @classmethod
    def scalar(cls, dim: int, value: float = 1.0) -> "Multivector":
        mv = cls(dim)
        mv.coeffs[0] = value
        return mv

    @classmethod
    def vector(cls, components: Sequence[float]) -> "Multivector":
        components = np.asarray(components, dtype=float)
        dim = len(components)
        mv = cls(dim)
        mv.coeffs[1 << np.arange(dim)] = components
        return mv

    @classmethod
    def blade(cls, dim: int, *indices: int) -> "Multivector":
        """e_{i1} e_{i2} ... as a product (indices need not be sorted)."""
        out = cls.scalar(dim)
        for i in indices:
            out = out * cls.basis_vector(dim, i)
        return out

    @classmethod
    def basis_vector(cls, dim: int, i: int) -> "Multivector":
        mv = cls(dim)
        mv.coeffs[1 << i] = 1.0
        return mv

    def _check(self, other: "Multivector"):
        if other.dim != self.dim:
            raise OracleError(f"dimension mismatch: {self.dim} vs {other.dim}")

    def __add__(self, other):
        if isinstance(other, (int, float)):
            return self + Multivector.scalar(self.dim, other)
        self._check(other)
        return Multivector(self.dim, self.coeffs + other.coeffs)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return Multivector(self.dim, -self.coeffs)

    def __mul__(self, other):
        if isinstance(other, (int, float, np.floating)):
            return Multivector(self.dim, self.coeffs * other)
        self._check(other)
        return geometric_product(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, float, np.floating)):
            return Multivector(self.dim, self.coeffs * other)
        return NotImplemented

    def grade(self, k: int) -> "Multivector":
        return Multivector(self.dim, np.where(_grades(self.dim) == k, self.coeffs, 0.0))

    @property
    def scalar_part(self) -> float:
        return float(self.coeffs[0])

    def vector_part(self) -> np.ndarray:
        return self.coeffs[1 << np.arange(self.dim)].copy()

    def nonscalar_norm(self) -> float:
        return float(np.max(np.abs(self.coeffs[1:]))) if self.dim else 0.0

    def allclose(self, other: "Multivector", atol: float = 1e-9) -> bool:
        self._check(other)
        return bool(np.allclose(self.coeffs, other.coeffs, atol=atol, rtol=0))

    def __repr__(self) -> str:
        terms = [f"{c:+.6g}*e{_mask_name(m)}" for m, c in enumerate(self.coeffs) if abs(c) > 1e-12]
        return f"Multivector(dim={self.dim}, {' '.join(terms) or '0'})"


def _mask_name(mask: int) -> str:
    if not mask:
        return "()"
    return "(" + ",".join(str(j) for j in range(mask.bit_length()) if mask >> j & 1) + ")"


def geometric_product(a: Multivector, b: Multivector) -> Multivector:
    if a.dim != b.dim:
        raise OracleError(f"dimension mismatch: {a.dim} vs {b.dim}")
    dim = a.dim
    idx = np.arange(1 << dim)
    out = np.zeros(1 << dim)
    for mask in np.flatnonzero(b.coeffs):
        mask = int(mask)
        out[idx ^ mask] += _blade_signs(dim, mask) * a.coeffs * b.coeffs[mask]
    return Multivector(dim, out)


def alpha(x: Multivector) -> Multivector:
    """Grade involution: negates odd grades."""
    return Multivector(x.dim, np.where(_grades(x.dim) % 2, -x.coeffs, x.coeffs))


def reversal_t(x: Multivector) -> Multivector:
    """Reverses the factors of every blade: sign (-1)^(k(k-1)/2) on grade k."""
    k = _grades(x.dim)
    return Multivector(x.dim, np.where((k * (k - 1) // 2) % 2, -x.coeffs, x.coeffs))


def bar(x: Multivector) -> Multivector:
    return reversal_t(alpha(x))


def norm_N(x: Multivector) -> Multivector:
    return x * bar(x)


def twisted_adjoint(x: Multivector) -> np.ndarray:
    """Matrix of v -> alpha(x) v x^{-1} on R^d, for x with N(x) a nonzero scalar.

    Raises OracleError if x does not preserve the grade-1 subspace.
    """
    n = norm_N(x)
    if n.nonscalar_norm() > NONSCALAR_TOL or abs(n.scalar_part) < SCALAR_MIN:
        raise OracleError("N(x) is not a unit scalar; x is not in the Pin group")
    inv = bar(x) * (1.0 / n.scalar_part)
    ax = alpha(x)
    cols = []
    for j in range(x.dim):
        image = ax * Multivector.basis_vector(x.dim, j) * inv
        v = image.vector_part()
        leak = np.max(np.abs(image.coeffs - Multivector.vector(v).coeffs))
        if leak > NONSCALAR_TOL:
            raise OracleError("twisted conjugation leaves the vector subspace")
        cols.append(v)
    return np.column_stack(cols)


def square_sign(g: int) -> int:
    """(-1)^(g(g+1)/2): the square of a product of g orthonormal vectors."""
    if g < 0:
        raise ValueError("g must be non-negative")
    return -1 if (g * (g + 1) // 2) % 2 else 1


def product_of_vectors(vectors: Sequence[np.ndarray], dim: int) -> Multivector:
    out = Multivector.scalar(dim)
    for v in vectors:
        out = out * Multivector.vector(v)
    return out


# ---------------------------------------------------------------------------
# lifting a single orthogonal matrix

def _residual(a: np.ndarray) -> float:
    return float(np.linalg.norm(a))


def _check_orthogonal(m: np.ndarray) -> float:
    r = _residual(m @ m.T - np.eye(len(m)))
    if r > RELATION_TOL:
        raise OracleError(f"matrix is not orthogonal (residual {r:.2e})")
    return r


def involution_vectors(m: np.ndarray) -> list[np.ndarray]:
    """Orthonormal basis of the -1 eigenspace of an orthogonal involution."""
    m = np.asarray(m, dtype=float)
    _check_orthogonal(m)
    r = _residual(m @ m - np.eye(len(m)))
    if r > RELATION_TOL:
        raise OracleError(f"matrix is not an involution (residual {r:.2e})")
    proj = (np.eye(len(m)) - m) / 2
    proj = (proj + proj.T) / 2
    vals, vecs = np.linalg.eigh(proj)
    if np.any((vals > RANK_TOL) & (vals < 1 - RANK_TOL)):
        raise OracleError("eigenvalues of the -1 projector are not separated from 0 and 1")
    basis = vecs[:, vals > 0.5]
    # one re-orthogonalisation pass (modified Gram-Schmidt)
    out = []
    for col in basis.T:
        v = col.copy()
        for u in out:
            v -= (u @ v) * u
        out.append(v / np.linalg.norm(v))
    return out


def reflection_vectors(m: np.ndarray) -> list[np.ndarray]:
    """Unit vectors u_1..u_k whose reflections multiply to ``m`` (Householder sweep)."""
    m = np.asarray(m, dtype=float)
    _check_orthogonal(m)
    d = len(m)
    q = m.copy()
    out = []
    for j in range(d):
        v = q[:, j].copy()
        v[j] -= 1.0
        nv = np.linalg.norm(v)
        if nv < RANK_TOL:
            continue
        u = v / nv
        q = q - 2.0 * np.outer(u, u @ q)
        out.append(u)
    if _residual(q - np.eye(d)) > RELATION_TOL:
        raise OracleError("Householder sweep did not reduce the matrix to the identity")
    return out


def candidate_lift(m: np.ndarray) -> Multivector:
    """u_1 ... u_g for an orthonormal basis u of the -1 eigenspace of the involution m.

    Its negative is the only other element of Pin mapping to m.  The ordering
    of the basis only changes the overall sign.
    """
    m = np.asarray(m, dtype=float)
    return product_of_vectors(involution_vectors(m), len(m))


def lift_orthogonal(m: np.ndarray) -> Multivector:
    """Some element of Pin(R^d) over an arbitrary orthogonal matrix."""
    m = np.asarray(m, dtype=float)
    return product_of_vectors(reflection_vectors(m), len(m))


# ---------------------------------------------------------------------------
# representations given by generator matrices

@dataclass(frozen=True)
class OrthogonalRep:
    """Orthogonal matrices for the Coxeter generators s_1..s_{n-1} (group "sn")
    or for u_1..u_{n-2}, u_i = s_1 s_{i+1} (group "an")."""

    n: int
    generator_matrices: tuple
    group: str = "sn"

    def __post_init__(self):
        mats = tuple(np.asarray(m, dtype=float) for m in self.generator_matrices)
        object.__setattr__(self, "generator_matrices", mats)
        expected = self.n - 1 if self.group == "sn" else self.n - 2
        if self.group not in ("sn", "an"):
            raise OracleError(f"unknown group {self.group!r}")
        if len(mats) != expected:
            raise OracleError(f"{self.group} with n={self.n} needs {expected} generators, got {len(mats)}")
        if mats:
            d = mats[0].shape[0]
            for m in mats:
                if m.shape != (d, d):
                    raise OracleError("generator matrices must be square and of equal size")

    @property
    def degree(self) -> int:
        return self.generator_matrices[0].shape[0] if self.generator_matrices else 0


def relation_residuals(rep: OrthogonalRep) -> dict[str, float]:
    """Frobenius residuals of orthogonality and the defining relations."""
    mats = rep.generator_matrices
    eye = np.eye(rep.degree)
    res: dict[str, float] = {}
    for i, m in enumerate(mats, start=1):
        res[f"orth{i}"] = _residual(m @ m.T - eye)
    if rep.group == "sn":
        for i, m in enumerate(mats, start=1):
            res[f"s{i}^2"] = _residual(m @ m - eye)
        for i in range(len(mats)):
            for k in range(i + 2, len(mats)):
                res[f"s{i+1}s{k+1}"] = _residual(mats[i] @ mats[k] - mats[k] @ mats[i])
        for i in range(len(mats) - 1):
            res[f"(s{i+1}s{i+2})^3"] = _residual(np.linalg.matrix_power(mats[i] @ mats[i + 1], 3) - eye)
    else:
        m = len(mats)
        res["u1^3"] = _residual(np.linalg.matrix_power(mats[0], 3) - eye)
        for j in range(1, m):
            res[f"u{j+1}^2"] = _residual(mats[j] @ mats[j] - eye)
            res[f"(u{j}u{j+1})^3"] = _residual(np.linalg.matrix_power(mats[j - 1] @ mats[j], 3) - eye)
        for j in range(m):
            for i in range(j - 1):
                res[f"(u{i+1}u{j+1})^2"] = _residual(np.linalg.matrix_power(mats[i] @ mats[j], 2) - eye)
    return res


def check_relations(rep: OrthogonalRep, tol: float = RELATION_TOL) -> float:
    res = relation_residuals(rep)
    worst = max(res.values(), default=0.0)
    if worst > tol:
        bad = max(res, key=res.get)
        raise OracleError(f"relation {bad} fails with residual {worst:.2e}")
    return worst


@dataclass
class LiftResult:
    exists: bool
    lift_count: int
    max_residual: float
    # signs of the generator lifts for each valid assignment, relative to the candidates
    assignments: list = field(default_factory=list)

    def to_dict(self) -> dict:
        return {"exists": self.exists, "lift_count": self.lift_count, "max_residual": self.max_residual}


class _WordEvaluator:
    """Evaluates words in the candidate lifts and reads off their scalar sign."""

    def __init__(self, vectors: list[list[np.ndarray]], dim: int):
        self.vectors = vectors
        self.dim = dim
        self.max_residual = 0.0
        self._cache: dict[tuple[int, ...], int] = {}

    def sign(self, word: tuple[int, ...]) -> int:
        if word not in self._cache:
            vecs = [v for i in word for v in self.vectors[i]]
            mv = product_of_vectors(vecs, self.dim)
            s, off = mv.scalar_part, mv.nonscalar_norm()
            if abs(s) < SCALAR_MIN or off > NONSCALAR_TOL:
                raise OracleError(f"word {word} is not +-1 (scalar {s:.3g}, off-scalar {off:.2e})")
            self.max_residual = max(self.max_residual, off, abs(abs(s) - 1.0))
            self._cache[word] = 1 if s > 0 else -1
        return self._cache[word]


def _prepare(rep: OrthogonalRep, group: str, tol: float) -> float:
    if rep.group != group:
        raise OracleError(f"expected {group} generators, got {rep.group}")
    if rep.degree > MAX_DIM:
        raise OracleError(f"degree {rep.degree} exceeds the cap of {MAX_DIM}")
    if rep.degree < 1:
        raise OracleError("representation has degree 0")
    return check_relations(rep, tol)


def _sn_relations(k: int) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """(generator indices whose signs enter, word) for every Coxeter relation."""
    rels = [((i, i), (i, i)) for i in range(k)]
    rels += [((i, j, i, j), (i, j, i, j)) for i in range(k) for j in range(i + 2, k)]
    rels += [((i, i + 1) * 3, (i, i + 1) * 3) for i in range(k - 1)]
    return rels


def _an_relations(k: int) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    rels = [((0, 0, 0), (0, 0, 0))]
    rels += [((j, j), (j, j)) for j in range(1, k)]
    rels += [((j - 1, j) * 3, (j - 1, j) * 3) for j in range(1, k)]
    rels += [((i, j) * 2, (i, j) * 2) for j in range(k) for i in range(j - 1)]
    return rels


def _exhaustive(ev: _WordEvaluator, k: int, rels) -> list[tuple[int, ...]]:
    valid = []
    for signs in itertools.product((1, -1), repeat=k):
        ok = True
        for sign_idx, word in rels:
            eps = 1
            for i in sign_idx:
                eps *= signs[i]
            if eps * ev.sign(word) != 1:
                ok = False
                break
        if ok:
            valid.append(signs)
    return valid


def verify_sn_lift(rep: OrthogonalRep, exhaustive: bool = False, tol: float = RELATION_TOL) -> LiftResult:
    """Search for signs making the lifts c_i of pi(s_i) satisfy the Coxeter relations.

    Default route: c_1 takes either sign, each (c_i c_{i+1})^3 = 1 forces the
    sign of c_{i+1}, then c_i^2 = 1 and (c_i c_k)^2 = 1 are checked; these two
    do not depend on the signs.  ``exhaustive=True`` tries all 2^(n-1) sign
    vectors against every relation instead.
    """
    worst = _prepare(rep, "sn", tol)
    k = len(rep.generator_matrices)
    ev = _WordEvaluator([involution_vectors(m) for m in rep.generator_matrices], rep.degree)
    if exhaustive:
        valid = _exhaustive(ev, k, _sn_relations(k))
    else:
        valid = []
        sign_free = all(ev.sign((i, i)) == 1 for i in range(k)) and all(
            ev.sign((i, j, i, j)) == 1 for i in range(k) for j in range(i + 2, k)
        )
        if sign_free:
            for first in (1, -1):
                signs = [first]
                for i in range(k - 1):
                    # (e_i c_i e_{i+1} c_{i+1})^3 = e_i e_{i+1} (c_i c_{i+1})^3
                    signs.append(signs[-1] * ev.sign((i, i + 1) * 3))
                valid.append(tuple(signs))
    return LiftResult(bool(valid), len(valid), max(worst, ev.max_residual), valid)


def verify_an_lift(rep: OrthogonalRep, exhaustive: bool = False, tol: float = RELATION_TOL) -> LiftResult:
    """Sign search for lifts of the A_n generators u_1..u_{n-2}.

    c_1^3 = +-1 fixes the sign of c_1, the braid relations then fix the rest,
    so a lift is unique when it exists.
    """
    worst = _prepare(rep, "an", tol)
    mats = rep.generator_matrices
    k = len(mats)
    vectors = [reflection_vectors(mats[0])] + [involution_vectors(m) for m in mats[1:]]
    ev = _WordEvaluator(vectors, rep.degree)
    if exhaustive:
        valid = _exhaustive(ev, k, _an_relations(k))
    else:
        valid = []
        sign_free = all(ev.sign((j, j)) == 1 for j in range(1, k)) and all(
            ev.sign((i, j) * 2) == 1 for j in range(k) for i in range(j - 1)
        )
        if sign_free:
            signs = [ev.sign((0, 0, 0))]
            for j in range(1, k):
                signs.append(signs[-1] * ev.sign((j - 1, j) * 3))
            valid.append(tuple(signs))
    return LiftResult(bool(valid), len(valid), max(worst, ev.max_residual), valid)


# ---------------------------------------------------------------------------
# Young's orthogonal form

def standard_tableaux(lam) -> list[tuple[tuple[int, ...], ...]]:
    """All SYT of shape lam, entries 1..n, rows as tuples."""
    lam = as_partition(lam)
    n = lam.n
    out = []

    def rec(rows: list[list[int]], k: int):
        if k > n:
            out.append(tuple(tuple(r) for r in rows))
            return
        for i in range(len(lam)):
            if len(rows[i]) < lam[i] and (i == 0 or len(rows[i - 1]) > len(rows[i])):
                rows[i].append(k)
                rec(rows, k + 1)
                rows[i].pop()

    rec([[] for _ in lam], 1)
    return out


def young_orthogonal_matrices(lam) -> OrthogonalRep:
    """Matrices of s_1..s_{n-1} on the SYT basis of the Specht module.

    s_i fixes T when i, i+1 share a row, negates it when they share a column,
    and otherwise acts on span(T, s_i T) by [[1/r, sqrt(1-1/r^2)], [sqrt(1-1/r^2), -1/r]]
    with r the content of i+1 minus the content of i.
    """
    lam = as_partition(lam)
    n = lam.n
    if n < 2:
        raise ValueError("need n >= 2")
    tabs = standard_tableaux(lam)
    index = {t: k for k, t in enumerate(tabs)}
    d = len(tabs)
    positions = []
    for t in tabs:
        pos = {}
        for r, row in enumerate(t):
            for c, v in enumerate(row):
                pos[v] = (r, c)
        positions.append(pos)
    mats = []
    for i in range(1, n):
        m = np.zeros((d, d))
        for k, t in enumerate(tabs):
            (r1, c1), (r2, c2) = positions[k][i], positions[k][i + 1]
            if r1 == r2:
                m[k, k] = 1.0
            elif c1 == c2:
                m[k, k] = -1.0
            else:
                r = (c2 - r2) - (c1 - r1)
                swapped = tuple(tuple(i + 1 if v == i else i if v == i + 1 else v for v in row) for row in t)
                m[k, k] = 1.0 / r
                m[index[swapped], k] = np.sqrt(1.0 - 1.0 / r**2)
        mats.append(m)
    return OrthogonalRep(n, tuple(mats), "sn")


def an_generators(rep: OrthogonalRep) -> OrthogonalRep:
    """Restrict an S_n representation to A_n via u_i = s_1 s_{i+1}."""
    if rep.group != "sn":
        raise OracleError("expected S_n generators")
    s = rep.generator_matrices
    return OrthogonalRep(rep.n, tuple(s[0] @ s[i] for i in range(1, rep.n - 1)), "an")


def trivial_rep(n: int, group: str = "sn") -> OrthogonalRep:
    k = n - 1 if group == "sn" else n - 2
    return OrthogonalRep(n, tuple(np.eye(1) for _ in range(k)), group)


def permutation_matrices(n: int) -> OrthogonalRep:
    """The standard representation pi_n by permutation matrices."""
    mats = []
    for i in range(n - 1):
        m = np.eye(n)
        m[[i, i + 1]] = m[[i + 1, i]]
        mats.append(m)
    return OrthogonalRep(n, tuple(mats), "sn")


def det_twist(rep: OrthogonalRep) -> OrthogonalRep:
    """pi + det(pi) as block diagonal matrices."""
    mats = []
    for m in rep.generator_matrices:
        det = float(np.sign(np.linalg.det(m)))
        block = np.zeros((rep.degree + 1, rep.degree + 1))
        block[:-1, :-1] = m
        block[-1, -1] = det
        mats.append(block)
    return OrthogonalRep(rep.n, tuple(mats), rep.group)


def det_twist_check(rep: OrthogonalRep) -> bool:
    """True when pi and pi + det(pi) get the same lift verdict."""
    if rep.degree + 1 > MAX_DIM:
        raise OracleError(f"degree {rep.degree} + 1 exceeds the cap of {MAX_DIM}")
    verify = verify_sn_lift if rep.group == "sn" else verify_an_lift
    return verify(rep).exists == verify(det_twist(rep)).exists


def load_matrices(path, group: str = "sn") -> OrthogonalRep:
    """Read ``{"n": int, "generators": [[[row], ...], ...]}``."""
    with open(path) as fh:
        data = json.load(fh)
    try:
        n = int(data["n"])
        gens = [np.asarray(g, dtype=float) for g in data["generators"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise OracleError(f"malformed matrices file: {exc}") from exc
    return OrthogonalRep(n, tuple(gens), data.get("group", group))

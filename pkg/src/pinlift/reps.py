"""Descriptors for real representations of S_n.

The lifting criteria only ever look at the character triple, so a
representation is described by how to build that triple: a Specht module, a
permutation module, an explicit triple, or a direct sum of those with
positive multiplicities.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Union

from .characters import CharTriple, perm_module_triple, special_triple, zero_triple
from .partitions import Partition, as_partition


@dataclass(frozen=True)
class Specht:
    shape: Partition

    def __post_init__(self):
        object.__setattr__(self, "shape", as_partition(self.shape))

    @property
    def n(self) -> int:
        return self.shape.n


@dataclass(frozen=True)
class PermModule:
    shape: Partition

    def __post_init__(self):
        object.__setattr__(self, "shape", as_partition(self.shape))

    @property
    def n(self) -> int:
        return self.shape.n


@dataclass(frozen=True)
class ExplicitTriple:
    triple: CharTriple

    @property
    def n(self) -> int:
        return self.triple.n


@dataclass(frozen=True)
class Sum:
    """Direct sum; ``terms`` holds (descriptor, multiplicity) pairs."""

    terms: tuple = field(default_factory=tuple)

    def __post_init__(self):
        terms = tuple((rep, int(m)) for rep, m in self.terms)
        if not terms:
            raise ValueError("a direct sum needs at least one summand")
        for _, m in terms:
            if m < 1:
                raise ValueError("multiplicities must be positive; virtual representations are not classified")
        ns = {rep.n for rep, _ in terms}
        if len(ns) > 1:
            raise ValueError(f"summands live on different symmetric groups: {sorted(ns)}")
        object.__setattr__(self, "terms", terms)

    @property
    def n(self) -> int:
        return self.terms[0][0].n


RepDescriptor = Union[Specht, PermModule, ExplicitTriple, Sum]


def triple_of(rep: RepDescriptor) -> CharTriple:
    if isinstance(rep, Specht):
        return special_triple(rep.shape)
    if isinstance(rep, PermModule):
        return perm_module_triple(rep.shape)
    if isinstance(rep, ExplicitTriple):
        return rep.triple
    if isinstance(rep, Sum):
        total = zero_triple(rep.n)
        for sub, m in rep.terms:
            total = total + triple_of(sub).scaled(m)
        return total
    raise TypeError(f"not a representation descriptor: {rep!r}")


def trivial(n: int) -> Specht:
    return Specht(Partition((n,)))


def sign(n: int) -> Specht:
    return Specht(Partition((1,) * n))


def standard(n: int) -> PermModule:
    """The permutation representation of S_n on R^n."""
    return PermModule(Partition((n - 1, 1)) if n >= 2 else Partition((1,)))


def regular(n: int) -> PermModule:
    return PermModule(Partition((1,) * n))

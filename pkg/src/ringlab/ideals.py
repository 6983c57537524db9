"""Two-sided ideals and quotient rings."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import FiniteRing, RingError, StructuredRing, densify, require_valid
from .subsets import ElementSubset, additive_generators, subgroup_join


@dataclass(frozen=True, eq=False)
class Ideal:
    subset: ElementSubset
    generators: tuple[int, ...] = ()

    @property
    def ring(self) -> FiniteRing:
        return self.subset.ring

    @property
    def mask(self) -> np.ndarray:
        return self.subset.mask

    @property
    def members(self) -> tuple[int, ...]:
        return self.subset.members

    def __contains__(self, x) -> bool:
        return x in self.subset

    def __len__(self) -> int:
        return len(self.subset)

    def __eq__(self, other):
        if isinstance(other, Ideal):
            return self.subset == other.subset
        return NotImplemented

    def __hash__(self):
        return hash(self.subset)

    def is_proper(self) -> bool:
        return self.ring.one not in self


def ideal_closure(ring: FiniteRing, gens) -> Ideal:
    """Smallest two-sided ideal containing ``gens``.

    The result is kept as an additive subgroup; it is closed under
    multiplication once every subgroup generator times every additive
    generator of the ring (on both sides) lies inside it.
    """
    gens = [int(g) for g in gens]
    for g in gens:
        if not 0 <= g < ring.order:
            raise IndexError(f"element {g} out of range for {ring.name}")
    ring_gens = np.asarray(additive_generators(ring), dtype=np.int64)
    mask = np.zeros(ring.order, dtype=bool)
    mask[ring.zero] = True
    queue = list(gens)
    while queue:
        y = queue.pop()
        if mask[y]:
            continue
        mask = subgroup_join(ring, mask, y)
        queue.extend(int(v) for v in ring.mul(ring_gens, y))
        queue.extend(int(v) for v in ring.mul(y, ring_gens))
    return Ideal(ElementSubset(ring, mask), tuple(gens))


def is_ideal(ring: FiniteRing, mask: np.ndarray) -> bool:
    """Direct check of the ideal axioms on a mask (used as a sanity oracle)."""
    members = np.flatnonzero(mask)
    if not mask[ring.zero]:
        return False
    if not mask[ring.neg(members)].all():
        return False
    x = ring.elements
    for m in members:
        if not mask[ring.add(members, m)].all():
            return False
        if not (mask[ring.mul(x, m)].all() and mask[ring.mul(m, x)].all()):
            return False
    return True


@dataclass(frozen=True, eq=False)
class QuotientMap:
    source: FiniteRing
    target: FiniteRing
    projection: np.ndarray  # source element -> coset index
    section: np.ndarray  # coset index -> least element of the coset

    def __call__(self, x):
        return self.projection[x]


class QuotientRing(StructuredRing):
    """R/I with cosets numbered by increasing least representative."""

    def __init__(self, source: FiniteRing, projection, section, name):
        self.source = source
        self.projection = projection
        self.section = section
        super().__init__(len(section), int(projection[source.zero]), int(projection[source.one]), name)

    def add(self, a, b):
        s = self.section
        return self.projection[self.source.add(s[a], s[b])]

    def mul(self, a, b):
        s = self.section
        return self.projection[self.source.mul(s[a], s[b])]

    def neg(self, a):
        return self.projection[self.source.neg(self.section[a])]

    def _label(self, i):
        return f"[{self.source.label(self.section[i])}]"


def coset_representatives(ring: FiniteRing, ideal: Ideal) -> np.ndarray:
    """Least element of x + I for every x."""
    reps = ring.elements.copy()
    x = ring.elements
    for m in ideal.members:
        np.minimum(reps, ring.add(x, m), out=reps)
    return reps


def quotient_ring(ring: FiniteRing, ideal: Ideal, name: str | None = None):
    """Return ``(R/I, QuotientMap)``; rejects ideals containing one."""
    if not ideal.is_proper():
        raise RingError("ideal contains the identity; the quotient would have 1 = 0")
    reps = coset_representatives(ring, ideal)
    section = np.unique(reps)
    projection = np.searchsorted(section, reps).astype(np.int64)
    if name is None:
        name = f"{ring.name}/I"
    q = QuotientRing(ring, projection, section, name)
    target = require_valid(densify(q))
    return target, QuotientMap(ring, target, projection, section)

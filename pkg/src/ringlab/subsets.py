"""Canonical element subsets: units, idempotents, nilpotents, center."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import FiniteRing


@dataclass(frozen=True, eq=False)
class ElementSubset:
    """A subset of a ring's carrier stored as a boolean mask."""

    ring: FiniteRing
    mask: np.ndarray

    @classmethod
    def of(cls, ring: FiniteRing, members) -> "ElementSubset":
        mask = np.zeros(ring.order, dtype=bool)
        mask[np.asarray(list(members), dtype=np.int64)] = True
        return cls(ring, mask)

    @property
    def members(self) -> tuple[int, ...]:
        return tuple(int(i) for i in np.flatnonzero(self.mask))

    def __contains__(self, x) -> bool:
        return bool(self.mask[int(x)])

    def __len__(self) -> int:
        return int(self.mask.sum())

    def __iter__(self):
        return iter(self.members)

    def __eq__(self, other):
        if isinstance(other, ElementSubset):
            return self.ring is other.ring and bool(np.array_equal(self.mask, other.mask))
        return NotImplemented

    def __hash__(self):
        return hash((id(self.ring), self.members))

    def __repr__(self):
        shown = self.members
        body = ", ".join(map(str, shown[:12])) + (", ..." if len(shown) > 12 else "")
        return f"ElementSubset({self.ring.name}: {{{body}}})"


def power_search(ring: FiniteRing, xs, target: np.ndarray) -> np.ndarray:
    """Least k >= 1 with xs[i]**k in ``target``, or 0 when no power lands there.

    All sequences advance in lockstep.  A sequence stops when it hits the
    target or when Brent's cycle detection sees a repeated power; once a power
    repeats, every later power has already been tested.
    """
    xs = np.asarray(xs, dtype=np.int64).ravel()
    result = np.zeros(xs.size, dtype=np.int64)
    active = np.arange(xs.size)
    cur = xs.copy()
    checkpoint = None
    k, save_at = 1, 1
    bound = 3 * ring.order + 3
    while active.size:
        if k > bound:
            raise RuntimeError("power sequence did not cycle; ring operations are inconsistent")
        hit = target[cur]
        result[active[hit]] = k
        keep = ~hit
        if checkpoint is not None:
            keep &= cur != checkpoint
            checkpoint = checkpoint[keep]
        active, cur = active[keep], cur[keep]
        if k == save_at:
            checkpoint = cur.copy()
            save_at *= 2
        cur = np.asarray(ring.mul(cur, xs[active]), dtype=np.int64)
        k += 1
    return result


def power_vec(ring: FiniteRing, xs, ks) -> np.ndarray:
    """Elementwise xs**ks with x**0 = one."""
    xs = np.asarray(xs, dtype=np.int64)
    ks = np.asarray(ks, dtype=np.int64).copy()
    out = np.full(xs.shape, ring.one, dtype=np.int64)
    base = xs.copy()
    while (ks > 0).any():
        odd = (ks & 1).astype(bool)
        out = np.where(odd, ring.mul(out, base), out)
        base = ring.mul(base, base)
        ks >>= 1
    return out


def _unit_data(ring: FiniteRing):
    # u is a unit iff u**k == 1 for some k >= 1; then u**(k-1) is its inverse
    def compute():
        target = np.zeros(ring.order, dtype=bool)
        target[ring.one] = True
        orders = power_search(ring, ring.elements, target)
        mask = orders > 0
        inv = np.full(ring.order, -1, dtype=np.int64)
        us = np.flatnonzero(mask)
        inv[us] = power_vec(ring, us, orders[us] - 1)
        return mask, inv, orders

    return ring.cached("units", compute)


def units(ring: FiniteRing) -> ElementSubset:
    """U(R)."""
    return ElementSubset(ring, _unit_data(ring)[0])


def inverse(ring: FiniteRing, u: int) -> int:
    inv = _unit_data(ring)[1][int(u)]
    if inv < 0:
        raise ValueError(f"element {u} is not a unit")
    return int(inv)


def multiplicative_order(ring: FiniteRing, u: int) -> int:
    order = int(_unit_data(ring)[2][int(u)])
    if order == 0:
        raise ValueError(f"element {u} is not a unit")
    return order


def idempotents(ring: FiniteRing) -> ElementSubset:
    """Id(R)."""

    def compute():
        x = ring.elements
        return ring.mul(x, x) == x

    return ElementSubset(ring, ring.cached("idempotents", compute))


def nilpotents(ring: FiniteRing) -> ElementSubset:
    """N(R)."""

    def compute():
        target = np.zeros(ring.order, dtype=bool)
        target[ring.zero] = True
        return power_search(ring, ring.elements, target) > 0

    return ElementSubset(ring, ring.cached("nilpotents", compute))


def subgroup_join(ring: FiniteRing, mask: np.ndarray, y: int) -> np.ndarray:
    """Mask of the additive subgroup generated by ``mask`` (a subgroup) and y."""
    members = np.flatnonzero(mask)
    out = mask.copy()
    cur = int(y)
    while not mask[cur]:
        out[ring.add(members, cur)] = True
        cur = int(ring.add(cur, y))
    return out


def additive_generators(ring: FiniteRing) -> tuple[int, ...]:
    """A generating set of (R, +), chosen greedily in index order."""

    def compute():
        span = np.zeros(ring.order, dtype=bool)
        span[ring.zero] = True
        gens = []
        while not span.all():
            x = int(np.argmin(span))
            gens.append(x)
            span = subgroup_join(ring, span, x)
        return tuple(gens)

    return ring.cached("additive_generators", compute)


def center(ring: FiniteRing) -> ElementSubset:
    """C(R).

    Commuting with every element is the same as commuting with an additive
    generating set, because both sides of cx = xc are additive in x.
    """

    def compute():
        x = ring.elements
        mask = np.ones(ring.order, dtype=bool)
        for g in additive_generators(ring):
            mask &= ring.mul(x, g) == ring.mul(g, x)
        return mask

    return ElementSubset(ring, ring.cached("center", compute))

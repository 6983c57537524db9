"""Jacobson radical, its root set sqrt(J), and idempotent lifting."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import FiniteRing
from .ideals import Ideal, quotient_ring
from .subsets import ElementSubset, idempotents, power_search, subgroup_join, units


@dataclass(frozen=True, eq=False)
class JacobsonData:
    ring: FiniteRing
    jacobson: Ideal
    sqrt_jacobson: ElementSubset
    witness_powers: dict[int, int]


def jacobson_radical(ring: FiniteRing) -> Ideal:
    """J(R) = {x : 1 - r x is a unit for every r}.

    Elements are tested one at a time against all r.  Because J(R) is an
    additive subgroup, every confirmed member enlarges the known part of J by
    a whole subgroup join, and every rejected x rules out x + (known part).
    """

    def compute():
        U = units(ring).mask
        x = ring.elements
        one = ring.one
        known = np.zeros(ring.order, dtype=bool)
        known[ring.zero] = True
        rejected = np.zeros(ring.order, dtype=bool)
        gens = []
        # r = 1 already rules out anything with 1 - c a non-unit
        for c in np.flatnonzero(U[ring.sub(one, x)]):
            if known[c] or rejected[c]:
                continue
            if U[ring.sub(one, ring.mul(x, c))].all():
                known = subgroup_join(ring, known, int(c))
                gens.append(int(c))
            else:
                rejected[ring.add(np.flatnonzero(known), c)] = True
        return Ideal(ElementSubset(ring, known), tuple(gens))

    return ring.cached("jacobson", compute)


def sqrt_jacobson(ring: FiniteRing) -> ElementSubset:
    return jacobson_data(ring).sqrt_jacobson


def jacobson_data(ring: FiniteRing) -> JacobsonData:
    def compute():
        J = jacobson_radical(ring)
        powers = power_search(ring, ring.elements, J.mask)
        mask = powers > 0
        witness = {int(i): int(powers[i]) for i in np.flatnonzero(mask)}
        return JacobsonData(ring, J, ElementSubset(ring, mask), witness)

    return ring.cached("jacobson_data", compute)


def jacobson_quotient(ring: FiniteRing, name: str | None = None):
    """``(R/J(R), QuotientMap)``."""
    if name is None:
        name = f"JQuot({ring.name})"
    return quotient_ring(ring, jacobson_radical(ring), name=name)


@dataclass(frozen=True)
class LiftingReport:
    lifts: bool
    idempotent_cosets: tuple[int, ...]
    lifted_by: dict  # coset -> least idempotent of R projecting onto it
    missing: tuple[int, ...]


def idempotents_lift_mod(ring: FiniteRing, ideal: Ideal) -> LiftingReport:
    """Does every idempotent of R/I come from an idempotent of R?"""
    target, qmap = quotient_ring(ring, ideal)
    wanted = idempotents(target).members
    lifted: dict[int, int] = {}
    for e in idempotents(ring).members:
        c = int(qmap.projection[e])
        lifted.setdefault(c, e)
    missing = tuple(c for c in wanted if c not in lifted)
    lifted_by = {c: lifted[c] for c in wanted if c in lifted}
    return LiftingReport(not missing, tuple(wanted), lifted_by, missing)

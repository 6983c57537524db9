"""Clean-type decompositions a = e + z and ring classification."""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field

import numpy as np

from .core import BLOCK, FiniteRing
from .radicals import jacobson_data
from .subsets import additive_generators, center, idempotents, nilpotents, units


class DecompKind(enum.Enum):
    UNIT = "unit"  # clean
    NIL = "nil"  # nil-clean
    J = "j"  # semiboolean / J-clean
    SQRTJ = "sqrtj"  # sqrt(J)-clean


class DecompMode(enum.Enum):
    ANY = "any"
    STRONG = "strong"  # e z == z e
    UNIQUE = "unique"  # exactly one pair (e, z)


def witness_set(ring: FiniteRing, kind: DecompKind) -> np.ndarray:
    """Mask of the companion set: U(R), N(R), J(R) or sqrt(J(R))."""
    if kind is DecompKind.UNIT:
        return units(ring).mask
    if kind is DecompKind.NIL:
        return nilpotents(ring).mask
    data = jacobson_data(ring)
    if kind is DecompKind.J:
        return data.jacobson.mask
    return data.sqrt_jacobson.mask


@dataclass(frozen=True)
class Decomposition:
    a: int
    e: int
    z: int
    kind: DecompKind
    commutes: bool


def decompositions(ring: FiniteRing, a: int, kind: DecompKind) -> list[Decomposition]:
    """All (e, z) with e idempotent, z in the kind's set and a = e + z, by e."""
    a = int(a)
    if not 0 <= a < ring.order:
        raise IndexError(f"element {a} out of range for {ring.name} (order {ring.order})")
    W = witness_set(ring, kind)
    out = []
    for e in idempotents(ring).members:
        z = int(ring.sub(a, e))
        if W[z]:
            commutes = int(ring.mul(e, z)) == int(ring.mul(z, e))
            out.append(Decomposition(a, e, z, kind, commutes))
    return out


@dataclass(frozen=True)
class Verdict:
    holds: bool
    witness: dict | None = None

    def __bool__(self):
        return self.holds


def decomposition_counts(ring: FiniteRing, kind: DecompKind):
    """Per element: number of decompositions, and whether a commuting one exists."""

    def compute():
        W = witness_set(ring, kind)
        x = ring.elements
        count = np.zeros(ring.order, dtype=np.int64)
        strong = np.zeros(ring.order, dtype=bool)
        for e in idempotents(ring).members:
            z = ring.sub(x, e)
            ok = W[z]
            count += ok
            zs = z[ok]
            strong[ok] |= ring.mul(e, zs) == ring.mul(zs, e)
        return count, strong

    return ring.cached(("decomp_counts", kind), compute)


def has_clean_property(ring: FiniteRing, kind: DecompKind, mode: DecompMode = DecompMode.ANY) -> Verdict:
    """Does every element admit a decomposition of this kind and mode?

    On failure the witness names the least failing element; for UNIQUE with
    several decompositions it also lists the first two.
    """
    count, strong = decomposition_counts(ring, kind)
    if mode is DecompMode.ANY:
        bad = count == 0
    elif mode is DecompMode.STRONG:
        bad = ~strong
    else:
        bad = count != 1
    if not bad.any():
        return Verdict(True)
    a = int(np.argmax(bad))
    witness: dict = {"element": a}
    if mode is DecompMode.UNIQUE and count[a] > 1:
        ds = decompositions(ring, a, kind)[:2]
        witness["decompositions"] = [[d.e, d.z] for d in ds]
    return Verdict(False, witness)


# --------------------------------------------------------------------------
# structural predicates


def _all_or_witness(mask: np.ndarray, key: str = "element") -> Verdict:
    # mask marks the elements that satisfy the condition
    if mask.all():
        return Verdict(True)
    return Verdict(False, {key: int(np.argmin(mask))})


def is_boolean(ring: FiniteRing) -> Verdict:
    x = ring.elements
    return _all_or_witness(ring.mul(x, x) == x)


def _units_in_one_plus(ring: FiniteRing, mask: np.ndarray) -> Verdict:
    us = np.flatnonzero(units(ring).mask)
    ok = mask[ring.sub(us, ring.one)]
    if ok.all():
        return Verdict(True)
    return Verdict(False, {"unit": int(us[np.argmin(ok)])})


def is_sqrt_ju(ring: FiniteRing) -> Verdict:
    """U(R) is contained in 1 + sqrt(J(R))."""
    return _units_in_one_plus(ring, jacobson_data(ring).sqrt_jacobson.mask)


def is_ju(ring: FiniteRing) -> Verdict:
    return _units_in_one_plus(ring, jacobson_data(ring).jacobson.mask)


def is_uu(ring: FiniteRing) -> Verdict:
    return _units_in_one_plus(ring, nilpotents(ring).mask)


def is_local(ring: FiniteRing) -> Verdict:
    """Non-units closed under addition."""
    U = units(ring).mask
    nonunits = np.flatnonzero(~U)
    step = max(1, BLOCK // max(len(nonunits), 1))
    for start in range(0, len(nonunits), step):
        blk = nonunits[start : start + step]
        s = ring.add(blk[:, None], nonunits[None, :])
        hit = U[s]
        if hit.any():
            i, j = np.argwhere(hit)[0]
            return Verdict(False, {"pair": [int(blk[i]), int(nonunits[j])]})
    return Verdict(True)


def is_abelian(ring: FiniteRing) -> Verdict:
    """Every idempotent is central."""
    C = center(ring).mask
    for e in idempotents(ring).members:
        if not C[e]:
            for g in additive_generators(ring):
                if int(ring.mul(e, g)) != int(ring.mul(g, e)):
                    return Verdict(False, {"idempotent": e, "element": g})
    return Verdict(True)


def is_dedekind_finite(ring: FiniteRing) -> Verdict:
    """ab = 1 implies ba = 1 (always true for finite rings; kept as a sanity check)."""
    x = ring.elements
    one = ring.one
    step = max(1, BLOCK // ring.order)
    for start in range(0, ring.order, step):
        a = x[start : start + step]
        prod = ring.mul(a[:, None], x[None, :])
        ia, ib = np.nonzero(prod == one)
        if ia.size:
            back = ring.mul(x[ib], a[ia])
            bad = back != one
            if bad.any():
                k = int(np.argmax(bad))
                return Verdict(False, {"pair": [int(a[ia[k]]), int(ib[k])]})
    return Verdict(True)


def is_reduced(ring: FiniteRing) -> Verdict:
    N = nilpotents(ring).mask.copy()
    N[ring.zero] = False
    return _all_or_witness(~N)


def is_semisimple(ring: FiniteRing) -> Verdict:
    """J(R) = 0."""
    J = jacobson_data(ring).jacobson.mask.copy()
    J[ring.zero] = False
    return _all_or_witness(~J)


def two_in_jacobson(ring: FiniteRing) -> Verdict:
    two = int(ring.add(ring.one, ring.one))
    if jacobson_data(ring).jacobson.mask[two]:
        return Verdict(True)
    return Verdict(False, {"element": two})


STRUCTURAL = {
    "boolean": is_boolean,
    "sqrtJU": is_sqrt_ju,
    "JU": is_ju,
    "UU": is_uu,
    "local": is_local,
    "abelian": is_abelian,
    "dedekind_finite": is_dedekind_finite,
    "reduced": is_reduced,
    "semisimple_J0": is_semisimple,
    "two_in_J": two_in_jacobson,
}


def structural_predicates(ring: FiniteRing) -> dict[str, Verdict]:
    return {name: fn(ring) for name, fn in STRUCTURAL.items()}


# --------------------------------------------------------------------------
# reports

_KIND_NAMES = {
    DecompKind.UNIT: "clean",
    DecompKind.NIL: "nil_clean",
    DecompKind.J: "j_clean",
    DecompKind.SQRTJ: "sqrtj_clean",
}
_MODE_PREFIX = {DecompMode.ANY: "", DecompMode.STRONG: "strongly_", DecompMode.UNIQUE: "uniquely_"}


def property_name(kind: DecompKind, mode: DecompMode) -> str:
    return _MODE_PREFIX[mode] + _KIND_NAMES[kind]


CLEAN_PROPERTIES = {
    property_name(kind, mode): (kind, mode) for kind in DecompKind for mode in DecompMode
}


@dataclass
class ClassificationReport:
    ring: str
    order: int
    properties: dict[str, bool] = field(default_factory=dict)
    witnesses: dict[str, dict] = field(default_factory=dict)

    def __getitem__(self, name: str) -> bool:
        return self.properties[name]

    def to_dict(self) -> dict:
        return {
            "ring": self.ring,
            "order": self.order,
            "properties": dict(sorted(self.properties.items())),
            "witnesses": dict(sorted(self.witnesses.items())),
        }

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent, sort_keys=True)

    def to_text(self) -> str:
        lines = [f"ring {self.ring} (order {self.order})"]
        for name, value in sorted(self.properties.items()):
            extra = ""
            if name in self.witnesses:
                extra = "  witness " + json.dumps(self.witnesses[name], separators=(",", ":"))
            lines.append(f"  {name:<24} {str(value).lower()}{extra}")
        return "\n".join(lines)


def classify_all(ring: FiniteRing) -> ClassificationReport:
    verdicts = {name: has_clean_property(ring, k, m) for name, (k, m) in CLEAN_PROPERTIES.items()}
    verdicts.update(structural_predicates(ring))
    report = ClassificationReport(ring.name, ring.order)
    for name in sorted(verdicts):
        v = verdicts[name]
        report.properties[name] = v.holds
        if not v.holds and v.witness is not None:
            report.witnesses[name] = v.witness
    return report

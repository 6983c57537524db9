"""Finite unital rings on the carrier {0, ..., n-1}.

Every ring answers ``add``, ``mul`` and ``neg`` on element indices.  The
operations broadcast over numpy index arrays, so algorithms are written once
and run unchanged on dense tables and on structured rings whose operations are
computed from component rings.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field

import numpy as np

DENSE_LIMIT = 1024
FULL_VALIDATION_LIMIT = 1024
EXPORT_LIMIT = 4096
HARD_MAX_ORDER = 2**20
DEFAULT_MAX_ORDER = 4096
SAMPLED_TRIPLES = 10**6

# elements per numpy block in the O(n^2) and O(n^3) loops
BLOCK = 1 << 21


class RingError(ValueError):
    """Raised when a ring cannot be constructed or fails validation."""


class SizeError(RingError):
    pass


class AxiomError(RingError):
    def __init__(self, report: "ValidationReport"):
        super().__init__(report.message)
        self.report = report


def max_order() -> int:
    """Construction size cap, from ``RINGLAB_MAX_ORDER`` (default 4096)."""
    raw = os.environ.get("RINGLAB_MAX_ORDER")
    if not raw:
        return DEFAULT_MAX_ORDER
    try:
        value = int(raw)
    except ValueError:
        raise SizeError(f"RINGLAB_MAX_ORDER is not an integer: {raw!r}") from None
    return min(value, HARD_MAX_ORDER)


def check_order(order: int, limit: int | None = None) -> None:
    cap = max_order() if limit is None else min(limit, HARD_MAX_ORDER)
    if order > cap:
        raise SizeError(f"ring order {order} exceeds the size limit {cap}")


class FiniteRing:
    """A finite associative ring with identity on indices ``0..order-1``."""

    dense = False

    def __init__(self, order: int, zero: int, one: int, name: str = "R"):
        order = int(order)
        if order < 2:
            raise RingError("order < 2")
        self.order = order
        self.zero = int(zero)
        self.one = int(one)
        self.name = name
        self._labels: list[str] | None = None
        self._cache: dict = {}

    # operations, overridden by subclasses
    def add(self, a, b):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    @property
    def elements(self) -> np.ndarray:
        return np.arange(self.order, dtype=np.int64)

    def power(self, x: int, k: int) -> int:
        if k < 1:
            raise ValueError("power exponent must be >= 1")
        result, base = None, int(x)
        while k:
            if k & 1:
                result = base if result is None else int(self.mul(result, base))
            base = int(self.mul(base, base))
            k >>= 1
        return result

    def multiple(self, k: int) -> int:
        """The element k*1 (sum of k copies of one)."""
        acc = self.zero
        for _ in range(k % self.additive_exponent()):
            acc = int(self.add(acc, self.one))
        return acc

    def additive_exponent(self) -> int:
        def compute():
            k, acc = 1, self.one
            while acc != self.zero:
                acc = int(self.add(acc, self.one))
                k += 1
            return k

        return self.cached("char", compute)

    def _label(self, i: int) -> str:
        return str(i)

    def label(self, i: int) -> str:
        return self.labels[int(i)]

    @property
    def labels(self) -> list[str]:
        if self._labels is None:
            self._labels = [self._label(i) for i in range(self.order)]
        return self._labels

    def cached(self, key, compute):
        try:
            return self._cache[key]
        except KeyError:
            value = self._cache[key] = compute()
            return value

    def add_table(self) -> np.ndarray:
        return materialize(self).add_tab

    def mul_table(self) -> np.ndarray:
        return materialize(self).mul_tab

    def __repr__(self):
        return f"<{type(self).__name__} {self.name} order={self.order}>"


class StructuredRing(FiniteRing):
    """Ring whose operations are computed on demand from component rings."""


class TableRing(FiniteRing):
    """Ring given by fully materialized addition and multiplication tables."""

    dense = True

    def __init__(self, add, mul, zero, one, name="R", labels=None):
        add = np.asarray(add, dtype=np.int64)
        mul = np.asarray(mul, dtype=np.int64)
        n = add.shape[0]
        if add.shape != (n, n) or mul.shape != (n, n):
            raise RingError("tables must be square and of equal size")
        super().__init__(n, zero, one, name)
        if not (0 <= self.zero < n and 0 <= self.one < n):
            raise RingError("zero/one index out of range")
        self.add_tab = add
        self.mul_tab = mul
        # neg is only meaningful after validation confirms inverses exist
        self.neg_tab = np.argmax(add == self.zero, axis=1).astype(np.int64)
        if labels is not None:
            self._labels = list(labels)

    def add(self, a, b):
        return self.add_tab[a, b]

    def mul(self, a, b):
        return self.mul_tab[a, b]

    def neg(self, a):
        return self.neg_tab[a]

    def add_table(self):
        return self.add_tab

    def mul_table(self):
        return self.mul_tab


def _row_blocks(n: int, width: int):
    step = max(1, BLOCK // max(width, 1))
    for start in range(0, n, step):
        yield np.arange(start, min(n, start + step), dtype=np.int64)


def materialize(ring: FiniteRing, limit: int = EXPORT_LIMIT) -> TableRing:
    """Dense copy of ``ring`` (the ring itself if already dense)."""
    if isinstance(ring, TableRing):
        return ring
    n = ring.order
    if n > limit:
        raise SizeError(f"refusing to materialize tables of order {n} > {limit}")

    def build():
        add = np.empty((n, n), dtype=np.int64)
        mul = np.empty((n, n), dtype=np.int64)
        cols = ring.elements[None, :]
        for rows in _row_blocks(n, n):
            add[rows] = ring.add(rows[:, None], cols)
            mul[rows] = ring.mul(rows[:, None], cols)
        dense = TableRing(add, mul, ring.zero, ring.one, ring.name)
        dense._labels = ring.labels
        return dense

    return ring.cached("dense", build)


def densify(ring: FiniteRing) -> FiniteRing:
    """Dense tables for rings up to ``DENSE_LIMIT``, the ring itself above."""
    if ring.dense or ring.order > DENSE_LIMIT:
        return ring
    return materialize(ring)


# --------------------------------------------------------------------------
# axiom validation


@dataclass
class ValidationReport:
    ok: bool
    mode: str = "full"  # "full" or "sampled"
    axiom: str | None = None
    witness: tuple = ()
    checked: list[str] = field(default_factory=list)

    @property
    def message(self) -> str:
        if self.ok:
            return f"ring axioms hold ({self.mode})"
        return f"axiom violated: {self.axiom} at {self.witness}"


_AXIOMS = (
    "identity differs from zero",
    "tables in range",
    "zero is additive identity",
    "additive inverses",
    "addition commutative",
    "addition associative",
    "one is multiplicative identity",
    "multiplication associative",
    "left distributivity",
    "right distributivity",
)


def _first(mask: np.ndarray, offset=()):
    idx = np.argwhere(mask)[0]
    return tuple(int(v) for v in offset) + tuple(int(v) for v in idx)


def validate_axioms(
    ring: FiniteRing, *, samples: int = SAMPLED_TRIPLES, seed: int = 0, exhaustive: bool = False
) -> ValidationReport:
    """Check the unital ring axioms.

    Rings up to ``FULL_VALIDATION_LIMIT`` are checked on every triple.  Larger
    rings get exhaustive identity/inverse checks plus ``samples`` random
    triples for the commutativity, associativity and distributive laws.  With
    ``exhaustive=True`` larger rings (up to ``EXPORT_LIMIT``) are instead
    decided completely by the generator reduction in ``_validate_generated``.
    """
    if ring.order <= FULL_VALIDATION_LIMIT:
        return _validate_full(materialize(ring))
    if exhaustive:
        had_dense = "dense" in ring._cache
        try:
            return _validate_generated(materialize(ring))
        finally:
            if not had_dense:
                ring._cache.pop("dense", None)
    return _validate_sampled(ring, samples, seed)


def _validate_full(ring: TableRing) -> ValidationReport:
    n = ring.order
    A, M = ring.add_tab, ring.mul_tab
    z, o = ring.zero, ring.one
    rng = np.arange(n)
    report = ValidationReport(ok=True, mode="full")

    def fail(axiom, witness):
        report.ok, report.axiom, report.witness = False, axiom, tuple(witness)
        return report

    report.checked.append(_AXIOMS[0])
    if z == o:
        return fail("identity equals zero", (z, o))
    report.checked.append(_AXIOMS[1])
    for tab in (A, M):
        bad = (tab < 0) | (tab >= n)
        if bad.any():
            return fail("tables in range", _first(bad))
    report.checked.append(_AXIOMS[2])
    bad = (A[z] != rng) | (A[:, z] != rng)
    if bad.any():
        return fail("zero is additive identity", _first(bad))
    report.checked.append(_AXIOMS[3])
    bad = ~(A == z).any(axis=1)
    if bad.any():
        return fail("additive inverses", _first(bad))
    report.checked.append(_AXIOMS[4])
    bad = A != A.T
    if bad.any():
        return fail("addition commutative", _first(bad))
    report.checked.append(_AXIOMS[6])
    bad = (M[o] != rng) | (M[:, o] != rng)
    if bad.any():
        return fail("one is multiplicative identity", _first(bad))

    MT = M.T
    laws = (
        ("addition associative", lambda blk: (A[A[blk]], np.take(A[blk], A, axis=1))),
        ("multiplication associative", lambda blk: (M[M[blk]], np.take(M[blk], M, axis=1))),
        (
            "left distributivity",
            lambda blk: (np.take(M[blk], A, axis=1), A[M[blk][:, :, None], M[blk][:, None, :]]),
        ),
        (
            "right distributivity",
            # rows indexed by the right factor a: (b + c) a == b a + c a
            lambda blk: (np.take(MT[blk], A, axis=1), A[MT[blk][:, :, None], MT[blk][:, None, :]]),
        ),
    )
    for name, law in laws:
        report.checked.append(name)
        for blk in _row_blocks(n, n * n):
            lhs, rhs = law(blk)
            bad = lhs != rhs
            if bad.any():
                i, b, c = _first(bad)
                if name == "right distributivity":
                    return fail(name, (b, c, int(blk[i])))
                return fail(name, (int(blk[i]), b, c))
    return report


def _sum_closure_generators(A: np.ndarray, zero: int) -> list[int]:
    """Greedy generators of the carrier under + alone (no inverses assumed)."""
    n = A.shape[0]
    span = np.zeros(n, dtype=bool)
    gens: list[int] = []
    while not span.all():
        g = int(np.argmin(span))
        gens.append(g)
        span[g] = True
        while True:
            idx = np.flatnonzero(span)
            grown = span.copy()
            for rows in _row_blocks(len(idx), len(idx)):
                grown[A[idx[rows][:, None], idx[None, :]]] = True
            if (grown == span).all():
                break
            span = grown
    return gens


def _validate_generated(ring: TableRing) -> ValidationReport:
    """Exhaustive-equivalent check in O(n^2 k) for k additive generators.

    The laws are only tested with one argument drawn from a set S that
    generates (R, +) under addition, which decides them for all triples:
      - associativity of +: the elements a with (x+a)+y = x+(a+y) for all
        x, y are closed under + (Light's test), so S suffices;
      - distributivity: once (R, +) is an abelian group, the c with
        a(b+c) = ab+ac for all a, b are closed under +, and likewise on the
        right;
      - associativity of *: with both distributive laws, (ab)c and a(bc)
        are additive in each argument, so triples from S suffice.
    """
    n = ring.order
    A, M = ring.add_tab, ring.mul_tab
    z, o = ring.zero, ring.one
    rng = np.arange(n)
    report = ValidationReport(ok=True, mode="full")

    def fail(axiom, witness):
        report.ok, report.axiom, report.witness = False, axiom, tuple(int(v) for v in witness)
        return report

    report.checked.append(_AXIOMS[0])
    if z == o:
        return fail("identity equals zero", (z, o))
    report.checked.append(_AXIOMS[1])
    for tab in (A, M):
        bad = (tab < 0) | (tab >= n)
        if bad.any():
            return fail("tables in range", _first(bad))
    report.checked.append(_AXIOMS[2])
    bad = (A[z] != rng) | (A[:, z] != rng)
    if bad.any():
        return fail("zero is additive identity", _first(bad))
    report.checked.append(_AXIOMS[3])
    bad = ~(A == z).any(axis=1)
    if bad.any():
        return fail("additive inverses", _first(bad))
    report.checked.append(_AXIOMS[4])
    bad = A != A.T
    if bad.any():
        return fail("addition commutative", _first(bad))
    report.checked.append(_AXIOMS[6])
    bad = (M[o] != rng) | (M[:, o] != rng)
    if bad.any():
        return fail("one is multiplicative identity", _first(bad))

    gens = _sum_closure_generators(A, z)
    report.checked.append("addition associative")
    for g in gens:
        bad = A[A[:, g]] != A[:, A[g]]  # (x+g)+y vs x+(g+y)
        if bad.any():
            x, y = _first(bad)
            return fail("addition associative", (x, g, y))
    report.checked.append("left distributivity")
    for c in gens:
        bad = M[:, A[:, c]] != A[M, M[:, c][:, None]]  # a(b+c) vs ab+ac
        if bad.any():
            a, b = _first(bad)
            return fail("left distributivity", (a, b, c))
    report.checked.append("right distributivity")
    for c in gens:
        bad = M[A[:, c]] != A[M, M[c][None, :]]  # (b+c)a vs ba+ca
        if bad.any():
            b, a = _first(bad)
            return fail("right distributivity", (b, c, a))
    report.checked.append("multiplication associative")
    S = np.array(gens, dtype=np.int64)
    bad = M[M[S[:, None], S[None, :]][:, :, None], S[None, None, :]] != M[S[:, None, None], M[S[:, None], S[None, :]][None, :, :]]
    if bad.any():
        i, j, k = _first(bad)
        return fail("multiplication associative", (S[i], S[j], S[k]))
    return report


def _validate_sampled(ring: FiniteRing, samples: int, seed: int) -> ValidationReport:
    n = ring.order
    z, o = ring.zero, ring.one
    report = ValidationReport(ok=True, mode="sampled")

    def fail(axiom, witness):
        report.ok, report.axiom, report.witness = False, axiom, tuple(int(v) for v in witness)
        return report

    report.checked.append(_AXIOMS[0])
    if z == o:
        return fail("identity equals zero", (z, o))
    x = ring.elements
    report.checked.append(_AXIOMS[2])
    bad = (ring.add(z, x) != x) | (ring.add(x, z) != x)
    if bad.any():
        return fail("zero is additive identity", (int(np.argmax(bad)),))
    report.checked.append(_AXIOMS[3])
    bad = ring.add(x, ring.neg(x)) != z
    if bad.any():
        return fail("additive inverses", (int(np.argmax(bad)),))
    report.checked.append(_AXIOMS[6])
    bad = (ring.mul(o, x) != x) | (ring.mul(x, o) != x)
    if bad.any():
        return fail("one is multiplicative identity", (int(np.argmax(bad)),))

    gen = np.random.default_rng(seed)
    chunk = 1 << 17
    done = 0
    add, mul = ring.add, ring.mul
    laws = (
        ("addition commutative", lambda a, b, c: (add(a, b), add(b, a))),
        ("addition associative", lambda a, b, c: (add(add(a, b), c), add(a, add(b, c)))),
        ("multiplication associative", lambda a, b, c: (mul(mul(a, b), c), mul(a, mul(b, c)))),
        ("left distributivity", lambda a, b, c: (mul(a, add(b, c)), add(mul(a, b), mul(a, c)))),
        ("right distributivity", lambda a, b, c: (mul(add(a, b), c), add(mul(a, c), mul(b, c)))),
    )
    report.checked.extend(name for name, _ in laws)
    while done < samples:
        m = min(chunk, samples - done)
        a, b, c = (gen.integers(0, n, size=m) for _ in range(3))
        for name, law in laws:
            lhs, rhs = law(a, b, c)
            bad = lhs != rhs
            if bad.any():
                i = int(np.argmax(bad))
                return fail(name, (a[i], b[i], c[i]))
        done += m
    return report


def require_valid(ring: FiniteRing, **kwargs) -> FiniteRing:
    """Validate ``ring`` and return it, raising ``AxiomError`` on failure."""
    report = validate_axioms(ring, **kwargs)
    if not report.ok:
        raise AxiomError(report)
    ring._cache["validation"] = report
    return ring

"""Ring families with fixed element encodings.

Encodings (index <-> components) are part of the public contract so that
exported tables are reproducible:

* ``Z(n)``: the residue is the index.
* products: mixed radix, leftmost factor most significant.
* matrix-like rings: base-ring digits in row-major order, entry (1,1) most
  significant.  Triangular rings store only the upper triangle, row by row;
  constant-diagonal rings store the diagonal value first, then the strictly
  upper entries row by row.
* trivial extension: pair (r, m) with r most significant.
* polynomial quotients: coefficient vector, constant term least significant.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .core import (
    HARD_MAX_ORDER,
    FiniteRing,
    RingError,
    SizeError,
    StructuredRing,
    check_order,
    densify,
    materialize,
    require_valid,
)
from .subsets import center

# fixed moduli for the built-in non-prime fields
GF_MODULI = {4: (1, 1, 1), 8: (1, 1, 0, 1), 9: (1, 0, 1)}


def _finish(ring: FiniteRing) -> FiniteRing:
    return densify(require_valid(ring))


def _guard(order: int, max_order: int | None) -> None:
    if order > HARD_MAX_ORDER:
        raise SizeError(f"ring order {order} exceeds the hard limit {HARD_MAX_ORDER}")
    check_order(order, max_order)


def _wrap(label: str) -> str:
    return label if label.replace("-", "").isalnum() else f"({label})"


class ZmodRing(StructuredRing):
    def __init__(self, n: int, name: str):
        super().__init__(n, 0, 1, name)
        self.n = n

    def add(self, a, b):
        return (np.asarray(a) + b) % self.n

    def mul(self, a, b):
        return (np.asarray(a) * b) % self.n

    def neg(self, a):
        return (-np.asarray(a)) % self.n


class ProductRing(StructuredRing):
    """R1 x R2 on pairs (a, b), a most significant."""

    def __init__(self, left: FiniteRing, right: FiniteRing, name: str, matrix_labels=False):
        self.left, self.right = left, right
        self.m = right.order
        zero = left.zero * self.m + right.zero
        one = left.one * self.m + right.one
        super().__init__(left.order * right.order, zero, one, name)
        self.matrix_labels = matrix_labels

    def split(self, x):
        x = np.asarray(x)
        return x // self.m, x % self.m

    def _op(self, lop, rop, a, b):
        a1, a2 = self.split(a)
        b1, b2 = self.split(b)
        return np.asarray(lop(a1, b1)) * self.m + rop(a2, b2)

    def add(self, a, b):
        return self._op(self.left.add, self.right.add, a, b)

    def mul(self, a, b):
        return self._op(self.left.mul, self.right.mul, a, b)

    def neg(self, a):
        a1, a2 = self.split(a)
        return np.asarray(self.left.neg(a1)) * self.m + self.right.neg(a2)

    def _label(self, i):
        a, b = divmod(i, self.m)
        la, lb = self.left.label(a), self.right.label(b)
        if self.matrix_labels:
            return f"[[{la},0],[0,{lb}]]"
        return f"({la},{lb})"


class DigitRing(StructuredRing):
    """Elements are k-digit vectors over a base ring with a bilinear product.

    ``terms[o]`` lists ``(i, j, c)`` meaning digit o of a*b receives
    ``a[i] * b[j] * c`` (``c`` None stands for the identity).
    """

    def __init__(self, base: FiniteRing, k: int, terms, one_digits, name: str, label_fn):
        self.base, self.k, self.terms = base, k, terms
        m = base.order
        self.weights = np.array([m ** (k - 1 - t) for t in range(k)], dtype=np.int64)
        self.label_fn = label_fn
        zero = int(base.zero * self.weights.sum())
        one = int(np.dot(np.asarray(one_digits, dtype=np.int64), self.weights))
        super().__init__(m**k, zero, one, name)

    def decode(self, x):
        x = np.asarray(x, dtype=np.int64)
        return (x[..., None] // self.weights) % self.base.order

    def encode(self, digits):
        out = 0
        for d, w in zip(digits, self.weights):
            out = out + np.asarray(d, dtype=np.int64) * w
        return out

    def add(self, a, b):
        da, db = self.decode(a), self.decode(b)
        return self.encode([self.base.add(da[..., t], db[..., t]) for t in range(self.k)])

    def neg(self, a):
        da = self.decode(a)
        return self.encode([self.base.neg(da[..., t]) for t in range(self.k)])

    def mul(self, a, b):
        B = self.base
        da, db = self.decode(a), self.decode(b)
        shape = np.broadcast_shapes(da.shape[:-1], db.shape[:-1])
        digits = []
        for terms in self.terms:
            acc = None
            for i, j, c in terms:
                p = B.mul(da[..., i], db[..., j])
                if c is not None:
                    p = B.mul(p, c)
                acc = p if acc is None else B.add(acc, p)
            digits.append(np.full(shape, B.zero, dtype=np.int64) if acc is None else acc)
        return self.encode(digits)

    def _label(self, i):
        digits = self.decode(i)
        return self.label_fn([self.base.label(d) for d in digits])


def _matrix_label(n, cell):
    # cell(i, j) -> label string
    return "[" + ",".join("[" + ",".join(cell(i, j) for j in range(n)) + "]" for i in range(n)) + "]"


# --------------------------------------------------------------------------
# builders


def zmod(n: int, *, name: str | None = None, max_order: int | None = None) -> FiniteRing:
    if n < 2:
        raise RingError("order < 2")
    _guard(n, max_order)
    return _finish(ZmodRing(n, name or f"Z({n})"))


def _prime_power(q: int):
    for p in range(2, q + 1):
        if q % p == 0:
            k, r = 0, q
            while r % p == 0:
                r //= p
                k += 1
            return (p, k) if r == 1 else None
    return None


def _reducible(p: int, coeffs) -> bool:
    """Whether the monic ``coeffs`` (ascending) over Z(p) has a monic factor of lower degree."""
    d = len(coeffs) - 1
    for deg in range(1, d // 2 + 1):
        for tail in itertools.product(range(p), repeat=deg):
            divisor = list(tail) + [1]
            rem = list(coeffs)
            for top in range(d, deg - 1, -1):
                c = rem[top] % p
                if c:
                    for t in range(deg + 1):
                        rem[top - deg + t] = (rem[top - deg + t] - c * divisor[t]) % p
            if not any(v % p for v in rem[:deg]):
                return True
    return False


def irreducible_modulus(p: int, k: int) -> tuple[int, ...]:
    """Smallest monic irreducible of degree k over Z(p), ascending coefficients.

    Candidates are ordered by their coefficient vector read from x^(k-1) down to
    the constant term; this reproduces x^2+x+1, x^3+x+1 and x^2+1 for GF(4),
    GF(8) and GF(9).
    """
    for rest in itertools.product(range(p), repeat=k):
        coeffs = tuple(reversed(rest)) + (1,)
        if coeffs[0] and not _reducible(p, coeffs):
            return coeffs
    raise RingError(f"no irreducible polynomial of degree {k} over Z({p})")


def galois_field(q: int, *, name: str | None = None, max_order: int | None = None) -> FiniteRing:
    pk = _prime_power(q) if q >= 2 else None
    if pk is None:
        raise RingError(f"GF({q}): order must be a prime power")
    p, k = pk
    name = name or f"GF({q})"
    if k == 1:
        return zmod(p, name=name, max_order=max_order)
    modulus = GF_MODULI.get(q) or irreducible_modulus(p, k)
    return poly_quotient(zmod(p), modulus, name=name, max_order=max_order)


def product(left: FiniteRing, right: FiniteRing, *, name: str | None = None, max_order=None) -> FiniteRing:
    _guard(left.order * right.order, max_order)
    return _finish(ProductRing(left, right, name or f"{left.name}x{right.name}"))


def formal_triangular(r1: FiniteRing, r2: FiniteRing, *, name: str | None = None, max_order=None) -> FiniteRing:
    """[[R1, M], [0, R2]] with M = 0; encoded as the pair (a, b)."""
    _guard(r1.order * r2.order, max_order)
    return _finish(ProductRing(r1, r2, name or f"FT({r1.name},{r2.name})", matrix_labels=True))


def _require_central(ring: FiniteRing, s: int, what: str) -> int:
    s = int(s)
    if not 0 <= s < ring.order:
        raise RingError(f"{what} {s} is not an element of {ring.name}")
    if s not in center(ring):
        raise RingError(f"{what} {s} is not central in {ring.name}")
    return s


_DROP = object()


def _coeff(ring, c):
    # None stands for the identity; _DROP marks a zero coefficient
    if c == ring.zero:
        return _DROP
    return None if c == ring.one else c


def matrix_ring(n: int, base: FiniteRing, *, name=None, max_order=None) -> FiniteRing:
    return _square(n, base, None, name or f"M({n},{base.name})", max_order)


def formal_matrix_ring(n: int, base: FiniteRing, s: int, *, name=None, max_order=None) -> FiniteRing:
    """M_n(R; s): c_ij = sum_k s^[k not in {i,j}] a_ik b_kj.

    The exponent makes n = 2 coincide with K_s(R).  For n >= 3 and general s the
    product is not associative, and validation aborts the build.
    """
    s = _require_central(base, s, "multiplier")
    return _square(n, base, s, name or f"M({n},{base.name},s={s})", max_order)


def _square(n, base, s, name, max_order):
    if n < 1:
        raise RingError(f"matrix size must be >= 1, got {n}")
    _guard(base.order ** (n * n), max_order)
    terms = []
    for i, j in itertools.product(range(n), repeat=2):
        row = []
        for k in range(n):
            c = None
            if s is not None and k not in (i, j):
                c = _coeff(base, s)
                if c is _DROP:
                    continue
            row.append((i * n + k, k * n + j, c))
        terms.append(row)
    one = [base.one if i == j else base.zero for i, j in itertools.product(range(n), repeat=2)]

    def label(d):
        return _matrix_label(n, lambda i, j: d[i * n + j])

    return _finish(DigitRing(base, n * n, terms, one, name, label))


def triangular(n: int, base: FiniteRing, *, name=None, max_order=None) -> FiniteRing:
    """T_n(R), upper triangular matrices."""
    if n < 1:
        raise RingError(f"matrix size must be >= 1, got {n}")
    free = [(i, j) for i in range(n) for j in range(i, n)]
    pos = {ij: t for t, ij in enumerate(free)}
    _guard(base.order ** len(free), max_order)
    terms = [[(pos[i, k], pos[k, j], None) for k in range(i, j + 1)] for i, j in free]
    one = [base.one if i == j else base.zero for i, j in free]

    def label(d):
        return _matrix_label(n, lambda i, j: d[pos[i, j]] if (i, j) in pos else base.label(base.zero))

    return _finish(DigitRing(base, len(free), terms, one, name or f"T({n},{base.name})", label))


def const_diagonal(n: int, base: FiniteRing, *, name=None, max_order=None) -> FiniteRing:
    """D_n(R), upper triangular matrices with a constant diagonal."""
    if n < 1:
        raise RingError(f"matrix size must be >= 1, got {n}")
    upper = [(i, j) for i in range(n) for j in range(i + 1, n)]
    pos = {ij: t + 1 for t, ij in enumerate(upper)}
    for i in range(n):
        pos[i, i] = 0
    k = 1 + len(upper)
    _guard(base.order**k, max_order)
    terms = [[(0, 0, None)]]
    terms += [[(pos[i, m], pos[m, j], None) for m in range(i, j + 1)] for i, j in upper]
    one = [base.one] + [base.zero] * len(upper)

    def label(d):
        return _matrix_label(n, lambda i, j: d[pos[i, j]] if (i, j) in pos else base.label(base.zero))

    return _finish(DigitRing(base, k, terms, one, name or f"D({n},{base.name})", label))


def trivial_extension(base: FiniteRing, *, name=None, max_order=None) -> FiniteRing:
    """R x R with (r1, m1)(r2, m2) = (r1 r2, r1 m2 + m1 r2)."""
    _guard(base.order**2, max_order)
    terms = [[(0, 0, None)], [(0, 1, None), (1, 0, None)]]

    def label(d):
        return f"({d[0]},{d[1]})"

    return _finish(DigitRing(base, 2, terms, [base.one, base.zero], name or f"Triv({base.name})", label))


def ks_ring(base: FiniteRing, s: int, *, name=None, max_order=None) -> FiniteRing:
    """K_s(R) on [[a, x], [y, b]] with digits (a, x, y, b)."""
    s = _require_central(base, s, "multiplier")
    _guard(base.order**4, max_order)
    c = _coeff(base, s)

    def st(i, j):
        return [] if c is _DROP else [(i, j, c)]

    terms = [
        [(0, 0, None)] + st(1, 2),
        [(0, 1, None), (1, 3, None)],
        [(2, 0, None), (3, 2, None)],
        st(2, 1) + [(3, 3, None)],
    ]
    one = [base.one, base.zero, base.zero, base.one]

    def label(d):
        return f"[[{d[0]},{d[1]}],[{d[2]},{d[3]}]]"

    return _finish(DigitRing(base, 4, terms, one, name or f"K({base.name},s={s})", label))


def poly_quotient(base: FiniteRing, modulus, *, name=None, max_order=None) -> FiniteRing:
    """R[x]/(f) for a monic f given as ascending element indices of R."""
    modulus = [int(c) for c in modulus]
    d = len(modulus) - 1
    if d < 1:
        raise RingError("modulus must have degree >= 1")
    if modulus[-1] != base.one:
        raise RingError("modulus is not monic")
    for c in modulus[:-1]:
        _require_central(base, c, "modulus coefficient")
    _guard(base.order**d, max_order)
    B = base
    # red[t][l]: coefficient of x^l in x^t mod f
    red = []
    for t in range(2 * d - 1):
        if t < d:
            red.append([B.one if l == t else B.zero for l in range(d)])
            continue
        prev = red[-1]
        top = prev[d - 1]
        row = [B.zero] + prev[: d - 1]
        for l in range(d):
            row[l] = int(B.sub(row[l], B.mul(top, modulus[l])))
        red.append(row)

    def digit(deg):
        return d - 1 - deg

    terms = [[] for _ in range(d)]
    for i, j in itertools.product(range(d), repeat=2):
        for l in range(d):
            c = _coeff(B, red[i + j][l])
            if c is not _DROP:
                terms[digit(l)].append((digit(i), digit(j), c))
    one = [B.zero] * d
    one[digit(0)] = B.one
    zero_label, one_label = B.label(B.zero), B.label(B.one)

    def label(dl):
        parts = []
        for deg in range(d - 1, -1, -1):
            c = dl[digit(deg)]
            if c == zero_label:
                continue
            mono = "" if deg == 0 else ("x" if deg == 1 else f"x^{deg}")
            if not mono:
                parts.append(c)
            elif c == one_label:
                parts.append(mono)
            else:
                parts.append(_wrap(c) + mono)
        return "+".join(parts) or zero_label

    if name is None:
        name = f"PolyQuot({base.name},{format_poly_indices(base, modulus)})"
    return _finish(DigitRing(base, d, terms, one, name, label))


def format_poly_indices(base: FiniteRing, modulus) -> str:
    d = len(modulus) - 1
    parts = []
    for deg in range(d, -1, -1):
        c = modulus[deg]
        if c == base.zero:
            continue
        mono = "" if deg == 0 else ("x" if deg == 1 else f"x^{deg}")
        if not mono:
            parts.append(base.label(c))
        elif c == base.one:
            parts.append(mono)
        else:
            parts.append(_wrap(base.label(c)) + mono)
    return "+".join(parts)


def jacobson_quotient_ring(base: FiniteRing, *, name=None) -> FiniteRing:
    from .radicals import jacobson_quotient

    return jacobson_quotient(base, name=name or f"JQuot({base.name})")[0]


# --------------------------------------------------------------------------
# cross-checks between constructions


@dataclass(frozen=True)
class IsoCheck:
    identical: bool
    orders: tuple[int, int, int]
    # index maps from R∝R into T(R,R) and into R[x]/(x^2)
    to_triangular: np.ndarray
    to_polynomial: np.ndarray


def _same_under(src: FiniteRing, dst: FiniteRing, phi: np.ndarray) -> bool:
    A, M = materialize(src).add_tab, materialize(src).mul_tab
    B, N = materialize(dst).add_tab, materialize(dst).mul_tab
    return bool(
        np.array_equal(B[phi[:, None], phi[None, :]], phi[A])
        and np.array_equal(N[phi[:, None], phi[None, :]], phi[M])
        and phi[src.zero] == dst.zero
        and phi[src.one] == dst.one
    )


def trivial_extension_iso_checks(base: FiniteRing, *, max_order=None) -> IsoCheck:
    """Build R∝R, T(R,R) and R[x]/(x^2) and compare their tables.

    T(R,R) is the ring of 2x2 matrices [[a, m], [0, a]], i.e. D_2(R).  The
    pair (r, m) corresponds to [[r, m], [0, r]] (same encoding) and to r + m x
    (digits swapped).
    """
    _guard(base.order**2, max_order)
    triv = trivial_extension(base, max_order=max_order)
    tri = const_diagonal(2, base, name=f"T({base.name},{base.name})", max_order=max_order)
    poly = poly_quotient(base, [base.zero, base.zero, base.one], max_order=max_order)
    m = base.order
    idx = np.arange(m * m, dtype=np.int64)
    to_tri = idx.copy()
    to_poly = (idx % m) * m + idx // m
    ok = _same_under(triv, tri, to_tri) and _same_under(triv, poly, to_poly)
    return IsoCheck(ok, (triv.order, tri.order, poly.order), to_tri, to_poly)


# --------------------------------------------------------------------------
# expression evaluation


def build(node, *, max_order: int | None = None, cache: dict | None = None) -> FiniteRing:
    """Build the ring for an expression AST; ``ring.name`` is its printed form.

    ``cache`` maps printed forms to rings already built, so shared
    subexpressions (and repeated corpus entries) are constructed once.
    """
    from . import expr as ex

    if cache is None:
        cache = {}
    name = ex.to_text(node)
    if name in cache:
        return cache[name]

    def sub(child):
        return build(child, max_order=max_order, cache=cache)

    kw = {"name": name, "max_order": max_order}
    match node:
        case ex.ZMod(n):
            ring = zmod(n, **kw)
        case ex.GF(q):
            ring = galois_field(q, **kw)
        case ex.Prod(left, right):
            ring = product(sub(left), sub(right), **kw)
        case ex.Mat(n, base):
            _check_arity(n)
            ring = matrix_ring(n, sub(base), **kw)
        case ex.MatS(n, base, s):
            _check_arity(n)
            ring = formal_matrix_ring(n, sub(base), s, **kw)
        case ex.Tri(n, base):
            _check_arity(n)
            ring = triangular(n, sub(base), **kw)
        case ex.DiagConst(n, base):
            _check_arity(n)
            ring = const_diagonal(n, sub(base), **kw)
        case ex.Triv(base):
            ring = trivial_extension(sub(base), **kw)
        case ex.FTri(left, right):
            ring = formal_triangular(sub(left), sub(right), **kw)
        case ex.K(base, s):
            ring = ks_ring(sub(base), s, **kw)
        case ex.PolyQ(base, coeffs):
            b = sub(base)
            ring = poly_quotient(b, [b.multiple(c) for c in coeffs], **kw)
        case ex.JQuot(base):
            ring = jacobson_quotient_ring(sub(base), name=name)
        case _:
            raise TypeError(f"not a ring expression: {node!r}")
    cache[name] = ring
    return ring


def _check_arity(n: int) -> None:
    if n < 1:
        raise RingError(f"matrix size must be >= 1, got {n}")

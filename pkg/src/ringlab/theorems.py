"""Executable registry of ring-theoretic claims about sqrt(J)-clean rings.

Each entry is a predicate over one ring expression.  Implications whose
hypothesis is false on the input come out VACUOUS; everything else is PASS
or FAIL, and FAIL always carries a witness.  Both sides of every claim are
recomputed from the ring itself (fresh quotients, fresh component rings), so
nothing passes by construction.
"""

from __future__ import annotations

import enum
import json
import sys
from dataclasses import dataclass, field
from typing import Callable, Iterable

import numpy as np

from . import classify as C
from . import expr as ex
from .constructions import build
from .core import FiniteRing, RingError
from .ideals import ideal_closure, quotient_ring
from .radicals import idempotents_lift_mod, jacobson_data, jacobson_quotient
from .subsets import additive_generators, center, idempotents, nilpotents, units

K_ = C.DecompKind
M_ = C.DecompMode


class Verdict(str, enum.Enum):
    PASS = "PASS"
    VACUOUS = "VACUOUS"
    FAIL = "FAIL"


class TheoremError(ValueError):
    """Unknown registry id, wrong number of inputs, or an incompatible input."""


@dataclass
class TheoremCase:
    id: str
    statement: str
    inputs: tuple[str, ...]
    verdict: Verdict
    witness: dict | None = None
    facts: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "statement": self.statement,
            "inputs": list(self.inputs),
            "verdict": self.verdict.value,
            "witness": self.witness,
            "facts": self.facts,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


# --------------------------------------------------------------------------
# evaluation context


class Ctx:
    """One input expression plus a shared build cache."""

    def __init__(self, node: ex.Node, max_order: int | None = None, cache: dict | None = None):
        self.node = node
        self.text = ex.to_text(node)
        self.max_order = max_order
        self.cache = {} if cache is None else cache
        self._ring = None

    @property
    def ring(self) -> FiniteRing:
        if self._ring is None:
            self._ring = self.build(self.node)
        return self._ring

    def build(self, node: ex.Node) -> FiniteRing:
        return build(node, max_order=self.max_order, cache=self.cache)


Outcome = tuple  # (Verdict, witness | None, facts dict)


def _sq(ring) -> C.Verdict:
    return C.has_clean_property(ring, K_.SQRTJ, M_.ANY)


def _prop(ring, kind, mode=M_.ANY) -> C.Verdict:
    return C.has_clean_property(ring, kind, mode)


def _sqrt_mask(ring) -> np.ndarray:
    return jacobson_data(ring).sqrt_jacobson.mask


def _j_mask(ring) -> np.ndarray:
    return jacobson_data(ring).jacobson.mask


def _w(v) -> dict:
    return dict(v.witness or {}) if isinstance(v, C.Verdict) else {}


def _implies(hyp, concl, facts: dict, failed: str) -> Outcome:
    if not hyp:
        return Verdict.VACUOUS, None, facts
    if concl:
        return Verdict.PASS, None, facts
    return Verdict.FAIL, {"failed": failed, **_w(concl)}, facts


def _iff(lhs, rhs, facts: dict) -> Outcome:
    if bool(lhs) == bool(rhs):
        return Verdict.PASS, None, facts
    false_side = lhs if not lhs else rhs
    return Verdict.FAIL, {"lhs": bool(lhs), "rhs": bool(rhs), **_w(false_side)}, facts


def _all(checks: Iterable[tuple[str, bool, dict | None]], facts: dict) -> Outcome:
    for name, ok, witness in checks:
        if not ok:
            return Verdict.FAIL, {"failed": name, **(witness or {})}, facts
    return Verdict.PASS, None, facts


def _first(mask: np.ndarray) -> int:
    return int(np.argmax(mask))


def _is_division_ring(ring) -> bool:
    return len(units(ring)) == ring.order - 1


def _is_commutative(ring) -> bool:
    return len(center(ring)) == ring.order


# --------------------------------------------------------------------------
# basic results


def basic_sqrt_elements(ctx: Ctx) -> Outcome:
    R = ctx.ring
    count, _ = C.decomposition_counts(R, K_.SQRTJ)
    bad = _sqrt_mask(R) & (count == 0)
    return _all([("z in sqrtJ decomposes", not bad.any(), {"element": _first(bad)})], {})


def basic_abelian_semisimple(ctx: Ctx) -> Outcome:
    R = ctx.ring
    sq, ab, ss = _sq(R), C.is_abelian(R), C.is_semisimple(R)
    hyp = sq and ab and ss
    facts = {"sqrtj_clean": bool(sq), "abelian": bool(ab), "semisimple_J0": bool(ss)}
    if not hyp:
        return Verdict.VACUOUS, None, facts
    red, boo = C.is_reduced(R), C.is_boolean(R)
    return _all([("reduced", bool(red), _w(red)), ("boolean", bool(boo), _w(boo))], facts)


def sqrt_set_properties(ctx: Ctx) -> Outcome:
    R = ctx.ring
    S = _sqrt_mask(R)
    U = units(R).mask
    I = idempotents(R).mask
    zero = R.zero
    checks = []
    both = U & S
    checks.append(("units disjoint from sqrtJ", not both.any(), {"element": _first(both)}))
    common = I & S
    common[zero] = False
    checks.append(("Id meets sqrtJ only in 0", not common.any() and bool(S[zero]), {"element": _first(common)}))
    xs = np.flatnonzero(S)
    cen = center(R).members
    witness = None
    for y in cen:
        prod = R.mul(xs, y)
        out = ~S[prod]
        if out.any():
            witness = {"x": int(xs[_first(out)]), "y": int(y)}
            break
    checks.append(("sqrtJ times central stays in sqrtJ", witness is None, witness))
    witness = None
    x = R.elements
    for y in cen:
        if not U[y]:
            continue
        back = S[R.mul(x, y)] & ~S
        if back.any():
            witness = {"x": _first(back), "y": int(y)}
            break
    checks.append(("converse for central units", witness is None, witness))
    return _all(checks, {"sqrtJ_size": int(S.sum())})


def two_in_j(ctx: Ctx) -> Outcome:
    R = ctx.ring
    sq = _sq(R)
    return _implies(sq, C.two_in_jacobson(R), {"sqrtj_clean": bool(sq)}, "two_in_J")


IDEAL_CAP = 4


def _test_ideals(R: FiniteRing):
    """J(R) when nonzero and proper, then principal two-sided ideals, capped."""
    out, seen = [], set()

    def offer(gens):
        ideal = ideal_closure(R, gens)
        key = ideal.mask.tobytes()
        if key in seen or len(ideal) in (1, R.order):
            return
        seen.add(key)
        out.append((list(gens), ideal))

    J = jacobson_data(R).jacobson
    if 1 < len(J) < R.order:
        seen.add(J.mask.tobytes())
        out.append((list(J.generators), J))
    candidates = []
    candidates += [e for e in idempotents(R).members if e not in (R.zero, R.one)]
    candidates += [z for z in nilpotents(R).members if z != R.zero][:8]
    candidates += [g for g in additive_generators(R) if g != R.one]
    for g in candidates:
        if len(out) >= IDEAL_CAP:
            break
        offer([g])
    return out


def homomorphic_image(ctx: Ctx) -> Outcome:
    R = ctx.ring
    sq = _sq(R)
    facts = {"sqrtj_clean": bool(sq)}
    if not sq:
        return Verdict.VACUOUS, None, facts
    ideals = _test_ideals(R)
    facts["ideals_tested"] = len(ideals)
    for gens, ideal in ideals:
        Q, _ = quotient_ring(R, ideal)
        v = _sq(Q)
        if not v:
            return Verdict.FAIL, {"ideal_generators": gens, "quotient_order": Q.order, **_w(v)}, facts
    return Verdict.PASS, None, facts


def product_rule(ctx: Ctx) -> Outcome:
    node = ctx.node
    R, A, B = ctx.ring, ctx.build(node.left), ctx.build(node.right)
    sr, sa, sb = _sq(R), _sq(A), _sq(B)
    facts = {"product": bool(sr), "left": bool(sa), "right": bool(sb)}
    verdict = _iff(sr, bool(sa) and bool(sb), facts)
    if verdict[0] is not Verdict.PASS:
        return verdict
    expected = (_sqrt_mask(A)[:, None] & _sqrt_mask(B)[None, :]).ravel()
    diff = expected != _sqrt_mask(R)
    return _all([("sqrtJ of product is product of sqrtJ", not diff.any(), {"element": _first(diff)})], facts)


def sqrtj_implies_clean(ctx: Ctx) -> Outcome:
    R = ctx.ring
    sq = _sq(R)
    return _implies(sq, _prop(R, K_.UNIT), {"sqrtj_clean": bool(sq)}, "clean")


def containment_diagram(ctx: Ctx) -> Outcome:
    R = ctx.ring
    jc, nc = _prop(R, K_.J), _prop(R, K_.NIL)
    facts = {"j_clean": bool(jc), "nil_clean": bool(nc)}
    if not (jc or nc):
        return Verdict.VACUOUS, None, facts
    sq = _sq(R)
    facts["sqrtj_clean"] = bool(sq)
    return _implies(True, sq, facts, "sqrtj_clean")


def _is_pow2_zmod(node) -> bool:
    return isinstance(node, ex.ZMod) and node.n >= 2 and node.n & (node.n - 1) == 0


def _is_m2f2(node) -> bool:
    return (
        isinstance(node, ex.Mat)
        and node.n == 2
        and (node.base == ex.GF(2) or node.base == ex.ZMod(2))
    )


def _example_applies(node) -> bool:
    return node == ex.ZMod(9) or _is_m2f2(node) or _is_pow2_zmod(node)


def worked_examples(ctx: Ctx) -> Outcome:
    R, node = ctx.ring, ctx.node
    if node == ex.ZMod(9):
        cl, sq, two = _prop(R, K_.UNIT), _sq(R), C.two_in_jacobson(R)
        facts = {"clean": bool(cl), "sqrtj_clean": bool(sq), "two_in_J": bool(two)}
        return _all(
            [("clean", bool(cl), _w(cl)), ("not sqrtj_clean", not sq, None), ("2 not in J", not two, None)],
            facts,
        )
    if _is_m2f2(node):
        Q, _ = jacobson_quotient(R)
        nc, sq, jc, qb = _prop(R, K_.NIL), _sq(R), _prop(R, K_.J), C.is_boolean(Q)
        facts = {"nil_clean": bool(nc), "sqrtj_clean": bool(sq), "j_clean": bool(jc), "R/J boolean": bool(qb)}
        return _all(
            [
                ("nil_clean", bool(nc), _w(nc)),
                ("sqrtj_clean", bool(sq), _w(sq)),
                ("not j_clean", not jc, None),
                ("R/J not boolean", not qb, None),
            ],
            facts,
        )
    Q, _ = jacobson_quotient(R)
    jc = _prop(R, K_.J)
    facts = {"j_clean": bool(jc), "R/J order": Q.order}
    return _all([("j_clean", bool(jc), _w(jc)), ("R/J has order 2", Q.order == 2, None)], facts)


def lifting_characterization(ctx: Ctx) -> Outcome:
    R = ctx.ring
    J = jacobson_data(R).jacobson
    Q, _ = quotient_ring(R, J) if len(J) > 1 else (R, None)
    lift = idempotents_lift_mod(R, J) if len(J) > 1 else None
    lifts = True if lift is None else lift.lifts
    sr, sq = _sq(R), _sq(Q)
    facts = {"sqrtj_clean": bool(sr), "quotient_sqrtj_clean": bool(sq), "idempotents_lift": lifts}
    verdict = _iff(sr, bool(sq) and lifts, facts)
    if verdict[0] is Verdict.FAIL and lift is not None and not lifts:
        verdict[1]["missing_cosets"] = list(lift.missing)
    return verdict


def abelian_j_equals_sqrt(ctx: Ctx) -> Outcome:
    R = ctx.ring
    sq, ab = _sq(R), C.is_abelian(R)
    facts = {"sqrtj_clean": bool(sq), "abelian": bool(ab)}
    diff = _sqrt_mask(R) & ~_j_mask(R)
    return _implies(sq and ab, C.Verdict(not diff.any(), {"element": _first(diff)}), facts, "J == sqrtJ")


# --------------------------------------------------------------------------
# strongly sqrt(J)-clean rings


def unit_strong_decomposition(ctx: Ctx) -> Outcome:
    R = ctx.ring
    _, strong = C.decomposition_counts(R, K_.SQRTJ)
    us = np.flatnonzero(units(R).mask)
    S = _sqrt_mask(R)
    bad = strong[us] != S[R.sub(us, R.one)]
    if bad.any():
        u = int(us[_first(bad)])
        return Verdict.FAIL, {"unit": int(u), "strong": bool(strong[u]), "u-1 in sqrtJ": bool(S[R.sub(u, R.one)])}, {}
    return Verdict.PASS, None, {"units": len(us)}


def strong_implies_sqrt_ju(ctx: Ctx) -> Outcome:
    R = ctx.ring
    st = _prop(R, K_.SQRTJ, M_.STRONG)
    return _implies(st, C.is_sqrt_ju(R), {"strongly_sqrtj_clean": bool(st)}, "sqrtJU")


def strong_element_symmetry(ctx: Ctx) -> Outcome:
    R = ctx.ring
    _, strong = C.decomposition_counts(R, K_.SQRTJ)
    other = strong[R.sub(R.one, R.elements)]
    bad = strong & ~other
    return _all([("1 - a strongly sqrtJ-clean", not bad.any(), {"element": _first(bad)})], {"strong_elements": int(strong.sum())})


def strong_j_implies_strong_sqrt(ctx: Ctx) -> Outcome:
    R = ctx.ring
    sj = _prop(R, K_.J, M_.STRONG)
    return _implies(sj, _prop(R, K_.SQRTJ, M_.STRONG), {"strongly_j_clean": bool(sj)}, "strongly_sqrtj_clean")


def strong_implies_strongly_clean(ctx: Ctx) -> Outcome:
    R = ctx.ring
    st = _prop(R, K_.SQRTJ, M_.STRONG)
    return _implies(st, _prop(R, K_.UNIT, M_.STRONG), {"strongly_sqrtj_clean": bool(st)}, "strongly_clean")


def division_ring_case(ctx: Ctx) -> Outcome:
    R = ctx.ring
    div = _is_division_ring(R)
    facts = {"division_ring": div, "order": R.order}
    if not div:
        return Verdict.VACUOUS, None, facts
    st = _prop(R, K_.SQRTJ, M_.STRONG)
    facts["strongly_sqrtj_clean"] = bool(st)
    return _iff(st, R.order == 2, facts)


def semisimple_desk_form(ctx: Ctx) -> Outcome:
    R = ctx.ring
    ss, st, bo = C.is_semisimple(R), _prop(R, K_.SQRTJ, M_.STRONG), C.is_boolean(R)
    facts = {"semisimple_J0": bool(ss), "strongly_sqrtj_clean": bool(st), "boolean": bool(bo)}
    lhs = C.Verdict(bool(ss) and bool(st), _w(ss) or _w(st))
    return _iff(lhs, bo, facts)


def strong_local_iff_trivial_idempotents(ctx: Ctx) -> Outcome:
    R = ctx.ring
    st = _prop(R, K_.SQRTJ, M_.STRONG)
    facts = {"strongly_sqrtj_clean": bool(st)}
    if not st:
        return Verdict.VACUOUS, None, facts
    loc = C.is_local(R)
    trivial = len(idempotents(R)) == 2
    facts.update(local=bool(loc), trivial_idempotents=trivial)
    return _iff(loc, trivial, facts)


def strong_square_minus(ctx: Ctx) -> Outcome:
    R = ctx.ring
    st = _prop(R, K_.SQRTJ, M_.STRONG)
    x = R.elements
    bad = ~_sqrt_mask(R)[R.sub(R.mul(x, x), x)]
    return _implies(st, C.Verdict(not bad.any(), {"element": _first(bad)}), {"strongly_sqrtj_clean": bool(st)}, "r^2 - r in sqrtJ")


# --------------------------------------------------------------------------
# uniquely sqrt(J)-clean rings


def unique_central_idempotents(ctx: Ctx) -> Outcome:
    R = ctx.ring
    un = _prop(R, K_.SQRTJ, M_.UNIQUE)
    facts = {"uniquely_sqrtj_clean": bool(un)}
    if not un:
        return Verdict.VACUOUS, None, facts
    x = R.elements
    for e in idempotents(R).members:
        bad = R.mul(e, x) != R.mul(x, e)
        if bad.any():
            return Verdict.FAIL, {"idempotent": e, "element": _first(bad)}, facts
    return Verdict.PASS, None, facts


def unique_dedekind_finite(ctx: Ctx) -> Outcome:
    R = ctx.ring
    un = _prop(R, K_.SQRTJ, M_.UNIQUE)
    return _implies(un, C.is_dedekind_finite(R), {"uniquely_sqrtj_clean": bool(un)}, "dedekind_finite")


def _clean_and_abelian(R):
    sq, ab = _sq(R), C.is_abelian(R)
    return C.Verdict(bool(sq) and bool(ab), _w(sq) or _w(ab)), {"sqrtj_clean": bool(sq), "abelian": bool(ab)}


def uniquely_clean_characterization(ctx: Ctx) -> Outcome:
    R = ctx.ring
    uc = _prop(R, K_.UNIT, M_.UNIQUE)
    rhs, facts = _clean_and_abelian(R)
    facts["uniquely_clean"] = bool(uc)
    return _iff(uc, rhs, facts)


def uniquely_sqrt_characterization(ctx: Ctx) -> Outcome:
    R = ctx.ring
    us = _prop(R, K_.SQRTJ, M_.UNIQUE)
    rhs, facts = _clean_and_abelian(R)
    facts["uniquely_sqrtj_clean"] = bool(us)
    return _iff(us, rhs, facts)


def uniquely_clean_iff_unique_sqrt(ctx: Ctx) -> Outcome:
    R = ctx.ring
    uc, us = _prop(R, K_.UNIT, M_.UNIQUE), _prop(R, K_.SQRTJ, M_.UNIQUE)
    return _iff(uc, us, {"uniquely_clean": bool(uc), "uniquely_sqrtj_clean": bool(us)})


def local_strong_iff_f2_quotient(ctx: Ctx) -> Outcome:
    R = ctx.ring
    loc, st = C.is_local(R), _prop(R, K_.SQRTJ, M_.STRONG)
    Q, _ = jacobson_quotient(R)
    # a unital ring of order 2 is F_2; the squaring test double-checks it
    f2 = Q.order == 2 and bool(C.is_boolean(Q))
    facts = {"local": bool(loc), "strongly_sqrtj_clean": bool(st), "R/J order": Q.order}
    lhs = C.Verdict(bool(loc) and bool(st), _w(loc) or _w(st))
    return _iff(lhs, f2, facts)


def local_unique_iff_strong(ctx: Ctx) -> Outcome:
    R = ctx.ring
    loc = C.is_local(R)
    facts = {"local": bool(loc)}
    if not loc:
        return Verdict.VACUOUS, None, facts
    us, st = _prop(R, K_.SQRTJ, M_.UNIQUE), _prop(R, K_.SQRTJ, M_.STRONG)
    facts.update(uniquely_sqrtj_clean=bool(us), strongly_sqrtj_clean=bool(st))
    return _iff(us, st, facts)


# --------------------------------------------------------------------------
# matrix rings and their relatives


def _matrix_strong(ctx: Ctx, literal: bool) -> Outcome:
    node = ctx.node
    base = ctx.build(node.base)
    hyp = _prop(base, K_.SQRTJ, M_.STRONG)
    facts = {"n": node.n, "base_strongly_sqrtj_clean": bool(hyp)}
    if not hyp:
        return Verdict.VACUOUS, None, facts
    R = ctx.ring
    v = _sq(R) if literal else _prop(R, K_.SQRTJ, M_.STRONG)
    facts["matrix_sqrtj_clean" if literal else "matrix_strongly_sqrtj_clean"] = bool(v)
    return _iff(v, node.n == 1, facts)


def matrix_not_strong(ctx: Ctx) -> Outcome:
    return _matrix_strong(ctx, literal=False)


def matrix_literal(ctx: Ctx) -> Outcome:
    return _matrix_strong(ctx, literal=True)


def boolean_matrix(ctx: Ctx) -> Outcome:
    base = ctx.build(ctx.node.base)
    bo = C.is_boolean(base)
    facts = {"base_boolean": bool(bo)}
    if not bo:
        return Verdict.VACUOUS, None, facts
    sq = _sq(ctx.ring)
    facts["matrix_sqrtj_clean"] = bool(sq)
    return _implies(True, sq, facts, "sqrtj_clean")


def const_diagonal_rule(ctx: Ctx) -> Outcome:
    base = ctx.build(ctx.node.base)
    sb, sd = _sq(base), _sq(ctx.ring)
    return _iff(sd, sb, {"n": ctx.node.n, "base_sqrtj_clean": bool(sb), "sqrtj_clean": bool(sd)})


def _field_side(base, need_commutative: bool):
    if not _is_division_ring(base):
        return False
    return _is_commutative(base) if need_commutative else True


def field_matrix(ctx: Ctx) -> Outcome:
    node = ctx.node
    S = ctx.build(node.base)
    facts = {"n": node.n, "field": _field_side(S, True), "field_order": S.order}
    if not facts["field"]:
        return Verdict.VACUOUS, None, facts
    is_f2 = S.order == 2
    sm, s1 = _sq(ctx.ring), _sq(S)
    facts.update(matrix_sqrtj_clean=bool(sm), base_sqrtj_clean=bool(s1))
    if bool(sm) != is_f2:
        return _iff(sm, is_f2, facts)
    return _iff(s1, is_f2, facts)


def division_matrix(ctx: Ctx) -> Outcome:
    node = ctx.node
    D = ctx.build(node.base)
    facts = {"n": node.n, "division_ring": _field_side(D, False), "order": D.order}
    if not facts["division_ring"]:
        return Verdict.VACUOUS, None, facts
    R = ctx.ring
    sq, nc = _sq(R), _prop(R, K_.NIL)
    facts.update(sqrtj_clean=bool(sq), nil_clean=bool(nc))
    diff = _sqrt_mask(R) != nilpotents(R).mask
    return _all(
        [
            ("sqrtJ equals nilpotents", not diff.any(), {"element": _first(diff)}),
            ("sqrtj_clean iff nil_clean", bool(sq) == bool(nc), _w(sq) or _w(nc)),
            ("sqrtj_clean iff D = F_2", bool(sq) == (D.order == 2), _w(sq)),
        ],
        facts,
    )


def trivial_extension_rule(ctx: Ctx) -> Outcome:
    base = ctx.build(ctx.node.base)
    R = ctx.ring
    st, sb = _sq(R), _sq(base)
    facts = {"sqrtj_clean": bool(st), "base_sqrtj_clean": bool(sb)}
    verdict = _iff(st, sb, facts)
    if verdict[0] is not Verdict.PASS:
        return verdict
    # (r, m) has index r*|R| + m
    expected = np.repeat(_sqrt_mask(base), base.order)
    diff = expected != _sqrt_mask(R)
    return _all([("sqrtJ(T(R,M)) = sqrtJ(R) x M", not diff.any(), {"element": _first(diff)})], facts)


def _x_squared(node) -> bool:
    return isinstance(node, ex.PolyQ) and node.coeffs == (0, 0, 1)


def _three_forms_applies(node) -> bool:
    return isinstance(node, ex.Triv) or (isinstance(node, ex.DiagConst) and node.n == 2) or _x_squared(node)


def three_forms(ctx: Ctx) -> Outcome:
    base = ctx.node.base
    forms = {
        "trivial_extension": ex.Triv(base),
        "T(R,R)": ex.DiagConst(2, base),
        "R[x]/(x^2)": ex.PolyQ(base, (0, 0, 1)),
    }
    verdicts = {k: _sq(ctx.build(n)) for k, n in forms.items()}
    facts = {k: bool(v) for k, v in verdicts.items()}
    if len(set(facts.values())) == 1:
        return Verdict.PASS, None, facts
    return Verdict.FAIL, {"verdicts": facts}, facts


def _ft_applies(node) -> bool:
    return isinstance(node, ex.FTri) or (isinstance(node, ex.Tri) and node.n == 2)


def formal_triangular_rule(ctx: Ctx) -> Outcome:
    node = ctx.node
    if isinstance(node, ex.FTri):
        A, B = ctx.build(node.left), ctx.build(node.right)
    else:
        A = B = ctx.build(node.base)
    sr, sa, sb = _sq(ctx.ring), _sq(A), _sq(B)
    facts = {"sqrtj_clean": bool(sr), "left": bool(sa), "right": bool(sb)}
    return _iff(sr, bool(sa) and bool(sb), facts)


def triangular_descends(ctx: Ctx) -> Outcome:
    node = ctx.node
    facts = {"n": node.n}
    if node.n < 2:
        return Verdict.VACUOUS, None, facts
    st = _sq(ctx.ring)
    facts["sqrtj_clean"] = bool(st)
    if not st:
        return Verdict.VACUOUS, None, facts
    sb = _sq(ctx.build(node.base))
    facts["base_sqrtj_clean"] = bool(sb)
    return _implies(True, sb, facts, "base sqrtj_clean")


def ks_descends(ctx: Ctx) -> Outcome:
    node = ctx.node
    base = ctx.build(node.base)
    s_in_j = bool(_j_mask(base)[node.s])
    facts = {"s_in_J": s_in_j}
    if not s_in_j:
        return Verdict.VACUOUS, None, facts
    sk = _sq(ctx.ring)
    facts["sqrtj_clean"] = bool(sk)
    if not sk:
        return Verdict.VACUOUS, None, facts
    sb = _sq(base)
    facts["base_sqrtj_clean"] = bool(sb)
    return _implies(True, sb, facts, "base sqrtj_clean")


def formal_matrix_descends(ctx: Ctx) -> Outcome:
    node = ctx.node
    B = ctx.build(node.base)
    if _is_truncated_series(node.base):
        R = ctx.build(node.base.base)
        constant = node.s < R.order  # constants have index < |R|
        s_r = node.s
    else:
        R, constant, s_r = B, True, node.s
    side = constant and bool(_j_mask(R)[s_r]) and s_r in center(R)
    facts = {"s_in_center_and_J": side}
    if not side:
        return Verdict.VACUOUS, None, facts
    sm = _sq(ctx.ring)
    facts["sqrtj_clean"] = bool(sm)
    if not sm:
        return Verdict.VACUOUS, None, facts
    sb, sr = _sq(B), _sq(R)
    facts.update(coefficient_ring_sqrtj_clean=bool(sb), base_sqrtj_clean=bool(sr))
    return _all([("coefficient ring sqrtj_clean", bool(sb), _w(sb)), ("R sqrtj_clean", bool(sr), _w(sr))], facts)


def _is_truncated_series(node) -> bool:
    return isinstance(node, ex.PolyQ) and len(node.coeffs) >= 2 and node.coeffs[-1] == 1 and not any(node.coeffs[:-1])


# --------------------------------------------------------------------------
# registry


def _any(node) -> bool:
    return True


def _of(*types) -> Callable:
    return lambda node: isinstance(node, types)


@dataclass(frozen=True)
class Entry:
    id: str
    statement: str
    fn: Callable[[Ctx], Outcome]
    applies: Callable = _any
    default: bool = True


REGISTRY: dict[str, Entry] = {}


def _register(*entries: Entry):
    for e in entries:
        REGISTRY[e.id] = e


_register(
    Entry("B2.a", "every z in sqrtJ(R) is a sqrtJ-clean element", basic_sqrt_elements),
    Entry("B2.b", "sqrtJ-clean and abelian and J(R)=0 => reduced and boolean", basic_abelian_semisimple),
    Entry("L2.1", "U(R) and sqrtJ(R) are disjoint; Id(R) & sqrtJ(R) = {0}; sqrtJ(R)C(R) in sqrtJ(R), with the converse for central units", sqrt_set_properties),
    Entry("L2.2", "sqrtJ-clean => 2 in J(R)", two_in_j),
    Entry("L2.3", "sqrtJ-clean(R) => sqrtJ-clean(R/I) for proper ideals I", homomorphic_image),
    Entry("L2.4", "sqrtJ-clean(R1 x R2) <=> sqrtJ-clean(R1) and sqrtJ-clean(R2)", product_rule, _of(ex.Prod)),
    Entry("L2.5", "sqrtJ-clean => clean", sqrtj_implies_clean),
    Entry("O2.5", "J-clean => sqrtJ-clean and nil-clean => sqrtJ-clean", containment_diagram),
    Entry("E2.6", "Z9 clean, not sqrtJ-clean; M2(F2) nil-clean, sqrtJ-clean, not J-clean; Z(2^k) J-clean", worked_examples, _example_applies),
    Entry("T2.7", "sqrtJ-clean(R) <=> sqrtJ-clean(R/J(R)) and idempotents lift mod J(R)", lifting_characterization),
    Entry("L2.8", "sqrtJ-clean and abelian => J(R) = sqrtJ(R)", abelian_j_equals_sqrt),
    Entry("L3.1", "a unit u has a commuting sqrtJ-clean decomposition <=> u - 1 in sqrtJ(R)", unit_strong_decomposition),
    Entry("L3.2", "strongly sqrtJ-clean => U(R) in 1 + sqrtJ(R)", strong_implies_sqrt_ju),
    Entry("R3.2a", "a strongly sqrtJ-clean => 1 - a strongly sqrtJ-clean", strong_element_symmetry),
    Entry("L3.3", "strongly J-clean => strongly sqrtJ-clean", strong_j_implies_strong_sqrt),
    Entry("L3.4", "strongly sqrtJ-clean => strongly clean", strong_implies_strongly_clean),
    Entry("L3.6", "division ring D: strongly sqrtJ-clean <=> |D| = 2", division_ring_case),
    Entry("T3.7", "(J(R)=0 and strongly sqrtJ-clean) <=> boolean", semisimple_desk_form),
    Entry("T3.8", "strongly sqrtJ-clean => (local <=> Id(R) = {0,1})", strong_local_iff_trivial_idempotents),
    Entry("L3.9", "strongly sqrtJ-clean => r^2 - r in sqrtJ(R) for all r", strong_square_minus),
    Entry("L4.1", "uniquely sqrtJ-clean => idempotents central", unique_central_idempotents),
    Entry("L4.2", "uniquely sqrtJ-clean => Dedekind finite", unique_dedekind_finite),
    Entry("L4.3", "uniquely clean <=> sqrtJ-clean and abelian", uniquely_clean_characterization),
    Entry("L4.4", "uniquely sqrtJ-clean <=> sqrtJ-clean and abelian", uniquely_sqrt_characterization),
    Entry("T4.5", "uniquely clean <=> uniquely sqrtJ-clean", uniquely_clean_iff_unique_sqrt),
    Entry("L4.6", "(local and strongly sqrtJ-clean) <=> R/J(R) = F2", local_strong_iff_f2_quotient),
    Entry("L4.7", "local R: uniquely sqrtJ-clean <=> strongly sqrtJ-clean", local_unique_iff_strong),
    Entry("L5.1", "R strongly sqrtJ-clean => (M_n(R) strongly sqrtJ-clean <=> n = 1)", matrix_not_strong, _of(ex.Mat)),
    Entry("L5.1-literal", "R strongly sqrtJ-clean => (M_n(R) sqrtJ-clean <=> n = 1)", matrix_literal, _of(ex.Mat), default=False),
    Entry("L5.2", "R boolean => M_n(R) sqrtJ-clean", boolean_matrix, _of(ex.Mat)),
    Entry("L5.3", "sqrtJ-clean(R) <=> sqrtJ-clean(D_n(R))", const_diagonal_rule, _of(ex.DiagConst)),
    Entry("T5.4", "field S: M_n(S) sqrtJ-clean <=> M_1(S) sqrtJ-clean <=> S = F2", field_matrix, _of(ex.Mat)),
    Entry("T5.5", "division ring D: M_n(D) sqrtJ-clean <=> nil-clean <=> D = F2", division_matrix, _of(ex.Mat)),
    Entry("L5.6", "sqrtJ-clean(R x| M) <=> sqrtJ-clean(R), sqrtJ(R x| M) = sqrtJ(R) x M", trivial_extension_rule, _of(ex.Triv)),
    Entry("L5.7", "R x| R, T(R,R) and R[x]/(x^2) agree on sqrtJ-cleanness", three_forms, _three_forms_applies),
    Entry("T5.8", "[[R1, M], [0, R2]] sqrtJ-clean <=> R1 and R2 sqrtJ-clean", formal_triangular_rule, _ft_applies),
    Entry("C5.9", "n >= 2: sqrtJ-clean(T_n(R)) => sqrtJ-clean(R)", triangular_descends, _of(ex.Tri)),
    Entry("L5.10", "s in J(R): sqrtJ-clean(K_s(R)) => sqrtJ-clean(R)", ks_descends, _of(ex.K)),
    Entry("T5.11", "s in C(R) & J(R): sqrtJ-clean(M_n(R[x]/(x^m); s)) => sqrtJ-clean(R)", formal_matrix_descends, _of(ex.MatS)),
)

# claims deliberately left out of the registry, with the reason
OUT_OF_SCOPE = {
    "E2.6-infinite": "the product Z2 x Z4 x Z8 x ... is infinite",
    "R3.5": "polynomial rings R[x] are infinite",
    "L5.11": "units and radical of M_n(R;s) are cited results phrased via det_s and J_s(R)",
}


def default_ids() -> list[str]:
    return sorted(i for i, e in REGISTRY.items() if e.default)


# --------------------------------------------------------------------------
# running


def _as_node(inp) -> ex.Node:
    if isinstance(inp, ex.Node):
        return inp
    if isinstance(inp, str):
        return ex.parse(inp)
    raise TheoremError(f"not a ring expression: {inp!r}")


def run_entry(entry: Entry, ctx: Ctx) -> TheoremCase:
    verdict, witness, facts = entry.fn(ctx)
    if verdict is Verdict.FAIL and witness is None:
        witness = {"failed": entry.id}
    return TheoremCase(entry.id, entry.statement, (ctx.text,), verdict, witness, facts)


def check(theorem_id: str, inputs, *, max_order: int | None = None, cache: dict | None = None) -> TheoremCase:
    """Run one registry entry on one ring expression (string or AST)."""
    if theorem_id not in REGISTRY:
        raise TheoremError(f"unknown theorem id {theorem_id!r}")
    if isinstance(inputs, (list, tuple)):
        if len(inputs) != 1:
            raise TheoremError(f"{theorem_id} takes exactly one ring expression, got {len(inputs)}")
        inputs = inputs[0]
    node = _as_node(inputs)
    entry = REGISTRY[theorem_id]
    if not entry.applies(node):
        raise TheoremError(f"{theorem_id} does not apply to {ex.to_text(node)}")
    return run_entry(entry, Ctx(node, max_order, cache))


DEFAULT_CORPUS = (
    "Z(2)", "Z(3)", "Z(4)", "Z(5)", "Z(6)", "Z(8)", "Z(9)", "Z(12)", "Z(16)",
    "GF(2)", "GF(3)", "GF(4)", "GF(8)", "GF(9)",
    "Z(2)xZ(2)", "Z(2)xZ(9)", "Z(4)xZ(4)",
    "M(2,GF(2))", "M(2,GF(3))", "M(2,GF(4))", "M(2,Z(4))",
    "T(2,Z(2))", "T(2,Z(4))", "T(3,Z(2))",
    "D(2,Z(2))", "D(2,Z(4))", "D(2,Z(9))", "D(3,Z(2))", "D(3,Z(4))", "D(4,Z(2))",
    "Triv(Z(2))", "Triv(Z(4))", "Triv(Z(9))",
    "K(Z(4),s=2)", "K(Z(8),s=2)",
    "Ms(2,Z(4),s=2)",
    "PolyQuot(Z(2),x^2)", "PolyQuot(Z(4),x^2)", "M(2,PolyQuot(Z(2),x^2))",
    # extra inputs so that the formal-triangular and truncated-series
    # entries see more than one shape
    "FT(Z(2),Z(9))", "FT(Z(4),GF(3))", "M(2,PolyQuot(Z(2),x^2),s=0)",
)


def load_corpus(path) -> list[str]:
    """One expression per line; blank lines and ``#`` comments are ignored."""
    out = []
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.split("#", 1)[0].strip()
            if line:
                out.append(line)
    return out


@dataclass
class SuiteResult:
    cases: list[TheoremCase]
    errors: list[dict]
    warnings: list[str]

    def counts(self) -> dict[str, int]:
        out = {v.value: 0 for v in Verdict}
        for c in self.cases:
            out[c.verdict.value] += 1
        out["ERROR"] = len(self.errors)
        return out

    @property
    def failed(self) -> list[TheoremCase]:
        return [c for c in self.cases if c.verdict is Verdict.FAIL]

    def summary_json(self) -> str:
        return json.dumps({"summary": self.counts()}, sort_keys=True)

    def lines(self) -> list[str]:
        return [c.to_json() for c in self.cases] + [json.dumps(e, sort_keys=True) for e in self.errors]


def run_suite(
    corpus: Iterable[str] | None = None,
    *,
    ids: Iterable[str] | None = None,
    max_order: int | None = None,
    add_quotients: bool | None = None,
) -> SuiteResult:
    """Run registry entries over every type-compatible corpus expression.

    With the default corpus, ``JQuot(X)`` is added for every X whose radical
    is nonzero.  Cases are ordered by (id, input).
    """
    if corpus is None:
        corpus = DEFAULT_CORPUS
        if add_quotients is None:
            add_quotients = True
    corpus = list(corpus)
    chosen = sorted(ids) if ids is not None else default_ids()
    for i in chosen:
        if i not in REGISTRY:
            raise TheoremError(f"unknown theorem id {i!r}")
    cache: dict = {}
    errors: list[dict] = []
    nodes: dict[str, ex.Node] = {}

    def admit(text: str):
        try:
            node = ex.parse(text)
            canon = ex.to_text(node)
            if canon in nodes:
                return None
            build(node, max_order=max_order, cache=cache)
        except (ex.ParseError, RingError, ValueError) as err:
            errors.append({"input": text, "error": str(err)})
            return None
        nodes[canon] = node
        return canon

    for text in corpus:
        canon = admit(text)
        if canon and add_quotients and len(jacobson_data(cache[canon]).jacobson) > 1:
            admit(f"JQuot({canon})")

    cases: list[TheoremCase] = []
    seen_applicable: dict[str, list[Verdict]] = {i: [] for i in chosen}
    for i in chosen:
        entry = REGISTRY[i]
        for canon in sorted(nodes):
            node = nodes[canon]
            if not entry.applies(node):
                continue
            try:
                case = run_entry(entry, Ctx(node, max_order, cache))
            except (RingError, ValueError) as err:
                errors.append({"id": i, "input": canon, "error": str(err)})
                continue
            cases.append(case)
            seen_applicable[i].append(case.verdict)
    warnings = []
    for i, verdicts in seen_applicable.items():
        if not verdicts:
            warnings.append(f"coverage: {i} applies to no corpus input")
        elif all(v is Verdict.VACUOUS for v in verdicts):
            warnings.append(f"coverage: {i} is VACUOUS on every input")
    return SuiteResult(cases, errors, warnings)


def print_suite(result: SuiteResult, out=None, err=None) -> None:
    out = out or sys.stdout
    err = err or sys.stderr
    for line in result.lines():
        print(line, file=out)
    print(result.summary_json(), file=out)
    for w in result.warnings:
        print(f"warning: {w}", file=err)

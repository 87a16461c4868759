"""The concrete permutation-map constructions under test.

Over a tower context (t, k) with q = 2^t, write s = S(x) for the
q-linearized sum x + x^q + ... + x^(q^(2k-1)).  The two candidate
permutations are

    g1(x) = x + s^(q^(2k)) + s^(q^k + 3)
    g3(x) = L(x) + s^(q^k + 3)

where L is any 2-linearized map that permutes F_{q^k} and satisfies the
twist identity L + L^(q^(2k)) = S^4 coefficient-for-coefficient.  The
canonical such L folds the power 4*q^(3k-1) into a Frobenius index:
L = Frob^e (x + S(x)^(q^(2k))) with e = 2 + t*(3k-1).

Maps are realized as evaluators, not expanded polynomials; functional
identity mod x^(2^m) - x is all the verification needs.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import blocks
from .field import FieldCtx
from .linearized import LinearizedPoly, permutes, s_polynomial
from .maps import FieldMap

SEARCH_LIMIT_M = 18


def s2k(ctx: FieldCtx) -> LinearizedPoly:
    """The 2k-term sum S for this tower; its support never wraps mod m."""
    _, k = ctx.require_tower()
    poly = s_polynomial(ctx, 2 * k)
    assert len(poly.support()) == 2 * k, "stride t with 2k terms stays below m = 3tk"
    return poly


def build_g_thm1(ctx: FieldCtx) -> FieldMap:
    """x + s^(q^(2k)) + s^(q^k + 3), with value powers of s = S(x)."""
    t, k = ctx.require_tower()
    S = s2k(ctx)
    tk = t * k

    def scalar(x: int) -> int:
        s = S(x)
        s3 = ctx.mul(s, ctx.sqr(s))
        return x ^ ctx.frobenius(s, 2 * tk) ^ ctx.mul(ctx.frobenius(s, tk), s3)

    s_tab = blocks.LinearTable(ctx, S.__call__)
    f_2tk = blocks.LinearTable(ctx, lambda v: ctx.frobenius(v, 2 * tk))
    f_tk = blocks.LinearTable(ctx, lambda v: ctx.frobenius(v, tk))
    f_sqr = blocks.LinearTable(ctx, ctx.sqr)

    def block(xs: np.ndarray) -> np.ndarray:
        s = s_tab(xs)
        s3 = blocks.mul_block(ctx, f_sqr(s), s)
        return xs ^ f_2tk(s) ^ blocks.mul_block(ctx, f_tk(s), s3)

    return FieldMap("builtin:g-thm1", ctx, scalar, block_fn=block)


def build_L_note(ctx: FieldCtx) -> LinearizedPoly:
    """The canonical L: Frob^e after (identity + Frob^(2kt) after S), e = 2 + t(3k-1)."""
    t, k = ctx.require_tower()
    S = s2k(ctx)
    inner = LinearizedPoly.identity(ctx) + S.then_frobenius(2 * k * t)
    return inner.then_frobenius(2 + t * (3 * k - 1))


def condition_ii_sides(ctx: FieldCtx, L: LinearizedPoly) -> tuple[LinearizedPoly, LinearizedPoly]:
    """Reduced coefficient vectors of L + L^(q^(2k)) and of S^4."""
    t, k = ctx.require_tower()
    left = L + L.then_frobenius(2 * k * t)
    right = s2k(ctx).then_frobenius(2)
    return left, right


def check_condition_ii(ctx: FieldCtx, L: LinearizedPoly) -> bool:
    """Exact coefficient equality of L + L^(q^(2k)) with S^4.

    Reduced linearized polynomials are in bijection with the maps they
    induce, so this is equivalent to the functional congruence mod
    x^(2^m) - x.
    """
    left, right = condition_ii_sides(ctx, L)
    return left == right


def build_g_thm3(ctx: FieldCtx, L: LinearizedPoly) -> FieldMap:
    """L(x) + s^(q^k + 3), with s = S(x)."""
    t, k = ctx.require_tower()
    S = s2k(ctx)
    tk = t * k

    def scalar(x: int) -> int:
        s = S(x)
        s3 = ctx.mul(s, ctx.sqr(s))
        return L(x) ^ ctx.mul(ctx.frobenius(s, tk), s3)

    s_tab = blocks.LinearTable(ctx, S.__call__)
    l_tab = blocks.LinearTable(ctx, L.__call__)
    f_tk = blocks.LinearTable(ctx, lambda v: ctx.frobenius(v, tk))
    f_sqr = blocks.LinearTable(ctx, ctx.sqr)

    def block(xs: np.ndarray) -> np.ndarray:
        s = s_tab(xs)
        s3 = blocks.mul_block(ctx, f_sqr(s), s)
        return l_tab(xs) ^ blocks.mul_block(ctx, f_tk(s), s3)

    return FieldMap("builtin:g-thm3", ctx, scalar, block_fn=block)


def rel_trace_poly(ctx: FieldCtx) -> LinearizedPoly:
    """x + x^(q^k) + x^(q^(2k)) as a linearized polynomial."""
    t, k = ctx.require_tower()
    return LinearizedPoly.from_pairs(ctx, [(0, 1), (t * k, 1), (2 * t * k, 1)])


@dataclass(frozen=True)
class LCandidate:
    """An accepted L from the search, with its per-candidate verification."""
    index: int
    label: str
    poly: LinearizedPoly
    pp_verified: bool


# family description recorded in search output; see search_L_candidates
SEARCH_FAMILY = ("L = L_note + P(RelTrace(x)) with P 2-linearized over F_{q^k}: "
                 "M=0 first, then single-coefficient P, then coefficient pairs")


def _family_members(ctx: FieldCtx, budget: int):
    """Deterministic (label, M) sequence for the search family, M = P o RelTrace."""
    t, k = ctx.require_tower()
    trace = rel_trace_poly(ctx)
    coeffs = ctx.enumerate_subfield(t * k)[1:]
    produced = 0

    def emit(label, M):
        nonlocal produced
        produced += 1
        return label, M

    yield emit("M=0", LinearizedPoly.zero(ctx))
    singles = [(i, c) for i in range(ctx.m) for c in coeffs]
    for i, c in singles:
        if produced >= budget:
            return
        P = LinearizedPoly.from_pairs(ctx, [(i, c)])
        yield emit(f"P={i}:{c:x}", P.compose(trace))
    for a in range(len(singles)):
        for b in range(a + 1, len(singles)):
            if produced >= budget:
                return
            (i1, c1), (i2, c2) = singles[a], singles[b]
            if i1 == i2:
                continue
            P = LinearizedPoly.from_pairs(ctx, [(i1, c1), (i2, c2)])
            yield emit(f"P={i1}:{c1:x},{i2}:{c2:x}", P.compose(trace))


def search_L_candidates(ctx: FieldCtx, budget: int) -> list[LCandidate]:
    """Enumerate the declared family of L candidates and keep the ones that
    pass both hypotheses; each survivor is then PP-verified exhaustively.

    Duplicated coefficient vectors (the family parametrization repeats
    itself) are reported once, at their first index.
    """
    from .pptest import is_permutation_exhaustive  # local import, avoids a cycle

    t, k = ctx.require_tower()
    if ctx.m > SEARCH_LIMIT_M:
        raise ValueError(
            f"search needs per-candidate exhaustive verification; m={ctx.m} "
            f"exceeds the limit {SEARCH_LIMIT_M}")
    if budget < 1:
        raise ValueError("budget must be at least 1")
    base = build_L_note(ctx)
    accepted: list[LCandidate] = []
    seen: set[tuple] = set()
    for index, (label, M) in enumerate(_family_members(ctx, budget)):
        L = base + M
        if L.coeffs in seen:
            continue
        if not permutes(L, t * k):
            continue
        if not check_condition_ii(ctx, L):
            continue
        seen.add(L.coeffs)
        verdict = is_permutation_exhaustive(build_g_thm3(ctx, L))
        accepted.append(LCandidate(index, label, L, verdict.verdict == "permutation"))
    return accepted

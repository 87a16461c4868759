"""Two independent permutation criteria plus the shift-difference lemma.

The definitional check sweeps all 2^m inputs and watches for output
collisions.  The character-sum check evaluates, for nonzero a, the
exact integer sum of (-1)^Tr(a*f(x)) over the field; f is a permutation
iff every such sum vanishes.  Sums are accumulated as machine integers
(each term is +-1), so there is no rounding anywhere.

Character sums use the linearity of the trace: Tr(a*y) = parity(M_a & y)
for a per-a bitmask M_a, which turns each sum into one masked popcount
sweep over the value table.  The PPVERIFY_WORKERS environment variable
caps the thread count for multi-a sweeps (default 1).
"""

from __future__ import annotations

import os
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import blocks
from .field import FieldCtx
from .maps import FieldMap

CHARSUM_ALL_LIMIT_M = 14
DEFAULT_SEED = 1729
DEFAULT_SAMPLES = 128

PERMUTATION = "permutation"
NOT_PERMUTATION = "not-permutation"
PROBABLE = "probable-permutation"


@dataclass(frozen=True)
class PPVerdict:
    """Outcome of a permutation test.

    witness is a colliding input pair for the exhaustive method, or an
    (a, sum) pair with a nonzero character sum; negative verdicts always
    carry one.  checks counts inputs swept or a-values summed.
    """
    verdict: str
    method: str
    checks: int
    witness: tuple[int, int] | None = None

    def __post_init__(self):
        if self.verdict == NOT_PERMUTATION and self.witness is None:
            raise ValueError("negative verdicts must carry a witness")


def worker_count() -> int:
    raw = os.environ.get("PPVERIFY_WORKERS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def is_permutation_exhaustive(f: FieldMap) -> PPVerdict:
    """Sweep all inputs in order; permutation iff no output collides.

    On a collision the witness is the first colliding pair in
    enumeration order: the least x2 whose value already appeared,
    paired with that value's first preimage.
    """
    ctx = f.ctx
    seen = np.zeros(ctx.order, dtype=bool)
    clean = True
    for xs, ys in f.value_chunks():
        if seen[ys].any() or np.unique(ys).size != ys.size:
            clean = False
            break
        seen[ys] = True
    if clean:
        return PPVerdict(PERMUTATION, "exhaustive", ctx.order)
    first: dict[int, int] = {}
    for x in ctx.elements():
        y = f(x)
        if y in first:
            return PPVerdict(NOT_PERMUTATION, "exhaustive", x + 1, witness=(first[y], x))
        first[y] = x
    raise AssertionError("collision vanished on rescan; map is not deterministic")


def char_sum(f: FieldMap, a: int) -> int:
    """Exact integer sum of (-1)^Tr(a*f(x)) over the whole field."""
    return _char_sums(f, [a])[0]


def _char_sums(f: FieldMap, a_values, workers: int | None = None) -> list[int]:
    """Character sums for many a at once, one masked sweep per a."""
    ctx = f.ctx
    masks = [ctx.trace_mask(a) for a in a_values]
    odd = np.zeros(len(masks), dtype=np.int64)
    if workers is None:
        workers = worker_count()
    for _, ys in f.value_chunks():
        if workers > 1 and len(masks) > 1:
            def count(j):
                return int(blocks.parity(ys & masks[j]).sum(dtype=np.int64))
            with ThreadPoolExecutor(max_workers=workers) as pool:
                odd += np.fromiter(pool.map(count, range(len(masks))),
                                   dtype=np.int64, count=len(masks))
        else:
            for j, mask in enumerate(masks):
                odd[j] += int(blocks.parity(ys & mask).sum(dtype=np.int64))
    return [ctx.order - 2 * int(o) for o in odd]


def pp_verdict_charsum(f: FieldMap, mode: str = "all", n: int = DEFAULT_SAMPLES,
                       seed: int = DEFAULT_SEED, allow_large: bool = False) -> PPVerdict:
    """Permutation verdict from character sums.

    mode="all" checks every nonzero a (exact both ways) and is gated at
    m <= 14 unless allow_large is set; mode="sample" checks n seeded
    pseudo-random nonzero a and can only return probable-permutation or
    not-permutation.  The witness is the first a (in check order) with a
    nonzero sum.
    """
    ctx = f.ctx
    if mode == "all":
        if ctx.m > CHARSUM_ALL_LIMIT_M and not allow_large:
            raise ValueError(
                f"mode=all costs 2^m*(2^m-1) trace evaluations; m={ctx.m} exceeds "
                f"{CHARSUM_ALL_LIMIT_M} (pass allow_large to override)")
        a_values = list(range(1, ctx.order))
        clean_verdict = PERMUTATION
    elif mode == "sample":
        rng = random.Random(seed)
        a_values = [rng.randrange(1, ctx.order) for _ in range(n)]
        clean_verdict = PROBABLE
    else:
        raise ValueError(f"unknown mode {mode!r}; expected 'all' or 'sample'")

    batch = 1 << 10
    checked = 0
    for start in range(0, len(a_values), batch):
        part = a_values[start:start + batch]
        sums = _char_sums(f, part)
        for a, s in zip(part, sums):
            checked += 1
            if s != 0:
                return PPVerdict(NOT_PERMUTATION, f"charsum-{mode}", checked, witness=(a, s))
    return PPVerdict(clean_verdict, f"charsum-{mode}", checked)


def shift_check(f: FieldMap, a: int, y: int) -> int | None:
    """The constant bit of Tr(a*f(x+y)) + Tr(a*f(x)) over all x, if constant.

    Returns None when the difference is not constant.  A constant 1
    lets the caller conclude char_sum(f, a) = 0 (shift-difference
    lemma); verify runs cross-check that implication wherever it fires.
    """
    ctx = f.ctx
    mask = ctx.trace_mask(a)
    constant: int | None = None
    for xs, ys in f.value_chunks():
        shifted = f.eval_block(xs ^ y)
        bits = blocks.parity(ys & mask) ^ blocks.parity(shifted & mask)
        lo, hi = int(bits.min()), int(bits.max())
        if lo != hi:
            return None
        if constant is None:
            constant = lo
        elif constant != lo:
            return None
    return constant


def find_case1_witness(ctx: FieldCtx, a: int) -> int:
    """First y in F_{q^k} (enumeration order) with Tr_{q^k/2}(y * rel_trace(a)) = 1.

    Only defined for a with nonzero relative trace; the trace form on
    the subfield is nondegenerate, so a witness always exists.
    """
    t, k = ctx.require_tower()
    d = t * k
    r = ctx.rel_trace(a, d)
    if r == 0:
        raise ValueError(f"a={a:#x} has zero relative trace; it belongs to Case 2")
    for y in ctx.enumerate_subfield(d):
        if ctx.subfield_trace(ctx.mul(y, r), d) == 1:
            return y
    raise AssertionError("nondegenerate trace form yielded no witness")

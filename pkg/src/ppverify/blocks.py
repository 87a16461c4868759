"""Vectorized numpy kernels for full-field sweeps.

Element encodings ride in int64 arrays (products before reduction reach
2m-1 < 48 bits).  Linear maps get split-table lookups built from basis
images; general products use a vectorized shift-and-XOR multiply.  The
scalar paths in `field` stay the reference; tests pin agreement.
"""

from __future__ import annotations

from typing import Callable

import numpy as np

from .field import FieldCtx

# parity of the 16-bit patterns, for popcount-parity of masked values
_P = np.arange(1 << 16, dtype=np.uint16)
_P = _P ^ (_P >> 8)
_P = _P ^ (_P >> 4)
_P = _P ^ (_P >> 2)
_PARITY16 = ((_P ^ (_P >> 1)) & 1).astype(np.uint8)
del _P


def parity(values: np.ndarray) -> np.ndarray:
    """Bit parity of each entry (values < 2^32), as uint8."""
    v = values.astype(np.int64, copy=False)
    return _PARITY16[v & 0xFFFF] ^ _PARITY16[(v >> 16) & 0xFFFF]


def mul_block(ctx: FieldCtx, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Elementwise field product of two encoding arrays."""
    a = a.astype(np.int64, copy=False)
    b = b.astype(np.int64, copy=False)
    m = ctx.m
    acc = np.zeros(np.broadcast(a, b).shape, dtype=np.int64)
    for i in range(m):
        acc ^= ((b >> i) & 1) * (a << i)
    for j in range(2 * m - 2, m - 1, -1):
        acc ^= ((acc >> j) & 1) * (ctx.modulus << (j - m))
    return acc


class LinearTable:
    """Split lookup tables for an F2-linear map on m-bit encodings."""

    def __init__(self, ctx: FieldCtx, fn: Callable[[int], int]):
        m = ctx.m
        self.lo_bits = (m + 1) // 2
        self.lo_mask = (1 << self.lo_bits) - 1
        images = [fn(1 << i) for i in range(m)]
        self.lo = _span_table(images[:self.lo_bits])
        self.hi = _span_table(images[self.lo_bits:])

    def __call__(self, xs: np.ndarray) -> np.ndarray:
        xs = xs.astype(np.int64, copy=False)
        return self.lo[xs & self.lo_mask] ^ self.hi[xs >> self.lo_bits]


def _span_table(images: list[int]) -> np.ndarray:
    table = np.zeros(1 << len(images), dtype=np.int64)
    for i, img in enumerate(images):
        table[1 << i:2 << i] = table[:1 << i] ^ img
    return table


def domain_chunks(ctx: FieldCtx, chunk_bits: int = 18):
    """Yield np.arange chunks covering all 2^m encodings in order."""
    order = ctx.order
    step = min(order, 1 << chunk_bits)
    for start in range(0, order, step):
        yield np.arange(start, min(start + step, order), dtype=np.int64)

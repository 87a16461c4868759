"""Named evaluators from field elements to field elements.

A FieldMap bundles a scalar evaluator with an optional vectorized one;
full 2^m value tables are materialized (and cached) only for m <= 18,
larger domains are swept in chunks on demand.  Determinism contract:
repeated evaluation at the same input yields identical results, and the
scalar and block paths agree everywhere.
"""

from __future__ import annotations

from typing import Callable, Iterator

import numpy as np

from . import blocks
from .field import FieldCtx
from .linearized import LinearizedPoly

TABLE_LIMIT_M = 18


class FieldMap:
    """A named, pure map on GF(2^m) element encodings."""

    def __init__(self, name: str, ctx: FieldCtx, fn: Callable[[int], int],
                 block_fn: Callable[[np.ndarray], np.ndarray] | None = None):
        self.name = name
        self.ctx = ctx
        self._fn = fn
        self._block_fn = block_fn
        self._table: np.ndarray | None = None

    def __call__(self, x: int) -> int:
        return self._fn(x)

    def __repr__(self) -> str:
        return f"FieldMap({self.name!r}, m={self.ctx.m})"

    def eval_block(self, xs: np.ndarray) -> np.ndarray:
        if self._table is not None:
            return self._table[xs]
        if self._block_fn is not None:
            return self._block_fn(xs)
        fn = self._fn
        return np.fromiter((fn(int(x)) for x in xs), dtype=np.int64, count=len(xs))

    def table(self) -> np.ndarray:
        """The full 2^m value table, cached; refuses domains above m=18."""
        if self._table is None:
            if self.ctx.m > TABLE_LIMIT_M:
                raise ValueError(
                    f"m={self.ctx.m} exceeds the table materialization limit "
                    f"{TABLE_LIMIT_M}; sweep value_chunks() instead")
            parts = [self.eval_block(chunk) for chunk in blocks.domain_chunks(self.ctx)]
            self._table = np.concatenate(parts)
            self._table.setflags(write=False)
        return self._table

    def value_chunks(self) -> Iterator[tuple[np.ndarray, np.ndarray]]:
        """Yield (inputs, outputs) chunk pairs covering the whole domain in order."""
        if self.ctx.m <= TABLE_LIMIT_M:
            xs = np.arange(self.ctx.order, dtype=np.int64)
            yield xs, self.table()
            return
        for chunk in blocks.domain_chunks(self.ctx):
            yield chunk, self.eval_block(chunk)

    @classmethod
    def from_table(cls, name: str, ctx: FieldCtx, values) -> "FieldMap":
        """Wrap an explicit value table (length 2^m, entries in range)."""
        table = np.asarray(values, dtype=np.int64)
        if table.shape != (ctx.order,):
            raise ValueError(f"table must have exactly {ctx.order} entries, got {table.shape}")
        if table.size and (table.min() < 0 or table.max() >= ctx.order):
            raise ValueError("table entry out of field range")
        fmap = cls(name, ctx, lambda x: int(table[x]))
        fmap._table = table
        fmap._table.setflags(write=False)
        return fmap


def linearized_map(L: LinearizedPoly, name: str) -> FieldMap:
    """View a linearized polynomial as a FieldMap with a fast block path."""
    table = blocks.LinearTable(L.ctx, L.__call__)
    return FieldMap(name, L.ctx, L.__call__, block_fn=table)


def format_table_lines(fmap: FieldMap) -> Iterator[str]:
    """Hex table exchange format: one `x:gx` line per element, sorted by x."""
    for xs, ys in fmap.value_chunks():
        for x, y in zip(xs, ys):
            yield f"{int(x):x}:{int(y):x}"


def parse_table_file(path: str, ctx: FieldCtx | None = None) -> FieldMap:
    """Read a hex table file back into a FieldMap.

    With no ctx given, the extension degree is inferred from the line
    count (which must be a power of two) and the default modulus is used.
    """
    entries: dict[int, int] = {}
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            try:
                x_str, y_str = line.split(":", 1)
                x, y = int(x_str, 16), int(y_str, 16)
            except ValueError as exc:
                raise ValueError(f"{path}:{lineno}: expected `x:gx` hex pair, got {line!r}") from exc
            if x in entries:
                raise ValueError(f"{path}:{lineno}: duplicate entry for x={x:#x}")
            entries[x] = y
    count = len(entries)
    if ctx is None:
        m = count.bit_length() - 1
        if count != 1 << m or m < 1:
            raise ValueError(f"{path}: entry count {count} is not a power of two >= 2")
        ctx = FieldCtx(m)
    if count != ctx.order:
        raise ValueError(f"{path}: expected {ctx.order} entries for m={ctx.m}, got {count}")
    if set(entries) != set(range(count)):
        missing = next(x for x in range(count) if x not in entries)
        raise ValueError(f"{path}: missing entry for x={missing:#x}")
    values = [entries[x] for x in range(count)]
    if any(v >> ctx.m for v in values) or min(values) < 0:
        bad = next(x for x in range(count) if values[x] >> ctx.m or values[x] < 0)
        raise ValueError(f"{path}: value {values[bad]:#x} at x={bad:#x} outside GF(2^{ctx.m})")
    return FieldMap.from_table(path, ctx, values)

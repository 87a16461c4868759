"""Linear algebra over GF(2) on bitmask-encoded vectors.

A linear map on m-bit values is handed around as its list of columns:
column i is the image of the basis vector 1 << i, itself an int bitmask.
Everything here is exact and deterministic; m stays small (<= 24), so a
reduced-row-echelon dict is all the machinery needed.
"""

from __future__ import annotations

from typing import Callable, Sequence


def columns_of_map(m: int, fn: Callable[[int], int]) -> list[int]:
    """Columns [fn(1), fn(2), fn(4), ...] of a linear map on m bits."""
    return [fn(1 << i) for i in range(m)]


def _rref(cols: Sequence[int]) -> tuple[dict[int, tuple[int, int]], list[int]]:
    """Reduced row echelon form of the column set.

    Returns (pivots, kernel): pivots maps a pivot bit to an
    (image, preimage) pair where no image contains another pivot's bit,
    and kernel is a basis of the null space as input-space bitmasks.
    """
    pivots: dict[int, tuple[int, int]] = {}
    kernel: list[int] = []
    for i, col in enumerate(cols):
        v, pre = col, 1 << i
        for bit, (img, p) in pivots.items():
            if (v >> bit) & 1:
                v ^= img
                pre ^= p
        if v == 0:
            kernel.append(pre)
            continue
        b = v.bit_length() - 1
        for bit, (img, p) in list(pivots.items()):
            if (img >> b) & 1:
                pivots[bit] = (img ^ v, p ^ pre)
        pivots[b] = (v, pre)
    return pivots, kernel


def kernel_image(cols: Sequence[int]) -> tuple[list[int], list[int]]:
    """Kernel basis (input space) and image basis (output space)."""
    pivots, kernel = _rref(cols)
    image = [img for img, _ in pivots.values()]
    return kernel, image


def solve(cols: Sequence[int], target: int) -> int | None:
    """One input vector mapping to target, or None if target is not reachable."""
    pivots, _ = _rref(cols)
    v, pre = target, 0
    for bit, (img, p) in pivots.items():
        if (v >> bit) & 1:
            v ^= img
            pre ^= p
    return pre if v == 0 else None


def span(basis: Sequence[int]) -> list[int]:
    """All XOR combinations of the basis, sorted ascending."""
    out = [0]
    for b in basis:
        out += [v ^ b for v in out]
    return sorted(out)

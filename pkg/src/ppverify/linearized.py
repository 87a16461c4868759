"""2-linearized polynomials: sums of c_i * x^(2^i) acting on GF(2^m).

Coefficient vectors always have length exactly m (exponents reduced
mod m, valid because x^(2^m) = x on the field), so reduced polynomials
are in bijection with the F2-linear maps they induce; coefficient
equality is functional equality.  q-linearized polynomials embed by
placing coefficients at stride t when q = 2^t.
"""

from __future__ import annotations

import re
from typing import Iterable

from . import gf2linalg
from .field import FieldCtx


class LinearizedPoly:
    """Immutable coefficient vector of a 2-linearized polynomial."""

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx: FieldCtx, coeffs: Iterable[int]):
        coeffs = tuple(coeffs)
        if len(coeffs) != ctx.m:
            raise ValueError(f"need exactly m={ctx.m} coefficients, got {len(coeffs)}")
        if any(c >> ctx.m for c in coeffs):
            raise ValueError("coefficient out of field range")
        object.__setattr__(self, "ctx", ctx)
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, name, value):
        raise AttributeError("LinearizedPoly is immutable")

    # -- constructors ---------------------------------------------------------

    @classmethod
    def zero(cls, ctx: FieldCtx) -> "LinearizedPoly":
        return cls(ctx, [0] * ctx.m)

    @classmethod
    def identity(cls, ctx: FieldCtx) -> "LinearizedPoly":
        return cls.frobenius_power(ctx, 0)

    @classmethod
    def frobenius_power(cls, ctx: FieldCtx, e: int) -> "LinearizedPoly":
        """The map x -> x^(2^e): single coefficient 1 at index e mod m."""
        coeffs = [0] * ctx.m
        coeffs[e % ctx.m] = 1
        return cls(ctx, coeffs)

    @classmethod
    def from_pairs(cls, ctx: FieldCtx, pairs: Iterable[tuple[int, int]]) -> "LinearizedPoly":
        """Build from (index, coefficient) pairs, XOR-accumulating collisions."""
        coeffs = [0] * ctx.m
        for i, c in pairs:
            coeffs[i % ctx.m] ^= c
        return cls(ctx, coeffs)

    # -- basics ---------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LinearizedPoly):
            return NotImplemented
        return self.ctx == other.ctx and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.ctx, self.coeffs))

    def __add__(self, other: "LinearizedPoly") -> "LinearizedPoly":
        if self.ctx != other.ctx:
            raise ValueError("operands belong to different field contexts")
        return LinearizedPoly(self.ctx, [a ^ b for a, b in zip(self.coeffs, other.coeffs)])

    def __repr__(self) -> str:
        return f"LinearizedPoly({format_linpoly(self)!r}, m={self.ctx.m})"

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def support(self) -> list[int]:
        """Indices of nonzero coefficients."""
        return [i for i, c in enumerate(self.coeffs) if c]

    # -- evaluation and composition --------------------------------------------

    def __call__(self, x: int) -> int:
        """Sum of c_i * x^(2^i); additive in x."""
        ctx = self.ctx
        acc = 0
        xp = x
        for c in self.coeffs:
            if c:
                acc ^= ctx.mul(c, xp)
            xp = ctx.sqr(xp)
        return acc

    def compose(self, inner: "LinearizedPoly") -> "LinearizedPoly":
        """self after inner: coefficient h picks up A[i] * B[j]^(2^i) for i+j = h mod m."""
        if self.ctx != inner.ctx:
            raise ValueError("operands belong to different field contexts")
        ctx = self.ctx
        coeffs = [0] * ctx.m
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(inner.coeffs):
                if not b:
                    continue
                coeffs[(i + j) % ctx.m] ^= ctx.mul(a, ctx.frobenius(b, i))
        return LinearizedPoly(ctx, coeffs)

    def then_frobenius(self, e: int) -> "LinearizedPoly":
        """Frobenius^e composed after this map, i.e. x -> self(x)^(2^e)."""
        return LinearizedPoly.frobenius_power(self.ctx, e).compose(self)

    # -- linear-algebra views ----------------------------------------------------

    def matrix_columns(self) -> list[int]:
        """Column i is the encoding of the image of the basis element x^i."""
        return gf2linalg.columns_of_map(self.ctx.m, self.__call__)

    def kernel_image(self) -> tuple[list[int], list[int]]:
        """F2 bases of the kernel and the image (dim kernel + dim image = m)."""
        return gf2linalg.kernel_image(self.matrix_columns())


def s_polynomial(ctx: FieldCtx, n_terms: int) -> LinearizedPoly:
    """x + x^q + ... + x^(q^(n_terms-1)) with q = 2^t, as a 2-linearized poly.

    Coefficient 1 lands at index t*i mod m for each of the n_terms terms;
    wrapped collisions XOR-accumulate.
    """
    t, _ = ctx.require_tower()
    if n_terms < 0:
        raise ValueError("n_terms must be non-negative")
    return LinearizedPoly.from_pairs(ctx, (((t * i) % ctx.m, 1) for i in range(n_terms)))


def subfield_permutation_check(L: LinearizedPoly, d: int) -> tuple[bool, str | None]:
    """Whether L maps GF(2^d) into itself bijectively, with a failure reason.

    The reason distinguishes "not subfield-stable" from "not injective"
    and carries a witness element.
    """
    ctx = L.ctx
    seen: dict[int, int] = {}
    for z in ctx.enumerate_subfield(d):
        w = L(z)
        if not ctx.in_subfield(w, d):
            return False, f"not subfield-stable: L({z:#x}) = {w:#x} outside GF(2^{d})"
        if w in seen:
            return False, f"not injective: L({seen[w]:#x}) = L({z:#x}) = {w:#x}"
        seen[w] = z
    return True, None


def permutes(L: LinearizedPoly, d: int) -> bool:
    """True iff L restricted to the subfield GF(2^d) is a permutation of it."""
    ok, _ = subfield_permutation_check(L, d)
    return ok


_LIN_RE = re.compile(r"^lin\[(.*)\]$")


def format_linpoly(L: LinearizedPoly) -> str:
    """Textual form lin[i:hexcoef,...] listing nonzero coefficients by index."""
    inside = ",".join(f"{i}:{c:x}" for i, c in enumerate(L.coeffs) if c)
    return f"lin[{inside}]"


def parse_linpoly(ctx: FieldCtx, text: str) -> LinearizedPoly:
    """Inverse of format_linpoly; indices are reduced mod m."""
    match = _LIN_RE.match(text.strip())
    if match is None:
        raise ValueError(f"expected lin[i:hex,...], got {text!r}")
    body = match.group(1).strip()
    pairs = []
    if body:
        for part in body.split(","):
            try:
                idx_str, coef_str = part.split(":", 1)
                pairs.append((int(idx_str), int(coef_str, 16)))
            except ValueError as exc:
                raise ValueError(f"bad linearized term {part!r}") from exc
    return LinearizedPoly.from_pairs(ctx, pairs)

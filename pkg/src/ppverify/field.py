"""Arithmetic in GF(2^m) over a configurable irreducible modulus.

Field elements are plain ints in [0, 2^m): bit i is the coordinate of
x^i in the power basis of the modulus, so addition is XOR and zero/one
are literally 0 and 1.  Multiplication is shift-and-XOR reduction,
which is plenty at desk scale (m <= 24); the heavy sweeps go through
the numpy kernels in `blocks` instead.

A context may carry tower parameters (t, k) with m = 3*t*k and
q = 2^t, giving the subfield ladder F_2 <= F_{q^k} <= F_{q^{3k}} that
the permutation-map constructions live on.  Contexts are immutable
after construction and safe to share across workers.
"""

from __future__ import annotations

from . import binpoly, gf2linalg

MAX_DEGREE = 24


class FieldCtx:
    """GF(2^m) with a fixed irreducible modulus and optional (t, k) tower."""

    def __init__(self, m: int, modulus: int | None = None,
                 tower: tuple[int, int] | None = None):
        if not 1 <= m <= MAX_DEGREE:
            raise ValueError(f"extension degree m={m} out of range 1..{MAX_DEGREE}")
        if modulus is None:
            modulus = binpoly.find_irreducible(m)
        else:
            if binpoly.degree(modulus) != m:
                raise ValueError(
                    f"modulus {binpoly.pretty(modulus)} has degree "
                    f"{binpoly.degree(modulus)}, expected {m}")
            if not binpoly.is_irreducible(modulus):
                factor = binpoly.least_factor(modulus)
                raise ValueError(
                    f"modulus {binpoly.pretty(modulus)} is reducible: "
                    f"divisible by {binpoly.pretty(factor)}")
        if tower is not None:
            t, k = tower
            if t < 1 or k < 1:
                raise ValueError(f"tower parameters must be positive, got (t={t}, k={k})")
            if 3 * t * k != m:
                raise ValueError(f"tower (t={t}, k={k}) needs m = 3*t*k = {3 * t * k}, got m={m}")
        self.m = m
        self.modulus = modulus
        self.tower = tower
        self.order = 1 << m
        self._cache: dict = {}

    @classmethod
    def from_tower(cls, t: int, k: int, modulus: int | None = None) -> "FieldCtx":
        """Context for F_{q^{3k}} with q = 2^t; modulus defaults to the least irreducible."""
        if t < 1 or k < 1:
            raise ValueError(f"tower parameters must be positive, got (t={t}, k={k})")
        m = 3 * t * k
        if m > MAX_DEGREE:
            raise ValueError(f"tower (t={t}, k={k}) needs degree {m} > {MAX_DEGREE}")
        return cls(m, modulus, tower=(t, k))

    # -- identity / hashing -------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FieldCtx):
            return NotImplemented
        return (self.m, self.modulus, self.tower) == (other.m, other.modulus, other.tower)

    def __hash__(self) -> int:
        return hash((self.m, self.modulus, self.tower))

    def __repr__(self) -> str:
        tow = f", tower=(t={self.tower[0]}, k={self.tower[1]})" if self.tower else ""
        return f"FieldCtx(GF(2^{self.m}), modulus={binpoly.pretty(self.modulus)}{tow})"

    @property
    def t(self) -> int:
        return self.require_tower()[0]

    @property
    def k(self) -> int:
        return self.require_tower()[1]

    @property
    def q(self) -> int:
        """Base power q = 2^t of the tower."""
        return 1 << self.t

    def require_tower(self) -> tuple[int, int]:
        if self.tower is None:
            raise ValueError("operation needs tower parameters (t, k); construct via from_tower")
        return self.tower

    def elements(self) -> range:
        """All 2^m element encodings in ascending order."""
        return range(self.order)

    # -- arithmetic ---------------------------------------------------------

    def add(self, a: int, b: int) -> int:
        return a ^ b

    def mul(self, a: int, b: int) -> int:
        acc = 0
        mod = self.modulus
        top = 1 << self.m
        while b:
            if b & 1:
                acc ^= a
            a <<= 1
            if a & top:
                a ^= mod
            b >>= 1
        return acc

    def sqr(self, a: int) -> int:
        return self.mul(a, a)

    def mul_by_x(self, a: int) -> int:
        """Multiply by the basis generator x (one shift-reduce step)."""
        a <<= 1
        if a >> self.m:
            a ^= self.modulus
        return a

    def pow(self, a: int, e: int) -> int:
        """a^e for e >= 0, by square and multiply (0^0 = 1)."""
        if e < 0:
            raise ValueError("negative exponent; use inv and a positive power")
        result = 1
        while e:
            if e & 1:
                result = self.mul(result, a)
            a = self.sqr(a)
            e >>= 1
        return result

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no multiplicative inverse")
        return self.pow(a, self.order - 2)

    def frobenius(self, a: int, i: int) -> int:
        """a^(2^i) by repeated squaring; i is reduced mod m."""
        for _ in range(i % self.m):
            a = self.sqr(a)
        return a

    # -- traces and subfields -----------------------------------------------

    def abs_trace(self, a: int) -> int:
        """Absolute trace onto GF(2): sum of a^(2^i) for i < m, as a bit."""
        acc = 0
        v = a
        for _ in range(self.m):
            acc ^= v
            v = self.sqr(v)
        assert acc in (0, 1)
        return acc

    def rel_trace(self, a: int, d: int) -> int:
        """Trace onto the subfield GF(2^d): sum of a^(2^(d*i)) for i < m/d."""
        self._check_subfield_degree(d)
        acc = 0
        v = a
        for _ in range(self.m // d):
            acc ^= v
            v = self.frobenius(v, d)
        return acc

    def subfield_trace(self, z: int, d: int) -> int:
        """Trace of z from GF(2^d) down to GF(2); z must lie in GF(2^d)."""
        self._check_subfield_degree(d)
        if self.frobenius(z, d) != z:
            raise ValueError(f"element {z:#x} is not in the subfield GF(2^{d})")
        acc = 0
        v = z
        for _ in range(d):
            acc ^= v
            v = self.sqr(v)
        assert acc in (0, 1)
        return acc

    def in_subfield(self, a: int, d: int) -> bool:
        self._check_subfield_degree(d)
        return self.frobenius(a, d) == a

    def enumerate_subfield(self, d: int) -> list[int]:
        """The 2^d elements fixed by x -> x^(2^d), ascending by encoding."""
        self._check_subfield_degree(d)
        key = ("subfield", d)
        if key not in self._cache:
            cols = gf2linalg.columns_of_map(self.m, lambda v: self.frobenius(v, d) ^ v)
            kernel, _ = gf2linalg.kernel_image(cols)
            assert len(kernel) == d
            self._cache[key] = gf2linalg.span(kernel)
        return list(self._cache[key])

    def trace_mask(self, a: int) -> int:
        """Bitmask M with Tr(a*y) = parity(M & y); the fast path for character sums."""
        key = "trace_row"
        if key not in self._cache:
            row = 0
            for i in range(self.m):
                row |= self.abs_trace(1 << i) << i
            self._cache[key] = row
        row = self._cache[key]
        mask = 0
        ax = a
        for i in range(self.m):
            if (row & ax).bit_count() & 1:
                mask |= 1 << i
            ax = self.mul_by_x(ax)
        return mask

    def _check_subfield_degree(self, d: int) -> None:
        if d < 1 or self.m % d != 0:
            raise ValueError(f"subfield degree {d} does not divide m={self.m}")


def load_modulus_file(path: str) -> dict[int, int]:
    """Parse a modulus override file: one `m:hex` entry per line.

    Blank lines and lines starting with '#' are ignored.  Values are
    validated lazily by FieldCtx when actually used.
    """
    table: dict[int, int] = {}
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            try:
                m_str, hex_str = line.split(":", 1)
                m = int(m_str)
                modulus = int(hex_str, 16)
            except ValueError as exc:
                raise ValueError(f"{path}:{lineno}: expected `m:hex`, got {line!r}") from exc
            table[m] = modulus
    return table

"""Independent brute-force oracles the tests check the fast paths against.

Everything here prefers the dumbest correct algorithm: trial division,
exhaustive filters, definitional sums.  Deliberately disjoint from the
implementation's Frobenius/gcd irreducibility test, kernel-basis
subfield enumeration, and masked character sums.
"""

from ppverify import binpoly


def trial_division_irreducible(f: int) -> bool:
    """No divisor of degree 1..deg(f)//2, by dividing by every candidate."""
    n = binpoly.degree(f)
    if n < 1:
        return False
    for d in range(2, 1 << (n // 2 + 1)):
        if binpoly.mod(f, d) == 0:
            return False
    return True


def least_irreducible_by_trial(m: int) -> int:
    for cand in range(1 << m, 1 << (m + 1)):
        if trial_division_irreducible(cand):
            return cand
    raise AssertionError


def common_divisors(f: int, g: int, max_degree: int = 8) -> list[int]:
    """All monic common divisors up to max_degree, by enumeration."""
    out = []
    for d in range(1, 1 << (max_degree + 1)):
        if (f == 0 or binpoly.mod(f, d) == 0) and (g == 0 or binpoly.mod(g, d) == 0):
            out.append(d)
    return out


def mul_via_polymod(ctx, a: int, b: int) -> int:
    """Field product through an explicit carry-less multiply + long division."""
    return binpoly.mod(binpoly.multiply(a, b), ctx.modulus)


def subfield_by_filter(ctx, d: int) -> list[int]:
    """Exhaustive filter of the frobenius fixed-point condition."""
    return [a for a in ctx.elements() if ctx.frobenius(a, d) == a]


def char_sum_definitional(fmap, a: int) -> int:
    """Sum of (-1)^Tr(a*f(x)) term by term, no masks."""
    ctx = fmap.ctx
    return sum(1 - 2 * ctx.abs_trace(ctx.mul(a, fmap(x))) for x in ctx.elements())


def kernel_by_sweep(L) -> set[int]:
    return {x for x in L.ctx.elements() if L(x) == 0}


def image_by_sweep(L) -> set[int]:
    return {L(x) for x in L.ctx.elements()}

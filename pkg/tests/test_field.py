"""Field contexts, arithmetic, traces and subfields."""

import random

import pytest

from ppverify import FieldCtx, binpoly, load_modulus_file

from reference import mul_via_polymod, subfield_by_filter


def test_tower_context_f64():
    ctx = FieldCtx.from_tower(2, 1)
    assert ctx.m == 6
    assert ctx.q == 4
    assert ctx.order == 64
    assert ctx.modulus == 0x43


def test_tower_context_f8():
    ctx = FieldCtx.from_tower(1, 1)
    assert ctx.m == 3
    assert ctx.q == 2
    assert ctx.order == 8


def test_reducible_modulus_rejected_with_factor_named():
    # x^6+x^2+1 = (x^3+x+1)^2
    with pytest.raises(ValueError, match=r"x\^3 \+ x \+ 1"):
        FieldCtx.from_tower(2, 1, modulus=0b1000101)


def test_wrong_degree_modulus_rejected():
    with pytest.raises(ValueError, match="degree"):
        FieldCtx.from_tower(2, 1, modulus=0b1011)


def test_tower_dimension_bound():
    with pytest.raises(ValueError):
        FieldCtx.from_tower(3, 3)  # m = 27 > 24
    with pytest.raises(ValueError):
        FieldCtx.from_tower(0, 1)


def test_mul_against_long_division():
    # F_8 with modulus x^3+x+1: x * x^2 = x^3 = x+1
    ctx = FieldCtx(3)
    assert ctx.modulus == 0b1011
    assert binpoly.mod(binpoly.multiply(2, 4), ctx.modulus) == 3
    assert ctx.mul(2, 4) == 3


@pytest.mark.parametrize("ctx", [FieldCtx(3), FieldCtx.from_tower(2, 1), FieldCtx(8)],
                         ids=lambda c: f"m{c.m}")
def test_mul_matches_polymod_oracle(ctx):
    rng = random.Random(101)
    for _ in range(300):
        a = rng.randrange(ctx.order)
        b = rng.randrange(ctx.order)
        assert ctx.mul(a, b) == mul_via_polymod(ctx, a, b)


def test_mul_identity_and_frobenius_order():
    ctx = FieldCtx.from_tower(2, 1)
    rng = random.Random(7)
    for _ in range(100):
        a = rng.randrange(ctx.order)
        assert ctx.mul(a, 1) == a
        assert ctx.pow(a, ctx.order) == a  # a^(2^m) = a


@pytest.mark.parametrize("ctx", [FieldCtx.from_tower(2, 1), FieldCtx(4), FieldCtx(11)],
                         ids=lambda c: f"m{c.m}")
def test_field_axioms_random_triples(ctx):
    rng = random.Random(99)
    for _ in range(1000):
        a, b, c = (rng.randrange(ctx.order) for _ in range(3))
        assert ctx.add(a, ctx.add(b, c)) == ctx.add(ctx.add(a, b), c)
        assert ctx.mul(a, ctx.mul(b, c)) == ctx.mul(ctx.mul(a, b), c)
        assert ctx.mul(a, b) == ctx.mul(b, a)
        assert ctx.add(a, b) == ctx.add(b, a)
        assert ctx.mul(a, ctx.add(b, c)) == ctx.add(ctx.mul(a, b), ctx.mul(a, c))
        assert ctx.add(a, a) == 0
        if a:
            assert ctx.mul(a, ctx.inv(a)) == 1


def test_inv_zero_is_an_error():
    with pytest.raises(ZeroDivisionError):
        FieldCtx(4).inv(0)


def test_inverse_exhaustive_small():
    ctx = FieldCtx(5)
    for a in range(1, ctx.order):
        assert ctx.mul(a, ctx.inv(a)) == 1


def test_frobenius_basics():
    ctx = FieldCtx.from_tower(2, 1)
    for a in ctx.elements():
        assert ctx.frobenius(a, 0) == a
        assert ctx.frobenius(a, ctx.m) == a
        assert ctx.frobenius(a, ctx.m + 2) == ctx.frobenius(a, 2)  # index mod m
        a2 = ctx.mul(a, a)
        assert ctx.frobenius(a, 2) == ctx.mul(a2, a2)  # a^4
        assert ctx.frobenius(a, 2) == ctx.pow(a, 4)


def test_pow_conventions():
    ctx = FieldCtx(5)
    assert ctx.pow(0, 0) == 1
    assert ctx.pow(7, 0) == 1
    assert ctx.pow(7, 1) == 7
    with pytest.raises(ValueError):
        ctx.pow(7, -1)


def test_abs_trace_zero_and_omega():
    assert FieldCtx(6).abs_trace(0) == 0
    # F_4, modulus x^2+x+1: omega + omega^2 = omega + (omega+1) = 1
    f4 = FieldCtx(2)
    omega = 2
    assert f4.sqr(omega) == 3
    assert f4.abs_trace(omega) == 1


@pytest.mark.parametrize("m", [2, 4, 6, 9, 12])
def test_abs_trace_balanced_linear_frobenius_invariant(m):
    ctx = FieldCtx(m)
    zeros = sum(1 for a in ctx.elements() if ctx.abs_trace(a) == 0)
    assert zeros == ctx.order // 2
    if m <= 6:
        for a in ctx.elements():
            for b in ctx.elements():
                assert ctx.abs_trace(a ^ b) == ctx.abs_trace(a) ^ ctx.abs_trace(b)
    else:
        rng = random.Random(m)
        for _ in range(500):
            a, b = rng.randrange(ctx.order), rng.randrange(ctx.order)
            assert ctx.abs_trace(a ^ b) == ctx.abs_trace(a) ^ ctx.abs_trace(b)
    for a in ctx.elements():
        assert ctx.abs_trace(ctx.sqr(a)) == ctx.abs_trace(a)


def test_trace_mask_agrees_with_definitional_trace():
    ctx = FieldCtx.from_tower(2, 1)
    for a in (0, 1, 5, 33, 63):
        mask = ctx.trace_mask(a)
        for y in ctx.elements():
            assert (mask & y).bit_count() & 1 == ctx.abs_trace(ctx.mul(a, y))


def test_rel_trace_formula_and_membership():
    ctx = FieldCtx.from_tower(2, 1)
    for a in ctx.elements():
        expected = a ^ ctx.pow(a, 4) ^ ctx.pow(a, 16)
        got = ctx.rel_trace(a, 2)
        assert got == expected
        assert ctx.in_subfield(got, 2)  # x^4 = x
    assert ctx.rel_trace(0, 2) == 0


@pytest.mark.parametrize("ctx,d", [(FieldCtx(6), 1), (FieldCtx(6), 2), (FieldCtx(6), 3),
                                   (FieldCtx(12), 4)], ids=str)
def test_trace_transitivity(ctx, d):
    for a in ctx.elements():
        assert ctx.abs_trace(a) == ctx.subfield_trace(ctx.rel_trace(a, d), d)


@pytest.mark.parametrize("m,d", [(6, 2), (6, 3), (12, 4), (12, 6)])
def test_rel_trace_onto_subfield(m, d):
    ctx = FieldCtx(m)
    image = {ctx.rel_trace(a, d) for a in ctx.elements()}
    assert len(image) == 1 << d


def test_rel_trace_rejects_bad_degree():
    with pytest.raises(ValueError):
        FieldCtx(6).rel_trace(1, 4)


def test_enumerate_subfield_trivial_cases():
    ctx = FieldCtx(6)
    assert ctx.enumerate_subfield(6) == list(ctx.elements())
    assert ctx.enumerate_subfield(1) == [0, 1]


def test_enumerate_subfield_matches_filter_and_is_closed():
    ctx = FieldCtx(6)
    for d in (1, 2, 3):
        got = ctx.enumerate_subfield(d)
        assert got == subfield_by_filter(ctx, d)
        assert len(got) == 1 << d
        elems = set(got)
        for a in got:
            for b in got:
                assert a ^ b in elems
                assert ctx.mul(a, b) in elems


def test_enumerate_subfield_rejects_bad_degree():
    with pytest.raises(ValueError):
        FieldCtx(6).enumerate_subfield(5)


def test_subfield_trace_rejects_outsiders():
    ctx = FieldCtx(6)
    outsider = next(a for a in ctx.elements() if not ctx.in_subfield(a, 2))
    with pytest.raises(ValueError):
        ctx.subfield_trace(outsider, 2)


def test_modulus_file_roundtrip(tmp_path):
    path = tmp_path / "moduli.txt"
    path.write_text("# comment\n6:43\n3:b\n\n12:1009\n")
    table = load_modulus_file(str(path))
    assert table == {6: 0x43, 3: 0xB, 12: 0x1009}
    ctx = FieldCtx.from_tower(2, 1, modulus=table[6])
    assert ctx.modulus == 0x43


def test_modulus_file_bad_line(tmp_path):
    path = tmp_path / "moduli.txt"
    path.write_text("6=43\n")
    with pytest.raises(ValueError, match="moduli.txt:1"):
        load_modulus_file(str(path))

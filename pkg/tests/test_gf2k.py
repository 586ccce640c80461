import numpy as np
import pytest

from hamdet.gf2k import (
    MAX_K,
    _GENERATOR,
    _REDUCTION_POLY,
    element_order,
    find_generator,
    get_field,
)


def test_addition_is_xor(f8):
    assert f8.add(0x5, 0x5) == 0
    assert f8.add(0x3, 0x0) == 0x3
    assert f8.add(0x6, 0x3) == 0x5


def test_mul_examples_k4():
    ctx = get_field(4)
    assert ctx.reduction_poly == 0x13
    assert ctx.mul(0x2, 0x9) == 0x1
    assert ctx.mul(0xB, 0x1) == 0xB
    assert ctx.mul(0x0, 0x7) == 0


def test_inv_examples():
    ctx = get_field(4)
    assert ctx.inv(0x2) == 0x9
    assert ctx.inv(0x1) == 0x1
    with pytest.raises(ZeroDivisionError):
        ctx.inv(0)


def test_pow_examples():
    ctx = get_field(4)
    assert ctx.pow(0x2, 15) == 1
    assert ctx.pow(0xD, 0) == 1
    assert ctx.pow(0x2, 1) == 0x2
    assert ctx.pow(0x2, -1) == 0x9
    with pytest.raises(ZeroDivisionError):
        ctx.pow(0, -2)


def test_find_generator_small():
    assert find_generator(get_field(4)) == 0x2
    assert find_generator(get_field(1)) == 0x1
    g8 = find_generator(get_field(8))
    assert element_order(get_field(8), g8) == 255


def test_reduction_poly_k8_matches_known_minimal():
    ctx = get_field(8)
    # x^8 + x^4 + x^3 + x + 1
    assert ctx.reduction_poly == 0x11B


@pytest.mark.parametrize("k", sorted(_REDUCTION_POLY))
def test_stored_generator_has_full_order(k):
    ctx = get_field(k)
    assert ctx.generator == _GENERATOR[k]
    assert ctx.reduction_poly.bit_length() == k + 1
    assert element_order(ctx, ctx.generator) == ctx.order


@pytest.mark.parametrize("k", [4, 8, 16, 32])
def test_field_axioms_bulk(k, rng):
    ctx = get_field(k)
    size = 1 << k
    trials = 100_000
    a = rng.integers(0, size, trials, dtype=np.uint64)
    b = rng.integers(0, size, trials, dtype=np.uint64)
    c = rng.integers(0, size, trials, dtype=np.uint64)
    mul = ctx.mul_arrays
    # commutativity, associativity, distributivity over xor
    assert np.array_equal(mul(a, b), mul(b, a))
    assert np.array_equal(mul(mul(a, b), c), mul(a, mul(b, c)))
    assert np.array_equal(mul(a, b ^ c), mul(a, b) ^ mul(a, c))
    # every element is its own additive inverse
    assert not (a ^ a).any()
    # multiplicative inverses on a nonzero sample
    nz = a[a != 0][:2000]
    inv = np.array([ctx.inv(int(v)) for v in nz], np.uint64)
    assert np.array_equal(mul(nz, inv), np.ones(len(nz), np.uint64))


@pytest.mark.parametrize("k", list(range(1, 13)))
def test_generator_powers_enumerate_nonzero(k):
    ctx = get_field(k)
    seen = set()
    val = 1
    for _ in range(ctx.order):
        seen.add(val)
        val = ctx.mul(val, ctx.generator)
    assert val == 1  # full cycle
    assert seen == set(range(1, 1 << k))


@pytest.mark.parametrize("k", [4, 8, 16, 20, 32])
def test_scalar_and_vector_ops_agree(k, rng):
    ctx = get_field(k)
    size = 1 << k
    a = rng.integers(0, size, 300, dtype=np.uint64)
    b = rng.integers(0, size, 300, dtype=np.uint64)
    vec = ctx.mul_arrays(a, b)
    for i in range(0, 300, 17):
        assert int(vec[i]) == ctx.mul(int(a[i]), int(b[i]))


def test_k_out_of_range():
    with pytest.raises(ValueError):
        get_field(0)
    with pytest.raises(ValueError):
        get_field(MAX_K + 1)


def test_contexts_are_cached():
    assert get_field(8) is get_field(8)

"""Truth-table representation: evaluation, restriction, transforms."""

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import boolean_functions, reference_table

from ncflab import BooleanFunction, InvalidInputError, index_of, word_at, words
from ncflab.core import full_mask

CASCADE3 = [{1, 2, 3}, {1, 2}, {3}]  # x1*x2*x3 + x1*x2 + x3


def test_word_encoding_is_little_endian_in_x1():
    assert index_of((1, 0, 0)) == 1
    assert index_of((0, 0, 1)) == 4
    assert word_at(5, 3) == (1, 0, 1)
    assert list(words(2)) == [(0, 0), (1, 0), (0, 1), (1, 1)]


def test_eval_cascade_rows():
    f = reference_table(CASCADE3, 3)
    assert f.evaluate((0, 0, 1)) == 1
    assert f.evaluate((1, 1, 0)) == 1
    assert f.evaluate((0, 0, 0)) == 0
    # full value column in product order (x3 varies fastest)
    column = tuple(
        f.evaluate(w) for w in itertools.product((0, 1), repeat=3)
    )
    assert column == (0, 1, 0, 1, 0, 1, 1, 1)


def test_eval_constant_and_arity_mismatch():
    zero = BooleanFunction.constant(2, 0)
    assert all(zero.evaluate(w) == 0 for w in words(2))
    with pytest.raises(InvalidInputError):
        zero.evaluate((0, 1, 0))


def test_hex_round_trip_and_padding():
    f = reference_table([{1, 2, 3}], 3)  # 1 only at (1,1,1)
    assert f.to_hex() == "3:80"
    assert BooleanFunction.from_hex("3:80") == f
    assert BooleanFunction.constant(0, 1).to_hex() == "0:1"
    assert BooleanFunction.from_hex("2:F") == BooleanFunction.constant(2, 1)
    with pytest.raises(InvalidInputError):
        BooleanFunction.from_hex("3:8")  # wrong padding
    with pytest.raises(InvalidInputError):
        BooleanFunction.from_hex("3:G0")
    with pytest.raises(InvalidInputError):
        BooleanFunction.from_hex("80")


def test_restrict_cascade():
    f = reference_table(CASCADE3, 3)
    assert f.restrict(3, 1) == BooleanFunction.constant(2, 1)
    assert f.restrict(3, 0) == reference_table([{1, 2}], 2)
    c = BooleanFunction.constant(3, 1)
    assert c.restrict(2, 0) == BooleanFunction.constant(2, 1)
    with pytest.raises(InvalidInputError):
        f.restrict(4, 0)


@settings(max_examples=100)
@given(boolean_functions(1, 7), st.data())
def test_restrict_commutes_with_eval(f, data):
    i = data.draw(st.integers(1, f.arity))
    a = data.draw(st.integers(0, 1))
    g = f.restrict(i, a)
    for short in words(f.arity - 1):
        padded = short[: i - 1] + (a,) + short[i - 1 :]
        assert g.evaluate(short) == f.evaluate(padded)


def test_transform_identity_and_symmetric_monomial():
    f = reference_table([{1, 2, 3}], 3)
    ident = (1, 2, 3)
    assert f.transform(ident, (0, 0, 0), 0) == f
    assert f.transform((2, 1, 3), (0, 0, 0), 0) == f  # symmetric in x1, x2


def test_transform_negation_example():
    # f = x1*x2*x3 with all inputs and the output negated equals
    # (x1+1)(x2+1)(x3+1) + 1, checked word by word.
    f = reference_table([{1, 2, 3}], 3)
    g = f.transform((1, 2, 3), (1, 1, 1), 1)
    for w in words(3):
        expected = ((w[0] ^ 1) & (w[1] ^ 1) & (w[2] ^ 1)) ^ 1
        assert g.evaluate(w) == expected


@settings(max_examples=100)
@given(boolean_functions(1, 6), st.data())
def test_permute_matches_word_level_definition(f, data):
    n = f.arity
    sigma = tuple(data.draw(st.permutations(list(range(1, n + 1)))))
    g = f.permute_inputs(sigma)
    for w in words(n):
        assert g.evaluate(w) == f.evaluate(tuple(w[sigma[i] - 1] for i in range(n)))


@settings(max_examples=60)
@given(boolean_functions(1, 6), st.data())
def test_transform_is_a_group_action(f, data):
    n = f.arity
    sigma1 = tuple(data.draw(st.permutations(list(range(1, n + 1)))))
    sigma2 = tuple(data.draw(st.permutations(list(range(1, n + 1)))))
    beta1 = tuple(data.draw(st.integers(0, 1)) for _ in range(n))
    beta2 = tuple(data.draw(st.integers(0, 1)) for _ in range(n))
    c1 = data.draw(st.integers(0, 1))
    c2 = data.draw(st.integers(0, 1))

    two_step = f.transform(sigma1, beta1, c1).transform(sigma2, beta2, c2)
    # Composition law: permutations compose as sigma2 then sigma1 at the
    # word level, and the first offset is pulled through sigma2's inverse.
    composed_sigma = tuple(sigma2[sigma1[i] - 1] for i in range(n))
    inverse2 = [0] * n
    for i in range(1, n + 1):
        inverse2[sigma2[i - 1] - 1] = i
    pulled = tuple(beta1[inverse2[j] - 1] for j in range(n))
    combined_beta = tuple(beta2[j] ^ pulled[j] for j in range(n))
    one_step = f.transform(composed_sigma, combined_beta, c1 ^ c2)
    assert two_step == one_step


def test_transform_rejects_non_bijections():
    f = BooleanFunction.constant(3, 0)
    with pytest.raises(InvalidInputError):
        f.permute_inputs((1, 1, 3))
    with pytest.raises(InvalidInputError):
        f.transform((1, 2), (0, 0, 0), 0)


def test_swap_and_flip_primitives():
    f = BooleanFunction.projection(3, 1)
    assert f.swap_inputs(1, 3) == BooleanFunction.projection(3, 3)
    assert f.flip_input(1) == f.complement()
    assert f.flip_input(2) == f


def test_essential_variables():
    f = reference_table([{1, 3}], 3)  # x1*x3, x2 inessential
    assert f.essential_variables() == (1, 3)
    assert not f.is_essential(2)
    assert BooleanFunction.constant(2, 0).essential_variables() == ()


def test_from_values_validation():
    with pytest.raises(InvalidInputError):
        BooleanFunction.from_values([0, 1, 0])
    with pytest.raises(InvalidInputError):
        BooleanFunction.from_values([])
    with pytest.raises(InvalidInputError):
        BooleanFunction(2, 1 << 4)
    assert BooleanFunction.from_values([0, 1]) == BooleanFunction.projection(1, 1)


def test_full_mask_and_values_round_trip():
    f = BooleanFunction(2, 0b0110)
    assert f.values() == (0, 1, 1, 0)
    assert BooleanFunction.from_values(f.values()) == f
    assert full_mask(2) == 0b1111

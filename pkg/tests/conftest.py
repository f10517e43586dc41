"""Shared test helpers: independent oracles and hypothesis strategies."""

from hypothesis import strategies as st

from ncflab import BooleanFunction
from ncflab.core import full_mask, word_at


def reference_anf_value(monomials, word) -> int:
    """Word-level polynomial evaluation, independent of the mask machinery.

    ``monomials`` is an iterable of index collections; XOR of the products.
    """
    acc = 0
    for monomial in monomials:
        prod = 1
        for i in monomial:
            prod &= word[i - 1]
        acc ^= prod
    return acc


def reference_table(monomials, n) -> BooleanFunction:
    """Build a truth table by brute word-by-word evaluation."""
    values = [
        reference_anf_value(monomials, word_at(idx, n)) for idx in range(1 << n)
    ]
    return BooleanFunction.from_values(values)


def boolean_functions(min_arity=0, max_arity=8):
    return st.integers(min_arity, max_arity).flatmap(
        lambda n: st.builds(
            BooleanFunction, st.just(n), st.integers(0, full_mask(n))
        )
    )


def permutations_of(n):
    return st.permutations(list(range(1, n + 1))).map(tuple)

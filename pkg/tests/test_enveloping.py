import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from glcenter.enveloping import (
    act,
    adjoint,
    devirtualize,
    elem_mul,
    elem_scale,
    element_from_json_obj,
    element_to_json_obj,
    filtration_degree,
    format_element,
    gen_degree,
    is_central,
    is_irregular,
    one,
    pbw_key,
    pbw_normal_form,
    random_balanced_word,
    supercommutator,
)
from glcenter.superspace import alpha, beta, const, is_proper, poly_mul


def e(i, j):
    return {((i, j),): Fraction(1)}


def monomial_basket(n, d, max_deg):
    """All monomials in the proper variables (i|j), i <= n, j <= d, of total
    degree up to max_deg; proper variables commute so products are plain."""
    out = [const(1)]
    singles = [{((i, j),): Fraction(1)} for i in range(1, n + 1) for j in range(1, d + 1)]
    layer = [const(1)]
    for _ in range(max_deg):
        layer = [poly_mul(p, s) for p in layer for s in singles]
        out.extend(layer)
    return out


proper_word_strategy = st.lists(
    st.tuples(st.integers(min_value=1, max_value=2), st.integers(min_value=1, max_value=2)),
    max_size=3,
).map(tuple)


def test_gen_degree():
    assert gen_degree((1, 2)) == 0
    assert gen_degree((1, alpha(1))) == 1
    assert gen_degree((beta(1), 1)) == 0
    assert gen_degree((alpha(1), alpha(2))) == 0
    assert gen_degree((alpha(1), beta(1))) == 1


def test_supercommutator_even_pairs():
    assert supercommutator((1, 2), (2, 1)) == {((1, 1),): 1, ((2, 2),): -1}
    assert supercommutator((1, 1), (1, 2)) == {((1, 2),): 1}
    assert supercommutator((1, 2), (3, 4)) == {}
    assert supercommutator((1, alpha(1)), (alpha(1), 2)) == {((1, 2),): 1}


def test_supercommutator_odd_pair_is_anticommutator():
    # both generators odd: the bracket gains a plus on the second term
    got = supercommutator((1, alpha(1)), (alpha(1), 1))
    assert got == {((1, 1),): 1, ((alpha(1), alpha(1)),): 1}


def test_pbw_normal_form_swap():
    got = pbw_normal_form(elem_mul(e(1, 2), e(2, 1)))
    assert got == {((2, 1), (1, 2)): 1, ((1, 1),): 1, ((2, 2),): -1}
    # already ordered words pass through
    ordered = {((2, 1), (1, 1), (1, 2)): Fraction(1)}
    assert pbw_normal_form(ordered) == ordered


def test_pbw_normal_form_rejects_virtual():
    with pytest.raises(ValueError):
        pbw_normal_form({((1, alpha(1)),): Fraction(1)})


def test_pbw_key_blocks():
    assert pbw_key((2, 1)) < pbw_key((1, 1)) < pbw_key((2, 2)) < pbw_key((1, 2))


def test_pbw_words_are_sorted():
    x = elem_mul(elem_mul(e(1, 2), e(2, 2)), e(2, 1))
    for word in pbw_normal_form(x):
        keys = [pbw_key(g) for g in word]
        assert keys == sorted(keys)


@settings(max_examples=60, deadline=None)
@given(proper_word_strategy, proper_word_strategy)
def test_pbw_normal_form_is_multiplicative(w1, w2):
    direct = pbw_normal_form({w1 + w2: Fraction(1)})
    staged = pbw_normal_form(
        elem_mul(pbw_normal_form({w1: Fraction(1)}), pbw_normal_form({w2: Fraction(1)}))
    )
    assert direct == staged


@settings(max_examples=40, deadline=None)
@given(proper_word_strategy)
def test_pbw_normal_form_preserves_action(word):
    x = {word: Fraction(1)}
    for p in monomial_basket(2, 2, 2):
        assert act(pbw_normal_form(x), p) == act(x, p)


def test_act_polarization_fixtures():
    p = {((2, 1),): Fraction(1)}
    assert act(e(1, 2), p) == {((1, 1),): Fraction(1)}
    assert act(e(1, 1), p) == {}
    assert act(e(2, 2), p) == p
    # rightmost factor acts first
    assert act(elem_mul(e(1, 2), e(2, 1)), {((1, 1),): Fraction(1)}) == {((1, 1),): 1}


def test_act_is_linear_and_composes():
    x = elem_mul(e(1, 2), e(2, 1))
    y = e(2, 2)
    for p in monomial_basket(2, 2, 2):
        assert act(elem_mul(x, y), p) == act(x, act(y, p))
    assert act(elem_scale(x, Fraction(3, 7)), p) == {
        m: Fraction(3, 7) * c for m, c in act(x, p).items()
    }


def test_is_irregular():
    a1 = alpha(1)
    assert is_irregular(((a1, a1),))
    assert is_irregular(((a1, 1), (1, a1)))
    assert not is_irregular(((1, a1), (a1, 1)))
    assert not is_irregular(((1, 2), (2, 1)))
    # annihilation in the same factor as a later creation still counts
    assert is_irregular(((1, a1),))


def test_devirtualize_fixtures():
    a1 = alpha(1)
    # creation then annihilation of alpha contracts to a proper generator
    got = devirtualize({((1, a1), (a1, 2)): Fraction(1)})
    assert got == {((1, 2),): 1}
    # lone annihilator pushes off the end: zero
    assert devirtualize({((1, a1),): Fraction(1)}) == {}
    # lone creator survives: not balanced
    with pytest.raises(ValueError):
        devirtualize({((a1, 1),): Fraction(1)})
    assert devirtualize({((1, 2),): Fraction(1)}) == {((1, 2),): 1}


def test_random_balanced_word_properties():
    for seed in range(8):
        rng = random.Random(seed)
        for _ in range(5):
            word = random_balanced_word(rng, 2, max_len=5)
            assert 2 <= len(word) <= 5
            assert not is_irregular(word)
            created = {}
            annihilated = {}
            virtual_occurrences = 0
            for a, b in word:
                if not is_proper(a):
                    created[a] = created.get(a, 0) + 1
                    virtual_occurrences += 1
                if not is_proper(b):
                    annihilated[b] = annihilated.get(b, 0) + 1
                    virtual_occurrences += 1
            assert created and created == annihilated
            image = devirtualize({word: Fraction(1)})
            # each contraction removes at most two virtual occurrences and
            # shortens the word by one
            bound = len(word) - (virtual_occurrences + 1) // 2
            assert filtration_degree(image) <= bound


def test_devirtualize_matches_virtual_action():
    basket = monomial_basket(2, 2, 2)
    rng = random.Random(3)
    for _ in range(6):
        word = random_balanced_word(rng, 2, max_len=4)
        x = {word: Fraction(1)}
        image = devirtualize(x)
        for p in basket:
            assert act(x, p) == act(image, p)


def test_adjoint_and_centrality():
    assert adjoint((1, 2), {((2, 2),): Fraction(1)}) == {((1, 2),): 1}
    assert adjoint((1, 2), one()) == {}
    with pytest.raises(ValueError):
        adjoint((1, alpha(1)), e(1, 1))
    casimir_degree_one = {((1, 1),): Fraction(1), ((2, 2),): Fraction(1)}
    assert is_central(casimir_degree_one, 2)
    assert not is_central(e(1, 2), 2)
    assert not is_central(e(1, 1), 2)


def test_format_element():
    assert format_element({}) == "0"
    assert format_element(e(1, 2)) == "e[1,2]"
    x = {((1, 1), (2, 2)): Fraction(1), ((2, 1), (1, 2)): Fraction(-1), ((2, 2),): Fraction(1)}
    assert format_element(x) == "e[2,2] + e[1,1]*e[2,2] - e[2,1]*e[1,2]"
    assert format_element(elem_scale(e(1, 1), Fraction(1, 2))) == "1/2*e[1,1]"


def test_element_json_round_trip():
    x = {
        ((1, 2), (alpha(1), 1)): Fraction(-3, 2),
        ((beta(2), beta(2)),): Fraction(5),
        (): Fraction(1, 7),
    }
    obj = element_to_json_obj(x, pbw_canonical=False)
    assert element_from_json_obj(obj) == x
    y = pbw_normal_form(elem_mul(e(1, 2), e(2, 1)))
    assert element_from_json_obj(element_to_json_obj(y, pbw_canonical=True)) == y

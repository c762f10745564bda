import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from dejean_check.words import (
    F,
    U0,
    U1,
    ConstructionError,
    DomainError,
    Morphism,
    apply,
    determinant,
    fixed_point_prefix,
    format_morphism,
    format_word,
    frequency_matrix,
    identity_matrix,
    inverse_mod,
    iterate,
    mat_mul,
    parikh_vector,
    parse_morphism,
    parse_word,
    vec_mat_mul,
)
from oracles import f_power_str, f_str

words4 = st.lists(st.integers(1, 4), max_size=60).map(tuple)

PAPER_MATRIX = ((2, 1, 0, 0), (1, 1, 1, 0), (2, 0, 0, 1), (1, 1, 0, 1))


@pytest.mark.parametrize(
    "word, image",
    [("1", "121"), ("", ""), ("12", "121123"), ("34", "141142")],
)
def test_apply_examples(word, image):
    assert format_word(apply(F, parse_word(word))) == image


def test_apply_rejects_foreign_letter():
    with pytest.raises(DomainError):
        apply(F, (1, 5))


@pytest.mark.parametrize("n", [0, 1, 3, 9, 27, 100, 1000])
def test_fixed_point_prefix_matches_string_iteration(n):
    expected = f_power_str("1", 7)[:n]
    assert format_word(fixed_point_prefix(F, 1, n)) == expected


def test_fixed_point_prefix_frozen_values():
    assert format_word(fixed_point_prefix(F, 1, 3)) == "121"
    assert format_word(fixed_point_prefix(F, 1, 9)) == "121123121"
    assert format_word(fixed_point_prefix(F, 1, 27)) == "121123121121123141121123121"


def test_fixed_point_needs_prolongable_seed():
    for seed in (2, 3, 4, 7):
        with pytest.raises(ConstructionError):
            fixed_point_prefix(F, seed, 5)
    with pytest.raises(ConstructionError):
        fixed_point_prefix(Morphism.identity(2), 1, 5)


@given(st.integers(0, 3000), st.integers(0, 3000))
def test_fixed_point_prefixes_nest(a, b):
    a, b = sorted((a, b))
    assert fixed_point_prefix(F, 1, b)[:a] == fixed_point_prefix(F, 1, a)


@given(st.integers(0, 3000))
def test_fixed_point_is_stable_under_f(n):
    w = fixed_point_prefix(F, 1, n)
    assert apply(F, w)[:n] == w


@given(words4, words4)
def test_morphism_law(u, v):
    assert apply(F, u + v) == apply(F, u) + apply(F, v)


@given(words4)
def test_parikh_vector_of_image(u):
    alphabet = (1, 2, 3, 4)
    assert parikh_vector(apply(F, u), alphabet) == vec_mat_mul(parikh_vector(u, alphabet), frequency_matrix(F))


@given(words4, st.integers(0, 3))
def test_iterate_matches_string_oracle(u, k):
    assert format_word(iterate(F, u, k)) == f_power_str(format_word(u), k)


def test_frequency_matrix_of_f():
    M = frequency_matrix(F)
    assert M == PAPER_MATRIX
    assert all(sum(row) == 3 for row in M)


def test_frequency_matrix_identity():
    assert frequency_matrix(Morphism.identity(4)) == identity_matrix(4)


def test_uniform_width():
    assert F.uniform_width == 3
    assert Morphism({1: (1, 2), 2: (1,)}).uniform_width is None


def test_empty_image_rejected():
    with pytest.raises(DomainError):
        Morphism({1: (1,), 2: ()})


def test_determinant_against_numpy():
    assert determinant(PAPER_MATRIX) == round(np.linalg.det(np.array(PAPER_MATRIX))) == 3
    rng = np.random.default_rng(5)
    for size in range(1, 6):
        A = rng.integers(-3, 4, size=(size, size))
        assert determinant(A.tolist()) == round(np.linalg.det(A))


def test_inverse_mod_examples():
    I4 = identity_matrix(4)
    assert inverse_mod(I4, 4) == I4
    inv = inverse_mod(PAPER_MATRIX, 4)
    assert inv is not None
    assert mat_mul(PAPER_MATRIX, inv, 4) == I4
    assert mat_mul(inv, PAPER_MATRIX, 4) == I4
    assert inverse_mod(((2,),), 4) is None


def test_inverse_mod_errors():
    with pytest.raises(DomainError):
        inverse_mod(((1, 2),), 4)
    with pytest.raises(DomainError):
        inverse_mod(((1,),), 1)


@given(st.lists(st.integers(0, 6), min_size=9, max_size=9), st.integers(2, 12))
def test_inverse_mod_property(entries, modulus):
    M = (tuple(entries[0:3]), tuple(entries[3:6]), tuple(entries[6:9]))
    inv = inverse_mod(M, modulus)
    det = round(np.linalg.det(np.array(M)))
    is_unit = np.gcd(det % modulus, modulus) == 1
    assert (inv is not None) == is_unit
    if inv is not None:
        assert mat_mul(M, inv, modulus) == identity_matrix(3)
        assert mat_mul(inv, M, modulus) == identity_matrix(3)


def test_word_text_format_roundtrip():
    assert parse_word("121\n") == (1, 2, 1)
    assert format_word(U0) == "23141121142"
    assert format_word(U1) == "11421231211231411"
    with pytest.raises(DomainError):
        parse_word("1201")


def test_morphism_text_format():
    text = format_morphism(F)
    assert text == "1:121\n2:123\n3:141\n4:142\n"
    assert parse_morphism(text) == F
    assert parse_morphism("# f\n1:121\n\n2:123\n3:141\n4:142") == F
    with pytest.raises(DomainError):
        parse_morphism("1:121\n1:123")
    with pytest.raises(DomainError):
        parse_morphism("1=121")


def test_string_oracle_agrees_on_images():
    for a in "1234":
        assert format_word(apply(F, parse_word(a))) == f_str(a)

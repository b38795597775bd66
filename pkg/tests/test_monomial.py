import pytest
from hypothesis import given, strategies as st

from snake_qchar.exceptions import DomainError, MonomialParseError
from snake_qchar.lattice import AlgebraType, in_W, simple_root
from snake_qchar.monomial import (Monomial, QCharacter, a_decompose, a_var, beta, format_monomial, in_negative_cone,
                                  is_antidominant, is_dominant, parse_monomial, weight, x_support)

monomials = st.dictionaries(st.tuples(st.integers(1, 4), st.integers(-20, 20)),
                            st.integers(-3, 3).filter(bool), max_size=6).map(Monomial)


def test_parse_and_format():
    m = parse_monomial("Y[1,8]^-1 Y[2,6]")
    assert m.exponent(1, 8) == -1
    assert m.exponent(2, 6) == 1
    assert format_monomial(m) == "Y[2,6] Y[1,8]^-1"
    assert parse_monomial("Y[1,8]^{-1}*Y[2,6]") == m
    assert parse_monomial("1").is_one()


def test_parse_merges_repeated_factors():
    assert parse_monomial("Y[3,1] Y[3,1]") == Monomial.Y(3, 1, 2)
    assert parse_monomial("Y[3,1] Y[3,1]^-1").is_one()


def test_parse_errors_carry_position():
    with pytest.raises(MonomialParseError) as err:
        parse_monomial("Y[1,2] X")
    assert err.value.position == 7
    with pytest.raises(MonomialParseError):
        parse_monomial("")
    with pytest.raises(MonomialParseError):
        parse_monomial("Y[0,2]")


def test_affine_roots_b2(b2):
    assert a_var(b2, 1, 2) == parse_monomial("Y[1,0] Y[2,1]^-1 Y[2,3]^-1 Y[1,4]")
    assert a_var(b2, 2, 2) == parse_monomial("Y[2,1] Y[1,2]^-1 Y[2,3]")


def test_affine_root_weight_is_simple_root():
    for n in range(2, 6):
        algebra = AlgebraType(n)
        for i in algebra.nodes:
            for k in range(-6, 7):
                if in_W(algebra, (i, k)):
                    assert list(weight(a_var(algebra, i, k), algebra)) == list(simple_root(algebra, i))


def test_dominance():
    assert is_dominant(parse_monomial("Y[1,0] Y[2,3]^2"))
    assert not is_dominant(parse_monomial("Y[1,0] Y[2,3]^-1"))
    assert is_antidominant(parse_monomial("Y[1,6]^-1"))


def test_x_support_repeats_points():
    assert x_support(parse_monomial("Y[3,3] Y[3,1]^2")) == [(3, 1), (3, 1), (3, 3)]
    with pytest.raises(DomainError):
        x_support(parse_monomial("Y[3,1]^-1"))


def test_beta_keeps_selected_nodes():
    m = parse_monomial("Y[1,0] Y[2,3]^-1 Y[3,5]")
    assert beta(m, (2, 3)) == parse_monomial("Y[2,3]^-1 Y[3,5]")


def test_a_decompose(b2):
    q = a_var(b2, 1, 2) ** -1 * a_var(b2, 2, 5) ** -2
    assert a_decompose(q, b2) == {(1, 2): -1, (2, 5): -2}
    assert a_decompose(Monomial.Y(1, 0), b2) is None
    assert a_decompose(a_var(b2, 2, 5), b2, nodes=(1,)) is None


def test_negative_cone(b2):
    m_plus = Monomial.Y(2, 1)
    assert in_negative_cone(m_plus / a_var(b2, 2, 2), m_plus, b2)
    assert not in_negative_cone(m_plus * a_var(b2, 2, 2), m_plus, b2)
    assert in_negative_cone(m_plus, m_plus, b2)


def test_qcharacter_product_and_dimension():
    y = Monomial.Y(1, 0)
    character = QCharacter.from_monomials([Monomial.one(), y])
    square = character * character
    assert square.total_dimension == 4
    assert square.multiplicity(y) == 2
    assert len(square) == 3
    assert square.dominant_terms() == sorted([Monomial.one(), y, y * y])


def test_qcharacter_rejects_bad_multiplicities():
    with pytest.raises(DomainError):
        QCharacter({Monomial.Y(1, 0): 0})


def test_qcharacter_json():
    character = QCharacter({parse_monomial("Y[2,1]"): 1, parse_monomial("Y[1,2] Y[2,3]^-1"): 2})
    assert QCharacter.from_json(character.to_json()) == character
    assert "2 * Y[1,2] Y[2,3]^-1" in character.to_text()


@pytest.mark.property_based
@given(monomials, monomials)
def test_monomials_form_a_group(a, b):
    assert (a * b) / b == a
    assert a * a.inverse() == Monomial.one()
    assert a * b == b * a


@pytest.mark.property_based
@given(monomials)
def test_text_form_parses_back(m):
    assert parse_monomial(format_monomial(m)) == m

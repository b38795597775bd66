import pytest

from snake_qchar.lattice import AlgebraType
from snake_qchar.monomial import Monomial, a_var, parse_monomial
from snake_qchar.criteria import i_classes, verify_thin_criteria
from snake_qchar.sl2core import sl2_char
from snake_qchar.snakes import snake_qchar
from snake_qchar.sweep import extended_snakes

SPIN_B2 = ["Y[2,1]", "Y[1,2] Y[2,3]^-1", "Y[2,5] Y[1,6]^-1", "Y[2,7]^-1"]


def monomials(*texts):
    return [parse_monomial(t) for t in texts]


def test_spin_character_passes(b2):
    verdict = verify_thin_criteria(b2, Monomial.Y(2, 1), monomials(*SPIN_B2))
    assert verdict.passed
    assert str(verdict) == 'pass'


def test_computed_characters_pass(b3):
    m_plus = parse_monomial("Y[3,1] Y[3,3]")
    assert verify_thin_criteria(b3, m_plus, snake_qchar(b3, m_plus).support()).passed


def test_missing_lowest_term_breaks_sl2_classes(b2):
    verdict = verify_thin_criteria(b2, Monomial.Y(2, 1), monomials(*SPIN_B2[:3]))
    assert not verdict.passed
    assert verdict.condition == 'iii'
    assert verdict.witness == (parse_monomial("Y[2,5] Y[1,6]^-1"),)
    assert str(verdict).startswith('fail at (iii)')


def test_empty_set_fails_first_criterion(b2):
    verdict = verify_thin_criteria(b2, Monomial.Y(2, 1), [])
    assert verdict.condition == 'i'
    assert verdict.witness == ()


def test_second_dominant_monomial(b2):
    verdict = verify_thin_criteria(b2, Monomial.Y(2, 1), monomials(*SPIN_B2, "Y[1,0]"))
    assert verdict.condition == 'i'
    assert set(verdict.witness) == {Monomial.Y(2, 1), Monomial.Y(1, 0)}


def test_shared_lowering_target(b2):
    top = Monomial.Y(2, 1)
    other = top * a_var(b2, 1, 10) / a_var(b2, 2, 2)
    verdict = verify_thin_criteria(b2, top, [top, other])
    assert verdict.condition == 'ii'
    assert verdict.witness[0] == top / a_var(b2, 2, 2)
    assert set(verdict.witness[1:]) == {top, other}


def test_exclusion_only_uses_lowerings_in_w(b2):
    top = Monomial.Y(2, 1)
    other = top * a_var(b2, 1, 9) / a_var(b2, 2, 3)
    assert verify_thin_criteria(b2, top, [top, other]).condition == 'iii'


def test_verdict_json(b2):
    document = verify_thin_criteria(b2, Monomial.Y(2, 1), []).to_json()
    assert document == {'passed': False, 'condition': 'i', 'detail': document['detail'], 'witness': []}


def test_i_classes_of_spin_character(b2):
    classes = i_classes(b2, monomials(*SPIN_B2), 2)
    assert sorted(len(c) for c in classes) == [2, 2]
    assert len(i_classes(b2, monomials(*SPIN_B2), 1)) == 3


def test_sl2_evaluation_character_passes():
    sl2 = AlgebraType.sl2_mode()
    m_plus = parse_monomial("Y[1,0] Y[1,2]")
    assert verify_thin_criteria(sl2, m_plus, sl2_char(m_plus).support()).passed


def assert_every_deletion_fails(algebra, m_plus):
    support = snake_qchar(algebra, m_plus).support()
    for m in support:
        if m != m_plus:
            assert not verify_thin_criteria(algebra, m_plus, support - {m}).passed, m


@pytest.mark.parametrize('n, text', [(2, "Y[2,1]"), (2, "Y[1,0]"), (2, "Y[2,1] Y[2,3]"), (3, "Y[3,1] Y[3,3]")])
def test_deleting_a_term_fails(n, text):
    assert_every_deletion_fails(AlgebraType(n), parse_monomial(text))


@pytest.mark.slow
@pytest.mark.parametrize('n', [2, 3])
def test_deleting_a_term_fails_on_small_snakes(n):
    for s in extended_snakes(n, 2, 8):
        assert_every_deletion_fails(s.algebra, s.monomial())


@pytest.mark.acceptance
@pytest.mark.parametrize('n', [2, 3])
def test_deleting_a_term_fails_on_the_sweep(n):
    for s in extended_snakes(n, 3, 12):
        assert_every_deletion_fails(s.algebra, s.monomial())

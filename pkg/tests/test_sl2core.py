import itertools

import pytest

from snake_qchar.exceptions import DomainError, NotThinMonomialError
from snake_qchar.monomial import Monomial, QCharacter, parse_monomial
from snake_qchar.sl2core import (QString, eval_char, in_general_position, is_thin_sl2, lowerable_sl2,
                                 qstring_decompose, qstring_monomial, sl2_char)


def sl2(text):
    return parse_monomial(text)


def character(*texts):
    return QCharacter.from_monomials(sl2(t) for t in texts)


def test_qstring_levels():
    s = QString(center=2, length=3)
    assert list(s.exponents) == [0, 2, 4]
    assert (s.low, s.high) == (0, 4)
    assert QString.from_levels(0, 4) == s
    assert qstring_monomial(s) == sl2("Y[1,0] Y[1,2] Y[1,4]")


def test_from_levels_rejects_mismatched_parity():
    with pytest.raises(DomainError):
        QString.from_levels(0, 3)


def test_general_position():
    assert in_general_position(QString(0, 1), QString(4, 1))
    assert in_general_position(QString(2, 3), QString(2, 1))
    assert not in_general_position(QString(0, 1), QString(2, 1))


def test_evaluation_characters():
    assert eval_char(QString(0, 1)) == character("Y[1,0]", "Y[1,2]^-1")
    assert eval_char(QString(1, 2)) == character("Y[1,0] Y[1,2]", "Y[1,0] Y[1,4]^-1",
                                                 "Y[1,2]^-1 Y[1,4]^-1")


def test_decompose_merges_overlapping_strings():
    strings = qstring_decompose(sl2("Y[1,0] Y[1,2]^2 Y[1,4]"))
    assert sorted((s.low, s.high) for s in strings) == [(0, 4), (2, 2)]
    assert qstring_decompose(sl2("Y[1,0] Y[1,4]")) == [QString(0, 1), QString(4, 1)]


def test_decompose_needs_dominant_monomial():
    with pytest.raises(DomainError):
        qstring_decompose(sl2("Y[1,0]^-1"))


def test_thin_examples():
    assert is_thin_sl2(sl2("Y[1,0] Y[1,4]"))
    assert not is_thin_sl2(sl2("Y[1,0]^2"))
    assert not is_thin_sl2(sl2("Y[1,0] Y[1,2]^2 Y[1,4]"))
    assert sl2_char(sl2("Y[1,0] Y[1,2]^2 Y[1,4]")).total_dimension == 8


def test_lowerable():
    assert lowerable_sl2(sl2("Y[1,0]"), 0)
    assert not lowerable_sl2(sl2("Y[1,0] Y[1,2]"), 0)
    assert lowerable_sl2(sl2("Y[1,0] Y[1,2]"), 2)
    with pytest.raises(NotThinMonomialError):
        lowerable_sl2(sl2("Y[1,0]^2"), 0)


def test_trivial_character():
    assert sl2_char(Monomial.one()) == character("1")


def test_thin_exactly_when_strings_are_disjoint():
    levels = range(0, 8, 2)
    strings = [QString.from_levels(a, b) for a in levels for b in levels if a <= b]
    for count in range(1, 4):
        for chosen in itertools.combinations_with_replacement(strings, count):
            m = Monomial.one()
            for s in chosen:
                m = m * qstring_monomial(s)
            thin = all(mult == 1 for _, mult in sl2_char(m).items())
            assert thin == is_thin_sl2(m), m

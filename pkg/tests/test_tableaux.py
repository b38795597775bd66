from collections import Counter

import pytest

from snake_qchar.exceptions import DomainError, InputError, InvalidDiagramError
from snake_qchar.monomial import parse_monomial
from snake_qchar.snakes import SnakeSeq, highest_tuple
from snake_qchar.sweep import check_diagram_bijection
from snake_qchar.tableaux import (SkewDiagram, Tableau, alphabet, bottom_variable, box_monomial, check_diagram,
                                  closely_related, diagram_dominant_monomial, diagram_snake, dominant_tableau,
                                  enum_tableaux, format_letter, is_generic, is_tableau, letter_key,
                                  nongeneric_columns, parse_letter, related_generic, related_tableau,
                                  special_columns, tab_monomial, tau, tableau_to_tuple, tuple_to_tableau,
                                  validate_diagram, varsigma)

FIVE_POINT_SNAKE = parse_monomial("Y[2,1] Y[1,14] Y[2,27] Y[2,29] Y[2,35]")


def test_alphabet_order(b2):
    assert alphabet(b2) == [1, 2, 0, -2, -1]
    assert sorted(reversed(alphabet(b2)), key=letter_key) == alphabet(b2)


def test_letter_text():
    assert format_letter(-2) == '2b'
    assert format_letter(0) == '0'
    assert parse_letter('2b') == -2
    assert parse_letter(' 3 ') == 3
    with pytest.raises(InputError):
        parse_letter('x')


def test_box_table_b2(b2):
    assert box_monomial(b2, 1, 0) == parse_monomial("Y[1,0]")
    assert box_monomial(b2, 2, 0) == parse_monomial("Y[2,1] Y[2,3] Y[1,4]^-1")
    assert box_monomial(b2, 0, 0) == parse_monomial("Y[2,1] Y[2,5]^-1")
    assert box_monomial(b2, -2, 0) == parse_monomial("Y[1,2] Y[2,3]^-1 Y[2,5]^-1")
    assert box_monomial(b2, -1, 0) == parse_monomial("Y[1,6]^-1")
    assert box_monomial(b2, 1, 8) == parse_monomial("Y[1,8]")


def test_bottom_variables(b2):
    assert bottom_variable(b2, 2, 0) == (2, 1)
    assert bottom_variable(b2, 0, 4) == (2, 5)
    assert bottom_variable(b2, -2, 0) == (1, 2)
    assert bottom_variable(b2, -1, 0) is None


def test_validation(b2):
    assert validate_diagram(SkewDiagram(b2, ((0, 3), (0, 3)))).valid
    assert validate_diagram(SkewDiagram(b2, ((1, 0),))).invariant == 'columns'
    assert validate_diagram(SkewDiagram(b2, ((0, 0), (1, 1)))).invariant == 'staircase'
    assert validate_diagram(SkewDiagram(b2, ((0, 4), (0, 4)))).invariant == 'super'
    with pytest.raises(InvalidDiagramError) as err:
        check_diagram(SkewDiagram(b2, ((0, 4), (0, 4))))
    assert err.value.invariant == 'super'


def test_generic_check(nongeneric_diagram, reduced_diagram):
    assert nongeneric_columns(nongeneric_diagram) == [1]
    assert not is_generic(nongeneric_diagram)
    assert is_generic(reduced_diagram)
    with pytest.raises(InvalidDiagramError) as err:
        check_diagram(nongeneric_diagram, generic=True)
    assert err.value.invariant == 'generic'
    with pytest.raises(InvalidDiagramError):
        diagram_snake(nongeneric_diagram)


def test_diagram_geometry(nongeneric_diagram, reduced_diagram):
    assert nongeneric_diagram.n_boxes == 16
    assert reduced_diagram.n_boxes == 13
    assert [nongeneric_diagram.overlap(j) for j in (1, 2, 3, 4)] == [4, 3, 2, 0]
    assert (0, 3) in nongeneric_diagram
    assert (1, 3) not in nongeneric_diagram


def test_from_boxes(b2):
    d = SkewDiagram.from_boxes(b2, [(0, 1), (1, 1), (0, 2)])
    assert d.columns == ((0, 1), (0, 0))
    with pytest.raises(InvalidDiagramError):
        SkewDiagram.from_boxes(b2, [(0, 1), (2, 1)])
    with pytest.raises(InvalidDiagramError):
        SkewDiagram.from_boxes(b2, [(0, 2)])


def test_diagram_json(reduced_diagram):
    document = reduced_diagram.to_json()
    assert document == {'N': 2, 'columns': [{'j': 1, 'top': -3, 'bottom': 1},
                                            {'j': 2, 'top': -5, 'bottom': -1},
                                            {'j': 3, 'top': -6, 'bottom': -4}]}
    assert SkewDiagram.from_json(document) == reduced_diagram


def test_diagram_json_errors():
    with pytest.raises(InvalidDiagramError):
        SkewDiagram.from_json({'N': 2, 'columns': [{'j': 2, 'top': 0, 'bottom': 1}]})
    with pytest.raises(InputError):
        SkewDiagram.from_json({'N': 2, 'columns': [{'j': 1, 'top': 0}]})


def test_dominant_tableau_of_nongeneric_diagram(nongeneric_diagram):
    top = dominant_tableau(nongeneric_diagram)
    assert top.columns == ((1, 2, 0, 0), (1, 2, -2, -1), (1, 2, 0, 0, -2), (1, 2, 0))
    assert top[(0, 2)] == -2
    assert top.get((1, 3)) is None
    assert is_tableau(nongeneric_diagram, top.columns)
    assert special_columns(nongeneric_diagram) == {3, 4}
    assert diagram_dominant_monomial(nongeneric_diagram) == FIVE_POINT_SNAKE
    assert tab_monomial(top) == FIVE_POINT_SNAKE


def test_reduction_to_generic_diagram(nongeneric_diagram, reduced_diagram):
    assert closely_related(nongeneric_diagram) == reduced_diagram
    assert related_generic(nongeneric_diagram) == reduced_diagram
    top = dominant_tableau(reduced_diagram)
    assert top.columns == ((1, 2, 0, 0, 0), (1, 2, 0, 0, -2), (1, 2, 0))
    assert str(top) == '1 2 0 0 0 | 1 2 0 0 2b | 1 2 0'
    assert diagram_dominant_monomial(reduced_diagram) == FIVE_POINT_SNAKE
    assert tau(dominant_tableau(nongeneric_diagram)) == top
    assert related_tableau(dominant_tableau(nongeneric_diagram)) == top


def test_snake_owners_of_reduced_diagram(reduced_diagram):
    assert special_columns(reduced_diagram) == {2, 3}
    assert [varsigma(reduced_diagram, j) for j in (1, 2, 3)] == [1, 2, 4]
    assert diagram_snake(reduced_diagram) == [(2, 1), (1, 14), (2, 27), (2, 29), (2, 35)]


def test_closely_related_needs_a_nongeneric_column(reduced_diagram):
    with pytest.raises(DomainError):
        closely_related(reduced_diagram)


def test_tableau_rules(b2):
    d = SkewDiagram(b2, ((0, 1), (0, 1)))
    assert is_tableau(d, ((1, 0), (1, -2)))
    assert not is_tableau(d, ((1, 0), (1, 0)))
    assert not is_tableau(d, ((0, 0), (0, 1)))
    assert not is_tableau(d, ((2, 1), (2, 1)))
    assert not is_tableau(d, ((2, 0), (1, -1)))
    assert is_tableau(SkewDiagram(b2, ((0, 1),)), ((0, 0),))


@pytest.mark.parametrize('columns, count, monomial', [
    (((1, 1), (1, 1)), 14, "Y[1,0] Y[1,4]"),
    (((1, 1), (0, 0)), 25, "Y[1,0] Y[1,8]"),
    (((0, 1),), 11, "Y[2,1] Y[2,3]"),
])
def test_small_diagrams(b2, columns, count, monomial):
    d = SkewDiagram(b2, columns)
    assert len(enum_tableaux(d)) == count
    assert diagram_dominant_monomial(d) == parse_monomial(monomial)
    assert check_diagram_bijection(d).passed


def test_highest_tuple_gives_dominant_tableau(b2):
    d = SkewDiagram(b2, ((0, 1),))
    paths = highest_tuple(SnakeSeq(b2, tuple(diagram_snake(d))))
    assert tuple_to_tableau(paths, d) == dominant_tableau(d)
    assert tableau_to_tuple(dominant_tableau(d)) == paths


def test_tuple_owners_must_match(b2):
    d = SkewDiagram(b2, ((0, 1),))
    paths = highest_tuple(SnakeSeq(b2, ((2, 1), (2, 5))))
    with pytest.raises(DomainError):
        tuple_to_tableau(paths, d)


def test_tau_preserves_monomials(b2):
    d = SkewDiagram(b2, ((0, 3), (0, 3)))
    related = closely_related(d)
    assert related == SkewDiagram(b2, ((-1, 3),))
    tableaux = enum_tableaux(d)
    images = [tau(t) for t in tableaux]
    assert all(tab_monomial(image) == tab_monomial(t) for image, t in zip(images, tableaux))
    assert all(isinstance(image, Tableau) and is_tableau(related, image.columns) for image in images)
    assert Counter(tab_monomial(t) for t in tableaux) == Counter(tab_monomial(t) for t in enum_tableaux(related))


@pytest.mark.slow
def test_reduction_keeps_monomial_multiset(nongeneric_diagram, reduced_diagram):
    before = Counter(tab_monomial(t) for t in enum_tableaux(nongeneric_diagram))
    after = Counter(tab_monomial(t) for t in enum_tableaux(reduced_diagram))
    assert before == after


@pytest.mark.slow
def test_bijection_on_reduced_diagram(reduced_diagram):
    assert check_diagram_bijection(reduced_diagram).passed

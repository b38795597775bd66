import pytest

from snake_qchar.pathmodel import highest_path
from snake_qchar.renderers import RENDERERS
from snake_qchar.renderers.base import BaseRenderer
from snake_qchar.tableaux import SkewDiagram, Tableau, dominant_tableau

NONGENERIC_TABLEAU_TEXT = '\n'.join([
    " .  .  .  1",
    " .  .  1  2",
    " .  .  2  0",
    " 1  1  0  .",
    " 2  2  0  .",
    " 0 2b 2b  .",
    " 0 1b  .  .",
]) + '\n'

SPIN_PATH_TEXT = '\n'.join([
    "    0  1  2  3  4  5  6",
    "1 | .  .  .  1- .  .  .",
    "2 | .  .  .  .  1  .  .",
    "3 | .  .  .  .  .  .  .",
    "4 | .  .  .  .  .  .  1",
]) + '\n'


def test_base_renderer_needs_a_subclass(b2):
    with pytest.raises(NotImplementedError):
        BaseRenderer().render_paths(b2, [])


def test_ascii_tableau(nongeneric_diagram):
    assert RENDERERS['ascii']().render_tableau(dominant_tableau(nongeneric_diagram)) == NONGENERIC_TABLEAU_TEXT


def test_ascii_single_path(b2):
    assert RENDERERS['ascii']().render_paths(b2, [highest_path(b2, (2, 1))]) == SPIN_PATH_TEXT


def test_ascii_marks_shared_points(b2):
    p = highest_path(b2, (2, 1))
    text = RENDERERS['ascii']().render_paths(b2, [p, p])
    assert text.count('*') == len(p.points)
    assert '1' not in text.splitlines()[1][4:]


def test_ascii_empty_inputs(b2):
    renderer = RENDERERS['ascii']()
    assert renderer.render_paths(b2, []) == ''
    assert renderer.render_tableau(Tableau(SkewDiagram(b2, ()), ())) == ''


def test_svg_is_deterministic(b2, reduced_diagram):
    renderer = RENDERERS['svg']()
    paths = [highest_path(b2, (2, 1)), highest_path(b2, (2, 3))]
    first = renderer.render_paths(b2, paths)
    assert '<svg' in first
    assert first == renderer.render_paths(b2, paths)
    tableau = dominant_tableau(reduced_diagram)
    assert renderer.render_tableau(tableau) == renderer.render_tableau(tableau)


def test_svg_empty_tuple(b2):
    assert '<svg' in RENDERERS['svg']().render_paths(b2, [])

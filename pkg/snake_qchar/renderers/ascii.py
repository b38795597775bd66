# Copyright (C) 2024 snake-qchar contributors
#
# This program is free software; you can redistribute it and/or modify it
# under the terms of the GNU General Public License version 2 as published
# by the Free Software Foundation.
#
# This program is distributed in the hope that it will be useful, but
# WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE. See the GNU General
# Public License for more details.
#
"""
Plain text drawings: paths on a character grid with one row per level,
tableaux as a grid of letter tokens.
"""
import logging

from ..tableaux import format_letter
from .base import BaseRenderer

logger = logging.getLogger(__name__)

EMPTY = '.'
CLASH = '*'
EPS_MARK = {1: '+', -1: '-', 0: ' '}


class AsciiRenderer(BaseRenderer):
    """
    Paths: cell (x, y) shows the 1-based index of the path through the
    point (modulo 10), followed by '+' or '-' for a point y + eps or y - eps
    on the spin column; points shared by several paths show '*'.
    Tableaux: rows top to bottom, columns left to right, '.' outside the
    diagram.
    """

    def render_paths(self, algebra, paths) -> str:
        paths = list(paths)
        if not paths:
            return ''
        width = 4 * algebra.rank - 1
        cells = {}
        for index, p in enumerate(paths, 1):
            for pt in p.points:
                key = (pt.x, pt.y)
                label = str(index % 10)
                if key in cells and cells[key][0] != label:
                    label = CLASH
                cells[key] = (label, EPS_MARK[pt.eps])
        ys = [y for _, y in cells]
        margin = max(len(str(y)) for y in (min(ys), max(ys)))
        lines = [' ' * (margin + 3) + ' '.join(str(x % 10) + ' ' for x in range(width)).rstrip()]
        for y in range(min(ys), max(ys) + 1):
            row = ''.join((''.join(cells[(x, y)]) if (x, y) in cells else EMPTY + ' ') + ' '
                          for x in range(width))
            lines.append("{} | {}".format(str(y).rjust(margin), row.rstrip()))
        return '\n'.join(lines) + '\n'

    def render_tableau(self, tableau) -> str:
        d = tableau.shape
        if not d.n_columns:
            return ''
        first = min(d.top(j) for j in range(1, d.n_columns + 1))
        last = max(d.bottom(j) for j in range(1, d.n_columns + 1))
        tokens = {(i, j): format_letter(letter) for i, j, letter in tableau.boxes()}
        size = max(len(t) for t in tokens.values())
        lines = []
        for i in range(first, last + 1):
            row = ' '.join(tokens.get((i, j), EMPTY).rjust(size) for j in range(1, d.n_columns + 1))
            lines.append(row.rstrip())
        return '\n'.join(lines) + '\n'

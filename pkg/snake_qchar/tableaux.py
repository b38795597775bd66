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
Super skew diagrams, tableaux over the alphabet 1 < ... < N < 0 < Nbar <
... < 1bar, their monomials, the dominant tableau, the bijection with
non-overlapping path tuples and the reduction of non-generic diagrams.

Boxes are (row, column) with rows growing downwards; column j holds the
rows top(j)..bottom(j), and both bounds are non-increasing in j.
Letters are integers: r for r, 0 for 0 and -r for rbar.
"""
from __future__ import annotations

import itertools
import logging
from collections import defaultdict
from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple, Optional

from .config import MAX_TUPLES
from .exceptions import DomainError, EnumerationLimitError, InputError, InvalidDiagramError
from .lattice import AlgebraType, SpectralPoint
from .monomial import Monomial
from .pathmodel import PathTuple, letter_sets, path_for_monomial, path_from_signs

logger = logging.getLogger(__name__)


# ---------------------------------------------------------------------- #
# Alphabet
# ---------------------------------------------------------------------- #

def alphabet(algebra: AlgebraType) -> list:
    n = algebra.rank
    return list(range(1, n + 1)) + [0] + list(range(-n, 0))


def letter_key(letter: int) -> tuple:
    """Sort key of the alphabetical order."""
    if letter > 0:
        return 0, letter
    if letter == 0:
        return 1, 0
    return 2, letter


def format_letter(letter: int) -> str:
    return str(letter) if letter >= 0 else "{}b".format(-letter)


def parse_letter(token: str) -> int:
    token = token.strip()
    try:
        if token.endswith('b'):
            return -int(token[:-1])
        return int(token)
    except ValueError as err:
        raise InputError("Unknown letter '{}'".format(token)) from err


def box_monomial(algebra: AlgebraType, letter: int, k: int) -> Monomial:
    """Contribution m(letter, k) of one box; Y_{0,.} and Y_{N+1,.} are 1."""
    n = algebra.rank
    exponents = defaultdict(int)

    def put(i, level, e):
        if 1 <= i <= n:
            exponents[(i, level)] += e

    if 1 <= letter < n:
        put(letter - 1, 2 * letter + k, -1)
        put(letter, 2 * letter - 2 + k, 1)
    elif letter == n:
        put(n - 1, 2 * n + k, -1)
        put(n, 2 * n - 3 + k, 1)
        put(n, 2 * n - 1 + k, 1)
    elif letter == 0:
        put(n, 2 * n + 1 + k, -1)
        put(n, 2 * n - 3 + k, 1)
    elif letter == -n:
        put(n, 2 * n - 1 + k, -1)
        put(n, 2 * n + 1 + k, -1)
        put(n - 1, 2 * n - 2 + k, 1)
    else:
        i = -letter
        put(i, 4 * n - 2 * i + k, -1)
        put(i - 1, 4 * n - 2 - 2 * i + k, 1)
    return Monomial(exponents)


def bottom_variable(algebra: AlgebraType, letter: int, k: int) -> Optional[SpectralPoint]:
    """The variable bt(letter, k), or None when it is Y_{0,.} = 1."""
    n = algebra.rank
    if 1 <= letter < n:
        return SpectralPoint(letter, 2 * letter - 2 + k)
    if letter in (n, 0):
        return SpectralPoint(n, 2 * n - 3 + k)
    i = -letter
    if i == 1:
        return None
    return SpectralPoint(i - 1, 4 * n - 2 - 2 * i + k)


# ---------------------------------------------------------------------- #
# Diagrams
# ---------------------------------------------------------------------- #

@dataclass(frozen=True)
class SkewDiagram:
    """Columns 1..J given as (top, bottom) row pairs."""
    algebra: AlgebraType
    columns: tuple

    def __post_init__(self):
        object.__setattr__(self, 'columns', tuple((int(t), int(b)) for t, b in self.columns))

    @property
    def n_columns(self) -> int:
        return len(self.columns)

    def top(self, j: int) -> int:
        return self.columns[j - 1][0]

    def bottom(self, j: int) -> int:
        return self.columns[j - 1][1]

    def length(self, j: int) -> int:
        t, b = self.columns[j - 1]
        return b - t + 1

    def rows(self, j: int) -> range:
        t, b = self.columns[j - 1]
        return range(t, b + 1)

    def __contains__(self, box) -> bool:
        i, j = box
        return 1 <= j <= self.n_columns and self.top(j) <= i <= self.bottom(j)

    def boxes(self) -> list:
        return [(i, j) for j in range(1, self.n_columns + 1) for i in self.rows(j)]

    @property
    def n_boxes(self) -> int:
        return sum(self.length(j) for j in range(1, self.n_columns + 1))

    def overlap(self, j: int) -> int:
        """Number of rows shared by the columns j and j+1."""
        if j >= self.n_columns:
            return 0
        low = max(self.top(j), self.top(j + 1))
        high = min(self.bottom(j), self.bottom(j + 1))
        return max(high - low + 1, 0)

    @classmethod
    def from_boxes(cls, algebra: AlgebraType, boxes) -> SkewDiagram:
        by_column = defaultdict(list)
        for i, j in boxes:
            by_column[j].append(i)
        if sorted(by_column) != list(range(1, len(by_column) + 1)):
            raise InvalidDiagramError('columns', "columns must be 1..J, got {}".format(sorted(by_column)))
        columns = []
        for j in range(1, len(by_column) + 1):
            rows = sorted(by_column[j])
            if rows != list(range(rows[0], rows[-1] + 1)):
                raise InvalidDiagramError('columns', "column {} is not contiguous".format(j))
            columns.append((rows[0], rows[-1]))
        return cls(algebra, tuple(columns))

    def to_json(self) -> dict:
        return {'N': self.algebra.rank,
                'columns': [{'j': j, 'top': t, 'bottom': b} for j, (t, b) in enumerate(self.columns, 1)]}

    @classmethod
    def from_json(cls, document) -> SkewDiagram:
        try:
            algebra = AlgebraType(int(document['N']))
            entries = sorted(document['columns'], key=lambda c: int(c['j']))
            indices = [int(c['j']) for c in entries]
            columns = tuple((int(c['top']), int(c['bottom'])) for c in entries)
        except (KeyError, TypeError, ValueError) as err:
            raise InputError("Malformed diagram document: {}".format(err)) from err
        if indices != list(range(1, len(indices) + 1)):
            raise InvalidDiagramError('columns', "columns must be numbered 1..J, got {}".format(indices))
        return cls(algebra, columns)

    def __str__(self):
        return "SkewDiagram({}: {})".format(self.algebra, ' '.join("({},{})".format(t, b) for t, b in self.columns))


class DiagramVerdict(NamedTuple):
    valid: bool
    invariant: Optional[str] = None
    detail: str = ''


def validate_diagram(d: SkewDiagram) -> DiagramVerdict:
    """Check column shape, the staircase condition and the super condition."""
    n = d.algebra.rank
    for j in range(1, d.n_columns + 1):
        if d.bottom(j) < d.top(j):
            return DiagramVerdict(False, 'columns', "column {} is empty".format(j))
    for j in range(1, d.n_columns):
        if d.top(j + 1) > d.top(j) or d.bottom(j + 1) > d.bottom(j):
            return DiagramVerdict(False, 'staircase', "columns {} and {}".format(j, j + 1))
    for j in range(1, d.n_columns):
        if d.overlap(j) > 2 * n:
            return DiagramVerdict(False, 'super', "columns {} and {} share {} rows".format(j, j + 1, d.overlap(j)))
    return DiagramVerdict(True)


def check_diagram(d: SkewDiagram, generic: bool = False) -> SkewDiagram:
    verdict = validate_diagram(d)
    if not verdict.valid:
        raise InvalidDiagramError(verdict.invariant, verdict.detail)
    if generic and not is_generic(d):
        raise InvalidDiagramError('generic', "non-generic columns {}".format(nongeneric_columns(d)))
    return d


def nongeneric_columns(d: SkewDiagram) -> list:
    """Columns j sharing exactly 2N rows with column j+1."""
    n = d.algebra.rank
    return [j for j in range(1, d.n_columns) if d.overlap(j) == 2 * n]


def is_generic(d: SkewDiagram) -> bool:
    return all(d.overlap(j) < 2 * d.algebra.rank for j in range(1, d.n_columns))


# ---------------------------------------------------------------------- #
# Tableaux
# ---------------------------------------------------------------------- #

@dataclass(frozen=True)
class Tableau:
    """Letters of each column, top to bottom."""
    shape: SkewDiagram
    columns: tuple

    def __post_init__(self):
        object.__setattr__(self, 'columns', tuple(tuple(c) for c in self.columns))

    def __getitem__(self, box) -> int:
        i, j = box
        if box not in self.shape:
            raise KeyError(box)
        return self.columns[j - 1][i - self.shape.top(j)]

    def get(self, box, default=None):
        return self[box] if box in self.shape else default

    def boxes(self):
        """(row, column, letter) triples."""
        return [(i, j, self[(i, j)]) for i, j in self.shape.boxes()]

    def __str__(self):
        return ' | '.join(' '.join(format_letter(a) for a in col) for col in self.columns)


def _vertical_ok(column) -> bool:
    return all(letter_key(a) < letter_key(b) or a == b == 0 for a, b in zip(column, column[1:]))


def _horizontal_ok(d: SkewDiagram, j: int, left, right) -> bool:
    """(H) between column j (left) and j+1 (right)."""
    t_left, t_right = d.top(j), d.top(j + 1)
    for i in range(max(t_left, t_right), min(d.bottom(j), d.bottom(j + 1)) + 1):
        a, b = left[i - t_left], right[i - t_right]
        if letter_key(a) > letter_key(b) or a == b == 0:
            return False
    return True


def is_tableau(d: SkewDiagram, columns) -> bool:
    if len(columns) != d.n_columns:
        return False
    if any(len(col) != d.length(j) for j, col in enumerate(columns, 1)):
        return False
    if not all(_vertical_ok(col) for col in columns):
        return False
    return all(_horizontal_ok(d, j, columns[j - 1], columns[j]) for j in range(1, d.n_columns))


@lru_cache(maxsize=None)
def _column_fillings(algebra: AlgebraType, length: int) -> tuple:
    """Every column of the given length obeying (V): plain letters, zeros, barred letters."""
    n = algebra.rank
    fillings = []
    for plain_count in range(min(n, length) + 1):
        for plain in itertools.combinations(range(1, n + 1), plain_count):
            for bar_count in range(min(n, length - plain_count) + 1):
                for bars in itertools.combinations(range(-n, 0), bar_count):
                    zeros = (0,) * (length - plain_count - bar_count)
                    fillings.append(plain + zeros + bars)
    return tuple(sorted(fillings, key=lambda col: [letter_key(a) for a in col]))


def enum_tableaux(d: SkewDiagram) -> list:
    """
    All tableaux of shape d, column by column.

    :raises InvalidDiagramError: if d is not a super skew diagram
    :raises EnumerationLimitError: beyond QCHAR_MAX_TUPLES tableaux
    """
    check_diagram(d)
    found = []
    chosen = []

    def extend(j):
        if j > d.n_columns:
            found.append(Tableau(d, tuple(chosen)))
            if len(found) > MAX_TUPLES:
                raise EnumerationLimitError("more than QCHAR_MAX_TUPLES={} tableaux".format(MAX_TUPLES))
            return
        for column in _column_fillings(d.algebra, d.length(j)):
            if j > 1 and not _horizontal_ok(d, j - 1, chosen[-1], column):
                continue
            chosen.append(column)
            extend(j + 1)
            chosen.pop()

    extend(1)
    logger.debug("{} tableaux of shape {}".format(len(found), d))
    return found


def tab_monomial(tableau: Tableau) -> Monomial:
    result = Monomial.one()
    algebra = tableau.shape.algebra
    for i, j, letter in tableau.boxes():
        result = result * box_monomial(algebra, letter, 4 * (j - i))
    return result


def dominant_tableau(d: SkewDiagram) -> Tableau:
    """
    Fill each column from the top: plain letters 1, 2, ... as long as
    possible, then zeros while the box to the left is absent or plain,
    then Nbar, (N-1)bar, ... to the bottom.
    """
    check_diagram(d)
    n = d.algebra.rank
    columns = []
    for j in range(1, d.n_columns + 1):
        left = columns[-1] if columns else None

        def left_of(i):
            if left is None or (i, j - 1) not in d:
                return None
            return left[i - d.top(j - 1)]

        column = []
        rows = list(d.rows(j))
        for i in rows:
            letter = len(column) + 1
            neighbour = left_of(i)
            if letter > n or (neighbour is not None and letter_key(neighbour) > letter_key(letter)):
                break
            column.append(letter)
        for i in rows[len(column):]:
            neighbour = left_of(i)
            if neighbour is not None and neighbour <= 0:
                break
            column.append(0)
        bar = -n
        for i in rows[len(column):]:
            neighbour = left_of(i)
            if bar >= 0 or (neighbour is not None and letter_key(neighbour) > letter_key(bar)):
                raise InvalidDiagramError('dominant filling', "column {} cannot be completed".format(j))
            column.append(bar)
            bar += 1
        columns.append(tuple(column))
    return Tableau(d, tuple(columns))


def special_columns(d: SkewDiagram) -> set:
    """Columns j with l_j >= N and no box (s_j + 1, j + 1), where s_j = t_j + N - 1."""
    n = d.algebra.rank
    return {j for j in range(1, d.n_columns + 1)
            if d.length(j) >= n and (d.top(j) + n, j + 1) not in d}


def varsigma(d: SkewDiagram, j: int) -> int:
    return j + sum(1 for k in special_columns(d) if k < j)


def _column_variables(d: SkewDiagram) -> list:
    """Per column: (main variable or None, special variable or None)."""
    n = d.algebra.rank
    top = dominant_tableau(d)
    specials = special_columns(d)
    variables = []
    for j in range(1, d.n_columns + 1):
        b = d.bottom(j)
        main = bottom_variable(d.algebra, top[(b, j)], 4 * (j - b))
        special = None
        if j in specials:
            s = d.top(j) + n - 1
            special = bottom_variable(d.algebra, n, 4 * (j - s) + 2)
        variables.append((main, special))
    return variables


def diagram_dominant_monomial(d: SkewDiagram) -> Monomial:
    result = Monomial.one()
    for main, special in _column_variables(d):
        for point in (main, special):
            if point is not None:
                result = result * Monomial.Y(*point)
    return result


def diagram_snake(d: SkewDiagram) -> list:
    """
    Owners of the path tuple of a generic diagram: the main variable of
    column j at index varsigma_j, its special variable right after.
    """
    check_diagram(d, generic=True)
    owners = []
    for main, special in _column_variables(d):
        owners.append(main)
        if special is not None:
            owners.append(special)
    if any(p is None for p in owners):
        raise InvalidDiagramError('generic', "a column ends in 1bar")
    return owners


# ---------------------------------------------------------------------- #
# Paths and tableaux
# ---------------------------------------------------------------------- #

def tuple_to_tableau(paths, d: SkewDiagram) -> Tableau:
    """
    Fill column j with letters of the paths: for l_j < N the set S of path
    varsigma_j from the top and Sbar from the bottom; for l_j >= N the set
    R of path varsigma_j + 1 from the top and Rbar of path varsigma_j from
    the bottom; zeros in between.
    """
    owners = diagram_snake(d)
    if [tuple(p.owner) for p in paths] != [tuple(o) for o in owners]:
        raise DomainError("path owners {} do not match the snake {} of {}".format(
            [tuple(p.owner) for p in paths], [tuple(o) for o in owners], d))
    n = d.algebra.rank
    sets = [letter_sets(p) for p in paths]
    columns = []
    for j in range(1, d.n_columns + 1):
        t = varsigma(d, j) - 1
        if d.length(j) < n:
            top, bottom = sets[t].S, sets[t].Sbar
        else:
            top, bottom = sets[t + 1].R, sets[t].Rbar
        zeros = d.length(j) - len(top) - len(bottom)
        if zeros < 0:
            raise DomainError("column {} would be filled twice".format(j))
        columns.append(tuple(sorted(top)) + (0,) * zeros + tuple(sorted(-r for r in bottom)))
    if not is_tableau(d, columns):
        raise DomainError("paths do not give a tableau of {}".format(d))
    return Tableau(d, tuple(columns))


def _signs(steps: set, chosen_sign: int, n: int) -> tuple:
    return tuple(chosen_sign if r in steps else -chosen_sign for r in range(1, n + 1))


def tableau_to_tuple(tableau: Tableau) -> PathTuple:
    """Rebuild the path tuple from the letter sets read off the columns."""
    d = tableau.shape
    n = d.algebra.rank
    owners = diagram_snake(d)
    collected = [{} for _ in owners]
    for j, column in enumerate(tableau.columns, 1):
        t = varsigma(d, j) - 1
        plain = {a for a in column if a > 0}
        bars = {-a for a in column if a < 0}
        if d.length(j) < n:
            collected[t]['S'], collected[t]['Sbar'] = plain, bars
        else:
            collected[t + 1]['R'], collected[t]['Rbar'] = plain, bars
    paths = []
    for owner, sets in zip(owners, collected):
        if owner.node == n:
            if 'Rbar' in sets:
                signs = _signs(sets['Rbar'], 1, n)
            elif 'R' in sets:
                signs = _signs(sets['R'], -1, n)
            else:
                raise DomainError("no letters determine the path of ({},{})".format(*owner))
            path = path_from_signs(d.algebra, owner, signs)
        else:
            if 'S' in sets:
                signs = _signs(sets['S'], -1, n)
            elif 'Rbar' in sets:
                signs = _signs(sets['Rbar'], 1, n)
            else:
                raise DomainError("no letters determine the upper half of ({},{})".format(*owner))
            if 'R' in sets:
                bar_signs = _signs(sets['R'], -1, n)
            elif 'Sbar' in sets:
                bar_signs = _signs(sets['Sbar'], 1, n)
            else:
                raise DomainError("no letters determine the lower half of ({},{})".format(*owner))
            path = path_from_signs(d.algebra, owner, signs, bar_signs)
        if path is None or path_for_monomial(d.algebra, owner, path.monomial) != path:
            raise DomainError("letters of {} do not form a path of ({},{})".format(tableau, *owner))
        paths.append(path)
    result = PathTuple(paths)
    if tuple_to_tableau(result, d) != tableau:
        raise DomainError("{} does not come from a non-overlapping tuple".format(tableau))
    return result


# ---------------------------------------------------------------------- #
# Non-generic diagrams
# ---------------------------------------------------------------------- #

def closely_related(d: SkewDiagram) -> SkewDiagram:
    """
    Remove the last non-generic column j': column j' grows upwards by
    l_{j'+1} - 2N + 1 boxes, column j'+1 disappears and every later column
    moves one row up and one column left.
    """
    check_diagram(d)
    found = nongeneric_columns(d)
    if not found:
        raise DomainError("{} is already generic".format(d))
    jp = found[-1]
    n = d.algebra.rank
    columns = list(d.columns[:jp - 1])
    columns.append((d.top(jp) - (d.length(jp + 1) - 2 * n + 1), d.bottom(jp)))
    columns.extend((t - 1, b - 1) for t, b in d.columns[jp + 1:])
    related = SkewDiagram(d.algebra, tuple(columns))
    logger.debug("Reduced {} at column {} to {}".format(d, jp, related))
    return related


def related_generic(d: SkewDiagram) -> SkewDiagram:
    check_diagram(d)
    while not is_generic(d):
        d = closely_related(d)
    return d


def tau(tableau: Tableau) -> Tableau:
    """The monomial-preserving bijection onto the tableaux of the closely related diagram."""
    d = tableau.shape
    n = d.algebra.rank
    related = closely_related(d)
    jp = nongeneric_columns(d)[-1]
    t, b = related.top(jp), related.bottom(jp)
    columns = []
    for j in range(1, related.n_columns + 1):
        column = []
        for i in related.rows(j):
            if j < jp or (j == jp and i > b - n):
                column.append(tableau[(i, j)])
            elif j > jp or (j == jp and i < t + n):
                column.append(tableau[(i + 1, j + 1)])
            else:
                column.append(0)
        columns.append(tuple(column))
    return Tableau(related, tuple(columns))


def related_tableau(tableau: Tableau) -> Tableau:
    while not is_generic(tableau.shape):
        tableau = tau(tableau)
    return tableau

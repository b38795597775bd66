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
Exhaustive families of small extended snakes and super skew diagrams, and
the checks run over them.
"""
from __future__ import annotations

import itertools
import logging
from collections import Counter

from .config import SWEEP_BATCH, SWEEP_LENGTH, SWEEP_WIDTH, WORKERS
from .criteria import Verdict, verify_thin_criteria
from .exceptions import DomainError, InvalidDiagramError
from .lattice import AlgebraType, SpectralPoint, in_X
from .monomial import in_negative_cone
from .snakes import (SnakeSeq, is_antispecial, is_special, is_thin_char, lowest_tuple, non_overlapping_tuples,
                     position_class, snake_qchar)
from .tableaux import (SkewDiagram, diagram_dominant_monomial, diagram_snake, enum_tableaux, tab_monomial,
                       tableau_to_tuple, tuple_to_tableau)
from .utils import parallel_map

logger = logging.getLogger(__name__)


def _points(algebra: AlgebraType, low: int, high: int) -> list:
    return sorted((SpectralPoint(i, k) for k in range(low, high + 1) for i in algebra.nodes
                   if in_X(algebra, (i, k))), key=lambda p: (p.level, p.node))


def extended_snakes(n: int, max_length: int = SWEEP_LENGTH, width: int = SWEEP_WIDTH, snake_only: bool = False):
    """
    Extended snakes of B_n with 1..max_length points whose first level lies in
    {0, 1, 2, 3} and whose levels stay within `width` of the first one.
    Translating all levels by 4 is a symmetry, so nothing is lost.
    """
    algebra = AlgebraType(n)

    def grow(points, window):
        yield SnakeSeq(algebra, tuple(points))
        if len(points) == max_length:
            return
        last = points[-1]
        for p in window:
            if (p.level, p.node) <= (last.level, last.node):
                continue
            c = position_class(algebra, last, p)
            if c.is_snake or (c.is_extended and not snake_only):
                points.append(p)
                yield from grow(points, window)
                points.pop()

    for first in _points(algebra, 0, 3):
        yield from grow([first], _points(algebra, first.level, first.level + width))


def _columns_below(n: int, previous, boxes_left: int, generic: bool):
    top, bottom = previous
    limit = 2 * n - 1 if generic else 2 * n
    for b in range(bottom, top - 1, -1):
        for t in range(min(top, b), b - boxes_left, -1):
            shared = min(b, bottom) - max(t, top) + 1
            if shared <= limit:
                yield t, b


def super_diagrams(n: int, max_columns: int, max_boxes: int, generic: bool = False):
    """
    Super skew diagrams of B_n with b_1 = 0 and at most the given numbers of
    columns and boxes. Adjacent columns share at least one row.
    """
    algebra = AlgebraType(n)

    def grow(columns, used):
        yield SkewDiagram(algebra, tuple(columns))
        if len(columns) == max_columns:
            return
        for column in _columns_below(n, columns[-1], max_boxes - used, generic):
            columns.append(column)
            yield from grow(columns, used + column[1] - column[0] + 1)
            columns.pop()

    for length in range(1, max_boxes + 1):
        yield from grow([(1 - length, 0)], length)


def generic_diagrams(n: int, max_columns: int, max_boxes: int):
    return super_diagrams(n, max_columns, max_boxes, generic=True)


def check_snake_module(algebra: AlgebraType, s: SnakeSeq, workers: int = WORKERS) -> Verdict:
    """
    Run the character-level checks on one extended snake: thin, special,
    anti-special, lowest monomial, negative cone and the thin criteria.
    """
    m_plus = s.monomial()
    character = snake_qchar(algebra, m_plus, workers)
    witness = (m_plus,)
    if not is_thin_char(character):
        return Verdict(False, 'thin', witness, "a monomial has multiplicity > 1")
    if not is_special(character):
        return Verdict(False, 'special', witness, "dominant terms {}".format(character.dominant_terms()))
    if not is_antispecial(character):
        return Verdict(False, 'anti-special', witness, "anti-dominant terms {}".format(character.antidominant_terms()))
    lowest = lowest_tuple(s).monomial()
    if character.antidominant_terms() != [lowest]:
        return Verdict(False, 'lowest', (m_plus, lowest), "anti-dominant term differs from the lowest tuple")
    for m in character:
        if not in_negative_cone(m, m_plus, algebra) or not all(in_X(algebra, p) for p in m):
            return Verdict(False, 'cone', (m_plus, m), "term outside m_plus Q^-")
    return verify_thin_criteria(algebra, m_plus, character.support())


def check_diagram_bijection(d: SkewDiagram) -> Verdict:
    """Compare the tableaux of a generic diagram with the path tuples of its snake."""
    algebra = d.algebra
    m_plus = diagram_dominant_monomial(d)
    s = SnakeSeq(algebra, tuple(diagram_snake(d)))
    tuples = list(non_overlapping_tuples(s))
    tableaux = enum_tableaux(d)
    witness = (m_plus,)
    if len(tuples) != len(tableaux):
        return Verdict(False, 'count', witness, "{} tuples, {} tableaux".format(len(tuples), len(tableaux)))
    from_tuples = Counter(t.monomial() for t in tuples)
    from_tableaux = Counter(tab_monomial(t) for t in tableaux)
    if from_tuples != from_tableaux:
        return Verdict(False, 'monomials', witness, "monomial multisets differ")
    images = set()
    for paths in tuples:
        try:
            tableau = tuple_to_tableau(paths, d)
            inverted = tableau_to_tuple(tableau) == paths
        except DomainError as err:
            return Verdict(False, 'bijection', (m_plus, paths.monomial()), str(err))
        if tab_monomial(tableau) != paths.monomial() or not inverted:
            return Verdict(False, 'bijection', (m_plus, paths.monomial()), "{} is not inverted".format(tableau))
        images.add(tableau)
    if len(images) != len(tableaux):
        return Verdict(False, 'bijection', witness, "tuple to tableau map is not injective")
    return Verdict(True)


def _check_job(job) -> Verdict:
    algebra, s = job
    return check_snake_module(algebra, s, workers=1)


def sweep_snakes(n: int, max_length: int = SWEEP_LENGTH, width: int = SWEEP_WIDTH, workers: int = WORKERS):
    """
    Check every extended snake of the sweep.

    :return: (number of snakes checked, first failing (snake, Verdict) or None)
    """
    algebra = AlgebraType(n)
    count = 0
    snakes = extended_snakes(n, max_length, width)
    while True:
        batch = list(itertools.islice(snakes, max(workers, 1) * SWEEP_BATCH))
        if not batch:
            break
        verdicts = parallel_map(_check_job, [(algebra, s) for s in batch], workers)
        for s, verdict in zip(batch, verdicts):
            count += 1
            if not verdict.passed:
                logger.error("Sweep failed at {}: {}".format(s, verdict))
                return count, (s, verdict)
        logger.debug("Checked {} extended snakes of {} so far".format(count, algebra))
    logger.info("Checked {} extended snakes of {}".format(count, algebra))
    return count, None


def _with_snake(diagrams, skipped: list):
    for d in diagrams:
        try:
            diagram_snake(d)
        except InvalidDiagramError as err:
            logger.debug("Skipping {}: {}".format(d, err))
            skipped.append(d)
            continue
        yield d


def sweep_diagrams(n: int, max_columns: int, max_boxes: int, workers: int = WORKERS):
    """
    Check the tableau bijection on every generic diagram of the sweep.
    Diagrams without a snake are skipped.

    :return: (number of diagrams checked, first failing (diagram, Verdict) or None)
    """
    count = 0
    skipped = []
    diagrams = _with_snake(generic_diagrams(n, max_columns, max_boxes), skipped)
    while True:
        batch = list(itertools.islice(diagrams, max(workers, 1) * SWEEP_BATCH))
        if not batch:
            break
        for d, verdict in zip(batch, parallel_map(check_diagram_bijection, batch, workers)):
            count += 1
            if not verdict.passed:
                logger.error("Bijection failed at {}: {}".format(d, verdict))
                return count, (d, verdict)
    logger.info("Checked {} generic diagrams of B{}, skipped {} without a snake".format(count, n, len(skipped)))
    return count, None

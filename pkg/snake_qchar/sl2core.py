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
q-strings and evaluation characters of U_q(sl2 hat).

A monomial supported on a single node i is read as an sl2 monomial in
q_i = q^step. Strings and lowering roots are built in that node, so the
same code answers both standalone sl2 questions and the restrictions
beta_i of type B monomials.
"""
from __future__ import annotations

import logging
from collections import Counter
from typing import NamedTuple

from .exceptions import DomainError, NotThinMonomialError
from .monomial import Monomial, QCharacter, is_dominant

logger = logging.getLogger(__name__)


class QString(NamedTuple):
    center: int
    length: int
    step: int = 1
    node: int = 1

    @property
    def exponents(self) -> range:
        """Levels b - s(k-1), b - s(k-3), ..., b + s(k-1)."""
        low = self.center - self.step * (self.length - 1)
        return range(low, self.center + self.step * (self.length - 1) + 1, 2 * self.step)

    @property
    def low(self) -> int:
        return self.center - self.step * (self.length - 1)

    @property
    def high(self) -> int:
        return self.center + self.step * (self.length - 1)

    @classmethod
    def from_levels(cls, low: int, high: int, step: int = 1, node: int = 1) -> QString:
        if (high - low) % (2 * step):
            raise DomainError("levels {} and {} do not bound a q-string of step {}".format(low, high, step))
        return cls((low + high) // 2, (high - low) // (2 * step) + 1, step, node)


def _single_node(m: Monomial) -> int:
    nodes = m.nodes()
    if len(nodes) > 1:
        raise DomainError("expected a monomial in one node, got nodes {}".format(nodes))
    return nodes[0] if nodes else 1


def _sl2_root(node: int, level: int, step: int) -> Monomial:
    return Monomial({(node, level + step): 1, (node, level - step): 1})


def qstring_monomial(string: QString) -> Monomial:
    """m_b^{(k)}: the product of Y over the levels of the string."""
    return Monomial({(string.node, level): 1 for level in string.exponents})


def _is_string(levels: set, step: int) -> bool:
    ordered = sorted(levels)
    return all(b - a == 2 * step for a, b in zip(ordered, ordered[1:]))


def in_general_position(first: QString, second: QString) -> bool:
    """True if one string contains the other or their union is not a string."""
    a, b = set(first.exponents), set(second.exponents)
    if a <= b or b <= a:
        return True
    return not _is_string(a | b, first.step)


def qstring_decompose(m: Monomial, step: int = 1) -> list:
    """
    The multiset of q-strings in pairwise general position whose string
    monomials multiply to m.

    Starts from one length-1 string per factor and merges the least pair
    not in general position into its union and intersection until no such
    pair is left.

    :param m: dominant monomial in a single node
    :param step: spacing s of the underlying q_i = q^s
    :return: sorted list of QString
    """
    if not is_dominant(m):
        raise DomainError("q-string decomposition needs a dominant monomial, got {}".format(m))
    node = _single_node(m)
    strings = [QString(p.level, 1, step, node) for p, e in m.items() for _ in range(e)]
    while True:
        strings.sort(key=lambda s: (s.low, s.length))
        pair = next(((x, y) for x in range(len(strings)) for y in range(x + 1, len(strings))
                     if not in_general_position(strings[x], strings[y])), None)
        if pair is None:
            return strings
        first, second = strings[pair[0]], strings[pair[1]]
        a, b = set(first.exponents), set(second.exponents)
        union, meet = a | b, a & b
        merged = [QString.from_levels(min(union), max(union), step, node)]
        if meet:
            merged.append(QString.from_levels(min(meet), max(meet), step, node))
        strings = [s for t, s in enumerate(strings) if t not in pair] + merged


def eval_char(string: QString) -> QCharacter:
    """q-character of the evaluation module with highest monomial m_b^{(k)}."""
    b, k, s = string.center, string.length, string.step
    m = qstring_monomial(string)
    terms = [m]
    for t in range(k):
        m = m / _sl2_root(string.node, b + s * k - 2 * s * t, s)
        terms.append(m)
    return QCharacter.from_monomials(terms)


def sl2_char(m: Monomial, step: int = 1) -> QCharacter:
    """q-character of L(m) as the product of the evaluation characters of its strings."""
    character = QCharacter.from_monomials([Monomial.one()])
    for string in qstring_decompose(m, step):
        character = character * eval_char(string)
    return character


def is_thin_sl2(m: Monomial, step: int = 1) -> bool:
    seen = Counter()
    for string in qstring_decompose(m, step):
        seen.update(string.exponents)
    return all(count == 1 for count in seen.values())


def lowerable_sl2(m: Monomial, b: int, step: int = 1) -> bool:
    """
    Whether m * A_b^{-1} is again a monomial of the thin module containing m.

    :raises NotThinMonomialError: if m cannot occur in a thin sl2 module
    """
    node = _single_node(m)
    for p, e in m.items():
        if abs(e) > 1 or e - m.exponent(node, p.level + 2 * step) == 2:
            raise NotThinMonomialError("not a thin-module monomial: {}".format(m))
    return m.exponent(node, b) == 1 and m.exponent(node, b + 2 * step) == 0

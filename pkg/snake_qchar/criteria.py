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
Sufficient criteria for a finite set of monomials to be the q-character of
a thin special module L(m_plus):

(i)   m_plus is the only dominant monomial of the set,
(ii)  if m A_{i,a}^{-1} is not in the set, m A_{i,a}^{-1} A_{j,b} is not
      in it either, unless (j,b) = (i,a),
(iii) each class m Z[A_{i,a}^{+-1}] of the set restricts under beta_i to
      the character of a simple U_q(sl2 hat)-module.
"""
from __future__ import annotations

import logging
from collections import defaultdict
from typing import NamedTuple, Optional

from .lattice import AlgebraType, in_W
from .monomial import Monomial, QCharacter, _a_monomial, a_decompose, beta, format_monomial, is_dominant, \
    is_j_dominant
from .sl2core import sl2_char

logger = logging.getLogger(__name__)


class Verdict(NamedTuple):
    passed: bool
    condition: Optional[str] = None
    witness: tuple = ()
    detail: str = ''

    def __str__(self):
        if self.passed:
            return 'pass'
        return "fail at ({}): {} [{}]".format(self.condition, self.detail,
                                             '; '.join(format_monomial(m) for m in self.witness))

    def to_json(self) -> dict:
        return {'passed': self.passed, 'condition': self.condition, 'detail': self.detail,
                'witness': [m.to_json() for m in self.witness]}


def _check_dominant(m_plus: Monomial, monomials: set) -> Verdict:
    dominant = sorted(m for m in monomials if is_dominant(m))
    if dominant != [m_plus]:
        return Verdict(False, 'i', tuple(dominant), "dominant monomials must be exactly {}".format(m_plus))
    return Verdict(True)


def _check_exclusion(algebra: AlgebraType, monomials: set) -> Verdict:
    levels = [level for m in monomials for level in m.levels()]
    if not levels:
        return Verdict(True)
    # lowerings A_{i,a} with (i, a) in W, one A-step around the support
    lowerings = [_a_monomial(algebra, i, a) for a in range(min(levels) - 3, max(levels) + 4)
                 for i in algebra.nodes if algebra.sl2 or in_W(algebra, (i, a))]
    reached = defaultdict(list)
    for m in sorted(monomials):
        for a_monomial in lowerings:
            n = m / a_monomial
            if n not in monomials:
                reached[n].append(m)
                if len(reached[n]) > 1:
                    return Verdict(False, 'ii', (n,) + tuple(reached[n]),
                                   "a monomial outside the set is one lowering away from two members")
    return Verdict(True)


def i_classes(algebra: AlgebraType, monomials, i: int) -> list:
    """Partition of the monomials into classes m Z[A_{i,a}^{+-1}], each sorted."""
    far = [j for j in algebra.nodes if abs(j - i) > 1]
    buckets = defaultdict(list)
    for m in sorted(monomials):
        buckets[beta(m, far)].append(m)
    classes = []
    for bucket in buckets.values():
        found = []
        for m in bucket:
            for cls in found:
                if a_decompose(m / cls[0], algebra, nodes=(i,)) is not None:
                    cls.append(m)
                    break
            else:
                found.append([m])
        classes.extend(found)
    return classes


def _check_sl2_classes(algebra: AlgebraType, monomials: set) -> Verdict:
    for i in algebra.nodes:
        step = algebra.r(i)
        for cls in i_classes(algebra, monomials, i):
            restricted = QCharacter.from_monomials(beta(m, (i,)) for m in cls)
            if not any(sl2_char(beta(top, (i,)), step) == restricted
                       for top in cls if is_j_dominant(top, i)):
                return Verdict(False, 'iii', tuple(cls),
                               "class of node {} is not the character of a simple sl2 module".format(i))
    return Verdict(True)


def verify_thin_criteria(algebra: AlgebraType, m_plus: Monomial, monomials) -> Verdict:
    """
    Check the three criteria on a candidate set of monomials.

    :param algebra: type B algebra (or sl2)
    :param m_plus: expected highest monomial
    :param monomials: iterable of distinct Monomial
    :return: Verdict of the first failing criterion, or a passing one
    """
    monomials = set(monomials)
    for verdict in (_check_dominant(m_plus, monomials),
                    _check_exclusion(algebra, monomials),
                    _check_sl2_classes(algebra, monomials)):
        if not verdict.passed:
            logger.debug("Criteria for {} failed: {}".format(m_plus, verdict))
            return verdict
    return Verdict(True)

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
Sparse Laurent monomials in the variables Y_{i,k}, q-characters as
multisets of monomials, the affine roots A_{i,k} and the weight map.

Text form of a monomial: space separated factors ``Y[i,k]`` with an optional
``^e`` (e a nonzero integer), sorted by (k, i); ``1`` is the empty monomial.
"""
from __future__ import annotations

import logging
import re
from collections import Counter, defaultdict

import numpy as np

from .exceptions import DomainError, InputError, MonomialParseError
from .lattice import AlgebraType, SpectralPoint, in_W

logger = logging.getLogger(__name__)


class Monomial:
    """Immutable product of Y_{i,k}^e with nonzero integer exponents."""

    __slots__ = ('_exponents', '_key')

    def __init__(self, exponents=None):
        collected = defaultdict(int)
        if exponents:
            pairs = exponents.items() if hasattr(exponents, 'items') else exponents
            for (i, k), e in pairs:
                collected[(i, k)] += e
        ordered = sorted(((k, i, e) for (i, k), e in collected.items() if e), key=lambda t: (t[0], t[1]))
        self._key = tuple(ordered)
        self._exponents = {SpectralPoint(i, k): e for k, i, e in ordered}

    @classmethod
    def one(cls) -> Monomial:
        return cls()

    @classmethod
    def Y(cls, i: int, k: int, e: int = 1) -> Monomial:
        return cls({(i, k): e})

    def items(self):
        """(SpectralPoint, exponent) pairs sorted by (level, node)."""
        return list(self._exponents.items())

    def __iter__(self):
        return iter(self._exponents)

    def __len__(self):
        return len(self._exponents)

    def is_one(self) -> bool:
        return not self._exponents

    def exponent(self, i: int, k: int) -> int:
        return self._exponents.get((i, k), 0)

    def levels(self):
        return [p.level for p in self._exponents]

    def nodes(self):
        return sorted({p.node for p in self._exponents})

    def __mul__(self, other: Monomial) -> Monomial:
        merged = dict(self._exponents)
        for p, e in other._exponents.items():
            merged[p] = merged.get(p, 0) + e
        return Monomial(merged)

    def __truediv__(self, other: Monomial) -> Monomial:
        return self * other.inverse()

    def __pow__(self, n: int) -> Monomial:
        return Monomial({p: e * n for p, e in self._exponents.items()})

    def inverse(self) -> Monomial:
        return self ** -1

    def __eq__(self, other):
        return isinstance(other, Monomial) and self._key == other._key

    def __lt__(self, other):
        return self._key < other._key

    def __hash__(self):
        return hash(self._key)

    def __getstate__(self):
        return self._key

    def __setstate__(self, state):
        self._key = state
        self._exponents = {SpectralPoint(i, k): e for k, i, e in state}

    def __str__(self):
        return format_monomial(self)

    def __repr__(self):
        return "Monomial('{}')".format(format_monomial(self))

    def to_json(self) -> list:
        return [[p.node, p.level, e] for p, e in self._exponents.items()]

    @classmethod
    def from_json(cls, entries) -> Monomial:
        try:
            return cls({(int(i), int(k)): int(e) for i, k, e in entries})
        except (TypeError, ValueError) as err:
            raise InputError("Malformed monomial entries {}: {}".format(entries, err)) from err


class QCharacter:
    """Finite multiset of monomials with positive multiplicities."""

    def __init__(self, terms=None):
        self._terms = Counter()
        for m, mult in (terms or {}).items():
            if not isinstance(mult, int) or mult < 1:
                raise DomainError("multiplicity of {} must be a positive integer, got {}".format(m, mult))
            self._terms[m] += mult

    @classmethod
    def from_monomials(cls, monomials) -> QCharacter:
        return cls(Counter(monomials))

    def __len__(self):
        return len(self._terms)

    def __iter__(self):
        return iter(sorted(self._terms))

    def __contains__(self, m):
        return m in self._terms

    def __eq__(self, other):
        return isinstance(other, QCharacter) and self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def multiplicity(self, m: Monomial) -> int:
        return self._terms.get(m, 0)

    def items(self):
        return sorted(self._terms.items())

    def support(self) -> frozenset:
        return frozenset(self._terms)

    @property
    def total_dimension(self) -> int:
        return sum(self._terms.values())

    def __add__(self, other: QCharacter) -> QCharacter:
        return QCharacter(self._terms + other._terms)

    def __mul__(self, other: QCharacter) -> QCharacter:
        product = Counter()
        for a, x in self._terms.items():
            for b, y in other._terms.items():
                product[a * b] += x * y
        return QCharacter(product)

    def dominant_terms(self) -> list:
        return sorted(m for m in self._terms if is_dominant(m))

    def antidominant_terms(self) -> list:
        return sorted(m for m in self._terms if is_antidominant(m))

    def __repr__(self):
        return "QCharacter({} terms, dim {})".format(len(self), self.total_dimension)

    def to_json(self) -> dict:
        terms = [{'m': m.to_json(), 'mult': mult} for m, mult in self._terms.items()]
        terms.sort(key=lambda t: t['m'])
        return {'terms': terms}

    @classmethod
    def from_json(cls, document) -> QCharacter:
        try:
            terms = document['terms']
            return cls({Monomial.from_json(t['m']): int(t['mult']) for t in terms})
        except (KeyError, TypeError) as err:
            raise InputError("Malformed q-character document: {}".format(err)) from err

    def to_text(self) -> str:
        lines = []
        for m, mult in sorted(self._terms.items(), key=lambda t: t[0].to_json()):
            lines.append(format_monomial(m) if mult == 1 else "{} * {}".format(mult, format_monomial(m)))
        return '\n'.join(lines)


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return a * b


def _a_monomial(algebra: AlgebraType, i: int, k: int) -> Monomial:
    if algebra.sl2:
        return Monomial({(1, k + 1): 1, (1, k - 1): 1})
    n = algebra.rank
    if i == n:
        return Monomial({(n, k + 1): 1, (n, k - 1): 1, (n - 1, k): -1})
    exponents = {(i, k + 2): 1, (i, k - 2): 1}
    if i > 1:
        exponents[(i - 1, k)] = -1
    if i == n - 1:
        exponents[(n, k + 1)] = -1
        exponents[(n, k - 1)] = -1
    else:
        exponents[(i + 1, k)] = -1
    return Monomial(exponents)


def a_var(algebra: AlgebraType, i: int, k: int) -> Monomial:
    """The affine root A_{i,k} of type B_N (or sl2)."""
    algebra.check_node(i)
    if not in_W(algebra, (i, k)):
        logger.warning("A_{{{},{}}} requested outside W".format(i, k))
    return _a_monomial(algebra, i, k)


def u(m: Monomial, i: int, k: int) -> int:
    return m.exponent(i, k)


def is_dominant(m: Monomial) -> bool:
    return all(e > 0 for _, e in m.items())


def is_antidominant(m: Monomial) -> bool:
    return all(e < 0 for _, e in m.items())


def is_j_dominant(m: Monomial, j: int) -> bool:
    return all(e > 0 for p, e in m.items() if p.node == j)


def weight(m: Monomial, algebra: AlgebraType) -> np.ndarray:
    """Weight in the basis of fundamental weights."""
    coords = np.zeros(algebra.rank, dtype=int)
    for p, e in m.items():
        algebra.check_node(p.node)
        coords[p.node - 1] += e
    return coords


def beta(m: Monomial, nodes) -> Monomial:
    keep = set(nodes)
    return Monomial({p: e for p, e in m.items() if p.node in keep})


def check_monomial(algebra: AlgebraType, m: Monomial) -> Monomial:
    for p in m:
        algebra.check_node(p.node)
    return m


def x_support(m: Monomial) -> list:
    """The ordered sequence X(m) of a dominant monomial, each point repeated by its exponent."""
    if not is_dominant(m):
        raise DomainError("X(m) is defined for dominant monomials, got {}".format(m))
    return [p for p, e in m.items() for _ in range(e)]


def a_decompose(q: Monomial, algebra: AlgebraType, nodes=None):
    """
    Exponents e_{j,l} with q = prod A_{j,l}^{e_{j,l}}, or None.

    The lowest variable of A_{j,l} is Y_{j,l-r_j}, with exponent 1, strictly
    below all its other variables. Peeling the lowest variables of q level by
    level therefore recovers the decomposition, which is unique. With
    `nodes` only A_{i,.} for i in nodes are allowed.

    :param q: monomial to decompose
    :param algebra: algebra type
    :param nodes: optional collection of allowed nodes
    :return: dict (j, l) -> nonzero exponent, or None if q is not in the lattice
    """
    allowed = set(nodes) if nodes is not None else set(algebra.nodes)
    if q.is_one():
        return {}
    top = max(q.levels())
    current = q
    exponents = defaultdict(int)
    while not current.is_one():
        low = min(current.levels())
        if low > top:
            return None
        for p, e in [(p, e) for p, e in current.items() if p.level == low]:
            if p.node not in allowed:
                return None
            point = SpectralPoint(p.node, low + algebra.r(p.node))
            exponents[point] += e
            current = current / (_a_monomial(algebra, *point) ** e)
    return {p: e for p, e in exponents.items() if e}


def in_negative_cone(m: Monomial, m_plus: Monomial, algebra: AlgebraType) -> bool:
    """True iff m = m_plus * prod A_{j,l}^{-1} with every (j, l) in W."""
    exponents = a_decompose(m / m_plus, algebra)
    if exponents is None:
        return False
    return all(e < 0 and in_W(algebra, p) for p, e in exponents.items())


_FACTOR = re.compile(r'Y\[\s*(-?\d+)\s*,\s*(-?\d+)\s*\](?:\^(?:\{\s*(-?\d+)\s*\}|(-?\d+)))?')
_SEPARATOR = re.compile(r'[\s*·]*')


def parse_monomial(text: str) -> Monomial:
    """
    Parse the text form of a monomial.

    :param text: e.g. "Y[1,8]^-1 Y[2,6]" or "1"
    :return: Monomial
    :raises MonomialParseError: with the offending position
    """
    if text.strip() == '1':
        return Monomial.one()
    exponents = defaultdict(int)
    pos = _SEPARATOR.match(text, 0).end()
    if pos == len(text):
        raise MonomialParseError("empty monomial text", pos)
    while pos < len(text):
        match = _FACTOR.match(text, pos)
        if not match:
            raise MonomialParseError("expected a factor 'Y[i,k]' or 'Y[i,k]^e'", pos)
        i, k = int(match.group(1)), int(match.group(2))
        e_text = match.group(3) or match.group(4)
        e = int(e_text) if e_text is not None else 1
        if i < 1:
            raise MonomialParseError("node must be positive, got {}".format(i), pos)
        if e == 0:
            raise MonomialParseError("zero exponent", pos)
        exponents[(i, k)] += e
        pos = _SEPARATOR.match(text, match.end()).end()
    return Monomial(exponents)


def format_monomial(m: Monomial) -> str:
    if m.is_one():
        return '1'
    factors = []
    for p, e in m.items():
        factor = "Y[{},{}]".format(p.node, p.level)
        factors.append(factor if e == 1 else "{}^{}".format(factor, e))
    return ' '.join(factors)

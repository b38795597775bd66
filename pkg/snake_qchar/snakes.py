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
Snake positions, the path-model q-character of extended snake modules,
prime factorization and the tameness classification.
"""
from __future__ import annotations

import enum
import logging
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple, Optional

import numpy as np

from .config import MAX_TUPLES, WORKERS
from .exceptions import DomainError, EnumerationLimitError, NotExtendedSnakeError
from .lattice import AlgebraType, SpectralPoint, in_X
from .monomial import Monomial, QCharacter, is_dominant, x_support
from .pathmodel import (PathTuple, can_lower, enum_paths, highest_path, lower, lowest_path,
                        non_overlapping, strictly_above)
from .sl2core import is_thin_sl2
from .utils import parallel_map

logger = logging.getLogger(__name__)


class Position(enum.Enum):
    NONE = 'None'
    EXTENDED_ONLY = 'ExtendedOnly'
    SNAKE = 'Snake'
    MINIMAL_SNAKE = 'MinimalSnake'


class PositionClass(NamedTuple):
    kind: Position
    shift: Optional[int] = None

    @property
    def is_snake(self) -> bool:
        return self.kind in (Position.SNAKE, Position.MINIMAL_SNAKE)

    @property
    def is_extended(self) -> bool:
        return self.kind is not Position.NONE


class Family(enum.Enum):
    KR = 'KR'
    MINIMAL_AFFINIZATION = 'MinimalAffinization'
    MINIMAL_SNAKE = 'MinimalSnake'
    SNAKE = 'Snake'
    EXTENDED_SNAKE = 'ExtendedSnake'


def _delta(algebra: AlgebraType, *nodes) -> int:
    return sum(1 for i in nodes if i == algebra.rank)


def position_class(algebra: AlgebraType, a, b) -> PositionClass:
    """
    Classify the position of b with respect to a.

    :param algebra: type B algebra
    :param a: (i, k) in X
    :param b: (i', k') in X
    :return: PositionClass, with the shift sigma for snake positions
    """
    (i, k), (j, l) = a, b
    for point in (a, b):
        if not in_X(algebra, point):
            raise DomainError("({},{}) is not in X".format(*point))
    n = algebra.rank
    d = l - k
    delta = _delta(algebra, i, j)
    minimal = 4 + 2 * abs(j - i) - delta
    if d >= minimal and (d - 2 * (j - i) + delta) % 4 == 0:
        shift = (d - minimal) // 4
        return PositionClass(Position.MINIMAL_SNAKE if shift == 0 else Position.SNAKE, shift)
    if d >= 2 * n + 2 + 2 * abs(n - i - j) - delta:
        return PositionClass(Position.EXTENDED_ONLY)
    return PositionClass(Position.NONE)


@dataclass(frozen=True)
class SnakeSeq:
    """Points of X sorted by level, then by node at equal levels."""
    algebra: AlgebraType
    points: tuple

    def __post_init__(self):
        points = tuple(SpectralPoint(*p) for p in self.points)
        for p in points:
            if not in_X(self.algebra, p):
                raise DomainError("({},{}) is not in X".format(*p))
        if list(points) != sorted(points, key=lambda p: (p.level, p.node)):
            raise DomainError("points must be sorted by level, then node: {}".format(points))
        object.__setattr__(self, 'points', points)

    @classmethod
    def from_monomial(cls, algebra: AlgebraType, m: Monomial) -> SnakeSeq:
        return cls(algebra, tuple(x_support(m)))

    def monomial(self) -> Monomial:
        result = Monomial.one()
        for p in self.points:
            result = result * Monomial.Y(*p)
        return result

    def pairs(self):
        return list(zip(self.points, self.points[1:]))

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __getitem__(self, index):
        return self.points[index]

    def __str__(self):
        return ' '.join("({},{})".format(*p) for p in self.points)


def _classes(s: SnakeSeq) -> list:
    return [position_class(s.algebra, a, b) for a, b in s.pairs()]


def is_extended_snake(s: SnakeSeq) -> bool:
    return all(c.is_extended for c in _classes(s))


def is_snake(s: SnakeSeq) -> bool:
    return all(c.is_snake for c in _classes(s))


def first_offending_pair(s: SnakeSeq):
    for (a, b), c in zip(s.pairs(), _classes(s)):
        if not c.is_extended:
            return a, b
    return None


def check_extended_snake(s: SnakeSeq) -> SnakeSeq:
    pair = first_offending_pair(s)
    if pair is not None:
        raise NotExtendedSnakeError(pair)
    return s


def shifts(s: SnakeSeq) -> list:
    """sigma_t of each consecutive pair; None where the pair is only in extended snake position."""
    return [c.shift if c.is_snake else None for c in _classes(s)]


def family(s: SnakeSeq) -> Optional[Family]:
    """Smallest family of the chain KR, minimal affinizations, minimal snakes, snakes, extended snakes."""
    classes = _classes(s)
    if not all(c.is_extended for c in classes):
        return None
    if not all(c.is_snake for c in classes):
        return Family.EXTENDED_SNAKE
    if not all(c.kind is Position.MINIMAL_SNAKE for c in classes):
        return Family.SNAKE
    nodes = [p.node for p in s]
    if len(set(nodes)) <= 1:
        return Family.KR
    if nodes == sorted(nodes) or nodes == sorted(nodes, reverse=True):
        return Family.MINIMAL_AFFINIZATION
    return Family.MINIMAL_SNAKE


class TransitivityFailure(NamedTuple):
    index: int
    points: tuple
    middle_is_spin: bool
    outer_nodes_large: bool
    inner_snake: bool

    @property
    def explained(self) -> bool:
        return self.middle_is_spin and self.outer_nodes_large and self.inner_snake


def transitivity_report(s: SnakeSeq) -> list:
    """
    Triples of consecutive points whose outer pair is not in extended snake
    position. Each such triple has a spin middle point, outer nodes with
    i + i'' > N - 2 and both inner pairs in snake position.
    """
    algebra = s.algebra
    n = algebra.rank
    report = []
    for t in range(1, len(s) - 1):
        a, b, c = s[t - 1], s[t], s[t + 1]
        if position_class(algebra, a, c).is_extended:
            continue
        report.append(TransitivityFailure(
            index=t,
            points=(a, b, c),
            middle_is_spin=b.node == n,
            outer_nodes_large=a.node + c.node > n - 2,
            inner_snake=position_class(algebra, a, b).is_snake and position_class(algebra, b, c).is_snake))
    return report


# ---------------------------------------------------------------------- #
# Non-overlapping tuples
# ---------------------------------------------------------------------- #

@lru_cache(maxsize=None)
def _pair_compatibility(algebra: AlgebraType, upper: SpectralPoint, lower: SpectralPoint) -> np.ndarray:
    """Entry [a, b] is true iff path a of `upper` is strictly above path b of `lower`."""
    above, below = enum_paths(algebra, upper), enum_paths(algebra, lower)
    compat = np.array([[strictly_above(p, q) for q in below] for p in above], dtype=bool)
    compat = compat.reshape(len(above), len(below))
    compat.setflags(write=False)
    return compat


def _compatibility(algebra: AlgebraType, points) -> dict:
    """(s, t) -> compatibility matrix of the owners s < t."""
    return {(s, t): _pair_compatibility(algebra, SpectralPoint(*points[s]), SpectralPoint(*points[t]))
            for s in range(len(points)) for t in range(s + 1, len(points))}


def _walk(path_sets, compat, first_indices=None):
    """Index tuples of non-overlapping path choices, depth first."""
    size = len(path_sets)
    if size == 0:
        yield ()
        return
    chosen = []

    def extend(t):
        if t == size:
            yield tuple(chosen)
            return
        mask = np.ones(len(path_sets[t]), dtype=bool)
        for s in range(t):
            mask &= compat[(s, t)][chosen[s]]
        candidates = np.flatnonzero(mask)
        if t == 0 and first_indices is not None:
            candidates = [c for c in candidates if c in first_indices]
        for c in candidates:
            chosen.append(int(c))
            yield from extend(t + 1)
            chosen.pop()

    yield from extend(0)


def non_overlapping_tuples(s: SnakeSeq):
    """
    Iterate over all non-overlapping tuples of paths of the owners of s.

    :raises EnumerationLimitError: beyond QCHAR_MAX_TUPLES tuples
    """
    path_sets = [enum_paths(s.algebra, p) for p in s]
    compat = _compatibility(s.algebra, s.points)
    for count, indices in enumerate(_walk(path_sets, compat), 1):
        if count > MAX_TUPLES:
            raise EnumerationLimitError("more than QCHAR_MAX_TUPLES={} tuples for {}".format(MAX_TUPLES, s))
        yield PathTuple(path_sets[t][c] for t, c in enumerate(indices))


def _branch_terms(job) -> Counter:
    algebra, points, first_indices = job
    path_sets = [enum_paths(algebra, p) for p in points]
    compat = _compatibility(algebra, points)
    terms = Counter()
    for count, indices in enumerate(_walk(path_sets, compat, set(first_indices)), 1):
        if count > MAX_TUPLES:
            raise EnumerationLimitError("more than QCHAR_MAX_TUPLES={} tuples".format(MAX_TUPLES))
        exponents = Counter()
        for t, c in enumerate(indices):
            for p, e in path_sets[t][c].monomial.items():
                exponents[p] += e
        terms[Monomial(exponents)] += 1
    return terms


def snake_qchar(algebra: AlgebraType, m_plus: Monomial, workers: int = WORKERS) -> QCharacter:
    """
    q-character of L(m_plus) as the sum over non-overlapping path tuples
    of the products of the path monomials.

    :param algebra: type B algebra
    :param m_plus: dominant monomial whose X-support is an extended snake
    :param workers: processes for the top-level path choices
    :return: QCharacter
    :raises NotExtendedSnakeError: with the first offending pair
    """
    if not is_dominant(m_plus):
        raise DomainError("highest monomial must be dominant, got {}".format(m_plus))
    s = check_extended_snake(SnakeSeq.from_monomial(algebra, m_plus))
    if not len(s):
        return QCharacter({Monomial.one(): 1})
    first = range(len(enum_paths(algebra, s[0])))
    chunks = [list(first[w::max(workers, 1)]) for w in range(max(workers, 1))]
    jobs = [(algebra, s.points, chunk) for chunk in chunks if chunk]
    terms = Counter()
    for part in parallel_map(_branch_terms, jobs, workers):
        terms.update(part)
    if sum(terms.values()) > MAX_TUPLES:
        raise EnumerationLimitError("more than QCHAR_MAX_TUPLES={} tuples for {}".format(MAX_TUPLES, s))
    logger.debug("{} tuples, {} distinct monomials for {}".format(sum(terms.values()), len(terms), s))
    return QCharacter(dict(terms))


def is_special(character: QCharacter) -> bool:
    return len(character.dominant_terms()) == 1


def is_antispecial(character: QCharacter) -> bool:
    return len(character.antidominant_terms()) == 1


def is_thin_char(character: QCharacter) -> bool:
    return all(mult == 1 for _, mult in character.items())


def highest_tuple(s: SnakeSeq) -> PathTuple:
    return PathTuple(highest_path(s.algebra, tuple(p)) for p in s)


def lowest_tuple(s: SnakeSeq) -> PathTuple:
    return PathTuple(lowest_path(s.algebra, tuple(p)) for p in s)


# ---------------------------------------------------------------------- #
# Moves on tuples
# ---------------------------------------------------------------------- #

def lowering_overlap_predicted(paths: PathTuple, index: int, at) -> bool:
    """Some later path has an upper corner at (j, l+r_j) or a lower corner at (j, l-r_j)."""
    j, l = at
    r = paths[index].algebra.r(j)
    return any((j, l + r) in p.corners.upper or (j, l - r) in p.corners.lower for p in paths[index + 1:])


def lower_tuple(paths: PathTuple, at) -> Optional[PathTuple]:
    """
    Lower the one path of the tuple that can be lowered at `at`.

    :return: the lowered tuple, or None if no single path can be lowered
             or the move produces an overlap
    """
    movable = [t for t, p in enumerate(paths) if can_lower(p, at)]
    if len(movable) != 1:
        return None
    lowered = paths.replace(movable[0], lower(paths[movable[0]], at))
    return lowered if non_overlapping(lowered) else None


class CornerClash(NamedTuple):
    point: SpectralPoint
    first: int
    second: int
    signs: str


def corner_clashes(paths: PathTuple) -> list:
    """Points that are corners of two different paths, with the corner signs ('+' upper, '-' lower)."""
    clashes = []
    for s in range(len(paths)):
        for t in range(s + 1, len(paths)):
            cs, ct = paths[s].corners, paths[t].corners
            for sign_s, set_s in (('+', cs.upper), ('-', cs.lower)):
                for sign_t, set_t in (('+', ct.upper), ('-', ct.lower)):
                    for point in sorted(set_s & set_t):
                        clashes.append(CornerClash(point, s, t, sign_s + sign_t))
    return clashes


# ---------------------------------------------------------------------- #
# Factorization and tameness
# ---------------------------------------------------------------------- #

def _splits(algebra: AlgebraType, a, b) -> bool:
    (i, k), (j, l) = a, b
    n = algebra.rank
    d = l - k
    delta = _delta(algebra, i, j)
    if d >= 4 + 2 * i + 2 * j - delta and (d - 2 * (i - j) + delta) % 4 == 0:
        return True
    return d >= 4 * n + 2 - 2 * abs(i - j) - delta and (d - 2 - 2 * (i - j) + delta) % 4 == 0


def prime_split(s: SnakeSeq) -> list:
    """Maximal factorization of an extended snake into prime extended snakes."""
    check_extended_snake(s)
    if len(s) <= 1:
        return [s]
    factors, start = [], 0
    for t, (a, b) in enumerate(s.pairs(), 1):
        if _splits(s.algebra, a, b):
            factors.append(SnakeSeq(s.algebra, s.points[start:t]))
            start = t
    factors.append(SnakeSeq(s.algebra, s.points[start:]))
    return factors


def factored_qchar(algebra: AlgebraType, m_plus: Monomial, workers: int = WORKERS):
    """
    q-characters of the prime factors of L(m_plus) and their product.

    :return: (list of QCharacter, QCharacter)
    """
    s = check_extended_snake(SnakeSeq.from_monomial(algebra, m_plus))
    factors = [snake_qchar(algebra, f.monomial(), workers) for f in prime_split(s)]
    product = QCharacter({Monomial.one(): 1})
    for f in factors:
        product = product * f
    return factors, product


def split_spectral_classes(algebra: AlgebraType, m_plus: Monomial):
    """
    Split a dominant monomial into its part on X and its part on X + 1,
    the latter shifted back by one level.
    """
    if not is_dominant(m_plus):
        raise DomainError("expected a dominant monomial, got {}".format(m_plus))
    on_x, shifted = {}, {}
    for p, e in m_plus.items():
        if in_X(algebra, p):
            on_x[p] = e
        else:
            shifted[(p.node, p.level - 1)] = e
    return Monomial(on_x), Monomial(shifted)


def is_tame_class(algebra: AlgebraType, m_plus: Monomial) -> bool:
    """L(m_plus), m_plus supported on X, is tame iff X(m_plus) is an extended snake."""
    for p in m_plus:
        if not in_X(algebra, p):
            raise DomainError("({},{}) is not in X".format(*p))
    return is_extended_snake(SnakeSeq.from_monomial(algebra, m_plus))


def is_tame(algebra: AlgebraType, m_plus: Monomial) -> bool:
    """Tameness of L(m_plus) for any dominant monomial with integer levels."""
    if algebra.sl2:
        return is_thin_sl2(m_plus)
    return all(is_tame_class(algebra, m) for m in split_spectral_classes(algebra, m_plus))

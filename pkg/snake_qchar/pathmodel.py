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
Paths in the plane, their corners and monomials, and lowering moves.

A path of a spin owner (N,k) walks N steps of height 2 from a border
column to column 2N-1, the last step being 1+epsilon. A path of (i,k),
i<N, is a spin path a of level k-(2N-2i-1) followed by the reverse of a
spin path abar of level k+(2N-2i-1), with a ending strictly below abar.
The y axis points down: upper corners are local minima of y.
"""
from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import NamedTuple

from .exceptions import DomainError, InputError, NotLowerableError
from .lattice import AlgebraType, PlanePoint, SpectralPoint, in_W, in_X, iota_inverse
from .monomial import Monomial, _a_monomial

logger = logging.getLogger(__name__)


class Corners(NamedTuple):
    upper: frozenset
    lower: frozenset


class LetterSets(NamedTuple):
    """Letters r in 1..N; the bar of Rbar and Sbar is carried by the field name."""
    R: frozenset
    Rbar: frozenset
    S: frozenset = frozenset()
    Sbar: frozenset = frozenset()


@dataclass(frozen=True)
class Path:
    algebra: AlgebraType
    owner: SpectralPoint
    points: tuple

    @property
    def is_spin(self) -> bool:
        return self.owner.node == self.algebra.rank

    @property
    def halves(self):
        """(a, abar) as point tuples, each ordered from its border column."""
        n = self.algebra.rank
        if self.is_spin:
            return self.points, ()
        return self.points[:n + 1], tuple(reversed(self.points[n + 1:]))

    @cached_property
    def columns(self) -> dict:
        """x -> heights of the points of the path in that column."""
        found = {}
        for pt in self.points:
            found.setdefault(pt.x, []).append(pt.height)
        return found

    @cached_property
    def corners(self) -> Corners:
        return corners(self)

    @cached_property
    def monomial(self) -> Monomial:
        return path_monomial(self)

    def __str__(self):
        return "Path({},{}: {})".format(self.owner.node, self.owner.level, ' '.join(
            "({},{}{})".format(pt.x, pt.y, {1: '+e', -1: '-e', 0: ''}[pt.eps]) for pt in self.points))


class PathTuple(tuple):
    """Paths (p_1, ..., p_T) of the owners of a snake, in order."""

    def monomial(self) -> Monomial:
        result = Monomial.one()
        for p in self:
            result = result * p.monomial
        return result

    def replace(self, index: int, path: Path) -> PathTuple:
        return PathTuple(self[:index] + (path,) + self[index + 1:])


def _spin_points(algebra: AlgebraType, k: int, signs) -> tuple:
    n = algebra.rank
    if k % 4 == 3:
        xs = [2 * r for r in range(n)]
    else:
        xs = [4 * n - 2 - 2 * r for r in range(n)]
    y = k + 2 * n - 1
    points = [PlanePoint(xs[0], y)]
    for r in range(1, n):
        y += 2 * signs[r - 1]
        points.append(PlanePoint(xs[r], y))
    last = signs[n - 1]
    points.append(PlanePoint(2 * n - 1, y + last, last))
    return tuple(points)


def _check_owner(algebra: AlgebraType, owner) -> SpectralPoint:
    owner = SpectralPoint(*owner)
    if algebra.sl2:
        raise DomainError("paths are defined for type B only")
    if not in_X(algebra, owner):
        raise DomainError("owner ({},{}) is not in X".format(*owner))
    return owner


@lru_cache(maxsize=None)
def _enum_paths(algebra: AlgebraType, owner: SpectralPoint) -> tuple:
    n = algebra.rank
    i, k = owner
    spin_signs = list(itertools.product((-1, 1), repeat=n))
    if i == n:
        paths = [Path(algebra, owner, _spin_points(algebra, k, s)) for s in spin_signs]
    else:
        offset = 2 * n - 2 * i - 1
        tops = [_spin_points(algebra, k - offset, s) for s in spin_signs]
        bottoms = [_spin_points(algebra, k + offset, s) for s in spin_signs]
        paths = [Path(algebra, owner, a + tuple(reversed(abar)))
                 for a in tops for abar in bottoms if a[-1].height > abar[-1].height]
    paths.sort(key=lambda p: p.points)
    logger.debug("Enumerated {} paths for owner ({},{}) in {}".format(len(paths), i, k, algebra))
    return tuple(paths)


def path_from_signs(algebra: AlgebraType, owner, signs, bar_signs=None):
    """
    The path of the owner whose half paths take the given step signs
    (+1 down, -1 up), or None if the halves do not form a path.
    """
    owner = _check_owner(algebra, owner)
    i, k = owner
    n = algebra.rank
    if i == n:
        return Path(algebra, owner, _spin_points(algebra, k, tuple(signs)))
    offset = 2 * n - 2 * i - 1
    a = _spin_points(algebra, k - offset, tuple(signs))
    abar = _spin_points(algebra, k + offset, tuple(bar_signs))
    if a[-1].height <= abar[-1].height:
        return None
    return Path(algebra, owner, a + tuple(reversed(abar)))


def enum_paths(algebra: AlgebraType, owner) -> tuple:
    """
    All paths of the owner, sorted by their points.

    :param algebra: type B algebra
    :param owner: (i, k) in X
    :return: tuple of Path
    """
    return _enum_paths(algebra, _check_owner(algebra, owner))


def corners(p: Path) -> Corners:
    algebra = p.algebra
    n = algebra.rank
    border = (0, 2 * n - 1, 4 * n - 2)
    pts = p.points
    upper, lower = set(), set()
    for r in range(1, len(pts) - 1):
        if pts[r].x in border:
            continue
        here, before, after = pts[r].height, pts[r - 1].height, pts[r + 1].height
        if before > here and after > here:
            upper.add(iota_inverse(algebra, pts[r]))
        elif before < here and after < here:
            lower.add(iota_inverse(algebra, pts[r]))
    spin = {pt.height for pt in pts if pt.x == 2 * n - 1}
    for y, eps in spin:
        if eps == -1 and (y, 1) not in spin:
            upper.add(SpectralPoint(n, y))
        elif eps == 1 and (y, -1) not in spin:
            lower.add(SpectralPoint(n, y))
    return Corners(frozenset(upper), frozenset(lower))


def path_monomial(p: Path) -> Monomial:
    c = p.corners
    exponents = {point: 1 for point in c.upper}
    exponents.update({point: -1 for point in c.lower})
    return Monomial(exponents)


@lru_cache(maxsize=None)
def _monomial_index(algebra: AlgebraType, owner: SpectralPoint) -> dict:
    return {p.monomial: p for p in _enum_paths(algebra, owner)}


def path_for_monomial(algebra: AlgebraType, owner, m: Monomial):
    """The path of the owner with monomial m, or None."""
    return _monomial_index(algebra, _check_owner(algebra, owner)).get(m)


@lru_cache(maxsize=None)
def highest_path(algebra: AlgebraType, owner) -> Path:
    return next(p for p in enum_paths(algebra, owner) if not p.corners.lower)


@lru_cache(maxsize=None)
def lowest_path(algebra: AlgebraType, owner) -> Path:
    return next(p for p in enum_paths(algebra, owner) if not p.corners.upper)


def can_lower(p: Path, at) -> bool:
    j, l = at
    r = p.algebra.r(j)
    upper = p.corners.upper
    return (j, l - r) in upper and (j, l + r) not in upper


def lower(p: Path, at) -> Path:
    """The path p A_{j,l}^{-1} with monomial m(p) A_{j,l}^{-1}."""
    if not in_W(p.algebra, at):
        raise DomainError("lowering point ({},{}) is not in W".format(*at))
    if not can_lower(p, at):
        raise NotLowerableError("{} cannot be lowered at ({},{})".format(p, *at))
    target = p.monomial / _a_monomial(p.algebra, *at)
    found = path_for_monomial(p.algebra, p.owner, target)
    if found is None:
        raise NotLowerableError("no path of ({},{}) has monomial {}".format(*p.owner, target))
    return found


def can_raise(p: Path, at) -> bool:
    """True if p = p' A_{j,l}^{-1} for some path p' of the same owner."""
    source = path_for_monomial(p.algebra, p.owner, p.monomial * _a_monomial(p.algebra, *at))
    return source is not None and can_lower(source, at)


def raise_path(p: Path, at) -> Path:
    if not can_raise(p, at):
        raise NotLowerableError("{} cannot be raised at ({},{})".format(p, *at))
    return path_for_monomial(p.algebra, p.owner, p.monomial * _a_monomial(p.algebra, *at))


def strictly_above(p: Path, q: Path) -> bool:
    """Every point of p lies strictly above every point of q in a shared column."""
    below = q.columns
    for x, heights in p.columns.items():
        if x in below and max(heights) >= min(below[x]):
            return False
    return True


def non_overlapping(paths) -> bool:
    paths = list(paths)
    return all(strictly_above(paths[s], paths[t])
               for s in range(len(paths)) for t in range(s + 1, len(paths)))


def always_separated(algebra: AlgebraType, owner, other) -> bool:
    """Every path of `owner` lies strictly above every path of `other`."""
    lowest, highest = {}, {}
    for p in enum_paths(algebra, owner):
        for x, heights in p.columns.items():
            lowest[x] = max([lowest.get(x, heights[0])] + heights)
    for q in enum_paths(algebra, other):
        for x, heights in q.columns.items():
            highest[x] = min([highest.get(x, heights[0])] + heights)
    return all(lowest[x] < highest[x] for x in lowest if x in highest)


def _steps(points) -> list:
    return [b.height > a.height for a, b in zip(points, points[1:])]


def letter_sets(p: Path) -> LetterSets:
    """
    Letter sets of a path from the signs of its steps; step r joins
    points r-1 and r of a half path.

    Spin owners: R holds the steps going up (y decreasing), Rbar the steps
    going down, so the highest path has R = {1..N}.
    """
    a, abar = p.halves
    a_down = _steps(a)
    if p.is_spin:
        return LetterSets(R=frozenset(r for r, down in enumerate(a_down, 1) if not down),
                          Rbar=frozenset(r for r, down in enumerate(a_down, 1) if down))
    abar_down = _steps(abar)
    return LetterSets(R=frozenset(r for r, down in enumerate(abar_down, 1) if not down),
                      Rbar=frozenset(r for r, down in enumerate(a_down, 1) if down),
                      S=frozenset(r for r, down in enumerate(a_down, 1) if not down),
                      Sbar=frozenset(r for r, down in enumerate(abar_down, 1) if down))


def set_restrict(letters, k: int, side: str = 'head', barred: bool = False) -> frozenset:
    """
    Drop the k alphabetically smallest letters (side 'head') or the k
    largest (side 'tail'). Barred letters order as Nbar < ... < 1bar.
    """
    if k < 0:
        raise DomainError("cannot drop {} letters".format(k))
    ordered = sorted(letters, reverse=barred)
    if side == 'head':
        return frozenset(ordered[k:])
    if side == 'tail':
        return frozenset(ordered[:max(len(ordered) - k, 0)])
    raise DomainError("side must be 'head' or 'tail', got {}".format(side))


def halfpath_bounds(p: Path, q: Path, sigma: int) -> list:
    """
    The counting inequalities a pair p above q of owners shifted by sigma
    must satisfy; returns the violated ones as text, empty if all hold.
    """
    n = p.algebra.rank
    i, j = p.owner.node, q.owner.node
    sp, sq = letter_sets(p), letter_sets(q)
    violated = []
    bound = 2 * n - i + max(i - j, 0) + sigma
    count = len(sp.Rbar) + len(sq.R)
    if count > bound:
        violated.append("#Rbar_p + #R_q = {} > {}".format(count, bound))
    if i < n and j < n:
        bound = i - max(i - j, 0) - sigma
        count = len(sp.S) + len(sq.Sbar)
        if count < bound:
            violated.append("#S_p + #Sbar_q = {} < {}".format(count, bound))
    return violated


def path_to_json(p: Path) -> dict:
    return {'owner': [p.owner.node, p.owner.level], 'points': [[pt.x, pt.y, pt.eps] for pt in p.points]}


def path_from_json(algebra: AlgebraType, document) -> Path:
    """
    Rebuild a path and check it is one of the paths of its owner.

    :raises InputError: on a malformed document
    :raises DomainError: if the points do not form a path of the owner
    """
    try:
        owner = SpectralPoint(*(int(v) for v in document['owner']))
        points = tuple(PlanePoint(int(x), int(y), int(eps)) for x, y, eps in document['points'])
    except (KeyError, TypeError, ValueError) as err:
        raise InputError("Malformed path document: {}".format(err)) from err
    path = Path(algebra, owner, points)
    if path not in enum_paths(algebra, owner):
        raise DomainError("points do not form a path of ({},{})".format(*owner))
    return path

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
Cartan data of type B_N (and sl2), the spectral lattices X and W, and the
plane embedding iota used to draw paths.

Levels are plain integers: Y_{i,k} stands for Y_{i,cq^k} with c fixed. The
epsilon offset of the spin column is kept symbolic as a coefficient in
{-1, 0, 1}; since 0 < epsilon < 1/2 the pair (integer part, coefficient)
orders exactly like the real number it stands for.
"""
from __future__ import annotations

import logging
import re
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .config import MAX_RANK
from .exceptions import DomainError, InputError

logger = logging.getLogger(__name__)


class SpectralPoint(NamedTuple):
    node: int
    level: int


class PlanePoint(NamedTuple):
    x: int
    y: int
    eps: int = 0

    @property
    def height(self):
        """Exact y-value as an orderable pair."""
        return self.y, self.eps


@dataclass(frozen=True)
class AlgebraType:
    rank: int
    sl2: bool = False

    def __post_init__(self):
        if self.sl2 and self.rank != 1:
            raise DomainError("sl2 mode has rank 1, got {}".format(self.rank))
        if not self.sl2 and self.rank < 2:
            raise DomainError("type B_N needs N >= 2, got {}".format(self.rank))
        if self.rank > MAX_RANK:
            raise DomainError("rank {} exceeds QCHAR_MAX_RANK={}".format(self.rank, MAX_RANK))

    @classmethod
    def b(cls, rank: int) -> AlgebraType:
        return cls(rank)

    @classmethod
    def sl2_mode(cls) -> AlgebraType:
        return cls(1, sl2=True)

    @classmethod
    def parse(cls, text: str) -> AlgebraType:
        """Parse 'B3', 'b3', 'BN=3' style names or 'sl2'."""
        name = text.strip().lower()
        if name in ('sl2', 'a1'):
            return cls.sl2_mode()
        match = re.fullmatch(r'b(?:n=)?_?(\d+)', name)
        if not match:
            raise InputError("Unknown algebra type '{}', expected e.g. 'B3' or 'sl2'".format(text))
        return cls(int(match.group(1)))

    def __str__(self):
        return 'sl2' if self.sl2 else 'B{}'.format(self.rank)

    @property
    def nodes(self) -> range:
        return range(1, self.rank + 1)

    def r(self, i: int) -> int:
        """Symmetrizing integer r_i: 2 on the long roots, 1 on the short root."""
        self.check_node(i)
        if self.sl2 or i == self.rank:
            return 1
        return 2

    def check_node(self, i: int) -> None:
        if not 1 <= i <= self.rank:
            raise DomainError("node {} out of range 1..{}".format(i, self.rank))

    def cartan_matrix(self) -> np.ndarray:
        return cartan_matrix(self)


def cartan_matrix(algebra: AlgebraType) -> np.ndarray:
    """
    Cartan matrix C with c_ij = 2(alpha_i, alpha_j) / (alpha_i, alpha_i).

    Rows and columns are indexed by nodes 1..N at positions 0..N-1. In type
    B_N the short root is alpha_N, so c_{N,N-1} = -2 and c_{N-1,N} = -1.
    """
    n = algebra.rank
    c = 2 * np.eye(n, dtype=int)
    for i in range(n - 1):
        c[i, i + 1] = -1
        c[i + 1, i] = -1
    if not algebra.sl2:
        c[n - 1, n - 2] = -2
    return c


def symmetrizer(algebra: AlgebraType) -> np.ndarray:
    return np.diag([algebra.r(i) for i in algebra.nodes])


def simple_root(algebra: AlgebraType, i: int) -> np.ndarray:
    """alpha_i in the basis of fundamental weights, i.e. column i of C."""
    algebra.check_node(i)
    return cartan_matrix(algebra)[:, i - 1].copy()


def in_X(algebra: AlgebraType, point) -> bool:
    i, k = point
    algebra.check_node(i)
    if algebra.sl2:
        return (i - k) % 2 == 1
    if i == algebra.rank:
        return k % 2 == 1
    return k % 2 == 0


def in_W(algebra: AlgebraType, point) -> bool:
    i, k = point
    return in_X(algebra, (i, k - algebra.r(i)))


def x_class_shift(algebra: AlgebraType, point) -> int:
    """0 if the point lies in X, 1 if it lies in X shifted up by one level."""
    i, k = point
    return 0 if in_X(algebra, (i, k)) else 1


def iota(algebra: AlgebraType, point) -> PlanePoint:
    """Column of the plane drawing of (i, k) in X; the level is kept as y."""
    i, k = point
    if algebra.sl2:
        raise DomainError("the plane embedding is defined for type B only")
    if not in_X(algebra, point):
        raise DomainError("({},{}) is not in X".format(i, k))
    n = algebra.rank
    if i == n:
        return PlanePoint(2 * n - 1, k)
    if (2 * n + k - 2 * i) % 4 == 2:
        return PlanePoint(2 * i, k)
    return PlanePoint(4 * n - 2 - 2 * i, k)


def iota_inverse(algebra: AlgebraType, point: PlanePoint) -> SpectralPoint:
    """
    The unique (i, k) in X drawn at `point`.

    Both candidate nodes x/2 and (2N-1) - x/2 are tried against the parity
    conditions of iota. The border columns 0, 2N-1 and 4N-2 carry no node.
    """
    n = algebra.rank
    x, y = point.x, point.y
    if x in (0, 2 * n - 1, 4 * n - 2) or x % 2 or point.eps:
        raise DomainError("({},{}) is not in the image of iota".format(x, y))
    for i in (x // 2, 2 * n - 1 - x // 2):
        if 1 <= i < n and y % 2 == 0 and iota(algebra, (i, y)).x == x:
            return SpectralPoint(i, y)
    raise DomainError("({},{}) is not in the image of iota".format(x, y))

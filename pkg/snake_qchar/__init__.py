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
Exact q-characters of type B_N extended snake modules from non-overlapping
path tuples, with the matching tableaux of super skew diagrams.
"""
from .lattice import AlgebraType, SpectralPoint
from .monomial import Monomial, QCharacter, format_monomial, parse_monomial
from .snakes import SnakeSeq, is_tame, snake_qchar

__version__ = '0.1.0'

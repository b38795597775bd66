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
import ast
import os

#
# Logging
# - LOG_CONFIG: dictConfig yaml file, defaults to the one shipped with the package
# - LOG_LEVEL: level used by the basicConfig fallback when LOG_CONFIG cannot be loaded
#
LOG_CONFIG = os.getenv('QCHAR_LOG_CONFIG', os.path.join(os.path.dirname(__file__), 'logging.yaml'))
LOG_LEVEL = os.getenv('QCHAR_LOG_LEVEL', 'INFO')

#
# Enumeration
# - WORKERS: processes used to fan out the path tuple backtracking (1 = serial)
# - MAX_RANK: largest rank N accepted for type B_N
# - MAX_TUPLES: upper bound on enumerated path tuples or tableaux per call
#
WORKERS = ast.literal_eval(os.getenv('QCHAR_WORKERS', '1'))
MAX_RANK = ast.literal_eval(os.getenv('QCHAR_MAX_RANK', '8'))
MAX_TUPLES = ast.literal_eval(os.getenv('QCHAR_MAX_TUPLES', '5000000'))

#
# Extended snake sweep
# - SWEEP_WIDTH: all levels of a swept snake lie within this distance of its first level
# - SWEEP_LENGTH: maximal number of points of a swept snake
# - SWEEP_BATCH: snakes handed to each worker per round of the sweep
#
SWEEP_WIDTH = ast.literal_eval(os.getenv('QCHAR_SWEEP_WIDTH', '24'))
SWEEP_LENGTH = ast.literal_eval(os.getenv('QCHAR_SWEEP_LENGTH', '3'))
SWEEP_BATCH = ast.literal_eval(os.getenv('QCHAR_SWEEP_BATCH', '16'))

#
# SVG rendering
# - SVG_EPSILON: drawn size of the symbolic epsilon offset on the spin column
# - SVG_SCALE: inches per lattice unit
#
SVG_EPSILON = ast.literal_eval(os.getenv('QCHAR_SVG_EPSILON', '0.3'))
SVG_SCALE = ast.literal_eval(os.getenv('QCHAR_SVG_SCALE', '0.4'))

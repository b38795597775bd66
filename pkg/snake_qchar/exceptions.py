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
Exception hierarchy. Every class carries the exit code the command line
interface maps it to.
"""


class QCharError(Exception):
    exit_code = 1


class InputError(QCharError):
    """Unreadable input: files, JSON documents, flags."""
    exit_code = 1


class MonomialParseError(InputError):

    def __init__(self, message, position):
        super().__init__("{} (at position {})".format(message, position))
        self.position = position


class DomainError(QCharError):
    """Well-formed input outside the domain of an operation."""
    exit_code = 2


class NotExtendedSnakeError(DomainError):

    def __init__(self, pair):
        first, second = pair
        super().__init__("not an extended snake: ({},{})→({},{})".format(*first, *second))
        self.pair = pair


class InvalidDiagramError(DomainError):

    def __init__(self, invariant, detail=''):
        message = "invalid diagram: {}".format(invariant)
        if detail:
            message = "{} ({})".format(message, detail)
        super().__init__(message)
        self.invariant = invariant


class NotThinMonomialError(DomainError):
    pass


class NotLowerableError(DomainError):
    pass


class EnumerationLimitError(QCharError):
    exit_code = 1


class VerificationFailure(QCharError):
    exit_code = 3

    def __init__(self, verdict):
        super().__init__(str(verdict))
        self.verdict = verdict

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
class BaseRenderer:
    """Turns path tuples and tableaux into text documents."""

    def render_paths(self, algebra, paths) -> str:
        """
        :param algebra: type B algebra the paths belong to
        :param paths: sequence of Path, drawn in order
        :return: str, the rendered document
        """
        raise NotImplementedError("Implement this method in subclass!")

    def render_tableau(self, tableau) -> str:
        """
        :param tableau: Tableau
        :return: str, the rendered document
        """
        raise NotImplementedError("Implement this method in subclass!")

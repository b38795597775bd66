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
SVG drawings made with matplotlib on the Agg backend. The hash salt and
the date metadata are fixed so equal inputs give equal bytes.
"""
import io
import logging

import matplotlib

matplotlib.use('Agg')
import matplotlib.pyplot as plt  # noqa: E402
from matplotlib.patches import Rectangle  # noqa: E402

from ..config import SVG_EPSILON, SVG_SCALE  # noqa: E402
from .base import BaseRenderer  # noqa: E402

logger = logging.getLogger(__name__)

RC = {
    'svg.hashsalt': 'snake-qchar',
    'svg.fonttype': 'none',
    'font.size': 9,
}


def _to_svg(fig) -> str:
    buffer = io.StringIO()
    fig.savefig(buffer, format='svg', metadata={'Date': None})
    plt.close(fig)
    return buffer.getvalue()


class SvgRenderer(BaseRenderer):

    def __init__(self, scale: float = SVG_SCALE, epsilon: float = SVG_EPSILON):
        self.scale = scale
        self.epsilon = epsilon

    def render_paths(self, algebra, paths) -> str:
        paths = list(paths)
        n = algebra.rank
        with plt.rc_context(RC):
            if not paths:
                fig, ax = plt.subplots(figsize=(1, 1))
                ax.set_axis_off()
                return _to_svg(fig)
            ys = [pt.y for p in paths for pt in p.points]
            low, high = min(ys) - 1, max(ys) + 1
            fig, ax = plt.subplots(figsize=((4 * n) * self.scale, (high - low + 2) * self.scale))
            for border in (0, 2 * n - 1, 4 * n - 2):
                ax.axvline(border, color='0.8', linestyle='--', linewidth=0.6)
            colours = plt.get_cmap('tab10')
            for index, p in enumerate(paths):
                xs = [pt.x for pt in p.points]
                heights = [pt.y + pt.eps * self.epsilon for pt in p.points]
                ax.plot(xs, heights, color=colours(index % 10), marker='o', markersize=2.5, linewidth=1.2,
                        label="({},{})".format(*p.owner))
            ax.set_xlim(-1, 4 * n - 1)
            ax.set_ylim(high, low)
            ax.set_xticks(range(0, 4 * n - 1))
            ax.set_ylabel('level')
            ax.legend(loc='lower left', fontsize=7, frameon=False)
            return _to_svg(fig)

    def render_tableau(self, tableau) -> str:
        d = tableau.shape
        with plt.rc_context(RC):
            if not d.n_columns:
                fig, ax = plt.subplots(figsize=(1, 1))
                ax.set_axis_off()
                return _to_svg(fig)
            first = min(d.top(j) for j in range(1, d.n_columns + 1))
            last = max(d.bottom(j) for j in range(1, d.n_columns + 1))
            fig, ax = plt.subplots(figsize=(d.n_columns * self.scale * 2, (last - first + 1) * self.scale * 2))
            for i, j, letter in tableau.boxes():
                ax.add_patch(Rectangle((j - 1, i), 1, 1, fill=False, linewidth=1.0))
                ax.text(j - 0.5, i + 0.5, str(abs(letter)), ha='center', va='center')
                if letter < 0:
                    ax.plot([j - 0.65, j - 0.35], [i + 0.25, i + 0.25], color='black', linewidth=0.8)
            ax.set_xlim(0, d.n_columns)
            ax.set_ylim(last + 1, first)
            ax.set_aspect('equal')
            ax.set_axis_off()
            return _to_svg(fig)

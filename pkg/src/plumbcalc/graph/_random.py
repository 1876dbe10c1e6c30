######################################################################
# plumbcalc: contact plumbing calculus for decorated divisor graphs.
#
# Copyright: 2024
#
# Authors: The plumbcalc developers
#
# plumbcalc is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# plumbcalc is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE. See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with plumbcalc. If not, see <http://www.gnu.org/licenses/>.
#####################################################################

__all__ = ["random_graph", "random_graphs"]

from fractions import Fraction as _Fraction

import random as _random

from ._graph import DecoratedGraph as _DecoratedGraph
from ._graph import VertexDecoration as _VertexDecoration


def random_graph(
    rng,
    max_vertices=12,
    euler_range=(-5, 5),
    max_genus=3,
    sphere_bias=0.8,
    forest=False,
    with_areas=False,
):
    """
    Draw a random decorated graph.

    Parameters
    ----------

    rng: random.Random
        The source of randomness.

    max_vertices: int
        Upper bound on the number of vertices.

    euler_range: (int, int)
        Inclusive range of Euler numbers.

    max_genus: int
        Largest genus drawn for a non-sphere vertex.

    sphere_bias: float
        Probability that a vertex is a sphere.

    forest: bool
        Whether to restrict to forests (no cycles, no parallel edges).

    with_areas: bool
        Whether to give every vertex a positive integer area.

    Returns
    -------

    graph: plumbcalc.graph.DecoratedGraph
    """
    if not isinstance(rng, _random.Random):
        raise TypeError("'rng' must be of type 'random.Random'")

    n = rng.randint(1, max_vertices)
    vertices = {}
    for v in range(1, n + 1):
        genus = 0 if rng.random() < sphere_bias else rng.randint(1, max_genus)
        area = _Fraction(rng.randint(1, 20)) if with_areas else None
        vertices[v] = _VertexDecoration(genus, rng.randint(*euler_range), area)

    edges = []
    for v in range(2, n + 1):
        if rng.random() < 0.85:
            edges.append((rng.randint(1, v - 1), v))

    if not forest and n > 1:
        for _ in range(rng.randint(0, n // 3)):
            v, w = rng.sample(range(1, n + 1), 2)
            edges.append((v, w))

    return _DecoratedGraph(vertices, edges)


def random_graphs(seed, count, **kwargs):
    """Yield a reproducible sequence of random graphs."""
    rng = _random.Random(seed)
    for _ in range(count):
        yield random_graph(rng, **kwargs)

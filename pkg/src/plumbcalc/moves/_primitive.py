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

__all__ = [
    "DEFAULT_BLOW_UP_WEIGHT",
    "KleinSite",
    "blow_down_minus_one",
    "blow_down_plus_one",
    "blow_up_epsilon",
    "blow_up_exterior",
    "blow_up_interior",
    "klein_pattern",
    "rp2_absorb",
    "zero_chain_absorb",
]

from dataclasses import dataclass as _dataclass
from fractions import Fraction as _Fraction
from itertools import combinations as _combinations

from .._exceptions import MoveNotApplicableError as _MoveNotApplicableError
from .._exceptions import MoveSiteError as _MoveSiteError
from .._exceptions import PlumbingInputError as _PlumbingInputError
from ..graph import DecoratedGraph as _DecoratedGraph
from ..graph import VertexDecoration as _VertexDecoration

# Fraction of the smallest incident area handed to a new exceptional sphere.
DEFAULT_BLOW_UP_WEIGHT = _Fraction(1, 1000)


def _check_graph(graph):
    if not isinstance(graph, _DecoratedGraph):
        raise TypeError("'graph' must be of type 'plumbcalc.graph.DecoratedGraph'")


def blow_up_epsilon(graph, vertices, weight=None):
    """
    The area handed to the exceptional sphere of a blow-up touching the
    given vertices: weight times their smallest area. Returns None when
    the graph does not track areas.
    """
    _check_graph(graph)
    if weight is None:
        weight = DEFAULT_BLOW_UP_WEIGHT
    weight = _Fraction(weight)
    if not 0 < weight < 1:
        raise ValueError("'weight' must lie strictly between 0 and 1")
    if not graph.has_areas or len(graph) == 0:
        return None
    return weight * min(graph.decoration(v).area for v in vertices)


def _resolve_epsilon(graph, vertices, epsilon, weight):
    if not graph.has_areas:
        return None
    if epsilon is None:
        return blow_up_epsilon(graph, vertices, weight)
    epsilon = _Fraction(epsilon)
    smallest = min(graph.decoration(v).area for v in vertices)
    if not 0 < epsilon < smallest:
        raise _PlumbingInputError(
            f"blow-up area {epsilon} must lie strictly between 0 and {smallest}"
        )
    return epsilon


def _shrink(decoration, epsilon):
    """Lower the euler number by one and give up epsilon of area."""
    decoration = decoration.with_euler(decoration.euler - 1)
    if epsilon is not None:
        decoration = decoration.with_area(decoration.area - epsilon)
    return decoration


def blow_up_interior(graph, edge, epsilon=None, weight=None):
    """
    Blow up a point on an edge: the edge v-w is replaced by v-u-w with a
    new (0,-1) sphere u, and v and w each lose one from their euler number.

    Parameters
    ----------

    graph: plumbcalc.graph.DecoratedGraph
        The graph to rewrite.

    edge: (int, int)
        The edge to blow up. With parallel edges only one copy is replaced.

    epsilon: fractions.Fraction
        Area of the new sphere. Only used when the graph tracks areas.

    weight: fractions.Fraction
        Used to derive epsilon from the incident areas when it is not given.

    Returns
    -------

    graph: plumbcalc.graph.DecoratedGraph
        The new graph. The new vertex takes graph.next_id().
    """
    _check_graph(graph)
    v, w = edge
    if v not in graph or w not in graph or graph.multiplicity(v, w) == 0:
        raise _MoveSiteError(f"no edge {v}-{w}")

    epsilon = _resolve_epsilon(graph, (v, w), epsilon, weight)
    u = graph.next_id()

    result = graph.without_edge(v, w)
    result = result.with_decoration(v, _shrink(graph.decoration(v), epsilon))
    result = result.with_decoration(w, _shrink(graph.decoration(w), epsilon))
    result = result.with_vertex(u, _VertexDecoration(0, -1, epsilon))
    return result.with_edge(v, u).with_edge(u, w)


def blow_up_exterior(graph, vertex, epsilon=None, weight=None):
    """
    Blow up a point of a vertex away from its edges: a new (0,-1) leaf is
    attached and the vertex loses one from its euler number.
    """
    _check_graph(graph)
    if vertex not in graph:
        raise _MoveSiteError(f"no vertex {vertex}")

    epsilon = _resolve_epsilon(graph, (vertex,), epsilon, weight)
    u = graph.next_id()

    result = graph.with_decoration(
        vertex, _shrink(graph.decoration(vertex), epsilon)
    )
    result = result.with_vertex(u, _VertexDecoration(0, -1, epsilon))
    return result.with_edge(vertex, u)


def _blow_down(graph, vertex, sign):
    _check_graph(graph)
    decoration = graph.decoration(vertex)
    if decoration.genus != 0 or decoration.euler != sign:
        raise _MoveNotApplicableError(
            f"vertex {vertex} is {decoration.label}, not a ({0},{sign}) sphere"
        )

    neighbours = graph.neighbours(vertex)
    if len(neighbours) > 2:
        raise _MoveNotApplicableError(
            f"vertex {vertex} has degree {len(neighbours)}"
        )
    if len(neighbours) == 2 and neighbours[0] == neighbours[1]:
        raise _MoveNotApplicableError(
            f"blowing down {vertex} would create a loop at {neighbours[0]}"
        )

    result = graph.without_vertex(vertex)
    for n in neighbours:
        d = graph.decoration(n).with_euler(graph.decoration(n).euler - sign)
        if d.area is not None and decoration.area is not None:
            d = d.with_area(d.area + decoration.area)
        result = result.with_decoration(n, d)
    if len(neighbours) == 2:
        result = result.with_edge(*neighbours)
    return result


def blow_down_minus_one(graph, vertex):
    """
    Blow down a (0,-1) sphere of degree at most two. Its neighbours gain
    one in euler number and absorb its area; two neighbours become joined.
    """
    return _blow_down(graph, vertex, -1)


def blow_down_plus_one(graph, vertex):
    """
    Blow down a (0,+1) sphere of degree at most two. Its neighbours lose
    one in euler number. Not contact preserving.
    """
    return _blow_down(graph, vertex, 1)


def zero_chain_absorb(graph, vertex):
    """
    Absorb a (0,0) sphere of degree two, merging its two neighbours into
    the lower id. Genus, euler number and area of the neighbours add up.
    Not contact preserving.
    """
    _check_graph(graph)
    decoration = graph.decoration(vertex)
    if decoration.genus != 0 or decoration.euler != 0:
        raise _MoveNotApplicableError(f"vertex {vertex} is not a (0,0) sphere")

    neighbours = graph.neighbours(vertex)
    if len(neighbours) != 2 or neighbours[0] == neighbours[1]:
        raise _MoveNotApplicableError(
            f"vertex {vertex} does not have two distinct neighbours"
        )

    keep, other = neighbours
    if graph.multiplicity(keep, other):
        raise _MoveNotApplicableError(
            f"merging {keep} and {other} would create a loop"
        )

    a, b = graph.decoration(keep), graph.decoration(other)
    if a.genus < 0 or b.genus < 0:
        raise _MoveNotApplicableError("cannot merge non-orientable vertices")

    area = None
    if a.area is not None and b.area is not None:
        area = a.area + b.area

    result = graph.without_vertex(vertex)
    for n in result.neighbours(other):
        result = result.with_edge(keep, n)
    result = result.without_vertex(other)
    return result.with_decoration(
        keep, _VertexDecoration(a.genus + b.genus, a.euler + b.euler, area)
    )


@_dataclass(frozen=True)
class KleinSite:
    """
    A Klein bottle piece: a sphere of degree three carrying two (0,+-2)
    leaves, attached to the rest of the graph through one more vertex.
    """

    center: int
    leaves: tuple
    attachment: int

    @property
    def vertices(self):
        return (self.center, *self.leaves)

    def __str__(self):
        leaves = ",".join(str(v) for v in self.leaves)
        return f"{self.center}:{leaves}>{self.attachment}"


def klein_pattern(graph, center):
    """
    Match a Klein bottle piece centred on a vertex.

    The center must be a sphere of degree three with three distinct
    neighbours, two of which are sphere leaves with euler numbers 2*d1 and
    2*d2 (each d = +-1) while the center has euler number (d1 + d2) / 2.

    Returns
    -------

    site: plumbcalc.moves.KleinSite or None
    """
    _check_graph(graph)
    decoration = graph.decoration(center)
    if decoration.genus != 0:
        return None

    neighbours = graph.neighbours(center)
    if len(neighbours) != 3 or len(set(neighbours)) != 3:
        return None

    leaves = [
        n
        for n in neighbours
        if graph.degree(n) == 1
        and graph.decoration(n).genus == 0
        and graph.decoration(n).euler in (-2, 2)
    ]
    for pair in _combinations(leaves, 2):
        total = sum(graph.decoration(n).euler for n in pair)
        if 4 * decoration.euler == total:
            (attachment,) = (n for n in neighbours if n not in pair)
            return KleinSite(center, pair, attachment)
    return None


def rp2_absorb(graph, center):
    """
    Absorb a Klein bottle piece into the vertex it hangs from. The center
    and both leaves are removed and the attachment vertex gains a
    crosscap: orientable genus g becomes -(g + 1) and non-orientable genus
    -n becomes -(n + 1). Not contact preserving.
    """
    site = klein_pattern(graph, center)
    if site is None:
        raise _MoveNotApplicableError(f"no Klein bottle piece centred on {center}")

    x = graph.decoration(site.attachment)
    genus = -(x.genus + 1) if x.genus >= 0 else x.genus - 1

    result = graph
    for v in site.vertices:
        result = result.without_vertex(v)
    return result.with_decoration(site.attachment, x.with_genus(genus))

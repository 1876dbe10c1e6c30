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

__all__ = ["isomorphic"]

from collections import Counter as _Counter

import networkx as _nx
from networkx.algorithms import isomorphism as _iso

from ._graph import DecoratedGraph as _DecoratedGraph


def _signature(graph):
    return _Counter(
        (graph.degree(v), d.genus, d.euler) for v, d in graph.vertices.items()
    )


def _to_simple(graph):
    g = _nx.Graph()
    for v, d in graph.vertices.items():
        g.add_node(v, decoration=(d.genus, d.euler))
    for v, w in graph.edges:
        if g.has_edge(v, w):
            g[v][w]["multiplicity"] += 1
        else:
            g.add_edge(v, w, multiplicity=1)
    return g


def isomorphic(a, b):
    """
    Whether two decorated graphs are isomorphic, preserving genus, Euler
    number and edge multiplicity. Areas are ignored.

    Parameters
    ----------

    a: plumbcalc.graph.DecoratedGraph
        The first graph.

    b: plumbcalc.graph.DecoratedGraph
        The second graph.

    Returns
    -------

    isomorphic: bool
    """
    for graph, name in ((a, "a"), (b, "b")):
        if not isinstance(graph, _DecoratedGraph):
            raise TypeError(f"'{name}' must be of type 'plumbcalc.graph.DecoratedGraph'")

    if len(a) != len(b) or a.num_edges != b.num_edges:
        return False
    if _signature(a) != _signature(b):
        return False

    matcher = _iso.GraphMatcher(
        _to_simple(a),
        _to_simple(b),
        node_match=_iso.categorical_node_match("decoration", None),
        edge_match=_iso.numerical_edge_match("multiplicity", 1),
    )
    return matcher.is_isomorphic()

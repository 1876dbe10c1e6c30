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

__all__ = ["DecoratedGraph", "GraphDocument", "VertexDecoration"]

from dataclasses import dataclass as _dataclass
from dataclasses import field as _field
from dataclasses import replace as _replace
from fractions import Fraction as _Fraction

import hashlib as _hashlib
import networkx as _nx

from .._exceptions import MoveSiteError as _MoveSiteError
from .._exceptions import PlumbingInputError as _PlumbingInputError


def _is_int(value):
    return isinstance(value, int) and not isinstance(value, bool)


@_dataclass(frozen=True)
class VertexDecoration:
    """
    The decoration carried by a plumbing vertex.

    Parameters
    ----------

    genus: int
        Genus of the curve. A negative value -n encodes a non-orientable
        surface with n crosscaps.

    euler: int
        Euler number (self-intersection) of the curve.

    area: fractions.Fraction, optional
        Symplectic area of the curve. Must be positive when present.
    """

    genus: int
    euler: int
    area: _Fraction = None

    def __post_init__(self):
        if not _is_int(self.genus):
            raise TypeError("'genus' must be of type 'int'")
        if not _is_int(self.euler):
            raise TypeError("'euler' must be of type 'int'")
        if self.area is not None:
            if isinstance(self.area, bool) or not isinstance(
                self.area, (int, _Fraction)
            ):
                raise TypeError("'area' must be of type 'fractions.Fraction'")
            object.__setattr__(self, "area", _Fraction(self.area))

    @property
    def is_sphere(self):
        return self.genus == 0

    @property
    def is_orientable(self):
        return self.genus >= 0

    @property
    def label(self):
        return f"({self.genus},{self.euler})"

    def with_euler(self, euler):
        return _replace(self, euler=euler)

    def with_area(self, area):
        return _replace(self, area=area)

    def with_genus(self, genus):
        return _replace(self, genus=genus)


class DecoratedGraph:
    """
    An immutable finite loop-free multigraph with decorated vertices.

    Edges are stored as an unordered multiset of vertex pairs. All
    "modifying" methods return a new graph.
    """

    __slots__ = ("_vertices", "_edges", "_adjacency")

    def __init__(self, vertices=None, edges=()):
        """
        Constructor.

        Parameters
        ----------

        vertices: dict[int, plumbcalc.graph.VertexDecoration]
            The vertex decorations keyed by vertex id.

        edges: iterable of (int, int)
            The edges. Repeated pairs are parallel edges.
        """
        if vertices is None:
            vertices = {}
        if not isinstance(vertices, dict):
            raise TypeError("'vertices' must be of type 'dict'")

        checked = {}
        for v, decoration in vertices.items():
            if not _is_int(v):
                raise TypeError("vertex ids must be of type 'int'")
            if not isinstance(decoration, VertexDecoration):
                raise TypeError(
                    "vertex decorations must be of type 'plumbcalc.graph.VertexDecoration'"
                )
            checked[v] = decoration

        counts = {}
        for edge in edges:
            v, w = edge
            for x in (v, w):
                if x not in checked:
                    raise _PlumbingInputError(f"edge {v}-{w} names unknown vertex {x}")
            if v == w:
                raise _PlumbingInputError(f"loop at vertex {v}")
            key = (min(v, w), max(v, w))
            counts[key] = counts.get(key, 0) + 1

        self._set(checked, counts)

    def _set(self, vertices, edges):
        self._vertices = dict(sorted(vertices.items()))
        self._edges = dict(sorted(edges.items()))
        self._adjacency = None

    @classmethod
    def _from_parts(cls, vertices, edges):
        graph = cls.__new__(cls)
        graph._set(vertices, {k: n for k, n in edges.items() if n > 0})
        return graph

    @classmethod
    def chain(cls, eulers, genus=0, start=1):
        """
        Build a linear chain of vertices with consecutive ids.

        Parameters
        ----------

        eulers: sequence of int
            The Euler numbers along the chain.

        genus: int
            The genus of every vertex.

        start: int
            The id of the first vertex.
        """
        ids = range(start, start + len(eulers))
        return cls(
            {v: VertexDecoration(genus, k) for v, k in zip(ids, eulers)},
            list(zip(ids, ids[1:])),
        )

    def __repr__(self):
        return f"DecoratedGraph(vertices={len(self)}, edges={self.num_edges})"

    def __eq__(self, other):
        if not isinstance(other, DecoratedGraph):
            return NotImplemented
        return self._vertices == other._vertices and self._edges == other._edges

    def __hash__(self):
        return hash(
            (tuple(self._vertices.items()), tuple(self._edges.items()))
        )

    def __len__(self):
        return len(self._vertices)

    def __contains__(self, v):
        return v in self._vertices

    def __getstate__(self):
        return (self._vertices, self._edges)

    def __setstate__(self, state):
        self._set(*state)

    @property
    def ids(self):
        return tuple(self._vertices)

    @property
    def vertices(self):
        """A copy of the vertex decorations keyed by id."""
        return dict(self._vertices)

    @property
    def edges(self):
        """All edges as sorted (min, max) pairs, repeated by multiplicity."""
        return tuple(pair for pair, n in self._edges.items() for _ in range(n))

    @property
    def num_edges(self):
        return sum(self._edges.values())

    def decoration(self, v):
        try:
            return self._vertices[v]
        except KeyError:
            raise _MoveSiteError(f"no vertex {v}")

    def multiplicity(self, v, w):
        return self._edges.get((min(v, w), max(v, w)), 0)

    def _build_adjacency(self):
        adjacency = {v: [] for v in self._vertices}
        for (v, w), n in self._edges.items():
            adjacency[v].extend([w] * n)
            adjacency[w].extend([v] * n)
        self._adjacency = {v: tuple(sorted(ns)) for v, ns in adjacency.items()}

    def neighbours(self, v):
        """Neighbours of v in id order, repeated by edge multiplicity."""
        if v not in self._vertices:
            raise _MoveSiteError(f"no vertex {v}")
        if self._adjacency is None:
            self._build_adjacency()
        return self._adjacency[v]

    def degree(self, v):
        return len(self.neighbours(v))

    def next_id(self):
        """One more than the largest id in use."""
        return max(self._vertices, default=0) + 1

    @property
    def has_areas(self):
        """Whether every vertex carries an area."""
        return all(d.area is not None for d in self._vertices.values())

    @property
    def is_orientable(self):
        return all(d.genus >= 0 for d in self._vertices.values())

    def components(self):
        """Connected components as sorted id tuples, ordered by smallest id."""
        return sorted(
            tuple(sorted(c)) for c in _nx.connected_components(self.to_networkx())
        )

    def to_networkx(self):
        """
        Convert to a networkx.MultiGraph with 'genus', 'euler' and 'area'
        node attributes.
        """
        g = _nx.MultiGraph()
        for v, d in self._vertices.items():
            g.add_node(v, genus=d.genus, euler=d.euler, area=d.area)
        g.add_edges_from(self.edges)
        return g

    def digest(self):
        """SHA-256 hex digest of the canonical text form."""
        from ._format import serialize

        return _hashlib.sha256(serialize(self).encode("utf-8")).hexdigest()

    def relabel(self, mapping):
        """
        Rename vertices.

        Parameters
        ----------

        mapping: dict[int, int]
            An injective map from old to new ids. Ids that are missing from
            the map keep their value.
        """
        new = {v: mapping.get(v, v) for v in self._vertices}
        if len(set(new.values())) != len(new):
            raise _PlumbingInputError("relabelling is not injective")
        vertices = {new[v]: d for v, d in self._vertices.items()}
        edges = {}
        for (v, w), n in self._edges.items():
            a, b = new[v], new[w]
            key = (min(a, b), max(a, b))
            edges[key] = edges.get(key, 0) + n
        return DecoratedGraph._from_parts(vertices, edges)

    def with_decoration(self, v, decoration):
        self.decoration(v)
        vertices = dict(self._vertices)
        vertices[v] = decoration
        return DecoratedGraph._from_parts(vertices, self._edges)

    def with_vertex(self, v, decoration):
        if v in self._vertices:
            raise _PlumbingInputError(f"vertex {v} already exists")
        vertices = dict(self._vertices)
        vertices[v] = decoration
        return DecoratedGraph._from_parts(vertices, self._edges)

    def without_vertex(self, v):
        """Remove v and every edge incident to it."""
        self.decoration(v)
        vertices = {u: d for u, d in self._vertices.items() if u != v}
        edges = {k: n for k, n in self._edges.items() if v not in k}
        return DecoratedGraph._from_parts(vertices, edges)

    def with_edge(self, v, w, count=1):
        self.decoration(v)
        self.decoration(w)
        if v == w:
            raise _PlumbingInputError(f"loop at vertex {v}")
        key = (min(v, w), max(v, w))
        edges = dict(self._edges)
        edges[key] = edges.get(key, 0) + count
        return DecoratedGraph._from_parts(self._vertices, edges)

    def without_edge(self, v, w):
        """Remove one copy of the edge v-w."""
        key = (min(v, w), max(v, w))
        if key not in self._edges:
            raise _MoveSiteError(f"no edge {v}-{w}")
        edges = dict(self._edges)
        edges[key] -= 1
        return DecoratedGraph._from_parts(self._vertices, edges)


@_dataclass(frozen=True)
class GraphDocument:
    """
    A graph together with the free-form name and provenance notes carried
    by its text form.
    """

    graph: DecoratedGraph
    name: str = ""
    notes: tuple = _field(default_factory=tuple)

    def __post_init__(self):
        if not isinstance(self.graph, DecoratedGraph):
            raise TypeError("'graph' must be of type 'plumbcalc.graph.DecoratedGraph'")
        if not isinstance(self.name, str):
            raise TypeError("'name' must be of type 'str'")
        if "\n" in self.name:
            raise ValueError("'name' must be a single line")
        object.__setattr__(self, "name", self.name.strip())
        notes = tuple(str(note).strip() for note in self.notes)
        if any("\n" in note for note in notes):
            raise ValueError("notes must be single lines")
        object.__setattr__(self, "notes", notes)

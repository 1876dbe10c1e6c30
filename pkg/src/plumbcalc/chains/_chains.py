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

__all__ = ["ChainView", "maximal_chains"]

from dataclasses import dataclass as _dataclass

from ..graph import DecoratedGraph as _DecoratedGraph


@_dataclass(frozen=True)
class ChainView:
    """
    A maximal chain of spheres read in a fixed direction.

    Parameters
    ----------

    ids: tuple[int, ...]
        The chain vertices in order.

    components: tuple[int, ...]
        The negated euler numbers, m_i = -k_i.

    left_attach: int or None
        The vertex outside the chain joined to the first vertex.

    right_attach: int or None
        The vertex outside the chain joined to the last vertex.
    """

    ids: tuple
    components: tuple
    left_attach: int = None
    right_attach: int = None

    def __len__(self):
        return len(self.ids)

    @property
    def exterior_left(self):
        """Whether the first vertex is a free end of the graph."""
        return self.left_attach is None

    @property
    def exterior_right(self):
        """Whether the last vertex is a free end of the graph."""
        return self.right_attach is None

    @property
    def standalone(self):
        """Whether the chain is a whole connected component."""
        return self.exterior_left and self.exterior_right

    @property
    def exterior(self):
        """Whether exactly one end is free."""
        return self.exterior_left != self.exterior_right

    @property
    def weights(self):
        return tuple(-m for m in self.components)

    def reversed(self):
        return ChainView(
            self.ids[::-1],
            self.components[::-1],
            self.right_attach,
            self.left_attach,
        )


def _walk(graph, members, start):
    order = [start]
    previous = None
    current = start
    while True:
        step = [
            n for n in graph.neighbours(current) if n in members and n != previous
        ]
        if not step or step[0] == start:
            return order
        previous, current = current, step[0]
        order.append(current)


def _attachments(graph, members, v):
    return [n for n in graph.neighbours(v) if n not in members]


def maximal_chains(graph):
    """
    Find every maximal chain of spheres.

    A chain vertex is a sphere of degree at most two. Chains are the
    connected components of the chain vertices that are paths; circular
    components are skipped.

    Orientation: a chain with one free end starts at its attached end, so
    the outermost vertex comes last. A chain attached at both ends starts
    at the side attached to the lower id, then at the lower end id. A
    standalone chain starts at its lower end id.

    Parameters
    ----------

    graph: plumbcalc.graph.DecoratedGraph
        The graph to search.

    Returns
    -------

    chains: list[plumbcalc.chains.ChainView]
        The chains, ordered by their smallest vertex id.
    """
    if not isinstance(graph, _DecoratedGraph):
        raise TypeError("'graph' must be of type 'plumbcalc.graph.DecoratedGraph'")

    candidates = {
        v
        for v, d in graph.vertices.items()
        if d.genus == 0 and graph.degree(v) <= 2
    }

    chains = []
    visited = set()
    for v in sorted(candidates):
        if v in visited:
            continue

        members = {v}
        stack = [v]
        while stack:
            for n in graph.neighbours(stack.pop()):
                if n in candidates and n not in members:
                    members.add(n)
                    stack.append(n)
        visited |= members

        internal = {
            x: sum(1 for n in graph.neighbours(x) if n in members) for x in members
        }
        ends = sorted(x for x in members if internal[x] < 2)
        if not ends:
            continue

        order = _walk(graph, members, ends[0])

        if len(order) == 1:
            outside = _attachments(graph, members, order[0])
            left = outside[0] if outside else None
            right = outside[1] if len(outside) > 1 else None
        else:
            left = next(iter(_attachments(graph, members, order[0])), None)
            right = next(iter(_attachments(graph, members, order[-1])), None)

        flip = False
        if left is None and right is not None:
            flip = True
        elif left is not None and right is not None:
            flip = left > right or (left == right and order[0] > order[-1])
        elif left is None and right is None:
            flip = order[0] > order[-1]

        if flip:
            order.reverse()
            left, right = right, left

        chains.append(
            ChainView(
                tuple(order),
                tuple(-graph.decoration(x).euler for x in order),
                left,
                right,
            )
        )

    return sorted(chains, key=lambda c: min(c.ids))

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

__all__ = ["is_contact_normal", "is_tpc_normal"]

from ..analysis import detect_klein_pieces as _detect_klein_pieces
from ..chains import is_contact_normal_chain as _is_contact_normal_chain
from ..chains import maximal_chains as _maximal_chains
from ..graph import DecoratedGraph as _DecoratedGraph
from ..moves import MoveKind as _MoveKind
from ..moves import can_apply as _can_apply
from ..moves import klein_pattern as _klein_pattern

# In priority order.
TOPOLOGICAL_MOVES = (
    _MoveKind.BLOW_DOWN_MINUS_ONE,
    _MoveKind.BLOW_DOWN_PLUS_ONE,
    _MoveKind.ZERO_CHAIN_ABSORB,
    _MoveKind.RP2_ABSORB,
)


def _check_graph(graph):
    if not isinstance(graph, _DecoratedGraph):
        raise TypeError("'graph' must be of type 'plumbcalc.graph.DecoratedGraph'")


def _applicable(graph, v):
    return [kind for kind in TOPOLOGICAL_MOVES if _can_apply(graph, kind, (v,))]


def _is_minus_two_cycle(graph, component):
    if len(component) < 2:
        return False
    edges = sum(graph.degree(v) for v in component) // 2
    return edges == len(component) and all(
        graph.decoration(v).genus == 0
        and graph.decoration(v).euler == -2
        and graph.degree(v) == 2
        for v in component
    )


def _is_permitted_fork(graph, component):
    """
    A tree made of a chain of spheres ending in a (0,-1) sphere that
    carries two (0,-2) leaves.
    """
    edges = sum(graph.degree(v) for v in component) // 2
    if edges != len(component) - 1:
        return False

    for center in component:
        site = _klein_pattern(graph, center)
        if site is None or graph.decoration(center).euler != -1:
            continue
        return all(
            graph.decoration(v).genus == 0 and graph.degree(v) <= 2
            for v in component
            if v != center
        )
    return False


def is_tpc_normal(graph):
    """
    Whether a graph is in normal form for the topological moves.

    No blow-down, zero chain absorption or Klein bottle absorption may
    apply, every chain weight is at most -2, and no component is a cycle of
    (0,-2) spheres. A component that is a chain ending in a (0,-1) sphere
    with two (0,-2) leaves is allowed as it stands.

    Parameters
    ----------

    graph: plumbcalc.graph.DecoratedGraph
        The graph to test.

    Returns
    -------

    normal: bool
    """
    _check_graph(graph)

    components = graph.components()
    permitted = set()
    for component in components:
        if _is_permitted_fork(graph, component):
            permitted.update(component)

    for v in graph.ids:
        if v not in permitted and _applicable(graph, v):
            return False

    for chain in _maximal_chains(graph):
        if permitted.intersection(chain.ids):
            continue
        if any(m < 2 for m in chain.components):
            return False

    return not any(_is_minus_two_cycle(graph, c) for c in components)


def contact_chain_ok(chain):
    """
    Whether a chain is in contact normal form. A chain with one free end
    is only read from its attached end; other chains may be read either
    way.
    """
    if _is_contact_normal_chain(chain):
        return True
    if chain.exterior:
        return False
    return _is_contact_normal_chain(chain.reversed())


def is_contact_normal(graph):
    """
    Whether a graph is in contact normal form.

    This is the topological normal form, except that chains may start
    with a block of zero spheres, which are then exempt from zero chain
    absorption, and Klein bottle pieces are allowed to stay.

    Parameters
    ----------

    graph: plumbcalc.graph.DecoratedGraph
        The graph to test.

    Returns
    -------

    normal: bool
    """
    _check_graph(graph)

    klein = {v for site in _detect_klein_pieces(graph) for v in site.vertices}

    zeros = set()
    for chain in _maximal_chains(graph):
        if klein.issuperset(chain.ids):
            continue
        if not contact_chain_ok(chain):
            return False
        zeros.update(v for v, m in zip(chain.ids, chain.components) if m == 0)

    for v in graph.ids:
        if v in klein:
            continue
        for kind in _applicable(graph, v):
            if kind is _MoveKind.ZERO_CHAIN_ABSORB and v in zeros:
                continue
            return False

    return not any(_is_minus_two_cycle(graph, c) for c in graph.components())

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
    "chain_replace",
    "chain_replace_primitives",
    "slide",
    "slide_primitives",
    "zero_transfer",
    "zero_transfer_primitives",
]

from .._exceptions import MoveNotApplicableError as _MoveNotApplicableError
from ._primitive import _check_graph
from ._primitive import blow_down_minus_one as _blow_down_minus_one
from ._primitive import blow_up_epsilon as _blow_up_epsilon
from ._primitive import blow_up_exterior as _blow_up_exterior
from ._primitive import blow_up_interior as _blow_up_interior
from ._records import MoveKind as _MoveKind
from ._records import MoveRecord as _MoveRecord


def _is_zero_sphere(graph, v):
    d = graph.decoration(v)
    return d.genus == 0 and d.euler == 0


def _check_transfer(graph, vertex, source, target, amount):
    if isinstance(amount, bool) or not isinstance(amount, int):
        raise TypeError("'amount' must be of type 'int'")
    if not _is_zero_sphere(graph, vertex):
        raise _MoveNotApplicableError(f"vertex {vertex} is not a (0,0) sphere")

    neighbours = graph.neighbours(vertex)
    if len(neighbours) == 2:
        if neighbours[0] == neighbours[1]:
            raise _MoveNotApplicableError(
                f"vertex {vertex} has a double edge to {neighbours[0]}"
            )
        if source is None or target is None or {source, target} != set(neighbours):
            raise _MoveNotApplicableError(
                f"transfer through {vertex} must run between {neighbours[0]} and {neighbours[1]}"
            )
    elif len(neighbours) == 1:
        ends = {source, target}
        if ends != {neighbours[0], None}:
            raise _MoveNotApplicableError(
                f"transfer through leaf {vertex} must run between {neighbours[0]} and nowhere"
            )
    else:
        raise _MoveNotApplicableError(
            f"vertex {vertex} has degree {len(neighbours)}, expected 1 or 2"
        )


def zero_transfer(graph, vertex, source, target, amount=1):
    """
    Move euler weight across a (0,0) sphere: the source loses 'amount' and
    the target gains it. Ids and areas are unchanged.

    Parameters
    ----------

    graph: plumbcalc.graph.DecoratedGraph
        The graph to rewrite.

    vertex: int
        The zero sphere, of degree 1 or 2.

    source: int or None
        The neighbour giving up weight. None means "nowhere", which is only
        allowed at the open end of a leaf.

    target: int or None
        The neighbour receiving weight, or None for "nowhere".

    amount: int
        How much to move. A negative amount runs the other way.

    Returns
    -------

    graph: plumbcalc.graph.DecoratedGraph
    """
    _check_graph(graph)
    _check_transfer(graph, vertex, source, target, amount)

    if amount < 0:
        source, target, amount = target, source, -amount

    result = graph
    if source is not None:
        d = graph.decoration(source)
        result = result.with_decoration(source, d.with_euler(d.euler - amount))
    if target is not None:
        d = graph.decoration(target)
        result = result.with_decoration(target, d.with_euler(d.euler + amount))
    return result


def _record(records, kind, site, params, before, after):
    records.append(_MoveRecord.create(kind, site, params, before, after))
    return after


def _up_interior(graph, edge, records, weight):
    epsilon = _blow_up_epsilon(graph, edge, weight)
    result = _blow_up_interior(graph, edge, epsilon=epsilon)
    _record(
        records, _MoveKind.BLOW_UP_INTERIOR, edge, {"epsilon": epsilon}, graph, result
    )
    return result


def _up_exterior(graph, vertex, records, weight):
    epsilon = _blow_up_epsilon(graph, (vertex,), weight)
    result = _blow_up_exterior(graph, vertex, epsilon=epsilon)
    _record(
        records, _MoveKind.BLOW_UP_EXTERIOR, (vertex,), {"epsilon": epsilon}, graph, result
    )
    return result


def _down(graph, vertex, records):
    result = _blow_down_minus_one(graph, vertex)
    return _record(records, _MoveKind.BLOW_DOWN_MINUS_ONE, (vertex,), {}, graph, result)


def zero_transfer_primitives(graph, vertex, source, target, amount=1, weight=None):
    """
    Realise zero_transfer as blow-ups and blow-downs of (0,-1) spheres.

    Every unit step blows up next to the zero sphere and blows the old
    zero sphere down, so the zero sphere gets a new id each step.

    Returns
    -------

    graph: plumbcalc.graph.DecoratedGraph
        The result, isomorphic to the result of zero_transfer.

    records: list[plumbcalc.moves.MoveRecord]
        The primitive moves in order.
    """
    _check_graph(graph)
    _check_transfer(graph, vertex, source, target, amount)

    if amount < 0:
        source, target, amount = target, source, -amount

    records = []
    zero = vertex
    for _ in range(amount):
        new = graph.next_id()
        if source is not None:
            graph = _up_interior(graph, (source, zero), records, weight)
        else:
            graph = _up_exterior(graph, zero, records, weight)
        graph = _down(graph, zero, records)
        zero = new

    return graph, records


def _slide_site(graph, site, direction):
    if direction not in ("left", "right"):
        raise ValueError("'direction' must be 'left' or 'right'")

    z1, z2 = site
    if graph.multiplicity(z1, z2) == 0:
        raise _MoveNotApplicableError(f"vertices {z1} and {z2} are not adjacent")
    for z in (z1, z2):
        if not _is_zero_sphere(graph, z):
            raise _MoveNotApplicableError(f"vertex {z} is not a (0,0) sphere")

    zero, partner = (z1, z2) if direction == "left" else (z2, z1)
    neighbours = graph.neighbours(zero)
    if len(neighbours) != 2 or neighbours.count(partner) != 1:
        raise _MoveNotApplicableError(
            f"vertex {zero} must sit between {partner} and one other vertex"
        )
    (outer,) = (n for n in neighbours if n != partner)
    return zero, outer, partner, graph.decoration(outer).euler


def slide(graph, site, direction="left"):
    """
    Slide a pair of adjacent zero spheres past their neighbour.

    A left slide turns the segment (A, 0, 0, B) into (0, 0, A, B) by
    moving all of A's weight through the first zero onto the second; a
    right slide turns it into (A, B, 0, 0). The vertex passed over may be any
    vertex. Only its Euler number moves, so a genus there stays behind on a
    vertex of Euler number zero.

    Parameters
    ----------

    graph: plumbcalc.graph.DecoratedGraph
        The graph to rewrite.

    site: (int, int)
        The two zero spheres, in left-to-right order.

    direction: str
        Either "left" or "right".
    """
    _check_graph(graph)
    zero, outer, partner, amount = _slide_site(graph, site, direction)
    return zero_transfer(graph, zero, outer, partner, amount)


def slide_primitives(graph, site, direction="left", weight=None):
    """Realise slide as primitive moves. Returns (graph, records)."""
    _check_graph(graph)
    zero, outer, partner, amount = _slide_site(graph, site, direction)
    return zero_transfer_primitives(graph, zero, outer, partner, amount, weight)


def _replace_site(graph, vertex, left):
    d = graph.decoration(vertex)
    if d.genus != 0 or d.euler != 1:
        raise _MoveNotApplicableError(f"vertex {vertex} is not a (0,1) sphere")
    neighbours = graph.neighbours(vertex)
    if len(neighbours) != 2:
        raise _MoveNotApplicableError(
            f"vertex {vertex} has degree {len(neighbours)}, expected 2"
        )
    if left is None:
        left = neighbours[0]
    if left not in neighbours:
        raise _MoveNotApplicableError(f"vertex {left} is not a neighbour of {vertex}")
    right = neighbours[1] if neighbours[0] == left else neighbours[0]
    return left, right


def chain_replace_primitives(graph, vertex, left=None, weight=None):
    """
    Replace (A, 1, B) by (A-1, 0, 0, B-1): blow up the edge on the left,
    blow up the edge on the right, then blow down the old +1 sphere, which
    is now a -1 sphere.

    Returns
    -------

    graph: plumbcalc.graph.DecoratedGraph
        The new graph. The zero next to A takes id graph.next_id() and the
        zero next to B the id after it.

    records: list[plumbcalc.moves.MoveRecord]
        The three primitive moves.
    """
    _check_graph(graph)
    left, right = _replace_site(graph, vertex, left)

    records = []
    graph = _up_interior(graph, (left, vertex), records, weight)
    graph = _up_interior(graph, (vertex, right), records, weight)
    graph = _down(graph, vertex, records)
    return graph, records


def chain_replace(graph, vertex, left=None, weight=None):
    """
    Replace a (0,1) sphere of degree two by two zero spheres, lowering
    both neighbours by one.

    Parameters
    ----------

    graph: plumbcalc.graph.DecoratedGraph
        The graph to rewrite.

    vertex: int
        The (0,1) sphere.

    left: int
        The neighbour on the A side. Defaults to the lower id.

    weight: fractions.Fraction
        Blow-up weight when areas are tracked.
    """
    graph, _ = chain_replace_primitives(graph, vertex, left, weight)
    return graph

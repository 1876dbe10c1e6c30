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

__all__ = ["topological_reduce"]

from plumbcalc import _logger

from .._exceptions import MoveNotApplicableError as _MoveNotApplicableError
from ..analysis import detect_klein_pieces as _detect_klein_pieces
from ..graph import DecoratedGraph as _DecoratedGraph
from ..moves import MoveKind as _MoveKind
from ..moves import MoveRecord as _MoveRecord
from ..moves import apply_move as _apply_move
from ._normal import TOPOLOGICAL_MOVES as _TOPOLOGICAL_MOVES
from ._report import Fuel as _Fuel
from ._report import ReductionReport as _ReductionReport

_BLOW_DOWNS = (_MoveKind.BLOW_DOWN_MINUS_ONE, _MoveKind.BLOW_DOWN_PLUS_ONE)


def _first_move(graph):
    for v in graph.ids:
        for kind in _TOPOLOGICAL_MOVES:
            # A component never disappears entirely.
            if kind in _BLOW_DOWNS and graph.degree(v) == 0:
                continue
            try:
                return kind, (v,), _apply_move(graph, kind, (v,))
            except _MoveNotApplicableError:
                continue
    return None


def topological_reduce(graph, fuel=None):
    """
    Greedily apply the topological moves until none applies.

    At each step the lowest vertex id with an applicable move is rewritten,
    trying -1 blow-down, +1 blow-down, zero chain absorption and Klein
    bottle absorption in that order. Isolated +-1 spheres are kept, so
    every component survives.

    Parameters
    ----------

    graph: plumbcalc.graph.DecoratedGraph
        The graph to reduce. Non-orientable genus is allowed.

    fuel: plumbcalc.reduction.Fuel
        The move budget. Defaults to Fuel.default_for(graph).

    Returns
    -------

    report: plumbcalc.reduction.ReductionReport
    """
    if not isinstance(graph, _DecoratedGraph):
        raise TypeError("'graph' must be of type 'plumbcalc.graph.DecoratedGraph'")
    if fuel is None:
        fuel = _Fuel.default_for(graph)
    if not isinstance(fuel, _Fuel):
        raise TypeError("'fuel' must be of type 'plumbcalc.reduction.Fuel'")

    current = graph
    trace = []
    exhausted = False
    while True:
        step = _first_move(current)
        if step is None:
            break
        if len(trace) >= fuel.max_moves:
            _logger.warning(
                f"Topological reduction ran out of fuel after {len(trace)} moves"
            )
            exhausted = True
            break
        kind, site, after = step
        trace.append(_MoveRecord.create(kind, site, {}, current, after))
        current = after

    return _ReductionReport(
        input=graph,
        output=current,
        trace=tuple(trace),
        mode="topological",
        fuel_used=len(trace),
        normal_form_attained=not exhausted,
        fuel_exhausted=exhausted,
        klein_sites=tuple(_detect_klein_pieces(current)),
    )

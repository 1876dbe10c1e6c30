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

__all__ = ["apply_move", "apply_record", "can_apply", "replay"]

from .._exceptions import MoveNotApplicableError as _MoveNotApplicableError
from .._exceptions import MoveSiteError as _MoveSiteError
from .._exceptions import ReplayError as _ReplayError
from ._derived import chain_replace as _chain_replace
from ._derived import slide as _slide
from ._derived import zero_transfer as _zero_transfer
from ._primitive import blow_down_minus_one as _blow_down_minus_one
from ._primitive import blow_down_plus_one as _blow_down_plus_one
from ._primitive import blow_up_exterior as _blow_up_exterior
from ._primitive import blow_up_interior as _blow_up_interior
from ._primitive import rp2_absorb as _rp2_absorb
from ._primitive import zero_chain_absorb as _zero_chain_absorb
from ._records import MoveKind as _MoveKind
from ._records import MoveRecord as _MoveRecord

_DISPATCH = {
    _MoveKind.BLOW_UP_INTERIOR: lambda g, s, p: _blow_up_interior(
        g, (s[0], s[1]), epsilon=p.get("epsilon")
    ),
    _MoveKind.BLOW_UP_EXTERIOR: lambda g, s, p: _blow_up_exterior(
        g, s[0], epsilon=p.get("epsilon")
    ),
    _MoveKind.BLOW_DOWN_MINUS_ONE: lambda g, s, p: _blow_down_minus_one(g, s[0]),
    _MoveKind.BLOW_DOWN_PLUS_ONE: lambda g, s, p: _blow_down_plus_one(g, s[0]),
    _MoveKind.ZERO_CHAIN_ABSORB: lambda g, s, p: _zero_chain_absorb(g, s[0]),
    _MoveKind.RP2_ABSORB: lambda g, s, p: _rp2_absorb(g, s[0]),
    _MoveKind.ZERO_TRANSFER: lambda g, s, p: _zero_transfer(
        g, s[0], s[1], s[2], p.get("amount", 1)
    ),
    _MoveKind.SLIDE: lambda g, s, p: _slide(
        g, (s[0], s[1]), p.get("direction", "left")
    ),
    _MoveKind.CHAIN_REPLACE: lambda g, s, p: _chain_replace(
        g, s[0], left=p.get("left")
    ),
}


def apply_move(graph, kind, site, params=None):
    """
    Apply a move given by kind, site and parameters.

    Parameters
    ----------

    graph: plumbcalc.graph.DecoratedGraph
        The graph to rewrite.

    kind: plumbcalc.moves.MoveKind
        The move to apply.

    site: tuple
        The vertices the move acts on, as recorded in a MoveRecord.

    params: dict
        Move parameters ('epsilon', 'amount', 'direction' or 'left').

    Returns
    -------

    graph: plumbcalc.graph.DecoratedGraph
    """
    if not isinstance(kind, _MoveKind):
        raise TypeError("'kind' must be of type 'plumbcalc.moves.MoveKind'")
    return _DISPATCH[kind](graph, tuple(site), dict(params or {}))


def can_apply(graph, kind, site, params=None):
    """Whether a move is applicable at a site."""
    try:
        apply_move(graph, kind, site, params)
    except (_MoveNotApplicableError, _MoveSiteError):
        return False
    return True


def apply_record(graph, record, verify=True):
    """
    Apply a recorded move.

    With verify set, the digests of the input and output must match the
    snapshots stored in the record.
    """
    if not isinstance(record, _MoveRecord):
        raise TypeError("'record' must be of type 'plumbcalc.moves.MoveRecord'")

    if verify and graph.digest() != record.before:
        raise _ReplayError(f"'{record.to_line()}' applied to the wrong graph")
    result = apply_move(graph, record.kind, record.site, record.param_dict)
    if verify and result.digest() != record.after:
        raise _ReplayError(f"'{record.to_line()}' did not reproduce its result")
    return result


def replay(graph, records, verify=True):
    """Apply a sequence of recorded moves in order."""
    for record in records:
        graph = apply_record(graph, record, verify)
    return graph

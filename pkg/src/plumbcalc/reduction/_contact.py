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

__all__ = ["contact_reduce"]

from plumbcalc import _logger

from .._exceptions import PlumbingInputError as _PlumbingInputError
from ..analysis import detect_klein_pieces as _detect_klein_pieces
from ..chains import maximal_chains as _maximal_chains
from ..graph import DecoratedGraph as _DecoratedGraph
from ..moves import MoveKind as _MoveKind
from ..moves import MoveRecord as _MoveRecord
from ..moves import apply_move as _apply_move
from ..moves import blow_up_epsilon as _blow_up_epsilon
from ..moves import chain_replace_primitives as _chain_replace_primitives
from ._normal import contact_chain_ok as _contact_chain_ok
from ._normal import is_contact_normal as _is_contact_normal
from ._report import Fuel as _Fuel
from ._report import ReductionReport as _ReductionReport


class _FuelExhausted(Exception):
    pass


class _Tracker:
    """The current graph plus the moves that produced it."""

    def __init__(self, graph, fuel, weight):
        self.graph = graph
        self.fuel = fuel
        self.weight = weight
        self.trace = []

    def _spend(self, moves):
        if len(self.trace) + moves > self.fuel.max_moves:
            raise _FuelExhausted

    def apply(self, kind, site, **params):
        self._spend(1)
        if kind in (_MoveKind.BLOW_UP_INTERIOR, _MoveKind.BLOW_UP_EXTERIOR):
            params["epsilon"] = _blow_up_epsilon(self.graph, site, self.weight)
        after = _apply_move(self.graph, kind, site, params)
        self.trace.append(_MoveRecord.create(kind, site, params, self.graph, after))
        self.graph = after

    def blow_up(self, kind, site):
        """Apply a blow-up and return the id of the new sphere."""
        new = self.graph.next_id()
        self.apply(kind, site)
        return new

    def chain_replace(self, vertex, left):
        """Replace a +1 sphere and return the ids of the two new zeros."""
        new = self.graph.next_id()
        after, records = _chain_replace_primitives(
            self.graph, vertex, left=left, weight=self.weight
        )
        self._spend(len(records))
        self.trace.extend(records)
        self.graph = after
        return new, new + 1


class _ChainReduction:
    """
    Bring one chain into contact normal form: a block of leading zeros
    followed by components that are all at least 2.

    The chain is tracked as a list of ids read left to right. Position -1
    is the left attachment (or nowhere) and position len(ids) the right
    attachment (or nowhere).
    """

    def __init__(self, tracker, chain):
        self._t = tracker
        self._ids = list(chain.ids)
        self._left = chain.left_attach
        self._right = chain.right_attach

    @property
    def ids(self):
        return tuple(self._ids)

    def _euler(self, i):
        return self._t.graph.decoration(self._ids[i]).euler

    def _at(self, i):
        if i < 0:
            return self._left
        if i >= len(self._ids):
            return self._right
        return self._ids[i]

    def _block(self):
        m = 0
        while m < len(self._ids) and self._euler(m) == 0:
            m += 1
        return m

    def run(self):
        """Returns False if the chain is blocked."""
        while self._ids:
            m = self._block()
            n = len(self._ids)

            bad = next((i for i in range(m, n) if self._euler(i) in (0, -1)), None)
            if bad is not None:
                if self._euler(bad) == 0:
                    self._clear_zero(bad, m)
                elif not self._clear_minus_one(bad, m):
                    return False
                continue

            positive = next((i for i in range(m, n) if self._euler(i) > 0), None)
            if positive is None:
                return True
            self._clear_positive(positive, m)
        return True

    def _transfer(self, z, source, target, amount):
        if amount == 0:
            return
        source, target = self._at(source), self._at(target)
        if amount < 0:
            source, target, amount = target, source, -amount
        self._t.apply(
            _MoveKind.ZERO_TRANSFER, (self._ids[z], source, target), amount=amount
        )

    def _pipe(self, s, amount):
        """
        Move 'amount' of weight out of position s through the zeros at
        s-1, s-3, ..., 0 to the left attachment or to nowhere.
        """
        assert s % 2 == 1
        for z in range(s - 1, -1, -2):
            self._transfer(z, z + 1, z - 1, amount)

    def _slide_left(self, p, m):
        """Slide the zero pair at positions p, p+1 left onto the block."""
        while p > m:
            if self._euler(p - 1) != 0:
                self._t.apply(
                    _MoveKind.SLIDE,
                    (self._ids[p], self._ids[p + 1]),
                    direction="left",
                )
            p -= 1

    def _clear_zero(self, i, m):
        # Hand the left neighbour's weight across the zero, then slide the
        # new zero pair onto the block.
        self._transfer(i, i - 1, i + 1, self._euler(i - 1))
        self._slide_left(i - 1, m)

    def _clear_minus_one(self, i, m):
        if i > m or m == 0:
            left, right = self._at(i - 1), self._at(i + 1)
            if left is not None and left == right:
                _logger.warning(
                    f"Chain {self._ids} is blocked: blowing down {self._ids[i]} "
                    f"would create a loop at {left}"
                )
                return False
            self._t.apply(_MoveKind.BLOW_DOWN_MINUS_ONE, (self._ids[i],))
            del self._ids[i]
        elif m % 2 == 1:
            self._pipe(m, -1)
        else:
            self._pipe(m - 1, 1)
            self._t.apply(_MoveKind.BLOW_DOWN_MINUS_ONE, (self._ids[m],))
            del self._ids[m]
        return True

    def _clear_positive(self, j, m):
        if j == m and m > 0:
            if m % 2 == 1:
                self._pipe(m, self._euler(m))
            else:
                self._pipe(m - 1, 2)
            return

        # Blow up on the left until the weight is +1.
        for _ in range(self._euler(j) - 1):
            left = self._at(j - 1)
            if left is None:
                new = self._t.blow_up(_MoveKind.BLOW_UP_EXTERIOR, (self._ids[j],))
            else:
                new = self._t.blow_up(
                    _MoveKind.BLOW_UP_INTERIOR, (left, self._ids[j])
                )
            self._ids.insert(j, new)
            j += 1

        v = self._ids[j]
        left, right = self._at(j - 1), self._at(j + 1)
        if left is not None and right is not None:
            self._ids[j : j + 1] = self._t.chain_replace(v, left)
            pair = j
        elif left is not None:
            leaf = self._t.blow_up(_MoveKind.BLOW_UP_EXTERIOR, (v,))
            self._ids.insert(j + 1, leaf)
            self._t.apply(_MoveKind.ZERO_TRANSFER, (v, left, leaf), amount=1)
            pair = j
        elif right is not None:
            leaf = self._t.blow_up(_MoveKind.BLOW_UP_EXTERIOR, (v,))
            self._ids.insert(j, leaf)
            self._t.apply(_MoveKind.ZERO_TRANSFER, (v, right, leaf), amount=1)
            pair = j
        else:
            leaf = self._t.blow_up(_MoveKind.BLOW_UP_EXTERIOR, (v,))
            self._ids.append(leaf)
            self._t.apply(_MoveKind.ZERO_TRANSFER, (v, leaf, None), amount=1)
            return
        self._slide_left(pair, m)


def contact_reduce(graph, fuel=None, blow_up_weight=None):
    """
    Reduce every chain of a graph to contact normal form using only
    contact preserving moves.

    Chains are handled one at a time, lowest vertex id first. Within a
    chain the leftmost offending component is handled first: zeros and -1
    spheres past the leading block are cleared before positive weights.

    Parameters
    ----------

    graph: plumbcalc.graph.DecoratedGraph
        An orientable graph.

    fuel: plumbcalc.reduction.Fuel
        The move budget. Defaults to Fuel.default_for(graph).

    blow_up_weight: fractions.Fraction
        Fraction of the incident area given to each new sphere when the
        graph tracks areas.

    Returns
    -------

    report: plumbcalc.reduction.ReductionReport
        Running out of fuel is reported, never raised.
    """
    if not isinstance(graph, _DecoratedGraph):
        raise TypeError("'graph' must be of type 'plumbcalc.graph.DecoratedGraph'")
    if not graph.is_orientable:
        raise _PlumbingInputError("contact reduction needs orientable decorations")
    if fuel is None:
        fuel = _Fuel.default_for(graph)
    if not isinstance(fuel, _Fuel):
        raise TypeError("'fuel' must be of type 'plumbcalc.reduction.Fuel'")

    tracker = _Tracker(graph, fuel, blow_up_weight)
    blocked = set()
    exhausted = False

    while True:
        klein = {
            v for site in _detect_klein_pieces(tracker.graph) for v in site.vertices
        }
        pending = [
            chain
            for chain in _maximal_chains(tracker.graph)
            if not klein.issuperset(chain.ids)
            and frozenset(chain.ids) not in blocked
            and not _contact_chain_ok(chain)
        ]
        if not pending:
            break

        chain = pending[0]
        _logger.debug(f"Reducing chain {chain.ids} with components {chain.components}")
        reduction = _ChainReduction(tracker, chain)
        try:
            if not reduction.run():
                blocked.add(frozenset(reduction.ids))
        except _FuelExhausted:
            _logger.warning(f"Contact reduction ran out of fuel after {len(tracker.trace)} moves")
            exhausted = True
            break

    output = tracker.graph
    return _ReductionReport(
        input=graph,
        output=output,
        trace=tuple(tracker.trace),
        mode="contact",
        fuel_used=len(tracker.trace),
        normal_form_attained=not exhausted and _is_contact_normal(output),
        fuel_exhausted=exhausted,
        klein_sites=tuple(_detect_klein_pieces(output)),
    )

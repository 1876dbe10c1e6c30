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

__all__ = ["MoveKind", "MoveRecord"]

from dataclasses import dataclass as _dataclass
from enum import Enum as _Enum
from fractions import Fraction as _Fraction

from ..exact import format_rational as _format_rational


class MoveKind(_Enum):
    """
    The kinds of local move. Each member carries its text tag and whether
    it is admissible in contact reduction.
    """

    BLOW_UP_INTERIOR = ("BlowUpInterior", True)
    BLOW_UP_EXTERIOR = ("BlowUpExterior", True)
    BLOW_DOWN_MINUS_ONE = ("BlowDownMinusOne", True)
    BLOW_DOWN_PLUS_ONE = ("BlowDownPlusOne", False)
    ZERO_CHAIN_ABSORB = ("ZeroChainAbsorb", False)
    RP2_ABSORB = ("RP2Absorb", False)
    ZERO_TRANSFER = ("ZeroTransfer", True)
    SLIDE = ("Slide", True)
    CHAIN_REPLACE = ("ChainReplace", True)

    def __init__(self, tag, contact_safe):
        self.tag = tag
        self.contact_safe = contact_safe

    @classmethod
    def from_tag(cls, tag):
        for kind in cls:
            if kind.tag == tag:
                return kind
        raise ValueError(f"unknown move kind {tag!r}")


def _format_value(value):
    if value is None:
        return "-"
    if isinstance(value, _Fraction):
        return _format_rational(value)
    return str(value)


@_dataclass(frozen=True)
class MoveRecord:
    """
    One applied move: what ran, where, with which parameters, and the
    digests of the graph before and after.
    """

    kind: MoveKind
    site: tuple
    params: tuple = ()
    before: str = ""
    after: str = ""

    @classmethod
    def create(cls, kind, site, params, before, after):
        """
        Build a record from the graphs on either side of a move.

        Parameters
        ----------

        kind: plumbcalc.moves.MoveKind
            The move that ran.

        site: tuple
            The vertices (or None for "nowhere") the move acted on.

        params: dict
            Extra move parameters. Entries whose value is None are dropped.

        before: plumbcalc.graph.DecoratedGraph
            The graph the move was applied to.

        after: plumbcalc.graph.DecoratedGraph
            The result.
        """
        params = tuple(
            sorted((k, v) for k, v in dict(params).items() if v is not None)
        )
        return cls(kind, tuple(site), params, before.digest(), after.digest())

    @property
    def param_dict(self):
        return dict(self.params)

    def to_line(self):
        """One line of the trace: 'move <kind> @ <site> [key=value ...]'."""
        site = ",".join(_format_value(x) for x in self.site)
        line = f"move {self.kind.tag} @ {site}"
        for key, value in self.params:
            line += f" {key}={_format_value(value)}"
        return line

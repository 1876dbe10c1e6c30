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

__all__ = ["Fuel", "ReductionReport"]

from dataclasses import dataclass as _dataclass

from .._exceptions import PlumbingInputError as _PlumbingInputError
from ..graph import GraphDocument as _GraphDocument
from ..graph import serialize as _serialize


@_dataclass(frozen=True)
class Fuel:
    """
    The most moves a reduction may apply before giving up.

    Parameters
    ----------

    max_moves: int
        A positive move budget.
    """

    max_moves: int

    def __post_init__(self):
        if isinstance(self.max_moves, bool) or not isinstance(self.max_moves, int):
            raise TypeError("'max_moves' must be of type 'int'")
        if self.max_moves <= 0:
            raise _PlumbingInputError("'max_moves' must be positive")

    @classmethod
    def default_for(cls, graph):
        """10 * (vertices + total |euler|)^2, and at least one move."""
        size = len(graph) + sum(abs(d.euler) for d in graph.vertices.values())
        return cls(max(1, 10 * size**2))


@_dataclass(frozen=True)
class ReductionReport:
    """
    The result of a reduction run.

    Parameters
    ----------

    input: plumbcalc.graph.DecoratedGraph
        The graph that was reduced.

    output: plumbcalc.graph.DecoratedGraph
        The final graph.

    trace: tuple[plumbcalc.moves.MoveRecord, ...]
        Every move applied, in order.

    mode: str
        Either "contact" or "topological".

    fuel_used: int
        Number of moves applied.

    normal_form_attained: bool
        Whether the output is in the normal form of the mode.

    fuel_exhausted: bool
        Whether the run stopped on its move budget.

    klein_sites: tuple[plumbcalc.moves.KleinSite, ...]
        Klein bottle pieces left in the output.
    """

    input: object
    output: object
    trace: tuple
    mode: str
    fuel_used: int
    normal_form_attained: bool
    fuel_exhausted: bool = False
    klein_sites: tuple = ()

    def result_line(self):
        """The machine readable 'RESULT ...' line."""
        return (
            f"RESULT mode={self.mode} "
            f"normal_form={str(self.normal_form_attained).lower()} "
            f"fuel_used={self.fuel_used} "
            f"vertices={len(self.output)} edges={self.output.num_edges}"
        )

    def summary(self):
        """A flat dictionary of the headline numbers."""
        return {
            "mode": self.mode,
            "vertices_in": len(self.input),
            "vertices_out": len(self.output),
            "edges_out": self.output.num_edges,
            "fuel_used": self.fuel_used,
            "normal_form": self.normal_form_attained,
            "fuel_exhausted": self.fuel_exhausted,
            "klein_sites": len(self.klein_sites),
        }

    def to_text(self, name="", notes=(), trace=True):
        """
        The output graph in the text format, optionally followed by the
        trace as comment lines, so the text still parses.
        """
        text = _serialize(_GraphDocument(self.output, name, tuple(notes)))
        if trace:
            text += "".join(f"# {record.to_line()}\n" for record in self.trace)
        return text

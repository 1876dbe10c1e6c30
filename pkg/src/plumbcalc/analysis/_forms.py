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
    "GsReport",
    "HomologyInvariant",
    "gs_check",
    "h1_invariant",
    "intersection_form",
]

from dataclasses import dataclass as _dataclass

from .._exceptions import PlumbingInputError as _PlumbingInputError
from ..exact import IntMatrix as _IntMatrix
from ..exact import format_rational as _format_rational
from ..exact import positive_point as _positive_point
from ..exact import smith_normal_form as _smith_normal_form
from ..exact import solve_exact as _solve_exact
from ..graph import DecoratedGraph as _DecoratedGraph


def _check_graph(graph):
    if not isinstance(graph, _DecoratedGraph):
        raise TypeError("'graph' must be of type 'plumbcalc.graph.DecoratedGraph'")


def intersection_form(graph):
    """
    The intersection form of a plumbing: euler numbers on the diagonal and
    edge multiplicities off it, rows and columns in vertex id order.

    Parameters
    ----------

    graph: plumbcalc.graph.DecoratedGraph
        The graph.

    Returns
    -------

    form: plumbcalc.exact.IntMatrix
    """
    _check_graph(graph)
    ids = graph.ids
    return _IntMatrix(
        tuple(
            tuple(
                graph.decoration(v).euler if v == w else graph.multiplicity(v, w)
                for w in ids
            )
            for v in ids
        ),
        len(ids),
    )


@_dataclass(frozen=True)
class GsReport:
    """
    Outcome of a GS criterion check.

    Parameters
    ----------

    mode: str
        Either "positive" or "negative".

    feasible: bool
        Whether a solution of the required sign exists.

    witness: tuple[fractions.Fraction, ...] or None
        A solution b of Q b = a with every entry of the required sign, in
        vertex id order.
    """

    mode: str
    feasible: bool
    witness: tuple = None

    def format_witness(self):
        if self.witness is None:
            return ""
        return ",".join(_format_rational(x) for x in self.witness)


def gs_check(graph, mode="positive"):
    """
    Decide the GS criterion: does Q b = a have a solution with every
    entry strictly positive (or, in negative mode, strictly negative)?

    Parameters
    ----------

    graph: plumbcalc.graph.DecoratedGraph
        A graph with an area on every vertex.

    mode: str
        Either "positive" or "negative".

    Returns
    -------

    report: plumbcalc.analysis.GsReport
    """
    _check_graph(graph)
    if mode not in ("positive", "negative"):
        raise ValueError("'mode' must be 'positive' or 'negative'")
    if not graph.has_areas:
        missing = [v for v, d in graph.vertices.items() if d.area is None]
        raise _PlumbingInputError(f"vertices {missing} have no area")

    areas = [d.area for d in graph.vertices.values()]
    solution = _solve_exact(intersection_form(graph), areas)
    if solution is None:
        return GsReport(mode, False)

    if mode == "negative":
        # b < 0 with Q b = a  <=>  -b > 0 with Q (-b) = -a.
        point = _positive_point(solution.negated())
        if point is None:
            return GsReport(mode, False)
        return GsReport(mode, True, tuple(-x for x in point))

    point = _positive_point(solution)
    if point is None:
        return GsReport(mode, False)
    return GsReport(mode, True, point)


@_dataclass(frozen=True)
class HomologyInvariant:
    """
    First homology of the plumbed boundary: Z^free_rank plus the torsion
    summands Z/t for t in torsion.
    """

    free_rank: int
    torsion: tuple = ()

    def format(self):
        """Render as e.g. 'Z^2+Z/3', or '0' for the trivial group."""
        parts = []
        if self.free_rank:
            parts.append(f"Z^{self.free_rank}")
        parts.extend(f"Z/{t}" for t in self.torsion)
        return "+".join(parts) if parts else "0"

    def __str__(self):
        return self.format()


def h1_invariant(graph):
    """
    First homology of the boundary of an orientable plumbing.

    The free rank is twice the total genus, plus the cycle rank of the
    graph, plus the corank of the intersection form. The torsion is the
    Smith invariant factors of the form greater than one.
    """
    _check_graph(graph)
    if not graph.is_orientable:
        raise _PlumbingInputError("homology needs orientable decorations")

    smith = _smith_normal_form(intersection_form(graph))
    genus = sum(d.genus for d in graph.vertices.values())
    cycles = graph.num_edges - len(graph) + len(graph.components())

    return HomologyInvariant(2 * genus + cycles + smith.corank, smith.torsion)

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

__all__ = ["compare_normal_forms", "obstructed"]

from plumbcalc import _logger

from ..graph import isomorphic as _isomorphic
from ._contact import contact_reduce as _contact_reduce
from ._topological import topological_reduce as _topological_reduce


def compare_normal_forms(contact, topological):
    """
    Compare finished contact and topological reductions of the same graph.

    Parameters
    ----------

    contact: plumbcalc.reduction.ReductionReport
        The report of contact_reduce.

    topological: plumbcalc.reduction.ReductionReport
        The report of topological_reduce.

    Returns
    -------

    obstructed: bool or None
        True if the two normal forms are not isomorphic, False if they
        are, and None if either reduction ran out of fuel.
    """
    if contact.mode != "contact" or topological.mode != "topological":
        raise ValueError("expected a contact report and a topological report")

    if contact.fuel_exhausted or topological.fuel_exhausted:
        _logger.warning("Obstruction is indeterminate: a reduction ran out of fuel")
        return None

    return not _isomorphic(contact.output, topological.output)


def obstructed(graph, fuel=None, blow_up_weight=None):
    """
    Whether the contact and topological reductions of a graph disagree.

    Parameters
    ----------

    graph: plumbcalc.graph.DecoratedGraph
        An orientable graph.

    fuel: plumbcalc.reduction.Fuel
        The move budget for each reduction.

    blow_up_weight: fractions.Fraction
        Passed on to contact_reduce.

    Returns
    -------

    obstructed: bool or None
        True if the two normal forms are not isomorphic, False if they
        are, and None if either reduction ran out of fuel.
    """
    return compare_normal_forms(
        _contact_reduce(graph, fuel, blow_up_weight),
        _topological_reduce(graph, fuel),
    )

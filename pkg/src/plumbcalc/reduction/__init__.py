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

"""
.. currentmodule:: plumbcalc.reduction

Contact and topological reduction, normal form predicates and the
obstruction test.

Classes
=======

.. autosummary::
    :toctree: generated/

    Fuel
    ReductionReport

Functions
=========

.. autosummary::
    :toctree: generated/

    compare_normal_forms
    contact_reduce
    is_contact_normal
    is_tpc_normal
    obstructed
    topological_reduce
"""

from ._report import *
from ._normal import *
from ._contact import *
from ._topological import *
from ._obstruction import *

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
.. currentmodule:: plumbcalc.chains

Maximal chains of spheres, negative continued fractions and lens space
invariants.

Classes
=======

.. autosummary::
    :toctree: generated/

    ChainView
    LensInvariant

Functions
=========

.. autosummary::
    :toctree: generated/

    cf_recurrence
    cf_value
    is_contact_normal_chain
    is_normal_chain
    lens_equivalent
    lens_of_chain
    maximal_chains
    normal_chain_of_rational
"""

from ._chains import *
from ._continued import *

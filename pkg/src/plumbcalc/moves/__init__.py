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
.. currentmodule:: plumbcalc.moves

Local moves on decorated plumbing graphs.

Classes
=======

.. autosummary::
    :toctree: generated/

    KleinSite
    MoveKind
    MoveRecord

Functions
=========

.. autosummary::
    :toctree: generated/

    apply_move
    apply_record
    blow_down_minus_one
    blow_down_plus_one
    blow_up_epsilon
    blow_up_exterior
    blow_up_interior
    can_apply
    chain_replace
    chain_replace_primitives
    klein_pattern
    replay
    rp2_absorb
    slide
    slide_primitives
    zero_chain_absorb
    zero_transfer
    zero_transfer_primitives
"""

from ._records import *
from ._primitive import *
from ._derived import *
from ._replay import *

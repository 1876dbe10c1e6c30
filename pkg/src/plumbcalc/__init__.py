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

from loguru import logger as _logger

from . import exact
from . import graph
from . import moves
from . import chains
from . import analysis
from . import reduction

try:
    from ._version import __version__
except ImportError:
    __version__ = "0.0.0+unknown"

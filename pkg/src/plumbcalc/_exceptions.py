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
Exception hierarchy shared by all plumbcalc subpackages.
"""

__all__ = [
    "PlumbingError",
    "PlumbingInputError",
    "MoveSiteError",
    "MoveNotApplicableError",
    "ContinuedFractionError",
    "ChainError",
    "ReplayError",
]


class PlumbingError(Exception):
    """Base class for all plumbcalc errors."""


class PlumbingInputError(PlumbingError, ValueError):
    """
    Malformed or unsupported input: bad text, mismatched dimensions,
    missing areas or non-orientable vertices where orientable ones
    are required.
    """

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class MoveSiteError(PlumbingError, LookupError):
    """The vertex or edge a move was asked to act on does not exist."""


class MoveNotApplicableError(PlumbingError, ValueError):
    """A move's applicability predicate failed at the requested site."""


class ContinuedFractionError(PlumbingError, ArithmeticError):
    """A negative continued fraction hit a zero denominator."""


class ChainError(PlumbingError, ValueError):
    """A chain invariant was requested outside its domain."""


class ReplayError(PlumbingError, RuntimeError):
    """Replaying a move record did not reproduce its recorded snapshot."""

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

__all__ = ["Rational", "as_rational", "format_rational", "parse_rational"]

from fractions import Fraction as _Fraction

from .._exceptions import PlumbingInputError as _PlumbingInputError

# Exact rationals are Python fractions throughout.
Rational = _Fraction


def as_rational(value):
    """
    Convert an int, Fraction or "p/q" string to an exact rational.

    Floats are rejected since they would smuggle rounding into exact code.
    """
    if isinstance(value, bool):
        raise TypeError("'value' must be an int, Fraction or str")
    if isinstance(value, _Fraction):
        return value
    if isinstance(value, int):
        return _Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError("'value' must be an int, Fraction or str")


def parse_rational(text):
    """
    Parse an exact rational written as "p/q" or as a bare integer.

    Parameters
    ----------

    text: str
        The text to parse.

    Returns
    -------

    value: fractions.Fraction
        The parsed value.
    """
    if not isinstance(text, str):
        raise TypeError("'text' must be of type 'str'")

    stripped = text.strip()
    numerator, sep, denominator = stripped.partition("/")
    try:
        p = int(numerator)
        q = int(denominator) if sep else 1
    except ValueError:
        raise _PlumbingInputError(f"not an exact rational: {text!r}")
    if q == 0:
        raise _PlumbingInputError(f"zero denominator in {text!r}")
    return _Fraction(p, q)


def format_rational(value):
    """
    Format a rational as "p/q" in lowest terms. The denominator is always
    written, so integers come out as "n/1".
    """
    value = as_rational(value)
    return f"{value.numerator}/{value.denominator}"

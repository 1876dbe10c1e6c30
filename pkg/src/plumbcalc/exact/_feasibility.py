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

__all__ = ["positive_feasible", "positive_point"]

from sympy import Rational as _Rational

from .._exceptions import PlumbingInputError as _PlumbingInputError
from ._matrix import AffineSolution as _AffineSolution
from ._matrix import _to_fraction, _to_rational

# A strict inequality is stored as (coefficients, constant), meaning
# sum_j coefficients[j] * t_j + constant > 0, with sympy.Rational entries.


def _normalise(rows):
    """
    Scale every row so its leading coefficient has unit magnitude, then
    drop duplicates. Returns None if a constant row is violated.
    """
    normalised = set()
    for coefficients, constant in rows:
        lead = next((c for c in coefficients if c != 0), None)
        if lead is None:
            if constant <= 0:
                return None
            continue
        scale = abs(lead)
        normalised.add(
            (tuple(c / scale for c in coefficients), constant / scale)
        )
    return sorted(normalised)


def _eliminate(rows, var):
    """Fourier-Motzkin elimination of t_var from a strict system."""
    lower, upper, rest = [], [], []
    for row in rows:
        a = row[0][var]
        if a > 0:
            lower.append(row)
        elif a < 0:
            upper.append(row)
        else:
            rest.append(row)

    for lo_coeffs, lo_const in lower:
        for hi_coeffs, hi_const in upper:
            # Both multipliers are positive, so strictness is preserved.
            u = -hi_coeffs[var]
            v = lo_coeffs[var]
            coefficients = tuple(
                u * x + v * y for x, y in zip(lo_coeffs, hi_coeffs)
            )
            rest.append((coefficients, u * lo_const + v * hi_const))

    return _normalise(rest)


def positive_point(solution):
    """
    Find a point of an affine solution set with every coordinate strictly
    positive.

    Parameters
    ----------

    solution: plumbcalc.exact.AffineSolution
        The solution set to search.

    Returns
    -------

    point: tuple[fractions.Fraction, ...] or None
        A strictly positive point, or None if there is none.
    """
    if not isinstance(solution, _AffineSolution):
        raise TypeError("'solution' must be of type 'plumbcalc.exact.AffineSolution'")

    nvars = solution.dimension
    for vector in solution.kernel:
        if len(vector) != len(solution.particular):
            raise _PlumbingInputError("kernel vector has the wrong length")

    system = [
        (
            tuple(_to_rational(solution.kernel[j][i]) for j in range(nvars)),
            _to_rational(solution.particular[i]),
        )
        for i in range(len(solution.particular))
    ]

    current = _normalise(system)
    if current is None:
        return None

    # Eliminate the last parameter first, keeping each intermediate system
    # for back substitution.
    stages = []
    for var in reversed(range(nvars)):
        stages.append((var, current))
        current = _eliminate(current, var)
        if current is None:
            return None

    values = [_Rational(0)] * nvars
    for var, rows in reversed(stages):
        lo = hi = None
        for coefficients, constant in rows:
            a = coefficients[var]
            if a == 0:
                continue
            rest = constant + sum(
                coefficients[j] * values[j] for j in range(var)
            )
            bound = -rest / a
            if a > 0:
                lo = bound if lo is None else max(lo, bound)
            else:
                hi = bound if hi is None else min(hi, bound)

        if lo is not None and hi is not None:
            values[var] = (lo + hi) / 2
        elif lo is not None:
            values[var] = lo + 1
        elif hi is not None:
            values[var] = hi - 1

    point = solution.point(_to_fraction(v) for v in values)
    assert all(x > 0 for x in point)
    return point


def positive_feasible(solution):
    """Whether an affine solution set meets the open positive orthant."""
    return positive_point(solution) is not None

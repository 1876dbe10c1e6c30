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
    "AffineSolution",
    "IntMatrix",
    "SmithForm",
    "determinant",
    "smith_normal_form",
    "solve_exact",
]

from dataclasses import dataclass as _dataclass
from fractions import Fraction as _Fraction
from math import gcd as _gcd

from sympy import Matrix as _Matrix
from sympy import Rational as _Rational
from sympy.matrices.normalforms import smith_normal_form as _smith_normal_form
from sympy.polys.domains import ZZ as _ZZ

from .._exceptions import PlumbingInputError as _PlumbingInputError


@_dataclass(frozen=True)
class IntMatrix:
    """
    An immutable dense matrix of arbitrary precision integers.

    Parameters
    ----------

    rows: tuple[tuple[int, ...], ...]
        The matrix entries, row by row.

    ncols: int
        The number of columns. Only needed for matrices with no rows.
    """

    rows: tuple
    ncols: int = None

    def __post_init__(self):
        rows = tuple(tuple(row) for row in self.rows)
        width = self.ncols
        for row in rows:
            if width is None:
                width = len(row)
            if len(row) != width:
                raise _PlumbingInputError("matrix rows have unequal length")
            for entry in row:
                if isinstance(entry, bool) or not isinstance(entry, int):
                    raise TypeError("matrix entries must be of type 'int'")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "ncols", 0 if width is None else width)

    @classmethod
    def zeros(cls, nrows, ncols):
        return cls(tuple((0,) * ncols for _ in range(nrows)), ncols)

    @classmethod
    def identity(cls, n):
        return cls(
            tuple(tuple(int(i == j) for j in range(n)) for i in range(n)), n
        )

    @property
    def nrows(self):
        return len(self.rows)

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    @property
    def is_square(self):
        return self.nrows == self.ncols

    def __getitem__(self, index):
        i, j = index
        return self.rows[i][j]

    def transpose(self):
        return IntMatrix(
            tuple(tuple(row[j] for row in self.rows) for j in range(self.ncols)),
            self.nrows,
        )

    def __matmul__(self, other):
        if not isinstance(other, IntMatrix):
            return NotImplemented
        if self.ncols != other.nrows:
            raise _PlumbingInputError(
                f"cannot multiply {self.shape} and {other.shape} matrices"
            )
        cols = other.transpose().rows
        return IntMatrix(
            tuple(
                tuple(sum(a * b for a, b in zip(row, col)) for col in cols)
                for row in self.rows
            ),
            other.ncols,
        )

    def to_lists(self):
        return [list(row) for row in self.rows]


@_dataclass(frozen=True)
class SmithForm:
    """
    The diagonal of a Smith normal form: non-negative invariant factors
    d_1 | d_2 | ... with any zeros last.
    """

    diagonal: tuple

    @property
    def rank(self):
        return sum(1 for d in self.diagonal if d != 0)

    @property
    def corank(self):
        """Number of zero invariant factors."""
        return sum(1 for d in self.diagonal if d == 0)

    @property
    def torsion(self):
        """The invariant factors greater than one."""
        return tuple(d for d in self.diagonal if d > 1)


@_dataclass(frozen=True)
class AffineSolution:
    """
    The solution set of a linear system: particular + span(kernel).

    Parameters
    ----------

    particular: tuple[fractions.Fraction, ...]
        One solution, with every free variable set to zero.

    kernel: tuple[tuple[fractions.Fraction, ...], ...]
        A basis of the null space, one vector per free variable.
    """

    particular: tuple
    kernel: tuple = ()

    @property
    def dimension(self):
        return len(self.kernel)

    def point(self, coefficients=()):
        """Return particular + sum_j coefficients[j] * kernel[j]."""
        coefficients = tuple(coefficients)
        if len(coefficients) != len(self.kernel):
            raise _PlumbingInputError(
                f"expected {len(self.kernel)} coefficients, got {len(coefficients)}"
            )
        point = list(self.particular)
        for c, vector in zip(coefficients, self.kernel):
            for i, entry in enumerate(vector):
                point[i] += c * entry
        return tuple(point)

    def negated(self):
        """The solution set of the same system with the right hand side negated."""
        return AffineSolution(
            tuple(-x for x in self.particular),
            self.kernel,
        )


def _check_int_matrix(matrix):
    if not isinstance(matrix, IntMatrix):
        raise TypeError("'matrix' must be of type 'plumbcalc.exact.IntMatrix'")


def _to_fraction(value):
    value = _Rational(value)
    return _Fraction(int(value.p), int(value.q))


def _to_rational(value):
    value = _Fraction(value)
    return _Rational(value.numerator, value.denominator)


def _invariant_factors(entries):
    """
    Rewrite the absolute diagonal of any diagonal form as the divisibility
    chain d_1 | d_2 | ... with zeros last.
    """
    d = [abs(x) for x in entries]
    for i in range(len(d)):
        for j in range(i + 1, len(d)):
            g = _gcd(d[i], d[j])
            d[i], d[j] = g, 0 if g == 0 else d[i] * d[j] // g
    return tuple(d)


def smith_normal_form(matrix):
    """
    Compute the Smith normal form diagonal of an integer matrix.

    Only the invariant factors are returned; the unimodular transforms are
    not tracked.

    Parameters
    ----------

    matrix: plumbcalc.exact.IntMatrix
        The matrix to reduce.

    Returns
    -------

    form: plumbcalc.exact.SmithForm
        The invariant factors, of length min(nrows, ncols).
    """
    _check_int_matrix(matrix)

    size = min(matrix.shape)
    if size == 0:
        return SmithForm(())

    form = _smith_normal_form(_Matrix(matrix.to_lists()), domain=_ZZ)
    return SmithForm(_invariant_factors(int(form[i, i]) for i in range(size)))


def determinant(matrix):
    """
    Exact determinant of a square integer matrix by fraction-free
    (Bareiss) elimination.
    """
    _check_int_matrix(matrix)
    if not matrix.is_square:
        raise _PlumbingInputError(
            f"determinant of a non-square {matrix.shape} matrix"
        )

    if matrix.nrows == 0:
        return 1
    return int(_Matrix(matrix.to_lists()).det(method="bareiss"))


def solve_exact(matrix, rhs):
    """
    Solve matrix @ x = rhs over the rationals.

    Parameters
    ----------

    matrix: plumbcalc.exact.IntMatrix
        The coefficient matrix.

    rhs: sequence of int or fractions.Fraction
        The right hand side, one entry per row.

    Returns
    -------

    solution: plumbcalc.exact.AffineSolution or None
        The full solution set, or None when the system is inconsistent.
    """
    _check_int_matrix(matrix)
    rhs = tuple(_Fraction(b) for b in rhs)
    nrows, ncols = matrix.shape
    if len(rhs) != nrows:
        raise _PlumbingInputError(
            f"right hand side has length {len(rhs)}, expected {nrows}"
        )

    # sympy has no use for empty systems.
    if ncols == 0:
        if any(b != 0 for b in rhs):
            return None
        return AffineSolution((), ())
    if nrows == 0:
        return AffineSolution(
            (_Fraction(0),) * ncols,
            tuple(
                tuple(_Fraction(int(i == j)) for j in range(ncols))
                for i in range(ncols)
            ),
        )

    a = _Matrix(matrix.to_lists())
    b = _Matrix([_to_rational(x) for x in rhs])
    try:
        solution, params = a.gauss_jordan_solve(b)
    except ValueError:
        return None

    # Free variables set to zero.
    particular = solution.subs({p: 0 for p in params})
    kernel = a.nullspace()

    return AffineSolution(
        tuple(_to_fraction(x) for x in particular),
        tuple(tuple(_to_fraction(x) for x in vector) for vector in kernel),
    )

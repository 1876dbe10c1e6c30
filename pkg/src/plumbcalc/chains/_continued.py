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
    "LensInvariant",
    "cf_recurrence",
    "cf_value",
    "is_contact_normal_chain",
    "is_normal_chain",
    "lens_equivalent",
    "lens_of_chain",
    "normal_chain_of_rational",
]

from dataclasses import dataclass as _dataclass
from fractions import Fraction as _Fraction

import math as _math

from .._exceptions import ChainError as _ChainError
from .._exceptions import ContinuedFractionError as _ContinuedFractionError
from ._chains import ChainView as _ChainView


def _components(chain):
    if isinstance(chain, _ChainView):
        return tuple(chain.components)
    return tuple(chain)


def cf_value(components):
    """
    Evaluate the negative continued fraction

        m_1 - 1 / (m_2 - 1 / (... - 1 / m_l))

    exactly, from the innermost term outwards.

    Parameters
    ----------

    components: sequence of int or plumbcalc.chains.ChainView
        The terms m_1, ..., m_l.

    Returns
    -------

    value: fractions.Fraction
    """
    terms = _components(components)
    if not terms:
        raise _ContinuedFractionError("empty continued fraction")

    value = _Fraction(terms[-1])
    for m in reversed(terms[:-1]):
        if value == 0:
            raise _ContinuedFractionError(
                f"undefined continued fraction {list(terms)}"
            )
        value = m - 1 / value
    return value


def cf_recurrence(components):
    """
    Numerator and denominator of a negative continued fraction from the
    forward three-term recurrences p_i = m_i p_(i-1) - p_(i-2) and
    q_i = m_i q_(i-1) - q_(i-2).
    """
    p_prev, p = 0, 1
    q_prev, q = -1, 0
    for m in _components(components):
        p_prev, p = p, m * p - p_prev
        q_prev, q = q, m * q - q_prev
    return p, q


@_dataclass(frozen=True, order=True)
class LensInvariant:
    """
    The lens space L(p, q) bounded by a chain plumbing. With p > 1 we have
    0 < q < p. The degenerate cases are L(0, 1) = S1 x S2 and L(1, 0) = S3.
    """

    p: int
    q: int

    def __str__(self):
        return f"L({self.p},{self.q})"


def lens_of_chain(chain):
    """
    The lens space L(p, q) bounding a standalone chain, where
    -p/q = cf_value(chain) up to the normalisation of q modulo p.

    Parameters
    ----------

    chain: plumbcalc.chains.ChainView
        A chain forming a whole connected component.

    Returns
    -------

    lens: plumbcalc.chains.LensInvariant
    """
    if not isinstance(chain, _ChainView):
        raise TypeError("'chain' must be of type 'plumbcalc.chains.ChainView'")
    if not chain.standalone:
        raise _ChainError("lens invariant needs a chain forming a whole component")
    if not chain.components:
        raise _ChainError("lens invariant of an empty chain")
    if chain.components[-1] in (0, 1):
        raise _ChainError(
            f"last component {chain.components[-1]} makes the lens invariant undefined"
        )

    value = cf_value(chain)
    n, d = value.numerator, value.denominator
    if n > 0:
        p, q = n, -d
    else:
        p, q = -n, d

    if p == 0:
        return LensInvariant(0, 1)
    if p == 1:
        return LensInvariant(1, 0)
    return LensInvariant(p, q % p)


def lens_equivalent(a, b):
    """Whether two lens invariants agree up to q <-> q^-1 mod p."""
    if a.p != b.p:
        return False
    if a.p <= 1 or a.q == b.q:
        return True
    return (a.q * b.q) % a.p == 1


def normal_chain_of_rational(r):
    """
    The unique expansion r = [m_1, ..., m_l] with every m_i >= 2.

    Parameters
    ----------

    r: fractions.Fraction or int
        A rational strictly greater than one.

    Returns
    -------

    components: tuple[int, ...]
    """
    r = _Fraction(r)
    if r <= 1:
        raise _ChainError(f"normal chains exist only for rationals above 1, got {r}")

    terms = []
    while True:
        m = _math.ceil(r)
        terms.append(m)
        if m == r:
            return tuple(terms)
        r = 1 / (m - r)


def is_contact_normal_chain(chain):
    """A block of zeros followed by components that are all at least 2."""
    terms = _components(chain)
    m = 0
    while m < len(terms) and terms[m] == 0:
        m += 1
    return all(x >= 2 for x in terms[m:])


def is_normal_chain(chain):
    """m_i >= 2 for i > 1, and m_1 is either 0 or at least 2."""
    terms = _components(chain)
    if not terms:
        return True
    return (terms[0] == 0 or terms[0] >= 2) and all(x >= 2 for x in terms[1:])

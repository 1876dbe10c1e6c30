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

__all__ = ["detect_klein_pieces", "detect_positive_torsion", "is_star_shaped"]

from ..chains import maximal_chains as _maximal_chains
from ..moves import klein_pattern as _klein_pattern
from ._forms import _check_graph


def detect_klein_pieces(graph):
    """
    Every Klein bottle piece in the graph, as a list of
    plumbcalc.moves.KleinSite ordered by center id.
    """
    _check_graph(graph)
    sites = []
    for v in graph.ids:
        site = _klein_pattern(graph, v)
        if site is not None:
            sites.append(site)
    return sites


def _is_zero_cycle(graph, component):
    return len(component) == 4 and all(
        graph.decoration(v).genus == 0
        and graph.decoration(v).euler == 0
        and graph.degree(v) == 2
        and len(set(graph.neighbours(v))) == 2
        for v in component
    )


def detect_positive_torsion(graph):
    """
    Whether the graph holds four (0,0) spheres in a row, each of degree at
    most two. A connected component that is exactly a square of (0,0)
    spheres does not count.
    """
    _check_graph(graph)
    zeros = {
        v
        for v, d in graph.vertices.items()
        if d.genus == 0 and d.euler == 0 and graph.degree(v) <= 2
    }

    components = {v: c for c in graph.components() for v in c}

    seen = set()
    for v in sorted(zeros):
        if v in seen:
            continue
        run = {v}
        stack = [v]
        while stack:
            for n in graph.neighbours(stack.pop()):
                if n in zeros and n not in run:
                    run.add(n)
                    stack.append(n)
        seen |= run

        # Any connected run of four or more vertices of degree at most two
        # contains four in a row.
        if len(run) >= 4 and not _is_zero_cycle(graph, components[v]):
            return True
    return False


def is_star_shaped(graph):
    """
    Whether deleting every maximal chain leaves a single vertex that every
    chain is attached to.
    """
    _check_graph(graph)
    chains = _maximal_chains(graph)
    in_chains = {v for c in chains for v in c.ids}
    remaining = [v for v in graph.ids if v not in in_chains]
    if len(remaining) != 1:
        return False
    (center,) = remaining
    for chain in chains:
        attached = {chain.left_attach, chain.right_attach} - {None}
        if attached != {center}:
            return False
    return True

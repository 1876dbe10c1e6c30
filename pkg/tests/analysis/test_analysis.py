import random
from fractions import Fraction

import pytest

from plumbcalc._exceptions import PlumbingInputError
from plumbcalc.analysis import (
    HomologyInvariant,
    detect_klein_pieces,
    detect_positive_torsion,
    gs_check,
    h1_invariant,
    intersection_form,
    is_star_shaped,
)
from plumbcalc.exact import determinant
from plumbcalc.graph import (
    DecoratedGraph,
    VertexDecoration,
    parse,
    random_graph,
    random_graphs,
)


def _read(data_dir, name):
    return parse((data_dir / name).read_text()).graph


def _with_areas(graph, areas):
    for v, a in zip(graph.ids, areas):
        graph = graph.with_decoration(v, graph.decoration(v).with_area(Fraction(a)))
    return graph


def test_intersection_form(kt):
    """Euler numbers on the diagonal, multiplicities off it."""
    assert intersection_form(kt).rows == ((0, 1), (1, 0))
    assert determinant(intersection_form(kt)) == -1

    graph = parse("v 1 g=0 k=-1\nv 2 g=0 k=3\ne 1 2\ne 1 2\n").graph
    assert intersection_form(graph).rows == ((-1, 2), (2, 3))


def test_gs_positive(kt):
    """The KT graph with areas 5 and 7 has a positive GS solution."""
    report = gs_check(kt, "positive")
    assert report.feasible
    assert report.witness == (Fraction(7), Fraction(5))
    assert report.format_witness() == "7/1,5/1"

    report = gs_check(kt, "negative")
    assert not report.feasible
    assert report.witness is None
    assert report.format_witness() == ""


def test_gs_single_sphere():
    """A single sphere decides by the sign of its euler number."""
    positive = _with_areas(DecoratedGraph.chain([1]), [2])
    assert gs_check(positive, "positive").witness == (Fraction(2),)
    assert not gs_check(positive, "negative").feasible

    negative = _with_areas(DecoratedGraph.chain([-2]), [3])
    assert gs_check(negative, "negative").witness == (Fraction(-3, 2),)
    assert not gs_check(negative, "positive").feasible

    zero = _with_areas(DecoratedGraph.chain([0]), [3])
    assert not gs_check(zero, "positive").feasible
    assert not gs_check(zero, "negative").feasible


def test_gs_errors(pair12):
    """GS needs areas everywhere and a known mode."""
    with pytest.raises(PlumbingInputError):
        gs_check(pair12)
    with pytest.raises(ValueError):
        gs_check(_with_areas(pair12, [1, 1]), "sideways")


def test_gs_properties():
    """Witnesses solve the system with the right sign, and scaling the
    areas does not change feasibility."""
    rng = random.Random(12)
    for _ in range(200):
        graph = random_graph(rng, max_vertices=6, with_areas=True)
        form = intersection_form(graph)
        areas = [d.area for d in graph.vertices.values()]

        positive = gs_check(graph, "positive")
        negative = gs_check(graph, "negative")
        for report, sign in ((positive, 1), (negative, -1)):
            if report.feasible:
                assert all(sign * b > 0 for b in report.witness)
                for row, a in zip(form.rows, areas):
                    assert sum(x * b for x, b in zip(row, report.witness)) == a

        scaled = graph
        for v, d in graph.vertices.items():
            scaled = scaled.with_decoration(v, d.with_area(3 * d.area))
        assert gs_check(scaled, "positive").feasible == positive.feasible
        assert gs_check(scaled, "negative").feasible == negative.feasible


def test_gs_signs_exclude_each_other():
    """No graph is GS feasible with both signs: the form is symmetric and
    the areas are positive."""
    for graph in random_graphs(41, 300, max_vertices=7, with_areas=True):
        positive = gs_check(graph, "positive")
        negative = gs_check(graph, "negative")
        assert not (positive.feasible and negative.feasible)


def test_h1_examples(kt, data_dir):
    """First homology of the example graphs."""
    assert h1_invariant(kt) == HomologyInvariant(4, ())
    assert h1_invariant(kt).format() == "Z^4"

    assert h1_invariant(_read(data_dir, "torus0.plumb")) == HomologyInvariant(3, ())
    assert h1_invariant(DecoratedGraph.chain([-2])).torsion == (2,)
    assert str(h1_invariant(_read(data_dir, "chain22.plumb"))) == "Z/3"
    assert h1_invariant(DecoratedGraph.chain([1])).format() == "0"

    # A square of zeros: one cycle plus the corank of the form.
    square = DecoratedGraph.chain([0, 0, 0, 0]).with_edge(1, 4)
    assert h1_invariant(square).free_rank == 1 + 2


def test_h1_needs_orientable():
    """Homology is only computed for orientable decorations."""
    graph = DecoratedGraph({1: VertexDecoration(-1, 0)})
    with pytest.raises(PlumbingInputError):
        h1_invariant(graph)


def test_klein_detection(klein, kt):
    """Klein bottle pieces are found by their center."""
    (site,) = detect_klein_pieces(klein)
    assert site.center == 2
    assert site.vertices == (2, 3, 4)
    assert detect_klein_pieces(kt) == []


def test_positive_torsion(data_dir, kt):
    """Four zero spheres in a row signal positive Giroux torsion."""
    assert detect_positive_torsion(_read(data_dir, "zeros4.plumb"))
    assert detect_positive_torsion(DecoratedGraph.chain([0, 0, 0, 0]))
    assert not detect_positive_torsion(DecoratedGraph.chain([0, 0, 0, -2, 0]))
    assert not detect_positive_torsion(kt)

    square = DecoratedGraph.chain([0, 0, 0, 0]).with_edge(1, 4)
    assert not detect_positive_torsion(square)

    longer = DecoratedGraph.chain([0] * 7)
    assert detect_positive_torsion(longer)



def _lengthen_zeros(graph, rng):
    """
    Add one (0,0) sphere to a run of them: as a leaf on an end of the run,
    or inside a simple edge between two of them. Returns None when the graph
    has no such site.
    """
    def zero(v):
        d = graph.decoration(v)
        return d.genus == 0 and d.euler == 0 and graph.degree(v) <= 2

    new = graph.next_id()
    sites = [("leaf", v, None) for v in graph.ids if zero(v) and graph.degree(v) <= 1]
    sites += [
        ("inside", v, w)
        for (v, w) in graph.edges
        if zero(v) and zero(w) and graph.multiplicity(v, w) == 1
    ]
    if not sites:
        return None

    kind, v, w = rng.choice(sites)
    longer = graph.with_vertex(new, VertexDecoration(0, 0)).with_edge(v, new)
    if kind == "inside":
        longer = longer.without_edge(v, w).with_edge(new, w)
    return longer


def test_positive_torsion_is_monotone():
    """Lengthening a run of zero spheres never loses a torsion pattern."""
    rng = random.Random(29)
    found = 0
    for graph in random_graphs(
        29, 400, max_vertices=8, euler_range=(-1, 0), sphere_bias=0.9
    ):
        longer = _lengthen_zeros(graph, rng)
        if longer is None:
            continue
        if detect_positive_torsion(graph):
            found += 1
            assert detect_positive_torsion(longer)
    assert found > 0


def test_star_shaped(data_dir, kt):
    """Deleting every chain leaves a single center."""
    assert is_star_shaped(_read(data_dir, "star.plumb"))
    assert not is_star_shaped(kt)
    assert not is_star_shaped(DecoratedGraph.chain([-2, -2]))

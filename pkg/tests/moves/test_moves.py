import random
from fractions import Fraction

import pytest

from plumbcalc._exceptions import MoveNotApplicableError, MoveSiteError, ReplayError
from plumbcalc.analysis import h1_invariant
from plumbcalc.graph import (
    DecoratedGraph,
    VertexDecoration,
    isomorphic,
    parse,
    random_graphs,
)
from plumbcalc.moves import (
    MoveKind,
    MoveRecord,
    apply_move,
    apply_record,
    blow_down_minus_one,
    blow_down_plus_one,
    blow_up_exterior,
    blow_up_interior,
    can_apply,
    chain_replace,
    chain_replace_primitives,
    klein_pattern,
    replay,
    rp2_absorb,
    slide,
    slide_primitives,
    zero_chain_absorb,
    zero_transfer,
    zero_transfer_primitives,
)


def _graph(text):
    return parse(text, allow_nonorientable=True).graph


def _eulers(graph):
    return {v: d.euler for v, d in graph.vertices.items()}


def test_blow_up_interior(kt):
    """Blowing up an edge inserts a (0,-1) sphere and lowers both ends."""
    result = blow_up_interior(kt, (1, 2))

    assert result.ids == (1, 2, 3)
    assert result.edges == ((1, 3), (2, 3))
    assert result.decoration(1) == VertexDecoration(1, -1, Fraction(5) - Fraction(1, 200))
    assert result.decoration(2) == VertexDecoration(1, -1, Fraction(7) - Fraction(1, 200))
    assert result.decoration(3) == VertexDecoration(0, -1, Fraction(1, 200))

    chain = blow_up_interior(DecoratedGraph.chain([-2, -2]), (1, 2))
    assert isomorphic(chain, DecoratedGraph.chain([-3, -1, -3]))

    zeros = blow_up_interior(DecoratedGraph.chain([0, 0]), (2, 1))
    assert isomorphic(zeros, DecoratedGraph.chain([-1, -1, -1]))

    with pytest.raises(MoveSiteError):
        blow_up_interior(kt, (1, 3))


def test_blow_up_interior_epsilon(kt):
    """An explicit blow-up area must be smaller than the incident areas."""
    result = blow_up_interior(kt, (1, 2), epsilon=Fraction(1, 2))
    assert result.decoration(3).area == Fraction(1, 2)
    assert result.decoration(1).area == Fraction(9, 2)

    with pytest.raises(ValueError):
        blow_up_interior(kt, (1, 2), epsilon=Fraction(5))


def test_blow_up_exterior(kt, single1):
    """Blowing up away from the edges attaches a (0,-1) leaf."""
    result = blow_up_exterior(single1, 1)
    assert isomorphic(result, DecoratedGraph.chain([0, -1]))

    result = blow_up_exterior(kt, 1)
    assert result.decoration(1).euler == -1
    assert result.decoration(3).euler == -1
    assert result.neighbours(3) == (1,)

    result = blow_up_exterior(DecoratedGraph.chain([-2]), 1)
    assert isomorphic(result, DecoratedGraph.chain([-3, -1]))

    with pytest.raises(MoveSiteError):
        blow_up_exterior(kt, 5)


def test_blow_down_minus_one():
    """Blowing down a (0,-1) sphere joins its neighbours."""
    graph = _graph("v 1 g=1 k=0\nv 2 g=0 k=-1\nv 3 g=1 k=0\ne 1 2\ne 2 3\n")
    result = blow_down_minus_one(graph, 2)
    assert result.edges == ((1, 3),)
    assert _eulers(result) == {1: 1, 3: 1}

    leaf = blow_down_minus_one(DecoratedGraph.chain([0, -1]), 2)
    assert leaf == DecoratedGraph({1: VertexDecoration(0, 1)})

    isolated = blow_down_minus_one(DecoratedGraph.chain([-1]), 1)
    assert len(isolated) == 0

    looped = _graph("v 1 g=0 k=-1\nv 2 g=1 k=0\ne 1 2\ne 1 2\n")
    with pytest.raises(MoveNotApplicableError):
        blow_down_minus_one(looped, 1)
    with pytest.raises(MoveNotApplicableError):
        blow_down_minus_one(graph, 1)


def test_blow_down_plus_one(pair12):
    """Blowing down a (0,+1) sphere lowers its neighbours."""
    result = blow_down_plus_one(pair12, 1)
    assert result == DecoratedGraph({2: VertexDecoration(0, 1)})

    graph = _graph("v 1 g=1 k=3\nv 2 g=0 k=1\nv 3 g=1 k=5\ne 1 2\ne 2 3\n")
    result = blow_down_plus_one(graph, 2)
    assert _eulers(result) == {1: 2, 3: 4}
    assert result.edges == ((1, 3),)

    assert len(blow_down_plus_one(DecoratedGraph.chain([1]), 1)) == 0

    assert h1_invariant(pair12) == h1_invariant(blow_down_plus_one(pair12, 1))


def test_zero_chain_absorb():
    """A (0,0) sphere between two vertices merges them."""
    graph = _graph("v 1 g=1 k=2\nv 2 g=0 k=0\nv 3 g=1 k=3\ne 1 2\ne 2 3\n")
    result = zero_chain_absorb(graph, 2)
    assert result == DecoratedGraph({1: VertexDecoration(2, 5)})
    assert h1_invariant(graph) == h1_invariant(result)

    chain = DecoratedGraph.chain([-2, 0, -2])
    result = zero_chain_absorb(chain, 2)
    assert result == DecoratedGraph({1: VertexDecoration(0, -4)})
    assert h1_invariant(chain) == h1_invariant(result)

    with pytest.raises(MoveNotApplicableError):
        zero_chain_absorb(DecoratedGraph.chain([0, -2]), 1)


def test_zero_chain_absorb_keeps_edges():
    """Edges of the absorbed neighbour move to the kept vertex."""
    graph = DecoratedGraph.chain([-2, 0, -3, -4])
    result = zero_chain_absorb(graph, 2)
    assert result.ids == (1, 4)
    assert result.edges == ((1, 4),)
    assert result.decoration(1).euler == -5


def test_rp2_absorb(klein):
    """A Klein bottle piece becomes a crosscap on its attachment."""
    site = klein_pattern(klein, 2)
    assert site.leaves == (3, 4)
    assert site.attachment == 1
    assert str(site) == "2:3,4>1"

    result = rp2_absorb(klein, 2)
    assert result == DecoratedGraph({1: VertexDecoration(-2, -3)}, [])

    twice = _graph(
        "v 1 g=-2 k=0\nv 2 g=0 k=1\nv 3 g=0 k=2\nv 4 g=0 k=2\ne 1 2\ne 2 3\ne 2 4\n"
    )
    assert rp2_absorb(twice, 2).decoration(1).genus == -3

    wrong = _graph("v 1 g=1 k=0\nv 2 g=0 k=0\nv 3 g=0 k=2\nv 4 g=0 k=3\ne 1 2\ne 2 3\ne 2 4\n")
    assert klein_pattern(wrong, 2) is None
    with pytest.raises(MoveNotApplicableError):
        rp2_absorb(wrong, 2)


def test_zero_transfer():
    """Weight moves across a zero sphere."""
    graph = DecoratedGraph.chain([-3, 0, -2])

    result = zero_transfer(graph, 2, 1, 3, 1)
    assert _eulers(result) == {1: -4, 2: 0, 3: -1}

    assert zero_transfer(graph, 2, 1, 3, 0) == graph
    assert zero_transfer(graph, 2, 1, 3, -2) == zero_transfer(graph, 2, 3, 1, 2)

    leaf = DecoratedGraph.chain([-3, 0])
    assert _eulers(zero_transfer(leaf, 2, 1, None, 1)) == {1: -4, 2: 0}
    assert _eulers(zero_transfer(leaf, 2, None, 1, 1)) == {1: -2, 2: 0}

    with pytest.raises(MoveNotApplicableError):
        zero_transfer(graph, 1, 2, None, 1)
    with pytest.raises(MoveNotApplicableError):
        zero_transfer(graph, 2, 1, None, 1)


def test_slide():
    """A pair of zeros slides past its neighbour."""
    graph = DecoratedGraph.chain([-3, 0, 0, -2])
    result = slide(graph, (2, 3), "left")
    assert _eulers(result) == {1: 0, 2: 0, 3: -3, 4: -2}

    result = slide(graph, (2, 3), "right")
    assert _eulers(result) == {1: -3, 2: -2, 3: 0, 4: 0}

    zeros = DecoratedGraph.chain([0, 0, 0, -5])
    assert slide(zeros, (2, 3), "left") == zeros

    # Sliding past a non-sphere moves only its Euler number.
    node = _graph("v 1 g=2 k=4\nv 2 g=0 k=0\nv 3 g=0 k=0\ne 1 2\ne 2 3\n")
    result = slide(node, (2, 3))
    assert _eulers(result) == {1: 0, 2: 0, 3: 4}
    assert result.decoration(1).genus == 2
    assert result.decoration(3).is_sphere
    assert isomorphic(slide_primitives(node, (2, 3))[0], result)

    torus = _graph(
        "v 1 g=0 k=-2\nv 2 g=0 k=0\nv 3 g=0 k=0\nv 4 g=1 k=3\ne 1 2\ne 2 3\ne 3 4\n"
    )
    result = slide(torus, (2, 3), "right")
    assert _eulers(result) == {1: -2, 2: 3, 3: 0, 4: 0}
    assert [result.decoration(v).genus for v in result.ids] == [0, 0, 0, 1]

    with pytest.raises(MoveNotApplicableError):
        slide(DecoratedGraph.chain([-3, 0, -1, -2]), (2, 3))
    with pytest.raises(ValueError):
        slide(graph, (2, 3), "up")


def test_chain_replace():
    """(A, 1, B) becomes (A-1, 0, 0, B-1)."""
    graph = DecoratedGraph.chain([-2, 1, -2])
    result = chain_replace(graph, 2)
    assert isomorphic(result, DecoratedGraph.chain([-3, 0, 0, -3]))
    assert result.edges == ((1, 4), (3, 5), (4, 5))

    result = chain_replace(DecoratedGraph.chain([5, 1, 5]), 2)
    assert isomorphic(result, DecoratedGraph.chain([4, 0, 0, 4]))

    _, records = chain_replace_primitives(graph, 2)
    assert [r.kind for r in records] == [
        MoveKind.BLOW_UP_INTERIOR,
        MoveKind.BLOW_UP_INTERIOR,
        MoveKind.BLOW_DOWN_MINUS_ONE,
    ]

    with pytest.raises(MoveNotApplicableError):
        chain_replace(DecoratedGraph.chain([-2, 1]), 2)


def test_blow_up_then_down_is_identity():
    """Blowing down the new sphere undoes every blow-up."""
    for graph in random_graphs(21, 100, with_areas=True):
        for edge in set(graph.edges):
            up = blow_up_interior(graph, edge)
            assert blow_down_minus_one(up, graph.next_id()) == graph
        for v in graph.ids:
            up = blow_up_exterior(graph, v)
            assert blow_down_minus_one(up, graph.next_id()) == graph


def _zero_sites(graph):
    """Zero spheres with two distinct neighbours, or one."""
    for v, d in graph.vertices.items():
        if d.genus != 0 or d.euler != 0:
            continue
        neighbours = graph.neighbours(v)
        if len(neighbours) == 2 and neighbours[0] != neighbours[1]:
            yield v, neighbours[0], neighbours[1]
        elif len(neighbours) == 1:
            yield v, neighbours[0], None


def test_derived_moves_match_primitives():
    """Derived moves agree with their primitive expansions, and the
    expansions replay."""
    rng = random.Random(4)
    checked = 0
    for graph in random_graphs(8, 300, with_areas=True):
        for v, a, b in _zero_sites(graph):
            amount = rng.randint(-3, 3)
            direct = zero_transfer(graph, v, a, b, amount)
            expanded, records = zero_transfer_primitives(graph, v, a, b, amount)
            assert isomorphic(direct, expanded)
            assert len(records) == 2 * abs(amount)
            assert replay(graph, records) == expanded
            assert all(r.kind.contact_safe for r in records)
            checked += 1

            if b is None:
                continue
            partner = graph.decoration(b)
            if partner.genus == 0 and partner.euler == 0:
                if can_apply(graph, MoveKind.SLIDE, (v, b), {"direction": "left"}):
                    direct = slide(graph, (v, b))
                    expanded, records = slide_primitives(graph, (v, b))
                    assert isomorphic(direct, expanded)
                    assert replay(graph, records) == expanded

        for v, d in graph.vertices.items():
            if can_apply(graph, MoveKind.CHAIN_REPLACE, (v,)):
                direct = chain_replace(graph, v)
                expanded, records = chain_replace_primitives(graph, v)
                assert direct == expanded
                assert replay(graph, records) == expanded

    assert checked > 50


def test_contact_moves_preserve_homology():
    """Every contact preserving move keeps the first homology."""
    rng = random.Random(9)
    replaced_count = slide_count = 0
    for graph in random_graphs(31, 500):
        before = h1_invariant(graph)

        v = rng.choice(graph.ids)
        assert h1_invariant(blow_up_exterior(graph, v)) == before

        if graph.edges:
            edge = rng.choice(graph.edges)
            assert h1_invariant(blow_up_interior(graph, edge)) == before

        for v in graph.ids:
            if can_apply(graph, MoveKind.BLOW_DOWN_MINUS_ONE, (v,)):
                assert h1_invariant(blow_down_minus_one(graph, v)) == before

        for v, a, b in _zero_sites(graph):
            assert h1_invariant(zero_transfer(graph, v, a, b, 2)) == before

        for v in graph.ids:
            if not can_apply(graph, MoveKind.CHAIN_REPLACE, (v,)):
                continue
            replaced, records = chain_replace_primitives(graph, v)
            assert all(r.kind.contact_safe for r in records)
            assert h1_invariant(replaced) == before
            replaced_count += 1

            # The new pair of zeros, slid either way.
            new = sorted(set(replaced.ids) - set(graph.ids))
            for site in (tuple(new), tuple(reversed(new))):
                for direction in ("left", "right"):
                    params = {"direction": direction}
                    if can_apply(replaced, MoveKind.SLIDE, site, params):
                        slid = slide(replaced, site, direction)
                        assert h1_invariant(slid) == before
                        slide_count += 1

    assert replaced_count > 0
    assert slide_count > 0


def test_plus_one_blow_down_preserves_homology_on_forests():
    """On forests the (0,+1) blow-down keeps the first homology."""
    checked = 0
    for graph in random_graphs(33, 500, forest=True):
        before = h1_invariant(graph)
        for v in graph.ids:
            if can_apply(graph, MoveKind.BLOW_DOWN_PLUS_ONE, (v,)):
                assert h1_invariant(blow_down_plus_one(graph, v)) == before
                checked += 1
    assert checked > 0


def test_no_loops_or_negative_areas():
    """Blow-ups keep every area positive."""
    for graph in random_graphs(5, 100, with_areas=True):
        for edge in set(graph.edges):
            result = blow_up_interior(graph, edge)
            assert all(d.area > 0 for d in result.vertices.values())
            assert all(v != w for v, w in result.edges)


def test_records(kt):
    """Records carry digests and replay only on the graph they came from."""
    after = blow_up_interior(kt, (1, 2))
    record = MoveRecord.create(
        MoveKind.BLOW_UP_INTERIOR, (1, 2), {"epsilon": Fraction(1, 200)}, kt, after
    )

    assert record.to_line() == "move BlowUpInterior @ 1,2 epsilon=1/200"
    assert apply_record(kt, record) == after

    with pytest.raises(ReplayError):
        apply_record(after, record)

    line = MoveRecord.create(
        MoveKind.ZERO_TRANSFER, (2, 1, None), {"amount": 3}, kt, kt
    ).to_line()
    assert line == "move ZeroTransfer @ 2,1,- amount=3"

    assert MoveKind.from_tag("Slide") is MoveKind.SLIDE
    assert MoveKind.SLIDE.contact_safe
    assert not MoveKind.RP2_ABSORB.contact_safe
    with pytest.raises(ValueError):
        MoveKind.from_tag("Teleport")


def test_apply_move(kt):
    """Moves can be applied by kind and site."""
    assert apply_move(kt, MoveKind.BLOW_UP_EXTERIOR, (2,)) == blow_up_exterior(kt, 2)
    assert not can_apply(kt, MoveKind.BLOW_DOWN_MINUS_ONE, (1,))
    assert not can_apply(kt, MoveKind.BLOW_UP_INTERIOR, (1, 7))
    with pytest.raises(TypeError):
        apply_move(kt, "BlowUpExterior", (2,))

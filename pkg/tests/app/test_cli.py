import tempfile

from pathlib import Path

import pytest

from plumbcalc.app import main
from plumbcalc.graph import parse

PAIR_CONTACT = """\
RESULT mode=contact normal_form=true fuel_used=6 vertices=4 edges=3
plumbing v1
# name: pair
# note: the +1 blow-up of a single +1 sphere
v 1 g=0 k=0
v 2 g=0 k=0
v 3 g=0 k=0
v 4 g=0 k=-3
e 1 2
e 1 3
e 2 4
"""

PAIR_TOPOLOGICAL = """\
RESULT mode=topological normal_form=true fuel_used=1 vertices=1 edges=0
plumbing v1
# name: pair
# note: the +1 blow-up of a single +1 sphere
v 2 g=0 k=1
"""


def _run(capsys, *args):
    code = main([str(a) for a in args])
    return code, capsys.readouterr().out


def test_reduce_contact(capsys, data_dir):
    """Contact reduction of the +1 pair."""
    code, out = _run(capsys, "reduce", data_dir / "pair12.plumb")
    assert code == 0
    assert out == PAIR_CONTACT


def test_reduce_topological(capsys, data_dir):
    """Topological reduction of the +1 pair."""
    code, out = _run(
        capsys, "reduce", data_dir / "pair12.plumb", "--mode", "topological"
    )
    assert code == 0
    assert out == PAIR_TOPOLOGICAL


def test_reduce_trace_and_dot(capsys, data_dir):
    """The trace follows the graph; DOT replaces the text format."""
    code, out = _run(capsys, "reduce", data_dir / "pair12.plumb", "--trace")
    assert code == 0
    lines = out.splitlines()
    assert lines[-6:] == [
        "move BlowUpExterior @ 1",
        "move ZeroTransfer @ 1,2,3 amount=1",
        "move ZeroTransfer @ 3,1,- amount=2",
        "move BlowUpExterior @ 2",
        "move ZeroTransfer @ 2,1,4 amount=1",
        "move Slide @ 2,4 direction=left",
    ]

    code, out = _run(capsys, "reduce", data_dir / "kt.plumb", "--dot")
    assert code == 0
    assert out.splitlines()[0] == (
        "RESULT mode=contact normal_form=true fuel_used=0 vertices=2 edges=1"
    )
    assert 'graph "kodaira-thurston" {' in out
    assert '    1 [label="(1,0)"];' in out


def test_reduce_is_deterministic(capsys, data_dir):
    """Two runs print the same bytes."""
    first = _run(capsys, "reduce", data_dir / "klein.plumb", "--trace")
    second = _run(capsys, "reduce", data_dir / "klein.plumb", "--trace")
    assert first == second


def test_reduce_output_parses(capsys, data_dir):
    """Everything after the result line is a valid plumbing document."""
    _, out = _run(capsys, "reduce", data_dir / "single1.plumb")
    result, _, body = out.partition("\n")
    assert result.startswith("RESULT mode=contact normal_form=true fuel_used=2")
    document = parse(body)
    assert document.name == "single"
    assert len(document.graph) == 2


def test_fuel_exhausted(capsys, data_dir):
    """A reduction that runs out of fuel exits with code 3."""
    code, out = _run(capsys, "reduce", data_dir / "pair12.plumb", "--fuel", "2")
    assert code == 3
    assert out.startswith("RESULT mode=contact normal_form=false fuel_used=2 ")


def test_check_gs(capsys, data_dir):
    """The GS criterion on the KT graph."""
    code, out = _run(capsys, "check", data_dir / "kt.plumb", "--gs", "positive")
    assert code == 0
    assert out == "RESULT gs=positive feasible=true witness=7/1,5/1\n"

    code, out = _run(capsys, "check", data_dir / "kt.plumb", "--gs", "negative")
    assert code == 1
    assert out == "RESULT gs=negative feasible=false\n"

    # No areas.
    code, out = _run(capsys, "check", data_dir / "pair12.plumb", "--gs", "positive")
    assert code == 2
    assert out == "RESULT error=input command=check\n"


def test_check_obstructed(capsys, data_dir):
    """Obstruction verdicts and their exit codes."""
    code, out = _run(capsys, "check", data_dir / "pair12.plumb", "--obstructed")
    assert (code, out) == (1, "RESULT obstructed=true\n")

    code, out = _run(capsys, "check", data_dir / "kt.plumb", "--obstructed")
    assert (code, out) == (0, "RESULT obstructed=false\n")

    code, out = _run(
        capsys, "check", data_dir / "pair12.plumb", "--obstructed", "--fuel", "1"
    )
    assert (code, out) == (3, "RESULT obstructed=indeterminate\n")


def test_check_patterns(capsys, data_dir):
    """Klein pieces, positive torsion and star shape."""
    code, out = _run(capsys, "check", data_dir / "klein.plumb", "--klein")
    assert (code, out) == (1, "RESULT klein=1 sites=2:3,4>1\n")

    code, out = _run(capsys, "check", data_dir / "kt.plumb", "--klein")
    assert (code, out) == (0, "RESULT klein=0\n")

    code, out = _run(capsys, "check", data_dir / "zeros4.plumb", "--torsion")
    assert (code, out) == (1, "RESULT torsion=true\n")

    code, out = _run(capsys, "check", data_dir / "chain22.plumb", "--torsion")
    assert (code, out) == (0, "RESULT torsion=false\n")

    code, out = _run(capsys, "check", data_dir / "star.plumb", "--star")
    assert (code, out) == (0, "RESULT star=true\n")

    code, out = _run(capsys, "check", data_dir / "kt.plumb", "--star")
    assert (code, out) == (1, "RESULT star=false\n")


def test_invariants(capsys, data_dir):
    """Homology, determinant, form and lens spaces."""
    code, out = _run(capsys, "invariants", data_dir / "kt.plumb")
    assert code == 0
    assert out == (
        "RESULT h1=Z^4 det=-1\n"
        "h1 free_rank=4 torsion=\n"
        "form 0,1;1,0\n"
    )

    code, out = _run(capsys, "invariants", data_dir / "chain22.plumb")
    assert code == 0
    assert out == (
        "RESULT h1=Z/3 det=3\n"
        "h1 free_rank=0 torsion=3\n"
        "form -2,1;1,-2\n"
        "chain ids=1,2 components=2,2 lens=L(3,1)\n"
    )

    code, out = _run(capsys, "invariants", data_dir / "single1.plumb")
    assert out.splitlines()[-1] == "chain ids=1 components=-1 lens=L(1,0)"


def test_iso(capsys, data_dir):
    """Isomorphism verdicts."""
    code, out = _run(
        capsys, "iso", data_dir / "kt.plumb", data_dir / "kt_relabeled.plumb"
    )
    assert (code, out) == (0, "RESULT iso=true\n")

    code, out = _run(
        capsys, "iso", data_dir / "chain23.plumb", data_dir / "chain32.plumb"
    )
    assert (code, out) == (0, "RESULT iso=true\n")

    code, out = _run(capsys, "iso", data_dir / "kt.plumb", data_dir / "single1.plumb")
    assert (code, out) == (1, "RESULT iso=false\n")


def test_input_errors(capsys, data_dir):
    """Unreadable input gives a result line and exit code 2."""
    code, out = _run(capsys, "reduce", data_dir / "bad_loop.plumb")
    assert (code, out) == (2, "RESULT error=input command=reduce\n")

    code, out = _run(capsys, "invariants", data_dir / "missing.plumb")
    assert (code, out) == (2, "RESULT error=input command=invariants\n")

    code, out = _run(
        capsys, "reduce", data_dir / "kt.plumb", "--blow-up-weight", "2/1"
    )
    assert (code, out) == (2, "RESULT error=input command=reduce\n")

    with pytest.raises(SystemExit):
        main([])
    with pytest.raises(SystemExit):
        main(["check", str(data_dir / "kt.plumb")])


def test_option_errors(capsys, data_dir, monkeypatch):
    """Invalid options are input errors, but other exceptions propagate."""
    from plumbcalc.io import dict_to_yaml

    kt = data_dir / "kt.plumb"
    code, out = _run(capsys, "reduce", kt, "--fuel", "abc")
    assert (code, out) == (2, "RESULT error=input command=reduce\n")

    with tempfile.TemporaryDirectory() as tmpdir:
        path = dict_to_yaml({"colour": "blue"}, tmpdir, "bad.yaml")
        code, out = _run(capsys, "iso", kt, kt, "--config", path)
        assert (code, out) == (2, "RESULT error=input command=iso\n")

    def broken(a, b):
        raise TypeError("not an input problem")

    monkeypatch.setattr("plumbcalc.graph.isomorphic", broken)
    with pytest.raises(TypeError):
        main(["iso", str(kt), str(kt)])


def test_options_per_command(capsys, data_dir):
    """Commands only accept the options they use."""
    kt = str(data_dir / "kt.plumb")
    with pytest.raises(SystemExit):
        main(["iso", kt, kt, "--overwrite"])
    with pytest.raises(SystemExit):
        main(["invariants", kt, "--fuel", "3"])
    with pytest.raises(SystemExit):
        main(["check", kt, "--klein", "--mode", "topological"])
    with pytest.raises(SystemExit):
        main(["reduce", kt, "--run-parallel"])

    code, out = _run(capsys, "check", kt, "--obstructed", "--fuel", "50")
    assert (code, out) == (0, "RESULT obstructed=false\n")
    code, out = _run(capsys, "invariants", kt, "--log-level", "info")
    assert code == 0


def test_yaml_config(capsys, data_dir):
    """Options can come from a YAML file."""
    from plumbcalc.io import dict_to_yaml

    with tempfile.TemporaryDirectory() as tmpdir:
        path = dict_to_yaml({"mode": "topological"}, tmpdir, "options.yaml")
        code, out = _run(
            capsys, "reduce", data_dir / "pair12.plumb", "--config", path
        )
        assert code == 0
        assert out == PAIR_TOPOLOGICAL


def test_batch(capsys, data_dir):
    """Batch runs print a summary line and one line per file."""
    with tempfile.TemporaryDirectory() as tmpdir:
        output = Path(tmpdir) / "output"
        pair = data_dir / "pair12.plumb"
        kt = data_dir / "kt.plumb"
        code, out = _run(
            capsys, "batch", pair, kt, "--output-directory", output
        )
        assert code == 0
        assert out.splitlines() == [
            "RESULT files=2 attained=2 failed=0",
            f"RESULT file={pair} mode=contact normal_form=true fuel_used=6 "
            "vertices=4 obstructed=true h1=0",
            f"RESULT file={kt} mode=contact normal_form=true fuel_used=0 "
            "vertices=2 obstructed=false h1=Z^4",
        ]
        assert (output / "summary.parquet").exists()

        code, out = _run(
            capsys, "batch", pair, data_dir / "bad_loop.plumb", "--overwrite",
            "--output-directory", output,
        )
        assert code == 2
        assert out.splitlines()[0] == "RESULT files=2 attained=1 failed=1"
        assert out.splitlines()[2].endswith("error=input")

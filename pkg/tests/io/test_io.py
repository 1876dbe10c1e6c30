import pytest

from plumbcalc._exceptions import PlumbingInputError
from plumbcalc.graph import GraphDocument, random_graphs
from plumbcalc.io import (
    dataframe_to_parquet,
    dict_to_yaml,
    parquet_to_dataframe,
    read_graph,
    write_graph,
    yaml_to_dict,
)


def test_parquet():
    import random
    import pandas as pd
    import tempfile
    from pathlib import Path

    outdir = tempfile.TemporaryDirectory()
    data = {
        "file": [f"graph{i}.plumb" for i in range(100)],
        "fuel_used": [random.randint(0, 100) for _ in range(100)],
        "normal_form": [random.choice([True, False]) for _ in range(100)],
        "h1": [random.choice(["0", "Z^2", "Z/3"]) for _ in range(100)],
    }
    df = pd.DataFrame(data)
    meta = {"mode": "contact", "fuel": None}
    path = dataframe_to_parquet(df, meta, filepath=outdir.name)
    assert path == Path(outdir.name) / "summary.parquet"

    df_back, meta_back = parquet_to_dataframe(path)
    assert df_back.equals(df)
    assert meta_back == meta

    with pytest.raises(KeyError):
        parquet_to_dataframe(path, meta_key="somethingelse")
    with pytest.raises(ValueError):
        parquet_to_dataframe(Path(outdir.name) / "missing.parquet")
    outdir.cleanup()


def test_yaml():
    import tempfile
    from pathlib import Path

    with tempfile.TemporaryDirectory() as tmpdir:
        d = {"mode": "topological", "fuel": 100, "blow_up_weight": "1/8"}
        path = dict_to_yaml(d, tmpdir)
        assert path == Path(tmpdir) / "config.yaml"
        assert yaml_to_dict(str(path)) == d

        with pytest.raises(FileNotFoundError):
            yaml_to_dict(str(Path(tmpdir) / "missing.yaml"))

        scalar = Path(tmpdir) / "scalar.yaml"
        scalar.write_text("just a string\n")
        with pytest.raises(ValueError):
            yaml_to_dict(str(scalar))


def test_graph_files(data_dir):
    """Graphs written to disk read back unchanged, name and notes included."""
    import tempfile
    from pathlib import Path

    with tempfile.TemporaryDirectory() as tmpdir:
        for i, graph in enumerate(random_graphs(3, 20, with_areas=True)):
            document = GraphDocument(graph, f"random {i}", ("seed 3",))
            path = write_graph(document, Path(tmpdir) / "nested" / f"{i}.plumb")
            assert read_graph(path) == document

    kt = read_graph(data_dir / "kt.plumb")
    assert kt.name == "kodaira-thurston"

    with pytest.raises(FileNotFoundError):
        read_graph(data_dir / "missing.plumb")
    with pytest.raises(PlumbingInputError):
        read_graph(data_dir / "bad_loop.plumb")
    with pytest.raises(TypeError):
        read_graph(3)

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
    "dataframe_to_parquet",
    "dict_to_yaml",
    "parquet_to_dataframe",
    "read_graph",
    "write_graph",
    "yaml_to_dict",
]

from pathlib import Path as _Path

import json as _json
import os as _os
import pyarrow as _pa
import pyarrow.parquet as _pq
import yaml as _yaml

from plumbcalc import _logger

from ..graph import parse as _parse
from ..graph import serialize as _serialize

_META_KEY = "plumbcalc"


def read_graph(path, allow_nonorientable=False):
    """
    Read a plumbing v1 text file.

    Parameters
    ----------

    path: str or pathlib.Path
        The file to read.

    allow_nonorientable: bool
        Whether to accept negative genus.

    Returns
    -------

    document: plumbcalc.graph.GraphDocument
    """
    if not isinstance(path, (str, _Path)):
        raise TypeError("'path' must be of type 'str' or 'pathlib.Path'")
    path = _Path(path)
    if not path.is_file():
        raise FileNotFoundError(f"File not found: {path}")

    return _parse(path.read_text(encoding="utf-8"), allow_nonorientable)


def write_graph(document, path):
    """
    Write a graph or document as a plumbing v1 text file.

    Parameters
    ----------

    document: plumbcalc.graph.GraphDocument or plumbcalc.graph.DecoratedGraph
        What to write.

    path: str or pathlib.Path
        The file to write. Parent directories are created.
    """
    path = _Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(_serialize(document), encoding="utf-8")
    return path


def dataframe_to_parquet(df, metadata, filepath=None, filename=None):
    """
    Save a dataframe to parquet format with custom metadata.

    Parameters
    ----------

    df: pandas.DataFrame
        The dataframe to be saved, e.g. a batch summary.

    metadata: dict
        JSON-serialisable metadata stored in the schema under the
        'plumbcalc' key.

    filepath: str or pathlib.Path
        The parent directory in to which the parquet file will be saved.
        If None, save to current working directory.

    filename: str
        The file name (default 'summary.parquet').
    """
    if filepath is None:
        filepath = _Path.cwd()
    else:
        filepath = _Path(filepath)

    table = _pa.Table.from_pandas(df)
    combined_meta = {
        _META_KEY.encode(): _json.dumps(metadata).encode(),
        **(table.schema.metadata or {}),
    }
    table = table.replace_schema_metadata(combined_meta)

    if filename is None:
        filename = "summary.parquet"
    if not filename.endswith(".parquet"):
        filename += ".parquet"
    _pq.write_table(table, filepath / filename)
    return filepath / filename


def parquet_to_dataframe(filepath, meta_key=_META_KEY):
    """
    Read a parquet file written by dataframe_to_parquet.

    Parameters
    ----------

    filepath: str or pathlib.Path
        Path to the parquet file.

    meta_key: str
        Key of the custom metadata.

    Returns
    -------

    df: pandas.DataFrame
        The stored table.

    metadata: dict
        The stored metadata.
    """
    try:
        table = _pq.read_table(filepath)
    except Exception as e:
        raise ValueError(f"Unable to read parquet file: {e}")
    try:
        meta_json = table.schema.metadata[meta_key.encode()]
    except (KeyError, TypeError):
        raise KeyError(f"No metadata with key {meta_key} found")
    return table.to_pandas(), _json.loads(meta_json)


def dict_to_yaml(data_dict, path, filename="config.yaml"):
    """
    Write a dictionary to a YAML file.

    Parameters
    ----------

    data_dict: dict
        The dictionary to be written to a YAML file.

    path: str or pathlib.Path
        The directory to write to.

    filename: str
        The name of the YAML file to be written (default 'config.yaml').
    """
    path = _Path(path) / filename
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        with path.open("w") as yaml_file:
            _yaml.dump(data_dict, yaml_file)
    except OSError as e:
        _logger.error(f"Error writing the dictionary to {path}: {e}")
        raise
    return path


def yaml_to_dict(path):
    """
    Read a YAML file and return the contents as a dictionary.

    Parameters
    ----------

    path: str
        The path to the YAML file to be read.
    """
    if not isinstance(path, str):
        raise TypeError("'path' must be of type 'str'")

    if not _os.path.isfile(path):
        raise FileNotFoundError(f"File not found: {path}")

    try:
        with open(path, "r") as f:
            d = _yaml.safe_load(f)
    except Exception as e:
        raise ValueError(f"Could not load YAML file: {e}")

    if not isinstance(d, dict):
        raise ValueError(f"YAML file does not hold a mapping: {path}")

    return d

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

__all__ = ["Runner"]

from pathlib import Path as _Path

import pandas as _pd

from plumbcalc import _logger

from .._exceptions import PlumbingError as _PlumbingError
from .._exceptions import PlumbingInputError as _PlumbingInputError
from ..analysis import h1_invariant as _h1_invariant
from ..config import Config as _Config
from ..graph import GraphDocument as _GraphDocument
from ..graph import serialize as _serialize
from ..io import dataframe_to_parquet as _dataframe_to_parquet
from ..io import dict_to_yaml as _dict_to_yaml
from ..io import read_graph as _read_graph
from ..reduction import Fuel as _Fuel
from ..reduction import compare_normal_forms as _compare_normal_forms
from ..reduction import contact_reduce as _contact_reduce
from ..reduction import topological_reduce as _topological_reduce

_SUMMARY = "summary.parquet"
_CONFIG = "config.yaml"


def _verdict(value):
    return "indeterminate" if value is None else str(value).lower()


def reduce_file(path, mode, fuel=None, blow_up_weight=None):
    """
    Reduce a single plumbing file.

    Parameters
    ----------

    path: str
        The file to reduce.

    mode: str
        Either "contact" or "topological".

    fuel: int
        The move budget, or None for the default.

    blow_up_weight: fractions.Fraction
        Passed on to the contact reduction.

    Returns
    -------

    result: dict
        One row of the batch summary. The reduced graph text is stored
        under 'output'; 'error' is empty on success.
    """
    result = {"file": str(path), "name": "", "mode": mode, "error": ""}
    try:
        document = _read_graph(path)
    except (_PlumbingInputError, OSError, UnicodeDecodeError) as e:
        result["error"] = f"input: {e}"
        return result

    graph = document.graph
    budget = _Fuel.default_for(graph) if fuel is None else _Fuel(fuel)
    # The verdict compares both reports.
    contact = _contact_reduce(graph, budget, blow_up_weight)
    topological = _topological_reduce(graph, budget)
    report = contact if mode == "contact" else topological

    result.update(report.summary())
    result["name"] = document.name
    result["obstructed"] = _verdict(_compare_normal_forms(contact, topological))
    result["h1"] = _h1_invariant(report.output).format()
    result["output"] = _serialize(
        _GraphDocument(report.output, document.name, document.notes)
    )
    _logger.info(
        f"Reduced {path}: {len(graph)} -> {len(report.output)} vertices "
        f"in {report.fuel_used} moves"
    )
    return result


class Runner:
    """
    Reduces a batch of plumbing files and collects a summary.
    """

    def __init__(self, files, config):
        """
        Constructor.

        Parameters
        ----------

        files: list of str or pathlib.Path
            The plumbing files to reduce.

        config: plumbcalc.config.Config
            The run configuration.
        """
        if isinstance(files, (str, _Path)):
            files = [files]
        if not isinstance(files, (list, tuple)) or not all(
            isinstance(f, (str, _Path)) for f in files
        ):
            raise TypeError("'files' must be a list of 'str' or 'pathlib.Path'")
        if len(files) == 0:
            raise ValueError("'files' must not be empty")
        self._files = [str(f) for f in files]

        if not isinstance(config, _Config):
            raise TypeError("'config' must be of type 'plumbcalc.config.Config'")
        self._config = config

        # Check the output directory and create names of output files.
        self._check_directory()

        if self._config.output_directory is not None and self._config.write_config:
            _dict_to_yaml(self._config.as_dict(), self._config.output_directory, _CONFIG)

    def __str__(self):
        """Return a string representation of the object."""
        return f"Runner(files={self._files}, config={self._config})"

    def __repr__(self):
        """Return a string representation of the object."""
        return self.__str__()

    @property
    def files(self):
        return list(self._files)

    def get_config(self):
        """Return the configuration of the runner."""
        return self._config

    def _output_names(self):
        names = [_Path(f).stem + ".reduced.plumb" for f in self._files]
        return names + [_SUMMARY, _CONFIG]

    def _check_directory(self):
        """
        Refuse to replace existing output files unless overwriting is allowed.
        """
        directory = self._config.output_directory
        if directory is None:
            return

        existing = sorted(
            {directory / name for name in self._output_names() if (directory / name).exists()}
        )
        if not existing:
            return
        if not self._config.overwrite:
            names = [str(path) for path in existing]
            _logger.warning(
                f"The following files already exist, use --overwrite to overwrite them: {names}"
            )
            raise FileExistsError(f"Output files already exist: {names}")
        for path in existing:
            path.unlink()

    def _job_args(self, path):
        return (
            path,
            self._config.mode,
            self._config.fuel,
            self._config.blow_up_weight,
        )

    @staticmethod
    def _failed(path, mode, error):
        """The summary row of a file whose reduction raised."""
        _logger.error(f"Exception raised for {path}: {error}")
        kind = "input" if isinstance(error, _PlumbingInputError) else "reduction"
        return {"file": path, "name": "", "mode": mode, "error": f"{kind}: {error}"}

    def run(self):
        """
        Reduce every file, in parallel when configured.

        Returns
        -------

        results: list[dict]
            One summary row per input file, in input order.
        """
        results = [None] * len(self._files)

        if self._config.run_parallel and len(self._files) > 1:
            import concurrent.futures as _futures

            with _futures.ProcessPoolExecutor(
                max_workers=self._config.max_workers
            ) as executor:
                jobs = {}
                for index, path in enumerate(self._files):
                    jobs[executor.submit(reduce_file, *self._job_args(path))] = index
                try:
                    for job in _futures.as_completed(jobs):
                        index = jobs[job]
                        try:
                            results[index] = job.result()
                        except _PlumbingError as e:
                            results[index] = self._failed(
                                self._files[index], self._config.mode, e
                            )
                # Kill all current and future jobs if keyboard interrupt.
                except KeyboardInterrupt:
                    for pid in executor._processes:
                        executor._processes[pid].terminate()
                    raise
        else:
            for index, path in enumerate(self._files):
                try:
                    results[index] = reduce_file(*self._job_args(path))
                except _PlumbingError as e:
                    results[index] = self._failed(path, self._config.mode, e)

        if self._config.output_directory is not None:
            self._write_outputs(results)

        failed = sum(1 for r in results if r["error"])
        _logger.success(
            f"Batch complete: {len(results) - failed} of {len(results)} files reduced"
        )
        return results

    def _write_outputs(self, results):
        directory = self._config.output_directory
        for result in results:
            if "output" in result:
                path = directory / (_Path(result["file"]).stem + ".reduced.plumb")
                path.write_text(result["output"], encoding="utf-8")
                _logger.debug(f"Wrote {path}")

        rows = [{k: v for k, v in r.items() if k != "output"} for r in results]
        _dataframe_to_parquet(
            _pd.DataFrame(rows), self._config.as_dict(), directory, _SUMMARY
        )

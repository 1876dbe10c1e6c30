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

"""
Configuration class for plumbcalc commands and batch runs.
"""

__all__ = ["Config"]

from fractions import Fraction as _Fraction
from pathlib import Path as _Path

import os as _os
import sys as _sys

from plumbcalc import _logger

# Ids of the sinks owned by Config, keyed by role. Each new Config replaces
# these and leaves any other sink alone. Id 0 is the loguru default.
_handlers = {"stderr": 0, "file": None}


def _stderr(message):
    # Resolved per message, so a replaced sys.stderr is honoured.
    _sys.stderr.write(message)


def _remove_handler(role):
    handler = _handlers[role]
    _handlers[role] = None
    if handler is not None:
        try:
            _logger.remove(handler)
        except ValueError:
            pass


def _replace_handler(role, sink, **kwargs):
    _remove_handler(role)
    _handlers[role] = _logger.add(sink, **kwargs)


class Config:
    """
    Class for storing a plumbcalc configuration.
    """

    # A dictionary of choices for options that support them.
    _choices = {
        "log_level": [level.lower() for level in _logger._core.levels],
        "mode": ["contact", "topological"],
    }

    def __init__(
        self,
        log_level="warning",
        log_file=None,
        mode="contact",
        fuel=None,
        blow_up_weight="1/1000",
        run_parallel=False,
        max_workers=None,
        output_directory=None,
        write_config=True,
        overwrite=False,
    ):
        """
        Constructor.

        Parameters
        ----------

        log_level: str
            The logging level.

        log_file: str
            Name of a log file written inside the output directory.

        mode: str
            The reduction to run: 'contact' or 'topological'.

        fuel: int
            The most moves a reduction may apply. Defaults to ten times the
            square of the vertex count plus the total absolute euler number.

        blow_up_weight: str
            Fraction of the smallest incident area given to the sphere created
            by a blow-up, written as 'p/q'. Only used when areas are tracked.

        run_parallel: bool
            Whether to process batch files in parallel.

        max_workers: int
            Number of worker processes for parallel batch runs. Defaults to the
            number of CPUs.

        output_directory: str
            Directory for reduced graphs, the batch summary and the config file.

        write_config: bool
            Whether to write the configuration to the output directory.

        overwrite: bool
            Whether to overwrite existing files in the output directory.
        """

        # Setup logger before doing anything else
        self.log_level = log_level
        self.log_file = log_file
        self.output_directory = output_directory

        self.mode = mode
        self.fuel = fuel
        self.blow_up_weight = blow_up_weight
        self.run_parallel = run_parallel
        self.max_workers = max_workers
        self.write_config = write_config
        self.overwrite = overwrite

    def __str__(self):
        """Return a string representation of this object."""
        items = []
        for k, v in self.as_dict().items():
            items.append(f"{k}='{v}'" if isinstance(v, str) else f"{k}={v}")
        return f"Config({', '.join(items)})"

    def __repr__(self):
        """Return a string representation of this object."""
        return self.__str__()

    def __eq__(self, other):
        """Equality operator."""
        if not isinstance(other, Config):
            return NotImplemented
        return self.as_dict() == other.as_dict()

    @staticmethod
    def from_yaml(path):
        """
        Create a Config object from a YAML file.

        Parameters
        ----------

        path: str
            Path to YAML file.
        """
        from ..io import yaml_to_dict as _yaml_to_dict

        return Config(**_yaml_to_dict(path))

    def as_dict(self):
        """Convert config object to a dictionary of plain YAML-friendly values."""
        d = {}
        for attr, value in self.__dict__.items():
            key = attr[1:]
            if isinstance(value, _Path):
                d[key] = str(value)
            elif isinstance(value, _Fraction):
                d[key] = f"{value.numerator}/{value.denominator}"
            else:
                d[key] = value
        return d

    @property
    def log_level(self):
        return self._log_level

    @log_level.setter
    def log_level(self, log_level):
        if not isinstance(log_level, str):
            raise TypeError("'log_level' must be of type 'str'")
        log_level = log_level.lower().replace(" ", "")
        if log_level not in self._choices["log_level"]:
            raise ValueError(
                f"Log level not recognised. Valid log levels are: {', '.join(self._choices['log_level'])}"
            )
        # Standard output is reserved for results, so logs go to stderr.
        _replace_handler(
            "stderr",
            _stderr,
            level=log_level.upper(),
            colorize=False if "NO_COLOR" in _os.environ else None,
        )
        self._log_level = log_level

    @property
    def log_file(self):
        return self._log_file

    @log_file.setter
    def log_file(self, log_file):
        if log_file is not None and not isinstance(log_file, str):
            raise TypeError("'log_file' must be of type 'str'")
        # The sink is added once the output directory is known.
        self._log_file = log_file

    @property
    def output_directory(self):
        return self._output_directory

    @output_directory.setter
    def output_directory(self, output_directory):
        if output_directory is None:
            if self.log_file is not None:
                _logger.warning(
                    f"Ignoring log file '{self.log_file}' since no output directory is set"
                )
            _remove_handler("file")
            self._output_directory = None
            return

        if not isinstance(output_directory, _Path):
            try:
                output_directory = _Path(output_directory)
            except Exception as e:
                raise ValueError(f"Could not convert output path. {e}")
        if not output_directory.is_dir():
            try:
                output_directory.mkdir(parents=True, exist_ok=True)
            except OSError:
                raise ValueError(
                    f"Output directory {output_directory} does not exist and cannot be created"
                )
        if self.log_file is not None:
            _replace_handler(
                "file", output_directory / self.log_file, level=self.log_level.upper()
            )
            _logger.debug(f"Logging to {output_directory / self.log_file}")
        else:
            _remove_handler("file")
        self._output_directory = output_directory

    @property
    def mode(self):
        return self._mode

    @mode.setter
    def mode(self, mode):
        if not isinstance(mode, str):
            raise TypeError("'mode' must be of type 'str'")
        mode = mode.lower().replace(" ", "")
        if mode not in self._choices["mode"]:
            raise ValueError(
                f"Reduction mode not recognised. Valid modes are: {', '.join(self._choices['mode'])}"
            )
        self._mode = mode

    @property
    def fuel(self):
        return self._fuel

    @fuel.setter
    def fuel(self, fuel):
        if fuel is None or (
            isinstance(fuel, str) and fuel.lower().replace(" ", "") == "none"
        ):
            self._fuel = None
            return
        if isinstance(fuel, bool):
            raise ValueError("'fuel' must be of type 'int'")
        try:
            fuel = int(fuel)
        except (TypeError, ValueError):
            raise ValueError("'fuel' must be of type 'int'")
        if fuel <= 0:
            raise ValueError("'fuel' must be positive")
        self._fuel = fuel

    @property
    def blow_up_weight(self):
        return self._blow_up_weight

    @blow_up_weight.setter
    def blow_up_weight(self, blow_up_weight):
        if isinstance(blow_up_weight, bool) or not isinstance(
            blow_up_weight, (str, int, _Fraction)
        ):
            raise TypeError("'blow_up_weight' must be of type 'str'")
        try:
            weight = _Fraction(blow_up_weight)
        except (ValueError, ZeroDivisionError):
            raise ValueError(
                f"Could not parse 'blow_up_weight' as a rational: {blow_up_weight}"
            )
        if not 0 < weight < 1:
            raise ValueError("'blow_up_weight' must lie strictly between 0 and 1")
        self._blow_up_weight = weight

    @property
    def run_parallel(self):
        return self._run_parallel

    @run_parallel.setter
    def run_parallel(self, run_parallel):
        if not isinstance(run_parallel, bool):
            raise ValueError("'run_parallel' must be of type 'bool'")
        self._run_parallel = run_parallel

    @property
    def max_workers(self):
        return self._max_workers

    @max_workers.setter
    def max_workers(self, max_workers):
        if max_workers is None or (
            isinstance(max_workers, str)
            and max_workers.lower().replace(" ", "") == "none"
        ):
            self._max_workers = _os.cpu_count()
        else:
            try:
                self._max_workers = int(max_workers)
            except (TypeError, ValueError):
                raise ValueError("'max_workers' must be of type 'int'")
            if self._max_workers < 1:
                raise ValueError("'max_workers' must be positive")

    @property
    def write_config(self):
        return self._write_config

    @write_config.setter
    def write_config(self, write_config):
        if not isinstance(write_config, bool):
            raise ValueError("'write_config' must be of type 'bool'")
        self._write_config = write_config

    @property
    def overwrite(self):
        return self._overwrite

    @overwrite.setter
    def overwrite(self, overwrite):
        if not isinstance(overwrite, bool):
            raise ValueError("'overwrite' must be of type 'bool'")
        self._overwrite = overwrite

    def reduction_fuel(self, graph):
        """The move budget for reducing a given graph."""
        from ..reduction import Fuel as _Fuel

        if self.fuel is None:
            return _Fuel.default_for(graph)
        return _Fuel(self.fuel)

    @classmethod
    def _defaults(cls):
        """The default value of every option, keyed by name."""
        import inspect

        return {
            key: value.default
            for key, value in inspect.signature(cls.__init__).parameters.items()
            if key != "self"
        }

    @classmethod
    def _create_parser(cls, parser=None, options=None):
        """
        Internal method to add the config options to an argparse parser,
        creating one if needed. When 'options' is given, only the named
        options are added.
        """
        import argparse
        import inspect

        params = {
            key: value
            for key, value in inspect.signature(cls.__init__).parameters.items()
            if key != "self" and (options is None or key in options)
        }

        # Map each parameter to its help text from the docstring.
        doc = inspect.getdoc(cls.__init__).split("\n")
        help = {}
        for param in params:
            found_param = False
            string = ""
            for line in doc:
                line = line.strip()
                if line.startswith(f"{param}:"):
                    found_param = True
                elif found_param:
                    if line == "":
                        break
                    string += f" {line}"
            help[param] = string.strip()

        if parser is None:
            parser = argparse.ArgumentParser(
                description="plumbcalc: contact plumbing calculus for decorated divisor graphs.",
                formatter_class=argparse.ArgumentDefaultsHelpFormatter,
            )

        parser.add_argument(
            "--config",
            type=str,
            required=False,
            help="YAML config file path. Other command-line options will override the config file.",
        )

        for param in params:
            cli_param = param.replace("_", "-")
            default = params[param].default
            typ = str if default is None else type(default)

            if param in cls._choices:
                parser.add_argument(
                    f"--{cli_param}",
                    type=typ,
                    default=default,
                    choices=cls._choices[param],
                    help=help[param],
                    required=False,
                )
            elif typ == bool:
                parser.add_argument(
                    f"--{cli_param}",
                    action=argparse.BooleanOptionalAction,
                    default=default,
                    help=help[param],
                    required=False,
                )
            else:
                parser.add_argument(
                    f"--{cli_param}",
                    type=typ,
                    default=default,
                    help=help[param],
                    required=False,
                )

        return parser

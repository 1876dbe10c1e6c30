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
The plumbcalc command line program.

Usage:
    To get the help for this program and list all of the
    arguments (with defaults) use:

    plumbcalc --help
    plumbcalc <command> --help

The first line written to standard output is always a machine readable
"RESULT key=value ..." line. Exit codes:

    0  success or a positive verdict: feasible, not obstructed, no Klein
       piece, no torsion pattern, star shaped, isomorphic
    1  a negative verdict: not feasible, obstructed, a Klein piece or a
       torsion pattern found, not star shaped, not isomorphic, normal form
       not reached
    2  unreadable input or invalid options
    3  a reduction ran out of fuel
"""

__all__ = ["cli", "main"]

from enum import IntEnum as _IntEnum

import sys as _sys


# The config options each command reads.
_OPTIONS = {
    "reduce": ("log_level", "mode", "fuel", "blow_up_weight"),
    "check": ("log_level", "fuel", "blow_up_weight"),
    "invariants": ("log_level",),
    "iso": ("log_level",),
    "batch": None,
}


class ExitCode(_IntEnum):
    SUCCESS = 0
    NEGATIVE = 1
    INPUT_ERROR = 2
    FUEL_EXHAUSTED = 3


def _flag(value):
    return str(bool(value)).lower()


def _emit(lines):
    _sys.stdout.write("".join(line if line.endswith("\n") else line + "\n" for line in lines))


def _create_parser():
    """Build the parser, with the config options each command uses."""
    import argparse

    from plumbcalc.config import Config

    parser = argparse.ArgumentParser(
        prog="plumbcalc",
        description="plumbcalc: contact plumbing calculus for decorated divisor graphs.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    def add(name, help):
        sub = commands.add_parser(
            name,
            help=help,
            description=help,
            formatter_class=argparse.ArgumentDefaultsHelpFormatter,
        )
        Config._create_parser(sub, _OPTIONS[name])
        return sub

    reduce = add("reduce", "Reduce a plumbing graph to normal form.")
    reduce.add_argument("file", type=str, help="Plumbing file to reduce.")
    reduce.add_argument(
        "--trace", action="store_true", help="Print the applied moves, one per line."
    )
    reduce.add_argument(
        "--dot", action="store_true", help="Print the output graph as Graphviz DOT."
    )

    check = add("check", "Run a single check on a plumbing graph.")
    check.add_argument("file", type=str, help="Plumbing file to check.")
    which = check.add_mutually_exclusive_group(required=True)
    which.add_argument(
        "--gs",
        choices=["positive", "negative"],
        help="Decide the GS criterion. Needs areas on every vertex.",
    )
    which.add_argument(
        "--obstructed",
        action="store_true",
        help="Compare the contact and topological normal forms.",
    )
    which.add_argument(
        "--klein", action="store_true", help="Report Klein bottle pieces."
    )
    which.add_argument(
        "--torsion",
        action="store_true",
        help="Look for four (0,0) spheres in a row.",
    )
    which.add_argument(
        "--star", action="store_true", help="Check whether the graph is star shaped."
    )

    invariants = add("invariants", "Print homology, determinant and lens invariants.")
    invariants.add_argument("file", type=str, help="Plumbing file.")

    iso = add("iso", "Decide whether two plumbing graphs are isomorphic.")
    iso.add_argument("file_a", type=str, help="First plumbing file.")
    iso.add_argument("file_b", type=str, help="Second plumbing file.")

    batch = add("batch", "Reduce many plumbing files and summarise the results.")
    batch.add_argument("files", type=str, nargs="+", help="Plumbing files to reduce.")

    return parser


def _build_config(args):
    """
    Pop the config options from the parsed arguments and build a Config.
    Values from a YAML file are overridden by non-default command line values.
    Invalid options are reported as input errors.
    """
    from plumbcalc._exceptions import PlumbingInputError
    from plumbcalc.config import Config
    from plumbcalc.io import yaml_to_dict

    defaults = Config._defaults()
    path = args.pop("config")
    options = {key: args.pop(key) for key in defaults if key in args}

    try:
        if path is not None:
            merged = yaml_to_dict(path)
            for key, value in options.items():
                if key not in merged or value != defaults[key]:
                    merged[key] = value
            options = merged
        return Config(**options)
    except (TypeError, ValueError) as e:
        raise PlumbingInputError(f"invalid options: {e}") from e


def _reduce(args, config):
    from plumbcalc.graph import GraphDocument, serialize, to_dot
    from plumbcalc.io import read_graph
    from plumbcalc.reduction import contact_reduce, topological_reduce

    document = read_graph(args["file"])
    graph = document.graph
    fuel = config.reduction_fuel(graph)
    if config.mode == "contact":
        report = contact_reduce(graph, fuel, config.blow_up_weight)
    else:
        report = topological_reduce(graph, fuel)

    output = GraphDocument(report.output, document.name, document.notes)
    lines = [report.result_line()]
    lines.append(to_dot(output) if args["dot"] else serialize(output))
    if args["trace"]:
        lines.extend(record.to_line() for record in report.trace)
    _emit(lines)

    if report.fuel_exhausted:
        return ExitCode.FUEL_EXHAUSTED
    if not report.normal_form_attained:
        return ExitCode.NEGATIVE
    return ExitCode.SUCCESS


def _check(args, config):
    from plumbcalc.analysis import (
        detect_klein_pieces,
        detect_positive_torsion,
        gs_check,
        is_star_shaped,
    )
    from plumbcalc.io import read_graph
    from plumbcalc.reduction import obstructed

    graph = read_graph(args["file"]).graph

    if args["gs"] is not None:
        report = gs_check(graph, args["gs"])
        line = f"RESULT gs={report.mode} feasible={_flag(report.feasible)}"
        if report.feasible:
            line += f" witness={report.format_witness()}"
        _emit([line])
        return ExitCode.SUCCESS if report.feasible else ExitCode.NEGATIVE

    if args["obstructed"]:
        verdict = obstructed(
            graph, config.reduction_fuel(graph), config.blow_up_weight
        )
        if verdict is None:
            _emit(["RESULT obstructed=indeterminate"])
            return ExitCode.FUEL_EXHAUSTED
        _emit([f"RESULT obstructed={_flag(verdict)}"])
        return ExitCode.NEGATIVE if verdict else ExitCode.SUCCESS

    if args["klein"]:
        sites = detect_klein_pieces(graph)
        line = f"RESULT klein={len(sites)}"
        if sites:
            line += " sites=" + ";".join(str(site) for site in sites)
        _emit([line])
        return ExitCode.NEGATIVE if sites else ExitCode.SUCCESS

    if args["torsion"]:
        found = detect_positive_torsion(graph)
        _emit([f"RESULT torsion={_flag(found)}"])
        return ExitCode.NEGATIVE if found else ExitCode.SUCCESS

    star = is_star_shaped(graph)
    _emit([f"RESULT star={_flag(star)}"])
    return ExitCode.SUCCESS if star else ExitCode.NEGATIVE


def _invariants(args, config):
    from plumbcalc._exceptions import ChainError, ContinuedFractionError
    from plumbcalc.analysis import h1_invariant, intersection_form
    from plumbcalc.chains import lens_of_chain, maximal_chains
    from plumbcalc.exact import determinant
    from plumbcalc.io import read_graph

    graph = read_graph(args["file"]).graph
    form = intersection_form(graph)
    h1 = h1_invariant(graph)

    lines = [f"RESULT h1={h1.format()} det={determinant(form)}"]
    lines.append(f"h1 free_rank={h1.free_rank} torsion={','.join(map(str, h1.torsion))}")
    lines.append("form " + ";".join(",".join(map(str, row)) for row in form.rows))
    for chain in maximal_chains(graph):
        if not chain.standalone:
            continue
        try:
            lens = str(lens_of_chain(chain))
        except (ChainError, ContinuedFractionError):
            lens = "undefined"
        lines.append(
            f"chain ids={','.join(map(str, chain.ids))} "
            f"components={','.join(map(str, chain.components))} lens={lens}"
        )
    _emit(lines)
    return ExitCode.SUCCESS


def _iso(args, config):
    from plumbcalc.graph import isomorphic
    from plumbcalc.io import read_graph

    a = read_graph(args["file_a"]).graph
    b = read_graph(args["file_b"]).graph
    same = isomorphic(a, b)
    _emit([f"RESULT iso={_flag(same)}"])
    return ExitCode.SUCCESS if same else ExitCode.NEGATIVE


def _batch(args, config):
    from plumbcalc.runner import Runner

    results = Runner(args["files"], config).run()

    failed = [r for r in results if r["error"]]
    exhausted = [r for r in results if r.get("fuel_exhausted")]
    attained = [r for r in results if r.get("normal_form")]

    lines = [
        f"RESULT files={len(results)} attained={len(attained)} failed={len(failed)}"
    ]
    for r in results:
        if r["error"]:
            lines.append(f"RESULT file={r['file']} error={r['error'].split(':')[0]}")
        else:
            lines.append(
                f"RESULT file={r['file']} mode={r['mode']} "
                f"normal_form={_flag(r['normal_form'])} fuel_used={r['fuel_used']} "
                f"vertices={r['vertices_out']} obstructed={r['obstructed']} h1={r['h1']}"
            )
    _emit(lines)

    if failed:
        return ExitCode.INPUT_ERROR
    if exhausted:
        return ExitCode.FUEL_EXHAUSTED
    if len(attained) != len(results):
        return ExitCode.NEGATIVE
    return ExitCode.SUCCESS


_COMMANDS = {
    "reduce": _reduce,
    "check": _check,
    "invariants": _invariants,
    "iso": _iso,
    "batch": _batch,
}


def main(argv=None):
    """
    Run the command line program and return its exit code.

    Parameters
    ----------

    argv: list of str
        The arguments, excluding the program name. Defaults to sys.argv.
    """
    from plumbcalc import __version__, _logger
    from plumbcalc._exceptions import PlumbingInputError

    parser = _create_parser()
    args = vars(parser.parse_args(argv))
    command = args.pop("command")

    try:
        config = _build_config(args)
        _logger.info(f"plumbcalc version: {__version__}")
        return int(_COMMANDS[command](args, config))
    except (PlumbingInputError, OSError, UnicodeDecodeError) as e:
        _logger.error(f"{type(e).__name__}: {e}")
        _emit([f"RESULT error=input command={command}"])
        return int(ExitCode.INPUT_ERROR)


def cli():
    """
    plumbcalc: Command line interface.
    """
    _sys.exit(main())

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

__all__ = ["HEADER", "parse", "serialize", "to_dot"]

from fractions import Fraction as _Fraction

from .._exceptions import PlumbingInputError as _PlumbingInputError
from ..exact import format_rational as _format_rational
from ._graph import DecoratedGraph as _DecoratedGraph
from ._graph import GraphDocument as _GraphDocument
from ._graph import VertexDecoration as _VertexDecoration

HEADER = "plumbing v1"

_NAME = "# name:"
_NOTE = "# note:"


def _parse_int(token, what, line):
    try:
        return int(token)
    except ValueError:
        raise _PlumbingInputError(f"{what} is not an integer: {token!r}", line)


def _parse_vertex(tokens, line, allow_nonorientable):
    if len(tokens) < 4 or len(tokens) > 5:
        raise _PlumbingInputError("expected 'v <id> g=<int> k=<int> [a=<p>/<q>]'", line)

    v = _parse_int(tokens[1], "vertex id", line)

    fields = {}
    for token in tokens[2:]:
        key, sep, value = token.partition("=")
        if not sep or key not in ("g", "k", "a"):
            raise _PlumbingInputError(f"unknown vertex field {token!r}", line)
        if key in fields:
            raise _PlumbingInputError(f"repeated vertex field {key!r}", line)
        fields[key] = value

    for key in ("g", "k"):
        if key not in fields:
            raise _PlumbingInputError(f"missing vertex field {key!r}", line)

    genus = _parse_int(fields["g"], "genus", line)
    euler = _parse_int(fields["k"], "euler number", line)
    if genus < 0 and not allow_nonorientable:
        raise _PlumbingInputError(f"negative genus {genus}", line)

    area = None
    if "a" in fields:
        numerator, sep, denominator = fields["a"].partition("/")
        try:
            area = _Fraction(int(numerator), int(denominator) if sep else 1)
        except (ValueError, ZeroDivisionError):
            raise _PlumbingInputError(f"bad area {fields['a']!r}", line)
        if area <= 0:
            raise _PlumbingInputError(f"area must be positive, got {fields['a']}", line)

    return v, _VertexDecoration(genus, euler, area)


def parse(text, allow_nonorientable=False):
    """
    Parse the plumbing text format.

    Parameters
    ----------

    text: str
        The document text.

    allow_nonorientable: bool
        Whether to accept negative genus.

    Returns
    -------

    document: plumbcalc.graph.GraphDocument
        The graph together with its name and notes.
    """
    if not isinstance(text, str):
        raise TypeError("'text' must be of type 'str'")

    name = ""
    notes = []
    vertices = {}
    edges = []
    seen_content = False

    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue

        if line.startswith("#"):
            if line.startswith(_NAME):
                name = line[len(_NAME) :].strip()
            elif line.startswith(_NOTE):
                notes.append(line[len(_NOTE) :].strip())
            continue

        tokens = line.split()
        if tokens[0] == "plumbing":
            if seen_content:
                raise _PlumbingInputError("header must come first", number)
            if line != HEADER:
                raise _PlumbingInputError(f"unsupported header {line!r}", number)
            seen_content = True
            continue
        seen_content = True

        if tokens[0] == "v":
            v, decoration = _parse_vertex(tokens, number, allow_nonorientable)
            if v in vertices:
                raise _PlumbingInputError(f"duplicate vertex id {v}", number)
            vertices[v] = decoration
        elif tokens[0] == "e":
            if len(tokens) != 3:
                raise _PlumbingInputError("expected 'e <id> <id>'", number)
            a = _parse_int(tokens[1], "vertex id", number)
            b = _parse_int(tokens[2], "vertex id", number)
            if a == b:
                raise _PlumbingInputError(f"loop at vertex {a}", number)
            edges.append((a, b, number))
        else:
            raise _PlumbingInputError(f"unrecognised line {line!r}", number)

    for a, b, number in edges:
        for x in (a, b):
            if x not in vertices:
                raise _PlumbingInputError(f"edge names unknown vertex {x}", number)

    graph = _DecoratedGraph(vertices, [(a, b) for a, b, _ in edges])
    return _GraphDocument(graph, name, tuple(notes))


def serialize(document):
    """
    Write a graph or document in the canonical text form: header, then
    name and notes, then vertices by id, then edges in lexicographic order.
    """
    if isinstance(document, _DecoratedGraph):
        document = _GraphDocument(document)
    if not isinstance(document, _GraphDocument):
        raise TypeError(
            "'document' must be of type 'plumbcalc.graph.GraphDocument' "
            "or 'plumbcalc.graph.DecoratedGraph'"
        )

    lines = [HEADER]
    if document.name:
        lines.append(f"{_NAME} {document.name}")
    lines.extend(f"{_NOTE} {note}" for note in document.notes)

    graph = document.graph
    for v, d in graph.vertices.items():
        line = f"v {v} g={d.genus} k={d.euler}"
        if d.area is not None:
            line += f" a={_format_rational(d.area)}"
        lines.append(line)
    lines.extend(f"e {v} {w}" for v, w in graph.edges)

    return "\n".join(lines) + "\n"


def to_dot(document):
    """
    Render a graph or document as Graphviz DOT, labelling each vertex
    "(genus,euler)". Parallel edges are written once per copy.
    """
    if isinstance(document, _DecoratedGraph):
        document = _GraphDocument(document)

    title = document.name.replace('"', "'") if document.name else "plumbing"
    lines = [f'graph "{title}" {{']
    for v, d in document.graph.vertices.items():
        lines.append(f'    {v} [label="{d.label}"];')
    for v, w in document.graph.edges:
        lines.append(f"    {v} -- {w};")
    lines.append("}")
    return "\n".join(lines) + "\n"

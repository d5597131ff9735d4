"""Parsers and writers for the three supported graph file formats.

* ``edgelist`` -- CSV with one ``source,target`` pair per line.
* ``pajek``    -- ``*Vertices N`` header, optional labeled vertex lines,
  ``*Arcs`` (directed) and ``*Edges`` (undirected, expanded to both
  directions) sections.
* ``asd``      -- ``N M`` header followed by exactly M ``src dst`` lines
  with 0-based integer indices.

All parsers are pure functions from text to an :class:`EdgeList`, accept
both LF and CRLF line endings, skip blank lines, and report errors with
1-based line numbers.  See docs/formats.md for the precise grammar each
writer emits.
"""
from __future__ import annotations

from pathlib import Path

from .exceptions import GraphFormatError
from .graph import EdgeList, Graph, build_graph

__all__ = [
    "FORMATS",
    "parse_edgelist",
    "parse_pajek",
    "parse_asd",
    "write_edgelist",
    "write_pajek",
    "write_asd",
    "parse",
    "load_graph",
    "detect_format",
]

FORMATS = ("edgelist", "pajek", "asd")

_EXTENSIONS = {
    ".csv": "edgelist",
    ".edgelist": "edgelist",
    ".edges": "edgelist",
    ".net": "pajek",
    ".pajek": "pajek",
    ".asd": "asd",
}


def _lines(text: str):
    """Yield (1-based line number, stripped line), skipping blanks and comments."""
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#") or line.startswith("%"):
            continue
        yield no, line


def parse_edgelist(text: str) -> EdgeList:
    """Parse CSV edge lines ``source,target``; labels are trimmed verbatim."""
    edges: list[tuple[str, str]] = []
    for no, line in _lines(text):
        fields = line.split(",")
        if len(fields) != 2:
            raise GraphFormatError(
                f"expected 2 comma-separated fields, got {len(fields)}", line=no
            )
        a, b = fields[0].strip(), fields[1].strip()
        if not a or not b:
            raise GraphFormatError("empty node label", line=no)
        edges.append((a, b))
    return EdgeList(edges=edges)


def _pajek_vertex(line: str, no: int, n: int) -> tuple[int, str]:
    parts = line.split(None, 1)
    try:
        vid = int(parts[0])
    except ValueError:
        raise GraphFormatError(f"bad vertex id {parts[0]!r}", line=no) from None
    if not 1 <= vid <= n:
        raise GraphFormatError(f"vertex id {vid} outside [1,{n}]", line=no)
    rest = parts[1].strip() if len(parts) > 1 else ""
    if not rest:
        return vid, str(vid)
    if rest.startswith('"'):
        end = rest.find('"', 1)
        if end < 0:
            raise GraphFormatError("unterminated quoted label", line=no)
        return vid, rest[1:end]
    # unquoted labels cannot contain spaces; trailing fields are ignored
    return vid, rest.split()[0]


def _pajek_pair(line: str, no: int, n: int) -> tuple[int, int]:
    parts = line.split()
    if len(parts) != 2:
        raise GraphFormatError(
            f"expected 2 vertex ids, got {len(parts)} fields", line=no
        )
    try:
        u, v = int(parts[0]), int(parts[1])
    except ValueError:
        raise GraphFormatError(f"bad vertex id in {line!r}", line=no) from None
    for vid in (u, v):
        if not 1 <= vid <= n:
            raise GraphFormatError(f"vertex id {vid} outside [1,{n}]", line=no)
    return u, v


def parse_pajek(text: str) -> EdgeList:
    """Parse Pajek .net text.

    ``*Arcs`` pairs become directed edges; each ``*Edges`` pair is
    expanded to both directions.  Vertices without an explicit label
    get their decimal id as label.  Section keywords are
    case-insensitive; vertex ids are 1-based.
    """
    n: int | None = None
    names: dict[int, str] = {}
    arcs: list[tuple[int, int]] = []
    section = "vertices"

    for no, line in _lines(text):
        low = line.lower()
        if low.startswith("*"):
            if low.startswith("*vertices"):
                if n is not None:
                    raise GraphFormatError("duplicate *Vertices header", line=no)
                parts = line.split()
                if len(parts) != 2:
                    raise GraphFormatError("*Vertices header needs a node count", line=no)
                try:
                    n = int(parts[1])
                except ValueError:
                    raise GraphFormatError(f"bad node count {parts[1]!r}", line=no) from None
                if n < 0:
                    raise GraphFormatError("node count must be >= 0", line=no)
                section = "vertices"
            elif low.startswith("*arcs"):
                section = "arcs"
            elif low.startswith("*edges"):
                section = "edges"
            else:
                raise GraphFormatError(f"unknown section {line!r}", line=no)
            if n is None:
                raise GraphFormatError("*Vertices header must come first", line=no)
            continue

        if n is None:
            raise GraphFormatError("missing *Vertices header", line=no)
        if section == "vertices":
            vid, label = _pajek_vertex(line, no, n)
            names[vid] = label
        else:
            u, v = _pajek_pair(line, no, n)
            arcs.append((u, v))
            if section == "edges":
                arcs.append((v, u))

    if n is None:
        raise GraphFormatError("missing *Vertices header")

    labels = [names.get(i, str(i)) for i in range(1, n + 1)]
    if len(set(labels)) != n:
        raise GraphFormatError("vertex labels are not distinct")
    edges = [(labels[u - 1], labels[v - 1]) for u, v in arcs]
    return EdgeList(edges=edges, declared_labels=labels)


def parse_asd(text: str) -> EdgeList:
    """Parse ASD text: ``N M`` header then exactly M ``src dst`` index lines."""
    n = m = None
    edges: list[tuple[str, str]] = []
    for no, line in _lines(text):
        parts = line.split()
        if n is None:
            if len(parts) != 2:
                raise GraphFormatError("header must be `N M`", line=no)
            try:
                n, m = int(parts[0]), int(parts[1])
            except ValueError:
                raise GraphFormatError(f"bad header {line!r}", line=no) from None
            if n < 0 or m < 0:
                raise GraphFormatError("counts must be >= 0", line=no)
            continue
        if len(edges) == m:
            raise GraphFormatError(f"more than {m} edge lines", line=no)
        if len(parts) != 2:
            raise GraphFormatError("edge line must be `src dst`", line=no)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(f"bad node index in {line!r}", line=no) from None
        for idx in (u, v):
            if not 0 <= idx < n:
                raise GraphFormatError(f"node index {idx} outside [0,{n})", line=no)
        edges.append((str(u), str(v)))

    if n is None:
        raise GraphFormatError("missing `N M` header")
    if len(edges) != m:
        raise GraphFormatError(f"expected {m} edge lines, got {len(edges)}")
    return EdgeList(edges=edges, declared_labels=[str(i) for i in range(n)])


def write_edgelist(g: Graph) -> str:
    """Serialize to CSV edge lines.

    Lossy for isolated nodes (the format has no vertex section) and
    rejects labels the format cannot carry.
    """
    for lab in g.labels:
        if "," in lab or "\n" in lab or "\r" in lab:
            raise ValueError(f"label {lab!r} not representable in edgelist CSV")
        if not lab or lab != lab.strip() or lab.startswith("#"):
            raise ValueError(f"label {lab!r} not representable in edgelist CSV")
    out = [f"{g.labels[u]},{g.labels[v]}" for u, v in g.edges()]
    return "\n".join(out) + ("\n" if out else "")


def write_pajek(g: Graph) -> str:
    """Serialize to Pajek with quoted labels and all edges as arcs."""
    for lab in g.labels:
        if '"' in lab or "\n" in lab or "\r" in lab:
            raise ValueError(f"label {lab!r} not representable in pajek")
    out = [f"*Vertices {g.node_count}"]
    out.extend(f'{i + 1} "{lab}"' for i, lab in enumerate(g.labels))
    out.append("*Arcs")
    out.extend(f"{u + 1} {v + 1}" for u, v in g.edges())
    return "\n".join(out) + "\n"


def write_asd(g: Graph) -> str:
    """Serialize to ASD; requires canonical decimal-index labels."""
    for i, lab in enumerate(g.labels):
        if lab != str(i):
            raise ValueError(
                f"node {i} has label {lab!r}; ASD carries only positional labels"
            )
    out = [f"{g.node_count} {g.edge_count}"]
    out.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(out) + "\n"


_PARSERS = {"edgelist": parse_edgelist, "pajek": parse_pajek, "asd": parse_asd}
_WRITERS = {"edgelist": write_edgelist, "pajek": write_pajek, "asd": write_asd}


def parse(text: str, fmt: str) -> Graph:
    """Parse ``text`` in the named format and build the graph."""
    if fmt not in _PARSERS:
        raise ValueError(f"unknown format {fmt!r}; expected one of {FORMATS}")
    return build_graph(_PARSERS[fmt](text))


def serialize(g: Graph, fmt: str) -> str:
    if fmt not in _WRITERS:
        raise ValueError(f"unknown format {fmt!r}; expected one of {FORMATS}")
    return _WRITERS[fmt](g)


def detect_format(path: str | Path) -> str:
    """Guess the format from the file extension."""
    ext = Path(path).suffix.lower()
    try:
        return _EXTENSIONS[ext]
    except KeyError:
        raise ValueError(
            f"cannot infer graph format from extension {ext!r}; pass one of {FORMATS}"
        ) from None


def load_graph(path: str | Path, fmt: str | None = None) -> Graph:
    """Read a graph file, inferring the format from the extension if needed."""
    path = Path(path)
    if fmt is None or fmt == "auto":
        fmt = detect_format(path)
    return parse(path.read_text(encoding="utf-8"), fmt)

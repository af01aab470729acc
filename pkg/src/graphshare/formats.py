"""Line-based text formats for graphs and shares, plus DOT export.

All formats are UTF-8 with LF line endings and a fixed field order, so a
parse/serialize round trip is byte-identical.

``.g``       ``nodes: 1,2,3`` then ``edge: lo hi`` lines
``.sshare``  ``SETSHARE v1``, k, n, u, index, then ``elem: <token>`` lines
``.gshare``  ``GRAPHSHARE v1``, scheme, n, c, b, index, alphabet, nodes, edges
``.pshare``  ``SHAMIRSHARE v1``, p, x, y
"""

from __future__ import annotations

from pathlib import Path

from .errors import ContractError, FormatError
from .graph import Graph
from .graphscheme import GraphShare
from .setscheme import SetShare
from .shamir import ShamirShare

GRAPH_SCHEME = "graph-2n"


class _Lines:
    """Cursor over numbered lines that raises positional FormatErrors."""

    def __init__(self, text: str, source: str | None):
        if "\r" in text:
            raise FormatError("CR characters are not allowed (LF line endings only)", None, source)
        self.source = source
        self.lines = text.split("\n")
        if self.lines and self.lines[-1] == "":
            self.lines.pop()
        self.pos = 0

    def error(self, message: str, line: int | None = None) -> FormatError:
        return FormatError(message, self.pos if line is None else line, self.source)

    def done(self) -> bool:
        return self.pos >= len(self.lines)

    def next(self) -> str:
        if self.done():
            self.pos += 1
            raise self.error("unexpected end of file")
        self.pos += 1
        return self.lines[self.pos - 1]

    def exact(self, expected: str) -> None:
        line = self.next()
        if line != expected:
            raise self.error(f"expected {expected!r}, found {line!r}")

    def field(self, key: str) -> str:
        line = self.next()
        prefix = f"{key}: "
        if not line.startswith(prefix) and line != f"{key}:":
            found = line.split(":", 1)[0]
            raise self.error(f"expected field {key!r}, found {found!r}")
        return line[len(prefix):]

    def integer(self, key: str) -> int:
        raw = self.field(key)
        return self.to_int(raw, key)

    def to_int(self, raw: str, what: str) -> int:
        if not raw.isdigit() or (raw.startswith("0") and raw != "0"):
            raise self.error(f"{what}: {raw!r} is not a canonical non-negative decimal")
        return int(raw)


def _format_nodes_edges(g: Graph) -> list[str]:
    lines = ["nodes: " + ",".join(str(x) for x in g.nodes)]
    lines += [f"edge: {lo} {hi}" for lo, hi in g.sorted_edges()]
    return lines


def _parse_nodes_edges(cur: _Lines) -> Graph:
    raw = cur.field("nodes")
    node_line = cur.pos
    nodes = [cur.to_int(tok, "node label") for tok in raw.split(",")] if raw else []
    for prev, nxt in zip(nodes, nodes[1:]):
        if not prev < nxt:
            raise cur.error(f"nodes not strictly increasing at {prev}, {nxt}", node_line)
    present = set(nodes)
    edges = []
    while not cur.done():
        parts = cur.field("edge").split(" ")
        if len(parts) != 2:
            raise cur.error("edge line needs exactly two labels")
        lo, hi = (cur.to_int(p, "edge label") for p in parts)
        if not lo < hi:
            raise cur.error(f"edge {lo} {hi} is not ordered lo < hi")
        if lo not in present or hi not in present:
            raise cur.error(f"edge {lo} {hi} uses a label not in the node list")
        if edges and not edges[-1] < (lo, hi):
            raise cur.error(f"edge {lo} {hi} is out of order or duplicated")
        edges.append((lo, hi))
    try:
        return Graph(tuple(nodes), frozenset(edges))
    except ContractError as exc:
        raise cur.error(str(exc), node_line) from exc


def format_graph(g: Graph) -> str:
    return "\n".join(_format_nodes_edges(g)) + "\n"


def parse_graph(text: str, source: str | None = None) -> Graph:
    return _parse_nodes_edges(_Lines(text, source))


def format_set_share(share: SetShare) -> str:
    lines = ["SETSHARE v1", f"k: {share.k}", f"n: {share.n}", f"u: {share.u}", f"index: {share.index}"]
    for tok in share.sorted_elements():
        try:
            text = tok.decode("utf-8")
        except UnicodeDecodeError:
            raise ContractError(f"token {tok!r} is not valid UTF-8 and cannot be written") from None
        if "\n" in text or "\r" in text:
            raise ContractError(f"token {tok!r} contains a line break")
        lines.append(f"elem: {text}")
    return "\n".join(lines) + "\n"


def parse_set_share(text: str, source: str | None = None) -> SetShare:
    cur = _Lines(text, source)
    cur.exact("SETSHARE v1")
    k, n, u, index = (cur.integer(key) for key in ("k", "n", "u", "index"))
    elements = []
    while not cur.done():
        tok = cur.field("elem").encode("utf-8")
        if not tok:
            raise cur.error("empty token")
        if elements and not elements[-1] < tok:
            raise cur.error("elements are not sorted bytewise or are duplicated")
        elements.append(tok)
    try:
        return SetShare(index=index, n=n, k=k, u=u, elements=frozenset(elements))
    except ContractError as exc:
        raise cur.error(str(exc)) from exc


def format_graph_share(share: GraphShare) -> str:
    lines = [
        "GRAPHSHARE v1",
        f"scheme: {GRAPH_SCHEME}",
        f"n: {share.n}",
        f"c: {share.c}",
        f"b: {share.b}",
        f"index: {share.index}",
        "alphabet: " + ",".join(share.alphabet),
    ]
    return "\n".join(lines + _format_nodes_edges(share.graph)) + "\n"


def parse_graph_share(text: str, source: str | None = None) -> GraphShare:
    cur = _Lines(text, source)
    cur.exact("GRAPHSHARE v1")
    cur.exact(f"scheme: {GRAPH_SCHEME}")
    n, c, b, index = (cur.integer(key) for key in ("n", "c", "b", "index"))
    alphabet = tuple(cur.field("alphabet").split(","))
    alphabet_line = cur.pos
    for prev, nxt in zip(alphabet, alphabet[1:]):
        if not prev < nxt:
            raise cur.error(f"alphabet not strictly increasing at {prev!r}, {nxt!r}", alphabet_line)
    if any(not name or name != name.strip() for name in alphabet):
        raise cur.error("alphabet has an empty or padded name", alphabet_line)
    graph = _parse_nodes_edges(cur)
    try:
        return GraphShare(index=index, n=n, c=c, b=b, alphabet=alphabet, graph=graph)
    except ContractError as exc:
        raise cur.error(str(exc), alphabet_line + 1) from exc


def format_shamir_share(share: ShamirShare) -> str:
    return f"SHAMIRSHARE v1\np: {share.p}\nx: {share.x}\ny: {share.y}\n"


def parse_shamir_share(text: str, source: str | None = None) -> ShamirShare:
    cur = _Lines(text, source)
    cur.exact("SHAMIRSHARE v1")
    p, x, y = (cur.integer(key) for key in ("p", "x", "y"))
    if not cur.done():
        cur.next()
        raise cur.error("unexpected trailing line")
    try:
        return ShamirShare(x=x, y=y, p=p)
    except ContractError as exc:
        raise cur.error(str(exc)) from exc


def to_dot(g: Graph, name: str = "share") -> str:
    """Undirected DOT with sorted nodes and edges; labels only, no metadata."""
    lines = [f"graph {name} {{"]
    lines += [f"  {label};" for label in g.nodes]
    lines += [f"  {lo} -- {hi};" for lo, hi in g.sorted_edges()]
    lines.append("}")
    return "\n".join(lines) + "\n"


def read_any_graph(path: str | Path) -> Graph:
    """Graph from either a ``.g`` file or a ``.gshare`` file (detected by header)."""
    path = Path(path)
    text = path.read_text(encoding="utf-8")
    if text.startswith("GRAPHSHARE"):
        return parse_graph_share(text, str(path)).graph
    return parse_graph(text, str(path))

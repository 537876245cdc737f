"""Edge-list text format, DOT export, and canonical JSON run reports.

Edge-list format, one record per line, vertices named 1..p::

    p <n>            header, must come first
    a <u> <v>        arc u -> v
    l <v> <label>    optional vertex label (default 0)
    # ...            comment to end of line
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from importlib.metadata import PackageNotFoundError, version

from .digraph import Digraph
from .errors import DigraphError, ParseError
from .lmatrix import LabeledDigraph

try:
    TOOLKIT_VERSION = version("dicolor")
except PackageNotFoundError:  # pragma: no cover - running from a source tree
    TOOLKIT_VERSION = "0.1.0"


def _vertex(tok: str, p: int, lineno: int) -> int:
    try:
        v = int(tok)
    except ValueError:
        raise ParseError(lineno, f"vertex name {tok!r} is not an integer") from None
    if not 1 <= v <= p:
        raise ParseError(lineno, f"vertex {v} outside 1..{p}")
    return v - 1


def parse_edge_list(text: str) -> LabeledDigraph:
    p = None
    arcs = []
    labels: dict[int, int] = {}
    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tok = line.split()
        kind = tok[0]
        if p is None:
            if kind != "p" or len(tok) != 2:
                raise ParseError(lineno, "expected header 'p <n>' before any other record")
            try:
                p = int(tok[1])
            except ValueError:
                raise ParseError(lineno, f"vertex count {tok[1]!r} is not an integer") from None
            if p < 0:
                raise ParseError(lineno, "vertex count must be non-negative")
            continue
        if kind == "p":
            raise ParseError(lineno, "duplicate 'p' header")
        if kind == "a":
            if len(tok) != 3:
                raise ParseError(lineno, "arc record must be 'a <u> <v>'")
            u, v = _vertex(tok[1], p, lineno), _vertex(tok[2], p, lineno)
            if u == v:
                raise ParseError(lineno, f"self-loop at vertex {u + 1}")
            arcs.append((u, v))
        elif kind == "l":
            if len(tok) != 3:
                raise ParseError(lineno, "label record must be 'l <v> <label>'")
            v = _vertex(tok[1], p, lineno)
            if v in labels:
                raise ParseError(lineno, f"vertex {v + 1} labeled twice")
            try:
                labels[v] = int(tok[2])
            except ValueError:
                raise ParseError(lineno, f"label {tok[2]!r} is not an integer") from None
            if labels[v] < 0:
                raise ParseError(lineno, "labels must be non-negative")
        else:
            raise ParseError(lineno, f"unknown record type {kind!r}")
    if p is None:
        raise ParseError(1, "missing 'p <n>' header")
    try:
        D = Digraph(p, arcs)
    except DigraphError as exc:  # pragma: no cover - ruled out line by line above
        raise ParseError(0, str(exc)) from None
    return LabeledDigraph(D, tuple(labels.get(v, 0) for v in range(p)))


def serialize_edge_list(x) -> str:
    """Inverse of ``parse_edge_list``; label lines only when some label is nonzero."""
    ld = x if isinstance(x, LabeledDigraph) else LabeledDigraph(x, (0,) * x.p)
    lines = [f"p {ld.p}"]
    lines += [f"a {u + 1} {v + 1}" for u, v in ld.digraph.sorted_arcs()]
    if any(ld.labels):
        lines += [f"l {v + 1} {lab}" for v, lab in enumerate(ld.labels)]
    return "\n".join(lines) + "\n"


def export_dot(x, name: str = "D") -> str:
    ld = x if isinstance(x, LabeledDigraph) else None
    D = ld.digraph if ld else x
    lines = [f"digraph {name} {{"]
    for v in range(D.p):
        attr = f' [xlabel="{ld.labels[v]}"]' if ld and any(ld.labels) else ""
        lines.append(f"  v{v + 1}{attr};")
    lines += [f"  v{u + 1} -> v{v + 1};" for u, v in D.sorted_arcs()]
    lines.append("}")
    return "\n".join(lines) + "\n"


def canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def digest(data: bytes | str) -> str:
    if isinstance(data, str):
        data = data.encode("utf-8")
    return "sha256:" + hashlib.sha256(data).hexdigest()


@dataclass
class RunReport:
    command: str
    input_digest: str | None
    parameters: dict = field(default_factory=dict)
    results: object = None
    version: str = TOOLKIT_VERSION

    def to_json(self) -> str:
        return canonical_json(
            {
                "command": self.command,
                "input_digest": self.input_digest,
                "parameters": self.parameters,
                "results": self.results,
                "version": self.version,
            }
        )


def vertex_names(vertices) -> list[str]:
    return [f"v{v + 1}" for v in vertices]


def parse_vertex_names(text: str, p: int) -> list[int]:
    """``"v1,v3,v2"`` (or bare ``"1,3,2"``) to 0-based ids."""
    out = []
    for tok in text.split(","):
        tok = tok.strip()
        digits = tok[1:] if tok[:1] in ("v", "V") else tok
        if not digits.isdigit() or not 1 <= int(digits) <= p:
            raise DigraphError(f"bad vertex name {tok!r} for p={p}")
        out.append(int(digits) - 1)
    return out


def parse_colors(text: str, p: int) -> tuple[int, ...]:
    """Colors file: lines ``<v> <color>`` with 1-based vertex names."""
    colors = [0] * p
    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tok = line.split()
        if len(tok) != 2:
            raise ParseError(lineno, "color record must be '<v> <color>'")
        v = _vertex(tok[0].lstrip("vV"), p, lineno)
        if colors[v]:
            raise ParseError(lineno, f"vertex {v + 1} colored twice")
        try:
            c = int(tok[1])
        except ValueError:
            raise ParseError(lineno, f"color {tok[1]!r} is not an integer") from None
        if c < 1:
            raise ParseError(lineno, "colors must be positive")
        colors[v] = c
    if 0 in colors:
        raise ParseError(0, f"vertex {colors.index(0) + 1} has no color")
    return tuple(colors)

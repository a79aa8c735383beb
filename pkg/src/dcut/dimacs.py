"""DIMACS edge-format graphs.

Format: optional ``c`` comment lines, one ``p edge <n> <m>`` header, then
``m`` lines ``e <u> <v>`` with 1-based endpoints.  Labels map to internal
ids by subtracting one, so the mapping is stable and order-free.
Self-loops and repeated edges are hard errors, not repairs.
"""

from __future__ import annotations

from .graph import Graph


class DimacsParseError(ValueError):
    """Malformed graph file; carries the offending line number."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


def parse_graph(text: str) -> Graph:
    header = None
    edges = []
    seen = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if header is not None:
                raise DimacsParseError(lineno, "duplicate problem line")
            if len(parts) != 4 or parts[1] != "edge":
                raise DimacsParseError(lineno, "problem line must be 'p edge <n> <m>'")
            try:
                header = (int(parts[2]), int(parts[3]))
            except ValueError:
                raise DimacsParseError(lineno, "non-integer problem field") from None
            if header[0] < 0 or header[1] < 0:
                raise DimacsParseError(lineno, "negative counts in problem line")
        elif parts[0] == "e":
            if header is None:
                raise DimacsParseError(lineno, "edge line before problem line")
            if len(parts) != 3:
                raise DimacsParseError(lineno, "edge line must be 'e <u> <v>'")
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise DimacsParseError(lineno, "non-integer edge endpoint") from None
            n = header[0]
            if not (1 <= u <= n and 1 <= v <= n):
                raise DimacsParseError(lineno, f"endpoint out of range 1..{n}")
            if u == v:
                raise DimacsParseError(lineno, f"self-loop at vertex {u}")
            key = (u - 1, v - 1) if u < v else (v - 1, u - 1)
            if key in seen:
                raise DimacsParseError(lineno, f"repeated edge {u} {v}")
            seen.add(key)
            edges.append(key)
        else:
            raise DimacsParseError(lineno, f"unrecognized line type {parts[0]!r}")
    if header is None:
        raise DimacsParseError(0, "missing problem line")
    if len(edges) != header[1]:
        raise DimacsParseError(
            0, f"problem line declares {header[1]} edges, found {len(edges)}")
    return Graph(header[0], edges)


def format_graph(graph: Graph, comment: str | None = None) -> str:
    lines = []
    if comment:
        for part in comment.splitlines():
            lines.append(f"c {part}")
    lines.append(f"p edge {graph.n} {graph.m}")
    for u, v in graph.edges:
        lines.append(f"e {u + 1} {v + 1}")
    return "\n".join(lines) + "\n"

"""DIMACS edge-format graphs and vertex-set sidecar files.

Files use 1-based ids; in memory vertex ``i`` of the file is ``i - 1``.
Both formats carry an optional ``c key value`` comment header, used by the
reduction outputs to record derived parameters.
"""
from __future__ import annotations

from pathlib import Path
from typing import AbstractSet, Iterable, Mapping

from .graph_core import Graph


class FormatError(ValueError):
    """A graph or vertex-set file could not be parsed."""


def _header_lines(params: Mapping[str, object] | None) -> list[str]:
    return [f"c {key} {value}" for key, value in (params or {}).items()]


def _comment_param(line: str, params: dict[str, str]) -> None:
    parts = line.split(None, 2)
    if len(parts) == 3:
        params[parts[1]] = parts[2].strip()


def parse_dimacs(text: str) -> tuple[Graph, dict[str, str]]:
    """Parse ``p edge n m`` / ``e u v`` text; returns the graph and the
    ``c key value`` parameters found in comments."""
    n = None
    declared_m = None
    edges = []
    params: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        tag = line[0]
        if tag == "c":
            _comment_param(line, params)
            continue
        fields = line.split()
        try:
            if tag == "p":
                if n is not None:
                    raise FormatError(f"line {lineno}: duplicate problem line")
                if len(fields) != 4 or fields[1] not in ("edge", "col"):
                    raise FormatError(f"line {lineno}: expected 'p edge <n> <m>'")
                n, declared_m = int(fields[2]), int(fields[3])
            elif tag == "e":
                if n is None:
                    raise FormatError(f"line {lineno}: edge before problem line")
                if len(fields) != 3:
                    raise FormatError(f"line {lineno}: expected 'e <u> <v>'")
                u, v = int(fields[1]), int(fields[2])
                if not (1 <= u <= n and 1 <= v <= n):
                    raise FormatError(f"line {lineno}: vertex id out of range 1..{n}")
                if u == v:
                    raise FormatError(f"line {lineno}: self-loop at {u}")
                edges.append((u - 1, v - 1))
            else:
                raise FormatError(f"line {lineno}: unknown line type {tag!r}")
        except ValueError as exc:
            if isinstance(exc, FormatError):
                raise
            raise FormatError(f"line {lineno}: {exc}") from None
    if n is None:
        raise FormatError("missing 'p edge <n> <m>' line")
    g = Graph(n, edges)
    if declared_m not in (g.m, len(edges)):
        raise FormatError(f"header declares {declared_m} edges, file lists {g.m} distinct edges")
    return g, params


def format_dimacs(g: Graph, params: Mapping[str, object] | None = None) -> str:
    lines = _header_lines(params)
    lines.append(f"p edge {g.n} {g.m}")
    lines += [f"e {u + 1} {v + 1}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def read_graph(path: str | Path) -> tuple[Graph, dict[str, str]]:
    return parse_dimacs(Path(path).read_text())


def write_graph(path: str | Path, g: Graph, params: Mapping[str, object] | None = None) -> None:
    Path(path).write_text(format_dimacs(g, params))


def parse_vertex_set(text: str, n: int | None = None) -> tuple[frozenset[int], dict[str, str]]:
    """Whitespace-separated 1-based ids; lines starting with ``c`` are
    comments."""
    ids = []
    params: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if line.startswith("c"):
            _comment_param(line, params)
            continue
        for tok in line.split():
            try:
                v = int(tok)
            except ValueError:
                raise FormatError(f"line {lineno}: {tok!r} is not a vertex id") from None
            if v < 1 or (n is not None and v > n):
                raise FormatError(f"line {lineno}: vertex id {v} out of range 1..{n}")
            ids.append(v - 1)
    members = frozenset(ids)
    if len(members) != len(ids):
        raise FormatError("duplicate vertex ids in set file")
    return members, params


def format_vertex_set(s: Iterable[int], params: Mapping[str, object] | None = None) -> str:
    lines = _header_lines(params)
    lines.append(" ".join(str(v + 1) for v in sorted(s)))
    return "\n".join(lines) + "\n"


def read_vertex_set(path: str | Path, n: int | None = None) -> tuple[frozenset[int], dict[str, str]]:
    return parse_vertex_set(Path(path).read_text(), n)


def write_vertex_set(
    path: str | Path, s: AbstractSet[int], params: Mapping[str, object] | None = None
) -> None:
    Path(path).write_text(format_vertex_set(s, params))

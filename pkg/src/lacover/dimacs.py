"""DIMACS edge-format reader and writer.

Accepts the classic layout: `c` comment lines, one `p edge <n> <m>` problem
line (`p col` is treated as a synonym), and `e <u> <v>` edge lines with
1-based endpoints. Internally everything is shifted to 0-based ids.
"""
from __future__ import annotations

import warnings
from pathlib import Path

from .graph import Graph, build_graph


class DimacsParseError(ValueError):
    """Malformed DIMACS input; the message carries the offending line number."""


class DuplicateEdgeWarning(UserWarning):
    """Declared edge count differs from the number of distinct parsed edges."""


def parse_dimacs(text: str | bytes) -> Graph:
    """Parse DIMACS edge-format text into a Graph.

    Duplicate edge lines (either orientation) are collapsed; a mismatch
    between the declared m and the number of distinct edges is reported
    as a DuplicateEdgeWarning, not an error.
    """
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    n: int | None = None
    declared_m: int | None = None
    pairs: list[tuple[int, int]] = []
    distinct: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        tokens = line.split()
        if tokens[0] == "p":
            if n is not None:
                raise DimacsParseError(f"line {lineno}: duplicate problem line")
            if len(tokens) != 4 or tokens[1] not in ("edge", "col"):
                raise DimacsParseError(
                    f"line {lineno}: expected 'p edge <n> <m>', got {line!r}"
                )
            try:
                n = int(tokens[2])
                declared_m = int(tokens[3])
            except ValueError:
                raise DimacsParseError(
                    f"line {lineno}: non-integer counts in problem line {line!r}"
                ) from None
            if n < 0 or declared_m < 0:
                raise DimacsParseError(f"line {lineno}: negative counts")
        elif tokens[0] == "e":
            if n is None:
                raise DimacsParseError(
                    f"line {lineno}: edge line before the problem line"
                )
            if len(tokens) != 3:
                raise DimacsParseError(
                    f"line {lineno}: expected 'e <u> <v>', got {line!r}"
                )
            try:
                u = int(tokens[1])
                v = int(tokens[2])
            except ValueError:
                raise DimacsParseError(
                    f"line {lineno}: non-integer endpoint in {line!r}"
                ) from None
            if u == v:
                raise DimacsParseError(f"line {lineno}: self-loop e {u} {v}")
            if not (1 <= u <= n and 1 <= v <= n):
                raise DimacsParseError(
                    f"line {lineno}: endpoint out of range in e {u} {v} (n={n})"
                )
            pair = (u - 1, v - 1) if u < v else (v - 1, u - 1)
            pairs.append(pair)
            distinct.add(pair)
        else:
            raise DimacsParseError(
                f"line {lineno}: unrecognized line type {tokens[0]!r}"
            )
    if n is None:
        raise DimacsParseError("missing problem line")
    if declared_m != len(distinct):
        warnings.warn(
            f"problem line declares {declared_m} edges but {len(distinct)} "
            f"distinct edges were parsed ({len(pairs)} edge lines)",
            DuplicateEdgeWarning,
            stacklevel=2,
        )
    return build_graph(n, pairs)


def parse_dimacs_file(path: str | Path) -> Graph:
    return parse_dimacs(Path(path).read_text())


def write_dimacs(g: Graph, comment: str | None = None) -> str:
    """Serialize a Graph back to DIMACS edge format (1-based ids)."""
    lines = []
    if comment:
        lines.extend(f"c {c}" for c in comment.splitlines())
    lines.append(f"p edge {g.n} {len(g.edges)}")
    lines.extend(f"e {u + 1} {v + 1}" for u, v in g.edges)
    return "\n".join(lines) + "\n"

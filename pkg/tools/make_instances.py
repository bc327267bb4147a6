"""Regenerate the bundled DIMACS instances from their standard constructions.

Each file carries comment lines and a few duplicate edge lines (both
orientations) on purpose, matching the quirks of circulating benchmark
files. Run from the repository root:

    python tools/make_instances.py
"""
from __future__ import annotations

from pathlib import Path

OUT = Path(__file__).resolve().parent.parent / "instances"


def petersen() -> tuple[int, list[tuple[int, int]]]:
    """Outer 5-cycle 1..5, inner pentagram 6..10, spokes between them."""
    edges = []
    for i in range(5):
        edges.append((i + 1, (i + 1) % 5 + 1))
        edges.append((i + 1, i + 6))
        edges.append((i + 6, (i + 2) % 5 + 6))
    return 10, edges


def queen5_5() -> tuple[int, list[tuple[int, int]]]:
    """Queen graph on a 5x5 board: squares attack along rows, columns,
    and diagonals."""
    def vid(r: int, c: int) -> int:
        return 5 * r + c + 1

    edges = []
    squares = [(r, c) for r in range(5) for c in range(5)]
    for i, (r1, c1) in enumerate(squares):
        for r2, c2 in squares[i + 1 :]:
            if r1 == r2 or c1 == c2 or abs(r1 - r2) == abs(c1 - c2):
                edges.append((vid(r1, c1), vid(r2, c2)))
    return 25, edges


def grotzsch() -> tuple[int, list[tuple[int, int]]]:
    """Mycielski construction over a 5-cycle: 11 vertices, 20 edges,
    triangle-free and 4-chromatic."""
    edges = []
    for i in range(5):
        j = (i + 1) % 5
        edges.append((i + 1, j + 1))
        edges.append((i + 6, j + 1))
        edges.append((j + 6, i + 1))
        edges.append((11, i + 6))
    return 11, edges


def emit(name: str, comment_lines: list[str], n: int,
         edges: list[tuple[int, int]], duplicate_first: int) -> None:
    lines = [f"c {c}" for c in comment_lines]
    lines.append(f"p edge {n} {len(edges)}")
    lines.extend(f"e {u} {v}" for u, v in edges)
    # repeat a few edges in reversed orientation, as circulating files do
    for u, v in edges[:duplicate_first]:
        lines.append(f"e {v} {u}")
    (OUT / name).write_text("\n".join(lines) + "\n")
    print(f"wrote {OUT / name}: n={n} m={len(edges)} "
          f"(+{duplicate_first} duplicate lines)")


def main() -> None:
    OUT.mkdir(exist_ok=True)
    n, edges = petersen()
    emit(
        "petersen.col",
        ["Petersen graph", "10 vertices, 15 edges, vertex-transitive"],
        n, edges, duplicate_first=2,
    )
    n, edges = queen5_5()
    emit(
        "queen5_5.col",
        ["Queen graph for a 5x5 board",
         "vertices are squares; edges join mutually attacking squares"],
        n, edges, duplicate_first=3,
    )
    n, edges = grotzsch()
    emit(
        "grotzsch.col",
        ["Grotzsch graph (Mycielski construction over a 5-cycle)",
         "11 vertices, 20 edges, triangle-free"],
        n, edges, duplicate_first=2,
    )


if __name__ == "__main__":
    main()

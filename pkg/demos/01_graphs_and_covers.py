"""
Graphs, covers, and the DIMACS edge format
==========================================

Build a small graph, test vertex covers against it, and round-trip the
instance through the DIMACS text format.
"""
import numpy as np

from lacover import build_graph, is_vertex_cover, uncovered_edges
from lacover import parse_dimacs, write_dimacs

# the Petersen graph: outer 5-cycle, inner 5-star, spokes between them
outer = [(i, (i + 1) % 5) for i in range(5)]
inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
spokes = [(i, 5 + i) for i in range(5)]
g = build_graph(10, outer + inner + spokes)

print("vertices:", g.n)
print("edges:", len(g.edges))
print("degree of vertex 0:", g.degree(0))

# every vertex covers its three incident edges; six vertices suffice
candidate = {0, 2, 3, 5, 6, 9}
print("candidate", sorted(candidate), "valid:", is_vertex_cover(g, candidate))

too_small = {0, 1, 2}
print("candidate", sorted(too_small), "valid:", is_vertex_cover(g, too_small))
print("edges it misses:", uncovered_edges(g, too_small))

# serialize, then read back: comments and 1-based ids are the format's
text = write_dimacs(g, comment="petersen graph")
print()
print(text[: text.index("e 2 3")] + "...")
again = parse_dimacs(text)
print("round trip preserved everything:", again == g)

# duplicate edge lines collapse on read
noisy = text + "e 1 2\ne 2 1\n"
import warnings

with warnings.catch_warnings():
    warnings.simplefilter("ignore")
    deduped = parse_dimacs(noisy)
print("after appending duplicates:", len(deduped.edges), "edges")

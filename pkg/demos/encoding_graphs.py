"""Encoding graphs as words, three ways, plus the bounded search.

Run:  python demos/encoding_graphs.py
"""

from wordnerve import (
    ChordDiagram,
    SearchBudget,
    chord_intersection_graph,
    find_general_word,
    from_edge_list,
    general_rep_number_bounded,
    gr_upper_bound,
    induced_graph_general,
    word_any_graph,
    word_bipartite,
    word_from_chord_diagram,
)

# Any graph with m edges can be written down as one alternating factor per
# edge; the price is a level that grows with m.
p3 = from_edge_list([("a", "b"), ("b", "c")])
w, d = word_any_graph(p3)
print(f"path a-b-c  ->  '{w}' at level {d}")
assert induced_graph_general(w, d) == p3

# Bipartite graphs do far better: the level only needs to reach the size
# of the smaller side.
k23 = from_edge_list([(v, u) for v in ("v1", "v2") for u in ("u1", "u2", "u3")])
w, d = word_bipartite(k23)
print(f"K(2,3)      ->  {len(w)} letters at level {d}")
assert induced_graph_general(w, d) == k23

# Circle graphs come straight off a chord diagram: read the chord labels
# around the circle and you get a 2-uniform word at level 2.
c5_diagram = ChordDiagram(("1", "5", "2", "1", "3", "2", "4", "3", "5", "4"))
w = word_from_chord_diagram(c5_diagram)
print(f"C5 diagram  ->  '{w}'")
assert induced_graph_general(w, 2) == chord_intersection_graph(c5_diagram)

# When no construction applies, search.  Verdicts are always relative to
# the budget: a miss only rules out words within the copy/length bounds.
c4 = from_edge_list([("1", "2"), ("2", "3"), ("3", "4"), ("1", "4")])
budget = SearchBudget(max_copies_per_letter=3, max_total_length=12, node_limit=2_000_000)
results = general_rep_number_bounded(c4, 2, budget)
for level, verdict in results.items():
    print(f"C4 at level {level}: {verdict.outcome}"
          + (f" ({verdict.witness})" if verdict.found else ""))
print("least level with a witness:", gr_upper_bound(results))

# The wheel again, this time found by search rather than by hand:
wheel = from_edge_list(
    [("1", "2"), ("2", "3"), ("3", "4"), ("4", "5"), ("1", "5")]
    + [(v, "6") for v in "12345"]
)
verdict = find_general_word(wheel, 2, SearchBudget(5, 15, 20_000_000))
print(f"wheel witness: '{verdict.witness}' after {verdict.nodes_explored} nodes")

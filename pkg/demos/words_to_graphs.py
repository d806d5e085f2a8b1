"""From words to graphs: alternation semantics in action.

Run:  python demos/words_to_graphs.py
"""

from wordnerve import (
    induced_graph_classic,
    induced_graph_general,
    is_d_intersecting,
    max_alternation,
    rotate,
    word,
)

# Two letters are "level-d intersecting" in a word when some subsequence
# using only those two letters alternates for at least d+2 steps.  The
# alternation value is just the number of runs in the pair restriction:
w = word("1616666")
print("word:", w)
print("alternation of 1 and 6:", max_alternation(w, "1", "6"))  # 1616 -> 4
print("2-intersecting?", is_d_intersecting(w, "1", "6", 2))
print("3-intersecting?", is_d_intersecting(w, "1", "6", 3))
print()

# A word induces a graph on its alphabet at every level d: edge iff the
# pair is d-intersecting.  The classic word-representable reading instead
# demands that the *whole* restriction alternates.
w = word("121323")
print("word:", w)
print("classic graph:  ", induced_graph_classic(w))
print("level-1 graph:  ", induced_graph_general(w, 1))
print("level-2 graph:  ", induced_graph_general(w, 2))
print()

# This 15-letter word encodes the 5-wheel (cycle 1..5 plus hub 6) at
# level 2, even though the wheel has no classic word-representant at all.
wheel_word = word("156216326436546")
print("wheel word:", wheel_word)
print("level-2 induced graph:", induced_graph_general(wheel_word, 2))
print()

# Level 2 is rotation-invariant: spinning the word around never changes
# the induced graph.  Odd levels are not: 12121 induces an edge at level
# 3, its rotation 11212 does not.
w = word("12121")
print("12121 at level 3:", induced_graph_general(w, 3))
print("11212 at level 3:", induced_graph_general(rotate(w, 4), 3))
for s in range(5):
    assert induced_graph_general(rotate(w, s), 2) == induced_graph_general(w, 2)
print("all five rotations agree at level 2")

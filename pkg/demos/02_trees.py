"""Labeled trees: building, labeling, and pruning.

The tree route builds an infinite skeleton from the recurrence: each
level has one supernode whose subtrees are copies of smaller finite
trees.  Labels 1..n are placed in preorder (s per supernode), and the
slow sequence value at n is the number of labels sitting on leaves.

Pruning deletes one layer of labels and reproduces the same family of
trees at a smaller n, which is where the nested recurrence comes from.
"""

from slowseq import (
    build_finite_tree,
    build_skeleton,
    label_skeleton,
    leaf_count_oracle,
    parse_recurrence,
    prune,
    render_tree,
    skeleton_height_for,
)

rec = parse_recurrence("2")

print("Finite tree of height 2 for <2> (a perfect binary tree):")
print(render_tree(build_finite_tree(rec, 2)))
print()

s, n = 2, 27
height = skeleton_height_for(rec, s, n)
labeled = label_skeleton(build_skeleton(rec, height), s, n)
print(f"Skeleton truncation labeled with 1..{n} at shift {s}:")
print(render_tree(labeled.tree, labeled))
print()
print(f"leaf labels <= 8:  {leaf_count_oracle(rec, s, 8)}")
print(f"leaf labels <= 30: {leaf_count_oracle(rec, s, 30)}")
print()

pruned = prune(labeled)
print(f"After one pruning step the tree carries labels 1..{pruned.n}:")
print(render_tree(pruned.tree, pruned))

fresh = label_skeleton(build_skeleton(rec, height - 1), s, pruned.n)
print()
print("identical to a freshly labeled smaller truncation:", pruned == fresh)

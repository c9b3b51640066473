"""Three roads to the same slow sequence.

A slow sequence starts at 1 and grows by 0 or 1 per step.  Pick a linear
recurrence with nonnegative coefficients and a shift s, and you get one
slow sequence three different ways:

1. evaluate a nested recurrence (built automatically from the coefficients),
2. count labeled leaves in an infinite tree,
3. run-length decode the frequencies read off digit strings.

This script computes all three for a few examples and shows they agree.
"""

from slowseq import (
    build_recurrence,
    eval_slow,
    frequencies_to_slow,
    parse_recurrence,
    render,
)
from slowseq.trees import leaf_count_prefix

N = 24

for text, s, name in [("2", 0, "Conolly"), ("2", 1, "Tanny"), ("1,1", 0, "Fibonacci-based")]:
    rec = parse_recurrence(text)
    print(f"--- {name}: coefficients <{text}>, shift {s} ---")
    print("nested form:   ", render(build_recurrence(rec, s)))
    routes = {
        "recurrence": eval_slow(rec, s, N).prefix(),
        "tree leaves": leaf_count_prefix(rec, s, N),
        "frequencies": frequencies_to_slow(rec, s, N),
    }
    for label, values in routes.items():
        print(f"{label:>12}:  ", " ".join(map(str, values)))
    assert len(set(map(tuple, routes.values()))) == 1
    print()

print("A recurrence with deeper nesting, <1,2,0,3> at shift 0:")
rec = parse_recurrence("1,2,0,3")
print(render(build_recurrence(rec, 0)))
print("first terms:", " ".join(map(str, eval_slow(rec, 0, 30).prefix())))

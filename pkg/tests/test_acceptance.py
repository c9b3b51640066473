"""End-to-end acceptance suite.

Each test covers one numbered criterion and prints a single pass/fail
line (visible with pytest -s, or in the failure report otherwise).
"""

import random
import sys
from contextlib import contextmanager
from fractions import Fraction

from slowseq import (
    SequenceCache,
    build_finite_tree,
    build_skeleton,
    count_valid_with_at_most,
    decode_fast,
    decode_naive,
    dominant_root,
    empirical_ratio,
    encode_fast,
    enumerate_valid,
    eval_slow,
    frequencies_to_slow,
    frequency,
    is_place_value_system,
    is_valid,
    label_skeleton,
    parse_recurrence,
    prune,
    skeleton_height_for,
    strip_leaves,
    subtree_leaf_count,
)
from slowseq.trees import SUPERNODE, canonical_shape, leaf_count_prefix
from slowseq.zeckendorf import append_zeros_check

SUITE = ["2", "3", "1,1", "1,0,1", "2,1", "1,2,0,3"]
SHIFTS = [0, 1, 3]

CONOLLY_TERMS = [1, 2, 2, 3, 4, 4, 4, 5, 6, 6, 7, 8, 8, 8, 8, 9]
CONOLLY_FREQ = [1, 2, 1, 3, 1, 2, 1, 4, 1, 2, 1, 3, 1, 2, 1, 5, 1, 2, 1, 3]
TANNY_TERMS = [1, 1, 2, 2, 2, 3, 4, 4, 4, 4, 5, 6, 6, 7, 8, 8, 8, 8, 8, 9]
TANNY_FREQ = [2, 3, 1, 4, 1, 2, 1, 5, 1, 2, 1, 3, 1, 2, 1, 6, 1, 2, 1, 3]


@contextmanager
def report(label):
    try:
        yield
    except BaseException:
        print(f"{label}: FAIL", file=sys.stderr)
        raise
    print(f"{label}: PASS", file=sys.stderr)


def random_valid_digits(rec, rng, max_len=24):
    length = rng.randint(1, max_len)
    digits = [rng.randint(1, rec.total - 1)]
    run = 0
    for _ in range(length - 1):
        d = rng.randint(0, rec.partial_sum(run + 1) - 1)
        digits.append(d)
        run = run + 1 if d == 0 else 0
    return tuple(digits)


def test_criterion_1_table_fixtures():
    with report("criterion 1 (table fixtures)"):
        rec = parse_recurrence("2")
        assert eval_slow(rec, 0, 16).prefix() == CONOLLY_TERMS
        assert [frequency(rec, 0, n) for n in range(1, 21)] == CONOLLY_FREQ
        assert eval_slow(rec, 1, 20).prefix() == TANNY_TERMS
        assert [frequency(rec, 1, n) for n in range(1, 21)] == TANNY_FREQ


def test_criterion_2_three_route_equivalence():
    with report("criterion 2 (three-route equivalence)"):
        for text in SUITE:
            rec = parse_recurrence(text)
            for s in SHIFTS:
                oracle = leaf_count_prefix(rec, s, 5000)
                recurrence = eval_slow(rec, s, 5000).prefix()
                freq = frequencies_to_slow(rec, s, 5000)
                assert oracle == recurrence == freq, (text, s)


def test_criterion_3_codec():
    with report("criterion 3 (codec correctness)"):
        rng = random.Random(20240817)
        for text in SUITE:
            rec = parse_recurrence(text)
            cache = SequenceCache(rec)
            # (a) shortlex enumeration matches encode
            for n, digits in enumerate(enumerate_valid(rec, 2000), start=1):
                assert encode_fast(rec, n, cache) == digits, (text, n)
            # (b) decode(encode(N)) == N
            for n in range(1, 10**5 + 1):
                assert decode_fast(rec, encode_fast(rec, n, cache), cache) == n
            # (c) fast == naive on random valid sequences
            for _ in range(10**4):
                digits = random_valid_digits(rec, rng)
                assert is_valid(rec, digits)
                assert decode_fast(rec, digits, cache) == decode_naive(
                    rec, digits, cache
                ), (text, digits)
            # (d) count of valid sequences with at most t digits
            for t in range(21):
                assert count_valid_with_at_most(rec, t) == cache.term(t) - 1


def test_criterion_4_closed_form_leaf_counts():
    with report("criterion 4 (closed-form leaf counts)"):
        for text in SUITE:
            rec = parse_recurrence(text)
            cache = SequenceCache(rec)
            for j in range(9):
                tree = build_finite_tree(rec, j)
                chain = tree.special_chain()  # special node per level
                for t in range(j + 1):
                    counted = _leaves_under(tree, chain[t])
                    assert counted == subtree_leaf_count(rec, j, t, cache)
                # edge values
                assert subtree_leaf_count(rec, j, 0, cache) == 1
                for t in range(j + 1):
                    if j - t >= rec.order:
                        assert subtree_leaf_count(rec, j, t, cache) == cache.term(t)


def _leaves_under(tree, idx):
    node = tree.nodes[idx]
    if not node.children:
        return 1
    return sum(_leaves_under(tree, c) for c in node.children)


def test_criterion_5_pruning():
    with report("criterion 5 (pruning identity)"):
        rec = parse_recurrence("2")
        h = skeleton_height_for(rec, 2, 27)
        pruned = prune(label_skeleton(build_skeleton(rec, h), 2, 27))
        assert pruned.n == 15
        assert pruned == label_skeleton(build_skeleton(rec, h - 1), 2, 15)
        for text in SUITE:
            rec = parse_recurrence(text)
            for s in SHIFTS:
                counts = leaf_count_prefix(rec, s, 500)
                height = skeleton_height_for(rec, s, 500)
                skeleton = build_skeleton(rec, height)
                for n in range(2, 501):
                    expected = n - s - counts[n - 2]
                    if expected < 1:
                        continue
                    result = prune(label_skeleton(skeleton, s, n))
                    assert result.label_count() == expected, (text, s, n)


def test_criterion_6_asymptotics():
    with report("criterion 6 (asymptotics)"):
        assert abs(dominant_root(parse_recurrence("1,1")) - 1.6180339887) < 1e-8
        assert abs(dominant_root(parse_recurrence("1,2,0,3")) - 2.1949) < 1e-4
        fib = empirical_ratio(parse_recurrence("1,1"), 0, 10**6)
        assert abs(fib - Fraction(381966, 10**6)) <= Fraction(5, 1000)
        conolly = empirical_ratio(parse_recurrence("2"), 0, 2**20)
        assert abs(conolly - Fraction(1, 2)) <= Fraction(1, 1000)
        big = empirical_ratio(parse_recurrence("1,2,0,3"), 0, 10**6)
        assert abs(big - Fraction(5444, 10**4)) <= Fraction(1, 100)


def test_criterion_7_place_value():
    with report("criterion 7 (place-value classification)"):
        for text in ("2", "7", "1,1", "1,0,1", "1,0,0,1"):
            assert is_place_value_system(parse_recurrence(text)).is_place_value
        for text in ("1,2", "2,1", "1,2,0,3"):
            result = is_place_value_system(parse_recurrence(text))
            assert not result.is_place_value
            assert result.witness_digits is not None
            assert result.witness_decoded != result.witness_linear_sum


def test_criterion_8_append_zeros():
    with report("criterion 8 (append-zeros property)"):
        rng = random.Random(8128)
        for text in SUITE:
            rec = parse_recurrence(text)
            for _ in range(100):
                digits = random_valid_digits(rec, rng, max_len=10)
                result = append_zeros_check(rec, digits, n_max=30)
                assert result.holds, (text, digits, result.failures[:3])


def test_criterion_9_structural_invariants():
    with report("criterion 9 (structural invariants)"):
        for text in SUITE:
            rec = parse_recurrence(text)
            for j in range(9):
                tree = build_finite_tree(rec, j)
                _check_perfection(tree)
                if j > 0:
                    prev = build_finite_tree(rec, j - 1)
                    assert canonical_shape(strip_leaves(tree)) == canonical_shape(
                        prev
                    ), (text, j)
            skeleton = build_skeleton(rec, 8)
            _check_perfection(skeleton)
            _check_child_counts(rec, skeleton)
            shorter = build_skeleton(rec, 7)
            assert canonical_shape(strip_leaves(skeleton)) == canonical_shape(
                shorter
            ), text


def _check_perfection(tree):
    for node in tree.nodes:
        assert bool(node.children) == (node.level > 0)


def _check_child_counts(rec, skeleton):
    for idx, node in enumerate(skeleton.nodes):
        if node.level == 0:
            continue
        if node.kind == SUPERNODE:
            assert len(node.children) == rec.total, idx
            continue
        # distance to the most recent ancestor that has left siblings
        cur = idx
        distance = 0
        while skeleton.nodes[cur].type == 0:
            cur = skeleton.nodes[cur].parent
            distance += 1
        assert len(node.children) == rec.partial_sum(distance + 1), idx

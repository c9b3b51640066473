import random

import pytest

from slowseq import (
    InvalidDigitsError,
    SequenceCache,
    append_zeros_check,
    count_valid_with_at_most,
    decode_fast,
    decode_naive,
    digits_to_text,
    encode_fast,
    encode_naive,
    enumerate_valid,
    frequencies_to_slow,
    frequency,
    is_place_value_system,
    is_valid,
    parse_recurrence,
    text_to_digits,
    trailing_zeros,
)

SUITE = ["2", "3", "1,1", "1,0,1", "2,1", "1,2,0,3"]


def random_valid_digits(rec, rng, max_len=24):
    """Draw a valid digit sequence by walking the zero-run automaton."""
    length = rng.randint(1, max_len)
    digits = [rng.randint(1, rec.total - 1)]
    run = 0
    for _ in range(length - 1):
        allowed = rec.partial_sum(run + 1)  # digits 0..allowed-1
        d = rng.randint(0, allowed - 1)
        digits.append(d)
        run = run + 1 if d == 0 else 0
    return tuple(digits)


def test_validity_rules_fibonacci():
    rec = parse_recurrence("1,1")
    assert is_valid(rec, (1,))
    assert is_valid(rec, (1, 0))
    assert is_valid(rec, (1, 0, 1))
    assert not is_valid(rec, (1, 1))  # needs a zero before the next 1
    assert not is_valid(rec, (0, 1))  # leading zero
    assert not is_valid(rec, (2,))  # digit must be < Lam


def test_validity_rules_base_like():
    rec = parse_recurrence("2")
    assert is_valid(rec, (1, 1, 0, 1))
    assert not is_valid(rec, (2, 0))


def test_enumeration_is_shortlex():
    rec = parse_recurrence("1,1")
    first = enumerate_valid(rec, 7)
    assert [digits_to_text(rec, d) for d in first] == [
        "1", "10", "100", "101", "1000", "1001", "1010",
    ]


def test_encode_fixture():
    rec = parse_recurrence("1,1")
    assert encode_fast(rec, 5) == (1, 0, 0, 0)
    assert encode_naive(rec, 5) == (1, 0, 0, 0)


def test_encode_matches_enumeration_order():
    for text in SUITE:
        rec = parse_recurrence(text)
        cache = SequenceCache(rec)
        for n, digits in enumerate(enumerate_valid(rec, 500), start=1):
            assert encode_fast(rec, n, cache) == digits, (text, n)


def test_roundtrip_and_fast_naive_agreement():
    for text in SUITE:
        rec = parse_recurrence(text)
        cache = SequenceCache(rec)
        for n in range(1, 1200):
            digits = encode_fast(rec, n, cache)
            assert encode_naive(rec, n, cache) == digits
            assert decode_fast(rec, digits, cache) == n
            assert decode_naive(rec, digits, cache) == n


def test_decode_random_fast_equals_naive():
    rng = random.Random(20240817)
    for text in SUITE:
        rec = parse_recurrence(text)
        cache = SequenceCache(rec)
        for _ in range(300):
            digits = random_valid_digits(rec, rng)
            assert is_valid(rec, digits)
            assert decode_fast(rec, digits, cache) == decode_naive(
                rec, digits, cache
            )


def test_decode_rejects_invalid():
    rec = parse_recurrence("1,1")
    with pytest.raises(InvalidDigitsError):
        decode_fast(rec, (1, 1))
    with pytest.raises(InvalidDigitsError):
        decode_naive(rec, (0, 1))


def test_counting_matches_terms():
    for text in SUITE:
        rec = parse_recurrence(text)
        cache = SequenceCache(rec)
        for t in range(13):
            assert count_valid_with_at_most(rec, t) == cache.term(t) - 1


def test_trailing_zeros():
    assert trailing_zeros((1, 0, 0)) == 2
    assert trailing_zeros((1,)) == 0


def test_frequency_fixtures():
    rec = parse_recurrence("2")
    conolly = [frequency(rec, 0, n) for n in range(1, 21)]
    assert conolly == [1, 2, 1, 3, 1, 2, 1, 4, 1, 2, 1, 3, 1, 2, 1, 5, 1, 2, 1, 3]
    tanny = [frequency(rec, 1, n) for n in range(1, 21)]
    assert tanny == [2, 3, 1, 4, 1, 2, 1, 5, 1, 2, 1, 3, 1, 2, 1, 6, 1, 2, 1, 3]


def test_frequencies_to_slow_prefix():
    rec = parse_recurrence("2")
    assert frequencies_to_slow(rec, 0, 16) == [
        1, 2, 2, 3, 4, 4, 4, 5, 6, 6, 7, 8, 8, 8, 8, 9,
    ]


def test_place_value_classification():
    for text in ("2", "7", "1,1", "1,0,1", "1,0,0,1"):
        assert is_place_value_system(parse_recurrence(text)).is_place_value
    for text in ("1,2", "2,1", "1,2,0,3"):
        result = is_place_value_system(parse_recurrence(text))
        assert not result.is_place_value
        assert result.witness_decoded != result.witness_linear_sum


def test_append_zeros_property():
    rng = random.Random(7)
    for text in SUITE:
        rec = parse_recurrence(text)
        for _ in range(10):
            digits = random_valid_digits(rec, rng, max_len=6)
            report = append_zeros_check(rec, digits, n_max=20)
            assert report.holds, (text, digits, report.failures[:2])


def test_digit_text_roundtrip():
    rec = parse_recurrence("1,2,0,3")  # Lam = 6, single-char digits
    digits = (5, 0, 0, 3)
    assert text_to_digits(rec, digits_to_text(rec, digits)) == digits
    big = parse_recurrence("11")  # Lam = 11, comma-separated
    assert digits_to_text(big, (10, 0)) == "10,0"
    assert text_to_digits(big, "10,0") == (10, 0)

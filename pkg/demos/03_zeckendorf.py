"""Generalized Zeckendorf digits.

Every positive integer N has a unique representation as the N-th valid
digit string in shortlex order, where validity means: digits stay below
the coefficient sum, no leading zero, and digit d must be preceded by a
long enough run of zeros.  For <1,1> this is the classical Zeckendorf
representation over Fibonacci numbers; for <b> it is base b.

The number of trailing zeros determines how often N occurs in the slow
sequence, which is the third construction route.
"""

from slowseq import (
    SequenceCache,
    count_valid_with_at_most,
    decode_fast,
    digits_to_text,
    encode_fast,
    enumerate_valid,
    frequency,
    is_place_value_system,
    parse_recurrence,
)

rec = parse_recurrence("1,1")
cache = SequenceCache(rec)

print("First valid strings for <1,1>, i.e. Zeckendorf representations:")
for n, digits in enumerate(enumerate_valid(rec, 12), start=1):
    print(f"  {n:3d} -> {digits_to_text(rec, digits)}")
print()

n = 100
digits = encode_fast(rec, n, cache)
print(f"encode({n}) = {digits_to_text(rec, digits)}")
print(f"decode back = {decode_fast(rec, digits, cache)}")
print()

print("Counting valid strings with at most t digits recovers the terms:")
for t in range(1, 8):
    print(f"  t={t}: {count_valid_with_at_most(rec, t)} strings,"
          f" a_{t} - 1 = {cache.term(t) - 1}")
print()

print("Frequencies come from trailing zeros (shift 0):")
for n in range(1, 13):
    digits = encode_fast(rec, n, cache)
    print(f"  {n:3d} = {digits_to_text(rec, digits):>7}"
          f"   occurs {frequency(rec, 0, n, cache)} time(s)")
print()

print("Which systems are place-value systems?")
for text in ("2", "1,1", "2,1", "1,2,0,3"):
    result = is_place_value_system(parse_recurrence(text))
    if result.is_place_value:
        print(f"  <{text}>: yes")
    else:
        print(f"  <{text}>: no; digits {result.witness_digits} decode to"
              f" {result.witness_decoded}, not {result.witness_linear_sum}")

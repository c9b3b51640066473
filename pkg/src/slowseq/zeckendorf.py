"""The generalized Zeckendorf numeration system attached to a recurrence.

A digit sequence d_M ... d_0 (most significant first) is valid when every
digit is below Lam, the leading digit is nonzero, and each digit l other
than the leading one is preceded by at least mu_l - 1 consecutive zeroes.
Ordering all valid sequences shortlex (shorter first, then lexicographic)
makes the N-th sequence the representation of N.

Conversions come in two flavors each way: a quadratic one that evaluates
the subtree-leaf-count formula term by term (the oracle), and a linear
one that carries the running left-subtree leaf count through a constant-
time update.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import InvalidDigitsError
from .recurrence import LinearRecurrence, SequenceCache
from .trees import subtree_leaf_count

Digits = tuple[int, ...]


def is_valid(rec: LinearRecurrence, digits: Sequence[int]) -> bool:
    """Check the three validity conditions against ``rec``."""
    digits = tuple(digits)
    if not digits:
        return False
    if any(not 0 <= d < rec.total for d in digits):
        return False
    if digits[0] == 0:
        return False
    # digits[0] is d_M; a digit at position p (reading order) needs the
    # mu_l - 1 digits before it in reading order to be zero.
    run = 0
    for d in digits[1:]:
        if d == 0:
            run += 1
            continue
        if rec.mu_table[d] - 1 > run:
            return False
        run = 0
    return True


def _require_valid(rec: LinearRecurrence, digits: Sequence[int]) -> Digits:
    digits = tuple(digits)
    if not is_valid(rec, digits):
        raise InvalidDigitsError(
            f"digit sequence {list(digits)} is not valid for {rec}"
        )
    return digits


def trailing_zeros(digits: Sequence[int]) -> int:
    count = 0
    for d in reversed(tuple(digits)):
        if d != 0:
            break
        count += 1
    return count


def iter_valid(rec: LinearRecurrence) -> Iterator[Digits]:
    """All valid sequences in shortlex order, indefinitely."""
    m = 1
    while True:
        yield from _iter_valid_of_length(rec, m)
        m += 1


def _iter_valid_of_length(rec: LinearRecurrence, m: int) -> Iterator[Digits]:
    prefix: list[int] = []

    def extend(pos: int, run: int) -> Iterator[Digits]:
        if pos == m:
            yield tuple(prefix)
            return
        if pos == 0:
            allowed = range(1, rec.total)
        else:
            # 0 always, plus every l with mu_l <= run + 1
            allowed = range(rec.partial_sum(run + 1))
        for d in allowed:
            prefix.append(d)
            yield from extend(pos + 1, run + 1 if d == 0 else 0)
            prefix.pop()

    yield from extend(0, 0)


def enumerate_valid(rec: LinearRecurrence, count: int) -> list[Digits]:
    """The first ``count`` valid sequences; the N-th is the representation
    of N.  Brute-force oracle for the codecs."""
    if count < 1:
        raise ValueError(f"count must be positive, got {count}")
    out: list[Digits] = []
    for digits in iter_valid(rec):
        out.append(digits)
        if len(out) == count:
            break
    return out


def count_valid_with_at_most(rec: LinearRecurrence, t: int) -> int:
    """Number of valid sequences with at most t digits.

    Counted by dynamic programming over the zero-run state, independent
    of the generated sequence a_n (which the count must equal minus one).
    """
    if t <= 0:
        return 0
    k = rec.order
    memo: dict[tuple[int, int], int] = {}

    def suffixes(run: int, rem: int) -> int:
        if rem == 0:
            return 1
        key = (min(run, k), rem)
        if key not in memo:
            memo[key] = suffixes(run + 1, rem - 1) + (
                rec.partial_sum(run + 1) - 1
            ) * suffixes(0, rem - 1)
        return memo[key]

    return sum((rec.total - 1) * suffixes(0, m - 1) for m in range(1, t + 1))


# ---------------------------------------------------------------------------
# Decoding (digits -> number)


def decode_naive(
    rec: LinearRecurrence,
    digits: Sequence[int],
    cache: SequenceCache | None = None,
) -> int:
    """Evaluate the leaf-count sum

        N = a_M + sum_{d_i != 0} (d_i - 1) L(i, i) + sum_{(i,j)} L(j, i)

    where the last sum runs over successive pairs of nonzero positions.
    Quadratic in the length; the independent oracle for decode_fast.
    """
    digits = _require_valid(rec, digits)
    if cache is None:
        cache = SequenceCache(rec)
    m_top = len(digits) - 1
    total = cache.term(m_top)
    j = -1
    for pos, d in enumerate(digits):
        t = m_top - pos
        if d == 0:
            continue
        if j != -1:
            total += subtree_leaf_count(rec, j, t, cache)
        j = t
        total += (d - 1) * subtree_leaf_count(rec, t, t, cache)
    return total


def _exact_div(numer: int, denom: int) -> int:
    q, r = divmod(numer, denom)
    if r:
        raise ArithmeticError(f"{numer} not divisible by {denom}")
    return q


def decode_fast(
    rec: LinearRecurrence,
    digits: Sequence[int],
    cache: SequenceCache | None = None,
) -> int:
    """Linear-time decode; carries the running left-subtree leaf count.

    On a nonzero digit the carried value refreshes to L(t, t-1); on a zero
    digit it drops by (Lam_{j-t+1} - 1)(a_t - a_{t-1})/(Lam - 1).
    """
    digits = _require_valid(rec, digits)
    if cache is None:
        cache = SequenceCache(rec)
    a = cache.term
    lam1 = rec.partial_sums[1]
    denom = rec.total - 1
    m_top = len(digits) - 1
    total = 0
    left = a(m_top)
    j = -1
    for pos, d in enumerate(digits):
        t = m_top - pos
        if d != 0:
            total += left
            ltt = _exact_div(a(t + 1) - a(t), denom)
            total += (d - 1) * ltt
            left = _exact_div(
                a(t + 1) - lam1 * a(t) + (lam1 - 1) * a(t - 1), denom
            )
            j = t
        else:
            left -= (rec.partial_sum(j - t + 1) - 1) * _exact_div(
                a(t) - a(t - 1), denom
            )
    return total


# ---------------------------------------------------------------------------
# Encoding (number -> digits)


def encode_naive(
    rec: LinearRecurrence, n: int, cache: SequenceCache | None = None
) -> Digits:
    """Greedy left-to-right encoding using exact subtree leaf counts.

    The representation has M+1 digits where a_M <= n < a_{M+1}.  The first
    position is treated as unconditionally nonzero with left count a_M.
    """
    if n < 1:
        raise ValueError(f"can only encode positive integers, got {n}")
    if cache is None:
        cache = SequenceCache(rec)
    m_top = cache.floor_index(n)
    digits: list[int] = []
    sofar = 0
    j = -1
    for t in range(m_top, -1, -1):
        left = cache.term(m_top) if j == -1 else subtree_leaf_count(rec, j, t, cache)
        if j == -1 or n - sofar >= left:
            ltt = subtree_leaf_count(rec, t, t, cache)
            d = (n - sofar - left) // ltt
            sofar += d * ltt + left
            digits.append(d + 1)
            j = t
        else:
            digits.append(0)
    return tuple(digits)


def encode_fast(
    rec: LinearRecurrence, n: int, cache: SequenceCache | None = None
) -> Digits:
    """Linear-time encode; same carried-value updates as decode_fast."""
    if n < 1:
        raise ValueError(f"can only encode positive integers, got {n}")
    if cache is None:
        cache = SequenceCache(rec)
    a = cache.term
    lam1 = rec.partial_sums[1]
    denom = rec.total - 1
    m_top = cache.floor_index(n)
    digits: list[int] = []
    sofar = 0
    left = a(m_top)
    j = -1
    for t in range(m_top, -1, -1):
        if j == -1 or n - sofar >= left:
            ltt = _exact_div(a(t + 1) - a(t), denom)
            d = (n - sofar - left) // ltt
            sofar += d * ltt + left
            digits.append(d + 1)
            left = _exact_div(
                a(t + 1) - lam1 * a(t) + (lam1 - 1) * a(t - 1), denom
            )
            j = t
        else:
            digits.append(0)
            left -= (rec.partial_sum(j - t + 1) - 1) * _exact_div(
                a(t) - a(t - 1), denom
            )
    return tuple(digits)


# ---------------------------------------------------------------------------
# Frequencies and the third construction route


def frequency(
    rec: LinearRecurrence,
    s: int,
    n: int,
    cache: SequenceCache | None = None,
) -> int:
    """How many times the value n appears in the slow sequence:
    1 + (trailing zeros), plus s more when n is a term of the sequence a."""
    if s < 0:
        raise ValueError(f"shift must be nonnegative, got {s}")
    if cache is None:
        cache = SequenceCache(rec)
    digits = encode_fast(rec, n, cache)
    count = 1 + trailing_zeros(digits)
    if digits[0] == 1 and all(d == 0 for d in digits[1:]):
        count += s
    return count


def frequencies_to_slow(rec: LinearRecurrence, s: int, n_max: int) -> list[int]:
    """Run-length decode the frequency counts into [L(1), ..., L(n_max)]."""
    if n_max < 1:
        raise ValueError(f"n_max must be positive, got {n_max}")
    cache = SequenceCache(rec)
    out: list[int] = []
    value = 0
    while len(out) < n_max:
        value += 1
        out.extend([value] * frequency(rec, s, value, cache))
    return out[:n_max]


def slow_value_at(rec: LinearRecurrence, s: int, n: int) -> int:
    """L(n) via cumulative frequency counts; cheapest route for large n."""
    if n < 1:
        raise ValueError(f"index must be positive, got {n}")
    cache = SequenceCache(rec)
    covered = 0
    value = 0
    while covered < n:
        value += 1
        covered += frequency(rec, s, value, cache)
    return value


# ---------------------------------------------------------------------------
# Classification and structural properties


@dataclass(frozen=True)
class PlaceValueResult:
    is_place_value: bool
    #: When not a place value system: the digit sequence (2, 0), its actual
    #: decoded value, and the (differing) fixed linear combination 2 * a_1.
    witness_digits: Digits | None = None
    witness_decoded: int | None = None
    witness_linear_sum: int | None = None


def is_place_value_system(rec: LinearRecurrence) -> PlaceValueResult:
    """True iff k == 1, or k > 1 with Lam == 2.

    Otherwise the sequence 2,0 decodes to something other than 2 * a_1,
    and that witness is returned.
    """
    if rec.order == 1 or rec.total == 2:
        return PlaceValueResult(is_place_value=True)
    witness = (2, 0)
    cache = SequenceCache(rec)
    decoded = decode_fast(rec, witness, cache)
    linear = 2 * cache.term(1)
    assert decoded != linear, "witness failed; classification is wrong"
    return PlaceValueResult(
        is_place_value=False,
        witness_digits=witness,
        witness_decoded=decoded,
        witness_linear_sum=linear,
    )


@dataclass(frozen=True)
class AppendZerosReport:
    digits: Digits
    values: tuple[int, ...]  # b_0 .. b_{n_max}
    holds: bool
    failures: tuple[int, ...]  # indices n >= k where the recurrence failed


def append_zeros_check(
    rec: LinearRecurrence, digits: Sequence[int], n_max: int
) -> AppendZerosReport:
    """Decode ``digits`` with 0..n_max appended zeroes and report whether
    the resulting values satisfy the recurrence from index k on."""
    digits = _require_valid(rec, digits)
    cache = SequenceCache(rec)
    values = [
        decode_fast(rec, digits + (0,) * n, cache) for n in range(n_max + 1)
    ]
    failures = []
    for n in range(rec.order, n_max + 1):
        expected = sum(
            rec.coeffs[i - 1] * values[n - i] for i in range(1, rec.order + 1)
        )
        if values[n] != expected:
            failures.append(n)
    return AppendZerosReport(
        digits=digits,
        values=tuple(values),
        holds=not failures,
        failures=tuple(failures),
    )


# ---------------------------------------------------------------------------
# Text format


def digits_to_text(rec: LinearRecurrence, digits: Sequence[int]) -> str:
    """Bare digit string for Lam <= 10, comma-separated otherwise."""
    if rec.total <= 10:
        return "".join(str(d) for d in digits)
    return ",".join(str(d) for d in digits)


def text_to_digits(rec: LinearRecurrence, text: str) -> Digits:
    text = text.strip()
    if not text:
        raise InvalidDigitsError("empty digit string")
    if "," in text or rec.total > 10:
        parts = [p.strip() for p in text.split(",")]
    else:
        parts = list(text)
    try:
        return tuple(int(p) for p in parts)
    except ValueError:
        raise InvalidDigitsError(f"malformed digit string: {text!r}") from None

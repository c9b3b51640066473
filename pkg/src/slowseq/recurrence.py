"""Positive-coefficient linear recurrences and their generated sequences.

A recurrence is a coefficient vector (lam_1, ..., lam_k) of nonnegative
integers with lam_1 >= 1, lam_k >= 1, and lam_1 >= 2 when k == 1.  It
generates the integer sequence

    a_n = lam_1 * a_{n-1} + ... + lam_k * a_{n-k},    a_i = 1 for i <= 0.

Alongside the coefficients we precompute the partial sums
Lam_j = lam_1 + ... + lam_j (so Lam_0 = 0, Lam = Lam_k) and, for each
0 <= l < Lam, the index mu_l = min{ j : Lam_j > l }.  These two tables
drive both the tree constructions and the digit-validity rules, so they
are built once at construction time.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from threading import Lock

from .errors import BudgetExceededError, InvalidRecurrenceError

#: Largest index a term cache will materialize.  Terms grow like kappa**n,
#: so anything near this bound is already astronomically large.
DEFAULT_INDEX_BUDGET = 10**6


@dataclass(frozen=True)
class LinearRecurrence:
    """Validated coefficient vector with derived tables.

    Instances are immutable; construct them with :func:`make_recurrence`.
    """

    coeffs: tuple[int, ...]
    order: int
    partial_sums: tuple[int, ...]  # Lam_0 .. Lam_k
    total: int  # Lam = Lam_k
    mu_table: tuple[int, ...]  # mu_0 .. mu_{Lam-1}

    def partial_sum(self, j: int) -> int:
        """Lam_j for any j >= 0; equals the total for j >= order."""
        if j < 0:
            raise ValueError(f"partial sum index must be nonnegative, got {j}")
        return self.partial_sums[j] if j <= self.order else self.total

    def coeff(self, i: int) -> int:
        """lam_i for any i >= 1; zero beyond the order."""
        if i < 1:
            raise ValueError(f"coefficient index must be positive, got {i}")
        return self.coeffs[i - 1] if i <= self.order else 0

    def mu(self, ell: int) -> int:
        """The minimum index j with Lam_j > ell, for 0 <= ell < total."""
        if not 0 <= ell < self.total:
            raise ValueError(
                f"offset must lie in [0, {self.total}), got {ell}"
            )
        return self.mu_table[ell]

    def text(self) -> str:
        """Comma-separated coefficient form, e.g. ``1,2,0,3``."""
        return ",".join(str(c) for c in self.coeffs)

    def __str__(self) -> str:
        return f"<{self.text()}>"


def make_recurrence(coeffs: list[int] | tuple[int, ...]) -> LinearRecurrence:
    """Validate a coefficient vector and precompute its derived tables.

    Rejections carry a stable reason code on the raised
    :class:`InvalidRecurrenceError`:

    * ``empty`` -- no coefficients given
    * ``negative-coefficient`` -- some lam_i < 0
    * ``leading-zero`` -- lam_1 = 0
    * ``trailing-zero`` -- lam_k = 0 (order would not be minimal)
    * ``order-one-too-small`` -- k = 1 with lam_1 < 2
    """
    coeffs = tuple(int(c) for c in coeffs)
    if not coeffs:
        raise InvalidRecurrenceError("empty", "coefficient list is empty")
    if any(c < 0 for c in coeffs):
        raise InvalidRecurrenceError(
            "negative-coefficient", f"negative coefficient in {coeffs}"
        )
    if coeffs[0] == 0:
        raise InvalidRecurrenceError(
            "leading-zero", "first coefficient must be at least 1"
        )
    if coeffs[-1] == 0:
        raise InvalidRecurrenceError(
            "trailing-zero",
            "last coefficient is 0; supply the minimal-order vector",
        )
    if len(coeffs) == 1 and coeffs[0] < 2:
        raise InvalidRecurrenceError(
            "order-one-too-small", "an order-1 recurrence needs lam_1 >= 2"
        )

    k = len(coeffs)
    partial = [0]
    for c in coeffs:
        partial.append(partial[-1] + c)
    total = partial[k]
    mu_table = []
    for ell in range(total):
        j = next(j for j in range(1, k + 1) if partial[j] > ell)
        mu_table.append(j)
    return LinearRecurrence(
        coeffs=coeffs,
        order=k,
        partial_sums=tuple(partial),
        total=total,
        mu_table=tuple(mu_table),
    )


def parse_recurrence(text: str) -> LinearRecurrence:
    """Parse the CLI text format: comma-separated decimal coefficients."""
    parts = [p.strip() for p in text.split(",")]
    try:
        coeffs = [int(p) for p in parts]
    except ValueError:
        raise InvalidRecurrenceError(
            "empty", f"malformed coefficient list: {text!r}"
        ) from None
    return make_recurrence(coeffs)


@dataclass
class SequenceCache:
    """Growable memo of the terms a_0, a_1, a_2, ...

    Indices <= 0 are never stored; they always report 1 (the all-ones
    initial condition).  Growth is synchronized so a cache may be shared,
    though per-context caches are cheaper.
    """

    recurrence: LinearRecurrence
    index_budget: int = DEFAULT_INDEX_BUDGET
    _terms: list[int] = field(default_factory=list, repr=False)
    _lock: Lock = field(default_factory=Lock, repr=False, compare=False)

    def __post_init__(self) -> None:
        if not self._terms:
            self._terms.append(1)  # a_0

    def term(self, n: int) -> int:
        """a_n; returns 1 for n <= 0 and extends the cache as needed."""
        if n <= 0:
            return 1
        if n > self.index_budget:
            raise BudgetExceededError(
                f"term index {n} exceeds budget {self.index_budget}"
            )
        if n >= len(self._terms):
            with self._lock:
                self._extend_to(n)
        return self._terms[n]

    def _extend_to(self, n: int) -> None:
        coeffs = self.recurrence.coeffs
        terms = self._terms
        while len(terms) <= n:
            m = len(terms)
            acc = 0
            for i, lam in enumerate(coeffs, start=1):
                acc += lam * (terms[m - i] if m - i >= 0 else 1)
            terms.append(acc)

    def delta(self, i: int) -> int:
        """a_{i+1} - a_i."""
        return self.term(i + 1) - self.term(i)

    def prefix(self, n_max: int) -> list[int]:
        """[a_0, ..., a_{n_max}]."""
        self.term(n_max)
        return self._terms[: n_max + 1]

    def index_of(self, value: int) -> int | None:
        """The index t with a_t == value, or None.

        Only meaningful for value >= 1; the sequence is strictly
        increasing from index 0.
        """
        if value < 1:
            return None
        t = 0
        while self.term(t) < value:
            t += 1
        return t if self.term(t) == value else None

    def floor_index(self, value: int) -> int:
        """The unique t >= 0 with a_t <= value < a_{t+1}, for value >= 1."""
        if value < 1:
            raise ValueError(f"value must be positive, got {value}")
        t = 0
        while self.term(t + 1) <= value:
            t += 1
        return t

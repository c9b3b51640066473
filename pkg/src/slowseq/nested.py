"""Symbolic nested recurrences and slow-sequence evaluation.

The nesting operator with depth d, shift s, and offset l produces

    depth 0:  n - l
    depth d:  E - s - C(E - 1)    where E is the depth d-1 expression.

Summand l of the full recurrence is C(expression at depth mu_l), and the
slow sequence is the sum of the Lam summands.  Evaluation is ascending-n
dynamic programming seeded by the leaf-count oracle on an initial
horizon.  A nonpositive argument contributes 1: once the argument
reaches the bottom, the underlying object is the one-label tree, whose
leaf count stays 1 under further pruning.  This extends the convention
a_i = 1 for i <= 0 of the linear recurrence itself.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import IllFormedEvaluationError
from .recurrence import LinearRecurrence, SequenceCache
from .trees import leaf_count_prefix


class Expr:
    """Base class for expression nodes."""

    __slots__ = ()


@dataclass(frozen=True)
class Var(Expr):
    """The free variable n."""


@dataclass(frozen=True)
class Const(Expr):
    value: int


@dataclass(frozen=True)
class Sub(Expr):
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Call(Expr):
    """Application of the recurrence symbol: C(arg)."""

    arg: Expr


def r_expr(d: int, s: int, ell: int) -> Expr:
    """The depth-d expression with shift s and offset ell.

    The depth d-1 subexpression is shared (the same object appears twice),
    so evaluators that memoize by identity do linear work in d.
    """
    if d < 0 or s < 0 or ell < 0:
        raise ValueError("depth, shift, and offset must be nonnegative")
    e: Expr = Sub(Var(), Const(ell))
    for _ in range(d):
        e = Sub(Sub(e, Const(s)), Call(Sub(e, Const(1))))
    return e


def call_depth(e: Expr) -> int:
    """Maximum nesting depth of Call nodes."""
    if isinstance(e, Call):
        return 1 + call_depth(e.arg)
    if isinstance(e, Sub):
        return max(call_depth(e.left), call_depth(e.right))
    return 0


def build_recurrence(rec: LinearRecurrence, s: int) -> list[Expr]:
    """The Lam summands; summand ell is Call at depth mu_ell."""
    if s < 0:
        raise ValueError(f"shift must be nonnegative, got {s}")
    return [
        Call(r_expr(rec.mu_table[ell], s, ell)) for ell in range(rec.total)
    ]


def render_expr(e: Expr, name: str = "C") -> str:
    """Deterministic text form with adjacent constants folded.

    A subtraction chain ``n - l - s - C(...) - s - C(...)`` renders with
    consecutive constants summed and zero constants dropped.
    """
    terms: list[Expr] = []

    def flatten(x: Expr) -> None:
        if isinstance(x, Sub):
            flatten(x.left)
            terms.append(x.right)
        else:
            terms.append(x)

    flatten(e)
    head, rest = terms[0], terms[1:]
    if isinstance(head, Var):
        out = "n"
    elif isinstance(head, Const):
        out = str(head.value)
    elif isinstance(head, Call):
        out = f"{name}({render_expr(head.arg, name)})"
    else:  # pragma: no cover - flatten never leaves a Sub here
        raise AssertionError("unflattened subtraction")
    pending = 0
    for term in rest:
        if isinstance(term, Const):
            pending += term.value
            continue
        if pending:
            out += f" - {pending}"
            pending = 0
        if isinstance(term, Call):
            out += f" - {name}({render_expr(term.arg, name)})"
        else:  # pragma: no cover
            raise AssertionError(f"unexpected term {term!r}")
    if pending:
        out += f" - {pending}"
    return out


def render(exprs: list[Expr], name: str = "C") -> str:
    """Render a summand list as ``name(n) = summand + summand + ...``."""
    body = " + ".join(render_expr(e, name) for e in exprs)
    return f"{name}(n) = {body}"


@dataclass
class SlowSequence:
    """Memoized prefix of the slow sequence with per-index provenance.

    values[0] is unused; values[n] holds the n-th term.  Indices at most
    ``horizon`` were filled from the leaf-count oracle, later ones from
    the nested recurrence.
    """

    recurrence: LinearRecurrence
    shift: int
    values: list[int]
    provenance: list[str]  # "oracle" or "recurrence", parallel to values
    horizon: int

    @property
    def n_max(self) -> int:
        return len(self.values) - 1

    def __getitem__(self, n: int) -> int:
        if not 1 <= n <= self.n_max:
            raise IndexError(f"index {n} outside [1, {self.n_max}]")
        return self.values[n]

    def prefix(self) -> list[int]:
        """[L(1), ..., L(n_max)]."""
        return self.values[1:]


def initial_horizon(rec: LinearRecurrence, s: int) -> int:
    """Oracle-filled horizon: a_k plus the labels of the first k+1 supernodes.

    The induction base starts just above a_k, but for s > 0 nested
    arguments can dip below 1 slightly beyond it; this over-approximation
    is safe and cheap to seed.
    """
    cache = SequenceCache(rec)
    return cache.term(rec.order) + s * (rec.order + 1)


def eval_slow(rec: LinearRecurrence, s: int, n_max: int) -> SlowSequence:
    """Evaluate the slow sequence up to n_max.

    The first ``initial_horizon`` values come from the leaf-count oracle;
    the rest are computed bottom-up from the nested recurrence, reading
    memoized earlier values.  A nonpositive argument contributes 1 (the
    one-label tree is a fixed point of pruning); an argument at or above
    n breaks well-definedness and raises IllFormedEvaluationError.
    """
    if s < 0:
        raise ValueError(f"shift must be nonnegative, got {s}")
    if n_max < 1:
        raise ValueError(f"n_max must be positive, got {n_max}")
    horizon = min(initial_horizon(rec, s), n_max)
    values = [0] + leaf_count_prefix(rec, s, horizon)
    provenance = ["oracle"] * (horizon + 1)
    mu = rec.mu_table
    for n in range(horizon + 1, n_max + 1):
        total = 0
        for ell in range(rec.total):
            arg = n - ell
            # Unfold the nesting iteratively; the shared depth d-1 value is
            # computed once, so each summand costs mu_ell lookups.
            for _ in range(mu[ell]):
                inner = arg - 1
                if inner > n - 1:
                    raise IllFormedEvaluationError(
                        f"nested argument {inner} above {n - 1} "
                        f"at n={n}, offset={ell}"
                    )
                arg = arg - s - (values[inner] if inner >= 1 else 1)
            if arg > n - 1:
                raise IllFormedEvaluationError(
                    f"summand argument {arg} above {n - 1} "
                    f"at n={n}, offset={ell}"
                )
            total += values[arg] if arg >= 1 else 1
        values.append(total)
        provenance.append("recurrence")
    return SlowSequence(
        recurrence=rec,
        shift=s,
        values=values,
        provenance=provenance,
        horizon=horizon,
    )


@dataclass
class TheoremReport:
    """Outcome of checking the recurrence route against the oracle route."""

    recurrence: LinearRecurrence
    shift: int
    n_max: int
    mismatches: list[tuple[int, int, int]]  # (n, recurrence value, oracle value)
    pre_horizon_confirmed: int  # indices in (a_k, horizon] where the
    pre_horizon_skipped: int  # recurrence was (resp. could not be) checked

    @property
    def ok(self) -> bool:
        return not self.mismatches


def verify_theorem(rec: LinearRecurrence, s: int, n_max: int) -> TheoremReport:
    """Compare eval_slow against the leaf-count oracle for n <= n_max.

    Also confirms, where all nested arguments stay inside [1, n-1], that
    the recurrence already holds on the oracle-seeded stretch above a_k;
    indices where an argument escapes that window are counted as skipped.
    """
    seq = eval_slow(rec, s, n_max)
    oracle = leaf_count_prefix(rec, s, n_max)
    mismatches = [
        (n, seq.values[n], oracle[n - 1])
        for n in range(1, n_max + 1)
        if seq.values[n] != oracle[n - 1]
    ]
    a_k = SequenceCache(rec).term(rec.order)
    confirmed = skipped = 0
    mu = rec.mu_table
    for n in range(a_k + 1, min(seq.horizon, n_max) + 1):
        total = 0
        in_range = True
        for ell in range(rec.total):
            arg = n - ell
            for _ in range(mu[ell]):
                if not 1 <= arg - 1 <= n - 1:
                    in_range = False
                    break
                arg = arg - s - seq.values[arg - 1]
            if not in_range or not 1 <= arg <= n - 1:
                in_range = False
                break
            total += seq.values[arg]
        if not in_range:
            skipped += 1
        elif total == seq.values[n]:
            confirmed += 1
        else:
            mismatches.append((n, total, seq.values[n]))
    return TheoremReport(
        recurrence=rec,
        shift=s,
        n_max=n_max,
        mismatches=mismatches,
        pre_horizon_confirmed=confirmed,
        pre_horizon_skipped=skipped,
    )

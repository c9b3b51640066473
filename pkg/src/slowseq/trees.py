"""Finite trees, skeleton truncations, labeling, leaf counting, pruning.

Two constructions share one node arena:

* the finite tree of height j: a single-category tree whose special node
  at level i > 0 has Lam_{j-i+1} children, the leftmost special and the
  rest roots of copies of the height-(i-1) tree;
* a truncation of the infinite skeleton: levels 0..t, where the leftmost
  node of each level i >= 1 is a supernode with Lam children (one special
  child plus Lam-1 copies of the height-(i-1) finite tree).

Preorder labeling with shift s puts s labels in each supernode and one
label in every other node, traversing sub-skeletons bottom-up.  The leaf
counting function L(n) -- the number of leaf labels at most n -- is the
slow sequence all three construction routes must agree on.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

from .errors import BudgetExceededError, CapacityError
from .recurrence import LinearRecurrence, SequenceCache

LEAF = "leaf"
REGULAR = "regular"
SUPERNODE = "supernode"

DEFAULT_NODE_BUDGET = 10**6


@dataclass
class TreeNode:
    kind: str
    level: int
    type: int  # number of left siblings
    parent: int | None
    children: list[int] = field(default_factory=list)
    labels: list[int] = field(default_factory=list)


@dataclass
class Tree:
    """Arena-backed tree; ``kind`` is ``finite`` (height j) or ``skeleton``
    (truncation through the t-th supernode)."""

    recurrence: LinearRecurrence
    kind: str
    height: int
    nodes: list[TreeNode] = field(default_factory=list)
    root: int = 0

    def add_node(
        self, kind: str, level: int, typ: int, parent: int | None, budget: int
    ) -> int:
        if len(self.nodes) >= budget:
            raise BudgetExceededError(
                f"node budget {budget} exceeded building {self.kind} tree"
            )
        idx = len(self.nodes)
        self.nodes.append(TreeNode(kind, level, typ, parent))
        if parent is not None:
            self.nodes[parent].children.append(idx)
        return idx

    def leaves(self) -> list[int]:
        """Indices of level-0 nodes in left-to-right order."""
        out: list[int] = []

        def walk(idx: int) -> None:
            node = self.nodes[idx]
            if node.level == 0:
                out.append(idx)
            for c in node.children:
                walk(c)

        # Left-to-right means sub-skeleton order for skeletons: descend the
        # special chain to the bottom first.
        if self.kind == "skeleton":
            for idx in self.special_chain():
                node = self.nodes[idx]
                if node.level == 0:
                    out.append(idx)
                for c in node.children[1:]:
                    walk(c)
        else:
            walk(self.root)
        return out

    def special_chain(self) -> list[int]:
        """Special nodes from level 0 up to the root."""
        chain = [self.root]
        while self.nodes[chain[-1]].children:
            chain.append(self.nodes[chain[-1]].children[0])
        chain.reverse()
        return chain

    def leaf_count(self) -> int:
        return sum(1 for node in self.nodes if node.level == 0)

    def clone(self) -> Tree:
        """Structural copy with empty label lists."""
        return Tree(
            recurrence=self.recurrence,
            kind=self.kind,
            height=self.height,
            nodes=[
                TreeNode(n.kind, n.level, n.type, n.parent, list(n.children))
                for n in self.nodes
            ],
            root=self.root,
        )


def build_finite_tree(
    rec: LinearRecurrence, j: int, budget: int = DEFAULT_NODE_BUDGET
) -> Tree:
    """The finite tree of height j (a single node when j == 0)."""
    if j < 0:
        raise ValueError(f"height must be nonnegative, got {j}")
    tree = Tree(recurrence=rec, kind="finite", height=j)
    _build_special(tree, rec, j, j, None, 0, budget)
    return tree


def _build_special(
    tree: Tree,
    rec: LinearRecurrence,
    m: int,
    i: int,
    parent: int | None,
    typ: int,
    budget: int,
) -> int:
    """Subtree of the height-m finite tree rooted at its level-i special node."""
    kind = LEAF if i == 0 else REGULAR
    idx = tree.add_node(kind, i, typ, parent, budget)
    if i > 0:
        c = rec.partial_sum(m - i + 1)
        _build_special(tree, rec, m, i - 1, idx, 0, budget)
        for ty in range(1, c):
            _build_copy(tree, rec, i - 1, idx, ty, budget)
    return idx


def _build_copy(
    tree: Tree,
    rec: LinearRecurrence,
    m: int,
    parent: int | None,
    typ: int,
    budget: int,
) -> int:
    """A full copy of the height-m finite tree."""
    return _build_special(tree, rec, m, m, parent, typ, budget)


def build_skeleton(
    rec: LinearRecurrence, t: int, budget: int = DEFAULT_NODE_BUDGET
) -> Tree:
    """Skeleton truncation containing levels 0..t below the t-th supernode."""
    if t < 1:
        raise ValueError(f"truncation height must be positive, got {t}")
    tree = Tree(recurrence=rec, kind="skeleton", height=t)
    _build_skeleton_level(tree, rec, t, None, budget)
    return tree


def _build_skeleton_level(
    tree: Tree, rec: LinearRecurrence, i: int, parent: int | None, budget: int
) -> int:
    if i == 0:
        return tree.add_node(LEAF, 0, 0, parent, budget)
    idx = tree.add_node(SUPERNODE, i, 0, parent, budget)
    _build_skeleton_level(tree, rec, i - 1, idx, budget)
    for ty in range(1, rec.total):
        _build_copy(tree, rec, i - 1, idx, ty, budget)
    return idx


def strip_leaves(tree: Tree) -> Tree:
    """Delete all level-0 nodes and reindex levels down by one.

    For finite trees this realizes leaf-recursivity (height j -> j-1); for
    skeletons the old first supernode becomes the new leftmost leaf.
    """
    if tree.height < 1:
        raise ValueError("cannot strip leaves from a single-node tree")
    out = Tree(recurrence=tree.recurrence, kind=tree.kind, height=tree.height - 1)
    mapping: dict[int, int] = {}
    for idx, node in enumerate(tree.nodes):
        if node.level == 0:
            continue
        new_level = node.level - 1
        if tree.kind == "skeleton":
            is_special = _is_special(tree, idx)
            if new_level == 0:
                kind = LEAF
            elif is_special:
                kind = SUPERNODE
            else:
                kind = REGULAR
        else:
            kind = LEAF if new_level == 0 else REGULAR
        parent = mapping[node.parent] if node.parent is not None else None
        new_idx = len(out.nodes)
        out.nodes.append(TreeNode(kind, new_level, node.type, parent))
        if parent is not None:
            out.nodes[parent].children.append(new_idx)
        mapping[idx] = new_idx
    return out


def _is_special(tree: Tree, idx: int) -> bool:
    node = tree.nodes[idx]
    while node.parent is not None:
        if node.type != 0:
            return False
        node = tree.nodes[node.parent]
    return node.type == 0


def canonical_shape(tree: Tree, idx: int | None = None) -> tuple:
    """Canonical serialization (kind, child shapes) for isomorphism tests."""
    if idx is None:
        idx = tree.root
    node = tree.nodes[idx]
    return (node.kind, tuple(canonical_shape(tree, c) for c in node.children))


# ---------------------------------------------------------------------------
# Leaf counting via preorder label simulation


def _tj_label_stream(rec: LinearRecurrence, m: int, i: int) -> Iterator[bool]:
    """is-leaf flags, in preorder, for the special subtree at level i of the
    height-m finite tree."""
    if i == 0:
        yield True
        return
    yield False
    yield from _tj_label_stream(rec, m, i - 1)
    for _ in range(rec.partial_sum(m - i + 1) - 1):
        yield from _tj_label_stream(rec, i - 1, i - 1)


def label_stream(rec: LinearRecurrence, s: int) -> Iterator[bool]:
    """is-leaf flag per label, in labeling order, for the shifted skeleton.

    The leftmost leaf takes label 1; then for i = 1, 2, ... the i-th
    supernode takes s labels followed by Lam-1 copies of the height-(i-1)
    finite tree, one label per node.
    """
    yield True
    i = 1
    while True:
        for _ in range(s):
            yield False
        for _ in range(rec.total - 1):
            yield from _tj_label_stream(rec, i - 1, i - 1)
        i += 1


def leaf_count_prefix(rec: LinearRecurrence, s: int, n_max: int) -> list[int]:
    """[L(1), ..., L(n_max)] by simulating the preorder labeling."""
    if s < 0:
        raise ValueError(f"shift must be nonnegative, got {s}")
    if n_max < 1:
        raise ValueError(f"n_max must be positive, got {n_max}")
    out: list[int] = []
    count = 0
    stream = label_stream(rec, s)
    for _ in range(n_max):
        if next(stream):
            count += 1
        out.append(count)
    return out


def leaf_count_oracle(rec: LinearRecurrence, s: int, n: int) -> int:
    """L(n): the number of leaves with labels at most n."""
    return leaf_count_prefix(rec, s, n)[-1]


# ---------------------------------------------------------------------------
# Closed-form subtree leaf counts


def subtree_leaf_count(
    rec: LinearRecurrence,
    j: int,
    t: int,
    cache: SequenceCache | None = None,
) -> int:
    """Leaf count of the subtree rooted at the t-th special node of the
    height-j finite tree:

        (a_{j+1} + (Lam_{j-t} - 1) a_t - sum_{i=1}^{j-t} lam_i a_{j+1-i})
        / (Lam - 1)

    The division is exact; a remainder indicates a bug.
    """
    if t < 0 or t > j:
        raise ValueError(f"need 0 <= t <= j, got t={t}, j={j}")
    if cache is None:
        cache = SequenceCache(rec)
    numer = cache.term(j + 1) + (rec.partial_sum(j - t) - 1) * cache.term(t)
    for i in range(1, j - t + 1):
        numer -= rec.coeff(i) * cache.term(j + 1 - i)
    q, r = divmod(numer, rec.total - 1)
    if r:
        raise ArithmeticError(
            f"subtree leaf count not divisible by {rec.total - 1}: "
            f"j={j}, t={t}, numerator={numer}"
        )
    return q


# ---------------------------------------------------------------------------
# Explicit labeling and pruning


@dataclass
class LabeledTree:
    """A skeleton truncation with labels 1..n placed in preorder."""

    tree: Tree
    shift: int
    n: int

    def label_count(self) -> int:
        return sum(len(node.labels) for node in self.tree.nodes)

    def leaf_label_count(self, bound: int | None = None) -> int:
        """Number of leaf labels, optionally only those <= bound."""
        total = 0
        for node in self.tree.nodes:
            if node.level != 0:
                continue
            for lab in node.labels:
                if bound is None or lab <= bound:
                    total += 1
        return total

    def canonical(self) -> tuple:
        def walk(idx: int) -> tuple:
            node = self.tree.nodes[idx]
            return (
                node.kind,
                tuple(node.labels),
                tuple(walk(c) for c in node.children),
            )

        return walk(self.tree.root)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LabeledTree):
            return NotImplemented
        return (
            self.shift == other.shift
            and self.n == other.n
            and self.canonical() == other.canonical()
        )


def labeling_order(tree: Tree) -> Iterator[int]:
    """Node indices in labeling (sub-skeleton) order."""
    if tree.kind != "skeleton":
        raise ValueError("labeling is defined on skeleton truncations")
    chain = tree.special_chain()

    def preorder(idx: int) -> Iterator[int]:
        yield idx
        for c in tree.nodes[idx].children:
            yield from preorder(c)

    yield chain[0]  # leftmost leaf
    for idx in chain[1:]:
        yield idx  # supernode
        for c in tree.nodes[idx].children[1:]:
            yield from preorder(c)


def label_skeleton(tree: Tree, s: int, n: int) -> LabeledTree:
    """Place labels 1..n on a copy of the truncation.

    Supernodes receive up to s labels (possibly fewer for the last-visited
    one), every other node exactly one.  Raises CapacityError if n exceeds
    the truncation's capacity.
    """
    if s < 0:
        raise ValueError(f"shift must be nonnegative, got {s}")
    if n < 1:
        raise ValueError(f"label count must be positive, got {n}")
    labeled = tree.clone()
    next_label = 1
    for idx in labeling_order(labeled):
        node = labeled.nodes[idx]
        want = s if node.kind == SUPERNODE else 1
        take = min(want, n - next_label + 1)
        node.labels = list(range(next_label, next_label + take))
        next_label += take
        if next_label > n:
            break
    if next_label <= n:
        raise CapacityError(
            f"truncation of height {tree.height} holds fewer than {n} labels"
        )
    return LabeledTree(tree=labeled, shift=s, n=n)


def skeleton_height_for(rec: LinearRecurrence, s: int, n: int) -> int:
    """Smallest truncation height whose labeling capacity is at least n."""
    capacity = 1  # leftmost leaf
    cache = SequenceCache(rec)
    nodes_in_tj = [1]  # node counts of finite trees by height
    t = 0
    while capacity < n:
        t += 1
        if t - 1 >= len(nodes_in_tj):
            raise AssertionError("node count table out of sync")
        capacity += s + (rec.total - 1) * nodes_in_tj[t - 1]
        # nodes(T_t) = leaves(T_t) + nodes(T_{t-1}) by leaf-recursivity
        leaves_tt = subtree_leaf_count(rec, t, t, cache)
        nodes_in_tj.append(leaves_tt + nodes_in_tj[t - 1])
    return max(t, 1)


def prune(lt: LabeledTree) -> LabeledTree:
    """One pruning step: T(n) -> T(n') with n' = n - s - L(n-1).

    Deletes leaf labels below n and the first supernode's labels, lifts
    label n to the first supernode, then drops level 0 (the old first
    supernode becomes the new leftmost leaf) and relabels in preorder.
    """
    n, s = lt.n, lt.shift
    deleted = lt.leaf_label_count(bound=n - 1)
    n_prime = n - s - deleted
    if n_prime < 1:
        raise CapacityError(
            f"pruning T({n}) with shift {s} leaves {n_prime} labels"
        )
    stripped = strip_leaves(lt.tree)
    return label_skeleton(stripped, s, n_prime)


# ---------------------------------------------------------------------------
# Rendering and serialization


def render_tree(tree: Tree, labeled: LabeledTree | None = None) -> str:
    """Indented text rendering: leaves as (..), regular nodes as O,
    supernodes as [..], label lists inside the brackets."""
    src = labeled.tree if labeled is not None else tree
    lines: list[str] = []

    def fmt(node: TreeNode) -> str:
        inner = ",".join(str(x) for x in node.labels)
        if node.kind == LEAF:
            return f"({inner})"
        if node.kind == SUPERNODE:
            return f"[{inner}]"
        return f"O{inner and '(' + inner + ')'}"

    def walk(idx: int, depth: int) -> None:
        node = src.nodes[idx]
        lines.append("  " * depth + fmt(node))
        for c in node.children:
            walk(c, depth + 1)

    walk(src.root, 0)
    return "\n".join(lines)


def to_nested_list(tree: Tree, idx: int | None = None) -> list:
    """Machine-readable nested-list form: [kind, labels, children...]."""
    if idx is None:
        idx = tree.root
    node = tree.nodes[idx]
    return [node.kind, list(node.labels)] + [
        to_nested_list(tree, c) for c in node.children
    ]

"""Rooted trees, their two-variable polynomials, and counting oracles.

Trees are unordered: children are kept sorted by a canonical parenthesis
encoding, so isomorphic inputs collapse to identical objects.  Vertices are
addressed by canonical depth-first preorder indices (the root is 0), which
makes antichain output stable across runs.

Two independent routes compute the same polynomial: `tree_poly` uses the
branch-product recursion (with `tree_poly_dc` as a deletion-contraction
variant), while `antichain_expansion_tree` sums one monomial per maximal
antichain found by exhaustive subset enumeration.
"""

from __future__ import annotations

import itertools
from collections import defaultdict
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

from . import bruteforce
from .errors import OracleBoundError, ParseError
from .polynomial import BivariatePoly, X, poly_product

GENERATION_BOUND = 12


class RootedTree:
    """An unlabeled rooted tree; ``children`` is the multiset of branches."""

    __slots__ = ("children", "size", "leaf_count", "encoding")

    def __init__(self, children: Iterable["RootedTree"] = ()):
        kids = tuple(sorted(children, key=lambda c: c.encoding))
        self.children = kids
        self.size = 1 + sum(c.size for c in kids)
        self.leaf_count = sum(c.leaf_count for c in kids) if kids else 1
        self.encoding = "(" + "".join(c.encoding for c in kids) + ")"

    def __eq__(self, other) -> bool:
        if not isinstance(other, RootedTree):
            return NotImplemented
        return self.encoding == other.encoding

    def __hash__(self) -> int:
        return hash(self.encoding)

    def __repr__(self) -> str:
        return f"RootedTree({self.encoding!r})"


def parse_tree(text: str) -> RootedTree:
    """Parse the parenthesis language  tree ::= "(" tree* ")"  (whitespace ignored)."""
    root: RootedTree | None = None
    stack: list[list[RootedTree]] = []
    for pos, ch in enumerate(text):
        if ch.isspace():
            continue
        if ch == "(":
            if root is not None:
                raise ParseError(f"position {pos}: trailing input after a complete tree")
            stack.append([])
        elif ch == ")":
            if not stack:
                raise ParseError(f"position {pos}: unmatched ')'")
            node = RootedTree(stack.pop())
            if stack:
                stack[-1].append(node)
            else:
                root = node
        else:
            raise ParseError(f"position {pos}: unexpected character {ch!r}")
    if stack:
        raise ParseError(f"position {len(text)}: unbalanced '(' at end of input")
    if root is None:
        raise ParseError("empty input: expected a tree such as '()'")
    return root


def star(n: int) -> RootedTree:
    """Star on n vertices rooted at the centre."""
    if n < 1:
        raise ValueError("a tree needs at least one vertex")
    return RootedTree([RootedTree() for _ in range(n - 1)])


def path(n: int) -> RootedTree:
    """Path on n vertices rooted at one endpoint."""
    if n < 1:
        raise ValueError("a tree needs at least one vertex")
    t = RootedTree()
    for _ in range(n - 1):
        t = RootedTree([t])
    return t


# ----------------------------------------------------------------------
# root-edge surgery

def contract_root_edge(t: RootedTree, index: int) -> RootedTree:
    """Merge the root of branch ``index`` into the root of ``t``."""
    branch = t.children[index]
    rest = t.children[:index] + t.children[index + 1 :]
    return RootedTree(rest + branch.children)


def delete_root_branch(t: RootedTree, index: int) -> RootedTree:
    """Remove branch ``index`` entirely."""
    return RootedTree(t.children[:index] + t.children[index + 1 :])


# ----------------------------------------------------------------------
# the polynomial

@lru_cache(maxsize=None)
def tree_poly(t: RootedTree) -> BivariatePoly:
    """x for a single vertex, else the branch product plus y**(size - 1)."""
    if t.size == 1:
        return X
    product = poly_product(tree_poly(c) for c in t.children)
    return product + BivariatePoly.monomial(1, 0, t.size - 1)


@lru_cache(maxsize=None)
def tree_poly_dc(t: RootedTree) -> BivariatePoly:
    """Same polynomial via deletion-contraction on the first root edge.

    The bridge case (single root edge) is checked before the pendant case;
    the pendant rewrite needs a second branch to be valid.
    """
    if t.size == 1:
        return X
    branch = t.children[0]
    contracted = tree_poly_dc(contract_root_edge(t, 0))
    top = BivariatePoly.monomial(1, 0, t.size - 1)
    if len(t.children) == 1:
        return contracted + top
    if branch.size == 1:
        return X * contracted - BivariatePoly.monomial(1, 1, t.size - 2) + top
    deleted = tree_poly_dc(delete_root_branch(t, 0))
    return (
        contracted
        + BivariatePoly.monomial(1, 0, branch.size - 1) * deleted
        - BivariatePoly.monomial(2, 0, t.size - 2)
        + top
    )


# ----------------------------------------------------------------------
# vertex layout (canonical DFS indices)

@dataclass(frozen=True)
class TreeLayout:
    """Per-vertex tables in canonical preorder; index 0 is the root."""

    parent: tuple[int, ...]              # -1 for the root
    subtree_size: tuple[int, ...]
    is_leaf: tuple[bool, ...]
    ancestor_mask: tuple[int, ...]       # strict ancestors as a bitmask
    comparable_pairs: tuple[tuple[int, int], ...]
    leaf_paths: tuple[tuple[int, ...], ...]


@lru_cache(maxsize=None)
def tree_layout(t: RootedTree) -> TreeLayout:
    n = t.size
    parent = [-1] * n
    size = [1] * n
    leaf = [False] * n
    anc = [0] * n
    stack: list[tuple[RootedTree, int]] = [(t, -1)]
    idx = 0
    while stack:
        node, par = stack.pop()
        v = idx
        idx += 1
        parent[v] = par
        size[v] = node.size
        leaf[v] = node.size == 1
        anc[v] = 0 if par < 0 else anc[par] | (1 << par)
        for child in reversed(node.children):
            stack.append((child, v))
    pairs = []
    for v in range(n):
        mask = anc[v]
        while mask:
            low = mask & -mask
            pairs.append((low.bit_length() - 1, v))
            mask ^= low
    paths = []
    for v in range(n):
        if leaf[v]:
            chain = [v]
            while parent[chain[-1]] >= 0:
                chain.append(parent[chain[-1]])
            paths.append(tuple(reversed(chain)))
    return TreeLayout(
        parent=tuple(parent),
        subtree_size=tuple(size),
        is_leaf=tuple(leaf),
        ancestor_mask=tuple(anc),
        comparable_pairs=tuple(pairs),
        leaf_paths=tuple(paths),
    )


# ----------------------------------------------------------------------
# maximal antichains

@dataclass(frozen=True)
class TreeAntichain:
    """A maximal antichain with its leaf count and number of vertices below it."""

    vertices: frozenset[int]
    leaf_count: int
    below_count: int


def _max_antichain_sets(t: RootedTree) -> list[frozenset[int]]:
    # A maximal antichain is a union of maximal antichains, one per branch,
    # or the root alone.
    if t.size == 1:
        return [frozenset({0})]
    shifted: list[list[frozenset[int]]] = []
    offset = 1
    for child in t.children:
        child_sets = _max_antichain_sets(child)
        shifted.append([frozenset(v + offset for v in s) for s in child_sets])
        offset += child.size
    out = [frozenset().union(*combo) for combo in itertools.product(*shifted)]
    out.append(frozenset({0}))
    return out


def maximal_antichains_tree(t: RootedTree) -> list[TreeAntichain]:
    """All maximal antichains, each exactly once, as canonical index sets."""
    lay = tree_layout(t)
    result = []
    for s in _max_antichain_sets(t):
        result.append(
            TreeAntichain(
                vertices=s,
                leaf_count=sum(1 for v in s if lay.is_leaf[v]),
                below_count=sum(lay.subtree_size[v] - 1 for v in s),
            )
        )
    return result


def antichain_expansion_tree(t: RootedTree) -> BivariatePoly:
    """Sum x**leaves(A) * y**below(A) over maximal antichains A.

    Works by exhaustive subset enumeration, independently of the recursion
    in `tree_poly`, so the two routes can be checked against each other.
    """
    bruteforce.check_subset_bound(t.size, "tree")
    lay = tree_layout(t)
    flags = bruteforce.maximal_antichain_flags(t.size, lay.comparable_pairs)
    leaves = [1 if f else 0 for f in lay.is_leaf]
    below = [s - 1 for s in lay.subtree_size]
    counts = bruteforce.weighted_pair_counts(t.size, flags, leaves, below)
    terms = {(int(l), int(s)): int(c) for (l, s), c in counts.items()}
    return BivariatePoly(terms)


# ----------------------------------------------------------------------
# brute-force counting oracles

def count_antichains_tree(t: RootedTree) -> int:
    """Number of antichains, including the empty one, by subset enumeration."""
    bruteforce.check_subset_bound(t.size, "tree")
    lay = tree_layout(t)
    return int(bruteforce.antichain_flags(t.size, lay.comparable_pairs).sum())


def count_maximal_antichains_tree(t: RootedTree, leaf_free: bool = False) -> int:
    """Number of maximal antichains (optionally only those avoiding leaves)."""
    bruteforce.check_subset_bound(t.size, "tree")
    lay = tree_layout(t)
    flags = bruteforce.maximal_antichain_flags(t.size, lay.comparable_pairs)
    if leaf_free:
        leaves = [v for v in range(t.size) if lay.is_leaf[v]]
        flags = flags & ~bruteforce.member_flags(t.size, leaves)
    return int(flags.sum())


def count_cutsets_tree(t: RootedTree) -> int:
    """Number of vertex sets meeting every root-to-leaf path."""
    bruteforce.check_subset_bound(t.size, "tree")
    lay = tree_layout(t)
    return int(bruteforce.hitting_flags(t.size, lay.leaf_paths).sum())


def count_root_subtrees(t: RootedTree) -> int:
    """Number of subtrees containing the root, counting the empty subtree.

    A nonempty rooted subtree is a vertex set containing the root and closed
    under taking parents; the empty set contributes the extra 1 (it pairs
    with the empty antichain in the antichain/subtree correspondence).
    """
    bruteforce.check_subset_bound(t.size, "tree")
    lay = tree_layout(t)
    bits = bruteforce.subset_bits(t.size)
    good = bits[:, 0].copy()
    for v in range(1, t.size):
        good &= ~bits[:, v] | bits[:, lay.parent[v]]
    return int(good.sum()) + 1


# ----------------------------------------------------------------------
# exhaustive generation

@lru_cache(maxsize=None)
def _trees_of_size(n: int) -> tuple[RootedTree, ...]:
    if n == 1:
        return (RootedTree(),)
    return tuple(RootedTree(forest) for forest in _forests(n - 1, n - 1, None))


def _forests(total: int, size_cap: int, index_cap: int | None) -> Iterator[tuple[RootedTree, ...]]:
    # Multisets of trees with sizes summing to `total`, emitted as sequences
    # that are nonincreasing in (size, index); each multiset appears once.
    if total == 0:
        yield ()
        return
    for s in range(min(total, size_cap), 0, -1):
        pool = _trees_of_size(s)
        start = index_cap if (s == size_cap and index_cap is not None) else len(pool) - 1
        for i in range(start, -1, -1):
            for rest in _forests(total - s, s, i):
                yield (pool[i],) + rest


def enumerate_rooted_trees(n: int) -> list[RootedTree]:
    """All unlabeled rooted trees on n vertices, one per isomorphism class."""
    if n < 1:
        raise ValueError("trees have at least one vertex")
    if n > GENERATION_BOUND:
        raise OracleBoundError(
            f"exhaustive tree generation is bounded at {GENERATION_BOUND} vertices"
        )
    return list(_trees_of_size(n))


# ----------------------------------------------------------------------
# polynomial collision search

@dataclass
class CollisionReport:
    """Outcome of comparing polynomials across all trees up to a size bound."""

    n_max: int
    tree_count: int
    full_pairs: list[tuple[RootedTree, RootedTree]]
    collisions_at_y1: list[tuple[BivariatePoly, list[RootedTree]]]
    collisions_at_x1: list[tuple[BivariatePoly, list[RootedTree]]]


def collision_search(n_max: int) -> CollisionReport:
    """Find non-isomorphic trees sharing a polynomial, up to n_max vertices.

    Full two-variable collisions are reported as pairs; the single-variable
    specialisations at y=1 and at x=1 are reported as groups of trees that
    share the specialised polynomial.
    """
    if n_max < 1:
        raise ValueError("n_max must be positive")
    if n_max > GENERATION_BOUND:
        raise OracleBoundError(
            f"collision search is bounded at {GENERATION_BOUND} vertices"
        )
    trees: list[RootedTree] = []
    for n in range(1, n_max + 1):
        trees.extend(_trees_of_size(n))
    by_full: dict[BivariatePoly, list[RootedTree]] = defaultdict(list)
    by_y1: dict[BivariatePoly, list[RootedTree]] = defaultdict(list)
    by_x1: dict[BivariatePoly, list[RootedTree]] = defaultdict(list)
    for t in trees:
        p = tree_poly(t)
        by_full[p].append(t)
        by_y1[p.specialize(y=1)].append(t)
        by_x1[p.specialize(x=1)].append(t)

    def tree_key(t: RootedTree):
        return (t.size, t.encoding)

    full_pairs = []
    for group in by_full.values():
        group.sort(key=tree_key)
        full_pairs.extend(itertools.combinations(group, 2))

    def groups(table) -> list[tuple[BivariatePoly, list[RootedTree]]]:
        kept = [
            (p, sorted(g, key=tree_key)) for p, g in table.items() if len(g) >= 2
        ]
        kept.sort(key=lambda item: (item[1][0].size, str(item[0])))
        return kept

    return CollisionReport(
        n_max=n_max,
        tree_count=len(trees),
        full_pairs=sorted(full_pairs, key=lambda ab: (tree_key(ab[0]), tree_key(ab[1]))),
        collisions_at_y1=groups(by_y1),
        collisions_at_x1=groups(by_x1),
    )

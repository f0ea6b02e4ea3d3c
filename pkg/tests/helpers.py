"""Shared fixtures: the worked examples used across the test modules."""

from __future__ import annotations

from vposets import BivariatePoly, Poset

# Six-vertex example tree: root with a two-leaf branch and a one-leaf branch.
FIGURE_TREE_TEXT = "((()())(()))"
FIGURE_TREE_POLY = BivariatePoly(
    {(3, 0): 1, (2, 1): 1, (1, 2): 1, (0, 3): 1, (0, 5): 1}
)

# Ten-element example V-poset (1-indexed relations, u < v per line).
FIGURE_POSET_TEXT = "10\n2 1\n3 2\n4 2\n5 3\n6 4\n7 5\n7 6\n8 1\n7 8\n9 1\n10 9\n"
FIGURE_POSET_POLY = BivariatePoly(
    {
        (0, 9): 1,
        (0, 7): 1,
        (1, 6): 1,
        (1, 5): 1,
        (2, 4): 1,
        (1, 3): 1,
        (2, 2): 3,
        (3, 1): 3,
        (4, 0): 1,
    }
)
FIGURE_POSET_STR = (
    "y^9 + y^7 + x*y^6 + x*y^5 + x^2*y^4 + x*y^3 + 3*x^2*y^2 + 3*x^3*y + x^4"
)

# The thirteen maximal antichains of the example poset, 0-indexed.
FIGURE_POSET_MAX_ANTICHAINS = [
    {0},
    {6, 8},
    {6, 9},
    {1, 7, 8},
    {1, 7, 9},
    {2, 3, 7, 8},
    {2, 3, 7, 9},
    {2, 5, 7, 8},
    {2, 5, 7, 9},
    {4, 3, 7, 8},
    {4, 3, 7, 9},
    {4, 5, 7, 8},
    {4, 5, 7, 9},
]

# Four-element forbidden posets: u=0, v=1, w=2, x=3.
N_POSET = Poset.from_covers(4, [(2, 0), (3, 0), (3, 1)])
BOWTIE_POSET = Poset.from_covers(4, [(2, 0), (3, 0), (2, 1), (3, 1)])

# Pairs of non-isomorphic trees with matching single-variable polynomials.
T1_TEXT = "(((())(())(())))"
T2_TEXT = "(((()))((())()))"
T3_TEXT = "((((())))())"
T4_TEXT = FIGURE_TREE_TEXT

T1_POLY = BivariatePoly({(0, 7): 1, (0, 6): 1, (0, 3): 1, (1, 2): 3, (2, 1): 3, (3, 0): 1})
T2_POLY = BivariatePoly(
    {(0, 7): 1, (0, 5): 1, (0, 4): 1, (1, 3): 2, (2, 2): 1, (1, 2): 1, (2, 1): 2, (3, 0): 1}
)
T3_POLY = BivariatePoly({(0, 5): 1, (1, 3): 1, (1, 2): 1, (1, 1): 1, (2, 0): 1})

SHARED_Y1 = BivariatePoly({(3, 0): 1, (2, 0): 3, (1, 0): 3, (0, 0): 3})
SHARED_X1 = BivariatePoly({(0, 5): 1, (0, 3): 1, (0, 2): 1, (0, 1): 1, (0, 0): 1})


def rooted_tree_count(n: int) -> int:
    """Independent count of unlabeled rooted trees via the divisor recurrence."""
    counts = [0, 1]
    for m in range(2, n + 1):
        total = 0
        for k in range(1, m):
            divisor_sum = sum(d * counts[d] for d in range(1, k + 1) if k % d == 0)
            total += divisor_sum * counts[m - k]
        counts.append(total // (m - 1))
    return counts[n]


def assert_status_preserved(trace):
    """Replay a build trace, checking element statuses survive each step.

    Adding a greatest or least element must keep the basic/upper/lower
    classification of the existing elements and add a non-basic element,
    except that adding a least element to a linear order moves the basic
    status to the new element, and the element added to the empty poset is
    basic.
    """
    from vposets import element_status, replay_trace
    from vposets.posets import AddLeast, BASIC, DisjointUnion, Empty

    if isinstance(trace, Empty):
        return
    if isinstance(trace, DisjointUnion):
        parts = [replay_trace(part) for part in trace.parts]
        whole = Poset.disjoint_union(parts)
        combined = [s for part in parts for s in element_status(part)]
        assert element_status(whole) == combined
        for part in trace.parts:
            assert_status_preserved(part)
        return
    inner = replay_trace(trace.inner)
    outer = replay_trace(trace)
    status_in = element_status(inner)
    status_out = element_status(outer)
    if inner.n == 0:
        assert status_out == [BASIC]
    else:
        linear = inner.relation_count == inner.n * (inner.n - 1) // 2
        if not (isinstance(trace, AddLeast) and linear):
            assert status_out[: inner.n] == status_in
            assert status_out[inner.n] != BASIC
    assert_status_preserved(trace.inner)

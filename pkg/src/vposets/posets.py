"""Finite posets, V-poset recognition, basic elements, and poset polynomials.

A V-poset is any poset obtainable from the empty poset by disjoint unions
and by adding a new greatest or least element; equivalently, any poset with
no induced N pattern and no induced bowtie.  Both characterisations are
implemented: `decompose` builds a construction certificate, `find_forbidden`
hunts for a witness quadruple, and `is_v_poset` returns whichever applies.

Conventions:
  - Elements are 0..n-1.  The strict order is stored as transitively closed
    bitmask rows: bit v of ``up_mask(u)`` means u < v.
  - Every constructor validates irreflexivity, antisymmetry and
    transitivity, so each instance is a genuine poset.
  - Instances are immutable; equality and hashing are by labeled relation.
    Use `poset_isomorphic` for equality up to relabeling.
"""

from __future__ import annotations

import itertools
from collections import defaultdict
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from . import bruteforce
from .errors import NotVPosetError, OracleBoundError, ParseError
from .polynomial import BivariatePoly, X, poly_product
from .trees import RootedTree, tree_layout

ISOMORPHISM_BOUND = 8
LABELED_BOUND = 5

BASIC = "basic"
UPPER = "upper"
LOWER = "lower"
OTHER = "other"


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Poset:
    __slots__ = ("n", "_up", "_down", "_comp")

    def __init__(self, n: int, up_masks: Sequence[int]):
        up = tuple(up_masks)
        if len(up) != n:
            raise ValueError(f"expected {n} relation rows, got {len(up)}")
        full = (1 << n) - 1
        down = [0] * n
        for u in range(n):
            row = up[u]
            if row & ~full:
                raise ValueError("relation references elements out of range")
            if (row >> u) & 1:
                raise ValueError(f"element {u} lies below itself")
            for v in _bits(row):
                if (up[v] >> u) & 1:
                    raise ValueError(f"relation is not antisymmetric at ({u}, {v})")
                if up[v] & ~row:
                    raise ValueError(f"relation is not transitive at ({u}, {v})")
                down[v] |= 1 << u
        self.n = n
        self._up = up
        self._down = tuple(down)
        self._comp = tuple(u | d for u, d in zip(up, down))

    # ------------------------------------------------------------------
    # constructors

    @classmethod
    def empty(cls) -> Poset:
        return cls(0, ())

    @classmethod
    def from_covers(cls, n: int, covers: Iterable[tuple[int, int]]) -> Poset:
        """Build from (u, v) pairs meaning u < v; the closure is computed."""
        rows = [0] * n
        for u, v in covers:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"relation ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-relation on element {u}")
            rows[u] |= 1 << v
        for k in range(n):
            bit = 1 << k
            for u in range(n):
                if rows[u] & bit:
                    rows[u] |= rows[k]
        for u in range(n):
            if (rows[u] >> u) & 1:
                raise ValueError(f"the relations contain a cycle through element {u}")
        return cls(n, rows)

    @classmethod
    def disjoint_union(cls, posets: Iterable["Poset"]) -> Poset:
        rows: list[int] = []
        offset = 0
        for p in posets:
            rows.extend(r << offset for r in p._up)
            offset += p.n
        return cls(offset, rows)

    # ------------------------------------------------------------------
    # relation queries

    def up_mask(self, u: int) -> int:
        return self._up[u]

    def down_mask(self, u: int) -> int:
        return self._down[u]

    def comp_mask(self, u: int) -> int:
        return self._comp[u]

    def less(self, u: int, v: int) -> bool:
        return bool((self._up[u] >> v) & 1)

    def comparable(self, u: int, v: int) -> bool:
        return bool((self._comp[u] >> v) & 1)

    @property
    def relation_count(self) -> int:
        return sum(r.bit_count() for r in self._up)

    def relation_pairs(self) -> list[tuple[int, int]]:
        """All (u, v) with u < v, each comparable pair exactly once."""
        return [(u, v) for u in range(self.n) for v in _bits(self._up[u])]

    def covers(self) -> list[tuple[int, int]]:
        """All (u, v) where v covers u (u < v with nothing in between)."""
        out = []
        for u in range(self.n):
            for v in _bits(self._up[u]):
                if not (self._up[u] & self._down[v]):
                    out.append((u, v))
        return out

    def greatest_element(self) -> int | None:
        full = (1 << self.n) - 1
        for u in range(self.n):
            if self._down[u] == full ^ (1 << u):
                return u
        return None

    def least_element(self) -> int | None:
        full = (1 << self.n) - 1
        for u in range(self.n):
            if self._up[u] == full ^ (1 << u):
                return u
        return None

    def components(self) -> list[tuple[int, ...]]:
        """Connected components of the comparability graph, by least element."""
        seen = 0
        out = []
        for s in range(self.n):
            if (seen >> s) & 1:
                continue
            comp = 0
            frontier = 1 << s
            while frontier:
                comp |= frontier
                grown = 0
                for v in _bits(frontier):
                    grown |= self._comp[v]
                frontier = grown & ~comp
            seen |= comp
            out.append(tuple(_bits(comp)))
        return out

    # ------------------------------------------------------------------
    # derived posets

    def induced(self, elements: Sequence[int]) -> Poset:
        elems = tuple(elements)
        pos = {e: i for i, e in enumerate(elems)}
        rows = []
        for e in elems:
            r = 0
            for f in _bits(self._up[e]):
                if f in pos:
                    r |= 1 << pos[f]
            rows.append(r)
        return Poset(len(elems), rows)

    def delete_element(self, u: int) -> Poset:
        return self.induced([v for v in range(self.n) if v != u])

    def add_greatest(self) -> Poset:
        n = self.n
        return Poset(n + 1, [r | (1 << n) for r in self._up] + [0])

    def add_least(self) -> Poset:
        n = self.n
        return Poset(n + 1, list(self._up) + [(1 << n) - 1])

    def dual(self) -> Poset:
        """The same ground set with the order reversed."""
        return Poset(self.n, self._down)

    # ------------------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, Poset):
            return NotImplemented
        return self.n == other.n and self._up == other._up

    def __hash__(self) -> int:
        return hash((self.n, self._up))

    def __repr__(self) -> str:
        return f"Poset(n={self.n}, covers={self.covers()!r})"


def parse_poset(text: str) -> Poset:
    """Parse "n" on the first line, then "u v" relation lines (1-indexed, u < v)."""
    lines = text.splitlines()
    entries: list[tuple[int, str]] = [
        (no, line.strip()) for no, line in enumerate(lines, start=1) if line.strip()
    ]
    if not entries:
        raise ParseError("empty input: expected an element count on the first line")
    first_no, first = entries[0]
    try:
        n = int(first)
    except ValueError:
        raise ParseError(f"line {first_no}: expected an element count, got {first!r}") from None
    if n < 0:
        raise ParseError(f"line {first_no}: element count must be nonnegative")
    covers = []
    for no, line in entries[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"line {no}: expected 'u v', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"line {no}: expected two integers, got {line!r}") from None
        if not (1 <= u <= n and 1 <= v <= n):
            raise ParseError(f"line {no}: element index out of range 1..{n}")
        if u == v:
            raise ParseError(f"line {no}: self-relation on element {u}")
        covers.append((u - 1, v - 1))
    try:
        return Poset.from_covers(n, covers)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


# ----------------------------------------------------------------------
# construction certificates

class BuildTrace:
    """Recipe that rebuilds a poset: union / add-greatest / add-least steps."""

    __slots__ = ()

    @property
    def size(self) -> int:
        raise NotImplementedError

    def to_sexpr(self) -> str:
        raise NotImplementedError


@dataclass(frozen=True)
class Empty(BuildTrace):
    @property
    def size(self) -> int:
        return 0

    def to_sexpr(self) -> str:
        return "empty"


@dataclass(frozen=True)
class AddGreatest(BuildTrace):
    inner: BuildTrace

    @property
    def size(self) -> int:
        return self.inner.size + 1

    def to_sexpr(self) -> str:
        return f"(g {self.inner.to_sexpr()})"


@dataclass(frozen=True)
class AddLeast(BuildTrace):
    inner: BuildTrace

    @property
    def size(self) -> int:
        return self.inner.size + 1

    def to_sexpr(self) -> str:
        return f"(l {self.inner.to_sexpr()})"


@dataclass(frozen=True)
class DisjointUnion(BuildTrace):
    parts: tuple[BuildTrace, ...]

    @property
    def size(self) -> int:
        return sum(p.size for p in self.parts)

    def to_sexpr(self) -> str:
        return "(union " + " ".join(p.to_sexpr() for p in self.parts) + ")"


def replay_trace(trace: BuildTrace) -> Poset:
    """Rebuild the poset a trace describes; new elements get the next index."""
    if isinstance(trace, Empty):
        return Poset.empty()
    if isinstance(trace, AddGreatest):
        return replay_trace(trace.inner).add_greatest()
    if isinstance(trace, AddLeast):
        return replay_trace(trace.inner).add_least()
    if isinstance(trace, DisjointUnion):
        return Poset.disjoint_union(replay_trace(p) for p in trace.parts)
    raise TypeError(f"not a trace node: {trace!r}")


@dataclass(frozen=True)
class ForbiddenPattern:
    """Witness quadruple with u > w, u > x, v > x, u || v and w || x.

    ``kind`` is "bowtie" when additionally v > w, else "N".
    """

    u: int
    v: int
    w: int
    x: int
    kind: str


def find_forbidden(p: Poset) -> ForbiddenPattern | None:
    """Scan all quadruples for an induced N or bowtie; None when clean."""
    n = p.n
    for u in range(n):
        du = p.down_mask(u)
        if not du:
            continue
        for v in range(n):
            if v == u or p.comparable(u, v):
                continue
            common = du & p.down_mask(v)
            if not common:
                continue
            for x in _bits(common):
                for w in _bits(du & ~(1 << x)):
                    if not p.comparable(w, x):
                        kind = "bowtie" if p.less(w, v) else "N"
                        return ForbiddenPattern(u=u, v=v, w=w, x=x, kind=kind)
    return None


def decompose(p: Poset) -> BuildTrace | None:
    """Constructive recognition: peel greatest/least elements per component.

    When a component has both a greatest and a least element the greatest is
    removed first, so linear orders are always built by AddGreatest alone.
    """
    if p.n == 0:
        return Empty()
    traces = []
    for elems in p.components():
        sub = p.induced(elems)
        g = sub.greatest_element()
        if g is not None:
            inner = decompose(sub.delete_element(g))
            if inner is None:
                return None
            traces.append(AddGreatest(inner))
            continue
        l = sub.least_element()
        if l is None:
            return None
        inner = decompose(sub.delete_element(l))
        if inner is None:
            return None
        traces.append(AddLeast(inner))
    if len(traces) == 1:
        return traces[0]
    return DisjointUnion(tuple(traces))


def is_v_poset(p: Poset) -> BuildTrace | ForbiddenPattern:
    """Exactly one certificate: a construction trace or a forbidden pattern."""
    trace = decompose(p)
    if trace is not None:
        return trace
    pattern = find_forbidden(p)
    if pattern is None:
        raise RuntimeError("recognisers disagree: no trace and no forbidden pattern")
    return pattern


# ----------------------------------------------------------------------
# basic elements and region sets

def _mask_is_chain(p: Poset, mask: int) -> bool:
    for v in _bits(mask):
        if mask & ~(1 << v) & ~p.comp_mask(v):
            return False
    return True


def _is_basic(p: Poset, x: int) -> bool:
    up = p.up_mask(x)
    down = p.down_mask(x)
    # B.1 and B.2: nothing incomparable strictly below, or strictly above.
    if not _mask_is_chain(p, down) or not _mask_is_chain(p, up):
        return False
    # B.3: no u < x whose comparabilities agree with x everywhere else.
    for u in _bits(down):
        ignore = ~((1 << u) | (1 << x))
        if (p.down_mask(u) & ignore) == (down & ignore) and (
            p.up_mask(u) & ignore
        ) == (up & ignore):
            return False
    return True


def element_status(p: Poset) -> list[str]:
    """Classify each element as basic, upper, lower, or other.

    The classification evaluates the basic-element axioms literally, so it
    runs on any poset; on a V-poset every element is basic, upper or lower.
    """
    basic = [_is_basic(p, x) for x in range(p.n)]
    status = []
    for x in range(p.n):
        if basic[x]:
            status.append(BASIC)
        elif any(basic[b] for b in _bits(p.down_mask(x))):
            status.append(UPPER)
        elif any(basic[b] for b in _bits(p.up_mask(x))):
            status.append(LOWER)
        else:
            status.append(OTHER)
    return status


def _region_sets(p: Poset, status: list[str]) -> list[frozenset[int] | None]:
    n = p.n
    full = (1 << n) - 1
    incomp = [full & ~(p.comp_mask(v) | (1 << v)) for v in range(n)]
    basic_mask = 0
    for v in range(n):
        if status[v] == BASIC:
            basic_mask |= 1 << v
    assoc = [p.comp_mask(v) & basic_mask for v in range(n)]
    regions: list[frozenset[int] | None] = [None] * n
    for a in range(n):
        st = status[a]
        if st == BASIC:
            regions[a] = frozenset()
        elif st == LOWER:
            regions[a] = frozenset(
                b for b in _bits(p.up_mask(a)) if not (p.down_mask(b) & incomp[a])
            )
        elif st == UPPER:
            keep = {
                b for b in _bits(p.down_mask(a)) if not (p.up_mask(b) & incomp[a])
            }
            keep -= {
                l for l in range(n) if status[l] == LOWER and assoc[l] == assoc[a]
            }
            regions[a] = frozenset(keep)
    return regions


def region_set(p: Poset, a: int) -> frozenset[int]:
    """The element set whose size weighs ``a`` in the antichain expansion.

    Empty for a basic element; for a lower element, the elements above it
    with no incomparable element below them; for an upper element the dual,
    minus lower elements associated to the same basic set.
    """
    if not (0 <= a < p.n):
        raise ValueError(f"element index {a} out of range 0..{p.n - 1}")
    status = element_status(p)
    region = _region_sets(p, status)[a]
    if region is None:
        raise ValueError(
            f"element {a} is neither basic nor upper nor lower; "
            "its region set is undefined"
        )
    return region


# ----------------------------------------------------------------------
# antichains, cutsets, and the polynomial

def maximal_antichains_poset(p: Poset) -> list[frozenset[int]]:
    """All maximal antichains, each once, by subset enumeration."""
    bruteforce.check_subset_bound(p.n, "poset")
    flags = bruteforce.maximal_antichain_flags(p.n, p.relation_pairs())
    return [frozenset(_bits(code)) for code in bruteforce.flagged_subsets(flags)]


def maximal_chains(p: Poset) -> list[tuple[int, ...]]:
    """All maximal chains, as cover paths from a minimal to a maximal element."""
    if p.n == 0:
        return []
    above: list[list[int]] = [[] for _ in range(p.n)]
    for u, v in p.covers():
        above[u].append(v)
    chains: list[tuple[int, ...]] = []

    def extend(path: list[int]) -> None:
        tip = path[-1]
        if not above[tip]:
            chains.append(tuple(path))
            return
        for nxt in above[tip]:
            path.append(nxt)
            extend(path)
            path.pop()

    for start in range(p.n):
        if not p.down_mask(start):
            extend([start])
    return chains


def _require_v(p: Poset) -> None:
    pattern = find_forbidden(p)
    if pattern is not None:
        raise NotVPosetError(pattern)


def antichain_expansion_poset(p: Poset) -> BivariatePoly:
    """Sum x**basic(A) * y**weight(A) over maximal antichains of a V-poset."""
    _require_v(p)
    bruteforce.check_subset_bound(p.n, "poset")
    status = element_status(p)
    regions = _region_sets(p, status)
    basic_vec = [1 if st == BASIC else 0 for st in status]
    weight_vec = [len(r) if r is not None else 0 for r in regions]
    flags = bruteforce.maximal_antichain_flags(p.n, p.relation_pairs())
    counts = bruteforce.weighted_pair_counts(p.n, flags, basic_vec, weight_vec)
    return BivariatePoly({(int(b), int(s)): int(c) for (b, s), c in counts.items()})


def _trace_poly(trace: BuildTrace) -> BivariatePoly:
    if isinstance(trace, Empty):
        return BivariatePoly.one()
    if isinstance(trace, DisjointUnion):
        return poly_product(_trace_poly(part) for part in trace.parts)
    inner = trace.inner
    if isinstance(inner, Empty):
        return X
    return _trace_poly(inner) + BivariatePoly.monomial(1, 0, inner.size)


def poset_poly(p: Poset) -> BivariatePoly:
    """The poset polynomial, by recursion over a construction trace.

    1 for the empty poset, x for a single element, products over disjoint
    unions, and adding a greatest or least element to P contributes y**|P|.
    """
    trace = decompose(p)
    if trace is None:
        raise NotVPosetError(find_forbidden(p))
    return _trace_poly(trace)


def count_antichains_poset(p: Poset) -> int:
    """Number of antichains including the empty one, by subset enumeration."""
    bruteforce.check_subset_bound(p.n, "poset")
    return int(bruteforce.antichain_flags(p.n, p.relation_pairs()).sum())


def count_maximal_antichains_poset(p: Poset) -> int:
    bruteforce.check_subset_bound(p.n, "poset")
    return int(bruteforce.maximal_antichain_flags(p.n, p.relation_pairs()).sum())


def count_maximal_antichains_no_basic(p: Poset) -> int:
    """Number of maximal antichains avoiding every basic element."""
    bruteforce.check_subset_bound(p.n, "poset")
    status = element_status(p)
    basics = [v for v in range(p.n) if status[v] == BASIC]
    flags = bruteforce.maximal_antichain_flags(p.n, p.relation_pairs())
    flags = flags & ~bruteforce.member_flags(p.n, basics)
    return int(flags.sum())


def count_cutsets_poset(p: Poset) -> int:
    """Number of element sets meeting every maximal chain."""
    bruteforce.check_subset_bound(p.n, "poset")
    return int(bruteforce.hitting_flags(p.n, maximal_chains(p)).sum())


def minimal_cutsets(p: Poset) -> list[frozenset[int]]:
    """All inclusion-minimal cutsets, by brute force over subsets."""
    bruteforce.check_subset_bound(p.n, "poset")
    flags = bruteforce.hitting_flags(p.n, maximal_chains(p))
    out = []
    for code in bruteforce.flagged_subsets(flags):
        if all(not flags[code ^ (1 << v)] for v in _bits(code)):
            out.append(frozenset(_bits(code)))
    return out


# ----------------------------------------------------------------------
# trees as posets

def tree_to_poset(t: RootedTree, orientation: str = "greatest") -> Poset:
    """Poset whose cover graph is the tree; the root becomes the greatest
    element (orientation "greatest") or the least one ("least")."""
    lay = tree_layout(t)
    if orientation == "greatest":
        covers = [(v, lay.parent[v]) for v in range(1, t.size)]
    elif orientation == "least":
        covers = [(lay.parent[v], v) for v in range(1, t.size)]
    else:
        raise ValueError("orientation must be 'greatest' or 'least'")
    return Poset.from_covers(t.size, covers)


# ----------------------------------------------------------------------
# isomorphism and exhaustive generation

def _element_signatures(p: Poset):
    base = [(p.up_mask(u).bit_count(), p.down_mask(u).bit_count()) for u in range(p.n)]
    above = defaultdict(list)
    below = defaultdict(list)
    for u, v in p.covers():
        above[u].append(base[v])
        below[v].append(base[u])
    return tuple(
        (base[u], tuple(sorted(above[u])), tuple(sorted(below[u])))
        for u in range(p.n)
    )


def poset_isomorphic(p: Poset, q: Poset) -> bool:
    """Exhaustive isomorphism test, pruned by degree and cover signatures."""
    if p.n != q.n:
        return False
    if p.n > ISOMORPHISM_BOUND:
        raise OracleBoundError(
            f"isomorphism search is bounded at {ISOMORPHISM_BOUND} elements"
        )
    n = p.n
    sp = _element_signatures(p)
    sq = _element_signatures(q)
    if sorted(sp) != sorted(sq):
        return False
    candidates = [[v for v in range(n) if sq[v] == sp[u]] for u in range(n)]
    order = sorted(range(n), key=lambda u: len(candidates[u]))
    mapping: dict[int, int] = {}
    used: set[int] = set()

    def backtrack(i: int) -> bool:
        if i == n:
            return True
        u = order[i]
        for v in candidates[u]:
            if v in used:
                continue
            if all(
                p.less(u, u2) == q.less(v, v2) and p.less(u2, u) == q.less(v2, v)
                for u2, v2 in mapping.items()
            ):
                mapping[u] = v
                used.add(v)
                if backtrack(i + 1):
                    return True
                del mapping[u]
                used.remove(v)
        return False

    return backtrack(0)


def all_labeled_posets(n: int) -> list[Poset]:
    """Every strict partial order on elements 0..n-1 (labeled, not deduped)."""
    if n > LABELED_BOUND:
        raise OracleBoundError(
            f"labeled-poset generation is bounded at {LABELED_BOUND} elements"
        )
    import numpy as np

    pairs = [(i, j) for i in range(n) for j in range(n) if i != j]
    index = {pair: k for k, pair in enumerate(pairs)}
    m = len(pairs)
    codes = np.arange(1 << m, dtype=np.int64)
    rel = ((codes[:, None] >> np.arange(m)) & 1).astype(bool)
    ok = np.ones(1 << m, dtype=bool)
    for i in range(n):
        for j in range(i + 1, n):
            ok &= ~(rel[:, index[(i, j)]] & rel[:, index[(j, i)]])
    for i, j, k in itertools.permutations(range(n), 3):
        ok &= ~(rel[:, index[(i, j)]] & rel[:, index[(j, k)]] & ~rel[:, index[(i, k)]])
    out = []
    for code in np.nonzero(ok)[0]:
        rows = [0] * n
        c = int(code)
        for k, (i, j) in enumerate(pairs):
            if (c >> k) & 1:
                rows[i] |= 1 << j
        out.append(Poset(n, rows))
    return out


# ----------------------------------------------------------------------
# impossibility of extending the evaluations beyond V-posets

def impossibility_search(targets: tuple[int, int, int, int]) -> bool:
    """Whether any sum of k monomials matches the four counting targets.

    ``targets`` is (maximal antichains, antichains, cutsets, 2**n); the
    candidate polynomials are all sums of k = targets[0] monomials
    x**a * y**b, and the three remaining targets are checked at the
    evaluation points (2,1), (1,2) and (2,2).
    """
    k, antichains, cutsets, power = targets
    max_x = max(antichains.bit_length() - 1, 0)
    max_y = max(cutsets.bit_length() - 1, 0)
    pairs = [(a, b) for a in range(max_x + 1) for b in range(max_y + 1)]
    for combo in itertools.combinations_with_replacement(pairs, k):
        if (
            sum(2**a for a, _ in combo) == antichains
            and sum(2**b for _, b in combo) == cutsets
            and sum(2 ** (a + b) for a, b in combo) == power
        ):
            return True
    return False

"""Segments, multisegments, weights, and the dominance order.

A segment is an integer interval [i, j] with i <= j.  Segments are totally
ordered by (end, start).  A multisegment is a finite multiset of segments;
its weight counts how many segments cover each position.  Replacing two
linked segments by their union and (if non-empty) intersection is an
elementary move; the partial order "m dominates to n" is reachability by
such moves.  Weight classes are enumerated in a fixed linear extension of
that order so downstream output is reproducible.
"""

from __future__ import annotations

import heapq
import itertools
import re
from functools import lru_cache
from typing import Iterable, NamedTuple

__all__ = [
    "Segment",
    "Multisegment",
    "Weight",
    "EMPTY",
    "compare_segments",
    "segment_key",
    "linked",
    "segment_union",
    "segment_intersection",
    "segment_pairing",
    "cartan_pairing",
    "b_form",
    "elementary_moves",
    "dominates",
    "enumerate_by_weight",
    "parse_segment",
    "parse_multisegment",
    "parse_weight",
]


class Segment(NamedTuple):
    start: int
    end: int

    @property
    def length(self) -> int:
        return self.end - self.start + 1

    def __str__(self) -> str:
        if self.start == self.end:
            return f"[{self.start}]"
        return f"[{self.start},{self.end}]"


def segment_key(s: Segment) -> tuple[int, int]:
    """Sort key realizing the segment order: compare ends, then starts."""
    return (s.end, s.start)


def compare_segments(a: Segment, b: Segment) -> int:
    """-1, 0, or 1 as a precedes, equals, or follows b."""
    ka, kb = segment_key(a), segment_key(b)
    return (ka > kb) - (ka < kb)


def _check_segment(s: Segment) -> Segment:
    if s.start > s.end:
        raise ValueError(f"segment start {s.start} exceeds end {s.end}")
    return s


def linked(a: Segment, b: Segment) -> bool:
    """True iff the union of a and b is a segment different from both."""
    if a == b:
        return False
    if max(a.start, b.start) > min(a.end, b.end) + 1:
        return False
    u = Segment(min(a.start, b.start), max(a.end, b.end))
    return u != a and u != b


def segment_union(a: Segment, b: Segment) -> Segment:
    return Segment(min(a.start, b.start), max(a.end, b.end))


def segment_intersection(a: Segment, b: Segment) -> Segment | None:
    lo, hi = max(a.start, b.start), min(a.end, b.end)
    return Segment(lo, hi) if lo <= hi else None


def segment_pairing(a: Segment, b: Segment) -> int:
    """Cartan pairing of the weights of two segments.

    Positions paired with themselves contribute 2, adjacent positions -1:
    the value is 2*|overlap| minus the number of adjacent cross pairs.
    """
    ov = min(a.end, b.end) - max(a.start, b.start) + 1
    up = min(a.end, b.end - 1) - max(a.start, b.start - 1) + 1
    dn = min(a.end, b.end + 1) - max(a.start, b.start + 1) + 1
    return 2 * max(0, ov) - max(0, up) - max(0, dn)


class Multisegment:
    """An immutable finite multiset of segments.

    Stored expanded (one entry per copy), sorted ascending by the segment
    order, so identical multisets always compare and hash equal.
    """

    __slots__ = ("_segs", "_hash")

    def __init__(self, segments: Iterable[Segment | tuple[int, int]] = ()):
        segs = tuple(sorted(
            (_check_segment(Segment(*s)) for s in segments), key=segment_key))
        self._segs = segs
        self._hash = hash(segs)

    # -- structure ----------------------------------------------------------

    @property
    def segments(self) -> tuple[Segment, ...]:
        return self._segs

    def counts(self) -> list[tuple[Segment, int]]:
        """Distinct segments with multiplicities, ascending."""
        return [(s, len(list(g))) for s, g in itertools.groupby(self._segs)]

    def __len__(self) -> int:
        return len(self._segs)

    def degree(self) -> int:
        return sum(s.length for s in self._segs)

    def weight(self) -> "Weight":
        d: dict[int, int] = {}
        for s in self._segs:
            for k in range(s.start, s.end + 1):
                d[k] = d.get(k, 0) + 1
        return Weight(d)

    def multiplicity(self, s: Segment) -> int:
        return self._segs.count(s)

    def binom_sum(self) -> int:
        """Sum over distinct segments of C(multiplicity, 2)."""
        return sum(c * (c - 1) // 2 for _, c in self.counts())

    def sq_length_sum(self) -> int:
        return sum(s.length ** 2 for s in self._segs)

    def sort_key(self) -> tuple[tuple[int, int], ...]:
        """Lexicographic key on the sorted segment list."""
        return tuple(segment_key(s) for s in self._segs)

    def extension_key(self) -> tuple:
        """A cheap linear extension of dominance: squared-length sum, then
        the lexicographic key.  Every elementary move strictly increases the
        first component, so sorting any set of labels by this key never puts
        a dominating label before a dominated one."""
        return (self.sq_length_sum(), self.sort_key())

    def largest_segment(self) -> Segment:
        if not self._segs:
            raise ValueError("empty multisegment has no largest segment")
        return self._segs[-1]

    # -- multiset arithmetic --------------------------------------------------

    def __add__(self, other: "Multisegment") -> "Multisegment":
        return Multisegment(self._segs + other._segs)

    def remove(self, s: Segment) -> "Multisegment":
        """A copy with one occurrence of s removed."""
        segs = list(self._segs)
        segs.remove(s)
        return Multisegment(segs)

    # -- comparison, rendering -------------------------------------------------

    def __eq__(self, other) -> bool:
        return isinstance(other, Multisegment) and self._segs == other._segs

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Multisegment({list(self._segs)!r})"

    def __str__(self) -> str:
        if not self._segs:
            return "[]"
        parts = []
        for s, c in self.counts():
            parts.append(str(s) if c == 1 else f"{c}{s}")
        return "+".join(parts)


EMPTY = Multisegment()


class Weight:
    """A finitely supported map from positions to positive counts."""

    __slots__ = ("_items", "_hash")

    def __init__(self, data: dict[int, int] | Iterable[tuple[int, int]] = ()):
        pairs = data.items() if isinstance(data, dict) else data
        items = []
        for p, c in sorted(pairs):
            if c < 0:
                raise ValueError(f"negative count {c} at position {p}")
            if c:
                items.append((int(p), int(c)))
        self._items = tuple(items)
        self._hash = hash(self._items)

    def items(self) -> tuple[tuple[int, int], ...]:
        return self._items

    def positions(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self._items)

    def __getitem__(self, position: int) -> int:
        for p, c in self._items:
            if p == position:
                return c
        return 0

    def total(self) -> int:
        return sum(c for _, c in self._items)

    def __bool__(self) -> bool:
        return bool(self._items)

    def __eq__(self, other) -> bool:
        return isinstance(other, Weight) and self._items == other._items

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Weight({list(self._items)!r})"

    def __str__(self) -> str:
        return ",".join(f"{p}:{c}" for p, c in self._items)


def cartan_pairing(w1: Weight, w2: Weight) -> int:
    """Symmetric bilinear form with diagonal 2 and adjacent entries -1."""
    d2 = dict(w2.items())
    total = 0
    for p, c in w1.items():
        total += c * (2 * d2.get(p, 0) - d2.get(p - 1, 0) - d2.get(p + 1, 0))
    return total


def b_form(m: Multisegment, n: Multisegment) -> int:
    """Bilinear form controlling leading coefficients of basis products.

    Sum of pairings (wt s, wt s') over pairs with s' from m strictly above
    s from n, plus the number of common pairs; not symmetric, but
    b(m, n) + b(n, m) equals the Cartan pairing of the weights.
    """
    total = 0
    for s2, c2 in m.counts():
        k2 = segment_key(s2)
        for s1, c1 in n.counts():
            if k2 > segment_key(s1):
                total += c2 * c1 * segment_pairing(s1, s2)
            elif s1 == s2:
                total += c2 * c1
    return total


def elementary_moves(m: Multisegment) -> list[Multisegment]:
    """All one-step dominance successors of m, deduplicated and sorted.

    Each linked pair of distinct segments of m is replaced by its union and
    (when non-empty) intersection.
    """
    support = [s for s, _ in m.counts()]
    out = set()
    for a, b in itertools.combinations(support, 2):
        if not linked(a, b):
            continue
        u = segment_union(a, b)
        i = segment_intersection(a, b)
        repl = [u] if i is None else [u, i]
        n = Multisegment(
            [s for s in _removed_two(m.segments, a, b)] + repl)
        # squared-length sum must strictly increase along every move
        assert n.sq_length_sum() > m.sq_length_sum()
        out.add(n)
    return sorted(out, key=Multisegment.sort_key)


def _removed_two(segs: tuple[Segment, ...], a: Segment, b: Segment):
    removed_a = removed_b = False
    for s in segs:
        if not removed_a and s == a:
            removed_a = True
        elif not removed_b and s == b:
            removed_b = True
        else:
            yield s


@lru_cache(maxsize=None)
def _reachable(m: Multisegment) -> frozenset[Multisegment]:
    """All labels reachable from m by elementary moves, m included."""
    seen = {m}
    frontier = [m]
    while frontier:
        nxt = []
        for x in frontier:
            for y in elementary_moves(x):
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return frozenset(seen)


def dominates(m: Multisegment, n: Multisegment) -> bool:
    """True iff n is reachable from m by elementary moves (reflexively)."""
    if m == n:
        return True
    if m.weight() != n.weight():
        return False
    if m.sq_length_sum() >= n.sq_length_sum():
        return False
    return n in _reachable(m)


def _generate(d: dict[int, int], bound: tuple[int, int] | None):
    """All expanded segment tuples of weight d.

    Recursion peels segments ending at the largest weighted position; bound
    forces starts of equal-end segments to be non-decreasing so each
    multiset appears once.
    """
    if not d:
        yield ()
        return
    p = max(d)
    lo = p
    while (lo - 1) in d:
        lo -= 1
    if bound is not None and bound[0] == p:
        lo = max(lo, bound[1])
    for start in range(lo, p + 1):
        seg = Segment(start, p)
        nd = dict(d)
        for k in range(start, p + 1):
            nd[k] -= 1
            if not nd[k]:
                del nd[k]
        for rest in _generate(nd, (p, start)):
            yield rest + (seg,)


@lru_cache(maxsize=None)
def enumerate_by_weight(w: Weight) -> tuple[Multisegment, ...]:
    """All multisegments of weight w in a fixed linear extension of dominance.

    The order is the topological order of the elementary-move DAG with ties
    broken lexicographically on sorted segment lists, so the dominance-least
    label comes first and later labels never dominate into earlier ones.
    """
    elems = [Multisegment(segs) for segs in _generate(dict(w.items()), None)]
    moves = {m: elementary_moves(m) for m in elems}
    indeg = {m: 0 for m in elems}
    for outs in moves.values():
        for n in outs:
            indeg[n] += 1
    heap = [(m.sort_key(), m) for m in elems if not indeg[m]]
    heapq.heapify(heap)
    order = []
    while heap:
        _, m = heapq.heappop(heap)
        order.append(m)
        for n in moves[m]:
            indeg[n] -= 1
            if not indeg[n]:
                heapq.heappush(heap, (n.sort_key(), n))
    assert len(order) == len(elems), "move DAG is not acyclic"
    return tuple(order)


# -- parsing ------------------------------------------------------------------

_SEGMENT_RE = re.compile(r"\[\s*(-?\d+)\s*(?:,\s*(-?\d+)\s*)?\]")


def parse_segment(text: str) -> Segment:
    """Parse ``[i,j]`` or the abbreviation ``[i]`` for [i, i]."""
    m = _SEGMENT_RE.fullmatch(text.strip())
    if not m:
        raise ValueError(f"malformed segment {text!r}")
    i = int(m.group(1))
    j = int(m.group(2)) if m.group(2) is not None else i
    return _check_segment(Segment(i, j))


def parse_multisegment(text: str) -> Multisegment:
    """Parse ``2[1]+[0]+[1,2]`` style literals; ``[]`` is the empty one.

    Multiplicity prefixes allow an optional ``*``; whitespace is ignored.
    """
    s = text.strip()
    if s in ("[]", ""):
        return EMPTY
    segs: list[Segment] = []
    for term in s.split("+"):
        term = term.strip()
        m = re.fullmatch(r"(?:(\d+)\s*\*?\s*)?(\[[^][]*\])", term)
        if not m:
            raise ValueError(f"malformed multisegment term {term!r}")
        mult = int(m.group(1)) if m.group(1) else 1
        if mult < 1:
            raise ValueError(f"multiplicity must be positive in {term!r}")
        segs.extend([parse_segment(m.group(2))] * mult)
    return Multisegment(segs)


def parse_weight(text: str) -> Weight:
    """Parse ``0:1,1:2,2:1`` style literals."""
    s = text.strip()
    if not s:
        return Weight()
    pairs = []
    for chunk in s.split(","):
        m = re.fullmatch(r"\s*(-?\d+)\s*:\s*(\d+)\s*", chunk)
        if not m:
            raise ValueError(f"malformed weight entry {chunk!r}")
        pairs.append((int(m.group(1)), int(m.group(2))))
    seen = [p for p, _ in pairs]
    if len(seen) != len(set(seen)):
        raise ValueError(f"repeated position in weight {text!r}")
    return Weight(pairs)

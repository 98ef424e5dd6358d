"""Combinatorial irreducibility criteria for induced evaluation modules.

An evaluation module is indexed by a partition and an integer shift; its
combinatorial shadow is a co-finite set of integers (everything up to a
threshold plus finitely many extras).  A product of two such modules is
irreducible exactly when the two co-finite sets are separated, a condition
on the mutual set differences; families reduce to pairwise tests.  For a
partition against itself the criterion collapses to hook lengths.
"""

from __future__ import annotations

import itertools
import re
from typing import Iterable, Sequence

from .multisegment import Multisegment, Segment

__all__ = [
    "CoFiniteSet",
    "Partition",
    "parse_partition",
    "evaluation_set",
    "evaluation_multisegment",
    "join_related",
    "separated",
    "strongly_separated",
    "irreducible_pair",
    "main1_pattern",
    "hook_irreducible",
    "irreducible_family",
]


class CoFiniteSet:
    """The set of all integers <= threshold plus finitely many larger extras.

    Canonical form: extras sit strictly above threshold + 1; an extra equal
    to threshold + 1 is absorbed by raising the threshold.
    """

    __slots__ = ("_threshold", "_extras")

    def __init__(self, threshold: int, extras: Iterable[int] = ()):
        t = int(threshold)
        xs = sorted({int(x) for x in extras if int(x) > t})
        while xs and xs[0] == t + 1:
            t += 1
            xs.pop(0)
        self._threshold = t
        self._extras = tuple(xs)

    @property
    def threshold(self) -> int:
        return self._threshold

    @property
    def extras(self) -> tuple[int, ...]:
        return self._extras

    def __contains__(self, x: int) -> bool:
        return x <= self._threshold or x in self._extras

    def difference(self, other: "CoFiniteSet") -> tuple[int, ...]:
        """The finite set self minus other, ascending."""
        lo = min(self._threshold, other._threshold)
        hi = max((self._threshold, other._threshold)
                 + self._extras + other._extras)
        return tuple(x for x in range(lo + 1, hi + 1)
                     if x in self and x not in other)

    def __eq__(self, other) -> bool:
        return (isinstance(other, CoFiniteSet)
                and self._threshold == other._threshold
                and self._extras == other._extras)

    def __hash__(self) -> int:
        return hash((self._threshold, self._extras))

    def __repr__(self) -> str:
        return f"CoFiniteSet({self._threshold}, {list(self._extras)})"

    def __str__(self) -> str:
        inner = "".join(f",{x}" for x in self._extras)
        return f"{{..<={self._threshold}{inner}}}"


class Partition:
    """A weakly decreasing tuple of positive integers (possibly empty)."""

    __slots__ = ("_parts",)

    def __init__(self, parts: Iterable[int] = ()):
        ps = tuple(int(p) for p in parts)
        if any(p <= 0 for p in ps):
            raise ValueError(f"partition parts must be positive: {ps}")
        if any(a < b for a, b in zip(ps, ps[1:])):
            raise ValueError(f"partition parts must weakly decrease: {ps}")
        self._parts = ps

    @property
    def parts(self) -> tuple[int, ...]:
        return self._parts

    def __len__(self) -> int:
        return len(self._parts)

    def __iter__(self):
        return iter(self._parts)

    def __getitem__(self, i: int) -> int:
        return self._parts[i]

    def size(self) -> int:
        return sum(self._parts)

    def conjugate(self) -> "Partition":
        if not self._parts:
            return Partition()
        return Partition(
            sum(1 for p in self._parts if p >= j)
            for j in range(1, self._parts[0] + 1))

    def hook_lengths(self) -> tuple[int, ...]:
        """The multiset of hook lengths, sorted descending.

        Cell (i, j) has hook part_i + conj_j - i - j + 1.
        """
        conj = self.conjugate().parts
        hooks = [self._parts[i - 1] + conj[j - 1] - i - j + 1
                 for i in range(1, len(self._parts) + 1)
                 for j in range(1, self._parts[i - 1] + 1)]
        return tuple(sorted(hooks, reverse=True))

    def __eq__(self, other) -> bool:
        return isinstance(other, Partition) and self._parts == other._parts

    def __hash__(self) -> int:
        return hash(self._parts)

    def __repr__(self) -> str:
        return f"Partition({list(self._parts)})"

    def __str__(self) -> str:
        return ",".join(str(p) for p in self._parts)


def parse_partition(text: str) -> Partition:
    """Parse ``5,4,2,1`` style literals."""
    s = text.strip()
    if not s:
        raise ValueError("empty partition literal")
    if not re.fullmatch(r"\d+(\s*,\s*\d+)*", s):
        raise ValueError(f"malformed partition {text!r}")
    return Partition(int(p) for p in s.split(","))


def evaluation_set(alpha: Partition, shift: int) -> CoFiniteSet:
    """The co-finite set attached to an evaluation module.

    Threshold shift - r for r parts; the k-th extra (ascending) is
    shift - r + k + alpha_{r+1-k}, so longer parts push extras further out.
    """
    r = len(alpha)
    extras = [shift - r + k + alpha[r - k] for k in range(1, r + 1)]
    return CoFiniteSet(shift - r, extras)


def evaluation_multisegment(alpha: Partition, shift: int) -> Multisegment:
    """Row i of the partition becomes the segment [shift-i+1, shift-i+alpha_i]."""
    return Multisegment(
        Segment(shift - i + 1, shift - i + alpha[i - 1])
        for i in range(1, len(alpha) + 1))


def join_related(a: Iterable[int], b: Iterable[int]) -> bool:
    """True iff the smaller set splits into a part below and a part above
    the other set (empty parts allowed; vacuously true around an empty set).
    """
    xs, ys = sorted(set(a)), sorted(set(b))
    if set(xs) & set(ys):
        raise ValueError("join relation needs disjoint sets")

    def fits(small: Sequence[int], big: Sequence[int]) -> bool:
        if not big:
            return True
        return all(x < big[0] or x > big[-1] for x in small)

    if len(xs) <= len(ys) and fits(xs, ys):
        return True
    return len(ys) <= len(xs) and fits(ys, xs)


def separated(i_set: CoFiniteSet, j_set: CoFiniteSet) -> bool:
    """True iff the mutual differences are join-related."""
    return join_related(i_set.difference(j_set), j_set.difference(i_set))


def strongly_separated(i_set: CoFiniteSet, j_set: CoFiniteSet) -> bool:
    """True iff one mutual difference lies entirely below the other."""
    a = i_set.difference(j_set)
    b = j_set.difference(i_set)
    if not a or not b:
        return True
    return a[-1] < b[0] or b[-1] < a[0]


def irreducible_pair(alpha: Partition, a: int, beta: Partition, b: int) -> bool:
    """Irreducibility of the product of two evaluation modules."""
    return separated(evaluation_set(alpha, a), evaluation_set(beta, b))


def _three_pattern(outer: Sequence[int], inner: Sequence[int]
                   ) -> tuple[int, int, int] | None:
    """Least (i, j, k) with i < j < k, i and k outer, j inner, else None."""
    for j in inner:
        below = [i for i in outer if i < j]
        above = [k for k in outer if k > j]
        if below and above:
            return (below[0], j, above[0])
    return None


def _four_pattern(first: Sequence[int], second: Sequence[int]
                  ) -> tuple[int, int, int, int] | None:
    """Least i < j < k < l with i, k from first and j, l from second."""
    for j, l in itertools.combinations(second, 2):
        below = [i for i in first if i < j]
        between = [k for k in first if j < k < l]
        if below and between:
            return (below[0], j, between[0], l)
    return None


def main1_witness(alpha: Partition, a: int, beta: Partition, b: int
                  ) -> tuple[int, ...] | None:
    """Witnessing pattern for reducibility, or None when irreducible.

    With c = a - b, a positive c asks for an element of the second
    difference strictly between two of the first (negative c: swap roles);
    c = 0 asks for a four-term interleaving either way round.  The witness
    is the increasing tuple of positions realizing the pattern.
    """
    i_set = evaluation_set(alpha, a)
    j_set = evaluation_set(beta, b)
    d_ij = i_set.difference(j_set)
    d_ji = j_set.difference(i_set)
    c = a - b
    if c > 0:
        return _three_pattern(d_ij, d_ji)
    if c < 0:
        return _three_pattern(d_ji, d_ij)
    return _four_pattern(d_ij, d_ji) or _four_pattern(d_ji, d_ij)


def main1_pattern(alpha: Partition, a: int, beta: Partition, b: int) -> bool:
    """True iff the product is NOT irreducible, by the pattern criterion.

    Always agrees with the negation of irreducible_pair; kept as an
    independently coded oracle.
    """
    return main1_witness(alpha, a, beta, b) is not None


def hook_irreducible(alpha: Partition, shift: int) -> bool:
    """Self-product criterion: irreducible iff |shift| is not a hook length."""
    return abs(shift) not in alpha.hook_lengths()


def irreducible_family(family: Sequence[tuple[Partition, int]]) -> bool:
    """A whole product of evaluation modules is irreducible iff every pair is."""
    return all(
        irreducible_pair(a1, s1, a2, s2)
        for (a1, s1), (a2, s2) in itertools.combinations(family, 2))

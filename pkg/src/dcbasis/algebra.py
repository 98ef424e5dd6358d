"""The graded algebra spanned by normal-form basis vectors E*(m).

Elements are finite Z[v,v^-1]-linear combinations of basis vectors indexed
by multisegments.  Multiplication goes through ordered generator words: the
basis vector of m corresponds, up to an explicit power of v, to the product
of one generator per segment of m taken in increasing segment order, and
out-of-order adjacent generator pairs rewrite by a quadratic straightening
rule, with an extra union/intersection term when the two segments are
linked.  Quantum minors are alternating sums of generator words and land in
the same normal form.
"""

from __future__ import annotations

import itertools
from typing import Iterable

from .laurent import LaurentPoly, ONE, ZERO
from .multisegment import (
    Multisegment,
    Segment,
    Weight,
    linked,
    segment_intersection,
    segment_key,
    segment_pairing,
    segment_union,
)

__all__ = [
    "AlgebraElement",
    "dual_pbw",
    "unit",
    "quantum_minor",
    "minor_multisegment",
]

_V_INV_MINUS_V = LaurentPoly({-1: 1, 1: -1})

Word = tuple[Segment, ...]


def _rightmost_descent(word: Word) -> int | None:
    """Index of the rightmost adjacent out-of-order pair, None if sorted."""
    for i in range(len(word) - 2, -1, -1):
        if segment_key(word[i]) > segment_key(word[i + 1]):
            return i
    return None


def _straighten(word: Word, scalar: LaurentPoly,
                out: dict[Word, LaurentPoly]) -> None:
    """Accumulate the normal form of scalar * word into out.

    Rewrites the rightmost out-of-order pair first.  Each rewrite either
    swaps the pair (one fewer inversion, same multiset) or, for linked
    segments, replaces it by intersection/union (strictly larger squared
    length sum, so the dominance measure drops); both measures are bounded,
    hence termination.
    """
    stack = [(word, scalar)]
    while stack:
        w, c = stack.pop()
        i = _rightmost_descent(w)
        if i is None:
            s = out.get(w, ZERO) + c
            if s:
                out[w] = s
            else:
                out.pop(w, None)
            continue
        hi, lo = w[i], w[i + 1]
        shifted = c * LaurentPoly.v_power(-segment_pairing(hi, lo))
        stack.append((w[:i] + (lo, hi) + w[i + 2:], shifted))
        if linked(hi, lo):
            u = segment_union(hi, lo)
            inter = segment_intersection(hi, lo)
            mid = (u,) if inter is None else (inter, u)
            assert (u.length ** 2 + (0 if inter is None else inter.length ** 2)
                    > hi.length ** 2 + lo.length ** 2)
            stack.append((w[:i] + mid + w[i + 2:], shifted * _V_INV_MINUS_V))


class AlgebraElement:
    """A Z[v,v^-1]-linear combination of basis vectors E*(m)."""

    __slots__ = ("_terms",)

    def __init__(self, terms: dict[Multisegment, LaurentPoly] | None = None):
        self._terms = {m: c for m, c in (terms or {}).items() if c}

    # -- queries -----------------------------------------------------------

    def support(self) -> list[Multisegment]:
        """Support labels sorted by the dominance-compatible extension key."""
        return sorted(self._terms, key=Multisegment.extension_key)

    def coefficient(self, m: Multisegment) -> LaurentPoly:
        return self._terms.get(m, ZERO)

    def items(self) -> list[tuple[Multisegment, LaurentPoly]]:
        return [(m, self._terms[m]) for m in self.support()]

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def weight(self) -> Weight:
        """The common weight of the support; error if mixed or zero."""
        weights = {m.weight() for m in self._terms}
        if len(weights) != 1:
            raise ValueError("element is not homogeneous")
        return weights.pop()

    def is_homogeneous(self) -> bool:
        return len({m.weight() for m in self._terms}) <= 1

    # -- linear structure -----------------------------------------------------

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        out = dict(self._terms)
        for m, c in other._terms.items():
            s = out.get(m, ZERO) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return AlgebraElement(out)

    def __neg__(self) -> "AlgebraElement":
        return AlgebraElement({m: -c for m, c in self._terms.items()})

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self + (-other)

    def scaled(self, scalar: LaurentPoly | int) -> "AlgebraElement":
        scalar = scalar if isinstance(scalar, LaurentPoly) else LaurentPoly(scalar)
        return AlgebraElement({m: c * scalar for m, c in self._terms.items()})

    def __rmul__(self, scalar):
        if isinstance(scalar, (int, LaurentPoly)):
            return self.scaled(scalar)
        return NotImplemented

    # -- multiplication -----------------------------------------------------

    def __mul__(self, other) -> "AlgebraElement":
        if isinstance(other, (int, LaurentPoly)):
            return self.scaled(other)
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        words: dict[Word, LaurentPoly] = {}
        for m, cm in self._terms.items():
            lhs = m.segments
            pre = cm * LaurentPoly.v_power(m.binom_sum())
            for n, cn in other._terms.items():
                scalar = pre * cn * LaurentPoly.v_power(n.binom_sum())
                _straighten(lhs + n.segments, scalar, words)
        out: dict[Multisegment, LaurentPoly] = {}
        for w, c in words.items():
            label = Multisegment(w)
            coef = c * LaurentPoly.v_power(-label.binom_sum())
            s = out.get(label, ZERO) + coef
            if s:
                out[label] = s
            else:
                out.pop(label, None)
        return AlgebraElement(out)

    def div_v_minus_vinv(self) -> "AlgebraElement":
        """Divide every coefficient exactly by v - v^-1."""
        return AlgebraElement(
            {m: c.divide_by_v_minus_vinv() for m, c in self._terms.items()})

    # -- comparison and rendering ---------------------------------------------

    def __eq__(self, other) -> bool:
        return isinstance(other, AlgebraElement) and self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __repr__(self) -> str:
        return f"AlgebraElement({self._terms!r})"

    def __str__(self) -> str:
        return render_combination(self.items(), "E*")


def render_combination(items: Iterable[tuple[Multisegment, LaurentPoly]],
                       symbol: str) -> str:
    """Render coefficient/label pairs like ``E*([0]+[1]) - v E*([0,1])``.

    Single-term coefficients are inlined with their sign; longer ones are
    parenthesized.
    """
    pieces: list[tuple[bool, str]] = []
    for m, c in items:
        body = f"{symbol}({m})"
        if len(c.items()) == 1:
            (e, coef), = c.items()
            negative = coef < 0
            mag = LaurentPoly.v_power(e, abs(coef))
            if not mag.is_one():
                body = f"{mag} {body}"
            pieces.append((negative, body))
        else:
            pieces.append((False, f"({c}) {body}"))
    if not pieces:
        return "0"
    chunks = []
    for idx, (negative, body) in enumerate(pieces):
        if idx == 0:
            chunks.append(f"-{body}" if negative else body)
        else:
            chunks.append(f"- {body}" if negative else f"+ {body}")
    return " ".join(chunks)


def dual_pbw(m: Multisegment) -> AlgebraElement:
    """The basis vector E*(m)."""
    return AlgebraElement({m: ONE})


def unit() -> AlgebraElement:
    """The identity element (basis vector of the empty multisegment)."""
    return AlgebraElement({Multisegment(): ONE})


def _check_indices(rows: tuple[int, ...], cols: tuple[int, ...]) -> None:
    if len(rows) != len(cols):
        raise ValueError("row and column index lists differ in length")
    if any(a >= b for a, b in zip(rows, rows[1:])):
        raise ValueError(f"row indices not strictly increasing: {rows}")
    if any(a >= b for a, b in zip(cols, cols[1:])):
        raise ValueError(f"column indices not strictly increasing: {cols}")


def quantum_minor(rows: Iterable[int], cols: Iterable[int]) -> AlgebraElement:
    """The quantum minor with the given row and column index sets.

    Alternating sum over permutations of (-v)^(inversions) times the word of
    matrix generators; a generator with row index above its column index
    kills the term, and equal indices contribute the identity.
    """
    rows = tuple(rows)
    cols = tuple(cols)
    _check_indices(rows, cols)
    words: dict[Word, LaurentPoly] = {}
    for perm in itertools.permutations(range(len(rows))):
        word = []
        for r, p in enumerate(perm):
            if rows[r] > cols[p]:
                break
            if rows[r] < cols[p]:
                word.append(Segment(rows[r], cols[p] - 1))
        else:
            inv = sum(1 for a, b in itertools.combinations(perm, 2) if a > b)
            _straighten(tuple(word), LaurentPoly.v_power(inv, (-1) ** inv),
                        words)
    out: dict[Multisegment, LaurentPoly] = {}
    for w, c in words.items():
        label = Multisegment(w)
        coef = c * LaurentPoly.v_power(-label.binom_sum())
        s = out.get(label, ZERO) + coef
        if s:
            out[label] = s
        else:
            out.pop(label, None)
    return AlgebraElement(out)


def minor_multisegment(rows: Iterable[int], cols: Iterable[int]) -> Multisegment:
    """The multisegment attached to an admissible minor: sum of [i_r, j_r - 1].

    Requires i_r <= j_r for every r (otherwise the minor vanishes and no
    multisegment is attached); equal pairs contribute nothing.
    """
    rows = tuple(rows)
    cols = tuple(cols)
    _check_indices(rows, cols)
    if any(i > j for i, j in zip(rows, cols)):
        raise ValueError("minor vanishes: some row index exceeds its column")
    return Multisegment(
        Segment(i, j - 1) for i, j in zip(rows, cols) if i < j)

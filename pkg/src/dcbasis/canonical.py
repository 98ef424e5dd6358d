"""The distinguished bar-invariant basis G*(m) and expansions into it.

Each basis vector is computed by a triangular correction: an auxiliary
vector built from a commutator-like combination of two lower-degree basis
vectors is congruent to the target modulo dominance-greater labels, and
subtracting the bar-symmetric part of each unwanted coefficient (processed
upward along a linear extension of dominance) leaves the unique vector
whose off-diagonal coefficients all lie in v*Z[v].
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Callable

from .algebra import AlgebraElement, dual_pbw
from .laurent import LaurentPoly, ONE
from .multisegment import (
    Multisegment,
    Weight,
    b_form,
    enumerate_by_weight,
)

__all__ = [
    "BasisCache",
    "DcbTable",
    "dual_canonical",
    "aux_vector",
    "dcb_table",
    "kl_matrix",
    "expand_in_dcb",
    "structure_constants",
    "membership_up_to_power",
    "default_cache",
]


class BasisCache:
    """Memoized computation of the corrected basis.

    order_key must be a linear extension of dominance on multisegments (the
    default compares squared-length sums, then sorted segment lists); any
    such extension yields the same basis, which a property test exercises.
    max_labels, when set, caps how many labels may be memoized before a
    RuntimeError aborts the computation (a size guard for the CLI).
    """

    def __init__(self,
                 order_key: Callable[[Multisegment], tuple] | None = None,
                 max_labels: int | None = None):
        self._memo: dict[Multisegment, AlgebraElement] = {}
        self.order_key = order_key or Multisegment.extension_key
        self.max_labels = max_labels

    def labels_computed(self) -> int:
        return len(self._memo)

    def aux_vector(self, m: Multisegment) -> AlgebraElement:
        """The pre-correction vector: E*(m) plus dominance-greater terms.

        For at most one segment this is the basis vector itself.  Otherwise
        split off one copy of the largest segment s, and divide the graded
        commutator v^(b(rest,s)+1) G*(rest) G*(s) - v^(b(s,rest)-1) G*(s) G*(rest)
        exactly by v - v^-1.
        """
        if len(m) <= 1:
            return dual_pbw(m)
        s = m.largest_segment()
        rest = m.remove(s)
        single = Multisegment([s])
        g_rest = self.dual_canonical(rest)
        g_s = dual_pbw(single)
        forward = LaurentPoly.v_power(b_form(rest, single) + 1)
        backward = LaurentPoly.v_power(b_form(single, rest) - 1)
        num = (g_rest * g_s).scaled(forward) - (g_s * g_rest).scaled(backward)
        return num.div_v_minus_vinv()

    def dual_canonical(self, m: Multisegment) -> AlgebraElement:
        """The basis vector G*(m), expanded over the E* basis."""
        hit = self._memo.get(m)
        if hit is not None:
            return hit
        if self.max_labels is not None and len(self._memo) >= self.max_labels:
            raise RuntimeError(
                f"label budget of {self.max_labels} exceeded; "
                "raise the cap to continue")
        x = self.aux_vector(m)
        assert x.coefficient(m) == ONE, f"leading coefficient broken at {m}"
        key_m = self.order_key(m)
        done = {m}
        while True:
            todo = [n for n in x.support() if n not in done]
            if not todo:
                break
            n = min(todo, key=self.order_key)
            gamma = x.coefficient(n).symmetric_part()
            if gamma:
                x = x - self.dual_canonical(n).scaled(gamma)
            done.add(n)
        for n, c in x.items():
            if n == m:
                assert c == ONE
            else:
                assert self.order_key(n) > key_m, f"support below {m} at {n}"
                assert c.only_positive_exponents(), \
                    f"off-diagonal coefficient {c} not in v*Z[v]"
        self._memo[m] = x
        return x


_DEFAULT = BasisCache()


def default_cache() -> BasisCache:
    return _DEFAULT


def dual_canonical(m: Multisegment) -> AlgebraElement:
    return _DEFAULT.dual_canonical(m)


def aux_vector(m: Multisegment) -> AlgebraElement:
    return _DEFAULT.aux_vector(m)


@dataclass(frozen=True)
class DcbTable:
    """All corrected basis vectors of one weight class, in enumeration order."""

    weight: Weight
    labels: tuple[Multisegment, ...]
    expansions: dict[Multisegment, AlgebraElement]

    def expansion(self, m: Multisegment) -> AlgebraElement:
        return self.expansions[m]

    def coefficient(self, m: Multisegment, n: Multisegment) -> LaurentPoly:
        return self.expansions[m].coefficient(n)

    def to_json_obj(self) -> dict:
        return {
            "weight": str(self.weight),
            "basis": [
                {
                    "label": str(m),
                    "expansion": [
                        {"label": str(n), "coef": [list(p) for p in c.items()]}
                        for n, c in self.expansions[m].items()
                    ],
                }
                for m in self.labels
            ],
        }


def dcb_table(w: Weight, cache: BasisCache | None = None) -> DcbTable:
    cache = cache or _DEFAULT
    labels = enumerate_by_weight(w)
    return DcbTable(w, labels, {m: cache.dual_canonical(m) for m in labels})


def load_table(path: Path) -> DcbTable:
    """Rebuild a table from the JSON emitted by DcbTable.to_json_obj."""
    from .multisegment import parse_multisegment, parse_weight

    obj = json.loads(Path(path).read_text())
    labels = []
    expansions = {}
    for row in obj["basis"]:
        m = parse_multisegment(row["label"])
        labels.append(m)
        expansions[m] = AlgebraElement({
            parse_multisegment(entry["label"]):
                LaurentPoly({e: c for e, c in entry["coef"]})
            for entry in row["expansion"]
        })
    return DcbTable(parse_weight(obj["weight"]), tuple(labels), expansions)


def expand_in_dcb(x: AlgebraElement,
                  cache: BasisCache | None = None
                  ) -> dict[Multisegment, LaurentPoly]:
    """Coefficients of x over the corrected basis, by triangular elimination.

    Repeatedly strips the extension-least support label; unitriangularity
    makes the loop terminate with exactly the basis coefficients.
    """
    if not x.is_homogeneous():
        raise ValueError("can only expand homogeneous elements")
    cache = cache or _DEFAULT
    out: dict[Multisegment, LaurentPoly] = {}
    while x:
        n = min(x.support(), key=cache.order_key)
        c = x.coefficient(n)
        out[n] = c
        x = x - cache.dual_canonical(n).scaled(c)
    return out


def structure_constants(m: Multisegment, n: Multisegment,
                        cache: BasisCache | None = None
                        ) -> dict[Multisegment, LaurentPoly]:
    """Expansion of G*(m) G*(n) over the corrected basis."""
    cache = cache or _DEFAULT
    return expand_in_dcb(cache.dual_canonical(m) * cache.dual_canonical(n),
                         cache)


def membership_up_to_power(x: AlgebraElement,
                           cache: BasisCache | None = None
                           ) -> tuple[int, Multisegment] | None:
    """(k, q) such that v^k x = G*(q), or None if no such pair exists.

    Exists exactly when the expansion of x has a single entry whose
    coefficient is a bare power of v.
    """
    expansion = expand_in_dcb(x, cache)
    if len(expansion) != 1:
        return None
    (q, c), = expansion.items()
    e = c.single_power()
    if e is None:
        return None
    return (-e, q)


def kl_matrix(w: Weight, cache: BasisCache | None = None
              ) -> dict[Multisegment, dict[Multisegment, LaurentPoly]]:
    """Rows express each E*(m) of the weight class over the corrected basis.

    This is the inverse of the unitriangular table of the class; diagonal
    entries are 1 and the row order is the class enumeration order.
    """
    cache = cache or _DEFAULT
    return {m: expand_in_dcb(dual_pbw(m), cache)
            for m in enumerate_by_weight(w)}

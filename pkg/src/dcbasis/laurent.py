"""Exact Laurent polynomials in one variable ``v`` with integer coefficients.

Sparse representation: a dict mapping exponent to coefficient, with zero
coefficients never stored.  All arithmetic is exact (Python ints).  Besides
ring operations the class carries the involution ``bar`` (v -> 1/v), the
bar-symmetric truncation ``symmetric_part``, and exact division by
``v - v^-1``, which is what the basis-correction algorithms downstream need.

>>> p = LaurentPoly({1: 2, -1: 2})
>>> print(p * p)
4*v^2 + 8 + 4*v^-2
>>> print(quantum_integer(3))
v^2 + 1 + v^-2
"""

from __future__ import annotations

import re

__all__ = [
    "ExactDivisionError",
    "LaurentPoly",
    "ZERO",
    "ONE",
    "V",
    "quantum_integer",
    "quantum_factorial",
    "parse_laurent",
]


class ExactDivisionError(ArithmeticError):
    """Raised when an exact division leaves a remainder.

    Divisions by ``v - v^-1`` are only ever applied to quantities that are
    divisible by construction, so this signals an upstream bug rather than
    bad user input.
    """


class LaurentPoly:
    """An element of Z[v, v^-1]."""

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs: dict[int, int] | int = 0):
        if isinstance(coeffs, int):
            coeffs = {0: coeffs} if coeffs else {}
        self._c = {e: c for e, c in coeffs.items() if c}
        self._hash: int | None = None

    @classmethod
    def v_power(cls, exponent: int, coefficient: int = 1) -> "LaurentPoly":
        return cls({exponent: coefficient})

    # -- basic queries ----------------------------------------------------

    def items(self):
        """Pairs (exponent, coefficient), descending exponent."""
        return sorted(self._c.items(), reverse=True)

    def coefficient(self, exponent: int) -> int:
        return self._c.get(exponent, 0)

    def is_zero(self) -> bool:
        return not self._c

    def is_one(self) -> bool:
        return self._c == {0: 1}

    def min_exponent(self) -> int:
        if not self._c:
            raise ValueError("the zero polynomial has no exponents")
        return min(self._c)

    def max_exponent(self) -> int:
        if not self._c:
            raise ValueError("the zero polynomial has no exponents")
        return max(self._c)

    def single_power(self) -> int | None:
        """The exponent k if self == v^k, else None."""
        if len(self._c) == 1:
            (e, c), = self._c.items()
            if c == 1:
                return e
        return None

    def has_nonnegative_coefficients(self) -> bool:
        return all(c > 0 for c in self._c.values())

    def only_positive_exponents(self) -> bool:
        """True iff self lies in v*Z[v]."""
        return all(e > 0 for e in self._c)

    def at_one(self) -> int:
        """Evaluate at v = 1."""
        return sum(self._c.values())

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other) -> "LaurentPoly":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self._c)
        for e, c in other._c.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({e: -c for e, c in self._c.items()})

    def __sub__(self, other) -> "LaurentPoly":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "LaurentPoly":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "LaurentPoly":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._c, other._c
        if not a or not b:
            return ZERO
        if len(a) > len(b):
            a, b = b, a
        if len(a) == 1:
            (e0, c0), = a.items()
            return LaurentPoly({e + e0: c * c0 for e, c in b.items()})
        out: dict[int, int] = {}
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                e = e1 + e2
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    del out[e]
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            raise ValueError("negative powers are only defined for monomials")
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- involution and truncation -----------------------------------------

    def bar(self) -> "LaurentPoly":
        """The involution v -> v^-1."""
        return LaurentPoly({-e: c for e, c in self._c.items()})

    def is_bar_symmetric(self) -> bool:
        return all(self._c.get(-e, 0) == c for e, c in self._c.items())

    def symmetric_part(self) -> "LaurentPoly":
        """The unique bar-symmetric g with self - g supported in v*Z[v].

        Built from the constant term and the coefficients of the strictly
        negative exponents:

        >>> print(LaurentPoly({-1: 2, 0: 5, 1: 7}).symmetric_part())
        2*v + 5 + 2*v^-1
        """
        out: dict[int, int] = {}
        c0 = self._c.get(0, 0)
        if c0:
            out[0] = c0
        for e, c in self._c.items():
            if e < 0:
                out[e] = c
                out[-e] = c
        return LaurentPoly(out)

    def divide_by_v_minus_vinv(self) -> "LaurentPoly":
        """Exact division by (v - v^-1); raises ExactDivisionError otherwise.

        Solves the two-term recurrence q[k+1] = q[k-1] - p[k] upward from
        below the support; the quotient is finitely supported exactly when
        the top two recurrence values vanish.
        """
        if not self._c:
            return ZERO
        lo = min(self._c)
        hi = max(self._c)
        q: dict[int, int] = {}
        for k in range(lo, hi + 1):
            val = q.get(k - 1, 0) - self._c.get(k, 0)
            if val:
                q[k + 1] = val
        if q.get(hi, 0) or q.get(hi + 1, 0):
            raise ExactDivisionError(
                f"{self} is not divisible by v - v^-1")
        return LaurentPoly(q)

    # -- comparison, hashing, rendering --------------------------------------

    def __eq__(self, other) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._c == other._c

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._c)

    def __repr__(self) -> str:
        return f"LaurentPoly({self._c!r})"

    def __str__(self) -> str:
        if not self._c:
            return "0"
        pieces = []
        for e, c in self.items():
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                var = "v" if e == 1 else f"v^{e}"
                body = var if mag == 1 else f"{mag}*{var}"
            if not pieces:
                pieces.append(body if c > 0 else f"-{body}")
            else:
                pieces.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(pieces)


def _coerce(x) -> "LaurentPoly":
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, int):
        return LaurentPoly(x)
    return NotImplemented


ZERO = LaurentPoly(0)
ONE = LaurentPoly(1)
V = LaurentPoly.v_power(1)


def quantum_integer(a: int) -> LaurentPoly:
    """(v^a - v^-a)/(v - v^-1): v^(a-1) + v^(a-3) + ... + v^(1-a)."""
    if a < 0:
        return -quantum_integer(-a)
    return LaurentPoly({a - 1 - 2 * k: 1 for k in range(a)})


def quantum_factorial(a: int) -> LaurentPoly:
    """Product of quantum integers 1..a; the empty product for a in {0, 1}."""
    if a < 0:
        raise ValueError(f"quantum factorial needs a >= 0, got {a}")
    result = ONE
    for k in range(2, a + 1):
        result = result * quantum_integer(k)
    return result


_TERM_RE = re.compile(
    r"""(?P<sign>[+-]?)\s*
        (?:
            (?P<coef>\d+)\s*(?:\*\s*(?P<var1>v(?:\^(?P<exp1>-?\d+))?))?
          | (?P<var2>v(?:\^(?P<exp2>-?\d+))?)
        )\s*""",
    re.VERBOSE,
)


def parse_laurent(text: str) -> LaurentPoly:
    """Parse the rendering produced by str(): e.g. ``v^3 + 2*v - v^-1``.

    Whitespace-insensitive; accepts integer constants, ``v``, ``v^k`` with
    possibly negative k, and optional ``*`` between coefficient and power.
    """
    s = text.strip()
    if not s:
        raise ValueError("empty Laurent polynomial literal")
    out = ZERO
    pos = 0
    first = True
    while pos < len(s):
        match = _TERM_RE.match(s, pos)
        if not match or match.end() == pos:
            raise ValueError(f"malformed Laurent polynomial at {s[pos:]!r}")
        sign = match.group("sign")
        if not first and not sign:
            raise ValueError(f"missing +/- before {s[pos:]!r}")
        coef = int(match.group("coef") or 1)
        if sign == "-":
            coef = -coef
        if match.group("var1") or match.group("var2"):
            exp_text = match.group("exp1") or match.group("exp2")
            exp = int(exp_text) if exp_text else 1
        else:
            exp = 0
        out = out + LaurentPoly.v_power(exp, coef)
        pos = match.end()
        first = False
    return out

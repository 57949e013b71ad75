"""Univariate polynomials and rational functions in x over Q(zeta).

Residue fields of the valuations used here are rational function fields
k(x), so this module is where residues live. Unlike the bivariate fractions,
these are kept in lowest terms (univariate gcd is cheap).
"""

from __future__ import annotations

import re
from fractions import Fraction

from .cyclotomic import Cyclo

__all__ = ["UniPoly", "RatFunc1", "squarefree_decomposition"]


def _c(v) -> Cyclo:
    return v if isinstance(v, Cyclo) else Cyclo.rational(v)


class UniPoly:
    """Dense polynomial, coefficients lowest degree first, no trailing zeros."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [_c(v) for v in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def from_map(cls, terms: dict[int, Cyclo]) -> UniPoly:
        if not terms:
            return cls()
        dense = [Cyclo.rational(0)] * (max(terms) + 1)
        for k, c in terms.items():
            dense[k] = c
        return cls(dense)

    @classmethod
    def x(cls) -> UniPoly:
        return cls([0, 1])

    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def lead(self) -> Cyclo:
        return self.coeffs[-1]

    def monic(self) -> UniPoly:
        inv = self.lead().inverse()
        return UniPoly([c * inv for c in self.coeffs])

    def __add__(self, other: UniPoly) -> UniPoly:
        n = max(len(self.coeffs), len(other.coeffs))
        zero = Cyclo.rational(0)
        return UniPoly([
            (self.coeffs[k] if k < len(self.coeffs) else zero)
            + (other.coeffs[k] if k < len(other.coeffs) else zero)
            for k in range(n)
        ])

    def __neg__(self) -> UniPoly:
        return UniPoly([-c for c in self.coeffs])

    def __sub__(self, other: UniPoly) -> UniPoly:
        return self + (-other)

    def __mul__(self, other) -> UniPoly:
        if not isinstance(other, UniPoly):
            s = _c(other)
            return UniPoly([c * s for c in self.coeffs])
        if not self.coeffs or not other.coeffs:
            return UniPoly()
        out = [Cyclo.rational(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] = out[i + j] + a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> UniPoly:
        result = UniPoly([1])
        for _ in range(k):
            result = result * self
        return result

    def divmod(self, other: UniPoly) -> tuple[UniPoly, UniPoly]:
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return UniPoly(), self
        inv = other.lead().inverse()
        quot = [Cyclo.rational(0)] * (dq + 1)
        for k in range(dq, -1, -1):
            c = rem[k + len(other.coeffs) - 1] * inv
            quot[k] = c
            if c:
                for i, d in enumerate(other.coeffs):
                    rem[k + i] = rem[k + i] - c * d
        return UniPoly(quot), UniPoly(rem[: len(other.coeffs) - 1])

    def __floordiv__(self, other: UniPoly) -> UniPoly:
        return self.divmod(other)[0]

    def __mod__(self, other: UniPoly) -> UniPoly:
        return self.divmod(other)[1]

    def derivative(self) -> UniPoly:
        return UniPoly([c * k for k, c in enumerate(self.coeffs)][1:])

    def __eq__(self, other) -> bool:
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    __hash__ = None

    def render(self, var: str = "x") -> str:
        if not self.coeffs:
            return "0"
        pieces = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
            if c.is_rational():
                v = c.coeffs[0]
                sign, mag = ("-" if v < 0 else "+"), abs(v)
                body = str(mag) if not mono else (mono if mag == 1 else f"{mag}*{mono}")
            else:
                sign, body = "+", f"({c.render()})" + (f"*{mono}" if mono else "")
            pieces.append((sign, body))
        sign, body = pieces[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self) -> str:
        return f"UniPoly({self.render()!r})"


def poly_gcd(a: UniPoly, b: UniPoly) -> UniPoly:
    """Monic gcd; gcd(0, 0) is 0."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic() if not a.is_zero() else a


def squarefree_decomposition(p: UniPoly) -> list[tuple[UniPoly, int]]:
    """Yun's algorithm: monic p = prod s_k^k with s_k squarefree, coprime.

    Only factors s_k != 1 are returned. Characteristic zero is assumed.
    """
    if p.is_zero():
        raise ValueError("square-free decomposition of zero")
    p = p.monic()
    if p.degree() == 0:
        return []
    out = []
    dp = p.derivative()
    a = poly_gcd(p, dp)
    b = p // a
    c = dp // a
    d = c - b.derivative()
    k = 1
    while b.degree() > 0:
        s = poly_gcd(b, d)
        if s.degree() > 0:
            out.append((s, k))
        b = b // s
        c = d // s
        d = c - b.derivative()
        k += 1
    return out


def _wrap(s: str, atom: re.Pattern | None = None) -> str:
    if (atom or _ATOM).fullmatch(s) or _is_group(s):
        return s
    return f"({s})"


def _is_group(s: str) -> bool:
    """True when s is one balanced parenthesized group, e.g. ``(z + 1)``."""
    if not (s.startswith("(") and s.endswith(")")):
        return False
    depth = 0
    for k, ch in enumerate(s):
        depth += {"(": 1, ")": -1}.get(ch, 0)
        if depth == 0 and k < len(s) - 1:
            return False
    return True


_ATOM = re.compile(r"[\w^*]+")
_DEN_ATOM = re.compile(r"[\w^]+")  # a/b*c would misparse


class RatFunc1:
    """Element num/den of k(x) in lowest terms with monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if not isinstance(num, UniPoly):
            num = UniPoly([num])
        if den is None:
            den = UniPoly([1])
        elif not isinstance(den, UniPoly):
            den = UniPoly([den])
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            self.num, self.den = num, UniPoly([1])
            return
        g = poly_gcd(num, den)
        if g.degree() > 0:
            num, den = num // g, den // g
        inv = den.lead().inverse()
        self.num = num * inv
        self.den = den * inv

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_one(self) -> bool:
        return self.num == self.den

    def __mul__(self, other) -> RatFunc1:
        if not isinstance(other, RatFunc1):
            other = RatFunc1(other)
        return RatFunc1(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __add__(self, other) -> RatFunc1:
        if not isinstance(other, RatFunc1):
            other = RatFunc1(other)
        return RatFunc1(self.num * other.den + other.num * self.den, self.den * other.den)

    def inverse(self) -> RatFunc1:
        if self.is_zero():
            raise ZeroDivisionError("division by zero")
        return RatFunc1(self.den, self.num)

    def __truediv__(self, other) -> RatFunc1:
        if not isinstance(other, RatFunc1):
            other = RatFunc1(other)
        return self * other.inverse()

    def __pow__(self, k: int) -> RatFunc1:
        if k < 0:
            return self.inverse() ** (-k)
        return RatFunc1(self.num ** k, self.den ** k)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RatFunc1):
            if isinstance(other, (int, Fraction, Cyclo)):
                other = RatFunc1(other)
            else:
                return NotImplemented
        return self.num == other.num and self.den == other.den

    __hash__ = None

    def render(self, var: str = "x") -> str:
        num = self.num.render(var)
        if self.den == UniPoly([1]):
            return num
        return f"{_wrap(num)}/{_wrap(self.den.render(var), _DEN_ATOM)}"

    def __repr__(self) -> str:
        return f"RatFunc1({self.render()!r})"

"""Exact arithmetic in cyclotomic fields Q(zeta_m).

An element is stored as its coefficient vector on 1, z, ..., z^(phi(m)-1),
reduced modulo the m-th cyclotomic polynomial. Mixed-order arithmetic lifts
both operands to the lcm of their orders.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd

__all__ = [
    "Cyclo",
    "cyclotomic_polynomial",
    "euler_phi",
    "root_of_unity",
]


def _lcm(a: int, b: int) -> int:
    return a // gcd(a, b) * b


def euler_phi(m: int) -> int:
    result, k, p = m, m, 2
    while p * p <= k:
        if k % p == 0:
            while k % p == 0:
                k //= p
            result -= result // p
        p += 1
    if k > 1:
        result -= result // k
    return result


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> tuple[int, ...]:
    """Coefficients of Phi_m, lowest degree first.

    Computed by exact division of x^m - 1 by Phi_d for every proper divisor d.
    """
    if m < 1:
        raise ValueError("cyclotomic polynomial needs m >= 1")
    num = [-1] + [0] * (m - 1) + [1]
    for d in range(1, m):
        if m % d == 0:
            num = _int_exact_div(num, list(cyclotomic_polynomial(d)))
    return tuple(num)


def _int_exact_div(num: list[int], den: list[int]) -> list[int]:
    # den is monic, so the quotient stays integral
    num = list(num)
    dn = len(den) - 1
    q = [0] * (len(num) - dn)
    for k in range(len(q) - 1, -1, -1):
        c = num[k + dn]
        q[k] = c
        if c:
            for i, d in enumerate(den):
                num[k + i] -= c * d
    if any(num[:dn]):
        raise ArithmeticError("inexact division of integer polynomials")
    return q


def _reduce(coeffs: list[Fraction], m: int) -> tuple[Fraction, ...]:
    phi = cyclotomic_polynomial(m)
    deg = len(phi) - 1
    c = list(coeffs) + [Fraction(0)] * max(0, deg - len(coeffs))
    for k in range(len(c) - 1, deg - 1, -1):
        top = c[k]
        if top:
            base = k - deg
            for i in range(deg):
                if phi[i]:
                    c[base + i] -= top * phi[i]
    return tuple(c[:deg])


# -- dense univariate helpers over Q, lowest degree first ---------------------

def _trim(p: list[Fraction]) -> list[Fraction]:
    while p and not p[-1]:
        p.pop()
    return p


def _qpoly_divmod(a: list[Fraction], b: list[Fraction]):
    a = _trim(list(a))
    b = _trim(list(b))
    if not b:
        raise ZeroDivisionError("division by zero")
    q = [Fraction(0)] * max(0, len(a) - len(b) + 1)
    lead = b[-1]
    while len(a) >= len(b) and a:
        c = a[-1] / lead
        k = len(a) - len(b)
        q[k] = c
        for i, bi in enumerate(b):
            a[k + i] -= c * bi
        _trim(a)
    return q, a


def _qpoly_mul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _qpoly_sub(a, b):
    n = max(len(a), len(b))
    out = [Fraction(0)] * n
    for i, x in enumerate(a):
        out[i] += x
    for i, y in enumerate(b):
        out[i] -= y
    return _trim(out)


def _qpoly_inverse_mod(a: list[Fraction], m: list[Fraction]) -> list[Fraction]:
    """Inverse of a modulo m via the extended Euclidean algorithm."""
    r0, r1 = _trim(list(m)), _trim(list(a))
    s0, s1 = [], [Fraction(1)]
    while r1:
        q, r = _qpoly_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _qpoly_sub(s0, _qpoly_mul(q, s1))
    if len(r0) != 1:
        raise ZeroDivisionError("division by zero")
    inv = r0[0]
    return [c / inv for c in s0]


class Cyclo:
    """Element of Q(zeta_m); `order` is m."""

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs, order: int = 1, *, reduced: bool = False):
        if order < 1:
            raise ValueError("order must be positive")
        self.order = order
        if reduced:
            self.coeffs = coeffs
        else:
            self.coeffs = _reduce([Fraction(c) for c in coeffs], order)

    # -- constructors --------------------------------------------------------
    @classmethod
    def rational(cls, value, order: int = 1) -> Cyclo:
        deg = euler_phi(order)
        return cls((Fraction(value),) + (Fraction(0),) * (deg - 1), order, reduced=True)

    @classmethod
    def zeta(cls, order: int, power: int = 1) -> Cyclo:
        power %= order
        return cls([0] * power + [1], order)

    # -- structure ------------------------------------------------------------
    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def is_one(self) -> bool:
        return self.coeffs[0] == 1 and self.is_rational()

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    def lift(self, order: int) -> Cyclo:
        """Re-express in Q(zeta_order); order must be a multiple of self.order."""
        if order == self.order:
            return self
        if order % self.order:
            raise ValueError(f"cannot lift order {self.order} to {order}")
        step = order // self.order
        dense = [Fraction(0)] * (step * (len(self.coeffs) - 1) + 1)
        for k, c in enumerate(self.coeffs):
            dense[k * step] = c
        return Cyclo(dense, order)

    def _coerce(self, other) -> tuple[Cyclo, Cyclo]:
        if not isinstance(other, Cyclo):
            if isinstance(other, (int, Fraction)):
                return self, Cyclo.rational(other, self.order)
            return NotImplemented, NotImplemented
        if other.order == self.order:
            return self, other
        m = _lcm(self.order, other.order)
        return self.lift(m), other.lift(m)

    # -- arithmetic ------------------------------------------------------------
    def __add__(self, other):
        a, b = self._coerce(other)
        if a is NotImplemented:
            return NotImplemented
        return Cyclo(tuple(x + y for x, y in zip(a.coeffs, b.coeffs)), a.order, reduced=True)

    __radd__ = __add__

    def __neg__(self) -> Cyclo:
        return Cyclo(tuple(-x for x in self.coeffs), self.order, reduced=True)

    def __sub__(self, other):
        a, b = self._coerce(other)
        if a is NotImplemented:
            return NotImplemented
        return Cyclo(tuple(x - y for x, y in zip(a.coeffs, b.coeffs)), a.order, reduced=True)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Cyclo(tuple(x * other for x in self.coeffs), self.order, reduced=True)
        a, b = self._coerce(other)
        if a is NotImplemented:
            return NotImplemented
        if b.is_rational():
            s = b.coeffs[0]
            return Cyclo(tuple(x * s for x in a.coeffs), a.order, reduced=True)
        if a.is_rational():
            s = a.coeffs[0]
            return Cyclo(tuple(x * s for x in b.coeffs), a.order, reduced=True)
        return Cyclo(_qpoly_mul(a.coeffs, b.coeffs), a.order)

    __rmul__ = __mul__

    def inverse(self) -> Cyclo:
        if self.is_zero():
            raise ZeroDivisionError("division by zero")
        if self.is_rational():
            return Cyclo.rational(1 / self.coeffs[0], self.order)
        phi = [Fraction(c) for c in cyclotomic_polynomial(self.order)]
        return Cyclo(_qpoly_inverse_mod(list(self.coeffs), phi), self.order)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                raise ZeroDivisionError("division by zero")
            return self * (1 / Fraction(other))
        a, b = self._coerce(other)
        if a is NotImplemented:
            return NotImplemented
        return a * b.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k: int) -> Cyclo:
        if k < 0:
            return self.inverse() ** (-k)
        result = Cyclo.rational(1, self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- comparison -------------------------------------------------------------
    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coeffs[0] == other
        if not isinstance(other, Cyclo):
            return NotImplemented
        a, b = self._coerce(other)
        return a.coeffs == b.coeffs

    def __hash__(self) -> int:
        # rational values hash like Fractions so that mixed orders agree
        if self.is_rational():
            return hash(self.coeffs[0])
        return hash((self.order, self.coeffs))

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __repr__(self) -> str:
        return f"Cyclo({self.render()!r}, order={self.order})"

    def render(self, var: str = "z") -> str:
        """Canonical text, highest power of the root first, e.g. ``z - 1``."""
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                mono = var if k == 1 else f"{var}^{k}"
                body = mono if mag == 1 else f"{mag}*{mono}"
            terms.append(("-" if c < 0 else "+", body))
        if not terms:
            return "0"
        sign, body = terms[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    def root_of_unity_exponent(self) -> int | None:
        """k with self == zeta_w^k for w = |mu(Q(zeta_m))|, or None."""
        w = self.order if self.order % 2 == 0 else 2 * self.order
        x = self.lift(w) if w != self.order else self
        for k in range(w):
            if Cyclo.zeta(w, k) == x:
                return k
        return None


def root_of_unity(order: int) -> Cyclo:
    """The distinguished primitive `order`-th root of unity z."""
    return Cyclo.zeta(order)


def roots_of_unity_count(order: int) -> int:
    """Number of roots of unity in Q(zeta_order)."""
    return order if order % 2 == 0 else 2 * order

"""Discrete valuations on Q(zeta)(f, t) and the lexicographic rank-two valuation.

Residue fields are returned as univariate rational functions in ``x``:
at t the surviving variable is f, at f (or at a prime f + h(t)) it is t.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import total_ordering
from math import gcd

from .cyclotomic import Cyclo, roots_of_unity_count
from .polynomial import Poly2, RatFunc, parse_poly, poly_exact_divide
from .univariate import RatFunc1, UniPoly, squarefree_decomposition

__all__ = [
    "RankTwoValue",
    "PrimeSpec",
    "prime_valuation",
    "residue",
    "lex_valuation",
    "lex_valuation_composite",
    "is_dth_power",
    "power_class_order",
    "STANDARD_PRIMES",
]


@total_ordering
@dataclass(frozen=True)
class RankTwoValue:
    """Element (w, u) of Z x Z with lexicographic order."""

    w: int
    u: int

    def __add__(self, other: RankTwoValue) -> RankTwoValue:
        return RankTwoValue(self.w + other.w, self.u + other.u)

    def __sub__(self, other: RankTwoValue) -> RankTwoValue:
        return RankTwoValue(self.w - other.w, self.u - other.u)

    def __neg__(self) -> RankTwoValue:
        return RankTwoValue(-self.w, -self.u)

    def __lt__(self, other: RankTwoValue) -> bool:
        return (self.w, self.u) < (other.w, other.u)

    def as_tuple(self) -> tuple[int, int]:
        return (self.w, self.u)


@dataclass(frozen=True)
class PrimeSpec:
    """A height-one prime of Q(zeta)[f, t]: t, f, or a polynomial monic in f.

    Irreducibility of `poly` is taken on trust.
    """

    tag: str
    poly: Poly2 | None = None
    label: str = ""

    def __post_init__(self):
        if self.tag not in ("var-t", "var-f", "poly"):
            raise ValueError(f"unknown prime tag {self.tag!r}")
        if self.tag == "poly":
            p = self.poly
            if p is None or p.is_zero() or p.is_constant():
                raise ValueError("prime polynomial must be nonconstant")
            if p.degree_f() == 0:
                raise ValueError("prime polynomial must involve f (use 't' for the t-adic prime)")
            if not p.coeff_in_f(p.degree_f()).is_one():
                raise ValueError(f"prime {p.render()} is not monic in f")

    @classmethod
    def parse(cls, text: str, zeta_order: int = 1) -> PrimeSpec:
        s = text.strip()
        if s == "t":
            return cls("var-t", label="t")
        if s == "f":
            return cls("var-f", label="f")
        p = parse_poly(s, zeta_order)
        if p == Poly2.t():
            return cls("var-t", label="t")
        if p == Poly2.f():
            return cls("var-f", label="f")
        return cls("poly", p, label=p.render())

    @property
    def name(self) -> str:
        if self.tag == "var-t":
            return "t"
        if self.tag == "var-f":
            return "f"
        return self.label or self.poly.render()

    def to_json(self) -> dict:
        return {"prime": self.name}

    def __str__(self) -> str:
        return self.name


STANDARD_PRIMES = tuple(
    PrimeSpec.parse(s) for s in ("t", "f", "f - t", "f - t^2", "f - t - t^2")
)


# -- prime valuations -------------------------------------------------------------

def _poly_valuation(p: Poly2, prime: PrimeSpec) -> tuple[int, Poly2]:
    """(k, p / prime^k) with k maximal."""
    if p.is_zero():
        raise ValueError("valuation of zero")
    if prime.tag == "var-t":
        k = p.content()[1]
        return k, p.shift(0, -k)
    if prime.tag == "var-f":
        k = p.content()[0]
        return k, p.shift(-k, 0)
    k = 0
    while True:
        q = poly_exact_divide(p, prime.poly)
        if q is None:
            return k, p
        p, k = q, k + 1


def prime_valuation(r: RatFunc, prime: PrimeSpec) -> int:
    if r.is_zero():
        raise ValueError("valuation of zero")
    return _poly_valuation(r.num, prime)[0] - _poly_valuation(r.den, prime)[0]


def _reduce_poly(p: Poly2, prime: PrimeSpec) -> UniPoly:
    if prime.tag == "var-t":
        return UniPoly.from_map(p.eval_t0())
    if prime.tag == "var-f":
        return UniPoly.from_map(p.eval_f0())
    if prime.poly.degree_f() != 1:
        raise ValueError(f"residue field at {prime.name} is not a rational function field")
    # prime = f + h(t), so f = -h(t) in the residue field
    h = prime.poly.coeff_in_f(0)
    sub = p.subs_f(-h)
    return UniPoly.from_map(sub.eval_f0())


def residue(r: RatFunc, prime: PrimeSpec) -> RatFunc1:
    """Image of a unit r in the residue field at `prime`, as a function of x."""
    if r.is_zero():
        raise ValueError("not a unit at " + prime.name)
    kn, num = _poly_valuation(r.num, prime)
    kd, den = _poly_valuation(r.den, prime)
    if kn != kd:
        raise ValueError(f"not a unit at {prime.name}")
    return RatFunc1(_reduce_poly(num, prime), _reduce_poly(den, prime))


# -- rank-two valuation ------------------------------------------------------------

def lex_valuation(r: RatFunc) -> RankTwoValue:
    """Composite of the f-adic valuation with the t-adic valuation of the residue.

    For a polynomial this is the lexicographic minimum exponent pair.
    """
    if r.is_zero():
        raise ValueError("valuation of zero")
    a, b = r.num.lex_min(), r.den.lex_min()
    return RankTwoValue(a[0] - b[0], a[1] - b[1])


def lex_valuation_composite(r: RatFunc) -> RankTwoValue:
    """Same value computed literally: w = v_f(r), then v_t of (r f^-w) mod f."""
    if r.is_zero():
        raise ValueError("valuation of zero")
    f_prime = STANDARD_PRIMES[1]
    w = prime_valuation(r, f_prime)
    unit = r * RatFunc(Poly2.f()) ** (-w)
    red = residue(unit, f_prime)
    u = _uni_order_at_zero(red.num) - _uni_order_at_zero(red.den)
    return RankTwoValue(w, u)


def _uni_order_at_zero(p: UniPoly) -> int:
    return next(k for k, c in enumerate(p.coeffs) if c)


# -- power classes in the residue field ------------------------------------------

def _int_root(n: int, d: int) -> int | None:
    if n < 0:
        return None
    if n in (0, 1):
        return n
    lo, hi = 1, 1 << (n.bit_length() // d + 1)
    while lo <= hi:
        mid = (lo + hi) // 2
        v = mid ** d
        if v == n:
            return mid
        if v < n:
            lo = mid + 1
        else:
            hi = mid - 1
    return None


def _constant_is_dth_power(c: Cyclo, d: int) -> bool:
    """Decide whether c is a d-th power in Q(zeta_m), m = c.order.

    c must be (positive rational) x (root of unity). If x^d is a root of unity
    then so is x, so the root-of-unity part is settled inside the finite group
    mu(Q(zeta_m)). The rational part is settled by integer root extraction,
    which is exact only when that part is a perfect d-th power in Q; otherwise
    a d-th root may still exist in Q(zeta_m) (e.g. sqrt 2 in Q(zeta_8)) and we
    refuse rather than guess.
    """
    if d == 1:
        return True
    w = roots_of_unity_count(c.order)
    m = c.order if c.order % 2 == 0 else 2 * c.order
    x = c.lift(m) if m != c.order else c
    for k in range(w):
        rho = Cyclo.zeta(m, k)
        rest = x * rho.inverse()
        if rest.is_rational() and rest.coeffs[0] > 0:
            u = rest.coeffs[0]
            nroot, droot = _int_root(u.numerator, d), _int_root(u.denominator, d)
            if nroot is None or droot is None:
                raise ValueError("unsupported constant for power test")
            # rho = zeta_w^k is a d-th power in mu_w iff gcd(d, w) divides k
            return k % gcd(d, w) == 0
    raise ValueError("unsupported constant for power test")


def is_dth_power(r: RatFunc1, d: int) -> bool:
    """Whether r is a d-th power in k(x), k = Q(zeta).

    Uses square-free decompositions of numerator and denominator, so no
    factorization is needed: a monic polynomial is a d-th power iff every
    multiplicity in its square-free decomposition is divisible by d.
    """
    if r.is_zero():
        raise ValueError("power test of zero")
    for part in (r.num, r.den):
        if part.degree() > 0:
            if any(k % d for _, k in squarefree_decomposition(part)):
                return False
    const = r.num.lead() * r.den.lead().inverse()
    return _constant_is_dth_power(const, d)


def power_class_order(r: RatFunc1, n: int) -> int:
    """Order of the class of r in k(x)^* / (k(x)^*)^n.

    Equals n / d for the largest d | n with r a d-th power; this identity
    needs the n-th roots of unity in k, which holds whenever k contains the
    zeta of the symbol algebra being studied.
    """
    if n < 1:
        raise ValueError("n must be positive")
    best = 1
    for d in range(2, n + 1):
        if n % d == 0 and is_dth_power(r, d):
            best = d
    return n // best

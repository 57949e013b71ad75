"""Symbol algebras (a, b)_{zeta, n} over F = Q(zeta)(f, t).

The algebra has F-basis Y^i Z^j, 0 <= i, j < n, with Y^n = a, Z^n = b and
YZ = zeta ZY. Moving Z^j past Y^k costs zeta^(-jk), so

    (Y^i Z^j)(Y^k Z^l) = zeta^(-jk) Y^(i+k) Z^(j+l),

and an exponent reaching n wraps around with one factor of a (or b).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .cyclotomic import Cyclo
from .linalg import kernel_vector, rank, solve
from .polynomial import RatFunc, parse_ratfunc
from .valuations import RankTwoValue, lex_valuation

__all__ = [
    "SymbolAlgebraSpec",
    "SymbolElement",
    "sym_mul",
    "DivisionReport",
    "division_value_criterion",
    "value_subgroup_order",
    "maximal_subfield_check",
    "sym_inverse",
    "witness_spec",
    "WITNESS_A",
    "WITNESS_B",
    "MAX_INVERSE_DEGREE",
]

WITNESS_A = "f/(f - t)"
WITNESS_B = "(f - t^2)/(f - t - t^2)"
MAX_INVERSE_DEGREE = 12


@dataclass(frozen=True, eq=False)
class SymbolAlgebraSpec:
    n: int
    zeta: Cyclo
    a: RatFunc
    b: RatFunc

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be positive")
        if self.a.is_zero() or self.b.is_zero():
            raise ValueError("a and b must be nonzero")
        if not (self.zeta ** self.n).is_one():
            raise ValueError("zeta is not an n-th root of unity")
        for k in range(1, self.n):
            if self.n % k == 0 and (self.zeta ** k).is_one():
                raise ValueError("zeta is not a primitive n-th root of unity")
        object.__setattr__(self, "_zpow", tuple(self.zeta ** k for k in range(self.n)))

    @classmethod
    def parse(cls, n: int, a: str, b: str, zeta_order: int | None = None) -> SymbolAlgebraSpec:
        m = n if zeta_order is None else zeta_order
        if m % n:
            raise ValueError("zeta_order must be a multiple of n")
        zeta = Cyclo.zeta(m, m // n)
        return cls(n, zeta, parse_ratfunc(a, m), parse_ratfunc(b, m))

    @property
    def zeta_order(self) -> int:
        return self.zeta.order

    def zeta_power(self, k: int) -> Cyclo:
        return self._zpow[k % self.n]

    def same(self, other: SymbolAlgebraSpec) -> bool:
        return self is other or (
            self.n == other.n and self.zeta == other.zeta
            and self.a == other.a and self.b == other.b
        )

    def to_json(self) -> dict:
        return {"n": self.n, "zeta_order": self.zeta_order,
                "a": self.a.render(), "b": self.b.render()}

    @classmethod
    def from_json(cls, data: dict) -> SymbolAlgebraSpec:
        return cls.parse(int(data["n"]), data["a"], data["b"], int(data["zeta_order"]))

    # -- element constructors --------------------------------------------------------
    def element(self, coeffs: dict) -> SymbolElement:
        return SymbolElement(self, coeffs)

    def one(self) -> SymbolElement:
        return SymbolElement(self, {(0, 0): RatFunc(1)})

    def scalar(self, c) -> SymbolElement:
        return SymbolElement(self, {(0, 0): c if isinstance(c, RatFunc) else RatFunc(c)})

    def basis(self, i: int, j: int) -> SymbolElement:
        """Y^i Z^j for i, j >= 0; each wraparound past n contributes a (or b)."""
        c = self.a ** (i // self.n) * self.b ** (j // self.n)
        return SymbolElement(self, {(i % self.n, j % self.n): c})

    def Y(self) -> SymbolElement:
        return self.basis(1, 0)

    def Z(self) -> SymbolElement:
        return self.basis(0, 1)


def witness_spec(n: int) -> SymbolAlgebraSpec:
    """The symbol algebra with a = f/(f-t), b = (f-t^2)/(f-t-t^2)."""
    return SymbolAlgebraSpec.parse(n, WITNESS_A, WITNESS_B)


class SymbolElement:
    __slots__ = ("spec", "coeffs")

    def __init__(self, spec: SymbolAlgebraSpec, coeffs: dict):
        n = spec.n
        clean: dict[tuple[int, int], RatFunc] = {}
        for (i, j), c in coeffs.items():
            if not isinstance(c, RatFunc):
                c = RatFunc(c)
            if c.is_zero():
                continue
            key = (i % n, j % n)
            clean[key] = clean[key] + c if key in clean else c
        self.spec = spec
        self.coeffs = {k: v for k, v in clean.items() if not v.is_zero()}

    def _check(self, other: SymbolElement) -> None:
        if not self.spec.same(other.spec):
            raise ValueError("symbol algebra mismatch")

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: SymbolElement) -> SymbolElement:
        self._check(other)
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out[k] + c if k in out else c
        return SymbolElement(self.spec, out)

    def __neg__(self) -> SymbolElement:
        return SymbolElement(self.spec, {k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other: SymbolElement) -> SymbolElement:
        return self + (-other)

    def scale(self, c) -> SymbolElement:
        return SymbolElement(self.spec, {k: v * c for k, v in self.coeffs.items()})

    def __mul__(self, other) -> SymbolElement:
        if isinstance(other, SymbolElement):
            return sym_mul(self, other)
        return self.scale(other)

    def __rmul__(self, other) -> SymbolElement:
        return self.scale(other)

    def __pow__(self, k: int) -> SymbolElement:
        result = self.spec.one()
        for _ in range(k):
            result = sym_mul(result, self)
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, SymbolElement):
            return NotImplemented
        if not self.spec.same(other.spec) or self.coeffs.keys() != other.coeffs.keys():
            return False
        return all(c == other.coeffs[k] for k, c in self.coeffs.items())

    __hash__ = None

    def vector(self) -> list[RatFunc]:
        n = self.spec.n
        zero = RatFunc(0)
        return [self.coeffs.get((i, j), zero) for i in range(n) for j in range(n)]

    def render(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for (i, j) in sorted(self.coeffs):
            mono = "*".join(s for s in (
                "" if i == 0 else ("Y" if i == 1 else f"Y^{i}"),
                "" if j == 0 else ("Z" if j == 1 else f"Z^{j}"),
            ) if s)
            c = self.coeffs[(i, j)].render()
            parts.append(f"({c})" + (f"*{mono}" if mono else ""))
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"SymbolElement({self.render()})"


def sym_mul(x: SymbolElement, y: SymbolElement) -> SymbolElement:
    x._check(y)
    spec = x.spec
    n = spec.n
    out: dict[tuple[int, int], RatFunc] = {}
    for (i, j), c in x.coeffs.items():
        for (k, l), d in y.coeffs.items():
            coeff = c * d
            tw = (-j * k) % n
            if tw:
                coeff = coeff * spec.zeta_power(tw)
            ik, jl = i + k, j + l
            if ik >= n:
                coeff = coeff * spec.a
                ik -= n
            if jl >= n:
                coeff = coeff * spec.b
                jl -= n
            key = (ik, jl)
            out[key] = out[key] + coeff if key in out else coeff
    return SymbolElement(spec, out)


# -- division certificate -----------------------------------------------------------

def value_subgroup_order(v1: tuple[int, int], v2: tuple[int, int], n: int) -> int:
    """Order of the subgroup of (Z/n)^2 generated by the images of v1, v2."""
    seen = set()
    for x in range(n):
        for y in range(n):
            seen.add(((x * v1[0] + y * v2[0]) % n, (x * v1[1] + y * v2[1]) % n))
    return len(seen)


def det_criterion(v1: tuple[int, int], v2: tuple[int, int], n: int) -> bool:
    return gcd(v1[0] * v2[1] - v1[1] * v2[0], n) == 1


@dataclass
class DivisionReport:
    division: bool
    value_a: RankTwoValue
    value_b: RankTwoValue
    determinant: int
    subgroup_order: int

    def to_json(self) -> dict:
        return {
            "division": self.division,
            "value_a": list(self.value_a.as_tuple()),
            "value_b": list(self.value_b.as_tuple()),
            "determinant": self.determinant,
            "subgroup_order": self.subgroup_order,
        }


def division_value_criterion(spec: SymbolAlgebraSpec) -> DivisionReport:
    """Value-group division test.

    With v the lexicographic rank-two valuation, the algebra is certified
    division when v(a), v(b) generate Z^2 / nZ^2, i.e. when their determinant
    is a unit mod n. The determinant test and an explicit enumeration of the
    generated subgroup must agree.
    """
    va, vb = lex_valuation(spec.a), lex_valuation(spec.b)
    n = spec.n
    det = va.w * vb.u - va.u * vb.w
    by_det = gcd(det, n) == 1
    order = value_subgroup_order(va.as_tuple(), vb.as_tuple(), n)
    if by_det != (order == n * n):
        raise RuntimeError("determinant test and subgroup enumeration disagree")
    return DivisionReport(by_det, va, vb, det, order)


# -- maximal commutative subfield ---------------------------------------------------

@dataclass
class SubfieldReport:
    q: int
    q_prime: int
    commute: bool
    y_power_is_a: bool
    z_power_is_b: bool
    dimension: int

    @property
    def ok(self) -> bool:
        return (self.commute and self.y_power_is_a and self.z_power_is_b
                and self.dimension == self.q * self.q_prime)

    def to_json(self) -> dict:
        return {"q": self.q, "q_prime": self.q_prime, "commute": self.commute,
                "y^q=a": self.y_power_is_a, "z^q'=b": self.z_power_is_b,
                "dimension": self.dimension, "ok": self.ok}


def maximal_subfield_check(spec: SymbolAlgebraSpec, q: int, q_prime: int) -> SubfieldReport:
    """Check that y = Y^q', z = Z^q span a commutative subalgebra of dim q q'."""
    if q * q_prime != spec.n:
        raise ValueError("n != q * q'")
    y = spec.Y() ** q_prime
    z = spec.Z() ** q
    commute = sym_mul(y, z) == sym_mul(z, y)
    ya = (y ** q) == spec.scalar(spec.a)
    zb = (z ** q_prime) == spec.scalar(spec.b)
    powers_y = [spec.one()]
    for _ in range(q - 1):
        powers_y.append(sym_mul(powers_y[-1], y))
    basis = []
    for yi in powers_y:
        w = yi
        for _ in range(q_prime):
            basis.append(w.vector())
            w = sym_mul(w, z)
    dim = rank(basis)
    return SubfieldReport(q, q_prime, commute, ya, zb, dim)


# -- inverses -------------------------------------------------------------------------

@dataclass
class InverseResult:
    inverse: SymbolElement | None
    zero_divisor: SymbolElement | None


def left_multiplication_matrix(x: SymbolElement) -> list[list[RatFunc]]:
    spec = x.spec
    n = spec.n
    cols = [sym_mul(x, spec.basis(i, j)).vector() for i in range(n) for j in range(n)]
    return [[cols[c][r] for c in range(n * n)] for r in range(n * n)]


def sym_inverse(x: SymbolElement) -> InverseResult:
    """Solve x u = 1 by exact elimination; on failure return w != 0 with x w = 0."""
    if x.is_zero():
        raise ZeroDivisionError("inverse of zero")
    spec = x.spec
    n = spec.n
    if n > MAX_INVERSE_DEGREE:
        raise ValueError(f"n > {MAX_INVERSE_DEGREE} not supported for inversion")
    L = left_multiplication_matrix(x)
    rhs = spec.one().vector()
    sol = solve(L, rhs)
    keys = [(i, j) for i in range(n) for j in range(n)]
    if sol is not None:
        return InverseResult(SymbolElement(spec, dict(zip(keys, sol))), None)
    ker = kernel_vector(L)
    return InverseResult(None, SymbolElement(spec, dict(zip(keys, ker))))

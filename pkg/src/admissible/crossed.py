"""Kummer Galois algebras, 2-cocycles and crossed products.

L = F[y, z] / (y^q - a, z^q' - b) carries the action of P = Z/q x Z/q'
with (s, s') sending y to zeta_q^s y and z to zeta_q'^s' z, where
zeta_q = zeta^q' and zeta_q' = zeta^q for a primitive qq'-th root zeta.

Crossed products follow u_s u_t = c(s, t) u_{st} and u_s x = s(x) u_s.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import product

from .cyclotomic import Cyclo
from .groups import PermGroup, factorize, inv, mul
from .linalg import rank, solve
from .polynomial import RatFunc, parse_ratfunc
from .valuations import PrimeSpec, is_dth_power, prime_valuation, residue

__all__ = [
    "KummerAlgebra",
    "KummerElement",
    "nondegenerate_kummer_check",
    "Cocycle",
    "trivial_cocycle",
    "symbol_cocycle",
    "cocycle_check",
    "CrossedProduct",
    "CrossedProductElement",
    "associativity_check",
    "InducedAlgebra",
    "induced_algebra",
]

GroupElt = tuple[int, int]


class KummerAlgebra:
    def __init__(self, q: int, q_prime: int, a: RatFunc, b: RatFunc, zeta: Cyclo | None = None):
        if q < 1 or q_prime < 1:
            raise ValueError("q and q' must be positive")
        if a.is_zero() or b.is_zero():
            raise ValueError("a and b must be nonzero")
        n = q * q_prime
        self.q, self.q_prime = q, q_prime
        self.a, self.b = a, b
        self.zeta = Cyclo.zeta(n) if zeta is None else zeta
        self._zpow = [self.zeta ** k for k in range(n)]

    @property
    def n(self) -> int:
        return self.q * self.q_prime

    @property
    def dimension(self) -> int:
        return self.n

    def zeta_power(self, k: int) -> Cyclo:
        return self._zpow[k % self.n]

    def group(self) -> list[GroupElt]:
        return [(s, t) for s in range(self.q) for t in range(self.q_prime)]

    def group_add(self, g: GroupElt, h: GroupElt) -> GroupElt:
        return ((g[0] + h[0]) % self.q, (g[1] + h[1]) % self.q_prime)

    def group_neg(self, g: GroupElt) -> GroupElt:
        return ((-g[0]) % self.q, (-g[1]) % self.q_prime)

    def keys(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(self.q) for j in range(self.q_prime)]

    def element(self, coeffs: dict) -> KummerElement:
        return KummerElement(self, coeffs)

    def one(self) -> KummerElement:
        return KummerElement(self, {(0, 0): RatFunc(1)})

    def scalar(self, c) -> KummerElement:
        return KummerElement(self, {(0, 0): c})

    def monomial(self, i: int, j: int, c=1) -> KummerElement:
        return KummerElement(self, {(i, j): c})

    def y(self) -> KummerElement:
        return self.monomial(1 % self.q, 0) if self.q > 1 else self.scalar(self.a)

    def z(self) -> KummerElement:
        return self.monomial(0, 1 % self.q_prime) if self.q_prime > 1 else self.scalar(self.b)

    def same(self, other: KummerAlgebra) -> bool:
        return self is other or (
            self.q == other.q and self.q_prime == other.q_prime
            and self.zeta == other.zeta and self.a == other.a and self.b == other.b
        )

    def fixed_subspace_dimension(self) -> int:
        """Dimension over F of the elements fixed by all of P."""
        keys = self.keys()
        rows = []
        for g in ((1 % self.q, 0), (0, 1 % self.q_prime)):
            for k in keys:
                e = self.monomial(*k)
                diff = galois_apply(g, e) - e
                rows.append([diff.coeffs.get(c, RatFunc(0)) for c in keys])
        # rows[k] is the image of basis vector k, so rank counts the moved directions
        return len(keys) - rank(rows)


class KummerElement:
    __slots__ = ("alg", "coeffs")

    def __init__(self, alg: KummerAlgebra, coeffs: dict):
        q, qp = alg.q, alg.q_prime
        clean: dict[tuple[int, int], RatFunc] = {}
        for (i, j), c in coeffs.items():
            if not isinstance(c, RatFunc):
                c = RatFunc(c)
            if c.is_zero():
                continue
            # exponents outside range are rewritten with y^q = a, z^q' = b
            wi, i = divmod(i, q)
            wj, j = divmod(j, qp)
            if wi:
                c = c * alg.a ** wi
            if wj:
                c = c * alg.b ** wj
            key = (i, j)
            clean[key] = clean[key] + c if key in clean else c
        self.alg = alg
        self.coeffs = {k: v for k, v in clean.items() if not v.is_zero()}

    def _check(self, other: KummerElement) -> None:
        if not self.alg.same(other.alg):
            raise ValueError("Kummer algebra mismatch")

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: KummerElement) -> KummerElement:
        self._check(other)
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out[k] + c if k in out else c
        return KummerElement(self.alg, out)

    def __neg__(self) -> KummerElement:
        return KummerElement(self.alg, {k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other: KummerElement) -> KummerElement:
        return self + (-other)

    def scale(self, c) -> KummerElement:
        return KummerElement(self.alg, {k: v * c for k, v in self.coeffs.items()})

    def __mul__(self, other) -> KummerElement:
        if isinstance(other, KummerElement):
            return kummer_mul(self, other)
        return self.scale(other)

    def __rmul__(self, other) -> KummerElement:
        return self.scale(other)

    def __pow__(self, k: int) -> KummerElement:
        if k < 0:
            return kummer_inverse(self) ** (-k)
        result = self.alg.one()
        for _ in range(k):
            result = kummer_mul(result, self)
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, KummerElement):
            return NotImplemented
        if not self.alg.same(other.alg) or self.coeffs.keys() != other.coeffs.keys():
            return False
        return all(c == other.coeffs[k] for k, c in self.coeffs.items())

    __hash__ = None

    def is_monomial(self) -> bool:
        return len(self.coeffs) == 1

    def to_json(self) -> dict:
        return {f"{i},{j}": c.render() for (i, j), c in sorted(self.coeffs.items())}

    @classmethod
    def from_json(cls, alg: KummerAlgebra, data: dict) -> KummerElement:
        coeffs = {}
        for key, text in data.items():
            i, j = (int(s) for s in key.split(","))
            coeffs[(i, j)] = parse_ratfunc(text, alg.zeta.order)
        return cls(alg, coeffs)

    def render(self) -> str:
        if not self.coeffs:
            return "0"
        out = []
        for (i, j), c in sorted(self.coeffs.items()):
            mono = "*".join(s for s in (
                "" if i == 0 else ("y" if i == 1 else f"y^{i}"),
                "" if j == 0 else ("z" if j == 1 else f"z^{j}"),
            ) if s)
            out.append(f"({c.render()})" + (f"*{mono}" if mono else ""))
        return " + ".join(out)

    def __repr__(self) -> str:
        return f"KummerElement({self.render()})"


def kummer_mul(x: KummerElement, w: KummerElement) -> KummerElement:
    x._check(w)
    alg = x.alg
    out: dict[tuple[int, int], RatFunc] = {}
    for (i, j), c in x.coeffs.items():
        for (k, l), d in w.coeffs.items():
            coeff = c * d
            ik, jl = i + k, j + l
            if ik >= alg.q:
                coeff = coeff * alg.a
                ik -= alg.q
            if jl >= alg.q_prime:
                coeff = coeff * alg.b
                jl -= alg.q_prime
            key = (ik, jl)
            out[key] = out[key] + coeff if key in out else coeff
    return KummerElement(alg, out)


def galois_apply(g: GroupElt, x: KummerElement) -> KummerElement:
    """(s, s') acts on y^i z^j by zeta^(q' s i + q s' j)."""
    alg = x.alg
    s, sp = g
    out = {}
    for (i, j), c in x.coeffs.items():
        k = (alg.q_prime * s * i + alg.q * sp * j) % alg.n
        out[(i, j)] = c * alg.zeta_power(k) if k else c
    return KummerElement(alg, out)


def kummer_inverse(x: KummerElement) -> KummerElement:
    """Inverse by closed form for monomials, by a linear solve otherwise."""
    alg = x.alg
    if x.is_zero():
        raise ZeroDivisionError("inverse of zero")
    if x.is_monomial():
        ((i, j), c), = x.coeffs.items()
        out = c.inverse()
        if i:
            out = out * alg.a.inverse()
        if j:
            out = out * alg.b.inverse()
        return KummerElement(alg, {((-i) % alg.q, (-j) % alg.q_prime): out})
    keys = alg.keys()
    cols = [kummer_mul(x, alg.monomial(*k)) for k in keys]
    zero = RatFunc(0)
    A = [[cols[c].coeffs.get(r, zero) for c in range(len(keys))] for r in keys]
    sol = solve(A, [RatFunc(1) if k == (0, 0) else zero for k in keys])
    if sol is None:
        raise ZeroDivisionError("element of the Kummer algebra is not invertible")
    return KummerElement(alg, dict(zip(keys, sol)))


# -- Kummer nondegeneracy --------------------------------------------------------

@dataclass
class KummerCertificate:
    element: str
    exponent: int
    prime_divisor: int
    method: str | None
    prime: str | None
    detail: int | str | None = None

    @property
    def ok(self) -> bool:
        return self.method is not None

    def to_json(self) -> dict:
        return {"element": self.element, "exponent": self.exponent, "d": self.prime_divisor,
                "method": self.method, "prime": self.prime, "detail": self.detail}


def _not_a_power(x: RatFunc, d: int, primes, label: str, exponent: int) -> KummerCertificate:
    for P in primes:
        v = prime_valuation(x, P)
        if v % d:
            return KummerCertificate(label, exponent, d, "valuation", P.name, v)
    for P in primes:
        if prime_valuation(x, P) == 0:
            try:
                res = residue(x, P)
                if not is_dth_power(res, d):
                    return KummerCertificate(label, exponent, d, "residue", P.name, res.render())
            except ValueError:
                continue
    return KummerCertificate(label, exponent, d, None, None)


def nondegenerate_kummer_check(q: int, q_prime: int, a: RatFunc, b: RatFunc,
                               primes) -> tuple[bool, list[KummerCertificate]]:
    """Certify that a is not a d-th power for d | q, d > 1 (same for b, q').

    Only prime d need checking. A certificate is a listed prime where the
    valuation is not divisible by d, or where x is a unit whose residue is not
    a d-th power. A missing certificate means inconclusive, reported as False.
    """
    certs = []
    for x, e, label in ((a, q, "a"), (b, q_prime, "b")):
        for d in sorted(factorize(e)):
            certs.append(_not_a_power(x, d, primes, label, e))
    return all(c.ok for c in certs), certs


# -- cocycles -----------------------------------------------------------------------

@dataclass
class Cocycle:
    alg: KummerAlgebra
    values: dict[tuple[GroupElt, GroupElt], KummerElement]

    def __call__(self, g: GroupElt, h: GroupElt) -> KummerElement:
        return self.values[(g, h)]

    def perturbed(self, g: GroupElt, h: GroupElt, factor) -> Cocycle:
        vals = dict(self.values)
        vals[(g, h)] = vals[(g, h)] * factor
        return Cocycle(self.alg, vals)

    def to_json(self) -> dict:
        elems = self.alg.group()
        return {
            "group": [list(g) for g in elems],
            "values": [[self.values[(g, h)].to_json() for h in elems] for g in elems],
        }

    @classmethod
    def from_json(cls, alg: KummerAlgebra, data: dict) -> Cocycle:
        elems = [tuple(g) for g in data["group"]]
        if sorted(elems) != sorted(alg.group()):
            raise ValueError("cocycle table does not match the group")
        vals = {}
        for g, row in zip(elems, data["values"]):
            for h, cell in zip(elems, row):
                vals[(g, h)] = KummerElement.from_json(alg, cell)
        return cls(alg, vals)


def trivial_cocycle(alg: KummerAlgebra) -> Cocycle:
    G = alg.group()
    return Cocycle(alg, {(g, h): alg.one() for g in G for h in G})


def symbol_cocycle(alg: KummerAlgebra) -> Cocycle:
    """Cocycle of the symbol algebra (a, b)_{zeta, qq'} relative to L.

    With W = Z^(q-1) and u_(s,s') = W^s Y^s', conjugation by u_(s,s') acts on
    y = Y^q', z = Z^q as the Galois element (s, s'), and

        u_(s,s') u_(r,r') = zeta^((q-1) s' r) [z^(q-1)]^[s+r >= q]
                            [zeta_q^k y]^[s'+r' >= q'] u_(s+r, s'+r'),

    k = (s + r) mod q. The bracketed factors appear only on wraparound.
    """
    q, qp = alg.q, alg.q_prime
    vals = {}
    for (s, sp) in alg.group():
        for (r, rp) in alg.group():
            c = alg.one().scale(alg.zeta_power((q - 1) * sp * r))
            if s + r >= q:
                c = c * alg.monomial(0, q - 1)
            if sp + rp >= qp:
                k = (s + r) % q
                c = c * alg.monomial(1, 0).scale(alg.zeta_power(qp * k))
            vals[((s, sp), (r, rp))] = c
    return Cocycle(alg, vals)


@dataclass
class CocycleReport:
    ok: bool
    failing_triple: tuple[GroupElt, GroupElt, GroupElt] | None
    checked: int
    exhaustive: bool


def cocycle_check(c: Cocycle, *, sample: int = 2000, seed: int = 0) -> CocycleReport:
    """c(s,t) c(st,r) == s(c(t,r)) c(s,tr) for all triples (sampled if |G| > 24)."""
    alg = c.alg
    G = alg.group()
    for key, v in c.values.items():
        try:
            kummer_inverse(v)
        except ZeroDivisionError:
            raise ValueError(f"cocycle value at {key} is not invertible") from None
    triples = list(product(G, repeat=3))
    exhaustive = len(G) <= 24
    if not exhaustive:
        triples = random.Random(seed).sample(triples, min(sample, len(triples)))
    add = alg.group_add
    for n, (s, t, r) in enumerate(triples, 1):
        lhs = c(s, t) * c(add(s, t), r)
        rhs = galois_apply(s, c(t, r)) * c(s, add(t, r))
        if lhs != rhs:
            return CocycleReport(False, (s, t, r), n, exhaustive)
    return CocycleReport(True, None, len(triples), exhaustive)


# -- crossed products -------------------------------------------------------------------

class CrossedProduct:
    def __init__(self, cocycle: Cocycle):
        self.cocycle = cocycle
        self.alg = cocycle.alg

    @property
    def dimension(self) -> int:
        return len(self.alg.group()) * self.alg.dimension

    def u(self, g: GroupElt) -> CrossedProductElement:
        return CrossedProductElement(self, {g: self.alg.one()})

    def element(self, coeffs: dict) -> CrossedProductElement:
        return CrossedProductElement(self, coeffs)

    def basis(self) -> list[CrossedProductElement]:
        return [CrossedProductElement(self, {g: self.alg.monomial(*k)})
                for g in self.alg.group() for k in self.alg.keys()]


class CrossedProductElement:
    __slots__ = ("cp", "coeffs")

    def __init__(self, cp: CrossedProduct, coeffs: dict):
        self.cp = cp
        self.coeffs = {g: x for g, x in coeffs.items() if not x.is_zero()}

    def __add__(self, other: CrossedProductElement) -> CrossedProductElement:
        out = dict(self.coeffs)
        for g, x in other.coeffs.items():
            out[g] = out[g] + x if g in out else x
        return CrossedProductElement(self.cp, out)

    def __mul__(self, other: CrossedProductElement) -> CrossedProductElement:
        return crossed_product_mul(self, other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, CrossedProductElement):
            return NotImplemented
        if self.coeffs.keys() != other.coeffs.keys():
            return False
        return all(x == other.coeffs[g] for g, x in self.coeffs.items())

    __hash__ = None

    def __repr__(self) -> str:
        return " + ".join(f"[{x.render()}]u{g}" for g, x in sorted(self.coeffs.items())) or "0"


def crossed_product_mul(x: CrossedProductElement, w: CrossedProductElement) -> CrossedProductElement:
    """(x u_s)(w u_t) = x s(w) c(s, t) u_{st}."""
    if x.cp is not w.cp:
        raise ValueError("crossed product mismatch")
    cp = x.cp
    alg = cp.alg
    out: dict[GroupElt, KummerElement] = {}
    for s, xs in x.coeffs.items():
        for t, wt in w.coeffs.items():
            term = xs * galois_apply(s, wt) * cp.cocycle(s, t)
            st = alg.group_add(s, t)
            out[st] = out[st] + term if st in out else term
    return CrossedProductElement(cp, out)


@dataclass
class AssociativityReport:
    ok: bool
    failing_triple: tuple | None
    checked: int


def associativity_check(cp: CrossedProduct, *, full_basis: bool = True) -> AssociativityReport:
    """(xy)w == x(yw) over basis triples, pure u-triples first."""
    G = cp.alg.group()
    checked = 0
    us = {g: cp.u(g) for g in G}
    for s, t, r in product(G, repeat=3):
        checked += 1
        if (us[s] * us[t]) * us[r] != us[s] * (us[t] * us[r]):
            return AssociativityReport(False, (s, t, r), checked)
    if full_basis:
        B = cp.basis()
        for x, y, w in product(B, repeat=3):
            checked += 1
            if (x * y) * w != x * (y * w):
                return AssociativityReport(False, (x, y, w), checked)
    return AssociativityReport(True, None, checked)


# -- induced Galois algebras ----------------------------------------------------------

@dataclass
class InducedAlgebra:
    """Ind_H^G of an H-Galois algebra: one copy of it per left coset gH.

    `action[g]` gives, for each coset index i, the pair (j, h) with
    g r_i = r_j h, r_i the chosen coset representatives and h in H.
    """

    label: str
    representatives: list
    action: dict = field(default_factory=dict)

    @property
    def components(self) -> int:
        return len(self.representatives)

    def permutation(self, g) -> tuple[int, ...]:
        return tuple(j for j, _ in self.action[g])

    def is_split(self) -> bool:
        return all(h == _ident(h) for row in self.action.values() for _, h in row)


def _ident(h):
    return tuple(range(len(h)))


def induced_algebra(H: PermGroup, G: PermGroup, label: str = "L") -> InducedAlgebra:
    if H.degree != G.degree or not H.elements <= G.elements:
        raise ValueError("H is not a subgroup of G")
    reps: list = []
    coset_of: dict = {}
    for g in G.sorted_elements():
        if g in coset_of:
            continue
        idx = len(reps)
        reps.append(g)
        for h in H.elements:
            coset_of[mul(g, h)] = idx
    action = {}
    for g in G.sorted_elements():
        row = []
        for r in reps:
            gr = mul(g, r)
            j = coset_of[gr]
            row.append((j, mul(inv(reps[j]), gr)))
        action[g] = row
    return InducedAlgebra(label, reps, action)

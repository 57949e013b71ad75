"""Finite permutation groups by brute-force closure.

Permutations are tuples: ``p[i]`` is the image of point i. Products compose
right to left, ``mul(p, q)[i] == p[q[i]]``.

Everything here is exhaustive by design; groups are capped at
``ADMISSIBLE_MAX_GROUP_ORDER`` elements (default 200000).
"""

from __future__ import annotations

import os
import random
import re
from collections import deque
from dataclasses import dataclass, field
from math import gcd

__all__ = [
    "GroupTooLarge",
    "PermGroup",
    "SylowData",
    "MetacyclicDescriptor",
    "Verdict",
    "parse_cycles",
    "format_cycles",
    "factorize",
    "sylow",
    "abelian_rank",
    "abelian_decompose",
    "is_metacyclic",
    "admissibility_verdict",
    "metacyclic_descriptor_group",
]

DEFAULT_MAX_ORDER = 200_000

Perm = tuple[int, ...]


class GroupTooLarge(RuntimeError):
    pass


def max_group_order() -> int:
    raw = os.environ.get("ADMISSIBLE_MAX_GROUP_ORDER")
    return int(raw) if raw else DEFAULT_MAX_ORDER


# -- permutations ------------------------------------------------------------------

def identity(degree: int) -> Perm:
    return tuple(range(degree))


def mul(p: Perm, q: Perm) -> Perm:
    return tuple(p[i] for i in q)


def inv(p: Perm) -> Perm:
    out = [0] * len(p)
    for i, j in enumerate(p):
        out[j] = i
    return tuple(out)


def power(p: Perm, k: int) -> Perm:
    if k < 0:
        p, k = inv(p), -k
    result = identity(len(p))
    while k:
        if k & 1:
            result = mul(result, p)
        p = mul(p, p)
        k >>= 1
    return result


def perm_order(p: Perm) -> int:
    e = identity(len(p))
    k, x = 1, p
    while x != e:
        x = mul(x, p)
        k += 1
    return k


def parse_cycles(text: str, degree: int) -> Perm:
    """Parse cycle notation such as ``(0 1)(2 3 4)``; ``()`` is the identity."""
    img = list(range(degree))
    body = text.strip()
    if not re.fullmatch(r"(\(\s*[\d\s,]*\))*", body):
        raise ValueError(f"bad cycle notation {text!r}")
    seen: set[int] = set()
    for cyc in re.findall(r"\(([^)]*)\)", body):
        pts = [int(x) for x in re.split(r"[\s,]+", cyc.strip()) if x]
        if len(set(pts)) != len(pts) or seen.intersection(pts):
            raise ValueError(f"cycles in {text!r} are not disjoint")
        seen.update(pts)
        for a in pts:
            if not 0 <= a < degree:
                raise ValueError(f"point {a} outside 0..{degree - 1}")
        for k, a in enumerate(pts):
            img[a] = pts[(k + 1) % len(pts)]
    return tuple(img)


def format_cycles(p: Perm) -> str:
    seen = set()
    out = []
    for start in range(len(p)):
        if start in seen or p[start] == start:
            continue
        cyc = [start]
        seen.add(start)
        x = p[start]
        while x != start:
            cyc.append(x)
            seen.add(x)
            x = p[x]
        out.append("(" + " ".join(map(str, cyc)) + ")")
    return "".join(out) or "()"


def closure(gens, degree: int, bound: int | None = None) -> frozenset:
    """All products of the generators (breadth-first)."""
    bound = max_group_order() if bound is None else bound
    e = identity(degree)
    seen = {e}
    queue = deque([e])
    gens = [g for g in gens if g != e]
    while queue:
        x = queue.popleft()
        for g in gens:
            y = mul(g, x)
            if y not in seen:
                seen.add(y)
                if len(seen) > bound:
                    raise GroupTooLarge("group too large for enumeration")
                queue.append(y)
    return frozenset(seen)


def factorize(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


# -- groups --------------------------------------------------------------------------

class PermGroup:
    """Group generated by permutations of {0, ..., degree-1}.

    The element set is computed on first use and cached on the instance.
    """

    def __init__(self, degree: int, generators=(), name: str = ""):
        gens = []
        for g in generators:
            g = tuple(g)
            if len(g) != degree or sorted(g) != list(range(degree)):
                raise ValueError(f"{g} is not a permutation of {degree} points")
            gens.append(g)
        self.degree = degree
        self.generators = tuple(gens)
        self.name = name
        self._elements: frozenset | None = None
        self._sorted: list | None = None

    @classmethod
    def from_cycles(cls, degree: int, cycles, name: str = "") -> PermGroup:
        return cls(degree, [parse_cycles(c, degree) for c in cycles], name=name)

    @classmethod
    def from_json(cls, data: dict) -> PermGroup:
        if "degree" not in data or "generators" not in data:
            raise ValueError("group input needs 'degree' and 'generators'")
        return cls.from_cycles(int(data["degree"]), data["generators"], name=data.get("name", ""))

    def to_json(self) -> dict:
        out = {"degree": self.degree, "generators": [format_cycles(g) for g in self.generators]}
        if self.name:
            out["name"] = self.name
        return out

    @property
    def identity(self) -> Perm:
        return identity(self.degree)

    @property
    def elements(self) -> frozenset:
        if self._elements is None:
            self._elements = closure(self.generators, self.degree)
        return self._elements

    def sorted_elements(self) -> list:
        if self._sorted is None:
            self._sorted = sorted(self.elements)
        return self._sorted

    @property
    def order(self) -> int:
        return len(self.elements)

    def subgroup(self, gens, name: str = "") -> PermGroup:
        return PermGroup(self.degree, gens, name=name)

    def is_abelian(self) -> bool:
        gs = self.generators
        return all(mul(a, b) == mul(b, a) for i, a in enumerate(gs) for b in gs[i + 1:])

    def __repr__(self) -> str:
        label = self.name or "PermGroup"
        return f"<{label}: degree {self.degree}, {len(self.generators)} generators>"


# -- Sylow subgroups -----------------------------------------------------------------

@dataclass
class SylowData:
    prime: int
    group: PermGroup
    order: int
    is_abelian: bool
    rank: int | None
    decomposition: tuple[int, int] | None = None

    @property
    def elements(self) -> frozenset:
        return self.group.elements

    def report(self) -> dict:
        return {
            "prime": self.prime,
            "order": self.order,
            "abelian": self.is_abelian,
            "rank": self.rank,
            "decomposition": list(self.decomposition) if self.decomposition else None,
        }


def _normalizes(x: Perm, gens, elements: frozenset) -> bool:
    xi = inv(x)
    return all(mul(mul(x, g), xi) in elements for g in gens)


def sylow_subgroup(g: PermGroup, p: int, rng: random.Random | None = None) -> PermGroup:
    """A Sylow p-subgroup, grown inside successive normalizers.

    While P is not Sylow, N_G(P)/P has an element of order p (Sylow theory),
    i.e. some x normalizing P with x not in P and x^p in P; then <P, x> is a
    p-group of order p|P|. Candidates are scanned in sorted order, or shuffled
    when `rng` is given.
    """
    target = p ** factorize(g.order).get(p, 0)
    candidates = list(g.sorted_elements())
    if rng is not None:
        rng.shuffle(candidates)
    gens: list[Perm] = []
    elements = frozenset([g.identity])
    while len(elements) < target:
        for x in candidates:
            if x in elements or power(x, p) not in elements:
                continue
            if _normalizes(x, gens, elements):
                gens.append(x)
                elements = closure(gens, g.degree)
                break
        else:  # pragma: no cover - excluded by Sylow's theorems
            raise RuntimeError("normalizer growth stalled")
    sub = g.subgroup(gens, name=f"Sylow-{p}")
    sub._elements = elements
    return sub


def abelian_rank(P: PermGroup, p: int) -> tuple[bool, int | None]:
    """(is_abelian, rank) for a p-group; rank from counting x with x^p = 1."""
    if not P.is_abelian():
        return False, None
    count = sum(1 for x in P.elements if power(x, p) == P.identity)
    r, c = 0, count
    while c % p == 0:
        c //= p
        r += 1
    if c != 1:
        raise ValueError("p-torsion count is not a power of p; is P a p-group?")
    return True, r


def cyclic_subgroup(x: Perm) -> frozenset:
    e = identity(len(x))
    out = {e}
    y = x
    while y != e:
        out.add(y)
        y = mul(y, x)
    return frozenset(out)


def abelian_decompose(P: PermGroup, p: int | None = None) -> tuple[int, int]:
    """(q, q') with P = C_q x C_q', q >= q', for abelian P of rank at most 2."""
    n = P.order
    if p is None:
        primes = factorize(n)
        if len(primes) > 1:
            raise ValueError("not rank <= 2 abelian: not a p-group")
        p = next(iter(primes), 2)
    ok, r = abelian_rank(P, p)
    if not ok or r > 2:
        raise ValueError("not rank <= 2 abelian")
    if n == 1:
        return (1, 1)
    elems = P.sorted_elements()
    g = max(elems, key=perm_order)
    q = perm_order(g)
    if q == n:
        return (q, 1)
    cg = cyclic_subgroup(g)
    for h in elems:
        qh = perm_order(h)
        if q * qh == n and cyclic_subgroup(h) & cg == {P.identity}:
            return (q, qh)
    raise ValueError("not rank <= 2 abelian: no complement found")


def sylow(g: PermGroup, p: int, rng: random.Random | None = None) -> SylowData:
    P = sylow_subgroup(g, p, rng)
    ab, r = abelian_rank(P, p)
    dec = abelian_decompose(P, p) if ab and r <= 2 else None
    return SylowData(p, P, P.order, ab, r, dec)


# -- metacyclicity -------------------------------------------------------------------

@dataclass
class MetacyclicWitness:
    normal_generator: Perm
    normal_order: int
    quotient_generator: Perm
    quotient_order: int


def is_metacyclic(g: PermGroup) -> tuple[bool, MetacyclicWitness | None]:
    """Search cyclic N = <x> normal in G with G/N cyclic."""
    n = g.order
    tried: set[frozenset] = set()
    gens = g.generators
    for x in g.sorted_elements():
        N = cyclic_subgroup(x)
        if N in tried:
            continue
        tried.add(N)
        if not all(mul(mul(s, x), inv(s)) in N for s in gens):
            continue
        need = n // len(N)
        for y in g.sorted_elements():
            k, z = 1, y
            while z not in N:
                z = mul(z, y)
                k += 1
            if k == need:
                return True, MetacyclicWitness(x, len(N), y, k)
    return False, None


# -- verdicts --------------------------------------------------------------------------

@dataclass
class Verdict:
    admissible: bool
    mode: str
    order: int
    factorization: dict[int, int]
    sylows: list[SylowData] = field(default_factory=list)
    metacyclic: dict[int, bool] = field(default_factory=dict)
    excluded_prime: int | None = None

    def report(self) -> dict:
        rows = []
        for s in self.sylows:
            row = s.report()
            if s.prime in self.metacyclic:
                row["metacyclic"] = self.metacyclic[s.prime]
            row["passes"] = self._passes(s)
            rows.append(row)
        return {
            "mode": self.mode,
            "order": self.order,
            "factorization": {str(p): k for p, k in sorted(self.factorization.items())},
            "excluded_prime": self.excluded_prime,
            "admissible": self.admissible,
            "sylow": rows,
        }

    def _passes(self, s: SylowData) -> bool:
        if s.prime == self.excluded_prime:
            return True
        if self.mode == "rank2":
            return s.is_abelian and s.rank <= 2
        return self.metacyclic[s.prime]


MODES = ("rank2", "metacyclic")


def admissibility_verdict(g: PermGroup, mode: str = "rank2",
                          excluded_prime: int | None = None) -> Verdict:
    """Every Sylow subgroup (away from `excluded_prime`) abelian of rank <= 2,
    or metacyclic in ``metacyclic`` mode."""
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}")
    fac = factorize(g.order)
    v = Verdict(True, mode, g.order, fac, excluded_prime=excluded_prime)
    for p in sorted(fac):
        s = sylow(g, p)
        v.sylows.append(s)
        if mode == "metacyclic":
            v.metacyclic[p] = is_metacyclic(s.group)[0]
        if not v._passes(s):
            v.admissible = False
    return v


# -- metacyclic descriptors -------------------------------------------------------------

@dataclass(frozen=True)
class MetacyclicDescriptor:
    """C_e x| C_m with tau^-1 sigma tau = sigma^i."""

    e: int
    m: int
    i: int

    def validate(self) -> None:
        e, m, i = self.e, self.m, self.i
        if e < 1 or m < 1:
            raise ValueError("invalid descriptor: e and m must be positive")
        if e == 1:
            if i != 1:
                raise ValueError("invalid descriptor: i must be 1 when e = 1")
            return
        if not 1 <= i < e:
            raise ValueError("invalid descriptor: need 1 <= i < e")
        if gcd(i, e) != 1:
            raise ValueError("invalid descriptor: gcd(i, e) != 1")
        if pow(i, m, e) != 1 % e:
            raise ValueError("invalid descriptor: i^m != 1 mod e")


def metacyclic_descriptor_group(d: MetacyclicDescriptor) -> tuple[PermGroup, bool]:
    """Left-regular permutation model of C_e x|_i C_m on e*m points.

    Element sigma^a tau^b is point a + e*b. Since tau sigma tau^-1 = sigma^j
    with j = i^-1 mod e, left multiplication by tau sends sigma^a tau^b to
    sigma^(a j) tau^(b+1).
    """
    d.validate()
    e, m, i = d.e, d.m, d.i
    j = pow(i, -1, e) if e > 1 else 1
    sigma = [0] * (e * m)
    tau = [0] * (e * m)
    for b in range(m):
        for a in range(e):
            pt = a + e * b
            sigma[pt] = (a + 1) % e + e * b
            tau[pt] = (a * j) % e + e * ((b + 1) % m)
    g = PermGroup(e * m, [tuple(sigma), tuple(tau)], name=f"C{e}x|C{m}[i={i}]")
    if g.order != e * m:  # pragma: no cover - the model is always regular
        raise RuntimeError("descriptor group has wrong order")
    by_group = g.is_abelian()
    by_exponent = i % e == 1 % e
    if by_group != by_exponent:
        raise RuntimeError(f"abelian test disagrees for {d}: group {by_group}, exponent {by_exponent}")
    return g, by_group

"""Ramification of symbol-algebra classes at height-one primes.

For a symbol (a, b)_n the ramification at a discrete valuation v is read off
the tame symbol

    r = (-1)^(v(a) v(b)) a^(v(b)) b^(-v(a))  (a unit at v),

reduced into the residue field. Its class modulo n-th powers stands in for
the ramification character; the order of that class is its period.
"""

from __future__ import annotations

from dataclasses import dataclass

from .polynomial import RatFunc
from .symbols import SymbolAlgebraSpec, division_value_criterion
from .univariate import RatFunc1
from .valuations import PrimeSpec, power_class_order, prime_valuation, residue

__all__ = [
    "RamificationDatum",
    "tame_symbol",
    "determined_by_ramification",
    "unramified_on_list",
]


@dataclass
class RamificationDatum:
    prime: PrimeSpec
    residue_class: RatFunc1
    modulus: int
    order: int
    valuations: tuple[int, int]

    def to_json(self) -> dict:
        return {"prime": self.prime.name, "residue": self.residue_class.render(),
                "order": self.order}


def tame_symbol_element(a: RatFunc, b: RatFunc, prime: PrimeSpec) -> tuple[RatFunc, int, int]:
    va, vb = prime_valuation(a, prime), prime_valuation(b, prime)
    r = a ** vb * b ** (-va)
    if (va * vb) % 2:
        r = -r
    return r, va, vb


def tame_symbol(spec: SymbolAlgebraSpec, prime: PrimeSpec) -> RamificationDatum:
    r, va, vb = tame_symbol_element(spec.a, spec.b, prime)
    if prime_valuation(r, prime) != 0:  # pragma: no cover - the formula always gives a unit
        raise ArithmeticError("tame symbol undefined")
    res = residue(r, prime)
    return RamificationDatum(prime, res, spec.n, power_class_order(res, spec.n), (va, vb))


@dataclass
class RamificationVerdict:
    holds: bool
    witness: PrimeSpec | None
    data: list[RamificationDatum]


def determined_by_ramification(spec: SymbolAlgebraSpec, primes) -> RamificationVerdict:
    """Whether some listed prime carries ramification of full period n.

    Comparing against n presumes the class has index n, which only the
    value-group division test certifies here; uncertified specs are refused.
    A datum of order n then pins the period at n as well.
    """
    if not division_value_criterion(spec).division:
        raise ValueError("period unknown for non-certified spec")
    data = []
    witness = None
    for P in primes:
        d = tame_symbol(spec, P)
        data.append(d)
        if witness is None and d.order == spec.n:
            witness = P
    return RamificationVerdict(witness is not None, witness, data)


def unramified_on_list(spec: SymbolAlgebraSpec, primes) -> bool:
    return all(tame_symbol(spec, P).order == 1 for P in primes)

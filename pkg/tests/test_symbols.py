import random

import oracles as O
import pytest

from admissible.cyclotomic import Cyclo
from admissible.polynomial import RatFunc
from admissible.symbols import (SymbolAlgebraSpec, det_criterion, division_value_criterion,
                                witness_spec, maximal_subfield_check, sym_inverse, sym_mul)

F, T = RatFunc.f(), RatFunc.t()


def split_spec(n=2):
    return SymbolAlgebraSpec.parse(n, "1", "1")


def test_spec_validation():
    with pytest.raises(ValueError):
        SymbolAlgebraSpec(4, Cyclo.zeta(4, 2), F, T)      # -1 is not primitive of order 4
    with pytest.raises(ValueError):
        SymbolAlgebraSpec.parse(2, "0", "t")
    s = witness_spec(3)
    assert SymbolAlgebraSpec.from_json(s.to_json()).same(s)
    assert s.to_json() == {"n": 3, "zeta_order": 3, "a": "f/(f - t)",
                           "b": "(f - t^2)/(f - t^2 - t)"}


@pytest.mark.parametrize("n", [2, 3, 4, 6])
def test_defining_relations(n):
    s = witness_spec(n)
    Y, Z = s.Y(), s.Z()
    assert Y ** n == s.scalar(s.a)
    assert Z ** n == s.scalar(s.b)
    assert sym_mul(Y, Z) == sym_mul(Z, Y).scale(s.zeta)
    assert sym_mul(s.one(), Y + Z) == Y + Z


def test_sym_mul_examples():
    s = witness_spec(3)
    assert sym_mul(s.Y(), s.Z()) == s.basis(1, 1)
    assert sym_mul(s.Z(), s.Y()) == s.basis(1, 1).scale(s.zeta ** -1)
    assert sym_mul(s.Y() ** 2, s.Y()) == s.scalar(s.a)
    with pytest.raises(ValueError):
        sym_mul(s.Y(), witness_spec(2).Y())


@pytest.mark.parametrize("n", [2, 3])
def test_associativity_small(n):
    s = witness_spec(n)
    B = [s.basis(i, j) for i in range(n) for j in range(n)]
    for x in B:
        for y in B:
            for w in B:
                assert sym_mul(sym_mul(x, y), w) == sym_mul(x, sym_mul(y, w))


def test_division_criterion_examples():
    rep = division_value_criterion(witness_spec(5))
    assert rep.division and rep.determinant == 1
    assert rep.value_a.as_tuple() == (1, -1) and rep.value_b.as_tuple() == (0, 1)
    rep = division_value_criterion(SymbolAlgebraSpec.parse(4, "f", "f"))
    assert not rep.division and rep.subgroup_order <= 4
    assert division_value_criterion(SymbolAlgebraSpec.parse(3, "f", "t")).division


@pytest.mark.parametrize("n", [1, 2, 4, 6, 9])
def test_det_criterion_matches_bfs(n):
    for v in [(a, b, c, d) for a in range(n) for b in range(n) for c in range(n)
              for d in range(n)]:
        assert det_criterion(v[:2], v[2:], n) == (O.value_subgroup_bfs(v[:2], v[2:], n) == n * n)


@pytest.mark.parametrize("q,qp", [(2, 3), (6, 1), (2, 2), (3, 1), (1, 1)])
def test_maximal_subfield(q, qp):
    rep = maximal_subfield_check(witness_spec(q * qp), q, qp)
    assert rep.ok and rep.dimension == q * qp
    with pytest.raises(ValueError):
        maximal_subfield_check(witness_spec(q * qp), q + 1, qp)


def test_inverse_examples():
    s = witness_spec(3)
    res = sym_inverse(s.Y())
    assert res.inverse == s.basis(2, 0).scale(s.a.inverse())
    assert sym_inverse(s.one()).inverse == s.one()
    with pytest.raises(ZeroDivisionError):
        sym_inverse(s.scalar(0))


def test_split_spec_zero_divisor():
    s = split_spec()
    res = sym_inverse(s.one() + s.Y())
    assert res.inverse is None
    w = res.zero_divisor
    assert not w.is_zero()
    assert sym_mul(s.one() + s.Y(), w).is_zero()
    # the witness is a scalar multiple of 1 - Y
    c = w.coeffs[(0, 0)]
    assert w == (s.one() - s.Y()).scale(c)


def _random_element(s, rng, terms=2):
    coeffs = {}
    pool = [RatFunc(rng.randint(-2, 2)), F, T, F - T, RatFunc(rng.randint(1, 3)) + T]
    for _ in range(terms):
        coeffs[(rng.randrange(s.n), rng.randrange(s.n))] = rng.choice(pool)
    return s.element(coeffs)


def test_inverses_in_certified_division_algebra():
    s = witness_spec(2)
    assert division_value_criterion(s).division
    rng = random.Random(0)
    found = 0
    while found < 50:
        x = _random_element(s, rng)
        if x.is_zero():
            continue
        res = sym_inverse(x)
        assert res.zero_divisor is None and res.inverse is not None
        assert sym_mul(x, res.inverse) == s.one() == sym_mul(res.inverse, x)
        found += 1


def test_inverses_degree_three():
    s = witness_spec(3)
    rng = random.Random(1)
    for _ in range(2):
        x = _random_element(s, rng, terms=2)
        if x.is_zero():
            continue
        u = sym_inverse(x).inverse
        assert sym_mul(x, u) == s.one()

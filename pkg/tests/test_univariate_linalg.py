import pytest
from hypothesis import given
from hypothesis import strategies as st

from admissible.linalg import bareiss, clear_denominators, kernel_vector, rank, solve
from admissible.polynomial import RatFunc
from admissible.univariate import RatFunc1, UniPoly, poly_gcd, squarefree_decomposition

x = UniPoly.x()
F, T = RatFunc.f(), RatFunc.t()


def test_divmod_and_gcd():
    p = (x + UniPoly([1])) ** 2 * (x - UniPoly([2]))
    q, r = p.divmod(x - UniPoly([2]))
    assert r.is_zero() and q == (x + UniPoly([1])) ** 2
    assert poly_gcd(p, (x + UniPoly([1])) * x) == x + UniPoly([1])


def test_squarefree_decomposition():
    p = x ** 3 * (x + UniPoly([1])) ** 2 * (x - UniPoly([3]))
    dec = squarefree_decomposition(p)
    assert dec == [(x - UniPoly([3]), 1), (x + UniPoly([1]), 2), (x, 3)]
    with pytest.raises(ValueError):
        squarefree_decomposition(UniPoly())


@given(st.lists(st.integers(-3, 3), min_size=1, max_size=3),
       st.lists(st.integers(1, 3), min_size=1, max_size=3))
def test_squarefree_reconstructs(roots, mults):
    p = UniPoly([1])
    for r, m in zip(roots, mults):
        p = p * (x - UniPoly([r])) ** m
    prod = UniPoly([1])
    for s, k in squarefree_decomposition(p):
        prod = prod * s ** k
    assert prod == p.monic()


def test_ratfunc1_lowest_terms_and_render():
    r = RatFunc1(x * (x + UniPoly([1])), x * UniPoly([2]))
    assert r.den == UniPoly([1]) and r.render() == "1/2*x + 1/2"
    assert RatFunc1(x + UniPoly([1]), x).render() == "(x + 1)/x"
    assert (RatFunc1(x) ** -2).render() == "1/x^2"


def test_solve_and_rank():
    A = [[F, T], [T, F]]
    sol = solve(A, [F + T, F + T])
    assert sol[0].is_one() and sol[1].is_one()
    assert rank(A) == 2
    S = [[F, T], [F * T, T * T]]
    assert rank(S) == 1 and solve(S, [RatFunc(1), RatFunc(0)]) is None
    v = kernel_vector(S)
    assert not all(c.is_zero() for c in v)
    assert all((S[i][0] * v[0] + S[i][1] * v[1]).is_zero() for i in range(2))


def test_bareiss_pivots():
    M = clear_denominators([[F / T, RatFunc(1)], [RatFunc(1), T / F]])
    _, piv = bareiss(M)
    assert len(piv) == 1

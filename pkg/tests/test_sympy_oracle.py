"""Cross-checks against sympy, used purely as an external oracle."""

import pytest

sympy = pytest.importorskip("sympy")

from admissible.cyclotomic import cyclotomic_polynomial  # noqa: E402
from admissible.univariate import UniPoly, squarefree_decomposition  # noqa: E402

X = sympy.Symbol("x")


@pytest.mark.parametrize("m", range(1, 61))
def test_cyclotomic_matches_sympy(m):
    ref = sympy.Poly(sympy.cyclotomic_poly(m, X), X).all_coeffs()[::-1]
    assert list(cyclotomic_polynomial(m)) == [int(c) for c in ref]


@pytest.mark.parametrize("expr", ["x**3*(x+1)**2*(x-2)", "(x**2+1)**3*(x-1)", "x**4-1",
                                  "(x-3)**5*(x**2+x+1)**2"])
def test_squarefree_matches_sympy(expr):
    p = sympy.Poly(sympy.sympify(expr), X)
    ours = squarefree_decomposition(UniPoly([int(c) for c in p.all_coeffs()[::-1]]))
    _, ref = sympy.sqf_list(p)
    ref_map = {k: [int(c) for c in q.monic().all_coeffs()[::-1]] for q, k in ref}
    assert {k: [c.coeffs[0] for c in s.coeffs] for s, k in ours} == ref_map

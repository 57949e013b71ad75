import random

import oracles as O
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from admissible.groups import (GroupTooLarge, MetacyclicDescriptor, PermGroup, abelian_decompose,
                               abelian_rank, admissibility_verdict, closure, cyclic_subgroup,
                               format_cycles, inv, is_metacyclic, metacyclic_descriptor_group, mul,
                               parse_cycles, sylow, sylow_subgroup)
from admissible.library import (CORPUS, corpus_group, cyclic, direct_product, elementary_abelian,
                                 quaternion, symmetric)


def test_enumerate_examples():
    assert PermGroup.from_cycles(3, ["(0 1)", "(0 1 2)"]).order == 6
    assert quaternion().order == 8 and quaternion().degree == 8
    assert PermGroup(4, []).order == 1


def test_cycles_round_trip():
    p = parse_cycles("(0 2)(1 3 4)", 5)
    assert format_cycles(p) == "(0 2)(1 3 4)"
    assert mul(p, inv(p)) == tuple(range(5))
    with pytest.raises(ValueError):
        parse_cycles("(0 0)", 3)
    with pytest.raises(ValueError):
        PermGroup.from_json({"generators": []})


def test_enumeration_bound(monkeypatch):
    monkeypatch.setenv("ADMISSIBLE_MAX_GROUP_ORDER", "100")
    with pytest.raises(GroupTooLarge, match="group too large for enumeration"):
        symmetric(5).order
    with pytest.raises(GroupTooLarge):
        closure(symmetric(6).generators, 6, bound=10)


def test_sylow_examples():
    s = sylow(symmetric(4), 2)
    assert s.order == 8 and not s.is_abelian
    s = sylow(cyclic(12), 2)
    assert (s.order, s.is_abelian, s.rank, s.decomposition) == (4, True, 1, (4, 1))
    s = sylow(corpus_group("A4"), 2)
    assert (s.order, s.rank, s.decomposition) == (4, 2, (2, 2))
    assert sylow(cyclic(6), 5).order == 1


def test_abelian_rank_examples():
    assert abelian_rank(elementary_abelian(2, 3), 2) == (True, 3)
    assert abelian_rank(direct_product(cyclic(4), cyclic(2)), 2) == (True, 2)
    assert abelian_rank(quaternion(), 2) == (False, None)


def test_abelian_decompose_examples():
    assert abelian_decompose(direct_product(cyclic(4), cyclic(2)), 2) == (4, 2)
    assert abelian_decompose(cyclic(8), 2) == (8, 1)
    assert abelian_decompose(direct_product(cyclic(3), cyclic(3)), 3) == (3, 3)
    with pytest.raises(ValueError, match="not rank <= 2 abelian"):
        abelian_decompose(elementary_abelian(2, 3), 2)
    with pytest.raises(ValueError, match="not rank <= 2 abelian"):
        abelian_decompose(quaternion(), 2)


@pytest.mark.parametrize("name", list(CORPUS))
def test_sylow_against_oracles(name):
    g = corpus_group(name)
    for p in O.primes_of(g.order):
        s = sylow(g, p)
        assert s.order == O.p_part(g.order, p)
        assert s.group.elements <= g.elements
        assert O.closure(list(s.group.elements), g.degree) == s.group.elements
        assert s.is_abelian == O.is_abelian(s.group.elements)
        if s.is_abelian:
            assert s.rank == O.min_generators(s.group.elements) or s.order == 1
        if s.decomposition:
            q, qp = s.decomposition
            assert q >= qp and q * qp == s.order
            assert O.abelian_invariants_match(s.group.elements, q, qp)


@pytest.mark.parametrize("name", ["S4", "A4", "D6", "SL(2,3)", "C2xS3", "C3^2xC2", "A5"])
def test_sylow_runs_are_conjugate(name):
    g = corpus_group(name)
    if g.order > 100:
        pytest.skip("conjugacy search limited to |G| <= 100")
    for p in O.primes_of(g.order):
        P1 = sylow_subgroup(g, p).elements
        for seed in range(3):
            P2 = sylow_subgroup(g, p, random.Random(seed)).elements
            assert any(frozenset(mul(mul(x, h), inv(x)) for h in P1) == P2
                       for x in g.elements)


def test_decomposition_product_set():
    for name in ["C4xC2", "C4xC4", "C3^2", "A4", "C12"]:
        g = corpus_group(name)
        for p in O.primes_of(g.order):
            s = sylow(g, p)
            q, qp = s.decomposition
            elems = s.group.sorted_elements()
            gen = next(x for x in elems if len(cyclic_subgroup(x)) == q)
            # some complement of order q' exists and the product set is P
            ok = False
            for h in elems:
                H = cyclic_subgroup(h)
                if len(H) == qp and H & cyclic_subgroup(gen) == {s.group.identity}:
                    ok = {mul(a, b) for a in cyclic_subgroup(gen) for b in H} == set(elems)
                    break
            assert ok


def test_metacyclic_examples():
    ok, w = is_metacyclic(quaternion())
    assert ok and w.normal_order in (4, 8)
    assert not is_metacyclic(elementary_abelian(2, 3))[0]
    ok, w = is_metacyclic(cyclic(6))
    assert ok and w.normal_order * w.quotient_order == 6


def test_verdict_examples():
    assert admissibility_verdict(corpus_group("A4"), "rank2").admissible
    sl = corpus_group("SL(2,3)")
    assert not admissibility_verdict(sl, "rank2").admissible
    assert admissibility_verdict(sl, "metacyclic").admissible
    assert admissibility_verdict(corpus_group("C3^2xC2"), "rank2").admissible
    # excluding the offending prime flips the verdict
    assert admissibility_verdict(sl, "rank2", excluded_prime=2).admissible
    with pytest.raises(ValueError):
        admissibility_verdict(sl, "bogus")


@pytest.mark.parametrize("e,m,i,order,abelian", [(3, 2, 2, 6, False), (5, 4, 1, 20, True),
                                                  (4, 2, 3, 8, False), (1, 3, 1, 3, True)])
def test_descriptor_examples(e, m, i, order, abelian):
    g, ab = metacyclic_descriptor_group(MetacyclicDescriptor(e, m, i))
    assert g.order == order and ab == abelian


@pytest.mark.parametrize("e,m,i", [(4, 2, 2), (5, 2, 2), (3, 2, 0), (1, 2, 2), (0, 1, 1)])
def test_descriptor_invalid(e, m, i):
    with pytest.raises(ValueError, match="invalid descriptor"):
        metacyclic_descriptor_group(MetacyclicDescriptor(e, m, i))


def test_dihedral_descriptor_matches_oracle():
    g, _ = metacyclic_descriptor_group(MetacyclicDescriptor(4, 2, 3))
    assert O.is_metacyclic(g.elements) and not O.is_abelian(g.elements)


@settings(max_examples=25)
@given(st.lists(st.permutations(range(5)), min_size=1, max_size=2))
def test_closure_matches_oracle(gens):
    gens = [tuple(p) for p in gens]
    g = PermGroup(5, gens)
    assert g.elements == O.closure(gens, 5)

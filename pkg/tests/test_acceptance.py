"""Acceptance criteria, one test each; every test records a PASS/FAIL line.

Run with pytest (lines appear in the terminal summary) or directly with
``python3 tests/test_acceptance.py``.
"""

from __future__ import annotations

import json
import random
import time
from contextlib import contextmanager
from itertools import product
from math import gcd

import oracles as O
from conftest import ACCEPTANCE_LINES
from mutate import mutate

from admissible.crossed import (CrossedProduct, KummerAlgebra, associativity_check, cocycle_check,
                                symbol_cocycle, trivial_cocycle)
from admissible.groups import (MetacyclicDescriptor, admissibility_verdict, is_metacyclic,
                               metacyclic_descriptor_group)
from admissible.library import CORPUS, corpus_group
from admissible.polynomial import RatFunc, parse_ratfunc
from admissible.symbols import SymbolAlgebraSpec, det_criterion, witness_spec, sym_inverse, sym_mul
from admissible.valuations import PrimeSpec, RankTwoValue, lex_valuation, residue
from admissible.witness import build_witness, dumps, verify_certificate

A = parse_ratfunc("f/(f - t)")
B = parse_ratfunc("(f - t^2)/(f - t - t^2)")


@contextmanager
def criterion(number: int, title: str, limit: float):
    t0 = time.perf_counter()
    status, note = "FAIL", ""
    try:
        yield
        status = "PASS"
    except AssertionError as exc:
        note = f" [{exc}]" if str(exc) else ""
        raise
    finally:
        dt = time.perf_counter() - t0
        if status == "PASS" and dt >= limit:
            status, note = "FAIL", f" [runtime {dt:.2f}s exceeds {limit:.0f}s]"
        line = f"{status} criterion {number}: {title} ({dt:.2f}s, limit {limit:.0f}s){note}"
        ACCEPTANCE_LINES.append(line)
        print(line)
    assert dt < limit, f"runtime {dt:.2f}s exceeds {limit}s"


def test_1_anchored_values():
    with criterion(1, "lex valuations (1,-1), (0,1) and residues 1 at t", 1):
        assert lex_valuation(A) == RankTwoValue(1, -1)
        assert lex_valuation(B) == RankTwoValue(0, 1)
        P_t = PrimeSpec.parse("t")
        assert residue(A, P_t).is_one() and residue(B, P_t).is_one()


def test_2_symbol_identities():
    with criterion(2, "symbol relations and exhaustive associativity, n in {2,3,4,6}", 60):
        for n in (2, 3, 4, 6):
            s = witness_spec(n)
            Y, Z = s.Y(), s.Z()
            assert Y ** n == s.scalar(s.a), f"Y^{n} != a"
            assert Z ** n == s.scalar(s.b), f"Z^{n} != b"
            assert sym_mul(Y, Z) == sym_mul(Z, Y).scale(s.zeta), f"YZ != zeta ZY at n={n}"
            basis = [s.basis(i, j) for i in range(n) for j in range(n)]
            prods = {(p, q): sym_mul(basis[p], basis[q])
                     for p in range(n * n) for q in range(n * n)}
            checked = 0
            for p, q, r in product(range(n * n), repeat=3):
                lhs = sym_mul(prods[(p, q)], basis[r])
                rhs = sym_mul(basis[p], prods[(q, r)])
                assert lhs == rhs, f"associativity fails at n={n}, triple {(p, q, r)}"
                checked += 1
            assert checked == n ** 6


def test_3_division_oracle():
    with criterion(3, "gcd-det test equals subgroup enumeration for all n <= 12", 120):
        mismatches = 0
        for n in range(1, 13):
            for v in product(range(n), repeat=4):
                by_det = det_criterion(v[:2], v[2:], n)
                by_enum = O.value_subgroup_bfs(v[:2], v[2:], n) == n * n
                mismatches += by_det != by_enum
        assert mismatches == 0, f"{mismatches} mismatches"


EXPECTED = {"A4": (True, True), "SL(2,3)": (False, True), "C2^3": (False, False),
            "D4": (False, True)}
REQUIRED = ["C6", "S3", "A4", "D4", "Q8", "SL(2,3)", "C2^3", "C4xC2", "C3^2", "C30", "S4"]


def test_4_group_verdicts():
    with criterion(4, "rank2 and metacyclic verdicts match all-subgroup oracles", 60):
        assert len(CORPUS) >= 15 and all(r in CORPUS for r in REQUIRED)
        for name in CORPUS:
            g = corpus_group(name)
            assert g.order <= 60
            E = g.elements
            r2 = admissibility_verdict(g, "rank2").admissible
            mc = admissibility_verdict(g, "metacyclic").admissible
            assert r2 == O.rank2_verdict(E), f"rank2 mismatch on {name}"
            assert mc == O.metacyclic_verdict(E), f"metacyclic mismatch on {name}"
            assert is_metacyclic(g)[0] == O.is_metacyclic(E), f"is_metacyclic mismatch on {name}"
            if name in EXPECTED:
                assert (r2, mc) == EXPECTED[name], f"unexpected verdict for {name}"


def test_5_descriptor_criterion():
    with criterion(5, "descriptor abelian flag equals (i = 1 mod e) for e*m <= 64", 30):
        count = 0
        for e in range(1, 65):
            for m in range(1, 64 // e + 1):
                for i in range(1, max(e, 2)):
                    if e > 1 and (gcd(i, e) != 1 or pow(i, m, e) != 1):
                        continue
                    g, abelian = metacyclic_descriptor_group(MetacyclicDescriptor(e, m, i))
                    assert g.order == e * m
                    assert abelian == (i % e == 1 % e) == g.is_abelian()
                    count += 1
        assert count > 400


def test_6_end_to_end_witness():
    with criterion(6, "witness build/verify for all rank2-true corpus groups, byte-identical", 120):
        seen = 0
        for name in CORPUS:
            g = corpus_group(name)
            if not admissibility_verdict(g, "rank2").admissible:
                continue
            first, second = dumps(build_witness(g)), dumps(build_witness(g))
            assert first == second, f"certificate for {name} not byte-identical"
            cert = json.loads(first)
            rep = verify_certificate(cert, g)
            assert rep.ok, f"{name}: {rep.failures()}"
            assert cert["global"]["gcd_indices"] == 1
            for r in cert["primes"]:
                ram = r["checks"]["determined_by_ramification"]
                assert ram["ok"] and ram["witness_prime"] == "f"
            seen += 1
        assert seen >= 10


def _negative_corpus():
    out = []
    for (q, qp), key, factor in [((2, 2), ((1, 0), (0, 1)), "y"),
                                 ((2, 2), ((1, 1), (1, 1)), "z"),
                                 ((2, 1), ((1, 0), (1, 0)), "y"),
                                 ((3, 1), ((1, 0), (2, 0)), "2"),
                                 ((2, 2), ((0, 1), (1, 0)), "f - t"),
                                 ((4, 1), ((0, 0), (3, 0)), "y")]:
        L = KummerAlgebra(q, qp, A, B)
        fac = L.y() if factor == "y" else L.z() if factor == "z" else L.scalar(parse_ratfunc(factor))
        out.append(symbol_cocycle(L).perturbed(*key, fac))
    return out


def test_7_crossed_product_coupling():
    with criterion(7, "associativity holds for cocycles, fails with a triple for perturbations", 60):
        positives = []
        for q, qp in [(2, 1), (3, 1), (2, 2), (4, 1)]:
            L = KummerAlgebra(q, qp, A, B)
            positives += [symbol_cocycle(L), trivial_cocycle(L)]
        # scaling c(s, s) by a Galois-fixed f keeps Z/2 cocycles valid: (a f, b)
        L2 = KummerAlgebra(2, 1, A, B)
        positives.append(symbol_cocycle(L2).perturbed((1, 0), (1, 0), L2.scalar(RatFunc.f())))
        for c in positives:
            assert cocycle_check(c).ok
            assert associativity_check(CrossedProduct(c), full_basis=True).ok
        negatives = _negative_corpus()
        assert len(negatives) >= 5
        for c in negatives:
            assert not cocycle_check(c).ok
            rep = associativity_check(CrossedProduct(c), full_basis=True)
            assert not rep.ok and rep.failing_triple is not None


def test_8_negative_paths():
    with criterion(8, "split-spec zero divisor and 100-mutation tamper fuzz", 60):
        s = SymbolAlgebraSpec.parse(2, "1", "1")
        x = s.one() + s.Y()
        res = sym_inverse(x)
        assert res.inverse is None and res.zero_divisor is not None
        w = res.zero_divisor
        assert sym_mul(x, w).is_zero()
        assert w == (s.one() - s.Y()).scale(w.coeffs[(0, 0)])
        g = corpus_group("A4")
        cert = json.loads(dumps(build_witness(g)))
        rng = random.Random(0)
        undetected = []
        for _ in range(100):
            bad, path = mutate(cert, rng)
            if verify_certificate(bad, g).ok:
                undetected.append(path)
        assert not undetected, f"undetected mutations: {undetected[:3]}"


if __name__ == "__main__":
    import sys

    failed = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_") and callable(fn):
            try:
                fn()
            except AssertionError:
                failed += 1
    sys.exit(1 if failed else 0)

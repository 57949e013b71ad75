"""Named permutation groups used as a test and demo corpus."""

from __future__ import annotations

from itertools import product

from .groups import PermGroup, identity

__all__ = ["cyclic", "dihedral", "symmetric", "alternating", "quaternion",
           "sl23", "direct_product", "elementary_abelian", "CORPUS", "corpus_group"]


def cyclic(n: int) -> PermGroup:
    if n == 1:
        return PermGroup(1, [], name="C1")
    return PermGroup(n, [tuple((i + 1) % n for i in range(n))], name=f"C{n}")


def dihedral(n: int) -> PermGroup:
    """Symmetries of the n-gon, order 2n."""
    rot = tuple((i + 1) % n for i in range(n))
    ref = tuple((-i) % n for i in range(n))
    return PermGroup(n, [rot, ref], name=f"D{n}")


def symmetric(n: int) -> PermGroup:
    if n < 2:
        return PermGroup(max(n, 1), [], name=f"S{n}")
    swap = (1, 0) + tuple(range(2, n))
    cyc = tuple((i + 1) % n for i in range(n))
    return PermGroup(n, [swap, cyc], name=f"S{n}")


def alternating(n: int) -> PermGroup:
    gens = []
    for k in range(2, n):
        img = list(range(n))
        img[0], img[1], img[k] = 1, k, 0
        gens.append(tuple(img))
    return PermGroup(n, gens, name=f"A{n}")


def _regular(elements, op, name: str) -> PermGroup:
    index = {x: k for k, x in enumerate(elements)}
    gens = [tuple(index[op(g, x)] for x in elements) for g in elements]
    return PermGroup(len(elements), gens, name=name)


def quaternion() -> PermGroup:
    """Q_8 in its left-regular representation on 8 points."""
    # unit quaternions as (sign, axis), axis in 1,i,j,k
    table = {
        ("1", "1"): (1, "1"), ("1", "i"): (1, "i"), ("1", "j"): (1, "j"), ("1", "k"): (1, "k"),
        ("i", "1"): (1, "i"), ("i", "i"): (-1, "1"), ("i", "j"): (1, "k"), ("i", "k"): (-1, "j"),
        ("j", "1"): (1, "j"), ("j", "i"): (-1, "k"), ("j", "j"): (-1, "1"), ("j", "k"): (1, "i"),
        ("k", "1"): (1, "k"), ("k", "i"): (1, "j"), ("k", "j"): (-1, "i"), ("k", "k"): (-1, "1"),
    }

    def op(a, b):
        s, ax = table[(a[1], b[1])]
        return (a[0] * b[0] * s, ax)

    elements = [(s, ax) for s in (1, -1) for ax in "1ijk"]
    g = _regular(elements, op, "Q8")
    i_, j_ = elements.index((1, "i")), elements.index((1, "j"))
    return PermGroup(8, [g.generators[i_], g.generators[j_]], name="Q8")


def sl23() -> PermGroup:
    """SL(2, 3) acting on the 8 nonzero vectors of F_3^2."""
    vecs = [v for v in product(range(3), repeat=2) if v != (0, 0)]

    def act(m):
        (a, b), (c, d) = m
        return tuple(vecs.index(((a * x + b * y) % 3, (c * x + d * y) % 3)) for x, y in vecs)

    return PermGroup(8, [act(((1, 1), (0, 1))), act(((0, 2), (1, 0)))], name="SL(2,3)")


def direct_product(*groups: PermGroup, name: str = "") -> PermGroup:
    """Groups acting on disjoint blocks of points."""
    degree = sum(g.degree for g in groups)
    gens = []
    offset = 0
    for g in groups:
        for s in g.generators:
            img = list(identity(degree))
            for i, j in enumerate(s):
                img[offset + i] = offset + j
            gens.append(tuple(img))
        offset += g.degree
    return PermGroup(degree, gens, name=name or " x ".join(g.name for g in groups))


def elementary_abelian(p: int, k: int) -> PermGroup:
    return direct_product(*[cyclic(p)] * k, name=f"(C{p})^{k}")


def _build_corpus() -> dict:
    return {
        "C1": lambda: cyclic(1),
        "C6": lambda: cyclic(6),
        "C12": lambda: cyclic(12),
        "C30": lambda: cyclic(30),
        "S3": lambda: symmetric(3),
        "S4": lambda: symmetric(4),
        "A4": lambda: alternating(4),
        "A5": lambda: alternating(5),
        "D4": lambda: dihedral(4),
        "D6": lambda: dihedral(6),
        "Q8": quaternion,
        "SL(2,3)": sl23,
        "C2^3": lambda: elementary_abelian(2, 3),
        "C4xC2": lambda: direct_product(cyclic(4), cyclic(2)),
        "C3^2": lambda: elementary_abelian(3, 2),
        "C3^2xC2": lambda: direct_product(cyclic(3), cyclic(3), cyclic(2)),
        "C4xC4": lambda: direct_product(cyclic(4), cyclic(4)),
        "C2xS3": lambda: direct_product(cyclic(2), symmetric(3)),
        "C5xA4": lambda: direct_product(cyclic(5), alternating(4)),
    }


CORPUS = _build_corpus()


def corpus_group(name: str) -> PermGroup:
    g = CORPUS[name]()
    g.name = name
    return g

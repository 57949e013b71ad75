"""Sparse polynomials in f, t over Q(zeta) and their fractions.

Terms are keyed by exponent pairs (i, j) meaning f^i t^j. "Leading" always
refers to lexicographic order with f dominant, which is also the order the
rank-two valuation reads monomials in.

Fractions are not gcd-normalized. Two fractions are equal when they
cross-multiply to the same polynomial; the constructor only strips common
monomial content and scales the denominator to leading coefficient 1.
"""

from __future__ import annotations

import ast
import re
from fractions import Fraction
from typing import Iterable, Mapping

from .cyclotomic import Cyclo

__all__ = [
    "Poly2",
    "RatFunc",
    "poly_exact_divide",
    "parse_ratfunc",
    "parse_poly",
]

Monomial = tuple[int, int]


def _as_cyclo(c) -> Cyclo:
    if isinstance(c, Cyclo):
        return c
    return Cyclo.rational(c)


class Poly2:
    """Immutable sparse polynomial in (f, t)."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, object] | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[Monomial, Cyclo] = {}
        for (i, j), c in items:
            if i < 0 or j < 0:
                raise ValueError("negative exponent in polynomial")
            c = _as_cyclo(c)
            if c:
                clean[(i, j)] = c
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> Poly2:
        p = cls.__new__(cls)
        p.terms = terms
        p._hash = None
        return p

    # -- constructors -------------------------------------------------------------
    @classmethod
    def const(cls, c) -> Poly2:
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, i: int, j: int, c=1) -> Poly2:
        return cls({(i, j): c})

    @classmethod
    def f(cls) -> Poly2:
        return cls.monomial(1, 0)

    @classmethod
    def t(cls) -> Poly2:
        return cls.monomial(0, 1)

    # -- structure ------------------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or set(self.terms) == {(0, 0)}

    def is_one(self) -> bool:
        c = self.terms.get((0, 0))
        return len(self.terms) == 1 and c is not None and c.is_one()

    def constant_term(self) -> Cyclo:
        return self.terms.get((0, 0), Cyclo.rational(0))

    def leading(self) -> tuple[Monomial, Cyclo]:
        m = max(self.terms)
        return m, self.terms[m]

    def lex_min(self) -> Monomial:
        return min(self.terms)

    def content(self) -> Monomial:
        """Exponents of the largest monomial f^i t^j dividing every term."""
        return (min(i for i, _ in self.terms), min(j for _, j in self.terms))

    def degree_f(self) -> int:
        return max(i for i, _ in self.terms)

    def coeff_in_f(self, i: int) -> Poly2:
        """Coefficient of f^i, as a polynomial in t alone."""
        return Poly2._raw({(0, j): c for (a, j), c in self.terms.items() if a == i})

    def shift(self, di: int, dj: int) -> Poly2:
        return Poly2({(i + di, j + dj): c for (i, j), c in self.terms.items()})

    # -- arithmetic ----------------------------------------------------------------------
    def __add__(self, other) -> Poly2:
        if not isinstance(other, Poly2):
            other = Poly2.const(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m)
            s = c if s is None else s + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return Poly2._raw(out)

    __radd__ = __add__

    def __neg__(self) -> Poly2:
        return Poly2._raw({m: -c for m, c in self.terms.items()})

    def __sub__(self, other) -> Poly2:
        if not isinstance(other, Poly2):
            other = Poly2.const(other)
        return self + (-other)

    def __rsub__(self, other) -> Poly2:
        return (-self) + other

    def __mul__(self, other) -> Poly2:
        if not isinstance(other, Poly2):
            c = _as_cyclo(other)
            if not c:
                return Poly2._raw({})
            return Poly2._raw({m: v * c for m, v in self.terms.items()})
        if len(self.terms) > len(other.terms):
            a, b = other.terms, self.terms
        else:
            a, b = self.terms, other.terms
        out: dict[Monomial, Cyclo] = {}
        for (i, j), c in a.items():
            for (k, l), d in b.items():
                m = (i + k, j + l)
                p = c * d
                s = out.get(m)
                out[m] = p if s is None else s + p
        return Poly2._raw({m: c for m, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int) -> Poly2:
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result = Poly2.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, Poly2):
            if isinstance(other, (int, Fraction, Cyclo)):
                other = Poly2.const(other)
            else:
                return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __repr__(self) -> str:
        return f"Poly2({self.render()!r})"

    # -- substitution ----------------------------------------------------------------
    def eval_t0(self) -> dict[int, Cyclo]:
        """Dense-free map f-exponent -> coefficient after setting t = 0."""
        return {i: c for (i, j), c in self.terms.items() if j == 0}

    def eval_f0(self) -> dict[int, Cyclo]:
        return {j: c for (i, j), c in self.terms.items() if i == 0}

    def subs_f(self, g: Poly2) -> Poly2:
        """Substitute f := g, where g is a polynomial in t."""
        out = Poly2._raw({})
        powers = {0: Poly2.const(1)}
        for i in sorted({i for i, _ in self.terms}):
            if i not in powers:
                k = max(powers)
                p = powers[k]
                while k < i:
                    p = p * g
                    k += 1
                    powers[k] = p
            part = Poly2._raw({(0, j): c for (a, j), c in self.terms.items() if a == i})
            out = out + part * powers[i]
        return out

    # -- text ------------------------------------------------------------------------------
    def render(self, fvar: str = "f", tvar: str = "t") -> str:
        if not self.terms:
            return "0"
        pieces = []
        for (i, j) in sorted(self.terms, reverse=True):
            c = self.terms[(i, j)]
            mono = []
            if i:
                mono.append(fvar if i == 1 else f"{fvar}^{i}")
            if j:
                mono.append(tvar if j == 1 else f"{tvar}^{j}")
            mono_s = "*".join(mono)
            if c.is_rational():
                v = c.coeffs[0]
                sign = "-" if v < 0 else "+"
                mag = abs(v)
                if not mono_s:
                    body = str(mag)
                elif mag == 1:
                    body = mono_s
                else:
                    body = f"{mag}*{mono_s}"
            else:
                sign = "+"
                body = f"({c.render()})" + (f"*{mono_s}" if mono_s else "")
            pieces.append((sign, body))
        sign, body = pieces[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out


def poly_exact_divide(p: Poly2, d: Poly2) -> Poly2 | None:
    """Return q with p == d*q, or None when d does not divide p.

    Runs the division algorithm on lex-leading terms. With a single divisor a
    nonzero remainder means d does not divide p, so the first leading term of
    the running remainder that is not a multiple of LT(d) settles the answer.
    """
    if d.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    if p.is_zero():
        return Poly2._raw({})
    if len(d.terms) == 1:
        ((di, dj), dc), = d.terms.items()
        inv = dc.inverse()
        out = {}
        for (i, j), c in p.terms.items():
            if i < di or j < dj:
                return None
            out[(i - di, j - dj)] = c * inv
        return Poly2._raw(out)
    (li, lj), lc = d.leading()
    inv = lc.inverse()
    rem = dict(p.terms)
    quot: dict[Monomial, Cyclo] = {}
    dterms = list(d.terms.items())
    while rem:
        (i, j) = max(rem)
        if i < li or j < lj:
            return None
        c = rem[(i, j)] * inv
        si, sj = i - li, j - lj
        quot[(si, sj)] = c
        for (a, b), e in dterms:
            m = (a + si, b + sj)
            v = rem.get(m)
            v = -(e * c) if v is None else v - e * c
            if v:
                rem[m] = v
            else:
                rem.pop(m, None)
    return Poly2._raw(quot)


class RatFunc:
    """Element num/den of Q(zeta)(f, t)."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, *, normalize: bool = True):
        if not isinstance(num, Poly2):
            num = Poly2.const(num)
        if den is None:
            den = Poly2.const(1)
        elif not isinstance(den, Poly2):
            den = Poly2.const(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if normalize:
            num, den = _normalize(num, den)
        self.num = num
        self.den = den

    @classmethod
    def f(cls) -> RatFunc:
        return cls(Poly2.f())

    @classmethod
    def t(cls) -> RatFunc:
        return cls(Poly2.t())

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_one(self) -> bool:
        return self.num == self.den

    def is_polynomial(self) -> bool:
        return self.den.is_one()

    # -- arithmetic ------------------------------------------------------------------
    def _coerce(self, other) -> RatFunc:
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, Poly2):
            return RatFunc(other)
        if isinstance(other, (int, Fraction, Cyclo)):
            return RatFunc(Poly2.const(other))
        return NotImplemented

    def __add__(self, other) -> RatFunc:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.den == other.den:
            return RatFunc(self.num + other.num, self.den)
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> RatFunc:
        return RatFunc(-self.num, self.den, normalize=False)

    def __sub__(self, other) -> RatFunc:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> RatFunc:
        return (-self) + other

    def __mul__(self, other) -> RatFunc:
        if isinstance(other, (int, Fraction, Cyclo)):
            return RatFunc(self.num * other, self.den, normalize=False) if other else RatFunc(0)
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.den.is_one() and other.den.is_one():
            return RatFunc(self.num * other.num)
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> RatFunc:
        if self.is_zero():
            raise ZeroDivisionError("division by zero")
        return RatFunc(self.den, self.num)

    def __truediv__(self, other) -> RatFunc:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other) -> RatFunc:
        return self.inverse() * other

    def __pow__(self, k: int) -> RatFunc:
        if k < 0:
            return self.inverse() ** (-k)
        return RatFunc(self.num ** k, self.den ** k)

    def equals(self, other) -> bool:
        other = self._coerce(other)
        if self.num == other.num and self.den == other.den:
            return True
        return self.num * other.den == other.num * self.den

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.equals(other)

    __hash__ = None  # equality is cross-multiplication, no canonical hash

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __repr__(self) -> str:
        return f"RatFunc({self.render()!r})"

    def render(self) -> str:
        num = self.num.render()
        if self.den.is_one():
            return num
        return f"{_wrap(num)}/{_wrap(self.den.render(), _DEN_ATOM)}"


def _wrap(s: str, atom: re.Pattern | None = None) -> str:
    if (atom or _ATOM).fullmatch(s) or _is_group(s):
        return s
    return f"({s})"


def _is_group(s: str) -> bool:
    """True when s is one balanced parenthesized group, e.g. ``(z + 1)``."""
    if not (s.startswith("(") and s.endswith(")")):
        return False
    depth = 0
    for k, ch in enumerate(s):
        depth += {"(": 1, ")": -1}.get(ch, 0)
        if depth == 0 and k < len(s) - 1:
            return False
    return True


_ATOM = re.compile(r"[\w^*]+")
_DEN_ATOM = re.compile(r"[\w^]+")  # a/b*c would misparse


def _normalize(num: Poly2, den: Poly2) -> tuple[Poly2, Poly2]:
    if num.is_zero():
        return num, Poly2.const(1)
    ni, nj = num.content()
    di, dj = den.content()
    ci, cj = min(ni, di), min(nj, dj)
    if ci or cj:
        num = num.shift(-ci, -cj)
        den = den.shift(-ci, -cj)
    _, lc = den.leading()
    if not lc.is_one():
        inv = lc.inverse()
        num = num * inv
        den = den * inv
    return num, den


# -- parsing -------------------------------------------------------------------------

class ParseError(ValueError):
    pass


def parse_ratfunc(text: str, zeta_order: int = 1) -> RatFunc:
    """Parse the ASCII grammar: f, t, z, integers, + - * / ^ and parentheses.

    ``z`` denotes the distinguished primitive `zeta_order`-th root of unity.
    """
    src = text.replace("^", "**")
    try:
        tree = ast.parse(src, mode="eval")
    except SyntaxError as exc:
        raise ParseError(f"cannot parse {text!r}: {exc.msg}") from None
    return _eval_node(tree.body, zeta_order, text)


def parse_poly(text: str, zeta_order: int = 1) -> Poly2:
    r = parse_ratfunc(text, zeta_order)
    if not r.den.is_constant():
        raise ParseError(f"{text!r} is not a polynomial")
    return r.num * r.den.constant_term().inverse()


def _eval_node(node, order: int, text: str) -> RatFunc:
    if isinstance(node, ast.BinOp):
        left = _eval_node(node.left, order, text)
        if isinstance(node.op, ast.Pow):
            k = node.right
            neg = False
            if isinstance(k, ast.UnaryOp) and isinstance(k.op, ast.USub):
                neg, k = True, k.operand
            if not (isinstance(k, ast.Constant) and type(k.value) is int):
                raise ParseError(f"exponent must be an integer literal in {text!r}")
            return left ** (-k.value if neg else k.value)
        right = _eval_node(node.right, order, text)
        if isinstance(node.op, ast.Add):
            return left + right
        if isinstance(node.op, ast.Sub):
            return left - right
        if isinstance(node.op, ast.Mult):
            return left * right
        if isinstance(node.op, ast.Div):
            if right.is_zero():
                raise ParseError(f"division by zero in {text!r}")
            return left / right
    elif isinstance(node, ast.UnaryOp):
        if isinstance(node.op, ast.USub):
            return -_eval_node(node.operand, order, text)
        if isinstance(node.op, ast.UAdd):
            return _eval_node(node.operand, order, text)
    elif isinstance(node, ast.Constant) and type(node.value) is int:
        return RatFunc(node.value)
    elif isinstance(node, ast.Name):
        if node.id == "f":
            return RatFunc.f()
        if node.id == "t":
            return RatFunc.t()
        if node.id == "z":
            return RatFunc(Cyclo.zeta(order))
    raise ParseError(f"unsupported syntax in {text!r}")

"""Exact multivariate polynomial arithmetic over prime fields F_p.

Monomials are exponent tuples, one entry per ring variable.  Polynomials
are immutable maps monomial -> nonzero coefficient in [1, p).  All
arithmetic is exact mod p; there is no floating point anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

Monomial = tuple[int, ...]

MAX_CHARACTERISTIC = 2**31


class RingMismatchError(ValueError):
    """Operands live in different rings."""


class PolynomialParseError(ValueError):
    """Malformed polynomial text."""


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def is_p_power(q: int, p: int) -> bool:
    """True iff q is a (possibly zeroth) power of p."""
    if q < 1:
        return False
    while q % p == 0:
        q //= p
    return q == 1


@dataclass(frozen=True)
class MonomialOrder:
    """A degree-compatible-or-lex total order on monomials.

    kind is "grevlex" or "lex"; precedence lists variable indices from
    most to least significant.  key() returns a tuple that sorts small
    monomials first, so max(..., key=order.key) is the leading monomial.
    """

    kind: str
    precedence: tuple[int, ...]

    def __post_init__(self):
        if self.kind not in ("grevlex", "lex"):
            raise ValueError(f"unknown monomial order {self.kind!r}")
        if sorted(self.precedence) != list(range(len(self.precedence))):
            raise ValueError("precedence must be a permutation of the variables")

    def key(self, mono: Monomial):
        if self.kind == "lex":
            return tuple(mono[i] for i in self.precedence)
        # grevlex: total degree first, then the reversed exponent vector
        # with sign flipped (smaller last exponent wins ties).
        return (sum(mono), tuple(-mono[i] for i in reversed(self.precedence)))

    def compare(self, m1: Monomial, m2: Monomial) -> int:
        """-1, 0 or 1 as m1 <, =, > m2."""
        if len(m1) != len(m2):
            raise ValueError("monomial length mismatch")
        k1, k2 = self.key(m1), self.key(m2)
        return (k1 > k2) - (k1 < k2)


class Ring:
    """A presentation F_p[variables] / (relations) with a fixed monomial order.

    With no relations this is the polynomial ring itself (the regular
    case).  Localness at the ideal of all variables is implicit: every
    colength downstream is an F_p-vector-space dimension.
    """

    def __init__(self, p: int, variables: Iterable[str], relations=(),
                 order: str = "grevlex", precedence=None):
        if not _is_prime(p):
            raise ValueError(f"characteristic {p} is not prime")
        if p >= MAX_CHARACTERISTIC:
            raise ValueError("characteristic too large; prime fields only, p < 2^31")
        self.p = p
        self.variables = tuple(variables)
        if len(set(self.variables)) != len(self.variables):
            raise ValueError("duplicate variable names")
        if precedence is None:
            precedence = tuple(range(len(self.variables)))
        self.order = MonomialOrder(order, tuple(precedence))
        self._var_index = {v: i for i, v in enumerate(self.variables)}
        rels = []
        for r in relations:
            poly = self.poly(r) if isinstance(r, str) else r
            if poly.ring is not self:
                raise RingMismatchError("relation from a different ring")
            if not poly.is_zero():
                rels.append(poly)
        self.relations = tuple(rels)
        self.graded = all(r.is_homogeneous() for r in self.relations)
        self._dim = None  # filled lazily by ideals.krull_dim

    @property
    def nvars(self) -> int:
        return len(self.variables)

    @property
    def is_regular(self) -> bool:
        """True when there are no relations (the polynomial ring)."""
        return not self.relations

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return Polynomial(self, {(0,) * self.nvars: 1})

    def var(self, name_or_index) -> "Polynomial":
        i = (self._var_index[name_or_index]
             if isinstance(name_or_index, str) else name_or_index)
        exps = [0] * self.nvars
        exps[i] = 1
        return Polynomial(self, {tuple(exps): 1})

    def monomial(self, exps: Iterable[int], coeff: int = 1) -> "Polynomial":
        exps = tuple(exps)
        if len(exps) != self.nvars:
            raise ValueError("exponent tuple has wrong length")
        if any(e < 0 for e in exps):
            raise ValueError("negative exponent")
        c = coeff % self.p
        return Polynomial(self, {exps: c} if c else {})

    def poly(self, text: str) -> "Polynomial":
        return parse_polynomial(text, self)

    def same_as(self, other: "Ring") -> bool:
        return (self.p == other.p and self.variables == other.variables
                and self.order == other.order
                and [r.terms for r in self.relations] == [r.terms for r in other.relations])

    def __repr__(self):
        quot = ""
        if self.relations:
            quot = "/(" + ", ".join(str(r) for r in self.relations) + ")"
        return f"F_{self.p}[{', '.join(self.variables)}]{quot}"


class Polynomial:
    """An element of a Ring's ambient polynomial ring, in canonical form."""

    __slots__ = ("ring", "terms", "_lm")

    def __init__(self, ring: Ring, terms: dict):
        self.ring = ring
        self.terms = {m: c for m, c in terms.items() if c % ring.p}
        for m, c in list(self.terms.items()):
            if c < 0 or c >= ring.p:
                self.terms[m] = c % ring.p
        self._lm = None

    def is_zero(self) -> bool:
        return not self.terms

    def is_homogeneous(self) -> bool:
        degs = {sum(m) for m in self.terms}
        return len(degs) <= 1

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(m) for m in self.terms), default=-1)

    def leading_monomial(self) -> Monomial:
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        if self._lm is None:
            self._lm = max(self.terms, key=self.ring.order.key)
        return self._lm

    def leading_coefficient(self) -> int:
        return self.terms[self.leading_monomial()]

    def sorted_terms(self) -> list[tuple[Monomial, int]]:
        key = self.ring.order.key
        return sorted(self.terms.items(), key=lambda t: key(t[0]), reverse=True)

    def monic(self) -> "Polynomial":
        if self.is_zero():
            return self
        inv = pow(self.leading_coefficient(), -1, self.ring.p)
        if inv == 1:
            return self
        return Polynomial(self.ring, {m: (c * inv) % self.ring.p
                                      for m, c in self.terms.items()})

    def _check(self, other: "Polynomial"):
        if self.ring is not other.ring and not self.ring.same_as(other.ring):
            raise RingMismatchError("polynomials from different rings")

    def __add__(self, other):
        if isinstance(other, int):
            other = self.ring.monomial((0,) * self.ring.nvars, other)
        self._check(other)
        p = self.ring.p
        terms = dict(self.terms)
        for m, c in other.terms.items():
            terms[m] = (terms.get(m, 0) + c) % p
        return Polynomial(self.ring, terms)

    def __neg__(self):
        p = self.ring.p
        return Polynomial(self.ring, {m: p - c for m, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = self.ring.monomial((0,) * self.ring.nvars, other)
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            c = other % self.ring.p
            return Polynomial(self.ring, {m: (v * c) % self.ring.p
                                          for m, v in self.terms.items()})
        self._check(other)
        p = self.ring.p
        terms: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                terms[m] = (terms.get(m, 0) + c1 * c2) % p
        return Polynomial(self.ring, terms)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def term_mul(self, mono: Monomial, coeff: int) -> "Polynomial":
        """Multiply by a single term, cheaper than building a Polynomial."""
        p = self.ring.p
        c = coeff % p
        if not c:
            return self.ring.zero()
        return Polynomial(self.ring, {tuple(a + b for a, b in zip(m, mono)): (v * c) % p
                                      for m, v in self.terms.items()})

    def frobenius(self, q: int) -> "Polynomial":
        """f^q for q a power of the characteristic, term by term.

        Valid because Frobenius is additive in characteristic p; equals
        repeated squaring.  Coefficients in F_p are fixed by x -> x^q.
        """
        if not is_p_power(q, self.ring.p):
            raise ValueError(f"{q} is not a power of the characteristic {self.ring.p}")
        if q == 1:
            return self
        return Polynomial(self.ring,
                          {tuple(e * q for e in m): c for m, c in self.terms.items()})

    def partial(self, i: int) -> "Polynomial":
        """Formal partial derivative with respect to variable i."""
        p = self.ring.p
        terms: dict = {}
        for m, c in self.terms.items():
            if m[i] == 0:
                continue
            coeff = (c * m[i]) % p
            if coeff:
                mm = list(m)
                mm[i] -= 1
                terms[tuple(mm)] = coeff
        return Polynomial(self.ring, terms)

    def __eq__(self, other):
        if isinstance(other, int):
            return self.terms == self.ring.monomial((0,) * self.ring.nvars, other).terms
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring.same_as(other.ring) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __str__(self):
        if not self.terms:
            return "0"
        names = self.ring.variables
        parts = []
        for m, c in self.sorted_terms():
            factors = [f"{names[i]}^{e}" if e > 1 else names[i]
                       for i, e in enumerate(m) if e]
            if not factors:
                parts.append(str(c))
            elif c == 1:
                parts.append("*".join(factors))
            else:
                parts.append(f"{c}*" + "*".join(factors))
        return " + ".join(parts)

    def __repr__(self):
        return f"<{self} over {self.ring!r}>"


def frobenius_power(f: Polynomial, q: int) -> Polynomial:
    return f.frobenius(q)


# --- parsing ---------------------------------------------------------------

_OPS = set("+-*^()")


def _tokenize(text: str) -> Iterator[tuple[str, str]]:
    text = text.replace("−", "-")  # unicode minus
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch in _OPS:
            yield ("op", ch)
            i += 1
        elif ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            yield ("int", text[i:j])
            i = j
        elif ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            yield ("name", text[i:j])
            i = j
        else:
            raise PolynomialParseError(f"unexpected character {ch!r} in {text!r}")


class _Parser:
    """Recursive descent over: expr = term (('+'|'-') term)*,
    term = factor (('*')? factor)*, factor = base ('^' int)?,
    base = int | var | '(' expr ')' with optional leading sign."""

    def __init__(self, text: str, ring: Ring):
        self.tokens = list(_tokenize(text))
        self.pos = 0
        self.ring = ring

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else (None, None)

    def next(self):
        tok = self.peek()
        self.pos += 1
        return tok

    def parse(self) -> Polynomial:
        result = self.expr()
        if self.pos != len(self.tokens):
            raise PolynomialParseError(f"trailing input at token {self.peek()[1]!r}")
        return result

    def expr(self) -> Polynomial:
        sign = 1
        kind, val = self.peek()
        if kind == "op" and val in "+-":
            self.next()
            sign = -1 if val == "-" else 1
        result = self.term() * sign
        while True:
            kind, val = self.peek()
            if kind == "op" and val in "+-":
                self.next()
                t = self.term()
                result = result + t if val == "+" else result - t
            else:
                return result

    def term(self) -> Polynomial:
        result = self.factor()
        while True:
            kind, val = self.peek()
            if kind == "op" and val == "*":
                self.next()
                result = result * self.factor()
            elif kind in ("int", "name") or (kind == "op" and val == "("):
                result = result * self.factor()  # implicit product
            else:
                return result

    def factor(self) -> Polynomial:
        base = self.base()
        kind, val = self.peek()
        if kind == "op" and val == "^":
            self.next()
            kind, val = self.next()
            if kind != "int":
                raise PolynomialParseError("exponent must be a natural number")
            return base ** int(val)
        return base

    def base(self) -> Polynomial:
        kind, val = self.next()
        if kind == "int":
            return self.ring.monomial((0,) * self.ring.nvars, int(val))
        if kind == "name":
            if val not in self.ring._var_index:
                raise PolynomialParseError(f"unknown variable {val!r}")
            return self.ring.var(val)
        if kind == "op" and val == "(":
            inner = self.expr()
            kind, val = self.next()
            if (kind, val) != ("op", ")"):
                raise PolynomialParseError("unbalanced parentheses")
            return inner
        raise PolynomialParseError(f"unexpected token {val!r}")


def parse_polynomial(text: str, ring: Ring) -> Polynomial:
    """Parse integer-coefficient polynomial text into canonical form mod p."""
    if not text.strip():
        raise PolynomialParseError("empty polynomial text")
    return _Parser(text, ring).parse()

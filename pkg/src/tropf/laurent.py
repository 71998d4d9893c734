"""Sparse Laurent polynomials with integer coefficients.

A :class:`LaurentPoly` in ``nvars`` variables is a finite map from integer
exponent tuples to nonzero Python ints. Terms are kept sorted by exponent
in lexicographic order, so equality, hashing and printing are canonical.
"""

import heapq
import re
from math import gcd

from .errors import DimensionError, NonExactDivision, NotAMonomial, ParseError


class LaurentPoly:
    __slots__ = ("_terms", "nvars", "_hash")

    def __init__(self, terms=None, nvars=None):
        items = dict(terms or {})
        if nvars is None:
            if not items:
                raise DimensionError("nvars is required for the zero polynomial")
            nvars = len(next(iter(items)))
        clean = {}
        for exp, c in items.items():
            exp = tuple(int(e) for e in exp)
            if len(exp) != nvars:
                raise DimensionError(f"exponent {exp} does not have length {nvars}")
            c = int(c)
            if c:
                clean[exp] = clean.get(exp, 0) + c
        self._terms = tuple(sorted((e, c) for e, c in clean.items() if c))
        self.nvars = nvars
        self._hash = None

    # constructors

    @classmethod
    def _raw(cls, sorted_terms, nvars):
        obj = cls.__new__(cls)
        obj._terms = sorted_terms
        obj.nvars = nvars
        obj._hash = None
        return obj

    @classmethod
    def zero(cls, nvars):
        return cls._raw((), nvars)

    @classmethod
    def constant(cls, c, nvars):
        return cls({(0,) * nvars: c}, nvars)

    @classmethod
    def monomial(cls, exp, coeff=1):
        exp = tuple(exp)
        return cls({exp: coeff}, len(exp))

    @classmethod
    def variable(cls, i, nvars):
        """The variable x_i, with ``i`` counted from 1."""
        exp = [0] * nvars
        exp[i - 1] = 1
        return cls.monomial(exp)

    # inspection

    def terms(self):
        return dict(self._terms)

    def items(self):
        return self._terms

    def __iter__(self):
        return iter(self._terms)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self):
        return not self._terms

    def is_monomial(self):
        return len(self._terms) == 1

    def coefficient(self, exp):
        return self.terms().get(tuple(exp), 0)

    def support(self):
        return [e for e, _ in self._terms]

    def coefficients(self):
        return [c for _, c in self._terms]

    def leading(self):
        """Lexicographically largest (exponent, coefficient)."""
        return self._terms[-1]

    def min_degrees(self):
        return tuple(min(col) for col in zip(*self.support()))

    def max_degrees(self):
        return tuple(max(col) for col in zip(*self.support()))

    def is_constant(self):
        return not self._terms or (len(self._terms) == 1 and not any(self._terms[0][0]))

    def constant_term(self):
        return self.coefficient((0,) * self.nvars)

    def _check(self, other):
        if not isinstance(other, LaurentPoly):
            raise TypeError(f"expected LaurentPoly, got {type(other).__name__}")
        if other.nvars != self.nvars:
            raise DimensionError(f"polynomials in {self.nvars} and {other.nvars} variables")

    # arithmetic

    def _coerce(self, other):
        if isinstance(other, int):
            return LaurentPoly.constant(other, self.nvars)
        self._check(other)
        return other

    def __add__(self, other):
        other = self._coerce(other)
        acc = dict(self._terms)
        for e, c in other._terms:
            acc[e] = acc.get(e, 0) + c
        return LaurentPoly(acc, self.nvars)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw(tuple((e, -c) for e, c in self._terms), self.nvars)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return LaurentPoly.zero(self.nvars)
            return LaurentPoly._raw(tuple((e, c * other) for e, c in self._terms), self.nvars)
        return multiply(self, other)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            if not self.is_monomial() or abs(self._terms[0][1]) != 1:
                raise NonExactDivision("negative power of a non-unit")
            e, c = self._terms[0]
            return LaurentPoly.monomial(tuple(-x * -k for x in e), c ** (-k))
        result = LaurentPoly.constant(1, self.nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def shift(self, exp):
        """Multiply by the monomial x^exp."""
        return LaurentPoly._raw(
            tuple((tuple(a + b for a, b in zip(e, exp)), c) for e, c in self._terms), self.nvars
        )

    def __eq__(self, other):
        if isinstance(other, int):
            return self == LaurentPoly.constant(other, self.nvars)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.nvars == other.nvars and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, self._terms))
        return self._hash

    def __repr__(self):
        return f"LaurentPoly({format_laurent(self)!r})"

    def __str__(self):
        return format_laurent(self)


def multiply(a, b):
    """Exact product of two Laurent polynomials in the same variables."""
    a._check(b)
    acc = {}
    for ea, ca in a._terms:
        for eb, cb in b._terms:
            e = tuple(x + y for x, y in zip(ea, eb))
            acc[e] = acc.get(e, 0) + ca * cb
    return LaurentPoly(acc, a.nvars)


def exact_divide(num, den):
    """Return q with q * den == num, or raise NonExactDivision.

    Leading-term elimination under lexicographic order. Quotient exponents are
    confined to the box forced by per-variable degree additivity, which both
    bounds the loop and detects non-divisibility early.
    """
    num._check(den)
    if den.is_zero():
        raise ZeroDivisionError("division by the zero Laurent polynomial")
    if num.is_zero():
        return LaurentPoly.zero(num.nvars)
    if den.is_monomial():
        de, dc = den._terms[0]
        out = {}
        for e, c in num._terms:
            if c % dc:
                raise NonExactDivision(f"coefficient {c} not divisible by {dc}")
            out[tuple(a - b for a, b in zip(e, de))] = c // dc
        return LaurentPoly(out, num.nvars)

    lo = tuple(a - b for a, b in zip(num.min_degrees(), den.min_degrees()))
    hi = tuple(a - b for a, b in zip(num.max_degrees(), den.max_degrees()))
    if any(a > b for a, b in zip(lo, hi)):
        raise NonExactDivision("degree ranges are incompatible")
    lead_e, lead_c = den.leading()
    rem = dict(num._terms)
    heap = [_neg_key(e) for e in rem]
    heapq.heapify(heap)
    quot = {}
    while rem:
        e = _neg_key(heapq.heappop(heap))
        c = rem.get(e)
        if not c:
            continue
        if c % lead_c:
            raise NonExactDivision(f"coefficient {c} not divisible by {lead_c}")
        qe = tuple(a - b for a, b in zip(e, lead_e))
        if any(x < a or x > b for x, a, b in zip(qe, lo, hi)):
            raise NonExactDivision(f"{format_laurent(num)} is not divisible by {format_laurent(den)}")
        qc = c // lead_c
        quot[qe] = qc
        for de, dc in den._terms:
            t = tuple(a + b for a, b in zip(qe, de))
            v = rem.get(t, 0) - qc * dc
            if v:
                if t not in rem:
                    heapq.heappush(heap, _neg_key(t))
                rem[t] = v
            else:
                rem.pop(t, None)
    return LaurentPoly(quot, num.nvars)


def _neg_key(e):
    return tuple(-x for x in e)


def substitute_monomials(f, images):
    """Evaluate ``f`` (a polynomial in y_1..y_n) at y_k -> images[k], each a single term."""
    if len(images) != f.nvars:
        raise DimensionError(f"need {f.nvars} images, got {len(images)}")
    mons = []
    for img in images:
        if not img.is_monomial():
            raise NotAMonomial(f"{format_laurent(img)} has {len(img)} terms")
        mons.append(img._terms[0])
    nv = images[0].nvars if images else 0
    acc = {}
    for v, c in f._terms:
        exp = [0] * nv
        coeff = c
        for vk, (ek, ck) in zip(v, mons):
            if vk:
                coeff *= ck**vk
                for j, x in enumerate(ek):
                    exp[j] += vk * x
        exp = tuple(exp)
        acc[exp] = acc.get(exp, 0) + coeff
    return LaurentPoly(acc, nv)


def substitute(u, images):
    """Evaluate a Laurent polynomial at x_j -> images[j] (arbitrary Laurent polynomials).

    Negative powers are cleared by a common denominator and divided out exactly;
    NonExactDivision is raised when the result is not a Laurent polynomial.
    """
    if len(images) != u.nvars:
        raise DimensionError(f"need {u.nvars} images, got {len(images)}")
    nv = images[0].nvars
    if u.is_zero():
        return LaurentPoly.zero(nv)
    shift = tuple(max(0, -x) for x in u.min_degrees())
    cache = {}

    def power(j, k):
        key = (j, k)
        if key not in cache:
            cache[key] = images[j] ** k
        return cache[key]

    num = LaurentPoly.zero(nv)
    for e, c in u._terms:
        term = LaurentPoly.constant(c, nv)
        for j, x in enumerate(e):
            if x + shift[j]:
                term = term * power(j, x + shift[j])
        num = num + term
    den = LaurentPoly.constant(1, nv)
    for j, d in enumerate(shift):
        if d:
            den = den * power(j, d)
    if den.is_monomial() and abs(den._terms[0][1]) == 1:
        return num * den ** -1
    return exact_divide(num, den)


def monomial_content(*polys):
    """Componentwise minimum exponent over all terms of the given polynomials."""
    supp = [e for p in polys for e in p.support()]
    return tuple(min(col) for col in zip(*supp))


def content(*polys):
    g = 0
    for p in polys:
        for c in p.coefficients():
            g = gcd(g, c)
    return g


# text form


def format_laurent(p, names=None):
    """Canonical text: ``c * x1^a1 * ... `` terms joined by `` + ``, ascending lex order."""
    if p.is_zero():
        return "0"
    if names is None:
        names = [f"x{i + 1}" for i in range(p.nvars)]
    parts = []
    for e, c in p.items():
        factors = []
        for name, x in zip(names, e):
            if x == 1:
                factors.append(name)
            elif x:
                factors.append(f"{name}^{x}")
        body = " * ".join([str(abs(c))] + factors)
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(("- " if c < 0 else "+ ") + body)
    return " ".join(parts)


_TERM_SPLIT = re.compile(r"\s*([+-])\s*")
_FACTOR = re.compile(r"^([A-Za-z_][A-Za-z_0-9]*)(?:\^\(?(-?\d+)\)?)?$")


def parse_laurent(text, nvars, names=None):
    """Parse a sum of monomials such as ``2 * x1^-1 * x2 - x3``.

    Accepts the output of :func:`format_laurent`; ``*`` between factors is optional.
    """
    if names is None:
        names = [f"x{i + 1}" for i in range(nvars)]
    index = {name: i for i, name in enumerate(names)}
    s = text.strip()
    if not s:
        raise ParseError("empty polynomial")
    if "**" in s:
        raise ParseError(f"use ^ for exponents in {text!r}")
    if s[0] not in "+-":
        s = "+" + s
    # protect negative exponents from the term splitter
    protected = re.sub(r"\^\s*\(?\s*-\s*(\d+)\s*\)?", r"^~\1", s)
    pieces = _TERM_SPLIT.split(protected)[1:]
    if len(pieces) % 2:
        raise ParseError(f"cannot parse polynomial {text!r}")
    acc = {}
    for sign, body in zip(pieces[0::2], pieces[1::2]):
        body = body.replace("~", "-")
        if not body:
            raise ParseError(f"dangling sign in {text!r}")
        coeff = 1 if sign == "+" else -1
        exp = [0] * nvars
        tokens = [t for t in re.split(r"\s*\*\s*|\s+", body) if t]
        for tok in tokens:
            if re.fullmatch(r"\d+", tok):
                coeff *= int(tok)
                continue
            m = _FACTOR.match(tok)
            if not m or m.group(1) not in index:
                raise ParseError(f"unknown factor {tok!r} in {text!r}")
            exp[index[m.group(1)]] += int(m.group(2) or 1)
        key = tuple(exp)
        acc[key] = acc.get(key, 0) + coeff
    return LaurentPoly(acc, nvars)

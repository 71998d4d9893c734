"""Tropical evaluation, the pairing, the F-invariant, and the Poisson side."""

from dataclasses import dataclass, field
from fractions import Fraction

from . import linalg as la
from .errors import InvariantBreach, MissingConstantTerm, NotAClusterMonomial, NotPointedAt
from .laurent import LaurentPoly, format_laurent
from .pointed import certificate_at, detect_cluster_monomial
from .seeds import check_word, reduce_word, vertices


def trop_eval(fpoly, h):
    """F[h] = max of v.h over the exponents v of F."""
    if fpoly.constant_term() != 1:
        raise MissingConstantTerm(f"F = {format_laurent(fpoly)} does not have constant term 1")
    return max(sum(a * b for a, b in zip(v, h)) for v in fpoly.support())


def _principal_scaled(root, g):
    """(S | 0) g, i.e. s_i g_i over the unfrozen indices."""
    return tuple(s * x for s, x in zip(root.s, g[: root.n]))


def pairing_components(u, v, root, at=()):
    """The two summands g^T Lambda g' and F[(S|0) g'] of the pairing at chart ``at``."""
    cu, cv = certificate_at(u, root, at), certificate_at(v, root, at)
    lam = root.lambda_at(at)
    bilinear = sum(a * b for a, b in zip(cu.g, la.matvec(lam, cv.g)))
    return bilinear, trop_eval(cu.fpoly, _principal_scaled(root, cv.g))


def pairing(u, v, root, at=()):
    b, t = pairing_components(u, v, root, at)
    return b + t


def f_invariant(u, v, root, at=()):
    """F_t[S g'°] + F'_t[S g°]; needs only the skew-symmetrizer, not Lambda."""
    cu, cv = certificate_at(u, root, at), certificate_at(v, root, at)
    return trop_eval(cu.fpoly, _principal_scaled(root, cv.g)) + trop_eval(cv.fpoly, _principal_scaled(root, cu.g))


@dataclass(frozen=True)
class PairingReport:
    depth: int
    values: dict
    symmetrized: dict
    components: dict = field(repr=False)

    @property
    def value(self):
        return self.values[()]

    @property
    def invariant(self):
        return self.symmetrized[()]

    @property
    def passed(self):
        return len(set(self.values.values())) == 1 and len(set(self.symmetrized.values())) == 1

    def witnesses(self):
        """Vertices whose pairing differs from the value at the root."""
        return [w for w, x in self.values.items() if x != self.value]


def check_seed_independence(u, v, root, depth):
    values, sym, comps = {}, {}, {}
    for w in vertices(root.n, depth):
        comps[w] = pairing_components(u, v, root, w)
        values[w] = sum(comps[w])
        sym[w] = f_invariant(u, v, root, w)
    return PairingReport(depth, values, sym, comps)


def f_compatibility_degree(x, u, root):
    """(x_{i;t} || u)_F for x = (t, i); cross-checked against s_i times the f-vector entry."""
    word, i = x
    word = reduce_word(check_word(word, root.n))
    if not 1 <= i <= root.m:
        raise InvariantBreach(f"variable index {i} is outside [1, {root.m}]")
    xi = root.seed_at(word).cluster[i - 1]
    value = f_invariant(xi, u, root, word)
    expected = root.s[i - 1] * certificate_at(u, root, word).fvec[i - 1] if i <= root.n else 0
    if value != expected:
        raise InvariantBreach(f"(x_{i} || u) = {value} but s_i f_i = {expected} at chart {word}")
    return value


@dataclass(frozen=True)
class ProductVerdict:
    is_cluster_monomial: bool
    invariant: int
    witness: tuple = None
    explanation: str = ""

    def __bool__(self):
        return self.is_cluster_monomial


def is_product_cluster_monomial(u, v, root, at=(), search_depth=5):
    """Decide whether u v is a cluster monomial from the F-invariant of two cluster monomials."""
    for name, x in (("first", u), ("second", v)):
        try:
            found = detect_cluster_monomial(x, root, search_depth)
        except NotPointedAt as exc:
            raise NotAClusterMonomial(f"{name} factor is not pointed {exc}") from None
        if not found:
            raise NotAClusterMonomial(f"{name} factor is not a cluster monomial within depth {search_depth}")
    inv = f_invariant(u, v, root, at)
    if inv:
        return ProductVerdict(False, inv, None, f"F-invariant is {inv}, not 0")
    found = detect_cluster_monomial(u * v, root, search_depth)
    if found:
        shown = " ".join(map(str, found.word)) or "ε"
        return ProductVerdict(True, 0, found.word, f"F-invariant is 0; common cluster at [{shown}]")
    return ProductVerdict(True, 0, None, f"F-invariant is 0; no common cluster met within depth {search_depth}")


# --- Poisson structure -------------------------------------------------------------


def poisson_bracket(f, g, root):
    """{x^a, x^b} = (a^T Lambda b) x^(a+b), extended bilinearly."""
    lam = root.require_pair().lam
    acc = {}
    images = [(b, d, la.matvec(lam, b)) for b, d in g.items()]
    for a, c in f.items():
        for b, d, lb in images:
            w = sum(x * y for x, y in zip(a, lb))
            if w:
                e = tuple(x + y for x, y in zip(a, b))
                acc[e] = acc.get(e, 0) + w * c * d
    return LaurentPoly(acc, root.m)


@dataclass(frozen=True)
class LogCanonical:
    log_canonical: bool
    c: Fraction = None

    def __bool__(self):
        return self.log_canonical

    @property
    def verdict(self):
        return f"yes(c={self.c})" if self.log_canonical else "no"


def is_log_canonical(f, g, root):
    """Whether {f, g} = c f g for a rational constant c."""
    br = poisson_bracket(f, g, root)
    if br.is_zero():
        return LogCanonical(True, Fraction(0))
    fg = f * g
    if fg.is_zero():
        return LogCanonical(False)
    (e1, c1), (e2, c2) = br.leading(), fg.leading()
    if e1 != e2:
        return LogCanonical(False)
    c = Fraction(c1, c2)
    if br * c.denominator != fg * c.numerator:
        return LogCanonical(False)
    return LogCanonical(True, c)

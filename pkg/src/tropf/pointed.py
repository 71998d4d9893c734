"""Dominance order, pointed elements, F-polynomials, G- and C-matrices, good elements."""

from dataclasses import dataclass, field
from fractions import Fraction

from . import linalg as la
from .errors import (
    InvariantBreach,
    NegativeCoefficientAt,
    NotFullRank,
    NotPointed,
    NotPointedAt,
    TropicalMismatchAt,
)
from .laurent import LaurentPoly, format_laurent, substitute, substitute_monomials
from .seeds import MutationMatrix, Seed, _mutate_entries, mutate_seed, reduce_word, tree_path, vertices
from .tropical import TropicalPointY, y_step


class DominanceOrder:
    """g' <= g  iff  g' = g + B~ v with v a nonnegative integer vector.

    B~ has full column rank, so with a left inverse L the residual (I - B~ L) h
    decides whether a difference lies in the image of B~ and L recovers v.
    """

    def __init__(self, btilde):
        self.btilde = btilde if isinstance(btilde, MutationMatrix) else MutationMatrix(btilde)
        self.left = la.left_inverse(self.btilde.rows)
        if self.left is None:
            raise NotFullRank(f"B~ has rank {la.rank(self.btilde.rows)} < n = {self.btilde.n}")

    def solve(self, diff):
        """The unique rational v with B~ v = diff, or None when diff is outside the image."""
        v = la.matvec(self.left, diff)
        if la.matvec(self.btilde.rows, v) != tuple(diff):
            return None
        return v

    def leq(self, g1, g2):
        """(holds, v) for the question g1 <= g2."""
        v = self.solve(tuple(a - b for a, b in zip(g1, g2)))
        if v is None or any(x.denominator != 1 or x < 0 for x in v):
            return False, None
        return True, tuple(int(x) for x in v)

    def coordinates(self, h):
        """(residual, L h): h' - h is in the image of B~ iff the residuals agree."""
        p = la.matvec(self.left, h)
        back = la.matvec(self.btilde.rows, p)
        return tuple(Fraction(a) - b for a, b in zip(h, back)), p


def dominance_leq(g1, g2, btilde):
    return DominanceOrder(btilde).leq(g1, g2)


@dataclass(frozen=True)
class PointedCertificate:
    chart: tuple
    g: tuple
    fpoly: LaurentPoly
    fvec: tuple
    pointed: bool = True
    bipointed: bool = False
    positive: bool = False

    def reconstruct(self, btilde):
        """x^g F(yhat) in the chart's own variables."""
        bt = btilde if isinstance(btilde, MutationMatrix) else MutationMatrix(btilde)
        images = [LaurentPoly.monomial(bt.column(k)) for k in range(1, bt.n + 1)]
        return substitute_monomials(self.fpoly, images).shift(self.g)

    def describe(self, names=None):
        return {
            "chart": " ".join(map(str, self.chart)) or "ε",
            "g": list(self.g),
            "F": format_laurent(self.fpoly, tuple(f"y{k + 1}" for k in range(self.fpoly.nvars))),
            "f": list(self.fvec),
            "pointed": self.pointed,
            "bipointed": self.bipointed,
            "positive": self.positive,
        }


def certify_pointed(u, chart, word=None):
    """Certificate for ``u`` written in the variables of ``chart`` (a Seed or a mutation matrix)."""
    bt = chart.btilde if isinstance(chart, Seed) else chart
    word = (chart.word if isinstance(chart, Seed) else ()) if word is None else tuple(word)
    order = DominanceOrder(bt)
    if u.is_zero():
        raise NotPointed("the zero element is not pointed")
    coords = {}
    for h, _ in u.items():
        coords[h] = order.coordinates(h)
    residuals = {r for r, _ in coords.values()}
    if len(residuals) > 1:
        raise NotPointed("support meets several cosets of the image of B~, so there are several maximal degrees")
    n = bt.n
    low = tuple(min(p[k] for _, p in coords.values()) for k in range(n))
    tops = [h for h, (_, p) in coords.items() if p == low]
    if not tops:
        raise NotPointed("no exponent dominates the whole support")
    g = tops[0]
    if u.coefficient(g) != 1:
        raise NotPointed(f"maximal degree {g} has coefficient {u.coefficient(g)}")
    fterms = {}
    for h, c in u.items():
        v = [x - y for x, y in zip(coords[h][1], low)]
        if any(x.denominator != 1 for x in v):
            raise NotPointed(f"exponent {h} is not comparable with {g}")
        fterms[tuple(int(x) for x in v)] = c
    fpoly = LaurentPoly(fterms, n)
    fvec = fpoly.max_degrees()
    return PointedCertificate(
        chart=reduce_word(word),
        g=g,
        fpoly=fpoly,
        fvec=fvec,
        pointed=True,
        bipointed=fpoly.coefficient(fvec) == 1,
        positive=all(c > 0 for c in fpoly.coefficients()),
    )


# --- charts ----------------------------------------------------------------------


def expand_in_chart(u, root, word):
    """Rewrite ``u`` (in root variables) in the cluster at ``word``; division is exact or raises."""
    return substitute(u, root.root_cluster_in_chart(word))


def certificate_at(u, root, word):
    word = reduce_word(word)
    return root.memo(("cert", u, word), lambda: certify_pointed(expand_in_chart(u, root, word), root.btilde_at(word), word))


def degree(u, root, word=()):
    return certificate_at(u, root, word).g


def cluster_in_chart(root, t, w):
    """Cluster at ``t`` written in the variables of the chart at ``w``."""
    t, w = reduce_word(t), reduce_word(w)

    def compute():
        seed = Seed.initial(root.btilde_at(w))
        for k in tree_path(w, t):
            seed = mutate_seed(seed, k)
        return seed.cluster

    return root.memo(("rel", t, w), compute)


def g_matrix(root, t, w=()):
    """Extended G-matrix: column j is deg^w(x_{j;t})."""
    bt = root.btilde_at(w)
    cols = [certify_pointed(x, bt, w).g for x in cluster_in_chart(root, t, w)]
    return la.transpose(cols)


def c_matrix(root, t, w=()):
    """Bottom block of [B_w; I_n] mutated along the path from ``w`` to ``t``."""
    n = root.n
    rows = la.vstack(root.btilde_at(w).principal, la.identity(n))
    for k in tree_path(w, t):
        rows = _mutate_entries(rows, k)
    return rows[n:]


# --- good elements -------------------------------------------------------------------


@dataclass(frozen=True)
class GoodCertificate:
    depth: int
    certificates: dict = field(repr=False)
    point: TropicalPointY
    bigood: bool
    tropical: bool = True

    @property
    def verdict(self):
        return f"good-to-depth({self.depth})"


def _coefficient_structure(cert, n):
    """At chart s and direction k: y_k^{[-g_k]_+} has coefficient 1 and no higher pure power occurs."""
    for k in range(n):
        want = max(0, -cert.g[k])
        pure = {v[k]: c for v, c in cert.fpoly.items() if all(x == 0 for j, x in enumerate(v) if j != k)}
        if pure.get(want) != 1 or any(d > want for d in pure):
            return k + 1
    return None


def certify_good(u, root, depth):
    """Certify ``u`` pointed with positive coefficients in every chart within ``depth``."""
    certs = {}
    for w in vertices(root.n, depth):
        try:
            cert = certificate_at(u, root, w)
        except NotPointed as exc:
            raise NotPointedAt(w, str(exc)) from None
        if not cert.positive:
            raise NegativeCoefficientAt(w, f"F = {format_laurent(cert.fpoly)}")
        if w:
            parent = certs[w[:-1]]
            moved = y_step(root.btilde_at(w[:-1]), parent.g, w[-1])
            if moved != cert.g:
                raise TropicalMismatchAt(w, f"degree {cert.g} but transport gives {moved}")
        bad = _coefficient_structure(cert, root.n)
        if bad is not None:
            raise TropicalMismatchAt(w, f"pure powers of y{bad} do not match the degree")
        certs[w] = cert
    return GoodCertificate(
        depth=depth,
        certificates=certs,
        point=TropicalPointY((), certs[()].g),
        bigood=all(c.bipointed for c in certs.values()),
    )


@dataclass(frozen=True)
class ClusterMonomialVerdict:
    found: bool
    depth: int
    word: tuple = None
    exponents: tuple = None

    def __bool__(self):
        return self.found

    @property
    def verdict(self):
        if not self.found:
            return f"not-found-to-depth({self.depth})"
        shown = " ".join(map(str, self.word)) or "ε"
        return f"monomial-at([{shown}], {self.exponents})"


def detect_cluster_monomial(u, root, search_depth):
    """Search charts within ``search_depth`` for one where the f-vector of ``u`` vanishes."""
    for w in vertices(root.n, search_depth):
        try:
            cert = certificate_at(u, root, w)
        except NotPointed as exc:
            raise NotPointedAt(w, str(exc)) from None
        if any(cert.fvec):
            continue
        if any(x < 0 for x in cert.g[: root.n]):
            raise InvariantBreach(f"F = 1 at [{' '.join(map(str, w)) or 'ε'}] but the degree {cert.g} has a negative unfrozen entry")
        return ClusterMonomialVerdict(True, search_depth, w, cert.g)
    return ClusterMonomialVerdict(False, search_depth)

"""Tropical points of the Y-pattern and of the cluster pattern.

A point is stored as one coordinate vector at an anchor vertex and transported
lazily; the tree is infinite so nothing is tabulated globally.
"""

from dataclasses import dataclass

from . import linalg as la
from .errors import DimensionError, InvalidExtension, NotCompatible, NotSkewSymmetrizable
from .seeds import (
    _mutate_entries,
    check_word,
    e_matrix,
    find_skew_symmetrizer,
    reduce_word,
    tree_path,
)


def _pos(a):
    return a if a > 0 else 0


def _coord(coord, m):
    coord = tuple(int(x) for x in coord)
    if len(coord) != m:
        raise DimensionError(f"tropical point needs {m} coordinates, got {len(coord)}")
    return coord


# --- single edges ------------------------------------------------------------


def y_step(bt, g, k):
    """Cross the edge k with B~_t = ``bt``: g' = E_{k,eps} g, eps = - when g_k >= 0."""
    sign = -1 if g[k - 1] >= 0 else 1
    return la.matvec(e_matrix(bt, k, sign), g)


def y_step_direct(bhat, g, k):
    """The same edge via the tropicalised Y-seed rule, reading B^_t (n x m) directly."""
    gk = g[k - 1]
    out = []
    for i, gi in enumerate(g):
        if i == k - 1:
            out.append(-gk)
        else:
            b = bhat[k - 1][i]
            out.append(gi + _pos(b) * gk - b * _pos(gk))
    return tuple(out)


def x_step(bt, a, k):
    """a' = E_{k,eps0}^T a, eps0 = - when sum_j b_jk a_j >= 0."""
    s = sum(r[k - 1] * x for r, x in zip(bt.rows, a))
    sign = -1 if s >= 0 else 1
    return la.matvec(la.transpose(e_matrix(bt, k, sign)), a)


def x_step_direct(bt, a, k):
    col = [r[k - 1] for r in bt.rows]
    plus = sum(_pos(b) * x for b, x in zip(col, a))
    minus = sum(_pos(-b) * x for b, x in zip(col, a))
    return a[: k - 1] + (-a[k - 1] + max(plus, minus),) + a[k:]


# --- points ------------------------------------------------------------------


@dataclass(frozen=True)
class TropicalPointY:
    anchor: tuple
    coord: tuple

    def at(self, target, root):
        """Coordinates at the vertex ``target`` (a word from the root)."""
        return transport_y(self, tree_path(self.anchor, target), root)

    def moved(self, target, root):
        return TropicalPointY(reduce_word(target), self.at(target, root))


@dataclass(frozen=True)
class TropicalPointX:
    anchor: tuple
    coord: tuple

    def at(self, target, root):
        return transport_x(self, tree_path(self.anchor, target), root)

    def moved(self, target, root):
        return TropicalPointX(reduce_word(target), self.at(target, root))


def point_y(anchor, coord, root):
    return TropicalPointY(reduce_word(check_word(anchor, root.n)), _coord(coord, root.m))


def point_x(anchor, coord, root):
    return TropicalPointX(reduce_word(check_word(anchor, root.n)), _coord(coord, root.m))


def _walk(p, w, root, step):
    w = check_word(w, root.n)
    vertex, coord = p.anchor, _coord(p.coord, root.m)
    for k in w:
        coord = step(root.btilde_at(vertex), coord, k)
        vertex = reduce_word(vertex + (k,))
    return coord


def transport_y(p, w, root):
    """Coordinates of ``p`` after following the directions ``w`` from its anchor."""
    return _walk(p, w, root, y_step)


def transport_x(p, w, root):
    return _walk(p, w, root, x_step)


def transport_y_direct(p, w, root):
    """Reference transport using B^ = -B~^T mutated on its own, independent of E-matrices."""
    w = check_word(w, root.n)
    bhat = la.neg(la.transpose(root.btilde_at(p.anchor).rows))
    coord = _coord(p.coord, root.m)
    for k in w:
        coord = y_step_direct(bhat, coord, k)
        bhat = _mutate_entries(bhat, k)
    return coord


def transport_x_direct(p, w, root):
    w = check_word(w, root.n)
    vertex, coord = p.anchor, _coord(p.coord, root.m)
    for k in w:
        coord = x_step_direct(root.btilde_at(vertex), coord, k)
        vertex = reduce_word(vertex + (k,))
    return coord


# --- maps between the two kinds of points ---------------------------------------


def y_to_x(p, root):
    """a_t = Lambda_t g_t at the anchor of ``p``."""
    lam = root.lambda_at(p.anchor)
    return TropicalPointX(p.anchor, la.matvec(lam, _coord(p.coord, root.m)))


def default_extension(root):
    """[[B, -I], [I, 0]] for a principal-coefficient root [B; I]."""
    n, m = root.n, root.m
    rows = root.btilde.rows
    if m != 2 * n or rows[n:] != la.identity(n):
        raise InvalidExtension("no default square extension: the root is not of the form [B; I_n]")
    top = la.hstack(rows[:n], la.neg(la.identity(n)))
    bottom = la.hstack(la.identity(n), la.zeros(n, n))
    return la.vstack(top, bottom)


def validate_extension(root, sq, stilde=None):
    """Check that ``sq`` extends B~ to an m x m matrix and return (sq, stilde)."""
    sq = la.as_matrix(sq)
    m, n = root.m, root.n
    if la.shape(sq) != (m, m):
        raise InvalidExtension(f"square extension must be {m}x{m}")
    if tuple(r[:n] for r in sq) != root.btilde.rows:
        raise InvalidExtension("the first n columns of the extension differ from B~")
    sqt = la.transpose(sq)
    if stilde is None:
        try:
            stilde = find_skew_symmetrizer(sqt)
        except NotSkewSymmetrizable as exc:
            raise InvalidExtension(f"extension is not skew-symmetrizable: {exc}") from None
    stilde = tuple(int(x) for x in stilde)
    if len(stilde) != m or any(x <= 0 for x in stilde) or not la.is_skew_symmetric(la.scale_rows(stilde, sqt)):
        raise InvalidExtension("S~ (B~sq)^T is not skew-symmetric")
    return sq, stilde


def x_to_y(p, root, sq=None, stilde=None):
    """g_t = S~ (B~sq_t)^T a_t at the anchor of ``p``."""
    sq, stilde = validate_extension(root, default_extension(root) if sq is None else sq, stilde)
    for k in p.anchor:
        sq = _mutate_entries(sq, k)
    g = la.matvec(la.scale_rows(stilde, la.transpose(sq)), _coord(p.coord, root.m))
    return TropicalPointY(p.anchor, g)


# --- compatibility -----------------------------------------------------------------


@dataclass(frozen=True)
class Compatibility:
    compatible: bool
    depth: int
    witness: tuple = None
    index: int = None

    def __bool__(self):
        return self.compatible

    @property
    def verdict(self):
        if self.compatible:
            return f"compatible-to-depth({self.depth})"
        shown = " ".join(map(str, self.witness)) or "ε"
        return f"incompatible(vertex [{shown}], k={self.index})"


def values_within(p, depth, root, step=y_step):
    """Map from every vertex within ``depth`` of the root to the coordinates of ``p`` there."""
    out = {(): p.at((), root)}
    level = [()]
    for _ in range(depth):
        nxt = []
        for w in level:
            bt = root.btilde_at(w)
            for k in range(1, root.n + 1):
                if w and w[-1] == k:
                    continue
                child = w + (k,)
                out[child] = step(bt, out[w], k)
                nxt.append(child)
        level = nxt
    return out


def are_compatible(p, q, depth, root):
    """Sign-coherence g_{k;t} g'_{k;t} >= 0 for k <= n at every vertex within ``depth``."""
    pv, qv = values_within(p, depth, root), values_within(q, depth, root)
    for w in pv:
        for k in range(root.n):
            if pv[w][k] * qv[w][k] < 0:
                return Compatibility(False, depth, w, k + 1)
    return Compatibility(True, depth)


def uplus(p, q, depth, root):
    """The point whose coordinates are everywhere the sum of those of ``p`` and ``q``."""
    verdict = are_compatible(p, q, depth, root)
    if not verdict:
        raise NotCompatible(f"points are not sign-coherent: {verdict.verdict}")
    total = TropicalPointY(p.anchor, tuple(a + b for a, b in zip(p.coord, q.at(p.anchor, root))))
    pv, qv, sv = (values_within(x, depth, root) for x in (p, q, total))
    for w in sv:
        if sv[w] != tuple(a + b for a, b in zip(pv[w], qv[w])):
            raise NotCompatible(f"sum does not transport consistently at [{' '.join(map(str, w)) or 'ε'}]")
    return total

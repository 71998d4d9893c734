"""Mutation matrices, compatible pairs, cluster seeds and Y-seeds.

Directions and variable indices are counted from 1, as in the mathematics;
a mutation word is a tuple of directions read left to right from the root.
"""

import threading
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from . import linalg as la
from .errors import (
    DimensionError,
    DirectionError,
    InvariantBreach,
    NotCompatible,
    NotSkewSymmetrizable,
)
from .laurent import LaurentPoly, content, exact_divide, monomial_content


def _pos(a):
    return a if a > 0 else 0


# --- words -----------------------------------------------------------------


def reduce_word(word):
    """Cancel adjacent equal letters; reduced words name the vertices of the tree."""
    out = []
    for k in word:
        if out and out[-1] == k:
            out.pop()
        else:
            out.append(k)
    return tuple(out)


def check_word(word, n):
    word = tuple(int(k) for k in word)
    for k in word:
        if not 1 <= k <= n:
            raise DirectionError(f"direction {k} is outside [1, n] with n = {n}")
    return word


def tree_path(start, end):
    """Directions leading from vertex ``start`` to vertex ``end`` (both words from the root)."""
    a, b = reduce_word(start), reduce_word(end)
    p = 0
    while p < min(len(a), len(b)) and a[p] == b[p]:
        p += 1
    return tuple(reversed(a[p:])) + b[p:]


def vertices(n, depth):
    """All reduced words of length <= depth, ordered by length then lexicographically."""
    level = [()]
    out = [()]
    for _ in range(depth):
        level = [w + (k,) for w in level for k in range(1, n + 1) if not w or w[-1] != k]
        out.extend(level)
    return out


def format_word(word):
    return " ".join(str(k) for k in word) if word else "ε"


# --- matrices ----------------------------------------------------------------


def _mutate_entries(rows, k):
    """Matrix mutation rule at 1-based ``k`` applied to any integer matrix."""
    k0 = k - 1
    rk = rows[k0]
    out = []
    for i, row in enumerate(rows):
        bik = row[k0]
        if i == k0:
            out.append(tuple(-b for b in row))
            continue
        new = []
        for j, b in enumerate(row):
            if j == k0:
                new.append(-b)
            else:
                new.append(b + _pos(bik) * _pos(rk[j]) - _pos(-bik) * _pos(-rk[j]))
        out.append(tuple(new))
    return tuple(out)


def find_skew_symmetrizer(b):
    """Minimal positive integer diagonal (s_1..s_n) with diag(s) b skew-symmetric."""
    b = la.as_matrix(b)
    n, c = la.shape(b)
    if n != c:
        raise DimensionError("skew-symmetrizer requested for a non-square matrix")
    for i in range(n):
        if b[i][i]:
            raise NotSkewSymmetrizable(f"diagonal entry ({i + 1},{i + 1}) is nonzero")
        for j in range(i + 1, n):
            if (b[i][j] == 0) != (b[j][i] == 0) or b[i][j] * b[j][i] > 0:
                raise NotSkewSymmetrizable(f"entries ({i + 1},{j + 1}) and ({j + 1},{i + 1}) are not sign-skew")
    s = [None] * n
    for root in range(n):
        if s[root] is not None:
            continue
        s[root] = Fraction(1)
        comp, stack = [root], [root]
        while stack:
            i = stack.pop()
            for j in range(n):
                if j == i or b[i][j] == 0:
                    continue
                # s_i b_ij = -s_j b_ji
                want = s[i] * Fraction(b[i][j], -b[j][i])
                if s[j] is None:
                    s[j] = want
                    comp.append(j)
                    stack.append(j)
                elif s[j] != want:
                    raise NotSkewSymmetrizable(f"inconsistent ratios around index {j + 1}")
        den = 1
        for i in comp:
            den = la.lcm(den, s[i].denominator)
        ints = [int(s[i] * den) for i in comp]
        g = 0
        for x in ints:
            g = gcd(g, x)
        for i, x in zip(comp, ints):
            s[i] = x // g
    return tuple(int(x) for x in s)


@dataclass(frozen=True)
class MutationMatrix:
    """An m x n integer matrix whose top n x n block is skew-symmetrizable."""

    rows: tuple

    def __post_init__(self):
        rows = la.as_matrix(self.rows)
        object.__setattr__(self, "rows", rows)
        m, n = la.shape(rows)
        if not (m >= n > 0):
            raise DimensionError(f"mutation matrix must satisfy m >= n > 0, got {m}x{n}")
        find_skew_symmetrizer(rows[:n])

    @property
    def m(self):
        return len(self.rows)

    @property
    def n(self):
        return len(self.rows[0])

    @property
    def principal(self):
        return self.rows[: self.n]

    def column(self, k):
        return tuple(r[k - 1] for r in self.rows)

    def mutate(self, k):
        return mutate_matrix(self, k)

    def __iter__(self):
        return iter(self.rows)


def _as_mm(bt):
    return bt if isinstance(bt, MutationMatrix) else MutationMatrix(bt)


def mutate_matrix(bt, k):
    bt = _as_mm(bt)
    check_word((k,), bt.n)
    return MutationMatrix(_mutate_entries(bt.rows, k))


def e_matrix(bt, k, sign):
    """m x m matrix E_{k,sign}: identity with column k replaced (sign is +1 or -1)."""
    bt = _as_mm(bt)
    check_word((k,), bt.n)
    rows = [list(r) for r in la.identity(bt.m)]
    for i in range(bt.m):
        rows[i][k - 1] = -1 if i == k - 1 else _pos(-sign * bt.rows[i][k - 1])
    return la.as_matrix(rows)


def f_matrix(bt, k, sign):
    """n x n matrix F_{k,sign}: identity with row k replaced."""
    bt = _as_mm(bt)
    check_word((k,), bt.n)
    rows = [list(r) for r in la.identity(bt.n)]
    rows[k - 1] = [-1 if j == k - 1 else _pos(sign * bt.rows[k - 1][j]) for j in range(bt.n)]
    return la.as_matrix(rows)


# --- compatible pairs --------------------------------------------------------


@dataclass(frozen=True)
class CompatiblePair:
    btilde: MutationMatrix
    lam: tuple
    s: tuple

    def mutate(self, k, sign=1):
        return mutate_pair(self, k, sign)


def check_compatible_pair(bt, lam):
    """Validate B^T Lam = (S | 0) with S positive diagonal; return the pair with S extracted."""
    bt = _as_mm(bt)
    lam = la.as_matrix(lam)
    m, n = bt.m, bt.n
    if la.shape(lam) != (m, m):
        raise NotCompatible(f"Lambda must be {m}x{m}, got {la.shape(lam)[0]}x{la.shape(lam)[1]}")
    for i in range(m):
        for j in range(m):
            if lam[i][j] != -lam[j][i]:
                raise NotCompatible(f"Lambda is not skew-symmetric at ({i + 1},{j + 1})")
    prod = la.matmul(la.transpose(bt.rows), lam)
    s = []
    for j in range(n):
        for i in range(m):
            want_zero = i != j
            v = prod[j][i]
            if want_zero and v != 0:
                raise NotCompatible(f"(B^T Lambda)[{j + 1},{i + 1}] = {v}, expected 0")
        if prod[j][j] <= 0:
            raise NotCompatible(f"(B^T Lambda)[{j + 1},{j + 1}] = {prod[j][j]}, expected a positive entry")
        s.append(prod[j][j])
    return CompatiblePair(bt, lam, tuple(s))


def mutate_pair(pair, k, sign=1):
    e = e_matrix(pair.btilde, k, sign)
    lam = la.matmul(la.matmul(la.transpose(e), pair.lam), e)
    return CompatiblePair(mutate_matrix(pair.btilde, k), lam, pair.s)


def build_lambda(b, lambda0, s):
    """Compatible pair for the principal-coefficient matrix [B; I_n] from (Lambda_0, S)."""
    b = la.as_matrix(b)
    lambda0 = la.as_matrix(lambda0)
    n = len(b)
    s = tuple(int(x) for x in s)
    if la.shape(b) != (n, n) or la.shape(lambda0) != (n, n) or len(s) != n:
        raise DimensionError("B, Lambda_0 and S must all be n x n")
    if any(x <= 0 for x in s) or not la.is_skew_symmetric(la.scale_rows(s, b)):
        raise NotSkewSymmetrizable(f"diag{s} does not skew-symmetrize B")
    if not la.is_skew_symmetric(lambda0):
        raise NotCompatible("Lambda_0 is not skew-symmetric")
    sm = tuple(tuple(s[i] if i == j else 0 for j in range(n)) for i in range(n))
    bt_l0 = la.matmul(la.transpose(b), lambda0)
    top_right = tuple(tuple(-x - y for x, y in zip(r1, r2)) for r1, r2 in zip(sm, la.matmul(lambda0, b)))
    bottom_left = tuple(tuple(x - y for x, y in zip(r1, r2)) for r1, r2 in zip(sm, bt_l0))
    bottom_right = tuple(
        tuple(-x + y for x, y in zip(r1, r2)) for r1, r2 in zip(la.matmul(sm, b), la.matmul(bt_l0, b))
    )
    lam = la.vstack(la.hstack(lambda0, top_right), la.hstack(bottom_left, bottom_right))
    pair = check_compatible_pair(la.vstack(b, la.identity(n)), lam)
    if pair.s != s:
        raise InvariantBreach(f"constructed pair has type {pair.s}, expected {s}")
    return pair


# --- cluster seeds -------------------------------------------------------------


@dataclass(frozen=True)
class Seed:
    """B~ together with the cluster expressed in the initial variables."""

    btilde: MutationMatrix
    cluster: tuple
    word: tuple = ()

    @classmethod
    def initial(cls, bt):
        bt = _as_mm(bt)
        return cls(bt, tuple(LaurentPoly.variable(j + 1, bt.m) for j in range(bt.m)), ())

    def mutate(self, k):
        return mutate_seed(self, k)


def exchange_monomials(cluster, column):
    """The two products prod x_j^[b_jk]_+ and prod x_j^[-b_jk]_+."""
    m = len(cluster)
    pos = LaurentPoly.constant(1, cluster[0].nvars)
    neg = LaurentPoly.constant(1, cluster[0].nvars)
    for j in range(m):
        b = column[j]
        if b > 0:
            pos = pos * cluster[j] ** b
        elif b < 0:
            neg = neg * cluster[j] ** (-b)
    return pos, neg


def mutate_seed(seed, k):
    bt = seed.btilde
    check_word((k,), bt.n)
    pos, neg = exchange_monomials(seed.cluster, bt.column(k))
    new = exact_divide(pos + neg, seed.cluster[k - 1])
    cluster = seed.cluster[: k - 1] + (new,) + seed.cluster[k:]
    return Seed(mutate_matrix(bt, k), cluster, reduce_word(seed.word + (k,)))


@dataclass(frozen=True)
class YHat:
    """The monomial yhat_k = prod x_j^{b_jk} of a seed.

    ``exponent`` lives in the seed's own chart; ``numerator``/``denominator``
    give it as a ratio of Laurent polynomials in the initial variables.
    """

    exponent: tuple
    numerator: LaurentPoly
    denominator: LaurentPoly

    @property
    def monomial(self):
        return LaurentPoly.monomial(self.exponent)


def yhat_variables(seed):
    out = []
    for k in range(1, seed.btilde.n + 1):
        col = seed.btilde.column(k)
        num, den = exchange_monomials(seed.cluster, col)
        num, den = _normalize_fraction(num, den)
        out.append(YHat(col, num, den))
    return out


# --- Y-seeds ---------------------------------------------------------------------


def _normalize_fraction(num, den):
    """Cancel the common monomial factor and the integer content of num/den."""
    mc = monomial_content(num, den)
    neg = tuple(-x for x in mc)
    num, den = num.shift(neg), den.shift(neg)
    g = content(num, den)
    if g > 1:
        num = LaurentPoly({e: c // g for e, c in num.items()}, num.nvars)
        den = LaurentPoly({e: c // g for e, c in den.items()}, den.nvars)
    return num, den


@dataclass(frozen=True)
class _Factored:
    """y = x^mono * prod atoms[a]^e; atoms are the polynomials 1 + y_k met along the way."""

    mono: tuple
    powers: tuple  # sorted (atom index, nonzero exponent)

    def split(self):
        """(numerator, denominator) parts, both with nonnegative exponents."""
        up = _Factored(tuple(_pos(x) for x in self.mono), tuple((a, e) for a, e in self.powers if e > 0))
        down = _Factored(tuple(_pos(-x) for x in self.mono), tuple((a, -e) for a, e in self.powers if e < 0))
        return up, down

    def times(self, other, k=1):
        powers = dict(self.powers)
        for a, e in other.powers:
            powers[a] = powers.get(a, 0) + k * e
        mono = tuple(x + k * y for x, y in zip(self.mono, other.mono))
        return _Factored(mono, tuple(sorted((a, e) for a, e in powers.items() if e)))

    def inverse(self):
        return _Factored(tuple(-x for x in self.mono), tuple((a, -e) for a, e in self.powers))

    def expand(self, atoms):
        """Value of a factored element with nonnegative exponents."""
        out = LaurentPoly.monomial(self.mono)
        for a, e in self.powers:
            out = out * atoms[a] ** e
        return out


@dataclass(frozen=True, eq=False)
class YSeed:
    """An n x m matrix B^ and m subtraction-free y-variables.

    Each y-variable is kept factored over the polynomials 1 + y_k (cleared of
    denominators) produced by earlier mutations, so mutating twice in the same
    direction cancels formally. ``yvars`` gives the (numerator, denominator) pairs.
    """

    bhat: tuple
    factored: tuple
    atoms: tuple = field(default=(), compare=False, repr=False)

    @classmethod
    def initial(cls, bhat):
        bhat = la.as_matrix(bhat)
        n, m = la.shape(bhat)
        if m < n:
            raise DimensionError("B^ must be n x m with m >= n")
        find_skew_symmetrizer(tuple(r[:n] for r in bhat))
        unit = la.identity(m)
        return cls(bhat, tuple(_Factored(unit[j], ()) for j in range(m)))

    @property
    def n(self):
        return len(self.bhat)

    @property
    def m(self):
        return len(self.factored)

    def pair(self, i):
        """Numerator and denominator of y_i (1-based), with nonnegative coefficients."""
        up, down = self.factored[i - 1].split()
        return up.expand(self.atoms), down.expand(self.atoms)

    @property
    def yvars(self):
        return tuple(self.pair(i) for i in range(1, self.m + 1))

    def __eq__(self, other):
        return isinstance(other, YSeed) and self.bhat == other.bhat and self.yvars == other.yvars

    def __hash__(self):
        return hash((self.bhat, self.yvars))

    def equivalent(self, other):
        """Equality of B^ and of every y-variable as a rational function."""
        return self.bhat == other.bhat and all(
            a * d == b * c for (a, b), (c, d) in zip(self.yvars, other.yvars)
        )

    def mutate(self, k):
        return mutate_yseed(self, k)


def mutate_yseed(y, k):
    check_word((k,), y.n)
    yk = y.factored[k - 1]
    num_k, den_k = yk.split()
    total = num_k.expand(y.atoms) + den_k.expand(y.atoms)
    atoms = y.atoms
    if total in atoms:
        index = atoms.index(total)
    else:
        index, atoms = len(atoms), atoms + (total,)
    # 1 + y_k = total / den_k
    one_plus = _Factored((0,) * y.m, ((index, 1),)).times(den_k, -1)
    new = []
    for i, yi in enumerate(y.factored):
        if i == k - 1:
            new.append(yk.inverse())
            continue
        b = y.bhat[k - 1][i]
        new.append(yi.times(yk, _pos(b)).times(one_plus, -b))
    return YSeed(_mutate_entries(y.bhat, k), tuple(new), atoms)


# --- the root configuration -------------------------------------------------------


class RootConfig:
    """Initial data at the root vertex: B~, an optional compatible Lambda, variable names.

    Seeds, matrices and compatible pairs at other vertices are computed on demand and
    memoised by reduced word. The memo is a plain dict guarded by a lock; values are
    immutable, so a racing duplicate computation is harmless and the first insert wins.
    """

    def __init__(self, btilde, lam=None, names=None):
        self.btilde = _as_mm(btilde)
        self.pair = check_compatible_pair(self.btilde, lam) if lam is not None else None
        if names is not None and len(names) != self.m:
            raise DimensionError(f"expected {self.m} variable names, got {len(names)}")
        self.names = tuple(names) if names is not None else tuple(f"x{i + 1}" for i in range(self.m))
        self._memo = {}
        self._lock = threading.Lock()

    @classmethod
    def principal(cls, b, s=None, lambda0=None, names=None):
        """Principal-coefficient root [B; I_n] with Lambda from (Lambda_0, S)."""
        b = la.as_matrix(b)
        n = len(b)
        s = find_skew_symmetrizer(b) if s is None else tuple(s)
        lambda0 = la.zeros(n, n) if lambda0 is None else lambda0
        pair = build_lambda(b, lambda0, s)
        return cls(pair.btilde, pair.lam, names)

    @property
    def n(self):
        return self.btilde.n

    @property
    def m(self):
        return self.btilde.m

    @property
    def s(self):
        """Type S of the compatible pair."""
        return self.require_pair().s

    def require_pair(self):
        if self.pair is None:
            raise NotCompatible("this root configuration carries no compatible Lambda")
        return self.pair

    def memo(self, key, compute):
        with self._lock:
            if key in self._memo:
                return self._memo[key]
        value = compute()
        with self._lock:
            return self._memo.setdefault(key, value)

    def _walk(self, kind, word, root_value, step):
        word = reduce_word(check_word(word, self.n))
        if not word:
            return root_value
        return self.memo((kind, word), lambda: step(self._walk(kind, word[:-1], root_value, step), word[-1]))

    def btilde_at(self, word):
        return self._walk("B", word, self.btilde, mutate_matrix)

    def seed_at(self, word):
        return self._walk("seed", word, Seed.initial(self.btilde), mutate_seed)

    def pair_at(self, word):
        def step(pair, k):
            plus, minus = mutate_pair(pair, k, 1), mutate_pair(pair, k, -1)
            if plus.lam != minus.lam:
                raise InvariantBreach(f"pair mutation at {k} depends on the sign")
            return plus

        return self._walk("pair", word, self.require_pair(), step)

    def lambda_at(self, word):
        return self.pair_at(word).lam

    def yseed_at(self, word):
        """Y-seed of the Langlands dual Y-pattern (B^ = -B~^T at the root)."""
        root = YSeed.initial(la.neg(la.transpose(self.btilde.rows)))
        return self._walk("y", word, root, mutate_yseed)

    def root_cluster_in_chart(self, word):
        """The initial variables x_{j;t0} written as Laurent polynomials in the chart at ``word``."""
        word = reduce_word(check_word(word, self.n))

        def compute():
            seed = Seed.initial(self.btilde_at(word))
            for k in tree_path(word, ()):
                seed = mutate_seed(seed, k)
            return seed.cluster

        return self.memo(("inv", word), compute)

    def vertices(self, depth):
        return vertices(self.n, depth)

"""Independent reference computations built on sympy and on textbook formulas."""

import itertools

import sympy

from tropf.laurent import LaurentPoly


def symbols(m):
    return sympy.symbols(f"x1:{m + 1}")


def to_sympy(p):
    xs = symbols(p.nvars)
    return sum((c * sympy.Mul(*[x**e for x, e in zip(xs, exp)]) for exp, c in p.items()), sympy.Integer(0))


def from_sympy(expr, m):
    """Laurent polynomial from a sympy expression whose denominator is a monomial."""
    xs = symbols(m)
    num, den = sympy.fraction(sympy.cancel(sympy.together(expr)))
    dpoly = sympy.Poly(den, *xs)
    if len(dpoly.terms()) != 1:
        raise ValueError(f"{expr} is not a Laurent polynomial")
    (dexp, dc), = dpoly.terms()
    terms = {}
    for exp, c in sympy.Poly(num, *xs).terms():
        q = sympy.Rational(c, dc)
        assert q.q == 1
        terms[tuple(a - b for a, b in zip(exp, dexp))] = int(q)
    return LaurentPoly(terms, m)


def mutate_matrix_classic(b, k):
    """b'_ij = -b_ij on row/column k, else b_ij + sgn(b_ik) [b_ik b_kj]_+."""
    k -= 1
    out = []
    for i, row in enumerate(b):
        new = []
        for j, x in enumerate(row):
            if i == k or j == k:
                new.append(-x)
            else:
                bik, bkj = b[i][k], b[k][j]
                sgn = (bik > 0) - (bik < 0)
                new.append(x + sgn * max(bik * bkj, 0))
        out.append(tuple(new))
    return tuple(out)


def sympy_rank(rows):
    return sympy.Matrix(rows).rank()


def sympy_det(rows):
    return int(sympy.Matrix(rows).det())


def sympy_clusters(btilde, word):
    """Cluster at ``word`` as sympy rational functions, mutated by the exchange relation."""
    m = len(btilde)
    xs = list(symbols(m))
    b = [list(r) for r in btilde]
    for k in word:
        k0 = k - 1
        pos = sympy.Mul(*[xs[j] ** b[j][k0] for j in range(m) if b[j][k0] > 0])
        neg = sympy.Mul(*[xs[j] ** (-b[j][k0]) for j in range(m) if b[j][k0] < 0])
        xs[k0] = sympy.cancel((pos + neg) / xs[k0])
        b = [list(r) for r in mutate_matrix_classic(b, k)]
    return xs


def solve_dominance(btilde, diff):
    """Rational v with B~ v = diff via sympy, or None."""
    mat = sympy.Matrix(btilde)
    try:
        sol, params = mat.gauss_jordan_solve(sympy.Matrix(diff))
    except ValueError:
        return None
    assert params.shape[0] == 0
    return tuple(sol)


def pairwise_maximum(u, btilde):
    """Degree of a pointed element by the O(k^2) pairwise scan with sympy solves."""
    support = [e for e, _ in u.items()]

    def leq(a, b):
        v = solve_dominance(btilde, [x - y for x, y in zip(a, b)])
        return v is not None and all(x.is_integer and x >= 0 for x in v)

    maxima = [h for h in support if not any(h2 != h and leq(h, h2) for h2 in support)]
    return maxima


def trop_max(p, point):
    """Max-plus evaluation of a subtraction-free Laurent polynomial."""
    return max(sum(a * b for a, b in zip(e, point)) for e, _ in p.items())


def trop_ratio(num, den, point):
    return trop_max(num, point) - trop_max(den, point)


def all_words(n, depth):
    out = [()]
    level = [()]
    for _ in range(depth):
        level = [w + (k,) for w in level for k in range(1, n + 1) if not w or w[-1] != k]
        out.extend(level)
    return out


def pentagon_clusters():
    """The five clusters of coefficient-free A2 as sets of sympy expressions."""
    x1, x2 = sympy.symbols("x1:3")
    seq = [x1, x2]
    # x_{i+1} x_{i-1} = 1 + x_i
    while len(seq) < 7:
        seq.append(sympy.cancel((1 + seq[-1]) / seq[-2]))
    return [frozenset(sympy.cancel(e) for e in seq[i : i + 2]) for i in range(5)]


def products(iterable):
    return list(itertools.combinations(iterable, 2))

"""End-to-end acceptance checks. Each test carries the number of the criterion it decides."""

import itertools
import random
import time

import pytest
import sympy

from oracles import (
    mutate_matrix_classic,
    pairwise_maximum,
    pentagon_clusters,
    sympy_clusters,
    sympy_det,
    sympy_rank,
    to_sympy,
)
from tropf import linalg as la
from tropf.catalog import (
    MARKOV,
    a2_coefficient_free,
    a2_principal,
    a3_principal,
    b2_principal,
    markov_principal,
)
from tropf.invariant import (
    check_seed_independence,
    f_invariant,
    is_log_canonical,
    is_product_cluster_monomial,
    poisson_bracket,
)
from tropf.laurent import LaurentPoly
from tropf.pointed import c_matrix, certificate_at, certify_good, certify_pointed, expand_in_chart, g_matrix
from tropf.seedfile import cluster_monomial
from tropf.seeds import (
    MutationMatrix,
    check_compatible_pair,
    e_matrix,
    f_matrix,
    find_skew_symmetrizer,
    mutate_matrix,
    mutate_pair,
    tree_path,
    vertices,
)
from tropf.tropical import are_compatible, point_y, transport_y


def elapsed(start):
    return time.perf_counter() - start


def random_mutation_matrix(rng, max_m=6, max_n=4, bound=3):
    """Principal part C D with C skew and D positive diagonal; frozen rows arbitrary."""
    n = rng.randint(1, max_n)
    m = rng.randint(n, max_m)
    d = [rng.randint(1, 3) for _ in range(n)]
    c = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            limit = bound // max(d[i], d[j])
            c[i][j] = rng.randint(-limit, limit)
            c[j][i] = -c[i][j]
    rows = [tuple(c[i][j] * d[j] for j in range(n)) for i in range(n)]
    rows += [tuple(rng.randint(-bound, bound) for _ in range(n)) for _ in range(m - n)]
    return tuple(rows)


def a2_cluster_variables(root):
    found = []
    for t in vertices(2, 5):
        for x in root.seed_at(t).cluster[:2]:
            if x not in found:
                found.append(x)
    return found


def specialize_frozen(p, n):
    """Coefficient-free image: frozen variables set to 1, as a sympy expression."""
    x = sympy.symbols(f"x1:{n + 1}")
    return sympy.cancel(sum(c * sympy.Mul(*[x[i] ** e[i] for i in range(n)]) for e, c in p.items()))


@pytest.mark.acceptance(1)
def test_mutation_algebra_suite():
    rng = random.Random(20261019)
    samples = [random_mutation_matrix(rng) for _ in range(120)]
    start = time.perf_counter()
    checked = 0
    for rows in samples:
        bt = MutationMatrix(rows)
        s = find_skew_symmetrizer(bt.principal)
        r = la.rank(bt.rows)
        for k in range(1, bt.n + 1):
            mu = mutate_matrix(bt, k)
            assert mutate_matrix(mu, k) == bt
            assert la.rank(mu.rows) == r
            assert find_skew_symmetrizer(mu.principal) == s
            for sign in (1, -1):
                e, f = e_matrix(bt, k, sign), f_matrix(bt, k, sign)
                assert la.matmul(e, e) == la.identity(bt.m)
                assert la.matmul(f, f) == la.identity(bt.n)
                assert la.matmul(la.matmul(e, bt.rows), f) == mu.rows
            checked += 1
    duration = elapsed(start)
    assert len(samples) >= 100 and checked >= 100
    assert duration < 5, f"{duration:.2f}s"
    # independent oracles, outside the timed region
    for rows in samples[:40]:
        for k in range(1, len(rows[0]) + 1):
            assert mutate_matrix(rows, k).rows == mutate_matrix_classic(rows, k)
        assert la.rank(rows) == sympy_rank(rows)


@pytest.mark.acceptance(2)
def test_compatible_pair_suite():
    roots = [a2_principal(), b2_principal()]
    start = time.perf_counter()
    count = 0
    for root in roots:
        initial = root.pair
        words = [w for length in range(6) for w in itertools.product(range(1, root.n + 1), repeat=length)]
        for word in words:
            pair = initial
            for k in word:
                plus, minus = mutate_pair(pair, k, 1), mutate_pair(pair, k, -1)
                assert plus == minus
                pair = plus
            assert check_compatible_pair(pair.btilde, pair.lam).s == initial.s
            count += 1
    duration = elapsed(start)
    assert count == 2 * 63
    assert duration < 5, f"{duration:.2f}s"


@pytest.mark.acceptance(3)
def test_a2_enumeration():
    start = time.perf_counter()
    root = a2_coefficient_free()
    found = set()
    for t in vertices(2, 6):
        found.update(root.seed_at(t).cluster)
    duration = elapsed(start)
    oracle = {sympy.cancel(e) for e in set().union(*pentagon_clusters())}
    x1, x2 = sympy.symbols("x1:3")
    brute = {x1, x2, (1 + x2) / x1, (1 + x1 + x2) / (x1 * x2), (1 + x1) / x2}
    assert oracle == {sympy.cancel(e) for e in brute}
    assert len(found) == 5
    assert {sympy.cancel(to_sympy(p)) for p in found} == oracle
    assert duration < 1, f"{duration:.2f}s"


@pytest.mark.acceptance(4)
def test_laurent_positivity_smoke():
    cases = [(a2_principal(), 6), (a3_principal(), 6), (markov_principal(), 4)]
    start = time.perf_counter()
    total = 0
    for root, depth in cases:
        for t in vertices(root.n, depth):
            for x in root.seed_at(t).cluster:
                assert isinstance(x, LaurentPoly)
                assert all(c > 0 for c in x.coefficients())
                total += 1
    duration = elapsed(start)
    assert duration < 60, f"{duration:.2f}s"
    assert total > 0
    # the Laurent expansions agree with rational-function mutation
    for root, depth in [(cases[0][0], 6), (cases[1][0], 4), (cases[2][0], 2)]:
        for t in vertices(root.n, depth):
            ours = root.seed_at(t).cluster
            theirs = sympy_clusters(root.btilde.rows, t)
            for p, q in zip(ours, theirs):
                assert sympy.cancel(to_sympy(p) - q) == 0


@pytest.mark.acceptance(5)
def test_g_c_determinants():
    for root in (a2_principal(), a3_principal()):
        for t in vertices(root.n, 6):
            g, c = g_matrix(root, t), c_matrix(root, t)
            assert la.det(g) in (1, -1) and la.det(c) in (1, -1)
            assert sympy_det(g) == la.det(g) and sympy_det(c) == la.det(c)


@pytest.mark.acceptance(6)
def test_degree_consistency():
    rng = random.Random(6)
    roots = [a2_principal(), a3_principal(), b2_principal()]
    for _ in range(60):
        root = rng.choice(roots)
        t = tuple(rng.randint(1, root.n) for _ in range(rng.randint(0, 5)))
        w = tuple(rng.randint(1, root.n) for _ in range(rng.randint(0, 5)))
        h = tuple(rng.randint(0, 2) for _ in range(root.n)) + tuple(rng.randint(-2, 2) for _ in range(root.m - root.n))
        u = cluster_monomial(root, t, h)
        g = certificate_at(u, root, w).g
        assert g == la.matvec(g_matrix(root, t, w), h)
        assert pairwise_maximum(expand_in_chart(u, root, w), root.btilde_at(w).rows) == [g]
    for root in roots:
        for t in vertices(root.n, 5):
            for j in range(root.m):
                e = tuple(int(i == j) for i in range(root.m))
                p = point_y(t, e, root)
                for w in vertices(root.n, 2):
                    x = root.seed_at(t).cluster[j]
                    assert certificate_at(x, root, w).g == transport_y(p, tree_path(t, w), root)


@pytest.mark.acceptance(7)
def test_seed_independence_audit():
    root = a2_principal()
    elements = a2_cluster_variables(root) + [LaurentPoly.variable(3, 4), LaurentPoly.variable(4, 4)]
    assert len(elements) == 7
    for u, v in itertools.product(elements, repeat=2):
        report = check_seed_independence(u, v, root, 5)
        assert report.passed, report.witnesses()
        assert len(set(report.values.values())) == 1


@pytest.mark.acceptance(8)
def test_f_invariant_values():
    a2 = a2_principal()
    x1, x2 = LaurentPoly.variable(1, 4), LaurentPoly.variable(2, 4)
    x1p = a2.seed_at((1,)).cluster[0]
    assert f_invariant(x1, x1p, a2) == 1
    assert f_invariant(x1, x2, a2) == 0
    rng = random.Random(8)
    roots = [a2, a3_principal(), b2_principal()]
    for _ in range(40):
        root = rng.choice(roots)
        t = tuple(rng.randint(1, root.n) for _ in range(rng.randint(0, 4)))
        h = tuple(rng.randint(0, 3) for _ in range(root.n)) + tuple(rng.randint(-2, 2) for _ in range(root.m - root.n))
        u = cluster_monomial(root, t, h)
        assert f_invariant(u, u, root) == 0
    b2 = b2_principal()
    v = b2.seed_at((1,)).cluster[0]
    fvec = certificate_at(v, b2, ()).fvec
    assert f_invariant(x1, v, b2) == 2 == b2.s[0] * fvec[0]


def pentagon_adjacency():
    clusters = [{sympy.cancel(e) for e in c} for c in pentagon_clusters()]
    return lambda a, b: any(a in c and b in c for c in clusters)


@pytest.mark.acceptance(9)
def test_product_criterion():
    root = a2_principal()
    variables = a2_cluster_variables(root)
    assert len(variables) == 5
    adjacent = pentagon_adjacency()
    pairs = list(itertools.combinations(variables, 2))
    assert len(pairs) == 10
    agree = 0
    for u, v in pairs:
        expected = adjacent(specialize_frozen(u, 2), specialize_frozen(v, 2))
        assert bool(is_product_cluster_monomial(u, v, root)) == expected
        agree += 1
    assert agree == 10


@pytest.mark.acceptance(10)
def test_sign_coherence():
    root = a2_principal()
    compatible_pairs = [
        (u, v) for u, v in itertools.combinations(a2_cluster_variables(root), 2) if is_product_cluster_monomial(u, v, root)
    ]
    assert len(compatible_pairs) == 5
    for u, v in compatible_pairs:
        p = point_y((), certificate_at(u, root, ()).g, root)
        q = point_y((), certificate_at(v, root, ()).g, root)
        assert are_compatible(p, q, 5, root)
        cert = certify_good(u * v, root, 4)
        assert cert.verdict == "good-to-depth(4)"


@pytest.mark.acceptance(11)
def test_poisson_suite():
    root = a2_principal()
    for t in vertices(2, 4):
        lam = root.lambda_at(t)
        cl = root.seed_at(t).cluster
        for i, j in itertools.product(range(4), repeat=2):
            assert poisson_bracket(cl[i], cl[j], root) == lam[i][j] * cl[i] * cl[j]
    x1, x2 = LaurentPoly.variable(1, 4), LaurentPoly.variable(2, 4)
    x1p = root.seed_at((1,)).cluster[0]
    assert is_log_canonical(x1, x1p, root).verdict == "no"
    assert is_log_canonical(x2, x1p, root).verdict == "yes(c=0)"

    pool = a2_cluster_variables(root)
    yes_pairs = 0
    for u, v in itertools.product(pool, repeat=2):
        if is_log_canonical(u, v, root):
            yes_pairs += 1
            assert f_invariant(u, v, root) == 0
    assert yes_pairs > 0
    for w in vertices(2, 4):
        for k in range(2):
            xk = root.seed_at(w).cluster[k]
            for u in pool:
                if is_log_canonical(u, xk, root):
                    assert certify_pointed(expand_in_chart(u, root, w), root.btilde_at(w)).fvec[k] == 0


@pytest.mark.acceptance(12)
def test_markov_matrix_identity():
    for k in (1, 2, 3):
        mu = mutate_matrix(MARKOV, k).rows
        assert mu == la.neg(MARKOV)
        assert mutate_matrix_classic(MARKOV, k) == mu

"""Independent brute-force oracles.

None of these reuse the library's algorithms; they are slow and only meant
for small inputs.
"""

from collections import Counter
from fractions import Fraction
from itertools import combinations, permutations, product
from math import gcd, inf


def val(x, p):
    x = Fraction(x)
    if x == 0:
        return inf
    v, a, b = 0, x.numerator, x.denominator
    while a % p == 0:
        a //= p
        v += 1
    while b % p == 0:
        b //= p
        v -= 1
    return v


def det(rows):
    """Leibniz formula."""
    n = len(rows)
    total = Fraction(0)
    for perm in permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = Fraction(1)
        for i in range(n):
            term *= rows[i][perm[i]]
        total += -term if inv % 2 else term
    return total


def type_by_minors(rows, p):
    """Elementary divisor exponents from determinantal divisors.

    d_k = min valuation of the k x k minors, e_k = d_k - d_{k-1}; returned
    weakly decreasing.
    """
    n = len(rows)
    d = [0]
    for k in range(1, n + 1):
        best = inf
        for I in combinations(range(n), k):
            for J in combinations(range(n), k):
                best = min(best, val(det([[rows[i][j] for j in J] for i in I]), p))
        d.append(best)
    return tuple(sorted((d[k] - d[k - 1] for k in range(1, n + 1)), reverse=True))


# -- finite abelian p-groups ------------------------------------------------


def all_subgroups(shape, p):
    """Every subgroup of sum Z/p^{k_i}, as frozensets of tuples."""
    mods = [p**k for k in shape]
    elems = list(product(*(range(m) for m in mods)))

    def add(x, y):
        return tuple((a + b) % m for a, b, m in zip(x, y, mods))

    def closure(gens):
        zero = tuple(0 for _ in mods)
        S = {zero}
        frontier = [zero]
        while frontier:
            new = []
            for s in frontier:
                for g in gens:
                    t = add(s, g)
                    if t not in S:
                        S.add(t)
                        new.append(t)
            frontier = new
        return frozenset(S)

    subs = {closure([]): []}
    frontier = [(S, g) for S, g in subs.items()]
    while frontier:
        new = []
        for S, gens in frontier:
            for x in elems:
                if x not in S:
                    T = closure(gens + [x])
                    if T not in subs:
                        subs[T] = gens + [x]
                        new.append((T, gens + [x]))
        frontier = new
    return set(subs), elems, mods


def log_p(n, p):
    e = 0
    while n > 1:
        assert n % p == 0
        n //= p
        e += 1
    return e


def subgroup_invariants(shape, p):
    """For every subgroup S: (l(S), rank S, l(M/S), rank M/S, has a complement)."""
    subs, elems, mods = all_subgroups(shape, p)
    order = len(elems)

    def mult(S, c):
        return frozenset(tuple((c * a) % m for a, m in zip(x, mods)) for x in S)

    pM = mult(frozenset(elems), p)
    out = []
    by_size = {}
    for S in subs:
        by_size.setdefault(len(S), []).append(S)
    for S in subs:
        zero_only = [C for C in by_size.get(order // len(S), []) if len(C & S) == 1]
        summand = bool(zero_only)
        pS = mult(S, p)
        SpM = {tuple((a + b) % m for a, b, m in zip(x, y, mods)) for x in S for y in pM}
        out.append(
            (
                log_p(len(S), p),
                log_p(len(S) // len(pS), p),
                log_p(order // len(S), p),
                log_p(order // len(SpM), p),
                summand,
            )
        )
    return out


# -- Newton points ----------------------------------------------------------


def dieudonne_manin_ok(vec):
    """Weakly decreasing and every isoclinic part O(d/h)^k has h | multiplicity."""
    vec = [Fraction(x) for x in vec]
    if any(vec[i] < vec[i + 1] for i in range(len(vec) - 1)):
        return False
    for lam, c in Counter(vec).items():
        if c % lam.denominator:
            return False
    return True


def dominated(x, y):
    """y - x as a non-negative combination of e_i - e_{i+1}, by solving the linear system."""
    n = len(x)
    d = [Fraction(b) - Fraction(a) for a, b in zip(x, y)]
    # unknowns c_1..c_{n-1}; equations: d_1 = c_1, d_i = c_i - c_{i-1}, d_n = -c_{n-1}
    rows = []
    for i in range(n):
        row = [Fraction(0)] * (n - 1)
        if i < n - 1:
            row[i] = Fraction(1)
        if i > 0:
            row[i - 1] = Fraction(-1)
        rows.append(row + [d[i]])
    # Gaussian elimination
    m = n - 1
    r = 0
    pivots = []
    for col in range(m):
        piv = next((i for i in range(r, n) if rows[i][col] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        rows[r] = [v / rows[r][col] for v in rows[r]]
        for i in range(n):
            if i != r and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
    if any(all(v == 0 for v in row[:m]) and row[m] != 0 for row in rows):
        return False
    c = [rows[i][m] for i in range(len(pivots))]
    return all(v >= 0 for v in c)


def _decreasing_with_sum(values, n, total):
    values = sorted(values, reverse=True)

    def rec(i, start, remaining, acc):
        if i == n:
            if remaining == 0:
                yield tuple(acc)
            return
        left = n - i - 1
        for idx in range(start, len(values)):
            v = values[idx]
            rest = remaining - v
            # remaining entries lie in [values[-1], v]
            if rest > left * v or rest < left * values[-1]:
                continue
            yield from rec(i + 1, idx, rest, acc + [v])

    yield from rec(0, 0, total, [])


def naive_bmu(bp, mu):
    """Generate-and-filter over vectors in (1/lcm(1..n)) Z inside the slope box."""
    n = len(bp)
    den = 1
    for k in range(1, n + 1):
        den = den * k // gcd(den, k)
    bp = [Fraction(x) for x in bp]
    lo = bp[-1] + mu[-1]
    hi = bp[0] + mu[0]
    grid = [Fraction(t, den) for t in range(int(lo * den), int(hi * den) + 1)]
    total = sum(bp) + sum(mu)
    out = []
    for v in _decreasing_with_sum(grid, n, total):
        if not dieudonne_manin_ok(v):
            continue
        diff = [a - b for a, b in zip(v, bp)]
        if dominated(diff, mu) and sum(v) - sum(bp) == sum(mu):
            out.append(v)
    return sorted(out)


def rank2_semistable_targets(slopes):
    """Semistable E' of degree deg E + 1 with lambda_i(E) <= lambda_i(E') <= lambda_i(E) + 1.

    ``slopes`` is the slope vector (descending) of a rank 2 bundle; returns
    the list of target slope vectors.
    """
    a, b = slopes
    deg = a + b + 1
    target = (Fraction(deg, 2), Fraction(deg, 2))
    if all(x <= y <= x + 1 for x, y in zip((a, b), target)):
        return [target]
    return []

"""Finite modules M = Z/p^{k_1} + ... + Z/p^{k_n} and their submodules up to automorphism.

A submodule K of M is encoded by the lattice L = preimage of K in Z^n,
which contains D = (p^{k_1}, ..., p^{k_n}) Z^n.  All arithmetic happens in
Z/p^{K+1} with K = max k_i; since D contains p^{K+1} Z^n nothing is lost.
The canonical form of K is the reduced echelon (Hermite) form of L modulo
p^{K+1}, computed with the rows of D included so that the annihilator
relations are taken into account.

Enumerating all submodules is hopeless for shapes such as (1^8) at p=3
(about 1.3e8 subspaces), so submodules are enumerated up to the action of
Aut(M).  Everything we need (lengths, ranks, purity, types) is invariant
under that action.  The enumeration grows a basis one cyclic summand at a
time: every submodule has a basis x_1, ..., x_r with ord(x_1) >= ... >=
ord(x_r) and K = <x_1> + ... + <x_r> direct, so from a representative R of
rank t we only adjoin elements x with ord(x) <= min order of R and
<x> n R = 0.  After each step the generators are pushed towards a normal
form by explicit automorphisms of M and changes of generators, which only
merges representatives of one orbit and so never loses coverage.  The
normal form is not guaranteed to be a complete invariant, so a few orbits
may be represented more than once; that costs time, not correctness.
"""

from dataclasses import dataclass
from functools import lru_cache
from itertools import product


class FiniteModule:
    """The module Z/p^{k_1} + ... + Z/p^{k_n} (zero exponents dropped, sorted decreasing)."""

    def __init__(self, shape, p: int):
        k = tuple(sorted((e for e in shape if e > 0), reverse=True))
        self.k = k
        self.p = p
        self.n = len(k)
        self.K = k[0] if k else 0
        self.q = q = p ** (self.K + 1)
        self.mods = tuple(p**e for e in k)
        self.pw = tuple(p**e for e in range(self.K + 2))
        self.total_length = sum(k)
        val = [self.K + 1] * q
        inv = [0] * q
        for a in range(1, q):
            v, b = 0, a
            while b % p == 0:
                b //= p
                v += 1
            val[a] = v
            if v == 0:
                inv[a] = pow(a, -1, q)
        self.val = val
        self.inv = inv

    # -- canonical forms -------------------------------------------------

    def key(self, gens) -> tuple:
        """Canonical Hermite form of the submodule generated by ``gens``."""
        n, q, val, inv, pw = self.n, self.q, self.val, self.inv, self.pw
        rows = [list(g) for g in gens]
        for i, m in enumerate(self.mods):
            r = [0] * n
            r[i] = m
            rows.append(r)
        out = []
        for col in range(n):
            bi, bv = -1, self.K + 2
            for idx, r in enumerate(rows):
                a = r[col] % q
                if a and val[a] < bv:
                    bi, bv = idx, val[a]
            best = rows.pop(bi)
            pv = pw[bv]
            u = inv[(best[col] % q) // pv]
            piv = [(x * u) % q for x in best]
            for idx, r in enumerate(rows):
                a = r[col] % q
                if a:
                    c = a // pv
                    rows[idx] = [(x - c * y) % q for x, y in zip(r, piv)]
            out.append(piv)
        for j in range(n):
            d = out[j][j]
            for i in range(j):
                c = out[i][j] // d
                if c:
                    out[i] = [(x - c * y) % q for x, y in zip(out[i], out[j])]
        return tuple(tuple(r) for r in out)

    def length(self, key) -> int:
        """Length of the submodule with canonical form ``key``."""
        return sum(self.k[i] - self.val[key[i][i]] for i in range(self.n))

    def span_length(self, gens) -> int:
        return self.length(self.key(gens))

    def order_exp(self, x) -> int:
        """e with ord(x) = p^e."""
        return max((self.k[i] - self.val[x[i]] for i in range(self.n) if x[i]), default=0)

    def elements(self):
        return product(*(range(m) for m in self.mods))

    # -- normalisation by automorphisms ----------------------------------

    def normalize(self, gens) -> list:
        cur = [tuple(g) for g in gens]
        for _ in range(8):
            nxt = self._normalize_once(cur)
            if nxt == cur:
                break
            cur = nxt
        return cur

    def _normalize_once(self, gens) -> list:
        # G[c][i]: coordinate i of generator c.  Column operations change
        # generators; row operations are automorphisms of M:
        #   row swaps between equal exponents, unit scalings of a row, and
        #   row_i2 -= m * row_i with v(m) >= max(0, k_i2 - k_i).
        n, k, q, mods, pw, val, inv = self.n, self.k, self.q, self.mods, self.pw, self.val, self.inv
        G = [list(g) for g in gens]
        r = len(G)
        done_r, done_c = set(), set()

        def swap_rows(a, b):
            for col in G:
                col[a], col[b] = col[b], col[a]

        def row_sub(i2, i, m):
            mod = mods[i2]
            for col in G:
                col[i2] = (col[i2] - m * col[i]) % mod

        while True:
            best = None
            for c in range(r):
                if c in done_c:
                    continue
                col = G[c]
                for i in range(n):
                    if i in done_r or not col[i]:
                        continue
                    vv = val[col[i]]
                    key = (vv - k[i], k[i], i, c)
                    if best is None or key < best[0]:
                        best = (key, i, c, vv)
            if best is None:
                break
            _, i, c, vv = best
            tgt = min(t for t in range(n) if t not in done_r and k[t] == k[i])
            if tgt != i:
                swap_rows(i, tgt)
                i = tgt
            pv = pw[vv]
            u = inv[G[c][i] // pv]
            G[c] = [(x * u) % mods[t] for t, x in enumerate(G[c])]
            for c2 in range(r):
                if c2 == c:
                    continue
                a = G[c2][i]
                if a and val[a] >= vv:
                    f = a // pv
                    G[c2] = [(x - f * y) % mods[t] for t, (x, y) in enumerate(zip(G[c2], G[c]))]
            for i2 in range(n):
                if i2 == i:
                    continue
                a = G[c][i2]
                if not a:
                    continue
                sh = max(0, k[i2] - k[i])
                if val[a] >= vv + sh:
                    row_sub(i2, i, (a // pw[vv + sh]) * pw[sh])
            # what is left in column c sits in rows of smaller exponent
            res_done = set()
            while True:
                rb = None
                for i2 in range(n):
                    if i2 == i or i2 in done_r or i2 in res_done:
                        continue
                    a = G[c][i2]
                    if not a:
                        continue
                    cand = (val[a] - k[i2], val[a], i2)
                    if rb is None or cand < rb:
                        rb = cand
                if rb is None:
                    break
                _, vj, j = rb
                tgt = min(
                    t for t in range(n)
                    if t not in done_r and t not in res_done and t != i and k[t] == k[j]
                )
                if tgt != j:
                    swap_rows(j, tgt)
                    j = tgt
                uj = inv[G[c][j] // pw[vj]]
                for i2 in range(n):
                    if i2 in (i, j) or i2 in done_r or i2 in res_done:
                        continue
                    a = G[c][i2]
                    if not a:
                        continue
                    sh = max(0, k[i2] - k[j])
                    if val[a] >= vj + sh:
                        row_sub(i2, j, (a // pw[vj + sh]) * uj * pw[sh])
                res_done.add(j)
            done_r.add(i)
            done_c.add(c)
        # make the first nonzero entry of every row a power of p
        for i in range(n):
            for c in range(r):
                a = G[c][i]
                if a:
                    u = inv[a // pw[val[a]]]
                    if u != 1:
                        for col in G:
                            col[i] = (col[i] * u) % mods[i]
                    break
        return [tuple(g) for g in G if any(g)]

    # -- orbit enumeration -----------------------------------------------

    def orbit_representatives(self) -> list:
        """Generator tuples, at least one per Aut(M)-orbit of submodules."""
        val, pw = self.val, self.pw
        cand = []
        for x in self.elements():
            lead = next((a for a in x if a), 0)
            if lead and lead == pw[val[lead]]:
                cand.append((self.order_exp(x), x))
        root = self.key([])
        level = {root: ((), self.K)}
        reps = dict(level)
        while level:
            nxt = {}
            for rkey, (gens, o) in level.items():
                lr = self.length(rkey)
                tried = set()
                for ox, x in cand:
                    if ox > o:
                        continue
                    raw = self.key(gens + (x,))
                    if (raw, ox) in tried:
                        continue
                    tried.add((raw, ox))
                    # <x> meets R trivially iff the length grows by ord(x)
                    if self.length(raw) != lr + ox or raw in reps or raw in nxt:
                        continue
                    T = tuple(self.normalize(gens + (x,)))
                    kk = self.key(T)
                    if kk in reps or kk in nxt:
                        continue
                    nxt[kk] = (T, ox)
            level = nxt
            reps.update(nxt)
        return [gens for gens, _ in reps.values()]

    # -- invariants of a submodule -----------------------------------------

    def _multiple(self, gens, e) -> list:
        pe = self.pw[e] if e < len(self.pw) else self.p**e
        return [tuple((pe * a) % m for a, m in zip(g, self.mods)) for g in gens]

    def _pM(self, e) -> list:
        gens = []
        for i, m in enumerate(self.mods):
            if self.k[i] > e:
                v = [0] * self.n
                v[i] = self.pw[e]
                gens.append(tuple(v))
        return gens

    def submodule_data(self, gens) -> "SubmoduleData":
        """Lengths, ranks, types and purity of K = <gens> and of N = M/K."""
        gens = [tuple(g) for g in gens]
        K = self.K
        lK = self.span_length(gens)
        # l(p^e K) and l(K + p^e M) for e = 0..K
        l_pK = [self.span_length(self._multiple(gens, e)) for e in range(K + 1)]
        l_sum = [self.span_length(gens + self._pM(e)) for e in range(K + 1)]
        l_pM = [sum(max(0, ki - e) for ki in self.k) for e in range(K + 1)]
        l_pN = [l_sum[e] - lK for e in range(K + 1)]
        # K is pure (equivalently a direct summand) iff K n p^e M = p^e K for all e
        pure = all(lK + l_pM[e] - l_sum[e] == l_pK[e] for e in range(1, K + 1))
        return SubmoduleData(
            length=lK,
            rank=l_pK[0] - (l_pK[1] if K >= 1 else 0),
            type=_type_from_lengths(l_pK),
            quotient_length=self.total_length - lK,
            quotient_rank=l_pN[0] - (l_pN[1] if K >= 1 else 0),
            quotient_type=_type_from_lengths(l_pN),
            pure=pure,
        )


def _type_from_lengths(lengths) -> tuple:
    """Partition of a finite p-group from l(p^e X), e = 0, 1, ..., K (l(p^{K+1} X) = 0)."""
    ls = list(lengths) + [0]
    # number of cyclic factors of exponent >= e is l(p^{e-1} X) - l(p^e X)
    at_least = [ls[e - 1] - ls[e] for e in range(1, len(ls))]
    parts = []
    for e in range(len(at_least), 0, -1):
        more = at_least[e] if e < len(at_least) else 0
        parts.extend([e] * (at_least[e - 1] - more))
    return tuple(parts)


@dataclass(frozen=True)
class SubmoduleData:
    length: int
    rank: int
    type: tuple
    quotient_length: int
    quotient_rank: int
    quotient_type: tuple
    pure: bool


@lru_cache(maxsize=None)
def orbit_data(shape: tuple, p: int) -> tuple:
    """SubmoduleData for one representative of each Aut(M)-orbit (cached per shape and p)."""
    M = FiniteModule(shape, p)
    return tuple(M.submodule_data(g) for g in M.orbit_representatives())

"""The mod-n Heisenberg group and its monomial representations, exactly.

All matrix entries live in Z[zeta_n], represented as integer coefficient
vectors modulo the n-th cyclotomic polynomial; nothing is floated.
Eigenvalue multisets of monomial matrices come from the cycle structure
of the underlying permutation, so element-wise projective conjugacy and
global twist equivalence are both decided by exact integer arithmetic.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd, lcm

from .intmat import InputError


# ---------------------------------------------------------------------------
# cyclotomic integers


def _poly_divmod(num, den):
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for i in range(len(out) - 1, -1, -1):
        coef = num[i + len(den) - 1]
        if coef % den[-1] != 0:
            raise AssertionError("non-monic cyclotomic division")
        coef //= den[-1]
        out[i] = coef
        for j, d in enumerate(den):
            num[i + j] -= coef * d
    if any(x != 0 for x in num):
        raise AssertionError("cyclotomic division left a remainder")
    return out


_CYCLO_CACHE: dict = {}


def cyclotomic_polynomial(n: int) -> tuple:
    """Coefficients (low to high) of the n-th cyclotomic polynomial."""
    if n in _CYCLO_CACHE:
        return _CYCLO_CACHE[n]
    poly = [-1] + [0] * (n - 1) + [1]   # x^n - 1
    for d in range(1, n):
        if n % d == 0:
            poly = _poly_divmod(poly, list(cyclotomic_polynomial(d)))
    _CYCLO_CACHE[n] = tuple(poly)
    return _CYCLO_CACHE[n]


class CyclotomicRing:
    """Z[zeta_n] with elements as coefficient tuples modulo Phi_n."""

    def __init__(self, n: int):
        if n < 1:
            raise InputError("cyclotomic order must be positive")
        self.n = n
        self.phi = cyclotomic_polynomial(n)
        self.degree = len(self.phi) - 1
        # reduction table for x^k, k < 2 * degree
        self._pow = []
        for k in range(2 * self.degree + n):
            if k < self.degree:
                vec = [0] * self.degree
                vec[k] = 1
            else:
                prev = list(self._pow[k - 1])
                vec = [0] + prev[:-1]
                top = prev[-1]
                if top:
                    for i in range(self.degree):
                        vec[i] -= top * self.phi[i]
            self._pow.append(tuple(vec))

    def zero(self):
        return (0,) * self.degree

    def one(self):
        return self.zeta_power(0)

    def zeta_power(self, k: int):
        k %= self.n
        vec = [0] * self.degree
        for i, c in enumerate(self._pow[k]):
            vec[i] += c
        return tuple(vec)

    def add(self, a, b):
        return tuple(x + y for x, y in zip(a, b))

    def sub(self, a, b):
        return tuple(x - y for x, y in zip(a, b))

    def scale(self, c: int, a):
        return tuple(c * x for x in a)

    def mul(self, a, b):
        out = [0] * self.degree
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j, y in enumerate(b):
                if y == 0:
                    continue
                for t, c in enumerate(self._pow[i + j]):
                    out[t] += x * y * c
        return tuple(out)

    def conj(self, a):
        """The automorphism zeta -> zeta^{-1}."""
        out = self.zero()
        for i, x in enumerate(a):
            if x:
                out = self.add(out, self.scale(x, self.zeta_power((-i) % self.n)))
        return out

    def is_zero(self, a) -> bool:
        return all(x == 0 for x in a)


# ---------------------------------------------------------------------------
# the group


@dataclass(frozen=True)
class HeisenbergGroup:
    """Order n^3 group generated by A, B, Z with [A, B] = Z central.

    Elements are triples (a, b, c) standing for A^a B^b Z^c; the product
    (a, b, c)(a', b', c') = (a + a', b + b', c + c' - a' b) matches the
    matrix model below exactly.
    """

    n: int

    def __post_init__(self):
        if self.n < 2:
            raise InputError("modulus must be at least 2")

    def elements(self):
        n = self.n
        return [(a, b, c) for a in range(n) for b in range(n) for c in range(n)]

    @property
    def order(self) -> int:
        return self.n ** 3

    def mul(self, g, h):
        n = self.n
        return ((g[0] + h[0]) % n, (g[1] + h[1]) % n,
                (g[2] + h[2] - h[0] * g[1]) % n)

    def inv(self, g):
        n = self.n
        a, b, c = g
        return ((-a) % n, (-b) % n, (-c - a * b) % n)

    def identity(self):
        return (0, 0, 0)

    def commutator(self, g, h):
        return self.mul(self.mul(g, h), self.mul(self.inv(g), self.inv(h)))

    def center(self):
        els = self.elements()
        out = []
        for z in els:
            if all(self.mul(z, g) == self.mul(g, z) for g in els):
                out.append(z)
        return out

    def conjugacy_classes(self):
        els = self.elements()
        seen = set()
        classes = []
        for g in els:
            if g in seen:
                continue
            orbit = {self.mul(self.mul(h, g), self.inv(h)) for h in els}
            seen |= orbit
            classes.append(tuple(sorted(orbit)))
        return classes


def heisenberg_group(n: int) -> HeisenbergGroup:
    return HeisenbergGroup(n)


# ---------------------------------------------------------------------------
# monomial representations


@dataclass(frozen=True)
class Monomial:
    """A monomial matrix: column j carries zeta^exps[j] in row perm[j]."""

    n: int
    perm: tuple
    exps: tuple

    def mul(self, other: "Monomial") -> "Monomial":
        # (M1 M2) e_j = zeta^{E2[j]} M1 e_{P2(j)}
        perm = tuple(self.perm[other.perm[j]] for j in range(self.n))
        exps = tuple((other.exps[j] + self.exps[other.perm[j]]) % self.n
                     for j in range(self.n))
        return Monomial(self.n, perm, exps)

    def scale(self, k: int) -> "Monomial":
        return Monomial(self.n, self.perm, tuple((e + k) % self.n for e in self.exps))

    def matrix(self):
        """Entries as {None} union Z/n: exponent of zeta, or None for zero."""
        out = [[None] * self.n for _ in range(self.n)]
        for j in range(self.n):
            out[self.perm[j]][j] = self.exps[j]
        return out

    def trace_exponents(self):
        """Exponents on the diagonal (fixed points of the permutation)."""
        return [self.exps[j] for j in range(self.n) if self.perm[j] == j]

    def det(self):
        """(sign, exponent): the determinant is sign * zeta^exponent."""
        sign = 1
        seen = [False] * self.n
        for j in range(self.n):
            if seen[j]:
                continue
            length = 0
            k = j
            while not seen[k]:
                seen[k] = True
                k = self.perm[k]
                length += 1
            if length % 2 == 0:
                sign = -sign
        return sign, sum(self.exps) % self.n

    def eigenvalue_multiset(self):
        """Eigenvalues as exponents in a common root-of-unity group.

        Each permutation cycle of length L with entry-exponent sum s
        contributes the L roots of x^L = zeta^s; all eigenvalues are
        expressed in mu_{n * M} for M the lcm of the cycle lengths.
        """
        cycles = []
        seen = [False] * self.n
        for j in range(self.n):
            if seen[j]:
                continue
            length, s = 0, 0
            k = j
            while not seen[k]:
                seen[k] = True
                s += self.exps[k]
                k = self.perm[k]
                length += 1
            cycles.append((length, s % self.n))
        M = lcm(*[c[0] for c in cycles]) if cycles else 1
        modulus = self.n * M
        eig = {}
        for L, s in cycles:
            for j in range(L):
                e = ((s + self.n * j) * (M // L)) % modulus
                eig[e] = eig.get(e, 0) + 1
        return modulus, tuple(sorted(eig.items()))


@dataclass(frozen=True)
class MonomialRep:
    """The monomial representation with B-eigenvalues zeta^{(i-1) alpha}."""

    n: int
    alpha: int

    def __post_init__(self):
        if gcd(self.alpha, self.n) != 1:
            raise InputError("alpha must be a unit modulo n")

    def rho_A(self) -> Monomial:
        n = self.n
        return Monomial(n, tuple((j - 1) % n for j in range(n)), (0,) * n)

    def rho_B(self) -> Monomial:
        n = self.n
        return Monomial(n, tuple(range(n)), tuple((j * self.alpha) % n for j in range(n)))

    def rho_Z(self) -> Monomial:
        n = self.n
        return Monomial(n, tuple(range(n)), (self.alpha % n,) * n)

    def rho(self, g) -> Monomial:
        a, b, c = g
        n = self.n
        # A^a B^b Z^c: e_j -> zeta^{alpha (b j + c)} e_{j - a}
        perm = tuple((j - a) % n for j in range(n))
        exps = tuple((self.alpha * (b * j + c)) % n for j in range(n))
        return Monomial(n, perm, exps)

    def character(self, g, ring: CyclotomicRing):
        m = self.rho(g)
        out = ring.zero()
        for e in m.trace_exponents():
            out = ring.add(out, ring.zeta_power(e))
        return out


def rep_rho(n: int, alpha: int) -> MonomialRep:
    return MonomialRep(n, alpha % n)


def rep_determinant(r: MonomialRep) -> dict:
    """Exact determinants of the images of A, B, Z as (sign, zeta exponent)."""
    return {"A": r.rho_A().det(), "B": r.rho_B().det(), "Z": r.rho_Z().det()}


def determinant_closed_form(n: int, alpha: int) -> dict:
    """The case table: A -> (-1)^(n-1); B -> 1 if n odd or alpha, n both even,
    else -1; Z -> 1."""
    det_a = (1 if (n - 1) % 2 == 0 else -1, 0)
    if n % 2 == 1 or (alpha % 2 == 0 and n % 2 == 0):
        det_b = (1, 0)
    else:
        det_b = (-1, 0)
    return {"A": det_a, "B": det_b, "Z": (1, 0)}


def _dets_equal(n: int, d1, d2) -> bool:
    """Compare (sign, exponent) pairs as elements of Z[zeta_n]."""
    ring = CyclotomicRing(n)
    v1 = ring.scale(d1[0], ring.zeta_power(d1[1]))
    v2 = ring.scale(d2[0], ring.zeta_power(d2[1]))
    return v1 == v2


def rep_determinant_matches_closed_form(n: int, alpha: int) -> bool:
    got = rep_determinant(rep_rho(n, alpha))
    want = determinant_closed_form(n, alpha)
    return all(_dets_equal(n, got[k], want[k]) for k in ("A", "B", "Z"))


def elementwise_projective_conjugate(r1: MonomialRep, r2: MonomialRep):
    """Are the two representations conjugate up to scalar at every element?

    Returns (verdict, witnesses): for each group element the scalar power
    k with matching eigenvalue multisets, when one exists.
    """
    if r1.n != r2.n:
        raise InputError("representations live over different moduli")
    G = heisenberg_group(r1.n)
    witnesses = {}
    for g in G.elements():
        e1 = r1.rho(g).eigenvalue_multiset()
        m2 = r2.rho(g)
        found = None
        for k in range(r1.n):
            if m2.scale(k).eigenvalue_multiset() == e1:
                found = k
                break
        if found is None:
            return False, witnesses
        witnesses[g] = found
    return True, witnesses


def globally_twist_equivalent(r1: MonomialRep, r2: MonomialRep) -> bool:
    """Is r1 isomorphic to r2 twisted by a character of the abelianization?

    Decided by exact character comparison over Z[zeta_n]: for each of the
    n^2 characters chi of H^{ab}, the inner product <chi_{r1}, chi * chi_{r2}>
    is computed in Z[zeta_n] and tested against |H_n|.
    """
    if r1.n != r2.n:
        raise InputError("representations live over different moduli")
    n = r1.n
    ring = CyclotomicRing(n)
    G = heisenberg_group(n)
    els = G.elements()
    chars1 = {g: r1.character(g, ring) for g in els}
    chars2 = {g: r2.character(g, ring) for g in els}
    order_vec = ring.scale(G.order, ring.one())
    for u in range(n):
        for v in range(n):
            total = ring.zero()
            for g in els:
                a, b, _ = g
                chi = ring.zeta_power(u * a + v * b)
                term = ring.mul(chars1[g], ring.conj(ring.mul(chi, chars2[g])))
                total = ring.add(total, term)
            if total == order_vec:
                return True
    return False


def character_norm_is_one(r: MonomialRep) -> bool:
    """Irreducibility via the exact character norm."""
    n = r.n
    ring = CyclotomicRing(n)
    G = heisenberg_group(n)
    total = ring.zero()
    for g in G.elements():
        ch = r.character(g, ring)
        total = ring.add(total, ring.mul(ch, ring.conj(ch)))
    return total == ring.scale(G.order, ring.one())


def projective_centralizer_monomial(r: MonomialRep):
    """Monomial matrices centralizing the projectivized image.

    Candidates commute with the images of A and B up to scalars, which
    suffices for the whole image (the scalar defect is multiplicative on
    generators).  Returns the matrices modulo global scalars.
    """
    from itertools import permutations, product
    n = r.n
    rho_a, rho_b = r.rho_A(), r.rho_B()
    reps = {}
    for perm in permutations(range(n)):
        for exps in product(range(n), repeat=n):
            m = Monomial(n, perm, exps)
            ok = True
            for gen in (rho_a, rho_b):
                left = m.mul(gen)
                right = gen.mul(m)
                # left == zeta^k right for some k
                if left.perm != right.perm:
                    ok = False
                    break
                ks = {(l - rr) % n for l, rr in zip(left.exps, right.exps)}
                if len(ks) != 1:
                    ok = False
                    break
            if ok:
                # normalize modulo scalars: force the first exponent to 0
                key = (perm, tuple((e - exps[0]) % n for e in exps))
                reps[key] = m
    return list(reps.values())

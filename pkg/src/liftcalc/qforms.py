"""Rational quadratic forms: diagonalization, Hasse symbols, Clifford splitness.

Hilbert symbols are computed by the explicit local formulas (Legendre
symbols at odd primes, the epsilon/omega formulas at 2, signs at the
real place), and the product formula is asserted on every computed
form.  The even Clifford algebra of an odd-rank form is declared split
from the Witt-invariant table; an independent structure-constants route
(explicit Clifford multiplication) is provided for cross-checks.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .intmat import InputError


@dataclass(frozen=True)
class QForm:
    gram: tuple
    rank: int

    @staticmethod
    def from_gram(rows) -> "QForm":
        g = tuple(tuple(Fraction(x) for x in r) for r in rows)
        n = len(g)
        if any(len(r) != n for r in g):
            raise InputError("Gram matrix must be square")
        for i in range(n):
            for j in range(n):
                if g[i][j] != g[j][i]:
                    raise InputError("Gram matrix must be symmetric")
        return QForm(g, n)

    @staticmethod
    def diagonal_form(entries) -> "QForm":
        entries = [Fraction(x) for x in entries]
        n = len(entries)
        return QForm(tuple(tuple(entries[i] if i == j else Fraction(0) for j in range(n))
                           for i in range(n)), n)

    def direct_sum(self, other: "QForm") -> "QForm":
        n, m = self.rank, other.rank
        rows = []
        for i in range(n):
            rows.append(list(self.gram[i]) + [Fraction(0)] * m)
        for i in range(m):
            rows.append([Fraction(0)] * n + list(other.gram[i]))
        return QForm(tuple(tuple(r) for r in rows), n + m)

    def to_json(self):
        return [[str(x) for x in r] for r in self.gram]

    @staticmethod
    def from_json(data) -> "QForm":
        try:
            return QForm.from_gram([[Fraction(x) for x in r] for r in data])
        except (TypeError, ValueError, ZeroDivisionError) as exc:
            raise InputError(f"bad Gram matrix payload: {exc}") from exc


def diagonalize(q: QForm) -> list:
    """Diagonal entries of a rationally congruent diagonal form."""
    n = q.rank
    m = [list(r) for r in q.gram]
    for i in range(n):
        if m[i][i] == 0:
            swap = next((k for k in range(i + 1, n) if m[k][k] != 0), None)
            if swap is not None:
                m[i], m[swap] = m[swap], m[i]
                for r in m:
                    r[i], r[swap] = r[swap], r[i]
            else:
                found = None
                for k in range(i, n):
                    for l in range(i, n):
                        if k != l and m[k][l] != 0:
                            found = (k, l)
                            break
                    if found:
                        break
                if found is None:
                    raise InputError("degenerate form")
                k, l = found
                # basis v_k += v_l makes the (k, k) entry 2 * m[k][l]
                for t in range(n):
                    m[k][t] += m[l][t]
                for t in range(n):
                    m[t][k] += m[t][l]
                m[i], m[k] = m[k], m[i]
                for r in m:
                    r[i], r[k] = r[k], r[i]
        if m[i][i] == 0:
            raise InputError("degenerate form")
        for k in range(i + 1, n):
            if m[k][i] != 0:
                f = m[k][i] / m[i][i]
                for t in range(n):
                    m[k][t] -= f * m[i][t]
                for t in range(n):
                    m[t][k] -= f * m[t][i]
    return [m[i][i] for i in range(n)]


def squarefree_class(x: Fraction) -> int:
    """Squarefree integer representing the square class of a nonzero rational."""
    x = Fraction(x)
    if x == 0:
        raise InputError("square class of zero")
    n = x.numerator * x.denominator
    sign = -1 if n < 0 else 1
    n = abs(n)
    out = 1
    p = 2
    while p * p <= n:
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        if e % 2:
            out *= p
        p += 1 if p == 2 else 2
    return sign * out * n


def _legendre(a: int, p: int) -> int:
    a %= p
    if a == 0:
        raise InputError("Legendre symbol of a multiple of p")
    r = pow(a, (p - 1) // 2, p)
    return 1 if r == 1 else -1


def hilbert_symbol(a: int, b: int, place) -> int:
    """The local Hilbert symbol (a, b) at a prime, 2, or "inf"."""
    if a == 0 or b == 0:
        raise InputError("Hilbert symbol needs nonzero entries")
    if place == "inf":
        return -1 if (a < 0 and b < 0) else 1
    p = int(place)
    alpha, u = _val_unit(a, p)
    beta, v = _val_unit(b, p)
    if p != 2:
        sym = 1
        if alpha % 2 and beta % 2:
            sym *= _legendre(p - 1, p)
        if beta % 2:
            sym *= _legendre(u % p, p)
        if alpha % 2:
            sym *= _legendre(v % p, p)
        return sym
    eps_u = ((u - 1) // 2) % 2
    eps_v = ((v - 1) // 2) % 2
    om_u = ((u * u - 1) // 8) % 2
    om_v = ((v * v - 1) // 8) % 2
    e = eps_u * eps_v + alpha * om_v + beta * om_u
    return -1 if e % 2 else 1


def _val_unit(n: int, p: int):
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v, n


@dataclass(frozen=True)
class QFormInvariants:
    rank: int
    signature: tuple            # (positives, negatives)
    discriminant: int           # squarefree representative of det
    hasse: dict                 # place -> +-1 over the relevant places and "inf"

    def to_json(self):
        return {
            "rank": self.rank,
            "signature": list(self.signature),
            "discriminant": self.discriminant,
            "hasse": {str(k): v for k, v in self.hasse.items()},
        }


def relevant_places(classes) -> list:
    places = {2}
    for a in classes:
        for p in _prime_factors(abs(a)):
            places.add(p)
    return ["inf"] + sorted(places)


def _prime_factors(n: int):
    out = set()
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.add(p)
            while n % p == 0:
                n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        out.add(n)
    return out


def invariants(q: QForm) -> QFormInvariants:
    """Signature, discriminant square class, and Hasse symbols of a form.

    The Hasse invariant at each place is the product of the pairwise
    Hilbert symbols of a diagonalization; the global product formula is
    verified before returning.
    """
    diag = diagonalize(q)
    classes = [squarefree_class(d) for d in diag]
    pos = sum(1 for d in diag if d > 0)
    neg = len(diag) - pos
    disc = squarefree_class(Fraction(1) * _product(classes))
    places = relevant_places(classes)
    hasse = {}
    for place in places:
        s = 1
        for i in range(len(classes)):
            for j in range(i + 1, len(classes)):
                s *= hilbert_symbol(classes[i], classes[j], place)
        hasse[place] = s
    if _product(hasse.values()) != 1:
        raise AssertionError("Hilbert product formula violated; symbol computation broken")
    return QFormInvariants(q.rank, (pos, neg), disc, hasse)


def _product(it):
    out = 1
    for x in it:
        out *= x
    return out


@dataclass(frozen=True)
class CliffordSplitness:
    split: bool
    matrix_size: int | None     # 2^n when split, for rank 2n + 1
    nontrivial_places: tuple    # places where the class of the even Clifford algebra is -1

    def to_json(self):
        return {
            "split": self.split,
            "matrix_size": self.matrix_size,
            "nontrivial_places": [str(p) for p in self.nontrivial_places],
        }


def witt_class_places(q: QForm) -> tuple:
    """Places where the Witt (Clifford) invariant of q is the nontrivial class.

    The invariant is the Hasse symbol corrected by a discriminant factor
    depending on the rank mod 8: nothing for 1, 2; (-1, -d) for 3, 4;
    (-1, -1) for 5, 6; (-1, d) for 7, 0.
    """
    inv = invariants(q)
    d = inv.discriminant
    m = q.rank % 8
    bad = []
    extra_places = set(inv.hasse)
    for p in relevant_places([d, -1]):
        extra_places.add(p)
    for place in sorted(extra_places, key=str):
        s = inv.hasse.get(place)
        if s is None:
            s = 1
            diag = [squarefree_class(x) for x in diagonalize(q)]
            for i in range(len(diag)):
                for j in range(i + 1, len(diag)):
                    s *= hilbert_symbol(diag[i], diag[j], place)
        if m in (3, 4):
            s *= hilbert_symbol(-1, -d, place)
        elif m in (5, 6):
            s *= hilbert_symbol(-1, -1, place)
        elif m in (7, 0):
            s *= hilbert_symbol(-1, d, place)
        if s == -1:
            bad.append(place)
    return tuple(bad)


def even_clifford_split(q: QForm) -> CliffordSplitness:
    """Is the even Clifford algebra of an odd-rank form a matrix algebra over Q?"""
    if q.rank % 2 == 0:
        raise InputError("even-rank forms have a quadratic center; odd rank required")
    diag = diagonalize(q)  # raises on degenerate input
    bad = witt_class_places(q)
    split = not bad
    n = (q.rank - 1) // 2
    return CliffordSplitness(split, 2 ** n if split else None, bad)


# ---------------------------------------------------------------------------
# built-in lattices


E8_GRAM = [
    [2, 0, -1, 0, 0, 0, 0, 0],
    [0, 2, 0, -1, 0, 0, 0, 0],
    [-1, 0, 2, -1, 0, 0, 0, 0],
    [0, -1, -1, 2, -1, 0, 0, 0],
    [0, 0, 0, -1, 2, -1, 0, 0],
    [0, 0, 0, 0, -1, 2, -1, 0],
    [0, 0, 0, 0, 0, -1, 2, -1],
    [0, 0, 0, 0, 0, 0, -1, 2],
]

U_GRAM = [[0, 1], [1, 0]]


def e8_form(sign: int = 1) -> QForm:
    return QForm.from_gram([[sign * x for x in r] for r in E8_GRAM])


def hyperbolic_plane() -> QForm:
    return QForm.from_gram(U_GRAM)


def k3_primitive(q_eta: int = 2) -> QForm:
    """(-E8) + (-E8) + U + U + <-q_eta>: the rank-21 primitive K3 form."""
    if q_eta <= 0:
        raise InputError("polarization degree must be positive")
    q = e8_form(-1).direct_sum(e8_form(-1))
    q = q.direct_sum(hyperbolic_plane()).direct_sum(hyperbolic_plane())
    return q.direct_sum(QForm.diagonal_form([-q_eta]))


# ---------------------------------------------------------------------------
# structure-constants oracle for the even Clifford algebra


def clifford_basis_product(S: tuple, T: tuple, diag):
    """Product of basis elements e_S e_T in the Clifford algebra of <diag>.

    Subsets are sorted index tuples; returns (coefficient, symmetric
    difference as a sorted tuple).
    """
    coeff = Fraction(1)
    out = list(S)
    for t in T:
        # move generator t leftward past the tail of ``out``
        swaps = sum(1 for x in out if x > t)
        if swaps % 2:
            coeff = -coeff
        if t in out:
            coeff *= diag[t]
            out.remove(t)
        else:
            out.append(t)
            out.sort()
    return coeff, tuple(out)


def even_clifford_quaternion_pairs(diag):
    """Commuting quaternion generator pairs inside the even Clifford algebra.

    For rank 3 returns one pair, for rank 5 two pairs whose classes
    multiply to the algebra class.  Each pair (x, y) is certified from
    the multiplication table: the two elements square to x and y, they
    anticommute, and elements of different pairs commute.
    """
    n = len(diag)
    if n not in (3, 5):
        raise InputError("oracle supports ranks 3 and 5")
    gens = [(0, i) for i in range(1, n)]  # e_1 e_i as subset pairs

    def sq(S):
        c, rest = clifford_basis_product(S, S, diag)
        if rest != ():
            raise AssertionError("generator square is not scalar")
        return c

    def anticommute(S, T):
        c1, r1 = clifford_basis_product(S, T, diag)
        c2, r2 = clifford_basis_product(T, S, diag)
        return r1 == r2 and c1 == -c2

    def commute(S, T):
        c1, r1 = clifford_basis_product(S, T, diag)
        c2, r2 = clifford_basis_product(T, S, diag)
        return r1 == r2 and c1 == c2

    pairs = []
    g1, g2 = gens[0], gens[1]
    if not anticommute(g1, g2):
        raise AssertionError("first quaternion pair does not anticommute")
    pairs.append((sq(g1), sq(g2)))
    if n == 5:
        # f1 f2 f3 and f1 f2 f4 in the algebra generated by the e_1 e_i
        def triple(a, b, c):
            coeff = Fraction(1)
            S = ()
            for g in (gens[a], gens[b], gens[c]):
                cc, S = clifford_basis_product(S, g, diag)
                coeff *= cc
            return coeff, S

        c3, F3 = triple(0, 1, 2)
        c4, F4 = triple(0, 1, 3)
        if not anticommute(F3, F4):
            raise AssertionError("second quaternion pair does not anticommute")
        for F in (F3, F4):
            for g in (g1, g2):
                if not commute(F, g):
                    raise AssertionError("the two quaternion pairs do not commute")
        # the actual generators are c3 e_{F3} and c4 e_{F4}
        pairs.append((c3 * c3 * sq(F3), c4 * c4 * sq(F4)))
    return pairs


def even_clifford_split_oracle(q: QForm) -> CliffordSplitness:
    """Splitness via the explicit even Clifford multiplication table.

    rank 1: the even part is Q.  rank 3: the even part is the quaternion
    algebra generated by e_1 e_2 and e_1 e_3, decided by a bounded search
    for an isotropic vector of its norm form (Legendre's criterion).
    rank 5: the even part is a tensor product of two quaternion algebras
    extracted from the table; its class is their symbol product.
    """
    if q.rank % 2 == 0:
        raise InputError("odd rank required")
    if q.rank == 1:
        return CliffordSplitness(True, 1, ())
    diag = diagonalize(q)
    pairs = even_clifford_quaternion_pairs(diag)
    if q.rank == 3:
        x, y = (squarefree_class(c) for c in pairs[0])
        split = quaternion_splits_by_search(x, y)
        return CliffordSplitness(split, 2 if split else None,
                                 () if split else quaternion_places(x, y))
    classes = [tuple(squarefree_class(c) for c in p) for p in pairs]
    places = set()
    for x, y in classes:
        places.symmetric_difference_update(quaternion_places(x, y))
    bad = tuple(sorted(places, key=str))
    split = not bad
    return CliffordSplitness(split, 4 if split else None, bad)


def quaternion_places(x: int, y: int) -> tuple:
    """Places where the quaternion algebra (x, y) ramifies."""
    out = []
    for place in relevant_places([x, y]):
        if hilbert_symbol(x, y, place) == -1:
            out.append(place)
    return tuple(out)


def quaternion_splits_by_search(x: int, y: int) -> bool:
    """Does x u^2 + y v^2 = w^2 have a nontrivial rational solution?

    Decided by Legendre's bounded search on the ternary form
    x u^2 + y v^2 - w^2; the reduction to pairwise-coprime squarefree
    coefficients happens inside the search.
    """
    x, y = squarefree_class(Fraction(x)), squarefree_class(Fraction(y))
    return _legendre_isotropic(x, y, -1)


def _gcd(a, b):
    from math import gcd
    return gcd(abs(a), abs(b))


def _legendre_isotropic(a: int, b: int, c: int) -> bool:
    """Does a x^2 + b y^2 + c z^2 = 0 have a nontrivial integer solution?

    Assumes a, b, c squarefree; divides out common factors pairwise, then
    searches within the Legendre bounds |x| <= sqrt|bc|, |y| <= sqrt|ac|,
    |z| <= sqrt|ab|.
    """
    # pairwise coprime reduction: if p | a and p | b then (a, b, c) ~ (a/p, b/p, pc)
    changed = True
    while changed:
        changed = False
        for (i, j, k) in ((0, 1, 2), (0, 2, 1), (1, 2, 0)):
            vals = [a, b, c]
            g = _gcd(vals[i], vals[j])
            if g > 1:
                p = next(iter(_prime_factors(g)))
                vals[i] //= p
                vals[j] //= p
                vals[k] = squarefree_class(Fraction(vals[k] * p))
                a, b, c = (squarefree_class(Fraction(v)) for v in vals)
                changed = True
                break
    if a > 0 and b > 0 and c > 0 or (a < 0 and b < 0 and c < 0):
        return False
    bx = _isqrt(abs(b * c))
    by = _isqrt(abs(a * c))
    bz = _isqrt(abs(a * b))
    for xx in range(bx + 1):
        for yy in range(by + 1):
            rhs = a * xx * xx + b * yy * yy
            # solve c z^2 = -rhs
            if rhs % c != 0:
                continue
            t = -rhs // c
            if t < 0:
                continue
            z = _isqrt(t)
            if z * z == t and (xx or yy or z):
                return True
    return False


def _isqrt(n: int) -> int:
    from math import isqrt
    return isqrt(n)

import random
from fractions import Fraction

import pytest

from liftcalc.intmat import InputError
from liftcalc.qforms import (
    QForm,
    diagonalize,
    e8_form,
    even_clifford_split,
    even_clifford_split_oracle,
    hilbert_symbol,
    hyperbolic_plane,
    invariants,
    k3_primitive,
    quaternion_places,
    quaternion_splits_by_search,
    squarefree_class,
)


def test_diagonalize_hyperbolic():
    # explicit change of basis (e+f, e-f) gives <2, -2>, rationally
    # congruent to <1, -1>: same signature, discriminant class, symbols
    diag = diagonalize(hyperbolic_plane())
    assert sorted(squarefree_class(d) for d in diag) == [-2, 2]
    inv = invariants(hyperbolic_plane())
    ref = invariants(QForm.diagonal_form([1, -1]))
    assert inv.signature == ref.signature == (1, 1)
    assert inv.discriminant == ref.discriminant == -1
    for p in set(inv.hasse) | set(ref.hasse):
        assert inv.hasse.get(p, 1) == ref.hasse.get(p, 1)


def test_diagonalize_identity():
    q = QForm.diagonal_form([1, 1, 1])
    assert diagonalize(q) == [1, 1, 1]


def test_diagonalize_e8_positive():
    diag = diagonalize(e8_form())
    assert len(diag) == 8 and all(d > 0 for d in diag)
    # oracle: Sylvester count via leading principal minors, all positive
    from liftcalc.intmat import IntMatrix
    g = IntMatrix.from_rows(e8_form().gram)
    for k in range(1, 9):
        sub = IntMatrix.from_rows([[int(g[i, j]) for j in range(k)] for i in range(k)])
        assert sub.det() > 0


def test_diagonalize_degenerate_rejected():
    with pytest.raises(InputError):
        diagonalize(QForm.diagonal_form([1, 0]))


def test_hilbert_symbol_table():
    # (-1, -1) ramifies exactly at 2 and infinity
    assert hilbert_symbol(-1, -1, 2) == -1
    assert hilbert_symbol(-1, -1, "inf") == -1
    assert hilbert_symbol(-1, -1, 3) == 1
    assert hilbert_symbol(-1, -1, 5) == 1
    # (1, anything) is trivial
    for p in (2, 3, 5, "inf"):
        assert hilbert_symbol(1, 7, p) == 1
    # (2, 3): ramifies at 2 and 3
    assert hilbert_symbol(2, 3, 2) == -1
    assert hilbert_symbol(2, 3, 3) == -1
    assert hilbert_symbol(2, 3, "inf") == 1


def test_invariants_examples():
    inv = invariants(QForm.diagonal_form([1, 1]))
    assert all(v == 1 for v in inv.hasse.values())
    inv2 = invariants(QForm.diagonal_form([-1, -1]))
    assert inv2.hasse[2] == -1 and inv2.hasse["inf"] == -1
    assert all(v == 1 for k, v in inv2.hasse.items() if k not in (2, "inf"))
    # U + U: diagonalization <1,-1,1,-1>; the pair (-1,-1) makes the raw
    # pairwise symbol -1 at 2 and infinity, while the Witt (Clifford) class
    # is trivial everywhere
    inv3 = invariants(hyperbolic_plane().direct_sum(hyperbolic_plane()))
    assert inv3.discriminant == 1
    assert inv3.signature == (2, 2)
    ref = invariants(QForm.diagonal_form([1, -1, 1, -1]))
    for p in set(inv3.hasse) | set(ref.hasse):
        assert inv3.hasse.get(p, 1) == ref.hasse.get(p, 1)
    assert ref.hasse[2] == -1 and ref.hasse["inf"] == -1
    from liftcalc.qforms import witt_class_places
    assert witt_class_places(hyperbolic_plane().direct_sum(hyperbolic_plane())) == ()


def test_invariants_congruence_invariant():
    rng = random.Random(4)
    for _ in range(10):
        n = rng.randint(2, 4)
        while True:
            rows = [[rng.randint(-4, 4) for _ in range(n)] for _ in range(n)]
            gram = [[rows[i][j] + rows[j][i] for j in range(n)] for i in range(n)]
            q = QForm.from_gram(gram)
            try:
                base = invariants(q)
                break
            except InputError:
                continue
        # conjugate by a random invertible rational matrix
        while True:
            P = [[Fraction(rng.randint(-3, 3), rng.randint(1, 3)) for _ in range(n)]
                 for _ in range(n)]
            det = _det(P)
            if det != 0:
                break
        new = [[sum(P[k][i] * q.gram[k][l] * P[l][j] for k in range(n) for l in range(n))
                for j in range(n)] for i in range(n)]
        inv2 = invariants(QForm.from_gram(new))
        assert inv2.signature == base.signature
        assert inv2.discriminant == base.discriminant
        places = set(base.hasse) | set(inv2.hasse)
        for p in places:
            assert base.hasse.get(p, 1) == inv2.hasse.get(p, 1)


def _det(m):
    n = len(m)
    if n == 1:
        return m[0][0]
    out = 0
    for j in range(n):
        sub = [row[:j] + row[j + 1:] for row in m[1:]]
        out += (-1) ** j * m[0][j] * _det(sub)
    return out


def test_product_formula_random():
    rng = random.Random(5)
    count = 0
    while count < 200:
        n = rng.randint(1, 6)
        rows = [[rng.randint(-6, 6) for _ in range(n)] for _ in range(n)]
        gram = [[rows[i][j] + rows[j][i] for j in range(n)] for i in range(n)]
        try:
            invariants(QForm.from_gram(gram))  # raises if the product formula fails
        except InputError:
            continue
        count += 1


def test_even_clifford_split_line():
    res = even_clifford_split(QForm.diagonal_form([1]))
    assert res.split and res.matrix_size == 1


def test_even_clifford_hamilton():
    res = even_clifford_split(QForm.diagonal_form([-1, -1, -1]))
    assert not res.split
    # oracle: C+ is generated by e1e2, e1e3 with squares -1, -1
    oracle = even_clifford_split_oracle(QForm.diagonal_form([-1, -1, -1]))
    assert not oracle.split
    assert set(oracle.nontrivial_places) == set(res.nontrivial_places) == {2, "inf"}


def test_even_clifford_split_rank3():
    res = even_clifford_split(QForm.diagonal_form([1, 1, 1]))
    # C+ = (-1, -1) over Q... wait: squares of e1e2, e1e3 are -1, -1
    oracle = even_clifford_split_oracle(QForm.diagonal_form([1, 1, 1]))
    assert res.split == oracle.split


def test_k3_split():
    res = even_clifford_split(k3_primitive(2))
    assert res.split and res.matrix_size == 2 ** 10


@pytest.mark.parametrize("q_eta", [2, 4, 6, 8])
def test_k3_split_stability(q_eta):
    res = even_clifford_split(k3_primitive(q_eta))
    assert res.split and res.matrix_size == 2 ** 10


def test_k3_signature():
    inv = invariants(k3_primitive(2))
    assert inv.signature == (2, 19)


def test_quaternion_search_agrees_with_symbols():
    rng = random.Random(6)
    for _ in range(100):
        x = rng.randint(-30, 30)
        y = rng.randint(-30, 30)
        if x == 0 or y == 0:
            continue
        xs, ys = squarefree_class(Fraction(x)), squarefree_class(Fraction(y))
        assert quaternion_splits_by_search(xs, ys) == (not quaternion_places(xs, ys))


@pytest.mark.parametrize("seed", range(8))
def test_oracle_agreement_random_odd_ranks(seed):
    rng = random.Random(seed)
    done = 0
    while done < 25:
        rank = rng.choice([1, 3, 5])
        rows = [[rng.randint(-3, 3) for _ in range(rank)] for _ in range(rank)]
        gram = [[rows[i][j] + rows[j][i] for j in range(rank)] for i in range(rank)]
        q = QForm.from_gram(gram)
        try:
            table = even_clifford_split(q)
        except InputError:
            continue
        oracle = even_clifford_split_oracle(q)
        assert table.split == oracle.split, (gram, table, oracle)
        if rank >= 3:
            assert set(table.nontrivial_places) == set(oracle.nontrivial_places)
        done += 1


def test_even_rank_rejected():
    with pytest.raises(InputError):
        even_clifford_split(hyperbolic_plane())

import random
from math import gcd

import pytest

from liftcalc.intmat import (
    FinAbGroup,
    InputError,
    IntMatrix,
    cokernel_invariants,
    ext1_to_Z,
    invert_unimodular,
    kernel_basis,
    smith_normal_form,
    solve_congruence,
    solve_linear,
    torus_lift,
)


def brute_2x2_invariants(a, b, c, d):
    """Oracle: invariant factors of [[a,b],[c,d]] from gcds of minors."""
    g1 = gcd(gcd(a, b), gcd(c, d))
    det = abs(a * d - b * c)
    if g1 == 0:
        return ()
    if det == 0:
        return (g1,)
    return (g1, det // g1)


def test_snf_2x2_example():
    A = IntMatrix.from_rows([[2, 4], [6, 8]])
    form = smith_normal_form(A)
    assert form.invariant_factors == brute_2x2_invariants(2, 4, 6, 8) == (2, 4)


def test_snf_identity():
    A = IntMatrix.identity(3)
    form = smith_normal_form(A)
    assert form.invariant_factors == (1, 1, 1)
    assert form.D.entries == IntMatrix.identity(3).entries


def test_snf_zero():
    A = IntMatrix.zero(2, 2)
    form = smith_normal_form(A)
    assert form.invariant_factors == ()
    assert form.D.entries == A.entries


def test_snf_deterministic():
    A = IntMatrix.from_rows([[3, 1, -4], [2, -7, 5]])
    f1 = smith_normal_form(A)
    f2 = smith_normal_form(A)
    assert f1 == f2


@pytest.mark.parametrize("seed", range(25))
def test_snf_random_properties(seed):
    rng = random.Random(seed)
    rows = rng.randint(1, 6)
    cols = rng.randint(1, 6)
    A = IntMatrix.from_rows(
        [[rng.randint(-20, 20) for _ in range(cols)] for _ in range(rows)])
    form = smith_normal_form(A)
    assert (form.U * A * form.V).entries == form.D.entries
    assert form.U.is_unimodular() and form.V.is_unimodular()
    d = form.invariant_factors
    assert all(b % a == 0 for a, b in zip(d, d[1:]))
    # gcd-of-minors characterization of the invariant factors
    acc = 1
    for k in range(1, min(rows, cols) + 1):
        g = A.minor_gcd(k)
        if k <= len(d):
            assert g == acc * d[k - 1]
            acc = g
        else:
            assert g == 0


def test_cokernel_examples():
    assert cokernel_invariants(IntMatrix.from_rows([[6]])) == FinAbGroup((6,), 0)
    A = IntMatrix.from_rows([[2, 0], [0, 4], [0, 0]])
    assert cokernel_invariants(A) == FinAbGroup((2, 4), 1)
    assert cokernel_invariants(IntMatrix.identity(2)).is_trivial


def test_cokernel_small_box_oracle():
    # Enumerate Z^3 / image(diag(2,4) in Z^3) on a small box: 8 torsion classes
    # per free coordinate slice.
    A = IntMatrix.from_rows([[2, 0], [0, 4], [0, 0]])
    G = cokernel_invariants(A)
    reps = set()
    for x in range(8):
        for y in range(8):
            reps.add((x % 2, y % 4))
    assert len(reps) == 8
    assert G.order() is None and G.torsion_part().order() == 8


@pytest.mark.parametrize("seed", range(10))
def test_cokernel_isomorphism_invariance(seed):
    rng = random.Random(100 + seed)
    A = IntMatrix.from_rows([[rng.randint(-9, 9) for _ in range(3)] for _ in range(3)])
    G = cokernel_invariants(A)
    # random unimodular transforms on either side keep the cokernel
    L = random_unimodular(3, rng)
    R = random_unimodular(3, rng)
    assert cokernel_invariants(L * A * R) == G
    # permutations are a special case
    perm = list(range(3))
    rng.shuffle(perm)
    P = IntMatrix.from_rows([[1 if j == perm[i] else 0 for j in range(3)] for i in range(3)])
    assert cokernel_invariants(P * A) == G


def random_unimodular(n, rng):
    M = IntMatrix.identity(n)
    for _ in range(6):
        i, j = rng.sample(range(n), 2)
        c = rng.randint(-3, 3)
        ent = [list(r) for r in M.entries]
        ent[i] = [a + c * b for a, b in zip(ent[i], ent[j])]
        M = IntMatrix.from_rows(ent)
    assert M.is_unimodular()
    return M


def test_ext1():
    assert ext1_to_Z(FinAbGroup((6,), 0)) == FinAbGroup((6,), 0)
    assert ext1_to_Z(FinAbGroup((2,), 1)) == FinAbGroup((2,), 0)
    assert ext1_to_Z(FinAbGroup.trivial()).is_trivial


def test_finabgroup_canonicalization():
    assert FinAbGroup.from_orders([2, 3]) == FinAbGroup((6,), 0)
    assert FinAbGroup.from_orders([12, 60]) == FinAbGroup((12, 60), 0)
    assert FinAbGroup.from_orders([4, 6]) == FinAbGroup((2, 12), 0)
    assert FinAbGroup.from_orders([0, 2], free_rank=1) == FinAbGroup((2,), 2)
    assert FinAbGroup((2, 4), 0).two_torsion() == FinAbGroup((2, 2), 0)
    assert FinAbGroup((3,), 0).two_torsion().is_trivial


def test_torus_lift_gcd_criterion_exhaustive():
    # z -> z^n lifts through (w, z) -> w^r z^s exactly when gcd(r, s) | n
    for r in range(-10, 11):
        for s in range(-10, 11):
            if r == 0 and s == 0:
                continue
            Q = IntMatrix.from_rows([[r, s]])
            for n in range(-10, 11):
                got = torus_lift(Q, (n,))
                expected = n % gcd(r, s) == 0
                assert (got is not None) == expected
                if got is not None:
                    assert Q.apply(got) == (n,)


def test_torus_lift_examples():
    assert torus_lift(IntMatrix.from_rows([[2, 4]]), (3,)) is None
    w = torus_lift(IntMatrix.from_rows([[2, 3]]), (1,))
    assert w is not None and 2 * w[0] + 3 * w[1] == 1
    assert torus_lift(IntMatrix.from_rows([[2, 3]]), (0,)) == (0, 0)


def test_torus_lift_rejects_non_surjective():
    with pytest.raises(InputError):
        torus_lift(IntMatrix.from_rows([[0, 0]]), (1,))
    with pytest.raises(InputError):
        torus_lift(IntMatrix.from_rows([[1, 0], [2, 0]]), (1, 1))


def test_solve_linear_and_kernel():
    A = IntMatrix.from_rows([[2, 4], [6, 8]])
    x = solve_linear(A, (2, 6))
    assert x is not None and A.apply(x) == (2, 6)
    assert solve_linear(A, (1, 0)) is None
    K = kernel_basis(IntMatrix.from_rows([[1, 2, 3]]))
    assert len(K) == 2
    for k in K:
        assert k[0] + 2 * k[1] + 3 * k[2] == 0


def test_solve_congruence():
    # x + 2y = 1 mod 3, x - y = 2 exactly
    A = IntMatrix.from_rows([[1, 2], [1, -1]])
    sol = solve_congruence(A, (2, 2), (3, 0))
    assert sol is not None
    x0, ker = sol
    assert (x0[0] + 2 * x0[1]) % 3 == 2 and x0[0] - x0[1] == 2
    assert ker
    for k in ker:
        assert (k[0] + 2 * k[1]) % 3 == 0 and k[0] == k[1]
    # unsatisfiable parity system
    B = IntMatrix.from_rows([[1, 1], [1, -1]])
    assert solve_congruence(B, (1, 0), (2, 0)) is None


def test_invert_unimodular():
    U = IntMatrix.from_rows([[1, 2], [0, 1]])
    assert (U * invert_unimodular(U)).entries == IntMatrix.identity(2).entries


def test_matrix_json_roundtrip():
    A = IntMatrix.from_rows([[1, -2], [30, 4]])
    assert IntMatrix.from_json(A.to_json()) == A
    assert A.to_json() == [["1", "-2"], ["30", "4"]]

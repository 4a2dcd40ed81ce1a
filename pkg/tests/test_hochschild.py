"""Chain-level operator identities, exactly, on the whole corpus.

Everything here is an exact matrix equality over the rationals; any
failure is either a construction bug or a misstated identity.
"""

import pytest

from homcyc.coefficients import dualize_bimodule, regular_bimodule
from homcyc.corpus import standard_corpus, two_dim_unital
from homcyc.hochschild import (b_prime, build_hochschild_cohomology_complex,
                               build_hochschild_homology_complex,
                               check_precosimplicial, check_presimplicial,
                               cochain_b, cyclic_t, face_map, hochschild_b,
                               homotopy_theta, norm_N)
from homcyc.linalg import Matrix, image, kernel

N_MAX = 5

CORPUS = standard_corpus()


def ids(a):
    return a.name


@pytest.fixture(params=CORPUS, ids=ids, scope="module")
def algebra(request):
    return request.param


def test_presimplicial_identities(algebra):
    V = regular_bimodule(algebra)
    for n in range(2, N_MAX + 1):
        check_presimplicial(algebra, V, n)


def test_precosimplicial_identities(algebra):
    W = dualize_bimodule(regular_bimodule(algebra))
    for n in range(0, 4):
        check_precosimplicial(algebra, W, n)


def test_b_squared_zero(algebra):
    V = regular_bimodule(algebra)
    for n in range(2, N_MAX + 1):
        assert (hochschild_b(algebra, V, n - 1) @
                hochschild_b(algebra, V, n)).is_zero()


def test_b_prime_squared_zero(algebra):
    for n in range(2, N_MAX + 1):
        assert (b_prime(algebra, n - 1) @ b_prime(algebra, n)).is_zero()


def test_t_has_order_n_plus_one_up_to_sign(algebra):
    # t^(n+1) = (-1)^(n(n+1)) Id = Id since n(n+1) is even
    for n in range(0, N_MAX + 1):
        t = cyclic_t(algebra, n)
        power = Matrix.identity(t.rows)
        for _ in range(n + 1):
            power = t @ power
        assert power == Matrix.identity(t.rows)


def test_b_intertwines_id_minus_t(algebra):
    V = regular_bimodule(algebra)
    for n in range(1, N_MAX + 1):
        t_n = cyclic_t(algebra, n)
        t_prev = cyclic_t(algebra, n - 1)
        lhs = (Matrix.identity(t_prev.rows) - t_prev) @ b_prime(algebra, n)
        rhs = hochschild_b(algebra, V, n) @ (Matrix.identity(t_n.rows) - t_n)
        assert lhs == rhs


def test_b_prime_intertwines_norm(algebra):
    V = regular_bimodule(algebra)
    for n in range(1, N_MAX + 1):
        lhs = b_prime(algebra, n) @ norm_N(algebra, n)
        rhs = norm_N(algebra, n - 1) @ hochschild_b(algebra, V, n)
        assert lhs == rhs


def test_norm_annihilates_id_minus_t(algebra):
    for n in range(0, N_MAX + 1):
        t = cyclic_t(algebra, n)
        ident = Matrix.identity(t.rows)
        N = norm_N(algebra, n)
        assert (N @ (ident - t)).is_zero()
        assert ((ident - t) @ N).is_zero()


def test_homotopy_identity(algebra):
    for n in range(0, N_MAX + 1):
        t = cyclic_t(algebra, n)
        ident = Matrix.identity(t.rows)
        lhs = norm_N(algebra, n) + homotopy_theta(algebra, n) @ (ident - t)
        assert lhs == ident.scale(n + 1)


def test_face_cyclic_relations(algebra):
    V = regular_bimodule(algebra)
    for n in range(1, N_MAX + 1):
        t_n = cyclic_t(algebra, n)
        t_prev = cyclic_t(algebra, n - 1)
        faces = [face_map(algebra, V, n, i) for i in range(n + 1)]
        sign = 1 if n % 2 == 0 else -1
        assert faces[0] @ t_n == faces[n].scale(sign)
        for i in range(1, n + 1):
            assert faces[i] @ t_n == -(t_prev @ faces[i - 1])


def test_cyclic_row_exactness(algebra):
    for n in range(0, N_MAX + 1):
        t = cyclic_t(algebra, n)
        ident = Matrix.identity(t.rows)
        N = norm_N(algebra, n)
        one_minus_t = ident - t
        assert kernel(one_minus_t) == image(N)
        assert kernel(N) == image(one_minus_t)


def test_cochain_b_is_transpose_of_chain_b(algebra):
    """With regular-dual coefficients and the shared basis enumeration,
    the generic coface construction lands exactly on the transpose."""
    V = regular_bimodule(algebra)
    W = dualize_bimodule(V)
    for n in range(0, 4):
        assert cochain_b(algebra, W, n) == \
            hochschild_b(algebra, V, n + 1).transpose()


def test_complex_builders_check_d_squared(algebra):
    V = regular_bimodule(algebra)
    C = build_hochschild_homology_complex(algebra, V, 4)
    assert C.orientation == "homological"
    W = dualize_bimodule(V)
    Cc = build_hochschild_cohomology_complex(algebra, W, 4)
    assert Cc.orientation == "cohomological"
    assert Cc.dims == C.dims


def test_theta_degree_zero_is_identity():
    A = two_dim_unital()
    assert homotopy_theta(A, 0) == Matrix.identity(A.dim)

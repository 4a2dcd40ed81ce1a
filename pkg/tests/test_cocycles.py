"""Traces, cyclic cocycle verification, and the trace-derivation cocycle."""

from fractions import Fraction

import pytest

from homcyc.cocycles import (CocyclePreconditionError, Functional,
                             TwistedDerivation, derivation_cocycle,
                             is_cyclic_cocycle, trace_space,
                             validate_twisted_derivation)
from homcyc.corpus import (ground_field, k_times_k, matrix_2x2,
                           standard_corpus, truncated_polynomials,
                           two_dim_unital)
from homcyc.cyclic import cyclic_cohomology_lambda
from homcyc.linalg import Matrix

F = Fraction


def test_trace_space_commutative_is_full():
    for A in [two_dim_unital(), ground_field(), k_times_k(),
              truncated_polynomials()]:
        assert trace_space(A).dim == A.dim


def test_trace_space_matrix_algebra():
    ts = trace_space(matrix_2x2())
    assert ts.dim == 1
    # the usual trace: 1 on E11 and E22, 0 on off-diagonal units
    v = ts.basis[0]
    assert v[0] == v[3] != 0 and v[1] == v[2] == 0


def test_trace_space_equals_hc0():
    for A in standard_corpus():
        hc0 = cyclic_cohomology_lambda(A, 0).betti[0]
        assert trace_space(A).dim == hc0


def test_zero_functional_is_cocycle():
    A = two_dim_unital()
    phi = Functional(1, (F(0),) * 4)
    assert is_cyclic_cocycle(phi, A).is_cocycle


def test_degree_zero_traces_are_cocycles():
    for A in standard_corpus():
        for v in trace_space(A).basis:
            assert is_cyclic_cocycle(Functional(0, v), A).is_cocycle


def test_non_cyclic_functional_reports_residuals():
    A = two_dim_unital()
    # phi(e1, e1) = 1, everything else 0: not cyclic for this algebra
    phi = Functional(1, (F(1), F(0), F(0), F(0)))
    check = is_cyclic_cocycle(phi, A)
    assert not check.is_cocycle
    assert check.coboundary_residuals or check.cyclicity_residuals


def test_functional_length_check():
    A = two_dim_unital()
    with pytest.raises(ValueError):
        is_cyclic_cocycle(Functional(1, (F(0),)), A)


def euler_derivation():
    # rho(x^k) = k x^k: the Euler derivation of k[x]/(x^3)
    return TwistedDerivation(Matrix.from_rows([
        [0, 0, 0],
        [0, 1, 0],
        [0, 0, 2],
    ]))


def test_derivation_validation():
    A = truncated_polynomials()
    rho = euler_derivation()
    ok, bad = validate_twisted_derivation(A, rho)
    assert ok, bad
    # plain d/dx does not descend to the truncation: rho(x * x^2) = 0
    # but rho(x) x^2 + x rho(x^2) = 3 x^2
    d_dx = TwistedDerivation(Matrix.from_rows([
        [0, 1, 0], [0, 0, 2], [0, 0, 0]]))
    ok, bad = validate_twisted_derivation(A, d_dx)
    assert not ok
    not_deriv = TwistedDerivation(Matrix.identity(3))
    ok, bad = validate_twisted_derivation(A, not_deriv)
    assert not ok


def test_derivation_cocycle_truncated_polynomials():
    A = truncated_polynomials()
    rho = euler_derivation()
    # tr = coefficient of 1: a trace vanishing on im(rho) = span(x, x^2)
    tr = Functional(0, (F(1), F(0), F(0)))
    phi = derivation_cocycle(A, rho, tr)
    assert is_cyclic_cocycle(phi, A).is_cocycle


def test_derivation_cocycle_matrix_algebra_nonzero():
    """Inner derivation [E11, -] against the matrix trace gives a
    nonzero cyclic 1-cocycle."""
    A = matrix_2x2()
    # [E11, E12] = E12, [E11, E21] = -E21, diagonal units commute
    rho = TwistedDerivation(Matrix.from_rows([
        [0, 0, 0, 0],
        [0, 1, 0, 0],
        [0, 0, -1, 0],
        [0, 0, 0, 0],
    ]))
    ok, bad = validate_twisted_derivation(A, rho)
    assert ok, bad
    tr = Functional(0, trace_space(A).basis[0])
    phi = derivation_cocycle(A, rho, tr)
    assert is_cyclic_cocycle(phi, A).is_cocycle
    assert any(phi.coords)
    # phi(E21, E12) = tr(E21 [E11, E12]) = tr(E22) up to the trace scale
    d = A.dim
    assert phi.coords[2 * d + 1] != 0


def test_derivation_cocycle_zero_rho():
    A = two_dim_unital()
    rho = TwistedDerivation(Matrix.zero(2, 2))
    tr = Functional(0, trace_space(A).basis[0])
    phi = derivation_cocycle(A, rho, tr)
    assert all(x == 0 for x in phi.coords)


def test_derivation_cocycle_preconditions():
    A = truncated_polynomials()
    rho = euler_derivation()
    # a trace that does not vanish on im(rho)
    bad_tr = Functional(0, (F(0), F(1), F(0)))
    with pytest.raises(CocyclePreconditionError):
        derivation_cocycle(A, rho, bad_tr)
    with pytest.raises(CocyclePreconditionError):
        derivation_cocycle(A, TwistedDerivation(Matrix.identity(3)),
                           Functional(0, (F(0), F(0), F(1))))
    with pytest.raises(CocyclePreconditionError):
        derivation_cocycle(A, rho, Functional(1, (F(0),) * 9))


def test_twist_compatibility_required():
    """rho must commute with alpha and land where alpha is the identity."""
    A = two_dim_unital()
    # any map hitting ker(alpha)-incompatible directions fails alpha rho = rho
    rho = TwistedDerivation(Matrix.from_rows([[0, 0], [1, 0]]))
    ok, bad = validate_twisted_derivation(A, rho)
    assert not ok

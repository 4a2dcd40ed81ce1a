"""Cyclic and periodic (co)homology: both constructions, functoriality."""

from fractions import Fraction

import pytest

from homcyc.algebra import AlgebraMorphism
from homcyc.coefficients import regular_bimodule
from homcyc.corpus import (dual_numbers, dual_numbers_projection_twist,
                           ground_field, k2, k_times_k, k_times_k_swap_twist,
                           standard_corpus, two_dim_unital)
from homcyc.cyclic import (ChainMapError, connes_bB_report,
                           cyclic_bicomplex, cyclic_cohomology_both,
                           cyclic_homology_both, cyclic_homology_lambda,
                           hochschild_cohomology, hochschild_homology,
                           induced_map_on_homology, lambda_quotient_subspaces,
                           periodic_cohomology, periodic_homology,
                           tensor_power_matrix, xi_map,
                           xi_induced_on_cyclic_cohomology)
from homcyc.hochschild import hochschild_b
from homcyc.linalg import Matrix, reduce_mod

F = Fraction

CORPUS = standard_corpus()


def ids(a):
    return a.name


@pytest.fixture(params=CORPUS, ids=ids, scope="module")
def algebra(request):
    return request.param


def test_hh_of_k2_is_k_in_every_degree():
    r = hochschild_homology(k2(), 6)
    assert all(r.betti[n] == 1 for n in range(7))


def test_hh_of_ground_field():
    r = hochschild_homology(ground_field(), 4)
    assert r.betti == {0: 1, 1: 0, 2: 0, 3: 0, 4: 0}


def test_two_dim_example_hh1():
    r = hochschild_homology(two_dim_unital(), 1)
    assert r.betti[1] == 1


def test_two_dim_example_hc1_zero():
    r = cyclic_homology_lambda(two_dim_unital(), 1)
    assert r.betti[1] == 0


def test_two_dim_lambda_boundary_value():
    """b(e1 (x) e1 (x) e2) is -2 e1 (x) e2 in the degree-1 lambda quotient."""
    A = two_dim_unital()
    V = regular_bimodule(A)
    b2 = hochschild_b(A, V, 2)
    # index of e1 (x) e1 (x) e2 with big-endian slots: (0,0,1) -> 1
    chain = tuple(F(int(i == 1)) for i in range(8))
    img = b2.apply(chain)
    sub = lambda_quotient_subspaces(A, 2)[1]
    reduced = reduce_mod(sub, img)
    # e1 (x) e2 has index (0,1) -> 1
    e1e2 = tuple(F(int(i == 1)) for i in range(4))
    expected = reduce_mod(sub, tuple(-2 * x for x in e1e2))
    assert reduced == expected
    assert any(expected)


def test_method_agreement_homology(algebra):
    rep = cyclic_homology_both(algebra, 4)
    rep.require_agreement()


def test_method_agreement_cohomology(algebra):
    rep = cyclic_cohomology_both(algebra, 4)
    rep.require_agreement()


def test_duality_dimensions(algebra):
    hh = hochschild_homology(algebra, 4, check_identities=False)
    hhco = hochschild_cohomology(algebra, 4)
    assert hh.betti == hhco.betti


def test_twist_reduction_swap():
    """An invertible twist does not change Hochschild homology."""
    tw = hochschild_homology(k_times_k_swap_twist(), 4).betti
    cl = hochschild_homology(k_times_k(), 4).betti
    assert tw == cl


def test_periodic_parity_ground_field():
    rep = periodic_homology(ground_field(), 5)
    assert all(rep.stabilized.values())
    assert [rep.betti[n] for n in range(6)] == [1, 0, 1, 0, 1, 0]
    classes = rep.parity_classes()
    assert classes[0] == {1} and classes[1] == {0}


def test_periodic_cohomology_ground_field():
    rep = periodic_cohomology(ground_field(), 3)
    assert all(rep.stabilized.values())
    assert [rep.betti[n] for n in range(4)] == [1, 0, 1, 0]


def test_periodic_window_is_shifted_cyclic():
    """Window truncation at even P computes HC_{n+P}: re-indexing fact."""
    from homcyc.cyclic import _periodic_betti, cyclic_homology_bicomplex
    A = two_dim_unital()
    hc = cyclic_homology_bicomplex(A, 4).betti
    win = _periodic_betti(A, 2, 2, cohomology=False)
    assert win == {n: hc[n + 2] for n in range(3)}


def test_periodic_rejects_odd_window():
    from homcyc.cyclic import _periodic_betti
    with pytest.raises(ValueError):
        _periodic_betti(ground_field(), 2, 3, cohomology=False)


def test_periodic_k2_stabilizes():
    rep = periodic_homology(k2(), 3)
    assert all(rep.stabilized.values())
    classes = rep.parity_classes()
    assert all(len(v) <= 1 for v in classes.values())


def test_bicomplex_squares(algebra):
    B = cyclic_bicomplex(algebra, 3)
    B.check_squares()


def test_connes_bB_on_associative_identity_twist():
    """At alpha = Id the (b,B) identities hold and the total homology
    matches the cyclic bicomplex."""
    for A in [ground_field(), k_times_k(), dual_numbers()]:
        rep = connes_bB_report(A, 3)
        assert rep.identities_hold
        assert rep.matches_cyclic


def test_connes_bB_records_failure_without_asserting():
    """On the genuinely twisted unital example the anticommutation
    identity fails; the report records it and computes nothing further."""
    rep = connes_bB_report(two_dim_unital(), 2)
    assert rep.b_squared_zero
    assert not rep.bB_anticommute
    assert rep.matches_cyclic is None


def test_connes_bB_requires_unit():
    from homcyc.algebra import validate_or_raise
    zero = validate_or_raise(1, ("z",), [[[0]]], Matrix.zero(1, 1),
                             name="zero")
    with pytest.raises(ValueError):
        connes_bB_report(zero, 2)


def test_tensor_power_matrix():
    m = Matrix.from_rows([[0, 1], [1, 0]])
    m2 = tensor_power_matrix(m, 2)
    assert m2.rows == 4
    # (e1 (x) e2) -> (e2 (x) e1): index 1 -> index 2
    v = tuple(F(int(i == 1)) for i in range(4))
    assert m2.apply(v) == tuple(F(int(i == 2)) for i in range(4))


def test_induced_map_identity_is_identity():
    A = two_dim_unital()
    f = AlgebraMorphism(A, A, Matrix.identity(2))
    for n in range(3):
        m = induced_map_on_homology(f, "HH", n)
        assert m == Matrix.identity(m.rows)
        mc = induced_map_on_homology(f, "HC", n)
        assert mc == Matrix.identity(mc.rows)


def test_induced_map_inclusion():
    A = ground_field()
    B = k_times_k()
    f = AlgebraMorphism(A, B, Matrix.from_rows([[1], [0]]))
    m = induced_map_on_homology(f, "HH", 0)
    assert m.cols == 1 and m.rows == 2
    assert any(m.col(0))


def test_induced_map_rejects_non_morphism():
    A = ground_field()
    B = k_times_k()
    f = AlgebraMorphism(A, B, Matrix.from_rows([[1], [2]]))
    with pytest.raises(ChainMapError):
        induced_map_on_homology(f, "HH", 1)


def test_xi_map_commutes():
    assoc = dual_numbers()
    tw = dual_numbers_projection_twist()
    for n in range(3):
        xi = xi_map(assoc, tw, n)
        assert xi.rows == 2 ** (n + 1)


def test_xi_induced_on_cyclic_cohomology():
    assoc = dual_numbers()
    tw = dual_numbers_projection_twist()
    m = xi_induced_on_cyclic_cohomology(assoc, tw, 0)
    # HC^0 = traces; both algebras are commutative with full trace space
    assert m.rows == 2 and m.cols == 2


def test_xi_rejects_non_idempotent():
    with pytest.raises(ValueError):
        xi_map(k_times_k(), k_times_k_swap_twist(), 1)

"""The standing test corpus of small algebras.

Every algebra here is validated at construction time; the suite runs the
operator identities and both cyclic constructions over this list.
"""

from __future__ import annotations

from fractions import Fraction

from .algebra import (HomAlgebra, direct_sum, validate_or_raise, yau_twist)
from .linalg import Matrix

F = Fraction


def two_dim_unital() -> HomAlgebra:
    """dim 2: e1 e1 = e1, all other products e2; alpha(e1) = e1 - e2,
    alpha(e2) = 0.  Unital with unit e1, multiplicative, alpha^2 = alpha."""
    mu = [
        [[1, 0], [0, 1]],   # e1 e1 = e1, e1 e2 = e2
        [[0, 1], [0, 1]],   # e2 e1 = e2, e2 e2 = e2
    ]
    alpha = Matrix.from_rows([[1, 0], [-1, 0]])
    return validate_or_raise(2, ("e1", "e2"), mu, alpha, name="two_dim_unital")


def ground_field() -> HomAlgebra:
    """k itself: dim 1, e e = e, alpha = Id."""
    return validate_or_raise(1, ("e",), [[[1]]], Matrix.identity(1),
                             name="ground_field")


def k2() -> HomAlgebra:
    """dim 1 with e e = e but alpha = 0; Hochschild homology is k in
    every degree."""
    return validate_or_raise(1, ("e",), [[[1]]], Matrix.zero(1, 1), name="k2")


def k1_plus_k2() -> HomAlgebra:
    return direct_sum(ground_field(), k2(), name="k1+k2")


def k_times_k() -> HomAlgebra:
    """k x k, associative, alpha = Id."""
    mu = [
        [[1, 0], [0, 0]],
        [[0, 0], [0, 1]],
    ]
    return validate_or_raise(2, ("u", "v"), mu, Matrix.identity(2),
                             name="k_times_k")


def k_times_k_swap_twist() -> HomAlgebra:
    """Twist of k x k by the swap automorphism (invertible, not idempotent)."""
    swap = Matrix.from_rows([[0, 1], [1, 0]])
    return yau_twist(k_times_k(), swap, name="k_times_k_swapped")


def dual_numbers() -> HomAlgebra:
    """k[x]/(x^2) with basis {1, x}, associative, alpha = Id."""
    mu = [
        [[1, 0], [0, 1]],
        [[0, 1], [0, 0]],
    ]
    return validate_or_raise(2, ("one", "x"), mu, Matrix.identity(2),
                             name="dual_numbers")


def dual_numbers_projection_twist() -> HomAlgebra:
    """Twist of k[x]/(x^2) by the idempotent endomorphism x -> 0."""
    proj = Matrix.from_rows([[1, 0], [0, 0]])
    return yau_twist(dual_numbers(), proj, name="dual_numbers_twisted")


def k_times_k_projection_twist() -> HomAlgebra:
    """Twist of k x k by the projection onto the first factor."""
    proj = Matrix.from_rows([[1, 0], [0, 0]])
    return yau_twist(k_times_k(), proj, name="k_times_k_projected")


def truncated_polynomials() -> HomAlgebra:
    """k[x]/(x^3) with basis {1, x, x^2}, associative, alpha = Id."""
    mu = [
        [[1, 0, 0], [0, 1, 0], [0, 0, 1]],
        [[0, 1, 0], [0, 0, 1], [0, 0, 0]],
        [[0, 0, 1], [0, 0, 0], [0, 0, 0]],
    ]
    return validate_or_raise(3, ("one", "x", "xx"), mu, Matrix.identity(3),
                             name="trunc_poly3")


def matrix_2x2() -> HomAlgebra:
    """2x2 matrices over k, basis (E11, E12, E21, E22), alpha = Id."""
    units = [(0, 0), (0, 1), (1, 0), (1, 1)]
    mu = []
    for (a, b) in units:
        row = []
        for (c, d) in units:
            out = [F(0)] * 4
            if b == c:
                out[units.index((a, d))] = F(1)
            row.append(out)
        mu.append(row)
    return validate_or_raise(4, ("E11", "E12", "E21", "E22"), mu,
                             Matrix.identity(4), name="mat2")


def standard_corpus() -> list[HomAlgebra]:
    """The five algebras the acceptance suite crosses every check over."""
    return [
        two_dim_unital(),
        ground_field(),
        k2(),
        k1_plus_k2(),
        dual_numbers_projection_twist(),
    ]

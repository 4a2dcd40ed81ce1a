"""Cyclic and periodic (co)homology: quotient/invariant method and the
bicomplex method, plus the comparison and functoriality machinery.

Cochain-level operators are transposes of the chain-level ones: the
basis conventions in `hochschild` make the identification of a cochain
with coefficients in (regular)* and a functional on A^{(x)(n+1)} the
identity on coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product as iproduct

from .algebra import AlgebraMorphism, HomAlgebra, find_unit, validate_morphism
from .coefficients import dualize_bimodule, regular_bimodule
from .complexes import (Bicomplex, ChainComplex, HomologyReport, homology,
                        report_for_complex, total_complex)
from .hochschild import (IdentityViolationError, b_prime, cyclic_t,
                         build_hochschild_cohomology_complex,
                         build_hochschild_homology_complex, chain_dim,
                         hochschild_b, norm_N, _tensor_column)
from .linalg import (Matrix, Subspace, ZERO, ONE, image, kernel, reduce_mod)


def hochschild_homology(A: HomAlgebra, n_max: int, *,
                        representatives: bool = False,
                        check_identities: bool = True) -> HomologyReport:
    """HH of A with coefficients in the regular bimodule."""
    V = regular_bimodule(A)
    C = build_hochschild_homology_complex(A, V, n_max + 1,
                                          check_identities=check_identities)
    return report_for_complex(C, range(n_max + 1), theory="HH",
                              algebra_name=A.name, coefficient_name=V.name,
                              representatives=representatives)


def hochschild_cohomology(A: HomAlgebra, n_max: int, *,
                          representatives: bool = False) -> HomologyReport:
    """Hochschild cohomology of A with coefficients in (regular)*."""
    W = dualize_bimodule(regular_bimodule(A))
    C = build_hochschild_cohomology_complex(A, W, n_max + 1)
    return report_for_complex(C, range(n_max + 1), theory="HH-co",
                              algebra_name=A.name, coefficient_name=W.name,
                              representatives=representatives)


def lambda_quotient_subspaces(A: HomAlgebra, n_max: int) -> dict[int, Subspace]:
    """Per degree, im(Id - t_n) inside A^{(x)(n+1)}."""
    out = {}
    for n in range(n_max + 1):
        t = cyclic_t(A, n)
        out[n] = image(Matrix.identity(t.rows) - t)
    return out


def cyclic_homology_lambda(A: HomAlgebra, n_max: int, *,
                           representatives: bool = False) -> HomologyReport:
    """Homology of C_*(A) / im(Id - t), the cyclic-coinvariants complex."""
    from .complexes import quotient_complex
    V = regular_bimodule(A)
    C = build_hochschild_homology_complex(A, V, n_max + 1,
                                          check_identities=False)
    subs = lambda_quotient_subspaces(A, n_max + 1)
    Q = quotient_complex(C, subs)  # raises NotStableError if the lemma fails
    return report_for_complex(Q, range(n_max + 1), theory="HC-lambda",
                              algebra_name=A.name, coefficient_name=V.name,
                              representatives=representatives)


def cyclic_cohomology_lambda(A: HomAlgebra, n_max: int, *,
                             representatives: bool = False) -> HomologyReport:
    """Cohomology of the cyclic-invariant subcomplex ker(Id - t)."""
    from .complexes import sub_complex
    W = dualize_bimodule(regular_bimodule(A))
    C = build_hochschild_cohomology_complex(A, W, n_max + 1)
    subs = {}
    for n in range(n_max + 2):
        t_co = cyclic_t(A, n).transpose()
        subs[n] = kernel(Matrix.identity(t_co.rows) - t_co)
    S = sub_complex(C, subs)
    return report_for_complex(S, range(n_max + 1), theory="HC-co-lambda",
                              algebra_name=A.name, coefficient_name=W.name,
                              representatives=representatives)


def _chain_ops(A: HomAlgebra, q: int):
    t = cyclic_t(A, q)
    ident = Matrix.identity(t.rows)
    return t, ident


def cyclic_bicomplex(A: HomAlgebra, n_max: int, *,
                     p_min: int = 0, p_max: int | None = None) -> Bicomplex:
    """The (two-sided when p_min < 0) cyclic bicomplex, homological grading.

    Cells: p in [p_min, p_max], q >= 0, p + q <= n_max + 1.  Columns
    alternate b and -b'; rows alternate (Id - t) and N by column parity.
    """
    if p_max is None:
        p_max = n_max + 1
    cells = {}
    for p in range(p_min, p_max + 1):
        for q in range(0, n_max + 1 - p + 1):
            cells[(p, q)] = A.dim ** (q + 1)
    V = regular_bimodule(A)
    qs = {q for (_, q) in cells if q >= 1}
    bq = {q: hochschild_b(A, V, q) for q in qs}
    bpq = {q: b_prime(A, q) for q in qs}
    vertical = {}
    horizontal = {}
    for (p, q) in cells:
        if q >= 1 and (p, q - 1) in cells:
            vertical[(p, q)] = bq[q] if p % 2 == 0 else -bpq[q]
        if (p - 1, q) in cells:
            t, ident = _chain_ops(A, q)
            horizontal[(p, q)] = (ident - t) if p % 2 == 1 else norm_N(A, q)
    return Bicomplex(cell_dims=cells, vertical=vertical,
                     horizontal=horizontal, orientation="homological")


def cyclic_homology_bicomplex(A: HomAlgebra, n_max: int, *,
                              p_cols: int | None = None) -> HomologyReport:
    """Total homology of the first-quadrant cyclic bicomplex.

    The truncation p + q <= n_max + 1 is exact for degrees <= n_max: no
    first-quadrant cell of total degree <= n_max + 1 is dropped.
    """
    if p_cols is not None and p_cols < n_max + 1:
        raise ValueError("p_cols must be >= n_max + 1 for an exact window")
    B = cyclic_bicomplex(A, n_max)
    T = total_complex(B)
    return report_for_complex(T, range(n_max + 1), theory="HC-bicomplex",
                              algebra_name=A.name,
                              coefficient_name=f"{A.name}-regular")


def cocyclic_bicomplex(A: HomAlgebra, n_max: int, *,
                       p_min: int = 0, p_max: int | None = None) -> Bicomplex:
    """Dual bicomplex: all operators are transposes, arrows reversed."""
    if p_max is None:
        p_max = n_max + 1
    cells = {}
    for p in range(p_min, p_max + 1):
        for q in range(0, n_max + 1 - p + 1):
            cells[(p, q)] = A.dim ** (q + 1)
    V = regular_bimodule(A)
    qs = {q for (_, q) in cells}
    b_co = {q: hochschild_b(A, V, q + 1).transpose() for q in qs}
    bp_co = {q: b_prime(A, q + 1).transpose() for q in qs}
    vertical = {}
    horizontal = {}
    for (p, q) in cells:
        if (p, q + 1) in cells:
            vertical[(p, q)] = b_co[q] if p % 2 == 0 else -bp_co[q]
        if (p + 1, q) in cells:
            t_co = cyclic_t(A, q).transpose()
            ident = Matrix.identity(t_co.rows)
            horizontal[(p, q)] = (ident - t_co) if p % 2 == 0 \
                else norm_N(A, q).transpose()
    return Bicomplex(cell_dims=cells, vertical=vertical,
                     horizontal=horizontal, orientation="cohomological")


def cyclic_cohomology_bicomplex(A: HomAlgebra, n_max: int, *,
                                p_cols: int | None = None) -> HomologyReport:
    """Total cohomology of the first-quadrant cocyclic bicomplex."""
    if p_cols is not None and p_cols < n_max + 1:
        raise ValueError("p_cols must be >= n_max + 1 for an exact window")
    B = cocyclic_bicomplex(A, n_max)
    T = total_complex(B)
    return report_for_complex(T, range(n_max + 1), theory="HC-co-bicomplex",
                              algebra_name=A.name,
                              coefficient_name=f"{A.name}-coregular")


@dataclass(frozen=True)
class CyclicReport:
    """Cross-checked Betti numbers from both constructions.

    Over the rationals the two must agree; a mismatch is a hard failure,
    surfaced by `require_agreement`.
    """

    algebra_name: str
    degrees: tuple[int, ...]
    betti_lambda: dict[int, int]
    betti_bicomplex: dict[int, int]
    cohomology: bool = False

    @property
    def agreement(self) -> dict[int, bool]:
        return {n: self.betti_lambda[n] == self.betti_bicomplex[n]
                for n in self.degrees}

    def require_agreement(self) -> None:
        bad = [n for n, ok in self.agreement.items() if not ok]
        if bad:
            raise IdentityViolationError(
                f"lambda/bicomplex Betti mismatch in degrees {bad} "
                f"for {self.algebra_name}")

    def to_json_dict(self) -> dict:
        return {
            "algebra": self.algebra_name,
            "cohomology": self.cohomology,
            "degrees": list(self.degrees),
            "betti_lambda": {str(n): self.betti_lambda[n] for n in self.degrees},
            "betti_bicomplex": {str(n): self.betti_bicomplex[n]
                                for n in self.degrees},
            "agreement": {str(n): self.agreement[n] for n in self.degrees},
        }


def cyclic_homology_both(A: HomAlgebra, n_max: int) -> CyclicReport:
    lam = cyclic_homology_lambda(A, n_max)
    bic = cyclic_homology_bicomplex(A, n_max)
    return CyclicReport(A.name, tuple(range(n_max + 1)),
                        dict(lam.betti), dict(bic.betti))


def cyclic_cohomology_both(A: HomAlgebra, n_max: int) -> CyclicReport:
    lam = cyclic_cohomology_lambda(A, n_max)
    bic = cyclic_cohomology_bicomplex(A, n_max)
    return CyclicReport(A.name, tuple(range(n_max + 1)),
                        dict(lam.betti), dict(bic.betti),
                        cohomology=True)


@dataclass(frozen=True)
class PeriodicReport:
    """Window-truncated periodic Betti numbers with stabilization flags.

    Shifting the two-sided bicomplex window left by an even number of
    columns re-indexes it, so the truncation with window P (even) computes
    the cyclic groups 2 * (P/2) steps up the periodicity tower:
    degree n of the window-P run equals HC_{n+P}.  The periodic groups
    are the limit of that tower; a degree is trusted only when the
    window P and P + 2 runs agree.
    """

    algebra_name: str
    window: int
    degrees: tuple[int, ...]
    betti: dict[int, int]
    betti_wider: dict[int, int]
    cohomology: bool = False

    @property
    def stabilized(self) -> dict[int, bool]:
        return {n: self.betti[n] == self.betti_wider[n] for n in self.degrees}

    def parity_classes(self) -> dict[int, set[int]]:
        """Stabilized Betti values grouped by degree parity."""
        out: dict[int, set[int]] = {0: set(), 1: set()}
        for n in self.degrees:
            if self.stabilized[n]:
                out[n % 2].add(self.betti[n])
        return out

    def to_json_dict(self) -> dict:
        return {
            "algebra": self.algebra_name,
            "cohomology": self.cohomology,
            "window": self.window,
            "degrees": list(self.degrees),
            "betti": {str(n): self.betti[n] for n in self.degrees},
            "betti_wider_window": {str(n): self.betti_wider[n]
                                   for n in self.degrees},
            "stabilized": {str(n): self.stabilized[n] for n in self.degrees},
        }


def _periodic_betti(A: HomAlgebra, n_max: int, window: int,
                    cohomology: bool) -> dict[int, int]:
    if window % 2:
        raise ValueError("window must be even: an odd column shift flips "
                         "the b/-b' and (Id-t)/N parities")
    # the window truncates the negative direction only; positive columns
    # are capped by the triangular bound p + q <= n_max + 1 regardless
    if cohomology:
        B = cocyclic_bicomplex(A, n_max, p_min=-window)
    else:
        B = cyclic_bicomplex(A, n_max, p_min=-window)
    T = total_complex(B)
    return {n: homology(T, n)[0] for n in range(n_max + 1)}


def periodic_homology(A: HomAlgebra, n_max: int, *,
                      window: int = 2) -> PeriodicReport:
    b1 = _periodic_betti(A, n_max, window, cohomology=False)
    b2 = _periodic_betti(A, n_max, window + 2, cohomology=False)
    return PeriodicReport(A.name, window, tuple(range(n_max + 1)), b1, b2)


def periodic_cohomology(A: HomAlgebra, n_max: int, *,
                        window: int = 2) -> PeriodicReport:
    b1 = _periodic_betti(A, n_max, window, cohomology=True)
    b2 = _periodic_betti(A, n_max, window + 2, cohomology=True)
    return PeriodicReport(A.name, window, tuple(range(n_max + 1)), b1, b2,
                          cohomology=True)


# ---------------------------------------------------------------------------
# Connes (b, B) machinery -- experimental: the chain identities are
# asserted but not proved by the theory in the Hom setting, so the
# computed outcome on each input is reported, never assumed.

@dataclass(frozen=True)
class ConnesBBReport:
    algebra_name: str
    degrees: tuple[int, ...]
    b_squared_zero: bool
    bB_anticommute: bool
    betti: dict[int, int] = field(default_factory=dict)
    betti_cyclic: dict[int, int] = field(default_factory=dict)

    @property
    def identities_hold(self) -> bool:
        return self.b_squared_zero and self.bB_anticommute

    @property
    def matches_cyclic(self) -> bool | None:
        if not self.identities_hold:
            return None
        return all(self.betti[n] == self.betti_cyclic[n] for n in self.degrees)


def extra_degeneracy(A: HomAlgebra, unit: tuple[Fraction, ...],
                     n: int) -> Matrix:
    """s: C_n -> C_{n+1}, a_0(x)...(x)a_n -> 1(x)a_0(x)...(x)a_n.

    Built as (unsigned rotation) o (append unit); the unsigned reading of
    the rotation makes the associative specialization reproduce the
    classical extra degeneracy.
    """
    d = A.dim
    cols = []
    for idx in iproduct(range(d), repeat=n + 1):
        parts = [tuple(unit)] + [A.basis_vector(j) for j in idx]
        cols.append(_tensor_column(parts))
    return Matrix.from_rows(cols).transpose()


def connes_boundary(A: HomAlgebra, unit: tuple[Fraction, ...], n: int) -> Matrix:
    """B = (Id - t_{n+1}) s N : C_n -> C_{n+1}."""
    s = extra_degeneracy(A, unit, n)
    t = cyclic_t(A, n + 1)
    return (Matrix.identity(t.rows) - t) @ s @ norm_N(A, n)


def connes_bB_report(A: HomAlgebra, n_max: int) -> ConnesBBReport:
    unit = find_unit(A)
    if unit is None:
        raise ValueError("(b,B) machinery requires a unital algebra")
    V = regular_bimodule(A)
    bmaps = {n: hochschild_b(A, V, n) for n in range(1, n_max + 2)}
    Bmaps = {n: connes_boundary(A, unit, n) for n in range(0, n_max + 2)}
    b2 = all((Bmaps[n + 1] @ Bmaps[n]).is_zero() for n in range(n_max + 1))
    anti = True
    for n in range(0, n_max + 1):
        # b_{n+1} B_n + B_{n-1} b_n = 0 on C_n
        acc = bmaps[n + 1] @ Bmaps[n]
        if n >= 1:
            acc = acc + Bmaps[n - 1] @ bmaps[n]
        if not acc.is_zero():
            anti = False
            break
    if not (b2 and anti):
        return ConnesBBReport(A.name, tuple(range(n_max + 1)), b2, anti)
    # assemble the (b, B) total complex: Tot_n = (+)_j C_{n-2j}
    dims = {}
    offsets = {}
    for n in range(n_max + 2):
        comps = [n - 2 * j for j in range((n // 2) + 1)]
        offs = {}
        off = 0
        for m in comps:
            offs[m] = off
            off += A.dim ** (m + 1)
        dims[n] = off
        offsets[n] = offs
    diffs = {}
    for n in range(1, n_max + 2):
        rows, cols = dims[n - 1], dims[n]
        entries = [[ZERO] * cols for _ in range(rows)]

        def put(block, roff, coff):
            for i in range(block.rows):
                brow = block.row(i)
                for j in range(block.cols):
                    if brow[j]:
                        entries[roff + i][coff + j] = brow[j]

        for m, coff in offsets[n].items():
            if m >= 1 and (m - 1) in offsets[n - 1]:
                put(bmaps[m], offsets[n - 1][m - 1], coff)
            if (m + 1) in offsets[n - 1]:
                put(Bmaps[m], offsets[n - 1][m + 1], coff)
        diffs[n] = Matrix.from_rows(entries) if rows and cols else \
            Matrix.zero(rows, cols)
    T = ChainComplex(dims=dims, diffs=diffs, orientation="homological")
    T.check_d_squared()
    betti = {n: homology(T, n)[0] for n in range(n_max + 1)}
    cyc = cyclic_homology_bicomplex(A, n_max)
    return ConnesBBReport(A.name, tuple(range(n_max + 1)), b2, anti,
                          betti, dict(cyc.betti))


# ---------------------------------------------------------------------------
# Functoriality

def tensor_power_matrix(m: Matrix, k: int) -> Matrix:
    """Kronecker power m^{(x)k}, big-endian slot order."""
    out = Matrix.identity(1)
    for _ in range(k):
        out = _kron(out, m)
    return out


def _kron(a: Matrix, b: Matrix) -> Matrix:
    rows = a.rows * b.rows
    cols = a.cols * b.cols
    entries = []
    for i in range(rows):
        ai, bi = divmod(i, b.rows)
        arow = a.row(ai)
        brow = b.row(bi)
        for j in range(cols):
            aj, bj = divmod(j, b.cols)
            entries.append(arow[aj] * brow[bj])
    return Matrix(rows, cols, tuple(entries))


class ChainMapError(ValueError):
    pass


def _homology_matrix(C_src: ChainComplex, C_tgt: ChainComplex,
                     maps: dict[int, Matrix], n: int) -> Matrix:
    """Matrix of the induced map on degree-n homology representatives."""
    _, reps_src = homology(C_src, n)
    _, reps_tgt = homology(C_tgt, n)
    im_tgt = image(C_tgt.differential(n + 1)) if n + 1 in C_tgt.dims \
        else Subspace.zero(C_tgt.dim(n))
    cols = []
    tgt_space = Subspace.from_vectors(C_tgt.dim(n), reps_tgt)
    for v in reps_src:
        w = reduce_mod(im_tgt, maps[n].apply(v))
        cols.append(tgt_space.coordinates(w))
    if not cols:
        return Matrix.zero(len(reps_tgt), 0)
    return Matrix.from_rows(cols).transpose()


def induced_map_on_homology(f: AlgebraMorphism, theory: str, n: int) -> Matrix:
    """Induced map HH_n or HC_n of the source into the target.

    The chain map a_0(x)...(x)a_n -> f(a_0)(x)...(x)f(a_n) is verified
    to commute with b (and, for HC, to descend to the lambda quotients)
    before representatives are pushed through.
    """
    ok, bad = validate_morphism(f)
    if not ok:
        raise ChainMapError("not a morphism of Hom-algebras: " + str(bad[0]))
    A, Bg = f.source, f.target
    VA, VB = regular_bimodule(A), regular_bimodule(Bg)
    CA = build_hochschild_homology_complex(A, VA, n + 1, check_identities=False)
    CB = build_hochschild_homology_complex(Bg, VB, n + 1, check_identities=False)
    tmaps = {k: tensor_power_matrix(f.matrix, k + 1) for k in range(n + 2)}
    for k in range(1, n + 2):
        if tmaps[k - 1] @ CA.differential(k) != CB.differential(k) @ tmaps[k]:
            raise ChainMapError(f"chain map fails to commute with b at degree {k}")
    if theory == "HH":
        return _homology_matrix(CA, CB, tmaps, n)
    if theory != "HC":
        raise ValueError("theory must be 'HH' or 'HC'")
    from .complexes import quotient_complex
    subsA = lambda_quotient_subspaces(A, n + 1)
    subsB = lambda_quotient_subspaces(Bg, n + 1)
    QA = quotient_complex(CA, subsA)
    QB = quotient_complex(CB, subsB)
    qmaps = {}
    for k in range(n + 2):
        # descend: the tensor-power map commutes with t, hence with Id - t
        for v in subsA[k].basis:
            if any(reduce_mod(subsB[k], tmaps[k].apply(v))):
                raise ChainMapError(
                    f"chain map does not descend to lambda quotient at {k}")
        pivots = {next(j for j, x in enumerate(bv) if x)
                  for bv in subsB[k].basis}
        freeB = [j for j in range(CB.dim(k)) if j not in pivots]
        pivA = {next(j for j, x in enumerate(bv) if x)
                for bv in subsA[k].basis}
        freeA = [j for j in range(CA.dim(k)) if j not in pivA]
        cols = []
        for fa in freeA:
            v = tuple(ONE if j == fa else ZERO for j in range(CA.dim(k)))
            w = reduce_mod(subsB[k], tmaps[k].apply(v))
            cols.append(tuple(w[j] for j in freeB))
        qmaps[k] = Matrix.from_rows(cols).transpose() if cols else \
            Matrix.zero(len(freeB), 0)
    return _homology_matrix(QA, QB, qmaps, n)


# ---------------------------------------------------------------------------
# The comparison map from the cyclic cochain complex of an associative
# algebra to that of its twist by an idempotent endomorphism.

def xi_map(assoc: HomAlgebra, twisted: HomAlgebra, n: int) -> Matrix:
    """phi -> phi o alpha^{(x)(n+1)} on cyclic cochains.

    `assoc` must be associative with alpha = Id; `twisted` its twist by
    an idempotent algebra endomorphism.  Verified to commute with the
    coboundaries and to preserve cyclicity.
    """
    from .algebra import alpha_is_idempotent, is_associative
    if not is_associative(assoc) or assoc.alpha != Matrix.identity(assoc.dim):
        raise ValueError("source must be associative with alpha = Id")
    if not alpha_is_idempotent(twisted):
        raise ValueError("twist endomorphism must be idempotent")
    alpha = twisted.alpha
    xi_n = tensor_power_matrix(alpha, n + 1).transpose()
    xi_next = tensor_power_matrix(alpha, n + 2).transpose()
    b_src = hochschild_b(assoc, regular_bimodule(assoc), n + 1).transpose()
    b_tgt = hochschild_b(twisted, regular_bimodule(twisted), n + 1).transpose()
    if b_tgt @ xi_n != xi_next @ b_src:
        raise IdentityViolationError("xi fails to commute with the coboundary")
    t_co = cyclic_t(assoc, n).transpose()
    ker_cyc = kernel(Matrix.identity(t_co.rows) - t_co)
    for v in ker_cyc.basis:
        w = xi_n.apply(v)
        residual = (Matrix.identity(t_co.rows) - t_co).apply(w)
        if any(residual):
            raise IdentityViolationError("xi does not preserve cyclicity")
    return xi_n


def xi_induced_on_cyclic_cohomology(assoc: HomAlgebra, twisted: HomAlgebra,
                                    n: int) -> Matrix:
    """Matrix of the map HC^n(A) -> HC^n(A_alpha) induced by xi."""
    from .complexes import sub_complex
    CA = build_hochschild_cohomology_complex(
        assoc, dualize_bimodule(regular_bimodule(assoc)), n + 1)
    CT = build_hochschild_cohomology_complex(
        twisted, dualize_bimodule(regular_bimodule(twisted)), n + 1)
    subs = {}
    for k in range(n + 2):
        t_co = cyclic_t(assoc, k).transpose()
        subs[k] = kernel(Matrix.identity(t_co.rows) - t_co)
    SA = sub_complex(CA, subs)
    ST = sub_complex(CT, subs)  # t is product-independent: same subspaces
    maps = {}
    for k in range(n + 2):
        xi_k = tensor_power_matrix(twisted.alpha, k + 1).transpose()
        cols = [subs[k].coordinates(xi_k.apply(v)) for v in subs[k].basis]
        maps[k] = Matrix.from_rows(cols).transpose() if cols else \
            Matrix.zero(subs[k].dim, 0)
    for k in range(n + 1):
        if maps[k + 1] @ SA.differential(k) != ST.differential(k) @ maps[k]:
            raise IdentityViolationError(
                f"restricted xi fails to commute at degree {k}")
    return _homology_matrix(SA, ST, maps, n)

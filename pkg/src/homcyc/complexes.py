"""Chain complexes, bicomplexes, total complexes, sub/quotient complexes.

One ChainComplex type serves both gradings: `orientation` records whether
the stored map at degree n goes down (homological, d_n: C_n -> C_{n-1})
or up (cohomological, d^n: C^n -> C^{n+1}).
"""

from __future__ import annotations

import json
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Literal, Sequence

from .linalg import (Matrix, Subspace, ZERO, image, kernel, quotient_dim,
                     reduce_mod, scalar_to_string)

Orientation = Literal["homological", "cohomological"]


class BoundarySquareError(ValueError):
    """d o d != 0: a construction bug or a violated chain-level identity."""


class NotStableError(ValueError):
    """The differential does not preserve the given family of subspaces."""


@dataclass(frozen=True)
class ChainComplex:
    """Finite truncation of a complex on degrees [min_degree .. max_degree].

    dims[n] is the dimension in degree n.  For homological orientation,
    diffs[n] maps degree n to n-1 (and diffs[min_degree] maps to 0 or out
    of the window); for cohomological, diffs[n] maps degree n to n+1.
    Degrees index dicts so the window may start below zero (periodic
    truncations).
    """

    dims: dict[int, int]
    diffs: dict[int, Matrix]
    orientation: Orientation = "homological"

    @property
    def min_degree(self) -> int:
        return min(self.dims)

    @property
    def max_degree(self) -> int:
        return max(self.dims)

    def dim(self, n: int) -> int:
        return self.dims.get(n, 0)

    def differential(self, n: int) -> Matrix:
        """The stored map out of degree n (target clipped to the window)."""
        if n in self.diffs:
            return self.diffs[n]
        tgt = n - 1 if self.orientation == "homological" else n + 1
        return Matrix.zero(self.dim(tgt), self.dim(n))

    def check_d_squared(self) -> None:
        step = -1 if self.orientation == "homological" else 1
        for n in sorted(self.dims):
            if n + step not in self.dims:
                continue
            comp = self.differential(n + step) @ self.differential(n)
            if not comp.is_zero():
                raise BoundarySquareError(f"d o d != 0 out of degree {n}")


def homology(C: ChainComplex, n: int) -> tuple[int, list[tuple[Fraction, ...]]]:
    """Betti number and canonical representatives in degree n.

    Representatives: kernel basis vectors reduced modulo the image via
    RREF elimination; zero residuals are dropped, duplicates removed by
    re-normalizing, so the result is a deterministic basis of a
    complement of the image inside the kernel.
    """
    if n not in C.dims:
        raise IndexError(f"degree {n} outside complex window")
    incoming_deg = n + 1 if C.orientation == "homological" else n - 1
    out_map = C.differential(n)
    ker = kernel(out_map)
    if incoming_deg in C.dims:
        im = image(C.differential(incoming_deg))
    else:
        im = Subspace.zero(C.dim(n))
    betti = quotient_dim(im, ker)  # raises if im not inside ker
    reduced = []
    for v in ker.basis:
        r = reduce_mod(im, v)
        if any(r):
            reduced.append(r)
    reps_sub = Subspace.from_vectors(C.dim(n), reduced)
    reps = list(reps_sub.basis)
    assert len(reps) == betti
    return betti, reps


@dataclass(frozen=True)
class HomologyReport:
    """Betti numbers with rank bookkeeping, serializable to JSON/text."""

    theory: str
    algebra_name: str
    coefficient_name: str
    orientation: Orientation
    degrees: tuple[int, ...]
    betti: dict[int, int]
    kernel_dims: dict[int, int]
    image_dims: dict[int, int]
    representatives: dict[int, list[tuple[Fraction, ...]]] = field(default_factory=dict)
    metadata: dict = field(default_factory=dict)

    def to_json_dict(self) -> dict:
        out = {
            "theory": self.theory,
            "algebra": self.algebra_name,
            "coefficients": self.coefficient_name,
            "orientation": self.orientation,
            "degrees": list(self.degrees),
            "betti": {str(n): self.betti[n] for n in self.degrees},
            "kernel_dims": {str(n): self.kernel_dims[n] for n in self.degrees},
            "image_dims": {str(n): self.image_dims[n] for n in self.degrees},
        }
        if self.representatives:
            out["representatives"] = {
                str(n): [[scalar_to_string(x) for x in v] for v in reps]
                for n, reps in self.representatives.items()}
        if self.metadata:
            out["metadata"] = self.metadata
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True, indent=2)

    def to_text(self, label_fn: Callable[[int, int], str] | None = None) -> str:
        lines = [f"{self.theory} of {self.algebra_name} "
                 f"(coefficients: {self.coefficient_name})"]
        lines.append(f"{'degree':>8} {'dim ker':>8} {'dim im':>8} {'betti':>6}")
        for n in self.degrees:
            lines.append(f"{n:>8} {self.kernel_dims[n]:>8} "
                         f"{self.image_dims[n]:>8} {self.betti[n]:>6}")
        for n, reps in sorted(self.representatives.items()):
            for v in reps:
                terms = []
                for i, x in enumerate(v):
                    if x:
                        lbl = label_fn(n, i) if label_fn else f"x{i}"
                        terms.append(f"{scalar_to_string(x)}*{lbl}")
                lines.append(f"  cycle[{n}]: " + " + ".join(terms))
        return "\n".join(lines)


def _thread_cap() -> int:
    """Worker cap from HOMCYC_THREADS; 1 (serial) when unset or invalid."""
    try:
        return max(1, int(os.environ.get("HOMCYC_THREADS", "1")))
    except ValueError:
        return 1


def report_for_complex(C: ChainComplex, degrees: Sequence[int], *,
                       theory: str, algebra_name: str, coefficient_name: str,
                       representatives: bool = False,
                       metadata: dict | None = None) -> HomologyReport:
    C.check_d_squared()
    betti: dict[int, int] = {}
    kdims: dict[int, int] = {}
    idims: dict[int, int] = {}
    reps: dict[int, list] = {}

    def one_degree(n: int):
        b, r = homology(C, n)
        kd = kernel(C.differential(n)).dim
        incoming = n + 1 if C.orientation == "homological" else n - 1
        idim = image(C.differential(incoming)).dim if incoming in C.dims else 0
        return n, b, r, kd, idim

    workers = _thread_cap()
    if workers > 1 and len(degrees) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(one_degree, degrees))
    else:
        results = [one_degree(n) for n in degrees]
    for n, b, r, kd, idim in results:
        betti[n] = b
        kdims[n] = kd
        idims[n] = idim
        if representatives:
            reps[n] = r
    return HomologyReport(theory=theory, algebra_name=algebra_name,
                          coefficient_name=coefficient_name,
                          orientation=C.orientation,
                          degrees=tuple(degrees), betti=betti,
                          kernel_dims=kdims, image_dims=idims,
                          representatives=reps, metadata=metadata or {})


@dataclass(frozen=True)
class Bicomplex:
    """Double complex with the signs baked into the stored maps.

    vertical[(p, q)] maps cell (p, q) to (p, q-1) for homological
    orientation (to (p, q+1) cohomological); horizontal[(p, q)] maps
    (p, q) to (p-1, q) (to (p+1, q) cohomological).  The total
    differential is plain vertical + horizontal, so the construction
    requires v^2 = 0, h^2 = 0, and vh + hv = 0 cellwise.
    """

    cell_dims: dict[tuple[int, int], int]
    vertical: dict[tuple[int, int], Matrix]
    horizontal: dict[tuple[int, int], Matrix]
    orientation: Orientation = "homological"

    def dim(self, p: int, q: int) -> int:
        return self.cell_dims.get((p, q), 0)

    def _vstep(self) -> int:
        return -1 if self.orientation == "homological" else 1

    def _hstep(self) -> int:
        return -1 if self.orientation == "homological" else 1

    def vmap(self, p: int, q: int) -> Matrix:
        if (p, q) in self.vertical:
            return self.vertical[(p, q)]
        return Matrix.zero(self.dim(p, q + self._vstep()), self.dim(p, q))

    def hmap(self, p: int, q: int) -> Matrix:
        if (p, q) in self.horizontal:
            return self.horizontal[(p, q)]
        return Matrix.zero(self.dim(p + self._hstep(), q), self.dim(p, q))

    def check_squares(self) -> None:
        vs, hs = self._vstep(), self._hstep()
        for (p, q) in self.cell_dims:
            if (p, q + 2 * vs) in self.cell_dims:
                if not (self.vmap(p, q + vs) @ self.vmap(p, q)).is_zero():
                    raise BoundarySquareError(f"vertical^2 != 0 at {(p, q)}")
            if (p + 2 * hs, q) in self.cell_dims:
                if not (self.hmap(p + hs, q) @ self.hmap(p, q)).is_zero():
                    raise BoundarySquareError(f"horizontal^2 != 0 at {(p, q)}")
            if (p + hs, q + vs) in self.cell_dims:
                anti = self.vmap(p + hs, q) @ self.hmap(p, q) + \
                    self.hmap(p, q + vs) @ self.vmap(p, q)
                if not anti.is_zero():
                    raise BoundarySquareError(
                        f"squares do not anticommute at {(p, q)}")


def total_complex(B: Bicomplex) -> ChainComplex:
    """Direct-sum total complex; d^2 = 0 re-verified on the result."""
    B.check_squares()
    degrees: dict[int, list[tuple[int, int]]] = {}
    for (p, q) in B.cell_dims:
        degrees.setdefault(p + q, []).append((p, q))
    for cells in degrees.values():
        cells.sort()
    dims = {n: sum(B.dim(p, q) for p, q in cells)
            for n, cells in degrees.items()}
    offsets: dict[int, dict[tuple[int, int], int]] = {}
    for n, cells in degrees.items():
        off = 0
        offsets[n] = {}
        for cell in cells:
            offsets[n][cell] = off
            off += B.dim(*cell)
    step = -1 if B.orientation == "homological" else 1
    diffs: dict[int, Matrix] = {}
    for n in degrees:
        tgt = n + step
        if tgt not in degrees:
            continue
        rows = dims[tgt]
        cols = dims[n]
        entries = [[ZERO] * cols for _ in range(rows)]

        def put(block: Matrix, roff: int, coff: int):
            for i in range(block.rows):
                brow = block.row(i)
                for j in range(block.cols):
                    if brow[j]:
                        entries[roff + i][coff + j] = brow[j]

        for (p, q) in degrees[n]:
            coff = offsets[n][(p, q)]
            vcell = (p, q + step)
            if vcell in offsets.get(tgt, {}):
                put(B.vmap(p, q), offsets[tgt][vcell], coff)
            hcell = (p + step, q)
            if hcell in offsets.get(tgt, {}):
                put(B.hmap(p, q), offsets[tgt][hcell], coff)
        diffs[n] = Matrix.from_rows(entries) if rows and cols else \
            Matrix.zero(rows, cols)
    C = ChainComplex(dims=dims, diffs=diffs, orientation=B.orientation)
    C.check_d_squared()
    return C


def _induced_on_quotient(d: Matrix, sub_tgt: Subspace,
                         src_reps: list[tuple[Fraction, ...]],
                         tgt_reps: list[tuple[Fraction, ...]]) -> Matrix:
    """Differential on quotient coordinates (coset representative bases)."""
    tgt_space = Subspace.from_vectors(
        len(tgt_reps[0]) if tgt_reps else d.rows, tgt_reps)
    cols = []
    for v in src_reps:
        w = reduce_mod(sub_tgt, d.apply(v))
        cols.append(tgt_space.coordinates(w))
    if not cols:
        return Matrix.zero(len(tgt_reps), 0)
    return Matrix.from_rows(cols).transpose()


def quotient_complex(C: ChainComplex, subspaces: dict[int, Subspace]) -> ChainComplex:
    """Quotient of C by a d-stable family of subspaces.

    Coordinates in degree n: the canonical coset representatives, i.e.
    the standard basis vectors at non-pivot positions of the subspace's
    RREF basis.
    """
    step = -1 if C.orientation == "homological" else 1
    reps: dict[int, list[tuple[Fraction, ...]]] = {}
    for n in C.dims:
        sub = subspaces.get(n, Subspace.zero(C.dim(n)))
        if sub.ambient_dim != C.dim(n):
            raise ValueError(f"subspace ambient dim mismatch in degree {n}")
        pivots = {next(j for j, x in enumerate(b) if x) for b in sub.basis}
        free = [j for j in range(C.dim(n)) if j not in pivots]
        reps[n] = [tuple(Fraction(int(j == f)) for j in range(C.dim(n)))
                   for f in free]
    dims = {n: len(reps[n]) for n in C.dims}
    diffs: dict[int, Matrix] = {}
    for n in C.dims:
        tgt = n + step
        if tgt not in C.dims:
            continue
        d = C.differential(n)
        sub_src = subspaces.get(n, Subspace.zero(C.dim(n)))
        sub_tgt = subspaces.get(tgt, Subspace.zero(C.dim(tgt)))
        for v in sub_src.basis:
            if any(reduce_mod(sub_tgt, d.apply(v))):
                raise NotStableError(
                    f"differential does not preserve subspace at degree {n}")
        if reps[tgt]:
            diffs[n] = _induced_on_quotient(d, sub_tgt, reps[n], reps[tgt])
        else:
            diffs[n] = Matrix.zero(0, dims[n])
    Q = ChainComplex(dims=dims, diffs=diffs, orientation=C.orientation)
    Q.check_d_squared()
    return Q


def sub_complex(C: ChainComplex, subspaces: dict[int, Subspace]) -> ChainComplex:
    """Restriction of C to a d-stable family of subspaces."""
    step = -1 if C.orientation == "homological" else 1
    dims = {}
    for n in C.dims:
        sub = subspaces.get(n, Subspace.zero(C.dim(n)))
        if sub.ambient_dim != C.dim(n):
            raise ValueError(f"subspace ambient dim mismatch in degree {n}")
        dims[n] = sub.dim
    diffs: dict[int, Matrix] = {}
    for n in C.dims:
        tgt = n + step
        if tgt not in C.dims:
            continue
        d = C.differential(n)
        sub_src = subspaces.get(n, Subspace.zero(C.dim(n)))
        sub_tgt = subspaces.get(tgt, Subspace.zero(C.dim(tgt)))
        cols = []
        for v in sub_src.basis:
            w = d.apply(v)
            try:
                cols.append(sub_tgt.coordinates(w))
            except ValueError as exc:
                raise NotStableError(
                    f"differential leaves subspace at degree {n}") from exc
        diffs[n] = Matrix.from_rows(cols).transpose() if cols else \
            Matrix.zero(dims[tgt], 0)
    S = ChainComplex(dims=dims, diffs=diffs, orientation=C.orientation)
    S.check_d_squared()
    return S

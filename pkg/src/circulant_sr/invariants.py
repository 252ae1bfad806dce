"""Hilbert series data, graded Betti numbers via Hochster's formula, and the
ring invariants that follow from them (depth, regularity, CM type, ...)."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb, factorial
from typing import Iterator

from .circulant import popcount
from .complex import (
    SimplicialComplex,
    cone_apex,
    f_vector,
    h_vector,
    krull_dimension,
    reflect,
    restriction,
    rotate,
)
from .errors import BettiCapError, InternalConsistencyError, SpecError
from .homology import RATIONALS, FieldSpec, reduced_betti_numbers

DEFAULT_MAX_N_BETTI = 20


# -- integer polynomials as ascending coefficient tuples ---------------------

def poly_trim(p) -> tuple[int, ...]:
    p = list(p)
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return tuple(p) if p else (0,)


def poly_mul(p, q) -> tuple[int, ...]:
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return poly_trim(out)


def one_minus_t_power(e: int) -> tuple[int, ...]:
    return tuple((-1) ** k * comb(e, k) for k in range(e + 1))


def poly_degree(p) -> int:
    p = poly_trim(p)
    return -1 if p == (0,) else len(p) - 1


def binomial_poly_value(x: int, m: int) -> int:
    """``C(x, m)`` as the degree-m polynomial in x, valid for negative x."""
    num = 1
    for r in range(m):
        num *= x - r
    return num // factorial(m)


@dataclass(frozen=True)
class HilbertData:
    n: int
    d: int
    h_vector: tuple[int, ...]
    h_poly: tuple[int, ...]
    k_poly: tuple[int, ...]
    ri: int
    hilbert_function: tuple[int, ...]
    hilbert_polynomial_values: tuple[int, ...]


def hilbert_function_value(f: tuple[int, ...], k: int) -> int:
    if k == 0:
        return 1
    return sum(f[i] * comb(k - 1, i - 1) for i in range(1, len(f)))


def hilbert_polynomial_value(f: tuple[int, ...], k: int) -> int:
    return sum(f[i] * binomial_poly_value(k - 1, i - 1) for i in range(1, len(f)))


def hilbert_data(f: tuple[int, ...], n: int) -> HilbertData:
    """Hilbert series data for the Stanley-Reisner ring with face vector ``f``.

    The regularity index is computed twice, from the degree of the reduced
    numerator and by comparing the Hilbert function with the Hilbert
    polynomial term by term; a mismatch raises.
    """
    if not f:
        raise SpecError("hilbert_data needs a nonempty complex")
    d = len(f) - 1
    h = h_vector(f)
    h_poly = poly_trim(h)
    k_poly = poly_mul(h_poly, one_minus_t_power(n - d))
    ri = max(0, poly_degree(h_poly) - d + 1)

    top = d + poly_degree(h_poly) + 2
    hf = tuple(hilbert_function_value(f, k) for k in range(top + 1))
    hp = tuple(hilbert_polynomial_value(f, k) for k in range(top + 1))
    direct = 0
    for k in range(top, -1, -1):
        if hf[k] != hp[k]:
            direct = k + 1
            break
    if direct != ri:
        raise InternalConsistencyError(
            f"regularity index mismatch: numerator gives {ri}, Hilbert function gives {direct}")
    return HilbertData(n, d, h, h_poly, k_poly, ri, hf, hp)


# -- Betti tables ------------------------------------------------------------

@dataclass(frozen=True)
class BettiTable:
    """Graded Betti numbers ``β_{i,j}`` of ``R/I_Δ``; only nonzero entries stored."""

    field: FieldSpec
    n: int
    entries: dict = field(default_factory=dict)

    def __getitem__(self, ij) -> int:
        return self.entries.get(ij, 0)

    def totals(self) -> tuple[int, ...]:
        top = max(i for i, _ in self.entries)
        out = [0] * (top + 1)
        for (i, _), v in self.entries.items():
            out[i] += v
        return tuple(out)

    @property
    def projective_dimension(self) -> int:
        return max(i for i, _ in self.entries)

    def column(self, i: int) -> dict[int, int]:
        return {j: v for (a, j), v in sorted(self.entries.items()) if a == i}

    def k_polynomial(self) -> tuple[int, ...]:
        """``Σ (-1)^i β_{i,j} t^j``."""
        top = max(j for _, j in self.entries)
        out = [0] * (top + 1)
        for (i, j), v in self.entries.items():
            out[j] += (-1) ** i * v
        return poly_trim(out)

    def as_records(self) -> list[dict]:
        return [{"i": i, "j": j, "value": v} for (i, j), v in sorted(self.entries.items())]

    def format(self) -> str:
        """Macaulay2-style table: row r lists β_{i, i+r}."""
        pd = self.projective_dimension
        reg = regularity(self)
        width = max(len(str(v)) for v in list(self.entries.values()) + list(self.totals())) + 1
        width = max(width, len(str(pd)) + 1)
        lines = ["       " + "".join(f"{i:>{width}}" for i in range(pd + 1)),
                 "total: " + "".join(f"{v:>{width}}" for v in self.totals())]
        for r in range(reg + 1):
            cells = [self[(i, i + r)] for i in range(pd + 1)]
            lines.append(f"{r:>5}: " + "".join(f"{(v if v else '.'):>{width}}" for v in cells))
        return "\n".join(lines)


def dihedral_orbits(n: int) -> Iterator[tuple[int, int]]:
    """Yield ``(representative, orbit_size)`` for subsets of Z_n under D_n.

    The representative is the numerically smallest mask of its orbit.
    """
    seen = bytearray(1 << n)
    for m in range(1 << n):
        if seen[m]:
            continue
        images = set()
        r = reflect(m, n)
        for k in range(n):
            images.add(rotate(m, k, n))
            images.add(rotate(r, k, n))
        for x in images:
            seen[x] = 1
        yield m, len(images)


def _all_subsets(n: int) -> Iterator[tuple[int, int]]:
    for m in range(1 << n):
        yield m, 1


def restriction_homology(cx: SimplicialComplex, sigma: int, field: FieldSpec) -> tuple[int, ...]:
    """Reduced Betti numbers of ``Δ|σ``, indexed from H̃_{-1}.

    Cones are acyclic, so their homology is returned as zeros without elimination.
    """
    sub = restriction(cx, sigma)
    if sigma and cone_apex(sub) is not None:
        return (0,) * (sub.dim + 2)
    return reduced_betti_numbers(sub, field)


def betti_table_hochster(cx: SimplicialComplex, field: FieldSpec = RATIONALS,
                         use_symmetry: bool = False,
                         max_n: int = DEFAULT_MAX_N_BETTI) -> BettiTable:
    """``β_{i,j} = Σ_{|σ|=j} dim H̃_{j-i-1}(Δ|σ)`` summed over vertex subsets σ.

    With ``use_symmetry`` only one σ per dihedral orbit is evaluated and its
    contribution weighted by the orbit size; the complex must be invariant
    under rotation and reflection of Z_n.
    """
    n = cx.n
    if n > max_n:
        raise BettiCapError(f"Betti table for n={n} exceeds cap {max_n}")
    if cx.is_void:
        raise SpecError("Betti table of the void complex is undefined")
    if use_symmetry:
        if not cx.is_dihedrally_invariant():
            raise SpecError("use_symmetry requires a complex invariant under the dihedral group of Z_n")
        subsets = dihedral_orbits(n)
    else:
        subsets = _all_subsets(n)
    dim = cx.dim
    entries: dict[tuple[int, int], int] = {}
    for sigma, weight in subsets:
        j = popcount(sigma)
        hom = restriction_homology(cx, sigma, field)
        for idx, b in enumerate(hom):
            if b:
                k = idx - 1
                assert k <= dim
                i = j - k - 1
                entries[(i, j)] = entries.get((i, j), 0) + b * weight
    return BettiTable(field, n, dict(sorted(entries.items())))


def regularity(bt: BettiTable) -> int:
    return max(j - i for (i, j), v in bt.entries.items() if v)


@dataclass(frozen=True)
class AlgebraicReport:
    n: int
    krull_dim: int
    depth: int
    projective_dimension: int
    regularity: int
    regularity_index: int
    is_cohen_macaulay: bool
    is_gorenstein: bool
    is_level: bool
    cm_type: int | None
    betti: BettiTable


def algebraic_report(cx: SimplicialComplex, field: FieldSpec = RATIONALS,
                     use_symmetry: bool | None = None,
                     max_n: int = DEFAULT_MAX_N_BETTI,
                     betti: BettiTable | None = None) -> AlgebraicReport:
    """Depth via Auslander-Buchsbaum and everything else read off the Betti table.

    ``use_symmetry=None`` turns the dihedral reduction on whenever the complex
    admits it.
    """
    if betti is None:
        if use_symmetry is None:
            use_symmetry = cx.is_dihedrally_invariant()
        betti = betti_table_hochster(cx, field, use_symmetry, max_n)
    n = cx.n
    pd = betti.projective_dimension
    depth = n - pd
    dim = krull_dimension(cx)
    cm = depth == dim
    last = betti.column(pd)
    cm_type = sum(last.values()) if cm else None
    return AlgebraicReport(
        n=n,
        krull_dim=dim,
        depth=depth,
        projective_dimension=pd,
        regularity=regularity(betti),
        regularity_index=hilbert_data(f_vector(cx), n).ri,
        is_cohen_macaulay=cm,
        is_gorenstein=cm and cm_type == 1,
        is_level=len(last) == 1,
        cm_type=cm_type,
        betti=betti,
    )

"""Reduced simplicial homology over Q or F_p by exact elimination.

Boundary matrices are stored sparsely as a list of columns, each column a
dict ``{row_index: entry}``.  Ranks over Q use fraction-free integer column
reduction (every step replaces a column by an integer combination with a
nonzero coefficient on itself, then divides out the content), so no
fractions or floats ever appear.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Sequence

from .circulant import _bits
from .complex import SimplicialComplex
from .errors import SpecError

Column = dict  # row index -> nonzero integer


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Coefficient field: characteristic 0 means Q, otherwise F_p."""

    characteristic: int = 0

    def __post_init__(self):
        if self.characteristic != 0 and not is_prime(self.characteristic):
            raise SpecError(f"{self.characteristic} is not prime")

    @classmethod
    def parse(cls, text: str) -> "FieldSpec":
        t = text.strip().lower()
        if t in ("q", "qq", "rationals", "0"):
            return cls(0)
        if t.startswith("p:"):
            try:
                return cls(int(t[2:]))
            except ValueError:
                pass
        raise SpecError(f"unknown field {text!r}; use 'q' or 'p:<prime>'")

    def __str__(self):
        return "q" if self.characteristic == 0 else f"p:{self.characteristic}"


RATIONALS = FieldSpec(0)


@dataclass(frozen=True)
class BoundaryMatrix:
    """Signed boundary map from i-faces (columns) to (i-1)-faces (rows)."""

    dim: int
    n_rows: int
    columns: tuple[Column, ...]

    @property
    def n_cols(self) -> int:
        return len(self.columns)

    def dense(self) -> list[list[int]]:
        rows = [[0] * self.n_cols for _ in range(self.n_rows)]
        for j, col in enumerate(self.columns):
            for i, a in col.items():
                rows[i][j] = a
        return rows


def boundary_matrices(cx: SimplicialComplex) -> list[BoundaryMatrix]:
    """``[∂_0, ∂_1, ..., ∂_dim]``; ``∂_0`` is the augmentation onto the empty face."""
    mats = []
    for i in range(0, cx.dim + 1):
        row_index = {m: r for r, m in enumerate(cx.faces(i - 1))}
        cols = []
        for face in cx.faces(i):
            col = {}
            for k, v in enumerate(_bits(face)):
                col[row_index[face & ~(1 << v)]] = -1 if k & 1 else 1
            cols.append(col)
        mats.append(BoundaryMatrix(i, len(row_index), tuple(cols)))
    return mats


def _content(col: Column) -> int:
    g = 0
    for a in col.values():
        g = gcd(g, a)
        if g == 1:
            break
    return g


def rank_rational(columns: Sequence[Column]) -> int:
    """Rank over Q by fraction-free column reduction on lowest nonzero rows."""
    pivots: dict[int, Column] = {}
    for col in columns:
        c = dict(col)
        while c:
            low = max(c)
            p = pivots.get(low)
            if p is None:
                g = _content(c)
                if g != 1:
                    c = {r: a // g for r, a in c.items()}
                pivots[low] = c
                break
            a, b = p[low], c[low]
            g = gcd(a, b)
            a, b = a // g, b // g
            # c <- a*c - b*p kills row `low`
            new = {r: a * x for r, x in c.items()}
            for r, x in p.items():
                y = new.get(r, 0) - b * x
                if y:
                    new[r] = y
                else:
                    new.pop(r, None)
            g = _content(new) if new else 1
            if g > 1:
                new = {r: x // g for r, x in new.items()}
            c = new
    return len(pivots)


def rank_mod_p(columns: Sequence[Column], p: int) -> int:
    pivots: dict[int, Column] = {}
    for col in columns:
        c = {r: a % p for r, a in col.items() if a % p}
        while c:
            low = max(c)
            piv = pivots.get(low)
            if piv is None:
                inv = pow(c[low], -1, p)
                pivots[low] = {r: x * inv % p for r, x in c.items()}
                break
            factor = c[low]
            for r, x in piv.items():
                y = (c.get(r, 0) - factor * x) % p
                if y:
                    c[r] = y
                else:
                    c.pop(r, None)
    return len(pivots)


def matrix_rank(columns: Sequence[Column], field: FieldSpec = RATIONALS) -> int:
    if field.characteristic == 0:
        return rank_rational(columns)
    return rank_mod_p(columns, field.characteristic)


def reduced_betti_numbers(cx: SimplicialComplex, field: FieldSpec = RATIONALS) -> tuple[int, ...]:
    """``(dim H̃_{-1}, dim H̃_0, ..., dim H̃_{dim})``; empty for the void complex."""
    if cx.is_void:
        return ()
    mats = boundary_matrices(cx)
    ranks = [matrix_rank(m.columns, field) for m in mats]  # ranks[i] = rank ∂_i
    f = [len(level) for level in cx.faces_by_dim]
    out = []
    for i in range(-1, cx.dim + 1):
        cycles = f[i + 1] - (ranks[i] if i >= 0 else 0)
        boundaries = ranks[i + 1] if i + 1 < len(ranks) else 0
        out.append(cycles - boundaries)
    return tuple(out)

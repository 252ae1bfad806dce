"""Simplicial complexes with faces stored as bitmasks, grouped by dimension.

A face is an ``int`` whose bit ``v`` is set when vertex ``v`` belongs to it.
``faces_by_dim[0]`` holds the empty face (dimension -1), ``faces_by_dim[1]``
the vertices, and so on; each level is sorted numerically.  The complex
``{∅}`` has ``faces_by_dim == ((0,),)`` and the void complex (no faces at all)
has ``faces_by_dim == ()``.
"""

from __future__ import annotations

import enum
import os
from dataclasses import dataclass, field
from math import comb
from typing import Iterable, Iterator

from .circulant import Graph, _bits, popcount
from .errors import FaceLimitError, SpecError

DEFAULT_MAX_FACES = 1 << 24


def default_max_faces() -> int:
    env = os.environ.get("CIRCULANT_MAX_FACES")
    if env:
        try:
            value = int(env)
        except ValueError:
            raise SpecError(f"CIRCULANT_MAX_FACES={env!r} is not an integer") from None
        if value <= 0:
            raise SpecError("CIRCULANT_MAX_FACES must be positive")
        return value
    return DEFAULT_MAX_FACES


@dataclass(frozen=True)
class SimplicialComplex:
    n: int
    faces_by_dim: tuple[tuple[int, ...], ...]
    _face_set: frozenset = field(default=None, init=False, repr=False, compare=False)

    @property
    def dim(self) -> int:
        """Maximum face dimension; -1 for ``{∅}`` and -2 for the void complex."""
        return len(self.faces_by_dim) - 2

    @property
    def is_void(self) -> bool:
        return not self.faces_by_dim

    def faces(self, dim: int) -> tuple[int, ...]:
        i = dim + 1
        if 0 <= i < len(self.faces_by_dim):
            return self.faces_by_dim[i]
        return ()

    def __iter__(self) -> Iterator[int]:
        for level in self.faces_by_dim:
            yield from level

    def __len__(self):
        return sum(len(level) for level in self.faces_by_dim)

    def __contains__(self, face: int) -> bool:
        return face in self.face_set

    @property
    def face_set(self) -> frozenset:
        if self._face_set is None:
            object.__setattr__(self, "_face_set", frozenset(self))
        return self._face_set

    @property
    def vertex_mask(self) -> int:
        m = 0
        for v in self.faces(0):
            m |= v
        return m

    def vertices(self) -> list[int]:
        return list(_bits(self.vertex_mask))

    @classmethod
    def from_faces(cls, n: int, faces: Iterable[int | Iterable[int]]) -> "SimplicialComplex":
        """Build from an explicit face list; raises if it is not downward closed."""
        masks = {_as_mask(f) for f in faces}
        return cls._from_mask_set(n, masks, check=True)

    @classmethod
    def from_facets(cls, n: int, facets: Iterable[int | Iterable[int]]) -> "SimplicialComplex":
        return cls._from_mask_set(n, _downward_closure(_as_mask(f) for f in facets), check=False)

    @classmethod
    def _from_mask_set(cls, n: int, masks: set[int], check: bool) -> "SimplicialComplex":
        if not masks:
            return cls(n, ())
        if any(m >> n for m in masks):
            raise SpecError(f"face outside the ground set of size {n}")
        top = max(popcount(m) for m in masks)
        levels: list[list[int]] = [[] for _ in range(top + 1)]
        for m in masks:
            levels[popcount(m)].append(m)
        cx = cls(n, tuple(tuple(sorted(level)) for level in levels))
        if check:
            for m in masks:
                for v in _bits(m):
                    if m & ~(1 << v) not in masks:
                        raise SpecError("face set is not closed under taking subsets")
        return cx

    def is_downward_closed(self) -> bool:
        fs = self.face_set
        return all(m & ~(1 << v) in fs for m in self for v in _bits(m))

    def relabel(self, mapping: dict[int, int], n: int | None = None) -> "SimplicialComplex":
        """Rename vertices; ``mapping`` sends old vertex -> new vertex."""
        def move(m):
            out = 0
            for v in _bits(m):
                out |= 1 << mapping[v]
            return out
        return SimplicialComplex._from_mask_set(self.n if n is None else n,
                                                {move(m) for m in self}, check=False)

    def is_dihedrally_invariant(self) -> bool:
        """True iff the face set is fixed by ``k -> k+1`` and ``k -> -k`` mod n."""
        n = self.n
        fs = self.face_set
        return all(rotate(m, 1, n) in fs and reflect(m, n) in fs for m in self)


def _as_mask(face) -> int:
    if isinstance(face, int):
        return face
    m = 0
    for v in face:
        m |= 1 << v
    return m


def face_tuple(m: int) -> tuple[int, ...]:
    return tuple(_bits(m))


def _downward_closure(tops: Iterable[int]) -> set[int]:
    out: set[int] = set()
    frontier = set(tops)
    while frontier:
        out |= frontier
        nxt = set()
        for m in frontier:
            for v in _bits(m):
                sub = m & ~(1 << v)
                if sub not in out:
                    nxt.add(sub)
        frontier = nxt
    return out


def rotate(m: int, r: int, n: int) -> int:
    r %= n
    full = (1 << n) - 1
    return ((m << r) | (m >> (n - r))) & full


def reflect(m: int, n: int) -> int:
    out = 0
    for v in _bits(m):
        out |= 1 << (-v % n)
    return out


def independence_complex(g: Graph, max_faces: int | None = None) -> SimplicialComplex:
    """All independent vertex sets of ``g``, in local indices ``0..k-1``.

    Each face of dimension i+1 extends a face of dimension i by a vertex larger
    than its current maximum, so nothing is generated twice.
    """
    if max_faces is None:
        max_faces = default_max_faces()
    k = g.vertex_count
    full = (1 << k) - 1
    # non-neighbours strictly above each vertex
    above = [full & ~((1 << (v + 1)) - 1) & ~g.adj[v] for v in range(k)]
    levels = [[0]]
    frontier = [(0, full)]
    total = 1
    while frontier:
        nxt = []
        for face, cand in frontier:
            for v in _bits(cand):
                nxt.append((face | 1 << v, cand & above[v]))
        if not nxt:
            break
        total += len(nxt)
        if total > max_faces:
            raise FaceLimitError(f"independence complex exceeds {max_faces} faces")
        nxt.sort()
        levels.append([f for f, _ in nxt])
        frontier = nxt
    return SimplicialComplex(k, tuple(tuple(level) for level in levels))


def clique_complex(g: Graph, max_faces: int | None = None) -> SimplicialComplex:
    return independence_complex(g.complement(), max_faces)


def f_vector(cx: SimplicialComplex) -> tuple[int, ...]:
    """``(f_{-1}, f_0, ..., f_{d-1})``."""
    return tuple(len(level) for level in cx.faces_by_dim)


def h_vector(f: tuple[int, ...]) -> tuple[int, ...]:
    d = len(f) - 1
    return tuple(
        sum((-1) ** (k - i) * comb(d - i, k - i) * f[i] for i in range(k + 1))
        for k in range(d + 1)
    )


def reduced_euler_characteristic(f: tuple[int, ...]) -> int:
    # f[0] is f_{-1}
    return sum(fi if i % 2 else -fi for i, fi in enumerate(f))


def krull_dimension(cx: SimplicialComplex) -> int:
    return cx.dim + 1


def pure_skeleton(cx: SimplicialComplex, k: int) -> SimplicialComplex:
    """The subcomplex generated by the k-dimensional faces."""
    if k < 0:
        raise SpecError(f"skeleton dimension must be >= 0, got {k}")
    return SimplicialComplex.from_facets(cx.n, cx.faces(k))


def restriction(cx: SimplicialComplex, sigma: int | Iterable[int]) -> SimplicialComplex:
    sigma = _as_mask(sigma)
    outside = ~sigma
    levels = []
    for level in cx.faces_by_dim:
        kept = tuple(m for m in level if not m & outside)
        if not kept:
            break
        levels.append(kept)
    return SimplicialComplex(cx.n, tuple(levels))


def link(cx: SimplicialComplex, v: int) -> SimplicialComplex:
    bit = 1 << v
    if bit not in cx:
        raise SpecError(f"{v} is not a vertex of the complex")
    levels = []
    for level in cx.faces_by_dim[1:]:
        kept = tuple(sorted(m ^ bit for m in level if m & bit))
        if not kept:
            break
        levels.append(kept)
    return SimplicialComplex(cx.n, tuple(levels))


def cone_apex(cx: SimplicialComplex) -> int | None:
    """A vertex every facet contains, if any.

    Faces containing v inject into faces avoiding v (drop v), so equal counts
    mean every face avoiding v extends by v.
    """
    total = len(cx)
    for v in cx.vertices():
        bit = 1 << v
        if 2 * sum(1 for m in cx if m & bit) == total:
            return v
    return None


class Connectivity(enum.Enum):
    CONNECTED = "Connected"
    DISCONNECTED = "Disconnected"
    EMPTY = "Empty"


def one_skeleton_components(cx: SimplicialComplex) -> list[int]:
    """Connected components of the vertex-edge graph, as vertex bitmasks."""
    parent = {v: v for v in cx.vertices()}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in cx.faces(1):
        a, b = _bits(e)
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)
    comps: dict[int, int] = {}
    for v in parent:
        r = find(v)
        comps[r] = comps.get(r, 0) | 1 << v
    return sorted(comps.values())


def skeleton_connectivity(cx: SimplicialComplex, k: int) -> Connectivity:
    sk = pure_skeleton(cx, k)
    if sk.is_void or not sk.faces(0):
        return Connectivity.EMPTY
    if len(one_skeleton_components(sk)) == 1:
        return Connectivity.CONNECTED
    return Connectivity.DISCONNECTED

"""Executable checks of the structural results on circulant graphs.

Each ``verify_*`` function examines one instance and returns a
:class:`VerificationResult`; sweeps never stop on a failure, they record it.
Claim ids match the CLI (``thm2.3``, ``lem2.2``, ...).
"""

from __future__ import annotations

import enum
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import cached_property, lru_cache, reduce
from math import comb, gcd
from typing import Callable, Iterable

from .circulant import (
    CirculantSpec,
    Graph,
    all_specs,
    build_circulant,
    complement_spec,
    has_perfect_elimination_order,
    induced_subgraph,
    is_chordal,
)
from .complex import (
    Connectivity,
    SimplicialComplex,
    f_vector,
    h_vector,
    independence_complex,
    link,
    one_skeleton_components,
    reduced_euler_characteristic,
    skeleton_connectivity,
)
from .homology import RATIONALS, FieldSpec, is_prime
from .invariants import DEFAULT_MAX_N_BETTI, AlgebraicReport, algebraic_report, hilbert_data


class Status(enum.Enum):
    HOLDS = "Holds"
    FAILS = "Fails"
    INAPPLICABLE = "Inapplicable"


@dataclass(frozen=True)
class VerificationResult:
    claim: str
    spec: CirculantSpec
    status: Status
    witness: dict | None = None

    def to_record(self) -> dict:
        rec = {"claim": self.claim, "n": self.spec.n, "S": list(self.spec.S),
               "status": self.status.value}
        if self.witness is not None:
            rec["witness"] = self.witness
        return rec


@dataclass(frozen=True)
class Options:
    field: FieldSpec = RATIONALS
    use_symmetry: bool = True
    max_faces: int | None = None
    max_n_betti: int = DEFAULT_MAX_N_BETTI


class Instance:
    """Lazily computed data for one circulant, shared by all claims."""

    def __init__(self, spec: CirculantSpec, options: Options):
        self.spec = spec
        self.options = options

    @cached_property
    def graph(self) -> Graph:
        return build_circulant(self.spec)

    @cached_property
    def complex(self) -> SimplicialComplex:
        return independence_complex(self.graph, self.options.max_faces)

    @cached_property
    def f(self) -> tuple[int, ...]:
        return f_vector(self.complex)

    @cached_property
    def report(self) -> AlgebraicReport:
        o = self.options
        return algebraic_report(self.complex, o.field, o.use_symmetry, o.max_n_betti)


@lru_cache(maxsize=512)
def instance(spec: CirculantSpec, options: Options = Options()) -> Instance:
    return Instance(spec, options)


def _result(claim, spec, ok: bool, witness=None) -> VerificationResult:
    if ok:
        return VerificationResult(claim, spec, Status.HOLDS, witness)
    return VerificationResult(claim, spec, Status.FAILS, witness or {})


def _inapplicable(claim, spec, hypothesis: str) -> VerificationResult:
    return VerificationResult(claim, spec, Status.INAPPLICABLE, {"violated_hypothesis": hypothesis})


def _prime_hypothesis(claim, spec) -> VerificationResult | None:
    if not is_prime(spec.n):
        return _inapplicable(claim, spec, f"n={spec.n} is not prime")
    if not spec.S:
        return _inapplicable(claim, spec, "S is empty (edgeless graph)")
    return None


# -- dimension-two Cohen-Macaulay classification ------------------------------

def check_cm1_condition3(spec: CirculantSpec) -> bool:
    """gcd(n, S̄) = 1, no b - a in S̄ for a < b, and no n - (a + b) in S̄ for a <= b.

    These are exactly the ways three circular distances from S̄ can close up
    into a triangle of the complement graph.
    """
    comp = complement_spec(spec).S
    if reduce(gcd, comp, spec.n) != 1:
        return False
    members = set(comp)
    for x, a in enumerate(comp):
        for b in comp[x:]:
            if b > a and b - a in members:
                return False
            if spec.n - (a + b) in members:
                return False
    return True


def cm1_conditions(spec: CirculantSpec, options: Options = Options()) -> tuple[bool, bool, bool]:
    """(CM of Krull dimension 2, Δ connected of dimension 1, arithmetic condition)."""
    inst = instance(spec, options)
    rep = inst.report
    c1 = rep.is_cohen_macaulay and rep.krull_dim == 2
    c2 = inst.complex.dim == 1 and len(one_skeleton_components(inst.complex)) == 1
    return c1, c2, check_cm1_condition3(spec)


def verify_cm1(spec: CirculantSpec, options: Options = Options()) -> VerificationResult:
    c = cm1_conditions(spec, options)
    witness = {"cm_dim2": c[0], "connected_dim1": c[1], "arithmetic": c[2]}
    return _result("thm4.1", spec, len(set(c)) == 1, witness)


def verify_cm1_equivalence(n_values: Iterable[int], s_filter=None,
                           options: Options = Options()) -> list[VerificationResult]:
    return [verify_cm1(spec, options) for spec in _specs(n_values, s_filter)]


def cm_type_formula(spec: CirculantSpec) -> int:
    n, s = spec.n, spec.s
    if n % 2 == 0 and n // 2 in spec.S:
        # n(s + 1/2) with n even
        return comb(n, 2) - n * s - n // 2 + 1
    return comb(n, 2) - n * (s + 1) + 1


def gorenstein_classification(spec: CirculantSpec) -> bool:
    comp = complement_spec(spec).S
    return spec.n >= 4 and len(comp) == 1 and gcd(spec.n, comp[0]) == 1


def _cm_dim2_hypothesis(claim, spec, options) -> VerificationResult | None:
    if not spec.S:
        # I(G) = 0: for n = 2 the ring is K[x0, x1], CM of dimension 2 with h_2 = 0
        return _inapplicable(claim, spec, "S is empty (edgeless graph)")
    rep = instance(spec, options).report
    if not (rep.is_cohen_macaulay and rep.krull_dim == 2):
        return _inapplicable(claim, spec, "not Cohen-Macaulay of Krull dimension 2")
    return None


def verify_reg_two(spec: CirculantSpec, options: Options = Options()) -> VerificationResult:
    skip = _cm_dim2_hypothesis("thm4.2", spec, options)
    if skip:
        return skip
    reg = instance(spec, options).report.regularity
    return _result("thm4.2", spec, reg == 2, {"reg": reg})


def verify_cm_type(spec: CirculantSpec, options: Options = Options()) -> VerificationResult:
    """Betti-table type against the closed form and h_2; also checks levelness."""
    skip = _cm_dim2_hypothesis("thm4.3", spec, options)
    if skip:
        return skip
    inst = instance(spec, options)
    rep = inst.report
    formula = cm_type_formula(spec)
    h2 = h_vector(inst.f)[2]
    witness = {"cm_type": rep.cm_type, "formula": formula, "h2": h2, "level": rep.is_level}
    return _result("thm4.3", spec, rep.cm_type == formula == h2 and rep.is_level, witness)


def verify_gorenstein(spec: CirculantSpec, options: Options = Options()) -> VerificationResult:
    if not spec.S:
        return _inapplicable("cor4.6", spec, "S is empty (edgeless graph)")
    rep = instance(spec, options).report
    betti_says = rep.is_gorenstein and rep.krull_dim == 2
    predicted = gorenstein_classification(spec)
    return _result("cor4.6", spec, betti_says == predicted,
                   {"classification": predicted, "gorenstein_dim2": betti_says})


# -- prime order -----------------------------------------------------------

def verify_prime_f_divisibility(spec: CirculantSpec, options: Options = Options()) -> VerificationResult:
    skip = _prime_hypothesis("lem2.2", spec)
    if skip:
        return skip
    inst = instance(spec, options)
    n = spec.n
    bad = []
    for i in range(inst.complex.dim + 1):
        faces = inst.complex.faces(i)
        f_i = len(faces)
        through_zero = sum(1 for m in faces if m & 1)
        if f_i % n or (i + 1) * f_i != n * through_zero:
            bad.append({"i": i, "f_i": f_i, "f_i0": through_zero})
    return _result("lem2.2", spec, not bad, {"failures": bad} if bad else None)


def verify_prime_ri(spec: CirculantSpec, options: Options = Options()) -> VerificationResult:
    skip = _prime_hypothesis("thm2.3", spec)
    if skip:
        return skip
    f = instance(spec, options).f
    hd = hilbert_data(f, spec.n)
    chi = reduced_euler_characteristic(f)
    alt = sum((-1) ** i * f[i] for i in range(1, len(f)))  # Σ_{i=1}^d (-1)^i f_{i-1}
    ok = hd.ri == 1 and chi != 0 and alt % spec.n == 0
    return _result("thm2.3", spec, ok, {"ri": hd.ri, "euler": chi})


def verify_skeleton_connectivity(spec: CirculantSpec, options: Options = Options()) -> VerificationResult:
    skip = _prime_hypothesis("lem3.2", spec)
    if skip:
        return skip
    cx = instance(spec, options).complex
    bad = [k for k in range(1, cx.dim + 1)
           if skeleton_connectivity(cx, k) is not Connectivity.CONNECTED]
    return _result("lem3.2", spec, not bad, {"disconnected_k": bad} if bad else None)


def verify_reg_equals_depth(spec: CirculantSpec, options: Options = Options()) -> VerificationResult:
    skip = _prime_hypothesis("cor2.5", spec)
    if skip:
        return skip
    rep = instance(spec, options).report
    if not rep.is_cohen_macaulay:
        return _inapplicable("cor2.5", spec, "not Cohen-Macaulay")
    return _result("cor2.5", spec, rep.regularity == rep.depth,
                   {"reg": rep.regularity, "depth": rep.depth})


def sequential_s2_subgraph(n: int, s: int) -> Graph:
    """The graph induced on ``{s+1, ..., n-s-1}`` by ``C_n({1..s})``."""
    g = build_circulant(CirculantSpec(n, tuple(range(1, s + 1))))
    return induced_subgraph(g, range(s + 1, n - s))


def verify_sequential_s2_certificate(n: int, s: int,
                                     options: Options = Options()) -> VerificationResult:
    """Skeleton connectivity plus a chordal link at vertex 0 with the natural PEO.

    This is a sufficient certificate, not a decision procedure for the
    sequentially S_2 property.
    """
    spec = CirculantSpec(n, tuple(range(1, s + 1)))
    if s < 1 or n < 2 * s + 2:
        return _inapplicable("thm3.6", spec, "need s >= 1 and n >= 2s + 2")
    cx = instance(spec, options).complex
    disconnected = [k for k in range(1, cx.dim + 1)
                    if skeleton_connectivity(cx, k) is not Connectivity.CONNECTED]
    sub = sequential_s2_subgraph(n, s)
    natural_peo = has_perfect_elimination_order(sub, sub.labels)
    chordal = is_chordal(sub)
    # the link of vertex 0 should be the independence complex of the subgraph
    local = independence_complex(sub, options.max_faces)
    link_ok = local.relabel(dict(enumerate(sub.labels)), n).face_set == link(cx, 0).face_set
    witness = {"skeletons_connected": not disconnected, "disconnected_k": disconnected,
               "natural_order_peo": natural_peo, "chordal": chordal, "link_matches": link_ok}
    return _result("thm3.6", spec, not disconnected and natural_peo and chordal and link_ok, witness)


def _consecutive_s(spec: CirculantSpec) -> int | None:
    if spec.S and spec.S == tuple(range(1, spec.s + 1)):
        return spec.s
    return None


def verify_thm36(spec: CirculantSpec, options: Options = Options()) -> VerificationResult:
    s = _consecutive_s(spec)
    if s is None:
        return _inapplicable("thm3.6", spec, "S is not {1, ..., s}")
    if not is_prime(spec.n):
        return _inapplicable("thm3.6", spec, f"n={spec.n} is not prime")
    return verify_sequential_s2_certificate(spec.n, s, options)


# -- Euler characteristic search ------------------------------------------

def euler_zero_search(n_values: Iterable[int], s_filter=None, include_empty: bool = False,
                      options: Options = Options()) -> list[CirculantSpec]:
    """Circulants whose independence complex has reduced Euler characteristic 0."""
    found = []
    for spec in _specs(n_values, s_filter):
        if not spec.S and not include_empty:
            continue
        if reduced_euler_characteristic(instance(spec, options).f) == 0:
            found.append(spec)
    return found


# -- sweeps --------------------------------------------------------------------

def _specs(n_values: Iterable[int], s_filter=None) -> list[CirculantSpec]:
    out = []
    for n in sorted(set(n_values)):
        for spec in all_specs(n):
            if s_filter is None or s_filter(spec):
                out.append(spec)
    return out


CLAIMS: dict[str, Callable[[CirculantSpec, Options], VerificationResult]] = {
    "thm2.3": verify_prime_ri,
    "lem2.2": verify_prime_f_divisibility,
    "lem3.2": verify_skeleton_connectivity,
    "cor2.5": verify_reg_equals_depth,
    "thm3.6": verify_thm36,
    "thm4.1": verify_cm1,
    "thm4.2": verify_reg_two,
    "thm4.3": verify_cm_type,
    "cor4.6": verify_gorenstein,
}
SEARCHES = ("conj-euler",)
CLAIM_IDS = tuple(CLAIMS) + SEARCHES


def _run_one(args):
    claim, spec, options = args
    return CLAIMS[claim](spec, options)


def verify_claim(claim: str, n_values: Iterable[int], s_filter=None,
                 options: Options = Options(), workers: int = 1) -> list[VerificationResult]:
    """Check ``claim`` on every connection set for every n, ordered by (n, S bitmask)."""
    if claim not in CLAIMS:
        raise KeyError(claim)
    specs = _specs(n_values, s_filter)
    if claim == "thm3.6":
        specs = [sp for sp in specs if _consecutive_s(sp) is not None]
    jobs = [(claim, sp, options) for sp in specs]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(workers) as pool:
            results = list(pool.map(_run_one, jobs, chunksize=max(1, len(jobs) // (4 * workers))))
    else:
        results = [_run_one(j) for j in jobs]
    return results

import pytest

from circulant_sr.circulant import CirculantSpec, all_specs, build_circulant, edge_count_formula
from circulant_sr.complex import SimplicialComplex, face_tuple, independence_complex
from circulant_sr.errors import BettiCapError, SpecError
from circulant_sr.homology import RATIONALS, FieldSpec
from circulant_sr.invariants import (
    BettiTable,
    algebraic_report,
    betti_table_hochster,
    dihedral_orbits,
    hilbert_data,
    poly_mul,
    regularity,
)

import oracles


def delta(n, *S):
    return independence_complex(build_circulant(CirculantSpec(n, S)))


def test_hilbert_data_pentagon():
    hd = hilbert_data((1, 5, 5), 5)
    assert hd.h_poly == (1, 3, 1)
    assert hd.d == 2 and hd.ri == 1
    assert hd.k_poly == (1, 0, -5, 5, 0, -1)


def test_hilbert_data_simplex_and_hexagon():
    simplex = hilbert_data((1, 4, 6, 4, 1), 4)
    assert simplex.h_poly == (1,) and simplex.ri == 0 and simplex.k_poly == (1,)
    hexagon = hilbert_data((1, 6, 9, 2), 6)
    assert hexagon.h_vector == (1, 3, 0, -2) and hexagon.ri == 1


def test_hilbert_function_values():
    # pentagon: H(k) = 5k for k >= 1, while the Hilbert polynomial vanishes at 0
    hd = hilbert_data((1, 5, 5), 5)
    assert hd.hilbert_function[:5] == (1, 5, 10, 15, 20)
    assert hd.hilbert_polynomial_values[:5] == (0, 5, 10, 15, 20)


def test_pentagon_betti_table_matches_brute_force():
    pent = delta(5, 2)
    faces = [frozenset(face_tuple(m)) for m in pent]
    oracle = oracles.hochster_betti(5, faces)
    assert oracle == {(0, 0): 1, (1, 2): 5, (2, 3): 5, (3, 5): 1}
    for sym in (False, True):
        bt = betti_table_hochster(pent, RATIONALS, use_symmetry=sym)
        assert bt.entries == oracle
        assert bt.totals() == (1, 5, 5, 1)
    assert bt.k_polynomial() == (1, 0, -5, 5, 0, -1)
    assert poly_mul((1, 3, 1), (1, -3, 3, -1)) == (1, 0, -5, 5, 0, -1)


def test_brute_force_oracle_agreement_small():
    for n in range(2, 8):
        for spec in all_specs(n):
            cx = delta(n, *spec.S)
            oracle = oracles.hochster_betti(n, [frozenset(face_tuple(m)) for m in cx])
            assert betti_table_hochster(cx).entries == oracle


def test_symmetry_equals_unreduced_sum_exhaustive():
    for n in range(2, 10):
        for spec in all_specs(n):
            cx = delta(n, *spec.S)
            assert betti_table_hochster(cx, use_symmetry=True).entries == \
                betti_table_hochster(cx, use_symmetry=False).entries


def test_dihedral_orbit_weights_cover_all_subsets():
    for n in range(1, 13):
        orbits = list(dihedral_orbits(n))
        assert sum(w for _, w in orbits) == 1 << n
        assert all(2 * n % w == 0 for _, w in orbits)


def test_full_simplex_betti():
    bt = betti_table_hochster(delta(4))
    assert bt.entries == {(0, 0): 1}
    assert regularity(bt) == 0


def test_c8_last_betti():
    bt = betti_table_hochster(delta(8, 2, 3), use_symmetry=True)
    assert bt.totals()[-1] == 5
    assert regularity(bt) == 2


def test_first_betti_is_edge_count():
    for n in range(2, 11):
        for spec in all_specs(n):
            bt = betti_table_hochster(delta(n, *spec.S), use_symmetry=True)
            assert bt[(1, 2)] == edge_count_formula(spec)
            assert bt[(0, 0)] == 1
            assert all(j > i for (i, j) in bt.entries if i >= 1)


def test_symmetry_rejected_on_asymmetric_complex():
    cx = SimplicialComplex.from_facets(4, [(0, 1), (2,), (3,)])
    with pytest.raises(SpecError):
        betti_table_hochster(cx, use_symmetry=True)
    assert betti_table_hochster(cx).entries  # unreduced path still fine


def test_betti_cap():
    with pytest.raises(BettiCapError):
        betti_table_hochster(delta(9, 1), max_n=8)


def test_reports():
    c8 = algebraic_report(delta(8, 2, 3))
    assert (c8.is_cohen_macaulay, c8.krull_dim, c8.depth, c8.cm_type, c8.is_level, c8.is_gorenstein) == \
        (True, 2, 2, 5, True, False)
    pent = algebraic_report(delta(5, 2))
    assert pent.is_gorenstein and pent.krull_dim == 2 and pent.cm_type == 1 and pent.regularity == 2
    hexagon = algebraic_report(delta(6, 1))
    assert not hexagon.is_cohen_macaulay and hexagon.cm_type is None
    assert hexagon.depth < hexagon.krull_dim


def test_report_invariants_exhaustive():
    for n in range(2, 11):
        for spec in all_specs(n):
            rep = algebraic_report(delta(n, *spec.S))
            assert rep.depth == n - rep.projective_dimension
            assert rep.is_cohen_macaulay == (rep.depth == rep.krull_dim)
            assert rep.depth <= rep.krull_dim
            if rep.is_gorenstein:
                assert rep.is_cohen_macaulay and rep.cm_type == 1


def test_betti_over_f2_at_least_rational():
    for n in range(2, 10):
        for spec in all_specs(n):
            cx = delta(n, *spec.S)
            q = betti_table_hochster(cx, use_symmetry=True)
            p = betti_table_hochster(cx, FieldSpec(2), use_symmetry=True)
            assert all(p[k] >= v for k, v in q.entries.items())
            assert p.k_polynomial() == q.k_polynomial()


def test_betti_table_format():
    text = betti_table_hochster(delta(5, 1)).format()
    assert "total:" in text and text.splitlines()[1].split()[1:] == ["1", "5", "5", "1"]


def test_empty_betti_table_helpers():
    bt = BettiTable(RATIONALS, 3, {(0, 0): 1})
    assert bt.projective_dimension == 0 and bt.column(0) == {0: 1}

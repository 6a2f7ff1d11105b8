import itertools
from fractions import Fraction

import pytest

from skewgt import gln, gtmodules as gt
from skewgt.polys import vandermonde


def brute_force_patterns(top):
    """Independent oracle: filter every bounded integer triangle."""
    n = len(top)
    lo, hi = min(top), max(top)
    rows_choices = [list(itertools.product(range(lo, hi + 1), repeat=k))
                    for k in range(1, n)]
    found = []
    for combo in itertools.product(*rows_choices):
        rows = list(combo) + [tuple(top)]
        good = True
        for k in range(n - 1):
            lower, upper = rows[k], rows[k + 1]
            for i in range(len(lower)):
                if not (upper[i] >= lower[i] >= upper[i + 1]):
                    good = False
        if good:
            found.append(tuple(rows))
    return found


def weyl_dim_oracle(top):
    n = len(top)
    num, den = 1, 1
    for i in range(n):
        for j in range(i + 1, n):
            num *= top[i] - top[j] + j - i
            den *= j - i
    return num // den


def test_enumeration_examples():
    assert len(gt.enumerate_patterns((1, 0))) == 2
    assert len(gt.enumerate_patterns((0, 0, 0))) == 1
    assert len(gt.enumerate_patterns((2, 1, 0))) == 8


def test_enumeration_against_brute_force():
    for top in [(1, 0), (2, 0), (2, 1, 0), (1, 1, 0), (2, 2, 0)]:
        brute = brute_force_patterns(top)
        pats = gt.enumerate_patterns(top)
        assert len(pats) == len(brute)
        as_ints = {tuple(tuple(int(v) for v in row) for row in p) for p in pats}
        assert as_ints == set(brute)


def test_dimension_matches_weyl_formula():
    tops2 = [t for t in itertools.product(range(4), repeat=2) if t[0] >= t[1]]
    tops3 = [t for t in itertools.product(range(4), repeat=3)
             if t[0] >= t[1] >= t[2]]
    tops4 = [t for t in itertools.product(range(4), repeat=4)
             if all(t[i] >= t[i + 1] for i in range(3))]
    for top in tops2 + tops3 + tops4:
        dim = len(gt.enumerate_patterns(top))
        assert dim == gt.weyl_dim(top) == weyl_dim_oracle(top), top


def test_row_fillings():
    assert gt.count_row_fillings((2, 1, 0), 2) == 4
    assert gt.row_fillings((2, 1, 0), 2) == [(1, 0), (1, 1), (2, 0), (2, 1)]
    assert gt.count_row_fillings((0, 0), 2) == 1
    assert gt.count_row_fillings((1, 0), 1) == 2
    # oracle: distinct row-2 vectors among brute-force patterns
    brute = brute_force_patterns((2, 1, 0))
    assert {p[1] for p in brute} == set(gt.row_fillings((2, 1, 0), 2))


def test_non_dominant_rejected():
    with pytest.raises(ValueError):
        gt.enumerate_patterns((0, 1))
    with pytest.raises(ValueError):
        gt.build_module((1, 2, 0))


def test_highest_weight_eigenvalues():
    hi = gt.normalize_pattern([(1,), (1, 0)])
    assert gt.act_generator("X11", hi) == [(Fraction(1), hi)]
    assert gt.act_generator("X22", hi) == [(Fraction(0), hi)]


def test_ladder_round_trip_on_standard_module():
    hi = gt.normalize_pattern([(1,), (1, 0)])
    lo = gt.normalize_pattern([(0,), (1, 0)])
    assert gt.act_generator("X1-", hi) == [(Fraction(1), lo)]
    assert gt.act_generator("X1+", lo) == [(Fraction(1), hi)]
    assert gt.act_generator("X1+", hi) == []


def test_trivial_module_acts_by_zero():
    m = gt.build_module((0, 0))
    assert m.dim == 1
    assert gt.mat_is_zero(m.matrices["X1+"])
    assert gt.mat_is_zero(m.matrices["X1-"])
    assert m.spectrum("X11") == [Fraction(0)]


def test_vandermonde_action():
    signs = gt.SignData.all_plus((1, 0))
    hi = gt.normalize_pattern([(1,), (1, 0)])
    assert gt.act_vandermonde(2, hi, signs) == 2
    flipped = gt.SignData.from_vectors((1, 0), {2: [-1]})
    assert gt.act_vandermonde(2, hi, flipped) == -2
    same = gt.normalize_pattern([(3,), (3, 3)])
    s33 = gt.SignData.all_plus((3, 3))
    assert gt.act_vandermonde(2, same, s33) == 1


def test_vandermonde_squares_match_evaluation():
    for top in [(1, 0), (2, 1, 0), (2, 2, 0)]:
        signs = gt.SignData.all_plus(top)
        ctx = gln.triangle(len(top))
        for k in range(2, len(top) + 1):
            vk = vandermonde(ctx, k)
            for p in gt.enumerate_patterns(top):
                ev = gt.act_vandermonde(k, p, signs)
                assert ev ** 2 == vk.evaluate(gt.pattern_point(p)) ** 2


def test_standard_module_matches_defining_representation():
    m = gt.build_module((1, 0))
    assert m.dim == 2
    e = m.matrices["X1+"]
    f = m.matrices["X1-"]
    h1 = m.matrices["X11"]
    # traces and eigenvalues of the defining 2-dimensional representation
    assert sorted(m.spectrum("X11")) == [0, 1]
    assert sorted(m.spectrum("X22")) == [0, 1]
    assert gt.mat_is_zero(gt.mat_mul(e, e))
    assert gt.mat_is_zero(gt.mat_mul(f, f))
    ef = gt.mat_comm(e, f)
    assert ef == gt.mat_sub(h1, m.matrices["X22"])


def test_module_relation_reports_across_tops():
    for top in [(0, 0), (2, 1), (1, 1, 0), (2, 1, 0), (2, 2, 0)]:
        rep = gt.module_relation_report(gt.build_module(top))
        assert rep.ok, (top, [r.key for r in rep.failures])


def test_module_report_mixed_signs():
    signs = gt.SignData.from_vectors((2, 1, 0), {2: [1, -1, -1, 1]})
    rep = gt.module_relation_report(gt.build_module((2, 1, 0), signs))
    assert rep.ok


def test_restriction_spectrum():
    top = (2, 1, 0)
    m = gt.build_module(top)
    expected = {Fraction(b1 - b2 + 1) for (b1, b2) in gt.row_fillings(top, 2)}
    assert set(m.spectrum("V2")) == expected


def test_sign_data_validation():
    with pytest.raises(ValueError):
        gt.SignData.from_vectors((1, 0), {2: [1, 1]})
    with pytest.raises(ValueError):
        gt.SignData.from_vectors((1, 0), {2: [2]})


def test_generic_module_gl2():
    m = gt.build_generic_module([(Fraction(1, 3),), (1, 0)], radius=2)
    assert m.dim == 5 and len(m.interior) == 3
    rep = gt.generic_module_report(m)
    assert rep.ok
    # diagonal spectra move with the window
    assert len(set(m.spectrum("X11"))) == 5


def test_generic_module_gl3_v2_moves():
    point = [(Fraction(1, 2),), (Fraction(1, 3), Fraction(-1, 7)), (2, 1, 0)]
    m = gt.build_generic_module(point, radius=1)
    assert gt.generic_module_report(m).ok
    assert len(set(m.spectrum("V2"))) > 1


def test_generic_module_radius_zero():
    m = gt.build_generic_module([(Fraction(1, 3),), (1, 0)], radius=0)
    assert m.dim == 1 and m.interior == []
    assert gt.mat_is_zero(m.matrices["X1+"])
    assert gt.mat_is_zero(m.matrices["X1-"])
    assert not gt.mat_is_zero(m.matrices["X11"])


def test_generic_module_rejects_nonregular():
    with pytest.raises(ValueError):
        gt.build_generic_module(
            [(Fraction(1, 2),), (Fraction(1, 3), Fraction(1, 3)), (2, 1, 0)],
            radius=1)
    assert not gt.is_regular_point([(0,), (1, 0), (2, 1, 0)], 3)
    assert gt.is_regular_point([(Fraction(1, 3),), (1, 0)], 2)


def test_nonsemisimple_example():
    m = gt.example_nonsemisimple(1)
    rep = gt.nonsemisimple_report(m)
    assert rep.ok
    v2 = m.matrices["V2"]
    assert v2[0][0] + v2[1][1] == 0          # trace
    assert v2[0][0] * v2[1][1] - v2[0][1] * v2[1][0] == -1   # determinant
    with pytest.raises(ValueError):
        gt.example_nonsemisimple(0)


def test_module_json():
    m = gt.build_module((1, 0))
    body = m.to_json()
    assert body["dim"] == 2
    assert body["matrices"]["V2"] == [["2", "0"], ["0", "2"]]

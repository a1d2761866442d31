import itertools

import numpy as np
import pytest

from chm import (
    CensusResult,
    H2Structure,
    NotCHMError,
    NotUnimodularError,
    SubmatrixLoc,
    apply_witness,
    census_2x2,
    family_h,
    FamilyPoint,
    find_3x3_sub_chms,
    forbidden_count_check,
    h2_block_structure,
    is_sub_chm_2x2,
    named,
)
from util import NATURAL_PAIRING, random_witness, rng


@pytest.mark.parametrize(
    "quad, ok, residual",
    [
        ((1, 1, 1, -1), True, 0.0),
        ((1j, 1, 1, 1j), True, 0.0),  # top-left block of M1
        ((1, 1, 1, 1), False, 2.0),
    ],
)
def test_is_sub_chm_2x2(quad, ok, residual):
    result = is_sub_chm_2x2(*quad)
    assert result.ok is ok
    assert result.residual == pytest.approx(residual, abs=1e-15)


def test_is_sub_chm_2x2_rejects_non_unimodular():
    with pytest.raises(NotUnimodularError):
        is_sub_chm_2x2(2.0, 1, 1, 1)


def test_2x2_predicates_agree_on_random_quadruples():
    # |ad + bc| and the row-orthogonality form |a conj(c) + b conj(d)| are
    # the same number on unimodular inputs.
    gen = rng(31)
    a, b, c, d = np.exp(2j * np.pi * gen.uniform(size=(4, 100_000)))
    primary = np.abs(a * d + b * c)
    alt = np.abs(a * np.conj(c) + b * np.conj(d))
    assert np.abs(primary - alt).max() <= 1e-12


@pytest.mark.parametrize(
    "name, count",
    [("F6", 45), ("S6", 0), ("M1", 75), ("M2_w1", 45), ("M2_w2", 45), ("D0", 75)],
)
def test_census_counts(name, count):
    result = census_2x2(named(name).matrix)
    assert result.count == count
    assert len(result.locations) == count


def test_census_family_point_is_seventeen():
    result = census_2x2(family_h(FamilyPoint(1.0, 0.5)))
    assert result.count == 17
    locs = list(result.locations)
    assert locs == sorted(locs, key=lambda l: (l.rows, l.cols))
    assert locs[0] == SubmatrixLoc(rows=(1, 2), cols=(1, 2))


def test_census_f6_analytic_cross_check():
    # independent oracle: the submatrix on exponent rows {j,k}, cols {m,n}
    # cancels exactly when (j-k)(m-n) = 3 mod 6
    count = sum(
        1
        for (j, k) in itertools.combinations(range(6), 2)
        for (m, n) in itertools.combinations(range(6), 2)
        if ((j - k) * (m - n)) % 6 == 3
    )
    assert count == 45
    assert census_2x2(named("F6").matrix).count == count


def test_census_s6_residuals_bounded_away_from_zero():
    # entries are cube roots of unity; a*d and b*c are again cube roots, and
    # two cube roots never sum below modulus 1, so no tolerance can miscount
    S6 = named("S6").matrix
    worst = 2.0
    for rows in itertools.combinations(range(6), 2):
        for cols in itertools.combinations(range(6), 2):
            a, b = S6[rows[0], cols[0]], S6[rows[0], cols[1]]
            c, d = S6[rows[1], cols[0]], S6[rows[1], cols[1]]
            worst = min(worst, abs(a * d + b * c))
    assert worst > 0.99


def test_census_invariant_under_witnesses():
    gen = rng(41)
    M = family_h(FamilyPoint(1.0, 0.5))
    for _ in range(100):
        assert census_2x2(apply_witness(M, random_witness(gen))).count == 17


def test_census_requires_chm():
    with pytest.raises(NotCHMError):
        census_2x2(np.ones((6, 6)))


def test_census_result_validation():
    with pytest.raises(ValueError):
        CensusResult(count=1, locations=())
    with pytest.raises(ValueError):
        SubmatrixLoc(rows=(2, 1), cols=(1, 2))
    with pytest.raises(ValueError):
        SubmatrixLoc(rows=(1, 7), cols=(1, 2))


@pytest.mark.parametrize("name", ["M2_w1", "M2_w2"])
def test_m2_contains_3x3_sub_chm(name):
    M = named(name).matrix
    locs = find_3x3_sub_chms(M)
    assert SubmatrixLoc(rows=(1, 3, 5), cols=(1, 3, 5)) in locs
    assert len(locs) == 28
    S = M[np.ix_([0, 2, 4], [0, 2, 4])]
    G = S @ S.conj().T
    assert max(abs(G[0, 1]), abs(G[0, 2]), abs(G[1, 2])) < 1e-12


@pytest.mark.parametrize("name, count", [("D0", 0), ("M1", 0), ("F6", 28), ("S6", 40)])
def test_3x3_census_golden_counts(name, count):
    assert len(find_3x3_sub_chms(named(name).matrix)) == count


def test_3x3_none_in_all_ones():
    assert find_3x3_sub_chms(np.ones((6, 6))) == []


def test_3x3_locations_closed_under_conjugate_transpose():
    for name in ("M2_w1", "M2_w2", "F6", "S6"):
        M = named(name).matrix
        locs = {(l.rows, l.cols) for l in find_3x3_sub_chms(M)}
        locs_ct = {(l.rows, l.cols) for l in find_3x3_sub_chms(M.conj().T.copy())}
        assert locs_ct == {(c, r) for (r, c) in locs}


def test_3x3_locations_match_between_m2_variants():
    a = find_3x3_sub_chms(named("M2_w1").matrix)
    b = find_3x3_sub_chms(named("M2_w2").matrix)
    assert a == b


def test_family_block_structure_is_natural():
    for x1, x2 in [(1.0, 0.5), (0.0, 0.0), (-1.2, 0.3), (np.pi / 2, np.pi / 2)]:
        structure = h2_block_structure(family_h(FamilyPoint(x1, x2)))
        assert structure == H2Structure(NATURAL_PAIRING, NATURAL_PAIRING)


def test_f6_block_structure():
    # all nine blocks satisfy the exponent rule (j-k)(m-n) = 3 mod 6;
    # the lexicographic scan pairs rows adjacently and columns at distance 3
    structure = h2_block_structure(named("F6").matrix)
    assert structure.row_pairing == ((1, 2), (3, 4), (5, 6))
    assert structure.col_pairing == ((1, 4), (2, 5), (3, 6))


def test_registry_block_structures():
    assert h2_block_structure(named("S6").matrix) is None
    m1 = h2_block_structure(named("M1").matrix)
    assert m1.row_pairing == ((1, 2), (3, 5), (4, 6))
    assert m1.col_pairing == ((1, 2), (3, 5), (4, 6))
    d0 = h2_block_structure(named("D0").matrix)
    assert d0 == H2Structure(NATURAL_PAIRING, NATURAL_PAIRING)


def test_block_structure_implies_census_at_least_nine():
    for name in ("M1", "M2_w1", "D0", "F6"):
        M = named(name).matrix
        if h2_block_structure(M) is not None:
            assert census_2x2(M).count >= 9


@pytest.mark.parametrize("n", range(26))
def test_forbidden_count_check(n):
    assert forbidden_count_check(n) == (n not in {10, 11, 12, 13, 14, 15, 16, 18})


def test_forbidden_count_check_rejects_negative():
    with pytest.raises(ValueError):
        forbidden_count_check(-1)

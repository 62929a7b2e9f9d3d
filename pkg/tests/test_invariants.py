from collections import Counter

import pytest

from vcinv.gf import field_make
from vcinv.groups import group_id, is_invariant
from vcinv.invariants import (
    BASIS_IDS,
    IdentityResult,
    basis_cardinality,
    basis_catalog,
    basis_degrees,
    catalog,
    declared_degree,
    dickson_invariants,
    h_invariant,
    run_identity_suite,
    verify_h_star_symmetry,
    verify_identity,
)
from vcinv.poly import Poly, parse_poly

F2 = field_make(2)
F3 = field_make(3)
F4 = field_make(2, 2)
F5 = field_make(5)

ALL_SPECS = [F2, F3, F4, F5]


def test_dickson_q2_closed_forms():
    d22, c21, d22s, c21s = dickson_invariants(F2)
    assert d22 == parse_poly(F2, "x1^2*x2 + x1*x2^2")
    assert c21 == parse_poly(F2, "x1^2 + x1*x2 + x2^2")
    # division oracle: c21 times d22 reproduces the higher determinant
    det2 = parse_poly(F2, "x1^4*x2 + x1*x2^4")
    assert c21 * d22 == det2
    assert det2.exact_div(d22) == c21


@pytest.mark.parametrize("spec", ALL_SPECS)
def test_star_images_match_y_side_determinants(spec):
    d22, c21, d22s, c21s = dickson_invariants(spec)
    assert d22.star() == d22s
    assert c21.star() == c21s
    cat = catalog(spec)
    assert cat.get("phi1").star() == cat.get("phi1s")
    assert cat.get("phi2").star() == cat.get("phi2s")
    assert cat.get("u0").star() == cat.get("u0")
    assert cat.get("u1").star() == cat.get("u1s")


def test_basic_invariant_closed_forms():
    cat3 = catalog(F3)
    assert cat3.get("u1") == parse_poly(F3, "x1^3*y1 + x2^3*y2")
    assert cat3.get("u1s") == parse_poly(F3, "x1*y1^3 + x2*y2^3")
    cat2 = catalog(F2)
    assert cat2.get("phi2") == parse_poly(F2, "x1*x2 + x2^2")


@pytest.mark.parametrize("spec", ALL_SPECS)
def test_h_family_division_and_aliases(spec):
    cat = catalog(spec)
    q = cat.q
    for s in range(q):
        h = h_invariant(spec, s)  # exact division must succeed
        assert h == cat.h(s)
        assert h.is_homogeneous() and h.degree() == q * q - q
        assert h.star() == cat.h(q - 1 - s)
    assert cat.h(0) == cat.get("c21s")
    assert cat.h(q - 1) == cat.get("c21")


def test_h_invariant_range_check():
    with pytest.raises(ValueError):
        h_invariant(F3, 3)


@pytest.mark.parametrize("spec", [F2, F3])
def test_identity_suite_small_fields(spec):
    for result in run_identity_suite(spec):
        assert result.passed, (result.tag, result.witness_text())
    for result in verify_h_star_symmetry(spec):
        assert result.passed, result.tag


@pytest.mark.parametrize("spec", [F2, F3])
def test_binomial_expansion_identity(spec):
    assert verify_identity(spec, "3.8").passed


def test_unknown_tag_rejected():
    with pytest.raises(ValueError):
        verify_identity(F2, "9.9")


def test_identity_result_witness_truncation():
    diff = Poly.from_terms(F3, [((i, 0, 0, 0), 1) for i in range(15)])
    res = IdentityResult("fake", 3, False, witness=diff)
    text = res.witness_text(max_terms=10)
    assert "15 terms total" in text
    assert res.status == "FAIL"


@pytest.mark.parametrize("spec", ALL_SPECS)
def test_declared_degrees_and_homogeneity(spec):
    cat = catalog(spec)
    for name in cat.names:
        p = cat.get(name)
        assert p.is_homogeneous()
        assert p.degree() == declared_degree(name, cat.q)


@pytest.mark.parametrize("spec", [F2, F3])
def test_catalog_invariance_by_group(spec):
    cat = catalog(spec)
    p2 = group_id("p2", spec)
    gl2 = group_id("gl2", spec)
    sl2 = group_id("sl2", spec)
    sl2sq = group_id("sl2xsl2", spec)
    for name in ("phi1", "phi2", "phi1s", "phi2s", "u0"):
        assert is_invariant(cat.get(name), p2), name
    for name in ("u0", "u1", "u1s"):
        assert is_invariant(cat.get(name), gl2), name
    for name in ("d22", "c21", "d22s", "c21s"):
        assert is_invariant(cat.get(name), sl2sq), name
    for s in range(cat.q):
        assert is_invariant(cat.h(s), sl2), f"h_{s}"


def test_basis_s_q2_frozen():
    bc = basis_catalog(F2, "S")
    assert len(bc) == 6
    assert sorted(e.degree for e in bc.entries) == [0, 2, 3, 3, 4, 6]


@pytest.mark.parametrize(
    "q,which,expected",
    [
        (3, "S", 24),
        (2, "P", 18),
        (3, "P", 192),
        (3, "G", 96),
        (3, "D", 48),
        (2, "D", 6),
        (4, "S", 60),
        (5, "G", 1920),
    ],
)
def test_basis_cardinalities(q, which, expected):
    assert basis_cardinality(q, which) == expected
    assert len(basis_degrees(q, which)) == expected


@pytest.mark.parametrize("spec", [F2, F3])
@pytest.mark.parametrize("which", BASIS_IDS)
def test_basis_catalog_matches_combinatorial_degrees(spec, which):
    bc = basis_catalog(spec, which)
    assert Counter(e.degree for e in bc.entries) == Counter(basis_degrees(spec.q, which))
    for e in bc.entries:
        assert e.poly.is_homogeneous()
        assert e.poly.degree() == e.degree


def test_basis_entries_named_deterministically():
    bc = basis_catalog(F2, "S")
    assert [e.name for e in bc.entries] == ["1", "u1", "u1s", "u1s*u1", "u0", "u0^2"]


def test_unknown_basis_rejected():
    with pytest.raises(ValueError):
        basis_degrees(3, "X")

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import ring
from finring.inverses import (
    DRAZIN_VARIANTS,
    CleanDecomposition,
    InvariantViolation,
    PolarDecomposition,
    check_clean,
    classify,
    decomposition_to_inverse,
    drazin,
    drazin_solutions,
    group_inverse,
    polar_decomposition,
    polar_decompositions_bruteforce,
    satisfies_drazin,
    strongly_clean_decompositions,
)
from finring.ring import matrix_unit
from finring.structure import commutant_mask, inverse, structure, units
from finring.verifier import DEFAULT_REGISTRY


def _zmod_drazin_scan(n, a):
    """Drazin inverse in Z/n straight from the definition (commutative, so comm² = R)."""
    def nilpotent(x):
        return any(pow(x, k, n) == 0 for k in range(1, n + 1))
    sols = [b for b in range(n) if a * b * b % n == b and nilpotent((a * a * b - a) % n)]
    return sols


def test_group_inverse_examples(z4, z6):
    assert str(group_inverse(z6.parse("2")).inverse) == "2"
    for u, v in units(z6).items():
        assert group_inverse(z6.element(u)).inverse.index == v
    assert group_inverse(z4.parse("2")) is None


def test_group_inverse_has_index_at_most_one():
    for spec in DEFAULT_REGISTRY:
        r = ring(spec)
        for a in r.elements():
            g = group_inverse(a)
            if g is not None:
                assert g.index <= 1
                assert a * a * g.inverse == a


def test_drazin_examples(z4, z6):
    res = drazin(z4.parse("2"), "drazin")
    assert res.inverse == z4.zero_element and res.index == 2
    assert res.spectral_idempotent == z4.one_element
    e = z6.parse("3")
    res = drazin(e)
    assert res.inverse == e and res.index == 1 and res.spectral_idempotent == 1 - e
    assert _zmod_drazin_scan(6, 4) == [4]
    res = drazin(z6.parse("4"))
    assert str(res.inverse) == "4" and res.index == 1


@pytest.mark.parametrize("n", [1, 4, 6, 8, 9, 12])
def test_drazin_matches_plain_scan_in_zmod(n):
    r = ring(f"zmod:{n}")
    for a in range(n):
        sols = _zmod_drazin_scan(n, a)
        assert len(sols) == 1
        assert drazin(r.element(a)).inverse.index == sols[0]


def test_unit_has_index_zero(z6):
    assert drazin(z6.parse("5")).index == 0
    assert drazin(z6.one_element).index == 0


def test_drazin_in_matrix_ring(m2):
    e12 = matrix_unit(m2, 0, 1)
    res = drazin(e12)
    assert res.inverse == m2.zero_element and res.index == 2


def test_unknown_variant(z4):
    with pytest.raises(ValueError):
        drazin(z4.one_element, "moore-penrose")


@pytest.mark.parametrize("spec", DEFAULT_REGISTRY)
def test_drazin_result_invariants(spec):
    r = ring(spec)
    s = structure(r)
    rad = {"drazin": s.nil_mask, "pseudo": s.j_sharp_mask, "generalized": s.qnil_mask}
    for a in r.elements():
        for v in DRAZIN_VARIANTS:
            res = drazin(a, v)
            b, p = res.inverse, res.spectral_idempotent
            assert a * b * b == b
            assert commutant_mask(a, 2)[b.index]
            assert rad[v][(a * a * b - a).index]
            assert p * p == p and commutant_mask(a, 2)[p.index]
            assert s.unit_mask[(a + p).index]
            assert rad[v][(a * p).index]
            assert a ** res.index == a ** (res.index + 1) * b
            assert satisfies_drazin(a, b, v)


@pytest.mark.parametrize("spec", DEFAULT_REGISTRY)
def test_scan_uniqueness(spec):
    r = ring(spec)
    for a in r.elements():
        for v in DRAZIN_VARIANTS:
            assert len(drazin_solutions(a, v)) <= 1


@pytest.mark.parametrize("spec", DEFAULT_REGISTRY)
def test_relaxing_to_single_commutant_gives_same_inverse(spec):
    r = ring(spec)
    for a in r.elements():
        for v in DRAZIN_VARIANTS:
            assert drazin_solutions(a, v, commutant_order=1) == drazin_solutions(a, v)


@pytest.mark.parametrize("spec", DEFAULT_REGISTRY)
def test_group_inverse_in_double_commutant(spec):
    r = ring(spec)
    for a in r.elements():
        g = group_inverse(a)
        if g:
            assert commutant_mask(a, 2)[g.inverse.index]


def test_strongly_clean_examples(z4, z6):
    ds = strongly_clean_decompositions(z6.parse("2"))
    assert [(str(d.idempotent), str(d.unit)) for d in ds] == [("1", "1"), ("3", "5")]
    for u in units(z6):
        assert CleanDecomposition(z6.zero_element, z6.element(u)) in strongly_clean_decompositions(z6.element(u))
    ds = strongly_clean_decompositions(z4.parse("2"))
    assert [(str(d.idempotent), str(d.unit)) for d in ds] == [("1", "1")]


def test_check_clean_flags_bad_decomposition(z6):
    a = z6.parse("2")
    assert check_clean(a, CleanDecomposition(z6.parse("1"), z6.parse("1"))) == []
    assert "unit" in check_clean(a, CleanDecomposition(z6.parse("0"), z6.parse("2")))
    assert "idempotent" in check_clean(a, CleanDecomposition(z6.parse("2"), z6.parse("0")))


def test_polar_examples(z4, z6):
    d = polar_decomposition(z4.parse("2"), "pi_regular")
    assert d.regular_part == z4.zero_element and str(d.radical_part) == "2"
    for variant in ("pi_regular", "quasipolar", "pseudopolar"):
        d = polar_decomposition(z6.parse("5"), variant)
        assert str(d.regular_part) == "5" and d.radical_part == z6.zero_element
    d = polar_decomposition(z6.parse("3"), "pi_regular")
    assert str(d.regular_part) == "3" and d.radical_part == z6.zero_element


def test_decomposition_to_inverse_examples(z4, z6):
    a = z4.parse("2")
    res = decomposition_to_inverse(a, PolarDecomposition(z4.zero_element, a, "pi_regular"))
    assert res.inverse == z4.zero_element and res.variant == "drazin"
    u = z6.parse("5")
    res = decomposition_to_inverse(u, PolarDecomposition(u, z6.zero_element, "quasipolar"))
    assert res.inverse == inverse(u) and res.variant == "generalized"
    a = z6.parse("2")
    res = decomposition_to_inverse(a, PolarDecomposition(a, z6.zero_element, "pseudopolar"))
    assert str(res.inverse) == "2" and res.variant == "pseudo"


def test_decomposition_to_inverse_rejects_invalid(z6):
    a = z6.parse("2")
    with pytest.raises(InvariantViolation):
        decomposition_to_inverse(a, PolarDecomposition(z6.parse("1"), z6.parse("1"), "pi_regular"))


@pytest.mark.parametrize("spec", DEFAULT_REGISTRY)
def test_bruteforce_decompositions_are_unique_and_match(spec):
    r = ring(spec)
    for a in r.elements():
        for variant in ("pi_regular", "quasipolar", "pseudopolar"):
            found = polar_decompositions_bruteforce(a, variant)
            built = polar_decomposition(a, variant)
            assert found == ([built] if built else [])


def test_classify_examples(z4, m2):
    p = classify(z4.one_element)
    assert p.unit and p.group_invertible and p.strongly_clean
    assert p.drazin_invertible and p.pseudo_drazin_invertible and p.generalized_drazin_invertible
    p = classify(z4.parse("2"))
    assert p.nilpotent and p.in_jacobson and p.quasinilpotent and p.drazin_invertible
    assert p.strongly_clean and p.strongly_pi_regular and p.quasipolar and p.pseudopolar
    assert not p.unit and not p.group_invertible
    p = classify(matrix_unit(m2, 0, 1))
    assert p.nilpotent and not p.in_jacobson and p.drazin_invertible


@pytest.mark.parametrize("spec", DEFAULT_REGISTRY)
def test_definition_equivalences(spec):
    r = ring(spec)
    for a in r.elements():
        p = classify(a)
        assert p.strongly_pi_regular == (drazin(a, "drazin") is not None)
        assert p.quasipolar == (drazin(a, "generalized") is not None)
        assert p.pseudopolar == (drazin(a, "pseudo") is not None)
        assert p.strongly_pi_regular == (polar_decomposition(a, "pi_regular") is not None)
        assert p.quasipolar == (polar_decomposition(a, "quasipolar") is not None)
        assert p.pseudopolar == (polar_decomposition(a, "pseudopolar") is not None)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(DEFAULT_REGISTRY + ["tri:3:zmod:2", "mat:2:zmod:3"]), st.data())
def test_index_zero_iff_unit(spec, data):
    r = ring(spec)
    a = r.element(data.draw(st.integers(0, r.order - 1)))
    res = drazin(a)
    assert (res.index == 0) == (a.index in units(r))
    assert (res.index <= 1) == (group_inverse(a) is not None)

"""Smoke tests for the python bindings."""

from fractions import Fraction

import pytest

import fricke as fr


def test_spectrum_multiplicities():
    classes = fr.multiplicity_histogram(
        fr.FrickePoint(3, 3, 3), fr.length_from_trace(300.0), 1e-9)
    got = {round(fr.trace_from_length(c.length)): len(c.members)
           for c in classes}
    assert got == {3: 3, 6: 3, 15: 6, 39: 6, 87: 6, 102: 6, 267: 6}


def test_slopes():
    s, reduced = fr.parse_slope("2/4")
    assert (s.p, s.q) == (1, 2) and reduced
    assert fr.intersection_number(fr.Slope(1, 0), fr.Slope(0, 1)) == 1
    assert str(fr.dehn_twist(fr.Slope(0, 1), fr.Slope(1, 0), 2)) == "2/1"
    p = fr.trace_polynomial(fr.Slope(2, 1))
    assert p(3.0) == pytest.approx(
        fr.trace_of_slope(fr.FrickePoint(3, 3, 3), fr.Slope(2, 1)))


def test_markoff_python_ints():
    triples = fr.enumerate_triples(10**6)
    assert fr.verify_uniqueness(10**6) == []
    first = triples[0]
    assert (first.x, first.y, first.z) == (1, 1, 1)
    maxima = {t.x for t in triples}
    assert 514229 in maxima and 75025 in maxima


def test_flat_torus():
    assert fr.coprime_rep_count(32045) == 8
    built = fr.construct_high_multiplicity(3)
    assert built.N == 1105 and len(built.representations) == 4
    for a, b in built.representations:
        assert a * a + b * b == 1105
    g = fr.equal_locus_flat(fr.Slope(1, 0), fr.Slope(0, 1))
    assert g.kind == fr.GeodesicKind.circle
    assert g.center == 0.0 and g.radius == 1.0
    tau = fr.TauPoint(0.0, 1.0)
    assert fr.flat_length(tau, fr.Slope(1, 2)) == pytest.approx(5**0.5)


def test_four_holed_sphere():
    rep = fr.resultant_check(2, 1, 1, 1)
    assert rep.ok and rep.degree_c == 28 and rep.degree_d == 28
    assert rep.lead_c == Fraction(20736)
    rep2 = fr.resultant_check(Fraction(69, 10), Fraction(33, 5),
                              Fraction(39, 5), Fraction(5989, 100))
    assert rep2.ok
    assert sum(c * Fraction(3)**k for k, c in enumerate(rep2.in_c)) == 0
    assert sum(c * Fraction(2)**k for k, c in enumerate(rep2.in_d)) == 0

    m1, m2 = fr.counterexample_pair()
    for m in (m1, m2):
        f = fr.boundary_invariants(m.a, m.b, m.c, m.d)
        assert abs(f.f1 - 10) < 1e-9 and abs(f.f4 - 117) < 1e-9
        assert fr.check_consistency(m).worst < 1e-9
        assert fr.geometric(m)
    assert abs(m1.a - m2.a) > 0.9


def test_locus_and_validation():
    slice_ = fr.TeichSlice.from_boundary(0.0)
    pt = fr.locus_point_on_leaf(slice_, fr.Slope(1, 0), fr.Slope(0, 1),
                                3.0, 1e-12)
    assert pt.x == pytest.approx(pt.y, abs=1e-10)
    assert not fr.validate(fr.FrickePoint(1, 3, 3)).valid
    with pytest.raises(ValueError):
        fr.Slope(0, 0)

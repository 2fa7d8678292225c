import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from scipy.integrate import quad

from octoval.configuration import Configuration
from octoval.core.oval import EllipseSpec
from octoval.exceptions import InvalidRange, NonConvergence
from octoval.reference import ellipse
from octoval.reference.ellipse import (compare, eccentricity,
                                       elliptic_perimeter, kepler_perimeter)

COLOSSEUM = EllipseSpec(94, 78)
SMALL = EllipseSpec(2, 1)

specs = st.tuples(st.floats(0.1, 100), st.floats(1.0, 50)).map(
    lambda t: EllipseSpec(t[0] * t[1], t[0]))


def quadrature_perimeter(spec):
    eps2 = (spec.a - spec.b) * (spec.a + spec.b) / spec.a ** 2
    value, _ = quad(lambda t: math.sqrt(1 - eps2 * math.sin(t) ** 2), 0, math.pi / 2,
                    epsabs=0, epsrel=1e-12, limit=200)
    return 4 * spec.a * value


def test_eccentricity():
    data = eccentricity(COLOSSEUM)
    assert data.c == pytest.approx(math.sqrt(2752), rel=1e-12)
    assert data.epsilon == pytest.approx(0.55808, abs=1e-5)
    assert eccentricity(EllipseSpec(3, 3)).epsilon == 0
    assert eccentricity(SMALL).epsilon == pytest.approx(math.sqrt(3) / 2, rel=1e-12)


@given(specs)
def test_linear_eccentricity_completes_the_triangle(spec):
    data = eccentricity(spec)
    assert data.c ** 2 + spec.b ** 2 == pytest.approx(spec.a ** 2, rel=1e-12)
    assert 0 <= data.epsilon < 1


def test_elliptic_perimeter_values():
    assert elliptic_perimeter(COLOSSEUM) == pytest.approx(541.524, abs=5e-3)
    assert elliptic_perimeter(SMALL) == pytest.approx(9.688448, abs=1e-5)
    assert elliptic_perimeter(EllipseSpec(4, 4)) == pytest.approx(8 * math.pi, rel=1e-15)


def test_kepler_perimeter_values():
    assert kepler_perimeter(COLOSSEUM) == pytest.approx(540.353936, abs=1e-6)
    assert kepler_perimeter(SMALL) == pytest.approx(9.424778, abs=1e-6)


def test_agm_matches_quadrature():
    rng = np.random.default_rng(7)
    for _ in range(100):
        a = rng.uniform(1, 100)
        spec = EllipseSpec(a, rng.uniform(1, a))
        assert elliptic_perimeter(spec) == pytest.approx(quadrature_perimeter(spec), rel=1e-9), spec


@given(specs)
def test_kepler_bounds(spec):
    if spec.a == spec.b:
        return
    length = elliptic_perimeter(spec)
    assert math.pi * (spec.a + spec.b) <= length * (1 + 1e-12)
    assert length <= math.pi * math.sqrt(2 * (spec.a ** 2 + spec.b ** 2)) * (1 + 1e-12)


@given(specs, st.sampled_from([0.5, 2.0, 3.0, 10.0]))
def test_elliptic_perimeter_is_homogeneous(spec, s):
    assert elliptic_perimeter(spec.scaled(s)) == pytest.approx(s * elliptic_perimeter(spec), rel=1e-12)


def test_elliptic_perimeter_is_monotonic():
    for a in np.arange(2.0, 20.0, 0.5):
        assert elliptic_perimeter(EllipseSpec(a + 0.25, 1.5)) > elliptic_perimeter(EllipseSpec(a, 1.5))
        assert elliptic_perimeter(EllipseSpec(a, 1.75)) > elliptic_perimeter(EllipseSpec(a, 1.5))


@pytest.mark.parametrize('tol', [0, -1e-9, 1e-5, math.nan])
def test_tolerance_out_of_range(tol):
    with pytest.raises(InvalidRange):
        elliptic_perimeter(COLOSSEUM, tol)


def test_tolerance_from_configuration():
    Configuration.set_tolerance(1e-6)
    loose = elliptic_perimeter(COLOSSEUM)
    assert loose == pytest.approx(elliptic_perimeter(COLOSSEUM, 1e-12), rel=1e-9)
    Configuration.set_tolerance(1.0)
    with pytest.raises(InvalidRange):
        elliptic_perimeter(COLOSSEUM)


def test_iteration_cap(monkeypatch):
    monkeypatch.setattr(ellipse, 'AGM_MAX_ITERATIONS', 1)
    with pytest.raises(NonConvergence) as info:
        elliptic_perimeter(COLOSSEUM)
    assert info.value.iterations == 1
    assert 'did not converge' in str(info.value)


def test_compare_colosseum():
    report = compare(COLOSSEUM)
    assert 1e-6 <= report.rel_err_oval <= 3e-6
    # Kepler underestimates for a > b
    assert report.kepler < report.elliptic
    assert report.oval > 0 and report.elliptic > 0 and report.kepler > 0


def test_compare_small_and_circle():
    assert 2.5e-5 <= compare(SMALL).rel_err_oval <= 3.0e-5
    circle = compare(EllipseSpec(5, 5))
    assert circle.rel_err_oval == pytest.approx(0, abs=1e-12)
    assert circle.rel_err_kepler == pytest.approx(0, abs=1e-12)


def test_report_as_dict():
    data = compare(SMALL).as_dict()
    assert data['unit'] == 'fraction'
    assert data['a'] == 2 and data['b'] == 1
    assert set(data) >= {'oval', 'elliptic', 'kepler', 'rel_err_oval', 'rel_err_kepler', 'eccentricity'}

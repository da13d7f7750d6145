import json
from importlib import resources

import jsonschema
import pytest

from cauchymle import fit
from cauchymle.model import SampleError


@pytest.fixture(scope="module")
def schema():
    text = resources.files("cauchymle").joinpath("schema/fit_report.schema.json").read_text()
    return json.loads(text)


class TestPolicy:
    def test_auto_uses_closed_form_for_small_n(self, four_singular):
        rep = fit(four_singular)
        assert rep.method == "closed" and rep.path == ["closed"] and rep.converged
        assert round(rep.mu, 4) == -43.3525 and round(rep.sigma, 4) == 611.8279

    def test_auto_iterates_otherwise(self, seven):
        rep = fit(seven)
        assert rep.method == "iterate" and rep.converged
        assert abs(rep.theta - (-1.404384 + 3.909214j)) < 1e-6

    def test_fallback_to_poly(self, seven):
        rep = fit(seven, max_iter=2)
        assert rep.path == ["iterate", "poly"] and rep.method == "poly"
        assert rep.converged and rep.iterations == 2
        assert any("not converged" in w for w in rep.warnings)

    def test_iterate_only_reports_failure(self, seven):
        rep = fit(seven, method="iterate", max_iter=2)
        assert not rep.converged and rep.path == ["iterate"]

    def test_no_fallback_for_large_n(self):
        xs = list(range(13)) + [40]
        rep = fit(xs, max_iter=1)
        assert rep.path == ["iterate"] and not rep.converged

    def test_slow_sample_meets_residual_bound(self, four_singular):
        rep = fit(four_singular, method="iterate")
        assert rep.converged and rep.residuals["eq28"] <= 1e-12

    def test_newton(self, seven, six_wide):
        assert fit(seven, method="newton").converged
        rep = fit(six_wide, method="newton")
        assert not rep.converged and rep.mu is None
        assert any("newton" in w for w in rep.warnings)

    def test_duplicates_skip_closed_form(self):
        rep = fit([0, 0, 1, 2, 5])
        assert rep.path == ["iterate"] and rep.converged

    def test_half_sample_tie_has_no_estimate(self):
        rep = fit([0, 0, 1, 2], max_iter=10**4)
        assert not rep.converged and rep.path == ["iterate", "poly"]
        assert rep.sigma < 0.05

    def test_residual_invariant(self, seven, venus):
        for data in (seven, venus, [-1, 0, 1]):
            rep = fit(data)
            assert rep.converged and rep.residuals["eq28"] <= 1e-12

    def test_validation(self, seven):
        with pytest.raises(SampleError):
            fit(seven, method="closed")
        with pytest.raises(ValueError):
            fit(seven, method="bisect")
        with pytest.raises(ValueError):
            fit(seven, tol=0)
        with pytest.raises(ValueError):
            fit(seven, max_iter=0)


class TestSerialisation:
    @pytest.mark.parametrize("method", ["auto", "iterate", "poly", "newton"])
    def test_schema(self, schema, seven, method):
        d = fit(seven, method=method).to_dict()
        jsonschema.validate(d, schema)
        assert json.loads(json.dumps(d)) == d

    def test_schema_without_estimate(self, schema, six_wide):
        jsonschema.validate(fit(six_wide, method="newton").to_dict(), schema)

    def test_diagnostics_content(self, four_singular):
        d = fit(four_singular).to_dict()["diagnostics"]
        assert abs(d["relative_position"]["re"] - 0.9913855) < 1e-7
        assert d["half_circle_satisfied"] and len(d["cdf_residuals"]) == 2
        assert 0 < d["contraction"] < 1

    def test_reproducible(self, seven):
        assert fit(seven).to_dict() == fit(seven).to_dict()

"""Tests for validation of quasitoric data."""

import pytest

from qtoric.errors import InvalidQuasitoricDataError
from qtoric.models.quasitoric import QuasitoricData
from qtoric.services.quasitoric_service import preset_cpn
from qtoric.services.validation_service import ensure_valid, validate


def _with(d: QuasitoricData, **changes) -> QuasitoricData:
    return QuasitoricData(**{**d.model_dump(), **changes})


def _kinds(report) -> list[str]:
    return [issue.kind for issue in report.issues]


class TestValidate:
    """Test cases for validate and ensure_valid."""

    def test_cp2_is_valid(self, cp2):
        """Test CP^2 passes with determinants 1, -1, 1."""
        report = validate(cp2)
        assert report.valid
        assert report.determinants == [1, -1, 1]
        assert report.summary() == "valid; 3 facets; dets [1,-1,1]"

    def test_hirzebruch_determinants(self, hirzebruch):
        """Test every facet of a Hirzebruch surface is unimodular."""
        report = validate(hirzebruch)
        assert report.valid
        assert report.determinants == [1, 1, 1, -1]

    @pytest.mark.parametrize("n", range(1, 5))
    def test_presets_are_valid(self, n):
        """Test projective spaces pass validation."""
        assert validate(preset_cpn(n)).valid

    def test_degenerate_lambda(self, cp2):
        """Test a non-unimodular λ flags the facets containing its vertex."""
        report = validate(_with(cp2, lambdas=((-1, -1), (1, 0), (0, 2))))
        assert not report.valid
        assert report.determinants == [1, -2, 2]
        flagged = [issue.facet for issue in report.issues if issue.kind == "nondegeneracy"]
        assert flagged == [(0, 2), (1, 2)]

    def test_short_facet(self, cp2):
        """Test a facet with m - 1 vertices is a shape issue."""
        report = validate(_with(cp2, facets=((0, 1), (0, 2), (1,))))
        assert "shape" in _kinds(report)
        assert report.determinants == []

    def test_wrong_vector_length(self, cp2):
        """Test characteristic vectors must have length m."""
        report = validate(_with(cp2, lambdas=((-1, -1), (1, 0), (0,))))
        assert report.issues[0].vertex == 2
        assert _kinds(report) == ["shape"]

    def test_repeated_facet(self, cp2):
        """Test duplicate facets are reported."""
        report = validate(_with(cp2, facets=((0, 1), (0, 2), (1, 2), (1, 0))))
        assert any("listed 2 times" in issue.message for issue in report.issues)

    def test_base_facet_out_of_range(self, cp2):
        """Test the base facet must index a facet."""
        assert "shape" in _kinds(validate(_with(cp2, base_facet=3)))

    def test_not_a_pseudomanifold(self):
        """Test a ridge shared by three facets is reported."""
        d = QuasitoricData(
            name="fork",
            m=2,
            vertices=("a", "b", "c", "d"),
            facets=((0, 1), (1, 2), (0, 2), (0, 3)),
            lambdas=((1, 0), (0, 1), (1, 1), (1, -1)),
        )
        report = validate(d)
        ridges = {issue.facet for issue in report.issues if issue.kind == "pseudomanifold"}
        assert ridges == {(0,), (3,)}

    def test_uncovered_vertex(self, cp2):
        """Test a vertex in no facet is reported."""
        d = _with(cp2, vertices=("f0", "f1", "f2", "extra"), lambdas=((-1, -1), (1, 0), (0, 1), (1, 1)))
        report = validate(d)
        assert [issue.vertex for issue in report.issues if issue.kind == "coverage"] == [3]

    def test_euler_characteristic(self):
        """Test two disjoint 2-spheres fail the Euler characteristic test."""
        cp3 = preset_cpn(3)
        shifted = tuple(tuple(v + 4 for v in facet) for facet in cp3.facets)
        d = QuasitoricData(
            name="two spheres",
            m=3,
            vertices=tuple(f"v{i}" for i in range(8)),
            facets=cp3.facets + shifted,
            lambdas=cp3.lambdas + cp3.lambdas,
        )
        assert _kinds(validate(d)) == ["euler"]

    def test_ensure_valid_raises(self, cp2):
        """Test ensure_valid raises with the report attached."""
        bad = _with(cp2, lambdas=((-1, -1), (1, 0), (0, 2)))
        with pytest.raises(InvalidQuasitoricDataError) as exc_info:
            ensure_valid(bad)
        assert exc_info.value.report.name == "CP2"
        assert "determinant -2" in str(exc_info.value)

    def test_ensure_valid_returns_report(self, cp2):
        """Test ensure_valid returns the report on success."""
        assert ensure_valid(cp2).valid

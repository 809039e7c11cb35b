"""Tests for the quasitoric, report and input-file models."""

import json

import pytest
from pydantic import ValidationError

from qtoric.algebra.compositions import Composition
from qtoric.algebra.elements import NSymmElement
from qtoric.errors import InputParseError
from qtoric.models.input_file import InputFile, load_input, write_input
from qtoric.models.quasitoric import Monomial, QuasitoricData
from qtoric.models.reports import CharFunction, CheckReport, DegreeCheck, KernelLattice
from qtoric.services.quasitoric_service import preset_cpn

CP2_JSON = {
    "name": "CP2",
    "m": 2,
    "vertices": ["f0", "f1", "f2"],
    "facets": [[0, 1], [0, 2], [1, 2]],
    "lambda": [[-1, -1], [1, 0], [0, 1]],
}


class TestMonomial:
    """Test Monomial normalization and helpers."""

    def test_sorted_by_vertex(self):
        """Test exponent pairs are stored by ascending vertex."""
        monomial = Monomial(exponents=((2, 1), (0, 3)))
        assert monomial.exponents == ((0, 3), (2, 1))
        assert monomial.degree == 4
        assert monomial.support == (0, 2)
        assert str(monomial) == "x0^3*x2"

    def test_unit(self):
        """Test the unit monomial."""
        assert Monomial().degree == 0
        assert str(Monomial()) == "1"

    @pytest.mark.parametrize("exponents", [((0, 1), (0, 2)), ((0, 0),), ((-1, 1),)])
    def test_rejects_invalid(self, exponents):
        """Test repeated vertices and non-positive exponents are rejected."""
        with pytest.raises(ValidationError):
            Monomial(exponents=exponents)

    def test_times_variable(self):
        """Test multiplication by a single variable."""
        monomial = Monomial.square_free((0, 2))
        assert monomial.times_variable(2) == Monomial.from_mapping({0: 1, 2: 2})
        assert monomial.times_variable(1) == Monomial.square_free((0, 1, 2))

    def test_hashable(self):
        """Test equal monomials hash alike."""
        assert len({Monomial.from_mapping({1: 1, 0: 2}), Monomial(exponents=((0, 2), (1, 1)))}) == 1


class TestQuasitoricData:
    """Test QuasitoricData derived properties."""

    def test_faces(self):
        """Test faces include the empty face and every subset of a facet."""
        d = preset_cpn(2)
        assert () in d.faces
        assert (0, 1) in d.faces
        assert d.is_face([1, 0])
        assert not d.is_face([0, 1, 2])

    def test_facets_sorted(self):
        """Test facets are stored with ascending vertices, in list order."""
        d = QuasitoricData(
            name="x", m=2, vertices=("a", "b", "c"), facets=((1, 0), (2, 0), (2, 1)), lambdas=((1, 0), (0, 1), (1, 1))
        )
        assert d.facets == ((0, 1), (0, 2), (1, 2))

    def test_base_facet_default(self):
        """Test the default base facet is the lexicographically least facet."""
        d = QuasitoricData(
            name="x", m=1, vertices=("a", "b"), facets=((1,), (0,)), lambdas=((1,), (-1,))
        )
        assert d.base_facet_index == 1

    def test_matrices(self):
        """Test facet and characteristic matrices use λ-vectors as columns."""
        d = preset_cpn(2)
        assert d.facet_matrix((0, 1)) == [[-1, 1], [-1, 0]]
        assert d.lambda_matrix == [[-1, 1, 0], [-1, 0, 1]]

    def test_lambda_alias(self):
        """Test the characteristic map is accepted under its external name."""
        d = QuasitoricData.model_validate(CP2_JSON)
        assert d.lambdas == ((-1, -1), (1, 0), (0, 1))

    def test_digest(self):
        """Test the digest is stable and sensitive to the data."""
        assert preset_cpn(2).digest == preset_cpn(2).digest
        assert preset_cpn(2).digest != preset_cpn(3).digest
        renamed = preset_cpn(2).model_copy(update={"name": "other"})
        assert renamed.digest != preset_cpn(2).digest


class TestReports:
    """Test report helpers."""

    def test_check_report_summary(self):
        """Test pass and failure summaries."""
        passing = CheckReport(check="antipode", max_degree=2, degrees=[DegreeCheck(degree=1, passed=True)])
        assert passing.summary() == "antipode: pass through degree 2"
        failing = CheckReport(
            check="coassoc",
            max_degree=3,
            degrees=[
                DegreeCheck(degree=1, passed=True),
                DegreeCheck(degree=2, passed=False, detail="boom"),
                DegreeCheck(degree=3, passed=False, detail="later"),
            ],
        )
        assert failing.summary() == "coassoc: FAIL at degree 2: boom"

    def test_char_function(self):
        """Test ordered items and the NSymm element."""
        chars = CharFunction(name="CP2", degree=2, values={"1,1": 3, "2": 3})
        assert chars.items() == [(Composition.of(2), 3), (Composition.of(1, 1), 3)]
        assert chars.value(Composition.of(1, 1)) == 3
        assert chars.as_nsymm() == NSymmElement.word((2,), 3) + NSymmElement.word((1, 1), 3)

    def test_kernel_summary(self):
        """Test kernel lattice summaries."""
        assert KernelLattice(basis=[[1, 1, 1]], rank=1).summary() == "rank 1; basis: (1,1,1)"
        assert KernelLattice(basis=[], rank=0).summary() == "rank 0"


class TestInputFile:
    """Test the input file schema and loader."""

    def test_round_trip_file(self, tmp_path):
        """Test writing and loading an input file."""
        path = tmp_path / "cp2.json"
        write_input(preset_cpn(2), path)
        assert load_input(path) == preset_cpn(2)
        assert json.loads(path.read_text())["lambda"] == [[-1, -1], [1, 0], [0, 1]]

    def test_to_json_omits_missing_base_facet(self):
        """Test an unset base facet is not written."""
        text = InputFile.from_quasitoric(preset_cpn(2)).to_json()
        assert "base_facet" not in text
        assert text.endswith("\n")

    @pytest.mark.parametrize(
        "change",
        [
            {"m": 2.0},
            {"lambda": [[-1, -1], [1, 0.5], [0, 1]]},
            {"lambda": [[-1, -1], [1], [0, 1]]},
            {"lambda": [[-1, -1], [1, 0]]},
            {"facets": [[0, 1], [0, 3]]},
            {"base_facet": 5},
            {"colour": "red"},
            {"name": ""},
            {"m": 0},
        ],
    )
    def test_schema_rejections(self, change):
        """Test malformed input is rejected by the schema."""
        with pytest.raises(ValidationError):
            InputFile.model_validate_json(json.dumps({**CP2_JSON, **change}))

    def test_load_reports_location(self, tmp_path):
        """Test schema errors name the offending field."""
        path = tmp_path / "bad.json"
        path.write_text(json.dumps({**CP2_JSON, "m": "two"}))
        with pytest.raises(InputParseError, match=": m: "):
            load_input(path)

    def test_load_missing_file(self, tmp_path):
        """Test unreadable files raise InputParseError."""
        with pytest.raises(InputParseError, match="Cannot read"):
            load_input(tmp_path / "missing.json")

    def test_load_invalid_json(self, tmp_path):
        """Test text that is not JSON raises InputParseError."""
        path = tmp_path / "bad.json"
        path.write_text("{not json")
        with pytest.raises(InputParseError):
            load_input(path)

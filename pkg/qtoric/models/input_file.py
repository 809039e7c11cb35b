"""JSON input file format for quasitoric data."""

from pathlib import Path

from pydantic import BaseModel, ConfigDict, Field, StrictInt, ValidationError, model_validator

from qtoric.errors import InputParseError
from qtoric.models.quasitoric import QuasitoricData


class InputFile(BaseModel):
    """Schema of an input file; integers are strict, floats are rejected."""

    model_config = ConfigDict(extra="forbid", populate_by_name=True)

    name: str = Field(..., min_length=1, description="Human-readable name")
    m: StrictInt = Field(..., ge=1, description="Half-dimension")
    vertices: list[str] = Field(..., min_length=1, description="Ordered vertex labels")
    facets: list[list[StrictInt]] = Field(..., min_length=1, description="0-based vertex indices")
    lambda_: list[list[StrictInt]] = Field(..., alias="lambda", description="One vector per vertex")
    base_facet: StrictInt | None = Field(None, description="Index into facets")

    @model_validator(mode="after")
    def validate_indices(self) -> "InputFile":
        """Reject ragged characteristic rows and out-of-range indices."""
        if len(self.lambda_) != len(self.vertices):
            msg = f"{len(self.lambda_)} lambda rows for {len(self.vertices)} vertices"
            raise ValueError(msg)
        for i, row in enumerate(self.lambda_):
            if len(row) != self.m:
                msg = f"lambda row {i} has length {len(row)}, expected {self.m}"
                raise ValueError(msg)
        for facet in self.facets:
            for vertex in facet:
                if not 0 <= vertex < len(self.vertices):
                    msg = f"facet {facet} uses vertex index {vertex} outside 0..{len(self.vertices) - 1}"
                    raise ValueError(msg)
        if self.base_facet is not None and not 0 <= self.base_facet < len(self.facets):
            msg = f"base_facet {self.base_facet} is outside 0..{len(self.facets) - 1}"
            raise ValueError(msg)
        return self

    def to_quasitoric(self) -> QuasitoricData:
        """Convert to the computational model."""
        return QuasitoricData(
            name=self.name,
            m=self.m,
            vertices=tuple(self.vertices),
            facets=tuple(tuple(facet) for facet in self.facets),
            lambdas=tuple(tuple(row) for row in self.lambda_),
            base_facet=self.base_facet,
        )

    @classmethod
    def from_quasitoric(cls, d: QuasitoricData) -> "InputFile":
        """Convert from the computational model."""
        return cls(
            name=d.name,
            m=d.m,
            vertices=list(d.vertices),
            facets=[list(facet) for facet in d.facets],
            lambda_=[list(row) for row in d.lambdas],
            base_facet=d.base_facet,
        )

    def to_json(self) -> str:
        """Deterministic JSON text with the ``lambda`` key."""
        return self.model_dump_json(by_alias=True, exclude_none=True, indent=2) + "\n"


def load_input(path: Path) -> QuasitoricData:
    """Read and parse an input file.

    Raises:
        InputParseError: If the file is unreadable, not JSON or violates the schema
    """
    try:
        text = Path(path).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as e:
        raise InputParseError(f"Cannot read '{path}': {e}")
    try:
        return InputFile.model_validate_json(text).to_quasitoric()
    except ValidationError as e:
        first = e.errors()[0]
        location = ".".join(str(part) for part in first["loc"]) or "<root>"
        raise InputParseError(f"Invalid input file '{path}': {location}: {first['msg']}")


def write_input(d: QuasitoricData, path: Path):
    """Write quasitoric data as an input file."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(InputFile.from_quasitoric(d).to_json(), encoding="utf-8")

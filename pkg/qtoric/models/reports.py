"""Result and report models returned by the services."""

from functools import cached_property

from pydantic import BaseModel, ConfigDict, Field

from qtoric.algebra.compositions import Composition, compositions_of
from qtoric.algebra.elements import NSymmElement
from qtoric.models.quasitoric import Monomial


class ValidationIssue(BaseModel):
    """A single violated invariant of quasitoric data."""

    kind: str = Field(..., description="Invariant family, e.g. 'shape' or 'nondegeneracy'")
    message: str = Field(..., description="Human-readable description")
    facet: tuple[int, ...] | None = Field(None, description="Offending facet, if any")
    vertex: int | None = Field(None, description="Offending vertex, if any")


class ValidationReport(BaseModel):
    """Outcome of validating quasitoric data."""

    name: str
    m: int
    vertex_count: int
    facet_count: int
    determinants: list[int] = Field(default_factory=list, description="Facet determinants, in facet order")
    issues: list[ValidationIssue] = Field(default_factory=list)

    @property
    def valid(self) -> bool:
        """True when no invariant is violated."""
        return not self.issues

    def summary(self) -> str:
        """One-line report such as ``valid; 3 facets; dets [1,-1,1]``."""
        dets = ",".join(str(d) for d in self.determinants)
        status = "valid" if self.valid else f"invalid ({len(self.issues)} issues)"
        return f"{status}; {self.facet_count} facets; dets [{dets}]"


class DegreeCheck(BaseModel):
    """Result of one check at one degree."""

    degree: int
    passed: bool
    detail: str | None = Field(None, description="First discrepancy at this degree")


class CheckReport(BaseModel):
    """Per-degree outcome of a structural check."""

    check: str
    max_degree: int
    degrees: list[DegreeCheck] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        """True when every degree passed."""
        return all(entry.passed for entry in self.degrees)

    @property
    def first_failure(self) -> DegreeCheck | None:
        """The lowest failing degree, if any."""
        return next((entry for entry in self.degrees if not entry.passed), None)

    def summary(self) -> str:
        """One-line report naming the first discrepancy, if any."""
        failure = self.first_failure
        if failure is None:
            return f"{self.check}: pass through degree {self.max_degree}"
        return f"{self.check}: FAIL at degree {failure.degree}: {failure.detail}"


class GradedPiece(BaseModel):
    """One graded piece of the integral face-ring quotient.

    ``relations`` holds the sparse relation rows as ``{basis index: coefficient}``.
    ``evaluation`` is present in the top degree only and lists the value of
    each basis monomial as a multiple of the fundamental class.
    """

    model_config = ConfigDict(frozen=True)

    data_digest: str
    degree: int
    basis: tuple[Monomial, ...]
    relations: tuple[dict[int, int], ...]
    invariant_factors: tuple[int, ...]
    cokernel_rank: int
    torsion: tuple[int, ...] = ()
    evaluation: tuple[int, ...] | None = None

    @cached_property
    def basis_index(self) -> dict[Monomial, int]:
        """Position of every basis monomial."""
        return {monomial: i for i, monomial in enumerate(self.basis)}

    def evaluate(self, monomial: Monomial) -> int:
        """Value of a monomial of top degree; monomials off the basis vanish."""
        if self.evaluation is None:
            msg = f"Graded piece of degree {self.degree} carries no evaluation"
            raise ValueError(msg)
        index = self.basis_index.get(monomial)
        return 0 if index is None else self.evaluation[index]


class CharFunction(BaseModel):
    """Characteristic numbers on every composition of the half-dimension."""

    name: str
    degree: int
    values: dict[str, int] = Field(..., description="Value keyed by comma-separated composition")

    def value(self, alpha: Composition) -> int:
        """Characteristic number of one composition."""
        return self.values[str(alpha)]

    def items(self) -> list[tuple[Composition, int]]:
        """Values in canonical composition order."""
        return [(alpha, self.values[str(alpha)]) for alpha in compositions_of(self.degree)]

    def as_nsymm(self) -> NSymmElement:
        """The element ``sum_alpha [alpha] Z_alpha``."""
        return NSymmElement(self.items())


class FHVector(BaseModel):
    """Face counts by dimension and the derived h-vector."""

    f: list[int]
    h: list[int]


class KernelLattice(BaseModel):
    """Hermite-reduced integer basis of the kernel of the characteristic matrix."""

    basis: list[list[int]]
    rank: int

    def summary(self) -> str:
        """Report such as ``rank 1; basis: (1,1,1)``."""
        rows = " ".join("(" + ",".join(str(x) for x in row) + ")" for row in self.basis)
        return f"rank {self.rank}; basis: {rows}" if rows else f"rank {self.rank}"

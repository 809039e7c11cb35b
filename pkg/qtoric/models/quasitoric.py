"""Combinatorial model of an omnioriented quasitoric manifold."""

import hashlib
from collections.abc import Iterable, Mapping
from functools import cached_property
from itertools import combinations

from pydantic import BaseModel, ConfigDict, Field, field_validator


class Monomial(BaseModel):
    """A monomial ``x_{i_1}^{e_1} ... x_{i_r}^{e_r}`` in the vertex variables.

    Exponent pairs are stored by ascending vertex index. The unit monomial
    (no variables, degree 0) only appears as the basis of the degree-0 piece.
    """

    model_config = ConfigDict(frozen=True)

    exponents: tuple[tuple[int, int], ...] = ()

    @field_validator("exponents")
    @classmethod
    def validate_exponents(cls, v: tuple[tuple[int, int], ...]) -> tuple[tuple[int, int], ...]:
        """Sort by vertex and require distinct vertices with positive exponents."""
        ordered = tuple(sorted(v))
        vertices = [vertex for vertex, _ in ordered]
        if len(set(vertices)) != len(vertices):
            msg = "Monomial vertices must be distinct"
            raise ValueError(msg)
        for vertex, exponent in ordered:
            if vertex < 0 or exponent < 1:
                msg = f"Invalid factor x{vertex}^{exponent}"
                raise ValueError(msg)
        return ordered

    @classmethod
    def from_mapping(cls, exponents: Mapping[int, int]) -> "Monomial":
        """Build a monomial from ``{vertex: exponent}``."""
        return cls(exponents=tuple(exponents.items()))

    @classmethod
    def square_free(cls, face: Iterable[int]) -> "Monomial":
        """The product of the variables of ``face``."""
        return cls(exponents=tuple((vertex, 1) for vertex in face))

    @property
    def degree(self) -> int:
        """Total exponent."""
        return sum(exponent for _, exponent in self.exponents)

    @property
    def support(self) -> tuple[int, ...]:
        """Vertices with a positive exponent, ascending."""
        return tuple(vertex for vertex, _ in self.exponents)

    def times_variable(self, vertex: int) -> "Monomial":
        """Multiply by ``x_vertex``."""
        exponents = dict(self.exponents)
        exponents[vertex] = exponents.get(vertex, 0) + 1
        return Monomial.from_mapping(exponents)

    def __str__(self) -> str:
        if not self.exponents:
            return "1"
        return "*".join(f"x{v}" if e == 1 else f"x{v}^{e}" for v, e in self.exponents)


class QuasitoricData(BaseModel):
    """Vertices, facets of the dual simplicial sphere and the characteristic map.

    The model only enforces types; the combinatorial and arithmetic invariants
    are checked by ``validate`` so that every violation can be reported.
    Vertex order is part of the data and is never canonicalized.
    """

    model_config = ConfigDict(frozen=True, populate_by_name=True)

    name: str = Field(..., description="Human-readable name")
    m: int = Field(..., ge=1, description="Half-dimension, rank of the torus")
    vertices: tuple[str, ...] = Field(..., description="Ordered vertex labels")
    facets: tuple[tuple[int, ...], ...] = Field(..., description="Maximal simplices as vertex indices")
    lambdas: tuple[tuple[int, ...], ...] = Field(
        ..., alias="lambda", description="Characteristic vector of each vertex"
    )
    base_facet: int | None = Field(None, description="Index of the facet fixing the orientation")

    @field_validator("facets")
    @classmethod
    def sort_facets(cls, v: tuple[tuple[int, ...], ...]) -> tuple[tuple[int, ...], ...]:
        """Store each facet with ascending vertex indices."""
        return tuple(tuple(sorted(facet)) for facet in v)

    @property
    def vertex_count(self) -> int:
        """Number of vertices."""
        return len(self.vertices)

    @cached_property
    def base_facet_index(self) -> int:
        """Index of the base facet (the lexicographically least facet by default)."""
        if self.base_facet is not None:
            return self.base_facet
        return min(range(len(self.facets)), key=lambda i: self.facets[i])

    @cached_property
    def faces(self) -> frozenset[tuple[int, ...]]:
        """All faces of the complex, including the empty face."""
        result: set[tuple[int, ...]] = set()
        for facet in self.facets:
            for size in range(len(facet) + 1):
                result.update(combinations(facet, size))
        return frozenset(result)

    def is_face(self, vertices: Iterable[int]) -> bool:
        """Whether the given vertex set spans a face."""
        return tuple(sorted(set(vertices))) in self.faces

    def facet_matrix(self, facet: tuple[int, ...]) -> list[list[int]]:
        """The ``m × m`` matrix whose columns are the λ-vectors of ``facet``."""
        return [[self.lambdas[vertex][row] for vertex in facet] for row in range(self.m)]

    @cached_property
    def lambda_matrix(self) -> list[list[int]]:
        """The ``m × |vertices|`` characteristic matrix."""
        return [[vector[row] for vector in self.lambdas] for row in range(self.m)]

    @cached_property
    def digest(self) -> str:
        """Stable content hash used as a cache key."""
        payload = self.model_dump_json(by_alias=True)
        return hashlib.sha256(payload.encode("utf-8")).hexdigest()

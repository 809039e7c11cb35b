"""Graded pieces of the integral quotient of the Stanley–Reisner face ring.

In degree ``k`` the quotient is ``Z^{basis} / rowspace(R)`` where the basis is
the admissible monomials of degree ``k`` (support a face) and ``R`` holds the
products ``θ_j · μ`` of the linear forms ``θ_j = sum_i λ_{i,j} x_i`` with the
admissible monomials ``μ`` of degree ``k - 1``, non-face terms dropped.
"""

import time

from qtoric.algebra.compositions import compositions_with_length
from qtoric.algebra.linalg import smith_form_sparse
from qtoric.errors import ArgumentError, IntegrityError
from qtoric.logging_config import get_logger
from qtoric.metrics import record_graded_piece_duration, record_smith_form
from qtoric.models.quasitoric import Monomial, QuasitoricData
from qtoric.models.reports import GradedPiece
from qtoric.services.cache import graded_piece_cache
from qtoric.services.validation_service import ensure_valid
from qtoric.tracing_config import add_span_attributes, add_span_event, get_tracer

logger = get_logger(__name__)
tracer = get_tracer(__name__)


def admissible_monomials(d: QuasitoricData, k: int) -> list[Monomial]:
    """Degree-``k`` monomials supported on a face, sorted by exponent pairs."""
    if k == 0:
        return [Monomial()]
    faces = sorted(face for face in d.faces if 1 <= len(face) <= k)
    result = []
    for face in faces:
        for alpha in compositions_with_length(k, len(face)):
            result.append(Monomial(exponents=tuple(zip(face, alpha.parts, strict=True))))
    return sorted(result, key=lambda monomial: monomial.exponents)


def relation_rows(d: QuasitoricData, k: int, basis: list[Monomial]) -> list[dict[int, int]]:
    """Sparse rows ``θ_j · μ`` over the degree-``k`` basis, zero rows omitted."""
    if k == 0:
        return []
    index = {monomial: i for i, monomial in enumerate(basis)}
    rows: list[dict[int, int]] = []
    for mu in admissible_monomials(d, k - 1):
        for j in range(d.m):
            row: dict[int, int] = {}
            for vertex, vector in enumerate(d.lambdas):
                coefficient = vector[j]
                if not coefficient:
                    continue
                target = index.get(mu.times_variable(vertex))
                if target is None:
                    continue
                row[target] = row.get(target, 0) + coefficient
            row = {i: c for i, c in row.items() if c}
            if row:
                rows.append(row)
    return rows


def _compute_graded_piece(d: QuasitoricData, k: int) -> GradedPiece:
    ensure_valid(d)
    piece_logger = logger.bind(data=d.name, degree=k)
    started = time.perf_counter()
    with tracer.start_as_current_span("graded_piece") as span:
        span.set_attribute("data.name", d.name)
        span.set_attribute("graded_piece.degree", k)
        basis = admissible_monomials(d, k)
        rows = relation_rows(d, k, basis)
        add_span_attributes({"graded_piece.basis_size": len(basis), "graded_piece.relation_count": len(rows)})

        top = k == d.m
        with tracer.start_as_current_span("smith_form"):
            smith = smith_form_sparse(rows, len(basis), with_kernel=top)
        record_smith_form()

        evaluation = None
        if top:
            if smith.cokernel_rank != 1 or smith.torsion:
                raise IntegrityError(
                    f"Top-degree cohomology of '{d.name}' is not Z: "
                    f"rank {smith.cokernel_rank}, torsion {list(smith.torsion)}"
                )
            assert smith.kernel is not None
            functional = list(smith.kernel[0])
            base = Monomial.square_free(d.facets[d.base_facet_index])
            base_value = functional[basis.index(base)]
            if abs(base_value) != 1:
                raise IntegrityError(
                    f"Base facet monomial {base} of '{d.name}' evaluates to {base_value}, not a generator"
                )
            if base_value < 0:
                functional = [-value for value in functional]
            evaluation = tuple(functional)

        piece = GradedPiece(
            data_digest=d.digest,
            degree=k,
            basis=tuple(basis),
            relations=tuple(rows),
            invariant_factors=smith.invariant_factors,
            cokernel_rank=smith.cokernel_rank,
            torsion=smith.torsion,
            evaluation=evaluation,
        )
        add_span_event("graded_piece_computed", {"cokernel_rank": piece.cokernel_rank})

    elapsed = time.perf_counter() - started
    record_graded_piece_duration(k, elapsed)
    piece_logger.info(
        "Graded piece computed",
        basis_size=len(basis),
        relation_count=len(rows),
        cokernel_rank=piece.cokernel_rank,
        torsion=list(piece.torsion),
        seconds=round(elapsed, 4),
    )
    return piece


def graded_piece(d: QuasitoricData, k: int, *, use_cache: bool = True) -> GradedPiece:
    """The degree-``k`` piece with its Smith form certificate.

    In the top degree ``k = m`` the cokernel must be free of rank one; its
    generator is fixed so that the base facet's square-free monomial
    evaluates to ``+1``. Data is validated once, when its piece is first
    computed; cache hits skip validation.

    Args:
        d: Valid quasitoric data
        k: Degree, ``0 <= k <= m``
        use_cache: Look up and store the result in the graded-piece cache

    Returns:
        The graded piece

    Raises:
        InvalidQuasitoricDataError: If ``d`` is invalid
        ArgumentError: If ``k`` is out of range
        IntegrityError: If the top degree is not ``Z`` or the base facet does not generate it
    """
    if not isinstance(k, int) or not 0 <= k <= d.m:
        raise ArgumentError(f"Degree must lie in 0..{d.m}, got {k!r}")
    if not use_cache:
        return _compute_graded_piece(d, k)
    return graded_piece_cache.get_or_compute((d.digest, k), lambda: _compute_graded_piece(d, k))


def top_eval(d: QuasitoricData, mu: Monomial) -> int:
    """Value of a degree-``m`` monomial as a multiple of the fundamental class.

    Raises:
        ArgumentError: If ``mu`` does not have degree ``m``
    """
    if mu.degree != d.m:
        raise ArgumentError(f"Monomial {mu} has degree {mu.degree}, expected {d.m}")
    if not d.is_face(mu.support):
        return 0
    return graded_piece(d, d.m).evaluate(mu)


def evaluation_vanishes_on_relations(piece: GradedPiece) -> bool:
    """Whether the top-degree evaluation annihilates every relation row."""
    if piece.evaluation is None:
        return False
    return all(sum(c * piece.evaluation[i] for i, c in row.items()) == 0 for row in piece.relations)


def faces_of_size(d: QuasitoricData, size: int) -> list[tuple[int, ...]]:
    """Faces with exactly ``size`` vertices, lexicographically."""
    return sorted(face for face in d.faces if len(face) == size) if size else [()]

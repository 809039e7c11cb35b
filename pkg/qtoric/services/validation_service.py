"""Validation of quasitoric data against its combinatorial and arithmetic invariants."""

from collections import Counter
from itertools import combinations

from qtoric.algebra.linalg import determinant
from qtoric.errors import InvalidQuasitoricDataError
from qtoric.logging_config import get_logger
from qtoric.models.quasitoric import QuasitoricData
from qtoric.models.reports import ValidationIssue, ValidationReport
from qtoric.tracing_config import add_span_event, get_tracer

logger = get_logger(__name__)
tracer = get_tracer(__name__)


def _shape_issues(d: QuasitoricData) -> list[ValidationIssue]:
    issues: list[ValidationIssue] = []
    n = d.vertex_count
    if n == 0:
        issues.append(ValidationIssue(kind="shape", message="No vertices"))
    if len(d.lambdas) != n:
        issues.append(
            ValidationIssue(kind="shape", message=f"{len(d.lambdas)} characteristic vectors for {n} vertices")
        )
    for vertex, vector in enumerate(d.lambdas):
        if len(vector) != d.m:
            issues.append(
                ValidationIssue(
                    kind="shape",
                    message=f"Characteristic vector of vertex {vertex} has length {len(vector)}, expected {d.m}",
                    vertex=vertex,
                )
            )
    if not d.facets:
        issues.append(ValidationIssue(kind="shape", message="No facets"))
    for facet in d.facets:
        if len(set(facet)) != len(facet):
            issues.append(ValidationIssue(kind="shape", message=f"Facet {list(facet)} repeats a vertex", facet=facet))
        elif len(facet) != d.m:
            issues.append(
                ValidationIssue(
                    kind="shape", message=f"Facet {list(facet)} has {len(facet)} vertices, expected {d.m}", facet=facet
                )
            )
        out_of_range = [v for v in facet if not 0 <= v < n]
        if out_of_range:
            issues.append(
                ValidationIssue(
                    kind="shape", message=f"Facet {list(facet)} uses unknown vertices {out_of_range}", facet=facet
                )
            )
    for facet, count in Counter(d.facets).items():
        if count > 1:
            issues.append(ValidationIssue(kind="shape", message=f"Facet {list(facet)} is listed {count} times", facet=facet))
    if d.base_facet is not None and not 0 <= d.base_facet < len(d.facets):
        issues.append(ValidationIssue(kind="shape", message=f"Base facet index {d.base_facet} is out of range"))
    return issues


def _complex_issues(d: QuasitoricData) -> list[ValidationIssue]:
    issues: list[ValidationIssue] = []
    used = {v for facet in d.facets for v in facet}
    for vertex in range(d.vertex_count):
        if vertex not in used:
            issues.append(
                ValidationIssue(kind="coverage", message=f"Vertex {vertex} lies in no facet", vertex=vertex)
            )

    ridges: Counter[tuple[int, ...]] = Counter()
    for facet in d.facets:
        ridges.update(combinations(facet, d.m - 1))
    for ridge, count in sorted(ridges.items()):
        if count != 2:
            issues.append(
                ValidationIssue(
                    kind="pseudomanifold",
                    message=f"Ridge {list(ridge)} lies in {count} facets, expected 2",
                    facet=ridge,
                )
            )

    euler = sum((-1) ** (len(face) - 1) for face in d.faces if face)
    expected = 1 + (-1) ** (d.m - 1)
    if euler != expected:
        issues.append(
            ValidationIssue(
                kind="euler",
                message=f"Euler characteristic {euler} differs from {expected} of the {d.m - 1}-sphere",
            )
        )
    return issues


def validate(d: QuasitoricData) -> ValidationReport:
    """Check shape, sphere proxies and nondegeneracy of quasitoric data.

    The sphere condition is approximated by purity, the pseudomanifold
    condition (every ridge in exactly two facets) and the Euler characteristic.

    Args:
        d: Data to validate

    Returns:
        Report listing every violated invariant and the facet determinants
    """
    with tracer.start_as_current_span("validate") as span:
        span.set_attribute("data.name", d.name)
        span.set_attribute("data.m", d.m)
        issues = _shape_issues(d)
        determinants: list[int] = []
        if not issues:
            issues.extend(_complex_issues(d))
            for facet in d.facets:
                det = determinant(d.facet_matrix(facet))
                determinants.append(det)
                if abs(det) != 1:
                    issues.append(
                        ValidationIssue(
                            kind="nondegeneracy",
                            message=f"Facet {list(facet)} has determinant {det}",
                            facet=facet,
                        )
                    )
        report = ValidationReport(
            name=d.name,
            m=d.m,
            vertex_count=d.vertex_count,
            facet_count=len(d.facets),
            determinants=determinants,
            issues=issues,
        )
        span.set_attribute("validation.valid", report.valid)
        add_span_event("validation_completed", {"issues": len(issues)})

    if not report.valid:
        logger.warning(
            "Quasitoric data failed validation",
            data=d.name,
            issues=[issue.message for issue in issues[:5]],
        )
    return report


def ensure_valid(d: QuasitoricData) -> ValidationReport:
    """Validate and raise on failure.

    Raises:
        InvalidQuasitoricDataError: If any invariant is violated
    """
    report = validate(d)
    if not report.valid:
        raise InvalidQuasitoricDataError(report)
    return report

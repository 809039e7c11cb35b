"""Characteristic numbers, products, presets and lattices of quasitoric manifolds."""

from itertools import combinations
from math import comb

from qtoric.algebra.compositions import Composition, compositions_of
from qtoric.algebra.linalg import smith_decomposition
from qtoric.errors import ArgumentError, NotSurjectiveError
from qtoric.logging_config import get_logger
from qtoric.models.quasitoric import Monomial, QuasitoricData
from qtoric.models.reports import CharFunction, FHVector, GradedPiece, KernelLattice
from qtoric.services.face_ring_service import faces_of_size, graded_piece
from qtoric.services.validation_service import ensure_valid
from qtoric.tracing_config import add_span_event, get_tracer

logger = get_logger(__name__)
tracer = get_tracer(__name__)


def _char_number(d: QuasitoricData, top: GradedPiece, alpha: Composition) -> int:
    # Non-faces evaluate to zero, so only faces of the right size contribute.
    return sum(
        top.evaluate(Monomial(exponents=tuple(zip(face, alpha.parts, strict=True))))
        for face in faces_of_size(d, alpha.length)
    )


def char_number(d: QuasitoricData, alpha: Composition) -> int:
    """``[alpha]``: the sum of ``x_{i_1}^{a_1} ... x_{i_r}^{a_r}`` over ``i_1 < ... < i_r``.

    Raises:
        ArgumentError: If the weight of ``alpha`` differs from ``m``
        InvalidQuasitoricDataError: If ``d`` is invalid
    """
    if alpha.weight != d.m:
        raise ArgumentError(f"Composition ({alpha}) has weight {alpha.weight}, expected {d.m}")
    return _char_number(d, graded_piece(d, d.m), alpha)


def char_function(d: QuasitoricData) -> CharFunction:
    """Characteristic numbers on every composition of ``m``."""
    with tracer.start_as_current_span("char_function") as span:
        span.set_attribute("data.name", d.name)
        top = graded_piece(d, d.m)
        values = {str(alpha): _char_number(d, top, alpha) for alpha in compositions_of(d.m)}
        add_span_event("char_function_computed", {"compositions": len(values)})
    logger.info("Characteristic function computed", data=d.name, compositions=len(values))
    return CharFunction(name=d.name, degree=d.m, values=values)


def top_class_count(d: QuasitoricData) -> int:
    """Sum over facets of the evaluation of the facet's square-free monomial."""
    top = graded_piece(d, d.m)
    return sum(top.evaluate(Monomial.square_free(facet)) for facet in d.facets)


def _product_labels(dp: QuasitoricData, dq: QuasitoricData) -> tuple[str, ...]:
    if set(dp.vertices).isdisjoint(dq.vertices):
        return dp.vertices + dq.vertices
    p, q = (dp.name, dq.name) if dp.name != dq.name else (f"{dp.name}#1", f"{dq.name}#2")
    return tuple(f"{p}:{v}" for v in dp.vertices) + tuple(f"{q}:{v}" for v in dq.vertices)


def product(dp: QuasitoricData, dq: QuasitoricData) -> QuasitoricData:
    """The product manifold, whose sphere is the join of the two spheres.

    Vertices of ``dp`` come first; facets are unions of a facet of each factor
    and the characteristic map is block diagonal.

    Raises:
        InvalidQuasitoricDataError: If either factor is invalid
    """
    ensure_valid(dp)
    ensure_valid(dq)
    shift = dp.vertex_count
    facets = [fp + tuple(v + shift for v in fq) for fp in dp.facets for fq in dq.facets]
    lambdas = [vector + (0,) * dq.m for vector in dp.lambdas] + [(0,) * dp.m + vector for vector in dq.lambdas]
    base = dp.base_facet_index * len(dq.facets) + dq.base_facet_index
    return QuasitoricData(
        name=f"{dp.name}x{dq.name}",
        m=dp.m + dq.m,
        vertices=_product_labels(dp, dq),
        facets=tuple(facets),
        lambdas=tuple(lambdas),
        base_facet=base,
    )


def preset_cpn(n: int) -> QuasitoricData:
    """Complex projective space over the ``n``-simplex.

    Raises:
        ArgumentError: If ``n < 1``
    """
    if not isinstance(n, int) or n < 1:
        raise ArgumentError(f"CP^n needs n >= 1, got {n!r}")
    lambdas = [tuple(-1 for _ in range(n))]
    lambdas += [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    return QuasitoricData(
        name=f"CP{n}",
        m=n,
        vertices=tuple(f"f{i}" for i in range(n + 1)),
        facets=tuple(combinations(range(n + 1), n)),
        lambdas=tuple(lambdas),
    )


def preset_hirzebruch(a: int) -> QuasitoricData:
    """Hirzebruch surface over the square with twist ``a``."""
    return QuasitoricData(
        name=f"H{a}",
        m=2,
        vertices=("f1", "f2", "f3", "f4"),
        facets=((0, 1), (1, 2), (2, 3), (0, 3)),
        lambdas=((1, 0), (0, 1), (-1, a), (0, -1)),
    )


def permute_vertices(d: QuasitoricData, permutation: list[int]) -> QuasitoricData:
    """Reorder vertices so that new vertex ``i`` is old vertex ``permutation[i]``.

    The base facet is kept, so the orientation does not change.

    Raises:
        ArgumentError: If ``permutation`` is not a permutation of the vertices
    """
    if sorted(permutation) != list(range(d.vertex_count)):
        raise ArgumentError(f"{permutation} is not a permutation of 0..{d.vertex_count - 1}")
    inverse = {old: new for new, old in enumerate(permutation)}
    return QuasitoricData(
        name=d.name,
        m=d.m,
        vertices=tuple(d.vertices[old] for old in permutation),
        facets=tuple(tuple(inverse[v] for v in facet) for facet in d.facets),
        lambdas=tuple(d.lambdas[old] for old in permutation),
        base_facet=d.base_facet_index,
    )


def f_h_vector(d: QuasitoricData) -> FHVector:
    """Face counts ``f_0..f_{m-1}`` and ``h_k = sum_i (-1)^{k-i} C(m-i, k-i) f_{i-1}``."""
    ensure_valid(d)
    counts = [0] * (d.m + 1)
    for face in d.faces:
        counts[len(face)] += 1
    h = [
        sum((-1) ** (k - i) * comb(d.m - i, k - i) * counts[i] for i in range(k + 1))
        for k in range(d.m + 1)
    ]
    return FHVector(f=counts[1:], h=h)


def kernel_lattice(d: QuasitoricData) -> KernelLattice:
    """Hermite-reduced basis of the integer kernel of the characteristic matrix.

    Only the characteristic vectors are used, so the facets need not form a sphere.

    Raises:
        ArgumentError: If a characteristic vector does not have length ``m``
        NotSurjectiveError: If the characteristic matrix does not map onto ``Z^m``
    """
    if any(len(vector) != d.m for vector in d.lambdas):
        raise ArgumentError(f"Characteristic vectors of '{d.name}' must have length {d.m}")
    with tracer.start_as_current_span("kernel_lattice") as span:
        span.set_attribute("data.name", d.name)
        smith = smith_decomposition(d.lambda_matrix, d.vertex_count)
        if not smith.is_unimodular_surjection:
            raise NotSurjectiveError(
                f"Characteristic matrix of '{d.name}' is not onto Z^{d.m}: "
                f"invariant factors {list(smith.invariant_factors)}"
            )
        assert smith.kernel is not None
        basis = [list(row) for row in smith.kernel]
        span.set_attribute("kernel.rank", len(basis))
    return KernelLattice(basis=basis, rank=len(basis))

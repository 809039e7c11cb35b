"""Residue coproduct, antipode and substitution maps on NSymm.

The generator coproduct is read off the residue

    Δ Z(t) = res_{u=0} Z(u) ⊗ (u - Z(t))^{-1},    Z(t) = sum_{i>=0} Z_i t^{i+1},

with ``(u - Z(t))^{-1} = sum_k u^{-k-1} Z(t)^k`` and ``u`` central. The left
tensor factor carries the coefficients of ``Z(u)``, the right one those of
``Z(t)``. Words are handled by multiplicativity.
"""

import threading
from collections.abc import Iterable

from opentelemetry.trace import StatusCode

from qtoric.algebra.compositions import EMPTY, Composition, compositions_of
from qtoric.algebra.elements import (
    LinearCombination,
    NSymmElement,
    TensorElement,
    counit_nsymm,
    counit_tensor_left,
    counit_tensor_right,
)
from qtoric.algebra.series import (
    INTEGERS,
    NSYMM,
    TENSOR,
    NCLaurentSeries,
    NCSeries,
    SeriesRing,
    laurent_residue,
    series_substitute,
)
from qtoric.errors import ArgumentError
from qtoric.logging_config import get_logger
from qtoric.metrics import record_check
from qtoric.models.reports import CheckReport, DegreeCheck
from qtoric.tracing_config import add_span_attributes, add_span_event, get_tracer, set_span_status

logger = get_logger(__name__)
tracer = get_tracer(__name__)

TripleKey = tuple[Composition, Composition, Composition]


def _check_order(n: int, what: str = "Truncation order"):
    if not isinstance(n, int) or n < 1:
        raise ArgumentError(f"{what} must be a positive integer, got {n!r}")


def z_series(order: int) -> NCSeries[NSymmElement]:
    """``Z(t) = t + Z_1 t^2 + ... + Z_{order-1} t^order``."""
    return NCSeries(NSYMM, {i + 1: NSymmElement.generator(i) for i in range(order)}, order)


def _z_right(order: int) -> NCSeries[TensorElement]:
    # 1 ⊗ Z(t)
    return z_series(order).map_coefficients(TensorElement.right_embed, TENSOR)


def delta_bfk_series(n: int) -> NCSeries[TensorElement]:
    """Generator coproducts ``sum_k Δ(Z_k) t^{k+1}`` from the residue formula.

    Args:
        n: Highest generator degree wanted

    Returns:
        A series of order ``n + 1`` whose ``t^{k+1}`` coefficient is ``Δ(Z_k)``

    Raises:
        ArgumentError: If ``n < 1``
    """
    _check_order(n)
    order = n + 1
    coefficient_ring = SeriesRing(TENSOR, order)
    z_t = _z_right(order)

    # (u - Z(t))^{-1}; Z(t)^k vanishes to order k in t, so k <= order is exact.
    inverse_terms: dict[int, NCSeries[TensorElement]] = {}
    power = coefficient_ring.one()
    for k in range(order + 1):
        inverse_terms[-k - 1] = power
        power = power * z_t
    inverse = NCLaurentSeries(coefficient_ring, inverse_terms, 0, pole_bound=order + 1)

    # Z(u) ⊗ 1 with constant t-series coefficients
    z_u = NCLaurentSeries(
        coefficient_ring,
        {
            i + 1: NCSeries.constant(TENSOR, TensorElement.left_embed(NSymmElement.generator(i)), order)
            for i in range(order)
        },
        order,
    )
    return laurent_residue(z_u * inverse)


def delta_bfk_closed_form(n: int) -> NCSeries[TensorElement]:
    """The same generator coproducts as ``sum_i (Z_i ⊗ 1)(1 ⊗ Z(t))^{i+1}``."""
    _check_order(n)
    order = n + 1
    z_t = _z_right(order)
    total = NCSeries(TENSOR, {}, order)
    power = z_t
    for i in range(order):
        left = TensorElement.left_embed(NSymmElement.generator(i))
        total = total + power.scale_left(left)
        power = power * z_t
    return total


class CoproductTable:
    """Generator coproducts for degrees up to ``max_degree`` plus memoized words.

    Word coproducts and antipodes are computed on demand and cached; each cache
    entry is written once under a lock, so concurrent readers always agree.
    """

    def __init__(self, max_degree: int, generators: dict[int, TensorElement]):
        """Initialize the table.

        Args:
            max_degree: Highest generator degree covered
            generators: ``Δ(Z_k)`` for ``0 <= k <= max_degree``
        """
        self.max_degree = max_degree
        self._generators = dict(generators)
        self._words: dict[Composition, TensorElement] = {EMPTY: TensorElement.one()}
        self._antipodes: dict[Composition, NSymmElement] = {EMPTY: NSymmElement.one()}
        self._lock = threading.Lock()

    @classmethod
    def build(cls, max_degree: int) -> "CoproductTable":
        """Compute the generator coproducts from the residue series."""
        series = delta_bfk_series(max_degree)
        return cls(max_degree, {k: series.coefficient(k + 1) for k in range(max_degree + 1)})

    def with_fault(self, degree: int) -> "CoproductTable":
        """A copy whose ``Δ(Z_degree)`` misses its first mixed term.

        Mixed terms have both tensor factors nonempty; "first" follows the
        printed order. Used to exercise the checks.
        """
        if not 1 <= degree <= self.max_degree:
            raise ArgumentError(f"Fault degree must lie in 1..{self.max_degree}, got {degree}")
        generators = dict(self._generators)
        value = generators[degree]
        mixed = [(key, c) for key, c in value.items() if key[0].parts and key[1].parts]
        if mixed:
            key, c = mixed[0]
            generators[degree] = value - TensorElement({key: c})
            logger.debug("Injected coproduct fault", degree=degree, dropped=str(TensorElement({key: c})))
        return CoproductTable(self.max_degree, generators)

    def _check_weight(self, weight: int):
        if weight > self.max_degree:
            raise ArgumentError(f"Weight {weight} exceeds truncation order {self.max_degree}")

    def generator(self, k: int) -> TensorElement:
        """``Δ(Z_k)``."""
        self._check_weight(k)
        return self._generators[k]

    def word(self, alpha: Composition) -> TensorElement:
        """``Δ(Z_alpha)`` as the product of the generator coproducts."""
        cached = self._words.get(alpha)
        if cached is not None:
            return cached
        self._check_weight(alpha.weight)
        prefix = Composition(alpha.parts[:-1])
        value = self.word(prefix) * self._generators[alpha.parts[-1]]
        with self._lock:
            return self._words.setdefault(alpha, value)

    def coproduct(self, a: NSymmElement) -> TensorElement:
        """Linear extension of ``word`` to an element."""
        result = TensorElement.zero()
        for alpha, c in a.terms.items():
            result = result + self.word(alpha).scale(c)
        return result

    def word_antipode(self, alpha: Composition) -> NSymmElement:
        """``S(Z_alpha)`` from ``sum S(a') a'' = ε(a)`` by recursion on weight."""
        cached = self._antipodes.get(alpha)
        if cached is not None:
            return cached
        self._check_weight(alpha.weight)
        total = NSymmElement.zero()
        for (left, right), c in self.word(alpha).terms.items():
            if left == alpha and not right.parts:
                continue
            total = total + (self.word_antipode(left) * NSymmElement.word(right)).scale(c)
        with self._lock:
            return self._antipodes.setdefault(alpha, -total)

    def antipode(self, a: NSymmElement) -> NSymmElement:
        """Linear extension of ``word_antipode``."""
        result = NSymmElement.zero()
        for alpha, c in a.terms.items():
            result = result + self.word_antipode(alpha).scale(c)
        return result


_tables: dict[int, CoproductTable] = {}
_tables_lock = threading.Lock()


def coproduct_table(max_degree: int) -> CoproductTable:
    """Shared table covering at least ``max_degree`` (write-once cache)."""
    _check_order(max_degree)
    with _tables_lock:
        for degree, table in _tables.items():
            if degree >= max_degree:
                return table
    table = CoproductTable.build(max_degree)
    with _tables_lock:
        return _tables.setdefault(max_degree, table)


def _max_weight(a: NSymmElement) -> int:
    return max((alpha.weight for alpha in a.terms), default=0)


def delta_bfk(a: NSymmElement, n: int) -> TensorElement:
    """Coproduct of an element, extended multiplicatively from the generators.

    Raises:
        ArgumentError: If a word of ``a`` has weight above ``n``
    """
    _check_order(n)
    if _max_weight(a) > n:
        raise ArgumentError(f"Element has weight {_max_weight(a)} above truncation order {n}")
    return coproduct_table(n).coproduct(a)


def antipode(a: NSymmElement, n: int) -> NSymmElement:
    """Antipode of an element of weight at most ``n``.

    Raises:
        ArgumentError: If a word of ``a`` has weight above ``n``
    """
    _check_order(n)
    if _max_weight(a) > n:
        raise ArgumentError(f"Element has weight {_max_weight(a)} above truncation order {n}")
    return coproduct_table(n).antipode(a)


def lambda_br_substitute(f: NCSeries[int], n: int) -> NCSeries[NSymmElement]:
    """Substitute ``z ↦ Z(c) = c + sum Z_i c^{i+1}`` into an integer series.

    Raises:
        ArgumentError: If ``f`` is not an integer series or has a constant term
    """
    _check_order(n)
    if f.ring != INTEGERS:
        raise ArgumentError(f"Expected an integer series, got a series over {f.ring}")
    if f.coefficient(0):
        raise ArgumentError("Substitution requires a series with zero constant term")
    lifted = f.change_ring(NSYMM)
    if lifted.order > n:
        lifted = lifted.truncate(n)
    return series_substitute(lifted, z_series(n))


def delta_bt_substitute(f: NCSeries[NSymmElement], n: int) -> NCSeries[TensorElement]:
    """``sum_k a_k c^k ↦ sum_k (a_k ⊗ 1)(1 ⊗ Z(c))^k``, truncated at ``n``."""
    _check_order(n)
    if f.ring != NSYMM:
        raise ArgumentError(f"Expected a series over NSymm, got a series over {f.ring}")
    lifted = f.map_coefficients(TensorElement.left_embed, TENSOR)
    if lifted.order > n:
        lifted = lifted.truncate(n)
    return series_substitute(lifted, _z_right(n))


def _first_difference(lhs: LinearCombination, rhs: LinearCombination) -> str | None:
    difference = lhs - rhs
    if not difference:
        return None
    key = difference.support()[0]
    rendered = ",".join("(" + str(part) + ")" for part in key) if isinstance(key, tuple) else f"({key})"
    return f"{rendered}: {lhs.coefficient(key)} vs {rhs.coefficient(key)}"


def check_conjecture15(
    n: int,
    probes: Iterable[NCSeries[int]] | None = None,
    table: CoproductTable | None = None,
) -> CheckReport:
    """Compare ``Δ(λ(f))`` with ``Δ_BT(λ(f))`` coefficientwise through degree ``n``.

    ``λ`` substitutes ``z ↦ Z(c)``; the left side applies the coproduct to each
    coefficient, the right side substitutes ``c ↦ 1 ⊗ Z(c)``. The default probe
    is ``f = z``.

    Args:
        n: Truncation order
        probes: Integer series with zero constant term
        table: Coproduct table to use (defaults to the shared one)

    Returns:
        Report with one entry per degree ``1..n``

    Raises:
        ArgumentError: If ``n < 1`` or a probe is truncated below order ``n``
    """
    _check_order(n)
    probe_list = list(probes) if probes is not None else [NCSeries.variable(INTEGERS, n)]
    short = sorted(probe.order for probe in probe_list if probe.order < n)
    if short:
        raise ArgumentError(f"Probes must be known through degree {n}, got one truncated at order {short[0]}")
    with tracer.start_as_current_span("check_conjecture15") as span:
        span.set_attribute("check.max_degree", n)
        table = table or coproduct_table(n)
        failures: dict[int, str] = {}
        for probe in probe_list:
            substituted = lambda_br_substitute(probe, n)
            lhs = substituted.map_coefficients(table.coproduct, TENSOR)
            rhs = delta_bt_substitute(substituted, n)
            for degree in range(1, n + 1):
                if degree in failures:
                    continue
                detail = _first_difference(lhs.coefficient(degree), rhs.coefficient(degree))
                if detail is not None:
                    failures[degree] = detail
        report = CheckReport(
            check="conjecture15",
            max_degree=n,
            degrees=[DegreeCheck(degree=d, passed=d not in failures, detail=failures.get(d)) for d in range(1, n + 1)],
        )
        _mark_span(report)
        add_span_event("check_completed", {"passed": report.passed})
    _log_report(report)
    return report


def _triple(table: CoproductTable, t: TensorElement, side: str) -> LinearCombination[TripleKey]:
    terms: dict[TripleKey, int] = {}
    for (left, right), c in t.terms.items():
        if side == "left":
            for (a, b), d in table.word(left).terms.items():
                terms[(a, b, right)] = terms.get((a, b, right), 0) + c * d
        else:
            for (a, b), d in table.word(right).terms.items():
                terms[(left, a, b)] = terms.get((left, a, b), 0) + c * d
    return LinearCombination(terms)


def _check_word(table: CoproductTable, alpha: Composition) -> str | None:
    delta = table.word(alpha)
    for (left, right), _ in delta.terms.items():
        if left.weight + right.weight != alpha.weight:
            return f"degree: term {left}|{right} in Δ({alpha})"
    word = NSymmElement.word(alpha)
    if counit_tensor_left(delta) != word or counit_tensor_right(delta) != word:
        return f"counit fails on Z({alpha})"
    for prefix, suffix in alpha.splits():
        if prefix.parts and suffix.parts and table.word(prefix) * table.word(suffix) != delta:
            return f"multiplicativity fails on Z({prefix})·Z({suffix})"
    detail = _first_difference(_triple(table, delta, "left"), _triple(table, delta, "right"))
    if detail is not None:
        return f"coassociativity on Z({alpha}) at {detail}"
    return None


def check_coassociativity(n: int, table: CoproductTable | None = None) -> CheckReport:
    """Bialgebra axioms of the coproduct on every word of weight ``1..n``.

    Per weight it checks degree compatibility, both counit laws,
    multiplicativity over every split of the word, and coassociativity.
    """
    _check_order(n)
    with tracer.start_as_current_span("check_coassociativity") as span:
        span.set_attribute("check.max_degree", n)
        table = table or coproduct_table(n)
        degrees = []
        for weight in range(1, n + 1):
            detail = None
            for alpha in compositions_of(weight):
                detail = _check_word(table, alpha)
                if detail is not None:
                    break
            degrees.append(DegreeCheck(degree=weight, passed=detail is None, detail=detail))
        report = CheckReport(check="coassoc", max_degree=n, degrees=degrees)
        _mark_span(report)
    _log_report(report)
    return report


def check_antipode(n: int, table: CoproductTable | None = None) -> CheckReport:
    """``sum S(a')a'' = sum a'S(a'') = ε(a)·1`` on every word of weight ``1..n``."""
    _check_order(n)
    with tracer.start_as_current_span("check_antipode") as span:
        span.set_attribute("check.max_degree", n)
        table = table or coproduct_table(n)
        degrees = []
        for weight in range(1, n + 1):
            detail = None
            for alpha in compositions_of(weight):
                expected = NSymmElement.from_int(counit_nsymm(NSymmElement.word(alpha)))
                left_sum = NSymmElement.zero()
                right_sum = NSymmElement.zero()
                for (a, b), c in table.word(alpha).terms.items():
                    left_sum = left_sum + (table.word_antipode(a) * NSymmElement.word(b)).scale(c)
                    right_sum = right_sum + (NSymmElement.word(a) * table.word_antipode(b)).scale(c)
                for label, value in (("left", left_sum), ("right", right_sum)):
                    if value != expected:
                        detail = f"{label} antipode identity fails on Z({alpha}): {value}"
                        break
                if detail is not None:
                    break
            degrees.append(DegreeCheck(degree=weight, passed=detail is None, detail=detail))
        report = CheckReport(check="antipode", max_degree=n, degrees=degrees)
        _mark_span(report)
    _log_report(report)
    return report


def _mark_span(report: CheckReport):
    add_span_attributes({"check.passed": report.passed})
    if not report.passed:
        set_span_status(StatusCode.ERROR, report.summary())


def _log_report(report: CheckReport):
    record_check(report.check, passed=report.passed)
    check_logger = logger.bind(check=report.check, max_degree=report.max_degree)
    if report.passed:
        check_logger.info("Check passed")
    else:
        failure = report.first_failure
        check_logger.warning(
            "Check failed",
            degree=failure.degree if failure else None,
            detail=failure.detail if failure else None,
        )

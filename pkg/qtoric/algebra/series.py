"""Truncated power and Laurent series in one central variable.

Coefficients live in a ``CoefficientRing``: the integers, NSymm, NSymm ⊗ NSymm,
or a ring of truncated series (which gives series in two central variables).
Products keep the written order of the coefficients, so noncommutative rings
are handled correctly. Every series carries its truncation order: the
coefficients of exponents above it are unknown, never implicitly zero.
"""

from abc import ABC, abstractmethod
from collections.abc import Callable, Mapping
from dataclasses import dataclass
from typing import Any, Generic, Self, TypeVar

from qtoric.algebra.elements import NSymmElement, TensorElement
from qtoric.errors import ArgumentError

E = TypeVar("E")


class CoefficientRing(ABC):
    """Tag and element factory for a coefficient ring."""

    @abstractmethod
    def zero(self) -> Any:
        """Additive identity."""

    @abstractmethod
    def one(self) -> Any:
        """Multiplicative identity."""

    @abstractmethod
    def contains(self, value: Any) -> bool:
        """Whether ``value`` is an element of this ring."""

    def from_int(self, value: int) -> Any:
        """Image of an integer under the unit map."""
        return self.one() * value if value else self.zero()


@dataclass(frozen=True)
class IntegerRing(CoefficientRing):
    """The integers."""

    def zero(self) -> int:
        return 0

    def one(self) -> int:
        return 1

    def contains(self, value: Any) -> bool:
        return isinstance(value, int) and not isinstance(value, bool)

    def __str__(self) -> str:
        return "Z"


@dataclass(frozen=True)
class NSymmRing(CoefficientRing):
    """Noncommutative symmetric functions."""

    def zero(self) -> NSymmElement:
        return NSymmElement.zero()

    def one(self) -> NSymmElement:
        return NSymmElement.one()

    def from_int(self, value: int) -> NSymmElement:
        return NSymmElement.from_int(value)

    def contains(self, value: Any) -> bool:
        return isinstance(value, NSymmElement)

    def __str__(self) -> str:
        return "NSymm"


@dataclass(frozen=True)
class TensorRing(CoefficientRing):
    """NSymm ⊗ NSymm."""

    def zero(self) -> TensorElement:
        return TensorElement.zero()

    def one(self) -> TensorElement:
        return TensorElement.one()

    def from_int(self, value: int) -> TensorElement:
        return TensorElement.from_int(value)

    def contains(self, value: Any) -> bool:
        return isinstance(value, TensorElement)

    def __str__(self) -> str:
        return "NSymm⊗NSymm"


@dataclass(frozen=True)
class SeriesRing(CoefficientRing):
    """Truncated power series over ``base`` with a fixed truncation order."""

    base: CoefficientRing
    order: int

    def zero(self) -> "NCSeries":
        return NCSeries(self.base, {}, self.order)

    def one(self) -> "NCSeries":
        return NCSeries(self.base, {0: self.base.one()}, self.order)

    def from_int(self, value: int) -> "NCSeries":
        return NCSeries.constant(self.base, self.base.from_int(value), self.order)

    def contains(self, value: Any) -> bool:
        return isinstance(value, NCSeries) and value.ring == self.base and value.order == self.order

    def __str__(self) -> str:
        return f"{self.base}[[t]]/t^{self.order + 1}"


INTEGERS = IntegerRing()
NSYMM = NSymmRing()
TENSOR = TensorRing()


class _TruncatedSeries(Generic[E]):
    """Shared storage and additive structure of truncated series."""

    __slots__ = ("_coefficients", "order", "ring")

    _lowest_exponent = 0

    def __init__(self, ring: CoefficientRing, coefficients: Mapping[int, E], order: int):
        """Build a series, dropping zero coefficients and exponents above ``order``.

        Args:
            ring: Coefficient ring
            coefficients: Mapping from exponent to coefficient
            order: Truncation order; exponents above it are unknown

        Raises:
            ArgumentError: If a coefficient is outside ``ring`` or an exponent is too low
        """
        self.ring = ring
        self.order = order
        cleaned: dict[int, E] = {}
        for exponent, value in coefficients.items():
            if exponent < self._lowest_allowed():
                raise ArgumentError(f"Exponent {exponent} is below the allowed range of {type(self).__name__}")
            if exponent > order or not value:
                continue
            if not ring.contains(value):
                raise ArgumentError(f"Coefficient {value!r} is not an element of {ring}")
            cleaned[exponent] = value
        self._coefficients = cleaned

    def _lowest_allowed(self) -> int:
        return self._lowest_exponent

    def _like(self, coefficients: Mapping[int, E], order: int) -> Self:
        return type(self)(self.ring, coefficients, order)

    def coefficient(self, exponent: int) -> E:
        """Coefficient of ``t**exponent``.

        Raises:
            ArgumentError: If ``exponent`` exceeds the truncation order
        """
        if exponent > self.order:
            raise ArgumentError(f"Coefficient of exponent {exponent} is unknown beyond order {self.order}")
        return self._coefficients.get(exponent, self.ring.zero())

    def items(self) -> list[tuple[int, E]]:
        """Nonzero terms by ascending exponent."""
        return sorted(self._coefficients.items())

    @property
    def valuation(self) -> int:
        """Lowest exponent with a nonzero coefficient (``order + 1`` for a zero series)."""
        return min(self._coefficients, default=self.order + 1)

    def _check_compatible(self, other: "_TruncatedSeries[Any]"):
        if not isinstance(other, _TruncatedSeries):
            raise ArgumentError(f"Cannot combine a series with {other!r}")
        if other.ring != self.ring:
            raise ArgumentError(f"Coefficient ring mismatch: {self.ring} vs {other.ring}")

    def __add__(self, other: Self) -> Self:
        self._check_compatible(other)
        order = min(self.order, other.order)
        result = dict(self._coefficients)
        for exponent, value in other._coefficients.items():
            result[exponent] = result[exponent] + value if exponent in result else value
        return self._like(result, order)

    def __neg__(self) -> Self:
        return self._like({k: -v for k, v in self._coefficients.items()}, self.order)

    def __sub__(self, other: Self) -> Self:
        return self + (-other)

    def __bool__(self) -> bool:
        return bool(self._coefficients)

    def __eq__(self, other: object) -> bool:
        if type(other) is not type(self):
            return NotImplemented
        return (
            self.ring == other.ring  # type: ignore[attr-defined]
            and self.order == other.order  # type: ignore[attr-defined]
            and self._coefficients == other._coefficients  # type: ignore[attr-defined]
        )

    def __hash__(self) -> int:
        return hash((self.ring, self.order, frozenset(self._coefficients.items())))

    def map_coefficients(self, fn: Callable[[E], Any], ring: CoefficientRing) -> Any:
        """Apply ``fn`` to every coefficient, landing in ``ring``."""
        return type(self)(ring, {k: fn(v) for k, v in self._coefficients.items()}, self.order)

    def scale_left(self, value: E) -> Self:
        """Multiply every coefficient on the left by a ring element."""
        return self._like({k: value * v for k, v in self._coefficients.items()}, self.order)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self}, order={self.order})"

    def __str__(self) -> str:
        if not self._coefficients:
            return "0"
        return " + ".join(f"({value})*t^{exponent}" for exponent, value in self.items())


class NCSeries(_TruncatedSeries[E]):
    """Truncated power series ``sum_{k=0..N} a_k t^k`` with a central variable ``t``."""

    __slots__ = ()

    @classmethod
    def constant(cls, ring: CoefficientRing, value: E, order: int) -> "NCSeries[E]":
        """The constant series ``value``."""
        return cls(ring, {0: value}, order)

    @classmethod
    def variable(cls, ring: CoefficientRing, order: int) -> "NCSeries[E]":
        """The series ``t``."""
        return cls(ring, {1: ring.one()}, order)

    @classmethod
    def from_list(cls, ring: CoefficientRing, values: list[E], order: int | None = None) -> "NCSeries[E]":
        """Build ``sum values[k] t^k``; order defaults to ``len(values) - 1``."""
        return cls(ring, dict(enumerate(values)), len(values) - 1 if order is None else order)

    def truncate(self, order: int) -> "NCSeries[E]":
        """Lower the truncation order (never raises it)."""
        if order > self.order:
            raise ArgumentError(f"Cannot extend a series of order {self.order} to order {order}")
        return NCSeries(self.ring, self._coefficients, order)

    def change_ring(self, ring: CoefficientRing) -> "NCSeries[Any]":
        """Embed integer coefficients into another ring via its unit map."""
        if ring == self.ring:
            return self
        if self.ring != INTEGERS:
            raise ArgumentError(f"Only integer series can change ring, not series over {self.ring}")
        return NCSeries(ring, {k: ring.from_int(v) for k, v in self._coefficients.items()}, self.order)

    def __mul__(self, other: "NCSeries[E]") -> "NCSeries[E]":
        return series_multiply(self, other)

    def power(self, exponent: int) -> "NCSeries[E]":
        """``self ** exponent`` for a non-negative integer exponent."""
        if exponent < 0:
            raise ArgumentError("Series powers must be non-negative")
        result = NCSeries.constant(self.ring, self.ring.one(), self.order)
        for _ in range(exponent):
            result = result * self
        return result

    def compose(self, inner: "NCSeries[E]") -> "NCSeries[E]":
        """``self(inner)``; see ``series_substitute``."""
        return series_substitute(self, inner)


class NCLaurentSeries(_TruncatedSeries[E]):
    """Truncated Laurent series with finitely many negative exponents.

    ``pole_bound`` limits how deep the poles may go; exponents below
    ``-pole_bound`` are rejected so residue computations stay finite.
    """

    __slots__ = ("pole_bound",)

    def __init__(self, ring: CoefficientRing, coefficients: Mapping[int, E], order: int, pole_bound: int = 0):
        """Build a Laurent series.

        Args:
            ring: Coefficient ring
            coefficients: Mapping from exponent to coefficient
            order: Truncation order
            pole_bound: Deepest allowed pole order (non-negative)

        Raises:
            ArgumentError: If an exponent lies below ``-pole_bound``
        """
        if pole_bound < 0:
            raise ArgumentError("Pole bound must be non-negative")
        self.pole_bound = pole_bound
        super().__init__(ring, coefficients, order)

    def _lowest_allowed(self) -> int:
        return -self.pole_bound

    def _like(self, coefficients: Mapping[int, E], order: int) -> "NCLaurentSeries[E]":
        return NCLaurentSeries(self.ring, coefficients, order, self.pole_bound)

    def __add__(self, other: "NCLaurentSeries[E]") -> "NCLaurentSeries[E]":
        self._check_compatible(other)
        bound = max(self.pole_bound, other.pole_bound)
        widened = NCLaurentSeries(self.ring, self._coefficients, self.order, bound)
        return _TruncatedSeries.__add__(widened, other)

    def map_coefficients(self, fn: Callable[[E], Any], ring: CoefficientRing) -> "NCLaurentSeries[Any]":
        """Apply ``fn`` to every coefficient, landing in ``ring``."""
        return NCLaurentSeries(ring, {k: fn(v) for k, v in self._coefficients.items()}, self.order, self.pole_bound)

    @classmethod
    def from_series(cls, series: NCSeries[E]) -> "NCLaurentSeries[E]":
        """View a power series as a Laurent series without poles."""
        return cls(series.ring, dict(series.items()), series.order, 0)

    def __mul__(self, other: "NCLaurentSeries[E]") -> "NCLaurentSeries[E]":
        """Product with the valuation-aware truncation order.

        The result is known through ``min(order_f + val_g, order_g + val_f)``.
        """
        self._check_compatible(other)
        order = min(self.order + other.valuation, other.order + self.valuation)
        result: dict[int, E] = {}
        for i, a in self._coefficients.items():
            for j, b in other._coefficients.items():
                if i + j > order:
                    continue
                term = a * b
                result[i + j] = result[i + j] + term if i + j in result else term
        return NCLaurentSeries(self.ring, result, order, self.pole_bound + other.pole_bound)

    def residue(self) -> E:
        """Coefficient of the exponent ``-1``."""
        return laurent_residue(self)


def series_multiply(f: NCSeries[E], g: NCSeries[E]) -> NCSeries[E]:
    """Cauchy product ``f·g`` in the written order, truncated at the smaller order.

    Raises:
        ArgumentError: If the coefficient rings differ
    """
    f._check_compatible(g)
    order = min(f.order, g.order)
    result: dict[int, E] = {}
    for i, a in f._coefficients.items():
        if i > order:
            continue
        for j, b in g._coefficients.items():
            if i + j > order:
                continue
            term = a * b
            result[i + j] = result[i + j] + term if i + j in result else term
    return NCSeries(f.ring, result, order)


def series_substitute(f: NCSeries[E], g: NCSeries[E]) -> NCSeries[E]:
    """Composition ``f(g) = sum_k a_k g^k`` by Horner's rule.

    Coefficients of ``f`` stay to the left of the powers of ``g``. The result is
    known through ``min(order_f, order_g)``.

    Raises:
        ArgumentError: If ``g`` has a nonzero constant term or the rings differ
    """
    f._check_compatible(g)
    if g._coefficients.get(0):
        raise ArgumentError("Substitution requires a series with zero constant term")
    order = min(f.order, g.order)
    inner = g.truncate(order)
    ring = f.ring
    result = NCSeries(ring, {}, order)
    for exponent in range(order, -1, -1):
        result = series_multiply(result, inner)
        a = f._coefficients.get(exponent)
        if a is not None:
            result = result + NCSeries.constant(ring, a, order)
    return result


def laurent_residue(f: NCLaurentSeries[E]) -> E:
    """Coefficient of the exponent ``-1`` (the ring's zero if absent)."""
    return f.coefficient(-1)

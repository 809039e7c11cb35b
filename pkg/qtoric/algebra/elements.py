"""Integer combinations of compositions: NSymm, QSymm and their tensor squares.

``NSymmElement`` is the free associative ring on ``Z_1, Z_2, ...`` with a word
``Z_{a_1} ... Z_{a_r}`` keyed by the composition ``(a_1, ..., a_r)``.
``QSymmElement`` uses the monomial basis ``M_alpha``, dual to the words.
``TensorElement`` keys pairs of compositions and multiplies componentwise;
all generators sit in even degree, so no signs appear.
"""

from collections.abc import Hashable, Iterable, Iterator, Mapping
from types import MappingProxyType
from typing import Any, ClassVar, Generic, Self, TypeVar

from qtoric.algebra.compositions import EMPTY, Composition, as_composition

K = TypeVar("K", bound=Hashable)


class LinearCombination(Generic[K]):
    """Immutable finite integer combination of basis keys with zero terms pruned."""

    __slots__ = ("_hash", "_terms")

    _terms: Mapping[K, int]
    _descending: ClassVar[bool] = False

    def __init__(self, terms: Mapping[Any, int] | Iterable[tuple[Any, int]] = ()):
        """Build a combination, merging repeated keys and dropping zero coefficients.

        Args:
            terms: Mapping or iterable of ``(key, coefficient)`` pairs
        """
        accumulated: dict[K, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for key, coefficient in items:
            if not isinstance(coefficient, int):
                raise TypeError(f"Coefficients must be integers, got {coefficient!r}")
            normalized = self._coerce_key(key)
            accumulated[normalized] = accumulated.get(normalized, 0) + coefficient
        self._terms = MappingProxyType({k: c for k, c in accumulated.items() if c})
        self._hash: int | None = None

    @classmethod
    def _coerce_key(cls, key: Any) -> K:
        return key

    @staticmethod
    def _sort_key(key: K) -> Any:
        return key

    @classmethod
    def _from_clean(cls, terms: dict[K, int]) -> Self:
        # Trusted fast path: keys already normalized, zeros already removed.
        element = cls.__new__(cls)
        element._terms = MappingProxyType(terms)
        element._hash = None
        return element

    @classmethod
    def zero(cls) -> Self:
        """The zero element."""
        return cls._from_clean({})

    @property
    def terms(self) -> Mapping[K, int]:
        """Read-only view of the nonzero terms."""
        return self._terms

    def coefficient(self, key: Any) -> int:
        """Coefficient of a basis key (zero if absent)."""
        return self._terms.get(self._coerce_key(key), 0)

    def items(self) -> list[tuple[K, int]]:
        """Terms in canonical order."""
        return sorted(
            self._terms.items(),
            key=lambda item: self._sort_key(item[0]),
            reverse=self._descending,
        )

    def support(self) -> list[K]:
        """Basis keys with nonzero coefficient, in canonical order."""
        return [key for key, _ in self.items()]

    def _combine(self, other: Self, sign: int) -> Self:
        merged = dict(self._terms)
        for key, coefficient in other._terms.items():
            value = merged.get(key, 0) + sign * coefficient
            if value:
                merged[key] = value
            else:
                merged.pop(key, None)
        return self._from_clean(merged)

    def __add__(self, other: Any) -> Self:
        if isinstance(other, int):
            other = self.from_int(other)
        if type(other) is not type(self):
            return NotImplemented
        return self._combine(other, 1)

    def __radd__(self, other: Any) -> Self:
        return self.__add__(other)

    def __sub__(self, other: Any) -> Self:
        if isinstance(other, int):
            other = self.from_int(other)
        if type(other) is not type(self):
            return NotImplemented
        return self._combine(other, -1)

    def __rsub__(self, other: Any) -> Self:
        return (-self).__add__(other)

    def __neg__(self) -> Self:
        return self._from_clean({key: -c for key, c in self._terms.items()})

    def scale(self, factor: int) -> Self:
        """Multiply every coefficient by an integer."""
        if not factor:
            return self.zero()
        return self._from_clean({key: factor * c for key, c in self._terms.items()})

    @classmethod
    def from_int(cls, value: int) -> Self:
        """Integer multiple of the unit (only meaningful for unital algebras)."""
        raise TypeError(f"{cls.__name__} has no unit")

    def __mul__(self, other: Any) -> Self:
        if isinstance(other, int) and not isinstance(other, bool):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other: Any) -> Self:
        if isinstance(other, int) and not isinstance(other, bool):
            return self.scale(other)
        return NotImplemented

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int) and not isinstance(other, bool):
            try:
                other = self.from_int(other)
            except TypeError:
                return False
        if type(other) is not type(self):
            return NotImplemented
        return dict(self._terms) == dict(other._terms)  # type: ignore[attr-defined]

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((type(self).__name__, frozenset(self._terms.items())))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[tuple[K, int]]:
        return iter(self.items())

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self})"

    def _render_key(self, key: K) -> str:
        return str(key)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces: list[str] = []
        for key, coefficient in self.items():
            label = self._render_key(key)
            is_unit = label == "1"
            magnitude = abs(coefficient)
            if is_unit:
                body = str(magnitude)
            elif magnitude == 1:
                body = label
            else:
                body = f"{magnitude} {label}"
            if not pieces:
                pieces.append(f"-{body}" if coefficient < 0 else body)
            else:
                pieces.append(f"- {body}" if coefficient < 0 else f"+ {body}")
        return " ".join(pieces)


def _render_word(alpha: Composition) -> str:
    if not alpha.parts:
        return "1"
    return ".".join(f"Z{part}" for part in alpha.parts)


class NSymmElement(LinearCombination[Composition]):
    """Element of NSymm in the basis of Z-words."""

    __slots__ = ()

    @classmethod
    def _coerce_key(cls, key: Any) -> Composition:
        return as_composition(key)

    @staticmethod
    def _sort_key(key: Composition) -> tuple[int, int]:
        return key.sort_key

    @classmethod
    def from_int(cls, value: int) -> "NSymmElement":
        """Integer multiple of the unit."""
        return cls._from_clean({EMPTY: value} if value else {})

    @classmethod
    def one(cls) -> "NSymmElement":
        """The unit ``Z_0 = 1``."""
        return cls.from_int(1)

    @classmethod
    def word(cls, alpha: "Composition | Iterable[int]", coefficient: int = 1) -> "NSymmElement":
        """The word ``Z_{a_1} ... Z_{a_r}`` times ``coefficient``."""
        return cls({as_composition(alpha): coefficient})

    @classmethod
    def generator(cls, i: int) -> "NSymmElement":
        """The generator ``Z_i``; ``Z_0`` is the unit."""
        if i == 0:
            return cls.one()
        return cls.word((i,))

    @property
    def max_weight(self) -> int:
        """Largest weight of a composition in the support (0 for zero)."""
        return max((alpha.weight for alpha in self._terms), default=0)

    def homogeneous_component(self, n: int) -> "NSymmElement":
        """The weight-``n`` part of this element."""
        return self._from_clean({a: c for a, c in self._terms.items() if a.weight == n})

    def __mul__(self, other: Any) -> "NSymmElement":
        if isinstance(other, NSymmElement):
            return nsymm_multiply(self, other)
        return super().__mul__(other)

    def _render_key(self, key: Composition) -> str:
        return _render_word(key)


class QSymmElement(LinearCombination[Composition]):
    """Element of QSymm in the monomial basis ``M_alpha``."""

    __slots__ = ()

    @classmethod
    def _coerce_key(cls, key: Any) -> Composition:
        return as_composition(key)

    @staticmethod
    def _sort_key(key: Composition) -> tuple[int, int]:
        return key.sort_key

    @classmethod
    def from_int(cls, value: int) -> "QSymmElement":
        """Integer multiple of ``M_()``."""
        return cls._from_clean({EMPTY: value} if value else {})

    @classmethod
    def one(cls) -> "QSymmElement":
        """The unit ``M_()``."""
        return cls.from_int(1)

    @classmethod
    def monomial(cls, alpha: "Composition | Iterable[int]", coefficient: int = 1) -> "QSymmElement":
        """The monomial quasisymmetric function ``M_alpha`` times ``coefficient``."""
        return cls({as_composition(alpha): coefficient})

    def _render_key(self, key: Composition) -> str:
        return f"M({key})" if key.parts else "1"


class TensorElement(LinearCombination[tuple[Composition, Composition]]):
    """Element of a tensor square, keyed by pairs of compositions.

    Multiplication is componentwise concatenation, which is the product of
    NSymm ⊗ NSymm. The same container holds QSymm ⊗ QSymm values, for which
    only the linear structure is used.
    """

    __slots__ = ()

    # Lexicographic on the part tuples, descending: Z2⊗1, Z1⊗Z1, 1⊗Z2.
    _descending: ClassVar[bool] = True

    @classmethod
    def _coerce_key(cls, key: Any) -> tuple[Composition, Composition]:
        left, right = key
        return (as_composition(left), as_composition(right))

    @staticmethod
    def _sort_key(key: tuple[Composition, Composition]) -> Any:
        return (key[0].parts, key[1].parts)

    @classmethod
    def from_int(cls, value: int) -> "TensorElement":
        """Integer multiple of ``1⊗1``."""
        return cls._from_clean({(EMPTY, EMPTY): value} if value else {})

    @classmethod
    def one(cls) -> "TensorElement":
        """The unit ``1⊗1``."""
        return cls.from_int(1)

    @classmethod
    def pure(cls, left: "Composition | Iterable[int]", right: "Composition | Iterable[int]", coefficient: int = 1) -> "TensorElement":
        """The pure tensor ``Z_left ⊗ Z_right`` times ``coefficient``."""
        return cls({(as_composition(left), as_composition(right)): coefficient})

    @classmethod
    def left_embed(cls, a: NSymmElement) -> "TensorElement":
        """``a ↦ a⊗1``."""
        return cls._from_clean({(alpha, EMPTY): c for alpha, c in a.terms.items()})

    @classmethod
    def right_embed(cls, a: NSymmElement) -> "TensorElement":
        """``a ↦ 1⊗a``."""
        return cls._from_clean({(EMPTY, alpha): c for alpha, c in a.terms.items()})

    def __mul__(self, other: Any) -> "TensorElement":
        if isinstance(other, TensorElement):
            product: dict[tuple[Composition, Composition], int] = {}
            for (a1, b1), c1 in self._terms.items():
                for (a2, b2), c2 in other._terms.items():
                    key = (a1 + a2, b1 + b2)
                    product[key] = product.get(key, 0) + c1 * c2
            return self._from_clean({k: c for k, c in product.items() if c})
        return super().__mul__(other)

    def _render_key(self, key: tuple[Composition, Composition]) -> str:
        left, right = key
        return f"{_render_word(left)}⊗{_render_word(right)}"


def nsymm_multiply(a: NSymmElement, b: NSymmElement) -> NSymmElement:
    """Bilinear extension of concatenation of compositions."""
    product: dict[Composition, int] = {}
    for alpha, c1 in a.terms.items():
        for beta, c2 in b.terms.items():
            key = alpha + beta
            product[key] = product.get(key, 0) + c1 * c2
    return NSymmElement._from_clean({k: c for k, c in product.items() if c})


def pairing(a: NSymmElement, q: QSymmElement) -> int:
    """Dual pairing with ``<Z_alpha, M_beta> = 1`` if ``alpha == beta`` else 0."""
    return sum(c * q.terms.get(alpha, 0) for alpha, c in a.terms.items())


def tensor_pairing(t: TensorElement, s: TensorElement) -> int:
    """Factorwise pairing of NSymm ⊗ NSymm with QSymm ⊗ QSymm."""
    return sum(c * s.terms.get(key, 0) for key, c in t.terms.items())


def deconcatenation_coproduct(q: QSymmElement) -> TensorElement:
    """Coproduct of QSymm splitting each ``M_gamma`` at every part boundary."""
    result: dict[tuple[Composition, Composition], int] = {}
    for gamma, c in q.terms.items():
        for prefix, suffix in gamma.splits():
            key = (prefix, suffix)
            result[key] = result.get(key, 0) + c
    return TensorElement._from_clean({k: c for k, c in result.items() if c})


def counit_nsymm(a: NSymmElement) -> int:
    """Coefficient of the empty composition."""
    return a.terms.get(EMPTY, 0)


def counit_tensor_left(t: TensorElement) -> NSymmElement:
    """``(ε ⊗ id)``: keep terms whose left factor is the unit."""
    return NSymmElement((right, c) for (left, right), c in t.terms.items() if not left.parts)


def counit_tensor_right(t: TensorElement) -> NSymmElement:
    """``(id ⊗ ε)``: keep terms whose right factor is the unit."""
    return NSymmElement((left, c) for (left, right), c in t.terms.items() if not right.parts)

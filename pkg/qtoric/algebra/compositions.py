"""Compositions (ordered partitions) and their canonical enumeration."""

from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from functools import total_ordering

from qtoric.errors import ArgumentError


@total_ordering
@dataclass(frozen=True, slots=True)
class Composition:
    """An ordered sequence of positive integers.

    The empty composition is the unique composition of 0. Compositions are
    ordered canonically by weight and then by the split-set code, the integer
    whose bit ``p - 1`` is set when a part ends at position ``p`` (``p < weight``).
    """

    parts: tuple[int, ...] = ()

    def __post_init__(self):
        """Validate that every part is a positive integer."""
        for part in self.parts:
            if not isinstance(part, int) or isinstance(part, bool) or part < 1:
                raise ArgumentError(f"Composition parts must be positive integers, got {self.parts}")

    @classmethod
    def of(cls, *parts: int) -> "Composition":
        """Build a composition from its parts."""
        return cls(tuple(parts))

    @classmethod
    def parse(cls, text: str) -> "Composition":
        """Parse a comma-separated list of positive integers.

        Args:
            text: Text such as ``"2,1"``; the empty string is the empty composition

        Returns:
            The parsed composition

        Raises:
            ArgumentError: If a part is not a positive integer
        """
        text = text.strip()
        if not text:
            return cls()
        try:
            parts = tuple(int(piece) for piece in text.split(","))
        except ValueError:
            raise ArgumentError(f"Invalid composition '{text}': expected comma-separated integers")
        return cls(parts)

    @classmethod
    def from_code(cls, weight: int, code: int) -> "Composition":
        """Decode a composition of ``weight`` from its split-set code."""
        if weight == 0:
            return cls()
        parts = []
        start = 0
        for position in range(1, weight):
            if code >> (position - 1) & 1:
                parts.append(position - start)
                start = position
        parts.append(weight - start)
        return cls(tuple(parts))

    @property
    def weight(self) -> int:
        """Sum of the parts."""
        return sum(self.parts)

    @property
    def length(self) -> int:
        """Number of parts."""
        return len(self.parts)

    @property
    def code(self) -> int:
        """Split-set code of this composition."""
        code = 0
        position = 0
        for part in self.parts[:-1]:
            position += part
            code |= 1 << (position - 1)
        return code

    @property
    def sort_key(self) -> tuple[int, int]:
        """Canonical ordering key: weight first, then split-set code."""
        return (self.weight, self.code)

    def splits(self) -> Iterator[tuple["Composition", "Composition"]]:
        """Yield all prefix/suffix splits at part boundaries, shortest prefix first."""
        for cut in range(self.length + 1):
            yield Composition(self.parts[:cut]), Composition(self.parts[cut:])

    def __add__(self, other: "Composition") -> "Composition":
        """Concatenate two compositions."""
        if not isinstance(other, Composition):
            return NotImplemented
        return Composition(self.parts + other.parts)

    def __lt__(self, other: "Composition") -> bool:
        if not isinstance(other, Composition):
            return NotImplemented
        return self.sort_key < other.sort_key

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __str__(self) -> str:
        return ",".join(str(part) for part in self.parts)

    def __repr__(self) -> str:
        return f"Composition({self.parts})"


EMPTY = Composition()


def as_composition(value: "Composition | Iterable[int]") -> Composition:
    """Coerce a composition or an iterable of parts to a ``Composition``."""
    if isinstance(value, Composition):
        return value
    return Composition(tuple(value))


def compositions_of(n: int) -> list[Composition]:
    """Enumerate all compositions of ``n`` in canonical order.

    Args:
        n: Non-negative integer weight

    Returns:
        The ``2**(n-1)`` compositions of ``n`` (the empty composition when ``n == 0``),
        ascending by split-set code

    Raises:
        ArgumentError: If ``n`` is negative
    """
    if not isinstance(n, int) or n < 0:
        raise ArgumentError(f"Weight must be a non-negative integer, got {n!r}")
    if n == 0:
        return [EMPTY]
    return [Composition.from_code(n, code) for code in range(1 << (n - 1))]


def compositions_with_length(n: int, length: int) -> list[Composition]:
    """Compositions of ``n`` with exactly ``length`` parts, in canonical order."""
    return [alpha for alpha in compositions_of(n) if alpha.length == length]

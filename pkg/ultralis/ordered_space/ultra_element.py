"""Ultra element module.

Elements of the free Z-module generated by one symbol g(x) for each real x in (0, 1),
ordered lexicographically from the highest generator down.
"""

import enum
import functools
import re
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple, Union

_TERM_PATTERN = re.compile(r"^\s*(-?\d+)\s*\*\s*g\(\s*([^)]+?)\s*\)\s*$")


class Ordering(enum.IntEnum):
    """Result of a three-way comparison."""

    LESS = -1
    EQUAL = 0
    GREATER = 1

    def reverse(self) -> "Ordering":
        """Return the ordering seen from the other operand."""
        return Ordering(-int(self))


@functools.total_ordering
class GeneratorId:
    """A generator index: a real number strictly inside (0, 1)."""

    __slots__ = ("_value",)

    def __init__(self, value: float) -> None:
        """
        Initialize a generator index.

        Args:
            value: Real index in the open interval (0, 1)

        Examples:
            >>> GeneratorId(0.25).value
            0.25
        """
        value = float(value)
        if not 0.0 < value < 1.0:
            raise ValueError(f"Generator index must lie in (0, 1), got {value!r}")
        self._value = value

    @property
    def value(self) -> float:
        """The real index."""
        return self._value

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GeneratorId):
            return NotImplemented
        return self._value == other._value

    def __lt__(self, other: "GeneratorId") -> bool:
        return self._value < other._value

    def __hash__(self) -> int:
        return hash(self._value)

    def __repr__(self) -> str:
        return f"GeneratorId({self._value!r})"


GeneratorLike = Union[GeneratorId, float]


def _as_index(generator: GeneratorLike) -> float:
    if isinstance(generator, GeneratorId):
        return generator.value
    return GeneratorId(generator).value


class UltraElement:
    """Class-based interface for elements of the lexicographically ordered module."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Union[Mapping[GeneratorLike, int], None] = None) -> None:
        """
        Initialize an element from a generator -> coefficient mapping.

        Zero coefficients are dropped, so every element is stored in canonical form
        with its terms sorted by descending generator index.

        Args:
            terms: Mapping from generator (or its real index) to integer coefficient

        Examples:
            >>> UltraElement({0.3: 2, 0.5: -1})
            UltraElement('2*g(0.3)+-1*g(0.5)')
        """
        collected: Dict[float, int] = {}
        for generator, coefficient in (terms or {}).items():
            if int(coefficient) != coefficient:
                raise ValueError(f"Coefficients must be integers, got {coefficient!r}")
            index = _as_index(generator)
            collected[index] = collected.get(index, 0) + int(coefficient)
        self._terms: Tuple[Tuple[float, int], ...] = tuple(
            sorted(
                ((index, coeff) for index, coeff in collected.items() if coeff != 0),
                reverse=True,
            )
        )

    @classmethod
    def zero(cls) -> "UltraElement":
        """Return the additive identity."""
        return cls()

    @classmethod
    def generator(cls, index: GeneratorLike, coefficient: int = 1) -> "UltraElement":
        """Return ``coefficient * g(index)``."""
        return cls({index: coefficient})

    @classmethod
    def _from_sorted(cls, terms: Sequence[Tuple[float, int]]) -> "UltraElement":
        element = cls.__new__(cls)
        element._terms = tuple(terms)
        return element

    @property
    def terms(self) -> Tuple[Tuple[float, int], ...]:
        """Canonical ``(index, coefficient)`` pairs, highest index first."""
        return self._terms

    def coefficient(self, generator: GeneratorLike) -> int:
        """Return the coefficient of a generator (0 when absent)."""
        index = _as_index(generator)
        for term_index, coeff in self._terms:
            if term_index == index:
                return coeff
        return 0

    def degree(self) -> float:
        """Return the largest generator index with a nonzero coefficient (0 for zero)."""
        return self._terms[0][0] if self._terms else 0.0

    def leading_coefficient(self) -> int:
        """Return the coefficient at the degree (0 for zero)."""
        return self._terms[0][1] if self._terms else 0

    def sign(self) -> int:
        """Return +1, -1 or 0 according to the sign of the leading coefficient."""
        lead = self.leading_coefficient()
        return (lead > 0) - (lead < 0)

    def is_zero(self) -> bool:
        """Check whether this is the zero element."""
        return not self._terms

    def add(self, other: "UltraElement") -> "UltraElement":
        """
        Coefficient-wise sum, re-canonicalized.

        Args:
            other: The element to add

        Returns:
            The sum
        """
        left, right = self._terms, other._terms
        merged: List[Tuple[float, int]] = []
        i = j = 0
        while i < len(left) and j < len(right):
            if left[i][0] > right[j][0]:
                merged.append(left[i])
                i += 1
            elif left[i][0] < right[j][0]:
                merged.append(right[j])
                j += 1
            else:
                total = left[i][1] + right[j][1]
                if total != 0:
                    merged.append((left[i][0], total))
                i += 1
                j += 1
        merged.extend(left[i:])
        merged.extend(right[j:])
        return UltraElement._from_sorted(merged)

    def negate(self) -> "UltraElement":
        """Return the additive inverse."""
        return UltraElement._from_sorted([(index, -coeff) for index, coeff in self._terms])

    def compare(self, other: "UltraElement") -> Ordering:
        """
        Three-way lexicographic comparison.

        Both term lists are walked from the highest generator down. A generator present
        on one side only decides by the sign of its coefficient; a shared generator
        decides by the larger coefficient, and equal coefficients move on to the
        remainders.

        Args:
            other: The element to compare against

        Returns:
            Ordering of ``self`` relative to ``other``

        Examples:
            >>> UltraElement.generator(0.9).compare(UltraElement.generator(0.5, 3))
            <Ordering.GREATER: 1>
        """
        left, right = self._terms, other._terms
        i = j = 0
        while True:
            if i == len(left) and j == len(right):
                return Ordering.EQUAL
            if j == len(right) or (i < len(left) and left[i][0] > right[j][0]):
                return Ordering.GREATER if left[i][1] > 0 else Ordering.LESS
            if i == len(left) or right[j][0] > left[i][0]:
                return Ordering.GREATER if right[j][1] < 0 else Ordering.LESS
            if left[i][1] != right[j][1]:
                return Ordering.GREATER if left[i][1] > right[j][1] else Ordering.LESS
            i += 1
            j += 1

    def __add__(self, other: "UltraElement") -> "UltraElement":
        return self.add(other)

    def __neg__(self) -> "UltraElement":
        return self.negate()

    def __sub__(self, other: "UltraElement") -> "UltraElement":
        return self.add(other.negate())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, UltraElement):
            return NotImplemented
        return self._terms == other._terms

    def __lt__(self, other: "UltraElement") -> bool:
        return self.compare(other) is Ordering.LESS

    def __le__(self, other: "UltraElement") -> bool:
        return self.compare(other) is not Ordering.GREATER

    def __gt__(self, other: "UltraElement") -> bool:
        return self.compare(other) is Ordering.GREATER

    def __ge__(self, other: "UltraElement") -> bool:
        return self.compare(other) is not Ordering.LESS

    def __hash__(self) -> int:
        return hash(self._terms)

    def to_text(self) -> str:
        """
        Render in the debug text format, lowest generator first.

        Returns:
            Text such as ``2*g(0.3)+-1*g(0.5)``, or ``0`` for zero
        """
        if not self._terms:
            return "0"
        return "+".join(f"{coeff}*g({index!r})" for index, coeff in reversed(self._terms))

    @classmethod
    def parse(cls, text: str) -> "UltraElement":
        """
        Parse the debug text format produced by :meth:`to_text`.

        Args:
            text: Text such as ``2*g(0.3)+-1*g(0.5)`` or ``0``

        Returns:
            The parsed element
        """
        text = text.strip()
        if text == "0":
            return cls.zero()
        terms: Dict[float, int] = {}
        for chunk in text.split("+"):
            match = _TERM_PATTERN.match(chunk)
            if match is None:
                raise ValueError(f"Malformed term {chunk!r} in {text!r}")
            index = GeneratorId(float(match.group(2))).value
            terms[index] = terms.get(index, 0) + int(match.group(1))
        return cls(terms)

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"UltraElement({self.to_text()!r})"


def add(a: UltraElement, b: UltraElement) -> UltraElement:
    """Return ``a + b``."""
    return a.add(b)


def negate(a: UltraElement) -> UltraElement:
    """Return ``-a``."""
    return a.negate()


def compare(a: UltraElement, b: UltraElement) -> Ordering:
    """Three-way comparison of ``a`` against ``b``."""
    return a.compare(b)


def ultrafat_increment(u: float) -> UltraElement:
    """
    Map a real in (-1, 1) to the ultra-fat increment sgn(u) * g(|u|).

    Args:
        u: Signed uniform value

    Returns:
        The increment, zero when ``u == 0``
    """
    if not -1.0 < u < 1.0:
        raise ValueError(f"Increment source must lie in (-1, 1), got {u!r}")
    if u == 0.0:
        return UltraElement.zero()
    return UltraElement.generator(abs(u), 1 if u > 0 else -1)


def partial_sums(signs: Iterable[int], magnitudes: Iterable[float]) -> List[UltraElement]:
    """
    Build the explicit partial sums S_1..S_n of an ultra-fat walk.

    Args:
        signs: Step signs in {+1, -1}
        magnitudes: Step magnitudes in (0, 1)

    Returns:
        List whose entry k-1 is S_k
    """
    sums: List[UltraElement] = []
    total = UltraElement.zero()
    for sign, magnitude in zip(signs, magnitudes):
        total = total + UltraElement.generator(float(magnitude), int(sign))
        sums.append(total)
    return sums

"""Points of the Boolean hypercube and component bookkeeping.

A point over an ordered list of component labels is stored as an int whose
bit k is the value of the k-th component.  In the textual form the leftmost
character belongs to the first (smallest) label, so "100" over components
(1, 2, 3) is the point with component 1 on and code 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator


class FormatError(ValueError):
    """Raised when a textual point, network or graph cannot be parsed."""


def check_components(components: tuple[str, ...]) -> None:
    if not components:
        raise ValueError("component list must be nonempty")
    seen = set()
    for label in components:
        if not label or any(ch.isspace() for ch in label) or label.startswith("#"):
            raise ValueError(f"bad component label {label!r}")
        if label in seen:
            raise ValueError(f"duplicate component label {label!r}")
        seen.add(label)


def component_mask(components: tuple[str, ...], members: Iterable[str]) -> int:
    """Bitmask of the given labels, validated against the component list."""
    index = {label: k for k, label in enumerate(components)}
    mask = 0
    for label in members:
        try:
            mask |= 1 << index[label]
        except KeyError:
            raise ValueError(f"unknown component {label!r}") from None
    return mask


def mask_labels(components: tuple[str, ...], mask: int) -> tuple[str, ...]:
    return tuple(label for k, label in enumerate(components) if mask >> k & 1)


@dataclass(frozen=True)
class Point:
    """A vertex of the hypercube over an ordered component list."""

    components: tuple[str, ...]
    code: int

    def __post_init__(self) -> None:
        check_components(self.components)
        if not 0 <= self.code < 1 << len(self.components):
            raise ValueError(f"code {self.code} out of range for width {len(self.components)}")

    @property
    def width(self) -> int:
        return len(self.components)

    @property
    def weight(self) -> int:
        return self.code.bit_count()

    @property
    def bits(self) -> str:
        return format_code(self.code, len(self.components))

    def __str__(self) -> str:
        return self.bits

    def value(self, label: str) -> int:
        return self.code >> _index_of(self.components, label) & 1

    def ones(self) -> frozenset[str]:
        """Set of components that are on (the support of the point)."""
        return frozenset(mask_labels(self.components, self.code))


def _index_of(components: tuple[str, ...], label: str) -> int:
    try:
        return components.index(label)
    except ValueError:
        raise ValueError(f"unknown component {label!r}") from None


def format_code(code: int, width: int) -> str:
    return "".join("1" if code >> k & 1 else "0" for k in range(width))


def parse_code(text: str, width: int) -> int:
    if len(text) != width or any(ch not in "01" for ch in text):
        raise FormatError(f"expected {width} bits, got {text!r}")
    return sum(1 << k for k, ch in enumerate(text) if ch == "1")


def parse_point(text: str, components: tuple[str, ...]) -> Point:
    return Point(components, parse_code(text, len(components)))


def all_points(components: tuple[str, ...]) -> Iterator[Point]:
    for code in range(1 << len(components)):
        yield Point(components, code)


def _same_space(x: Point, y: Point) -> None:
    if x.components != y.components:
        raise ValueError("points live over different component lists")


def xor(x: Point, y: Point) -> Point:
    _same_space(x, y)
    return Point(x.components, x.code ^ y.code)


def hamming(x: Point, y: Point) -> int:
    """Hamming distance, the number of components on which x and y differ."""
    _same_space(x, y)
    return (x.code ^ y.code).bit_count()


def basis_point(components: tuple[str, ...], label: str) -> Point:
    """e_label: the point that is on exactly at the given component."""
    return Point(components, 1 << _index_of(components, label))


def set_component(x: Point, label: str, value: int) -> Point:
    if value not in (0, 1):
        raise ValueError(f"component value must be 0 or 1, got {value!r}")
    bit = 1 << _index_of(x.components, label)
    return Point(x.components, x.code | bit if value else x.code & ~bit)


def restrict(x: Point, members: Iterable[str]) -> Point:
    """x|_I: keep only the components in I (nonempty), in their original order."""
    mask = component_mask(x.components, members)
    if mask == 0:
        raise ValueError("cannot restrict to an empty component set")
    return Point(mask_labels(x.components, mask), gather_bits(x.code, mask))


def drop(x: Point, members: Iterable[str]) -> Point:
    """x_{-I}: remove the components in I (a proper subset of the labels)."""
    mask = component_mask(x.components, members)
    keep = ((1 << len(x.components)) - 1) & ~mask
    if keep == 0:
        raise ValueError("cannot drop every component")
    return Point(mask_labels(x.components, keep), gather_bits(x.code, keep))


def gather_bits(code: int, mask: int) -> int:
    """Compress the bits of code selected by mask into the low-order positions."""
    out = pos = 0
    while mask:
        low = mask & -mask
        if code & low:
            out |= 1 << pos
        pos += 1
        mask ^= low
    return out


def scatter_bits(code: int, mask: int) -> int:
    """Inverse of gather_bits: spread low-order bits of code onto mask positions."""
    out = 0
    while mask:
        low = mask & -mask
        if code & 1:
            out |= low
        code >>= 1
        mask ^= low
    return out


def neighbor_set(points: Iterable[Point]) -> frozenset[Point]:
    """N(X): every point at Hamming distance exactly 1 from some point of X."""
    points = list(points)
    if not points:
        return frozenset()
    components = points[0].components
    for p in points:
        if p.components != components:
            raise ValueError("points live over different component lists")
    width = len(components)
    out = {Point(components, p.code ^ (1 << k)) for p in points for k in range(width)}
    return frozenset(out)


def even_codes(width: int) -> frozenset[int]:
    return frozenset(c for c in range(1 << width) if c.bit_count() % 2 == 0)


def odd_codes(width: int) -> frozenset[int]:
    return frozenset(c for c in range(1 << width) if c.bit_count() % 2 == 1)

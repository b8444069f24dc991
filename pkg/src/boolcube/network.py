"""Boolean networks as explicit truth tables.

A network f over components (v_1, ..., v_n) maps each point of the hypercube
to a point of the same hypercube.  The table is the ground truth: entry
table[x] is the code of f at the point with code x.  All classification below
is in terms of the conjugate network x -> f(x) xor x, whose zeros are exactly
the fixed points of f.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Iterable, Iterator, TypeVar

from .hypercube import (
    FormatError,
    Point,
    check_components,
    component_mask,
    format_code,
    parse_code,
)

T = TypeVar("T")

_MISSING = object()


class WidthCapError(ValueError):
    """Raised when an operation would exceed its documented width cap."""


def cached(obj: object, key: str, compute: Callable[[], T]) -> T:
    """Memoize per instance: derived data lives and dies with the network."""
    d = obj.__dict__
    value = d.get(key, _MISSING)
    if value is _MISSING:
        value = d[key] = compute()
    return value


class ParityClass(Enum):
    EVEN = "Even"
    ODD = "Odd"
    NEITHER = "Neither"


@dataclass(frozen=True)
class BooleanNetwork:
    """A map f: {0,1}^V -> {0,1}^V given by its full table."""

    components: tuple[str, ...]
    table: tuple[int, ...]

    def __post_init__(self) -> None:
        check_components(self.components)
        size = 1 << len(self.components)
        if len(self.table) != size:
            raise ValueError(f"table must have {size} entries, got {len(self.table)}")
        for value in self.table:
            if not 0 <= value < size:
                raise ValueError(f"table value {value} out of range")

    @property
    def width(self) -> int:
        return len(self.components)

    def point(self, code: int) -> Point:
        return Point(self.components, code)


def default_components(n: int) -> tuple[str, ...]:
    return tuple(str(i) for i in range(1, n + 1))


def evaluate(f: BooleanNetwork, x: Point) -> Point:
    if x.components != f.components:
        raise ValueError("point components do not match the network")
    return Point(f.components, f.table[x.code])


def conjugate(f: BooleanNetwork) -> BooleanNetwork:
    """The network x -> f(x) xor x; its fixed-point-free zeros drive everything."""
    return BooleanNetwork(f.components, tuple(v ^ x for x, v in enumerate(f.table)))


def conjugate_codes(f: BooleanNetwork) -> tuple[int, ...]:
    return cached(f, "_conj_codes", lambda: tuple(v ^ x for x, v in enumerate(f.table)))


def fixed_point_codes(f: BooleanNetwork) -> tuple[int, ...]:
    return cached(
        f, "_fixed_codes", lambda: tuple(x for x, v in enumerate(f.table) if v == x)
    )


def fixed_points(f: BooleanNetwork) -> tuple[Point, ...]:
    return tuple(Point(f.components, x) for x in fixed_point_codes(f))


def is_self_dual(f: BooleanNetwork) -> bool:
    """f(x xor 1) == f(x) xor 1 for the all-ones point 1."""

    def compute() -> bool:
        table = f.table
        full = len(table) - 1
        return all(table[x ^ full] == table[x] ^ full for x in range(len(table) // 2 or 1))

    return cached(f, "_self_dual", compute)


def parity_class(f: BooleanNetwork) -> ParityClass:
    """Even (odd) when the conjugate's image is exactly the even (odd) points.

    Containment is not enough: the image must cover the whole parity class,
    which pins its size to half the cube.
    """

    def compute() -> ParityClass:
        image = {v ^ x for x, v in enumerate(f.table)}
        if 2 * len(image) == len(f.table):
            parities = {c.bit_count() & 1 for c in image}
            if parities == {0}:
                return ParityClass.EVEN
            if parities == {1}:
                return ParityClass.ODD
        return ParityClass.NEITHER

    return cached(f, "_parity", compute)


def eosd_class(f: BooleanNetwork) -> ParityClass | None:
    """ParityClass.EVEN/ODD for even-/odd-self-dual networks, else None."""
    p = parity_class(f)
    if p is ParityClass.NEITHER or not is_self_dual(f):
        return None
    return p


def is_eosd(f: BooleanNetwork) -> bool:
    return eosd_class(f) is not None


def is_non_expansive(f: BooleanNetwork) -> bool:
    """d(f(x), f(y)) <= d(x, y); adjacent pairs suffice by the triangle inequality."""

    def compute() -> bool:
        table = f.table
        for x in range(len(table)):
            fx = table[x]
            y = x
            while y:
                low = y & -y
                if (fx ^ table[x ^ low]).bit_count() > 1:
                    return False
                y ^= low
        return True

    return cached(f, "_non_expansive", compute)


def is_conjugate_bijective(f: BooleanNetwork) -> bool:
    def compute() -> bool:
        table = f.table
        return len({v ^ x for x, v in enumerate(table)}) == len(table)

    return cached(f, "_conj_bijective", compute)


def xor_output(f: BooleanNetwork, members: Iterable[str]) -> BooleanNetwork:
    """x -> f(x) xor e_I: flips the listed output components everywhere."""
    mask = component_mask(f.components, members)
    return BooleanNetwork(f.components, tuple(v ^ mask for v in f.table))


def translate(f: BooleanNetwork, members: Iterable[str]) -> BooleanNetwork:
    """x -> f(x xor e_I) xor e_I: conjugation by the translation along e_I."""
    mask = component_mask(f.components, members)
    table = f.table
    return BooleanNetwork(
        f.components, tuple(table[x ^ mask] ^ mask for x in range(len(table)))
    )


def network_from_index(n: int, index: int, components: tuple[str, ...] | None = None) -> BooleanNetwork:
    """Decode a table from an integer: component block c holds f(c), low bits first."""
    if components is None:
        components = default_components(n)
    size = 1 << n
    mask = size - 1
    if not 0 <= index < 1 << (n * size):
        raise ValueError(f"network index {index} out of range for width {n}")
    return BooleanNetwork(components, tuple(index >> (c * n) & mask for c in range(size)))


def network_index(f: BooleanNetwork) -> int:
    n = f.width
    return sum(v << (c * n) for c, v in enumerate(f.table))


def enumerate_networks(n: int, components: tuple[str, ...] | None = None) -> Iterator[BooleanNetwork]:
    """All 2^(n 2^n) networks of width n <= 3 in ascending table-index order."""
    if n > 3:
        raise WidthCapError(f"exhaustive enumeration is capped at width 3, got {n}")
    for index in range(1 << (n << n)):
        yield network_from_index(n, index, components)


def random_network(n: int, seed: int, components: tuple[str, ...] | None = None) -> BooleanNetwork:
    """The width-n network drawn from a fresh PRNG with the given seed."""
    index = random.Random(seed).getrandbits(n << n)
    return network_from_index(n, index, components)


def identity_network(n: int) -> BooleanNetwork:
    return BooleanNetwork(default_components(n), tuple(range(1 << n)))


def negation_network(n: int) -> BooleanNetwork:
    full = (1 << n) - 1
    return BooleanNetwork(default_components(n), tuple(x ^ full for x in range(1 << n)))


def constant_network(n: int, code: int) -> BooleanNetwork:
    return BooleanNetwork(default_components(n), tuple(code for _ in range(1 << n)))


def parse_bn(text: str) -> BooleanNetwork:
    """Parse the .bn format: a components line, then one row per input point.

    Rows may appear in any order; missing, duplicate or malformed rows are
    rejected.  '#' starts a comment.
    """
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    if not lines:
        raise FormatError("empty network description")
    head = lines[0].split()
    if head[0] != "components" or len(head) < 2:
        raise FormatError("first line must be: components <label> <label> ...")
    components = tuple(head[1:])
    try:
        check_components(components)
    except ValueError as exc:
        raise FormatError(str(exc)) from None
    n = len(components)
    size = 1 << n
    if len(lines) - 1 != size:
        raise FormatError(f"expected {size} table rows, got {len(lines) - 1}")
    table: list[int | None] = [None] * size
    for line in lines[1:]:
        parts = line.split()
        if len(parts) != 3 or parts[1] != "->":
            raise FormatError(f"bad table row {line!r}")
        src = parse_code(parts[0], n)
        if table[src] is not None:
            raise FormatError(f"duplicate table row for input {parts[0]}")
        table[src] = parse_code(parts[2], n)
    return BooleanNetwork(components, tuple(table))  # type: ignore[arg-type]


def render_bn(f: BooleanNetwork) -> str:
    """Canonical .bn text: rows in ascending input-code order."""
    n = f.width
    lines = ["components " + " ".join(f.components)]
    lines.extend(
        f"{format_code(x, n)} -> {format_code(v, n)}" for x, v in enumerate(f.table)
    )
    return "\n".join(lines) + "\n"


def load_bn(path: str) -> BooleanNetwork:
    with open(path, "r", encoding="utf-8") as handle:
        return parse_bn(handle.read())

"""Partitions drawn column-first: parts are the column lengths of the diagram.

A partition is a plain tuple of weakly decreasing positive integers
(trailing zeros stripped, empty tuple = zero partition).  Rows are
numbered 1 from the top, columns 1 from the left; box (r, c) belongs to
the diagram of ``p`` iff r <= p[c-1].  Row lengths are obtained through
``transpose``.
"""

from typing import Iterable, Iterator, NamedTuple


class NotContained(ValueError):
    """Raised when a skew diagram beta \\ gamma is requested with gamma not inside beta."""


class InvalidShape(ValueError):
    """Raised for (alpha, beta, gamma) triples violating containment or weight."""


def partition(parts: Iterable[int]) -> tuple:
    """Return the canonical tuple form of ``parts``, validating monotonicity."""
    t = tuple(int(x) for x in parts)
    while t and t[-1] == 0:
        t = t[:-1]
    for i, x in enumerate(t):
        if x < 1:
            raise ValueError(f"partition parts must be positive, got {t}")
        if i > 0 and t[i - 1] < x:
            raise ValueError(f"partition parts must be weakly decreasing, got {t}")
    return t


def is_partition(parts) -> bool:
    try:
        partition(parts)
    except ValueError:
        return False
    return True


def weight(p: tuple) -> int:
    return sum(p)


def part(p: tuple, i: int) -> int:
    """The i-th part (1-indexed); missing parts read as 0."""
    return p[i - 1] if 1 <= i <= len(p) else 0


def transpose(p: tuple) -> tuple:
    """Row lengths of the diagram: result[r-1] = #{c : p[c-1] >= r}."""
    if not p:
        return ()
    out = []
    for r in range(1, p[0] + 1):
        out.append(sum(1 for x in p if x >= r))
    return tuple(out)


def contains(outer: tuple, inner: tuple) -> bool:
    """Componentwise containment: inner[i] <= outer[i] for all i."""
    if len(inner) > len(outer):
        return False
    return all(inner[i] <= outer[i] for i in range(len(inner)))


def skew_boxes(beta: tuple, gamma: tuple) -> list:
    """Boxes of beta \\ gamma in row-major order (top row first, left to right)."""
    if not contains(beta, gamma):
        raise NotContained(f"{gamma} is not contained in {beta}")
    rows = transpose(beta)
    grows = transpose(gamma)
    boxes = []
    for r in range(1, len(rows) + 1):
        lo = grows[r - 1] if r <= len(grows) else 0
        for c in range(lo + 1, rows[r - 1] + 1):
            boxes.append((r, c))
    return boxes


def is_horizontal_strip(beta: tuple, gamma: tuple) -> bool:
    """True iff every column of beta \\ gamma holds at most one box."""
    if not contains(beta, gamma):
        raise NotContained(f"{gamma} is not contained in {beta}")
    return all(beta[c] - part(gamma, c + 1) <= 1 for c in range(len(beta)))


class Shape(NamedTuple):
    """Shape triple (alpha, beta, gamma): content alpha on the skew diagram beta \\ gamma."""

    alpha: tuple
    beta: tuple
    gamma: tuple


def shape(alpha, beta, gamma) -> Shape:
    """Validated shape triple; raises InvalidShape on containment/weight failure."""
    a, b, g = partition(alpha), partition(beta), partition(gamma)
    if not contains(b, g):
        raise InvalidShape(f"gamma={g} not contained in beta={b}")
    if weight(a) + weight(g) != weight(b):
        raise InvalidShape(f"|alpha|+|gamma| != |beta| for {(a, b, g)}")
    return Shape(a, b, g)


def parse_partition(text: str) -> tuple:
    """Parse '5,3,2' or the digit shorthand '532' (parts <= 9); '' is the zero partition."""
    text = text.strip()
    if not text:
        return ()
    if "," in text:
        return partition(int(x) for x in text.split(","))
    if not text.isdigit() or "0" in text:
        raise ValueError(f"cannot parse partition {text!r}; use comma form for parts >= 10")
    return partition(int(ch) for ch in text)


def format_partition(p: tuple) -> str:
    return ",".join(str(x) for x in p)


def parse_shape(text: str) -> Shape:
    """Parse 'alpha/beta/gamma', each component in parse_partition syntax."""
    pieces = text.split("/")
    if len(pieces) != 3:
        raise ValueError(f"shape must have three '/'-separated components, got {text!r}")
    return shape(*(parse_partition(x) for x in pieces))


def format_shape(s: Shape) -> str:
    return "/".join(format_partition(p) for p in s)


def partitions_of(n: int) -> Iterator[tuple]:
    """All partitions of n, in reverse lexicographic order."""
    if n == 0:
        yield ()
        return

    def rec(remaining, maxpart, prefix):
        if remaining == 0:
            yield prefix
            return
        for x in range(min(remaining, maxpart), 0, -1):
            yield from rec(remaining - x, x, prefix + (x,))

    yield from rec(n, n, ())


def subdiagrams(beta: tuple) -> Iterator[tuple]:
    """All partitions contained in beta; each appears exactly once."""

    def rec(i, bound, prefix):
        # choosing no part at position i terminates the partition
        yield prefix
        if i == len(beta):
            return
        for x in range(1, min(bound, beta[i]) + 1):
            yield from rec(i + 1, x, prefix + (x,))

    yield from rec(0, beta[0] if beta else 0, ())

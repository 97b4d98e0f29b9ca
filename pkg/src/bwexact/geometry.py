"""Position geometry for bandwidth layouts: base segments, colors, and
the color order of positions.

Base segments are 0-based: base segment t covers positions
t*(b+1)+1 .. (t+1)*(b+1), clipped to 1..n. The color of a position is
its 1-based offset inside its base segment.
"""

from __future__ import annotations

import math
from dataclasses import dataclass


def segment_of(p: int, b: int) -> int:
    """0-based base-segment index of position p."""
    return (p - 1) // (b + 1)


def color_of(p: int, b: int) -> int:
    """Color of position p, in 1..b+1."""
    return (p - 1) % (b + 1) + 1


def num_base_segments(n: int, b: int) -> int:
    return math.ceil(n / (b + 1))


@dataclass(frozen=True)
class Segment:
    """Consecutive positions lo*(b+1)+1 .. hi*(b+1), clipped to 1..n.

    lo may be negative; the clipped set can still be nonempty.
    """

    lo: int
    hi: int
    b: int

    def __post_init__(self) -> None:
        if self.lo >= self.hi:
            raise ValueError(f"segment needs lo < hi, got ({self.lo}, {self.hi})")

    def positions(self, n: int) -> range:
        start = max(self.lo * (self.b + 1) + 1, 1)
        stop = min(self.hi * (self.b + 1), n)
        return range(start, stop + 1)

    def is_empty(self, n: int) -> bool:
        return len(self.positions(n)) == 0

    @property
    def width(self) -> int:
        return self.hi - self.lo

    def contains_base(self, t: int) -> bool:
        """Whether base segment t lies inside this segment (index level)."""
        return self.lo <= t < self.hi


def segment_positions(s: Segment, n: int) -> set[int]:
    return set(s.positions(n))


@dataclass(frozen=True)
class ColorOrder:
    """Positions 1..n sorted by (color, base segment).

    step_base_segment[k] is the base-segment index of the (k+1)-th
    position in the order; the state search fills positions in exactly
    this order.
    """

    sequence: tuple[int, ...]
    step_base_segment: tuple[int, ...]

    def inverse(self) -> list[int]:
        """inv[p-1] = 0-based rank of position p in the color order."""
        inv = [0] * len(self.sequence)
        for k, p in enumerate(self.sequence):
            inv[p - 1] = k
        return inv


def color_order(n: int, b: int) -> ColorOrder:
    seq = sorted(range(1, n + 1), key=lambda p: (color_of(p, b), segment_of(p, b)))
    return ColorOrder(tuple(seq), tuple(segment_of(p, b) for p in seq))

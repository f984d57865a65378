"""Deterministic random streams for reproducible Monte Carlo runs.

Every random quantity in the engine is drawn from a stream addressed by the
master seed plus a coordinate tuple (label, k1, k2) — e.g. (region_id, month,
sample_index) for transmission sampling, or ("oracle", run_index, 0) for the
epidemic simulator. Because a stream's output depends only on its address,
results are independent of scheduling, thread count and evaluation order.

The scheme is splitmix64 arithmetic throughout:

    state0   = mix64(mix64(mix64(seed ^ fnv1a64(label)) ^ k1) ^ k2)
    output_i = mix64(state0 + (i + 1) * GOLDEN)          for i = 0, 1, 2, ...

with mix64 the splitmix64 finalizer and GOLDEN = 2^64 / phi. A raw 64-bit
output maps to a unit double via (z >> 11) * 2^-53.

The compiled and numpy kernels in resurgence._kernels replicate this integer
arithmetic exactly; this module is the canonical definition. Any change here
must be mirrored there.
"""

from __future__ import annotations

import math

MASK64 = (1 << 64) - 1
GOLDEN = 0x9E3779B97F4A7C15

_FNV_OFFSET = 0xCBF29CE484222325
_FNV_PRIME = 0x100000001B3


def mix64(z: int) -> int:
    """splitmix64 finalizer: a full-avalanche 64-bit mixing function."""
    z &= MASK64
    z ^= z >> 30
    z = (z * 0xBF58476D1CE4E5B9) & MASK64
    z ^= z >> 27
    z = (z * 0x94D049BB133111EB) & MASK64
    z ^= z >> 31
    return z


def fnv1a64(data: bytes) -> int:
    """FNV-1a 64-bit hash; stable across processes (unlike builtin hash)."""
    h = _FNV_OFFSET
    for byte in data:
        h ^= byte
        h = (h * _FNV_PRIME) & MASK64
    return h


def derive_state(seed: int, label: str, k1: int = 0, k2: int = 0) -> int:
    """Initial stream state for the (label, k1, k2) coordinate."""
    s = mix64((seed & MASK64) ^ fnv1a64(label.encode("utf-8")))
    s = mix64(s ^ (k1 & MASK64))
    s = mix64(s ^ (k2 & MASK64))
    return s


def unit_double(z: int) -> float:
    """Map a raw 64-bit output to [0, 1) using the top 53 bits."""
    return (z >> 11) * 2.0**-53


class Stream:
    """Sequential generator over one derived stream.

    Distribution transforms below are the canonical forms mirrored by the
    kernels: uniform is lo + u*(hi-lo); triangular is the inverse CDF with a
    single unit draw.
    """

    __slots__ = ("_state",)

    def __init__(self, state: int):
        self._state = state & MASK64

    @classmethod
    def for_coordinate(cls, seed: int, label: str, k1: int = 0, k2: int = 0) -> "Stream":
        return cls(derive_state(seed, label, k1, k2))

    def next_u64(self) -> int:
        self._state = (self._state + GOLDEN) & MASK64
        return mix64(self._state)

    def next_unit(self) -> float:
        return unit_double(self.next_u64())

    def next_exponential(self) -> float:
        """Standard exponential via inversion; -log(1-u) with u in [0,1)."""
        return -math.log(1.0 - self.next_unit())

    def uniform(self, lo: float, hi: float) -> float:
        u = self.next_unit()
        return lo + u * (hi - lo)

    def triangular(self, lo: float, mode: float, hi: float) -> float:
        if hi == lo:
            return lo
        u = self.next_unit()
        split = (mode - lo) / (hi - lo)
        if u < split:
            return lo + math.sqrt(u * (hi - lo) * (mode - lo))
        return hi - math.sqrt((1.0 - u) * (hi - lo) * (hi - mode))

    def randint(self, lo: int, hi: int) -> int:
        """Integer in [lo, hi] (inclusive); uniform enough for synthesis use."""
        if hi < lo:
            raise ValueError(f"empty integer range [{lo}, {hi}]")
        span = hi - lo + 1
        return lo + int(self.next_unit() * span) % span

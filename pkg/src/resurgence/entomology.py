"""Mosquito-to-human ratio and Monte Carlo parameter sampling.

Four transmission parameters are sampled from configurable literature-based
distributions (point, uniform or triangular):

  alpha  daily human-biting rate (per day)
  b      probability an infective bite infects the human
  r      human recovery rate (per day)
  v      mosquito latent period (days)

The mosquito-to-human ratio m is derived from trap surveillance:
m = mean females per trap-night * expansion factor / population. The
expansion factor is an explicit, overridable assumption (trap catches are an
index of abundance, not a census).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Mapping

from .climate import TemperatureWindow, pre_bloodmeal_delay, window_mortality_rate
from .rng import Stream

PARAM_NAMES = ("alpha", "b", "r", "v")  # also the fixed draw order
_PROBABILITY_PARAMS = frozenset({"b"})

DEFAULT_C = 0.5  # probability a mosquito gets infected biting an infected human

_DIST_RE = re.compile(r"^\s*(point|uniform|triangular)\s*\(([^)]*)\)\s*$")


class InvalidSpec(ValueError):
    pass


class ZeroPopulation(ValueError):
    pass


@dataclass(frozen=True)
class ParamSpec:
    """Distribution for one sampled parameter."""

    name: str
    family: str  # point | uniform | triangular
    args: tuple[float, ...]

    def __post_init__(self):
        if self.name not in PARAM_NAMES:
            raise InvalidSpec(f"unknown parameter {self.name!r}")
        want = {"point": 1, "uniform": 2, "triangular": 3}.get(self.family)
        if want is None:
            raise InvalidSpec(f"{self.name}: unknown family {self.family!r}")
        if len(self.args) != want:
            raise InvalidSpec(
                f"{self.name}: {self.family} takes {want} argument(s), got {len(self.args)}"
            )
        lo, hi = self.support()
        if not lo <= hi:
            raise InvalidSpec(f"{self.name}: bounds out of order {self.args}")
        if self.family == "triangular":
            a, m, b = self.args
            if not a <= m <= b:
                raise InvalidSpec(f"{self.name}: need lo <= mode <= hi, got {self.args}")
        if self.name in _PROBABILITY_PARAMS:
            if lo < 0 or hi > 1:
                raise InvalidSpec(f"{self.name}: probability support must stay in [0,1]")
        elif lo <= 0:
            raise InvalidSpec(f"{self.name}: rates and periods must be positive")

    def support(self) -> tuple[float, float]:
        return (self.args[0], self.args[-1])

    def draw(self, stream: Stream) -> float:
        """One draw; point values consume no stream output."""
        if self.family == "point":
            return self.args[0]
        if self.family == "uniform":
            return stream.uniform(self.args[0], self.args[1])
        return stream.triangular(*self.args)


@dataclass(frozen=True)
class ParameterSample:
    """One Monte Carlo draw plus the window-derived rates."""

    m: float
    alpha: float
    b: float
    r: float
    v: float
    delta: float
    g: float
    c: float = DEFAULT_C


def parse_distribution(name: str, text: str) -> ParamSpec:
    """Parse config syntax like 'uniform(0.2, 0.4)' into a ParamSpec."""
    match = _DIST_RE.match(text)
    if not match:
        raise InvalidSpec(f"{name}: cannot parse distribution {text!r}")
    family, body = match.groups()
    try:
        args = tuple(float(tok) for tok in body.split(","))
    except ValueError:
        raise InvalidSpec(f"{name}: non-numeric argument in {text!r}") from None
    return ParamSpec(name=name, family=family, args=args)


def mosquito_human_ratio(mean_trap_count: float, kappa: float, population: int) -> float:
    """m = females-per-trap-night * expansion factor / population."""
    if population <= 0:
        raise ZeroPopulation(f"population must be positive, got {population}")
    if kappa <= 0:
        raise ValueError(f"expansion factor must be positive, got {kappa}")
    if mean_trap_count < 0:
        raise ValueError(f"trap count must be nonnegative, got {mean_trap_count}")
    return mean_trap_count * kappa / population


def sample_parameters(
    specs: Mapping[str, ParamSpec],
    m: float,
    window: TemperatureWindow,
    stream: Stream,
    c: float = DEFAULT_C,
) -> ParameterSample:
    """Draw one ParameterSample; deterministic for a fixed stream state.

    Draw order is fixed (alpha, b, r, v) so the compiled kernels reproduce
    the exact sequence. The window must be viable (window_mortality_rate
    raises otherwise); non-viable windows are short-circuited upstream.
    """
    missing = [n for n in PARAM_NAMES if n not in specs]
    if missing:
        raise InvalidSpec(f"missing parameter spec(s): {', '.join(missing)}")
    delta = pre_bloodmeal_delay(window.mean_temp)
    g = window_mortality_rate(window)
    drawn = {name: specs[name].draw(stream) for name in PARAM_NAMES}
    return ParameterSample(m=m, delta=delta, g=g, c=c, **drawn)

"""Temperature windowing, spatial interpolation, and the two
temperature-driven entomological quantities.

Each region-month is summarized by a 30-day window of daily mean temperatures
starting on the first Saturday of the month. Two derived rates feed the
transmission model:

  pre-bloodmeal delay   delta(T) = 0.0163*T^2 - 0.95*T + 14.769   [days]
  daily mortality       g(T)     = 1 / (-4.4 + 1.31*T - 0.003*T^2) [per day]

delta is evaluated at the window mean; g takes the maximum over the window's
daily values. The mortality denominator is positive only above ~3.385 C;
colder days are non-viable (no surviving vector) rather than errors.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from datetime import date, timedelta
from typing import Mapping, Sequence

from .model import WINDOW_LENGTH_DAYS, DateWindow, ProjectedPoint, planar_distance

SEASON_MONTHS = tuple(range(4, 12))  # April .. November

# Station closer than this counts as an exact hit for interpolation.
EXACT_HIT_KM = 0.001


class MonthOutOfSeason(ValueError):
    pass


class NoStations(ValueError):
    pass


class MissingDay(ValueError):
    def __init__(self, day: date):
        super().__init__(f"no temperature available for {day.isoformat()}")
        self.day = day


class NonviableTemperature(ValueError):
    pass


class NoViableDay(ValueError):
    pass


@dataclass(frozen=True)
class TemperatureWindow:
    """A window's 30 daily mean temperatures plus their arithmetic mean."""

    window: DateWindow
    daily_temps: tuple[float, ...]
    mean_temp: float


def first_saturday_window(year: int, month: int) -> DateWindow:
    """30-day window starting on the first Saturday of (year, month)."""
    if month not in SEASON_MONTHS:
        raise MonthOutOfSeason(f"month {month} outside the April-November season")
    first = date(year, month, 1)
    offset = (5 - first.weekday()) % 7  # Monday=0 .. Saturday=5
    return DateWindow(first + timedelta(days=offset))


def idw_temperature(
    target: ProjectedPoint,
    stations: Sequence[tuple[ProjectedPoint, float]],
    power: float = 2.0,
) -> float:
    """Inverse-distance-weighted temperature at `target`.

    Weights are d^-power. A station within EXACT_HIT_KM of the target short
    circuits to that station's reading (nearest such station wins), which
    also keeps the weights finite.
    """
    if not stations:
        raise NoStations("no station readings supplied")
    if power <= 0:
        raise ValueError("IDW power must be positive")

    distances = [planar_distance(target, loc) for loc, _ in stations]
    nearest = min(range(len(stations)), key=distances.__getitem__)
    if distances[nearest] < EXACT_HIT_KM:
        return stations[nearest][1]

    num = 0.0
    den = 0.0
    for d, (_, temp) in zip(distances, stations):
        w = d**-power
        num += w * temp
        den += w
    return num / den


def mean_window_temperature(
    window: DateWindow, temps_by_date: Mapping[date, float]
) -> TemperatureWindow:
    """Assemble a TemperatureWindow from per-day temperatures at one target."""
    daily = []
    for day in window.days():
        if day not in temps_by_date:
            raise MissingDay(day)
        daily.append(temps_by_date[day])
    mean = sum(daily) / WINDOW_LENGTH_DAYS
    return TemperatureWindow(window=window, daily_temps=tuple(daily), mean_temp=mean)


def pre_bloodmeal_delay(temp_c: float) -> float:
    """Days before an emerging mosquito takes its first blood meal.

    The quadratic's minimum (~0.926 days near 29.1 C) is positive, but the
    value is clamped at 0 to guard numeric edge cases.
    """
    return max(0.0, 0.0163 * temp_c * temp_c - 0.95 * temp_c + 14.769)


def mortality_denominator(temp_c: float) -> float:
    return -4.4 + 1.31 * temp_c - 0.003 * temp_c * temp_c


def daily_mortality_rate(temp_c: float) -> float:
    """Instantaneous daily death rate; reciprocal of the lifespan quadratic."""
    den = mortality_denominator(temp_c)
    if den <= 0.0:
        raise NonviableTemperature(f"no viable vector at {temp_c} C")
    return 1.0 / den


def window_mortality_rate(window: TemperatureWindow) -> float:
    """Maximum daily mortality over the window; non-viable days are skipped.

    Raises NoViableDay when every day is non-viable; the caller must treat
    the region-window as having zero vectorial capacity.
    """
    best = -math.inf
    for t in window.daily_temps:
        den = mortality_denominator(t)
        if den > 0.0:
            best = max(best, 1.0 / den)
    if best == -math.inf:
        raise NoViableDay(f"window starting {window.window.start} has no viable day")
    return best

"""Core domain records: projected planar geometry, regions, date windows.

Coordinates are projected planar meters on whatever national grid the input
data share; distances are Euclidean. All records are immutable values and
safe to share between threads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from datetime import date, timedelta
from enum import Enum
from typing import Optional

WINDOW_LENGTH_DAYS = 30


class RegionClass(Enum):
    URBAN = "urban"
    RURAL = "rural"


@dataclass(frozen=True)
class ProjectedPoint:
    """Planar position: easting x and northing y, in meters."""

    x: float
    y: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValueError(f"non-finite coordinates ({self.x}, {self.y})")


@dataclass(frozen=True)
class Region:
    """Administrative sub-region; population is the susceptible pool."""

    region_id: str
    year: int
    region_class: RegionClass
    centroid: ProjectedPoint
    altitude_m: float
    population: int
    nearest_larvae_site: Optional[ProjectedPoint] = None


@dataclass(frozen=True)
class DateWindow:
    """A fixed 30-consecutive-day observation window."""

    start: date

    @property
    def end(self) -> date:
        return self.start + timedelta(days=WINDOW_LENGTH_DAYS - 1)

    def days(self) -> list[date]:
        return [self.start + timedelta(days=i) for i in range(WINDOW_LENGTH_DAYS)]

    def __contains__(self, d: date) -> bool:
        return self.start <= d <= self.end


def planar_distance(a: ProjectedPoint, b: ProjectedPoint) -> float:
    """Euclidean distance between projected points, in kilometers."""
    return math.hypot(a.x - b.x, a.y - b.y) / 1000.0


def validate_region(r: Region) -> list[str]:
    """Field-level checks; returns violation messages (empty means ok).

    Uniqueness of region_id per year is a dataset property and is checked by
    the ingest layer, not here.
    """
    violations = []
    if r.population <= 0:
        violations.append("population must be positive")
    if r.altitude_m < 0:
        violations.append("altitude must be nonnegative")
    return violations

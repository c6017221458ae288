"""Driver behavior parameters (IDM car-following + MOBIL lane-changing).

Drivers are described by eight sampled parameters plus the fixed IDM
acceleration exponent. The timid and aggressive presets bound the population;
the normal driver sits exactly half way between them.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

# IDM acceleration exponent. Standard value; fixed for every driver and
# excluded from sampling and filtering.
IDM_DELTA = 4.0

# Order of the sampled parameters in flat-array form (engine rows, particle
# filters, scenario samplers).
THETA_FIELDS = ("v0", "T", "s0", "a", "b", "politeness", "b_safe", "a_thr")


@dataclass(frozen=True)
class BehaviorParams:
    """One driver's latent parameter vector.

    Attributes
    ----------
    v0 : float
        desired speed (m/s)
    T : float
        desired time gap (s)
    s0 : float
        jam distance (m)
    a : float
        maximum acceleration (m/s^2)
    b : float
        comfortable deceleration (m/s^2)
    delta : float
        IDM acceleration exponent (fixed at 4)
    politeness : float
        weight on other vehicles' acceleration changes in the lane-change rule
    b_safe : float
        safe braking limit imposed on a prospective new follower (m/s^2)
    a_thr : float
        acceleration advantage required to start a lane change (m/s^2)
    """

    v0: float
    T: float
    s0: float
    a: float
    b: float
    politeness: float
    b_safe: float
    a_thr: float
    delta: float = IDM_DELTA

    def as_array(self) -> np.ndarray:
        """Sampled parameters as a flat float64 vector in THETA_FIELDS order."""
        return np.array(
            [self.v0, self.T, self.s0, self.a, self.b,
             self.politeness, self.b_safe, self.a_thr],
            dtype=np.float64,
        )

    @classmethod
    def from_array(cls, theta: np.ndarray) -> "BehaviorParams":
        return cls(*(float(v) for v in theta))


TIMID = BehaviorParams(
    v0=27.8, T=2.0, s0=4.0, a=0.8, b=1.0,
    politeness=1.0, b_safe=1.0, a_thr=0.2,
)
AGGRESSIVE = BehaviorParams(
    v0=38.9, T=1.0, s0=0.0, a=2.0, b=3.0,
    politeness=0.0, b_safe=3.0, a_thr=0.0,
)
# Exact midpoint of the timid and aggressive presets. The normal desired
# speed is therefore 33.35 m/s (the half-way construction, not a rounded
# display value).
NORMAL = BehaviorParams(
    v0=33.35, T=1.5, s0=2.0, a=1.4, b=2.0,
    politeness=0.5, b_safe=2.0, a_thr=0.1,
)

# Flat-array form of the population bounds: theta = THETA_LO + u * THETA_SPAN
# maps u in [0, 1] from timid (u = 0) to aggressive (u = 1). Spans are
# negative for the parameters that shrink with aggressiveness.
THETA_LO = TIMID.as_array()
THETA_SPAN = AGGRESSIVE.as_array() - TIMID.as_array()
THETA_LO.setflags(write=False)
THETA_SPAN.setflags(write=False)


def theta_bounds() -> tuple[np.ndarray, np.ndarray]:
    """Per-parameter (low, high) bounds of the population span."""
    hi = np.maximum(THETA_LO, THETA_LO + THETA_SPAN)
    lo = np.minimum(THETA_LO, THETA_LO + THETA_SPAN)
    return lo, hi

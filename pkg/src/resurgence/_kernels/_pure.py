"""Numpy fallback for the hot kernels.

This module and the Cython twin (_core.pyx) implement the same arithmetic in
the same order. The integer stream layer is bit-identical across backends;
float results agree to within an ULP or two wherever exp/log appear (numpy's
vectorized transcendentals are not bit-identical to libm), and the KDE
kernel, which has no transcendentals, is bit-identical. Each backend is
fully deterministic on its own. Stream derivation follows resurgence.rng
(the canonical definition):

    state0   = mix64(parent ^ k)            parent precomputed by the caller
    output_i = mix64(state0 + (i+1)*GOLDEN)

Vectorization notes that keep the twins aligned:
  * uint64 numpy array arithmetic wraps mod 2^64 exactly like the masked
    scalar ops (scalar uint64 ops are avoided: numpy warns on their overflow);
  * np.cumsum accumulates sequentially, so cumsum(x)[-1] equals a left-to-right
    scalar sum and partial pressures match the compiled lazy accumulation;
  * per-cell KDE accumulation is point-major in both twins, so every cell sees
    contributions in the same order.
"""

from __future__ import annotations

import math

import numpy as np

from ..rng import GOLDEN, MASK64, mix64

_GOLDEN = np.uint64(GOLDEN)
_UNIT = 2.0**-53

_MIX1 = np.uint64(0xBF58476D1CE4E5B9)
_MIX2 = np.uint64(0x94D049BB133111EB)
_S30 = np.uint64(30)
_S27 = np.uint64(27)
_S31 = np.uint64(31)
_S11 = np.uint64(11)


def _mix64_vec(z: np.ndarray) -> np.ndarray:
    z = z.copy()
    z ^= z >> _S30
    z *= _MIX1
    z ^= z >> _S27
    z *= _MIX2
    z ^= z >> _S31
    return z


def _golden_multiple(k: int) -> np.uint64:
    return np.uint64((GOLDEN * k) & MASK64)


def _stream_units(state0: int, count: int) -> np.ndarray:
    """Unit doubles output_0..output_{count-1} of the stream at state0."""
    idx = np.arange(1, count + 1, dtype=np.uint64)
    raw = _mix64_vec(np.uint64(state0) + _GOLDEN * idx)
    return (raw >> _S11).astype(np.float64) * _UNIT


# ---------------------------------------------------------------------------
# Monte Carlo transmission sampling
# ---------------------------------------------------------------------------

KIND_POINT = 0
KIND_UNIFORM = 1
KIND_TRIANGULAR = 2


def _transform(kind: int, a0: float, a1: float, a2: float, u):
    if kind == KIND_POINT:
        return a0
    if kind == KIND_UNIFORM:
        return a0 + u * (a1 - a0)
    if a2 == a0:
        return np.full_like(u, a0)
    split = (a1 - a0) / (a2 - a0)
    left = a0 + np.sqrt(u * (a2 - a0) * (a1 - a0))
    right = a2 - np.sqrt((1.0 - u) * (a2 - a0) * (a2 - a1))
    return np.where(u < split, left, right)


def mc_r0_samples(base2, n, kinds, a0, a1, a2, m, delta, g, c, use_delta_model, viable):
    """Vectorial capacity and R0 arrays for n Monte Carlo samples.

    base2 is the stream parent for (seed, region, month); sample i draws from
    the child state mix64(base2 ^ i). Parameter draw order is fixed:
    alpha, b, r, v, with point-valued parameters consuming no draw.
    """
    if not viable:
        return np.zeros(n), np.zeros(n)

    states = _mix64_vec(np.uint64(base2) ^ np.arange(n, dtype=np.uint64))
    values = []
    slot = 0
    for p in range(4):
        if kinds[p] == KIND_POINT:
            values.append(_transform(KIND_POINT, a0[p], a1[p], a2[p], None))
        else:
            raw = _mix64_vec(states + _golden_multiple(slot + 1))
            u = (raw >> _S11).astype(np.float64) * _UNIT
            values.append(_transform(int(kinds[p]), a0[p], a1[p], a2[p], u))
            slot += 1
    alpha, b, r, v = values

    t = delta + v + 1.0 / alpha if use_delta_model else v
    v_cap = m * (alpha * alpha) * np.exp(-g * t) / g
    r0 = v_cap * b * c / r
    if np.ndim(v_cap) == 0:  # all-point specs collapse to scalars
        v_cap = np.full(n, float(v_cap))
        r0 = np.full(n, float(r0))
    return np.asarray(v_cap, dtype=np.float64), np.asarray(r0, dtype=np.float64)


# ---------------------------------------------------------------------------
# Stochastic final-size oracle (Sellke construction)
# ---------------------------------------------------------------------------

def sellke_attack_fractions(base1, n_pop, i0, r0, runs):
    """Per-run attack fractions of the stochastic SIR process.

    Run r uses child state mix64(mix64(base1 ^ r) ^ 0). Draw order per run:
    i0 import infectious durations, n_pop susceptibility thresholds, then one
    duration per local infection (pre-drawn here; the compiled twin draws
    them lazily from the same stream positions).
    """
    scale = r0 / n_pop
    fractions = np.empty(runs)
    for run in range(runs):
        s0 = mix64(mix64(base1 ^ run) ^ 0)
        u = _stream_units(s0, i0 + 2 * n_pop)
        imports = -np.log(1.0 - u[:i0])
        thresholds = np.sort(-np.log(1.0 - u[i0:i0 + n_pop]))
        durations = -np.log(1.0 - u[i0 + n_pop:])

        base = scale * (float(np.cumsum(imports)[-1]) if i0 else 0.0)
        cum = np.cumsum(durations)
        pressure = base + scale * np.concatenate(([0.0], cum[:-1]))
        stalled = np.nonzero(thresholds > pressure)[0]
        k = int(stalled[0]) if stalled.size else n_pop

        frac = (i0 + k) / n_pop
        fractions[run] = 1.0 if frac > 1.0 else frac
    return fractions


# ---------------------------------------------------------------------------
# Kernel density rasterization (quartic kernel)
# ---------------------------------------------------------------------------

def kde_accumulate(xs, ys, ws, ncols, nrows, xll, yll, cellsize, radius):
    """Accumulate weighted quartic-kernel density onto a grid.

    Row 0 is the top (northernmost) row; cell centers sit at
    (xll + (col+0.5)*cellsize, yll + (nrows-row-0.5)*cellsize).
    """
    out = np.zeros((nrows, ncols))
    r2 = radius * radius
    k0 = 3.0 / (math.pi * radius * radius)
    ytop = yll + nrows * cellsize

    for p in range(len(xs)):
        px, py, w = xs[p], ys[p], ws[p]
        wk = w * k0
        c_lo = max(0, int(math.floor((px - radius - xll) / cellsize)) - 1)
        c_hi = min(ncols - 1, int(math.floor((px + radius - xll) / cellsize)) + 1)
        r_lo = max(0, int(math.floor((ytop - (py + radius)) / cellsize)) - 1)
        r_hi = min(nrows - 1, int(math.floor((ytop - (py - radius)) / cellsize)) + 1)
        if c_lo > c_hi or r_lo > r_hi:
            continue
        cx = xll + (np.arange(c_lo, c_hi + 1) + 0.5) * cellsize
        cy = yll + (nrows - np.arange(r_lo, r_hi + 1) - 0.5) * cellsize
        dx = cx[np.newaxis, :] - px
        dy = cy[:, np.newaxis] - py
        u = dx * dx + dy * dy
        t = 1.0 - u / r2
        contrib = np.where(u < r2, wk * (t * t), 0.0)
        out[r_lo:r_hi + 1, c_lo:c_hi + 1] += contrib
    return out

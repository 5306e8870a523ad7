"""Multidimensional quadrant-split correlation.

With M feature columns the horizontal median line becomes the hyperplane
y = y_median, and the vertical cut becomes a separating hyperplane in
feature space. The construction here is fixed: take the Fisher linear
discriminant direction between the feature rows of the two median
classes (y above vs below the median), project every row onto it, and
run the one-dimensional cut sweep on the projected scalar. For M = 1
the direction canonicalizes to +1, so the fit reduces exactly to the
one-dimensional one.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import MultiSample, sample_median
from .errors import ConstantX, ConstantY, InvalidParams, ShortSample, SingularScatter
from .gcorr import _sweep

__all__ = ["HyperplaneFit", "fit_g_multi", "MAX_FEATURES"]

MAX_FEATURES = 16


@dataclass(frozen=True, eq=False)
class HyperplaneFit:
    """Unit normal, projected cut offset, and the achieved omega.

    The separating hyperplane is {x : normal . x = offset}; points with
    normal . x <= offset fall on the left side of the projected sweep.
    """

    normal: np.ndarray
    offset: float
    omega: float
    y_median: float


def _fisher_direction(x1: np.ndarray, x2: np.ndarray) -> np.ndarray:
    """Within-class-scatter-whitened difference of class means."""
    mu1 = x1.mean(axis=0)
    mu2 = x2.mean(axis=0)
    d1 = x1 - mu1
    d2 = x2 - mu2
    scatter = d1.T @ d1 + d2.T @ d2
    diff = mu1 - mu2
    try:
        w = np.linalg.solve(scatter, diff)
        if not np.all(np.isfinite(w)):
            raise np.linalg.LinAlgError
    except np.linalg.LinAlgError:
        # degenerate scatter: regularize instead of aborting a batch run
        m = scatter.shape[0]
        trace = float(np.trace(scatter))
        eps = 1e-9 * (trace / m if trace > 0 else 1.0)
        try:
            w = np.linalg.solve(scatter + eps * np.eye(m), diff)
        except np.linalg.LinAlgError as exc:
            raise SingularScatter("scatter matrix unusable even after regularization") from exc
        if not np.all(np.isfinite(w)):
            raise SingularScatter("scatter matrix unusable even after regularization")
    return w


def fit_g_multi(s: MultiSample) -> HyperplaneFit:
    """Fit the separating hyperplane and report the projected omega."""
    if s.m > MAX_FEATURES:
        raise InvalidParams(f"at most {MAX_FEATURES} feature columns supported, got {s.m}")
    y_median = sample_median(s.ys)
    keep = s.ys != y_median
    rows = s.x_rows[keep]
    ys = s.ys[keep]
    if rows.shape[0] == 0:
        raise ConstantY("every y equals the median; Y is constant")
    if rows.shape[0] < s.m + 2:
        raise ShortSample(
            f"need at least M + 2 = {s.m + 2} rows after tie removal, got {rows.shape[0]}"
        )
    above = ys > y_median
    if not above.any() or above.all():
        raise ConstantY("one median class is empty after tie removal")
    if np.all(rows == rows[0]):
        raise ConstantX("all feature rows are identical")

    w = _fisher_direction(rows[above], rows[~above])
    norm = float(np.linalg.norm(w))
    if norm == 0.0:
        # identical class means: fall back to the most spread feature axis
        spans = rows.max(axis=0) - rows.min(axis=0)
        w = np.zeros(s.m)
        w[int(np.argmax(spans))] = 1.0
    else:
        w = w / norm
        # canonical sign: first nonzero component positive, so M = 1
        # projects onto +x and reduces exactly to the 1-D fit
        first = w[np.flatnonzero(w)[0]]
        if first < 0:
            w = -w

    projected = rows @ w
    if np.all(projected == projected[0]):
        raise ConstantX("projected features carry no variation")
    omega, offset, _, _ = _sweep(projected, ys, y_median)
    w = np.ascontiguousarray(w)
    w.flags.writeable = False
    return HyperplaneFit(normal=w, offset=offset, omega=omega, y_median=y_median)

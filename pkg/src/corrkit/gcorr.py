"""The quadrant-split correlation coefficient omega.

The plane is divided by the horizontal line y = y_median and a vertical
line x = c into four classes::

    C1+ : x >  c and y > y_median        C1- : x <= c and y > y_median
    C2+ : x >  c and y < y_median        C2- : x <= c and y < y_median

For a candidate cut c the objective is the larger of the two diagonal
probability sums, g(c) = max{P(C1+) + P(C2-), P(C1-) + P(C2+)}, and
omega is the maximum of g over all cuts. Boundary points x == c belong
to the left side, exactly as the class conditions are written.

Before fitting, the y median is taken on the original sample and every
point with y exactly equal to it is removed; if that removes everything,
Y is constant and the pair is uncorrelated (omega = 0.5 by convention at
the caller). The same convention applies when X is constant.

The fit sweeps the n-1 midpoints of successive sorted x values plus one
sentinel cut below min(x) (so the "everything on one side" split, whose
objective is exactly 0.5 on balanced classes, is always representable),
maintaining the diagonal counts incrementally. Among equally good cuts
the smallest c wins. The sentinel sits at 2*min(x) - max(x), which maps
exactly under affine rescalings of x.
"""

from __future__ import annotations

import enum
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .core import PairedSample, RngSeed, as_seed, sample_median
from .errors import AllTied, ConstantX, InvalidParams, ShortSample

__all__ = [
    "Diagonal",
    "MedianSide",
    "QuadrantCounts",
    "GCorrFit",
    "SplitPlan",
    "preprocess_ties",
    "g_objective",
    "fit_g",
    "estimate_g",
    "g_predict",
]


class Diagonal(enum.Enum):
    MAIN = "main"  # C1+ with C2-: right side sits above the median
    ANTI = "anti"  # C1- with C2+: right side sits below the median


class MedianSide(enum.Enum):
    ABOVE_MEDIAN = "above_median"
    BELOW_MEDIAN = "below_median"


@dataclass(frozen=True)
class QuadrantCounts:
    c1_plus: int
    c1_minus: int
    c2_plus: int
    c2_minus: int

    @property
    def total(self) -> int:
        return self.c1_plus + self.c1_minus + self.c2_plus + self.c2_minus


@dataclass(frozen=True)
class GCorrFit:
    """Fitted separators and the achieved objective.

    ``dominant_diagonal`` records which diagonal sum attained the max at
    the stored cut (ties report MAIN). ``removed_ties`` counts the points
    dropped because their y equalled the sample median.
    """

    c: float
    y_median: float
    omega: float
    dominant_diagonal: Diagonal
    counts: QuadrantCounts
    removed_ties: int


@dataclass(frozen=True)
class SplitPlan:
    """Seeded specification of repeated train/eval partitions."""

    train_size: int
    eval_size: int
    iterations: int
    seed: RngSeed

    def __post_init__(self) -> None:
        object.__setattr__(self, "seed", as_seed(self.seed))
        if self.train_size < 1 or self.eval_size < 1:
            raise InvalidParams(
                f"train and eval sizes must be >= 1, got "
                f"{self.train_size}/{self.eval_size}"
            )
        if self.iterations < 1:
            raise InvalidParams(f"iterations must be >= 1, got {self.iterations}")


# ---------------------------------------------------------------------------
# preprocessing


def _split_ties(xs: np.ndarray, ys: np.ndarray):
    y_median = sample_median(ys)
    keep = ys != y_median
    removed = int(ys.shape[0] - keep.sum())
    if removed == ys.shape[0]:
        raise AllTied("every y equals the median; Y is constant")
    return xs[keep], ys[keep], removed, y_median


def preprocess_ties(s: PairedSample) -> tuple[PairedSample, int, float]:
    """Drop rows whose y equals the sample median of the original data.

    Returns the reduced sample, the number of removed rows, and the
    median itself. Removing all rows means Y is constant (AllTied); a
    single surviving row cannot form a sample (ShortSample).
    """
    xs, ys, removed, y_median = _split_ties(s.xs, s.ys)
    if xs.shape[0] < 2:
        raise ShortSample("fewer than 2 points remain after tie removal")
    return PairedSample(xs, ys), removed, y_median


# ---------------------------------------------------------------------------
# objective


def _quadrant_counts(
    xs: np.ndarray, ys: np.ndarray, c: float, y_median: float
) -> QuadrantCounts:
    right = xs > c
    above = ys > y_median
    below = ys < y_median
    return QuadrantCounts(
        c1_plus=int(np.sum(right & above)),
        c1_minus=int(np.sum(~right & above)),
        c2_plus=int(np.sum(right & below)),
        c2_minus=int(np.sum(~right & below)),
    )


def _objective_at(
    xs: np.ndarray, ys: np.ndarray, c: float, y_median: float
) -> tuple[float, QuadrantCounts, Diagonal]:
    counts = _quadrant_counts(xs, ys, c, y_median)
    n = xs.shape[0]
    main = counts.c1_plus + counts.c2_minus
    anti = counts.c1_minus + counts.c2_plus
    # points with y == y_median (possible when the median came from a
    # different partition) sit in neither sum but stay in the denominator
    if main >= anti:
        return main / n, counts, Diagonal.MAIN
    return anti / n, counts, Diagonal.ANTI


def g_objective(
    s: PairedSample, c: float, y_median: float
) -> tuple[float, QuadrantCounts, Diagonal]:
    """Evaluate the diagonal objective at one cut.

    On a tie-preprocessed sample the value lies in [0.5, 1] because the
    two diagonal sums are complements.
    """
    return _objective_at(s.xs, s.ys, c, y_median)


# ---------------------------------------------------------------------------
# fitting


def _sweep(xs: np.ndarray, ys: np.ndarray, y_median: float):
    """Optimal cut over sentinel + successive-midpoint candidates.

    Assumes no y equals y_median. Returns (omega, c, diagonal, counts).
    """
    n = xs.shape[0]
    order = np.argsort(xs, kind="stable")
    xs_sorted = xs[order]
    below = ys[order] < y_median
    above = ~below

    n_above = int(above.sum())
    cum_below = np.concatenate(([0], np.cumsum(below)))
    cum_above = np.concatenate(([0], np.cumsum(above)))

    sentinel = 2.0 * xs_sorted[0] - xs_sorted[-1]
    midpoints = 0.5 * (xs_sorted[:-1] + xs_sorted[1:])
    candidates = np.concatenate(([sentinel], midpoints))
    # how many points fall on the left (x <= c) of each candidate
    left = np.concatenate(([0], np.searchsorted(xs_sorted, midpoints, side="right")))

    # p1 = below-median points on the left, p2 = above-median points on the right
    diag_main = cum_below[left] + (n_above - cum_above[left])
    best_num = np.maximum(diag_main, n - diag_main)
    best = int(np.argmax(best_num))  # first max <=> smallest candidate c

    omega = best_num[best] / n
    c = float(candidates[best])
    counts = _quadrant_counts(xs, ys, c, y_median)
    diagonal = Diagonal.MAIN if diag_main[best] >= n - diag_main[best] else Diagonal.ANTI
    return float(omega), c, diagonal, counts


def _fit_arrays(xs: np.ndarray, ys: np.ndarray):
    xs, ys, removed, y_median = _split_ties(xs, ys)
    if xs.shape[0] < 2 or np.all(xs == xs[0]):
        raise ConstantX("x carries no variation after tie removal")
    omega, c, diagonal, counts = _sweep(xs, ys, y_median)
    return omega, c, diagonal, counts, removed, y_median


def fit_g(s: PairedSample) -> GCorrFit:
    """Fit the two separators on the full sample and report omega.

    Equivalent to evaluating :func:`g_objective` at every candidate cut
    and keeping the best (smallest c on ties); the incremental sweep is
    just the fast path.
    """
    omega, c, diagonal, counts, removed, y_median = _fit_arrays(s.xs, s.ys)
    return GCorrFit(
        c=c,
        y_median=y_median,
        omega=omega,
        dominant_diagonal=diagonal,
        counts=counts,
        removed_ties=removed,
    )


# ---------------------------------------------------------------------------
# train/eval estimation


def _estimate_iteration(xs: np.ndarray, ys: np.ndarray, q: int, seed: RngSeed, i: int) -> float:
    perm = seed.rng(i).permutation(xs.shape[0])
    train, evaluation = perm[:q], perm[q:]
    try:
        _, c, _, _, _, y_median = _fit_arrays(xs[train], ys[train])
    except (AllTied, ConstantX):
        # degenerate training partition: uncorrelated for sure
        return 0.5
    g, _, _ = _objective_at(xs[evaluation], ys[evaluation], c, y_median)
    return g


def estimate_g(
    s: PairedSample, plan: SplitPlan, workers: int = 1
) -> tuple[float, float]:
    """Repeated-split estimate of omega.

    Each iteration fits the separators on a fresh training partition and
    scores the objective, with those parameters held fixed, on the
    held-out points (evaluation points whose y equals the training median
    count toward neither diagonal but stay in the denominator). Returns
    the mean and population standard deviation across iterations.

    Per-iteration randomness is derived from (plan.seed, iteration), so
    the result is identical for any ``workers`` count.
    """
    if plan.train_size + plan.eval_size != s.n:
        raise InvalidParams(
            f"plan covers {plan.train_size + plan.eval_size} rows "
            f"but the sample has {s.n}"
        )
    if plan.train_size < 2:
        raise InvalidParams("train_size must be >= 2")
    xs, ys, q = s.xs, s.ys, plan.train_size

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            values = list(
                pool.map(
                    lambda i: _estimate_iteration(xs, ys, q, plan.seed, i),
                    range(plan.iterations),
                )
            )
    else:
        values = [
            _estimate_iteration(xs, ys, q, plan.seed, i)
            for i in range(plan.iterations)
        ]
    arr = np.asarray(values, dtype=np.float64)
    return float(arr.mean()), float(arr.std(ddof=0))


def g_predict(x: float, fit: GCorrFit) -> MedianSide:
    """Predict which side of the y median a response should fall on."""
    right = x > fit.c
    if fit.dominant_diagonal is Diagonal.MAIN:
        return MedianSide.ABOVE_MEDIAN if right else MedianSide.BELOW_MEDIAN
    return MedianSide.BELOW_MEDIAN if right else MedianSide.ABOVE_MEDIAN

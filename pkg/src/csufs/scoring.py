"""Compactness scoring and feature selection.

A feature earns a small score when its values sit in tight local groups
relative to the feature's overall spread: the score is the summed
k-nearest-neighbor distance (over all samples, within that one feature)
divided by the feature's variance. Selection keeps the lowest scores.

Two interchangeable kernels compute the distance sums. The naive kernel
forms every pairwise distance per sample and fully sorts each distance
list, which costs O(n^2 log n) per feature. The optimized kernel sorts the
feature once in descending order; in a sorted vector a sample's k nearest
values can only occupy the k positions on either side, so at most 2k
candidate distances per sample are formed, for O(n log n + n k log k).
"""

from __future__ import annotations

import warnings
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .data import Dataset, FeatureScores, Method, SelectionResult
from .errors import KTooLarge, TooFewSamples
from .preprocess import normalize_samples

DEFAULT_K = 5
DEFAULT_VARIANCE_TOL = 1e-12

MODES = ("optimized", "naive")

# cap on elements in one pairwise-distance block. 16 MB blocks stay cache
# friendly and, more importantly, give every n the same per-block footprint,
# so timings scale with the arithmetic rather than with where the working
# set happens to fall relative to the cache
_BLOCK_ELEMENTS = 2_000_000


@dataclass
class ScoringConfig:
    """Knobs for one scoring pass."""

    k: int = DEFAULT_K
    mode: str = "optimized"
    variance_tol: float = DEFAULT_VARIANCE_TOL

    def __post_init__(self):
        if self.k < 1:
            raise ValueError(f"k must be a positive integer, got {self.k}")
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}, got {self.mode!r}")
        if self.variance_tol <= 0:
            raise ValueError("variance_tol must be positive")


def _require_kernel_args(n: int, k: int) -> None:
    if n < 2:
        raise TooFewSamples(f"need at least 2 samples for distance sums, got {n}")
    if k < 1:
        raise ValueError(f"k must be a positive integer, got {k}")
    if k >= n:
        raise KTooLarge(f"k={k} needs at least k+1={k + 1} samples, got {n}")


def _as_feature(f) -> np.ndarray:
    f = np.ascontiguousarray(f, dtype=np.float64)
    if f.ndim != 1:
        raise ValueError("feature must be one-dimensional")
    return f


def _naive_per_sample(f: np.ndarray, k: int) -> np.ndarray:
    """Each sample's k smallest inter-sample distances, summed small to large."""
    n = f.size
    sums = np.empty(n)
    block = max(1, _BLOCK_ELEMENTS // n)
    for start in range(0, n, block):
        stop = min(start + block, n)
        dist = f[start:stop, np.newaxis] - f[np.newaxis, :]
        np.abs(dist, out=dist)
        dist.sort(axis=1)
        # each sorted row carries one zero for the sample itself; skipping a
        # single leading zero excludes it even when duplicates add more zeros
        sums[start:stop] = dist[:, 1 : k + 1].sum(axis=1)
    return sums


def _window_per_sample(f: np.ndarray, k: int) -> tuple[np.ndarray, np.ndarray]:
    """Per-position kNN sums and candidate counts on a descending copy of f."""
    n = f.size
    g = np.sort(f)[::-1].copy()
    cand = np.full((n, 2 * k), np.inf)  # inf pads offsets that fall off an end
    for t in range(1, k + 1):
        gap = g[: n - t] - g[t:]  # descending order keeps every gap >= 0
        cand[: n - t, t - 1] = gap  # to the t-th following position
        cand[t:, k + t - 1] = gap  # to the t-th preceding position
    counts = np.isfinite(cand).sum(axis=1)
    cand.sort(axis=1)
    sums = cand[:, :k].sum(axis=1)
    return sums, counts


def knn_distance_sum_naive(f, k: int) -> float:
    """Summed k-nearest-neighbor distances via the exhaustive kernel.

    For every sample all n-1 distances to the other samples are formed and
    fully sorted before the k smallest are accumulated.
    """
    f = _as_feature(f)
    _require_kernel_args(f.size, k)
    return float(_naive_per_sample(f, k).sum())


def knn_distance_sum_sorted(f, k: int) -> float:
    """Summed k-nearest-neighbor distances via the sorted-window kernel.

    Returns the same value as knn_distance_sum_naive. The input is left
    untouched; the kernel works on a descending-sorted copy and only forms
    distances to the k positions on either side of each sample.
    """
    f = _as_feature(f)
    _require_kernel_args(f.size, k)
    sums, _ = _window_per_sample(f, k)
    return float(sums.sum())


@dataclass(eq=False)
class KernelTrace:
    """Instrumented kernel run: per-sample sums and formed-distance counts.

    Both arrays follow the original sample order whichever kernel ran.
    """

    total: float
    per_sample: np.ndarray
    candidate_counts: np.ndarray


def knn_distance_trace(f, k: int, mode: str = "optimized") -> KernelTrace:
    """Run one kernel and keep its per-sample workings for inspection."""
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")
    f = _as_feature(f)
    _require_kernel_args(f.size, k)
    n = f.size
    if mode == "naive":
        sums = _naive_per_sample(f, k)
        counts = np.full(n, n - 1, dtype=np.int64)
        return KernelTrace(float(sums.sum()), sums, counts)
    pos_sums, pos_counts = _window_per_sample(f, k)
    # position p in the descending order belongs to original sample order[p];
    # tied values give identical sums, so the stable tie order is harmless
    order = np.argsort(-f, kind="stable")
    sums = np.empty(n)
    counts = np.empty(n, dtype=np.int64)
    sums[order] = pos_sums
    counts[order] = pos_counts
    return KernelTrace(float(pos_sums.sum()), sums, counts)


def feature_variance(f) -> tuple[float, float]:
    """Population variance (divisor n) and mean of one feature."""
    f = _as_feature(f)
    if f.size == 0:
        raise ValueError("feature must be non-empty")
    mu = float(f.mean())
    v = float(np.mean((f - mu) ** 2))
    return v, mu


def compactness_score(d_r: float, v_r: float, variance_tol: float = DEFAULT_VARIANCE_TOL) -> float:
    """Ratio of distance sum to variance; near-constant features score +inf.

    The +inf sentinel ranks constant features after every finite score, so
    they are picked last.
    """
    if v_r > variance_tol:
        return d_r / v_r
    return float("inf")


def score_all_features(X: Dataset, cfg: ScoringConfig | None = None, threads: int = 1) -> FeatureScores:
    """Score every feature of an (already normalized) dataset.

    The result is identical whatever the thread count: features are scored
    independently and written into preallocated per-index slots.
    """
    cfg = cfg or ScoringConfig()
    n, m = X.n_samples, X.n_features
    _require_kernel_args(n, cfg.k)
    kernel = knn_distance_sum_naive if cfg.mode == "naive" else knn_distance_sum_sorted
    d = np.empty(m)
    v = np.empty(m)
    mu = np.empty(m)
    cs = np.empty(m)

    def score_one(r: int) -> None:
        f = X.feature(r)
        d[r] = kernel(f, cfg.k)
        v[r], mu[r] = feature_variance(f)
        cs[r] = compactness_score(d[r], v[r], cfg.variance_tol)

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            list(pool.map(score_one, range(m)))
    else:
        for r in range(m):
            score_one(r)
    return FeatureScores(d=d, v=v, cs=cs, mu=mu, k_used=cfg.k)


def knn_distance_sums(values: np.ndarray, k: int, mode: str = "optimized", threads: int = 1) -> np.ndarray:
    """Distance-sum vector over all columns of a bare matrix.

    Thin per-column wrapper used by the benchmark harness; values must be
    finite, shaped (n, m).
    """
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")
    values = np.asarray(values, dtype=np.float64)
    if values.ndim != 2:
        raise ValueError("values must be a 2-D matrix")
    n, m = values.shape
    _require_kernel_args(n, k)
    kernel = knn_distance_sum_naive if mode == "naive" else knn_distance_sum_sorted
    out = np.empty(m)

    def one(r: int) -> None:
        out[r] = kernel(np.ascontiguousarray(values[:, r]), k)

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            list(pool.map(one, range(m)))
    else:
        for r in range(m):
            one(r)
    return out


def select_features(scores: FeatureScores, d: int, method: Method = Method.CSUFS_OPTIMIZED) -> SelectionResult:
    """Pick the d lowest-scoring feature indices, in ascending score order.

    Ties fall to the lower feature index. Asking for more features than
    exist clamps to all of them with a warning.
    """
    if d < 1:
        raise ValueError(f"d must be a positive integer, got {d}")
    m = scores.n_features
    if d > m:
        warnings.warn(f"requested d={d} features but only {m} exist; selecting all {m}", stacklevel=2)
    order = scores.ranking()
    return SelectionResult(selected=order[: min(d, m)], scores=scores, method=method, d_requested=d)


def csufs(X_raw: Dataset, d: int, cfg: ScoringConfig | None = None, threads: int = 1) -> SelectionResult:
    """Full selection pipeline: normalize samples, score, rank, cut at d."""
    cfg = cfg or ScoringConfig()
    scores = score_all_features(normalize_samples(X_raw), cfg, threads=threads)
    method = Method.CSUFS_NAIVE if cfg.mode == "naive" else Method.CSUFS_OPTIMIZED
    return select_features(scores, d, method=method)

"""Seeded clustering evaluation over selected feature subsets."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .baselines import select_all, select_max_variance
from .data import Dataset, LabelVector, Method
from .errors import LengthMismatch
from .kmeans import DEFAULT_CONV_TOL, DEFAULT_MAX_ITER, kmeans
from .metrics import clustering_accuracy, normalized_mutual_information
from .preprocess import normalize_samples
from .scoring import ScoringConfig, score_all_features

DEFAULT_SEEDS = tuple(range(10))


@dataclass
class EvalConfig:
    """One evaluation protocol: cluster count, seed list, stop rules.

    Reuse the same seed list when comparing selectors so every method sees
    identical clustering initializations.
    """

    n_clusters: int
    seeds: tuple[int, ...] = DEFAULT_SEEDS
    max_iter: int = DEFAULT_MAX_ITER
    conv_tol: float = DEFAULT_CONV_TOL

    def __post_init__(self):
        self.seeds = tuple(int(s) for s in self.seeds)
        if not self.seeds:
            raise ValueError("seeds must be non-empty")
        if self.n_clusters < 1:
            raise ValueError(f"n_clusters must be positive, got {self.n_clusters}")


@dataclass(eq=False)
class EvalReport:
    """Per-seed and averaged clustering agreement for one feature subset."""

    per_seed: list[tuple[int, float, float]]  # (seed, acc, nmi)
    mean_acc: float
    mean_nmi: float
    n_features_used: int
    method: Method

    def __post_init__(self):
        self.per_seed = [(int(s), float(a), float(m)) for s, a, m in self.per_seed]
        self.method = Method(self.method)

    def __eq__(self, other):
        if not isinstance(other, EvalReport):
            return NotImplemented
        return (
            self.per_seed == other.per_seed
            and self.mean_acc == other.mean_acc
            and self.mean_nmi == other.mean_nmi
            and self.n_features_used == other.n_features_used
            and self.method is other.method
        )


def evaluate_selection(
    X_raw: Dataset,
    selected,
    truth: LabelVector,
    cfg: EvalConfig,
    method: Method = Method.ALL_FEATURES,
) -> EvalReport:
    """Cluster the selected columns once per seed and score against truth.

    The matrix is sample-normalized before columns are taken, matching the
    preprocessing the selectors apply. `method` only labels the report.
    """
    indices = np.asarray(selected, dtype=np.int64)
    if indices.ndim != 1 or indices.size == 0:
        raise ValueError("selected must be a non-empty 1-D index list")
    if len(truth) != X_raw.n_samples:
        raise LengthMismatch(f"{len(truth)} labels for {X_raw.n_samples} samples")
    Xn = normalize_samples(X_raw)
    sub = np.ascontiguousarray(Xn.values[:, indices])
    per_seed: list[tuple[int, float, float]] = []
    for seed in cfg.seeds:
        found = kmeans(sub, cfg.n_clusters, seed, max_iter=cfg.max_iter, conv_tol=cfg.conv_tol)
        acc = clustering_accuracy(truth, found)
        nmi = normalized_mutual_information(truth, found)
        per_seed.append((int(seed), acc, nmi))
    return EvalReport(
        per_seed=per_seed,
        mean_acc=float(np.mean([a for _, a, _ in per_seed])),
        mean_nmi=float(np.mean([m for _, _, m in per_seed])),
        n_features_used=int(indices.size),
        method=Method(method),
    )


@dataclass(eq=False)
class SweepCell:
    d: int
    k: int
    report: EvalReport

    def __eq__(self, other):
        if not isinstance(other, SweepCell):
            return NotImplemented
        return self.d == other.d and self.k == other.k and self.report == other.report


@dataclass(eq=False)
class SweepReport:
    """Evaluation grid over feature counts d and neighbor counts k."""

    method: Method
    d_values: list[int]
    k_values: list[int]
    cells: list[SweepCell]

    def get(self, d: int, k: int) -> EvalReport:
        for cell in self.cells:
            if cell.d == d and cell.k == k:
                return cell.report
        raise KeyError((d, k))

    def __eq__(self, other):
        if not isinstance(other, SweepReport):
            return NotImplemented
        return (
            self.method is other.method
            and self.d_values == other.d_values
            and self.k_values == other.k_values
            and self.cells == other.cells
        )


def sweep(
    X_raw: Dataset,
    truth: LabelVector,
    method: Method,
    d_values,
    k_values,
    cfg: EvalConfig,
    threads: int = 1,
) -> SweepReport:
    """One evaluation per (d, k) grid cell.

    Feature scoring runs once per k and every d reuses that ranking, since
    selections are prefixes of the full score order. Selectors that ignore
    k are ranked once and their per-d reports are shared across k.
    """
    method = Method(method)
    d_values = [int(d) for d in d_values]
    k_values = [int(k) for k in k_values]
    if not d_values or not k_values:
        raise ValueError("d_values and k_values must be non-empty")
    m = X_raw.n_features
    cells: list[SweepCell] = []
    if method in (Method.CSUFS_OPTIMIZED, Method.CSUFS_NAIVE):
        mode = "naive" if method is Method.CSUFS_NAIVE else "optimized"
        Xn = normalize_samples(X_raw)
        for k in k_values:
            scores = score_all_features(Xn, ScoringConfig(k=k, mode=mode), threads=threads)
            ranking = scores.ranking()
            for d in d_values:
                report = evaluate_selection(X_raw, ranking[: min(d, m)], truth, cfg, method=method)
                cells.append(SweepCell(d=d, k=k, report=report))
    else:
        if method is Method.MAX_VARIANCE:
            ranking = select_max_variance(X_raw, m).selected
        else:
            ranking = select_all(X_raw).selected
        by_d: dict[int, EvalReport] = {}
        for k in k_values:
            for d in d_values:
                d_eff = m if method is Method.ALL_FEATURES else min(d, m)
                if d_eff not in by_d:
                    by_d[d_eff] = evaluate_selection(X_raw, ranking[:d_eff], truth, cfg, method=method)
                cells.append(SweepCell(d=d, k=k, report=by_d[d_eff]))
    return SweepReport(method=method, d_values=d_values, k_values=k_values, cells=cells)

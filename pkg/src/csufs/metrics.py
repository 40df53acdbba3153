"""Agreement metrics between two labelings of the same samples."""

from __future__ import annotations

import numpy as np
from scipy.optimize import linear_sum_assignment

from .data import LabelVector
from .errors import LengthMismatch


def _check_paired(s: LabelVector, r: LabelVector) -> None:
    if len(s) != len(r):
        raise LengthMismatch(f"label vectors differ in length: {len(s)} vs {len(r)}")


def contingency_table(s: LabelVector, r: LabelVector) -> np.ndarray:
    """counts[i, j] = number of samples labeled i in s and j in r."""
    _check_paired(s, r)
    table = np.zeros((s.n_classes, r.n_classes), dtype=np.int64)
    np.add.at(table, (s.labels, r.labels), 1)
    return table


def clustering_accuracy(s: LabelVector, r: LabelVector) -> float:
    """Fraction of samples matched under the best one-to-one label mapping.

    The mapping from r's labels onto s's labels is solved exactly as an
    assignment problem on the square-padded contingency counts, so the
    result is the true optimum, not a greedy approximation.
    """
    counts = contingency_table(s, r)
    size = max(counts.shape)
    padded = np.zeros((size, size), dtype=np.int64)
    padded[: counts.shape[0], : counts.shape[1]] = counts
    rows, cols = linear_sum_assignment(-padded)
    matched = int(padded[rows, cols].sum())
    return matched / len(s)


def _entropy_from_counts(counts: np.ndarray, n: int) -> float:
    p = counts[counts > 0] / n
    return float(-(p * np.log(p)).sum())


def entropy(labels: LabelVector) -> float:
    """Shannon entropy (natural log) of the empirical label frequencies."""
    counts = np.bincount(labels.labels, minlength=labels.n_classes)
    return _entropy_from_counts(counts, len(labels))


def normalized_mutual_information(s: LabelVector, r: LabelVector) -> float:
    """Mutual information scaled by the larger marginal entropy, in [0, 1].

    When both labelings are single-cluster the partitions are identical and
    the result is defined as 1.0; when exactly one marginal entropy is zero
    the mutual information (and so the result) is 0.0.
    """
    _check_paired(s, r)
    n = len(s)
    counts = contingency_table(s, r)
    row = counts.sum(axis=1)
    col = counts.sum(axis=0)
    h_s = _entropy_from_counts(row, n)
    h_r = _entropy_from_counts(col, n)
    denom = max(h_s, h_r)
    if denom == 0.0:
        return 1.0
    si, ri = np.nonzero(counts)
    joint = counts[si, ri] / n
    mi = float((joint * (np.log(joint) - np.log(row[si] / n) - np.log(col[ri] / n))).sum())
    return min(max(mi / denom, 0.0), 1.0)

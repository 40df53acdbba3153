"""Sample-wise unit-norm scaling applied ahead of scoring and clustering."""

from __future__ import annotations

import warnings

import numpy as np

from .data import Dataset

DEFAULT_ZERO_TOL = 1e-12


def normalize_samples(X: Dataset, zero_tol: float = DEFAULT_ZERO_TOL) -> Dataset:
    """Scale every sample (row) to unit Euclidean length.

    Rows whose norm is at or below zero_tol pass through unchanged; a single
    dead row should not reject an otherwise usable matrix, so degenerate
    rows are only reported with a warning. The input Dataset is untouched.
    """
    vals = X.values
    norms = np.sqrt(np.einsum("ij,ij->i", vals, vals))
    out = np.array(vals, order="F")
    live = norms > zero_tol
    out[live] /= norms[live, np.newaxis]
    n_dead = int(out.shape[0] - live.sum())
    if n_dead:
        warnings.warn(
            f"{n_dead} sample(s) with near-zero norm left unnormalized",
            RuntimeWarning,
            stacklevel=2,
        )
    return Dataset(out, X.feature_names)

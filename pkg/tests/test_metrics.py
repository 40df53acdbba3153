import math

import numpy as np
import pytest

from csufs import (
    LabelVector,
    LengthMismatch,
    clustering_accuracy,
    contingency_table,
    entropy,
    normalized_mutual_information,
)
from helpers import acc_bruteforce_matched, random_labels


def lv(values):
    return LabelVector.from_raw(np.asarray(values))


def test_contingency_counts():
    table = contingency_table(lv([0, 0, 1, 1]), lv([0, 1, 1, 1]))
    assert np.array_equal(table, [[1, 1], [0, 2]])


def test_acc_worked_examples():
    s = lv([0, 0, 1, 1])
    assert clustering_accuracy(s, lv([1, 1, 0, 0])) == 1.0
    assert clustering_accuracy(s, lv([0, 1, 0, 1])) == 0.5
    assert clustering_accuracy(s, s) == 1.0


def test_acc_rectangular_contingency():
    # r splits one of s's classes; the best map matches 3 of 4
    s = lv([0, 0, 1, 1])
    r = lv([0, 1, 2, 2])
    assert clustering_accuracy(s, r) == 0.75


def test_acc_length_mismatch():
    with pytest.raises(LengthMismatch):
        clustering_accuracy(lv([0, 1]), lv([0, 1, 1]))


def test_acc_matches_bruteforce_on_random_pairs():
    rng = np.random.default_rng(14)
    for _ in range(30):
        n = int(rng.integers(5, 31))
        c_s = int(rng.integers(2, 6))
        c_r = int(rng.integers(2, 6))
        s_raw = random_labels(rng, n, c_s)
        r_raw = random_labels(rng, n, c_r)
        expected = acc_bruteforce_matched(s_raw, r_raw, c_s, c_r) / n
        got = clustering_accuracy(lv(s_raw), lv(r_raw))
        assert got == expected


def test_acc_invariant_under_relabeling():
    rng = np.random.default_rng(15)
    s_raw = random_labels(rng, 40, 4)
    r_raw = random_labels(rng, 40, 3)
    base = clustering_accuracy(lv(s_raw), lv(r_raw))
    perm = rng.permutation(3)
    assert clustering_accuracy(lv(s_raw), lv(perm[r_raw])) == base


def test_entropy_examples():
    assert entropy(lv([0, 0, 0])) == 0.0
    assert entropy(lv([0, 1])) == math.log(2)
    assert entropy(lv([0, 0, 1, 1, 2, 2, 3, 3])) == math.log(4)


def test_entropy_upper_bound_is_uniform():
    rng = np.random.default_rng(16)
    for _ in range(20):
        c = int(rng.integers(2, 6))
        raw = random_labels(rng, 36, c)
        assert entropy(lv(raw)) <= math.log(c) + 1e-12


def test_nmi_identical_partitions():
    s = lv([0, 0, 1, 1])
    assert normalized_mutual_information(s, s) == 1.0
    assert normalized_mutual_information(s, lv([1, 1, 0, 0])) == 1.0


def test_nmi_independent_case_is_zero():
    # joint equals the product of marginals, so mutual information vanishes
    assert normalized_mutual_information(lv([0, 0, 1, 1]), lv([0, 1, 0, 1])) == 0.0


def test_nmi_degenerate_cases():
    both_const = normalized_mutual_information(lv([0, 0, 0]), lv([1, 1, 1]))
    assert both_const == 1.0
    one_const = normalized_mutual_information(lv([0, 0, 0]), lv([0, 1, 2]))
    assert one_const == 0.0


def test_nmi_range_and_symmetry():
    rng = np.random.default_rng(17)
    for _ in range(50):
        n = int(rng.integers(5, 40))
        s_raw = random_labels(rng, n, int(rng.integers(2, 6)))
        r_raw = random_labels(rng, n, int(rng.integers(2, 6)))
        a = normalized_mutual_information(lv(s_raw), lv(r_raw))
        b = normalized_mutual_information(lv(r_raw), lv(s_raw))
        assert 0.0 <= a <= 1.0
        assert abs(a - b) <= 1e-12


def test_nmi_invariant_under_relabeling():
    rng = np.random.default_rng(18)
    s_raw = random_labels(rng, 50, 4)
    r_raw = random_labels(rng, 50, 3)
    base = normalized_mutual_information(lv(s_raw), lv(r_raw))
    perm = rng.permutation(3)
    assert abs(normalized_mutual_information(lv(s_raw), lv(perm[r_raw])) - base) <= 1e-12


def test_nmi_length_mismatch():
    with pytest.raises(LengthMismatch):
        normalized_mutual_information(lv([0, 1]), lv([0, 1, 0]))


def test_nmi_against_sklearn_on_nondegenerate_pairs():
    sklearn_metrics = pytest.importorskip("sklearn.metrics")
    rng = np.random.default_rng(19)
    for _ in range(25):
        n = int(rng.integers(8, 60))
        s_raw = random_labels(rng, n, int(rng.integers(2, 5)))
        r_raw = random_labels(rng, n, int(rng.integers(2, 5)))
        ours = normalized_mutual_information(lv(s_raw), lv(r_raw))
        ref = sklearn_metrics.normalized_mutual_info_score(s_raw, r_raw, average_method="max")
        assert abs(ours - ref) <= 1e-9

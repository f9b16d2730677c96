from fractions import Fraction

import pytest

from capelli.borel import (
    BorelDescriptor,
    WeightVector,
    all_sequences,
    opposite_sequence,
    standard_sequence,
    weyl_vector,
)
from capelli.partitions import enumerate_hooks, part, size
from capelli.weights import (
    bubble_walk,
    diag_highest_weight,
    highest_weight,
    hw_standard_diag,
    hw_standard_doubled,
    is_generic,
    monotone_core,
    nongeneric_index,
    odd_reflection_step,
    reflection_walk,
    transport,
    truncated_root_sum,
)


def wv(eps, delta):
    return WeightVector.make(eps, delta)


def test_hw_standard_diag():
    assert hw_standard_diag((1,), 1, 1) == wv([1], [0])
    assert hw_standard_diag((3, 1, 1), 1, 1) == wv([3], [2])
    assert hw_standard_diag((2, 2, 1), 2, 1) == wv([2, 2], [1])
    assert hw_standard_diag((), 2, 1) == wv([0, 0], [0])
    with pytest.raises(ValueError):
        hw_standard_diag((2, 2), 1, 1)


def test_hw_standard_doubled_table_forms():
    # hook shapes (r, s, 1^t) at (m,n) = (2,1): -(2r, 2s | t, t)
    for r, s, t in [(1, 1, 0), (3, 2, 2), (5, 5, 5), (2, 1, 4)]:
        lam = (r, s) + (1,) * t
        assert hw_standard_doubled(lam, 2, 1) == wv([-2 * r, -2 * s], [-t, -t])
    # single row (r): -(2r, 0 | 0, 0)
    for r in range(1, 6):
        assert hw_standard_doubled((r,), 2, 1) == wv([-2 * r, 0], [0, 0])
    assert hw_standard_doubled((), 2, 1) == wv([0, 0], [0, 0])


def test_odd_reflection_step():
    alpha = wv([0, -1], [1, 0])  # d_1 - e_2
    w = wv([3, 2], [1, 0])
    # pairing (w, alpha) = -2 - 1 = -3 != 0: subtract
    assert odd_reflection_step(w, alpha) == w - alpha
    w0 = wv([3, 2], [-2, 0])
    # pairing = -2 - (-2) = 0: unchanged
    assert odd_reflection_step(w0, alpha) == w0
    with pytest.raises(ValueError):
        odd_reflection_step(w, wv([1, 0], [0, 0]))
    with pytest.raises(ValueError):
        odd_reflection_step(w, wv([2, 0], [-2, 0]))


def test_truncated_root_sum_and_highest_weight_table():
    b = BorelDescriptor(2, 1, (1, 1))
    # (r, s, 1^t): both rows positive, full clip inactive: hw
    # -(2r-1, 2s-1 | t+2, t)
    for r, s, t in [(1, 1, 0), (2, 1, 1), (4, 3, 2), (5, 5, 5)]:
        lam = (r, s) + (1,) * t
        assert truncated_root_sum(lam, b) == b.root_sum()
        assert highest_weight(lam, b) == wv(
            [-(2 * r - 1), -(2 * s - 1)], [-(t + 2), -t]
        )
    # single row (r): second row clips: hw -(2r-1, 0 | 1, 0)
    for r in range(1, 6):
        assert truncated_root_sum((r,), b) == wv([-1, 0], [1, 0])
        assert highest_weight((r,), b) == wv([-(2 * r - 1), 0], [-1, 0])
    assert highest_weight((), b) == wv([0, 0], [0, 0])


def test_genericity():
    b = BorelDescriptor(2, 1, (1, 1))
    assert is_generic((1, 1), b)
    assert not is_generic((3,), b)
    assert nongeneric_index((3,), b) == 2
    assert nongeneric_index((1, 1), b) is None
    # three-way equivalence: generic <=> truncation inactive <=> r(lam,b)=r_b
    for m, n in [(1, 1), (2, 1), (2, 2)]:
        for b in BorelDescriptor.enumerate(m, n):
            for lam in enumerate_hooks(m, n, 4):
                generic = is_generic(lam, b)
                all_rows = all(
                    2 * part(lam, i) >= b.ell_of(i) for i in range(1, m + 1)
                )
                assert generic == all_rows
                assert generic == (truncated_root_sum(lam, b) == b.root_sum())
                assert generic == (nongeneric_index(lam, b) is None)


def test_highest_weight_e_coefficients_nonpositive():
    for m, n in [(2, 1), (2, 2)]:
        for b in BorelDescriptor.enumerate(m, n):
            for lam in enumerate_hooks(m, n, 5):
                w = highest_weight(lam, b)
                assert all(c <= 0 for c in w.eps), (lam, b.ell)


def test_reflection_walk_matches_closed_form():
    for m, n in [(1, 1), (2, 1), (2, 2)]:
        for b in BorelDescriptor.enumerate(m, n):
            rho_target = weyl_vector(b.sequence())
            for lam in enumerate_hooks(m, n, 4):
                w, rho = reflection_walk(lam, b)
                assert w == highest_weight(lam, b), (lam, b.ell)
                assert rho == rho_target


def test_monotone_core():
    seq = (("d", 2), ("e", 1), ("d", 1), ("e", 2))
    assert monotone_core(seq, descending=False) == (
        ("d", 1),
        ("e", 1),
        ("d", 2),
        ("e", 2),
    )
    assert monotone_core(seq, descending=True) == (
        ("d", 2),
        ("e", 2),
        ("d", 1),
        ("e", 1),
    )


def test_transport_recovers_weyl_vector():
    # moving the core's Weyl vector across the permutation must agree with
    # the direct half-sum of the target ordering
    for m, n in [(1, 1), (2, 1)]:
        for seq in all_sequences(m, n):
            for descending in (False, True):
                core = monotone_core(seq, descending)
                assert transport(seq, core, weyl_vector(core)) == weyl_vector(seq)


def test_bubble_walk_rejects_same_family_inversions():
    start = standard_sequence(2, 1)
    target = (("e", 2), ("e", 1), ("d", 1))
    w = WeightVector.zero(2, 1)
    with pytest.raises(ValueError):
        bubble_walk(start, target, w, weyl_vector(start))


def test_diag_highest_weight_small_oracles():
    # (1|1), shape (1): the opposite ordering flips the highest weight to d_1
    w, rho = diag_highest_weight((("d", 1), ("e", 1)), (1,), 1, 1, dual=False)
    assert w == wv([0], [1])
    assert rho == wv([Fraction(1, 2)], [Fraction(-1, 2)])
    # shape (2): the opposite ordering gives e_1 + d_1
    w, _ = diag_highest_weight((("d", 1), ("e", 1)), (2,), 1, 1, dual=False)
    assert w == wv([1], [1])
    # dual module, standard ordering: highest weight -d_1
    w, rho = diag_highest_weight((("e", 1), ("d", 1)), (1,), 1, 1, dual=True)
    assert w == wv([0], [-1])
    assert rho == weyl_vector(standard_sequence(1, 1))


def test_diag_highest_weight_rho_always_matches_direct():
    for m, n in [(1, 1), (2, 1)]:
        for seq in all_sequences(m, n):
            for dual in (False, True):
                _, rho = diag_highest_weight(seq, (2, 1), m, n, dual)
                assert rho == weyl_vector(seq)


def test_diag_highest_weight_standard_is_closed_form():
    for m, n in [(1, 1), (2, 1)]:
        for lam in enumerate_hooks(m, n, 4):
            w, _ = diag_highest_weight(standard_sequence(m, n), lam, m, n, dual=False)
            assert w == hw_standard_diag(lam, m, n)
            w_dual, _ = diag_highest_weight(
                opposite_sequence(m, n), lam, m, n, dual=True
            )
            assert w_dual == -hw_standard_diag(lam, m, n)


def test_diag_highest_weight_is_weight_of_module():
    # any Borel's highest weight must differ from the standard one by a sum
    # of roots with integer coefficients; spot-check integrality
    for seq in all_sequences(2, 1):
        w, _ = diag_highest_weight(seq, (3, 1), 2, 1, dual=False)
        diff = w - hw_standard_diag((3, 1), 2, 1)
        assert all(v.denominator == 1 for v in diff.coords())
        assert sum(diff.coords()) == 0

import json
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from qdecreasing.enumeration import (
    count_by_ones,
    count_qdecreasing,
    expand_series,
    frequency_report,
    gen_fib,
    parity_difference,
    popularity,
)

from conftest import brute_B, brute_W, strings


def _fib_naive(n, k):
    if n < k - 1:
        return 0
    if n == k - 1:
        return 1
    seq = [0] * (k - 1) + [1]
    while len(seq) <= n:
        seq.append(sum(seq[-k:]))
    return seq[n]


def test_gen_fib_against_direct_sum():
    for k in range(2, 6):
        for n in range(0, 40):
            assert gen_fib(n, k) == _fib_naive(n, k)


def test_gen_fib_rejects_bad_args():
    with pytest.raises(ValueError):
        gen_fib(3, 1)
    with pytest.raises(ValueError):
        gen_fib(-1, 2)


def test_fib_table_matches_gen_fib():
    t = expand_series("fib", 2, 25)
    assert t.q is None and t.k == 3
    assert list(t.coeffs) == [gen_fib(n, 3) for n in range(26)]


def test_small_counts():
    assert count_qdecreasing(4, 1) == 8
    assert count_qdecreasing(6, 1) == 21
    assert count_qdecreasing(4, 2) == 13
    assert count_qdecreasing(0, 3) == 1


def test_fq_q1_prefix():
    assert list(expand_series("Fq", 1, 6).coeffs) == [1, 2, 3, 5, 8, 13, 21]


def test_dq_q1_prefix():
    assert list(expand_series("Dq", 1, 6).coeffs) == [1, 0, 1, -1, 0, -1, 1]


def test_sq_q1_entries():
    s = expand_series("Sq", 1, 4)
    # (n, k) -> number of q-prime-factor strings; derived below by brute force too.
    for n in range(5):
        for k in range(n + 1):
            assert s[n, k] == _prime_words(n, k, 1)


def _prime_words(n, k, q):
    """Words 0^a 1^b with a = floor(b/q) + 1, length n and k ones."""
    b = k
    a = b // q + 1
    return 1 if a + b == n else 0


@pytest.mark.parametrize("q", [1, 2, 3])
def test_sq_is_prime_factor_series(q):
    s = expand_series("Sq", q, 20)
    for n in range(21):
        for k in range(n + 1):
            assert s[n, k] == _prime_words(n, k, q)


@pytest.mark.parametrize("q", [1, 2, 3, 4])
def test_counts_match_brute_force(q):
    for n in range(0, 19):
        words = brute_W(n, q)
        assert count_qdecreasing(n, q) == len(words)
        by = [0] * (n + 1)
        for s in words:
            by[s.count("1")] += 1
        assert count_by_ones(n, q) == by
        assert parity_difference(n, q) == sum(by[0::2]) - sum(by[1::2])
        assert popularity(n, q, 1) == sum(s.count("1") for s in words)
        assert popularity(n, q, 0) == sum(s.count("0") for s in words)


@pytest.mark.parametrize("q", [1, 2, 3])
def test_bq_matches_brute_force(q):
    t = expand_series("Bq", q, 13)
    for n in range(14):
        by = [0] * (n + 1)
        for s in brute_B(n, q):
            by[s.count("1")] += 1
        assert list(t.coeffs[n]) == by
        assert sum(t.coeffs[n]) == gen_fib(n + q + 1, q + 1)


def test_spot_values():
    assert count_by_ones(4, 1) == [1, 3, 2, 1, 1]
    assert popularity(3, 1, 1) == 7
    assert popularity(3, 1, 0) == 8


@pytest.mark.parametrize("q", [1, 2, 3])
def test_h_coefficient_identity(q):
    h = expand_series("H", q, 18)
    for n in range(1, 19):
        v = sum(s.count("1") for s in brute_B(n, q))
        u = popularity(n, q, 1)
        assert h[n] == count_qdecreasing(n, q) + v - u


@pytest.mark.parametrize("q", range(1, 6))
def test_dq_pattern(q):
    d = expand_series("Dq", q, 60)
    m = q + 2
    for n in range(61):
        r, blk = n % m, n // m
        if r == 0:
            want = 1 if q % 2 == 0 else (-1) ** blk
        elif r == q + 1:
            want = -1 if q % 2 == 0 else (-1) ** blk
        else:
            want = 0
        assert d[n] == want, (q, n)


def test_non_negative_kinds():
    for kind in ("fib", "Fq", "P1", "P0", "H"):
        for q in (1, 2, 3):
            assert all(c >= 0 for c in expand_series(kind, q, 30).coeffs)


def test_table_serialisation():
    t = expand_series("Fq", 2, 4)
    assert json.loads(t.to_json()) == {"kind": "Fq", "q": 2, "n_max": 4,
                                       "coeffs": [1, 2, 4, 7, 13]}
    assert t.to_csv().splitlines()[:3] == ["n,coeff", "0,1", "1,2"]
    w = expand_series("Wq", 1, 2)
    assert w.to_csv().splitlines() == ["n,k,coeff", "0,0,1", "1,0,1", "1,1,1",
                                       "2,0,1", "2,1,1", "2,2,1"]
    assert w[2, 5] == 0
    assert json.loads(expand_series("fib", 1, 3).to_json())["k"] == 2


def test_bad_inputs():
    with pytest.raises(ValueError):
        expand_series("nope", 1, 3)
    with pytest.raises(ValueError):
        expand_series("Fq", 0, 3)
    with pytest.raises(ValueError):
        expand_series("Fq", 1, -1)
    with pytest.raises(ValueError):
        popularity(3, 1, 2)


def test_frequency_report_fields():
    r = frequency_report(6, 1)
    assert r.count == 21
    assert r.u == sum(s.count("1") for s in brute_W(6, 1))
    assert r.v == sum(s.count("1") for s in brute_B(6, 1))
    assert r.u_ratio == Fraction(r.u, 6 * 21)


@given(st.integers(0, 120), st.integers(1, 6))
def test_wq_marginal_is_fq(n, q):
    w = expand_series("Wq", q, n)
    assert sum(w.coeffs[n]) == expand_series("Fq", q, n)[n] == count_qdecreasing(n, q)


@given(st.integers(0, 120), st.integers(1, 6))
def test_popularities_add_up(n, q):
    assert popularity(n, q, 0) + popularity(n, q, 1) == n * count_qdecreasing(n, q)
    d = expand_series("Dq", q, n)[n]
    row = count_by_ones(n, q)
    assert d == sum(row[0::2]) - sum(row[1::2])
    assert sum(k * c for k, c in enumerate(row)) == popularity(n, q, 1)


@given(st.integers(0, 200), st.integers(2, 6))
def test_fib_recurrence(n, k):
    if n >= k:
        assert gen_fib(n, k) == sum(gen_fib(n - i, k) for i in range(1, k + 1))


def test_strings_helper_sanity():
    assert len(strings(3)) == 8

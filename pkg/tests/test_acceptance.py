"""Acceptance checks, one per criterion, each printing a PASS/FAIL line.

Run ``pytest tests/test_acceptance.py -v`` (the lines are printed even under
output capture) or ``python tests/test_acceptance.py`` for the bare report.
Set ``QDEC_FULL_CAT=1`` to enumerate W^q_30 for every q instead of summing
the recursion's call counts over its states.
"""

import math
import os
import sys
import time
from fractions import Fraction
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from conftest import brute_B, brute_W, distance  # noqa: E402
from qdecreasing.bijection import phi, phi_inv, psi  # noqa: E402
from qdecreasing.enumeration import (  # noqa: E402
    count_by_ones,
    count_qdecreasing,
    expand_series,
    frequency_report,
    gen_fib,
    parity_difference,
    popularity,
)
from qdecreasing.generation import (  # noqa: E402
    LexStats,
    brgc_list,
    delta_cover,
    delta_list,
    flip_swap_witness,
    gray1_W,
    lex_call_profile,
    lex_list,
    lex_stream,
    search_gray1,
    verify_gray,
)
from qdecreasing.rungraph import build_run_graph, hamiltonian_path  # noqa: E402
from qdecreasing.words import BinaryWord, repeat_trim  # noqa: E402

BRGC_6 = [
    ("000000", None), ("000001", 1), ("000011", 1), ("000010", 1), ("000110", 1),
    ("000100", 1), ("001001", 3), ("001000", 1), ("110000", 3), ("110001", 1),
    ("110010", 2), ("111100", 3), ("111111", 2), ("111110", 1), ("111001", 3),
    ("111000", 1), ("100100", 3), ("100010", 2), ("100011", 1), ("100001", 1),
    ("100000", 1),
]
PHI_Q2_N4 = [
    ("1100", "0011"), ("1101", "1111"), ("1001", "1001"), ("1000", "0001"),
    ("1010", "0101"), ("1011", "1101"), ("0011", "1100"), ("0010", "0100"),
    ("0000", "0000"), ("0001", "1000"), ("0101", "1010"), ("0100", "0010"),
    ("0110", "1110"),
]
GRAY_6 = [
    "111111", "111110", "111100", "111000", "111001", "110001", "110000",
    "110010", "100010", "100011", "100001", "100000", "100100", "000100",
    "000110", "000010", "000011", "000001", "000000", "001000", "001001",
]
R3_ARROWS = ["01000", "11000", "10000", "00000", "00100"]
ONES_LIMIT_Q1 = (5 - math.sqrt(5)) / 10


def _words(n, q):
    return [BinaryWord.parse(s) for s in brute_W(n, q)]


def criterion_1():
    t = time.perf_counter()
    got = (count_qdecreasing(4, 1), count_qdecreasing(6, 1), count_qdecreasing(4, 2))
    elapsed = time.perf_counter() - t
    return got == (8, 21, 13) and elapsed < 1, f"counts={got} in {elapsed:.3f}s"


def criterion_2():
    t = time.perf_counter()
    bad = []
    for q in range(1, 5):
        for n in range(0, 17):
            words = brute_W(n, q)
            by = [0] * (n + 1)
            for s in words:
                by[s.count("1")] += 1
            if count_qdecreasing(n, q) != len(words):
                bad.append(("count", n, q))
            if count_by_ones(n, q) != by:
                bad.append(("by_ones", n, q))
            if parity_difference(n, q) != sum(by[0::2]) - sum(by[1::2]):
                bad.append(("parity", n, q))
            if popularity(n, q, 1) != sum(k * c for k, c in enumerate(by)):
                bad.append(("pop1", n, q))
            if popularity(n, q, 0) != sum((n - k) * c for k, c in enumerate(by)):
                bad.append(("pop0", n, q))
    elapsed = time.perf_counter() - t
    return not bad and elapsed < 300, f"mismatches={bad[:3]} in {elapsed:.1f}s"


def criterion_3():
    rows = [u for u, v in PHI_Q2_N4 if str(phi(u, 2)) != v]
    trips = []
    for q in range(1, 5):
        for n in range(0, 15):
            for u in brute_B(n, q):
                if str(phi_inv(phi(u, q), q)) != u:
                    trips.append((u, q))
            for w in brute_W(n, q):
                if str(phi(phi_inv(w, q), q)) != w:
                    trips.append((w, q))
    image = []
    for q in range(1, 5):
        for n in range(0, 13):
            got = [str(psi(w, q)) for w in brute_W(n, q)]
            want = {s for s in brute_W(n + q + 1, q) if s.endswith("1" * q)}
            if len(set(got)) != len(got) or set(got) != want:
                image.append((n, q))
    ok = not rows and not trips and not image
    return ok, f"table rows wrong={rows} round-trip failures={len(trips)} image failures={image}"


def criterion_4():
    worst = max(abs(parity_difference(n, q)) for q in range(1, 6) for n in range(0, 41))
    pattern = []
    for q in range(1, 6):
        d = expand_series("Dq", q, 60)
        m = q + 2
        for n in range(61):
            blk, r = divmod(n, m)
            if r == 0:
                want = 1 if q % 2 == 0 else (-1) ** blk
            elif r == q + 1:
                want = -1 if q % 2 == 0 else (-1) ** blk
            else:
                want = 0
            if d[n] != want:
                pattern.append((q, n))
    return worst <= 1 and not pattern, f"max|parity|={worst} pattern breaks={pattern[:3]}"


def criterion_5():
    order_bad = [(n, q) for q in range(1, 5) for n in range(0, 17)
                 if lex_list(n, q).strings() != list(brute_W(n, q))]
    ratios = {}
    full = os.environ.get("QDEC_FULL_CAT") == "1"
    t = time.perf_counter()
    stats = LexStats()
    count = lex_stream(30, 1, lambda w: None, stats)
    w30_time = time.perf_counter() - t
    ratios[1] = stats.calls_per_word
    for q in range(2, 5):
        if full:
            s = LexStats()
            lex_stream(30, q, lambda w: None, s)
        else:
            s = lex_call_profile(30, q)
        ratios[q] = s.calls_per_word
    cat_ok = all(r <= 4 for r in ratios.values())
    ok = not order_bad and cat_ok and count == 2178309 and w30_time < 30
    shown = " ".join(f"q{q}={r:.3f}" for q, r in ratios.items())
    return ok, (f"order mismatches={order_bad} calls/word {shown}; "
                f"W^1_30 {count} words in {w30_time:.1f}s")


def criterion_6():
    got = brgc_list(6, 1).strings()
    dists = [None] + [distance(a, b) for a, b in zip(got, got[1:])]
    table_ok = got == [w for w, _ in BRGC_6] and dists == [d for _, d in BRGC_6]
    worst = 0
    for q in range(1, 5):
        for n in range(0, 17):
            r = verify_gray(brgc_list(n, q), 3, _words(n, q))
            if not r.passed:
                worst = max(worst, 99)
            worst = max(worst, r.max_distance)
    witness = next(((n, q, flip_swap_witness(n, q)) for q in range(1, 4) for n in range(1, 9)
                    if flip_swap_witness(n, q)), None)
    ok = table_ok and worst <= 3 and witness is not None
    shown = f"{witness[2][0]}->{witness[2][1]} (n={witness[0]}, q={witness[1]})" if witness else None
    return ok, f"table={table_ok} max distance={worst} flip-swap witness={shown}"


def criterion_7():
    bad = []
    for n in range(0, 19):
        w = gray1_W(n)
        r = verify_gray(w, 1, _words(n, 1))
        if not (r.passed and str(w.first()) == "1" * n and w.last() == repeat_trim("001", n)):
            bad.append(n)
    exact = gray1_W(6).strings() == GRAY_6
    deltas, delta_bad = 0, []
    for n in range(3, 15):
        for r in range(3, n + 1):
            try:
                words = delta_list(n, r)
            except ValueError:
                continue
            deltas += 1
            steps_ok = all((a ^ b).bit_count() == 1 for a, b in zip(words.bits, words.bits[1:]))
            if not (steps_ok and len(set(words.bits)) == len(words)
                    and set(words) == delta_cover(n, r)):
                delta_bad.append((n, r))
    ok = not bad and exact and not delta_bad
    return ok, (f"failing n={bad} exact 6-row match={exact} "
                f"deltas checked={deltas} delta failures={delta_bad}")


def criterion_8():
    bad = []
    for n in range(1, 17):
        g = build_run_graph(n)
        path = list(hamiltonian_path(n))
        edges_ok = all((min(a, b), max(a, b)) in g.edges for a, b in zip(path, path[1:]))
        if not (edges_ok and set(path) == g.vertices and len(path) == len(g.vertices)
                and len(g.vertices) == gen_fib(n + 2, 2)):
            bad.append(n)
    arrows = hamiltonian_path(3).strings() == R3_ARROWS
    return not bad and arrows, f"failing n={bad} n=3 arrows match={arrows}"


def criterion_9():
    r30 = frequency_report(30, 1)
    ratio = float(r30.u_ratio)
    gap = abs(ratio - ONES_LIMIT_Q1)
    gaps = [abs(frequency_report(n, 1).u_ratio - Fraction(ONES_LIMIT_Q1)) for n in range(10, 31)]
    monotone = all(b < a for a, b in zip(gaps, gaps[1:]))
    bound = []
    for q in range(1, 4):
        for n in range(0, 19):
            u = sum(s.count("1") for s in brute_W(n, q))
            v = sum(s.count("1") for s in brute_B(n, q))
            if not u - v <= gen_fib(n + q + 1, q + 1):
                bound.append((n, q))
    ok = gap < 0.02 and monotone and not bound
    return ok, (f"u/(n f) at n=30 = {ratio:.7f} (|diff|={gap:.4f}, tol 0.02) "
                f"monotone={monotone} u-v<=f failures={bound}")


def criterion_10():
    slow, missing = 0.0, []
    for q in range(2, 6):
        for n in range(0, 6):
            t = time.perf_counter()
            found = search_gray1(n, q)
            slow = max(slow, time.perf_counter() - t)
            if found is None or not verify_gray(found, 1, _words(n, q)).passed:
                missing.append((n, q))
    return not missing and slow < 10, f"missing={missing} slowest={slow:.3f}s"


CRITERIA = [
    (1, "small counts", criterion_1),
    (2, "brute-force equivalence", criterion_2),
    (3, "bijection suite", criterion_3),
    (4, "parity condition", criterion_4),
    (5, "lexicographic generation", criterion_5),
    (6, "BRGC 3-Gray order", criterion_6),
    (7, "1-Gray code", criterion_7),
    (8, "run-graph Hamiltonian path", criterion_8),
    (9, "frequency convergence", criterion_9),
    (10, "exhaustive 1-Gray search", criterion_10),
]


def _line(num, title, ok, detail):
    return f"{'PASS' if ok else 'FAIL'} criterion {num:2d} ({title}): {detail}"


@pytest.mark.parametrize("num,title,check", CRITERIA, ids=[f"criterion_{c[0]:02d}" for c in CRITERIA])
def test_criterion(num, title, check, capsys):
    ok, detail = check()
    with capsys.disabled():
        print("\n" + _line(num, title, ok, detail))
    assert ok, detail


if __name__ == "__main__":
    failed = 0
    for num, title, check in CRITERIA:
        ok, detail = check()
        failed += not ok
        print(_line(num, title, ok, detail), flush=True)
    sys.exit(1 if failed else 0)

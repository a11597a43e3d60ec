"""Brute-force oracles shared by the test modules.

These deliberately avoid the library: words are plain strings and
membership is decided by a direct scan of maximal ``0^a 1^b`` factors.
"""

from functools import lru_cache
from itertools import product

import pytest


def naive_qdec(s: str, q: int) -> bool:
    i, n = 0, len(s)
    while i < n:
        if s[i] == "0" and (i == 0 or s[i - 1] == "1"):
            j = i
            while j < n and s[j] == "0":
                j += 1
            k = j
            while k < n and s[k] == "1":
                k += 1
            if q * (j - i) <= k - j:
                return False
            i = k
        else:
            i += 1
    return True


@lru_cache(maxsize=None)
def strings(n: int):
    return tuple("".join(p) for p in product("01", repeat=n))


@lru_cache(maxsize=None)
def brute_W(n: int, q: int):
    """Sorted q-decreasing words of length n."""
    return tuple(s for s in strings(n) if naive_qdec(s, q))


@lru_cache(maxsize=None)
def brute_B(n: int, q: int):
    """Sorted words of length n with no factor 1^(q+1)."""
    bad = "1" * (q + 1)
    return tuple(s for s in strings(n) if bad not in s)


def distance(a: str, b: str) -> int:
    return sum(x != y for x, y in zip(a, b))


@pytest.fixture
def oracle():
    class O:
        qdec = staticmethod(naive_qdec)
        W = staticmethod(brute_W)
        B = staticmethod(brute_B)
        dist = staticmethod(distance)

    return O

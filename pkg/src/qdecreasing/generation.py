"""Exhaustive generation of q-decreasing words.

Three orders are provided: lexicographic (a CAT recursive generator),
BRGC order (a 3-Gray code obtained by ranking in the reflected Gray code),
and, for ``q = 1``, a recursive 1-Gray code built from diagonal lists.
"""

from __future__ import annotations

import os
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Set, Tuple

from .words import BinaryWord, check_q, is_q_decreasing

__all__ = [
    "WordList",
    "GrayReport",
    "LexStats",
    "ConstructionError",
    "SearchBudgetExceeded",
    "lex_stream",
    "lex_list",
    "lex_call_profile",
    "brgc_rank",
    "brgc_list",
    "delta_list",
    "delta_cover",
    "gray1_Z",
    "gray1_W",
    "verify_gray",
    "search_hamiltonian",
    "search_gray1",
    "is_absorbent",
    "flip_swap_witness",
    "DEFAULT_NODE_BUDGET",
]

DEFAULT_NODE_BUDGET = int(os.environ.get("QDEC_SEARCH_BUDGET", "2000000"))


class ConstructionError(AssertionError):
    """A constructed sublist failed its Gray-code self-check."""


class SearchBudgetExceeded(RuntimeError):
    """Backtracking ran out of its node budget without a verdict."""


class WordList:
    """An ordered list of equal-length words with the list algebra used below.

    ``a + b`` concatenates, ``reverse()`` mirrors, ``alt(i)`` reverses when
    ``i`` is odd, ``drop_first()`` removes the head and ``prefixed(w)``
    prepends ``w`` to every word.
    """

    __slots__ = ("length", "_bits")

    def __init__(self, words: Iterable[BinaryWord] = (), length: Optional[int] = None):
        words = list(words)
        if words:
            length = words[0].length if length is None else length
            if any(w.length != length for w in words):
                raise ValueError("all words in a WordList must have the same length")
        self.length = 0 if length is None else length
        self._bits = tuple(w.bits for w in words)

    @classmethod
    def from_bits(cls, length: int, bits: Sequence[int]) -> "WordList":
        out = cls.__new__(cls)
        out.length = length
        out._bits = tuple(bits)
        return out

    @classmethod
    def parse(cls, texts: Iterable[str]) -> "WordList":
        return cls(BinaryWord.parse(t) for t in texts)

    @property
    def bits(self) -> Tuple[int, ...]:
        return self._bits

    def __len__(self) -> int:
        return len(self._bits)

    def __iter__(self) -> Iterator[BinaryWord]:
        n = self.length
        return (BinaryWord(b, n) for b in self._bits)

    def __getitem__(self, index: int) -> BinaryWord:
        return BinaryWord(self._bits[index], self.length)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WordList):
            return NotImplemented
        return self.length == other.length and self._bits == other._bits

    def __hash__(self) -> int:
        return hash((self.length, self._bits))

    def __repr__(self) -> str:
        return f"WordList({self.strings()!r})"

    def __add__(self, other: "WordList") -> "WordList":
        if self and other and self.length != other.length:
            raise ValueError("cannot concatenate lists of different word lengths")
        length = self.length if self else other.length
        return WordList.from_bits(length, self._bits + other._bits)

    def first(self) -> BinaryWord:
        return self[0]

    def last(self) -> BinaryWord:
        return self[-1]

    def reverse(self) -> "WordList":
        return WordList.from_bits(self.length, self._bits[::-1])

    def alt(self, i: int) -> "WordList":
        return self if i % 2 == 0 else self.reverse()

    def drop_first(self) -> "WordList":
        return WordList.from_bits(self.length, self._bits[1:])

    def prefixed(self, w: BinaryWord) -> "WordList":
        m = self.length
        head = w.bits << m
        return WordList.from_bits(m + w.length, [head | b for b in self._bits])

    def reversed_words(self) -> "WordList":
        """Mirror every word (not the list order)."""
        return WordList(w.reversed() for w in self)

    def strings(self) -> List[str]:
        return [str(w) for w in self]

    def as_set(self) -> Set[BinaryWord]:
        return set(self)


# ---------------------------------------------------------------------------
# Lexicographic CAT generation


@dataclass
class LexStats:
    """Instrumentation for :func:`lex_stream`."""

    calls: int = 0
    words: int = 0

    @property
    def calls_per_word(self) -> float:
        return self.calls / self.words if self.words else float("inf")


def lex_stream(n: int, q: int, sink: Callable[[BinaryWord], object],
               stats: Optional[LexStats] = None) -> int:
    """Emit every q-decreasing word of length ``n`` in lexicographic order.

    ``delta`` is the number of ones that may still be appended to the current
    prefix.  A virtual letter ``w[0] = 1`` precedes the word, so the first
    ``0`` opens a block with budget ``q - 1``.  Returns the number of words.
    """
    check_q(q)
    if n < 0:
        raise ValueError("n must be >= 0")
    calls = 0
    emitted = 0

    def lexfib(pos: int, delta: int, prev: int, value: int) -> None:
        nonlocal calls, emitted
        calls += 1
        if pos == n + 1:
            emitted += 1
            sink(BinaryWord(value, n))
            return
        d = q - 1 if prev == 1 else delta + q
        lexfib(pos + 1, d, 0, value << 1)
        if delta > 0:
            lexfib(pos + 1, delta - 1, 1, (value << 1) | 1)

    lexfib(1, n, 1, 0)
    if stats is not None:
        stats.calls += calls
        stats.words += emitted
    return emitted


def lex_call_profile(n: int, q: int) -> LexStats:
    """The counters :func:`lex_stream` would report, without enumerating.

    Calls and leaves of the recursion depend only on ``(pos, delta, prev)``,
    so both are summed over those states.  Useful when ``W^q_n`` has far too
    many words to list.
    """
    check_q(q)
    if n < 0:
        raise ValueError("n must be >= 0")

    @lru_cache(maxsize=None)
    def count(pos: int, delta: int, prev: int) -> Tuple[int, int]:
        if pos == n + 1:
            return 1, 1
        d = q - 1 if prev == 1 else delta + q
        calls, words = count(pos + 1, d, 0)
        if delta > 0:
            c, w = count(pos + 1, delta - 1, 1)
            calls, words = calls + c, words + w
        return calls + 1, words

    calls, words = count(1, n, 1)
    return LexStats(calls, words)


def lex_list(n: int, q: int) -> WordList:
    out: List[int] = []
    lex_stream(n, q, lambda w: out.append(w.bits))
    return WordList.from_bits(n, out)


# ---------------------------------------------------------------------------
# BRGC order


def brgc_rank(w: BinaryWord) -> int:
    """Position of ``w`` in the binary reflected Gray code of its length."""
    g = w.bits
    rank = 0
    while g:
        rank ^= g
        g >>= 1
    return rank


def brgc_list(n: int, q: int) -> WordList:
    """``W^q_n`` in the order induced by the full binary reflected Gray code."""
    words = lex_list(n, q)
    return WordList(sorted(words, key=brgc_rank), length=n)


def is_absorbent(words: Iterable[BinaryWord]) -> bool:
    """True iff zeroing any suffix of a member stays inside the set."""
    members = set(words)
    for w in members:
        for k in range(1, w.length):
            mask = ((1 << k) - 1) << (w.length - k)
            if BinaryWord(w.bits & mask, w.length) not in members:
                return False
    return True


def flip_swap_witness(n: int, q: int) -> Optional[Tuple[BinaryWord, BinaryWord]]:
    """A member of ``W^q_n`` whose rightmost-1 swap leaves the set, if any.

    The swap exchanges the rightmost ``1`` with the letter to its left.
    """
    for w in lex_list(n, q):
        if not w.bits:
            continue
        low = w.bits & -w.bits
        pos = low.bit_length() - 1
        if pos + 1 >= n or (w.bits >> (pos + 1)) & 1:
            continue
        swapped = BinaryWord(w.bits ^ low ^ (low << 1), n)
        if not is_q_decreasing(swapped, q):
            return w, swapped
    return None


# ---------------------------------------------------------------------------
# 1-Gray code for q = 1.  Lists are tuples of packed ints of a known length.


def _pre(i: int, j: int, words: Sequence[int], m: int) -> List[int]:
    head = ((1 << j) - 1) << m
    return [head | b for b in words]


def _alt(words: Sequence[int], i: int) -> Sequence[int]:
    return words if i % 2 == 0 else words[::-1]


def _word(i: int, j: int, tail: str = "") -> int:
    return int("0" * i + "1" * j + tail or "0", 2)


_BASE_Z = {0: (0,), 1: (0,), 2: (0,), 3: (0b000, 0b001)}


def _check_delta(n: int, r: int) -> str:
    if not 3 <= r <= n:
        raise ValueError(f"diagonal index must satisfy 3 <= r <= n, got n={n}, r={r}")
    if r % 4 == 1:
        if r == n - 1:
            if n % 2:
                raise ValueError(f"r = n - 1 with r = 1 mod 4 needs even n, got n={n}")
            return "1.ii"
        return "1.i"
    if r % 4 == 3:
        if r == 3:
            return "3.i"
        if r == n - 2:
            return "3.ii"
        if r == n - 1:
            return "3.iii"
        if r == n:
            return "3.iv"
        return "3.v"
    raise ValueError(f"diagonal index must be 1 or 3 mod 4, got r={r}")


@lru_cache(maxsize=None)
def _delta(n: int, r: int) -> Tuple[int, ...]:
    case = _check_delta(n, r)
    out: List[int] = []
    if case == "1.i":
        z_hi, z_lo = _z(n - r + 1), _z(n - r)
        for j in range(1, (r - 3) // 2 + 1):
            out += _pre(r - 1 - j, j, _alt(z_hi, j), n - r + 1)
        tail: List[int] = []
        for j in range(1, (r - 1) // 2 + 1):
            tail += _pre(r - j, j, _alt(z_lo, j), n - r)
        out += tail[::-1]
    elif case == "1.ii":
        half = (n - 4) // 2
        for j in range(1, half + 1):
            out.append(_word(n - 2 - j, j, "00"))
        out.append(_word(n // 2, (n - 2) // 2, "0"))
        tail = []
        for j in range(1, half + 1):
            tail += _alt([_word(n - j - 1, j + 1), _word(n - 1 - j, j, "0")], j - 1)
        out += tail[::-1]
        out.append(_word(n - 1, 1))
    elif case == "3.i":
        out += _pre(2, 1, _z(n - 3), n - 3)
    elif case == "3.ii":
        z3, z2 = _z(3), _z(2)
        for j in range(1, (n - 5) // 2 + 1):
            out += _pre(n - 3 - j, j, _alt(z3, j - 1), 3)
        tail = []
        for j in range(1, (n - 3) // 2 + 1):
            tail += _pre(n - 2 - j, j, z2, 2)
        out += tail[::-1]
    elif case == "3.iii":
        z2, z1 = _z(2), _z(1)
        half = (n - 4) // 2
        for j in range(1, half + 1):
            out += _pre(n - 2 - j, j, z2, 2)
        out += _pre(n // 2, (n - 2) // 2, z1, 1)
        tail = []
        for j in range(1, half + 1):
            tail += _alt([_word(n - 1 - j, j + 1)] + _pre(n - 1 - j, j, z1, 1), j)
        out += tail[::-1]
    elif case == "3.iv":
        for j in range(1, (n - 3) // 2 + 1):
            out.append(_word(n - 1 - j, j, "0"))
        out += [_word(n - j, j) for j in range(1, (n - 1) // 2 + 1)][::-1]
    else:
        a = (r - 3) // 2
        z_hi, z_lo = _z(n - r + 1), _z(n - r)
        ks = {i: _pre(r - i - 1, i, z_hi, n - r + 1) for i in range(1, a + 1)}
        ls = {i: _pre(r - i, i, z_lo, n - r) for i in range(1, a + 2)}
        out += [ls[i][0] for i in range(1, a + 2)]
        for i in range(a, 0, -1):
            out += _alt(ls[i + 1][1:] + ks[i], i)
        out += ls[1][1:]
    result = tuple(out)
    if __debug__:
        _self_check(n, result, delta_cover_bits(n, r), f"delta({n}, {r}) case {case}")
    return result


def _self_check(n: int, words: Sequence[int], expected: FrozenSet[int], label: str) -> None:
    for a, b in zip(words, words[1:]):
        if (a ^ b).bit_count() != 1:
            raise ConstructionError(
                f"{label}: {a:0{n}b} -> {b:0{n}b} is not a single flip")
    if len(set(words)) != len(words) or set(words) != expected:
        raise ConstructionError(f"{label}: element set differs from its diagonals")


def _diagonal_bits(n: int, r: int) -> Set[int]:
    """``D^r_n``: words ``0^(r-j) 1^j z`` with ``z`` in ``Z_{n-r}``."""
    if not 3 <= r <= n:
        return set()
    out: Set[int] = set()
    zs = _z(n - r)
    for j in range(1, (r - 1) // 2 + 1):
        out.update(_pre(r - j, j, zs, n - r))
    return out


@lru_cache(maxsize=None)
def delta_cover_bits(n: int, r: int) -> FrozenSet[int]:
    case = _check_delta(n, r)
    if case in ("1.ii", "3.iii"):
        cover = _diagonal_bits(n, n) | _diagonal_bits(n, n - 1) | _diagonal_bits(n, n - 2)
        if case == "3.iii":
            cover.discard(1)
        return frozenset(cover)
    if case == "3.i":
        return frozenset(_diagonal_bits(n, 3))
    return frozenset(_diagonal_bits(n, r) | _diagonal_bits(n, r - 1))


def delta_cover(n: int, r: int) -> Set[BinaryWord]:
    """The set of words the diagonal list ``delta_list(n, r)`` must cover."""
    return {BinaryWord(b, n) for b in delta_cover_bits(n, r)}


def delta_list(n: int, r: int) -> WordList:
    """The 1-Gray list over the diagonals ``D^r_n`` and ``D^(r-1)_n``.

    ``r`` must be 1 or 3 mod 4 with ``3 <= r <= n``.  Near the end of the
    range the list also absorbs ``D^n_n`` (``r = n - 1``); the exact cover is
    :func:`delta_cover`.
    """
    return WordList.from_bits(n, _delta(n, r))


def _z_plan(n: int) -> List[object]:
    """The order in which diagonal lists (ints) and single words (strs) are joined."""
    m = n % 4
    top = {1: n, 2: n - 1, 3: n - 2, 0: n - 3}[m]
    bottom = {1: n - 2, 2: n - 3, 3: n, 0: n - 1}[m]
    plan: List[object] = list(range(5, top + 1, 4))
    if m == 0:
        plan.append("0" * (n - 1) + "1")
    plan.append("0" * n)
    plan += list(range(bottom, 2, -4))
    return plan


@lru_cache(maxsize=None)
def _z(n: int) -> Tuple[int, ...]:
    if n in _BASE_Z:
        return _BASE_Z[n]
    out: List[int] = []
    for step in _z_plan(n):
        if isinstance(step, str):
            out.append(int(step, 2))
        else:
            out += _delta(n, step)
    return tuple(out)


def gray1_Z(n: int) -> WordList:
    """1-Gray code for the 1-decreasing words of length ``n`` starting with 0.

    It starts at ``0(001)^*`` and ends at ``(001)^*``.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    return WordList.from_bits(n, _z(n))


def gray1_W(n: int) -> WordList:
    """1-Gray code for all 1-decreasing words of length ``n``, from ``1^n`` to ``(001)^*``."""
    if n < 0:
        raise ValueError("n must be >= 0")
    words: Tuple[int, ...] = (0,)
    for m in range(1, n + 1):
        high = 1 << (m - 1)
        words = tuple(high | b for b in words) + _z(m)
    return WordList.from_bits(n, words)


# ---------------------------------------------------------------------------
# Verification and search


@dataclass
class GrayReport:
    max_distance: int
    distance_histogram: Dict[int, int]
    covers_expected: bool
    duplicate_free: bool
    first: Optional[BinaryWord]
    last: Optional[BinaryWord]
    k: int
    passed: bool = field(init=False)

    def __post_init__(self):
        self.passed = self.max_distance <= self.k and self.covers_expected and self.duplicate_free

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        hist = " ".join(f"{d}:{c}" for d, c in sorted(self.distance_histogram.items()))
        return (f"{status} k={self.k} max_distance={self.max_distance} "
                f"covers={self.covers_expected} duplicate_free={self.duplicate_free} "
                f"first={self.first} last={self.last} histogram=[{hist}]")


def verify_gray(words: WordList, k: int, expected: Optional[Iterable[BinaryWord]] = None) -> GrayReport:
    """Check that consecutive words differ in at most ``k`` positions.

    With ``expected`` the list must also be duplicate-free and set-equal to it.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    bits = words.bits
    hist = Counter((a ^ b).bit_count() for a, b in zip(bits, bits[1:]))
    unique = set(bits)
    duplicate_free = len(unique) == len(bits)
    if expected is None:
        covers = True
    else:
        expected = set(expected)
        covers = all(w.length == words.length for w in expected) and \
            unique == {w.bits for w in expected}
    return GrayReport(
        max_distance=max(hist) if hist else 0,
        distance_histogram=dict(hist),
        covers_expected=covers,
        duplicate_free=duplicate_free,
        first=words.first() if bits else None,
        last=words.last() if bits else None,
        k=k,
    )


def search_hamiltonian(vertices: Sequence[BinaryWord], budget: int = DEFAULT_NODE_BUDGET,
                       cycle: bool = False) -> Optional[List[BinaryWord]]:
    """Backtracking search for a Hamiltonian path (or cycle) in the distance-1 graph.

    Returns the path, ``None`` when none exists, and raises
    :class:`SearchBudgetExceeded` once ``budget`` nodes have been expanded.
    """
    verts = sorted(set(vertices))
    if not verts:
        return []
    index = {w: i for i, w in enumerate(verts)}
    adj: List[List[int]] = []
    for w in verts:
        adj.append([index[x] for x in (w.flip(p) for p in range(w.length)) if x in index])
    size = len(verts)
    if cycle and size < 3:
        return None
    if size == 1:
        return list(verts)
    visited = [False] * size
    free_deg = [len(a) for a in adj]
    path: List[int] = []
    expanded = 0

    def visit(v: int) -> None:
        visited[v] = True
        path.append(v)
        for u in adj[v]:
            free_deg[u] -= 1

    def unvisit(v: int) -> None:
        visited[v] = False
        path.pop()
        for u in adj[v]:
            free_deg[u] += 1

    def extend() -> bool:
        nonlocal expanded
        expanded += 1
        if expanded > budget:
            raise SearchBudgetExceeded(f"node budget {budget} exhausted")
        if len(path) == size:
            return not cycle or path[0] in adj[path[-1]]
        cands = [u for u in adj[path[-1]] if not visited[u]]
        cands.sort(key=lambda u: (free_deg[u], u))
        for u in cands:
            visit(u)
            if extend():
                return True
            unvisit(u)
        return False

    starts = [0] if cycle else sorted(range(size), key=lambda v: (len(adj[v]), v))
    for s in starts:
        visit(s)
        if extend():
            return [verts[i] for i in path]
        unvisit(s)
    return None


def search_gray1(n: int, q: int, budget: int = DEFAULT_NODE_BUDGET) -> Optional[WordList]:
    """Search exhaustively for some 1-Gray code of ``W^q_n``."""
    check_q(q)
    path = search_hamiltonian(list(lex_list(n, q)), budget=budget)
    return None if path is None else WordList(path, length=n)

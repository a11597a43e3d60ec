"""Binary words, run-block factorization and membership predicates.

A word of length ``n`` is stored as an integer whose most significant of
``n`` bits is the first letter.  Letter ``w_i`` (1-based, left to right) is
``word[i - 1]``.  Because of this packing, lexicographic order on words of a
fixed length coincides with integer order on ``bits``.
"""

from __future__ import annotations

from itertools import groupby
from typing import Iterator, List, NamedTuple, Union

__all__ = [
    "BinaryWord",
    "RunBlock",
    "IncomparableWordsError",
    "check_q",
    "decompose_runs",
    "is_q_decreasing",
    "avoids_ones_run",
    "hamming",
    "repeat_trim",
    "all_words",
]


class IncomparableWordsError(ValueError):
    """Raised when two words of different lengths are compared position-wise."""


def check_q(q: int) -> int:
    if not isinstance(q, int) or isinstance(q, bool) or q < 1:
        raise ValueError(f"q must be an integer >= 1, got {q!r}")
    return q


class BinaryWord:
    """An immutable finite word over ``{0, 1}``."""

    __slots__ = ("bits", "length")

    def __init__(self, bits: int, length: int):
        if length < 0 or bits < 0 or bits >> length:
            raise ValueError(f"bits {bits} do not fit in length {length}")
        self.bits = bits
        self.length = length

    @classmethod
    def parse(cls, text: str) -> "BinaryWord":
        """Parse a string of ``'0'``/``'1'`` characters; anything else is rejected."""
        if not isinstance(text, str) or text.strip("01"):
            raise ValueError(f"not a binary word: {text!r}")
        return cls(int(text, 2) if text else 0, len(text))

    @classmethod
    def ones(cls, n: int) -> "BinaryWord":
        return cls((1 << n) - 1, n)

    @classmethod
    def zeros(cls, n: int) -> "BinaryWord":
        return cls(0, n)

    def __len__(self) -> int:
        return self.length

    def __getitem__(self, index: int) -> int:
        if index < 0:
            index += self.length
        if not 0 <= index < self.length:
            raise IndexError("word index out of range")
        return (self.bits >> (self.length - 1 - index)) & 1

    def __iter__(self) -> Iterator[int]:
        for shift in range(self.length - 1, -1, -1):
            yield (self.bits >> shift) & 1

    def __str__(self) -> str:
        return format(self.bits, f"0{self.length}b") if self.length else ""

    def __repr__(self) -> str:
        return f"BinaryWord({str(self)!r})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BinaryWord):
            return NotImplemented
        return self.bits == other.bits and self.length == other.length

    def __hash__(self) -> int:
        return hash((self.bits, self.length))

    def __lt__(self, other: "BinaryWord") -> bool:
        if self.length == other.length:
            return self.bits < other.bits
        return str(self) < str(other)

    def __add__(self, other: "BinaryWord") -> "BinaryWord":
        return BinaryWord((self.bits << other.length) | other.bits,
                          self.length + other.length)

    def count_ones(self) -> int:
        return self.bits.bit_count()

    def reversed(self) -> "BinaryWord":
        return BinaryWord.parse(str(self)[::-1])

    def flip(self, index: int) -> "BinaryWord":
        """Return the word with the letter at 0-based ``index`` complemented."""
        if not 0 <= index < self.length:
            raise IndexError("word index out of range")
        return BinaryWord(self.bits ^ (1 << (self.length - 1 - index)), self.length)

    def trailing_ones(self) -> int:
        return ((self.bits + 1) & ~self.bits).bit_length() - 1


WordLike = Union[BinaryWord, str]


def _as_word(w: WordLike) -> BinaryWord:
    return BinaryWord.parse(w) if isinstance(w, str) else w


class RunBlock(NamedTuple):
    """One maximal factor ``0^zeros 1^ones`` of a word."""

    zeros: int
    ones: int


def decompose_runs(w: WordLike) -> List[RunBlock]:
    """Split ``w`` into its maximal ``0^a 1^b`` factors.

    A leading run of ones becomes a block with ``zeros == 0``; a trailing run
    of zeros becomes a block with ``ones == 0``.
    """
    blocks: List[RunBlock] = []
    zeros = None
    for symbol, run in groupby(str(_as_word(w))):
        size = sum(1 for _ in run)
        if symbol == "0":
            if zeros is not None:
                blocks.append(RunBlock(zeros, 0))
            zeros = size
        else:
            blocks.append(RunBlock(zeros or 0, size))
            zeros = None
    if zeros is not None:
        blocks.append(RunBlock(zeros, 0))
    return blocks


def is_q_decreasing(w: WordLike, q: int) -> bool:
    """True iff every maximal factor ``0^a 1^b`` with ``a > 0`` has ``q*a > b``."""
    check_q(q)
    return all(q * a > b for a, b in decompose_runs(w) if a > 0)


def avoids_ones_run(w: WordLike, k: int) -> bool:
    """True iff ``1^k`` is not a factor of ``w``."""
    if k < 1:
        raise ValueError("k must be >= 1")
    return "1" * k not in str(_as_word(w))


def hamming(u: WordLike, v: WordLike) -> int:
    u, v = _as_word(u), _as_word(v)
    if u.length != v.length:
        raise IncomparableWordsError(
            f"cannot compare words of lengths {u.length} and {v.length}")
    return (u.bits ^ v.bits).bit_count()


def repeat_trim(v: WordLike, n: int) -> BinaryWord:
    """The length-``n`` prefix of ``v v v ...``, e.g. ``(001)^*`` of length 7."""
    text = str(_as_word(v))
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return BinaryWord(0, 0)
    if not text:
        raise ValueError("cannot repeat the empty word to a positive length")
    return BinaryWord.parse((text * (n // len(text) + 1))[:n])


def all_words(n: int) -> Iterator[BinaryWord]:
    """Every word of length ``n`` in lexicographic order."""
    for bits in range(1 << n):
        yield BinaryWord(bits, n)

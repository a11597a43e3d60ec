"""Bijection between words avoiding ``1^(q+1)`` and q-decreasing words.

``psi`` inserts ``0 1^q`` right after the last ``0`` of a word (or appends
``1^(q+1)`` to an all-ones word).  ``phi`` peels ``1^k 0`` prefixes off a
``1^(q+1)``-free word and rebuilds the image from the right.
"""

from __future__ import annotations

from typing import List, Tuple

from .words import BinaryWord, WordLike, _as_word, avoids_ones_run, check_q, is_q_decreasing

__all__ = ["DomainError", "NotInImageError", "psi", "psi_inv", "phi", "phi_inv"]


class DomainError(ValueError):
    """The argument lies outside the domain on which a map is defined."""


class NotInImageError(DomainError):
    """The word is not an image of ``psi``."""


def _psi_text(s: str, q: int) -> str:
    i = s.rfind("0")
    if i < 0:
        return "1" * (len(s) + q + 1)
    return s[: i + 1] + "0" + "1" * q + s[i + 1:]


def psi(w: WordLike, q: int) -> BinaryWord:
    """Map ``v 0 1^k`` to ``v 0 0 1^(k+q)`` and ``1^n`` to ``1^(n+q+1)``."""
    check_q(q)
    return BinaryWord.parse(_psi_text(str(_as_word(w)), q))


def _psi_inv_text(s: str, q: int) -> str:
    if len(s) < q + 1:
        raise NotInImageError(f"{s!r} is shorter than q + 1 = {q + 1}")
    i = s.rfind("0")
    if i < 0:
        return s[: len(s) - q - 1]
    if len(s) - 1 - i < q:
        raise NotInImageError(f"{s!r} has fewer than {q} trailing ones")
    if i == 0 or s[i - 1] != "0":
        raise NotInImageError(f"{s!r} has no 00 before its trailing ones")
    return s[:i] + s[i + 1 + q:]


def psi_inv(w: WordLike, q: int) -> BinaryWord:
    """The unique ``u`` with ``psi(u, q) == w``; raises NotInImageError otherwise."""
    check_q(q)
    return BinaryWord.parse(_psi_inv_text(str(_as_word(w)), q))


def phi(w: WordLike, q: int) -> BinaryWord:
    """Send a word of ``B_n(1^(q+1))`` to the corresponding q-decreasing word."""
    check_q(q)
    w = _as_word(w)
    if not avoids_ones_run(w, q + 1):
        raise DomainError(f"{w} contains 1^{q + 1}")
    s = str(w)
    # Each peeled prefix 1^k 0 is an op: k == q means psi, k < q means append 0 1^k.
    ops: List[int] = []
    pos = 0
    while True:
        nxt = s.find("0", pos)
        if nxt < 0:
            break
        ops.append(nxt - pos)
        pos = nxt + 1
    image = s[pos:]
    for k in reversed(ops):
        image = _psi_text(image, q) if k == q else image + "0" + "1" * k
    return BinaryWord.parse(image)


def phi_inv(w: WordLike, q: int) -> BinaryWord:
    """Inverse of :func:`phi`; raises DomainError if ``w`` is not q-decreasing."""
    check_q(q)
    w = _as_word(w)
    if not is_q_decreasing(w, q):
        raise DomainError(f"{w} is not {q}-decreasing")
    s = str(w)
    prefix: List[str] = []
    while True:
        t = len(s) - len(s.rstrip("1"))
        if t >= q and len(s) >= q + 1:
            s = _psi_inv_text(s, q)
            prefix.append("1" * q + "0")
        elif t == len(s):
            break
        else:
            s = s[: len(s) - t - 1]
            prefix.append("1" * t + "0")
    return BinaryWord.parse("".join(prefix) + s)


def table(n: int, q: int) -> List[Tuple[BinaryWord, BinaryWord]]:
    """Pairs ``(u, phi(u))`` for every ``u`` in ``B_n(1^(q+1))``, lexicographically."""
    out = []
    for bits in range(1 << n):
        u = BinaryWord(bits, n)
        if avoids_ones_run(u, q + 1):
            out.append((u, phi(u, q)))
    return out

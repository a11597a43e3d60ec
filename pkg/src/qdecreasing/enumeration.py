"""Exact enumeration from rational generating functions.

Every series is expanded as ``numerator / denominator`` where the
denominator has a unit constant term, so coefficients follow the linear
recurrence ``c_n = (N_n - sum_{i>=1} D_i c_{n-i}) / D_0``.  Bivariate
series carry polynomials in ``y`` (lists of ints, index = degree) as their
``x``-coefficients.
"""

from __future__ import annotations

import csv
import io
import json
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

from .words import check_q

__all__ = [
    "KINDS",
    "BIVARIATE_KINDS",
    "CountTable",
    "FrequencyReport",
    "gen_fib",
    "expand_series",
    "count_qdecreasing",
    "count_by_ones",
    "parity_difference",
    "popularity",
    "frequency_report",
]

KINDS = ("fib", "Bq", "Sq", "Wq", "Fq", "Dq", "P1", "P0", "H")
BIVARIATE_KINDS = frozenset({"Bq", "Sq", "Wq"})

Poly = List[int]
# Bivariate polynomial: {x_degree: y-polynomial}
BiPoly = Dict[int, Poly]


def gen_fib(n: int, k: int) -> int:
    """The ``n``-th ``k``-generalized Fibonacci number ``f_{n,k}``."""
    if n < 0 or k < 2:
        raise ValueError("need n >= 0 and k >= 2")
    if n <= k - 2:
        return 0
    if n == k - 1:
        return 1
    window = deque([0] * (k - 1) + [1], maxlen=k)
    total = 1
    for _ in range(n - k + 1):
        oldest = window[0] if len(window) == k else 0
        window.append(total)
        total = 2 * total - oldest
    return window[-1]


def _poly_mul(a: Poly, b: Poly) -> Poly:
    out = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return out


def _poly_trim(a: Poly) -> Poly:
    while a and a[-1] == 0:
        a.pop()
    return a


def _expand_univariate(num: Sequence[int], den: Sequence[int], n_max: int) -> List[int]:
    d0 = den[0]
    if d0 not in (1, -1):
        raise ValueError("denominator constant term must be +-1")
    c: List[int] = []
    for n in range(n_max + 1):
        acc = num[n] if n < len(num) else 0
        for i in range(1, min(n, len(den) - 1) + 1):
            if den[i]:
                acc -= den[i] * c[n - i]
        c.append(acc * d0)
    return c


def _expand_bivariate(num: BiPoly, den: BiPoly, n_max: int) -> List[Poly]:
    d0 = den.get(0, [])
    if _poly_trim(list(d0)) not in ([1], [-1]):
        raise ValueError("denominator constant term must be +-1")
    sign = d0[0]
    deg = max(den)
    c: List[Poly] = []
    for n in range(n_max + 1):
        acc = list(num.get(n, []))
        for i in range(1, min(n, deg) + 1):
            di = den.get(i)
            if not di:
                continue
            prod = _poly_mul(di, c[n - i])
            if len(prod) > len(acc):
                acc.extend([0] * (len(prod) - len(acc)))
            for j, v in enumerate(prod):
                acc[j] -= v
        c.append(_poly_trim([v * sign for v in acc]))
    return c


def _bipoly(*terms: Tuple[int, int, int]) -> BiPoly:
    out: BiPoly = {}
    for coef, xd, yd in terms:
        row = out.setdefault(xd, [])
        if len(row) <= yd:
            row.extend([0] * (yd + 1 - len(row)))
        row[yd] += coef
    return out


def _poly(*terms: Tuple[int, int]) -> Poly:
    size = max(d for _, d in terms) + 1
    out = [0] * size
    for coef, d in terms:
        out[d] += coef
    return out


def _uni_num_den(kind: str, q: int) -> Tuple[Poly, Poly]:
    base = _poly((1, 0), (-2, 1), (1, q + 2))
    if kind == "fib":
        k = q + 1
        return _poly((1, k - 1)), [1] + [-1] * k
    if kind == "Fq":
        return _poly((1, 0), (-1, q + 1)), base
    if kind == "Dq":
        sign = -1 if q % 2 else 1
        return _poly((-1, 0), (sign, q + 1)), _poly((-1, 0), (sign, q + 2))
    if kind == "P1":
        num = _poly((1, 1), (-q, q + 1), (q - 2, q + 2), (1, 2 * q + 3))
        return num, _poly_mul(base, base)
    if kind == "P0":
        return _poly((1, 1), (-1, q + 1)), _poly_mul(base, base)
    if kind == "H":
        return _poly((1, 0), (-2, q + 1)), base
    raise ValueError(f"unknown series kind {kind!r}; expected one of {', '.join(KINDS)}")


def _bi_num_den(kind: str, q: int) -> Tuple[BiPoly, BiPoly]:
    # W_q and B_q (after cancelling a factor y) share this denominator.
    shared = _bipoly((1, 0, 0), (-1, 1, 1), (-1, 1, 0), (1, q + 2, q + 1))
    if kind == "Wq":
        return _bipoly((1, 0, 0), (-1, q + 1, q)), shared
    if kind == "Bq":
        return _bipoly((1, 0, 0), (-1, q + 1, q + 1)), shared
    if kind == "Sq":
        # x(1 - (xy)^q) / ((xy - 1)(x^{q+1} y^q - 1)), denominator expanded.
        num = _bipoly((1, 1, 0), (-1, q + 1, q))
        den = _bipoly((1, 0, 0), (-1, 1, 1), (-1, q + 1, q), (1, q + 2, q + 1))
        return num, den
    raise ValueError(f"unknown series kind {kind!r}")


@dataclass(frozen=True)
class CountTable:
    """Truncated coefficients of one generating function.

    ``coeffs[n]`` is an int for univariate kinds and a list indexed by the
    number of ones ``k`` (length ``n + 1``) for bivariate kinds.  For
    ``kind == "fib"`` the table holds ``f_{n,k}`` and ``q`` is ``None``.
    """

    kind: str
    q: Optional[int]
    n_max: int
    coeffs: tuple
    k: Optional[int] = field(default=None)

    @property
    def bivariate(self) -> bool:
        return self.kind in BIVARIATE_KINDS

    def __getitem__(self, index):
        if isinstance(index, tuple):
            n, k = index
            row = self.coeffs[n]
            return row[k] if 0 <= k < len(row) else 0
        return self.coeffs[index]

    def row(self, n: int) -> List[int]:
        return list(self.coeffs[n]) if self.bivariate else [self.coeffs[n]]

    def to_dict(self) -> dict:
        out = {"kind": self.kind, "q": self.q, "n_max": self.n_max,
               "coeffs": [list(c) if self.bivariate else c for c in self.coeffs]}
        if self.k is not None:
            out["k"] = self.k
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        if self.bivariate:
            writer.writerow(["n", "k", "coeff"])
            for n, row in enumerate(self.coeffs):
                for k, v in enumerate(row):
                    writer.writerow([n, k, v])
        else:
            writer.writerow(["n", "coeff"])
            for n, v in enumerate(self.coeffs):
                writer.writerow([n, v])
        return buf.getvalue()


@lru_cache(maxsize=256)
def expand_series(kind: str, q: int, n_max: int) -> CountTable:
    """Expand the named generating function up to ``x^n_max``.

    Kinds: ``fib`` (``g_{q+1}``), ``Bq``, ``Sq``, ``Wq`` (bivariate, ``y``
    marks ones), ``Fq``, ``Dq`` (``W_q(x, -1)``), ``P1``/``P0`` (popularity of
    ones/zeros) and ``H``.
    """
    check_q(q)
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    if kind in BIVARIATE_KINDS:
        num, den = _bi_num_den(kind, q)
        rows = _expand_bivariate(num, den, n_max)
        padded = []
        for n, row in enumerate(rows):
            if len(row) > n + 1:
                raise ArithmeticError(f"{kind} row {n} has degree above {n}")
            padded.append(tuple(row + [0] * (n + 1 - len(row))))
        return CountTable(kind, q, n_max, tuple(padded))
    num, den = _uni_num_den(kind, q)
    coeffs = tuple(_expand_univariate(num, den, n_max))
    if kind == "fib":
        return CountTable(kind, None, n_max, coeffs, k=q + 1)
    return CountTable(kind, q, n_max, coeffs)


def count_qdecreasing(n: int, q: int) -> int:
    """Number of q-decreasing words of length ``n``."""
    check_q(q)
    if n < 0:
        raise ValueError("n must be >= 0")
    return gen_fib(n + q + 1, q + 1)


def count_by_ones(n: int, q: int) -> List[int]:
    """``[w_{n,0}, ..., w_{n,n}]``: q-decreasing words of length n by number of ones."""
    return list(expand_series("Wq", q, n)[n])


def parity_difference(n: int, q: int) -> int:
    """Even-weight minus odd-weight q-decreasing words of length ``n``."""
    return expand_series("Dq", q, n)[n]


def popularity(n: int, q: int, symbol: int = 1) -> int:
    """Total occurrences of ``symbol`` over all q-decreasing words of length ``n``."""
    if symbol not in (0, 1):
        raise ValueError("symbol must be 0 or 1")
    return expand_series("P1" if symbol else "P0", q, n)[n]


@dataclass(frozen=True)
class FrequencyReport:
    """Popularity of ones in ``W^q_n`` (``u``) versus ``B_n(1^(q+1))`` (``v``)."""

    n: int
    q: int
    u: int
    v: int
    total_bits: int

    @property
    def u_ratio(self) -> Fraction:
        return Fraction(self.u, self.total_bits)

    @property
    def v_ratio(self) -> Fraction:
        return Fraction(self.v, self.total_bits)

    @property
    def count(self) -> int:
        return self.total_bits // self.n


def frequency_report(n: int, q: int) -> FrequencyReport:
    check_q(q)
    if n < 1:
        raise ValueError("n must be >= 1")
    u = popularity(n, q, 1)
    v = sum(k * c for k, c in enumerate(expand_series("Bq", q, n)[n]))
    return FrequencyReport(n, q, u, v, n * count_qdecreasing(n, q))


def frequency_trend(q: int, n_lo: int, n_hi: int) -> List[FrequencyReport]:
    """Frequency reports for ``n_lo <= n <= n_hi``."""
    return [frequency_report(n, q) for n in range(n_lo, n_hi + 1)]

"""Hirzebruch-Jung continued fractions and the blowup calculus on tuples.

A tuple t = (t_1, ..., t_k) of non-negative integers encodes the
minus-sign continued fraction

    [t_1, ..., t_k] = t_1 - 1/(t_2 - 1/( ... - 1/t_k)) .

The tuple is *admissible* when every denominator met during bottom-up
evaluation, i.e. every tail value [t_i, ..., t_k] for i >= 2, is positive.
Admissible tuples evaluating to 0 are exactly the tuples reachable from
(0) by strict blowups, and there are Catalan(k-1) of them in each length
k >= 2.  Expansions with all entries >= 2 are the unique such expansions
of rationals > 1 and are the combinatorial backbone of cyclic quotient
singularities and lens spaces.
"""

from __future__ import annotations

import sys
import threading
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Optional, Sequence

from .errors import InvalidInput, InvalidPair, NotBlowdownable

__all__ = [
    "CFValue",
    "eval_cf",
    "hj_expand",
    "is_admissible_matrix",
    "blowdown",
    "blowup",
    "enumerate_zero_cf",
    "strict_blowup_sequence",
    "bounded_zero_cf",
    "dual_expansion",
    "reverse",
]

CFTuple = tuple[int, ...]


@dataclass(frozen=True)
class CFValue:
    """Outcome of evaluating a continued fraction.

    ``admissible`` is False when some tail denominator is <= 0, in which
    case ``position`` is the 1-based index where the first bad tail starts
    (in bottom-up evaluation order).  The empty tuple is admissible with no
    value, purely as the base of the recursion.
    """

    admissible: bool
    value: Optional[Fraction] = None
    position: Optional[int] = None


def _check_entries(t: Sequence[int]) -> None:
    for x in t:
        if not isinstance(x, int) or x < 0:
            raise ValueError(f"tuple entries must be non-negative ints, got {x!r}")


def eval_cf(t: Sequence[int]) -> CFValue:
    """Evaluate [t_1, ..., t_k] exactly, bottom up.

    Inadmissibility (a tail value <= 0 consumed as a denominator, zero
    included) is reported as a value, not an error.  The denominator and
    numerator are tracked through tail continuants, so a single integer
    pass decides admissibility and yields the reduced rational.
    """
    _check_entries(t)
    k = len(t)
    if k == 0:
        return CFValue(True)
    # s1, s2 = K(t_{i+1}..t_k), K(t_{i+2}..t_k);  tail value = K_i / K_{i+1}
    s1, s2 = 1, 0
    for i in range(k, 1, -1):
        s1, s2 = t[i - 1] * s1 - s2, s1
        if s1 <= 0:
            return CFValue(False, None, i)
    return CFValue(True, Fraction(t[0] * s1 - s2, s1))


def hj_expand(p: int, q: int) -> CFTuple:
    """The unique expansion of p/q with all entries >= 2.

    Requires coprime p > q >= 1.  Each step takes the ceiling and recurses
    on the reciprocal remainder.
    """
    if not (isinstance(p, int) and isinstance(q, int)):
        raise InvalidPair(f"p, q must be ints, got {p!r}, {q!r}")
    if q < 1 or p <= q or gcd(p, q) != 1:
        raise InvalidPair(f"need coprime p > q >= 1, got ({p}, {q})")
    out = []
    while q:
        a = -(-p // q)
        out.append(a)
        p, q = q, a * q - p
    return tuple(out)


def is_admissible_matrix(t: Sequence[int]) -> bool:
    """Admissibility of a tuple of positive integers, by the matrix test.

    The tuple is admissible iff the symmetric tridiagonal matrix with
    diagonal t and off-diagonal -1 entries is positive semi-definite of
    rank >= k-1.  The leading principal minors of that matrix are the
    prefix continuants K(t_1..t_i), and for an irreducible tridiagonal
    matrix the test reduces to: all proper leading minors positive and the
    determinant non-negative.
    """
    if any(x < 1 for x in t):
        raise ValueError("matrix admissibility test needs positive entries")
    k = len(t)
    prev2, prev = 0, 1
    for i in range(k - 1):
        prev2, prev = prev, t[i] * prev - prev2
        if prev <= 0:
            return False
    return k == 0 or t[k - 1] * prev - prev2 >= 0


def blowdown(t: Sequence[int], s: int) -> CFTuple:
    """Remove the entry t_s = 1 and decrement both neighbors.

    s is 1-based; truncation applies at the ends.  The result of blowing
    down an admissible zero tuple is again an admissible zero tuple, one
    shorter.
    """
    t = tuple(t)
    k = len(t)
    if not (1 <= s <= k) or k < 2:
        raise NotBlowdownable(f"position {s} out of range for length {k}")
    if t[s - 1] != 1:
        raise NotBlowdownable(f"entry at position {s} is {t[s - 1]}, not 1")
    left = t[: s - 2] + (t[s - 2] - 1,) if s >= 2 else ()
    right = ((t[s] - 1,) + t[s + 1 :]) if s <= k - 1 else ()
    return left + right


def blowup(t: Sequence[int], s: int) -> CFTuple:
    """Insert a 1 at position s (1-based, 1..k+1) and increment the
    neighbors that exist.  Inverse of blowdown at s; strict when s > 1."""
    t = tuple(t)
    k = len(t)
    if not (1 <= s <= k + 1):
        raise ValueError(f"insertion position {s} out of range for length {k}")
    out = list(t[: s - 1]) + [1] + list(t[s - 1 :])
    if s >= 2:
        out[s - 2] += 1
    if s <= k:
        out[s] += 1
    return tuple(out)


# cache of zero-tuple generations, index = length
_levels: list[set[CFTuple]] = [set(), {(0,)}]
_levels_lock = threading.Lock()


def enumerate_zero_cf(k: int) -> set[CFTuple]:
    """All admissible tuples of positive integers of length k with value 0.

    Generated as the closure of {(0)} under strict blowups (insertion
    position >= 2), deduplicated level by level; different blowup orders
    produce the same tuple.  For k = 1 this is {(0,)} by convention; for
    k >= 2 the count is the Catalan number C(k-1).
    """
    if k < 1:
        raise ValueError(f"length must be >= 1, got {k}")
    with _levels_lock:
        while len(_levels) <= k:
            j = len(_levels) - 1
            nxt = set()
            for t in _levels[j]:
                for s in range(2, j + 2):
                    nxt.add(blowup(t, s))
            _levels.append(nxt)
        return set(_levels[k])


def strict_blowup_sequence(n: Sequence[int]) -> tuple[int, ...]:
    """A canonical sequence of strict insertion positions building n from (0).

    Deterministic choice: at every stage the tuple is blown down at its
    earliest entry equal to 1 in a strict position (index >= 2); the
    recorded positions are returned in forward (blowup) order.  Works for
    any length, unlike replaying the Catalan-sized generation.
    """
    n = tuple(n)
    v = eval_cf(n)
    if not v.admissible or v.value != 0:
        raise ValueError(f"{n} is not an admissible zero tuple")
    seq = []
    cur = n
    while len(cur) > 1:
        for s in range(2, len(cur) + 1):
            if cur[s - 1] == 1:
                seq.append(s)
                cur = blowdown(cur, s)
                break
        else:
            raise ValueError(f"{cur} has no strict entry equal to 1")
    return tuple(reversed(seq))


def bounded_zero_cf(bounds: Sequence[int]) -> list[CFTuple]:
    """All admissible zero tuples n with 0 <= n_i <= bounds_i, lexicographic.

    Depth-first search on forced tail values: once n_1..n_{i-1} are fixed,
    the tail [n_i, ..., n_k] must equal a known positive rational, which
    pins n_i into a short integer range.  Equivalent to filtering
    enumerate_zero_cf(k) by the bounds, but independent of the Catalan
    growth, so it works at any length.
    """
    _check_entries(bounds)
    k = len(bounds)
    if k == 0:
        return []
    if k + 50 > sys.getrecursionlimit():
        sys.setrecursionlimit(k + 200)
    out: list[CFTuple] = []
    path: list[int] = []

    def extend(i: int, num: int, den: int) -> None:
        # the tail [n_i .. n_k] must evaluate to num/den, with den > 0
        if i == k:
            v, r = divmod(num, den)
            if not r and 0 <= v <= bounds[k - 1]:
                out.append(tuple(path) + (v,))
            return
        for v in range(num // den + 1, bounds[i - 1] + 1):
            path.append(v)
            extend(i + 1, den, v * den - num)
            path.pop()

    extend(1, 0, 1)
    return out


def dual_expansion(b: Sequence[int]) -> CFTuple:
    """The expansion of p/q given the expansion of p/(p-q), via the point
    diagram.

    Row i of the diagram carries b_i - 1 dots and each row starts under
    the last dot of the previous one; the column counts plus one give the
    dual expansion.  The result is cross-checked against the direct route
    (recover p and q from the value, expand p/q); the two must agree.
    """
    b = tuple(b)
    if not b or any(x < 2 for x in b):
        raise InvalidInput(f"need a tuple with all entries >= 2, got {b}")
    counts: list[int] = []
    col = 0
    for x in b:
        last = col + x - 2
        if len(counts) <= last:
            counts.extend([0] * (last + 1 - len(counts)))
        for j in range(col, last + 1):
            counts[j] += 1
        col = last
    a = tuple(c + 1 for c in counts)

    v = eval_cf(b)
    if not v.admissible or v.value is None or v.value <= 1:
        raise InvalidInput(f"{b} does not present a pair p > p-q >= 1")
    p, pq = v.value.numerator, v.value.denominator
    assert a == hj_expand(p, p - pq), "point diagram disagrees with direct expansion"
    return a


def reverse(t: Sequence[int]) -> CFTuple:
    """Entries in reversed order."""
    return tuple(reversed(t))

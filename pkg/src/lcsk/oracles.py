"""Brute-force reference implementations used to validate the fast paths.

Everything here favours directness over speed: the chunked-LCS oracles
maximize over every admissible final chunk length at every cell, the
op-matching oracles test order-isomorphism by materializing the full
pairwise comparison matrices, and the range-minimum oracle is a linear
scan.  None of them share code with the optimized implementations.
"""

from __future__ import annotations

import numpy as np

from .core import as_items


def textbook_lcs(x, y) -> int:
    """Classic quadratic LCS length (no chunk constraint)."""
    xs, ys = as_items(x), as_items(y)
    m, n = len(xs), len(ys)
    prev = [0] * (n + 1)
    for i in range(1, m + 1):
        cur = [0] * (n + 1)
        xi = xs[i - 1]
        for j in range(1, n + 1):
            if xi == ys[j - 1]:
                cur[j] = prev[j - 1] + 1
            else:
                cur[j] = cur[j - 1] if cur[j - 1] >= prev[j] else prev[j]
        prev = cur
    return prev[n]


def naive_lcs_kplus(x, y, k: int) -> int:
    """Cubic-time LCS_{k+} length: try every final chunk length at every cell.

    The recurrence is the definitional one: an optimal solution for the
    prefixes (i, j) either drops x[i], drops y[j], or ends with a common
    chunk of some length l >= k.  The common-suffix run is rescanned from
    scratch at each cell; no helper tables.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    xs, ys = as_items(x), as_items(y)
    m, n = len(xs), len(ys)
    table = [[0] * (n + 1) for _ in range(m + 1)]
    for i in range(1, m + 1):
        row, up = table[i], table[i - 1]
        for j in range(1, n + 1):
            best = row[j - 1]
            if up[j] > best:
                best = up[j]
            run = 0
            while run < i and run < j and xs[i - 1 - run] == ys[j - 1 - run]:
                run += 1
            for ln in range(k, run + 1):
                cand = table[i - ln][j - ln] + ln
                if cand > best:
                    best = cand
            row[j] = best
    return table[m][n]


def _iso_violation_cap(a: np.ndarray, b: np.ndarray) -> int:
    """Largest L such that a[:L] and b[:L] are order-isomorphic.

    Builds both pairwise <= matrices; a disagreement at (p, q) poisons every
    prefix that contains both positions, i.e. lengths > max(p, q).
    """
    ma = a[:, None] <= a[None, :]
    mb = b[:, None] <= b[None, :]
    bad = np.nonzero(ma != mb)
    if bad[0].size == 0:
        return len(a)
    return int(np.minimum.reduce(np.maximum(bad[0], bad[1])))


def naive_op_lcs_kplus(x, y, k: int) -> int:
    """Cubic-time op-LCS_{k+} length, mirroring naive_lcs_kplus.

    The final-chunk test asks for order-isomorphism of the two suffix
    windows instead of equality.  The longest isomorphic suffix window is
    found by reversing both windows and locating the first pairwise
    disagreement.
    """
    if k < 2:
        raise ValueError("k must be >= 2 in op mode")
    xs = np.array(as_items(x))
    ys = np.array(as_items(y))
    m, n = len(xs), len(ys)
    table = [[0] * (n + 1) for _ in range(m + 1)]
    for i in range(1, m + 1):
        row, up = table[i], table[i - 1]
        for j in range(1, n + 1):
            best = row[j - 1]
            if up[j] > best:
                best = up[j]
            w = i if i < j else j
            if w >= k:
                run = _iso_violation_cap(xs[i - w : i][::-1], ys[j - w : j][::-1])
                for ln in range(k, run + 1):
                    cand = table[i - ln][j - ln] + ln
                    if cand > best:
                        best = cand
            row[j] = best
    return table[m][n]


def naive_oplce(s1, s2, i1: int, i2: int) -> int:
    """Op-matching longest common extension of s1 from i1 vs s2 from i2 (1-based)."""
    a = as_items(s1)
    b = as_items(s2)
    if not 1 <= i1 <= len(a) or not 1 <= i2 <= len(b):
        raise ValueError("suffix start out of range")
    cap = min(len(a) - i1 + 1, len(b) - i2 + 1)
    return _iso_violation_cap(
        np.array(a[i1 - 1 : i1 - 1 + cap]), np.array(b[i2 - 1 : i2 - 1 + cap])
    )


def naive_z(s, i: int) -> list:
    """Op-matching Z-table of the suffix s(i:), 1-based; entry 0 is unused.

    Z[j] = length of the longest prefix of the suffix that is
    order-isomorphic to the window starting at position j of the suffix.
    """
    items = as_items(s)
    if not 1 <= i <= len(items):
        raise ValueError("suffix start out of range")
    t = np.array(items[i - 1 :])
    nn = len(t)
    z = [0] * (nn + 1)
    z[1] = nn
    for j in range(2, nn + 1):
        cap = nn - j + 1
        z[j] = _iso_violation_cap(t[:cap], t[j - 1 : j - 1 + cap])
    return z


def scan_rmq(values, a: int, b: int) -> tuple:
    """Linear-scan range minimum over values[a..b] (1-based, inclusive).

    Returns (min_value, position) with the leftmost position on ties; the
    optimized structures are free to break ties differently, so compare
    values and re-check positions rather than expecting identical indices.
    """
    seq = as_items(values)
    if not 1 <= a <= b <= len(seq):
        raise ValueError(f"bad range [{a}, {b}] for {len(seq)} values")
    pos = a
    val = seq[a - 1]
    for p in range(a + 1, b + 1):
        if seq[p - 1] < val:
            val, pos = seq[p - 1], p
    return val, pos

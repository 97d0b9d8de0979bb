"""Numba-jitted implementations of the hot scans.

Subsets are walked as integer bitmasks in ascending order, so results are
bit-identical to the numpy fallback.
"""

from __future__ import annotations

import numpy as np
from numba import njit

NAME = "numba"

_ONE = np.uint64(1)


def _pack_rows(mat: np.ndarray) -> np.ndarray:
    """Pack each boolean row into ceil(n/64) uint64 words."""
    n = mat.shape[1]
    nwords = max(1, (n + 63) // 64)
    words = np.zeros((mat.shape[0], nwords), dtype=np.uint64)
    for i in range(mat.shape[0]):
        idx = np.flatnonzero(mat[i]).astype(np.uint64)
        np.bitwise_or.at(words[i], (idx >> np.uint64(6)).astype(np.int64),
                         _ONE << (idx & np.uint64(63)))
    return words


@njit(cache=True)
def _closure_inplace(m):
    n = m.shape[0]
    for i in range(n):
        m[i, i] = True
    for k in range(n):
        for i in range(n):
            if m[i, k]:
                for j in range(n):
                    if m[k, j]:
                        m[i, j] = True


def transitive_closure(adj: np.ndarray) -> np.ndarray:
    """Reflexive-transitive closure of a boolean adjacency matrix."""
    m = adj.copy()
    _closure_inplace(m)
    return m


@njit(cache=True)
def _antichain_scan(comp_bits, n, out):
    # out is None-sized on the counting pass; filled on the second pass
    found = 0
    one = np.uint64(1)
    for mask in range(1 << n):
        m = np.uint64(mask)
        ok = True
        for i in range(n):
            if (m >> np.uint64(i)) & one:
                if comp_bits[i] & m:
                    ok = False  # a selected element is comparable to another
                    break
            elif not (comp_bits[i] & m):
                ok = False  # an unselected element could be added
                break
        if ok:
            if out.size > found:
                out[found] = mask
            found += 1
    return found


def maximal_antichain_masks(comp: np.ndarray) -> np.ndarray:
    """All maximal antichains as ascending subset bitmasks (see numpy twin)."""
    n = comp.shape[0]
    if n == 0:
        return np.zeros(1, dtype=np.int64)
    bits = _pack_rows(comp)[:, 0].copy()
    count = _antichain_scan(bits, n, np.empty(0, dtype=np.int64))
    out = np.empty(count, dtype=np.int64)
    _antichain_scan(bits, n, out)
    return out


@njit(cache=True)
def _split_scan(down_w, up_w, universe):
    k = down_w.shape[0]
    nwords = down_w.shape[1]
    one = np.uint64(1)
    for mask in range(1 << k):
        m = np.uint64(mask)
        good = True
        for w in range(nwords):
            cov = np.uint64(0)
            for i in range(k):
                if (m >> np.uint64(i)) & one:
                    cov |= down_w[i, w]
                else:
                    cov |= up_w[i, w]
            if cov != universe[w]:
                good = False
                break
        if good:
            return mask
    return -1


def first_split_mask(down: np.ndarray, up: np.ndarray) -> int:
    """Smallest covering D-subset bitmask, or -1 (see numpy twin)."""
    n = down.shape[1]
    down_w = _pack_rows(down)
    up_w = _pack_rows(up)
    universe = _pack_rows(np.ones((1, n), dtype=bool))[0]
    return int(_split_scan(down_w, up_w, universe))


@njit(cache=True)
def _density_scan(leq):
    n = leq.shape[0]
    for i in range(n):
        for j in range(n):
            if not leq[i, j] or i == j:
                continue
            nonempty = False
            split_pair = False
            for z1 in range(n):
                if z1 == i or z1 == j or not (leq[i, z1] and leq[z1, j]):
                    continue
                nonempty = True
                for z2 in range(z1 + 1, n):
                    if z2 == i or z2 == j or not (leq[i, z2] and leq[z2, j]):
                        continue
                    if not leq[z1, z2] and not leq[z2, z1]:
                        split_pair = True
                        break
                if split_pair:
                    break
            if nonempty and not split_pair:
                return i, j
    return -1, -1


def density_gap(leq: np.ndarray) -> tuple[int, int]:
    """First interval witnessing failure of strong density (see numpy twin)."""
    i, j = _density_scan(leq)
    return int(i), int(j)

"""Pure-numpy implementations of the hot scans.

Same contracts as numba_kernels; subset scans are chunked so memory stays
bounded while the inner work is vectorized.
"""

from __future__ import annotations

import numpy as np

NAME = "numpy"

_CHUNK = 1 << 14


def transitive_closure(adj: np.ndarray) -> np.ndarray:
    """Reflexive-transitive closure of a boolean adjacency matrix."""
    n = adj.shape[0]
    m = adj | np.eye(n, dtype=bool)
    while True:
        step = m | ((m.astype(np.uint8) @ m.astype(np.uint8)) > 0)
        if np.array_equal(step, m):
            return step
        m = step


def maximal_antichain_masks(comp: np.ndarray) -> np.ndarray:
    """All maximal antichains of an n-element poset, as subset bitmasks.

    comp is the symmetric, hollow comparability matrix (comp[i,j] iff i != j
    and i, j comparable). Bit i of a mask selects element i. Masks are
    returned in ascending order.
    """
    n = comp.shape[0]
    if n == 0:
        return np.zeros(1, dtype=np.int64)
    comp_u8 = comp.astype(np.uint8)
    bits = np.arange(n, dtype=np.int64)
    found = []
    for base in range(0, 1 << n, _CHUNK):
        masks = np.arange(base, min(base + _CHUNK, 1 << n), dtype=np.int64)
        members = ((masks[:, None] >> bits) & 1).astype(bool)
        # touched[j] = number of selected elements comparable to j
        touched = members @ comp_u8
        antichain = ~(members & (touched > 0)).any(axis=1)
        # maximal iff every unselected element is comparable to a member
        maximal = (members | (touched > 0)).all(axis=1)
        found.append(masks[antichain & maximal])
    return np.concatenate(found)


def first_split_mask(down: np.ndarray, up: np.ndarray) -> int:
    """Smallest D-subset bitmask whose cover equals the whole poset, or -1.

    down[i] / up[i] are boolean rows: the elements below / above the i-th
    antichain member. Members with bit set go to D (covering downward), the
    rest to U (covering upward).
    """
    k, n = down.shape
    down_u8 = down.astype(np.uint8)
    up_u8 = up.astype(np.uint8)
    bits = np.arange(k, dtype=np.int64)
    for base in range(0, 1 << k, _CHUNK):
        masks = np.arange(base, min(base + _CHUNK, 1 << k), dtype=np.int64)
        members = ((masks[:, None] >> bits) & 1).astype(np.uint8)
        covered = (members @ down_u8 + (1 - members) @ up_u8) > 0
        hits = covered.all(axis=1)
        if hits.any():
            return int(masks[np.argmax(hits)])
    return -1


def density_gap(leq: np.ndarray) -> tuple[int, int]:
    """First open interval (by index pair) that is non-empty but has no
    incomparable pair inside; (-1, -1) if none exists."""
    n = leq.shape[0]
    lt = leq & ~np.eye(n, dtype=bool)
    inc = ~leq & ~leq.T
    for i in range(n):
        row = lt[i]
        if not row.any():
            continue
        for j in range(n):
            if not lt[i, j]:
                continue
            inside = row & lt[:, j]
            idx = np.flatnonzero(inside)
            if idx.size == 0:
                continue
            if not inc[np.ix_(idx, idx)].any():
                return i, j
    return -1, -1

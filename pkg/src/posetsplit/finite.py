"""Finite partially ordered sets with exhaustive antichain machinery.

A FinitePoset is an ordered tuple of opaque element identifiers plus a dense
boolean relation matrix. Everything downstream is an exhaustive scan, which
is fine at the sizes this package targets (subset searches are capped at
2^20 by default and run on the selected kernel backend).

Conventions:
    - elements[i] is the i-th element; all enumeration orders derive from
      this indexing, so outputs are reproducible byte for byte.
    - leq[i, j] == True iff elements[i] <= elements[j].
    - subset searches walk bitmasks in ascending order; bit i selects
      elements[i] (for splits: bit i of the mask sends the i-th antichain
      member, in index order, to the down part).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

import numpy as np

from . import _accel
from .errors import CapacityError, InputError, PreconditionError

#: default cap on n for 2^n subset scans
DEFAULT_BOUND = 20


@dataclass(frozen=True)
class SplitPartition:
    """A two-part split of a maximal antichain: down-covering and
    up-covering members, each a tuple in element-index order."""
    down: tuple
    up: tuple


@dataclass(frozen=True)
class SplittingCheck:
    """Outcome of checking the splitting property, with the first maximal
    antichain that fails to split when the property does not hold."""
    has_property: bool
    counterexample: Optional[tuple]


@dataclass(frozen=True)
class DensityCheck:
    """Outcome of the strong-density check; gap is the first open interval
    (x, y) that is non-empty but contains no incomparable pair."""
    strongly_dense: bool
    gap: Optional[tuple]


class FinitePoset:

    def __init__(self, elements: Iterable, leq: np.ndarray, *, check: bool = True):
        elements = tuple(elements)
        leq = np.asarray(leq, dtype=bool)
        n = len(elements)
        if leq.shape != (n, n):
            raise InputError("relation matrix must be %dx%d, got %s" % (n, n, leq.shape))
        if len(set(elements)) != n:
            raise InputError("duplicate element identifiers")
        leq = leq.copy()
        leq.flags.writeable = False
        self.elements = elements
        self.leq_matrix = leq
        self._index = {e: i for i, e in enumerate(elements)}
        if check:
            self._check_axioms()

    def _check_axioms(self):
        m = self.leq_matrix
        n = len(self.elements)
        if not m.diagonal().all():
            raise InputError("relation is not reflexive")
        both = m & m.T & ~np.eye(n, dtype=bool)
        if both.any():
            i, j = np.argwhere(both)[0]
            raise InputError("antisymmetry fails on %r, %r"
                             % (self.elements[i], self.elements[j]))
        closed = (m.astype(np.uint8) @ m.astype(np.uint8)) > 0
        if (closed & ~m).any():
            i, j = np.argwhere(closed & ~m)[0]
            raise InputError("transitivity fails: %r, %r"
                             % (self.elements[i], self.elements[j]))

    @classmethod
    def from_cover_relations(cls, elements: Iterable, covers: Iterable) -> "FinitePoset":
        """Build a poset as the reflexive-transitive closure of cover pairs
        (a, b) meaning a < b. Rejects cycles and undeclared elements."""
        elements = tuple(elements)
        index = {e: i for i, e in enumerate(elements)}
        if len(index) != len(elements):
            raise InputError("duplicate element identifiers")
        n = len(elements)
        adj = np.zeros((n, n), dtype=bool)
        for a, b in covers:
            if a not in index:
                raise InputError("unknown element %r in cover pair" % (a,))
            if b not in index:
                raise InputError("unknown element %r in cover pair" % (b,))
            if a == b:
                raise InputError("cycle detected at %r" % (a,))
            adj[index[a], index[b]] = True
        closed = _accel.transitive_closure(adj)
        cyc = closed & closed.T & ~np.eye(n, dtype=bool)
        if cyc.any():
            i, j = np.argwhere(cyc)[0]
            raise InputError("cycle detected through %r and %r"
                             % (elements[i], elements[j]))
        return cls(elements, closed, check=False)

    # -- basic queries ----------------------------------------------------

    def __len__(self):
        return len(self.elements)

    def __contains__(self, e):
        return e in self._index

    def __repr__(self):
        return "FinitePoset(%d elements)" % len(self.elements)

    def __eq__(self, other):
        if not isinstance(other, FinitePoset):
            return NotImplemented
        return (self.elements == other.elements
                and np.array_equal(self.leq_matrix, other.leq_matrix))

    __hash__ = None

    def index_of(self, e) -> int:
        try:
            return self._index[e]
        except KeyError:
            raise InputError("unknown element %r" % (e,)) from None

    def _subset_indices(self, h: Iterable) -> list:
        return sorted(self.index_of(e) for e in set(h))

    def leq(self, a, b) -> bool:
        return bool(self.leq_matrix[self.index_of(a), self.index_of(b)])

    def lt(self, a, b) -> bool:
        return a != b and self.leq(a, b)

    def incomparable(self, a, b) -> bool:
        return not self.leq(a, b) and not self.leq(b, a)

    # -- down/up sets and antichains --------------------------------------

    def down_set(self, h: Iterable) -> set:
        """Everything below some member of h (h included)."""
        idx = self._subset_indices(h)
        if not idx:
            return set()
        mask = self.leq_matrix[:, idx].any(axis=1)
        return {self.elements[i] for i in np.flatnonzero(mask)}

    def up_set(self, h: Iterable) -> set:
        """Everything above some member of h (h included)."""
        idx = self._subset_indices(h)
        if not idx:
            return set()
        mask = self.leq_matrix[idx, :].any(axis=0)
        return {self.elements[i] for i in np.flatnonzero(mask)}

    def is_antichain(self, h: Iterable) -> bool:
        """True iff no two distinct members of h are comparable."""
        idx = self._subset_indices(h)
        sub = self.leq_matrix[np.ix_(idx, idx)]
        return not (sub & ~np.eye(len(idx), dtype=bool)).any()

    def is_maximal_antichain(self, h: Iterable) -> bool:
        """True iff h is an antichain and every element outside h is
        comparable to some member of h."""
        idx = self._subset_indices(h)
        if not self.is_antichain(h):
            return False
        comp = self.leq_matrix | self.leq_matrix.T
        covered = np.zeros(len(self.elements), dtype=bool)
        covered[idx] = True
        if idx:
            covered |= comp[:, idx].any(axis=1)
        return bool(covered.all())

    def _comparability(self) -> np.ndarray:
        n = len(self.elements)
        return (self.leq_matrix | self.leq_matrix.T) & ~np.eye(n, dtype=bool)

    def maximal_antichains(self, *, bound: int = DEFAULT_BOUND) -> list:
        """Every maximal antichain exactly once, as tuples in element-index
        order, enumerated in ascending subset-rank order."""
        n = len(self.elements)
        if n > bound:
            raise CapacityError(
                "maximal-antichain enumeration needs a 2^%d scan; bound is %d"
                % (n, bound))
        masks = _accel.maximal_antichain_masks(self._comparability())
        return [tuple(self.elements[i] for i in range(n) if mask >> i & 1)
                for mask in masks]

    # -- splitting ---------------------------------------------------------

    def try_split(self, a: Iterable, *, bound: int = DEFAULT_BOUND) -> Optional[SplitPartition]:
        """First partition {D, U} of the maximal antichain a whose down-set
        of D plus up-set of U covers the poset; None if no partition works.

        Parts may be empty. The search is exhaustive over all 2^|a|
        partitions, walked in ascending D-mask order.
        """
        idx = self._subset_indices(a)
        if not self.is_maximal_antichain(a):
            raise PreconditionError("not a maximal antichain: %r" % (sorted(map(str, a)),))
        if len(idx) > bound:
            raise CapacityError(
                "split search needs a 2^%d scan; bound is %d" % (len(idx), bound))
        down = self.leq_matrix[:, idx].T.copy()
        up = self.leq_matrix[idx, :].copy()
        mask = _accel.first_split_mask(down, up)
        if mask < 0:
            return None
        part = SplitPartition(
            down=tuple(self.elements[idx[i]] for i in range(len(idx)) if mask >> i & 1),
            up=tuple(self.elements[idx[i]] for i in range(len(idx)) if not mask >> i & 1))
        # re-validate the kernel's answer with an independent coverage check
        covered = self.down_set(part.down) | self.up_set(part.up)
        if covered != set(self.elements):
            raise RuntimeError("kernel returned an invalid split partition")
        return part

    def has_splitting_property(self, *, bound: int = DEFAULT_BOUND) -> SplittingCheck:
        """True iff every maximal antichain splits; otherwise reports the
        first (in enumeration order) that does not."""
        for antichain in self.maximal_antichains(bound=bound):
            if self.try_split(antichain, bound=bound) is None:
                return SplittingCheck(False, antichain)
        return SplittingCheck(True, None)

    # -- intervals and density ---------------------------------------------

    def open_interval(self, x, y) -> set:
        """Elements strictly between x and y; empty unless x < y."""
        i, j = self.index_of(x), self.index_of(y)
        lt = self.leq_matrix & ~np.eye(len(self.elements), dtype=bool)
        return {self.elements[k] for k in np.flatnonzero(lt[i] & lt[:, j])}

    def is_strongly_dense(self) -> DensityCheck:
        """True iff every non-empty open interval contains two incomparable
        elements; otherwise reports the first failing interval."""
        i, j = _accel.density_gap(self.leq_matrix)
        if i < 0:
            return DensityCheck(True, None)
        return DensityCheck(False, (self.elements[i], self.elements[j]))

    # -- derived structure --------------------------------------------------

    def covers(self) -> list:
        """The transitive reduction as (lower, upper) pairs, in index order."""
        lt = self.leq_matrix & ~np.eye(len(self.elements), dtype=bool)
        reduced = lt & ~((lt.astype(np.uint8) @ lt.astype(np.uint8)) > 0)
        return [(self.elements[i], self.elements[j])
                for i, j in np.argwhere(reduced)]

    def restrict(self, subset: Iterable) -> "FinitePoset":
        """The induced order on a subset, keeping relative element order."""
        keep = set(subset)
        for e in keep:
            self.index_of(e)
        idx = [i for i, e in enumerate(self.elements) if e in keep]
        return FinitePoset([self.elements[i] for i in idx],
                           self.leq_matrix[np.ix_(idx, idx)], check=False)

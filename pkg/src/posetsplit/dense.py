"""A countable strongly dense order with a non-splitting maximal antichain.

The order is built in stages. Stage 0 is the infinite binary tree: all
finite 0/1 words under the prefix order. Each later stage grafts a fresh
pruned copy of the tree (every non-empty word) onto every element built so
far: the copy lands in the gap directly above its anchor, above the anchor
itself and below everything strictly above the anchor. Repeating this
forever fills every open interval with infinite antichains, yet the two
stage-1 elements over the root with words "0" and "1" form a maximal
antichain that no two-part split can cover.

An element is a term (stage, anchor, word): stage 0 terms have no anchor
and any word; terms of stage s >= 1 carry an anchor of strictly smaller
stage and a non-empty word. Term equality is structural, so (anchor, w, 1)
and (anchor, w, 2) are different elements (the latter sits strictly below
the former, being grafted later into a gap the former already bounds).

Comparability of x and y is decided at stage m = max(x.stage, y.stage):

    both stages 0        x.word is a prefix of y.word
    x.stage < m          x <= y.anchor          (x sits below the graft)
    y.stage < m          x.anchor <  y          (the graft sits below y)
    same anchor          x.word is a prefix of y.word
    different anchors    x.anchor <  y.anchor

The same relation evaluated at any higher stage agrees (higher stages embed
lower ones unchanged); leq_at exposes the stage-indexed evaluation so that
agreement can be tested rather than trusted.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from typing import Optional

from .errors import CapacityError, InputError, PreconditionError
from .finite import FinitePoset

#: default cap on materialized truncation size
MAX_TRUNCATION_ELEMENTS = 5000


@dataclass(frozen=True)
class Node:
    """One element of the layered order. Immutable and hashable; equality
    is structural."""
    stage: int
    anchor: Optional["Node"]
    word: str

    def __post_init__(self):
        if self.stage < 0:
            raise InputError("stage must be >= 0")
        if any(c not in "01" for c in self.word):
            raise InputError("word must be a 0/1 string, got %r" % (self.word,))
        if self.stage == 0:
            if self.anchor is not None:
                raise InputError("stage-0 elements have no anchor")
        else:
            if self.anchor is None:
                raise InputError("stage-%d element needs an anchor" % self.stage)
            if self.anchor.stage >= self.stage:
                raise InputError(
                    "anchor stage %d must be below element stage %d"
                    % (self.anchor.stage, self.stage))
            if not self.word:
                raise InputError("empty word is only allowed at stage 0")

    def __repr__(self):
        return "Node(%s)" % render_node(self)


ROOT = Node(0, None, "")


def _is_prefix(s: str, t: str) -> bool:
    return t.startswith(s)


@functools.lru_cache(maxsize=None)
def leq(x: Node, y: Node) -> bool:
    """Decide x <= y. Recursion follows the stage rules in the module
    docstring; each step drops the maximum stage, so it terminates."""
    m = max(x.stage, y.stage)
    if m == 0:
        return _is_prefix(x.word, y.word)
    if x.stage < m:
        return leq(x, y.anchor)
    if y.stage < m:
        return lt(x.anchor, y)
    if x.anchor == y.anchor:
        return _is_prefix(x.word, y.word)
    return lt(x.anchor, y.anchor)


def lt(x: Node, y: Node) -> bool:
    return x != y and leq(x, y)


def incomparable(x: Node, y: Node) -> bool:
    return not leq(x, y) and not leq(y, x)


def leq_at(level: int, x: Node, y: Node) -> bool:
    """Evaluate the order within the stage-`level` fragment.

    This is the literal stage-indexed recursion, including the embedding
    rule that sends a comparison of low-stage elements down one level at a
    time. It must agree with leq() for every admissible level; the test
    suite checks that instead of assuming it.
    """
    if level < max(x.stage, y.stage):
        raise PreconditionError(
            "level %d is below the elements' stages (%d, %d)"
            % (level, x.stage, y.stage))
    if level == 0:
        return _is_prefix(x.word, y.word)
    if x.stage < level and y.stage < level:
        return leq_at(level - 1, x, y)
    if x.stage < level:
        return leq_at(level - 1, x, y.anchor)
    if y.stage < level:
        return _lt_at(level - 1, x.anchor, y)
    if x.anchor == y.anchor:
        return _is_prefix(x.word, y.word)
    return _lt_at(level - 1, x.anchor, y.anchor)


def _lt_at(level: int, x: Node, y: Node) -> bool:
    return x != y and leq_at(level, x, y)


def root_pair() -> tuple:
    """The two stage-1 elements over the root, words "0" and "1". Together
    they form a maximal antichain of the full order that does not split."""
    return Node(1, ROOT, "0"), Node(1, ROOT, "1")


# -- finite truncations ------------------------------------------------------

def words_up_to(max_len: int) -> list:
    """All 0/1 words of length <= max_len in shortlex order, empty first."""
    out = [""]
    for length in range(1, max_len + 1):
        out.extend("".join(bits) for bits in itertools.product("01", repeat=length))
    return out


@dataclass(frozen=True)
class Truncation:
    """A finite fragment: every element of stage <= max_stage whose word,
    and every ancestor's word, has length <= max_depth. Parent-closed by
    construction. poset carries the same elements as rendered literals, in
    the same order as nodes."""
    max_stage: int
    max_depth: int
    nodes: tuple
    poset: FinitePoset


def truncation(max_stage: int, max_depth: int, *,
               max_elements: int = MAX_TRUNCATION_ELEMENTS) -> Truncation:
    """Materialize a finite fragment with its full relation matrix.

    Element count is (2^(max_depth+1) - 1)^(max_stage+1); anything past
    max_elements raises CapacityError before allocation.
    """
    if max_stage < 0 or max_depth < 0:
        raise InputError("truncation bounds must be >= 0")
    per_level = (1 << (max_depth + 1)) - 1
    total = per_level ** (max_stage + 1)
    if total > max_elements:
        raise CapacityError(
            "truncation would hold %d elements; cap is %d" % (total, max_elements))
    ws = words_up_to(max_depth)
    nonempty = ws[1:]
    nodes = [Node(0, None, w) for w in ws]
    for stage in range(1, max_stage + 1):
        nodes.extend(Node(stage, anchor, w)
                     for anchor in list(nodes) for w in nonempty)
    matrix = [[leq(a, b) for b in nodes] for a in nodes]
    poset = FinitePoset([render_node(n) for n in nodes], matrix, check=False)
    return Truncation(max_stage, max_depth, tuple(nodes), poset)


# -- interval antichains -----------------------------------------------------

def interval_antichain(x: Node, y: Node, count: int) -> list:
    """The first `count` members of a canonical infinite antichain strictly
    between x and y.

    Witness words follow the schedule i -> 1^i 0, which makes any two
    witnesses prefix-incomparable. The construction recurses on stages:

        x.stage == y.stage == m   graft children of x: (x, 1^i 0, m+1)
        x.stage  < y.stage, y anchored on x
                                  same graft one level past y
        x.stage  < y.stage, x strictly below y.anchor
                                  recurse into (x, y.anchor)
        x.stage  > y.stage        extend x sideways: (x.anchor, x.word 1^i 0, x.stage)

    Every returned element is re-checked per call to lie strictly inside
    (x, y) and to be incomparable with the other witnesses.
    """
    if count < 0:
        raise InputError("count must be >= 0")
    if not lt(x, y):
        raise PreconditionError("need x < y, got %s vs %s"
                                % (render_node(x), render_node(y)))
    out = _interval_antichain(x, y, count)
    for i, z in enumerate(out):
        if not (lt(x, z) and lt(z, y)):
            raise RuntimeError("generated witness %s falls outside the interval"
                               % render_node(z))
        if any(not incomparable(z, w) for w in out[:i]):
            raise RuntimeError("generated witnesses are not an antichain")
    return out


def _interval_antichain(x: Node, y: Node, count: int) -> list:
    fan = ["1" * i + "0" for i in range(count)]
    if x.stage == y.stage:
        return [Node(x.stage + 1, x, w) for w in fan]
    if x.stage < y.stage:
        if y.anchor == x:
            return [Node(y.stage + 1, x, w) for w in fan]
        return _interval_antichain(x, y.anchor, count)
    return [Node(x.stage, x.anchor, x.word + w) for w in fan]


# -- term literals -----------------------------------------------------------
#
#   elem ::= "(0," word ")" | "(" stage "," elem "," word ")"
#   word ::= "e" | bit+          bit ::= "0" | "1"       stage ::= decimal >= 1
#
# "e" is the empty word, legal only at stage 0. Examples:
#   (0,e)            the root
#   (1,(0,e),0)      first element of the standard non-splitting pair
#   (1,(0,e),01)     sits above it, off both legs of the pair

def render_node(node: Node) -> str:
    """Canonical literal for a term; parse_node inverts it exactly."""
    if node.stage == 0:
        return "(0,%s)" % (node.word or "e")
    return "(%d,%s,%s)" % (node.stage, render_node(node.anchor), node.word)


def parse_node(text: str) -> Node:
    """Parse a term literal; InputError carries the failing position."""
    s = text.strip()
    node, pos = _parse_elem(s, 0)
    if pos != len(s):
        raise InputError("trailing input at position %d in %r" % (pos, s))
    return node


def _parse_elem(s: str, pos: int) -> tuple:
    if pos >= len(s) or s[pos] != "(":
        raise InputError("expected '(' at position %d in %r" % (pos, s))
    pos += 1
    start = pos
    while pos < len(s) and s[pos].isdigit():
        pos += 1
    if pos == start:
        raise InputError("expected a stage number at position %d in %r" % (start, s))
    stage = int(s[start:pos])
    pos = _expect(s, pos, ",")
    if stage == 0:
        word, pos = _parse_word(s, pos)
        pos = _expect(s, pos, ")")
        return Node(0, None, word), pos
    anchor, pos = _parse_elem(s, pos)
    pos = _expect(s, pos, ",")
    word, pos = _parse_word(s, pos)
    pos = _expect(s, pos, ")")
    if word == "":
        raise InputError(
            "empty word is only allowed at stage 0 (position %d in %r)" % (pos, s))
    if anchor.stage >= stage:
        raise InputError(
            "anchor stage %d must be below element stage %d in %r"
            % (anchor.stage, stage, s))
    return Node(stage, anchor, word), pos


def _parse_word(s: str, pos: int) -> tuple:
    if pos < len(s) and s[pos] == "e":
        return "", pos + 1
    start = pos
    while pos < len(s) and s[pos] in "01":
        pos += 1
    if pos == start:
        raise InputError("expected a word ('e' or 0/1 digits) at position %d in %r"
                         % (pos, s))
    return s[start:pos], pos


def _expect(s: str, pos: int, ch: str) -> int:
    if pos >= len(s) or s[pos] != ch:
        raise InputError("expected %r at position %d in %r" % (ch, pos, s))
    return pos + 1


# -- claim checkers ----------------------------------------------------------

@dataclass(frozen=True)
class MaximalityCheck:
    """Fragment-wide comparability sweep for the standard pair: every
    element of the truncation must be comparable, in one direction or the
    other, to one of the two pair members."""
    max_stage: int
    max_depth: int
    elements_checked: int
    counterexamples: tuple

    @property
    def ok(self) -> bool:
        return not self.counterexamples


def check_pair_maximality(max_stage: int, max_depth: int, *,
                          max_elements: int = MAX_TRUNCATION_ELEMENTS) -> MaximalityCheck:
    """Sweep a truncation and list every element comparable to neither
    member of the standard pair (there should be none)."""
    x, y = root_pair()
    frag = truncation(max_stage, max_depth, max_elements=max_elements)
    bad = tuple(z for z in frag.nodes
                if not (leq(x, z) or leq(y, z) or leq(z, x) or leq(z, y)))
    return MaximalityCheck(max_stage, max_depth, len(frag.nodes), bad)


@dataclass(frozen=True)
class PartitionRefutation:
    """One two-part split attempt and the element it fails to cover."""
    down: tuple
    up: tuple
    witness: Optional[Node]

    @property
    def refuted(self) -> bool:
        return self.witness is not None


@dataclass(frozen=True)
class UnsplitCertificate:
    """Exact certificate that the standard pair does not split: nine
    one-sided comparability facts about three probe elements, plus a
    covering failure for each of the four possible partitions."""
    pair: tuple
    facts: tuple
    refutations: tuple

    @property
    def ok(self) -> bool:
        return (all(holds for _, holds in self.facts)
                and all(r.refuted for r in self.refutations))


def nonsplit_certificate() -> UnsplitCertificate:
    """Refute every partition of the standard pair with a concrete element
    left uncovered, using only the order decision procedure."""
    x, y = root_pair()
    above_x = Node(1, ROOT, "01")
    above_y = Node(1, ROOT, "11")
    facts = (
        ("above-first probe sits above it", leq(x, above_x)),
        ("above-first probe is not above the second", not leq(y, above_x)),
        ("above-first probe is not below the first", not leq(above_x, x)),
        ("above-second probe sits above it", leq(y, above_y)),
        ("above-second probe is not above the first", not leq(x, above_y)),
        ("above-second probe is not below the second", not leq(above_y, y)),
        ("root is above neither", not leq(x, ROOT) and not leq(y, ROOT)),
        ("root is below both", leq(ROOT, x) and leq(ROOT, y)),
        ("the pair is an antichain", incomparable(x, y)),
    )
    probes = (ROOT, above_x, above_y)
    refutations = []
    for down, up in (((), (x, y)), ((x, y), ()), ((x,), (y,)), ((y,), (x,))):
        witness = next(
            (p for p in probes
             if not any(leq(p, d) for d in down)
             and not any(leq(u, p) for u in up)),
            None)
        refutations.append(PartitionRefutation(down, up, witness))
    return UnsplitCertificate((x, y), facts, tuple(refutations))

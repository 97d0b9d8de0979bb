"""The layered order's decision procedure: examples, oracle agreement,
axioms on a truncation, and stage-indexed evaluation."""

import itertools

import pytest

from posetsplit import (
    InputError,
    Node,
    PreconditionError,
    ROOT,
    incomparable,
    leq,
    leq_at,
    lt,
    root_pair,
    truncation,
    words_up_to,
)

from oracles import oracle_leq

X, Y = root_pair()


class TestNodeValidation:
    def test_negative_stage(self):
        with pytest.raises(InputError):
            Node(-1, None, "0")

    def test_bad_word_alphabet(self):
        with pytest.raises(InputError):
            Node(0, None, "02")

    def test_stage_zero_with_anchor(self):
        with pytest.raises(InputError):
            Node(0, ROOT, "0")

    def test_positive_stage_without_anchor(self):
        with pytest.raises(InputError):
            Node(1, None, "0")

    def test_anchor_stage_must_be_lower(self):
        with pytest.raises(InputError):
            Node(1, Node(1, ROOT, "0"), "0")
        with pytest.raises(InputError):
            Node(1, Node(2, ROOT, "0"), "0")

    def test_empty_word_needs_stage_zero(self):
        with pytest.raises(InputError):
            Node(1, ROOT, "")

    def test_structural_equality_not_identity(self):
        assert Node(1, ROOT, "0") == X
        assert Node(2, ROOT, "0") != X


class TestOrderExamples:
    def test_prefix_order_at_stage_zero(self):
        assert leq(ROOT, Node(0, None, "0110"))
        assert leq(Node(0, None, "01"), Node(0, None, "011"))
        assert not leq(Node(0, None, "011"), Node(0, None, "01"))
        assert incomparable(Node(0, None, "0"), Node(0, None, "1"))

    def test_grafted_copy_sits_above_anchor(self):
        assert lt(ROOT, X)
        assert lt(ROOT, Y)

    def test_standard_pair_is_an_antichain(self):
        assert incomparable(X, Y)

    def test_graft_below_everything_above_its_anchor(self):
        # z anchored at root, x strictly above root: z < x
        z = Node(2, ROOT, "0")
        assert lt(z, X)
        assert lt(z, Node(0, None, "1"))

    def test_same_anchor_same_stage_prefix_order(self):
        assert lt(X, Node(1, ROOT, "01"))
        assert incomparable(X, Node(1, ROOT, "1"))

    def test_same_stage_different_anchors(self):
        a = Node(0, None, "0")
        z1 = Node(1, a, "1")
        z2 = Node(1, Node(0, None, "00"), "1")
        assert lt(z1, z2)
        assert not leq(z2, z1)

    def test_later_graft_sits_strictly_below_earlier(self):
        assert lt(Node(2, ROOT, "0"), Node(1, ROOT, "0"))


class TestOracleAgreement:
    @pytest.mark.parametrize("stage,depth", [(2, 1), (1, 2)])
    def test_full_truncation_agreement(self, stage, depth):
        nodes = truncation(stage, depth).nodes
        for a in nodes:
            for b in nodes:
                assert leq(a, b) == oracle_leq(a, b), (a, b)


class TestAxiomsExhaustive:
    def test_axioms_on_truncation(self):
        nodes = truncation(2, 1).nodes
        for a in nodes:
            assert leq(a, a)
        for a, b in itertools.permutations(nodes, 2):
            assert not (leq(a, b) and leq(b, a))
        below = {a: [b for b in nodes if leq(a, b)] for a in nodes}
        for a in nodes:
            for b in below[a]:
                for c in below[b]:
                    assert leq(a, c)


class TestStageIndexedEvaluation:
    def test_rejects_level_below_stages(self):
        with pytest.raises(PreconditionError):
            leq_at(0, X, ROOT)

    def test_constant_across_levels(self):
        nodes = truncation(1, 1).nodes
        for a in nodes:
            for b in nodes:
                expected = leq(a, b)
                for level in range(max(a.stage, b.stage), 6):
                    assert leq_at(level, a, b) == expected

    def test_matches_minimal_level(self):
        assert leq_at(1, ROOT, X)
        assert leq_at(4, ROOT, X)
        assert not leq_at(1, X, Y)
        assert not leq_at(5, X, Y)


def test_words_up_to_is_shortlex():
    assert words_up_to(2) == ["", "0", "1", "00", "01", "10", "11"]
    assert words_up_to(0) == [""]

"""Text format parsing/serialization and DOT export."""

import io

import pytest

from posetsplit import (
    FinitePoset,
    InputError,
    SplitPartition,
    dump,
    dumps,
    load,
    loads,
    to_dot,
    truncation,
)


DIAMOND_TEXT = """\
# a diamond
elem bot
elem a
elem b
elem top

cover bot a   # comments may trail
cover bot b
cover a top
cover b top
"""


class TestLoads:
    def test_diamond(self, diamond):
        assert loads(DIAMOND_TEXT) == diamond

    def test_blank_lines_and_comments_ignored(self):
        p = loads("\n# nothing\n  \nelem x\n")
        assert p.elements == ("x",)

    def test_unknown_directive(self):
        with pytest.raises(InputError, match="line 2"):
            loads("elem a\nedge a b\n")

    def test_duplicate_element(self):
        with pytest.raises(InputError, match="line 3.*duplicate"):
            loads("elem a\nelem b\nelem a\n")

    def test_undeclared_cover_endpoint(self):
        with pytest.raises(InputError, match="line 2.*undeclared"):
            loads("elem a\ncover a b\n")

    def test_elem_arity(self):
        with pytest.raises(InputError, match="line 1.*exactly one"):
            loads("elem a b\n")

    def test_cover_arity(self):
        with pytest.raises(InputError, match="line 2.*exactly two"):
            loads("elem a\ncover a\n")

    def test_cycle_rejected(self):
        with pytest.raises(InputError, match="cycle"):
            loads("elem a\nelem b\ncover a b\ncover b a\n")

    def test_load_from_file(self, data_dir, diamond):
        with open(data_dir / "diamond.poset", encoding="utf-8") as fp:
            assert load(fp) == diamond

    def test_cycle_fixture_rejected(self, data_dir):
        with pytest.raises(InputError, match="cycle"):
            load(open(data_dir / "cycle.poset", encoding="utf-8"))


class TestDumps:
    def test_round_trip_diamond(self, diamond):
        assert loads(dumps(diamond)) == diamond

    def test_round_trip_truncation(self):
        frag = truncation(2, 1).poset
        again = loads(dumps(frag))
        assert again.elements == frag.elements
        assert again == frag

    def test_dump_writes_reduction_only(self):
        p = FinitePoset.from_cover_relations(
            ["a", "b", "c"], [("a", "b"), ("b", "c"), ("a", "c")])
        text = dumps(p)
        assert "cover a c" not in text
        assert loads(text) == p

    def test_dump_to_stream(self, diamond):
        buf = io.StringIO()
        dump(diamond, buf)
        assert loads(buf.getvalue()) == diamond


class TestDot:
    def test_structure(self, diamond):
        dot = to_dot(diamond)
        assert dot.startswith("digraph poset {")
        assert "rankdir=BT;" in dot
        assert '"bot" -> "a";' in dot
        assert '"bot" -> "top";' not in dot

    def test_every_element_declared(self):
        p = FinitePoset.from_cover_relations(["lonely", "x", "y"], [("x", "y")])
        dot = to_dot(p)
        assert '"lonely";' in dot

    def test_partition_coloring(self, diamond):
        dot = to_dot(diamond, SplitPartition(down=("a",), up=("b",)))
        assert '"a" [style=filled, fillcolor="lightblue"];' in dot
        assert '"b" [style=filled, fillcolor="lightsalmon"];' in dot
        assert '"bot";' in dot

    def test_names_are_escaped(self):
        p = FinitePoset.from_cover_relations(['sa"id', "p\\q"], [])
        dot = to_dot(p)
        assert '"sa\\"id";' in dot
        assert '"p\\\\q";' in dot

    def test_reimport_reproduces_relation(self):
        frag = truncation(2, 1).poset
        dot = to_dot(frag)
        covers = []
        for line in dot.splitlines():
            line = line.strip()
            if "->" in line:
                left, right = line.rstrip(";").split("->")
                covers.append((left.strip().strip('"'), right.strip().strip('"')))
        again = FinitePoset.from_cover_relations(frag.elements, covers)
        assert again == frag

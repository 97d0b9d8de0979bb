import pathlib

import pytest

from posetsplit import FinitePoset

DATA = pathlib.Path(__file__).parent / "data"


@pytest.fixture
def data_dir():
    return DATA


@pytest.fixture
def diamond():
    return FinitePoset.from_cover_relations(
        ["bot", "a", "b", "top"],
        [("bot", "a"), ("bot", "b"), ("a", "top"), ("b", "top")])


@pytest.fixture
def two_chain():
    return FinitePoset.from_cover_relations(["a", "b"], [("a", "b")])


def binary_tree(depth: int) -> FinitePoset:
    """Prefix order on 0/1 words of length <= depth; root named 'e'."""
    words = [""]
    frontier = [""]
    for _ in range(depth):
        frontier = [w + b for w in frontier for b in "01"]
        words.extend(frontier)
    words.sort(key=lambda w: (len(w), w))
    covers = [(w or "e", w + b)
              for w in words for b in "01" if len(w) < depth]
    return FinitePoset.from_cover_relations([w or "e" for w in words], covers)

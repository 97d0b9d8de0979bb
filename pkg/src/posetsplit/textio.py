"""Line-oriented text format and DOT export for finite posets.

The text format is one item per line, UTF-8, with '#' starting a comment:

    elem <name>        declares an element
    cover <a> <b>      declares an ordering pair a < b

Names are whitespace-free tokens. The order relation of the loaded poset is
the reflexive-transitive closure of the declared pairs, so `cover` lines may
be any generating set, not only covering pairs. Dumping writes the transitive
reduction, which reloads to the same relation.
"""

from __future__ import annotations

from .errors import InputError
from .finite import FinitePoset, SplitPartition


def loads(text: str) -> FinitePoset:
    """Parse the poset text format; InputError names the offending line."""
    elements = []
    seen = set()
    covers = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if tokens[0] == "elem":
            if len(tokens) != 2:
                raise InputError("line %d: elem takes exactly one name" % lineno)
            name = tokens[1]
            if name in seen:
                raise InputError("line %d: duplicate element %r" % (lineno, name))
            seen.add(name)
            elements.append(name)
        elif tokens[0] == "cover":
            if len(tokens) != 3:
                raise InputError("line %d: cover takes exactly two names" % lineno)
            a, b = tokens[1], tokens[2]
            for name in (a, b):
                if name not in seen:
                    raise InputError(
                        "line %d: undeclared element %r (elem lines must come first)"
                        % (lineno, name))
            covers.append((a, b))
        else:
            raise InputError(
                "line %d: unknown directive %r (expected 'elem' or 'cover')"
                % (lineno, tokens[0]))
    return FinitePoset.from_cover_relations(elements, covers)


def load(fp) -> FinitePoset:
    return loads(fp.read())


def dumps(poset: FinitePoset) -> str:
    """Render a poset in the text format, covers in element-index order."""
    lines = ["elem %s" % name for name in poset.elements]
    lines.extend("cover %s %s" % (a, b) for a, b in poset.covers())
    return "\n".join(lines) + "\n"


def dump(poset: FinitePoset, fp) -> None:
    fp.write(dumps(poset))


def _quote(name) -> str:
    return '"%s"' % str(name).replace("\\", "\\\\").replace('"', '\\"')


def to_dot(poset: FinitePoset, partition: SplitPartition = None) -> str:
    """Graphviz digraph of the transitive reduction, drawn bottom-up.

    With a partition, its down part is filled one color and its up part
    another, so a split of an antichain can be read off the picture.
    """
    down = set(partition.down) if partition is not None else set()
    up = set(partition.up) if partition is not None else set()
    lines = ["digraph poset {", "  rankdir=BT;"]
    for name in poset.elements:
        attrs = ""
        if name in down:
            attrs = ' [style=filled, fillcolor="lightblue"]'
        elif name in up:
            attrs = ' [style=filled, fillcolor="lightsalmon"]'
        lines.append("  %s%s;" % (_quote(name), attrs))
    for a, b in poset.covers():
        lines.append("  %s -> %s;" % (_quote(a), _quote(b)))
    lines.append("}")
    return "\n".join(lines) + "\n"

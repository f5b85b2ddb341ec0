"""Text serializations used by the command line.

Binary trees are written with numbered leaves, ``((0 1) 2)``; a bare ``0``
is the single leaf. Integer sequences are comma lists. Dyck paths are
``U``/``D`` strings, tableaux are two comma lists split by ``/``, and
permutations are digit strings, or comma lists once ``n > 9``.
"""

from __future__ import annotations

import re
from collections.abc import Sequence

from .catalan_objects import Syt2xN
from .exceptions import ParseError
from .trees import LEAF, BinaryTree, Node

__all__ = [
    "format_tree",
    "parse_tree",
    "format_ints",
    "parse_ints",
    "format_syt",
    "parse_syt",
    "format_perm",
    "parse_perm",
    "parse_dyck",
]

_TOKEN = re.compile(r"\s*(?:(\()|(\))|(\d+)|(\S))")


def format_tree(t: BinaryTree) -> str:
    counter = 0

    def render(u):
        nonlocal counter
        if isinstance(u, Node):
            return f"({render(u.left)} {render(u.right)})"
        counter += 1
        return str(counter - 1)

    return render(t)


def parse_tree(text: str) -> BinaryTree:
    """Inverse of :func:`format_tree`. Leaves must be numbered ``0, 1, ...`` left to right."""
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        start = m.start(m.lastindex)
        if m.group(4) is not None:
            raise ParseError(f"unexpected character {m.group(4)!r}", start)
        tokens.append((m.group(m.lastindex), start))
        pos = m.end()
    if not tokens:
        raise ParseError("empty tree", 0)
    index = 0
    next_leaf = 0

    def parse():
        nonlocal index, next_leaf
        if index >= len(tokens):
            raise ParseError("unexpected end of input", len(text))
        token, start = tokens[index]
        index += 1
        if token == "(":
            left = parse()
            right = parse()
            if index >= len(tokens) or tokens[index][0] != ")":
                where = tokens[index][1] if index < len(tokens) else len(text)
                raise ParseError("expected ')'", where)
            index += 1
            return Node(left, right)
        if token == ")":
            raise ParseError("unexpected ')'", start)
        if int(token) != next_leaf:
            raise ParseError(f"leaf {token} out of order, expected {next_leaf}", start)
        next_leaf += 1
        return LEAF

    tree = parse()
    if index != len(tokens):
        raise ParseError(f"trailing input {tokens[index][0]!r}", tokens[index][1])
    return tree


def format_ints(values: Sequence[int]) -> str:
    return ",".join(str(v) for v in values)


def parse_ints(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    out = []
    pos = 0
    for piece in text.split(","):
        stripped = piece.strip()
        if not re.fullmatch(r"-?\d+", stripped):
            offset = pos + (len(piece) - len(piece.lstrip()))
            raise ParseError(f"not an integer: {stripped!r}", offset)
        out.append(int(stripped))
        pos += len(piece) + 1
    return tuple(out)


def format_syt(tableau: Syt2xN) -> str:
    return f"{format_ints(tableau[0])}/{format_ints(tableau[1])}"


def parse_syt(text: str) -> Syt2xN:
    if text.count("/") != 1:
        raise ParseError("expected exactly one '/' between the rows", text.find("/") if "/" in text else len(text))
    top, bottom = text.split("/")
    try:
        bottom_row = parse_ints(bottom)
    except ParseError as exc:
        raise ParseError(str(exc).rsplit(" (at", 1)[0], exc.position + len(top) + 1) from None
    return Syt2xN(parse_ints(top), bottom_row)


def format_perm(w: Sequence[int]) -> str:
    if len(w) > 9:
        return format_ints(w)
    return "".join(str(v) for v in w)


def parse_perm(text: str) -> tuple[int, ...]:
    text = text.strip()
    if "," in text:
        return parse_ints(text)
    for i, c in enumerate(text):
        if not c.isdigit():
            raise ParseError(f"not a digit: {c!r}", i)
    return tuple(int(c) for c in text)


def parse_dyck(text: str) -> str:
    text = text.strip().upper()
    for i, c in enumerate(text):
        if c not in "UD":
            raise ParseError(f"expected U or D, got {c!r}", i)
    return text

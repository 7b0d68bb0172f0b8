"""Plain-text formats shared by the gallery and the command line."""
from __future__ import annotations

import re

from ..core import Mu
from ..functors import Empty, Node, empty_tree, tree


class SyntaxProblem(ValueError):
    pass


_TREE_TOKEN = re.compile(r"\s*([().]|-?\d+)")


def parse_tree(text: str) -> Mu:
    """Read ``.`` for the empty tree and ``(left label right)`` for a node."""
    tokens = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TREE_TOKEN.match(text, pos)
        if m is None:
            raise SyntaxProblem(f"cannot read tree at {text[pos:pos + 10]!r}")
        tokens.append(m.group(1))
        pos = m.end()
    if not tokens:
        raise SyntaxProblem("empty tree text")

    # explicit stack so deep trees parse without recursion
    stack: list[list] = []
    result = None
    for tok in tokens:
        if result is not None:
            raise SyntaxProblem(f"trailing input {tok!r}")
        if tok == "(":
            stack.append([])
            continue
        if tok == ")":
            if not stack or len(stack[-1]) != 3:
                raise SyntaxProblem("a node needs exactly: left label right")
            left, label, right = stack.pop()
            if not isinstance(label, int) or not isinstance(left, Mu) or not isinstance(right, Mu):
                raise SyntaxProblem("a node needs exactly: left label right")
            item = tree(left, label, right)
        elif tok == ".":
            item = empty_tree()
        else:
            item = int(tok)
        if stack:
            stack[-1].append(item)
        elif isinstance(item, Mu):
            result = item
        else:
            raise SyntaxProblem("a bare number is not a tree")
    if stack or result is None:
        raise SyntaxProblem("unbalanced parentheses")
    return result


def show_tree(t: Mu) -> str:
    parts: list[str] = []
    stack: list = [t]
    while stack:
        item = stack.pop()
        if isinstance(item, str):
            parts.append(item)
            continue
        match item.node:
            case Empty():
                parts.append(".")
            case Node(left, label, right):
                stack.extend([")", right, " ", str(label), " ", left, "("])
    return "".join(parts)

"""Newick serialization and a small parser for reading trees back."""
from __future__ import annotations

import re
from typing import Dict, List, Optional, Tuple

from infodist.phylo.exceptions import NewickParseError
from infodist.phylo.tree import PhyloTree, TreeNode

_SPECIAL = re.compile(r"[\s():;,\[\]']")
_BARE_LABEL = re.compile(r"[^\s():;,\[\]']+")
_NUMBER = re.compile(r"[-+]?(\d+\.?\d*|\.\d+)([eE][-+]?\d+)?")


def _quote(label: str) -> str:
    if _SPECIAL.search(label):
        return "'" + label.replace("'", "''") + "'"
    return label


def _length(value: float, precision: int) -> str:
    return f"{value:.{precision}f}"


def _rooted_text(node: TreeNode, precision: int) -> str:
    if node.is_leaf:
        return _quote(node.label)
    return "(" + ",".join(f"{_rooted_text(c, precision)}:{_length(c.length, precision)}" for c in node.children) + ")"


def _undirected_text(tree: PhyloTree, precision: int) -> str:
    """Serialize from the internal node with the lowest creation index."""
    parent: Dict[int, Optional[TreeNode]] = {tree.root.node_id: None}
    for node in tree.root.walk():
        for child in node.children:
            parent[child.node_id] = node
    start = min((n for n in tree.nodes() if not n.is_leaf), key=lambda n: n.node_id)

    def neighbours(node: TreeNode) -> List[Tuple[TreeNode, float]]:
        out = [(c, c.length) for c in node.children]
        up = parent[node.node_id]
        if up is not None:
            out.append((up, node.length))
        return out

    def render(node: TreeNode, came_from: Optional[TreeNode]) -> str:
        branches = [(n, length) for n, length in neighbours(node) if n is not came_from]
        if not branches:
            return _quote(node.label)
        return "(" + ",".join(f"{render(n, node)}:{_length(length, precision)}" for n, length in branches) + ")"

    return render(start, None)


def to_newick(tree: PhyloTree, precision: int = 6) -> str:
    body = _rooted_text(tree.root, precision) if tree.rooted else _undirected_text(tree, precision)
    return body + ";"


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0
        self.next_id = 0

    def _peek(self) -> str:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def _expect(self, char: str) -> None:
        if self._peek() != char:
            raise NewickParseError(f"expected {char!r}", self.pos)
        self.pos += 1

    def _label(self) -> Optional[str]:
        if self._peek() == "'":
            self.pos += 1
            chars = []
            while True:
                if self.pos >= len(self.text):
                    raise NewickParseError("unterminated quoted label", self.pos)
                ch = self.text[self.pos]
                self.pos += 1
                if ch == "'":
                    if self.text[self.pos:self.pos + 1] == "'":
                        chars.append("'")
                        self.pos += 1
                        continue
                    return "".join(chars)
                chars.append(ch)
        match = _BARE_LABEL.match(self.text, self.pos)
        if not match:
            return None
        self.pos = match.end()
        return match.group(0)

    def _length(self) -> float:
        if self._peek() != ":":
            return 0.0
        self.pos += 1
        self._peek()
        match = _NUMBER.match(self.text, self.pos)
        if not match:
            raise NewickParseError("expected a branch length", self.pos)
        self.pos = match.end()
        return float(match.group(0))

    def node(self) -> TreeNode:
        children: List[TreeNode] = []
        if self._peek() == "(":
            self.pos += 1
            children.append(self.node())
            while self._peek() == ",":
                self.pos += 1
                children.append(self.node())
            self._expect(")")
        label = self._label()
        if not children and label is None:
            raise NewickParseError("leaf without a label", self.pos)
        node = TreeNode(node_id=self.next_id, label=label, children=children)
        self.next_id += 1
        node.set_length(self._length())
        return node


def parse_newick(text: str, rooted: bool = True) -> PhyloTree:
    parser = _Parser(text.strip())
    root = parser.node()
    parser._expect(";")
    if parser._peek():
        raise NewickParseError("trailing text after ';'", parser.pos)
    return PhyloTree(root=root, rooted=rooted)

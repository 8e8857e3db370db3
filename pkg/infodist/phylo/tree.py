"""Tree objects shared by the builders, the Newick codec and the split comparison."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import FrozenSet, Iterator, List, Optional, Set, Tuple


@dataclass(eq=False)
class TreeNode:
    """A node and the branch to its parent.

    `length` is the branch length after clamping at 0; `raw_length` keeps the value
    the builder computed. `node_id` is the creation index (leaves first).
    """

    node_id: int
    label: Optional[str] = None
    children: List["TreeNode"] = field(default_factory=list)
    length: float = 0.0
    raw_length: float = 0.0

    @property
    def is_leaf(self) -> bool:
        return not self.children

    def set_length(self, raw: float) -> None:
        self.raw_length = raw
        self.length = max(raw, 0.0)

    def walk(self) -> Iterator["TreeNode"]:
        """Preorder traversal."""
        stack = [self]
        while stack:
            node = stack.pop()
            yield node
            stack.extend(reversed(node.children))

    def __repr__(self) -> str:
        name = self.label if self.label is not None else f"#{self.node_id}"
        return f"TreeNode({name}, children={len(self.children)}, length={self.length})"


@dataclass(eq=False)
class PhyloTree:
    """Rooted trees come from UPGMA; NJ trees are unrooted and hang from a trifurcating node."""

    root: TreeNode
    rooted: bool

    def nodes(self) -> List[TreeNode]:
        return list(self.root.walk())

    def leaves(self) -> List[TreeNode]:
        return [n for n in self.root.walk() if n.is_leaf]

    def leaf_labels(self) -> List[str]:
        return [n.label for n in self.leaves()]

    def clamped_branches(self) -> List[Tuple[TreeNode, float]]:
        return [(n, n.raw_length) for n in self.root.walk() if n is not self.root and n.raw_length < 0]

    def root_to_leaf_lengths(self) -> dict:
        out = {}
        stack = [(self.root, 0.0)]
        while stack:
            node, depth = stack.pop()
            if node.is_leaf:
                out[node.label] = depth
            for child in node.children:
                stack.append((child, depth + child.length))
        return out


def splits(tree: PhyloTree) -> Set[FrozenSet[str]]:
    """Nontrivial bipartitions, each given by the side without the smallest leaf label."""
    labels = frozenset(tree.leaf_labels())
    anchor = min(labels)
    out: Set[FrozenSet[str]] = set()

    def below(node: TreeNode) -> FrozenSet[str]:
        if node.is_leaf:
            return frozenset([node.label])
        acc: FrozenSet[str] = frozenset()
        for child in node.children:
            side = below(child)
            acc = acc | side
            if 1 < len(side) < len(labels) - 1:
                out.add(labels - side if anchor in side else side)
        return acc

    below(tree.root)
    return out


def robinson_foulds(a: PhyloTree, b: PhyloTree) -> int:
    """Number of bipartitions present in exactly one of the trees."""
    if set(a.leaf_labels()) != set(b.leaf_labels()):
        raise ValueError("trees have different leaf sets")
    return len(splits(a) ^ splits(b))

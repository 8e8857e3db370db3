"""
Distance-based tree builders.

Both builders keep active clusters in label order, merge into the lower position
and drop the higher one, and break ties by the lowest (i, j) position pair.
"""
from __future__ import annotations

from typing import List

import numpy as np

from infodist.distances import DistanceMatrix, TooFewItems
from infodist.phylo.exceptions import AsymmetricMatrix
from infodist.phylo.tree import PhyloTree, TreeNode
from utils.logger import get_logger
from utils.observability import observe

logger = get_logger(__name__)

SYMMETRY_TOLERANCE = 1e-9


def _checked_values(m: DistanceMatrix, minimum: int) -> np.ndarray:
    if m.size < minimum:
        raise TooFewItems(minimum, m.size)
    d = np.array(m.values, dtype=np.float64)
    diff = np.abs(d - d.T)
    if np.any(diff > SYMMETRY_TOLERANCE):
        i, j = np.unravel_index(int(np.argmax(diff)), diff.shape)
        raise AsymmetricMatrix(m.labels[i], m.labels[j], float(d[i, j]), float(d[j, i]))
    return d


def _lowest_pair(scores: np.ndarray) -> tuple[int, int]:
    """First (i, j) with i < j in row-major order attaining the minimum."""
    masked = np.where(np.triu(np.ones_like(scores, dtype=bool), k=1), scores, np.inf)
    i, j = divmod(int(np.argmin(masked)), scores.shape[0])
    return i, j


def _leaves(m: DistanceMatrix) -> List[TreeNode]:
    return [TreeNode(node_id=i, label=label) for i, label in enumerate(m.labels)]


@observe
def neighbor_joining(m: DistanceMatrix) -> PhyloTree:
    """Unrooted NJ tree; negative branch lengths are clamped to 0 and kept as raw lengths.

    Self-distances on the diagonal are ignored.
    """
    d = _checked_values(m, 3)
    np.fill_diagonal(d, 0.0)
    nodes = _leaves(m)
    next_id = len(nodes)

    while len(nodes) > 3:
        r = len(nodes)
        totals = d.sum(axis=1)
        q = (r - 2) * d - totals[:, None] - totals[None, :]
        i, j = _lowest_pair(q)

        delta = (totals[i] - totals[j]) / (r - 2)
        nodes[i].set_length(0.5 * (d[i, j] + delta))
        nodes[j].set_length(0.5 * (d[i, j] - delta))
        joined = TreeNode(node_id=next_id, children=[nodes[i], nodes[j]])
        next_id += 1

        merged = 0.5 * (d[i] + d[j] - d[i, j])
        d[i, :] = merged
        d[:, i] = merged
        d[i, i] = 0.0
        d = np.delete(np.delete(d, j, axis=0), j, axis=1)
        nodes[i] = joined
        nodes.pop(j)

    a, b, c = nodes
    a.set_length(0.5 * (d[0, 1] + d[0, 2] - d[1, 2]))
    b.set_length(0.5 * (d[0, 1] + d[1, 2] - d[0, 2]))
    c.set_length(0.5 * (d[0, 2] + d[1, 2] - d[0, 1]))
    center = TreeNode(node_id=next_id, children=[a, b, c])

    tree = PhyloTree(root=center, rooted=False)
    clamped = tree.clamped_branches()
    if clamped:
        logger.info("negative_branches_clamped", count=len(clamped), most_negative=min(raw for _, raw in clamped))
    return tree


@observe
def upgma(m: DistanceMatrix) -> PhyloTree:
    """Rooted average-linkage tree; a merge at distance d sits at height d / 2."""
    d = _checked_values(m, 2)
    nodes = _leaves(m)
    sizes = [1] * len(nodes)
    heights = [0.0] * len(nodes)
    next_id = len(nodes)

    while len(nodes) > 1:
        i, j = _lowest_pair(d)
        height = d[i, j] / 2.0
        nodes[i].set_length(height - heights[i])
        nodes[j].set_length(height - heights[j])
        joined = TreeNode(node_id=next_id, children=[nodes[i], nodes[j]])
        next_id += 1

        merged = (sizes[i] * d[i] + sizes[j] * d[j]) / (sizes[i] + sizes[j])
        d[i, :] = merged
        d[:, i] = merged
        d[i, i] = 0.0
        d = np.delete(np.delete(d, j, axis=0), j, axis=1)
        nodes[i], sizes[i], heights[i] = joined, sizes[i] + sizes[j], height
        for seq in (nodes, sizes, heights):
            seq.pop(j)

    return PhyloTree(root=nodes[0], rooted=True)

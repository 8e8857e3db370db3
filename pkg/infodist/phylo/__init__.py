from infodist.phylo.builders import neighbor_joining, upgma
from infodist.phylo.exceptions import AsymmetricMatrix, NewickParseError, PhyloError, PhylipFormatError
from infodist.phylo.newick import parse_newick, to_newick
from infodist.phylo.phylip import parse_phylip, read_phylip, write_phylip
from infodist.phylo.tree import PhyloTree, TreeNode, robinson_foulds, splits

__all__ = [
    "neighbor_joining",
    "upgma",
    "AsymmetricMatrix",
    "NewickParseError",
    "PhyloError",
    "PhylipFormatError",
    "parse_newick",
    "to_newick",
    "parse_phylip",
    "read_phylip",
    "write_phylip",
    "PhyloTree",
    "TreeNode",
    "robinson_foulds",
    "splits",
]

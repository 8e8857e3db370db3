import numpy as np
import pytest

from infodist.distances import DistanceMatrix
from infodist.phylo import (
    NewickParseError,
    PhylipFormatError,
    PhyloTree,
    TreeNode,
    neighbor_joining,
    parse_newick,
    parse_phylip,
    read_phylip,
    robinson_foulds,
    splits,
    to_newick,
    upgma,
    write_phylip,
)
from tests.infodist.phylo.test_builders import FOUR_TAXA, path_distances


class TestNewick:
    def test_rooted_round_trip(self):
        text = "((A:1.000000,B:1.000000):1.000000,C:2.000000);"
        assert to_newick(parse_newick(text)) == text

    def test_unrooted_round_trip_keeps_topology_and_lengths(self):
        tree = neighbor_joining(FOUR_TAXA)
        back = parse_newick(to_newick(tree), rooted=False)
        assert robinson_foulds(tree, back) == 0
        assert path_distances(back) == pytest.approx(path_distances(tree), abs=1e-6)

    def test_labels_with_special_characters_are_quoted(self):
        leaves = [TreeNode(0, "Homo sapiens"), TreeNode(1, "it's"), TreeNode(2, "plain")]
        for leaf in leaves:
            leaf.set_length(0.5)
        tree = PhyloTree(TreeNode(3, children=leaves), rooted=True)
        text = to_newick(tree, precision=1)
        assert text == "('Homo sapiens':0.5,'it''s':0.5,plain:0.5);"
        assert parse_newick(text).leaf_labels() == ["Homo sapiens", "it's", "plain"]

    def test_missing_lengths_default_to_zero(self):
        tree = parse_newick("(A,B,(C,D)inner);")
        assert tree.leaf_labels() == ["A", "B", "C", "D"]
        assert all(n.length == 0.0 for n in tree.nodes())

    def test_scientific_notation_lengths(self):
        tree = parse_newick("(A:1e-3,B:2.5E2);")
        assert [n.length for n in tree.leaves()] == [0.001, 250.0]

    @pytest.mark.parametrize("text", ["(A,B", "(A,B);extra", "(A,);", "(A:x,B);", "('A,B);", "(A,B)"])
    def test_malformed_input(self, text):
        with pytest.raises(NewickParseError):
            parse_newick(text)

    def test_splits_ignore_rooting(self):
        rooted = parse_newick("((A:1,B:1):1,(C:1,D:1):1);")
        unrooted = parse_newick("(A:1,B:1,(C:1,D:1):2);", rooted=False)
        assert splits(rooted) == splits(unrooted) == {frozenset({"C", "D"})}

    def test_robinson_foulds_counts_disagreements(self):
        a = parse_newick("((A,B),(C,D),E);")
        b = parse_newick("((A,C),(B,D),E);")
        assert robinson_foulds(a, b) == 4

    def test_robinson_foulds_needs_same_leaves(self):
        with pytest.raises(ValueError):
            robinson_foulds(parse_newick("(A,B,C);"), parse_newick("(A,B,D);"))


class TestPhylip:
    def test_writes_padded_labels(self):
        m = DistanceMatrix(("A", "B"), [[0, 1.5], [1.5, 0]])
        assert write_phylip(m, precision=2) == "2\nA          0.00 1.50\nB          1.50 0.00\n"

    def test_round_trip(self, tmp_path):
        path = tmp_path / "m.phy"
        path.write_text(write_phylip(FOUR_TAXA))
        back = read_phylip(path)
        assert back.labels == FOUR_TAXA.labels
        assert np.allclose(back.values, FOUR_TAXA.values)

    def test_long_labels_are_truncated(self):
        m = DistanceMatrix(("abcdefghijklm", "short"), [[0, 1], [1, 0]])
        assert parse_phylip(write_phylip(m)).labels == ("abcdefghij", "short")

    def test_labels_colliding_after_truncation_rejected(self):
        m = DistanceMatrix(("sample_0001a", "sample_0001b"), [[0, 1], [1, 0]])
        with pytest.raises(PhylipFormatError):
            write_phylip(m)

    def test_fixed_width_labels_with_spaces(self):
        text = "2\nHomo sapi 0 1\nPan trogl 1 0\n"
        assert parse_phylip(text).labels == ("Homo sapi", "Pan trogl")

    @pytest.mark.parametrize(
        "text, message",
        [
            ("", "empty"),
            ("two\nA 0\n", "taxa count"),
            ("2\nA 0 1\n", "announces 2 taxa"),
            ("2\nA 0 1\nB 1 x\n", "bad distance"),
            ("2\nA 0 1\nB 1\n", "expected a label"),
        ],
    )
    def test_malformed_input(self, text, message):
        with pytest.raises(PhylipFormatError, match=message):
            parse_phylip(text)

    def test_matrix_read_back_builds_the_same_tree(self):
        back = parse_phylip(write_phylip(FOUR_TAXA))
        assert to_newick(neighbor_joining(back)) == to_newick(neighbor_joining(FOUR_TAXA))
        assert to_newick(upgma(back)) == to_newick(upgma(FOUR_TAXA))

import pytest

from infodist.cli.main import run_command
from infodist.phylo import parse_phylip

UNIFORM_SPEC = "alphabet: 0 1\norder: 0\nstate: 0.5 0.5\n"
SKEWED_SPEC = "alphabet: 0 1\norder: 0\nstate: 0.9 0.1\n"
FLIP_CHANNEL_SPEC = UNIFORM_SPEC + "channel 0: 0.9 0.1\nchannel 1: 0.1 0.9\n"
FOUR_TAXA_PHYLIP = "4\nA 0 3 5 6\nB 3 0 6 7\nC 5 6 0 7\nD 6 7 7 0\n"
BITS = ["--mode", "text", "--alphabet", "0 1"]


def run(capsys, *argv):
    code = run_command(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


@pytest.fixture
def bit_files(write_file, capsys):
    """Two 2000-symbol binary text files sampled from the uniform source."""
    spec = write_file("uniform.spec", UNIFORM_SPEC)
    paths = []
    for seed, name in ((1, "x.txt"), (2, "y.txt")):
        path = spec.parent / name
        assert run_command(["--seed", str(seed), "gen-markov", str(spec), "-n", "2000", "-o", str(path)]) == 0
        paths.append(str(path))
    capsys.readouterr()
    return paths


class TestGenMarkov:
    def test_same_seed_same_output(self, capsys, write_file):
        spec = str(write_file("u.spec", UNIFORM_SPEC))
        _, first, _ = run(capsys, "--seed", "7", "gen-markov", spec, "-n", "500")
        _, second, _ = run(capsys, "--seed", "7", "gen-markov", spec, "-n", "500")
        _, other, _ = run(capsys, "--seed", "8", "gen-markov", spec, "-n", "500")
        assert first == second != other
        assert len(first) == 501 and set(first.strip()) <= {"0", "1"}

    def test_pair_output(self, capsys, write_file, tmp_path):
        spec = str(write_file("c.spec", FLIP_CHANNEL_SPEC))
        x_path, y_path = tmp_path / "x.txt", tmp_path / "y.txt"
        code, _, _ = run(capsys, "gen-markov", spec, "-n", "1000", "-o", str(x_path), "--pair-output", str(y_path))
        assert code == 0
        x, y = x_path.read_text().strip(), y_path.read_text().strip()
        assert len(x) == len(y) == 1000
        assert 0 < sum(a != b for a, b in zip(x, y)) < 200

    def test_pair_output_failure_writes_neither_file(self, capsys, write_file, tmp_path):
        spec = str(write_file("c.spec", FLIP_CHANNEL_SPEC))
        blocker = write_file("blocker", "not a directory")
        x_path = tmp_path / "x.txt"
        code, _, err = run(capsys, "gen-markov", spec, "-n", "100", "-o", str(x_path), "--pair-output", str(blocker / "y.txt"))
        assert code == 2
        assert "cannot write" in err
        assert not x_path.exists()
        assert sorted(p.name for p in tmp_path.iterdir()) == ["blocker", "c.spec"]


class TestEstimates:
    def test_entropy_prints_label_and_rate(self, capsys, bit_files):
        code, out, _ = run(capsys, "--precision", "3", "entropy", *bit_files, *BITS)
        assert code == 0
        lines = out.splitlines()
        assert [line.split("\t")[0] for line in lines] == ["x", "y"]
        assert all(0.9 <= float(line.split("\t")[1]) <= 1.1 for line in lines)

    @pytest.mark.slow
    def test_entropy_of_long_uniform_sample(self, capsys, write_file, tmp_path):
        spec = str(write_file("u.spec", UNIFORM_SPEC))
        path = str(tmp_path / "long.txt")
        run(capsys, "gen-markov", spec, "-n", "100000", "-o", path)
        code, out, _ = run(capsys, "entropy", "--estimator", "kt", "--order", "0", path, *BITS)
        assert code == 0
        assert float(out.split("\t")[1]) == pytest.approx(1.0, abs=0.01)

    def test_joint_and_conditional(self, capsys, bit_files):
        _, joint, _ = run(capsys, "joint-entropy", *bit_files, *BITS)
        _, direct, _ = run(capsys, "cond-entropy", *bit_files, *BITS)
        _, indirect, _ = run(capsys, "cond-entropy", "--indirect", *bit_files, *BITS)
        assert 1.8 <= float(joint) <= 2.2
        assert 0.0 <= float(direct) <= 1.1
        assert float(indirect) == pytest.approx(float(direct), abs=0.2)

    def test_divergence_clamped_output(self, capsys, bit_files):
        x = bit_files[0]
        code, out, _ = run(capsys, "divergence", x, x, "--clamp", *BITS)
        assert code == 0
        value, flag, raw = out.strip().split("\t")
        assert float(value) == 0.0
        assert flag == "clamped"
        assert float(raw.removeprefix("raw=")) < 0

    @pytest.mark.parametrize("command", ["joint-entropy", "cond-entropy", "conjecture-check"])
    def test_pair_commands_accept_one_file_twice(self, capsys, bit_files, command):
        x = bit_files[0]
        code, out, err = run(capsys, command, x, x, *BITS)
        assert code == 0, err
        assert out.strip()

    def test_pair_commands_accept_files_with_one_stem(self, capsys, bit_files, tmp_path):
        other = tmp_path / "copy" / "x.txt"
        other.parent.mkdir()
        other.write_text(open(bit_files[0]).read())
        code, out, _ = run(capsys, "divergence", bit_files[0], str(other), *BITS)
        assert code == 0
        assert float(out.split("\t")[0]) <= 0.0

    def test_divergence_zm(self, capsys, bit_files):
        code, out, _ = run(capsys, "divergence", *bit_files, "--method", "zm", *BITS)
        assert code == 0
        assert abs(float(out.split("\t")[0])) < 1.0

    def test_conjecture_check_with_reference(self, capsys, bit_files, write_file):
        spec = str(write_file("u.spec", UNIFORM_SPEC))
        code, out, _ = run(capsys, "conjecture-check", *bit_files, *BITS, "--reference", spec, spec)
        assert code == 0
        fields = dict(line.split("\t") for line in out.splitlines())
        assert fields["reference"] == "oracle"
        assert float(fields["baseline_rate"]) == 2.0
        assert float(fields["excess"]) == pytest.approx(float(fields["measured_rate"]) - 2.0, abs=1e-5)


class TestMatricesAndTrees:
    def test_identical_files_are_close(self, capsys, bit_files, tmp_path):
        copy = tmp_path / "x_copy.txt"
        copy.write_text(open(bit_files[0]).read())
        code, out, _ = run(capsys, "distance-matrix", "--metric", "e2", bit_files[0], str(copy), *BITS)
        assert code == 0
        m = parse_phylip(out)
        assert m.labels == ("x", "x_copy")
        assert m.get("x", "x_copy") <= 0.05

    @pytest.mark.parametrize("metric", ["e1", "e2", "kl-sym-max", "kl-sym-sum"])
    def test_matrix_parses_back_symmetric(self, capsys, bit_files, metric):
        code, out, _ = run(capsys, "distance-matrix", "--metric", metric, *bit_files, *BITS)
        assert code == 0
        m = parse_phylip(out)
        assert m.is_symmetric()
        assert (m.values >= 0).all()

    def test_parallel_output_is_identical(self, capsys, bit_files):
        _, serial, _ = run(capsys, "distance-matrix", *bit_files, *BITS)
        _, parallel, _ = run(capsys, "--jobs", "2", "distance-matrix", *bit_files, *BITS)
        assert serial == parallel

    def test_nj_tree_from_fixture(self, capsys, write_file):
        path = str(write_file("four.phy", FOUR_TAXA_PHYLIP))
        code, out, _ = run(capsys, "tree", path)
        assert code == 0
        assert out == "(A:1.000000,B:2.000000,(C:3.000000,D:4.000000):1.000000);\n"

    def test_upgma_tree(self, capsys, write_file):
        path = str(write_file("three.phy", "3\nA 0 2 4\nB 2 0 4\nC 4 4 0\n"))
        _, out, _ = run(capsys, "--precision", "1", "tree", "--method", "upgma", path)
        assert out == "((A:1.0,B:1.0):1.0,C:2.0);\n"

    def test_output_file(self, capsys, write_file, tmp_path):
        path = str(write_file("four.phy", FOUR_TAXA_PHYLIP))
        target = tmp_path / "out" / "tree.nwk"
        code, out, _ = run(capsys, "tree", path, "-o", str(target))
        assert code == 0 and out == ""
        assert target.read_text().startswith("(A:1.000000")


class TestOracleAndExperiment:
    def test_oracle_rates(self, capsys, write_file):
        u = str(write_file("u.spec", UNIFORM_SPEC))
        s = str(write_file("s.spec", SKEWED_SPEC))
        code, out, _ = run(capsys, "--precision", "4", "oracle", u, s)
        assert code == 0
        assert f"{u}\tentropy_rate\t1.0000" in out
        assert f"{s}\tentropy_rate\t0.4690" in out
        assert f"{u}||{s}\tdivergence_rate\t0.7370" in out
        assert f"{s}||{u}\tdivergence_rate\t0.5310" in out

    def test_oracle_channel_rates(self, capsys, write_file):
        c = str(write_file("c.spec", FLIP_CHANNEL_SPEC))
        _, out, _ = run(capsys, "--precision", "4", "oracle", c)
        assert f"{c}\tjoint_entropy_rate\t1.4690" in out
        assert f"{c}\tconditional_x_given_y\t0.4690" in out

    def test_experiment_table_is_deterministic(self, capsys):
        argv = ["--seed", "5", "experiment", "--preset", "binary", "--lengths", "200", "--seeds", "1",
                "--estimators", "kt", "--methods", "cross-code"]
        code, first, _ = run(capsys, *argv)
        _, second, _ = run(capsys, *argv)
        assert code == 0
        assert first == second
        lines = first.splitlines()
        assert lines[0].split("\t") == ["source", "reference", "quantity", "estimator", "length", "seed", "estimate", "oracle", "error"]
        assert len(lines) == 1 + 4 + 16


class TestErrors:
    def test_incompatible_flags_exit_with_message(self, capsys, bit_files, tmp_path):
        target = tmp_path / "m.phy"
        code, out, err = run(capsys, "distance-matrix", "--metric", "e1", "--estimator", "lz78", *bit_files, *BITS, "-o", str(target))
        assert code == 2
        assert err.startswith("error:")
        assert not target.exists()

    def test_matrix_rejects_duplicate_labels(self, capsys, bit_files):
        code, _, err = run(capsys, "distance-matrix", bit_files[0], bit_files[0], bit_files[1], *BITS)
        assert code == 2
        assert "duplicate corpus label" in err

    def test_missing_input_file(self, capsys, tmp_path):
        code, _, err = run(capsys, "entropy", str(tmp_path / "missing.bin"))
        assert code == 2
        assert "cannot read" in err

    def test_missing_matrix_file(self, capsys, tmp_path):
        code, _, err = run(capsys, "tree", str(tmp_path / "missing.phy"))
        assert code == 2

    def test_unknown_command(self, capsys):
        code, _, _ = run(capsys, "compress")
        assert code == 2

    def test_experiment_needs_exactly_one_source_list(self, capsys):
        code, _, err = run(capsys, "experiment")
        assert code == 2
        assert "--preset" in err

    def test_unknown_preset(self, capsys):
        code, _, err = run(capsys, "experiment", "--preset", "nonexistent")
        assert code == 2

    def test_bad_lengths(self, capsys):
        code, _, err = run(capsys, "experiment", "--preset", "binary", "--lengths", "ten")
        assert code == 2
        assert "--lengths" in err

    def test_too_short_input(self, capsys, write_file):
        code, _, err = run(capsys, "entropy", "--estimator", "lz78", str(write_file("one.bin", b"a")))
        assert code == 2
        assert "lz78" in err

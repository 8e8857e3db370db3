import pytest

from infodist.alphabet import BYTE_ALPHABET, DNA_ALPHABET
from infodist.cli import (
    EmptySequenceAfterFiltering,
    IngestionReport,
    IngestMode,
    IoFailure,
    UsageError,
    ingest,
    ingest_bytes,
    ingest_corpus,
    ingest_fasta,
    ingest_text,
    parse_alphabet,
)


class TestFasta:
    def test_headers_stripped_and_sequence_uppercased(self, write_file):
        item = ingest_fasta(write_file("a.fa", ">seq1 some description\nACGT\nacgt\n"))
        assert item.label == "seq1"
        assert item.string.alphabet == DNA_ALPHABET
        assert "".join(item.string.tokens()) == "ACGTACGT"
        assert item.report.dropped == 0

    def test_unknown_symbols_dropped_and_counted(self, write_file):
        item = ingest_fasta(write_file("b.fa", ">s\nACGNNT\n"))
        assert "".join(item.string.tokens()) == "ACGT"
        assert len(item.string) == 4
        assert item.report.dropped == 2
        assert item.report.input_units == 6

    def test_no_sequence_lines(self, write_file):
        with pytest.raises(EmptySequenceAfterFiltering):
            ingest_fasta(write_file("c.fa", ">only a header\n"))

    def test_later_headers_are_stripped_too(self, write_file):
        item = ingest_fasta(write_file("d.fa", ">one\nAC\n>two\nGT\n"))
        assert item.label == "one"
        assert "".join(item.string.tokens()) == "ACGT"

    def test_label_falls_back_to_file_stem(self, write_file):
        assert ingest_fasta(write_file("plain.fa", "ACGT\n")).label == "plain"


class TestBytes:
    def test_every_byte_is_a_symbol(self, write_file):
        item = ingest_bytes(write_file("x.bin", bytes([0x61, 0x62, 0x61])))
        assert item.string.alphabet is BYTE_ALPHABET
        assert item.string.data == (0x61, 0x62, 0x61)
        assert item.mode is IngestMode.BYTES

    def test_empty_file_warns(self, write_file):
        item = ingest_bytes(write_file("empty.bin", b""))
        assert len(item.string) == 0
        assert item.report.warnings

    def test_two_files_share_the_alphabet(self, write_file):
        a = ingest_bytes(write_file("a.bin", b"ab"))
        b = ingest_bytes(write_file("b.bin", b"\x00\xff"))
        assert a.string.alphabet == b.string.alphabet

    def test_missing_file(self, tmp_path):
        with pytest.raises(IoFailure):
            ingest_bytes(tmp_path / "nope.bin")


class TestText:
    def test_without_alphabet_reads_bytes(self, write_file):
        item = ingest_text(write_file("t.txt", "hi there"))
        assert item.mode is IngestMode.TEXT
        assert item.string.alphabet is BYTE_ALPHABET
        assert len(item.string) == 8

    def test_character_alphabet_skips_whitespace(self, write_file):
        item = ingest_text(write_file("t.txt", "01 10\n1x"), parse_alphabet("0 1"))
        assert "".join(item.string.tokens()) == "01101"
        assert item.report.dropped == 1

    def test_word_alphabet_splits_on_whitespace(self, write_file):
        item = ingest_text(write_file("w.txt", "red green red blue"), parse_alphabet("red green"))
        assert item.string.tokens() == ["red", "green", "red"]
        assert item.report.dropped == 1

    def test_alphabet_only_in_text_mode(self, write_file):
        with pytest.raises(UsageError):
            ingest(write_file("x.fa", "ACGT"), "fasta", parse_alphabet("A C"))


def test_corpus_labels_must_be_unique(write_file, tmp_path):
    first = write_file("same.txt", "ab")
    (tmp_path / "sub").mkdir()
    second = tmp_path / "sub" / "same.txt"
    second.write_text("ba")
    with pytest.raises(UsageError, match="duplicate"):
        ingest_corpus([first, second], "bytes")


def test_report_totals_must_add_up():
    with pytest.raises(ValueError):
        IngestionReport(input_units=3, kept=1, dropped=1)

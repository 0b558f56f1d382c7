import pytest

from rhnumbers.oeis import (
    SEQ_ARH,
    SEQ_MRH,
    bfile_deviation_note,
    emit_bfile,
    first_terms,
)


class TestFirstTerms:
    def test_mrh_leading_terms(self):
        assert first_terms(SEQ_MRH, 4) == [1, 10, 40, 81]

    def test_arh_leading_terms(self):
        assert first_terms(SEQ_ARH, 5) == [10, 11, 12, 18, 22]

    def test_terms_ascending_and_count(self):
        terms = first_terms(SEQ_ARH, 300)
        assert len(terms) == 300
        assert terms == sorted(terms)
        assert len(set(terms)) == 300

    def test_bad_sequence(self):
        with pytest.raises(ValueError):
            first_terms("A000001", 3)

    def test_zero_count(self):
        with pytest.raises(ValueError):
            first_terms(SEQ_ARH, 0)


class TestBfileFormat:
    def test_exact_bytes(self):
        assert emit_bfile(SEQ_MRH, 4) == "1 1\n2 10\n3 40\n4 81\n"

    def test_one_based_single_term(self):
        assert emit_bfile(SEQ_ARH, 1) == "1 10\n"

    def test_newline_terminated_no_trailing_spaces(self):
        text = emit_bfile(SEQ_ARH, 50)
        assert text.endswith("\n")
        for line in text.splitlines():
            assert line == line.rstrip()
            idx, val = line.split(" ")
            assert int(idx) >= 1 and int(val) >= 1

    def test_bit_stable_across_runs(self):
        assert emit_bfile(SEQ_MRH, 30) == emit_bfile(SEQ_MRH, 30)


class TestDeviationNote:
    def test_mrh_deviation_flagged(self):
        terms = first_terms(SEQ_MRH, 4)
        note = bfile_deviation_note(SEQ_MRH, terms)
        assert note is not None
        assert "1458" in note  # quotes the text set it deviates from

    def test_no_note_when_matching(self):
        assert bfile_deviation_note(SEQ_MRH, [1, 81, 1458, 1729]) is None

    def test_arh_never_flagged(self):
        assert bfile_deviation_note(SEQ_ARH, first_terms(SEQ_ARH, 4)) is None

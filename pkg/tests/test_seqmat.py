import random

import pytest

from oracles import enum_piece
from parikhseq.counting import count_gapped
from parikhseq.intmat import IntMatrix
from parikhseq.minors import minor_index_set
from parikhseq.parikh import ParikhContext, parikh_matrix
from parikhseq.seqmat import (
    EntryLayout,
    SeqFold,
    factor_matrix,
    seq_matrix,
    seq_matrix_direct,
    seq_matrix_letter,
)
from parikhseq.words import Alphabet, GapPattern, PatternError, Piece

ABC_SIGMA = GapPattern(("abc",))
AB_C = GapPattern.parse("ab.c")
A_ABA_A = GapPattern.parse("a.aba.a")


def blocks_of(sm):
    return {name: [list(r) for r in block.rows] for name, block in sm.blocks().items()}


def random_word(rng, alphabet, max_len):
    return "".join(rng.choice(alphabet) for _ in range(rng.randint(0, max_len)))


def random_pattern(rng, alphabet, min_flat=2):
    while True:
        factors = tuple(
            "".join(rng.choice(alphabet) for _ in range(rng.randint(1, 3)))
            for _ in range(rng.randint(1, 3))
        )
        if sum(map(len, factors)) >= min_flat:
            return GapPattern(factors)


class TestEntryLayout:
    def test_gapped_pattern_cells(self):
        layout = EntryLayout(AB_C)
        assert layout.suffix_cell(1, 1) == Piece(("a",), False, True)
        assert layout.suffix_cell(1, 2) == Piece(("ab",), False, False)
        assert layout.suffix_cell(2, 2) == Piece(("b",), False, False)
        assert layout.factor_cell(1, 2) == Piece(("ab", "c"), False, False)
        assert layout.prefix_cell(1, 1) == Piece(("b",), True, False)
        assert layout.prefix_cell(2, 2) == Piece(("c",), False, False)
        assert layout.whole_cell(1, 2) == Piece(("b",), True, False)
        # diagonal: empty piece, both-anchored off boundaries, free on them
        assert layout.whole_cell(1, 1) == Piece((), True, True)
        assert layout.whole_cell(2, 2) == Piece((), False, False)

    def test_bullet_free_pattern_reduces_to_factor_layout(self):
        layout = EntryLayout(ABC_SIGMA)
        assert layout.suffix_cell(1, 1) == Piece(("a",), False, True)
        assert layout.suffix_cell(1, 2) == Piece(("ab",), False, True)
        assert layout.factor_cell(1, 2) == Piece(("abc",), False, False)
        assert layout.prefix_cell(1, 2) == Piece(("bc",), True, False)
        assert layout.whole_cell(1, 2) == Piece(("b",), True, True)
        assert layout.whole_cell(1, 1) == Piece((), True, True)
        assert layout.whole_cell(2, 2) == Piece((), True, True)

    def test_three_factor_pattern_corner_cells(self):
        layout = EntryLayout(A_ABA_A)
        # suffix cell at a boundary column is unanchored
        assert layout.suffix_cell(1, 1) == Piece(("a",), False, False)
        # whole-block cell with both ends on boundaries is a plain factor count
        assert layout.whole_cell(1, 4) == Piece(("aba",), False, False)

    def test_full_matrix_cells(self):
        layout = EntryLayout(AB_C)
        assert layout.dim == 6
        assert layout.cell(1, 1) == 1
        assert layout.cell(2, 1) == 0
        assert layout.cell(1, 3) == Piece(("a",), False, True)
        assert layout.cell(1, 6) == Piece(("ab", "c"), False, False)
        assert layout.cell(4, 4) == Piece((), False, False)
        assert layout.cell(5, 5) == 1
        assert layout.cell(6, 6) == 1
        with pytest.raises(ValueError):
            layout.cell(0, 1)

    def test_flat_length_one_rejected(self):
        with pytest.raises(PatternError):
            EntryLayout(GapPattern(("a",)))


class TestFactorMatrix:
    def test_single_letter_word(self):
        sm = factor_matrix("abc", "b")
        assert blocks_of(sm) == {
            "E": [[0, 0], [0, 1]],
            "F": [[0, 0], [0, 0]],
            "C": [[0, 1], [0, 0]],
            "S": [[1, 0], [0, 0]],
        }

    def test_longer_word(self):
        sm = factor_matrix("abc", "cabc")
        assert blocks_of(sm) == {
            "E": [[0, 0], [0, 0]],
            "F": [[1, 1], [0, 1]],
            "C": [[0, 0], [0, 0]],
            "S": [[0, 0], [0, 1]],
        }

    def test_product_matches_concatenation(self):
        lhs = factor_matrix("abc", "b").matrix * factor_matrix("abc", "cabc").matrix
        combined = factor_matrix("abc", "bcabc")
        assert lhs == combined.matrix
        assert blocks_of(combined) == {
            "E": [[0, 0], [0, 0]],
            "F": [[1, 1], [0, 2]],
            "C": [[0, 0], [0, 0]],
            "S": [[1, 1], [0, 0]],
        }

    def test_empty_word_is_identity(self):
        assert factor_matrix("abc", "").matrix == IntMatrix.identity(6)

    def test_two_letter_sigma_is_three_by_three(self):
        # cells: ends-with-a, count of ab, is-empty, starts-with-b
        m = factor_matrix("ab", "ba").matrix
        assert m.dim == 3
        assert (m.entry(1, 2), m.entry(1, 3), m.entry(2, 2), m.entry(2, 3)) == (
            1, 0, 0, 1,
        )
        m = factor_matrix("ab", "aab").matrix
        assert (m.entry(1, 2), m.entry(1, 3), m.entry(2, 2), m.entry(2, 3)) == (
            0, 1, 0, 0,
        )
        assert factor_matrix("ab", "").matrix == IntMatrix.identity(3)

    def test_short_sigma_rejected(self):
        with pytest.raises(PatternError):
            factor_matrix("a", "abc")


class TestSequenceMatrix:
    def test_first_factor_word(self):
        assert blocks_of(seq_matrix(AB_C, "babcab")) == {
            "E": [[0, 2], [0, 3]],
            "F": [[2, 1], [0, 2]],
            "C": [[0, 1], [0, 1]],
            "S": [[1, 1], [0, 1]],
        }

    def test_second_factor_word(self):
        assert blocks_of(seq_matrix(AB_C, "cbcba")) == {
            "E": [[1, 0], [0, 2]],
            "F": [[0, 0], [0, 1]],
            "C": [[0, 0], [0, 1]],
            "S": [[0, 0], [0, 2]],
        }

    def test_product_blocks(self):
        product = seq_matrix(AB_C, "babcab").matrix * seq_matrix(AB_C, "cbcba").matrix
        assert product == seq_matrix(AB_C, "babcabcbcba").matrix
        combined = seq_matrix(AB_C, "babcabcbcba")
        assert blocks_of(combined) == {
            "E": [[1, 2], [0, 5]],
            "F": [[2, 5], [0, 9]],
            "C": [[0, 1], [0, 1]],
            "S": [[1, 3], [0, 3]],
        }

    def test_empty_word_is_identity_for_every_pattern(self):
        for text in ("ab.c", "a.aba.a", "abc", "ab.ba.b"):
            q = GapPattern.parse(text)
            n = 3 * (q.flat_length - 1)
            assert seq_matrix(q, "").matrix == IntMatrix.identity(n)
            assert seq_matrix_direct(q, "").matrix == IntMatrix.identity(n)

    def test_flat_length_one_rejected(self):
        with pytest.raises(PatternError):
            seq_matrix(GapPattern(("a",)), "")


class TestLetterGenerators:
    def test_pattern_letter_cells(self):
        m = seq_matrix_letter(AB_C, "b")
        sm_blocks = blocks_of(seq_matrix(AB_C, "b"))
        assert m == seq_matrix_direct(AB_C, "b").matrix
        assert sm_blocks["C"][0][1] == 1
        assert sm_blocks["E"][1][1] == 1
        assert sm_blocks["F"] == [[0, 0], [0, 0]]

    def test_letter_outside_pattern(self):
        m = seq_matrix_letter(AB_C, "d")
        sm = seq_matrix(AB_C, "d")
        assert m == sm.matrix
        assert blocks_of(sm) == {
            "E": [[0, 0], [0, 0]],
            "F": [[0, 0], [0, 0]],
            "C": [[0, 0], [0, 1]],
            "S": [[0, 0], [0, 0]],
        }

    def test_three_factor_letter_cells(self):
        sm_blocks = blocks_of(seq_matrix(A_ABA_A, "a"))
        assert sm_blocks["E"][0][0] == 1
        assert sm_blocks["S"][3][3] == 1
        assert sm_blocks["C"][0][1] == 1
        assert sm_blocks["C"][2][3] == 1
        assert seq_matrix_letter(A_ABA_A, "a") == seq_matrix_direct(A_ABA_A, "a").matrix

    def test_invalid_letter(self):
        with pytest.raises(PatternError):
            seq_matrix_letter(AB_C, "!")
        with pytest.raises(PatternError):
            seq_matrix_letter(AB_C, "ab")


class TestDirectEqualsFold:
    def test_fuzzed(self):
        rng = random.Random(30)
        for _ in range(200):
            q = random_pattern(rng, "abc")
            w = random_word(rng, "abc", 20)
            assert seq_matrix(q, w) == seq_matrix_direct(q, w)

    def test_fold_object_is_incremental(self):
        fold = SeqFold(AB_C)
        for ch in "babcab":
            fold.push(ch)
        assert fold.result() == seq_matrix(AB_C, "babcab")
        # keep pushing after taking a result
        fold.extend("cbcba")
        assert fold.result() == seq_matrix(AB_C, "babcabcbcba")


class TestHomomorphism:
    def test_fuzzed_exact(self):
        rng = random.Random(31)
        for _ in range(200):
            q = random_pattern(rng, "abc")
            w1 = random_word(rng, "abc", 20)
            w2 = random_word(rng, "abc", 20)
            lhs = seq_matrix(q, w1).matrix * seq_matrix(q, w2).matrix
            assert lhs == seq_matrix(q, w1 + w2).matrix


class TestStructuralInvariants:
    def test_whole_block_diagonal(self):
        rng = random.Random(32)
        for _ in range(100):
            q = random_pattern(rng, "ab")
            w = random_word(rng, "ab", 8)
            c = seq_matrix(q, w).block("C")
            d = q.flat_length - 1
            for i in range(1, d + 1):
                expected = 1 if i in q.boundaries else (1 if w == "" else 0)
                assert c.entry(i, i) == expected

    def test_upper_triangular_with_unit_outer_blocks(self):
        rng = random.Random(33)
        for _ in range(50):
            q = random_pattern(rng, "ab")
            w = random_word(rng, "ab", 10)
            m = seq_matrix(q, w).matrix
            assert m.is_upper_triangular()
            d = q.flat_length - 1
            for i in range(1, d + 1):
                assert m.entry(i, i) == 1
                assert m.entry(2 * d + i, 2 * d + i) == 1

    def test_minor_cells_count_gapped_occurrences(self):
        rng = random.Random(34)
        for _ in range(100):
            q = random_pattern(rng, "ab")
            w = random_word(rng, "ab", 10)
            full = seq_matrix(q, w).matrix
            idx = minor_index_set(q)
            x = len(q.factors)
            for i in range(1, x + 1):
                for j in range(i, x + 1):
                    expected = count_gapped(w, q.factor_slice(i, j))
                    assert full.entry(idx[i - 1], idx[j]) == expected

    def test_single_letter_factors_match_induced_parikh_matrix(self):
        rng = random.Random(35)
        for _ in range(80):
            x = rng.randint(2, 3)
            factors = tuple(rng.choice("ab") for _ in range(x))
            q = GapPattern(factors)
            w = random_word(rng, "ab", 10)
            idx = minor_index_set(q)
            minor = seq_matrix(q, w).matrix.minor(idx, idx)
            ctx = ParikhContext.induced_by("".join(factors), Alphabet.parse("ab"))
            assert minor == parikh_matrix(ctx, w)


class TestDirectAgainstEnumeration:
    def test_every_cell_counts_its_piece(self):
        rng = random.Random(36)
        for _ in range(30):
            q = random_pattern(rng, "ab")
            w = random_word(rng, "ab", 8)
            layout = EntryLayout(q)
            m = seq_matrix_direct(q, w).matrix
            for row in range(1, layout.dim + 1):
                for col in range(1, layout.dim + 1):
                    cell = layout.cell(row, col)
                    if isinstance(cell, Piece):
                        expected = enum_piece(
                            w, cell.runs, cell.left_anchored, cell.right_anchored
                        )
                        assert m.entry(row, col) == expected

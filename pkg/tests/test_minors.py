import random

import pytest

from parikhseq.intmat import IntMatrix
from parikhseq.minors import (
    check_minor_nonneg,
    minor_index_set,
    special_minor,
    special_minor_from_matrix,
    verify_witness,
    witness_parikh_matrix,
    witness_text,
    witness_word,
)
from parikhseq.parikh import ParikhContext, parikh_matrix
from parikhseq.seqmat import seq_matrix
from parikhseq.words import Alphabet, GapPattern

A_ABA_A = GapPattern.parse("a.aba.a")
REFERENCE_MINOR = IntMatrix([[1, 2, 0, 0], [0, 1, 1, 0], [0, 0, 1, 2], [0, 0, 0, 1]])


def random_word(rng, alphabet, max_len):
    return "".join(rng.choice(alphabet) for _ in range(rng.randint(0, max_len)))


def random_pattern(rng, alphabet, max_factors=3):
    factors = tuple(
        "".join(rng.choice(alphabet) for _ in range(rng.randint(1, 3)))
        for _ in range(rng.randint(1, max_factors))
    )
    return GapPattern(factors)


class TestSpecialMinor:
    def test_three_factor_example(self):
        assert special_minor(A_ABA_A, "aba") == REFERENCE_MINOR

    def test_two_factor_example(self):
        q = GapPattern.parse("ab.c")
        assert special_minor(q, "babcabcbcba") == IntMatrix(
            [[1, 2, 5], [0, 1, 3], [0, 0, 1]]
        )

    def test_single_letter_factors_give_classic_matrix(self):
        q = GapPattern.parse("a.b")
        expected = IntMatrix([[1, 1, 1], [0, 1, 1], [0, 0, 1]])
        assert special_minor(q, "ab") == expected
        ctx = ParikhContext.classic(Alphabet.parse("ab"))
        assert expected == parikh_matrix(ctx, "ab")

    def test_index_set(self):
        assert minor_index_set(A_ABA_A) == (1, 5, 8, 12)
        assert minor_index_set(GapPattern.parse("ab.c")) == (1, 4, 6)
        assert minor_index_set(GapPattern(("ab",))) == (1, 3)

    def test_extraction_matches_direct(self):
        for text, w in [
            ("a.aba.a", "aba"),
            ("ab.c", "babcabcbcba"),
            ("ab", "abab"),
            ("a.b.a", "aabbaa"),
        ]:
            q = GapPattern.parse(text)
            assert special_minor_from_matrix(seq_matrix(q, w)) == special_minor(q, w)

    def test_extraction_fuzzed(self):
        rng = random.Random(40)
        for _ in range(150):
            q = random_pattern(rng, "abc")
            if q.flat_length < 2:
                continue
            w = random_word(rng, "abc", 12)
            assert special_minor_from_matrix(seq_matrix(q, w)) == special_minor(q, w)


class TestWitnessWord:
    def test_three_factor_example(self):
        witness = witness_word(A_ABA_A, "aba")
        assert witness == (3, 3, 2, 1, 1)
        assert witness_text(witness, 3) == "a3a3a2a1a1"
        assert witness_parikh_matrix(witness, 3) == REFERENCE_MINOR

    def test_disjoint_single_letters(self):
        assert witness_word(GapPattern.parse("a.b"), "ab") == (1, 2)

    def test_empty_word(self):
        assert witness_word(GapPattern.parse("ab.ba"), "") == ()
        _, minor, ok = verify_witness(GapPattern.parse("ab.ba"), "")
        assert ok and minor == IntMatrix.identity(3)

    def test_prefix_ordered_nonoverlapping_pair_regression(self):
        # q2 and q3 never overlap in w, yet their symbols must stay in span
        # order after the q1/q2 orientation is enforced
        q = GapPattern.parse("ba.a.b")
        witness = witness_word(q, "ba")
        assert witness == (3, 2, 1)
        assert witness_parikh_matrix(witness, 3) == special_minor(q, "ba")

    def test_witness_text_uses_commas_for_wide_patterns(self):
        assert witness_text((10, 2), 10) == "a10,a2"
        assert witness_text((1, 2), 2) == "a1a2"

    def test_reduction_fuzzed(self):
        rng = random.Random(41)
        for _ in range(300):
            q = random_pattern(rng, "abc")
            w = random_word(rng, "abc", 10)
            witness, minor, ok = verify_witness(q, w)
            assert ok, (q.render(), w, witness)

    def test_letter_counts_match_factor_counts(self):
        rng = random.Random(42)
        from parikhseq.counting import count_factor

        for _ in range(200):
            q = random_pattern(rng, "ab")
            w = random_word(rng, "ab", 10)
            witness = witness_word(q, w)
            for idx, factor in enumerate(q.factors, 1):
                assert witness.count(idx) == count_factor(w, factor)


class TestMinorSweep:
    def test_reference_minor_sweep(self):
        sweep = check_minor_nonneg(REFERENCE_MINOR, 4)
        assert sweep.all_nonnegative
        assert REFERENCE_MINOR.minor([1, 2], [2, 3]).det() == 2

    def test_identity_minors(self):
        sweep = check_minor_nonneg(IntMatrix.identity(4), 4)
        assert sweep.all_nonnegative
        for rows in ([1, 2], [1, 3], [2, 4]):
            det = IntMatrix.identity(4).minor(rows, [1, 2]).det()
            assert det in (0, 1)

    def test_two_factor_example_sweep(self):
        q = GapPattern.parse("ab.c")
        minor = special_minor(q, "babcabcbcba")
        assert check_minor_nonneg(minor, 3).all_nonnegative

    def test_detects_negative_minors(self):
        bad = IntMatrix([[1, 5, 1], [0, 1, 0], [0, 0, 1]])
        sweep = check_minor_nonneg(bad, 3)
        assert not sweep.all_nonnegative
        assert ((1, 2), (2, 3), -1) in sweep.violations

    def test_requires_unit_upper_triangular(self):
        with pytest.raises(ValueError):
            check_minor_nonneg(IntMatrix([[2, 0], [0, 1]]), 2)

    def test_special_minors_fuzzed(self):
        rng = random.Random(43)
        for _ in range(150):
            q = random_pattern(rng, "ab")
            w = random_word(rng, "ab", 10)
            minor = special_minor(q, w)
            assert check_minor_nonneg(minor, minor.dim).all_nonnegative

    def test_elimination_agrees_with_cofactor_on_submatrices(self):
        from itertools import combinations

        from oracles import det_cofactor

        minor = special_minor(GapPattern.parse("ab.c.ba"), "abcbaabcba")
        n = minor.dim
        for order in range(1, n + 1):
            for rows in combinations(range(1, n + 1), order):
                for cols in combinations(range(1, n + 1), order):
                    sub = minor.minor(rows, cols)
                    assert sub.det() == det_cofactor([list(r) for r in sub.rows])

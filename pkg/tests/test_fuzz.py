from parikhseq import fuzz
from parikhseq.words import GapPattern


class TestGenerators:
    def test_same_seed_same_cases(self):
        rng1 = fuzz._rng(7, "suite", 3)
        rng2 = fuzz._rng(7, "suite", 3)
        alpha1 = fuzz.random_alphabet(rng1)
        alpha2 = fuzz.random_alphabet(rng2)
        assert alpha1 == alpha2
        assert fuzz.random_pattern(rng1, alpha1) == fuzz.random_pattern(rng2, alpha2)
        assert fuzz.random_word(rng1, alpha1, 20) == fuzz.random_word(rng2, alpha2, 20)

    def test_pattern_bounds(self):
        for i in range(100):
            rng = fuzz._rng(0, "bounds", i)
            pattern = fuzz.random_pattern(rng, fuzz.random_alphabet(rng), min_flat=2)
            assert 1 <= len(pattern.factors) <= 3
            assert all(1 <= len(f) <= 3 for f in pattern.factors)
            assert pattern.flat_length >= 2


class TestShrinkers:
    def test_word_shrinks_to_minimal_failure(self):
        # failing predicate: word still contains both letters
        shrunk = fuzz._shrink_word("abbaba", lambda w: "a" in w and "b" in w)
        assert shrunk in ("ab", "ba")

    def test_word_shrink_keeps_failure(self):
        assert fuzz._shrink_word("aaa", lambda w: "aa" in w) == "aa"

    def test_pattern_shrink_drops_factors_and_letters(self):
        pattern = GapPattern(("ab", "ba", "a"))
        shrunk = fuzz._shrink_pattern(pattern, lambda p: "b" in p.flat)
        assert shrunk == GapPattern(("b",))

    def test_pattern_shrink_respects_min_flat(self):
        pattern = GapPattern(("ab", "ba"))
        shrunk = fuzz._shrink_pattern(pattern, lambda p: True, min_flat=2)
        assert shrunk.flat_length == 2


class TestSuites:
    def test_all_suites_pass_briefly(self):
        for name in fuzz.SUITES:
            report = fuzz.run_suite(name, seed=5, iters=20, max_len=3)
            assert report.passed, report
            assert report.suite == name

    def test_reports_are_deterministic(self):
        a = fuzz.run_suite("homomorphism", seed=9, iters=15, max_len=3)
        b = fuzz.run_suite("homomorphism", seed=9, iters=15, max_len=3)
        assert a == b

    def test_unknown_suite(self):
        import pytest

        with pytest.raises(ValueError):
            fuzz.run_suite("nonsense", 0, 1, 1)

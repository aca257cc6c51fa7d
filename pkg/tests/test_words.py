import random

import pytest

from fibquasi.words import (borders, canonical, covered_prefix_extent,
                            covered_suffix_extent, is_cover, is_factor,
                            occurrences, period_of, require_word, superpose)

F5 = "abaababa"
F6 = "abaababaabaab"


def random_word(rng, max_len=20):
    return "".join(rng.choice("ab") for _ in range(rng.randint(1, max_len)))


def random_factor(rng, y):
    i = rng.randrange(len(y))
    j = rng.randint(i + 1, len(y))
    return y[i:j]


def test_is_factor():
    assert is_factor("aba", "abaab")
    assert not is_factor("bb", "abaab")
    assert is_factor("", "ab")


def test_occurrences_examples():
    assert occurrences("ab", F5) == (1, 4, 6)
    assert occurrences("aba", F6) == (1, 4, 6, 9)
    assert occurrences("abaab", "abaab") == (1,)


def test_occurrences_overlap():
    assert occurrences("aa", "aaaa") == (1, 2, 3)


def test_occurrences_empty_pattern():
    with pytest.raises(ValueError):
        occurrences("", "ab")


def test_borders_examples():
    assert borders(F5) == ["a", "aba"]
    assert borders("a") == []
    assert borders("aabaa") == ["a", "aa"]


def test_borders_empty_input():
    with pytest.raises(ValueError):
        borders("")


def test_borders_are_prefix_and_suffix():
    rng = random.Random(7)
    for _ in range(300):
        y = random_word(rng)
        for u in borders(y):
            assert y.startswith(u) and y.endswith(u) and len(u) < len(y)


def test_period_examples():
    assert period_of(F5) == 5
    assert period_of("aaa") == 1
    assert period_of("ab") == 2


def test_period_duality():
    rng = random.Random(11)
    for _ in range(300):
        y = random_word(rng)
        bs = borders(y)
        longest = len(bs[-1]) if bs else 0
        assert period_of(y) + longest == len(y)


def test_period_repetition_characterization():
    # smallest p with y a prefix of (y[:p]) repeated must match
    rng = random.Random(13)
    for _ in range(200):
        y = random_word(rng, 16)
        p = next(k for k in range(1, len(y) + 1)
                 if (y[:k] * len(y)).startswith(y))
        assert period_of(y) == p


def test_is_cover_examples():
    ok, witness = is_cover("abaab", F6)
    assert ok and witness == (1, 6, 9)
    assert is_cover("aba", F6) == (False, None)


def test_trivial_cover_convention():
    rng = random.Random(17)
    for _ in range(50):
        y = random_word(rng)
        ok, witness = is_cover(y, y)
        assert ok and witness == (1,)


def test_is_cover_rejects_empty_pattern():
    with pytest.raises(ValueError):
        is_cover("", "ab")


def test_cover_is_border_or_whole():
    rng = random.Random(19)
    for _ in range(200):
        y = random_word(rng, 14)
        for u in {random_factor(rng, y) for _ in range(6)}:
            if is_cover(u, y)[0]:
                assert u == y or (y.startswith(u) and y.endswith(u))


def test_covered_prefix_extent_examples():
    assert covered_prefix_extent("aba", F6) == 11
    assert covered_prefix_extent("b", "abaab") == 0
    assert covered_prefix_extent("abaab", F6) == 13


def test_extent_full_iff_cover():
    rng = random.Random(23)
    for _ in range(300):
        y = random_word(rng, 14)
        u = random_factor(rng, y)
        assert (covered_prefix_extent(u, y) == len(y)) == is_cover(u, y)[0]


def test_covered_suffix_extent_examples():
    assert covered_suffix_extent("abaab", F6) == 13
    assert covered_suffix_extent("ab", "aba") == 0
    assert covered_suffix_extent("aab", "abaab") == 3


def test_suffix_extent_mirrors_prefix_extent():
    rng = random.Random(29)
    for _ in range(400):
        y = random_word(rng)
        u = random_factor(rng, y)
        assert covered_suffix_extent(u, y) == \
            covered_prefix_extent(u[::-1], y[::-1])


def test_superpose_examples():
    assert superpose("aba", "aab", 1) == "abaab"
    assert superpose("ab", "ba", 1) == "aba"
    assert superpose("aba", "bab", 2) == "abab"


def test_superpose_mismatch():
    with pytest.raises(ValueError, match="mismatch"):
        superpose("aba", "bab", 1)


def test_superpose_overlap_out_of_range():
    with pytest.raises(ValueError, match="range"):
        superpose("aba", "bab", 4)
    with pytest.raises(ValueError, match="range"):
        superpose("aba", "bab", 0)


def test_superpose_keeps_operands():
    rng = random.Random(31)
    for _ in range(300):
        u = random_word(rng, 10)
        overlap = rng.randint(1, len(u))
        v = u[len(u) - overlap:] + random_word(rng, 6)
        merged = superpose(u, v, overlap)
        assert merged.startswith(u) and merged.endswith(v)
        assert len(merged) == len(u) + len(v) - overlap


def test_canonical_ordering():
    assert canonical(["ba", "b", "ab", "b", "aab"]) == ["b", "ab", "ba", "aab"]


def test_require_word():
    require_word("abab")
    require_word("")
    with pytest.raises(ValueError):
        require_word("abc")

"""Permutation utilities: lengths, canonical words, move paths."""

import pytest

from klrcalc.perms import (act, all_perms, apply_move, canonical_word, compose,
                           identity, inverse, is_reduced, left_descents,
                           left_mul_s, length, move_path, word_perm)


def brute_reduced_words(p):
    """Oracle: enumerate every reduced word by breadth-first search."""
    n = len(p)
    ell = length(p)
    if ell == 0:
        return [()]
    out = []
    for r in range(1, n):
        q = left_mul_s(r, p)
        if length(q) < ell:
            out.extend((r,) + tail for tail in brute_reduced_words(q))
    return out


def test_word_perm_and_length():
    assert word_perm((), 3) == (0, 1, 2)
    assert word_perm((1,), 3) == (1, 0, 2)
    assert word_perm((1, 2), 3) == compose(word_perm((1,), 3), word_perm((2,), 3))
    w0 = (2, 1, 0)
    assert length(w0) == 3
    assert word_perm((1, 2, 1), 3) == w0 == word_perm((2, 1, 2), 3)


def test_inverse_and_act_is_group_action():
    for p in all_perms(4):
        assert compose(p, inverse(p)) == identity(4)
    seq = ("a", "b", "c", "d")
    for p in all_perms(4):
        for q in all_perms(4):
            assert act(p, act(q, seq)) == act(compose(p, q), seq)


def test_act_simple_transposition_swaps_entries():
    s2 = word_perm((2,), 3)
    assert act(s2, (10, 20, 30)) == (10, 30, 20)


def test_canonical_word_longest_s3():
    # both reduced words of the longest element, lex-min is (1,2,1)
    assert sorted(brute_reduced_words((2, 1, 0))) == [(1, 2, 1), (2, 1, 2)]
    assert canonical_word((2, 1, 0)) == (1, 2, 1)
    assert canonical_word((0, 1, 2)) == ()
    assert canonical_word((1, 0, 2)) == (1,)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_canonical_word_is_lex_least_reduced(n):
    for p in all_perms(n):
        words = brute_reduced_words(p)
        cw = canonical_word(p)
        assert cw == min(words)
        assert len(cw) == length(p)
        assert word_perm(cw, n) == p


def _check_move_legal(word, move):
    kind, t = move
    if kind == "comm":
        assert abs(word[t] - word[t + 1]) > 1
    else:
        x, y = word[t], word[t + 1]
        assert word[t + 2] == x and abs(x - y) == 1


@pytest.mark.parametrize("n", [3, 4])
def test_move_path_connects_reduced_words(n):
    for p in all_perms(n):
        words = brute_reduced_words(p)
        target = canonical_word(p)
        for w in words:
            cur = tuple(w)
            for move in move_path(cur, target, n):
                _check_move_legal(cur, move)
                cur = apply_move(cur, move)
                assert is_reduced(cur, n)
                assert word_perm(cur, n) == p
            assert cur == target


def test_left_descents():
    assert left_descents((0, 1, 2)) == []
    assert left_descents((2, 1, 0)) == [1, 2]
    assert left_descents((1, 0, 2)) == [1]

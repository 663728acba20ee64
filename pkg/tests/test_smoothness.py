import pytest
from hypothesis import given, settings, strategies as st

from toric_schubert.errors import NotCoxeterType, NotMinCosetRep, NotSimplyLaced
from toric_schubert.root_system import cartan_integer, parse_type
from toric_schubert.smoothness import (
    gamma_graph,
    jp_indices,
    predicted_identity_rays,
    smooth_by_cone_oracle,
    smooth_by_criterion,
    smooth_full_fan_check,
    smooth_simply_laced,
)
from toric_schubert.sweep import coxeter_words, parabolic_subsets
from toric_schubert.toric_fan import identity_cone
from toric_schubert.weyl_group import ParabolicSpec, is_min_coset_rep

P = ParabolicSpec


def test_jp_indices(A3):
    assert jp_indices(A3, [2, 1, 3], P({2})) == [1]
    assert jp_indices(A3, [2, 1, 3], P()) == []
    assert jp_indices(A3, [1, 3, 2], P({1, 3})) == [1, 2]


def test_b2_pair(B2):
    smooth = smooth_by_criterion(B2, [1, 2], P({1}))
    assert smooth.smooth and smooth.method == "direct-criterion" and smooth.witness["t"] == {"1": 2}
    singular = smooth_by_criterion(B2, [2, 1], P({2}))
    assert not singular.smooth and singular.witness["nonzero_cartan_integers"] == {"2": -2}
    oracle = smooth_by_cone_oracle(B2, [2, 1], P({2}))
    assert not oracle.smooth and oracle.witness["determinant"] == 2
    oracle = smooth_by_cone_oracle(B2, [1, 2], P({1}))
    assert oracle.smooth and oracle.witness["determinant"] == 1
    assert set(map(tuple, oracle.witness["extremal_rays"])) == {(1, 0), (-1, 1)}


def test_a3_singular_examples(A3):
    v = smooth_by_criterion(A3, [2, 1, 3], P({2}))
    assert not v.smooth and v.witness["nonzero_cartan_integers"] == {"2": -1, "3": -1}
    v = smooth_by_criterion(A3, [1, 3, 2], P({1, 3}))
    assert not v.smooth and v.witness["collision"] == {"t": 3, "positions": [1, 2]}


def test_gamma_graphs(A3):
    assert gamma_graph(A3, [2, 1, 3]).edges == {(1, 2), (1, 3)}
    assert gamma_graph(A3, [1, 3, 2]).edges == {(1, 3), (2, 3)}
    assert gamma_graph(A3, [1]).edges == frozenset()
    with pytest.raises(NotCoxeterType):
        gamma_graph(A3, [1, 2, 1])


def test_simply_laced(A3, B2):
    assert not smooth_simply_laced(A3, [2, 1, 3], P({2})).smooth
    assert not smooth_simply_laced(A3, [1, 3, 2], P({1, 3})).smooth
    assert smooth_simply_laced(A3, [2, 1, 3], P()).smooth
    with pytest.raises(NotSimplyLaced):
        smooth_simply_laced(B2, [1, 2], P({1}))


def test_trivial_and_full_fan(A2, B2):
    v = smooth_by_criterion(A2, [1, 2], P())
    assert v.smooth and v.method == "trivial-case"
    assert smooth_by_cone_oracle(A2, [1, 2], P()).smooth
    full = smooth_full_fan_check(A2, [1, 2], P({1}))
    assert full.smooth and full.witness["cone_count"] == 3
    bad = smooth_full_fan_check(B2, [2, 1], P({2}))
    assert not bad.smooth
    assert [c["label"] for c in bad.witness["singular_cones"]] == ["e"]


def test_preconditions(A2):
    with pytest.raises(NotMinCosetRep):
        smooth_by_criterion(A2, [1, 2], P({2}))
    with pytest.raises(NotCoxeterType):
        smooth_by_criterion(A2, [1, 2, 1], P())


@pytest.mark.parametrize("name", ["A3", "B3", "C3", "G2", "D4"])
def test_routes_agree_and_rays_are_predicted(name):
    rs = parse_type(name)
    for w, words in coxeter_words(rs).items():
        for p in parabolic_subsets(rs):
            if not is_min_coset_rep(w, p):
                continue
            verdicts = set()
            for word in words:
                crit = smooth_by_criterion(rs, word, p)
                verdicts.add(crit.smooth)
                assert crit.smooth == smooth_by_cone_oracle(rs, word, p).smooth
                assert crit.smooth == smooth_full_fan_check(rs, word, p).smooth
                if rs.simply_laced:
                    assert crit.smooth == smooth_simply_laced(rs, word, p).smooth
                if crit.smooth:
                    assert set(identity_cone(rs, word, p).rays) == predicted_identity_rays(rs, word, crit)
            assert len(verdicts) == 1


@pytest.mark.parametrize("name", ["A3", "B3", "C3", "G2", "B4", "F4"])
def test_one_variable_case(name):
    """With one constrained position, first in the word, smoothness needs a unique later -1."""
    rs = parse_type(name)
    for w, words in coxeter_words(rs).items():
        for word in words:
            if not word:
                continue
            p = P({word[0]})
            if not is_min_coset_rep(w, p):
                continue
            nonzero = [cartan_integer(rs, word[0], i) for i in word[1:] if cartan_integer(rs, word[0], i)]
            assert smooth_by_criterion(rs, word, p).smooth == (nonzero == [-1])


def mirrored_criterion(rs, rev_word, p):
    """The criterion read on a reversed word: later positions become earlier ones."""
    r = len(rev_word)
    targets = []
    for j in range(r, 0, -1):
        if rev_word[j - 1] not in p.subset:
            continue
        hits = [(m, cartan_integer(rs, rev_word[j - 1], rev_word[m - 1])) for m in range(1, j)]
        hits = [(m, b) for m, b in hits if b]
        if len(hits) != 1 or hits[0][1] != -1:
            return False
        targets.append(hits[0][0])
    return len(targets) == len(set(targets))


@settings(max_examples=150, deadline=None)
@given(st.sampled_from(["A4", "B4", "C4", "D4", "F4", "G2"]), st.data())
def test_reversal_stability_of_criterion(name, data):
    rs = parse_type(name)
    pairs = [(w, words) for w, words in coxeter_words(rs).items() if words[0]]
    w, words = data.draw(st.sampled_from(pairs))
    word = data.draw(st.sampled_from(words))
    p = P(data.draw(st.sets(st.sampled_from(sorted(set(word))))))
    if not (is_min_coset_rep(w, p) and is_min_coset_rep(w.inverse(), p)):
        return
    assert mirrored_criterion(rs, tuple(reversed(word)), p) == smooth_by_criterion(rs, word, p).smooth


def test_reversed_word_alone_is_not_a_smoothness_invariant():
    rs = parse_type("D4")
    p = P({2})
    assert not smooth_by_criterion(rs, (1, 2, 3, 4), p).smooth
    assert smooth_by_criterion(rs, (4, 3, 2, 1), p).smooth
    assert smooth_by_cone_oracle(rs, (4, 3, 2, 1), p).smooth

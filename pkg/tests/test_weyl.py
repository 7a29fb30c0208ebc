import random
from fractions import Fraction

import pytest

from kostant_osc.partitions import Partition, conjugate, partitions, partitions_upto
from kostant_osc.weights import classical_weight
from kostant_osc.weyl import (WeightCoords, coset_reps, dot, identity, is_levi_dominant, parse_element,
                              reduced_word, simple, simple_dot, weight_partition, weight_partition_pair)


def _strict(k):
    return sum(1 for p in partitions(k) if len(set(p)) == len(p))


def test_coset_counts():
    assert [len(coset_reps("c", k)) for k in range(5)] == [1, 1, 1, 2, 2]
    for k in range(7):
        assert len(coset_reps("a", k)) == len(list(partitions(k)))
        for tag in "bcd":
            assert len(coset_reps(tag, k)) == _strict(k)


def _cayley_depths(tag, gens, depth):
    """Distances from the identity in the Cayley graph (plain BFS)."""
    seen = {identity(tag): 0}
    frontier = [identity(tag)]
    for dist in range(1, depth + 1):
        nxt = []
        for w in frontier:
            for s in gens:
                v = w.compose(s)
                if v not in seen:
                    seen[v] = dist
                    nxt.append(v)
        frontier = nxt
    return seen


@pytest.mark.parametrize("tag", ["a", "b", "c", "d"])
def test_length_is_cayley_distance(tag):
    idx = range(-2, 3) if tag == "a" else range(0, 4)
    gens = [simple(tag, i) for i in idx]
    for w, dist in _cayley_depths(tag, gens, 5).items():
        assert w.length() == dist


@pytest.mark.parametrize("tag", ["a", "b", "c", "d"])
def test_reduced_words(tag):
    for k in range(5):
        for w in coset_reps(tag, k):
            word = reduced_word(w)
            assert len(word) == k
            v = identity(tag)
            for i in word:
                v = v.compose(simple(tag, i))
            assert v == w


@pytest.mark.parametrize("tag", ["a", "b", "c", "d"])
def test_text_round_trip(tag):
    for k in range(5):
        for w in coset_reps(tag, k):
            assert parse_element(tag, w.text()) == w
            assert w.inverse().compose(w) == identity(tag)


def _weight(tag, lam, d):
    if tag == "a":
        lam = tuple(lam) + (0,) * (d - len(lam))
    return classical_weight(tag, lam, d)


@pytest.mark.parametrize("tag", ["a", "b", "c", "d"])
def test_dot_agrees_with_reflection_formula(tag):
    for d in (1, 2, 3):
        if tag in "bc" and d % 2:
            continue
        base = _weight(tag, (1,), d)
        for k in range(5):
            for w in coset_reps(tag, k):
                mu = base
                for i in reversed(reduced_word(w)):
                    mu = simple_dot(tag, i, mu)
                assert mu == dot(w, base)


@pytest.mark.parametrize("tag", ["a", "b", "c", "d"])
def test_dot_respects_composition(tag):
    rng = random.Random(7)
    base = _weight(tag, (2, 1), 4)
    idx = list(range(-2, 3)) if tag == "a" else list(range(0, 4))
    for _ in range(30):
        u = identity(tag)
        v = identity(tag)
        for _ in range(rng.randint(0, 4)):
            u = u.compose(simple(tag, rng.choice(idx)))
        for _ in range(rng.randint(0, 4)):
            v = v.compose(simple(tag, rng.choice(idx)))
        assert dot(u.compose(v), base) == dot(u, dot(v, base))


def _grid(tag):
    out = []
    for d in (1, 2, 3, 4):
        if tag in "bc" and d % 2:
            continue
        for lam in partitions_upto(3):
            if tag == "a" and len(lam) > d:
                continue
            if tag in "bc" and len(lam) > d // 2:
                continue
            if tag == "d" and conjugate(lam).part(1) + conjugate(lam).part(2) > d:
                continue
            out.append((d, lam))
    return out


@pytest.mark.parametrize("tag", ["a", "b", "c", "d"])
def test_levi_dominance_and_distinctness(tag):
    for d, lam in _grid(tag):
        base = _weight(tag, lam, d)
        for k in range(5):
            images = [dot(w, base) for w in coset_reps(tag, k)]
            assert all(is_levi_dominant(mu) for mu in images)
            assert len(set(images)) == len(images)


def test_first_syzygies():
    for d in (1, 2, 3, 4):
        (w,) = coset_reps("a", 1)
        plus, minus = weight_partition_pair(dot(w, _weight("a", (), d)))
        assert plus == (d + 1,) and minus == (d + 1,)
        (w,) = coset_reps("d", 1)
        assert weight_partition(dot(w, _weight("d", (), d))) == (d + 1, d + 1)
        if d % 2 == 0:
            (w,) = coset_reps("c", 1)
            assert weight_partition(dot(w, _weight("c", (), d))) == (d + 2,)
            (w,) = coset_reps("b", 1)
            assert weight_partition(dot(w, _weight("b", (), d))) == (d + 1,)


def test_identity_gives_conjugate_for_type_c():
    lam = Partition((3, 1))
    assert weight_partition(dot(identity("c"), classical_weight("c", lam, 4))) == conjugate(lam)


def test_weight_json():
    mu = WeightCoords.make("c", Fraction(1, 2), {1: 2, 3: Fraction(1, 2)})
    assert mu.to_json()["level"] == "1/2"

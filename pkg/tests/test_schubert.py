import itertools
import random

from hypothesis import given, settings, strategies as st

from dworklines.schubert import (BOX, SchubertClass, dual, incidence_decomposition, integrate,
                                 multiply, sigma)


def _lr_coefficient(lam, mu, nu):
    """Count LR tableaux of shape nu/lam and content mu (brute force)."""
    cells = [(r, c) for r in range(2) for c in range(lam[r], nu[r])]
    if len(cells) != sum(mu) or any(nu[r] < lam[r] for r in range(2)):
        return 0
    labels = [i + 1 for i, m in enumerate(mu) for _ in range(m)]
    count = 0
    for filling in set(itertools.permutations(labels)):
        T = dict(zip(cells, filling))
        if any(T[(r, c)] > T[(r, c + 1)] for (r, c) in cells if (r, c + 1) in T):
            continue
        if any(T[(0, c)] >= T[(1, c)] for (r, c) in cells if r == 0 and (1, c) in T):
            continue
        # reverse reading word: right to left along rows, top row first
        word = [T[(r, c)] for r in range(2) for c in reversed(range(lam[r], nu[r]))]
        seen = {1: 0, 2: 0}
        ok = True
        for w in word:
            seen[w] += 1
            if w == 2 and seen[2] > seen[1]:
                ok = False
                break
        count += ok
    return count


def test_pieri_against_lr_oracle():
    for lam, mu in itertools.product(BOX, repeat=2):
        got = sigma(*lam) * sigma(*mu)
        want = {}
        for nu in BOX:
            c = _lr_coefficient(lam, mu, nu)
            if c:
                want[nu] = c
        assert got == SchubertClass(want), (lam, mu)


def test_paper_products():
    s1 = sigma(1)
    assert s1 * s1 == sigma(1, 1) + sigma(2)
    assert sigma(2, 0) * sigma(2, 0) == sigma(2, 2) + sigma(3, 1)
    assert s1 ** 4 == sigma(2, 2) * 2 + sigma(3, 1) * 3
    assert sigma(2, 0) == sigma(2)


classes = st.dictionaries(st.sampled_from(BOX), st.integers(-5, 5), max_size=4).map(SchubertClass)


@settings(max_examples=200)
@given(classes, classes, classes)
def test_commutative_associative(x, y, z):
    assert multiply(x, y) == multiply(y, x)
    assert multiply(multiply(x, y), z) == multiply(x, multiply(y, z))
    assert multiply(x, y + z) == multiply(x, y) + multiply(x, z)


def test_poincare_duality():
    for lam, mu in itertools.product(BOX, repeat=2):
        if sum(lam) + sum(mu) != 6:
            continue
        assert integrate(sigma(*lam) * sigma(*mu)) == (1 if mu == dual(lam) else 0)


def test_out_of_box_vanishes():
    assert not sigma(4)
    assert not sigma(3, 3) * sigma(1)


def test_incidence_table():
    t = incidence_decomposition()
    assert t.classes["I3"] == sigma(3, 1) * 100 + sigma(2, 2) * 50
    assert t.classes["S"] == sigma(2, 2) * 375 + sigma(3, 1) * 250
    assert t.degrees == {"plucker": 625, "threefold": 250}
    assert integrate(sigma(3, 3)) == 1

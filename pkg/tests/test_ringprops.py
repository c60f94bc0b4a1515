import itertools
import random

import pytest

from affsemi import AffineSemigroup, random_semigroup, ring_properties
from affsemi.errors import NotSimplicial

from conftest import EX_B, monomial_curve


def test_gorenstein_fixture(gorenstein_b):
    r = ring_properties(gorenstein_b)
    assert (r.gorenstein, r.normal, r.seminormal) == (True, False, True)
    assert r.cohen_macaulay and r.depth == 3


def test_non_buchsbaum_fixture(nonbuchsbaum_b):
    r = ring_properties(nonbuchsbaum_b)
    assert (r.buchsbaum, r.seminormal, r.normal) == (False, True, False)
    assert r.witnesses["buchsbaum"]["ideal"] == [[0, 1, 0], [1, 0, 0]]


@pytest.mark.parametrize("alpha", range(2, 7))
def test_monomial_curves(alpha):
    r = ring_properties(AffineSemigroup(monomial_curve(alpha)))
    assert r.cohen_macaulay == (alpha <= 3)
    assert r.gorenstein == (alpha <= 2)
    assert r.buchsbaum == (alpha <= 4)
    assert r.normal == (alpha <= 3)
    assert r.seminormal == (alpha <= 3)


def test_polynomial_ring():
    r = ring_properties(AffineSemigroup([(1, 0, 0), (0, 1, 0), (0, 0, 1)]))
    assert r.depth == 3 and all(r.flags().values())


def test_requires_simplicial():
    with pytest.raises(NotSimplicial):
        ring_properties(AffineSemigroup(EX_B))


@pytest.mark.parametrize("seed", range(10))
def test_implications_and_symmetry(seed):
    B = random_semigroup(2 + seed % 3, 2 + seed % 2, 1 + seed % 3, simplicial=True, seed=seed)
    r = ring_properties(B)
    assert r.implications_hold()
    assert (r.depth == r.dim) == r.cohen_macaulay
    rev = ring_properties(AffineSemigroup(tuple(reversed(B.generators))))
    assert rev.flags() == r.flags() and rev.depth == r.depth
    perm = list(range(B.ambient_dim))
    random.Random(seed).shuffle(perm)
    swapped = ring_properties(AffineSemigroup([tuple(g[p] for p in perm) for g in B.generators]))
    assert (swapped.normal, swapped.seminormal) == (r.normal, r.seminormal)

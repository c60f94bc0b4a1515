import pytest

from affsemi import AffineSemigroup, decompose, hilbert_identity, module_generators, random_semigroup
from affsemi.errors import ConeMismatch, ContainmentViolation, NonHilbert
from affsemi.ringprops import lambda_coordinates

from conftest import EX_A, EX_B, GOR_B


def test_equal_semigroups():
    B = AffineSemigroup(EX_B)
    assert module_generators(B, B) == [(0, 0, 0)]
    D = decompose(B, B)
    assert len(D) == 1
    (c,) = D.components
    assert c.is_unit and c.shift == (0, 0, 0)


def test_four_generator_example(four_gen_pair):
    A, B = four_gen_pair
    assert set(module_generators(A, B)) == {(0, 0, 0), (2, 4, 4), (1, 2, 2), (3, 6, 6)}
    D = decompose(A, B)
    assert len(D) == 2
    assert sorted(c.shift for c in D) == [(-2, 0, -3), (-1, 2, -1)]
    for c in D:
        assert set(c.ideal_vectors) == {(2, 0, 3), (4, 4, 7)}
        assert set(c.ideal_exponents) == {(1, 0, 0, 0), (0, 1, 2, 0)}


def test_monomial_curve_four_classes():
    B = AffineSemigroup([(4, 0), (3, 1), (1, 3), (0, 4)])
    A = AffineSemigroup([(4, 0), (0, 4)])
    BA = module_generators(A, B)
    assert BA == module_generators(A, B, method="bfs")
    assert set(BA) == {(0, 0), (3, 1), (1, 3), (6, 2), (2, 6)}
    D = decompose(A, B)
    assert len(D) == D.quotient.order == 4
    proper = [c for c in D if not c.is_unit]
    assert len(proper) == 1 and proper[0].shift == (2, 2)
    assert set(proper[0].ideal_exponents) == {(1, 0), (0, 1)}


def test_unit_ideals_over_free_base(gorenstein_b):
    A = AffineSemigroup(GOR_B[:3])
    D = decompose(A, gorenstein_b)
    assert len(D) == 4
    assert all(c.is_unit for c in D)
    assert sorted(c.shift for c in D) == sorted([(0, 0, 0), (1, 0, 1), (0, 1, 1), (1, 1, 2)])


def test_cone_mismatch():
    with pytest.raises(ConeMismatch):
        decompose(AffineSemigroup([(2, 0), (1, 1)]), AffineSemigroup([(2, 0), (1, 1), (0, 2)]))


def test_containment_violation():
    with pytest.raises(ContainmentViolation):
        decompose(AffineSemigroup([(1, 0), (0, 1)]), AffineSemigroup([(2, 0), (0, 2), (1, 1)]))


def test_nonhilbert_check():
    B = AffineSemigroup([(2, 0), (0, 2), (1, 1), (3, 1)])
    with pytest.raises(NonHilbert):
        decompose(AffineSemigroup([(2, 0), (0, 2)]), B, verify_hilbert=True)


@pytest.mark.parametrize("seed", range(8))
def test_invariants_on_random_instances(seed):
    d = 3 - seed % 2
    B = random_semigroup(3 if d == 3 else 4, d, 1 + seed % 3, simplicial=seed % 2 == 0, seed=seed)
    A = AffineSemigroup(B.extremal_generators())
    D = decompose(A, B)
    assert list(D.module_generators) == module_generators(A, B, method="bfs")
    seen = set()
    for c in D:
        assert c.gamma and not (seen & set(c.gamma))
        seen |= set(c.gamma)
        for v, e in zip(c.gamma, c.ideal_exponents):
            # v - h_g is in A
            assert A.member(tuple(x - y for x, y in zip(v, c.shift)))
            assert all(x >= 0 for x in e)
    assert seen == set(D.module_generators)
    assert all(lhs == rhs for _, lhs, rhs in hilbert_identity(D, 10))


def test_free_shift_matches_lambda_minimum():
    B = AffineSemigroup([(4, 0), (3, 1), (1, 3), (0, 4)])
    A = AffineSemigroup(B.extremal_generators())
    for c in decompose(A, B):
        lams = [lambda_coordinates(v, A.generators) for v in c.gamma]
        mins = [min(col) for col in zip(*lams)]
        want = tuple(sum(m * a[k] for m, a in zip(mins, A.generators)) for k in range(2))
        assert want == c.shift


def test_ideal_generators_minimal(four_gen_pair):
    A, B = four_gen_pair
    for c in decompose(A, B):
        for u in c.ideal_vectors:
            for v in c.ideal_vectors:
                if u != v:
                    assert not A.member(tuple(x - y for x, y in zip(v, u)))

import random

import pytest

from incideals import (
    ImproperIdeal,
    Monomial,
    MonomialIdeal,
    MonomialPrime,
    associated_primes,
    associated_primes_brute,
    irreducible_components,
)
from conftest import ideal, mono


def prime_sets(primes):
    return {frozenset(p.indices) for p in primes}


def test_golden_two_primes():
    J = ideal([[(1, 2)], [(1, 1), (2, 1)]], 2)
    assert prime_sets(associated_primes(J)) == {frozenset({1}), frozenset({1, 2})}


def test_squares_single_prime():
    J = ideal([[(1, 2)], [(2, 2)], [(3, 2)]], 3)
    assert prime_sets(associated_primes(J)) == {frozenset({1, 2, 3})}


def test_variable_powers_prime():
    J = ideal([[(2, 3)]], 4)
    assert prime_sets(associated_primes(J)) == {frozenset({2})}


def test_irreducible_components_intersect_back():
    J = ideal([[(1, 2)], [(1, 1), (2, 1)], [(2, 3), (3, 1)]], 3)
    comps = irreducible_components(J)
    acc = MonomialIdeal.unit(3)
    for c in comps:
        # each component is generated by pure variable powers
        assert all(len(g.exps) == 1 for g in c.gens)
        acc = acc.intersect(c)
    assert acc == J


def test_unit_and_zero_rejected():
    with pytest.raises(ImproperIdeal):
        associated_primes(MonomialIdeal.zero(2))
    with pytest.raises(ImproperIdeal):
        associated_primes(MonomialIdeal.unit(2))


def test_monomial_prime_str():
    p = MonomialPrime(frozenset({3, 1}))
    assert str(p) == "<x1, x3>"


def test_split_matches_brute_oracle():
    rng = random.Random(12)
    for _ in range(30):
        n = rng.randint(2, 4)
        gens = []
        for _ in range(rng.randint(1, 4)):
            supp = sorted(rng.sample(range(1, n + 1), rng.randint(1, n)))
            gens.append(
                Monomial.from_pairs([(i, rng.randint(1, 3)) for i in supp], n)
            )
        J = MonomialIdeal.from_gens(tuple(gens), n)
        if not J.is_proper:
            continue
        assert prime_sets(associated_primes(J)) == prime_sets(
            associated_primes_brute(J)
        ), J

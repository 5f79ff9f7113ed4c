import itertools
import random
from math import comb

import pytest

from incideals import (
    CapExceeded,
    DEFAULT_FIELD,
    FieldSpec,
    ImproperIdeal,
    Monomial,
    MonomialIdeal,
    betti_table,
    euler_consistency,
    homology_ranks,
    koszul_complex,
    lcm_lattice,
    pd,
    reg,
    reg_colon_bounds_check,
)
from conftest import ideal, mono


def squares(n):
    return MonomialIdeal.from_gens(
        tuple(Monomial.variable(i, n, 2) for i in range(1, n + 1)), n
    )


def random_ideal(rng, nmax=4, gmax=4, emax=3):
    n = rng.randint(2, nmax)
    gens = []
    for _ in range(rng.randint(1, gmax)):
        supp = sorted(rng.sample(range(1, n + 1), rng.randint(1, n)))
        gens.append(Monomial.from_pairs([(i, rng.randint(1, emax)) for i in supp], n))
    return MonomialIdeal.from_gens(tuple(gens), n)


def test_lcm_lattice_golden():
    J = ideal([[(1, 2)], [(2, 2)]], 2)
    lat = lcm_lattice(J)
    assert lat == {mono([(1, 2)], 2), mono([(2, 2)], 2), mono([(1, 2), (2, 2)], 2)}


def test_lcm_lattice_matches_subset_enumeration():
    rng = random.Random(21)
    for _ in range(20):
        J = random_ideal(rng)
        if not J.is_proper:
            continue
        expected = set()
        for k in range(1, len(J.gens) + 1):
            for sub in itertools.combinations(J.gens, k):
                acc = sub[0]
                for g in sub[1:]:
                    from incideals import lcm

                    acc = lcm(acc, g)
                expected.add(acc)
        assert lcm_lattice(J) == expected, J


def test_lcm_lattice_gen_cap():
    J = MonomialIdeal.from_gens(
        tuple(Monomial.variable(i, 25, 2) for i in range(1, 22)), 25
    )
    with pytest.raises(CapExceeded):
        lcm_lattice(J)
    # cap is adjustable
    assert len(lcm_lattice(ideal([[(1, 2)], [(2, 2)]], 2), gen_cap=2)) == 3


def test_koszul_complex_shapes():
    J = squares(3)
    a = mono([(1, 2), (2, 2), (3, 2)], 3)
    c = koszul_complex(J, a)
    # generators are tight at exactly one vertex each: hollow triangle
    assert sorted(c.facet_masks()) == [0b011, 0b101, 0b110]
    outside = mono([(1, 1)], 3)
    assert koszul_complex(J, outside).is_void
    inside = mono([(1, 2), (2, 1)], 3)
    c2 = koszul_complex(J, inside)
    assert not c2.is_void


def test_betti_squares_golden():
    for n in (1, 2, 3, 4, 5):
        T = betti_table(squares(n))
        assert T.pd() == n - 1
        assert T.reg() == n + 1
        assert T.totals() == {i: comb(n, i + 1) for i in range(n)}


def test_betti_principal_ideal():
    T = betti_table(ideal([[(1, 3), (2, 1)]], 2))
    assert T.entries == ((0, mono([(1, 3), (2, 1)], 2), 1),)
    assert T.pd() == 0 and T.reg() == 4


def test_pd_reg_improper_errors():
    with pytest.raises(ImproperIdeal):
        pd(MonomialIdeal.zero(2))
    with pytest.raises(ImproperIdeal):
        reg(MonomialIdeal.unit(2))
    with pytest.raises(ImproperIdeal):
        betti_table(MonomialIdeal.zero(2))


def test_betti_unit_table():
    T = betti_table(MonomialIdeal.unit(3))
    assert T.pd() == 0 and T.reg() == 0


def test_fast_path_matches_reference_homology():
    rng = random.Random(7)
    for _ in range(30):
        J = random_ideal(rng)
        if not J.is_proper:
            continue
        T = betti_table(J)
        ref = {}
        for a in lcm_lattice(J):
            c = koszul_complex(J, a)
            for i, h in homology_ranks(c, DEFAULT_FIELD).items():
                if h:
                    ref[(i + 1, a)] = h
        assert {(i, a): v for i, a, v in T.entries} == ref, J


def test_no_homology_off_the_lattice():
    rng = random.Random(17)
    for _ in range(10):
        J = random_ideal(rng, nmax=3)
        if not J.is_proper:
            continue
        lat = lcm_lattice(J)
        for a in list(lat)[:4]:
            b = a * Monomial.variable(1, J.ambient)
            if b in lat or b not in J:
                continue
            ranks = homology_ranks(koszul_complex(J, b), DEFAULT_FIELD)
            assert all(v == 0 for v in ranks.values()), (J, b)


def test_euler_consistency():
    rng = random.Random(31)
    checked = 0
    for _ in range(25):
        J = random_ideal(rng)
        if not J.is_proper:
            continue
        assert euler_consistency(J), J
        checked += 1
    assert checked >= 20


def test_betti_gen_cap_raises():
    J = squares(21)
    with pytest.raises(CapExceeded):
        betti_table(J)
    T = betti_table(squares(6), gen_cap=None)
    assert T.pd() == 5


def test_lattice_cap_raises():
    with pytest.raises(CapExceeded):
        betti_table(squares(5), lattice_cap=10)


def test_char_dependence_shows_up():
    # Stanley-Reisner ideal of the 6-vertex projective plane triangulation
    triangles = [
        (1, 2, 4), (1, 2, 5), (1, 3, 4), (1, 3, 6), (1, 5, 6),
        (2, 3, 5), (2, 3, 6), (2, 4, 6), (3, 4, 5), (4, 5, 6),
    ]
    keep = {frozenset(t) for t in triangles}
    nonfaces = [
        s
        for s in itertools.combinations(range(1, 7), 3)
        if frozenset(s) not in keep
    ]
    mins = []
    for s in nonfaces:
        # minimal nonfaces only: every proper pair must be a face
        mins.append(Monomial.from_pairs([(v, 1) for v in s], 6))
    J = MonomialIdeal.from_gens(tuple(mins), 6)
    p0 = betti_table(J, FieldSpec(32003), gen_cap=None).pd()
    p2 = betti_table(J, FieldSpec(2), gen_cap=None).pd()
    assert p2 == p0 + 1  # the classical char-2 jump


def test_reg_colon_bounds():
    rng = random.Random(41)
    for _ in range(12):
        J = random_ideal(rng, nmax=3, gmax=3)
        if not J.is_proper:
            continue
        for k in range(1, J.ambient + 1):
            assert reg_colon_bounds_check(J, k), (J, k)

import random

import pytest

from signtrop.axioms import check_hyperfield
from signtrop.hyperfield import K, S
from signtrop.quotient import FiniteHyperfield, FiniteRing, find_isomorphism, quotient_hyperfield, zmod

K_TABLE = FiniteHyperfield.from_hyperfield(K)
S_TABLE = FiniteHyperfield.from_hyperfield(S)


@pytest.mark.parametrize("n", [3, 5, 7, 11])
def test_field_mod_units_is_krasner(n):
    ring = zmod(n)
    assert find_isomorphism(quotient_hyperfield(ring, ring.units()), K_TABLE) is not None


def test_trivial_subgroup_gives_the_field_back():
    Q = quotient_hyperfield(zmod(3), [1])
    assert Q.order == 3
    for a in Q.elements():
        for b in Q.elements():
            assert len(Q.add(a, b).elements) == 1
    assert find_isomorphism(Q, K_TABLE) is None


def test_squares_mod_seven():
    # F_7 / {1, 2, 4}: three classes, and 1 [+] 1 already meets both nonzero classes
    Q = quotient_hyperfield(zmod(7), [1, 2, 4])
    assert Q.order == 3
    assert find_isomorphism(Q, S_TABLE) is None
    assert check_hyperfield(Q, 300, random.Random(0)).ok


@pytest.mark.parametrize("n,G", [(5, [1, 4]), (7, [1, 6]), (13, [1, 3, 9])])
def test_quotients_satisfy_axioms(n, G):
    rep = check_hyperfield(quotient_hyperfield(zmod(n), G), 500, random.Random(n))
    assert rep.ok, rep.lines()


def test_bad_subgroups():
    with pytest.raises(ValueError):
        quotient_hyperfield(zmod(5), [1, 2])  # not closed
    with pytest.raises(ValueError):
        quotient_hyperfield(zmod(4), [2])  # 2 is not a unit
    with pytest.raises(ValueError):
        quotient_hyperfield(zmod(5), [])
    with pytest.raises(ValueError):
        zmod(65)


def test_hyperring_that_is_not_a_field_is_caught():
    # Z/4 has the zero divisor 2, so the class of 2 has no inverse
    Q = quotient_hyperfield(zmod(4), [1, 3])
    rep = check_hyperfield(Q, 300, random.Random(1))
    assert not rep.laws["inverse"].ok


def test_table_copy_of_signs_is_isomorphic_to_itself():
    assert find_isomorphism(S_TABLE, FiniteHyperfield.from_hyperfield(S, name="S2")) is not None


def test_ring_units():
    assert zmod(8).units() == [1, 3, 5, 7]
    assert isinstance(zmod(2), FiniteRing)

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from twovalued.axioms import (
    AssociativityWitness,
    check_associativity,
    check_commutativity,
    check_involutivity,
    check_strong_identity,
    is_involutive_2vg,
    verify_all,
)
from twovalued.construct import dihedral_group, group_coset_attempt
from twovalued.core import Multiset, Pair, Table, mset_product, mul

from conftest import random_table, zmod_oracle


def naive_associative(t: Table):
    """Reference: expand both sides with the generic multiset product, scanning every triple."""
    for x in range(t.n):
        for y in range(t.n):
            for z in range(t.n):
                if mset_product(t, mul(t, x, y), [z]) != mset_product(t, [x], mul(t, y, z)):
                    return (x, y, z)
    return None


def test_z5_all_true(z5):
    assert naive_associative(z5) is None
    report = verify_all(z5)
    assert report.associative and report.strong_identity and report.involutive and report.commutative
    assert report.is_involutive_2vg


def test_trivial_all_true(trivial):
    report = verify_all(trivial)
    assert all(v.holds for v in (report.associative, report.strong_identity, report.involutive, report.commutative))


def test_s3_attempt():
    t = group_coset_attempt(dihedral_group(3))
    report = verify_all(t)
    assert report.strong_identity and report.involutive
    assert not report.associative and not report.commutative
    assert not report.is_involutive_2vg
    # [r] = 1, [s] = 2: rs = s r^2 gives [r]*[s] = [sr2, sr2], [s]*[r] = [sr, sr2]
    assert report.commutative.witness == (1, 2)
    assert t[1, 2] == Pair(4, 4) and t[2, 1] == Pair(3, 4)
    w = report.associative.witness
    assert isinstance(w, AssociativityWitness)
    assert w.lhs == mset_product(t, mul(t, w.x, w.y), [w.z])
    assert w.rhs == mset_product(t, [w.x], mul(t, w.y, w.z))
    assert w.lhs != w.rhs and w.lhs.size == 4
    assert (w.x, w.y, w.z) == naive_associative(t)


def test_strong_identity_violation():
    t = Table(2, ((Pair(0, 0), Pair(1, 1)), (Pair(0, 1), Pair(0, 0))))
    v = check_strong_identity(t)
    assert not v and v.witness == (1,)
    assert check_strong_identity(Table.trivial())


def test_involutivity(z3):
    assert z3[1, 1] == Pair(0, 1) and check_involutivity(z3)
    bad = Table(2, ((Pair(0, 0), Pair(1, 1)), (Pair(1, 1), Pair(1, 1))))
    v = check_involutivity(bad)
    assert not v and v.witness == (1, 1)
    good = Table(2, ((Pair(0, 0), Pair(1, 1)), (Pair(1, 1), Pair(0, 0))))
    assert check_involutivity(good)


def test_commutativity_trivial(trivial):
    assert check_commutativity(trivial)


@settings(max_examples=300)
@given(st.integers(0, 2 ** 32), st.integers(1, 4), st.booleans())
def test_associativity_matches_naive_reference(seed, n, identity):
    t = random_table(random.Random(seed), n, identity)
    v = check_associativity(t)
    first = naive_associative(t)
    assert v.holds == (first is None)
    if first is not None:
        assert (v.witness.x, v.witness.y, v.witness.z) == first


@settings(max_examples=300)
@given(st.integers(0, 2 ** 32), st.integers(1, 5))
def test_witnesses_reverify(seed, n):
    t = random_table(random.Random(seed), n, identity=seed % 2 == 0)
    r = verify_all(t)
    if not r.strong_identity:
        (x,) = r.strong_identity.witness
        assert Pair(x, x) not in (t[x, 0], t[0, x]) or t[x, 0] != t[0, x]
    if not r.involutive:
        x, y = r.involutive.witness
        assert (0 in t[x, y]) != (x == y)
    if not r.commutative:
        x, y = r.commutative.witness
        assert t[x, y] != t[y, x]
    if not r.associative:
        w = r.associative.witness
        assert mset_product(t, t[w.x, w.y], [w.z]) != mset_product(t, [w.x], t[w.y, w.z])
    assert r.is_involutive_2vg == is_involutive_2vg(t)


@pytest.mark.parametrize("m", range(1, 20))
def test_theorem_on_cyclic_quotients(m):
    report = verify_all(zmod_oracle(m))
    assert report.is_involutive_2vg and report.commutative


def test_report_as_dict_is_json_friendly(z5):
    import json

    d = verify_all(group_coset_attempt(dihedral_group(3))).as_dict()
    assert json.loads(json.dumps(d)) == d
    assert d["associative"] is False and d["associative_witness"]["x"] == 1
    assert verify_all(z5).as_dict()["is_involutive_2vg"] is True
    assert isinstance(Multiset([1]), Multiset)

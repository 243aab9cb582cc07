"""Tower construction, field axioms, distinguished maps, serialization."""

import itertools
import json
import random

import pytest

from sidoncodes import FieldTower, LevelMismatchError, SizeGuardError, build_tower
from sidoncodes.tower import ENUMERATION_GUARD


def test_build_validation():
    with pytest.raises(ValueError):
        build_tower(4, 1, 2, 3, 0)  # p not prime
    with pytest.raises(ValueError):
        build_tower(2, 1, 1, 3, 0)  # k < 2
    with pytest.raises(ValueError):
        build_tower(2, 1, 2, 2, 0)  # r < 3
    with pytest.raises(ValueError):
        build_tower(2, 0, 2, 3, 0)  # m < 1


def test_m1_trivial_first_level(t226):
    assert t226.q == 2
    assert t226.irr_q == (0, 1)
    assert t226.level("q") is t226.level("base")


def test_determinism():
    a = FieldTower(2, 1, 2, 3, 0)
    b = FieldTower(2, 1, 2, 3, 0)
    assert a.to_json() == b.to_json()
    assert build_tower(2, 1, 2, 3, 0) is build_tower(2, 1, 2, 3, 0)


def test_f4_multiplication_table_from_quotient(t226):
    # independent oracle: multiply polynomials a0+a1*w mod w^2+w+1 over F_2
    def mul_oracle(a, b):
        a0, a1 = a & 1, a >> 1
        b0, b1 = b & 1, b >> 1
        c0 = a0 & b0
        c1 = (a0 & b1) ^ (a1 & b0)
        c2 = a1 & b1
        # w^2 = w + 1
        return (c0 ^ c2) | ((c1 ^ c2) << 1)

    qk = t226.level("qk")
    for a in range(4):
        for b in range(4):
            assert qk.mul(a, b) == mul_oracle(a, b)
    assert qk.mul(2, 2) == 3  # w * w = w + 1


def test_field_axioms_exhaustive_f4(t226):
    lv = t226.level("qk")
    els = range(4)
    for a, b, c in itertools.product(els, repeat=3):
        assert lv.add(a, b) == lv.add(b, a)
        assert lv.mul(a, b) == lv.mul(b, a)
        assert lv.add(lv.add(a, b), c) == lv.add(a, lv.add(b, c))
        assert lv.mul(lv.mul(a, b), c) == lv.mul(a, lv.mul(b, c))
        assert lv.mul(a, lv.add(b, c)) == lv.add(lv.mul(a, b), lv.mul(a, c))


@pytest.mark.parametrize("fixture", ["t326", "t426"])
def test_field_axioms_random_triples(fixture, request):
    tower = request.getfixturevalue(fixture)
    rng = random.Random(1)
    for level in ("q", "qk", "qn"):
        lv = tower.level(level)
        for _ in range(200):
            a, b, c = (rng.randrange(lv.card) for _ in range(3))
            assert lv.add(a, b) == lv.add(b, a)
            assert lv.mul(lv.mul(a, b), c) == lv.mul(a, lv.mul(b, c))
            assert lv.mul(a, lv.add(b, c)) == lv.add(lv.mul(a, b), lv.mul(a, c))


def test_element_operators(t226):
    one = t226.one("qk")
    for v in range(1, 4):
        x = t226.element("qk", v)
        assert (x * one).value == x.value
        assert (x * x.inverse()).value == 1
        assert (x / x).value == 1
        assert (x - x).value == 0
    with pytest.raises(ZeroDivisionError):
        t226.zero("qk").inverse()
    with pytest.raises(LevelMismatchError):
        t226.one("qk") * t226.one("qn")


def test_frobenius(t226, t426):
    # q=2: frobenius(w) = w^2 = w + 1 by direct squaring
    w = t226.element("qk", 2)
    assert t226.frobenius(w).value == t226.level("qk").mul(2, 2) == 3
    for tower in (t226, t426):
        qn = tower.level("qn")
        rng = random.Random(2)
        for _ in range(100):
            a, b = rng.randrange(qn.card), rng.randrange(qn.card)
            x, y = tower.element("qn", a), tower.element("qn", b)
            assert (x + y).frobenius() == x.frobenius() + y.frobenius()
            assert (x * y).frobenius() == x.frobenius() * y.frobenius()
        # elements of F_q are fixed
        for c in range(tower.q):
            assert tower.frobenius(tower.element("qn", c)).value == c
        # k-fold frobenius fixes F_q^k
        for v in range(min(tower.qk_card, 64)):
            x = tower.element("qk", v)
            for _ in range(tower.k):
                x = x.frobenius()
            assert x.value == v
    with pytest.raises(LevelMismatchError):
        t226.frobenius(t226.element("base", 1))


def test_xi_is_primitive(t226, t326, t426):
    for tower in (t226, t326, t426):
        order = tower.qk_card - 1
        assert tower.xi.multiplicative_order() == order
        lv = tower.level("qk")
        for d in range(1, order):
            if order % d == 0 and d < order:
                assert lv.pow(tower.xi.value, d) != 1


def test_embed(t226, t426):
    for tower in (t226, t426):
        assert tower.embed(tower.zero("qk")).value == 0
        assert tower.embed(tower.one("qk")).value == 1
        emb_xi = tower.embed(tower.xi)
        assert emb_xi.multiplicative_order() == tower.qk_card - 1
        rng = random.Random(3)
        for _ in range(100):
            a = tower.element("qk", rng.randrange(tower.qk_card))
            b = tower.element("qk", rng.randrange(tower.qk_card))
            assert tower.embed(a + b) == tower.embed(a) + tower.embed(b)
            assert tower.embed(a * b) == tower.embed(a) * tower.embed(b)


def test_coordinates_roundtrip_exhaustive(t226):
    for v in range(64):
        x = t226.element("qn", v)
        coords = t226.to_coordinates(x)
        assert len(coords) == 6
        assert t226.from_coordinates(coords) == x
    assert t226.to_coordinates(t226.zero("qn")) == (0,) * 6
    gamma_coords = t226.to_coordinates(t226.gamma)
    assert gamma_coords == (0, 0, 1, 0, 0, 0)


def test_coordinates_are_fq_linear(t326):
    rng = random.Random(4)
    lv = t326.level("qn")
    for _ in range(100):
        a, b = rng.randrange(lv.card), rng.randrange(lv.card)
        ca = t326.coords_of_value(a)
        cb = t326.coords_of_value(b)
        s = lv.add(a, b)
        fq = t326.level("q")
        assert t326.coords_of_value(s) == tuple(fq.add(x, y) for x, y in zip(ca, cb))


def test_coset_representatives(t226, t426):
    # q=2: the quotient group is trivial
    reps2 = t226.coset_representatives()
    assert len(reps2) == 1 and reps2[0].value == 1
    # q=4, k=2: three representatives, pairwise in distinct cosets
    reps = t426.coset_representatives()
    assert len(reps) == t426.q - 1 == 3
    lv = t426.level("qk")
    subgroup_order = (t426.qk_card - 1) // (t426.q - 1)
    subgroup = {lv.pow(t426.xi.value, (t426.q - 1) * i) for i in range(subgroup_order)}
    assert len(subgroup) == subgroup_order
    for i, a in enumerate(reps):
        for b in list(reps)[i + 1 :]:
            ratio = lv.mul(a.value, lv.inv(b.value))
            assert ratio not in subgroup
    # every unit is some rep times a subgroup element
    covered = {lv.mul(rep.value, s) for rep in reps for s in subgroup}
    assert covered == set(range(1, t426.qk_card))


def test_projective_units(t226):
    units = t226.projective_units()
    assert len(units) == 63  # q=2: every unit is its own class
    assert units[0] == 1
    assert len(set(units)) == 63


def test_projective_units_q3(t326):
    units = t326.projective_units()
    assert len(units) == (729 - 1) // 2
    lv = t326.level("qn")
    classes = {frozenset((u, lv.mul(2, u))) for u in units}
    assert len(classes) == 364


def test_size_guard():
    big = build_tower(2, 2, 5, 3, 0)  # q=4, k=5, n=15: beyond the guard
    assert big.qn_card == 4**15 > ENUMERATION_GUARD
    assert not big.enumerable
    with pytest.raises(SizeGuardError):
        big.ensure_enumerable()
    big.ensure_enumerable(guard_override=True)
    with pytest.raises(SizeGuardError):
        list(big.elements("qn"))


def test_big_tower_builds_with_correct_xi():
    big = build_tower(2, 2, 5, 3, 0)
    assert (big.q, big.k, big.n) == (4, 5, 15)
    assert big.xi.multiplicative_order() == 4**5 - 1


def test_headline_tower_builds_beyond_table_limit():
    # q=16, k=14, n=70: far beyond both the tables and the guard, so the
    # levels run on digit arithmetic; construction stays deterministic
    huge = build_tower(2, 4, 14, 5, 0)
    assert (huge.q, huge.qk_card, huge.n) == (16, 2**56, 70)
    assert not huge.enumerable
    assert huge.xi.multiplicative_order() == 2**56 - 1
    lv = huge.level("qn")
    x = 3 + 5 * huge.qk_card  # arbitrary element with two gamma digits
    assert lv.mul(x, lv.inv(x)) == 1
    assert huge.to_json() == build_tower(2, 4, 14, 5, 0).to_json()


def test_tower_polynomials_monic_irreducible(t226, t326, t426):
    # brute-force oracle: no monic factor of degree 1..d/2 divides the poly
    from sidoncodes import polys

    def brute_irreducible(field, f):
        d = len(f) - 1
        for deg in range(1, d // 2 + 1):
            for idx in range(field.card**deg):
                if polys.pmod(field, f, polys.monic_candidate(field, deg, idx)) == ():
                    return False
        return True

    for tower in (t226, t326, t426):
        if tower.m > 1:
            assert tower.irr_q[-1] == 1
            assert brute_irreducible(tower.level("base"), tower.irr_q)
        assert tower.irr_k[-1] == 1
        assert brute_irreducible(tower.level("q"), tower.irr_k)
        assert tower.irr_n[-1] == 1
        assert brute_irreducible(tower.level("qk"), tower.irr_n)


def test_coordinate_basis_spans_everything(t226, t326, t426):
    # the basis elements xi^i gamma^j have encodings q^t; their span is
    # all of F_q^n, which forces the gamma powers independent over F_q^k
    from sidoncodes import span

    for tower in (t226, t326, t426):
        basis = [tower.q**t for t in range(tower.n)]
        assert span(tower, basis).dim == tower.n


def test_json_roundtrip(t226, t426):
    for tower in (t226, t426):
        data = json.loads(json.dumps(tower.to_json()))
        rebuilt = FieldTower.from_json(data)
        assert rebuilt.params == tower.params
        assert rebuilt.to_json() == tower.to_json()
    assert set(t226.to_json()) == {"p", "m", "k", "r", "poly_seed", "irr_q", "irr_k", "irr_n", "xi"}

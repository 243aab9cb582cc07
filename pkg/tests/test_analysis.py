"""Enumeration, distance scans, closed-form sizes, verification reports."""

import json

import pytest

from sidoncodes import (
    OrbitCode,
    SizeGuardError,
    build_tower,
    claimed_profile,
    construct_code,
    cyclic_shift,
    enumerate_code,
    formula_size,
    min_distance,
    naive_min_distance,
    table_rows,
    verify_code,
)


def test_enumerate_sizes(t226):
    sub = construct_code(t226, "subfield_orbit")
    assert enumerate_code(sub).size == 21
    lem33 = construct_code(t226, "lem33")
    assert enumerate_code(lem33).size == 63
    thm34 = construct_code(t226, "thm34")
    enum = enumerate_code(thm34)
    assert enum.size == 273
    assert enum.overlap_pairs == 0
    # size additivity when orbits are disjoint
    assert sum(len(o) for o in enum.orbits) == 273


def test_enumerate_empty_and_overlap(t226):
    empty = OrbitCode(tower=t226, generators=())
    assert enumerate_code(empty).size == 0
    gen = construct_code(t226, "lem33").generators[0]
    dup = OrbitCode(tower=t226, generators=(gen, cyclic_shift(t226.gamma, gen)))
    enum = enumerate_code(dup)
    assert enum.size == 63
    assert enum.overlap_pairs == 63


def test_min_distance_examples(t226, t2210):
    sub = construct_code(t226, "subfield_orbit")
    assert min_distance(sub) == 4  # 2k for the subfield orbit
    thm34 = construct_code(t226, "thm34")
    assert min_distance(thm34) == 2
    thm311 = construct_code(t2210, "thm311")
    assert min_distance(thm311) == 4


def test_min_distance_requires_two_codewords(t226):
    empty = OrbitCode(tower=t226, generators=())
    with pytest.raises(ValueError):
        min_distance(empty)


def test_orbit_reduction_matches_naive(t226):
    for family in ("subfield_orbit", "lem33", "lem31", "thm34"):
        code = construct_code(t226, family)
        enum = enumerate_code(code)
        assert enum.size <= 500
        assert naive_min_distance(enum.codewords) == min_distance(code, enum)


def test_distance_bounds_and_parity(t226, t2210):
    for tower, family in [(t226, "thm34"), (t2210, "thm311"), (t226, "subfield_orbit")]:
        code = construct_code(tower, family)
        dist = min_distance(code)
        max_dim = max(g.dim for g in code.generators)
        assert 2 <= dist <= 2 * max_dim
        assert dist % 2 == 0  # all codewords share a dimension


def test_fast_mode_agrees_on_desk_codes(t226):
    code = construct_code(t226, "thm34")
    assert min_distance(code, mode="fast", floor=2) == min_distance(code)


def test_threaded_scan_matches(t226, monkeypatch):
    code = construct_code(t226, "thm34")
    expected = min_distance(code)
    monkeypatch.setenv("SIDON_CODES_THREADS", "4")
    assert min_distance(code) == expected


def test_formula_values_exact_big_integers():
    assert formula_size("fw", 4, 5, 15) == 2**10 * (2**30 - 1) // 3
    assert formula_size("nxg2k", 4, 5, 15) == 2 * (2**10 - 1) * (2**30 - 1) // 3 + (
        2**30 - 1
    ) // (2**10 - 1)
    assert formula_size("thm34", 4, 5, 15) == 2**10 * (2**30 - 1) + (2**30 - 1) // (2**10 - 1)
    assert formula_size("thm37", 16, 14, 70) == 2**112 * (2**280 - 1) // 15
    assert formula_size("nxg4k", 16, 14, 70, l=14) == 7 * 2**57 * (2**280 - 1) // 15
    assert formula_size("thm311", 16, 14, 70) == 2**56 * (2**280 - 1) // 15
    assert formula_size("zt", 16, 14, 70) == 2**280 - 1


def test_formula_values_match_measurements(t226, t2210, t326):
    cases = [
        (t226, "lem31", 189),
        (t226, "lem33", 63),
        (t226, "thm34", 273),
        (t326, "thm34", 6643),
        (t2210, "lem36", 9207),
        (t2210, "thm37", 16368),
        (t2210, "thm311", 4092),
    ]
    for tower, family, value in cases:
        assert formula_size(family, tower.q, tower.k, tower.n) == value


def test_formula_constraints():
    with pytest.raises(ValueError):
        formula_size("thm37", 2, 2, 6)  # n/k = 3 <= 4
    with pytest.raises(ValueError):
        formula_size("thm34", 2, 2, 4)  # n/k = 2 <= 2
    with pytest.raises(ValueError):
        formula_size("thm34", 2, 2, 7)  # k does not divide n
    with pytest.raises(ValueError):
        formula_size("nxg4k", 16, 14, 70, l=15)  # l > k
    with pytest.raises(ValueError):
        formula_size("bogus", 2, 2, 6)


def test_table_rows():
    rows = table_rows(4, 5, 15)
    assert [r["source"] for r in rows] == ["fw", "nxg2k", "thm34"]
    sizes = {r["source"]: r["size"] for r in rows}
    assert sizes["thm34"] > sizes["nxg2k"] > sizes["fw"]
    deep = table_rows(16, 14, 70)
    assert {r["source"] for r in deep} == {"fw", "nxg2k", "thm34", "nxg4k", "thm37", "zt", "thm311"}
    with pytest.raises(ValueError):
        table_rows(2, 2, 7)


def test_claimed_profile():
    assert claimed_profile("thm34", 2, 2, 6) == (273, 2)
    assert claimed_profile("thm311", 2, 2, 10) == (4092, 4)
    assert claimed_profile("subfield_orbit", 2, 2, 6) == (21, 4)


def test_verify_multi_exponent_families(t2210):
    # r=5 makes e=2 for the half-ratio families, exercising l in {1, 2}
    for family, size in (("lem31", 6138), ("lem33", 2046), ("thm34", 8525)):
        report = verify_code(construct_code(t2210, family))
        assert report.passed is True
        assert report.measured_size == size
        assert report.measured_min_distance == 2


def test_verify_q4_families(t426):
    report = verify_code(construct_code(t426, "lem33"))
    assert report.passed is True and report.measured_size == 4095
    report = verify_code(construct_code(t426, "thm34"))
    assert report.passed is True
    assert report.measured_size == 65793
    assert report.measured_min_distance == 2


def test_verify_pass_and_reports(t226):
    code = construct_code(t226, "thm34")
    report = verify_code(code)
    assert report.passed is True and report.verified
    assert report.measured_size == 273 and report.measured_min_distance == 2
    assert len(report.per_generator) == 5
    orbit_sizes = sorted(g.orbit_size for g in report.per_generator)
    assert orbit_sizes == [21, 63, 63, 63, 63]
    sidon_flags = [g.is_sidon for g in report.per_generator]
    assert sidon_flags.count(False) == 1  # only the subfield generator
    data = report.to_json()
    assert data["pass"] is True and data["unverified"] is False
    assert "PASS" in report.table()


def test_verify_negative_control(t226):
    code = construct_code(t226, "thm34")
    corrupted = OrbitCode(tower=t226, generators=code.generators[:-1], params=code.params)
    report = verify_code(corrupted)
    assert report.passed is False
    assert report.measured_size < report.claimed_size


def test_verify_custom_needs_claims(t226):
    code = construct_code(t226, "lem33")
    custom = OrbitCode(tower=t226, generators=code.generators)
    with pytest.raises(ValueError):
        verify_code(custom)
    report = verify_code(custom, claimed_size=63, claimed_distance=2)
    assert report.passed is True


def test_verify_degrades_beyond_guard():
    big = build_tower(2, 2, 5, 3, 0)
    code = construct_code(big, "subfield_orbit")
    report = verify_code(code)
    assert not report.verified
    assert report.passed is None
    assert report.measured_size is None
    assert report.claimed_size == (4**15 - 1) // (4**5 - 1)
    data = report.to_json()
    assert data["unverified"] is True
    with pytest.raises(SizeGuardError):
        enumerate_code(code)


def test_artifact_roundtrip(tmp_path, t2210):
    code = construct_code(t2210, "thm311")
    path = tmp_path / "code.json"
    code.save(path)
    loaded = OrbitCode.load(path)
    assert loaded.tower.params == code.tower.params
    assert loaded.generators == code.generators
    assert loaded.family == "thm311"
    assert json.dumps(loaded.to_json(), sort_keys=True) == json.dumps(
        code.to_json(), sort_keys=True
    )


def test_artifact_rejects_unknown_format(tmp_path, t226):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"format": "other", "tower": {}, "generators": []}))
    with pytest.raises(ValueError):
        OrbitCode.load(path)

import numpy as np
import pytest

import egqldpc


def test_field_arithmetic():
    f = egqldpc.Field(2, 2)
    assert f.q == 4
    assert f.modulus == [1, 1, 1]
    assert f.mul(2, 2) == 3
    assert f.add(2, 3) == 1
    assert all(f.mul(a, f.inv(a)) == 1 for a in range(1, 4))


def test_geometry():
    assert egqldpc.geometry_stats(2, 2) == {
        "points": 4,
        "lines": 6,
        "classes": 3,
        "lines_per_point": 3,
        "points_per_line": 2,
        "parallels_per_line": 1,
    }
    lines = egqldpc.lines(2, 2)
    assert [l["points"] for l in lines] == [[0, 1], [2, 3], [0, 2], [1, 3], [0, 3], [1, 2]]
    assert egqldpc.point_coords(3, 2, 5) == [1, 0, 1]


def test_steane_code():
    code = egqldpc.build_code("h1", 2, 2)
    assert code.n == 7
    assert code.h_orth.shape == (3, 7)
    assert code.h_orth.dtype == np.uint8
    assert egqldpc.rank(code.h_orth) == 3
    assert not (code.h_orth.astype(int) @ code.h_orth.T.astype(int) % 2).any()
    stab = code.stabilizer()
    assert stab.shape == (6, 14)
    d = egqldpc.exact_distance(code.h_orth)
    assert d["kind"] == "exact" and d["value"] == 3
    assert egqldpc.verify_distance_floor(code.h_orth, 2) == {
        "kind": "lower-bound-verified",
        "value": 3,
        "work": 29,
        "witness": None,
    }


def test_claim_check():
    r = egqldpc.claim_check("h2", 2, 2)
    assert (r["n"], r["k_computed"], r["distance"]["value"]) == (15, 7, 2)
    assert set(r["verdicts"].values()) == {"CONFIRMED"}
    assert "schema=report-v1" in r["report"]

    bad = egqldpc.claim_check("h1", 2, 3)
    assert bad["verdicts"]["self_orthogonality"] == "REFUTED"
    assert len(bad["violating_pairs"]) == 4

    for i in range(3):
        p = egqldpc.claim_check("parallel", 2, 2, class_index=i)
        assert (p["n"], p["k_computed"], p["distance"]["value"]) == (8, 4, 2)


def test_paper_params():
    assert egqldpc.paper_params("h1", 2, 2) == {"n": 7, "k": 1, "d": 3, "d_kind": "lower"}


def test_alist_round_trip():
    rng = np.random.default_rng(3)
    for _ in range(20):
        a = (rng.random((rng.integers(1, 20), rng.integers(1, 20))) < 0.4).astype(np.uint8)
        assert np.array_equal(egqldpc.parse_alist(egqldpc.write_alist(a)), a)
    assert egqldpc.write_alist(np.eye(2, dtype=np.uint8)) == "2 2\n1 1\n1 1\n1 1\n1\n2\n1\n2\n"


def test_errors_carry_names():
    with pytest.raises(egqldpc.Error) as info:
        egqldpc.build_code("h1", 2, 6)
    assert info.value.name == "NotPrimePower"
    with pytest.raises(ValueError):
        egqldpc.parse_alist("0 3\n")
    with pytest.raises(egqldpc.Error) as info:
        egqldpc.exact_distance(np.zeros((1, 30), dtype=np.uint8))
    assert info.value.name == "CapExceeded"

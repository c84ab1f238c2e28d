from fractions import Fraction

import pytest

import quotdt


def test_macmahon():
    assert quotdt.macmahon(6) == [1, 1, 3, 6, 13, 24, 48]


def test_rank_one_p3():
    assert quotdt.dt_series("p3", "O", 3, seed=42) == [1, 20, 150, 400]
    assert quotdt.dt_closed_formula(1, -20, 3) == [1, 20, 150, 400]


def test_rank_two_twisted():
    assert quotdt.dt_series("p3", "O,O1", 2) == [1, -40, 700]


def test_chern_exponents():
    for name, value in [("p3", -20), ("p2xp1", -18), ("p1cubed", -16)]:
        assert quotdt.c3_t_omega(name) == value
        assert quotdt.c3_via_localization(name, seed=3) == value


def test_counts():
    assert quotdt.count_fixed_points("p3", 1, 1) == 4
    assert len(quotdt.plane_partitions(4)) == 13
    assert [len(quotdt.partition_pairs(3, r)) for r in (1, 2, 3)] == [7, 9, 10]


def test_vertex():
    ch = quotdt.vertex_character([[(0, 0, 0)]])
    assert ch[(-1, 0, 0, 0)] == 1
    assert ch[(-1, -1, 0, 0)] == -1
    assert sum(ch.values()) == 0
    value = quotdt.euler_inverse([[(0, 0, 0)]], [1, 2, 3], [0])
    assert isinstance(value, Fraction)
    assert abs(value) == 10


def test_errors():
    with pytest.raises(quotdt.QuotDTError):
        quotdt.dt_series("p3", "O(1,0)", 1)
    with pytest.raises(ValueError):
        quotdt.run("command = nothing\n")


def test_run_json():
    code, report = quotdt.run("command = toric\nspace = p3\nnmax = 1\n")
    assert code == 0
    assert report["verdicts"]["closed_formula"] == "MATCH"
    assert report["elapsed_ms"] is None

import math
from fractions import Fraction

import pytest

import ditlogic as dl


def test_partition_roundtrip_and_lattice():
    pi = dl.Partition.parse("0,1|2,3")
    sigma = dl.Partition.parse("0,2|1,3")
    assert str(dl.join(pi, sigma)) == "0|1|2|3"
    assert str(dl.meet(pi, sigma)) == "0,1,2,3"
    assert str(dl.implication(dl.Partition.parse("0,1,2|3"), pi)) == "0|1|2,3"
    assert dl.refines(dl.Partition.indiscrete(4), pi)
    assert len(dl.dit_set(pi)) == 8
    assert dl.Partition([[2, 3], [0, 1]], 4) == pi
    assert [dl.bell_number(n) for n in range(6)] == [1, 1, 2, 5, 15, 52]
    assert len(dl.enumerate_partitions(4)) == 15


def test_exact_measures():
    assert dl.logical_entropy_exact(dl.Partition.parse("0,1|2")) == Fraction(4, 9)
    w = [Fraction(1, 2), Fraction(1, 4), Fraction(1, 4)]
    assert dl.logical_entropy_exact(dl.Partition.parse("0,1|2"), w) == Fraction(3, 8)
    assert dl.logical_entropy_of_exact([Fraction(1, 2), Fraction(1, 3), Fraction(1, 6)]) == Fraction(11, 18)
    pi = dl.Partition.parse("0,1|2,3")
    assert dl.logical_mutual_exact(pi, dl.Partition.parse("0,2|1,3")) == Fraction(1, 4)


def test_shannon_and_divergences():
    assert dl.shannon_entropy_of([0.5, 0.25, 0.25]) == 1.5
    assert dl.shannon_entropy(dl.Partition.discrete(8)) == pytest.approx(3.0)
    assert dl.kl_divergence([0.5, 0.5], [0.25, 0.75]) == pytest.approx(0.20751874963942185, abs=1e-12)
    assert math.isinf(dl.kl_divergence([0.5, 0.5], [1.0, 0.0]))
    assert dl.logical_divergence([0.5, 0.5], [0.25, 0.75]) == pytest.approx(1 / 16)
    j = dl.joint_measures([[0.25, 0.25], [0.5, 0.0]])
    assert j["I_xy"] == pytest.approx(0.31127812445913294, abs=1e-12)
    assert j["h_xy"] == pytest.approx(j["h_x_given_y"] + j["h_y_given_x"] + j["m_xy"])


def test_dit_bit_and_stirling():
    assert dl.dit_to_bit(0.5) == 1.0
    assert dl.bit_to_dit(1.0) == 0.5
    r = dl.dit_bit_transform("divergence", p=[0.5, 0.5], q=[0.25, 0.75])
    assert r["residual"] < 1e-12
    s = dl.stirling_entropy([6, 6])
    assert s["exact"] == pytest.approx(math.log(924) / 12, abs=1e-12)
    assert s["error3"] < s["error2"]


def test_sampling_and_verification():
    a = dl.pair_distinction_rate([0.5, 1 / 3, 1 / 6], 100000, seed=3)
    b = dl.pair_distinction_rate([0.5, 1 / 3, 1 / 6], 100000, seed=3)
    assert a == b
    assert abs(a["estimate"] - 11 / 18) < 0.01
    assert dl.typical_message_stats([1 / 3] * 3, 100, 5)["estimate"] == math.log2(3)
    report = dl.run_verification(4)
    assert report["passed"]
    assert report["pairs_checked_at_max_n"] == 225


def test_errors_carry_kind():
    with pytest.raises(dl.Error) as info:
        dl.Partition.parse("0,x|1")
    assert info.value.kind == "parse"
    assert info.value.position == 2
    with pytest.raises(ValueError):
        dl.join(dl.Partition.discrete(2), dl.Partition.discrete(3))

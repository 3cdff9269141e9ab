from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from youngcalc.diagrams import (DiagramError, Partition, Profile, anisotropic_scale, dilate,
                                integer_dilation, partitions_of, profile_of_partition,
                                triangle_profile)
from youngcalc.functionals import s_k_profile

from conftest import P
from strategies import partitions, strict_profiles


def test_parse_and_print():
    assert P("4,3,1").parts == (4, 3, 1)
    assert str(P("4,3,1")) == "4,3,1"
    assert P("").parts == () == P("0").parts
    assert P(" 2, 2 ").parts == (2, 2)


@pytest.mark.parametrize("text", ["1,2", "3,-1", "a", "2,,1", "3,0,1"])
def test_parse_rejects(text):
    with pytest.raises(DiagramError):
        P(text)


def test_partition_invariant_enforced():
    with pytest.raises(DiagramError):
        Partition((1, 3))


@given(partitions())
def test_conjugate_involution(lam):
    assert lam.conjugate().conjugate() == lam
    assert lam.conjugate().size == lam.size


def test_boxes_and_contents():
    lam = P("4,3,1")
    assert sorted(lam.contents()) == sorted([0, 1, 2, 3, -1, 0, 1, -2])
    assert (4, 1) in lam and (1, 3) in lam
    assert (2, 3) not in lam and (5, 1) not in lam


def test_partitions_of_counts():
    assert [len(list(partitions_of(n))) for n in range(9)] == [1, 1, 2, 3, 5, 7, 11, 15, 22]


def test_profile_of_431():
    om = profile_of_partition(P("4,3,1"))
    assert om.support == (-3, 4)
    assert om(0) == 4


def test_profile_of_empty_and_single_box():
    empty = profile_of_partition(Partition(()))
    assert empty.is_empty and empty(5) == 5 and empty(-2) == 2
    box = profile_of_partition(P("1"))
    assert box == Profile([(-1, 1), (0, 2), (1, 1)])
    assert box(Fraction(1, 2)) == Fraction(3, 2)


@given(partitions())
def test_staircase_area_and_slopes(lam):
    om = profile_of_partition(lam)
    assert om.area() == lam.size
    for (z0, w0), (z1, w1) in om.segments():
        assert abs((w1 - w0) / (z1 - z0)) == 1


def test_dilation_examples():
    assert dilate(profile_of_partition(P("1")), 2) == profile_of_partition(P("2,2"))
    assert dilate(profile_of_partition(P("2,1")), 3) == profile_of_partition(P("6,6,6,3,3,3"))
    om = triangle_profile(2, 3)
    assert dilate(om, 1) == om
    with pytest.raises(DiagramError):
        dilate(om, 0)


@given(partitions(max_size=6), st.integers(1, 3))
def test_integer_dilation_matches_profile_dilation(lam, t):
    assert dilate(profile_of_partition(lam), t) == profile_of_partition(integer_dilation(lam, t))


@given(strict_profiles(), st.fractions(Fraction(1, 5), 5))
def test_dilation_scales_area(om, t):
    assert dilate(om, t).area() == t * t * om.area()


def test_anisotropic_scale():
    assert anisotropic_scale(P("2,1"), 2) == P("4,2")
    assert anisotropic_scale(P("3,2"), 1) == P("3,2")
    assert anisotropic_scale(P("3"), 3) == P("9")


@pytest.mark.parametrize("pts", [
    [(-1, 1), (1, 3)],                  # ends off |z|
    [(-1, 1), (0, 3), (1, 1)],          # slope 2
    [(1, 1), (0, 2)],                   # decreasing z
    [(-2, 2), (0, -1), (2, 2)],         # below |z|
])
def test_profile_rejects(pts):
    with pytest.raises(DiagramError):
        Profile(pts)


def test_profile_normalization():
    a = Profile([(-2, 2), (0, 2), (2, 2)])
    b = Profile([(-2, 2), (2, 2)])
    assert a == b == triangle_profile(2, 2)
    # points on the arms are absorbed
    assert Profile([(-3, 3), (-2, 2), (2, 2), (3, 3)]) == b


def test_strictness():
    assert triangle_profile(2, 2).is_strict
    assert triangle_profile(3, 1).is_strict
    assert not profile_of_partition(P("2,1")).is_strict


@given(strict_profiles())
def test_profile_json_roundtrip(om):
    assert Profile.from_json(om.to_json()) == om
    for z, w in om.to_json()["breakpoints"]:
        assert "/" in z and "/" in w


def test_profile_json_format():
    assert triangle_profile(2, 2).to_json() == {"breakpoints": [["-2/1", "2/1"], ["2/1", "2/1"]]}
    with pytest.raises(DiagramError):
        Profile.from_json({"points": []})


def test_area_matches_s2():
    om = triangle_profile(3, 2)
    assert om.area() == 3 == s_k_profile(om, 2)

import math
from decimal import Decimal
from fractions import Fraction

import pytest

from mvvol.combinatorics import partitions_of_size
from mvvol.exact_arith import PiValue
from mvvol.volumes import (
    DEFAULT_MAX_WEIGHT,
    InfeasibleSizeError,
    InvalidStratumError,
    Stratum,
    VolumeResult,
    c_value,
    clear_caches,
    prediction,
    principal_volume,
    volume,
)


def mono(num, den, exp):
    return PiValue([(exp, Fraction(num, den))])


# -- Stratum -------------------------------------------------------------------


def test_stratum_canonicalization_and_properties():
    s = Stratum([1, 0, 2, 1])
    assert s.degrees == (2, 1, 1, 0)
    assert s.stripped == (2, 1, 1)
    assert s.genus == 3
    assert s.zero_count == 3
    assert s.dim_complex == 8
    assert s.key == "2,1,1"
    assert repr(s) == "H(2,1,1,0)"


def test_stratum_torus_cases():
    assert Stratum([]).genus == 1
    assert Stratum([]).key == ""
    assert Stratum([0, 0]).stripped == ()
    assert Stratum([0, 0]).dim_complex == 1


def test_stratum_validation():
    with pytest.raises(InvalidStratumError):
        Stratum([3])  # odd sum
    with pytest.raises(InvalidStratumError):
        Stratum([2, 1])
    with pytest.raises(InvalidStratumError):
        Stratum([-2])
    with pytest.raises(InvalidStratumError):
        Stratum([1.0, 1.0])  # non-integers


def test_stratum_equality_hash():
    assert Stratum([1, 2, 1]) == Stratum([2, 1, 1])
    assert hash(Stratum([1, 2, 1])) == hash(Stratum([2, 1, 1]))
    assert Stratum([2]) != Stratum([1, 1])
    assert Stratum([2]) != Stratum([0, 2])  # marked point kept in identity


# -- c_value -------------------------------------------------------------------


def test_c_value_frozen():
    assert c_value((1,)) == mono(1, 6, 2)
    assert c_value((3,)) == mono(1, 240, 4)
    assert c_value((2, 2)) == mono(1, 270, 4)


def test_c_value_errors():
    with pytest.raises(ValueError):
        c_value(())
    with pytest.raises(ValueError):
        c_value((2, 0))


# -- volume ---------------------------------------------------------------------


def test_volume_frozen_values():
    assert volume(Stratum([2])).value == mono(1, 120, 4)
    assert volume(Stratum([1, 1])).value == mono(1, 135, 4)
    assert volume(Stratum([2, 2])).value == mono(17, 50400, 6)
    assert volume(Stratum([3, 1])).value == mono(16, 42525, 6)
    assert volume(Stratum([4])).value == mono(61, 108864, 6)


def test_volume_accepts_bare_degree_lists():
    assert volume([2]).value == mono(1, 120, 4)
    assert volume((1, 1)).value == mono(1, 135, 4)


def test_volume_torus_convention():
    assert volume(Stratum([])).value == mono(1, 3, 2)
    assert volume(Stratum([0, 0, 0])).value == mono(1, 3, 2)


def test_marked_points_do_not_change_volume():
    assert volume(Stratum([0, 1, 1])).value == volume(Stratum([1, 1])).value
    assert volume(Stratum([0, 0, 2])).value == volume(Stratum([2])).value


def test_volume_order_invariance():
    assert volume(Stratum([1, 3])).value == volume(Stratum([3, 1])).value


def test_volume_result_fields():
    clear_caches()
    res = volume(Stratum([1, 1]))
    assert isinstance(res, VolumeResult)
    assert res.stratum == Stratum([1, 1])
    assert res.prediction == 1
    assert res.relative_error == Decimal("-0.278451177525908")
    assert res.pi_exponent == 4
    assert res.terms_evaluated > 0
    assert res.elapsed >= 0.0


def test_relative_error_frozen():
    assert volume(Stratum([2])).relative_error == Decimal("-0.391193181037485")
    assert volume(Stratum([2, 2])).relative_error == Decimal("-0.270374272733028")
    assert volume(Stratum([4])).relative_error == Decimal("-0.326628398643105")


def test_grading_small_strata():
    for total in (2, 4, 6):
        for m in partitions_of_size(total):
            val = volume(Stratum(m)).value
            q, e = val.monomial()
            assert q > 0
            assert e == total + 2


def test_prediction_values():
    assert prediction(Stratum([2])) == Fraction(4, 3)
    assert prediction(Stratum([1, 1])) == 1
    assert prediction(Stratum([0, 1, 1])) == 1  # marked points excluded
    for g in range(2, 7):
        assert prediction(Stratum([2 * g - 2])) == Fraction(4, 2 * g - 1)


def test_feasibility_guard():
    clear_caches()  # the guard applies to fresh computations, not cache hits
    with pytest.raises(InfeasibleSizeError) as info:
        volume(Stratum([DEFAULT_MAX_WEIGHT]))
    assert info.value.weight == DEFAULT_MAX_WEIGHT + 1
    assert info.value.limit == DEFAULT_MAX_WEIGHT
    with pytest.raises(InfeasibleSizeError):
        volume(Stratum([4]), max_weight=4)
    # explicit raise of the bound unlocks the same stratum
    assert volume(Stratum([4]), max_weight=5).value == mono(61, 108864, 6)


def test_infeasible_is_not_invalid():
    assert not issubclass(InfeasibleSizeError, InvalidStratumError)


# -- principal closed form --------------------------------------------------------


def test_principal_frozen_and_cross_pipeline():
    assert principal_volume(2) == mono(1, 135, 4)
    assert principal_volume(3) == mono(1, 4860, 6)
    assert principal_volume(4) == mono(377, 67359600, 8)
    assert principal_volume(2) == volume(Stratum([1, 1])).value
    assert principal_volume(3) == volume(Stratum([1, 1, 1, 1])).value


def test_principal_equality_genus_four():
    assert principal_volume(4) == volume(Stratum([1] * 6)).value


def test_principal_domain():
    with pytest.raises(ValueError):
        principal_volume(1)
    with pytest.raises(ValueError):
        principal_volume(0)


# -- correlator normalization tripwire --------------------------------------------


def test_normalized_correlator_near_two():
    # the full correlator divided by |a|! stays within a loose factorial
    # band of 2, for every stratum of genus up to 4
    for total in (2, 4, 6):
        for m in partitions_of_size(total):
            a = [d + 1 for d in m]
            size = sum(a)
            corr = c_value(a) * (math.factorial(size) * math.prod(a))
            gap = abs(corr.to_float() - 2 * math.factorial(size))
            assert gap <= 2.0**60 * math.factorial(size - 1), m

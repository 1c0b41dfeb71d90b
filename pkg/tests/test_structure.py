import itertools
import math

import pytest

from qtwheel.errors import InvalidArgument
from qtwheel.exactmath import Q, T, Matrix, det_cofactor, smith_normal_form
from qtwheel.structure import (
    GenSmithInput,
    deformed_banded_form,
    deformed_gensmith_input,
    deformed_laplacian,
    deformed_two_by_two,
    deformed_two_by_two_from_reduction,
    deformed_wheel_invariants,
    det_two_by_two,
    fhat,
    fhat_subsets,
    gensmith_reduce,
    matrix_power_fhat,
    padded_snf,
    q_sum,
    wheel_banded_form,
    wheel_gensmith_input,
    wheel_group_invariants,
    wheel_two_by_two,
    wheel_two_by_two_from_reduction,
)
from qtwheel.wheel import WheelParams, reduced_laplacian, wheel_poly


def test_fhat_examples():
    assert fhat(-2) == 0
    assert fhat(0) == 1
    assert fhat(2) == T + 1 + Q
    assert fhat(4) == T**2 + (2 + 2 * Q) * T + (1 + Q + Q**2)
    assert fhat(4) == (1 + Q + T) ** 2 - Q


def test_fhat_rejects_bad_index():
    with pytest.raises(InvalidArgument):
        fhat(3)
    with pytest.raises(InvalidArgument):
        fhat(-4)


@pytest.mark.parametrize("index", range(-2, 18, 2))
def test_fhat_subset_definition(index):
    assert fhat(index) == fhat_subsets(index)


def test_companion_powers():
    assert matrix_power_fhat(1) == Matrix([[1 + Q + T, 1], [-Q, 0]])
    assert matrix_power_fhat(2) == Matrix([[fhat(4), fhat(2)], [-Q * fhat(2), -Q * fhat(0)]])
    for m in range(3, 9):
        matrix_power_fhat(m)


@pytest.mark.parametrize("k", range(3, 9))
def test_wheel_banded_form_is_literal(k):
    assert wheel_banded_form(k) == wheel_gensmith_input(k).full_matrix()
    assert wheel_two_by_two_from_reduction(k) == wheel_two_by_two(k)


@pytest.mark.parametrize("k", range(2, 9))
def test_deformed_banded_form_is_literal(k):
    assert deformed_banded_form(k) == deformed_gensmith_input(k).full_matrix()
    assert deformed_two_by_two_from_reduction(k) == deformed_two_by_two(k)


def test_gensmith_needs_three():
    with pytest.raises(InvalidArgument):
        GenSmithInput(2, 1 + Q + T, ((1, 0), (0, 1)), ((1, 0), (0, 1)))


def test_gensmith_k3_against_direct_determinant():
    inp = GenSmithInput(3, 1 + Q + T, ((Q, 2), (T, 1)), ((1, Q), (-T, 3)))
    red = gensmith_reduce(inp)
    assert det_cofactor(red) == det_cofactor(inp.full_matrix())
    for q, t in itertools.product((1, 2, 3), (1, 2)):
        assert padded_snf(red, q, t, 3) == smith_normal_form(inp.full_matrix().evaluate(q, t))


@pytest.mark.parametrize("k", range(3, 9))
def test_two_by_two_determinant(k):
    d = det_two_by_two(k)
    assert d == wheel_poly(k) or d == -wheel_poly(k)


@pytest.mark.parametrize("k,q,t", list(itertools.product(range(3, 9), (1, 2, 3), (1, 2, 3))))
def test_two_by_two_smith_form(k, q, t):
    full = wheel_group_invariants(WheelParams(k, q, t))
    assert padded_snf(wheel_two_by_two(k), q, t, k) == full
    assert len(full.nontrivial()) <= 2


def test_invariant_examples():
    assert wheel_group_invariants(WheelParams(3, 1, 1)).invariant_factors == (1, 4, 4)
    assert wheel_group_invariants(WheelParams(4, 1, 1)).invariant_factors == (1, 1, 3, 15)
    assert wheel_group_invariants(WheelParams(2, 3, 2)).invariant_factors == (2, 10)
    assert padded_snf(wheel_two_by_two(3), 1, 1, 3).invariant_factors == (1, 4, 4)
    m = reduced_laplacian(WheelParams(4, 3, 2))
    assert padded_snf(wheel_two_by_two(4), 3, 2, 4) == smith_normal_form(m)


def test_deformed_examples():
    res, d1 = deformed_wheel_invariants(WheelParams(2, 2, 7))
    assert d1 == 7 and res.invariant_factors[-2] == 7
    res, d1 = deformed_wheel_invariants(WheelParams(3, 1, 2))
    assert d1 == 2 and res.invariant_factors[-2] == 2
    for k in range(1, 9):
        res, d1 = deformed_wheel_invariants(WheelParams(k, 1, 1))
        assert d1 == 1 and len(res.nontrivial()) == 1


def test_deformed_laplacian_drops_one_entry():
    full = reduced_laplacian(WheelParams(4, 2, 3)).tolist()
    deformed = deformed_laplacian(3, 2, 3).tolist()
    assert deformed[0][0] == full[0][0] - 3
    deformed[0][0] = full[0][0]
    assert deformed == full


@pytest.mark.parametrize("k,q,t", list(itertools.product(range(1, 9), range(1, 6), range(1, 6))))
def test_deformed_first_factor(k, q, t):
    res = smith_normal_form(deformed_laplacian(k, q, t))
    assert res.invariant_factors[-2] == math.gcd(t, q_sum(k, q))

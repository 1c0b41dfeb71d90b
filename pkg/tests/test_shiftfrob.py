import itertools

import pytest

from qtwheel.chipfire import Configuration, enumerate_criticals, group_add, is_critical
from qtwheel.errors import InternalError, InvalidArgument
from qtwheel.exactmath import UniPoly, cyclotomic
from qtwheel.shiftfrob import (
    apply_rho_poly,
    embed,
    embedded_image,
    kernel_of_rho_poly,
    one_minus_x_power,
    quadratic_witness,
    rotate,
    verify_quadratic,
    verify_wcyc_kernel,
)
from qtwheel.wheel import WheelParams, wheel_poly

W332 = WheelParams(3, 3, 2)


def test_rotate():
    c = Configuration((1, 0, 4), W332)
    assert rotate(c).chips == (0, 4, 1)
    assert rotate(c, 3) == c
    assert rotate(c, -1).chips == (4, 1, 0)


def test_rotation_preserves_criticality_and_sums():
    g = enumerate_criticals(W332)
    elems = list(g)
    assert all(is_critical(rotate(c)) for c in elems)
    for a, b in itertools.islice(itertools.product(elems, elems), 0, None, 97):
        assert rotate(group_add(a, b)) == group_add(rotate(a), rotate(b))


def test_embed():
    a = Configuration((2, 4, 2), W332)
    b = Configuration((0, 4, 1), W332)
    assert embed(a, 6).chips == (2, 4, 2, 2, 4, 2)
    assert group_add(embed(a, 6), embed(b, 6)).chips == (1, 0, 4, 1, 0, 4)
    with pytest.raises(InvalidArgument):
        embed(a, 4)


def test_embed_injective():
    small = enumerate_criticals(WheelParams(2, 3, 2))
    big = enumerate_criticals(WheelParams(4, 3, 2))
    image = {embed(c, 4) for c in small}
    assert len(image) == small.order
    assert all(c in big for c in image)


def test_kernel_examples():
    ker = kernel_of_rho_poly(one_minus_x_power(3), WheelParams(6, 3, 2))
    assert len(ker) == 134 and ker == embedded_image(3, 6, 3, 2)
    assert len(kernel_of_rho_poly([1, -1], WheelParams(4, 2, 3))) == 3
    assert len(kernel_of_rho_poly(UniPoly([1, 1]), WheelParams(2, 1, 1))) == 5


def test_wcyc_kernels():
    assert verify_wcyc_kernel(2, 1, 1) == (5, 5)
    assert verify_wcyc_kernel(3, 1, 1) == (16, 16)
    for t in (1, 2, 3):
        assert verify_wcyc_kernel(1, 2, t) == (t, t)


def test_rejects_symbolic_coefficients():
    from qtwheel.exactmath import Q

    with pytest.raises(InvalidArgument):
        kernel_of_rho_poly([Q], W332)


@pytest.mark.parametrize("k1,k2", [(1, 2), (1, 3), (2, 4), (3, 6), (2, 6)])
@pytest.mark.parametrize("q,t", list(itertools.product((1, 2), (1, 2))))
def test_fixed_points_of_rotation_power(k1, k2, q, t):
    ker = kernel_of_rho_poly(one_minus_x_power(k1), WheelParams(k2, q, t))
    assert ker == embedded_image(k1, k2, q, t)


@pytest.mark.parametrize("k", [1, 2, 3, 4, 6])
@pytest.mark.parametrize("q,t", list(itertools.product((1, 2), (1, 2))))
def test_cyclotomic_kernel_product(k, q, t):
    from qtwheel.exactmath import divisors

    prod = 1
    for d in divisors(k):
        size, expected = verify_wcyc_kernel(d, q, t)
        prod *= size
    assert prod == wheel_poly(k).evaluate(q, t)


@pytest.mark.parametrize("k,q,t", list(itertools.product(range(1, 6), range(1, 4), range(1, 4))))
def test_quadratic(k, q, t):
    assert verify_quadratic(WheelParams(k, q, t))


def test_quadratic_single_element():
    c = Configuration((2, 4, 2), W332)
    g = enumerate_criticals(W332)
    assert apply_rho_poly([3, -6, 1], c) == g.identity
    assert quadratic_witness(W332) is None


def test_other_polynomials_do_not_annihilate():
    # gcd(2, 3) = 1, so rotate^2 c = c forces rotate c = c: only the t constant words
    assert len(kernel_of_rho_poly([1, 0, -1], W332)) == 2
    assert cyclotomic(3).coeffs == (1, 1, 1)


def test_kernel_mismatch_raises(monkeypatch):
    import qtwheel.shiftfrob as sf
    from qtwheel.exactmath import T

    monkeypatch.setattr(sf, "wcyc", lambda d: T + 1)
    with pytest.raises(InternalError):
        sf.verify_wcyc_kernel(2, 1, 1)

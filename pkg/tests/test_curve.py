import itertools

import pytest

from qtwheel.curve import (
    INFINITY,
    CurvePoint,
    EllipticCurve,
    characteristic_witness,
    coker_mk_compare,
    ec_add,
    ec_frobenius,
    ec_group_invariants,
    ec_mul,
    ec_neg,
    ec_points,
    embedding,
    field_make,
    frobenius_fixed_count,
    is_irreducible,
    kernel_cyc_frobenius,
    monic_irreducibles,
)
from qtwheel.ecnum import ecyc_value, nk_value
from qtwheel.errors import InvalidArgument, ResourceLimit

E511 = EllipticCurve.over(5, 1, 1)
OTHER_CURVES = [(5, 2, 1), (7, 1, 3), (7, 0, 2)]


class TestField:
    def test_prime_field(self):
        F = field_make(5, 1)
        assert F.size == 5
        assert F.mul(2, 3) == 1 and F.inv(2) == 3 and F.add(4, 3) == 2

    def test_extension_inverses(self):
        F = field_make(5, 2)
        assert F.size == 25
        assert all(F.mul(a, F.inv(a)) == 1 for a in range(1, 25))

    @pytest.mark.parametrize("p,n", [(4, 1), (2, 1), (3, 1), (17, 1), (5, 5), (5, 0)])
    def test_rejected(self, p, n):
        with pytest.raises(InvalidArgument):
            field_make(p, n)

    def test_irreducible_counts(self):
        # monic irreducibles of degree 2 over F_5: (25 - 5) / 2
        assert len(monic_irreducibles(2, 5)) == 10
        assert len(monic_irreducibles(3, 5)) == 40
        assert not is_irreducible([1, 0, 1], 5)
        assert is_irreducible([2, 0, 1], 5)

    def test_distributive_and_frobenius_additive(self):
        F = field_make(7, 2)
        for a, b in itertools.product(range(0, 49, 5), range(0, 49, 3)):
            for c in (1, 10, 48):
                assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
            assert F.pow(F.add(a, b), 7) == F.add(F.pow(a, 7), F.pow(b, 7))

    def test_embedding_is_homomorphism(self):
        small, big = field_make(5, 2), field_make(5, 4)
        e = embedding(small, big)
        for a, b in itertools.product(range(25), repeat=2):
            assert e(small.mul(a, b)) == big.mul(e(a), e(b))
            assert e(small.add(a, b)) == big.add(e(a), e(b))


class TestGroupLaw:
    def test_identity_and_negation(self):
        pts, _ = ec_points(E511)
        P = pts[1]
        assert ec_add(E511, P, INFINITY) == P
        assert ec_add(E511, P, ec_neg(E511, P)) == INFINITY

    def test_off_curve(self):
        with pytest.raises(InvalidArgument):
            E511.point(0, 0)
        with pytest.raises(InvalidArgument):
            ec_add(E511, CurvePoint(0, 0), INFINITY)

    def test_singular_curve(self):
        with pytest.raises(InvalidArgument):
            EllipticCurve.over(5, 0, 0)

    @pytest.mark.parametrize("p,a,b", [(5, 1, 1), (7, 1, 3), (7, 0, 2)])
    def test_associativity_exhaustive(self, p, a, b):
        E = EllipticCurve.over(p, a, b)
        pts, _ = ec_points(E)
        for P, Q, R in itertools.product(pts, repeat=3):
            assert ec_add(E, ec_add(E, P, Q), R) == ec_add(E, P, ec_add(E, Q, R))

    def test_double_and_add(self):
        pts, n = ec_points(E511)
        for P in pts:
            acc = INFINITY
            for m in range(12):
                assert ec_mul(E511, m, P) == acc
                acc = ec_add(E511, acc, P)
            assert ec_mul(E511, n, P) == INFINITY
            assert ec_mul(E511, -3, P) == ec_neg(E511, ec_mul(E511, 3, P))


class TestCounts:
    def test_reference_curve(self):
        assert [ec_points(E511.extend(k))[1] for k in (1, 2, 3)] == [9, 27, 108]
        assert ec_group_invariants(E511) == (1, 9)

    def test_frobenius_trivial_on_base(self):
        pts, _ = ec_points(E511)
        assert all(ec_frobenius(E511, P) == P for P in pts)

    def test_frobenius_is_homomorphism(self):
        E2 = E511.extend(2)
        pts, _ = ec_points(E2)
        images = {ec_frobenius(E2, P) for P in pts}
        assert len(images) == len(pts)
        for P, Q in itertools.islice(itertools.product(pts, repeat=2), 0, None, 7):
            assert ec_frobenius(E2, ec_add(E2, P, Q)) == ec_add(E2, ec_frobenius(E2, P), ec_frobenius(E2, Q))

    def test_cyclotomic_kernels(self):
        assert [kernel_cyc_frobenius(E511, d) for d in (1, 2, 3)] == [9, 3, 12]

    @pytest.mark.parametrize("p,a,b", OTHER_CURVES)
    def test_counts_follow_recurrence(self, p, a, b):
        E = EllipticCurve.over(p, a, b)
        n1 = ec_points(E)[1]
        assert (1 + p - n1) ** 2 <= 4 * p
        for k in (1, 2, 3):
            assert ec_points(E.extend(k))[1] == nk_value(p, n1, k)
            assert kernel_cyc_frobenius(E, k) == ecyc_value(p, n1, k)

    @pytest.mark.parametrize("p,a,b", [(5, 1, 1)] + OTHER_CURVES)
    def test_fixed_points_and_characteristic_equation(self, p, a, b):
        E = EllipticCurve.over(p, a, b)
        n1 = ec_points(E)[1]
        assert frobenius_fixed_count(E, 1, 2) == n1
        assert frobenius_fixed_count(E, 1, 3) == n1
        for k in (1, 2, 3):
            assert characteristic_witness(E, k) is None

    def test_group_structure_products(self):
        for p, a, b in OTHER_CURVES:
            E = EllipticCurve.over(p, a, b)
            n1, n2 = ec_group_invariants(E)
            assert n1 * n2 == ec_points(E)[1] and n2 % n1 == 0
        assert ec_group_invariants(EllipticCurve.over(7, 0, 2)) == (3, 3)

    def test_budget(self):
        E = EllipticCurve.over(7, 1, 3)
        with pytest.raises(ResourceLimit):
            ec_points(E.extend(4))

    def test_curve_over_extension(self):
        E = EllipticCurve.over(5, [1, 1], [2], n=2)
        n1 = ec_points(E)[1]
        assert ec_points(E.extend(2))[1] == nk_value(25, n1, 2)


class TestCokernel:
    @pytest.mark.parametrize("k,n", [(1, 9), (2, 27), (3, 108)])
    def test_reference(self, k, n):
        rep = coker_mk_compare(E511, k)
        assert rep["n"] == n and rep["det"] == n and rep["order_match"]
        assert rep["matches"]

    def test_non_cyclic_base_reports_orders(self):
        rep = coker_mk_compare(EllipticCurve.over(7, 0, 2), 1)
        assert rep["order_match"] and not rep["base_cyclic"]
        assert rep["invariants"] == [9] and rep["measured"] == [3, 3]
        assert not rep["matches"]

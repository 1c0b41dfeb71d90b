import pytest
from hypothesis import given
from hypothesis import strategies as st

from qtwheel.errors import DivisionError, InvalidArgument, SingularSeries
from qtwheel.exactmath import (
    ONE,
    Q,
    T,
    ZERO,
    BivariatePolynomial,
    Matrix,
    RationalSeries,
    SNFResult,
    UniPoly,
    cyclotomic,
    det_bareiss,
    det_cofactor,
    det_poly,
    divisors,
    exact_quotient,
    exp_from_counts,
    log_series_counts,
    series_expand,
    smith_normal_form,
)

polys = st.dictionaries(
    st.tuples(st.integers(0, 4), st.integers(0, 4)), st.integers(-20, 20), max_size=6
).map(BivariatePolynomial)
int_matrices = st.integers(1, 5).flatmap(
    lambda n: st.lists(
        st.lists(st.integers(-9, 9), min_size=n, max_size=n), min_size=n, max_size=n
    )
)


class TestBivariatePolynomial:
    def test_zero_coefficients_dropped(self):
        p = BivariatePolynomial({(1, 0): 0, (0, 1): 3})
        assert p.terms == {(0, 1): 3}

    def test_negative_exponent_rejected(self):
        with pytest.raises(InvalidArgument):
            BivariatePolynomial({(-1, 0): 1})

    def test_int_interop(self):
        assert 1 + Q - 1 == Q
        assert 2 * (1 + Q) == 2 + 2 * Q
        assert (Q + T) ** 2 == Q**2 + 2 * Q * T + T**2
        assert ONE == 1 and ZERO == 0

    def test_evaluate_and_substitute(self):
        p = T**2 + (2 + 2 * Q) * T
        assert p.evaluate(5, -9) == 81 - 108
        assert p.substitute(Q, -T) == T**2 - (2 + 2 * Q) * T
        assert p.negate_t() == p.substitute(Q, -T)

    def test_exact_division(self):
        assert ((1 + Q + T) * (T - Q)).exact_div(T - Q) == 1 + Q + T
        with pytest.raises(DivisionError):
            (T + 1).exact_div(T - 1)
        assert exact_quotient(12, 4) == 3
        with pytest.raises(DivisionError):
            exact_quotient(7, 2)

    def test_json_display_order(self):
        obj = (T + 2 * (1 + Q)).to_json_obj()
        assert obj == {
            "terms": [{"q": 0, "t": 1, "c": "1"}, {"q": 0, "t": 0, "c": "2"}, {"q": 1, "t": 0, "c": "2"}]
        }

    def test_json_duplicate_rejected(self):
        bad = {"terms": [{"q": 0, "t": 0, "c": "1"}, {"q": 0, "t": 0, "c": "2"}]}
        with pytest.raises(InvalidArgument):
            BivariatePolynomial.from_json_obj(bad)

    def test_format(self):
        assert (T**2 + (2 + 2 * Q) * T + 1 + Q + Q**2).format() == "t^2 + (2 + 2*q)*t + 1 + q + q^2"
        assert ZERO.format() == "0"

    @given(polys)
    def test_json_round_trip(self, p):
        assert BivariatePolynomial.from_json(p.to_json()) == p
        assert BivariatePolynomial.from_json_obj(p.to_json_obj("n1"), "n1") == p

    @given(polys, polys, polys)
    def test_ring_axioms(self, a, b, c):
        assert a + b == b + a
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a - a == 0

    @given(polys, polys, st.integers(-4, 4), st.integers(-4, 4))
    def test_evaluation_homomorphism(self, a, b, x, y):
        assert (a * b).evaluate(x, y) == a.evaluate(x, y) * b.evaluate(x, y)
        assert (a - b).evaluate(x, y) == a.evaluate(x, y) - b.evaluate(x, y)

    @given(polys, polys)
    def test_division_recovers_factor(self, a, b):
        if b.is_zero():
            return
        assert (a * b).exact_div(b) == a
        quot, rem = (a * b + 1).divmod_lex(b)
        assert quot * b + rem == a * b + 1


class TestUniPoly:
    def test_cyclotomics(self):
        assert cyclotomic(1) == UniPoly([-1, 1])
        assert cyclotomic(6) == UniPoly([1, -1, 1])
        assert cyclotomic(12) == UniPoly([1, 0, -1, 0, 1])
        with pytest.raises(InvalidArgument):
            cyclotomic(0)

    @pytest.mark.parametrize("n", [1, 2, 6, 12, 30, 36])
    def test_cyclotomic_product(self, n):
        prod = UniPoly([1])
        for d in divisors(n):
            prod = prod * cyclotomic(d)
        assert prod == UniPoly([-1] + [0] * (n - 1) + [1])

    def test_divisors(self):
        assert divisors(12) == [1, 2, 3, 4, 6, 12]

    def test_polynomial_coefficients(self):
        p = UniPoly([1, -(1 + Q + T), Q])
        assert (p * UniPoly([1, -1])).exact_div(UniPoly([1, -1])) == p
        assert p.evaluate(0) == 1


class TestDeterminants:
    def test_small(self):
        assert det_bareiss(Matrix([[6, -4], [-4, 6]])) == 20
        assert det_bareiss(Matrix([[0, 1], [1, 0]])) == -1
        assert det_bareiss(Matrix([[1, 2], [2, 4]])) == 0

    def test_symbolic(self):
        m = Matrix([[1 + Q + T, -(1 + Q)], [-(1 + Q), 1 + Q + T]])
        assert det_poly(m) == T**2 + (2 + 2 * Q) * T

    @given(int_matrices)
    def test_bareiss_matches_cofactor(self, rows):
        m = Matrix(rows)
        assert det_bareiss(m) == det_cofactor(m)


class TestSmithNormalForm:
    def test_wheel_two(self):
        assert smith_normal_form([[6, -4], [-4, 6]]).invariant_factors == (2, 10)

    def test_rejects_polynomials(self):
        with pytest.raises(TypeError):
            smith_normal_form(Matrix([[Q]]))

    def test_json(self):
        res = SNFResult((1, 4, 4))
        assert res.to_json_obj() == {"invariant_factors": ["1", "4", "4"]}
        assert SNFResult.from_json_obj(res.to_json_obj()) == res

    @given(
        st.integers(1, 4).flatmap(
            lambda r: st.integers(1, 4).flatmap(
                lambda c: st.lists(
                    st.lists(st.integers(-15, 15), min_size=c, max_size=c), min_size=r, max_size=r
                )
            )
        )
    )
    def test_chain_and_transforms(self, rows):
        m = Matrix(rows)
        res = smith_normal_form(m, transforms=True)
        f = res.invariant_factors
        for a, b in zip(f, f[1:]):
            assert (b % a == 0) if a else b == 0
        d = res.left * m * res.right
        r, c = m.shape
        assert all(d[i, j] == (f[i] if i == j else 0) for i in range(r) for j in range(c))
        assert abs(det_bareiss(res.left)) == 1 and abs(det_bareiss(res.right)) == 1
        if r == c:
            assert res.order() == abs(det_bareiss(m))


class TestSeries:
    def test_expand(self):
        z = RationalSeries.from_coeffs([1, -2, 1], [1, -3, 1])
        assert series_expand(z, 4) == [1, 1, 3, 8, 21]

    def test_log_counts_give_wheel_values(self):
        z = RationalSeries.from_coeffs([1, -2, 1], [1, -3, 1])
        # W_k(1,1) = 1, 5, 16, 45
        assert log_series_counts(z, 4) == [1, 5, 16, 45]

    def test_exp_inverts_log(self):
        z = RationalSeries(UniPoly([1, -Q]) * UniPoly([1, -1]), UniPoly([1, -(1 + Q + T), Q]))
        a = log_series_counts(z, 6)
        assert exp_from_counts(a, 6) == series_expand(z, 6)

    def test_singular(self):
        with pytest.raises(SingularSeries):
            RationalSeries.from_coeffs([1], [])
        with pytest.raises(SingularSeries):
            series_expand(RationalSeries.from_coeffs([1], [0, 1]), 3)
        with pytest.raises(InvalidArgument):
            log_series_counts(RationalSeries.from_coeffs([2], [1]), 3)

    def test_json_round_trip(self):
        z = RationalSeries(UniPoly([1, -Q]), UniPoly([1, -(1 + Q + T), Q]))
        assert RationalSeries.from_json_obj(z.to_json_obj()).same_function(z)

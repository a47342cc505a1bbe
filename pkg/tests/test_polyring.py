import pytest
from hypothesis import given

from diagonals.polyring import (
    GREVLEX,
    LEX,
    EliminationOrder,
    ExactDivisionError,
    GrevLex,
    LinearSubstitution,
    Polynomial,
    QQ,
    RingContextError,
    WeightedGrevLex,
    apply_linear_change,
    count_monomials,
    default_names,
    exact_divide_linear,
    from_string,
    monomials_of_bidegree,
    monomials_of_degree,
    order_from_json,
    order_to_json,
    partial_derivative,
    to_string,
    variables,
)

from support import monomials, polynomials, random_points, rationals


x1, x2, y1, y2 = variables(4)


class TestArithmetic:
    def test_ring_identities(self):
        f = x1 * y2 - QQ(1, 2) * x2
        assert f + Polynomial.zero(4) == f
        assert f * Polynomial.constant(4, 1) == f
        assert f - f == Polynomial.zero(4)
        assert (f * f).total_degree() == 4

    def test_scalar_ops(self):
        f = 3 * x1 + x2 * 2
        assert f.coefficient((1, 0, 0, 0)) == 3
        assert (f - 3 * x1) == 2 * x2
        assert -(-f) == f

    def test_zero_degree_convention(self):
        assert Polynomial.zero(4).total_degree() == -1
        assert Polynomial.constant(4, 5).total_degree() == 0

    def test_ring_mismatch_raises(self):
        with pytest.raises(RingContextError):
            x1 + Polynomial.variable(2, 0)

    def test_pow(self):
        f = x1 + y1
        assert f**0 == Polynomial.constant(4, 1)
        assert f**3 == f * f * f

    @given(polynomials(3), polynomials(3), polynomials(3))
    def test_distributive(self, f, g, h):
        assert f * (g + h) == f * g + f * h

    @given(polynomials(3), polynomials(3), random_points(3))
    def test_evaluation_homomorphism(self, f, g, pt):
        assert (f * g).evaluate(pt) == f.evaluate(pt) * g.evaluate(pt)
        assert (f + g).evaluate(pt) == f.evaluate(pt) + g.evaluate(pt)


class TestGrading:
    def test_homogeneous_components(self):
        f = x1 * x2 + y1 + 7
        comps = f.homogeneous_components()
        assert sorted(comps) == [0, 1, 2]
        assert sum(comps.values(), Polynomial.zero(4)) == f
        assert all(p.is_homogeneous() for p in comps.values())

    def test_bidegree(self):
        assert (x1 * y1).bidegree() == (1, 1)
        assert (x1 * x2).bidegree() == (2, 0)
        assert (x1 + y1).bidegree() is None
        with pytest.raises(RingContextError):
            Polynomial.variable(3, 0).bidegree()


class TestOrders:
    def test_grevlex_classic(self):
        # x*z vs y^2 distinguishes grevlex from grlex in 3 vars
        order = GREVLEX
        assert order.key((1, 0, 1)) < order.key((0, 2, 0))
        assert order.key((2, 0, 0)) > order.key((1, 1, 0))

    def test_lex(self):
        assert LEX.key((1, 0, 5)) > LEX.key((0, 9, 9))

    def test_elimination_blocks(self):
        order = EliminationOrder(frozenset({2}))
        # any positive power of the eliminated variable dominates
        assert order.key((0, 0, 1)) > order.key((9, 9, 0))

    def test_weighted(self):
        order = WeightedGrevLex((1, 3))
        assert order.key((0, 1)) > order.key((2, 0))

    @given(monomials(4), monomials(4), monomials(4))
    def test_keys_additive_and_multiplicative(self, u, v, w):
        for order in (GREVLEX, LEX, EliminationOrder(frozenset({1, 3})),
                      WeightedGrevLex((2, 1, 1, 3))):
            ku = order.key(u)
            kv = order.key(v)
            kuw = order.key(tuple(a + b for a, b in zip(u, w)))
            kvw = order.key(tuple(a + b for a, b in zip(v, w)))
            # multiplying by a common monomial preserves comparisons
            assert (ku < kv) == (kuw < kvw)
            kw = order.key(w)
            assert tuple(a + b for a, b in zip(ku, kw)) == kuw

    def test_leading_terms(self):
        f = x1 * y2 + y1**2
        assert f.leading_monomial(GREVLEX) == (0, 0, 2, 0)
        assert f.leading_monomial(LEX) == (1, 0, 0, 1)
        assert f.monic(GREVLEX).leading_coefficient(GREVLEX) == 1

    def test_order_json_roundtrip(self):
        probes = {
            GrevLex: (3, 1, 0, 0, 2),
            type(LEX): (3, 1, 0, 0, 2),
            EliminationOrder: (3, 1, 0, 0, 2),
            WeightedGrevLex: (3, 1),
        }
        for order in (GREVLEX, LEX, EliminationOrder(frozenset({4})),
                      WeightedGrevLex((1, 2))):
            back = order_from_json(order_to_json(order))
            probe = probes[type(order)]
            assert back.key(probe) == order.key(probe)


class TestSubstitution:
    def test_monomial_fast_path(self):
        swap = [[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]]
        sub = LinearSubstitution(swap)
        assert sub.is_monomial
        assert sub(x1 - x2) == x2 - x1
        assert sub(x1 * y1**2) == x2 * y2**2

    def test_dense_path(self):
        m = [[1, 1], [0, 1]]
        u, v = variables(2)
        f = u**2
        assert LinearSubstitution(m)(f) == (u + v) ** 2

    @given(polynomials(2, max_deg=3), random_points(2))
    def test_substitution_evaluates_consistently(self, f, pt):
        m = ((QQ(1), QQ(2)), (QQ(3), QQ(4)))
        g = apply_linear_change(f, m)
        moved = (pt[0] + 2 * pt[1], 3 * pt[0] + 4 * pt[1])
        assert g.evaluate(pt) == f.evaluate(moved)

    @given(polynomials(2, max_deg=3))
    def test_composition_order(self, f):
        a = ((QQ(1), QQ(1)), (QQ(0), QQ(1)))
        b = ((QQ(2), QQ(0)), (QQ(1), QQ(1)))
        from diagonals.linalg import mat_mul

        lhs = apply_linear_change(apply_linear_change(f, a), b)
        rhs = apply_linear_change(f, mat_mul(a, b))
        assert lhs == rhs

    def test_singular_rejected(self):
        with pytest.raises(ValueError):
            apply_linear_change(x1, [[1, 1, 0, 0], [1, 1, 0, 0],
                                     [0, 0, 1, 0], [0, 0, 0, 1]])


class TestCalculus:
    def test_partial_derivative(self):
        f = x1**3 * y2 + x2
        d = partial_derivative(f, (1, 0, 0, 0))
        assert d == 3 * x1**2 * y2

    def test_directional(self):
        f = x1 * x2
        d = partial_derivative(f, (1, QQ(1, 2), 0, 0))
        assert d == x2 + QQ(1, 2) * x1

    @given(polynomials(3), polynomials(3))
    def test_leibniz(self, f, g):
        direction = (1, 2, QQ(-1, 3))
        lhs = partial_derivative(f * g, direction)
        rhs = partial_derivative(f, direction) * g + f * partial_derivative(
            g, direction
        )
        assert lhs == rhs


class TestExactDivision:
    def test_divides(self):
        ell = x1 - y1
        f = ell * (x1**2 + 3 * y2)
        assert exact_divide_linear(f, ell) == x1**2 + 3 * y2

    def test_rejects_nondivisible(self):
        with pytest.raises(ExactDivisionError):
            exact_divide_linear(x1**2 + 1, x1 - y1)

    def test_rejects_nonlinear(self):
        with pytest.raises(ExactDivisionError):
            exact_divide_linear(x1**2, x1 * y1)

    @given(polynomials(3, max_deg=3).filter(bool))
    def test_roundtrip(self, f):
        u, v, w = variables(3)
        ell = u + 2 * v - w
        assert exact_divide_linear(f * ell, ell) == f


class TestEnumeration:
    def test_counts(self):
        for n in range(1, 5):
            for d in range(0, 6):
                monos = list(monomials_of_degree(n, d))
                assert len(monos) == count_monomials(n, d)
                assert len(set(monos)) == len(monos)
                assert all(sum(m) == d for m in monos)

    def test_bidegree_enumeration(self):
        monos = list(monomials_of_bidegree(2, 2, 1))
        assert len(monos) == 3 * 2
        assert all(sum(m[:2]) == 2 and sum(m[2:]) == 1 for m in monos)


class TestText:
    def test_default_names(self):
        assert default_names(4) == ["x1", "x2", "y1", "y2"]
        assert default_names(5) == ["x1", "x2", "y1", "y2", "t"]

    def test_render(self):
        f = x1**2 * y2 - QQ(1, 2) * x2
        assert to_string(f) == "x1^2*y2 - 1/2*x2"
        assert to_string(Polynomial.zero(4)) == "0"

    @given(polynomials(4))
    def test_roundtrip(self, f):
        assert from_string(to_string(f), 4) == f

    def test_parse_errors(self):
        with pytest.raises(ValueError):
            from_string("x9", 4)
        with pytest.raises(ValueError):
            from_string("", 4)

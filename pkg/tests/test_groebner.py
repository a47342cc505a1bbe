import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from diagonals.groebner import (
    Budget,
    BudgetExceeded,
    Ideal,
    buchberger,
    graded_basis,
    graded_report,
    ideal_equal,
    ideal_intersect,
    ideal_power,
    ideal_product,
    ideal_sum,
    intersect_many,
    minimal_generator_counts,
    nf_monomial_table,
)
from diagonals.polyring import (
    GREVLEX,
    LEX,
    Polynomial,
    QQ,
    count_monomials,
    monomials_of_degree,
    variables,
)

from support import (
    homogeneous_polynomials,
    seeded_random_poly,
    span_membership,
)


def P(text, nvars, names=None):
    from diagonals.polyring import from_string

    return from_string(text, nvars, names)


class TestBuchbergerBasics:
    def test_principal(self):
        x, y = variables(2)
        gb = buchberger([2 * x * y + 2 * y])
        assert gb == [x * y + y]

    def test_already_a_basis(self):
        x, y = variables(2)
        gb = buchberger([x, y])
        assert gb == [y, x] or gb == [x, y]
        assert len(gb) == 2

    def test_textbook_lex(self):
        # classic: x^2+y^2-1, x*y-1 under lex has a univariate element in y
        x, y = variables(2)
        gb = buchberger([x**2 + y**2 - 1, x * y - 1], LEX)
        univariate = [g for g in gb if all(m[0] == 0 for m in g.terms)]
        assert len(univariate) == 1
        assert univariate[0] == y**4 - y**2 + 1

    def test_interreduced_and_monic(self):
        x, y, z = variables(3)
        gens = [x**2 + y, x**2 + z, 3 * y - 3 * z]
        gb = buchberger(gens)
        assert all(g.leading_coefficient(GREVLEX) == 1 for g in gb)
        leads = [g.leading_monomial(GREVLEX) for g in gb]
        # no lead divides another, and tails avoid all leads
        for i, g in enumerate(gb):
            for m in g.terms:
                for j, l in enumerate(leads):
                    if i == j and m == leads[i]:
                        continue
                    assert not all(a <= b for a, b in zip(l, m))

    def test_deterministic_under_generator_shuffle(self):
        x, y, z = variables(3)
        gens = [x * y - z**2, y * z - x**2, x * z - y**2, x**2 * y - z * y**2]
        ref = buchberger(gens)
        rng = random.Random(7)
        for _ in range(4):
            shuffled = gens[:]
            rng.shuffle(shuffled)
            assert buchberger(shuffled) == ref

    def test_zero_and_constant(self):
        x, y = variables(2)
        assert buchberger([Polynomial.zero(2)]) == []
        gb = buchberger([x + 1, x])
        assert gb == [Polynomial.constant(2, 1)]


class TestNormalForm:
    def test_nf_is_reduced(self):
        x, y = variables(2)
        I = Ideal([x**2 - y, y**2 - x])
        f = x**4 + x * y
        nf = I.normal_form(f)
        leads = [g.leading_monomial(GREVLEX) for g in I.groebner_basis()]
        for m in nf.terms:
            assert not any(all(a <= b for a, b in zip(l, m)) for l in leads)
        assert I.contains(f - nf)

    def test_membership(self):
        x, y, z = variables(3)
        I = Ideal([x * y - z**2, x - y])
        assert I.contains(y * (x * y - z**2) + z * (x - y))
        assert not I.contains(x)

    def test_nf_linear_over_ideal(self):
        x, y = variables(2)
        I = Ideal([x**2 - y])
        f, g = x**3, y * x
        assert I.normal_form(f + g) == I.normal_form(f) + I.normal_form(g)

    @settings(max_examples=25)
    @given(st.integers(0, 10 ** 6))
    def test_spolys_reduce_to_zero(self, seed):
        rng = random.Random(seed)
        nvars = rng.randint(2, 3)
        gens = [seeded_random_poly(rng, nvars, 3, 3) for _ in range(3)]
        gens = [g for g in gens if g]
        if not gens:
            return
        I = Ideal(gens)
        gb = I.groebner_basis()
        for i in range(len(gb)):
            for j in range(i + 1, len(gb)):
                fi, fj = gb[i], gb[j]
                mi = fi.leading_monomial(GREVLEX)
                mj = fj.leading_monomial(GREVLEX)
                lcm = tuple(max(a, b) for a, b in zip(mi, mj))
                ui = Polynomial(nvars, {tuple(l - a for l, a in zip(lcm, mi)): 1})
                uj = Polynomial(nvars, {tuple(l - a for l, a in zip(lcm, mj)): 1})
                s = ui * fi - uj * fj
                assert I.normal_form(s) == Polynomial.zero(nvars)


class TestAgainstSpanOracle:
    def test_seeded_membership_matches_oracle(self):
        # random homogeneous instances, cross-checked coefficient by
        # coefficient against plain linear algebra
        rng = random.Random(20260817)
        agree = 0
        for trial in range(60):
            nvars = rng.randint(2, 4)
            gens = []
            for _ in range(rng.randint(1, 3)):
                deg = rng.randint(1, 3)
                monos = list(monomials_of_degree(nvars, deg))
                terms = {}
                for m in rng.sample(monos, min(len(monos), rng.randint(1, 4))):
                    terms[m] = QQ(rng.randint(-5, 5))
                g = Polynomial(nvars, terms)
                if g:
                    gens.append(g)
            if not gens:
                continue
            I = Ideal(gens)
            # half the probes are crafted members, half are random
            if trial % 2:
                f = Polynomial.zero(nvars)
                for g in gens:
                    f = f + seeded_random_poly(rng, nvars, 2, 2) * g
            else:
                f = seeded_random_poly(rng, nvars, 4, 3)
            assert I.contains(f) == span_membership(f, gens)
            agree += 1
        assert agree >= 40


class TestIdealOps:
    def test_intersect_monomial(self):
        x, y = variables(2)
        I = Ideal([x])
        J = Ideal([y])
        K = ideal_intersect(I, J)
        assert ideal_equal(K, Ideal([x * y]))

    def test_intersect_classic(self):
        x, y = variables(2)
        K = ideal_intersect(Ideal([x**2, y]), Ideal([x]))
        assert ideal_equal(K, Ideal([x**2, x * y]))

    def test_intersect_is_contained_in_both(self):
        x, y, z = variables(3)
        I = Ideal([x + y, z])
        J = Ideal([x - z, y**2])
        K = ideal_intersect(I, J)
        for g in K.gens:
            assert I.contains(g)
            assert J.contains(g)

    def test_intersect_many(self):
        x, y, z = variables(3)
        K = intersect_many([Ideal([x]), Ideal([y]), Ideal([z])])
        assert ideal_equal(K, Ideal([x * y * z]))

    def test_product_and_power(self):
        x, y = variables(2)
        I = Ideal([x, y])
        sq = ideal_power(I, 2)
        assert ideal_equal(sq, ideal_product(I, I))
        assert ideal_equal(sq, Ideal([x**2, x * y, y**2]))

    def test_sum(self):
        x, y = variables(2)
        S = ideal_sum(Ideal([x]), Ideal([y]))
        assert S.contains(x) and S.contains(y)

    def test_equal_vs_different(self):
        x, y = variables(2)
        assert ideal_equal(Ideal([x, y]), Ideal([x + y, y]))
        assert not ideal_equal(Ideal([x]), Ideal([x**2]))


class TestGradedData:
    def test_graded_dim_principal(self):
        x, y = variables(2)
        I = Ideal([x * y])
        # multiples of xy in degree d: monomials xy * (deg d-2)
        for d in range(0, 6):
            expected = count_monomials(2, d - 2) if d >= 2 else 0
            assert I.graded_dim(d) == expected

    def test_graded_report(self):
        x, y = variables(2)
        rep = graded_report(Ideal([x, y]), 3)
        assert rep.dims == (0, 2, 3, 4)
        assert rep.ambient == (1, 2, 3, 4)

    def test_nf_table_and_basis(self):
        x, y = variables(2)
        I = Ideal([x**2 - y**2, x * y])
        for d in range(2, 6):
            table = nf_monomial_table(I, d)
            assert len(table) == count_monomials(2, d)
            basis = graded_basis(I, d, table)
            assert len(basis) == I.graded_dim(d)
            for b in basis:
                assert I.contains(b)
                assert b.is_homogeneous() and b.total_degree() == d

    def test_min_gens_complete_intersection(self):
        x, y, z = variables(3)
        I = Ideal([x**2 + y * z, y**3 - z**3, z**4])
        counts = minimal_generator_counts(I, 6)
        assert counts == {0: 0, 1: 0, 2: 1, 3: 1, 4: 1, 5: 0, 6: 0}

    def test_min_gens_power_of_maximal(self):
        x, y = variables(2)
        I = ideal_power(Ideal([x, y]), 3)
        counts = minimal_generator_counts(I, 5)
        assert counts == {0: 0, 1: 0, 2: 0, 3: 4, 4: 0, 5: 0}

    def test_min_gens_matches_mI_dimension_oracle(self):
        # count_d must equal dim I_d - dim (m*I)_d
        x, y, z = variables(3)
        gens = [x * y - z**2, x**2 * y, y**3]
        I = Ideal(gens)
        m = Ideal([x, y, z])
        mI = ideal_product(m, I)
        counts = minimal_generator_counts(I, 6)
        for d in range(7):
            assert counts[d] == I.graded_dim(d) - mI.graded_dim(d)


class TestBudget:
    def test_basis_cap_raises(self):
        x, y, z = variables(3)
        gens = [x**3 * y - z**2, y**3 * z - x**2, z**3 * x - y**2]
        with pytest.raises(BudgetExceeded):
            Ideal(gens, budget=Budget(max_seconds=600, max_basis=3)).groebner_basis()

    def test_env_override(self, monkeypatch):
        monkeypatch.setenv("DIAGONALS_MAX_SECONDS", "12.5")
        monkeypatch.setenv("DIAGONALS_MAX_BASIS", "77")
        b = Budget.from_env()
        assert b.max_seconds == 12.5
        assert b.max_basis == 77


class TestSerialization:
    def test_ideal_json_roundtrip(self):
        x1, x2, y1, y2 = variables(4)
        I = Ideal([x1 * y2 - x2 * y1, x1**2], generated_up_to=7)
        back = Ideal.from_json(I.to_json())
        assert back.nvars == 4
        assert back.generated_up_to == 7
        assert list(back.gens) == list(I.gens)

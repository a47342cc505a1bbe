"""Ideals attached to the reflection arrangement on the doubled space.

For each positive root alpha there is a codimension-two subspace where
both the x-form and the y-form of alpha vanish; its (prime, linear) ideal
is the pair ideal P_alpha.  Out of these come the three actors of this
package:

  I        = intersection of all pair ideals,
  I^(d)    = intersection of their d-th powers,
  J        = ideal generated by all alternating polynomials up to a
             chosen total degree (recorded as generated_up_to).

Alternating polynomials lie in every P_alpha: an alternating f changes
sign under s_alpha yet is fixed on the subspace s_alpha fixes, so it
vanishes there, and the pair ideal is exactly that vanishing ideal.
Hence J is always contained in I and the interesting questions are about
the reverse inclusion, graded piece by graded piece.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .groebner import (
    Budget,
    Ideal,
    graded_basis,
    intersect_many,
    nf_monomial_table,
)
from .linalg import RowEchelon
from .polyring import (
    GREVLEX,
    MonomialOrder,
    ONE,
    Polynomial,
    QQ,
    ZERO,
    monomials_of_bidegree,
    monomials_of_degree,
)
from .weyl import RootSystem, WeylGroup

# ---------------------------------------------------------------------------
# pair ideals and their intersections
# ---------------------------------------------------------------------------


def x_form(rs: RootSystem, k: int) -> Polynomial:
    """Primitive linear form of the k-th positive root in the x-block."""
    coeffs = rs.pair_forms()[k]
    n = rs.ambient
    return Polynomial.linear_form(2 * n, list(coeffs) + [0] * n)


def y_form(rs: RootSystem, k: int) -> Polynomial:
    coeffs = rs.pair_forms()[k]
    n = rs.ambient
    return Polynomial.linear_form(2 * n, [0] * n + list(coeffs))


def pair_ideal(rs: RootSystem, k: int, order: MonomialOrder = GREVLEX,
               budget: Budget | None = None) -> Ideal:
    return Ideal([x_form(rs, k), y_form(rs, k)], order, budget=budget)


def pair_ideal_power(rs: RootSystem, k: int, d: int,
                     order: MonomialOrder = GREVLEX,
                     budget: Budget | None = None) -> Ideal:
    """d-th power of a pair ideal: spanned by lx^i * ly^(d-i)."""
    lx, ly = x_form(rs, k), y_form(rs, k)
    gens = [lx**i * ly ** (d - i) for i in range(d, -1, -1)]
    return Ideal(gens, order, budget=budget)


def ideal_I(rs: RootSystem, order: MonomialOrder = GREVLEX,
            budget: Budget | None = None) -> Ideal:
    """Intersection of every pair ideal."""
    parts = [pair_ideal(rs, k, order, budget)
             for k in range(len(rs.positive_roots))]
    return intersect_many(parts, budget=budget)


def symbolic_power(rs: RootSystem, d: int, order: MonomialOrder = GREVLEX,
                   budget: Budget | None = None) -> Ideal:
    """I^(d): intersection of the d-th powers of the pair ideals."""
    parts = [pair_ideal_power(rs, k, d, order, budget)
             for k in range(len(rs.positive_roots))]
    return intersect_many(parts, budget=budget)


def discriminant(rs: RootSystem) -> Polynomial:
    """Product of the positive-root x-forms; the minimal sign-isotypic
    polynomial in the x-block alone."""
    n = rs.ambient
    out = Polynomial.constant(2 * n, 1)
    for k in range(len(rs.positive_roots)):
        out = out * x_form(rs, k)
    return out


# ---------------------------------------------------------------------------
# alternating polynomials
# ---------------------------------------------------------------------------


def primitive_part(f: Polynomial, order: MonomialOrder = GREVLEX) -> Polynomial:
    """Rescale to coprime integer coefficients with positive leading one."""
    if not f:
        return f
    den = 1
    for c in f.terms.values():
        den = math.lcm(den, int(c.denominator))
    num = 0
    for c in f.terms.values():
        num = math.gcd(num, int(c * den))
    scale = QQ(den, num)
    if f.leading_coefficient(order) < 0:
        scale = -scale
    return f * scale


def orbit_projection(W: WeylGroup, mono: tuple, signed: bool):
    """(canonical orbit representative, its coefficient in the average).

    Only valid for groups of monomial matrices, where the orbit of a
    monomial consists of scaled monomials and an (anti)invariant is pinned
    down by its coefficients on one representative per orbit.
    """
    memo = W.projection_memo[signed]
    got = memo.get(mono)
    if got is not None:
        return got
    single = Polynomial(len(mono), {mono: ONE})
    acc: dict = {}
    support = set()
    for w in W.elements:
        img = W.act(w, single)
        ((m2, c2),) = img.terms.items()
        support.add(m2)
        if signed and W.signs[w] < 0:
            c2 = -c2
        acc[m2] = acc.get(m2, ZERO) + c2
    rep = max(support)
    coeff = acc.get(rep, ZERO) / W.order
    out = (rep, coeff)
    memo[mono] = out
    return out


def _monomial_subgroup_rep(W: WeylGroup, mono: tuple):
    """Orbit representative and signed-average coefficient under the
    subgroup of monomial matrices.  Useful for dense groups, where the
    full orbit projection is unavailable but the monomial part still
    collapses proportional candidates."""
    memo = W.projection_memo.setdefault("H", {})
    got = memo.get(mono)
    if got is not None:
        return got
    single = Polynomial(len(mono), {mono: ONE})
    acc: dict = {}
    support = set()
    for h in W._monomial:
        img = W.act(h, single)
        ((m2, c2),) = img.terms.items()
        support.add(m2)
        if W.signs[h] < 0:
            c2 = -c2
        acc[m2] = acc.get(m2, ZERO) + c2
    rep = max(support)
    out = (rep, acc.get(rep, ZERO))
    memo[mono] = out
    return out


def _compressed_row(W: WeylGroup, f: Polynomial, signed: bool) -> dict:
    """Coefficients of the (anti)symmetrized f on canonical representatives."""
    row: dict = {}
    for m, c in f.terms.items():
        rep, coeff = orbit_projection(W, m, signed)
        if not coeff:
            continue
        s = row.get(rep, ZERO) + c * coeff
        if s:
            row[rep] = s
        else:
            del row[rep]
    return row


def alternant_basis(W: WeylGroup, a: int, b: int) -> list:
    """Basis of the alternating polynomials of bidegree (a, b).

    Monomial groups: one candidate per monomial orbit with nonvanishing
    signed average.  Dense groups: antisymmetrize candidates and keep the
    echelon-independent ones.
    """
    n = W.ambient
    out = []
    if W.is_monomial_group:
        seen = set()
        for m in sorted(monomials_of_bidegree(n, a, b)):
            rep, coeff = orbit_projection(W, m, True)
            if rep in seen or not coeff:
                continue
            seen.add(rep)
            out.append(primitive_part(W.antisymmetrize(
                Polynomial(2 * n, {rep: ONE}))))
        return out
    ech = RowEchelon()
    for m in sorted(monomials_of_bidegree(n, a, b)):
        # candidates in one monomial-subgroup orbit average to proportional
        # results, so only the canonical one with a surviving coefficient
        # needs the dense pass
        rep, coeff = _monomial_subgroup_rep(W, m)
        if rep != m or not coeff:
            continue
        g = W.antisymmetrize(Polynomial(2 * n, {m: ONE}))
        if g and ech.add(dict(g.terms)):
            out.append(primitive_part(g))
    return out


def alternant_generators(W: WeylGroup, max_degree: int) -> list:
    """All alternating-basis elements of total degree <= max_degree."""
    out = []
    for d in range(max_degree + 1):
        for a in range(d, -1, -1):
            out.extend(alternant_basis(W, a, d - a))
    return out


def ideal_J(W: WeylGroup, max_degree: int, order: MonomialOrder = GREVLEX,
            budget: Budget | None = None) -> Ideal:
    """Ideal generated by every alternant of total degree <= max_degree.

    The generator list is complete only up to that degree, which the
    resulting ideal records in generated_up_to; statements about higher
    degrees need the comparison layer's explicit bound bookkeeping.
    """
    gens = alternant_generators(W, max_degree)
    return Ideal(gens, order, nvars=2 * W.ambient,
                 generated_up_to=max_degree, budget=budget)


def alternant_dimension(W: WeylGroup, a: int, b: int) -> int:
    """dim of the alternating subspace in bidegree (a, b)."""
    if W.is_monomial_group:
        reps = set()
        for m in monomials_of_bidegree(W.ambient, a, b):
            rep, coeff = orbit_projection(W, m, True)
            if coeff:
                reps.add(rep)
        return len(reps)
    return len(alternant_basis(W, a, b))


# ---------------------------------------------------------------------------
# dimensions of averaged images
# ---------------------------------------------------------------------------


def invariant_image_dim(W: WeylGroup, I: Ideal, d: int, signed: bool = False,
                        table: dict | None = None) -> int:
    """dim of the space of (anti)symmetrized elements of the degree-d piece."""
    if I.nvars != 2 * W.ambient:
        raise ValueError("ideal does not live on the doubled space")
    basis = graded_basis(I, d, table)
    ech = RowEchelon()
    rank = 0
    for b in basis:
        if W.is_monomial_group:
            row = _compressed_row(W, b, signed)
        else:
            g = W.antisymmetrize(b) if signed else W.symmetrize(b)
            row = dict(g.terms)
        if row and ech.add(row):
            rank += 1
    return rank


def averaged_multiple_dim(W: WeylGroup, multiplier: Polynomial, I: Ideal,
                          k: int, table: dict | None = None) -> int:
    """dim of e(multiplier * I_k), the symmetrized multiplier-shifted piece."""
    basis = graded_basis(I, k, table)
    ech = RowEchelon()
    rank = 0
    for b in basis:
        g = W.symmetrize(multiplier * b)
        if g and ech.add(dict(g.terms)):
            rank += 1
    return rank


def full_ring_ideal(nvars: int, order: MonomialOrder = GREVLEX) -> Ideal:
    """The unit ideal, whose degree-d basis is every monomial."""
    return Ideal([Polynomial.constant(nvars, 1)], order, nvars=nvars)


# ---------------------------------------------------------------------------
# graded comparison of two ideals
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Comparison:
    """Exact relation between two generated ideals plus graded evidence.

    relation is one of:
      equal                    both generator sets contained in the other
      left-strictly-contained  left ideal strictly inside the right one
      right-strictly-contained mirror image
      incomparable-at-bound    neither containment holds

    The relation statements are exact for the ideals generated by the
    given generators.  When a side carries generated_up_to, statements
    about the untruncated ideal are only safe through that degree; the
    bounds_used field carries everything needed for that bookkeeping.
    """

    relation: str
    certificate: dict | None
    bounds_used: dict
    dims_left: tuple
    dims_right: tuple

    def to_json(self) -> dict:
        return {
            "relation": self.relation,
            "certificate": self.certificate,
            "boundsUsed": self.bounds_used,
            "dimsLeft": list(self.dims_left),
            "dimsRight": list(self.dims_right),
        }


def compare(L: Ideal, R: Ideal, bound: int) -> Comparison:
    dims_left = tuple(L.graded_dim(d) for d in range(bound + 1))
    dims_right = tuple(R.graded_dim(d) for d in range(bound + 1))
    left_in_right = all(R.contains(g) for g in L.gens)
    right_in_left = all(L.contains(g) for g in R.gens)
    certificate = None
    for d in range(bound + 1):
        if dims_left[d] != dims_right[d]:
            certificate = {
                "degree": d,
                "dimLeft": dims_left[d],
                "dimRight": dims_right[d],
            }
            break
    if left_in_right and right_in_left:
        relation = "equal"
    elif left_in_right:
        relation = "left-strictly-contained"
    elif right_in_left:
        relation = "right-strictly-contained"
    else:
        relation = "incomparable-at-bound"
    return Comparison(
        relation=relation,
        certificate=certificate,
        bounds_used={
            "degreeBound": bound,
            "leftGeneratedUpTo": L.generated_up_to,
            "rightGeneratedUpTo": R.generated_up_to,
        },
        dims_left=dims_left,
        dims_right=dims_right,
    )

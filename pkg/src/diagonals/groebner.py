"""Buchberger engine and ideal arithmetic over exact rationals.

The kernel works on integer-primitive term lists with precomputed order
keys.  Keys are additive (key(u*v) = key(u) + key(v)), so shifting a
polynomial by a monomial never re-derives keys from exponents.  Reduction
is fraction-free: cross-multiplied subtractions keep everything in ZZ and
a per-emission scale records the exact rational normal form at the end.

Pair management follows the classic update procedure with the product and
chain criteria; selection is the normal strategy (smallest lcm first).
All choices are deterministic, so a basis is a pure function of the
generators, the order, and nothing else.
"""

from __future__ import annotations

import heapq
import itertools
import math
import os
import time
from dataclasses import dataclass

from .polyring import (
    GREVLEX,
    EliminationOrder,
    Monomial,
    MonomialOrder,
    ONE,
    Polynomial,
    QQ,
    RingContextError,
    ZERO,
    count_monomials,
    from_string,
    monomials_of_degree,
    order_from_json,
    order_to_json,
    to_string,
)

# ---------------------------------------------------------------------------
# resource guard
# ---------------------------------------------------------------------------


@dataclass
class Budget:
    """Wall-clock and basis-size ceiling for a single basis computation."""

    max_seconds: float = 1800.0
    max_basis: int = 4000

    @classmethod
    def from_env(cls) -> "Budget":
        return cls(
            max_seconds=float(os.environ.get("DIAGONALS_MAX_SECONDS", 1800.0)),
            max_basis=int(os.environ.get("DIAGONALS_MAX_BASIS", 4000)),
        )

    def deadline(self) -> float:
        return time.monotonic() + self.max_seconds


class BudgetExceeded(RuntimeError):
    def __init__(self, reason: str, elapsed: float, basis_size: int):
        super().__init__(
            f"basis computation aborted ({reason}): "
            f"{elapsed:.1f}s elapsed, {basis_size} basis elements"
        )
        self.reason = reason
        self.elapsed = elapsed
        self.basis_size = basis_size


# ---------------------------------------------------------------------------
# integer kernel
# ---------------------------------------------------------------------------
# A gpoly is a list of (key, mono, int_coeff) sorted by key descending,
# content-stripped, with positive leading coefficient.


def _divides(a: Monomial, b: Monomial) -> bool:
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def _to_g(f: Polynomial, keyf) -> list:
    if not f.terms:
        return []
    den = 1
    for c in f.terms.values():
        den = math.lcm(den, int(c.denominator))
    terms = [(keyf(m), m, int(c * den)) for m, c in f.terms.items()]
    terms.sort(reverse=True)
    return _primitive(terms)


def _primitive(terms: list) -> list:
    if not terms:
        return terms
    g = 0
    for _, _, c in terms:
        g = math.gcd(g, c)
        if g == 1:
            break
    if terms[0][2] < 0:
        g = -g
    if g != 1:
        terms = [(k, m, c // g) for k, m, c in terms]
    return terms


def _nf_dict_to_g(nf: dict, keyf) -> list:
    """Rational normal-form dict -> primitive gpoly."""
    if not nf:
        return []
    den = 1
    for c in nf.values():
        den = math.lcm(den, int(c.denominator))
    terms = [(keyf(m), m, int(c * den)) for m, c in nf.items()]
    terms.sort(reverse=True)
    return _primitive(terms)


def _shifted(g: list, umono: Monomial, ukey: tuple, factor: int) -> list:
    return [
        (
            tuple(a + b for a, b in zip(k, ukey)),
            tuple(a + b for a, b in zip(m, umono)),
            factor * c,
        )
        for k, m, c in g
    ]


def _combine(a: int, f: list, fstart: int, h: list) -> list:
    """a * f[fstart:] - h, both inputs sorted descending."""
    out = []
    i, j = fstart, 0
    nf_, nh = len(f), len(h)
    while i < nf_ and j < nh:
        kf = f[i][0]
        kh = h[j][0]
        if kf > kh:
            out.append((kf, f[i][1], a * f[i][2]))
            i += 1
        elif kf < kh:
            out.append((kh, h[j][1], -h[j][2]))
            j += 1
        else:
            c = a * f[i][2] - h[j][2]
            if c:
                out.append((kf, f[i][1], c))
            i += 1
            j += 1
    while i < nf_:
        out.append((f[i][0], f[i][1], a * f[i][2]))
        i += 1
    while j < nh:
        out.append((h[j][0], h[j][1], -h[j][2]))
        j += 1
    return out


def _g_nf(fg: list, basis: list, member_only: bool = False,
          deadline: float | None = None):
    """Full normal form of a gpoly against a list of gpolys.

    Returns a dict mono -> QQ giving the exact normal form of the input
    (interpreted with integer coefficients as given).  With member_only,
    returns None at the first irreducible term instead (the input is then
    certainly not in the ideal) and {} when it reduces to zero.
    """
    work = fg
    pos = 0
    scale = ONE
    emitted: list = []
    steps = 0
    while pos < len(work):
        steps += 1
        if deadline is not None and not steps % 256 and time.monotonic() > deadline:
            raise BudgetExceeded("time limit in reduction", 0.0, len(basis))
        k, m, c = work[pos]
        red = None
        for g in basis:
            if _divides(g[0][1], m):
                red = g
                break
        if red is None:
            if member_only:
                return None
            emitted.append((m, c, scale))
            pos += 1
            continue
        gk, gm, gc = red[0]
        d = math.gcd(c, gc)
        a = gc // d
        b = c // d
        umono = tuple(x - y for x, y in zip(m, gm))
        ukey = tuple(x - y for x, y in zip(k, gk))
        h = _shifted(red, umono, ukey, b)
        work = _combine(a, work, pos + 1, h[1:])
        pos = 0
        if a != 1:
            scale = scale * a
        if work:
            g0 = 0
            for _, _, cc in work:
                g0 = math.gcd(g0, cc)
                if g0 == 1:
                    break
            if g0 > 1:
                work = [(kk, mm, cc // g0) for kk, mm, cc in work]
                scale = scale / g0
    return {m: QQ(c) / se for m, c, se in emitted}


def _g_spoly(f: list, g: list, keyf) -> list:
    kf, mf, cf = f[0]
    kg, mg, cg = g[0]
    lcm_m = tuple(max(a, b) for a, b in zip(mf, mg))
    d = math.gcd(cf, cg)
    a = cg // d
    b = cf // d
    uf = tuple(x - y for x, y in zip(lcm_m, mf))
    ug = tuple(x - y for x, y in zip(lcm_m, mg))
    F = _shifted(f[1:], uf, keyf(uf), a)
    G = _shifted(g[1:], ug, keyf(ug), b)
    return _primitive(_combine(1, F, 0, G))


def _coprime(a: Monomial, b: Monomial) -> bool:
    return all(x == 0 or y == 0 for x, y in zip(a, b))


def _update_pairs(leads, alive, lcm_of, heap, t, keyf):
    """Register pairs (i, t), pruned by the product and chain criteria."""
    cand = []
    for i in range(t):
        l = tuple(max(a, b) for a, b in zip(leads[i], leads[t]))
        cand.append((keyf(l), i, l))
    cand.sort()
    kept: list = []
    for pos, (lk, i, l) in enumerate(cand):
        if _coprime(leads[i], leads[t]):
            kept.append((i, l, lk, True))
            continue
        drop = False
        for _, lj, _, _ in kept:
            if _divides(lj, l):
                drop = True
                break
        if not drop:
            for lk2, _, l2 in cand[pos + 1:]:
                if l2 == l:
                    drop = True
                    break
        if not drop:
            kept.append((i, l, lk, False))
    # chain criterion against existing pairs
    lt = leads[t]
    for (i, j) in list(alive):
        l = lcm_of[(i, j)]
        li = tuple(max(a, b) for a, b in zip(leads[i], lt))
        lj = tuple(max(a, b) for a, b in zip(leads[j], lt))
        if _divides(lt, l) and li != l and lj != l:
            alive.discard((i, j))
            del lcm_of[(i, j)]
    for i, l, lk, coprime in kept:
        if coprime:
            continue
        alive.add((i, t))
        lcm_of[(i, t)] = l
        heapq.heappush(heap, (lk, i, t))


def _buchberger_core(ggens: list, keyf, budget: Budget) -> list:
    """Reduced basis as primitive gpolys sorted ascending by lead key."""
    t0 = time.monotonic()
    deadline = t0 + budget.max_seconds
    basis: list = []
    leads: list = []
    alive: set = set()
    lcm_of: dict = {}
    heap: list = []

    def insert(g: list):
        basis.append(g)
        leads.append(g[0][1])
        _update_pairs(leads, alive, lcm_of, heap, len(basis) - 1, keyf)

    for g in sorted((g for g in ggens if g), key=lambda p: (p[0][0], p)):
        nf = _g_nf(g, basis, deadline=deadline)
        gg = _nf_dict_to_g(nf, keyf)
        if gg:
            insert(gg)

    pops = 0
    while heap:
        lk, i, j = heapq.heappop(heap)
        if (i, j) not in alive:
            continue
        alive.discard((i, j))
        del lcm_of[(i, j)]
        pops += 1
        if not pops % 16 and time.monotonic() > deadline:
            raise BudgetExceeded("time limit", time.monotonic() - t0, len(basis))
        if len(basis) > budget.max_basis:
            raise BudgetExceeded("basis size limit", time.monotonic() - t0,
                                 len(basis))
        s = _g_spoly(basis[i], basis[j], keyf)
        if not s:
            continue
        nf = _g_nf(s, basis, deadline=deadline)
        gg = _nf_dict_to_g(nf, keyf)
        if gg:
            insert(gg)

    # minimalize: drop elements whose lead is divisible by another kept lead
    order_idx = sorted(range(len(basis)), key=lambda i: basis[i][0][0])
    kept_idx: list = []
    for i in order_idx:
        m = basis[i][0][1]
        if not any(_divides(basis[j][0][1], m) for j in kept_idx):
            kept_idx.append(i)
    minimal = [basis[i] for i in kept_idx]

    # interreduce tails, ascending; earlier elements are already final
    reduced: list = []
    for pos, g in enumerate(minimal):
        others = reduced + minimal[pos + 1:]
        nf = _g_nf(g, others, deadline=deadline)
        reduced.append(_nf_dict_to_g(nf, keyf))
    return reduced


def _g_to_poly(g: list, nvars: int) -> Polynomial:
    if not g:
        return Polynomial.zero(nvars)
    lead = g[0][2]
    return Polynomial(nvars, {m: QQ(c, lead) for _, m, c in g})


def buchberger(gens, order: MonomialOrder = GREVLEX,
               budget: Budget | None = None) -> list:
    """Reduced monic basis, ascending by leading monomial."""
    gens = [g for g in gens if g]
    if not gens:
        return []
    nvars = gens[0].nvars
    budget = budget or Budget.from_env()
    keyf = order.key
    core = _buchberger_core([_to_g(g, keyf) for g in gens], keyf, budget)
    return [_g_to_poly(g, nvars) for g in core]


# ---------------------------------------------------------------------------
# ideals
# ---------------------------------------------------------------------------


class Ideal:
    """Finitely generated ideal with a cached reduced basis.

    generated_up_to, when set, records that the generator list is only
    trusted to span the ideal's graded pieces through that total degree;
    comparisons report an inconclusive verdict past it.
    """

    def __init__(self, gens, order: MonomialOrder = GREVLEX, *,
                 nvars: int | None = None, generated_up_to: int | None = None,
                 budget: Budget | None = None):
        gens = tuple(g for g in gens if g)
        if not gens and nvars is None:
            raise RingContextError("empty ideal needs an explicit nvars")
        self.nvars = nvars if nvars is not None else gens[0].nvars
        for g in gens:
            if g.nvars != self.nvars:
                raise RingContextError("generators live in different rings")
        self.gens = gens
        self.order = order
        self.generated_up_to = generated_up_to
        self.budget = budget
        self._gb: tuple | None = None
        self._gbg: list | None = None
        self._lead_cache: dict = {}

    # -- basis -------------------------------------------------------------

    def groebner_basis(self) -> tuple:
        if self._gb is None:
            keyf = self.order.key
            core = _buchberger_core(
                [_to_g(g, keyf) for g in self.gens],
                keyf,
                self.budget or Budget.from_env(),
            )
            self._gbg = core
            self._gb = tuple(_g_to_poly(g, self.nvars) for g in core)
        return self._gb

    def _core(self) -> list:
        self.groebner_basis()
        return self._gbg

    def _set_basis(self, polys) -> None:
        """Install an externally computed reduced basis (trusted)."""
        keyf = self.order.key
        self._gb = tuple(polys)
        self._gbg = [_to_g(g, keyf) for g in polys]

    def leading_monomials(self) -> tuple:
        return tuple(g[0][1] for g in self._core())

    # -- membership ----------------------------------------------------------

    def normal_form(self, f: Polynomial) -> Polynomial:
        if f.nvars != self.nvars:
            raise RingContextError("polynomial in a different ring")
        if not f:
            return f
        keyf = self.order.key
        den = 1
        for c in f.terms.values():
            den = math.lcm(den, int(c.denominator))
        terms = sorted(((keyf(m), m, int(c * den)) for m, c in f.terms.items()),
                       reverse=True)
        nf = _g_nf(terms, self._core())
        return Polynomial(self.nvars, {m: c / den for m, c in nf.items()})

    def contains(self, f: Polynomial) -> bool:
        if f.nvars != self.nvars:
            raise RingContextError("polynomial in a different ring")
        if not f:
            return True
        return _g_nf(_to_g(f, self.order.key), self._core(),
                     member_only=True) == {}

    def contains_ideal(self, other: "Ideal") -> bool:
        return all(self.contains(g) for g in other.gens)

    # -- graded data ---------------------------------------------------------

    def graded_dim(self, d: int) -> int:
        """Dimension of the ideal's degree-d graded piece."""
        if d < 0:
            return 0
        leads = self.leading_monomials()
        if not leads:
            return 0
        n = 0
        for m in monomials_of_degree(self.nvars, d):
            for l in leads:
                if sum(l) > d:
                    continue
                if _divides(l, m):
                    n += 1
                    break
        return n

    def leading_monomials_of_degree(self, d: int) -> list:
        leads = [l for l in self.leading_monomials() if sum(l) <= d]
        out = []
        for m in monomials_of_degree(self.nvars, d):
            if any(_divides(l, m) for l in leads):
                out.append(m)
        return out

    def standard_monomials_of_degree(self, d: int) -> list:
        leads = [l for l in self.leading_monomials() if sum(l) <= d]
        return [m for m in monomials_of_degree(self.nvars, d)
                if not any(_divides(l, m) for l in leads)]

    # -- misc ----------------------------------------------------------------

    def __repr__(self):
        return f"Ideal({len(self.gens)} gens, {self.nvars} vars, {self.order.name})"

    def to_json(self) -> dict:
        out = {
            "nvars": self.nvars,
            "order": order_to_json(self.order),
            "gens": [to_string(g) for g in self.gens],
        }
        if self.generated_up_to is not None:
            out["generated_up_to"] = self.generated_up_to
        return out

    @classmethod
    def from_json(cls, obj: dict) -> "Ideal":
        nvars = obj["nvars"]
        gens = [from_string(s, nvars) for s in obj["gens"]]
        return cls(gens, order_from_json(obj["order"]), nvars=nvars,
                   generated_up_to=obj.get("generated_up_to"))


# ---------------------------------------------------------------------------
# ideal operations
# ---------------------------------------------------------------------------


def ideal_sum(I: Ideal, J: Ideal) -> Ideal:
    _same_ring(I, J)
    return Ideal(I.gens + J.gens, I.order, nvars=I.nvars, budget=I.budget)


def ideal_product(I: Ideal, J: Ideal) -> Ideal:
    _same_ring(I, J)
    gens = [f * g for f in I.gens for g in J.gens]
    return Ideal(gens, I.order, nvars=I.nvars, budget=I.budget)


def ideal_power(I: Ideal, k: int) -> Ideal:
    if k < 1:
        raise ValueError("power must be >= 1")
    gens = [math.prod(combo, start=Polynomial.constant(I.nvars, 1))
            for combo in itertools.combinations_with_replacement(I.gens, k)]
    return Ideal(gens, I.order, nvars=I.nvars, budget=I.budget)


def _extend(f: Polynomial, extra: int = 1) -> Polynomial:
    return Polynomial(f.nvars + extra,
                      {m + (0,) * extra: c for m, c in f.terms.items()})


def _restrict(f: Polynomial, nvars: int) -> Polynomial:
    terms = {}
    for m, c in f.terms.items():
        if any(m[nvars:]):
            raise ValueError("polynomial involves dropped variables")
        terms[m[:nvars]] = c
    return Polynomial(nvars, terms)


def ideal_intersect(I: Ideal, J: Ideal, budget: Budget | None = None) -> Ideal:
    """Intersection via the single-auxiliary-variable trick.

    Generators t*f and (1-t)*g over the extended ring, then elimination of
    t with a block order.  The auxiliary variable counts for degree zero in
    the ideal's own grading, so graded structure passes through untouched.
    """
    _same_ring(I, J)
    n = I.nvars
    t = Polynomial.variable(n + 1, n)
    one = Polynomial.constant(n + 1, 1)
    gens = [_extend(f) * t for f in I.gens]
    gens += [_extend(g) * (one - t) for g in J.gens]
    order = EliminationOrder(frozenset({n}))
    E = Ideal(gens, order, nvars=n + 1, budget=budget or I.budget)
    kept = [g for g in E.groebner_basis()
            if all(m[n] == 0 for m in g.terms)]
    result = Ideal([_restrict(g, n) for g in kept], I.order, nvars=n,
                   budget=budget or I.budget)
    if isinstance(I.order, type(GREVLEX)):
        # the block order restricts to grevlex on the kept variables, so the
        # surviving elements are already the reduced basis
        result._set_basis(tuple(sorted((g for g in result.gens),
                                       key=lambda p: I.order.key(
                                           p.leading_monomial(I.order)))))
    return result


def intersect_many(ideals, budget: Budget | None = None) -> Ideal:
    """Fold pairwise intersections, always merging the two smallest."""
    items = list(ideals)
    if not items:
        raise ValueError("need at least one ideal")
    heap = [(len(I.gens), pos, I) for pos, I in enumerate(items)]
    heapq.heapify(heap)
    counter = len(items)
    while len(heap) > 1:
        _, _, A = heapq.heappop(heap)
        _, _, B = heapq.heappop(heap)
        C = ideal_intersect(A, B, budget=budget)
        heapq.heappush(heap, (len(C.gens), counter, C))
        counter += 1
    return heap[0][2]


def ideal_equal(I: Ideal, J: Ideal) -> bool:
    _same_ring(I, J)
    return I.contains_ideal(J) and J.contains_ideal(I)


def _same_ring(I: Ideal, J: Ideal) -> None:
    if I.nvars != J.nvars:
        raise RingContextError("ideals live in different rings")


# ---------------------------------------------------------------------------
# graded reports
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GradedReport:
    """Graded dimensions of an ideal piece by piece."""

    degrees: tuple
    dims: tuple
    ambient: tuple

    def to_json(self) -> dict:
        return {
            "degrees": list(self.degrees),
            "dims": list(self.dims),
            "ambient": list(self.ambient),
        }


def graded_report(I: Ideal, max_degree: int) -> GradedReport:
    degs = tuple(range(max_degree + 1))
    return GradedReport(
        degrees=degs,
        dims=tuple(I.graded_dim(d) for d in degs),
        ambient=tuple(count_monomials(I.nvars, d) for d in degs),
    )


def minimal_generator_counts(I: Ideal, max_degree: int,
                             budget: Budget | None = None) -> dict:
    """Number of minimal generators of I in each degree through max_degree.

    Degree-by-degree: the count in degree d is dim I_d minus the dimension
    of the degree-d piece generated by the generators found so far (that
    piece equals R_1 * I_{d-1} once lower degrees are fully covered, which
    the construction guarantees).  Requires homogeneous generators.
    """
    for g in I.gens:
        if not g.is_homogeneous():
            raise ValueError("minimal generator counts need homogeneous gens")
    budget = budget or I.budget or Budget.from_env()
    counts: dict[int, int] = {}
    partial: list = []
    for d in range(max_degree + 1):
        lt_full = set(I.leading_monomials_of_degree(d))
        if partial:
            partial_ideal = Ideal(list(partial), I.order, nvars=I.nvars,
                                  budget=budget)
            lt_part = set(partial_ideal.leading_monomials_of_degree(d))
        else:
            lt_part = set()
        missing = sorted(lt_full - lt_part, key=I.order.key)
        counts[d] = len(missing)
        for w in missing:
            mono = Polynomial(I.nvars, {w: 1})
            partial.append(mono - I.normal_form(mono))
        if partial and missing:
            # keep the partial list short: swap in its reduced basis
            partial_ideal = Ideal(list(partial), I.order, nvars=I.nvars,
                                  budget=budget)
            partial = list(partial_ideal.groebner_basis())
    return counts


def nf_monomial_table(I: Ideal, d: int) -> dict:
    """Normal forms of every degree-d monomial against the reduced basis.

    Dynamic programming over the order: reducing a monomial rewrites it as
    a combination of strictly smaller monomials of the same degree, so one
    ascending pass fills the table.  Returns mono -> {standard mono: QQ}.
    """
    keyf = I.order.key
    gb = I.groebner_basis()
    entries = []
    for g in gb:
        if not g.is_homogeneous():
            raise ValueError("normal-form tables need a homogeneous ideal")
        lead = g.leading_monomial(I.order)
        tail = [(m, -c) for m, c in g.terms.items() if m != lead]
        entries.append((lead, tail))
    table: dict = {}
    for m in sorted(monomials_of_degree(I.nvars, d), key=keyf):
        red = None
        for lead, tail in entries:
            if _divides(lead, m):
                red = (lead, tail)
                break
        if red is None:
            table[m] = {m: ONE}
            continue
        lead, tail = red
        u = tuple(a - b for a, b in zip(m, lead))
        acc: dict = {}
        for tm, tc in tail:
            shifted = tuple(a + b for a, b in zip(tm, u))
            for sm, sc in table[shifted].items():
                s = acc.get(sm, ZERO) + tc * sc
                if s:
                    acc[sm] = s
                else:
                    del acc[sm]
        table[m] = acc
    return table


def graded_basis(I: Ideal, d: int, table: dict | None = None) -> list:
    """Triangular basis of the ideal's degree-d piece: w - NF(w) per lead w."""
    if table is None:
        table = nf_monomial_table(I, d)
    out = []
    for w in I.leading_monomials_of_degree(d):
        row = dict(table[w])
        row[w] = row.get(w, ZERO) - ONE
        out.append(Polynomial(I.nvars, {m: -c for m, c in row.items()}))
    return out

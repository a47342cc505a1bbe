"""Exact multivariate polynomials over the rationals.

A ring context is just a number of variables.  In the doubled reflection
rings used downstream the first n variables are the x-coordinates on the
reflection representation and the last n are the dual y-coordinates;
auxiliary elimination variables, when present, sit after the y-block.

Coefficients are exact rationals (gmpy2.mpq when installed, else
fractions.Fraction).  Nothing in this package touches floating point.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Sequence

try:
    from gmpy2 import mpq as QQ
except ImportError:  # pragma: no cover - gmpy2 is an optional speedup
    from fractions import Fraction as QQ

Monomial = tuple

ZERO = QQ(0)
ONE = QQ(1)


def rational(value) -> "QQ":
    """Coerce ints, 'p/q' strings, or rationals to the coefficient type."""
    return QQ(value)


class RingContextError(ValueError):
    """Raised when operands live in rings with different variable counts."""


class ExactDivisionError(ArithmeticError):
    """Raised when a division that must be exact leaves a remainder."""


# ---------------------------------------------------------------------------
# monomial orders
# ---------------------------------------------------------------------------


class MonomialOrder:
    """Total multiplicative well-order on exponent vectors.

    Orders are exposed as sort keys.  Every key here is additive,
    key(u*v) = key(u) + key(v) componentwise, which the Groebner kernel
    exploits when shifting a polynomial by a monomial.
    """

    name = "order"

    def key(self, mono: Monomial) -> tuple:
        raise NotImplementedError


@dataclass(frozen=True)
class GrevLex(MonomialOrder):
    """Graded reverse lexicographic order."""

    name = "grevlex"

    def key(self, mono: Monomial) -> tuple:
        out = [0]
        total = 0
        for e in mono:
            total += e
        out[0] = total
        out.extend(-e for e in reversed(mono))
        return tuple(out)


@dataclass(frozen=True)
class Lex(MonomialOrder):
    """Plain lexicographic order, first variable strongest."""

    name = "lex"

    def key(self, mono: Monomial) -> tuple:
        return tuple(mono)


@dataclass(frozen=True)
class EliminationOrder(MonomialOrder):
    """Block order: grevlex on the eliminated block, then grevlex on the rest.

    Any monomial involving an eliminated variable beats any monomial that
    avoids them all, so basis elements free of the block generate the
    elimination ideal.
    """

    eliminated: frozenset

    name = "elim"

    def __post_init__(self):
        object.__setattr__(self, "_elim", tuple(sorted(self.eliminated)))

    def key(self, mono: Monomial) -> tuple:
        elim = self._elim
        inside = [mono[i] for i in elim]
        keep = [e for i, e in enumerate(mono) if i not in self.eliminated]
        out = [sum(inside)]
        out.extend(-e for e in reversed(inside))
        out.append(sum(keep))
        out.extend(-e for e in reversed(keep))
        return tuple(out)


@dataclass(frozen=True)
class WeightedGrevLex(MonomialOrder):
    """Weight vector first, grevlex tiebreak."""

    weights: tuple

    name = "wgrevlex"

    def key(self, mono: Monomial) -> tuple:
        w = self.weights
        out = [sum(wi * e for wi, e in zip(w, mono)), sum(mono)]
        out.extend(-e for e in reversed(mono))
        return tuple(out)


GREVLEX = GrevLex()
LEX = Lex()


def order_to_json(order: MonomialOrder):
    if isinstance(order, GrevLex):
        return "grevlex"
    if isinstance(order, Lex):
        return "lex"
    if isinstance(order, EliminationOrder):
        return {"elim": sorted(order.eliminated)}
    if isinstance(order, WeightedGrevLex):
        return {"wgrevlex": list(order.weights)}
    raise ValueError(f"unknown order {order!r}")


def order_from_json(obj) -> MonomialOrder:
    if obj == "grevlex":
        return GREVLEX
    if obj == "lex":
        return LEX
    if isinstance(obj, dict) and "elim" in obj:
        return EliminationOrder(frozenset(obj["elim"]))
    if isinstance(obj, dict) and "wgrevlex" in obj:
        return WeightedGrevLex(tuple(obj["wgrevlex"]))
    raise ValueError(f"unknown order name {obj!r}")


# ---------------------------------------------------------------------------
# polynomials
# ---------------------------------------------------------------------------


class Polynomial:
    """Sparse polynomial: map from exponent vector to nonzero coefficient.

    Instances are treated as immutable; all operations return new objects.
    Equality is structural (same variable count, same term map).
    """

    __slots__ = ("nvars", "terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping[Monomial, object] | None = None):
        clean = {}
        if terms:
            for mono, coeff in terms.items():
                c = coeff if type(coeff) is type(ONE) else QQ(coeff)
                if c:
                    m = tuple(mono)
                    if len(m) != nvars:
                        raise RingContextError(
                            f"monomial {m} has {len(m)} exponents, ring has {nvars}"
                        )
                    clean[m] = c
        self.nvars = nvars
        self.terms = clean
        self._hash = None

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> "Polynomial":
        return cls(nvars, {})

    @classmethod
    def constant(cls, nvars: int, c) -> "Polynomial":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def variable(cls, nvars: int, i: int) -> "Polynomial":
        if not 0 <= i < nvars:
            raise RingContextError(f"variable index {i} out of range for {nvars} vars")
        mono = tuple(1 if j == i else 0 for j in range(nvars))
        return cls(nvars, {mono: ONE})

    @classmethod
    def linear_form(cls, nvars: int, coeffs: Sequence) -> "Polynomial":
        """Sum of coeffs[i] * var_i; coeffs may be shorter than nvars."""
        terms = {}
        for i, c in enumerate(coeffs):
            c = QQ(c)
            if c:
                mono = tuple(1 if j == i else 0 for j in range(nvars))
                terms[mono] = c
        return cls(nvars, terms)

    # -- basic queries -----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def total_degree(self) -> int:
        """Max term degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    def is_homogeneous(self) -> bool:
        degs = {sum(m) for m in self.terms}
        return len(degs) <= 1

    def homogeneous_components(self) -> dict:
        out: dict[int, dict] = {}
        for m, c in self.terms.items():
            out.setdefault(sum(m), {})[m] = c
        return {d: Polynomial(self.nvars, t) for d, t in sorted(out.items())}

    def bidegree(self):
        """(x-degree, y-degree) if every term shares it, else None.

        Requires an even variable count; the split is first half / second half.
        """
        if self.nvars % 2:
            raise RingContextError("bidegree needs an even variable count")
        n = self.nvars // 2
        seen = None
        for m in self.terms:
            bd = (sum(m[:n]), sum(m[n:]))
            if seen is None:
                seen = bd
            elif seen != bd:
                return None
        return seen

    def coefficient(self, mono: Monomial):
        return self.terms.get(tuple(mono), ZERO)

    def leading_monomial(self, order: MonomialOrder = GREVLEX) -> Monomial:
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        return max(self.terms, key=order.key)

    def leading_coefficient(self, order: MonomialOrder = GREVLEX):
        return self.terms[self.leading_monomial(order)]

    def monic(self, order: MonomialOrder = GREVLEX) -> "Polynomial":
        if not self.terms:
            return self
        lc = self.leading_coefficient(order)
        return self * (ONE / lc)

    # -- arithmetic --------------------------------------------------------

    def _check(self, other: "Polynomial"):
        if self.nvars != other.nvars:
            raise RingContextError(
                f"ring mismatch: {self.nvars} vs {other.nvars} variables"
            )

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            return self + Polynomial.constant(self.nvars, other)
        self._check(other)
        terms = dict(self.terms)
        for m, c in other.terms.items():
            s = terms.get(m, ZERO) + c
            if s:
                terms[m] = s
            else:
                terms.pop(m, None)
        out = Polynomial.__new__(Polynomial)
        out.nvars = self.nvars
        out.terms = terms
        out._hash = None
        return out

    __radd__ = __add__

    def __neg__(self):
        out = Polynomial.__new__(Polynomial)
        out.nvars = self.nvars
        out.terms = {m: -c for m, c in self.terms.items()}
        out._hash = None
        return out

    def __sub__(self, other):
        if not isinstance(other, Polynomial):
            return self - Polynomial.constant(self.nvars, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            c = QQ(other)
            if not c:
                return Polynomial.zero(self.nvars)
            out = Polynomial.__new__(Polynomial)
            out.nvars = self.nvars
            out.terms = {m: c * v for m, v in self.terms.items()}
            out._hash = None
            return out
        self._check(other)
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        terms: dict = {}
        for m1, c1 in a.items():
            for m2, c2 in b.items():
                m = tuple(e1 + e2 for e1, e2 in zip(m1, m2))
                s = terms.get(m, ZERO) + c1 * c2
                if s:
                    terms[m] = s
                else:
                    del terms[m]
        out = Polynomial.__new__(Polynomial)
        out.nvars = self.nvars
        out.terms = terms
        out._hash = None
        return out

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = Polynomial.constant(self.nvars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            if not self.terms:
                return other == 0
            const = (0,) * self.nvars
            return len(self.terms) == 1 and const in self.terms and self.terms[const] == other
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self.terms.items())))
        return self._hash

    def __str__(self):
        return to_string(self)

    def __repr__(self):
        return f"Polynomial({self.nvars}, {to_string(self)!r})"

    # -- calculus / substitution -------------------------------------------

    def evaluate(self, point: Sequence):
        """Exact evaluation at a rational point."""
        if len(point) != self.nvars:
            raise RingContextError("point length != variable count")
        pt = [QQ(v) for v in point]
        total = ZERO
        for m, c in self.terms.items():
            val = c
            for e, v in zip(m, pt):
                if e:
                    val = val * v**e
            total += val
        return total


def variables(nvars: int) -> list:
    return [Polynomial.variable(nvars, i) for i in range(nvars)]


def partial_derivative(f: Polynomial, direction: Sequence) -> Polynomial:
    """Directional derivative sum_i direction[i] * d/dvar_i."""
    if len(direction) != f.nvars:
        raise RingContextError("direction length != variable count")
    terms: dict = {}
    for m, c in f.terms.items():
        for i, d in enumerate(direction):
            if not d or not m[i]:
                continue
            dm = tuple(e - 1 if j == i else e for j, e in enumerate(m))
            s = terms.get(dm, ZERO) + c * m[i] * QQ(d)
            if s:
                terms[dm] = s
            else:
                del terms[dm]
    return Polynomial(f.nvars, terms)


def _monomial_divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def exact_divide_linear(f: Polynomial, ell: Polynomial) -> Polynomial:
    """Divide f by a degree-one polynomial; raise if the division is inexact."""
    if ell.nvars != f.nvars:
        raise RingContextError("divisor lives in a different ring")
    if ell.total_degree() != 1:
        raise ExactDivisionError("divisor must have total degree exactly 1")
    order = GREVLEX
    lm = ell.leading_monomial(order)
    lc = ell.terms[lm]
    rest = [(m, c) for m, c in ell.terms.items() if m != lm]
    num = dict(f.terms)
    quo: dict = {}
    while num:
        m = max(num, key=order.key)
        c = num.pop(m)
        if not _monomial_divides(lm, m):
            raise ExactDivisionError(f"remainder term {m} not divisible")
        qm = tuple(e - d for e, d in zip(m, lm))
        qc = c / lc
        quo[qm] = quo.get(qm, ZERO) + qc
        for rm, rc in rest:
            tm = tuple(e + d for e, d in zip(qm, rm))
            s = num.get(tm, ZERO) - qc * rc
            if s:
                num[tm] = s
            else:
                num.pop(tm, None)
    return Polynomial(f.nvars, quo)


class LinearSubstitution:
    """Substitution var_i -> sum_j M[i][j] var_j with cached image powers.

    The coordinate vector transforms by M: applying the substitution to f
    yields the function v -> f(M v).  Power caches persist across calls, so
    reuse one instance when acting repeatedly with the same matrix.
    """

    def __init__(self, matrix: Sequence[Sequence]):
        rows = [tuple(QQ(e) for e in row) for row in matrix]
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise ValueError("substitution matrix must be square")
        self.nvars = n
        self.rows = rows
        # monomial fast path: every row has at most one nonzero entry
        self._mono = []
        monomial = True
        for row in rows:
            nz = [(j, c) for j, c in enumerate(row) if c]
            if len(nz) == 1:
                self._mono.append(nz[0])
            else:
                monomial = False
                break
        self.is_monomial = monomial
        if not monomial:
            self._images = [
                Polynomial(n, {tuple(1 if k == j else 0 for k in range(n)): c
                               for j, c in enumerate(row) if c})
                for row in rows
            ]
            self._pow: list[dict] = [dict() for _ in range(n)]

    def __call__(self, f: Polynomial) -> Polynomial:
        if f.nvars != self.nvars:
            raise RingContextError("polynomial/matrix size mismatch")
        n = self.nvars
        if self.is_monomial:
            table = self._mono
            terms: dict = {}
            for m, c in f.terms.items():
                new = [0] * n
                coeff = c
                for i, e in enumerate(m):
                    if e:
                        j, scale = table[i]
                        new[j] += e
                        if scale != ONE:
                            coeff = coeff * scale**e
                key = tuple(new)
                s = terms.get(key, ZERO) + coeff
                if s:
                    terms[key] = s
                else:
                    del terms[key]
            return Polynomial(n, terms)
        acc = Polynomial.zero(n)
        for m, c in f.terms.items():
            prod = Polynomial.constant(n, c)
            for i, e in enumerate(m):
                if e:
                    prod = prod * self._power(i, e)
            acc = acc + prod
        return acc

    def _power(self, i: int, e: int) -> Polynomial:
        cache = self._pow[i]
        got = cache.get(e)
        if got is None:
            if e == 1:
                got = self._images[i]
            else:
                got = self._power(i, e - 1) * self._images[i]
            cache[e] = got
        return got


def apply_linear_change(f: Polynomial, matrix: Sequence[Sequence]) -> Polynomial:
    """Invertible change of variables; raises ValueError on singular input."""
    from .linalg import mat_det

    rows = tuple(tuple(QQ(e) for e in row) for row in matrix)
    if len(rows) != f.nvars or any(len(r) != f.nvars for r in rows):
        raise RingContextError("matrix size != variable count")
    if not mat_det(rows):
        raise ValueError("singular change of variables")
    return LinearSubstitution(rows)(f)


# ---------------------------------------------------------------------------
# monomial enumeration
# ---------------------------------------------------------------------------


def monomials_of_degree(nvars: int, degree: int) -> Iterator[Monomial]:
    """All exponent vectors of the given total degree, deterministic order."""
    if degree < 0:
        return
    if nvars == 0:
        if degree == 0:
            yield ()
        return
    if nvars == 1:
        yield (degree,)
        return
    for e in range(degree, -1, -1):
        for rest in monomials_of_degree(nvars - 1, degree - e):
            yield (e,) + rest


def count_monomials(nvars: int, degree: int) -> int:
    if degree < 0:
        return 0
    return math.comb(degree + nvars - 1, nvars - 1)


def monomials_of_bidegree(n: int, a: int, b: int) -> Iterator[Monomial]:
    """Exponent vectors in 2n variables with x-degree a and y-degree b."""
    for mx in monomials_of_degree(n, a):
        for my in monomials_of_degree(n, b):
            yield mx + my


# ---------------------------------------------------------------------------
# text form
# ---------------------------------------------------------------------------


def default_names(nvars: int) -> list[str]:
    """x1..xn,y1..yn for even rings; trailing t1.. for auxiliary variables."""
    n = nvars // 2
    names = [f"x{i + 1}" for i in range(n)] + [f"y{i + 1}" for i in range(n)]
    for k in range(nvars - 2 * n):
        names.append(f"t{k + 1}" if nvars - 2 * n > 1 else "t")
    return names


def _coeff_str(c) -> str:
    return str(c)


def to_string(f: Polynomial, order: MonomialOrder = GREVLEX,
              names: Sequence[str] | None = None) -> str:
    if not f.terms:
        return "0"
    names = list(names) if names is not None else default_names(f.nvars)
    parts = []
    for m in sorted(f.terms, key=order.key, reverse=True):
        c = f.terms[m]
        factors = [f"{names[i]}^{e}" if e > 1 else names[i]
                   for i, e in enumerate(m) if e]
        mono = "*".join(factors)
        mag = c if c > 0 else -c
        if not mono:
            body = _coeff_str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{_coeff_str(mag)}*{mono}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts)


_NUM_RE = re.compile(r"^\d+(/\d+)?$")
_VAR_RE = re.compile(r"^([A-Za-z][A-Za-z0-9_]*)(?:\^(\d+))?$")


def from_string(text: str, nvars: int,
                names: Sequence[str] | None = None) -> Polynomial:
    """Parse the rendering produced by to_string (signs, '*', '^', 'p/q')."""
    names = list(names) if names is not None else default_names(nvars)
    index = {n: i for i, n in enumerate(names)}
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty polynomial text")
    if s == "0":
        return Polynomial.zero(nvars)
    chunks = re.findall(r"[+-]?[^+-]+", s)
    if "".join(chunks) != s:
        raise ValueError(f"cannot tokenize {text!r}")
    terms: dict = {}
    for chunk in chunks:
        sign = ONE
        if chunk[0] == "+":
            chunk = chunk[1:]
        elif chunk[0] == "-":
            sign = -ONE
            chunk = chunk[1:]
        if not chunk:
            raise ValueError(f"dangling sign in {text!r}")
        coeff = sign
        mono = [0] * nvars
        for factor in chunk.split("*"):
            if _NUM_RE.match(factor):
                coeff = coeff * QQ(factor)
                continue
            mv = _VAR_RE.match(factor)
            if not mv or mv.group(1) not in index:
                raise ValueError(f"bad factor {factor!r} in {text!r}")
            mono[index[mv.group(1)]] += int(mv.group(2) or 1)
        key = tuple(mono)
        s2 = terms.get(key, ZERO) + coeff
        if s2:
            terms[key] = s2
        else:
            terms.pop(key, None)
    return Polynomial(nvars, terms)

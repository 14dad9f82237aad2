"""Exact arithmetic core: sparse multivariate polynomials over Q, a normalized
fraction field, truncated power series, and an exact linear solver.

Everything is built on `fractions.Fraction`, so all computations are exact.
The polynomial ring has a fixed indeterminate universe

    a = alpha (Jack parameter), b = beta, z = zeta, e = eta

represented by length-4 exponent tuples; polynomials that do not mention a
variable simply carry exponent 0 for it.  Values are immutable after
construction and safe to share between threads.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction

Rational = Fraction

VARS = ("a", "b", "z", "e")
NVARS = len(VARS)
_VAR_INDEX = {name: i for i, name in enumerate(VARS)}
_ZERO_EXP = (0,) * NVARS


def _as_fraction(x):
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected int or Fraction, got {type(x).__name__}")


def _term_key(exp):
    # graded lexicographic: total degree first, then exponent tuple
    return (sum(exp), exp)


class MultiPoly:
    """Sparse polynomial in (a, b, z, e) with Fraction coefficients.

    Terms are stored as a dict {exponent tuple: nonzero Fraction}.  The dict is
    canonical (no zero coefficients, unique exponents), so `==` is exact
    polynomial equality.  Serialization orders terms graded-lexicographically,
    largest term first.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = dict(terms) if terms else {}

    # -- constructors -------------------------------------------------------

    @staticmethod
    def const(c):
        c = _as_fraction(c)
        return MultiPoly({_ZERO_EXP: c} if c else {})

    @staticmethod
    def var(name, power=1):
        exp = [0] * NVARS
        exp[_VAR_INDEX[name]] = power
        return MultiPoly({tuple(exp): Fraction(1)})

    # -- predicates ----------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def is_const(self):
        return not self.terms or (len(self.terms) == 1 and _ZERO_EXP in self.terms)

    def const_value(self):
        if not self.is_const():
            raise ValueError("not a constant polynomial")
        return self.terms.get(_ZERO_EXP, Fraction(0))

    def is_monomial(self):
        return len(self.terms) <= 1

    def variables(self):
        """Indices of variables actually occurring."""
        used = set()
        for exp in self.terms:
            for i in range(NVARS):
                if exp[i]:
                    used.add(i)
        return used

    def degree_in(self, i):
        return max((exp[i] for exp in self.terms), default=0)

    def total_degree(self):
        return max((sum(exp) for exp in self.terms), default=0)

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, MultiPoly):
            other = MultiPoly.const(other)
        out = dict(self.terms)
        for exp, c in other.terms.items():
            s = out.get(exp, 0) + c
            if s:
                out[exp] = s
            else:
                out.pop(exp, None)
        return MultiPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, MultiPoly):
            other = MultiPoly.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return MultiPoly.const(other) + (-self)

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            c = _as_fraction(other)
            if not c:
                return MultiPoly()
            return MultiPoly({e: c * v for e, v in self.terms.items()})
        if len(self.terms) > len(other.terms):
            self, other = other, self
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = (e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2], e1[3] + e2[3])
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    del out[e]
        return MultiPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = MultiPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == MultiPoly.const(other).terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    # -- structure -----------------------------------------------------------

    def content(self):
        """Rational content: gcd of numerators over lcm of denominators,
        signed so that content * primitive-part == self with the leading
        coefficient of the primitive part positive."""
        if not self.terms:
            return Fraction(0)
        num_gcd = 0
        den_lcm = 1
        for c in self.terms.values():
            num_gcd = math.gcd(num_gcd, abs(c.numerator))
            den_lcm = den_lcm * c.denominator // math.gcd(den_lcm, c.denominator)
        cont = Fraction(num_gcd, den_lcm)
        if self.leading_coefficient() < 0:
            cont = -cont
        return cont

    def leading_term(self):
        if not self.terms:
            return _ZERO_EXP, Fraction(0)
        exp = max(self.terms, key=_term_key)
        return exp, self.terms[exp]

    def leading_coefficient(self):
        return self.leading_term()[1]

    def monomial_gcd(self):
        """Componentwise min of exponent vectors (the largest common monomial)."""
        if not self.terms:
            return _ZERO_EXP
        mins = [None] * NVARS
        for exp in self.terms:
            for i in range(NVARS):
                if mins[i] is None or exp[i] < mins[i]:
                    mins[i] = exp[i]
        return tuple(mins)

    def shift_down(self, mono):
        """Divide by the monomial with exponent vector `mono` (must divide)."""
        if mono == _ZERO_EXP:
            return self
        out = {}
        for exp, c in self.terms.items():
            new = tuple(exp[i] - mono[i] for i in range(NVARS))
            if any(x < 0 for x in new):
                raise ValueError("monomial does not divide polynomial")
            out[new] = c
        return MultiPoly(out)

    def divide_exact(self, divisor):
        """Exact polynomial division; returns the quotient or None if the
        division leaves a remainder."""
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        if divisor.is_const():
            inv = 1 / divisor.const_value()
            return self * inv
        rem = dict(self.terms)
        lt_exp, lt_coef = divisor.leading_term()
        quot = {}
        while rem:
            rexp = max(rem, key=_term_key)
            qexp = tuple(rexp[i] - lt_exp[i] for i in range(NVARS))
            if any(x < 0 for x in qexp):
                return None
            qcoef = rem[rexp] / lt_coef
            quot[qexp] = qcoef
            for dexp, dcoef in divisor.terms.items():
                e = tuple(qexp[i] + dexp[i] for i in range(NVARS))
                s = rem.get(e, 0) - qcoef * dcoef
                if s:
                    rem[e] = s
                else:
                    rem.pop(e, None)
        return MultiPoly(quot)

    def substitute(self, values):
        """Evaluate with `values` mapping variable names to FieldElem,
        MultiPoly, Fraction or int.  Unmentioned variables stay symbolic."""
        subs = {}
        for name, val in values.items():
            i = _VAR_INDEX[name]
            if isinstance(val, FieldElem):
                subs[i] = val
            elif isinstance(val, MultiPoly):
                subs[i] = FieldElem(val, MultiPoly.const(1))
            else:
                subs[i] = FieldElem.const(val)
        out = FieldElem.const(0)
        for exp, c in self.terms.items():
            rest = [0] * NVARS
            factor = FieldElem.const(c)
            for i in range(NVARS):
                if exp[i] and i in subs:
                    factor = factor * subs[i] ** exp[i]
                else:
                    rest[i] = exp[i]
            out = out + factor * FieldElem.from_poly(MultiPoly({tuple(rest): Fraction(1)}))
        return out

    # -- serialization -------------------------------------------------------

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: _term_key(kv[0]), reverse=True)

    def text(self):
        """Canonical text: graded-lex ordered terms `coef*a^i*b^j*z^k*e^l`
        with zero exponents omitted; integer coefficients in decimal."""
        if not self.terms:
            return "0"
        parts = []
        for exp, c in self.sorted_terms():
            if c.denominator != 1:
                raise ValueError("canonical text requires integer coefficients")
            body = "".join(f"*{VARS[i]}^{exp[i]}" for i in range(NVARS) if exp[i])
            parts.append(f"{c.numerator}{body}")
        return "+".join(parts)

    @staticmethod
    def from_text(s):
        s = s.strip()
        if s == "0":
            return MultiPoly()
        terms = {}
        for chunk in s.replace("+-", "+-").split("+"):
            pieces = chunk.split("*")
            coef = Fraction(int(pieces[0]))
            exp = [0] * NVARS
            for piece in pieces[1:]:
                name, _, power = piece.partition("^")
                exp[_VAR_INDEX[name]] += int(power)
            key = tuple(exp)
            terms[key] = terms.get(key, 0) + coef
        return MultiPoly({e: c for e, c in terms.items() if c})

    def __repr__(self):
        return f"MultiPoly({self.pretty()})"

    def pretty(self):
        if not self.terms:
            return "0"
        parts = []
        for exp, c in self.sorted_terms():
            body = "*".join(
                VARS[i] if exp[i] == 1 else f"{VARS[i]}^{exp[i]}"
                for i in range(NVARS)
                if exp[i]
            )
            if not body:
                parts.append(str(c))
            elif c == 1:
                parts.append(body)
            elif c == -1:
                parts.append(f"-{body}")
            else:
                parts.append(f"{c}*{body}")
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out


# -- polynomial gcd ----------------------------------------------------------

def _poly_gcd(p, q):
    """Heuristic gcd over Q[a,b,z,e]: rational content, common monomial part,
    then (when both sides still share variables) a primitive subresultant PRS
    in the busiest variable.  The result always divides both inputs; it is not
    guaranteed to be the full gcd in pathological multivariate cases, which is
    fine because FieldElem equality never relies on canonical form alone."""
    if p.is_zero():
        return q
    if q.is_zero():
        return p
    cont = Fraction(
        math.gcd(p.content().numerator, q.content().numerator),
        math.lcm(p.content().denominator, q.content().denominator),
    )
    mono = tuple(min(a, b) for a, b in zip(p.monomial_gcd(), q.monomial_gcd()))
    pp = p.shift_down(p.monomial_gcd()) * (1 / p.content())
    qq = q.shift_down(q.monomial_gcd()) * (1 / q.content())
    base = MultiPoly({mono: cont})
    if pp.is_const() or qq.is_const():
        return base
    shared = pp.variables() & qq.variables()
    if not shared:
        return base
    # quick exits: one side divides the other
    if qq.divide_exact(pp) is not None:
        return base * pp
    if pp.divide_exact(qq) is not None:
        return base * qq
    if len(pp.variables() | qq.variables()) == 1:
        g = _uni_int_gcd(pp, qq, next(iter(shared)))
        return base * g
    main = max(shared, key=lambda i: max(pp.degree_in(i), qq.degree_in(i)))
    g = _prs_gcd(pp, qq, main)
    return base * g


def _uni_int_gcd(p, q, var):
    """Euclidean gcd of two primitive univariate integer polynomials, done on
    plain int coefficient lists (the common case: one Jack parameter)."""

    def to_list(poly):
        out = [0] * (poly.degree_in(var) + 1)
        for exp, c in poly.terms.items():
            out[exp[var]] = c.numerator
        return out

    a = to_list(p)
    b = to_list(q)

    def prim(u):
        g = 0
        for c in u:
            g = math.gcd(g, c)
        if g > 1:
            u = [c // g for c in u]
        if u and u[-1] < 0:
            u = [-c for c in u]
        return u

    while b and any(b):
        # pseudo-remainder of a by b, kept primitive
        db = len(b) - 1
        lb = b[-1]
        r = list(a)
        while len(r) - 1 >= db:
            if r[-1] == 0:
                r.pop()
                continue
            lead = r[-1]
            r = [c * lb for c in r]
            shift = len(r) - 1 - db
            for j in range(db + 1):
                r[shift + j] -= lead * b[j]
            while r and r[-1] == 0:
                r.pop()
        a, b = b, prim(r)
    g = a
    exp = [0] * NVARS
    out = MultiPoly()
    for k, c in enumerate(g):
        if c:
            e = list(exp)
            e[var] = k
            out = out + MultiPoly({tuple(e): Fraction(c)})
    return out


def _split_by_var(p, i):
    """View p as a univariate polynomial in variable i: list of MultiPoly
    coefficients indexed by the power of variable i."""
    deg = p.degree_in(i)
    coeffs = [dict() for _ in range(deg + 1)]
    for exp, c in p.terms.items():
        rest = list(exp)
        k = rest[i]
        rest[i] = 0
        coeffs[k][tuple(rest)] = c
    return [MultiPoly(d) for d in coeffs]


def _join_by_var(coeffs, i):
    out = {}
    for k, poly in enumerate(coeffs):
        for exp, c in poly.terms.items():
            e = list(exp)
            e[i] = k
            out[tuple(e)] = c
    return MultiPoly(out)


def _uni_mul(u, v):
    out = [MultiPoly() for _ in range(len(u) + len(v) - 1)]
    for i, a in enumerate(u):
        if a.is_zero():
            continue
        for j, b in enumerate(v):
            if b.is_zero():
                continue
            out[i + j] = out[i + j] + a * b
    return out


def _uni_trim(u):
    while u and u[-1].is_zero():
        u.pop()
    return u


def _uni_pseudo_rem(u, v):
    """Pseudo-remainder of u by v (univariate with MultiPoly coefficients)."""
    u = list(u)
    dv = len(v) - 1
    lv = v[-1]
    while len(u) - 1 >= dv and _uni_trim(u):
        du = len(u) - 1
        lead = u[-1]
        u = [c * lv for c in u]
        shift = du - dv
        for j in range(dv + 1):
            u[shift + j] = u[shift + j] - lead * v[j]
        _uni_trim(u)
        if len(u) - 1 == du:  # defensive; cancellation must lower the degree
            raise ArithmeticError("pseudo-division failed to reduce degree")
    return u


def _uni_content(u):
    g = MultiPoly()
    for c in u:
        g = _poly_gcd(g, c)
        if g.is_const() and not g.is_zero():
            break
    return g


def _prs_gcd(p, q, main):
    """Primitive PRS gcd of p, q in the main variable; coefficient gcds are
    computed recursively through _poly_gcd."""
    u = _split_by_var(p, main)
    v = _split_by_var(q, main)
    if len(u) < len(v):
        u, v = v, u
    cu = _uni_content(u)
    cv = _uni_content(v)
    cont = _poly_gcd(cu, cv)
    u = [c.divide_exact(cu) for c in u]
    v = [c.divide_exact(cv) for c in v]
    while True:
        r = _uni_pseudo_rem(u, v)
        if not r:
            g = _join_by_var(v, main)
            g = g * (1 / g.content())
            result = MultiPoly.const(1) * cont * g
            # gcd candidate must divide both originals; otherwise fall back
            if p.divide_exact(result) is not None and q.divide_exact(result) is not None:
                return result
            return cont
        cr = _uni_content(r)
        u, v = v, [c.divide_exact(cr) for c in r]
        if len(v) == 1:
            return cont


class FieldElem:
    """Element of the fraction field Q(a, b, z, e), kept reduced.

    The reduced representative has integer-coefficient numerator and
    denominator with no common rational, monomial or (heuristically found)
    polynomial factor, and a positive leading denominator coefficient.
    Equality is decided by cross-multiplication, never by canonical form.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den, _normalized=False):
        if _normalized:
            self.num = num
            self.den = den
            return
        if den.is_zero():
            raise ZeroDivisionError("zero denominator in field element")
        if num.is_zero():
            self.num = MultiPoly()
            self.den = MultiPoly.const(1)
            return
        mono_n = num.monomial_gcd()
        mono_d = den.monomial_gcd()
        common = tuple(min(a, b) for a, b in zip(mono_n, mono_d))
        if common != _ZERO_EXP:
            num = num.shift_down(common)
            den = den.shift_down(common)
        if not den.is_const() and not num.is_const():
            q = num.divide_exact(den)
            if q is not None:
                num, den = q, MultiPoly.const(1)
            else:
                g = _poly_gcd(num, den)
                if not g.is_const():
                    num = num.divide_exact(g)
                    den = den.divide_exact(g)
        # rational normalization: integer coefficients on both sides, overall
        # scale in lowest terms, positive leading denominator coefficient
        cn = num.content()
        cd = den.content()
        ratio = cn / cd  # Fraction; denominator always positive
        num = num * (Fraction(ratio.numerator) / cn)
        den = den * (Fraction(ratio.denominator) / cd)
        self.num = num
        self.den = den

    # -- constructors --------------------------------------------------------

    @staticmethod
    def const(c):
        c = _as_fraction(c)
        return FieldElem(
            MultiPoly({_ZERO_EXP: Fraction(c.numerator)} if c else {}),
            MultiPoly.const(c.denominator),
            _normalized=True,
        )

    @staticmethod
    def var(name):
        return FieldElem(MultiPoly.var(name), MultiPoly.const(1), _normalized=True)

    @staticmethod
    def from_poly(p):
        return FieldElem(p, MultiPoly.const(1))

    @staticmethod
    def coerce(x):
        if isinstance(x, FieldElem):
            return x
        if isinstance(x, MultiPoly):
            return FieldElem.from_poly(x)
        return FieldElem.const(x)

    # -- predicates ----------------------------------------------------------

    def is_zero(self):
        return self.num.is_zero()

    def is_rational(self):
        return self.num.is_const() and self.den.is_const()

    def as_fraction(self):
        if not self.is_rational():
            raise ValueError(f"not a rational constant: {self.pretty()}")
        return self.num.const_value() / self.den.const_value()

    def as_poly(self):
        """Return the numerator when the denominator is a (rational) constant,
        scaled accordingly; raise otherwise."""
        if not self.den.is_const():
            raise ValueError(f"not polynomial: {self.pretty()}")
        return self.num * (1 / self.den.const_value())

    def is_integer_poly(self):
        """True when the value is a polynomial with integer coefficients."""
        if not self.den.is_const():
            return False
        d = self.den.const_value()
        return all((c / d).denominator == 1 for c in self.num.terms.values())

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other):
        other = FieldElem.coerce(other)
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        if self.den == other.den:
            return FieldElem(self.num + other.num, self.den)
        return FieldElem(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return FieldElem(-self.num, self.den, _normalized=True)

    def __sub__(self, other):
        return self + (-FieldElem.coerce(other))

    def __rsub__(self, other):
        return FieldElem.coerce(other) + (-self)

    def __mul__(self, other):
        other = FieldElem.coerce(other)
        if self.is_zero() or other.is_zero():
            return FieldElem.const(0)
        return FieldElem(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = FieldElem.coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by zero field element")
        return FieldElem(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return FieldElem.coerce(other) / self

    def __pow__(self, n):
        if n < 0:
            return FieldElem.const(1) / self ** (-n)
        return FieldElem(self.num ** n, self.den ** n)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, MultiPoly)):
            other = FieldElem.coerce(other)
        if not isinstance(other, FieldElem):
            return NotImplemented
        return self.num * other.den == other.num * self.den

    __hash__ = None  # not canonical enough to hash; compare by value instead

    def substitute(self, values):
        return self.num.substitute(values) / self.den.substitute(values)

    # -- serialization -------------------------------------------------------

    def text(self):
        return f"{self.num.text()}/{self.den.text()}"

    @staticmethod
    def from_text(s):
        num, _, den = s.partition("/")
        return FieldElem(MultiPoly.from_text(num), MultiPoly.from_text(den))

    def pretty(self):
        if self.den == MultiPoly.const(1):
            return self.num.pretty()
        den = self.den.pretty()
        if len(self.den.terms) > 1:
            den = f"({den})"
        num = self.num.pretty()
        if len(self.num.terms) > 1:
            num = f"({num})"
        return f"{num}/{den}"

    def __repr__(self):
        return f"FieldElem({self.pretty()})"


ZERO = FieldElem.const(0)
ONE = FieldElem.const(1)
ALPHA = FieldElem.var("a")
BETA = FieldElem.var("b")
ZETA = FieldElem.var("z")
ETA = FieldElem.var("e")


def fe(x):
    return FieldElem.coerce(x)


def binomial(x, k):
    """Falling-factorial binomial x(x-1)...(x-k+1)/k! for FieldElem, Fraction
    or integer x and integer k >= 0."""
    if k < 0:
        raise ValueError("binomial needs k >= 0")
    if isinstance(x, int) or isinstance(x, Fraction):
        num = Fraction(1)
        for i in range(k):
            num *= x - i
        return num / math.factorial(k)
    out = ONE
    for i in range(k):
        out = out * (x - FieldElem.const(i))
    return out / FieldElem.const(math.factorial(k))


# -- truncated power series ---------------------------------------------------

class TruncSeries:
    """Truncated power series sum_{k=0..N} c_k t^(offset+k) with FieldElem
    coefficients; offset in {-1, 0, +1} supports series starting at t^-1."""

    __slots__ = ("offset", "coeffs")

    def __init__(self, coeffs, offset=0):
        if offset not in (-1, 0, 1):
            raise ValueError("offset must be -1, 0 or +1")
        self.offset = offset
        self.coeffs = [FieldElem.coerce(c) for c in coeffs]

    @property
    def order(self):
        return len(self.coeffs) - 1

    def __getitem__(self, k):
        return self.coeffs[k]

    def __eq__(self, other):
        return (
            isinstance(other, TruncSeries)
            and self.offset == other.offset
            and len(self.coeffs) == len(other.coeffs)
            and all(a == b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __add__(self, other):
        if self.offset != other.offset:
            raise ValueError("offset mismatch in series addition")
        n = min(len(self.coeffs), len(other.coeffs))
        return TruncSeries([self.coeffs[i] + other.coeffs[i] for i in range(n)], self.offset)

    def __sub__(self, other):
        if self.offset != other.offset:
            raise ValueError("offset mismatch in series subtraction")
        n = min(len(self.coeffs), len(other.coeffs))
        return TruncSeries([self.coeffs[i] - other.coeffs[i] for i in range(n)], self.offset)

    def __mul__(self, other):
        if isinstance(other, TruncSeries):
            n = min(len(self.coeffs), len(other.coeffs))
            out = [ZERO] * n
            for i, a in enumerate(self.coeffs[:n]):
                if a.is_zero():
                    continue
                for j in range(n - i):
                    b = other.coeffs[j]
                    if not b.is_zero():
                        out[i + j] = out[i + j] + a * b
            return TruncSeries(out, self.offset + other.offset)
        return TruncSeries([c * other for c in self.coeffs], self.offset)

    def truncate(self, order):
        return TruncSeries(self.coeffs[: order + 1], self.offset)


def series_reciprocal(s):
    """Multiplicative inverse: s * result = 1 + O(t^(N+1)).  Requires the
    leading coefficient c_0 to be invertible (nonzero)."""
    if not s.coeffs or s.coeffs[0].is_zero():
        raise ZeroDivisionError("series has no invertible constant term")
    c0inv = ONE / s.coeffs[0]
    out = [c0inv]
    for n in range(1, len(s.coeffs)):
        acc = ZERO
        for k in range(1, n + 1):
            if not s.coeffs[k].is_zero():
                acc = acc + s.coeffs[k] * out[n - k]
        out.append(-c0inv * acc)
    return TruncSeries(out, -s.offset)


def series_compose(outer, inner):
    """outer(inner(t)) truncated to the shorter order.  `inner` must have zero
    constant term and offset 0."""
    if inner.offset != 0 or (inner.coeffs and not inner.coeffs[0].is_zero()):
        raise ValueError("inner series must vanish at 0")
    n = min(len(outer.coeffs), len(inner.coeffs)) - 1
    result = [ZERO] * (n + 1)
    power = [ONE] + [ZERO] * n  # inner^k, built incrementally
    result[0] = outer.coeffs[0]
    for k in range(1, n + 1):
        new = [ZERO] * (n + 1)
        for i in range(n + 1):
            if power[i].is_zero():
                continue
            for j in range(1, n + 1 - i):
                c = inner.coeffs[j] if j < len(inner.coeffs) else ZERO
                if not c.is_zero():
                    new[i + j] = new[i + j] + power[i] * c
        power = new
        ck = outer.coeffs[k]
        if not ck.is_zero():
            for i in range(n + 1):
                if not power[i].is_zero():
                    result[i] = result[i] + ck * power[i]
    return TruncSeries(result, 0)


def series_comp_inverse(s):
    """Compositional inverse of s(t) = t + c_2 t^2 + ...: the unique g with
    s(g(u)) = u + O(u^(N+1)).  Errors unless the linear coefficient is 1 and
    the constant term 0 (after factoring the offset, which must be 0)."""
    if s.offset != 0:
        raise ValueError("compositional inverse expects offset 0")
    if len(s.coeffs) < 2 or not s.coeffs[0].is_zero() or s.coeffs[1] != ONE:
        raise ValueError("series must have shape t + c2*t^2 + ... (unit linear coefficient)")
    n = s.order
    g = [ZERO, ONE] + [ZERO] * (n - 1)
    for m in range(2, n + 1):
        # coefficient of u^m in s(g(u)) using g known up to degree m-1
        comp = series_compose(s.truncate(m), TruncSeries(g[: m] + [ZERO], 0))
        g[m] = -comp.coeffs[m]
    return TruncSeries(g, 0)


# -- exact linear solver -------------------------------------------------------

class LinsolveError(Exception):
    """Structured failure of the exact linear solver."""

    def __init__(self, kind, index, message):
        self.kind = kind  # "inconsistent" or "underdetermined"
        self.index = index  # offending row (inconsistent) or free column
        super().__init__(message)


class SolveReport:
    """Unique solution of a (possibly overdetermined) exact linear system,
    together with the residual-check certificate."""

    __slots__ = ("solution", "residual_checked", "rank")

    def __init__(self, solution, rank):
        self.solution = solution
        self.residual_checked = False
        self.rank = rank


def linsolve(A, b):
    """Solve A*x = b exactly over Q(a,b,z,e).

    A is a list of rows of FieldElem (or coercibles), b the right-hand column.
    The system may be overdetermined.  Returns a SolveReport whose solution is
    the unique x; every residual row is verified to reduce to zero.  Raises
    LinsolveError("inconsistent", row, ...) or
    LinsolveError("underdetermined", column, ...) otherwise.

    Elimination is fraction-free (Bareiss) over polynomial rows obtained by
    clearing denominators, with column pivoting by minimal term count.
    """
    m = len(A)
    n = len(A[0]) if m else 0
    if any(len(row) != n for row in A) or len(b) != m:
        raise ValueError("ragged linear system")
    orig_A = [[FieldElem.coerce(x) for x in row] for row in A]
    orig_b = [FieldElem.coerce(x) for x in b]

    # clear denominators row by row: multiply through by the product of the
    # distinct denominators of the row (cheap; duplicates are deduped by text)
    rows = []
    for i in range(m):
        entries = orig_A[i] + [orig_b[i]]
        dens = {}
        for x in entries:
            if not x.den.is_const():
                dens[x.den.text()] = x.den
        clear = MultiPoly.const(1)
        for d in dens.values():
            clear = clear * d
        cleared = []
        for x in entries:
            val = FieldElem(x.num * clear, x.den)
            cleared.append(val.as_poly())
        # scale to integer coefficients
        cont = Fraction(0)
        for p in cleared:
            c = p.content()
            cont = Fraction(
                math.gcd(cont.numerator, abs(c.numerator)),
                math.lcm(cont.denominator, c.denominator) if c else cont.denominator,
            )
        if cont:
            cleared = [p * (1 / cont) for p in cleared]
        rows.append(cleared)

    col_of = list(range(n))  # column permutation (solver column -> input column)
    piv_rows = []
    prev_pivot = MultiPoly.const(1)
    rank = 0
    work = rows
    for col in range(n):
        # choose pivot: among rows >= rank with a nonzero entry in any
        # remaining column, pick minimal term count (column pivoting)
        best = None
        for j in range(col, n):
            for i in range(rank, m):
                entry = work[i][j]
                if not entry.is_zero():
                    size = len(entry.terms)
                    if best is None or size < best[0]:
                        best = (size, i, j)
            if best is not None and best[0] == 1:
                break
        if best is None:
            # no pivot anywhere: remaining columns are free
            raise LinsolveError(
                "underdetermined",
                col_of[col],
                f"rank {rank} < unknowns {n}; free column {col_of[col]}",
            )
        _, pi, pj = best
        if pj != col:
            for row in work:
                row[pj], row[col] = row[col], row[pj]
            col_of[pj], col_of[col] = col_of[col], col_of[pj]
        if pi != rank:
            work[pi], work[rank] = work[rank], work[pi]
        pivot = work[rank][col]
        for i in range(rank + 1, m):
            lower = work[i][col]
            for j in range(col + 1, n + 1):
                val = pivot * work[i][j] - lower * work[rank][j]
                q = val.divide_exact(prev_pivot)
                if q is None:  # Bareiss guarantees divisibility; guard anyway
                    raise ArithmeticError("fraction-free elimination lost exact divisibility")
                work[i][j] = q
            work[i][col] = MultiPoly()
        piv_rows.append(rank)
        prev_pivot = pivot
        rank += 1
        if rank == m:
            break

    if rank < n:
        raise LinsolveError(
            "underdetermined", col_of[rank], f"rank {rank} < unknowns {n}"
        )
    # inconsistency: any zero row with nonzero rhs
    for i in range(rank, m):
        if all(work[i][j].is_zero() for j in range(n)) and not work[i][n].is_zero():
            raise LinsolveError("inconsistent", i, f"residual row {i} is 0 = nonzero")

    # back substitution over the field
    x = [None] * n
    for r in range(n - 1, -1, -1):
        acc = FieldElem.from_poly(work[r][n])
        for j in range(r + 1, n):
            if not work[r][j].is_zero():
                acc = acc - FieldElem.from_poly(work[r][j]) * x[j]
        x[r] = acc / FieldElem.from_poly(work[r][r])
    solution = [None] * n
    for solver_col in range(n):
        solution[col_of[solver_col]] = x[solver_col]

    report = SolveReport(solution, rank)
    # certificate: every original row reduces to zero on the solution
    for i in range(m):
        acc = ZERO
        for j in range(n):
            if not orig_A[i][j].is_zero():
                acc = acc + orig_A[i][j] * solution[j]
        if acc != orig_b[i]:
            raise LinsolveError("inconsistent", i, f"row {i} does not vanish on solution")
    report.residual_checked = True
    return report

"""Interlacing corners of (anisotropic) Young diagrams, the transition
measure, its moments, Boolean cumulants and free cumulants, the conversion
formulas between the three families, and the expansion of cumulant shifts
under adding one node.

The profile of a diagram is encoded by its interlacing corner contents
x_1 < y_1 < ... < y_{d-1} < x_d, built from the conjugate partition through

    x_k = lam'_k zeta + (k-1) eta,   y_k = lam'_k zeta + k eta,  x_d = lam_1 eta

(with (zeta, eta) = (-1/alpha, 1) in alpha mode), omitting every coincident
pair x_i = y_{i-1}.  The moment generating series of the transition measure is
the rising-factorial product over diagram nodes; its reciprocal generates the
Boolean cumulants and its compositional inverse the free cumulants.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .algebra import (
    ONE,
    ZERO,
    FieldElem,
    MultiPoly,
    TruncSeries,
    binomial,
    series_comp_inverse,
    series_reciprocal,
)
from .alphabets import SignedAlphabet
from .jack import pieri_row
from .modes import Mode
from .partitions import Partition, enumerate_partitions, stats


def _root_pair(mode):
    if mode.kind == "zeta_eta":
        return mode.zeta, mode.eta
    return FieldElem.const(-1) / mode.alpha, ONE


@dataclass
class Corners:
    """Interlacing corner contents; len(x) = len(y) + 1 and sum x = sum y."""

    lam: Partition
    mode: Mode
    x: list
    y: list

    def alphabet(self):
        """The signed alphabet inside-corners minus outside-corners."""
        return SignedAlphabet(self.x, self.y)


def corners(lam, mode=None):
    mode = mode or Mode.symbolic()
    lam = Partition(lam)
    zeta, eta = _root_pair(mode)
    conj = lam.conjugate()
    d = lam[0] + 1 if lam else 1
    xs = [conj[k - 1] * zeta + (k - 1) * eta for k in range(1, d)]
    xs.append((lam[0] if lam else 0) * eta)
    ys = [conj[k - 1] * zeta + k * eta for k in range(1, d)]
    keep_x = [True] * len(xs)
    keep_y = [True] * len(ys)
    for i in range(1, len(xs)):
        if xs[i] == ys[i - 1]:
            keep_x[i] = False
            keep_y[i - 1] = False
    x = [v for v, k in zip(xs, keep_x) if k]
    y = [v for v, k in zip(ys, keep_y) if k]
    center = ZERO
    for v in x:
        center = center + v
    for v in y:
        center = center - v
    assert center.is_zero(), f"corner center of {lam} is not 0"
    return Corners(lam=lam, mode=mode, x=x, y=y)


def content_alphabet(lam, mode=None):
    """The finite alphabet of node contents (i-1)*zeta + (j-1)*eta."""
    mode = mode or Mode.symbolic()
    lam = Partition(lam)
    zeta, eta = _root_pair(mode)
    return SignedAlphabet([(i - 1) * zeta + (j - 1) * eta for (i, j) in lam.nodes()])


@dataclass
class CumulantVector:
    """values[k] is the k-th moment / Boolean cumulant / free cumulant;
    values[0] is 1 by the generating-series convention."""

    kind: str  # "M" | "B" | "R"
    lam: Partition
    values: list

    def __getitem__(self, k):
        return self.values[k]

    @property
    def order(self):
        return len(self.values) - 1

    def to_json(self):
        return {
            "lambda": self.lam.text() if self.lam is not None else None,
            "kind": self.kind,
            "values": [v.text() for v in self.values[1:]],
        }


def moment_series(lam, N, mode=None):
    """Moments M_0..M_N from the rising-factorial product over nodes

    z*M(z) = prod (1-(c+zeta+eta)w)(1-cw) / ((1-(c+zeta)w)(1-(c+eta)w)),

    c the node content, w = 1/z."""
    mode = mode or Mode.symbolic()
    lam = Partition(lam)
    zeta, eta = _root_pair(mode)
    num = [ONE] + [ZERO] * N
    den = [ONE] + [ZERO] * N

    def mul_linear(coeffs, root):
        for k in range(N, 0, -1):
            coeffs[k] = coeffs[k] - root * coeffs[k - 1]

    for (i, j) in lam.nodes():
        c = (i - 1) * zeta + (j - 1) * eta
        mul_linear(num, c + zeta + eta)
        mul_linear(num, c)
        mul_linear(den, c + zeta)
        mul_linear(den, c + eta)
    series = TruncSeries(num) * series_reciprocal(TruncSeries(den))
    return CumulantVector("M", lam, series.coeffs[: N + 1])


def moments_from_transition(lam, N, mode=None):
    """Moments as the power sums of the node-position values weighted by the
    transition probabilities: M_k = sum_i c_i(lam) x_i^k."""
    mode = mode or Mode.symbolic()
    lam = Partition(lam)
    row = pieri_row(lam, mode)
    xs = [mode.node_value(lam, i) for i in range(1, len(lam) + 2)]
    out = []
    pows = [ONE] * len(xs)
    for k in range(N + 1):
        acc = ZERO
        for ci, pw in zip(row.coeffs, pows):
            acc = acc + ci * pw
        out.append(acc)
        pows = [pw * x for pw, x in zip(pows, xs)]
    return CumulantVector("M", lam, out)


def boolean_from_moments(M):
    """Boolean cumulants: the reciprocal series of the moment series."""
    N = M.order
    rec = series_reciprocal(TruncSeries(M.values))
    vals = [ONE] + [-rec.coeffs[k] for k in range(1, N + 1)]
    return CumulantVector("B", M.lam, vals)


def free_from_moments(M):
    """Free cumulants: generated by the compositional inverse of the moment
    series."""
    N = M.order
    forward = TruncSeries([ZERO] + list(M.values[: N + 1]))  # t*(sum M_k t^k)
    g = series_comp_inverse(forward)
    ratio = TruncSeries(g.coeffs[1:])  # g(u)/u, constant term 1
    rec = series_reciprocal(ratio)
    vals = [ONE] + [rec.coeffs[k] for k in range(1, N + 1)]
    return CumulantVector("R", M.lam, vals)


def cumulants(lam, N, mode=None, kind="R"):
    M = moment_series(lam, N, mode)
    if kind == "M":
        return M
    if kind == "B":
        return boolean_from_moments(M)
    if kind == "R":
        return free_from_moments(M)
    raise ValueError(f"unknown kind {kind!r}")


def _mono(values, mu):
    out = ONE
    for part in mu:
        out = out * values[part]
    return out


def convert(vec, target, n_max=None):
    """Directed conversion between the three coefficient families via the
    binomial sums (dual to the series definitions); round trips are exact
    identities."""
    n_max = vec.order if n_max is None else n_max
    if n_max > vec.order:
        raise ValueError("source vector too short")
    src, dst = vec.kind, target
    if src == dst:
        return CumulantVector(dst, vec.lam, list(vec.values[: n_max + 1]))
    out = [ONE]
    for n in range(1, n_max + 1):
        acc = ZERO
        if (src, dst) == ("M", "B"):
            for mu in enumerate_partitions(n):
                st = stats(mu)
                acc = acc + _mono(vec.values, mu) * Fraction((-1) ** ((len(mu) + 1) % 2) * st.u)
        elif (src, dst) == ("B", "M"):
            for mu in enumerate_partitions(n):
                acc = acc + _mono(vec.values, mu) * stats(mu).u
        elif (src, dst) == ("R", "M"):
            for mu in enumerate_partitions(n):
                st = stats(mu)
                acc = acc + _mono(vec.values, mu) * (binomial(n + 1, len(mu)) * st.u)
            acc = acc / (n + 1)
        elif (src, dst) == ("R", "B"):
            if n == 1:
                acc = vec.values[1]
            else:
                for mu in enumerate_partitions(n):
                    st = stats(mu)
                    acc = acc + _mono(vec.values, mu) * (binomial(n - 1, len(mu)) * st.u)
                acc = acc / (n - 1)
        elif (src, dst) == ("M", "R"):
            if n == 1:
                acc = vec.values[1]
            else:
                for mu in enumerate_partitions(n):
                    st = stats(mu)
                    sgn = (-1) ** (len(mu) % 2)
                    acc = acc + _mono(vec.values, mu) * (
                        sgn * binomial(n + len(mu) - 2, len(mu)) * st.u
                    )
                acc = -acc / (n - 1)
        elif (src, dst) == ("B", "R"):
            if n == 1:
                acc = vec.values[1]
            else:
                for mu in enumerate_partitions(n):
                    st = stats(mu)
                    sgn = (-1) ** (len(mu) % 2)
                    acc = acc + _mono(vec.values, mu) * (sgn * binomial(n - 1, len(mu)) * st.u)
                acc = -acc / (n - 1)
        else:
            raise ValueError(f"unknown conversion {src} -> {dst}")
        out.append(acc)
    return CumulantVector(dst, vec.lam, out)


# -- moments as polynomials in the free cumulants (rational, mode-free) ---------

_M_IN_R_CACHE = {}


def moments_in_free_cumulants(t):
    """M_t = sum q_sigma R_sigma over partitions sigma with parts >= 2;
    returns {sigma: Fraction}.  Universal rational coefficients."""
    if t in _M_IN_R_CACHE:
        return _M_IN_R_CACHE[t]
    out = {}
    if t == 0:
        out[Partition()] = Fraction(1)
    else:
        for mu in enumerate_partitions(t, min_part=2):
            st = stats(mu)
            out[mu] = Fraction(binomial(t + 1, len(mu)) * st.u, t + 1)
        # partitions with a part 1 contribute R_1 = 0
    _M_IN_R_CACHE[t] = out
    return out


_H_SCALED_A_CACHE = {}


def h_of_scaled_profile_alphabet(t, x):
    """h_t(x * A) for integer x, expanded over free-cumulant monomials:
    {sigma: Fraction}.  A is the corner alphabet of a generic diagram, so
    h_m(A) = M_m; uses the binomial expansion over moment monomials and the
    universal moment-to-free conversion."""
    key = (t, x)
    if key in _H_SCALED_A_CACHE:
        return _H_SCALED_A_CACHE[key]
    out = {}
    for mu in enumerate_partitions(t):
        if mu and mu[-1] == 1:
            continue  # M_1 = 0
        st = stats(mu)
        coef = Fraction(binomial(x, len(mu)) * st.u)
        if not coef:
            continue
        prod = {Partition(): coef}
        for part in mu:
            factor = moments_in_free_cumulants(part)
            nxt = {}
            for s1, c1 in prod.items():
                for s2, c2 in factor.items():
                    s = Partition(tuple(sorted(s1 + s2, reverse=True)))
                    nxt[s] = nxt.get(s, Fraction(0)) + c1 * c2
            prod = nxt
        for s, cv in prod.items():
            if cv:
                out[s] = out.get(s, Fraction(0)) + cv
    out = {s: c for s, c in out.items() if c}
    _H_SCALED_A_CACHE[key] = out
    return out


def h_of_node_pair_alphabet(m, u, mode=None):
    """h_m(u * B(v)) where B(v) = {v+zeta, v+eta} - {v, v+zeta+eta} is the
    alphabet of the added node at position v: returned as {power of v:
    FieldElem}.  Only alpha and beta of the mode enter:

    h_m(uB(v)) = sum_{r>=1, s>=0, 2r+s<=m} v^(m-2r-s) C(m-1, 2r+s-1)
                 C(r+s-1, s) C(-u, r) (-1/alpha)^(r+s) beta^s.
    """
    mode = mode or Mode.symbolic()
    if m == 0:
        return {0: ONE}
    alpha, beta = mode.alpha, mode.beta
    neg_inv_alpha = FieldElem.const(-1) / alpha
    out = {}
    for r in range(1, m // 2 + 1):
        for s in range(0, m - 2 * r + 1):
            c = (
                math.comb(m - 1, 2 * r + s - 1)
                * binomial(Fraction(-u), r)
                * math.comb(r + s - 1, s)
            )
            if not c:
                continue
            val = FieldElem.const(c) * neg_inv_alpha ** (r + s) * beta**s
            k = m - 2 * r - s
            out[k] = out.get(k, ZERO) + val
    return {k: v for k, v in out.items() if not v.is_zero()}


_ROW_SHIFT_CACHE = {}


def _row_shift(n, mode):
    """Expansion of R_n(lam + node at v) - R_n(lam) as
    {(v-power, sigma): FieldElem}, for a single index n."""
    key = (n, mode.ab_key())
    if key in _ROW_SHIFT_CACHE:
        return _ROW_SHIFT_CACHE[key]
    out = {}
    if n >= 2:
        scale = Fraction(1, 1 - n)
        for t in range(n):
            left = h_of_scaled_profile_alphabet(t, 1 - n)
            if not left:
                continue
            right = h_of_node_pair_alphabet(n - t, 1 - n, mode)
            for sigma, c1 in left.items():
                for k, c2 in right.items():
                    keypair = (k, sigma)
                    val = c2 * (c1 * scale)
                    out[keypair] = out.get(keypair, ZERO) + val
        out = {kp: v for kp, v in out.items() if not v.is_zero()}
    _ROW_SHIFT_CACHE[key] = out
    return out


class BTable:
    """Coefficients b_{k,sigma}(rho) of the node-adding expansion

        R_rho(lam + node at v) - R_rho(lam)
            = sum_{k=2 l(rho)}^{|rho|} v^(|rho|-k) sum_{|sigma|<=k-2}
              b_{k,sigma}(rho) R_sigma(lam).

    Entries are field elements depending only on (alpha, beta); they are
    integer polynomials in (1/alpha, beta) (see as_inv_alpha_poly)."""

    __slots__ = ("rho", "mode", "rows")

    def __init__(self, rho, mode, rows):
        self.rho = rho
        self.mode = mode
        self.rows = rows  # {(k, sigma): FieldElem}

    def by_vpower(self):
        """{(v-power, sigma): FieldElem} view."""
        w = self.rho.weight
        return {(w - k, sigma): v for (k, sigma), v in self.rows.items()}


_BTABLE_CACHE = {}


def node_shift_expansion(rho, mode=None):
    """BTable for a free-cumulant monomial indexed by rho (parts >= 1)."""
    mode = mode or Mode.symbolic()
    rho = Partition(rho)
    key = (rho, mode.ab_key())
    if key in _BTABLE_CACHE:
        return _BTABLE_CACHE[key]
    acc = {(0, Partition()): ONE}  # product of (R_part + shift) over parts
    for part in rho:
        factor = dict(_row_shift(part, mode))
        skey = (0, Partition((part,)))
        factor[skey] = factor.get(skey, ZERO) + ONE
        nxt = {}
        for (k1, s1), c1 in acc.items():
            for (k2, s2), c2 in factor.items():
                kk = (k1 + k2, Partition(tuple(sorted(s1 + s2, reverse=True))))
                val = c1 * c2
                prev = nxt.get(kk)
                nxt[kk] = val if prev is None else prev + val
        acc = {kk: v for kk, v in nxt.items() if not v.is_zero()}
    base = (0, rho)
    if base in acc:
        acc[base] = acc[base] - ONE
        if acc[base].is_zero():
            del acc[base]
    rows = {}
    w = rho.weight
    for (vpow, sigma), val in acc.items():
        rows[(w - vpow, sigma)] = val
    table = BTable(rho=rho, mode=mode, rows=rows)
    _BTABLE_CACHE[key] = table
    return table


# -- identity suite --------------------------------------------------------------

def _binomial_r_sum(values, x, m):
    """sum_{|mu|=m} C(x, l(mu)) u_mu R_mu evaluated on `values`."""
    acc = ZERO
    for mu in enumerate_partitions(m):
        if mu and mu[-1] == 1:
            continue  # R_1 = 0
        st = stats(mu)
        c = binomial(Fraction(x), len(mu)) * st.u
        if c:
            acc = acc + _mono(values, mu) * c
    return acc


def identity_suite(lam, n_max, mode=None):
    """Exact checks, for 2 <= n <= n_max, of the four convolution identities
    between moments and free cumulants of one diagram:

      (a) sum_{k=1}^n M_k   S(-k, n-k) = R_n
      (b) sum_{k=1}^n M_{k-1} S(-k, n-k) = 0
      (c) sum_{k=2}^n (k-1) M_{k-2} S(-k, n-k) = sum_{|rho|=n-2} v u R_rho
      (d) sum_{k=2}^n (k-1) M_{k-1} S(-k, n-k) = sum_{|rho|=n-1} w u/l R_rho

    with S(x, m) = sum_{|mu|=m} C(x, l) u_mu R_mu.  Returns report entries."""
    mode = mode or Mode.symbolic()
    lam = Partition(lam)
    M = moment_series(lam, n_max, mode)
    R = free_from_moments(M)
    report = []
    for n in range(2, n_max + 1):
        s_cache = {k: _binomial_r_sum(R.values, -k, n - k) for k in range(1, n + 1)}
        lhs_a = lhs_b = lhs_c = lhs_d = ZERO
        for k in range(1, n + 1):
            lhs_a = lhs_a + M.values[k] * s_cache[k]
            lhs_b = lhs_b + M.values[k - 1] * s_cache[k]
            if k >= 2:
                lhs_c = lhs_c + M.values[k - 2] * s_cache[k] * (k - 1)
                lhs_d = lhs_d + M.values[k - 1] * s_cache[k] * (k - 1)
        rhs_c = ZERO
        for rho in enumerate_partitions(n - 2):
            if rho and rho[-1] == 1:
                continue
            st = stats(rho)
            rhs_c = rhs_c + _mono(R.values, rho) * Fraction(st.v * st.u)
        rhs_d = ZERO
        for rho in enumerate_partitions(n - 1):
            if rho and rho[-1] == 1:
                continue
            st = stats(rho)
            if len(rho):
                rhs_d = rhs_d + _mono(R.values, rho) * (st.w * Fraction(st.u, len(rho)))
        for ident, lhs, rhs in (
            ("moment-weighted", lhs_a, R.values[n]),
            ("index-shifted", lhs_b, ZERO),
            ("double-shift-v", lhs_c, rhs_c),
            ("single-shift-w", lhs_d, rhs_d),
        ):
            report.append(
                {
                    "identity_id": ident,
                    "n": n,
                    "pass": lhs == rhs,
                    "lhs": lhs.text(),
                    "rhs": rhs.text(),
                }
            )
    return report


# -- positivity accessors ---------------------------------------------------------

def neg_inv_alpha_coefficients(value):
    """Write `value` (a field element involving only alpha, with denominator a
    monomial in alpha) as sum c_m (-1/alpha)^m; returns {m: Fraction} or None
    when the value is not of that shape."""
    num, den = value.num, value.den
    dt = den.sorted_terms()
    if len(dt) != 1:
        return None
    dexp, dc = dt[0]
    if any(dexp[i] for i in range(1, len(dexp))):
        return None
    d = dexp[0]
    out = {}
    for exp, c in num.terms.items():
        if any(exp[i] for i in range(1, len(exp))):
            return None
        m = d - exp[0]
        if m < 0:
            return None
        out[m] = out.get(m, Fraction(0)) + c / dc * (-1) ** (m % 2)
    return out


def poly_coefficients_in(value, vars_wanted=("z", "e")):
    """Coefficient dict {exponent tuple over vars_wanted: Fraction} when
    `value` is a polynomial in exactly those variables; None otherwise."""
    if not value.den.is_const():
        return None
    scale = 1 / value.den.const_value()
    from .algebra import VARS

    idx = [VARS.index(v) for v in vars_wanted]
    out = {}
    for exp, c in value.num.terms.items():
        if any(exp[i] for i in range(len(VARS)) if i not in idx):
            return None
        out[tuple(exp[i] for i in idx)] = c * scale
    return out

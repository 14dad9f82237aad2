"""Polynomials in the free cumulants R_2, R_3, ... and the solver expressing
the normalized Jack power-sum coefficients in that basis.

For a partition mu with no part 1 the quantity vartheta(lam, mu) equals a
unique polynomial K_mu evaluated at the free cumulants of lam.  K_mu is
computed by induction on |mu| - l(mu): writing vartheta = sum a_rho R_rho and
pushing the pair of node-adding recursions through the shift expansion of
R_rho (the BTable) and the moment functional (x^m -> M_m, then moments
rewritten in free cumulants), the unknown coefficients satisfy

    (I )  sum_rho a_rho E0(rho) = 0
    (II)  sum_rho a_rho E1(rho) = 2 (alpha R_2 - |mu| + 2) m_2(mu) K_{mu minus 2}
                                  + sum_{r>=3} r m_r(mu) K_{mu down r}

where E0/E1 apply the moment functional of order 0/1 to the shift expansion.
The system is triangular by weight: coefficients of weight w are pinned by the
rows of weight w-1 of (II) together with the rows of weight w-2 of (I), so the
solver walks weights downward, solving one small exact block per weight, and
certifies the full residual afterwards (with a stacked whole-system solve as
fallback).  The candidate support always includes one weight and one part of
slack beyond the proven bounds (parts in [2, |mu|-l(mu)+2], weight at most
|mu|+l(mu)); the slack coefficients must come out zero.

The alternative bases Q_n (length-weighted) and C_n (factorial-weighted)
polynomials in the free cumulants live here too, together with the signed
set-partition inversion producing the cumulant-like family K-tilde.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .algebra import ONE, ZERO, FieldElem, LinsolveError, MultiPoly, linsolve
from .diagrams import moments_in_free_cumulants, node_shift_expansion
from .modes import Mode
from .partitions import (
    Partition,
    down_part,
    enumerate_partitions,
    remove_part,
    stats,
    union_part,
)

R2 = Partition((2,))
EMPTY = Partition()


class RPoly:
    """Polynomial in indeterminates indexed by partitions with parts >= 2
    (monomial rho stands for the product of R_{rho_k}), with FieldElem
    coefficients.  Also reused for the Q- and C-bases, where the monomial rho
    stands for the product of Q_{rho_k} or C_{rho_k}."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        if terms:
            for rho, c in terms.items():
                c = FieldElem.coerce(c)
                if not c.is_zero():
                    self.terms[Partition(rho)] = c

    @staticmethod
    def zero():
        return RPoly()

    @staticmethod
    def one():
        return RPoly({EMPTY: ONE})

    @staticmethod
    def monomial(rho, coef=ONE):
        return RPoly({Partition(rho): coef})

    def is_zero(self):
        return not self.terms

    def __add__(self, other):
        out = dict(self.terms)
        for rho, c in other.terms.items():
            s = out.get(rho, ZERO) + c
            if s.is_zero():
                out.pop(rho, None)
            else:
                out[rho] = s
        res = RPoly()
        res.terms = out
        return res

    def __neg__(self):
        res = RPoly()
        res.terms = {rho: -c for rho, c in self.terms.items()}
        return res

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, RPoly):
            out = {}
            for r1, c1 in self.terms.items():
                for r2, c2 in other.terms.items():
                    rho = Partition(tuple(sorted(r1 + r2, reverse=True)))
                    v = c1 * c2
                    prev = out.get(rho)
                    s = v if prev is None else prev + v
                    if s.is_zero():
                        out.pop(rho, None)
                    else:
                        out[rho] = s
            res = RPoly()
            res.terms = out
            return res
        other = FieldElem.coerce(other)
        if other.is_zero():
            return RPoly()
        res = RPoly()
        res.terms = {rho: c * other for rho, c in self.terms.items()}
        return res

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, RPoly):
            return NotImplemented
        if set(self.terms) != set(other.terms):
            return False
        return all(self.terms[r] == other.terms[r] for r in self.terms)

    def coefficient(self, rho):
        return self.terms.get(Partition(rho), ZERO)

    def max_weight(self):
        return max((rho.weight for rho in self.terms), default=0)

    def weight_component(self, w):
        res = RPoly()
        res.terms = {rho: c for rho, c in self.terms.items() if rho.weight == w}
        return res

    def substitute_parameters(self, values):
        """Substitute into the coefficients (e.g. {'b': 1 - alpha})."""
        res = RPoly()
        for rho, c in self.terms.items():
            v = c.substitute(values)
            if not v.is_zero():
                res.terms[rho] = v
        return res

    def substitute_basis(self, mapping):
        """Replace the indeterminate of index n by mapping[n] (an RPoly) and
        expand; mapping must cover every part that occurs."""
        out = RPoly()
        for rho, c in self.terms.items():
            prod = RPoly({EMPTY: c})
            for part in rho:
                prod = prod * mapping[part]
            out = out + prod
        return out

    def evaluate(self, values):
        """Evaluate with values[k] the number substituted for the index-k
        indeterminate (list indexed by k, or dict)."""
        acc = ZERO
        for rho, c in self.terms.items():
            v = c
            for part in rho:
                v = v * values[part]
            acc = acc + v
        return acc

    def sorted_terms(self):
        """Weight descending, reverse lexicographic inside a weight."""
        return sorted(
            self.terms.items(), key=lambda kv: (kv[0].weight, kv[0]), reverse=True
        )

    def to_json(self, mu=None, mode=None, basis="R"):
        return {
            "mu": mu.text() if mu is not None else None,
            "mode": mode.key() if mode is not None else None,
            "basis": basis,
            "terms": [
                {"rho": list(rho), "coef": c.text()} for rho, c in self.sorted_terms()
            ],
        }

    @staticmethod
    def from_json(obj):
        return RPoly(
            {
                Partition(tuple(t["rho"])): FieldElem.from_text(t["coef"])
                for t in obj["terms"]
            }
        )

    def pretty(self, symbol="R"):
        if not self.terms:
            return "0"
        chunks = []
        for rho, c in self.sorted_terms():
            mono = "*".join(
                f"{symbol}{i}" + (f"^{m}" if m > 1 else "")
                for i, m in sorted(rho.multiplicities().items(), reverse=True)
            )
            cs = c.pretty()
            if mono:
                chunks.append(f"({cs})*{mono}" if ("+" in cs or " - " in cs) else f"{cs}*{mono}")
            else:
                chunks.append(cs)
        return " + ".join(chunks)

    def __repr__(self):
        return f"RPoly({self.pretty()})"


# -- the moment functional applied to shift expansions ---------------------------

def _shift_functional(rho, mode, order):
    """E_order(rho): apply x^m -> M_(m+order) to the node-shift expansion of
    R_rho and rewrite the moments in free cumulants; an RPoly."""
    table = node_shift_expansion(rho, mode)
    out = RPoly()
    acc = {}
    for (vpow, sigma), b in table.by_vpower().items():
        mdict = moments_in_free_cumulants(vpow + order)
        for tau, q in mdict.items():
            key = Partition(tuple(sorted(sigma + tau, reverse=True)))
            v = b * q
            prev = acc.get(key)
            acc[key] = v if prev is None else prev + v
    out.terms = {k: v for k, v in acc.items() if not v.is_zero()}
    return out


def _support(mu, slack=1):
    g = mu.weight - len(mu)
    max_part = g + 2 + slack
    max_weight = mu.weight + len(mu) + slack
    out = []
    for w in range(2, max_weight + 1):
        out.extend(enumerate_partitions(w, min_part=2, max_part=max_part))
    return out, g + 2, mu.weight + len(mu)


class KerovSolveError(Exception):
    pass


_KEROV_CACHE = {}


def kerov_polynomial(mu, mode=None, slack=1, _details=None):
    """The unique free-cumulant polynomial whose evaluation at the cumulants
    of any lam with |lam| >= |mu| equals vartheta(lam, mu).  mu must have no
    part 1.  Coefficients live in the (alpha, beta) algebra of `mode`."""
    mode = mode or Mode.symbolic()
    mu = Partition(mu)
    if mu.multiplicity(1):
        raise ValueError(f"mu must have no part 1: {mu}")
    key = (mu, mode.ab_key())
    if _details is None and key in _KEROV_CACHE:
        return _KEROV_CACHE[key]

    if mu == EMPTY:
        result = RPoly.one()
        _KEROV_CACHE[key] = result
        return result

    alpha = mode.alpha
    rhs = RPoly.zero()
    m2 = mu.multiplicity(2)
    if m2:
        sub = kerov_polynomial(remove_part(mu, 2), mode, slack)
        # 2 (alpha R_2 - |mu| + 2) m_2(mu) K_{mu minus 2}
        rhs = rhs + (RPoly.monomial(R2, alpha) + RPoly({EMPTY: 2 - mu.weight})) * sub * FieldElem.const(2 * m2)
    for r in sorted(set(mu)):
        if r >= 3:
            rhs = rhs + kerov_polynomial(down_part(mu, r), mode, slack) * FieldElem.const(
                r * mu.multiplicity(r)
            )

    support, part_bound, weight_bound = _support(mu, slack)
    e0 = {rho: _shift_functional(rho, mode, 0) for rho in support}
    e1 = {rho: _shift_functional(rho, mode, 1) for rho in support}

    try:
        coeffs = _solve_by_weight(support, e0, e1, rhs)
    except LinsolveError:
        coeffs = _solve_stacked(support, e0, e1, rhs)

    # full-residual certificate
    res0 = RPoly.zero()
    res1 = RPoly.zero()
    for rho, a in coeffs.items():
        if a.is_zero():
            continue
        res0 = res0 + e0[rho] * a
        res1 = res1 + e1[rho] * a
    if not res0.is_zero() or not (res1 - rhs).is_zero():
        raise KerovSolveError(f"solution residual is nonzero for mu = {mu}")

    # slack guard: everything beyond the proven support bounds must vanish
    result = RPoly.zero()
    for rho, a in coeffs.items():
        if a.is_zero():
            continue
        if rho.weight > weight_bound or rho[0] > part_bound:
            raise KerovSolveError(
                f"nonzero coefficient outside the proven support: {rho} in K_{mu}"
            )
        result = result + RPoly.monomial(rho, a)

    if _details is not None:
        _details["support"] = support
        _details["coefficients"] = coeffs
    _KEROV_CACHE[key] = result
    return result


def _solve_by_weight(support, e0, e1, rhs):
    """Solve the stacked system by descending weight blocks."""
    weights = sorted({rho.weight for rho in support}, reverse=True)
    eff1 = rhs
    eff0 = RPoly.zero()
    solved = {}
    for w in weights:
        block = [rho for rho in support if rho.weight == w]
        rows = []
        rhs_col = []
        for sigma in enumerate_partitions(w - 1, min_part=2):
            rows.append([e1[rho].coefficient(sigma) for rho in block])
            rhs_col.append(eff1.coefficient(sigma))
        if w >= 2:
            for sigma in enumerate_partitions(w - 2, min_part=2):
                rows.append([e0[rho].coefficient(sigma) for rho in block])
                rhs_col.append(eff0.coefficient(sigma))
        rep = linsolve(rows, rhs_col)
        for rho, a in zip(block, rep.solution):
            solved[rho] = a
            if not a.is_zero():
                eff1 = eff1 - e1[rho] * a
                eff0 = eff0 - e0[rho] * a
    return solved


def _solve_stacked(support, e0, e1, rhs):
    """One exact solve of the whole system; fallback path."""
    sigmas = sorted(
        {s for rho in support for s in e0[rho].terms}
        | {s for rho in support for s in e1[rho].terms}
        | set(rhs.terms)
    )
    rows = []
    rhs_col = []
    for sigma in sigmas:
        rows.append([e0[rho].coefficient(sigma) for rho in support])
        rhs_col.append(ZERO)
        rows.append([e1[rho].coefficient(sigma) for rho in support])
        rhs_col.append(rhs.coefficient(sigma))
    rep = linsolve(rows, rhs_col)
    return dict(zip(support, rep.solution))


def kerov_rows(r_max, mode=None):
    """{r: K_r} for 2 <= r <= r_max, computed through the single-row chain
    (the right-hand side of step r is r*K_{r-1}, with K_1 = alpha R_2)."""
    mode = mode or Mode.symbolic()
    if r_max < 2:
        raise ValueError("r_max must be at least 2")
    return {r: kerov_polynomial(Partition((r,)), mode) for r in range(2, r_max + 1)}


# -- signed set-partition inversion ----------------------------------------------

def _set_partitions(items):
    """All set partitions of `items` (a list), as lists of tuples."""
    if not items:
        yield []
        return
    head, rest = items[0], items[1:]
    for part in _set_partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [(head,) + part[i]] + part[i + 1 :]
        yield [(head,)] + part


_TILDE_CACHE = {}


def kerov_tilde(mu, mode=None):
    """The cumulant-like family defined by the signed sum over set partitions
    of mu's parts:

        K_mu = sum_{set partitions pi} (-1)^(l(mu) - |pi|) prod_{B in pi} Ktilde_{mu[B]}.

    Single rows satisfy Ktilde = K."""
    mode = mode or Mode.symbolic()
    mu = Partition(mu)
    key = (mu, mode.ab_key())
    if key in _TILDE_CACHE:
        return _TILDE_CACHE[key]
    l = len(mu)
    if l <= 1:
        result = kerov_polynomial(mu, mode)
    else:
        acc = kerov_polynomial(mu, mode)
        sign_all = (-1) ** ((l - 1) % 2)
        for pi in _set_partitions(list(range(l))):
            if len(pi) == 1:
                continue  # the block {mu} itself carries the unknown
            prod = RPoly.one()
            for block in pi:
                nu = Partition(tuple(sorted((mu[i] for i in block), reverse=True)))
                prod = prod * kerov_tilde(nu, mode)
            acc = acc - prod * FieldElem.const((-1) ** ((l - len(pi)) % 2))
        result = acc * FieldElem.const(sign_all)
    _TILDE_CACHE[key] = result
    return result


# -- (i, j) grading ----------------------------------------------------------------

@dataclass
class GradedComponent:
    """Coefficient of alpha^(deg - i) beta^j, an RPoly with rational
    coefficients, expected homogeneous of the stated weight."""

    i: int
    j: int
    poly: RPoly
    weight: int
    homogeneous: bool
    in_range: bool


def grade(K, alpha_degree, weight_of=None):
    """Split K by powers alpha^(alpha_degree - i) beta^j.  For single-row
    polynomials alpha_degree = r and the component (i, j) is expected
    homogeneous of weight r - 2i + j + 1 with 0 <= j <= i and 2i - j <= r - 1;
    for the tilde family alpha_degree = |mu| - l(mu) + 1 and the expected
    weight is alpha_degree + 1 - 2i + j.  `weight_of` overrides the expected
    weight as a function of (i, j).  Every coefficient must be an (alpha,
    beta)-polynomial."""
    r = alpha_degree
    if weight_of is None:
        weight_of = lambda i, j: r - 2 * i + j + 1
    buckets = {}
    for rho, c in K.terms.items():
        poly = c.as_poly()  # raises when not polynomial
        for exp, q in poly.terms.items():
            if exp[2] or exp[3]:
                raise ValueError("coefficients must involve only alpha and beta")
            i = r - exp[0]
            j = exp[1]
            comp = buckets.setdefault((i, j), {})
            comp[rho] = comp.get(rho, Fraction(0)) + q
    out = []
    for (i, j), terms in sorted(buckets.items()):
        poly = RPoly({rho: FieldElem.const(q) for rho, q in terms.items() if q})
        if poly.is_zero():
            continue
        w = weight_of(i, j)
        weights = {rho.weight for rho in poly.terms}
        homogeneous = weights == {w}
        in_range = 0 <= j <= i and 2 * i - j <= r - 1
        out.append(
            GradedComponent(i=i, j=j, poly=poly, weight=w, homogeneous=homogeneous, in_range=in_range)
        )
    return out


def reassemble(components, alpha_degree):
    """Inverse of `grade`: sum alpha^(deg-i) beta^j * component."""
    from .algebra import ALPHA, BETA

    acc = RPoly.zero()
    for comp in components:
        factor = ALPHA ** (alpha_degree - comp.i) * BETA**comp.j
        acc = acc + comp.poly * factor
    return acc


def component(K, alpha_degree, i, j):
    for comp in grade(K, alpha_degree):
        if (comp.i, comp.j) == (i, j):
            return comp.poly
    return RPoly.zero()


# -- normalized monomials and the Q/C bases -----------------------------------------

def normalized_monomial(rho):
    """The monomial prod ((i-1) R_i)^(m_i) / m_i! as an RPoly."""
    rho = Partition(rho)
    coef = Fraction(1)
    for i, m in rho.multiplicities().items():
        coef *= Fraction((i - 1) ** m, math.factorial(m))
    return RPoly({rho: FieldElem.const(coef)})


def q_poly(n):
    """Q_n = sum over |rho| = n of (l(rho)-1)! normalized monomials; Q_0 = 1,
    Q_1 = 0."""
    if n == 0:
        return RPoly.one()
    if n == 1:
        return RPoly.zero()
    acc = RPoly.zero()
    for rho in enumerate_partitions(n, min_part=2):
        acc = acc + normalized_monomial(rho) * FieldElem.const(math.factorial(len(rho) - 1))
    return acc


def c_poly(n):
    """C_n = sum over |rho| = n of l(rho)! normalized monomials; C_0 = 1,
    C_1 = 0."""
    if n == 0:
        return RPoly.one()
    if n == 1:
        return RPoly.zero()
    acc = RPoly.zero()
    for rho in enumerate_partitions(n, min_part=2):
        acc = acc + normalized_monomial(rho) * FieldElem.const(math.factorial(len(rho)))
    return acc


def _invert_basis(basis_poly, n_max):
    """{n: R_n expressed in the target basis} for n = 2..n_max, obtained by
    peeling the leading linear term (n-1) R_n off basis_poly(n)."""
    out = {}
    for n in range(2, n_max + 1):
        bn = basis_poly(n)
        lead = Partition((n,))
        tail = RPoly({rho: c for rho, c in bn.terms.items() if rho != lead})
        tail_in_basis = tail.substitute_basis(out) if tail.terms else RPoly.zero()
        expr = (RPoly.monomial(lead) - tail_in_basis) * FieldElem.const(Fraction(1, n - 1))
        out[n] = expr
    return out


def to_basis(K, target, n_max=None):
    """Rewrite an R-basis polynomial in the Q or C basis exactly."""
    if target not in ("Q", "C"):
        raise ValueError("target must be 'Q' or 'C'")
    n_max = n_max or max((rho[0] for rho in K.terms if rho), default=2)
    mapping = _invert_basis(q_poly if target == "Q" else c_poly, max(n_max, 2))
    return K.substitute_basis(mapping)


def from_basis(P, source):
    """Rewrite a Q- or C-basis polynomial back in the R basis."""
    if source not in ("Q", "C"):
        raise ValueError("source must be 'Q' or 'C'")
    n_max = max((rho[0] for rho in P.terms if rho), default=2)
    basis = q_poly if source == "Q" else c_poly
    mapping = {n: basis(n) for n in range(2, n_max + 1)}
    return P.substitute_basis(mapping)


def stirling_first_unsigned(n, k):
    """|s(n, k)|: number of permutations of n letters with k cycles."""
    if k < 0 or k > n:
        return 0
    row = [1]
    for m in range(1, n + 1):
        new = [0] * (m + 1)
        for i, v in enumerate(row):
            new[i] += v * (m - 1)
            new[i + 1] += v
        row = new
    return row[k]

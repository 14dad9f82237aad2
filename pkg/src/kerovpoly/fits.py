"""Exact linear fits on top of the Kerov solver: the r-independent structure
functions of the graded components, the content-power-sum expansion of
vartheta in the two-parameter mode, and the evaluation-interpolation oracle
that recomputes K_mu from table data alone.

All fits are least-structure: the candidate degree grows until the
(overdetermined) system becomes consistent, and every solve carries the exact
residual certificate of `linsolve`.  Parameter-dependent coefficients are
reconstructed from runs at several numeric parameter points.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import ALPHA, BETA, ONE, ZERO, FieldElem, LinsolveError, MultiPoly, linsolve
from .diagrams import cumulants, content_alphabet
from .jack import theta_tables, vartheta
from .kerov import RPoly, component, kerov_polynomial, normalized_monomial
from .alphabets import p_list
from .modes import Mode
from .partitions import Partition, enumerate_partitions, partitions_up_to, stats


class FitError(Exception):
    pass


# -- monomial symmetric functions evaluated at integral vectors -------------------

_MONO_CACHE = {}


def monomial_value(kappa, parts):
    """m_kappa evaluated at the finite vector `parts` (extra variables are 0):
    the sum of all distinct monomials with exponent multiset kappa."""
    kappa = Partition(kappa)
    parts = tuple(parts)
    key = (kappa, parts)
    if key in _MONO_CACHE:
        return _MONO_CACHE[key]
    if len(kappa) > len(parts):
        _MONO_CACHE[key] = 0
        return 0
    denom = 1
    for m in kappa.multiplicities().values():
        denom *= math.factorial(m)
    total = 0
    for pos in itertools.permutations(range(len(parts)), len(kappa)):
        prod = 1
        for exp, p in zip(kappa, pos):
            prod *= parts[p] ** exp
        total += prod
    value = total // denom
    _MONO_CACHE[key] = value
    return value


def monomial_dict_value(coeffs, parts):
    """Evaluate sum c_kappa m_kappa at an integral vector."""
    acc = Fraction(0)
    for kappa, c in coeffs.items():
        acc += Fraction(c) * monomial_value(kappa, parts)
    return acc


# -- m-basis arithmetic (through the power-sum basis) ------------------------------

def _m_to_p_weight(n):
    from .jack import monomial_in_powersums

    return monomial_in_powersums(n)


def _p_to_m_weight(n):
    from .jack import powersum_in_monomials

    return powersum_in_monomials(n)


def monomial_product(f, g):
    """Product of two inhomogeneous symmetric functions given as monomial
    coefficient dicts {Partition: Fraction}; exact, via the power-sum basis."""
    fp = {}
    for kappa, c in f.items():
        for rho, q in _m_to_p_weight(kappa.weight)[kappa].items():
            fp[rho] = fp.get(rho, Fraction(0)) + Fraction(c) * q
    gp = {}
    for kappa, c in g.items():
        for rho, q in _m_to_p_weight(kappa.weight)[kappa].items():
            gp[rho] = gp.get(rho, Fraction(0)) + Fraction(c) * q
    prod = {}
    for r1, c1 in fp.items():
        for r2, c2 in gp.items():
            r = Partition(tuple(sorted(r1 + r2, reverse=True)))
            prod[r] = prod.get(r, Fraction(0)) + c1 * c2
    out = {}
    for rho, c in prod.items():
        if not c:
            continue
        for kappa, q in _p_to_m_weight(rho.weight)[rho].items():
            # p_rho = sum_kappa q m_kappa holds with q the matrix entries;
            # accumulate directly
            out[kappa] = out.get(kappa, Fraction(0)) + c * q
    return {k: v for k, v in out.items() if v}


# -- structure-function fits -------------------------------------------------------

@dataclass
class SymFunFit:
    """Least-degree monomial-basis fit of the r-independent structure function
    hiding in one graded component family."""

    i: int
    j: int
    side: str  # "R" (factorial weights) or "Q" (geometric weights)
    coeffs: dict  # {Partition: Fraction}
    max_degree: int
    fitted_r: tuple

    def value(self, parts):
        return monomial_dict_value(self.coeffs, parts)

    def predict(self, r):
        """The predicted component K_r^(i,j) (an RPoly over the fit's side
        basis: R monomials for side R, Q monomials for side Q)."""
        w = r - 2 * self.i + self.j + 1
        acc = RPoly.zero()
        for rho in enumerate_partitions(w, min_part=2):
            fval = self.value(tuple(rho))
            if self.side == "R":
                weightc = math.factorial(len(rho) + 2 * self.i - self.j - 2)
                acc = acc + normalized_monomial(rho) * FieldElem.const(r * weightc * fval)
            else:
                weightc = (2 * self.i - self.j - 1) ** len(rho)
                mult = Fraction(1)
                for _i, m in rho.multiplicities().items():
                    mult /= math.factorial(m)
                acc = acc + RPoly.monomial(rho, FieldElem.const(r * weightc * fval * mult))
        return acc


def _component_in_normalized_basis(comp, side):
    """Coefficients of a graded component over normalized monomials:
    {rho: Fraction}.  For side R the component is over R monomials and the
    normalized monomial is prod((i-1)R_i)^m/m!; for side Q it is over Q
    monomials with normalization prod Q_i^m/m!."""
    out = {}
    for rho, c in comp.terms.items():
        q = c.as_fraction()
        scale = Fraction(1)
        for i, m in rho.multiplicities().items():
            scale *= math.factorial(m)
            if side == "R":
                scale /= Fraction((i - 1) ** m)
        out[rho] = q * scale
    return out


def fit_structure_function(i, j, side, rows, r_values=None):
    """Fit the structure function of the (i, j) component family from the
    single-row polynomials `rows` ({r: K_r}).

    side "R": K_r^(i,j) = r sum_{|rho|=r-2i+j+1} (l(rho)+2i-j-2)! f(rho) Rnorm_rho
    side "Q": K_r^(i,j) = r sum_{|rho|=r-2i+j+1} (2i-j-1)^l(rho) g(rho) Qnorm_rho

    The candidate degree starts at 0 and grows until the stacked exact system
    over all provided r becomes consistent (never past 4i-2j-2, the conjectured
    bound).  A system that stays inconsistent at the bound, or that cannot pin
    the coefficients, raises FitError carrying the diagnosis."""
    if side not in ("R", "Q"):
        raise ValueError("side must be 'R' or 'Q'")
    if (i, j) == (0, 0):
        raise FitError("the (0,0) component is the lone monomial; nothing to fit")
    from .kerov import to_basis

    r_values = sorted(rows) if r_values is None else sorted(r_values)
    degree_bound = 4 * i - 2 * j - 2
    data = []  # (r, rho, target Fraction)
    for r in r_values:
        w = r - 2 * i + j + 1
        if w < 0:
            continue
        comp = component(rows[r], r, i, j)
        if side == "Q":
            comp = to_basis(comp, "Q") if comp.terms else comp
        coeffs = _component_in_normalized_basis(comp, side)
        for rho in enumerate_partitions(w, min_part=2):
            data.append((r, rho, coeffs.get(rho, Fraction(0))))
    if not data:
        raise FitError(f"no data rows for component ({i},{j}) in r range {r_values}")

    last_error = None
    for degree in range(degree_bound + 1):
        candidates = partitions_up_to(degree)
        matrix = []
        rhs = []
        for r, rho, target in data:
            if side == "R":
                weightc = Fraction(r * math.factorial(len(rho) + 2 * i - j - 2))
            else:
                weightc = Fraction(r * (2 * i - j - 1) ** len(rho))
            matrix.append([weightc * monomial_value(kappa, tuple(rho)) for kappa in candidates])
            rhs.append(target)
        try:
            rep = linsolve(matrix, rhs)
        except LinsolveError as exc:
            if exc.kind == "underdetermined":
                raise FitError(
                    f"component ({i},{j}) side {side}: degree-{degree} fit is not "
                    f"pinned by r in {r_values}; extend the range"
                ) from exc
            last_error = exc
            continue
        coeffs = {
            kappa: sol.as_fraction()
            for kappa, sol in zip(candidates, rep.solution)
            if not sol.is_zero()
        }
        return SymFunFit(
            i=i, j=j, side=side, coeffs=coeffs, max_degree=degree, fitted_r=tuple(r_values)
        )
    raise FitError(
        f"component ({i},{j}) side {side}: no exact fit up to degree {degree_bound} "
        f"over r in {r_values} (genuine counterexample candidate)"
    ) from last_error


# -- shared numeric sample machinery ------------------------------------------------

#: generic rational parameter points; zeta < 0 < eta, pairwise distinct (alpha, beta)
ZETA_ETA_SAMPLES = [
    (Fraction(-2), Fraction(1, 3)),
    (Fraction(-1, 2), Fraction(3)),
    (Fraction(-3), Fraction(1, 2)),
    (Fraction(-1, 3), Fraction(2)),
    (Fraction(-5, 2), Fraction(2, 3)),
    (Fraction(-2, 5), Fraction(5, 3)),
    (Fraction(-4), Fraction(2, 5)),
    (Fraction(-3, 4), Fraction(5, 2)),
    (Fraction(-5, 3), Fraction(1, 4)),
    (Fraction(-1, 4), Fraction(7, 2)),
    (Fraction(-7, 2), Fraction(3, 5)),
    (Fraction(-2, 3), Fraction(4)),
    (Fraction(-5), Fraction(1, 5)),
    (Fraction(-1, 5), Fraction(5)),
    (Fraction(-7, 3), Fraction(4, 3)),
    (Fraction(-3, 5), Fraction(7, 3)),
    (Fraction(-6), Fraction(3, 4)),
    (Fraction(-1, 6), Fraction(6)),
    (Fraction(-8, 3), Fraction(5, 4)),
    (Fraction(-4, 5), Fraction(8, 3)),
    (Fraction(-9, 2), Fraction(2, 7)),
    (Fraction(-2, 7), Fraction(9, 2)),
    (Fraction(-10, 3), Fraction(3, 7)),
    (Fraction(-3, 7), Fraction(10, 3)),
    (Fraction(-11, 4), Fraction(7, 4)),
    (Fraction(-4, 7), Fraction(11, 4)),
    (Fraction(-8), Fraction(1, 7)),
    (Fraction(-1, 8), Fraction(7)),
    (Fraction(-12, 5), Fraction(5, 6)),
    (Fraction(-5, 6), Fraction(12, 5)),
    (Fraction(-13, 3), Fraction(6, 5)),
    (Fraction(-6, 7), Fraction(13, 5)),
    (Fraction(-9), Fraction(2, 9)),
    (Fraction(-2, 9), Fraction(9)),
    (Fraction(-14, 5), Fraction(4, 9)),
    (Fraction(-4, 9), Fraction(14, 5)),
    (Fraction(-15, 4), Fraction(8, 5)),
    (Fraction(-5, 8), Fraction(15, 4)),
    (Fraction(-10), Fraction(3, 10)),
    (Fraction(-3, 10), Fraction(10)),
]

ALPHA_SAMPLES = [
    Fraction(2),
    Fraction(3),
    Fraction(5, 2),
    Fraction(7, 3),
    Fraction(4),
    Fraction(5),
    Fraction(7, 2),
    Fraction(9, 4),
    Fraction(11, 5),
    Fraction(13, 3),
    Fraction(6),
    Fraction(17, 4),
    Fraction(19, 5),
    Fraction(23, 6),
]

_TABLE_CACHE = {}


def cached_tables(n, mode):
    key = (n, mode.key())
    hit = _TABLE_CACHE.get(key)
    if hit is None:
        hit = theta_tables(n, mode)
        _TABLE_CACHE[key] = hit
    return hit


def _bivariate_reconstruct(samples, values, degree, validate=3):
    """Recover the (alpha, beta)-polynomial of total degree <= degree through
    its values at numeric (alpha, beta) sample points; the last `validate`
    samples are held out and must be matched exactly."""
    monos = [(da, db) for da in range(degree + 1) for db in range(degree + 1 - da)]
    need = len(monos)
    if len(samples) < need + validate:
        raise FitError(f"need at least {need + validate} parameter samples, got {len(samples)}")
    fit_pts = samples[:need]
    fit_vals = values[:need]
    matrix = [[al**da * be**db for (da, db) in monos] for (al, be) in fit_pts]
    rep = linsolve(matrix, [FieldElem.const(v) for v in fit_vals])
    poly = ZERO
    for (da, db), c in zip(monos, rep.solution):
        if not c.is_zero():
            poly = poly + c * ALPHA**da * BETA**db
    for (al, be), v in zip(samples[need:], values[need:]):
        if poly.substitute({"a": al, "b": be}) != FieldElem.const(v):
            raise FitError("reconstructed coefficient fails at a held-out parameter point")
    return poly


def _univariate_reconstruct(samples, values, degree, validate=2):
    """Same, for polynomials in alpha alone (beta = 1 - alpha runs)."""
    need = degree + 1
    if len(samples) < need + validate:
        raise FitError(f"need at least {need + validate} alpha samples, got {len(samples)}")
    matrix = [[al**d for d in range(need)] for al in samples[:need]]
    rep = linsolve(matrix, [FieldElem.const(v) for v in values[:need]])
    poly = ZERO
    for d, c in enumerate(rep.solution):
        if not c.is_zero():
            poly = poly + c * ALPHA**d
    for al, v in zip(samples[need:], values[need:]):
        if poly.substitute({"a": al}) != FieldElem.const(v):
            raise FitError("reconstructed coefficient fails at a held-out alpha point")
    return poly


# -- evaluation-interpolation oracle --------------------------------------------------

def interpolation_oracle(mu, pool=None, method="zeta-eta", samples=None):
    """Recompute K_mu independently of the recursion solver: evaluate
    vartheta(lam, mu) and the free cumulants R_rho(lam) over a pool of
    diagrams at several numeric parameter points, solve for the monomial
    coefficients at each point, and reconstruct the parameter polynomials.

    method "zeta-eta" reconstructs full (alpha, beta) coefficients from runs
    at (zeta, eta) points; method "alpha" runs at beta = 1 - alpha and returns
    the univariate specialization (compare against K_mu with beta
    substituted)."""
    mu = Partition(mu)
    if mu == Partition():
        return RPoly.one()
    if mu.multiplicity(1):
        raise ValueError("mu must have no part 1")
    g = mu.weight - len(mu)
    support = []
    for w in range(2, mu.weight + len(mu) + 1):
        support.extend(enumerate_partitions(w, min_part=2, max_part=g + 2))
    if pool is None:
        lo = mu.weight
        hi = mu.weight + 2
        while sum(len(enumerate_partitions(w)) for w in range(lo, hi + 1)) < len(support) + 8:
            hi += 1
        pool = [lam for w in range(lo, hi + 1) for lam in enumerate_partitions(w)]
    pool = [Partition(lam) for lam in pool]
    max_weight = max(lam.weight for lam in pool)
    max_order = g + 2

    degree = mu.weight
    if method == "zeta-eta":
        pts = samples or ZETA_ETA_SAMPLES
        need = (degree + 1) * (degree + 2) // 2 + 3
        if len(pts) < need:
            raise FitError(f"need {need} (zeta, eta) samples, got {len(pts)}")
        pts = pts[:need]
        modes = [Mode.zeta_eta(z, e) for (z, e) in pts]
        ab_samples = [(m.alpha.as_fraction(), m.beta.as_fraction()) for m in modes]
    elif method == "alpha":
        pts = samples or ALPHA_SAMPLES
        need = degree + 3
        if len(pts) < need:
            raise FitError(f"need {need} alpha samples, got {len(pts)}")
        pts = pts[:need]
        modes = [Mode.alpha_mode(al) for al in pts]
        ab_samples = list(pts)
    else:
        raise ValueError("method must be 'zeta-eta' or 'alpha'")

    per_sample = []
    for mode in modes:
        tables = cached_tables(max_weight, mode)
        matrix = []
        rhs = []
        for lam in pool:
            rvals = cumulants(lam, max_order, mode, "R").values
            row = []
            for rho in support:
                v = ONE
                for part in rho:
                    v = v * rvals[part]
                row.append(v)
            matrix.append(row)
            rhs.append(vartheta(lam, mu, tables=tables))
        try:
            rep = linsolve(matrix, rhs)
        except LinsolveError as exc:
            if exc.kind == "underdetermined":
                raise FitError(
                    f"evaluation matrix for {mu} is rank deficient; enlarge the pool"
                ) from exc
            raise
        per_sample.append([v.as_fraction() for v in rep.solution])

    result = RPoly.zero()
    for idx, rho in enumerate(support):
        vals = [sol[idx] for sol in per_sample]
        if all(v == 0 for v in vals):
            continue
        if method == "zeta-eta":
            coef = _bivariate_reconstruct(ab_samples, vals, degree)
        else:
            coef = _univariate_reconstruct(ab_samples, vals, degree)
        result = result + RPoly.monomial(rho, coef)
    return result


# -- content-power-sum expansion of vartheta (two-parameter mode) ----------------------

@dataclass
class ContentFit:
    """vartheta(lam, mu) = sum over candidates (r, kappa) of
    coeff * binom(|lam|, r) * p_kappa(content alphabet of lam); coefficients
    are (alpha, beta)-polynomials."""

    mu: Partition
    coeffs: dict  # {(r, Partition): FieldElem}
    integer_coefficients: bool

    def terms_pretty(self):
        chunks = []
        for (r, kappa), c in sorted(self.coeffs.items(), key=lambda kv: (kv[0][0], kv[0][1])):
            name = []
            if r:
                name.append(f"binom(n,{r})")
            if kappa:
                name.append("p_" + "".join(str(k) for k in kappa))
            chunks.append(f"({c.pretty()})*{'*'.join(name) if name else '1'}")
        return " + ".join(chunks)


def content_fit(mu, pool=None, samples=None):
    """Fit the two-parameter vartheta as a polynomial in binom(|lam|, r) and
    the power sums of the content alphabet, reconstructing (alpha, beta)
    coefficients from numeric (zeta, eta) runs."""
    mu = Partition(mu)
    weight = mu.weight
    candidates = []
    for r in range(weight + 1):
        budget = weight - r
        for kappa in _kappas_with_budget(budget):
            candidates.append((r, kappa))
    if pool is None:
        # the pure-binomial candidates binom(|lam|, 0..weight) need at least
        # weight+1 distinct diagram weights in the pool
        lo, hi = weight, weight + max(3, weight)
        pool = [lam for w in range(lo, hi + 1) for lam in enumerate_partitions(w)]
    pool = [Partition(lam) for lam in pool]
    if len(pool) < len(candidates) + 3:
        raise FitError("pool too small for the candidate space")
    max_weight = max(lam.weight for lam in pool)

    degree = weight
    pts = samples or ZETA_ETA_SAMPLES
    need = (degree + 1) * (degree + 2) // 2 + 3
    if len(pts) < need:
        raise FitError(f"need {need} (zeta, eta) samples, got {len(pts)}")
    pts = pts[:need]

    per_sample = []
    ab_samples = []
    for z, e in pts:
        mode = Mode.zeta_eta(z, e)
        ab_samples.append((mode.alpha.as_fraction(), mode.beta.as_fraction()))
        tables = cached_tables(max_weight, mode)
        matrix = []
        rhs = []
        for lam in pool:
            pvals = [v.as_fraction() for v in p_list(content_alphabet(lam, mode), weight)]
            row = []
            for r, kappa in candidates:
                val = Fraction(math.comb(lam.weight, r))
                for k in kappa:
                    val *= pvals[k]
                row.append(FieldElem.const(val))
            matrix.append(row)
            rhs.append(vartheta(lam, mu, tables=tables))
        try:
            rep = linsolve(matrix, rhs)
        except LinsolveError as exc:
            if exc.kind == "underdetermined":
                raise FitError(f"content candidate matrix for {mu} is rank deficient") from exc
            raise
        per_sample.append([v.as_fraction() for v in rep.solution])

    coeffs = {}
    integral = True
    for idx, cand in enumerate(candidates):
        vals = [sol[idx] for sol in per_sample]
        if all(v == 0 for v in vals):
            continue
        poly = _bivariate_reconstruct(ab_samples, vals, degree)
        coeffs[cand] = poly
        if not poly.is_integer_poly():
            integral = False
    return ContentFit(mu=mu, coeffs=coeffs, integer_coefficients=integral)


def _kappas_with_budget(budget):
    """Partitions kappa (parts >= 1) with sum of (part + 1) at most budget."""
    out = []
    for w in range(budget + 1):
        for kappa in enumerate_partitions(w):
            if w + len(kappa) <= budget:
                out.append(kappa)
    return out

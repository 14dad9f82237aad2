"""Jack polynomial power-sum coefficients.

The table theta[lam, rho] collects the coefficients of the integral-form Jack
symmetric function indexed by lam over the power-sum basis, normalized so the
coefficient of p_{1^n} is 1.  Tables are built weight by weight from the pair
of Pieri-type recursions

    theta^lam_{rho down 1}                      = sum_i c_i(lam) theta^{lam+node_i}_rho
    sum_r r (m_r(rho)+1) theta^lam_{rho down r+1} = sum_i c_i(lam) x_i theta^{lam+node_i}_rho

by a double induction on the length and on the last part.  For a source
partition lam of weight w, the two rows with unknown entries are the
partitions obtained by growing the last row and by appending a new row of
size one; they are determined by a 2x2 solve (discriminant c_d c_{d+1} times
the nonzero quantity x_{d+1} - x_d).  When the last part has caught up with
the one above it, growing the last row is impossible, c_d vanishes, and the
same two equations form an overdetermined system in a single unknown; the
seeding of single-row partitions is the d = 1 case of the same step, starting
from theta[(1), (1)] = 1.  Dependencies only ever point at sources with
smaller length or smaller last part, so one pass over sources sorted by
(length, last part) fills each new weight.

An independent Gram-Schmidt construction over the monomial basis, using the
alpha-deformed power-sum inner product, is provided as an oracle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .algebra import ALPHA, ONE, ZERO, FieldElem, LinsolveError, linsolve
from .modes import Mode
from .partitions import (
    Partition,
    add_node,
    dominates,
    down_part,
    enumerate_partitions,
    stats,
)


@dataclass
class PieriRow:
    """Transition weights c_1..c_{l+1} for adding one node to lam; rows where
    the result is not a partition carry weight exactly 0.  The weights sum
    to 1."""

    lam: Partition
    mode: Mode
    coeffs: list

    def __iter__(self):
        return iter(self.coeffs)


def pieri_row(lam, mode=None):
    mode = mode or Mode.symbolic()
    lam = Partition(lam)
    l = len(lam)
    parts = list(lam) + [0]
    coeffs = []
    for i in range(1, l + 2):
        li = parts[i - 1]
        if mode.kind == "alpha":
            lead_den = mode.alpha * li + (l - i + 2)
        else:
            lead_den = (l - i + 2) * mode.zeta - li * mode.eta
        if lead_den.is_zero():
            raise ZeroDivisionError(
                f"transition weight denominator vanishes at row {i} of {lam}"
            )
        if mode.kind == "alpha":
            c = ONE / lead_den
        else:
            c = mode.zeta / lead_den
        for j in range(1, l + 2):
            if j == i:
                continue
            lj = parts[j - 1]
            if mode.kind == "alpha":
                num = mode.alpha * (li - lj) + (j - i + 1)
                den = mode.alpha * (li - lj) + (j - i)
            else:
                num = (j - i + 1) * mode.zeta + (lj - li) * mode.eta
                den = (j - i) * mode.zeta + (lj - li) * mode.eta
            if den.is_zero():
                raise ZeroDivisionError(
                    f"transition weight factor ({j},{i}) of {lam} has vanishing denominator"
                )
            c = c * num / den
        coeffs.append(c)
    total = ZERO
    for c in coeffs:
        total = total + c
    assert total == ONE, f"transition weights of {lam} do not sum to 1"
    return PieriRow(lam=lam, mode=mode, coeffs=coeffs)


class ThetaTable:
    """Exact map (lam, rho) -> theta coefficient for all pairs of a given
    weight."""

    __slots__ = ("n", "mode", "entries")

    def __init__(self, n, mode, entries):
        self.n = n
        self.mode = mode
        self.entries = entries

    def __getitem__(self, key):
        lam, rho = key
        return self.entries[(Partition(lam), Partition(rho))]

    def rows(self):
        return self.entries.items()

    def to_json_rows(self):
        out = []
        for (lam, rho), val in sorted(self.entries.items()):
            out.append({"lambda": lam.text(), "rho": rho.text(), "value": val.text()})
        return out


def theta_tables(n, mode=None):
    """ThetaTable for every weight 0..n."""
    mode = mode or Mode.symbolic()
    empty = Partition()
    tables = [ThetaTable(0, mode, {(empty, empty): ONE})]
    if n >= 1:
        one = Partition((1,))
        tables.append(ThetaTable(1, mode, {(one, one): ONE}))
    for w in range(1, n):
        prev = tables[w].entries
        new = {}
        sources = sorted(enumerate_partitions(w), key=lambda lam: (len(lam), lam[-1]))
        targets = enumerate_partitions(w + 1)
        for lam in sources:
            _advance(lam, prev, new, targets, mode)
        tables.append(ThetaTable(w + 1, mode, new))
    return tables


def theta_table(n, mode=None):
    return theta_tables(n, mode)[n]


def _advance(lam, prev, new, targets, mode):
    """Solve the recursion at source lam, filling the rows of the two grown
    partitions into `new` (the weight |lam|+1 table under construction)."""
    d = len(lam)
    u = lam[-1]
    row = pieri_row(lam, mode)
    c = row.coeffs
    xv = [mode.node_value(lam, i) for i in range(1, d + 2)]
    grow_last_ok = d == 1 or lam[d - 2] > u
    lam_grow = add_node(lam, d) if grow_last_ok else None
    lam_extend = add_node(lam, d + 1)

    # rows i < d that are valid partitions (c_i = 0 exactly otherwise)
    known_rows = []
    for i in range(1, d):
        if lam[i - 1] < (lam[i - 2] if i >= 2 else math.inf):
            known_rows.append((i, add_node(lam, i)))

    for rho in targets:
        rhs1 = ZERO
        if rho.multiplicity(1):
            rhs1 = prev[(lam, down_part(rho, 1))]
        rhs2 = ZERO
        for r in range(1, rho[0]):
            if rho.multiplicity(r + 1):
                rhs2 = rhs2 + (r * (rho.multiplicity(r) + 1)) * prev[(lam, down_part(rho, r + 1))]
        for i, nu in known_rows:
            t = new[(nu, rho)]
            if not c[i - 1].is_zero():
                rhs1 = rhs1 - c[i - 1] * t
                rhs2 = rhs2 - c[i - 1] * xv[i - 1] * t
        if grow_last_ok:
            rep = linsolve(
                [[c[d - 1], c[d]], [c[d - 1] * xv[d - 1], c[d] * xv[d]]],
                [rhs1, rhs2],
            )
            new[(lam_grow, rho)] = rep.solution[0]
            new[(lam_extend, rho)] = rep.solution[1]
        else:
            rep = linsolve([[c[d]], [c[d] * xv[d]]], [rhs1, rhs2])
            new[(lam_extend, rho)] = rep.solution[0]


def vartheta(lam, mu, mode=None, tables=None):
    """z_mu times the table entry at (lam, mu padded with parts 1 up to
    weight |lam|); the normalized-character generalization."""
    lam = Partition(lam)
    mu = Partition(mu)
    n, r = lam.weight, mu.weight
    if r > n:
        raise ValueError(f"|mu| = {r} exceeds |lambda| = {n}")
    if tables is None:
        tables = theta_tables(n, mode)
    padded = Partition(tuple(sorted(mu + (1,) * (n - r), reverse=True)))
    return FieldElem.const(stats(mu).z) * tables[n].entries[(lam, padded)]


# -- hook products -------------------------------------------------------------

def hook_products(lam, alpha=ALPHA):
    """The two alpha-deformed hook products (h, h'), whose product is the
    squared norm of the integral-form Jack function."""
    lam = Partition(lam)
    conj = lam.conjugate()
    h = ONE
    hp = ONE
    alpha = FieldElem.coerce(alpha)
    for (i, j) in lam.nodes():
        arm = lam[i - 1] - j
        leg = conj[j - 1] - i
        h = h * (FieldElem.const(leg + 1) + alpha * arm)
        hp = hp * (FieldElem.const(leg) + alpha * (arm + 1))
    return h, hp


# -- independent oracle: Gram-Schmidt over the monomial basis -------------------

def powersum_in_monomials(n):
    """{rho: {mu: int coefficient of m_mu in p_rho}} for all |rho| = n."""
    out = {}
    for rho in enumerate_partitions(n):
        exp = {Partition(): 1}
        for part in rho:
            nxt = {}
            for mu, coef in exp.items():
                grown = Partition(tuple(sorted(mu + (part,), reverse=True)))
                nxt[grown] = nxt.get(grown, 0) + coef * grown.multiplicity(part)
                for v in sorted(set(mu)):
                    bumped = list(mu)
                    bumped.remove(v)
                    bumped.append(v + part)
                    nu = Partition(tuple(sorted(bumped, reverse=True)))
                    nxt[nu] = nxt.get(nu, 0) + coef * nu.multiplicity(v + part)
            exp = nxt
        out[rho] = exp
    return out


def monomial_in_powersums(n):
    """{mu: {rho: Fraction}} inverting powersum_in_monomials on weight n."""
    plist = enumerate_partitions(n)
    p2m = powersum_in_monomials(n)
    index = {mu: i for i, mu in enumerate(plist)}
    size = len(plist)
    # Gauss-Jordan over Q on the matrix whose (mu, rho) entry is [m_mu] p_rho
    aug = [[Fraction(0)] * (2 * size) for _ in range(size)]
    for jcol, rho in enumerate(plist):
        for mu, coef in p2m[rho].items():
            aug[index[mu]][jcol] = Fraction(coef)
    for i in range(size):
        aug[i][size + i] = Fraction(1)
    for col in range(size):
        piv = next(r for r in range(col, size) if aug[r][col])
        aug[col], aug[piv] = aug[piv], aug[col]
        pv = aug[col][col]
        aug[col] = [x / pv for x in aug[col]]
        for r in range(size):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    out = {}
    for i, mu in enumerate(plist):
        out[mu] = {
            rho: aug[index[rho]][size + i]
            for rho in plist
            if aug[index[rho]][size + i]
        }
    return out


def _pvec_inner(v1, v2, alpha):
    """Inner product of two p-basis coefficient dicts under
    <p_lam, p_mu> = delta alpha^l(lam) z_lam."""
    acc = ZERO
    for rho, a in v1.items():
        b = v2.get(rho)
        if b:
            acc = acc + (a * b * stats(rho).z) * alpha ** len(rho)
    return acc


def theta_table_gram_schmidt(n, mode=None):
    """Oracle for theta_table: orthogonalize the monomial basis against the
    dominance order (refined to reverse lexicographic) under the deformed
    power-sum inner product, then rescale each row so the coefficient of
    p_{1^n} is 1.  Must agree entrywise with the recursion."""
    mode = mode or Mode.symbolic()
    if mode.kind != "alpha":
        raise ValueError("the Gram-Schmidt oracle is defined in alpha mode")
    alpha = mode.alpha
    plist = enumerate_partitions(n)  # rev-lex: a linear extension of dominance
    m2p = monomial_in_powersums(n)
    ascending = list(reversed(plist))
    basis = []  # pairs (lam, p-basis dict of FieldElem)
    for lam in ascending:
        vec = {rho: FieldElem.const(c) for rho, c in m2p[lam].items()}
        for mu, pvec, norm in basis:
            coef = _pvec_inner(vec, pvec, alpha) / norm
            if coef.is_zero():
                continue
            for rho, val in pvec.items():
                vec[rho] = vec.get(rho, ZERO) - coef * val
        vec = {rho: val for rho, val in vec.items() if not val.is_zero()}
        basis.append((lam, vec, _pvec_inner(vec, vec, alpha)))
    ones = Partition((1,) * n) if n else Partition()
    entries = {}
    for lam, pvec, _norm in basis:
        lead = pvec[ones]
        for rho in plist:
            entries[(lam, rho)] = pvec.get(rho, ZERO) / lead
    return ThetaTable(n, mode, entries)


def jack_norm_from_table(table, lam, alpha=ALPHA):
    """<J_lam, J_lam> computed from a theta table row."""
    lam = Partition(lam)
    acc = ZERO
    for rho in enumerate_partitions(lam.weight):
        v = table.entries[(lam, rho)]
        acc = acc + v * v * stats(rho).z * FieldElem.coerce(alpha) ** len(rho)
    return acc


def jack_cross_norm_from_table(table, lam, mu, alpha=ALPHA):
    """<J_lam, J_mu> from table rows (0 for lam != mu)."""
    acc = ZERO
    for rho in enumerate_partitions(Partition(lam).weight):
        acc = acc + table.entries[(Partition(lam), rho)] * table.entries[
            (Partition(mu), rho)
        ] * stats(rho).z * FieldElem.coerce(alpha) ** len(rho)
    return acc

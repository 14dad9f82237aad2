"""Mechanical checks of the structural theorems and positivity conjectures
about the Kerov polynomials, reported as data.

Each claim is a named check producing {claim_id, statement, status, witness?};
failures are findings, never crashes, so a falsified conjecture at larger r
surfaces as a reportable result.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .algebra import ALPHA, BETA, FieldElem, MultiPoly
from .kerov import (
    RPoly,
    c_poly,
    component,
    from_basis,
    grade,
    kerov_rows,
    kerov_tilde,
    normalized_monomial,
    q_poly,
    reassemble,
    stirling_first_unsigned,
    to_basis,
)
from .partitions import Partition, enumerate_partitions

ALL_CLAIMS = (
    "thm7",
    "thm8",
    "thm9",
    "thm10",
    "conj1",
    "conj2",
    "conj5",
    "conj8",
    "stirling",
    "closed22",
    "closed33",
    "cneg",
)

#: the degree-4 structure table entering the weight r-3 component formula
_F20_TABLE = {
    Partition((4,)): 3,
    Partition((3, 1)): 8,
    Partition((2, 2)): 10,
    Partition((2, 1, 1)): 16,
    Partition((1, 1, 1, 1)): 24,
    Partition((3,)): 20,
    Partition((2, 1)): 36,
    Partition((1, 1, 1)): 48,
    Partition((2,)): 35,
    Partition((1, 1)): 40,
    Partition((1,)): 18,
}


def _result(claim_id, statement, ok, witness=None):
    out = {"claim_id": claim_id, "statement": statement, "status": "pass" if ok else "fail"}
    if witness is not None:
        out["witness"] = witness
    return out


def check_thm7(rows):
    """Top-weight term of K_r is alpha^r R_{r+1}."""
    bad = []
    for r, K in rows.items():
        top = K.weight_component(r + 1)
        expect = RPoly.monomial(Partition((r + 1,)), ALPHA**r)
        if K.max_weight() != r + 1 or not (top - expect).is_zero():
            bad.append((r, top.pretty()))
    return _result(
        "thm7",
        "the weight-(r+1) part of K_r is the single monomial alpha^r R_{r+1}",
        not bad,
        bad or None,
    )


def check_thm8(rows):
    """Weight-r term of K_r is alpha^(r-1) beta (r/2) sum (l-1)! Rnorm; in the
    Q basis the (1,1) component is (r/2) Q_r."""
    bad = []
    for r, K in rows.items():
        expect = q_poly(r) * (ALPHA ** (r - 1) * BETA * Fraction(r, 2))
        if not (K.weight_component(r) - expect).is_zero():
            bad.append(r)
        inq = to_basis(component(K, r, 1, 1), "Q")
        if not (inq - RPoly.monomial(Partition((r,)), FieldElem.const(Fraction(r, 2)))).is_zero():
            bad.append((r, "Q-form"))
    return _result(
        "thm8",
        "the weight-r part of K_r is (r/2) alpha^(r-1) beta Q_r",
        not bad,
        bad or None,
    )


def check_thm9(rows):
    """K_r^(1,0) = (1/4) binom(r+1,3) sum_{|rho|=r-1} l(rho)! Rnorm_rho."""
    bad = []
    for r, K in rows.items():
        acc = RPoly.zero()
        for rho in enumerate_partitions(r - 1, min_part=2):
            acc = acc + normalized_monomial(rho) * FieldElem.const(
                Fraction(math.comb(r + 1, 3), 4) * math.factorial(len(rho))
            )
        if not (component(K, r, 1, 0) - acc).is_zero():
            bad.append(r)
    return _result(
        "thm9",
        "K_r^(1,0) = (1/4) binom(r+1,3) * sum over weight r-1 of l! normalized monomials",
        not bad,
        bad or None,
    )


def check_thm10(rows):
    """K_r^(2,0) = (1/5760) binom(r+1,3) sum (l+2)! f(rho) Rnorm_rho with the
    fixed degree-4 structure table f."""
    from .fits import monomial_dict_value

    bad = []
    for r, K in rows.items():
        acc = RPoly.zero()
        for rho in enumerate_partitions(max(r - 3, 0), min_part=2) if r >= 3 else []:
            fval = monomial_dict_value(_F20_TABLE, tuple(rho))
            acc = acc + normalized_monomial(rho) * FieldElem.const(
                Fraction(math.comb(r + 1, 3), 5760) * math.factorial(len(rho) + 2) * fval
            )
        if not (component(K, r, 2, 0) - acc).is_zero():
            bad.append(r)
    return _result(
        "thm10",
        "K_r^(2,0) matches the binom(r+1,3)/5760-normalized degree-4 structure table",
        not bad,
        bad or None,
    )


def check_conj1(polys):
    """After beta -> 1 - alpha, every coefficient is a polynomial in alpha
    with integer coefficients."""
    bad = []
    one_minus_alpha = FieldElem.const(1) - ALPHA
    for name, K in polys.items():
        spec = K.substitute_parameters({"b": one_minus_alpha})
        for rho, c in spec.terms.items():
            if not c.is_integer_poly():
                bad.append((str(name), tuple(rho), c.pretty()))
    return _result(
        "conj1",
        "at beta = 1 - alpha the coefficients are integer polynomials in alpha",
        not bad,
        bad or None,
    )


def _component_integer_nonneg(comp):
    for c in comp.poly.terms.values():
        q = c.as_fraction()
        if q.denominator != 1 or q < 0:
            return False
    return True


def check_conj2(rows):
    """K_r splits as sum alpha^(r-i) beta^j K_r^(i,j) with 0 <= j <= i,
    2i - j <= r-1, each component homogeneous of weight r-2i+j+1 with
    nonnegative integer coefficients."""
    bad = []
    for r, K in rows.items():
        comps = grade(K, r)
        if not (reassemble(comps, r) - K).is_zero():
            bad.append((r, "reassembly"))
        for comp in comps:
            if not (comp.homogeneous and comp.in_range and _component_integer_nonneg(comp)):
                bad.append((r, comp.i, comp.j, comp.poly.pretty()))
    return _result(
        "conj2",
        "every (i,j) component of K_r is homogeneous, in range, and has nonnegative integer coefficients",
        not bad,
        bad or None,
    )


def check_conj5(rows):
    """Q-basis coefficients of K_r^(i,j) are nonnegative for (i,j) != (0,0)."""
    bad = []
    for r, K in rows.items():
        for comp in grade(K, r):
            if (comp.i, comp.j) == (0, 0):
                continue
            inq = to_basis(comp.poly, "Q")
            for rho, c in inq.terms.items():
                if c.as_fraction() < 0:
                    bad.append((r, comp.i, comp.j, tuple(rho), str(c.as_fraction())))
    return _result(
        "conj5",
        "Q-basis coefficients of every component but (0,0) are nonnegative",
        not bad,
        bad or None,
    )


def check_conj8(tildes):
    """Structure of the tilde family: top weight |mu|-l(mu)+2, components
    indexed by alpha^(m+1-i) beta^j of homogeneous weight m+2-2i+j with
    0 <= j <= i <= m, 2i-j <= m, nonnegative integer coefficients."""
    bad = []
    for mu, Kt in tildes.items():
        m = mu.weight - len(mu)
        if Kt.max_weight() != m + 2:
            bad.append((tuple(mu), "top weight", Kt.max_weight()))
            continue
        comps = grade(Kt, m + 1, weight_of=lambda i, j: m + 2 - 2 * i + j)
        if not (reassemble(comps, m + 1) - Kt).is_zero():
            bad.append((tuple(mu), "reassembly"))
        for comp in comps:
            in_range = 0 <= comp.j <= comp.i <= m and 2 * comp.i - comp.j <= m
            if not (comp.homogeneous and in_range and _component_integer_nonneg(comp)):
                bad.append((tuple(mu), comp.i, comp.j, comp.poly.pretty()))
    return _result(
        "conj8",
        "tilde family: top weight |mu|-l(mu)+2 and nonnegative integer graded components",
        not bad,
        bad or None,
    )


def tilde_q_positivity_report(tildes):
    """Per-component Q-basis positivity status of the tilde family; reported
    only (the (0,0) and (1,1) components are known to go negative)."""
    out = []
    for mu, Kt in tildes.items():
        m = mu.weight - len(mu)
        for comp in grade(Kt, m + 1, weight_of=lambda i, j: m + 2 - 2 * i + j):
            inq = to_basis(comp.poly, "Q")
            nonneg = all(c.as_fraction() >= 0 for c in inq.terms.values())
            out.append(
                {"mu": mu.text(), "i": comp.i, "j": comp.j, "q_nonnegative": nonneg}
            )
    return out


def check_stirling(rows, i_max=3):
    """The linear term of K_r^(i,i) is |s(r, r-i)| R_{r-i+1}."""
    bad = []
    for r, K in rows.items():
        for i in range(1, min(i_max, r - 1) + 1):
            comp = component(K, r, i, i)
            lead = comp.coefficient(Partition((r - i + 1,)))
            expect = FieldElem.const(stirling_first_unsigned(r, r - i))
            if not (lead - expect).is_zero():
                bad.append((r, i, lead.pretty()))
    return _result(
        "stirling",
        "the linear term of K_r^(i,i) is the unsigned Stirling number |s(r, r-i)| times R_{r-i+1}",
        not bad,
        bad or None,
    )


def check_closed33(rows):
    """K_r^(3,3) = (r/48) sum_{i+j=r-2} i (i+1)^2 (i+2) C_i C_j."""
    bad = []
    for r, K in rows.items():
        if r < 5:
            continue
        acc = RPoly.zero()
        for i in range(r - 1):
            j = r - 2 - i
            w = i * (i + 1) ** 2 * (i + 2)
            if w:
                acc = acc + c_poly(i) * c_poly(j) * FieldElem.const(Fraction(r * w, 48))
        if not (component(K, r, 3, 3) - acc).is_zero():
            bad.append(r)
    return _result(
        "closed33",
        "K_r^(3,3) = (r/48) sum_{i+j=r-2} i(i+1)^2(i+2) C_i C_j",
        not bad,
        bad or None,
    )


def check_closed22(rows):
    """K_r^(2,2) = (r/24) (2r(r-1) C_{r-1} + sum_{i+j+k=r-1} i^2(i-1) R_i C_j C_k)."""
    bad = []
    for r, K in rows.items():
        if r < 5:
            continue
        acc = c_poly(r - 1) * FieldElem.const(Fraction(2 * r * r * (r - 1), 24))
        for i in range(2, r):
            w = i * i * (i - 1)
            for j in range(r - i):
                k = r - 1 - i - j
                acc = acc + RPoly.monomial(Partition((i,))) * c_poly(j) * c_poly(k) * FieldElem.const(
                    Fraction(r * w, 24)
                )
        if not (component(K, r, 2, 2) - acc).is_zero():
            bad.append(r)
    return _result(
        "closed22",
        "K_r^(2,2) = (r/24)(2r(r-1) C_{r-1} + sum i^2(i-1) R_i C_j C_k)",
        not bad,
        bad or None,
    )


def check_cneg(rows):
    """The C-basis expansion of K_5^(2,2) has at least one negative
    coefficient (C-positivity fails for j != 0)."""
    if 5 not in rows:
        return _result("cneg", "C-expansion of K_5^(2,2) has a negative coefficient", False, "K_5 not computed")
    inc = to_basis(component(rows[5], 5, 2, 2), "C")
    has_neg = any(c.as_fraction() < 0 for c in inc.terms.values())
    return _result(
        "cneg",
        "the C-basis expansion of K_5^(2,2) has a negative coefficient",
        has_neg,
        None if has_neg else inc.pretty("C"),
    )


def verify(claims=None, r_max=9, tilde_weight_max=6, mode=None, rows=None, tildes=None):
    """Run the requested named checks (default: all) over K_r for r <= r_max
    and the tilde family up to the given weight.  Returns the report list."""
    claims = list(ALL_CLAIMS) if claims is None else list(claims)
    unknown = [c for c in claims if c not in ALL_CLAIMS]
    if unknown:
        raise ValueError(f"unknown claims: {unknown}; available: {ALL_CLAIMS}")
    if rows is None:
        rows = kerov_rows(r_max, mode)
    need_tilde = {"conj8"} & set(claims)
    if tildes is None and need_tilde:
        tildes = {}
        for w in range(2, tilde_weight_max + 1):
            for mu in enumerate_partitions(w, min_part=2):
                tildes[mu] = kerov_tilde(mu, mode)
    report = []
    for claim in claims:
        if claim == "thm7":
            report.append(check_thm7(rows))
        elif claim == "thm8":
            report.append(check_thm8(rows))
        elif claim == "thm9":
            report.append(check_thm9(rows))
        elif claim == "thm10":
            report.append(check_thm10(rows))
        elif claim == "conj1":
            polys = {f"K_{r}": K for r, K in rows.items()}
            if tildes:
                polys.update({f"Kt_{tuple(mu)}": Kt for mu, Kt in tildes.items()})
            report.append(check_conj1(polys))
        elif claim == "conj2":
            report.append(check_conj2(rows))
        elif claim == "conj5":
            report.append(check_conj5(rows))
        elif claim == "conj8":
            report.append(check_conj8(tildes))
        elif claim == "stirling":
            report.append(check_stirling(rows))
        elif claim == "closed22":
            report.append(check_closed22(rows))
        elif claim == "closed33":
            report.append(check_closed33(rows))
        elif claim == "cneg":
            report.append(check_cneg(rows))
    return report

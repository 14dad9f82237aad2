"""Command-line front end: table generation, verification runs, and a
content-addressed on-disk result cache.

Exit codes: 0 success, 1 domain error, 2 verification failure, 64 usage error.
Output symbols are ASCII-stable: `a` for alpha, `b` for beta, `R3` for the
third free cumulant, so golden files diff cleanly.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import tempfile
from fractions import Fraction

from . import ENGINE_VERSION
from .algebra import FieldElem, LinsolveError
from .diagrams import boolean_from_moments, free_from_moments, moment_series
from .fits import FitError, content_fit, fit_structure_function
from .jack import theta_tables
from .kerov import KerovSolveError, RPoly, grade, kerov_polynomial, kerov_rows, kerov_tilde, to_basis
from .modes import Mode
from .partitions import Partition
from .verify import ALL_CLAIMS, verify

USAGE_EXIT = 64
DOMAIN_EXIT = 1
VERIFY_EXIT = 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise SystemExit(USAGE_EXIT)


def _fraction(text):
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational: {text!r}") from exc


def _partition(text):
    try:
        return Partition(tuple(int(p) for p in text.split(",") if p.strip()))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def build_parser():
    parser = _Parser(prog="kerov", description=__doc__)
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    def common(p, cache=True):
        p.add_argument("--mode", choices=("alpha", "zeta-eta"), default="alpha")
        p.add_argument("--zeta", type=_fraction)
        p.add_argument("--eta", type=_fraction)
        p.add_argument("--alpha", type=_fraction, help="numeric specialization of alpha")
        p.add_argument(
            "--independent-beta",
            action="store_true",
            help="keep beta a free indeterminate when alpha is numeric",
        )
        p.add_argument("--format", choices=("text", "json", "csv"), default="text")
        p.add_argument("--out", help="write output here instead of stdout")
        if cache:
            p.add_argument("--cache-dir", default=os.environ.get("KEROV_CACHE"))

    p = sub.add_parser("theta", help="power-sum coefficient table of one weight")
    p.add_argument("--n", type=int, required=True)
    common(p)

    p = sub.add_parser("cumulants", help="moments, Boolean and free cumulants of a diagram")
    p.add_argument("--lambda", dest="lam", type=_partition, required=True)
    p.add_argument("--n", type=int, default=0, help="truncation order (default |lambda|+2)")
    common(p)

    p = sub.add_parser("kerov", help="free-cumulant polynomial of one mu")
    p.add_argument("--mu", type=_partition, required=True)
    common(p)

    p = sub.add_parser("kerov-tilde", help="cumulant-like polynomial of one mu")
    p.add_argument("--mu", type=_partition, required=True)
    common(p)

    p = sub.add_parser("grade", help="(i,j) components of a single-row polynomial")
    p.add_argument("--mu", type=_partition, required=True, help="single part r")
    common(p)

    p = sub.add_parser("qc", help="rewrite a polynomial in the Q or C basis")
    p.add_argument("--mu", type=_partition, required=True)
    p.add_argument("--target", choices=("Q", "C"), default="Q")
    common(p)

    p = sub.add_parser("fit", help="structure-function fit of one (i,j) component family")
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--j", type=int, required=True)
    p.add_argument("--side", choices=("R", "Q"), default="R")
    p.add_argument("--rmax", type=int, default=9)
    common(p)

    p = sub.add_parser("content-fit", help="two-parameter content power-sum expansion")
    p.add_argument("--mu", type=_partition, required=True)
    common(p)

    p = sub.add_parser("verify", help="run named theorem/conjecture checks")
    p.add_argument("--claims", help=f"CSV subset of {','.join(ALL_CLAIMS)}")
    p.add_argument("--rmax", type=int, default=9)
    p.add_argument("--tilde-max", type=int, default=6)
    common(p)

    p = sub.add_parser("table", help="render the polynomial tables up to rmax")
    p.add_argument("--rmax", type=int, default=6)
    common(p)
    return parser


def resolve_mode(args):
    if getattr(args, "zeta", None) is not None or getattr(args, "eta", None) is not None:
        if args.zeta is None or args.eta is None:
            raise ValueError("zeta-eta mode needs both --zeta and --eta")
        return Mode.zeta_eta(args.zeta, args.eta)
    if getattr(args, "mode", "alpha") == "zeta-eta":
        raise ValueError("zeta-eta mode needs --zeta and --eta")
    if getattr(args, "alpha", None) is not None:
        if args.independent_beta:
            from .algebra import BETA

            return Mode("alpha", FieldElem.const(args.alpha), BETA)
        return Mode.alpha_mode(args.alpha)
    return Mode.symbolic()


# -- cache ------------------------------------------------------------------------

def _canon(obj):
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def cache_key(kind, params, mode):
    material = {"kind": kind, "params": params, "mode": list(mode.key()), "engine": ENGINE_VERSION}
    return hashlib.sha256(_canon(material).encode()).hexdigest()


def cache_get(cache_dir, key):
    if not cache_dir:
        return None
    path = os.path.join(cache_dir, key + ".json")
    try:
        with open(path, "r", encoding="utf-8") as fh:
            entry = json.load(fh)
        if entry.get("engine_version") != ENGINE_VERSION:
            return None
        digest = hashlib.sha256(_canon(entry["payload"]).encode()).hexdigest()
        if digest != entry.get("checksum"):
            raise ValueError("checksum mismatch")
        return entry["payload"]
    except FileNotFoundError:
        return None
    except (ValueError, KeyError, json.JSONDecodeError):
        sys.stderr.write(f"warning: corrupt cache entry {key}; recomputing\n")
        return None


def cache_put(cache_dir, key, payload):
    if not cache_dir:
        return
    os.makedirs(cache_dir, exist_ok=True)
    entry = {
        "engine_version": ENGINE_VERSION,
        "checksum": hashlib.sha256(_canon(payload).encode()).hexdigest(),
        "payload": payload,
    }
    fd, tmp = tempfile.mkstemp(dir=cache_dir, suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            json.dump(entry, fh)
        os.replace(tmp, os.path.join(cache_dir, key + ".json"))
    except BaseException:
        try:
            os.unlink(tmp)
        except FileNotFoundError:
            pass
        raise


# -- rendering ---------------------------------------------------------------------

def _ab_groups(poly):
    """Split an RPoly with (alpha, beta)-polynomial coefficients into
    {(a-exp, b-exp): {rho: Fraction}}."""
    groups = {}
    for rho, c in poly.terms.items():
        p = c.as_poly()
        for exp, q in p.terms.items():
            if exp[2] or exp[3]:
                raise ValueError("text rendering expects coefficients in alpha and beta only")
            groups.setdefault((exp[0], exp[1]), {})[rho] = q
    return groups


def _rmono_text(rho, symbol="R"):
    return "*".join(
        f"{symbol}{i}" + (f"^{m}" if m > 1 else "")
        for i, m in sorted(rho.multiplicities().items(), reverse=True)
    )


def _group_poly_text(terms, symbol="R"):
    chunks = []
    ordered = sorted(terms.items(), key=lambda kv: (kv[0].weight, kv[0]), reverse=True)
    for rho, q in ordered:
        mono = _rmono_text(rho, symbol)
        if not mono:
            chunks.append(str(q))
        elif q == 1:
            chunks.append(mono)
        elif q == -1:
            chunks.append(f"-{mono}")
        else:
            chunks.append(f"{q}*{mono}")
    text = chunks[0]
    for c in chunks[1:]:
        text += f" - {c[1:]}" if c.startswith("-") else f" + {c}"
    return text


def render_poly_text(poly, symbol="R"):
    """Paper-style display: terms grouped by a^i*b^j, i descending then j
    descending, multi-term groups parenthesized, all-negative groups pulled
    out behind a minus sign."""
    if poly.is_zero():
        return "0"
    groups = _ab_groups(poly)
    pieces = []
    for (ea, eb) in sorted(groups, reverse=True):
        terms = groups[(ea, eb)]
        prefix = []
        if ea:
            prefix.append("a" if ea == 1 else f"a^{ea}")
        if eb:
            prefix.append("b" if eb == 1 else f"b^{eb}")
        prefix = "*".join(prefix)
        negative = all(q < 0 for q in terms.values())
        shown = {rho: -q for rho, q in terms.items()} if negative else terms
        body = _group_poly_text(shown, symbol)
        if len(shown) > 1:
            piece = f"{prefix}*({body})" if prefix else f"({body})"
        elif prefix:
            if body == "1":
                piece = prefix
            elif body.startswith("-"):
                piece = None  # unreachable: negatives were pulled out
            else:
                # put the rational coefficient first: 5*a^3*R3
                if "*" in body and body.split("*", 1)[0].replace("/", "").replace("-", "").isdigit():
                    q, rest = body.split("*", 1)
                    piece = f"{q}*{prefix}*{rest}"
                elif body[0].isdigit():
                    piece = f"{body}*{prefix}" if body.isdigit() else f"{body}*{prefix}"
                else:
                    piece = f"{prefix}*{body}"
        else:
            piece = body
        pieces.append(("-" if negative else "+", piece))
    sign, first = pieces[0]
    text = f"-{first}" if sign == "-" else first
    for sign, piece in pieces[1:]:
        text += f" {sign} {piece}"
    return text


def render_table(rows, style, header):
    """Render a list of dict rows deterministically in the given style."""
    if style == "json":
        return json.dumps(rows, indent=1, sort_keys=False) + "\n"
    if style == "csv":
        lines = [",".join(header)]
        for row in rows:
            lines.append(",".join(str(row.get(h, "")) for h in header))
        return "\n".join(lines) + "\n"
    if not rows:
        return "\t".join(header) + "\n"
    widths = [max(len(h), max(len(str(r.get(h, ""))) for r in rows)) for h in header]
    out = ["  ".join(h.ljust(w) for h, w in zip(header, widths))]
    for row in rows:
        out.append("  ".join(str(row.get(h, "")).ljust(w) for h, w in zip(header, widths)))
    return "\n".join(out) + "\n"


def _emit(args, text):
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# -- verbs -------------------------------------------------------------------------

def _poly_output(args, poly, mu, mode, basis="R"):
    if args.format == "text":
        return render_poly_text(poly, basis) + "\n"
    obj = poly.to_json(mu=mu, mode=mode, basis=basis)
    if args.format == "json":
        return json.dumps(obj, indent=1) + "\n"
    rows = [{"rho": "[" + ",".join(str(p) for p in t["rho"]) + "]", "coef": t["coef"]} for t in obj["terms"]]
    return render_table(rows, "csv", ["rho", "coef"])


def _cached_poly(args, kind, mu, mode, compute):
    key = cache_key(kind, {"mu": list(mu)}, mode)
    payload = cache_get(args.cache_dir, key)
    if payload is None:
        payload = compute().to_json(mu=mu, mode=mode)
        cache_put(args.cache_dir, key, payload)
    return RPoly.from_json(payload)


def run_theta(args):
    mode = resolve_mode(args)
    key = cache_key("theta", {"n": args.n}, mode)
    payload = cache_get(args.cache_dir, key)
    if payload is None:
        table = theta_tables(args.n, mode)[args.n]
        payload = table.to_json_rows()
        cache_put(args.cache_dir, key, payload)
    _emit(args, render_table(payload, args.format, ["lambda", "rho", "value"]))
    return 0


def run_cumulants(args):
    mode = resolve_mode(args)
    order = args.n or (args.lam.weight + 2)
    M = moment_series(args.lam, order, mode)
    rows = []
    for vec in (M, boolean_from_moments(M), free_from_moments(M)):
        obj = vec.to_json()
        if args.format == "text":
            obj["values"] = "; ".join(v.pretty() for v in vec.values[1:])
        rows.append(obj)
    if args.format == "json":
        _emit(args, json.dumps(rows, indent=1) + "\n")
    else:
        _emit(args, render_table(rows, args.format, ["lambda", "kind", "values"]))
    return 0


def run_kerov(args):
    mode = resolve_mode(args)
    poly = _cached_poly(args, "kerov", args.mu, mode, lambda: kerov_polynomial(args.mu, mode))
    _emit(args, _poly_output(args, poly, args.mu, mode))
    return 0


def run_kerov_tilde(args):
    mode = resolve_mode(args)
    poly = _cached_poly(args, "kerov-tilde", args.mu, mode, lambda: kerov_tilde(args.mu, mode))
    _emit(args, _poly_output(args, poly, args.mu, mode))
    return 0


def run_grade(args):
    mode = resolve_mode(args)
    if len(args.mu) != 1:
        raise ValueError("grade expects a single-part mu")
    r = args.mu[0]
    poly = kerov_polynomial(args.mu, mode)
    rows = []
    for comp in grade(poly, r):
        rows.append(
            {
                "i": comp.i,
                "j": comp.j,
                "weight": comp.weight,
                "homogeneous": comp.homogeneous,
                "in_range": comp.in_range,
                "component": comp.poly.pretty(),
            }
        )
    _emit(args, render_table(rows, args.format, ["i", "j", "weight", "homogeneous", "in_range", "component"]))
    return 0


def run_qc(args):
    mode = resolve_mode(args)
    poly = kerov_polynomial(args.mu, mode)
    rewritten = to_basis(poly, args.target)
    _emit(args, _poly_output(args, rewritten, args.mu, mode, basis=args.target))
    return 0


def run_fit(args):
    rows = kerov_rows(args.rmax, resolve_mode(args))
    fit = fit_structure_function(args.i, args.j, args.side, rows)
    out = [
        {"kappa": "[" + ",".join(str(p) for p in k) + "]", "coef": str(v)}
        for k, v in sorted(fit.coeffs.items())
    ]
    _emit(args, render_table(out, args.format, ["kappa", "coef"]))
    return 0


def run_content_fit(args):
    fit = content_fit(args.mu)
    rows = [
        {
            "binom": r,
            "kappa": "[" + ",".join(str(p) for p in kappa) + "]",
            "coef": c.text(),
            "display": c.pretty(),
        }
        for (r, kappa), c in sorted(fit.coeffs.items())
    ]
    _emit(args, render_table(rows, args.format, ["binom", "kappa", "coef", "display"]))
    return 0


def run_verify(args):
    claims = [c.strip() for c in args.claims.split(",")] if args.claims else None
    report = verify(claims=claims, r_max=args.rmax, tilde_weight_max=args.tilde_max, mode=resolve_mode(args))
    rows = [
        {
            "claim_id": e["claim_id"],
            "status": e["status"],
            "statement": e["statement"],
            "witness": json.dumps(e.get("witness")) if e.get("witness") is not None else "",
        }
        for e in report
    ]
    if args.format == "json":
        _emit(args, json.dumps(report, indent=1, default=str) + "\n")
    else:
        _emit(args, render_table(rows, args.format, ["claim_id", "status", "statement", "witness"]))
    return VERIFY_EXIT if any(e["status"] != "pass" for e in report) else 0


def run_table(args):
    mode = resolve_mode(args)
    rows = []
    for r in range(2, args.rmax + 1):
        poly = _cached_poly(args, "kerov", Partition((r,)), mode, lambda r=r: kerov_polynomial(Partition((r,)), mode))
        rows.append({"mu": f"[{r}]", "kind": "K", "value": render_poly_text(poly)})
    for w in range(4, min(args.rmax, 6) + 1):
        from .partitions import enumerate_partitions

        for mu in enumerate_partitions(w, min_part=2):
            if len(mu) < 2:
                continue
            poly = _cached_poly(args, "kerov-tilde", mu, mode, lambda mu=mu: kerov_tilde(mu, mode))
            rows.append({"mu": mu.text(), "kind": "K~", "value": render_poly_text(poly)})
    _emit(args, render_table(rows, args.format, ["mu", "kind", "value"]))
    return 0


VERBS = {
    "theta": run_theta,
    "cumulants": run_cumulants,
    "kerov": run_kerov,
    "kerov-tilde": run_kerov_tilde,
    "grade": run_grade,
    "qc": run_qc,
    "fit": run_fit,
    "content-fit": run_content_fit,
    "verify": run_verify,
    "table": run_table,
}


def run(argv):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if exc.code is not None else USAGE_EXIT
    try:
        return VERBS[args.verb](args)
    except (ValueError, ZeroDivisionError, LinsolveError, KerovSolveError, FitError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return DOMAIN_EXIT


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()

"""Command line front end: generate, inspect and certify schemes.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 invalid
input file.  Set SCHEME_FORGE_THREADS to cap how many report checks run
concurrently; output bytes do not depend on the thread count.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from . import designs, fission, groups, planes, products, scheme_core
from .scheme_core import FormatError, Scheme, SchemeForgeError

NA = "n/a (hypothesis unmet)"
_POINTWISE_LIMIT = 64  # past this many points, per-point sweeps sample point 0


@dataclass(frozen=True)
class CheckResult:
    name: str
    operation: str
    statement: str
    status: str
    detail: str


@dataclass(frozen=True)
class Report:
    source: str
    n: int
    r: int
    k: int | None
    checks: tuple[CheckResult, ...]

    def to_dict(self) -> dict:
        return {
            "source": self.source,
            "n": self.n,
            "r": self.r,
            "k": self.k,
            "checks": [
                {
                    "name": c.name,
                    "operation": c.operation,
                    "statement": c.statement,
                    "status": c.status,
                    "detail": c.detail,
                }
                for c in self.checks
            ],
            "summary": {
                "pass": sum(1 for c in self.checks if c.status == "pass"),
                "fail": sum(1 for c in self.checks if c.status == "fail"),
                "n/a": sum(1 for c in self.checks if c.status == NA),
            },
        }


def _max_workers() -> int:
    raw = os.environ.get("SCHEME_FORGE_THREADS", "")
    try:
        value = int(raw)
    except ValueError:
        value = os.cpu_count() or 1
    return max(1, value)


def _emit_json(payload) -> None:
    sys.stdout.write(json.dumps(payload, sort_keys=True, indent=2) + "\n")


# --- report context and checks ---


def _build_context(scheme: Scheme, source: str, bound: int, cutoff: int, radius: int) -> dict:
    ctx: dict = {
        "scheme": scheme,
        "source": source,
        "bound": bound,
        "cutoff": cutoff,
        "radius": radius,
        "k": scheme_core.is_k_equivalenced(scheme),
        "symmetric": scheme_core.is_symmetric(scheme),
    }
    ctx["pp"] = None
    ctx["pp_error"] = None
    ctx["structure"] = None
    ctx["aut"] = None
    ctx["aut_error"] = None
    ctx["sigma"] = {}
    ctx["fissions"] = {}
    if ctx["k"] == 4:
        try:
            ctx["pp"] = products.phi_psi(scheme)
        except SchemeForgeError as err:
            ctx["pp_error"] = err
        ctx["structure"] = products.verify_structure_lemmas(scheme)
        try:
            ctx["aut"] = groups.automorphism_group(scheme, bound)
        except groups.BoundExceeded as err:
            ctx["aut_error"] = err
        points = range(scheme.n) if scheme.n <= _POINTWISE_LIMIT else (0,)
        ctx["points"] = tuple(points)
        if ctx["aut"] is not None and ctx["pp"] is not None and ctx["pp"].s3:
            for alpha in ctx["points"]:
                ctx["sigma"][alpha] = groups.sigma_alpha(scheme, alpha, group=ctx["aut"])
        if scheme.r >= 3:
            for alpha in ctx["points"]:
                ctx["fissions"][alpha] = fission.point_fission(scheme, (alpha,))
    else:
        ctx["points"] = ()
    return ctx


def _from_structure(ctx, key):
    report = ctx["structure"]
    if report is None:
        return NA, "needs common valency 4"
    bad = [v for v in report.violations if v.startswith(key + ":")]
    count = report.checked.get(key, 0)
    if bad:
        return "fail", "; ".join(bad)
    return "pass", "%d instances checked" % count


def _check_axioms(ctx):
    s = ctx["scheme"]
    return "pass", "n=%d r=%d, intersection numbers constant" % (s.n, s.r)


def _check_four_equivalenced(ctx):
    k = ctx["k"]
    if k == 4:
        return "pass", "every non-diagonal valency is 4"
    return NA, "valencies are %s" % ("mixed" if k is None else "all %d" % k)


def _check_even_symmetry(ctx):
    k = ctx["k"]
    if k is None or k % 2 != 0:
        return NA, "no even common valency"
    if ctx["symmetric"]:
        return "pass", "k=%d even and every color is self-dual" % k
    return "fail", "k=%d even but some color differs from its dual" % k


def _check_commutative(ctx):
    if not ctx["symmetric"]:
        return NA, "scheme is not symmetric"
    if scheme_core.is_commutative(ctx["scheme"]):
        return "pass", "c(s,t,u) = c(t,s,u) throughout"
    return "fail", "a pair of colors fails to commute"


def _check_pseudocyclic(ctx):
    if ctx["k"] != 4:
        return NA, "needs common valency 4"
    s = ctx["scheme"]
    values = [scheme_core.indistinguishing_number(s, c) for c in s.nondiagonal()]
    if scheme_core.is_pseudocyclic(s) and all(v == 3 for v in values):
        return "pass", "every indistinguishing number equals 3"
    return "fail", "indistinguishing numbers %s" % values


def _check_dichotomy(ctx):
    if ctx["k"] != 4:
        return NA, "needs common valency 4"
    if ctx["pp"] is None:
        return "fail", str(ctx["pp_error"])
    pp = ctx["pp"]
    return "pass", "|s2|=%d |s3|=%d" % (len(pp.s2), len(pp.s3))


def _check_trichotomy(ctx):
    return _from_structure(ctx, "product-trichotomy")


def _check_bijections(ctx):
    return _from_structure(ctx, "phi-psi-bijections")


def _check_partner(ctx):
    if ctx["structure"] is None:
        return NA, "needs common valency 4"
    if ctx["scheme"].r < 5:
        return NA, "fewer than 4 non-diagonal colors"
    return _from_structure(ctx, "four-product-partner")


def _check_independent_split(ctx):
    return _from_structure(ctx, "independent-product-split")


def _check_split_bound(ctx):
    return _from_structure(ctx, "split-intersection-bound")


def _check_sigma_alpha(ctx):
    pp = ctx["pp"]
    if pp is None or not pp.s3:
        return NA, "no color with a 2u+v square"
    if ctx["aut"] is None:
        return NA, "skipped: %s" % ctx["aut_error"]
    missing = [alpha for alpha in ctx["points"] if ctx["sigma"].get(alpha) is None]
    if missing:
        return "fail", "no rotation automorphism at points %s" % missing
    return "pass", "rotation automorphism at %d points" % len(ctx["points"])


def _plane_base(ctx, s, alpha):
    scheme = ctx["scheme"]
    sigma = ctx["sigma"].get(alpha)
    if sigma is not None:
        return planes.sigma_base(scheme, sigma, s, alpha)
    bases = planes.valid_bases(scheme, ctx["pp"], s, alpha)
    if not bases:
        return None
    return bases[0]


def _check_plane_rotation(ctx):
    pp = ctx["pp"]
    if pp is None or not pp.s3:
        return NA, "no color with a 2u+v square"
    scheme = ctx["scheme"]
    built = 0
    for s in sorted(pp.s3):
        base = _plane_base(ctx, s, 0)
        if base is None:
            return "fail", "color %d has no valid base at point 0" % s
        try:
            plane = planes.build_plane(scheme, pp, s, *base, radius=ctx["radius"])
        except SchemeForgeError as err:
            return "fail", "color %d: %s" % (s, err)
        if not planes.check_rotation_invariance(scheme, plane):
            return "fail", "color %d breaks rotation invariance" % s
        built += 1
    return "pass", "%d planes at radius %d, both axes use the two-step rule" % (
        built,
        ctx["radius"],
    )


def _check_plane_alignment(ctx):
    pp = ctx["pp"]
    if pp is None or not pp.s3:
        return NA, "no color with a 2u+v square"
    sigma = ctx["sigma"].get(0)
    if sigma is None:
        return NA, "no rotation automorphism at point 0"
    scheme = ctx["scheme"]
    for s in sorted(pp.s3):
        base = planes.sigma_base(scheme, sigma, s, 0)
        try:
            plane = planes.build_plane(scheme, pp, s, *base, radius=ctx["radius"])
        except SchemeForgeError as err:
            return "fail", "color %d: %s" % (s, err)
        for cell, point in plane.grid.items():
            rotated = planes.rotate(cell)
            if rotated in plane.grid and plane.grid[rotated] != sigma[point]:
                return "fail", "color %d cell %s" % (s, (cell,))
    return "pass", "sigma carries grid(i,j) to grid(-j,i) for all cells"


def _check_rigidity(ctx):
    if ctx["k"] != 4 or ctx["scheme"].r < 4:
        return NA, "needs common valency 4 and at least 3 non-diagonal colors"
    if ctx["aut"] is None:
        return NA, "skipped: %s" % ctx["aut_error"]
    if groups.two_point_rigidity(ctx["scheme"], group=ctx["aut"]):
        return "pass", "only the identity fixes two points"
    return "fail", "a non-identity automorphism fixes two points"


def _check_witness(ctx):
    if ctx["k"] != 4:
        return NA, "needs common valency 4"
    if ctx["aut"] is None:
        return NA, "skipped: %s" % ctx["aut_error"]
    cert = groups.frobenius_witness(ctx["scheme"], group=ctx["aut"], bound=ctx["bound"])
    if cert is None:
        return "fail", "no Frobenius subgroup reproduces the colors"
    return "pass", "witness of order %d = %d x %d, orbitals match" % (
        cert.kernel_size * cert.stabilizer_order,
        cert.kernel_size,
        cert.stabilizer_order,
    )


def _check_semiregular(ctx):
    if ctx["k"] != 4 or ctx["scheme"].r < 3:
        return NA, "needs common valency 4 and at least 2 non-diagonal colors"
    for alpha in ctx["points"]:
        if not fission.is_semiregular_off(ctx["fissions"][alpha], alpha):
            return "fail", "fission at point %d is not semiregular" % alpha
    return "pass", "semiregular off each of %d split points" % len(ctx["points"])


def _check_fiber_rows(ctx):
    if ctx["k"] != 4 or ctx["scheme"].r < 3:
        return NA, "needs common valency 4 and at least 2 non-diagonal colors"
    scheme = ctx["scheme"]
    for alpha in ctx["points"]:
        if not fission.fibers_refine_rows(scheme, ctx["fissions"][alpha], alpha):
            return "fail", "a fiber at point %d straddles two rows" % alpha
    return "pass", "fibers sit inside single rows at %d split points" % len(ctx["points"])


def _check_base_number(ctx):
    if ctx["k"] != 4:
        return NA, "needs common valency 4"
    scheme = ctx["scheme"]
    pp = ctx["pp"]
    if pp is not None and pp.s2 and scheme.r >= 3:
        pair = None
        for beta in range(1, scheme.n):
            if int(scheme.color[0, beta]) in pp.s2:
                pair = (0, beta)
                break
        if pair is None:
            return "fail", "no pair with a doubled-square color"
        if not fission.point_fission(scheme, pair).is_complete:
            return "fail", "pair %s does not complete" % (pair,)
        semi = _check_semiregular(ctx)
        if semi[0] != "pass":
            return "fail", "pair completes but single points were not ruled out"
        return "pass", "base number 2, witness pair %s of color %d" % (
            pair,
            int(scheme.color[pair]),
        )
    if scheme.n > _POINTWISE_LIMIT:
        return NA, "recorded only for small schemes"
    try:
        size, witness = fission.find_base(scheme, ctx["cutoff"])
    except fission.CutoffExceeded:
        return NA, "recorded: base number exceeds cutoff %d" % ctx["cutoff"]
    return NA, "recorded: base number %d, witness %s (no doubled-square color)" % (
        size,
        witness,
    )


def _check_design(ctx):
    if ctx["k"] != 4:
        return NA, "needs common valency 4"
    design = designs.scheme_to_design(ctx["scheme"])
    if designs.verify_design(design, t=2, k=4, lam=3):
        return "pass", "%d blocks, every pair in exactly 3" % len(design.blocks)
    return "fail", "%d blocks fail the 2-design count" % len(design.blocks)


CHECKS = (
    ("scheme-axioms", "validate",
     "diagonal color, dual pairing and constant intersection numbers", _check_axioms),
    ("four-equivalenced", "is_k_equivalenced",
     "every non-diagonal relation has valency 4", _check_four_equivalenced),
    ("even-valency-symmetry", "is_symmetric",
     "an even common valency forces every relation to be self-paired", _check_even_symmetry),
    ("symmetry-commutativity", "is_commutative",
     "symmetric schemes are commutative", _check_commutative),
    ("pseudocyclic", "is_pseudocyclic",
     "common valency 4 forces every indistinguishing number to be 3", _check_pseudocyclic),
    ("square-dichotomy", "phi_psi",
     "each color square is 4*1 + 3s or 4*1 + 2u + v", _check_dichotomy),
    ("product-trichotomy", "product_class",
     "distinct-color products take one of three shapes decided by phi", _check_trichotomy),
    ("phi-psi-bijections", "verify_structure_lemmas",
     "phi and psi permute the 2u+v colors with psi = phi o phi", _check_bijections),
    ("four-product-partner", "complex_product",
     "with at least 4 non-diagonal colors, every color has a partner with a 4-element product",
     _check_partner),
    ("independent-product-split", "wr",
     "colors with disjoint closures multiply into 4 new colors", _check_independent_split),
    ("split-intersection-bound", "complex_product",
     "phi-image and psi-image products of independent pairs share at most one color",
     _check_split_bound),
    ("sigma-alpha", "sigma_alpha",
     "each point admits an order-4 automorphism rotating its rows", _check_sigma_alpha),
    ("plane-rotation", "check_rotation_invariance",
     "colors from the origin are constant on quarter-turn orbits of the plane",
     _check_plane_rotation),
    ("plane-alignment", "build_plane",
     "the rotation automorphism carries plane cell (i,j) to cell (-j,i)", _check_plane_alignment),
    ("two-point-rigidity", "two_point_rigidity",
     "an automorphism fixing two points is the identity", _check_rigidity),
    ("frobenius-witness", "frobenius_witness",
     "some Frobenius permutation group has exactly these orbitals", _check_witness),
    ("fission-semiregularity", "is_semiregular_off",
     "individualizing one point leaves a semiregular configuration off it", _check_semiregular),
    ("fission-fiber-rows", "point_fission",
     "fibers of a one-point fission refine that point's relation rows", _check_fiber_rows),
    ("base-number", "base_number",
     "two points, one pair with a doubled-square color, force the discrete fission",
     _check_base_number),
    ("block-design", "verify_design",
     "relation rows form a 2-design with block size 4 and pair count 3", _check_design),
)


def build_report(scheme: Scheme, source: str, bound: int = groups.DEFAULT_BOUND,
                 cutoff: int = fission.DEFAULT_CUTOFF,
                 radius: int = planes.DEFAULT_RADIUS) -> Report:
    """Run every registered check; results are ordered by the registry."""
    ctx = _build_context(scheme, source, bound, cutoff, radius)
    results: list[CheckResult | None] = [None] * len(CHECKS)

    def run_one(index: int) -> None:
        name, operation, statement, func = CHECKS[index]
        status, detail = func(ctx)
        results[index] = CheckResult(name, operation, statement, status, detail)

    workers = _max_workers()
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            list(pool.map(run_one, range(len(CHECKS))))
    else:
        for index in range(len(CHECKS)):
            run_one(index)
    return Report(source, scheme.n, scheme.r, ctx["k"], tuple(results))


def _print_report(report: Report) -> None:
    print("scheme: %s  n=%d r=%d k=%s" % (report.source, report.n, report.r, report.k))
    for c in report.checks:
        tag = {"pass": "pass", "fail": "FAIL"}.get(c.status, " n/a")
        print("[%s] %-26s %s" % (tag, c.name, c.detail))
    counts = report.to_dict()["summary"]
    print("summary: %d pass / %d fail / %d n/a" % (counts["pass"], counts["fail"], counts["n/a"]))


# --- subcommands ---


def _load_scheme(path: str) -> Scheme:
    return scheme_core.load_asc(path)


def _cmd_gen(args) -> int:
    if args.family == "cyclotomic":
        group = groups.cyclotomic_frobenius(args.p)
    else:
        group = groups.vector_frobenius(args.p, args.d)
    scheme = groups.orbital_scheme(group)
    if args.group_out:
        groups.save_perm(group, args.group_out)
    if args.out:
        scheme_core.save_asc(scheme, args.out)
        print("wrote %s: n=%d r=%d" % (args.out, scheme.n, scheme.r))
    else:
        sys.stdout.write(scheme_core.write_asc(scheme))
    return 0


def _cmd_check(args) -> int:
    try:
        scheme = _load_scheme(args.file)
    except FormatError:
        raise
    except SchemeForgeError as err:
        print("invalid: %s: %s" % (type(err).__name__, err))
        return 1
    print("ok: n=%d r=%d k=%s" % (scheme.n, scheme.r, scheme_core.is_k_equivalenced(scheme)))
    return 0


def _cmd_props(args) -> int:
    scheme = _load_scheme(args.file)
    k = scheme_core.is_k_equivalenced(scheme)
    payload = {
        "n": scheme.n,
        "r": scheme.r,
        "k": k,
        "valencies": [int(v) for v in scheme.valencies],
        "dual": [int(v) for v in scheme.dual],
        "symmetric": scheme_core.is_symmetric(scheme),
        "commutative": scheme_core.is_commutative(scheme),
        "pseudocyclic": scheme_core.is_pseudocyclic(scheme),
        "indistinguishing": [
            scheme_core.indistinguishing_number(scheme, s) for s in scheme.nondiagonal()
        ],
    }
    if k == 4:
        try:
            pp = products.phi_psi(scheme)
            payload["s2"] = sorted(pp.s2)
            payload["s3"] = sorted(pp.s3)
            payload["phi"] = list(pp.phi)
            payload["psi"] = list(pp.psi)
        except SchemeForgeError as err:
            payload["phi_psi_error"] = str(err)
    if args.json:
        _emit_json(payload)
    else:
        for key in sorted(payload):
            print("%s: %s" % (key, payload[key]))
    return 0


def _cmd_lemmas(args) -> int:
    scheme = _load_scheme(args.file)
    report = products.verify_structure_lemmas(scheme)
    if args.json:
        _emit_json(
            {
                "checked": report.checked,
                "violations": report.violations,
                "passed": report.passed,
            }
        )
    else:
        for key in sorted(report.checked):
            print("%s: %d checked" % (key, report.checked[key]))
        for v in report.violations:
            print("violation: %s" % v)
        print("passed" if report.passed else "failed")
    return 0 if report.passed else 1


def _cmd_plane(args) -> int:
    scheme = _load_scheme(args.file)
    pp = products.phi_psi(scheme)
    alpha = args.alpha
    if args.base:
        parts = [int(p) for p in args.base.split(",")]
        if len(parts) != 4:
            print("--base needs four points: beta,gamma,delta,epsilon", file=sys.stderr)
            return 2
        base = (alpha, *parts)
    else:
        aut = groups.automorphism_group(scheme, args.bound)
        sigma = groups.sigma_alpha(scheme, alpha, group=aut)
        if sigma is not None:
            base = planes.sigma_base(scheme, sigma, args.s, alpha)
        else:
            bases = planes.valid_bases(scheme, pp, args.s, alpha)
            if not bases:
                print("no valid base for color %d at point %d" % (args.s, alpha))
                return 1
            base = bases[0]
    plane = planes.build_plane(scheme, pp, args.s, *base, radius=args.radius)
    invariant = planes.check_rotation_invariance(scheme, plane)
    if args.json:
        _emit_json(
            {
                "s": plane.s,
                "base": list(plane.base),
                "radius": args.radius,
                "cells": {"%d,%d" % cell: point for cell, point in plane.grid.items()},
                "rotation_invariant": invariant,
                "axis_rule": "both axes extend by the two-step recurrence",
            }
        )
    else:
        print("plane for color %d, base %s" % (plane.s, list(plane.base)))
        print("axis rule: both axes extend by the two-step recurrence")
        radius = max(abs(i) for i, _ in plane.window)
        for j in range(radius, -radius - 1, -1):
            row = [
                "%4d" % plane.grid[(i, j)] if (i, j) in plane.grid else "   ."
                for i in range(-radius, radius + 1)
            ]
            print(" ".join(row))
        print("rotation invariance: %s" % ("pass" if invariant else "FAIL"))
    return 0 if invariant else 1


def _cmd_fission(args) -> int:
    scheme = _load_scheme(args.file)
    points = tuple(int(p) for p in args.points.split(","))
    report = fission.describe_fission(scheme, points)
    cfg = fission.point_fission(scheme, points)
    if args.json:
        _emit_json(
            {
                "distinguished": list(report.distinguished),
                "num_colors": report.num_colors,
                "num_fibers": report.num_fibers,
                "fibers": [list(f) for f in cfg.fibers],
                "semiregular_off": report.semiregular_off,
                "complete": report.complete,
            }
        )
    else:
        print("distinguished: %s" % (list(report.distinguished),))
        print("colors: %d  fibers: %d" % (report.num_colors, report.num_fibers))
        for fiber in cfg.fibers:
            print("fiber: %s" % (list(fiber),))
        print("complete: %s" % report.complete)
        if report.semiregular_off is None:
            print("semiregular off every split point")
        else:
            print("not semiregular off point %d" % report.semiregular_off)
    return 0


def _cmd_base(args) -> int:
    scheme = _load_scheme(args.file)
    try:
        size, witness = fission.find_base(scheme, args.cutoff)
    except fission.CutoffExceeded as err:
        if args.json:
            _emit_json({"cutoff": args.cutoff, "error": str(err)})
        else:
            print("base number exceeds cutoff %d" % args.cutoff)
        return 1
    if args.json:
        _emit_json({"base_number": size, "witness": list(witness)})
    else:
        print("base number: %d  witness: %s" % (size, list(witness)))
    return 0


def _cmd_aut(args) -> int:
    scheme = _load_scheme(args.file)
    group = groups.automorphism_group(scheme, args.bound)
    order = groups.group_order(group)
    if args.out:
        groups.save_perm(group, args.out)
    if args.json:
        _emit_json(
            {
                "order": order,
                "generators": [list(g) for g in group.generators],
            }
        )
    else:
        print("order: %d" % order)
        for g in group.generators:
            print(" ".join(str(v) for v in g))
    return 0


def _cmd_frobenius(args) -> int:
    if args.file.endswith(".perm"):
        group = groups.load_perm(args.file)
        verdict = groups.frobenius_check(group, args.bound)
        if args.json:
            _emit_json({"frobenius": verdict, "order": groups.group_order(group)})
        else:
            print("frobenius: %s" % verdict)
        return 0 if verdict else 1
    scheme = _load_scheme(args.file)
    cert = groups.frobenius_witness(scheme, bound=args.bound)
    if cert is None:
        if args.json:
            _emit_json({"witness": None})
        else:
            print("no Frobenius witness found")
        return 1
    payload = {
        "order": cert.kernel_size * cert.stabilizer_order,
        "kernel_size": cert.kernel_size,
        "stabilizer_order": cert.stabilizer_order,
        "orbital_match": cert.orbital_match,
        "generators": [list(g) for g in cert.group.generators],
    }
    if args.json:
        _emit_json(payload)
    else:
        print(
            "witness order %d = %d x %d, orbitals match: %s"
            % (payload["order"], cert.kernel_size, cert.stabilizer_order, cert.orbital_match)
        )
    return 0


def _cmd_design(args) -> int:
    scheme = _load_scheme(args.file)
    design = designs.scheme_to_design(scheme)
    ok = designs.verify_design(design, t=2, k=4, lam=3)
    if args.json:
        _emit_json({"n": design.n, "blocks": len(design.blocks), "k": 4, "lambda": 3, "verified": ok})
    else:
        print("design on %d points, %d blocks of size 4: %s" % (design.n, len(design.blocks), "pass" if ok else "FAIL"))
    return 0 if ok else 1


def _cmd_report(args) -> int:
    try:
        scheme = _load_scheme(args.file)
    except FormatError:
        raise
    except SchemeForgeError as err:
        failure = Report(
            args.file,
            0,
            0,
            None,
            (
                CheckResult(
                    "scheme-axioms",
                    "validate",
                    "diagonal color, dual pairing and constant intersection numbers",
                    "fail",
                    "%s: %s" % (type(err).__name__, err),
                ),
            ),
        )
        if args.json:
            _emit_json(failure.to_dict())
        else:
            _print_report(failure)
        return 1
    report = build_report(scheme, args.file, args.bound, args.cutoff, args.radius)
    if args.json:
        _emit_json(report.to_dict())
    else:
        _print_report(report)
    failed = any(c.status == "fail" for c in report.checks)
    return 1 if failed else 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="scheme-forge",
        description="construct, verify and dissect 4-equivalenced association schemes",
    )
    sub = parser.add_subparsers(dest="command")

    gen = sub.add_parser("gen", help="generate a scheme from a group construction")
    gensub = gen.add_subparsers(dest="family")
    cyc = gensub.add_parser("cyclotomic", help="prime field, least multiplier of order 4")
    cyc.add_argument("--p", type=int, required=True)
    vec = gensub.add_parser("vector", help="prime-power vector space, scalar of order 4")
    vec.add_argument("--p", type=int, required=True)
    vec.add_argument("--d", type=int, required=True)
    for g in (cyc, vec):
        g.add_argument("-o", "--output", dest="out", default=None)
        g.add_argument("--group-out", default=None)
        g.set_defaults(func=_cmd_gen)

    def _file_cmd(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("file")
        p.add_argument("--json", action="store_true")
        p.set_defaults(func=func)
        return p

    check = sub.add_parser("check", help="validate a scheme file")
    check.add_argument("file")
    check.set_defaults(func=_cmd_check)

    _file_cmd("props", _cmd_props, "print scheme invariants")
    _file_cmd("lemmas", _cmd_lemmas, "run the product structure sweep")

    plane = _file_cmd("plane", _cmd_plane, "build and print a coordinate plane")
    plane.add_argument("--s", type=int, required=True)
    plane.add_argument("--alpha", type=int, default=0)
    plane.add_argument("--radius", type=int, default=planes.DEFAULT_RADIUS)
    plane.add_argument("--base", default=None, help="beta,gamma,delta,epsilon")
    plane.add_argument("--bound", type=int, default=groups.DEFAULT_BOUND)

    fis = _file_cmd("fission", _cmd_fission, "individualize points and stabilize")
    fis.add_argument("--points", required=True, help="comma-separated point list")

    base = _file_cmd("base", _cmd_base, "smallest point set with a complete fission")
    base.add_argument("--cutoff", type=int, default=fission.DEFAULT_CUTOFF)

    aut = _file_cmd("aut", _cmd_aut, "automorphism group by backtracking")
    aut.add_argument("--bound", type=int, default=groups.DEFAULT_BOUND)
    aut.add_argument("-o", "--output", dest="out", default=None,
                     help="write generators to a .perm file")

    frob = _file_cmd("frobenius", _cmd_frobenius, "Frobenius witness (.asc) or check (.perm)")
    frob.add_argument("--bound", type=int, default=groups.DEFAULT_BOUND)

    _file_cmd("design", _cmd_design, "rows as blocks of a 2-design")

    report = _file_cmd("report", _cmd_report, "run every applicable verifier")
    report.add_argument("--bound", type=int, default=groups.DEFAULT_BOUND)
    report.add_argument("--cutoff", type=int, default=fission.DEFAULT_CUTOFF)
    report.add_argument("--radius", type=int, default=planes.DEFAULT_RADIUS)

    return parser


def run(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        return int(code) if code is not None else 0
    func = getattr(args, "func", None)
    if func is None:
        parser.print_usage(sys.stderr)
        return 2
    try:
        return func(args)
    except FormatError as err:
        print("bad input file: %s" % err, file=sys.stderr)
        return 3
    except OSError as err:
        print("cannot read input: %s" % err, file=sys.stderr)
        return 3
    except SchemeForgeError as err:
        print("%s: %s" % (type(err).__name__, err), file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

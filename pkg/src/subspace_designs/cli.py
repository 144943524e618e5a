"""Command-line front end.

Exit codes: 0 when the requested property holds, 1 when it was verified not
to hold, 2 on usage or input errors.  JSON goes to stdout, diagnostics to
stderr.
"""

from __future__ import annotations

import argparse
import json
import logging
import math
import os
import random
import sys
from typing import Optional, Sequence

from . import constructions as cons
from . import designs
from .errors import DesignError
from .field import _factorize, make_field, parse_field_spec
from .grassmann import enumerate_subspaces, gaussian_binomial, random_subspace
from .linalg import format_subspace

log = logging.getLogger("subspace_designs")


def _dump(obj, fmt: str) -> str:
    if fmt == "table":
        return "\n".join(_table_lines(obj)) + "\n"
    return json.dumps(obj, separators=(",", ":")) + "\n"


def _table_lines(obj, prefix=""):
    if isinstance(obj, dict):
        for k, v in obj.items():
            if isinstance(v, (dict, list)) and k in ("members", "basis"):
                yield f"{prefix}{k}: <{len(v)} entries>"
            elif isinstance(v, dict):
                yield from _table_lines(v, f"{prefix}{k}.")
            else:
                yield f"{prefix}{k}: {json.dumps(v)}"
    else:
        yield f"{prefix}{json.dumps(obj)}"


def _load(path: str) -> dict:
    if path == "-":
        return json.load(sys.stdin)
    with open(path) as fh:
        return json.load(fh)


def _field_of_order(q: int):
    primes = set(_factorize(q))
    if len(primes) != 1:
        raise DesignError(f"{q} is not a prime power")
    p = primes.pop()
    h = round(math.log(q, p))
    return make_field(p, h)


def cmd_construct(args, out) -> int:
    F = parse_field_spec(args.field)
    if args.explore:
        if args.family == "tangent":
            raise DesignError("--explore scans omega and needs --family diverted or secant")
        good = [
            w for w in range(1, F.q)
            if cons.check_coeffs_nonzero(cons.CoefficientScheme(args.family, args.r, args.s, F, w))[0]
        ]
        out.write(_dump({"family": args.family, "r": args.r, "s": args.s,
                         "field": F.spec_string(), "good_omegas": good}, args.format))
        return 0 if good else 1
    omega = args.omega
    if args.family != "tangent" and omega is None:
        w = cons.find_omega(F, args.r, args.s, args.family)
        if w is None:
            log.error("no omega in %s makes every coefficient minor nonzero", F)
            return 1
        omega = int(w)
    scheme = cons.CoefficientScheme(args.family, args.r, args.s, F, omega)
    design = cons.build_design(scheme)
    out.write(_dump(cons.design_to_json(design), args.format))
    return 0


def cmd_verify(args, out) -> int:
    if args.recheck:
        ok, problems = designs.recheck_report(_load(args.recheck))
        for p in problems:
            log.error("%s", p)
        out.write(_dump({"recheck": ok, "problems": problems}, args.format))
        return 0 if ok else 1
    if not args.design:
        raise DesignError("verify needs --design or --recheck")
    F, members = cons.design_from_json(_load(args.design))
    want_weak, want_strong, want_hp = args.weak, args.strong, args.hp
    if not (want_weak or want_strong or want_hp):
        want_weak = want_strong = want_hp = True
    rep = designs.measure(
        members, s=args.s, weak=want_weak, strong=want_strong, hp=want_hp,
        mode=designs.VerifyMode.parse(args.mode), budget=args.budget, threads=args.threads,
    )
    out.write(_dump(designs.report_to_json(rep, members), args.format))
    failed = False
    if rep.hp is not None and not rep.hp.is_generator:
        failed = True
    if args.max_weak is not None and rep.A_weak is not None and rep.A_weak > args.max_weak:
        failed = True
    if args.max_strong is not None and rep.A_strong is not None and rep.A_strong > args.max_strong:
        failed = True
    return 1 if failed else 0


def cmd_dual(args, out) -> int:
    data = _load(args.design)
    F, members = cons.design_from_json(data)
    duals = designs.dualize(members)
    extra = {"dual_of": data.get("family", "members")}
    out.write(_dump(cons.members_to_json(F, duals, **extra), args.format))
    return 0


def cmd_bounds(args, out) -> int:
    res = {
        "finite_bound": designs.lower_bound(args.d, args.k, args.q),
        "closed_field_bound": designs.closed_field_bound(args.d, args.k),
    }
    if args.search:
        # exploratory only: how often random families of the bound's size are higgledy-piggledy
        if args.q is None:
            raise DesignError("--search needs a finite --q field")
        F = parse_field_spec(args.field) if args.field else _field_of_order(args.q)
        if F.q != args.q:
            raise DesignError("--field does not have q elements")
        rng = random.Random(args.seed)
        size = res["finite_bound"]
        hits = 0
        for _ in range(args.search):
            fam = [random_subspace(F, args.d + 1, args.k + 1, rng) for _ in range(size)]
            if designs.hp_check(fam, budget=args.budget).is_generator:
                hits += 1
        res["search"] = {"trials": args.search, "family_size": size, "higgledy_piggledy": hits}
    out.write(_dump(res, args.format))
    return 0


def cmd_enumerate(args, out) -> int:
    F = parse_field_spec(args.field)
    if args.count_only:
        out.write(f"{gaussian_binomial(args.m, args.r, F.q)}\n")
        return 0
    total = gaussian_binomial(args.m, args.r, F.q)
    if total > args.budget:
        raise DesignError(f"{total} subspaces exceed the budget {args.budget}")
    first = True
    for U in enumerate_subspaces(F, args.m, args.r):
        if not first:
            out.write("\n")
        out.write(format_subspace(U))
        first = False
    return 0


def cmd_conditions(args, out) -> int:
    F = parse_field_spec(args.field)
    out.write(_dump(cons.existence_conditions(args.r, args.s, F), args.format))
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", help="p, p^h or p^h:modulus=c0,...,1")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--threads", type=int, default=os.cpu_count() or 1)
    common.add_argument("--budget", type=int, default=designs.DEFAULT_BUDGET)
    common.add_argument("--format", choices=("json", "table"), default="json")

    parser = argparse.ArgumentParser(prog="subspace-designs", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", parents=[common], help="build a moment-curve family")
    p.add_argument("--family", choices=cons.FAMILIES, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--omega", type=int, help="canonical integer of omega")
    p.add_argument("--explore", action="store_true", help="list every omega with nonzero minors")
    p.set_defaults(func=cmd_construct, needs_field=True)

    p = sub.add_parser("verify", parents=[common], help="measure a family or recheck a report")
    p.add_argument("--design")
    p.add_argument("--weak", action="store_true")
    p.add_argument("--strong", action="store_true")
    p.add_argument("--hp", action="store_true")
    p.add_argument("--s", type=int, help="rank of the test subspaces (default m - r)")
    p.add_argument("--mode", default="exhaustive", help="exhaustive or sampled:N:SEED")
    p.add_argument("--max-weak", type=int)
    p.add_argument("--max-strong", type=int)
    p.add_argument("--recheck", metavar="REPORT")
    p.set_defaults(func=cmd_verify, needs_field=False)

    p = sub.add_parser("dual", parents=[common], help="orthogonal complements of a family")
    p.add_argument("--design", required=True)
    p.set_defaults(func=cmd_dual, needs_field=False)

    p = sub.add_parser("bounds", parents=[common], help="lower bounds for higgledy-piggledy sets")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--q", type=int, help="field size (omit for an infinite field)")
    p.add_argument("--search", type=int, default=0, metavar="TRIALS")
    p.set_defaults(func=cmd_bounds, needs_field=False)

    p = sub.add_parser("enumerate", parents=[common], help="list all rank-r subspaces of F^m")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--count-only", action="store_true")
    p.set_defaults(func=cmd_enumerate, needs_field=True)

    p = sub.add_parser("conditions", parents=[common], help="sufficient conditions for strong designs")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.set_defaults(func=cmd_conditions, needs_field=True)
    return parser


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.INFO, stream=sys.stderr, format="%(levelname)s: %(message)s")
    if args.needs_field and not args.field:
        log.error("%s needs --field", args.command)
        return 2
    try:
        return args.func(args, out)
    except (DesignError, ValueError, OSError, KeyError) as exc:
        log.error("%s", exc)
        return 2


if __name__ == "__main__":
    sys.exit(main())

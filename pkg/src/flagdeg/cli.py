"""The ``flagdeg`` command line."""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Any, Sequence

from . import acceptance, arcs, deformed, loci, orbit_count, pluecker, quiver, strata
from .errors import FlagdegError, Inconclusive, InvariantViolation, guards_disabled

INT64 = 2**63


class UsageError(Exception):
    pass


def _jsonable(obj: Any) -> Any:
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, int):
        return str(obj) if abs(obj) >= INT64 else obj
    if isinstance(obj, Fraction):
        return _jsonable(obj.numerator) if obj.denominator == 1 else f"{obj.numerator}/{obj.denominator}"
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, set, frozenset)):
        return [_jsonable(x) for x in obj]
    if hasattr(obj, "to_json"):
        return _jsonable(obj.to_json())
    return str(obj)


def _cell(v: Any) -> str:
    return v if isinstance(v, str) else json.dumps(v, sort_keys=True, separators=(",", ":"))


def render_table(data: Any) -> str:
    if isinstance(data, list) and data and all(isinstance(r, dict) for r in data):
        cols = sorted({k for r in data for k in r})
        rows = [cols] + [[_cell(r.get(c, "")) for c in cols] for r in data]
    elif isinstance(data, dict):
        rows = [["key", "value"]] + [[k, _cell(data[k])] for k in sorted(data)]
    elif isinstance(data, list):
        rows = [["value"]] + [[_cell(x)] for x in data]
    else:
        return _cell(data)
    widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in rows]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines)


def emit(data: Any, output: str) -> None:
    data = _jsonable(data)
    if output == "table":
        print(render_table(data))
    else:
        print(json.dumps(data, sort_keys=True, indent=2))


# ------------------------------------------------------------ parsing


def int_list(text: str) -> tuple[int, ...]:
    try:
        text = text.strip()
        if text.startswith("["):
            return tuple(int(x) for x in json.loads(text))
        return tuple(int(x) for x in text.split(",") if x.strip())
    except (ValueError, TypeError) as exc:
        raise argparse.ArgumentTypeError(f"expected a comma separated integer list, got {text!r}") from exc


def json_arg(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise argparse.ArgumentTypeError(f"invalid JSON: {exc}") from exc


def _context(args) -> quiver.QuiverContext:
    e = args.e
    n = args.n if args.n is not None else len(e)
    N = args.N if getattr(args, "N", None) is not None else (e[-1] + 1 if e else n + 1)
    return quiver.QuiverContext(n, N, e)


# ------------------------------------------------------------ commands


def cmd_orbits(args):
    ctx = _context(args)
    out = []
    for r in quiver.enumerate_orbits(ctx):
        label = loci.classify(ctx, r)
        if args.label and label.value != args.label:
            continue
        out.append({"r": r.to_json()["r"], "label": label.value, "m": quiver.ranks_to_mult(r).to_json()["m"]})
    return out


def cmd_classify(args):
    ctx = _context(args)
    r = quiver.RankCollection.from_json(args.r)
    if r.n != ctx.n or r.d != ctx.d:
        raise UsageError("rank collection does not match --n/--N")
    label = loci.classify(ctx, r)
    witness = loci.dominating_witness(ctx, r)
    return {"label": label.value, "witness": list(witness) if witness else None}


def cmd_count(args):
    return orbit_count.count_B(_context(args))


def cmd_genfn(args):
    series = orbit_count.gen_fn_product(args.n, args.trunc)
    out = {"coefficients": [[list(k), v] for k, v in series.items()]}
    if args.check:
        direct = orbit_count.gen_fn_direct(args.n, args.trunc)
        if direct != series:
            raise InvariantViolation("generating function: direct count differs from product formula")
        out["check"] = "product formula matches direct lattice counts"
    return out


def cmd_components(args):
    ctx = _context(args)
    out = []
    for a in arcs.mf_components(ctx):
        out.append({
            "arcs": [list(x) for x in a.sorted_arcs()],
            "r": [[i, j, v] for (i, j), v in sorted(arcs.rank_of_diagram(ctx, a).items())],
            "N_A": arcs.rep_N_A(ctx, a).to_json()["m"],
        })
    return out


def cmd_grdim(args):
    rep = quiver.RepClass.from_json(args.rep)
    dims = set(rep.dim_vector)
    if len(dims) != 1:
        raise UsageError("grdim expects a representation of dimension vector (N, ..., N)")
    ctx = quiver.QuiverContext(rep.n, dims.pop(), args.e)
    info = strata.grassmannian_dim(ctx, rep, args.seed)
    out = info.to_json()
    out["expected_dim"] = ctx.expected_dim
    return out


def _spec_and_context(args):
    spec = pluecker.ProjectionSpec.from_json(args.spec)
    e = args.e or tuple(range(1, spec.n + 1))
    return spec, quiver.QuiverContext(spec.n, spec.N, e)


def cmd_ideal(args):
    spec, ctx = _spec_and_context(args)
    ideal = pluecker.ideal_generators(spec, ctx)
    return {"count": len(ideal.generators), "generators": [g.to_json() for g in ideal.generators]}


def cmd_straighten(args):
    spec, ctx = _spec_and_context(args)
    mono = [tuple(int(x) for x in v) for v in args.monomial]
    result = pluecker.straighten(mono, spec, ctx)
    terms = [[[list(v) for v in pluecker.display_order(m)], c] for m, c in sorted(result.items())]
    return {"terms": terms}


def cmd_module(args):
    params = deformed.SliceParams.from_json(args.n, args.lambda_ or {})
    alg = deformed.DeformedAlgebra(params)
    if len(args.mu) != args.n:
        raise UsageError("--mu needs n entries")
    module = deformed.build_module(alg, args.mu)
    ess = deformed.essential_monomials(alg, args.mu)
    return {"dim": module.dim, "essential": [[[a, b, s] for (a, b), s in sorted(x.items())] for x in ess]}


def cmd_verify(args):
    results = acceptance.run_all(args.seed, set(args.only) if args.only else None)
    for r in results:
        print(r.line(), file=sys.stderr)
    report = {"criteria": [r.to_json() for r in results], "passed": all(r.passed for r in results)}
    if not report["passed"]:
        raise _Failed(report)
    return report


class _Failed(Exception):
    def __init__(self, report):
        super().__init__("verification failed")
        self.report = report


def build_parser() -> argparse.ArgumentParser:
    def global_options(parser, suppress):
        # accepted before or after the subcommand; the subcommand copy never
        # overrides an explicit top-level value with its default
        kw = {"default": argparse.SUPPRESS} if suppress else {}
        parser.add_argument("--seed", type=int, help="seed for every randomized step", **({"default": 0} | kw))
        parser.add_argument("--guard-override", action="store_true", help="disable size guards", **kw)
        parser.add_argument("--output", choices=("json", "table"), **({"default": "json"} | kw))

    p = argparse.ArgumentParser(prog="flagdeg", description="Exact computations on linear degenerations of flag varieties.")
    global_options(p, False)
    common = argparse.ArgumentParser(add_help=False)
    global_options(common, True)
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, **kw):
        return sub.add_parser(name, parents=[common], **kw)

    def ctx_args(sp, need_N=True):
        sp.add_argument("--n", type=int)
        if need_N:
            sp.add_argument("--N", type=int)
        sp.add_argument("--e", type=int_list, required=True)

    sp = add("orbits", help="enumerate orbits with their locus labels")
    ctx_args(sp)
    sp.add_argument("--label", choices=[x.value for x in loci.LocusLabel])
    sp.set_defaults(func=cmd_orbits)

    sp = add("classify", help="locus of a rank collection")
    ctx_args(sp)
    sp.add_argument("--r", type=json_arg, required=True)
    sp.set_defaults(func=cmd_classify)

    sp = add("count", help="number of flat-irreducible orbits")
    ctx_args(sp)
    sp.set_defaults(func=cmd_count)

    sp = add("genfn", help="generating function coefficients")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--trunc", type=int, required=True)
    sp.add_argument("--check", action="store_true")
    sp.set_defaults(func=cmd_genfn)

    sp = add("components", help="components of the mf-degenerate flag variety")
    ctx_args(sp)
    sp.set_defaults(func=cmd_components)

    sp = add("grdim", help="dimension and components of Gr_e(M)")
    sp.add_argument("--rep", type=json_arg, required=True)
    sp.add_argument("--e", type=int_list, required=True)
    sp.set_defaults(func=cmd_grdim)

    for name, func, help_ in (("ideal", cmd_ideal, "degenerate Plücker generators"),
                              ("straighten", cmd_straighten, "straighten a Plücker monomial")):
        sp = add(name, help=help_)
        sp.add_argument("--spec", type=json_arg, required=True)
        sp.add_argument("--e", type=int_list)
        if name == "straighten":
            sp.add_argument("--monomial", type=json_arg, required=True)
        sp.set_defaults(func=func)

    sp = add("module", help="deformed module dimension and essential monomials")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--lambda", dest="lambda_", type=json_arg)
    sp.add_argument("--mu", type=int_list, required=True)
    sp.set_defaults(func=cmd_module)

    sp = add("verify", help="run the acceptance suite")
    sp.add_argument("--only", type=int_list)
    sp.set_defaults(func=cmd_verify)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.guard_override:
            with guards_disabled():
                result = args.func(args)
        else:
            result = args.func(args)
    except _Failed as exc:
        emit(exc.report, args.output)
        return 1
    except (InvariantViolation, Inconclusive) as exc:
        emit({"error": type(exc).__name__, "invariant": str(exc), "command": args.command,
              "argv": list(argv if argv is not None else sys.argv[1:])}, "json")
        return 1
    except (UsageError, FlagdegError, ValueError, KeyError, TypeError) as exc:
        print(f"flagdeg {args.command}: error: {exc}", file=sys.stderr)
        return 2
    emit(result, args.output)
    return 0


if __name__ == "__main__":
    sys.exit(main())

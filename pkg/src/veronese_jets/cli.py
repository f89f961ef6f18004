"""Command-line driver for the exact jet-ring and module computations.

Subcommands: character, supernomial, jet, fiber, fusion, identities,
accept.  Reports are JSON (default) or CSV on standard output; the JSON
layout is {"command", "params", "character": [{"weight", "q"}], "checks":
[{"name", "status", "detail"}]} plus command-specific extras, with sorted
keys and canonical rationals so identical runs are byte-identical.
timing_ms is included only with --timing.

Exit codes: 0 success/verified, 1 verification mismatch, 2 invalid input,
3 inconclusive truncation.  A key=value config file can supply any flag;
explicit flags win.
"""

import argparse
import csv
import io
import json
import sys
import time
from fractions import Fraction

from . import acceptance
from .characters import (
    demazure_character,
    demazure_level_vector,
    demazure_qdegree_bound,
    global_demazure_character,
    supernomial,
)
from .errors import StabilizationError, TruncationError
from .jets import (
    JetRingSpec,
    quotient_character,
    relation_dump,
    resolve_workers,
    verify_reduced,
)
from .modules import (
    ModuleSpec,
    build_global_demazure,
    cartan_product_law_check,
    default_fiber_qmax,
    demazure_relation_check,
    fiber_dimension,
    fusion_character,
)
from .qseries import LaurentCharacter

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_INCONCLUSIVE = 3

DEFAULT_QMAX_CAP = 12

_IDEAL_ALIASES = {"q": "quadratic", "quadratic": "quadratic", "leading": "leading", "kernel": "kernel"}


def _common_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="key=value file supplying defaults for any flag")
    common.add_argument("--format", choices=("json", "csv"), default=None)
    common.add_argument("--workers", type=int, default=None)
    common.add_argument("--timing", action="store_true", default=None)
    common.add_argument("--qmax-cap", type=int, default=None, dest="qmax_cap")
    return common


def build_parser():
    common = _common_parser()
    parser = argparse.ArgumentParser(prog="veronese-jets", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("character", parents=[common], help="closed-form character of the global module")
    p.add_argument("--l", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--qmax", type=int)
    p.add_argument("--dump-basis", action="store_true", default=None, dest="dump_basis",
                   help="also build the closure and dump its graded basis")

    p = sub.add_parser("supernomial", parents=[common], help="supernomial character table")
    p.add_argument("--l", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--levels", help="comma-separated level vector overriding --l/--n")
    p.add_argument("--qmax", type=int)

    p = sub.add_parser("jet", parents=[common], help="graded quotient of the jet ring")
    p.add_argument("--l", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--qmax", type=int)
    p.add_argument("--tmax", type=int)
    p.add_argument("--ideal", choices=sorted(_IDEAL_ALIASES))
    p.add_argument("--compare", action="store_true", default=None,
                   help="check quadratic = kernel = closed form = Hilbert sum")
    p.add_argument("--generators", action="store_true", default=None,
                   help="include the relation coefficient dump")

    p = sub.add_parser("fiber", parents=[common], help="fiber dimension of the module family")
    p.add_argument("--l", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--qmax", type=int)
    p.add_argument("--point", help="comma-separated rational coordinates (default all 0)")

    p = sub.add_parser("fusion", parents=[common], help="fusion filtration character")
    p.add_argument("--levels", help="comma-separated levels")
    p.add_argument("--points", help="comma-separated distinct rational points")
    p.add_argument("--qmax", type=int)

    p = sub.add_parser("identities", parents=[common], help="symmetric-function identity checks")
    p.add_argument("--l", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--qmax", type=int)

    p = sub.add_parser("accept", parents=[common], help="run the acceptance suite")
    p.add_argument("--profile", default=None, help="parameter grid profile (desk)")
    p.add_argument("--only", help="comma-separated criterion names to run")
    return parser


def _apply_config(args):
    if not getattr(args, "config", None):
        return
    overrides = {}
    with open(args.config) as fh:
        for line in fh:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                raise ValueError("config line is not key=value: %r" % line)
            key, _, value = line.partition("=")
            overrides[key.strip().replace("-", "_")] = value.strip()
    for key, raw in overrides.items():
        if not hasattr(args, key):
            raise ValueError("unknown config key %r" % key)
        if getattr(args, key) is not None:
            continue  # explicit flag wins
        if key in ("l", "n", "qmax", "tmax", "workers", "qmax_cap"):
            setattr(args, key, int(raw))
        elif key in ("timing", "compare", "generators", "dump_basis"):
            setattr(args, key, raw.lower() in ("1", "true", "yes", "on"))
        else:
            setattr(args, key, raw)


def _need(args, *names):
    for name in names:
        if getattr(args, name, None) is None:
            raise ValueError("missing required parameter --%s" % name.replace("_", "-"))


def _check_qmax(args, qmax):
    cap = args.qmax_cap if args.qmax_cap is not None else DEFAULT_QMAX_CAP
    if qmax < 0:
        raise ValueError("qmax must be >= 0")
    if qmax > cap:
        raise ValueError("qmax %d exceeds cap %d (raise with --qmax-cap)" % (qmax, cap))
    return qmax


def _parse_fractions(raw, what):
    try:
        return tuple(Fraction(part.strip()) for part in raw.split(","))
    except (ValueError, ZeroDivisionError):
        raise ValueError("could not parse %s %r as comma-separated rationals" % (what, raw))


def _parse_ints(raw, what):
    try:
        return tuple(int(part.strip()) for part in raw.split(","))
    except ValueError:
        raise ValueError("could not parse %s %r as comma-separated integers" % (what, raw))


def _character_json(char):
    return [{"weight": a, "q": list(char.series(a).as_ints())} for a in char.weights()]


def _report(command, params):
    return {"command": command, "params": params, "character": [], "checks": []}


def _check(name, ok, detail=""):
    return {"name": name, "status": "pass" if ok else "fail", "detail": detail}


def _cmd_character(args):
    _need(args, "l", "n")
    qmax = _check_qmax(args, args.qmax if args.qmax is not None else 6)
    params = {"l": args.l, "n": args.n, "qmax": qmax}
    report = _report("character", params)
    char = global_demazure_character(args.l, args.n, qmax)
    report["character"] = _character_json(char)
    code = EXIT_OK
    if args.dump_basis:
        basis = build_global_demazure(ModuleSpec.make(args.l, args.n, qmax))
        report["basis"] = basis.dump()
        ok = basis.character() == char
        report["checks"].append(_check("closure_matches_character", ok))
        if not ok:
            code = EXIT_MISMATCH
    return code, report


def _cmd_supernomial(args):
    qmax = _check_qmax(args, args.qmax if args.qmax is not None else 6)
    if args.levels is not None:
        levels = _parse_ints(args.levels, "levels")
        if not levels or any(v < 0 for v in levels):
            raise ValueError("levels must be nonnegative integers")
    else:
        _need(args, "l", "n")
        levels = demazure_level_vector(args.l, args.n)
    params = {"levels": list(levels), "qmax": qmax}
    total = sum((k + 1) * v for k, v in enumerate(levels))
    terms = {}
    for a in range(-total, total + 1):
        series = supernomial(levels, a, qmax)
        if not series.is_zero():
            terms[a] = series
    char = LaurentCharacter(qmax, terms)
    report = _report("supernomial", params)
    report["character"] = _character_json(char)
    return EXIT_OK, report


def _cmd_jet(args):
    _need(args, "l", "n")
    qmax = _check_qmax(args, args.qmax if args.qmax is not None else 6)
    ideal = _IDEAL_ALIASES[args.ideal] if args.ideal is not None else "quadratic"
    spec = JetRingSpec.make(args.l, args.n, qmax, args.tmax)
    params = {"l": args.l, "n": args.n, "qmax": qmax, "tmax": spec.tmax, "ideal": ideal}
    report = _report("jet", params)
    workers = args.workers
    char = quotient_character(spec, ideal, workers)
    report["character"] = _character_json(char)
    code = EXIT_OK
    if args.generators:
        if ideal == "kernel":
            raise ValueError("--generators applies to the quadratic or leading ideal only")
        report["generators"] = relation_dump(spec, ideal)
    if args.compare:
        rep = verify_reduced(args.l, args.n, qmax, workers)
        entry = rep["results"][args.n]
        bad = [e for e in entry["compared"] if not e["match"]]
        detail = "" if entry["ok"] else "first mismatch: %r" % bad[0]
        report["checks"].append(
            _check("quadratic_kernel_character_hilbert_agree", entry["ok"], detail)
        )
        if not entry["ok"]:
            code = EXIT_MISMATCH
    return code, report


def _cmd_fiber(args):
    _need(args, "l", "n")
    auto = default_fiber_qmax(args.l, args.n)
    qmax = _check_qmax(args, args.qmax if args.qmax is not None else auto)
    point = (
        _parse_fractions(args.point, "point")
        if args.point is not None
        else (Fraction(0),) * args.n
    )
    params = {
        "l": args.l,
        "n": args.n,
        "qmax": qmax,
        "point": [str(c) for c in point],
    }
    report = _report("fiber", params)
    rep = fiber_dimension(ModuleSpec.make(args.l, args.n, qmax), point)
    report["fiber"] = {
        "total": rep.total,
        "expected": rep.expected,
        "by_weight": [
            {"weight": w, "dim": rep.by_weight[w]} for w in sorted(rep.by_weight)
        ],
    }
    detail = "dimension %d, expected %d" % (rep.total, rep.expected)
    report["checks"].append(_check("fiber_dimension", rep.ok, detail))
    return (EXIT_OK if rep.ok else EXIT_MISMATCH), report


def _cmd_fusion(args):
    _need(args, "levels", "points")
    levels = _parse_ints(args.levels, "levels")
    points = _parse_fractions(args.points, "points")
    equal_levels = len(set(levels)) == 1
    if args.qmax is not None:
        qmax = _check_qmax(args, args.qmax)
    elif equal_levels:
        qmax = _check_qmax(args, demazure_qdegree_bound(levels[0], len(levels)))
    else:
        raise ValueError("--qmax is required for mixed levels")
    params = {
        "levels": list(levels),
        "points": [str(c) for c in points],
        "qmax": qmax,
    }
    report = _report("fusion", params)
    char = fusion_character(levels, points, qmax)
    report["character"] = _character_json(char)
    code = EXIT_OK
    if equal_levels:
        want = demazure_character(levels[0], len(levels), qmax)
        ok = char == want
        report["checks"].append(_check("matches_closed_form", ok))
        if not ok:
            code = EXIT_MISMATCH
    return code, report


def _cmd_identities(args):
    _need(args, "l", "n")
    qmax = _check_qmax(args, args.qmax if args.qmax is not None else 5)
    params = {"l": args.l, "n": args.n, "qmax": qmax}
    report = _report("identities", params)
    rep = demazure_relation_check(args.l, args.n)
    top = rep["top_coefficient"]
    report["checks"] = [
        _check("newton_identity", rep["newton_identity"]),
        _check("masked_identity", rep["masked_identity"]),
        _check("top_coefficient", top["ok"], "got %s expected %s" % (top["got"], top["expected"])),
        _check("cartan_product_law", cartan_product_law_check(args.l, args.n, qmax)),
    ]
    ok = all(c["status"] == "pass" for c in report["checks"])
    return (EXIT_OK if ok else EXIT_MISMATCH), report


def _cmd_accept(args):
    profile = args.profile if args.profile is not None else "desk"
    if profile != "desk":
        raise ValueError("unknown profile %r (available: desk)" % profile)
    names = None
    if args.only is not None:
        names = {part.strip() for part in args.only.split(",")}
        known = {name for name, _ in acceptance.CRITERIA}
        unknown = names - known
        if unknown:
            raise ValueError("unknown criteria: %s" % ", ".join(sorted(unknown)))
    params = {"profile": profile}
    if names is not None:
        params["only"] = sorted(names)
    report = _report("accept", params)
    results = acceptance.run_all(args.workers, names)
    for res in results:
        entry = {"name": res["name"], "status": res["status"], "detail": res["detail"]}
        if args.timing:
            entry["ms"] = res["ms"]
        report["checks"].append(entry)
    statuses = {res["status"] for res in results}
    if "fail" in statuses:
        return EXIT_MISMATCH, report
    if "inconclusive" in statuses:
        return EXIT_INCONCLUSIVE, report
    return EXIT_OK, report


_HANDLERS = {
    "character": _cmd_character,
    "supernomial": _cmd_supernomial,
    "jet": _cmd_jet,
    "fiber": _cmd_fiber,
    "fusion": _cmd_fusion,
    "identities": _cmd_identities,
    "accept": _cmd_accept,
}


def _emit_csv(report, out):
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["kind", "weight_or_name", "k_or_status", "value_or_detail"])
    for entry in report.get("character", ()):
        for k, c in enumerate(entry["q"]):
            writer.writerow(["character", entry["weight"], k, c])
    for check in report.get("checks", ()):
        writer.writerow(["check", check["name"], check["status"], check["detail"]])


def run(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as err:
        return EXIT_OK if err.code == 0 else EXIT_USAGE
    start = time.perf_counter()
    try:
        _apply_config(args)
        if args.workers is None:
            args.workers = resolve_workers()
        handler = _HANDLERS[args.command]
        code, report = handler(args)
    except StabilizationError as err:
        report = _report(args.command, {})
        report["checks"].append(
            {"name": "stabilization", "status": "inconclusive", "detail": str(err)}
        )
        code = EXIT_INCONCLUSIVE
    except (TruncationError, ValueError, OSError) as err:
        print("error: %s" % err, file=sys.stderr)
        return EXIT_USAGE
    if args.timing:
        report["timing_ms"] = int((time.perf_counter() - start) * 1000)
    fmt = args.format if args.format is not None else "json"
    if fmt == "json":
        sys.stdout.write(json.dumps(report, indent=2, sort_keys=True) + "\n")
    else:
        buffer = io.StringIO()
        _emit_csv(report, buffer)
        sys.stdout.write(buffer.getvalue())
    return code


def main(argv=None):
    sys.exit(run(argv))


if __name__ == "__main__":
    main()

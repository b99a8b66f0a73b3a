"""``costas`` command line.

Exit codes: 0 success, 1 negative verdict (e.g. not Costas, nothing found),
2 usage or input error.  ``--json`` prints one JSON document with sorted keys.
Settings can come from a key=value file named by ``$COSTAS_CONFIG`` (or
``--config``); command-line flags win over the file.
"""
from __future__ import annotations

import argparse
import json
import logging
import os
import sys
import time

from . import __version__
from .analysis import (
    cycle_structure,
    find_twins,
    fixed_points,
    is_anti_reflective,
    is_single_periodic,
    parity_census,
)
from .core import equivalence_class, is_costas, is_costas_fast, naive_verify
from .correlation import classify_prime, correlation_surface, family_max_g2, family_max_w1, max_cross
from .database import ArrayDatabase, format_array, parse_array
from .enumeration import DEFAULT_MAX_ORDER, default_workers, enumerate_costas, forbidden_positions
from .errors import CostasError
from .generators import METHODS, ConstructionSpec, enumerate_family, family_order, generate
from .stochastic import MUTATIONS, SearchConfig, deficiency, local_search
from .variants import DotSet, costas_to_ruler, is_honeycomb, is_queens, minimal_blank_rows

CONFIG_ENV = "COSTAS_CONFIG"

# setting name -> (type, default)
SETTINGS = {
    "workers": (int, None),
    "max_order": (int, DEFAULT_MAX_ORDER),
    "max_iters": (int, 2000),
    "restarts": (int, 20),
    "seed": (int, 0),
    "mutation": (str, "pairwise"),
    "kick_limit": (int, 3),
}


class UsageError(Exception):
    pass


def load_config(path) -> dict:
    """Parse a key=value file; blank lines and ``#`` comments are ignored."""
    out = {}
    with open(path) as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise UsageError(f"{path}:{lineno}: expected key=value")
            key, value = (x.strip() for x in line.split("=", 1))
            key = key.replace("-", "_")
            if key not in SETTINGS:
                raise UsageError(f"{path}:{lineno}: unknown setting {key!r}")
            try:
                out[key] = SETTINGS[key][0](value)
            except ValueError:
                raise UsageError(f"{path}:{lineno}: bad value for {key}") from None
    return out


def resolve(args, key):
    flag = getattr(args, key, None)
    if flag is not None:
        return flag
    if key in args.config_values:
        return args.config_values[key]
    if key == "workers":
        return default_workers()
    return SETTINGS[key][1]


def emit(args, payload: dict, human: str):
    if args.json:
        print(json.dumps(payload, sort_keys=True, separators=(",", ":")))
    else:
        print(human)


def progress_printer(label):
    last = [0.0]

    def report(done, total):
        now = time.monotonic()
        if done == total or now - last[0] > 1.0:
            last[0] = now
            print(f"{label}: {done}/{total}", file=sys.stderr, flush=True)

    return report


def _array(text):
    try:
        return parse_array(text)
    except (ValueError, CostasError) as exc:
        raise UsageError(f"cannot parse array {text!r}: {exc}") from None


# ---------------------------------------------------------------------------
# subcommands


def cmd_generate(args):
    if args.all:
        size = args.q or args.p
        if size is None:
            raise UsageError("--all needs --p or --q")
        arrays = sorted(enumerate_family(args.method, size))
        payload = {"method": args.method, "size": size, "order": family_order(args.method, size),
                   "count": len(arrays), "arrays": [list(f) for f in arrays]}
        emit(args, payload, "\n".join(format_array(f) for f in arrays))
        return 0 if arrays else 1
    spec = ConstructionSpec(args.method, p=args.p, m=args.m, q=args.q, alpha=args.alpha, beta=args.beta,
                            c=args.c, t=args.t, t1=args.t1, t2=args.t2)
    out = generate(spec)
    payload = {"method": out.method, "parameters": out.parameters, "array": list(out.permutation),
               "costas": out.verified}
    emit(args, payload, f"{format_array(out.permutation)}\ncostas: {str(out.verified).lower()}")
    return 0 if out.verified else 1


def cmd_verify(args):
    f = _array(args.array)
    if args.method == "naive":
        ok, comparisons = naive_verify(f)
        extra = {"comparisons": comparisons}
    elif args.method == "chang":
        ok, extra = is_costas_fast(f), {}
    else:
        ok, extra = is_costas(f), {}
    payload = {"n": len(f), "costas": ok, "deficiency": deficiency(f), **extra}
    emit(args, payload, f"costas: {str(ok).lower()}")
    return 0 if ok else 1


def cmd_enumerate(args):
    workers = resolve(args, "workers")
    prog = progress_printer(f"enumerate {args.n}") if not args.quiet else None
    res = enumerate_costas(args.n, store=bool(args.list or args.db), workers=workers, rows=args.rows,
                           max_order=resolve(args, "max_order"), progress=prog)
    if args.db:
        ArrayDatabase(args.db).add(args.n, res.arrays, "enumerated")
    payload = res.as_dict()
    human = f"n={res.n} total={res.total} symmetric={res.symmetric} ({res.elapsed:.2f}s)"
    if args.list:
        payload["arrays"] = [list(f) for f in res.arrays]
        human = "\n".join(format_array(f) for f in res.arrays)
    emit(args, payload, human)
    return 0


def cmd_forbidden(args):
    cells = sorted(forbidden_positions(args.n, workers=resolve(args, "workers"),
                                       max_order=resolve(args, "max_order")))
    payload = {"n": args.n, "forbidden": [list(c) for c in cells]}
    emit(args, payload, " ".join(f"({r},{c})" for r, c in cells) or "none")
    return 0


def cmd_correlate(args):
    workers = resolve(args, "workers")
    if args.family:
        if args.size is None:
            raise UsageError("--family needs --size")
        fn = family_max_w1 if args.family == "w1" else family_max_g2
        value = fn(args.size, workers=workers)
        emit(args, {"family": args.family, "size": args.size, "max": value}, f"Psi_{args.family.upper()}({args.size}) = {value}")
        return 0
    if len(args.arrays) != 2:
        raise UsageError("give two arrays or --family")
    f, g = (_array(a) for a in args.arrays)
    if f == g:
        surface = correlation_surface(f, g)
        payload = {"n": len(f), "range": sorted(surface.range())}
        emit(args, payload, "autocorrelation values: " + " ".join(map(str, payload["range"])))
        return 0
    value = max_cross(f, g)
    emit(args, {"n": len(f), "max": value}, f"max cross-correlation: {value}")
    return 0


def cmd_classify(args):
    rows = [classify_prime(p).as_dict() for p in args.primes]
    if args.measure:
        for row in rows:
            row["measured_w1"] = family_max_w1(row["p"], workers=resolve(args, "workers"))
    human = "\n".join(" ".join(f"{k}={row[k]}" for k in sorted(row)) for row in rows)
    emit(args, {"primes": rows}, human)
    return 0


def cmd_analyze(args):
    f = _array(args.array)
    n = len(f)
    cyc = cycle_structure(f)
    costas = is_costas(f)
    report = {
        "n": n,
        "costas": costas,
        "cycles": str(cyc),
        "order": cyc.order,
        "fixed_points": sorted(fixed_points(f)),
        "parity": dict(zip(("ee", "eo", "oe", "oo"), parity_census(f).as_tuple())),
        "queens": is_queens(f),
    }
    if n % 2 == 0:
        report["anti_reflective"] = is_anti_reflective(f)
    if costas:
        report["single_periodic"] = is_single_periodic(f)
        report["minimal_blank_rows"] = minimal_blank_rows(f)
        twins = find_twins(f)
        report["twins"] = [list(t) for t in twins] if twins else None
        if n % 2:
            report["honeycomb"] = is_honeycomb(f)
        if n >= 3:
            ec = equivalence_class(f)
            report["class_size"] = len(ec.members)
            report["symmetric"] = ec.symmetric
    human = "\n".join(f"{k}: {json.dumps(report[k])}" for k in sorted(report))
    emit(args, report, human)
    return 0


def cmd_convert(args):
    f = _array(args.array)
    if args.dotset:
        d = DotSet.from_permutation(f)
        emit(args, json.loads(d.to_json()), d.to_json())
        return 0
    blanks = minimal_blank_rows(f) if args.blank_rows is None else args.blank_rows
    ruler = costas_to_ruler(f, blanks)
    if ruler is None:
        emit(args, {"blank_rows": blanks, "ruler": None}, "no ruler")
        return 1
    emit(args, {"blank_rows": blanks, "length": ruler.length, "ruler": list(ruler.marks)}, str(ruler))
    return 0


def cmd_search(args):
    config = SearchConfig(args.n, mutation=resolve(args, "mutation"), max_iters=resolve(args, "max_iters"),
                          restarts=resolve(args, "restarts"), seed=resolve(args, "seed"),
                          kick_limit=resolve(args, "kick_limit"))
    res = local_search(config, workers=resolve(args, "workers"))
    if args.trace:
        with open(args.trace, "w") as fh:
            fh.write(res.trace_lines())
    payload = {"n": args.n, "found": res.found, "array": list(res.permutation) if res.found else None,
               "restart": res.restart, "iterations": res.iterations, "seed": config.seed}
    human = format_array(res.permutation) if res.found else "not found"
    emit(args, payload, human)
    return 0 if res.found else 1


def cmd_db(args):
    db = ArrayDatabase(args.root)
    if args.action == "add":
        if args.enumerate is not None:
            res = enumerate_costas(args.enumerate, store=True, workers=resolve(args, "workers"),
                                   max_order=resolve(args, "max_order"))
            count = db.add(args.enumerate, res.arrays, "enumerated")
            emit(args, {"n": args.enumerate, "count": count}, f"order {args.enumerate}: {count} arrays")
            return 0
        if args.method and args.size:
            arrays = enumerate_family(args.method, args.size)
            n = family_order(args.method, args.size)
            count = db.add(n, arrays, args.method) if arrays else 0
            emit(args, {"n": n, "count": count}, f"order {n}: {count} arrays")
            return 0 if arrays else 1
        raise UsageError("db add needs --enumerate N or --method M --size S")
    if args.action == "list":
        manifest = db.manifest()
        human = "\n".join(f"{k}: {v['count']} ({', '.join(v['provenance'])})"
                          for k, v in sorted(manifest["orders"].items(), key=lambda kv: int(kv[0])))
        emit(args, manifest, human or "empty")
        return 0
    if args.action == "show":
        if args.n is None:
            raise UsageError("db show needs --n")
        arrays = db.read(args.n)
        emit(args, {"n": args.n, "arrays": [list(f) for f in arrays]}, "\n".join(format_array(f) for f in arrays))
        return 0 if arrays else 1
    problems = db.check()
    emit(args, {"ok": not problems, "problems": problems}, "\n".join(problems) or "ok")
    return 0 if not problems else 1


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--workers", type=int, help="worker processes (default: CPU count)")
    common.add_argument("--config", help=f"key=value settings file (default: ${CONFIG_ENV})")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(prog="costas", description="Costas array toolkit")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", parents=[common], help="build an array from a construction")
    p.add_argument("method", choices=METHODS + ("W1",))
    for name in ("p", "q", "alpha", "beta", "t", "t1", "t2"):
        p.add_argument(f"--{name}", type=int)
    p.add_argument("--m", type=int, default=1)
    p.add_argument("--c", type=int, default=0)
    p.add_argument("--all", action="store_true", help="every distinct array of the family")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("verify", parents=[common], help="test the Costas property")
    p.add_argument("array")
    p.add_argument("--method", choices=("full", "chang", "naive"), default="full")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("enumerate", parents=[common], help="count all Costas arrays of an order")
    p.add_argument("n", type=int)
    p.add_argument("--rows", choices=("all", "chang"), default="all")
    p.add_argument("--max-order", dest="max_order", type=int)
    p.add_argument("--list", action="store_true", help="print the arrays")
    p.add_argument("--db", help="store arrays in this database root")
    p.add_argument("-q", "--quiet", action="store_true")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("forbidden", parents=[common], help="cells no array of order n uses")
    p.add_argument("n", type=int)
    p.add_argument("--max-order", dest="max_order", type=int)
    p.set_defaults(func=cmd_forbidden)

    p = sub.add_parser("correlate", parents=[common], help="cross-correlation of arrays or families")
    p.add_argument("arrays", nargs="*")
    p.add_argument("--family", choices=("w1", "g2"))
    p.add_argument("--size", type=int, help="p for w1, q for g2")
    p.set_defaults(func=cmd_correlate)

    p = sub.add_parser("classify", parents=[common], help="prime classes of the correlation conjecture")
    p.add_argument("primes", type=int, nargs="+")
    p.add_argument("--measure", action="store_true", help="also compute Psi_W1")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("analyze", parents=[common], help="structural report for one array")
    p.add_argument("array")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("convert", parents=[common], help="array to ruler or dot-set JSON")
    p.add_argument("array")
    p.add_argument("--blank-rows", dest="blank_rows", type=int)
    p.add_argument("--dotset", action="store_true")
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("search", parents=[common], help="stochastic local search")
    p.add_argument("n", type=int)
    p.add_argument("--mutation", choices=MUTATIONS)
    p.add_argument("--max-iters", dest="max_iters", type=int)
    p.add_argument("--restarts", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--kick-limit", dest="kick_limit", type=int)
    p.add_argument("--trace", help="write the JSON-lines trace here")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("db", parents=[common], help="array database")
    p.add_argument("action", choices=("add", "list", "show", "check"))
    p.add_argument("root")
    p.add_argument("--enumerate", type=int, metavar="N")
    p.add_argument("--method", choices=METHODS + ("W1",))
    p.add_argument("--size", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--max-order", dest="max_order", type=int)
    p.set_defaults(func=cmd_db)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, stream=sys.stderr)
    try:
        path = args.config or os.environ.get(CONFIG_ENV)
        args.config_values = load_config(path) if path else {}
        return args.func(args)
    except UsageError as exc:
        print(f"costas: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"costas: {exc}", file=sys.stderr)
        return 2
    except (CostasError, ValueError) as exc:
        print(f"costas: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end.

Exit status: 0 success, 1 usage error, 2 verification failure,
3 internal inconsistency (two algorithms disagree), 4 no stabilization
plateau below the ceiling.

CSV columns are fixed: ``canonical_key``, the three partitions, ``value``,
``algorithm``, ``tool_version``.
"""

from __future__ import annotations

import argparse
import csv
import io
import itertools
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import __version__
from .cache import Cache, key_for
from .harness import FORMATTERS, PROFILES, SUITE_NAMES, SuiteSpec, aggregate_status, run_suite
from .kronecker import ALGORITHMS, DVIR_ZERO, KroneckerInternalError, dvir_vanishes, kron, resolve_algorithm
from .partitions import Partition, parse, partitions_of, render
from .reduced import NoPlateauError, ReducedTriple, reduced_by_bdo, reduced_by_stabilization
from .tableaux import lr_coefficient, multi_lr

EXIT_OK, EXIT_USAGE, EXIT_VERIFY, EXIT_INCONSISTENT, EXIT_NO_PLATEAU = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EXIT_USAGE)


def _partition(text: str) -> Partition:
    try:
        return parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _warn(msg: str) -> None:
    print(f"kronred: warning: {msg}", file=sys.stderr)


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")
        return
    try:
        Path(out).write_text(text if text.endswith("\n") else text + "\n", encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot write {out}: {exc}") from None


def _csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


KRON_COLUMNS = ("canonical_key", "lambda", "mu", "nu", "value", "algorithm", "tool_version")
REDUCED_COLUMNS = ("canonical_key", "alpha", "beta", "gamma", "value", "algorithm", "tool_version")


# ---------------------------------------------------------------------------
# coefficient helpers shared by the commands and the sweep workers


def kron_cached(t, algorithm: str | None, cache: Cache, vanishing: bool = True) -> tuple[int, str]:
    """(value, algorithm tag) of k, consulting the cache."""
    t = tuple(Partition(p) for p in t)
    algo = resolve_algorithm(algorithm, t[0].size)
    if not t[0].size == t[1].size == t[2].size:
        return 0, algo
    if vanishing and dvir_vanishes(*t):
        return 0, DVIR_ZERO
    value, _ = cache.lookup("kron", t, algo, lambda: kron(*t, algorithm=algo, vanishing=vanishing).value)
    return value, algo


def _kron_worker(args):
    t, algo = args
    return kron(*t, algorithm=algo).value


def _reduced_worker(args):
    t, method, window = args
    r = ReducedTriple.of(*t)
    if method == "bdo":
        return reduced_by_bdo(r)
    return reduced_by_stabilization(r, window=window).value


# ---------------------------------------------------------------------------
# commands


def cmd_kron(args, cache: Cache) -> int:
    t = (args.lam, args.mu, args.nu)
    if not t[0].size == t[1].size == t[2].size:
        _warn(f"sizes differ ({t[0].size}, {t[1].size}, {t[2].size}); the coefficient is 0")
    key = key_for("kron", t) if t[0].size == t[1].size == t[2].size else "-"
    texts = [render(p) for p in t]
    if args.all_algorithms:
        results = []
        for algo in ALGORITHMS:
            start = time.perf_counter()
            # the length test would answer for every algorithm at once
            value, _ = kron_cached(t, algo, cache, vanishing=False)
            results.append((algo, value, time.perf_counter() - start))
        ok = len({v for _, v, _ in results}) == 1
        verdict = "OK" if ok else "DISAGREE"
        if args.format == "json":
            _emit(json.dumps({"triple": texts, "results": [
                {"algorithm": a, "value": str(v), "seconds": round(s, 6)} for a, v, s in results],
                "verdict": verdict}, indent=2), args.out)
        elif args.format == "csv":
            _emit(_csv(KRON_COLUMNS, [[key, *texts, v, a, __version__] for a, v, _ in results]), args.out)
        else:
            lines = [f"{a} {v}" for a, v, _ in results] + [f"verdict {verdict}"]
            _emit("\n".join(lines), args.out)
        return EXIT_OK if ok else EXIT_INCONSISTENT
    start = time.perf_counter()
    value, algo = kron_cached(t, args.algorithm, cache)
    elapsed = time.perf_counter() - start
    if args.format == "json":
        _emit(json.dumps({"triple": texts, "value": str(value), "algorithm": algo,
                          "seconds": round(elapsed, 6)}, indent=2), args.out)
    elif args.format == "csv":
        _emit(_csv(KRON_COLUMNS, [[key, *texts, value, algo, __version__]]), args.out)
    else:
        _emit(str(value), args.out)
    return EXIT_OK


def cmd_rkron(args, cache: Cache) -> int:
    r = ReducedTriple(args.alpha, args.beta, args.gamma)
    texts = [render(p) for p in r]
    results = []
    stab = None
    if args.method in ("bdo", "both"):
        start = time.perf_counter()
        value, _ = cache.lookup("reduced", r, "bdo", lambda: reduced_by_bdo(r))
        results.append(("bdo", value, time.perf_counter() - start))
    if args.method in ("stab", "both"):
        start = time.perf_counter()
        try:
            stab = reduced_by_stabilization(r, window=args.window, ceiling=args.ceiling)
        except NoPlateauError as exc:
            print(f"kronred: no plateau: {exc}", file=sys.stderr)
            return EXIT_NO_PLATEAU
        cache.put("reduced", key_for("reduced", r), f"stabilization_w{args.window}", stab.value)
        results.append(("stabilization", stab.value, time.perf_counter() - start))
    ok = len({v for _, v, _ in results}) == 1
    verdict = "OK" if ok else "DISAGREE"
    if args.figures and stab is not None:
        from .plotting import plot_stabilization

        exact = next((v for a, v, _ in results if a == "bdo"), None)
        path = Path(args.figures) / "stabilization.png"
        plot_stabilization(stab.values, stab.value, exact, " ".join(texts), path)
    if args.format == "json":
        payload = {"triple": texts, "verdict": verdict if len(results) > 1 else None,
                   "results": [{"method": a, "value": str(v), "seconds": round(s, 6)}
                               for a, v, s in results]}
        if stab is not None:
            payload["stabilization"] = {"levels": {str(n): str(v) for n, v in stab.values.items()},
                                        "window": args.window, "heuristic": True}
        _emit(json.dumps(payload, indent=2), args.out)
    elif args.format == "csv":
        key = key_for("reduced", r)
        _emit(_csv(REDUCED_COLUMNS, [[key, *texts, v, a, __version__] for a, v, _ in results]), args.out)
    elif len(results) == 1:
        _emit(str(results[0][1]), args.out)
    else:
        lines = [f"{a} {v}" for a, v, _ in results]
        lines[-1] += f" (plateau n={stab.n_end - args.window + 1}..{stab.n_end})"
        _emit("\n".join(lines + [f"verdict {verdict}"]), args.out)
    return EXIT_OK if ok else EXIT_INCONSISTENT


def cmd_lr(args, cache: Cache) -> int:
    outer, inners = args.outer, args.inners
    if len(inners) == 2:
        compute = lambda: lr_coefficient(outer, *inners)  # noqa: E731
    else:
        compute = lambda: multi_lr(outer, inners)  # noqa: E731
    value, _ = cache.lookup("lr", (outer, *inners), "lr_tableaux", compute)
    texts = [render(outer)] + [render(p) for p in inners]
    if args.format == "json":
        _emit(json.dumps({"outer": texts[0], "inners": texts[1:], "value": str(value)}, indent=2), args.out)
    elif args.format == "csv":
        _emit(_csv(("canonical_key", "outer", "inners", "value", "algorithm", "tool_version"),
                   [[" ".join(texts), texts[0], " ".join(texts[1:]), value, "lr_tableaux", __version__]]),
              args.out)
    else:
        _emit(str(value), args.out)
    return EXIT_OK


def cmd_verify(args, cache: Cache) -> int:
    names = SUITE_NAMES if args.suite == "all" else (args.suite,)
    if args.suite != "all" and args.suite not in SUITE_NAMES:
        raise UsageError(f"unknown suite {args.suite!r}; valid suites: all, {', '.join(SUITE_NAMES)}")
    specs = [SuiteSpec.for_profile(n, args.profile) for n in names]
    if args.jobs > 1 and len(specs) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            reports = list(pool.map(run_suite, specs, itertools.repeat(args.failure_cap)))
    else:
        reports = [run_suite(s, args.failure_cap) for s in specs]
    _emit(FORMATTERS[args.format](reports), args.out)
    if args.figures:
        from .plotting import plot_verification

        plot_verification(reports, Path(args.figures) / "verification.png")
    return EXIT_OK if aggregate_status(reports) == "pass" else EXIT_VERIFY


def _sweep_triples(kind: str, n: int) -> list:
    if kind == "kron":
        ps = tuple(partitions_of(n))
        return list(itertools.product(ps, ps, ps))
    ps = tuple(p for m in range(n + 1) for p in partitions_of(m))
    return list(itertools.product(ps, ps, ps))


def cmd_sweep(args, cache: Cache) -> int:
    if args.n < 0:
        raise UsageError("--n must be nonnegative")
    triples = _sweep_triples(args.kind, args.n)
    cache_kind = "kron" if args.kind == "kron" else "reduced"
    if args.kind == "kron":
        algo_of = lambda t: resolve_algorithm(args.algorithm, t[0].size)  # noqa: E731
    else:
        tag = "bdo" if args.method == "bdo" else f"stabilization_w{args.window}"
        algo_of = lambda t: tag  # noqa: E731
    rows = {}
    todo = []
    for t in triples:
        key = key_for(cache_kind, t)
        algo = algo_of(t)
        if args.kind == "kron" and dvir_vanishes(*t):
            rows[t] = (key, 0, DVIR_ZERO)
            continue
        hit = cache.get(cache_kind, key, algo)
        if hit is not None:
            rows[t] = (key, hit, algo)
        else:
            todo.append((t, key, algo))
    # one representative per canonical key
    fresh: dict[str, int] = {}
    reps = {}
    for t, key, _ in todo:
        reps.setdefault(key, t)
    work = list(reps.items())
    if args.kind == "kron":
        payloads = [(t, args.algorithm) for _, t in work]
        worker = _kron_worker
    else:
        payloads = [(t, args.method, args.window) for _, t in work]
        worker = _reduced_worker
    try:
        if args.jobs > 1 and len(payloads) > 1:
            with ProcessPoolExecutor(max_workers=args.jobs) as pool:
                values = list(pool.map(worker, payloads, chunksize=16))
        else:
            values = [worker(p) for p in payloads]
    except NoPlateauError as exc:
        print(f"kronred: no plateau: {exc}", file=sys.stderr)
        return EXIT_NO_PLATEAU
    for (key, t), v in zip(work, values):
        fresh[key] = v
        cache.put(cache_kind, key, algo_of(t), v)
    for t, key, algo in todo:
        rows[t] = (key, fresh[key], algo)

    ordered = sorted(rows.items(), key=lambda kv: (kv[1][0], " ".join(render(p) for p in kv[0])))
    columns = KRON_COLUMNS if args.kind == "kron" else REDUCED_COLUMNS
    table = [[key, *(render(p) for p in t), value, algo, __version__] for t, (key, value, algo) in ordered]
    if args.format == "json":
        names = columns[1:4]
        text = json.dumps([{"canonical_key": r[0], "triple": dict(zip(names, r[1:4])), "value": str(r[4]),
                            "algorithm": r[5], "tool_version": r[6]} for r in table], indent=2)
    elif args.format == "text":
        text = "\n".join(f"{r[1]} {r[2]} {r[3]} {r[4]}" for r in table)
    else:
        text = _csv(columns, table)
    _emit(text, args.out)
    if args.figures:
        from .plotting import plot_sweep

        title = f"{args.kind} sweep, n={args.n}" if args.kind == "kron" else f"rkron sweep, sizes <= {args.n}"
        plot_sweep([r[4] for r in table], title, Path(args.figures) / f"sweep_{args.kind}_{args.n}.png")
    return EXIT_OK


def _recompute(rec) -> int | None:
    from .kronecker import kron_value

    parts = [parse(p) for p in rec.canonical_key.split()]
    if rec.kind == "kron":
        return kron_value(*parts, algorithm=rec.algorithm)
    if rec.kind == "reduced":
        r = ReducedTriple.of(*parts)
        if rec.algorithm == "bdo":
            return reduced_by_bdo(r)
        window = int(rec.algorithm.rsplit("_w", 1)[1])
        return reduced_by_stabilization(r, window=window).value
    if rec.kind == "lr":
        outer, inners = parts[0], parts[1:]
        return lr_coefficient(outer, *inners) if len(inners) == 2 else multi_lr(outer, inners)
    return None


def cmd_cache(args, cache: Cache) -> int:
    if args.action == "path":
        _emit(str(cache.path), None)
    elif args.action == "stats":
        by_kind = {}
        for rec in cache.records():
            by_kind[rec.kind] = by_kind.get(rec.kind, 0) + 1
        lines = [f"path {cache.path}", f"records {len(cache)}", f"problems {cache.problems}"]
        lines += [f"kind {k} {v}" for k, v in sorted(by_kind.items())]
        _emit("\n".join(lines), None)
    elif args.action == "clear":
        cache.clear()
        _emit("cleared", None)
    else:
        bad = 0
        for rec in cache.records():
            fresh = _recompute(rec)
            if fresh != int(rec.value):
                bad += 1
                print(f"kronred: cache: corrupt record {rec.kind} {rec.canonical_key!r} "
                      f"({rec.algorithm}) stored {rec.value}, fresh {fresh}", file=sys.stderr)
                cache.put(rec.kind, rec.canonical_key, rec.algorithm, fresh)
        _emit(f"checked {len(cache)} records, {bad} corrupt", None)
        if bad:
            return EXIT_INCONSISTENT
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--no-cache", action="store_true", help="neither read nor write the cache")
    common.add_argument("--cache-dir", help="cache directory (default $KRONRED_CACHE_DIR or ~/.cache/kronred)")
    common.add_argument("--format", choices=("text", "json", "csv"), default=None,
                        help="output format (default text; csv for sweep)")
    common.add_argument("--out", help="write the output to this file instead of stdout")

    p = _Parser(prog="kronred", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"kronred {__version__}")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    k = sub.add_parser("kron", parents=[common], help="Kronecker coefficient k(lam, mu, nu)")
    k.add_argument("lam", type=_partition)
    k.add_argument("mu", type=_partition)
    k.add_argument("nu", type=_partition)
    k.add_argument("--algorithm", choices=("char", "mlr", "ct") + ALGORITHMS)
    k.add_argument("--all-algorithms", action="store_true", help="run all three and compare")
    k.set_defaults(func=cmd_kron)

    r = sub.add_parser("rkron", parents=[common], help="reduced Kronecker coefficient")
    r.add_argument("alpha", type=_partition)
    r.add_argument("beta", type=_partition)
    r.add_argument("gamma", type=_partition)
    r.add_argument("--method", choices=("bdo", "stab", "both"), default="bdo")
    r.add_argument("--window", type=int, default=3, help="plateau length for stabilization")
    r.add_argument("--ceiling", type=int, help="largest padding level tried")
    r.add_argument("--figures", help="directory for the stabilization plot")
    r.set_defaults(func=cmd_rkron)

    lr = sub.add_parser("lr", parents=[common], help="LR or multi-LR coefficient")
    lr.add_argument("outer", type=_partition)
    lr.add_argument("inners", type=_partition, nargs="+")
    lr.set_defaults(func=cmd_lr)

    v = sub.add_parser("verify", parents=[common], help="run verification suites")
    v.add_argument("suite", help="suite name or 'all'")
    v.add_argument("--profile", choices=PROFILES, default="default")
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--failure-cap", type=int, default=None, help="store at most this many failures per suite")
    v.add_argument("--figures", help="directory for the summary plot")
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("sweep", parents=[common], help="table of coefficients at a bound")
    s.add_argument("kind", choices=("kron", "rkron"))
    s.add_argument("--n", type=int, required=True,
                   help="kron: size of every partition; rkron: largest component size")
    s.add_argument("--algorithm", choices=("char", "mlr", "ct") + ALGORITHMS)
    s.add_argument("--method", choices=("bdo", "stab"), default="bdo")
    s.add_argument("--window", type=int, default=3)
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--figures", help="directory for the value histogram")
    s.set_defaults(func=cmd_sweep)

    c = sub.add_parser("cache", parents=[common], help="inspect or check the cache")
    c.add_argument("action", choices=("path", "stats", "clear", "verify"))
    c.set_defaults(func=cmd_cache)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.format is None:
        args.format = "csv" if args.command == "sweep" else "text"
    try:
        cache = Cache(args.cache_dir, enabled=not args.no_cache or args.command == "cache")
        return args.func(args, cache)
    except UsageError as exc:
        print(f"kronred: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"kronred: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except KroneckerInternalError as exc:
        print(f"kronred: internal inconsistency: {exc}", file=sys.stderr)
        return EXIT_INCONSISTENT

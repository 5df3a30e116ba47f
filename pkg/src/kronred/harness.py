"""Bounded exhaustive verification suites.

Each suite sweeps a finite input space in a fixed order and compares two
independent computations of the same quantity.  A suite is a generator of
:class:`Case` records; :func:`run_suite` drains it, keeps the failures and
times the run.  Bounds live in the :class:`SuiteSpec` and are serialized into
every report, so a failure can be reproduced from the report alone.
"""

from __future__ import annotations

import csv
import io
import itertools
import json
import random
import time
import traceback
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterator, NamedTuple

from .contingency import check_forced_structure, count, marginals
from .kronecker import (
    CHAR_SUM,
    MULTI_LR_SUM,
    CONTINGENCY_SUM,
    KroneckerInternalError,
    dvir_vanishes,
    kron_char_sum,
    kron_contingency,
    kron_multi_lr,
    kron_prime,
    kron_value,
)
from .partitions import Partition, partitions_of, render, scale, transpose
from .reduced import (
    ReducedTriple,
    reduced_by_bdo,
    reduced_by_stabilization,
    shift_triple,
    theorem1_general_triple,
    theorem1_triple,
    walls_triple,
)
from .symfun import triple_cauchy_checks, verify_hm_product_identity, verify_schur_kron_identity
from .tableaux import lr_coefficient

SUITE_NAMES = (
    "theorem1",
    "theorem1_general",
    "lemma_shift",
    "lemma_walls",
    "stable_range",
    "lemma25_bound",
    "lemma26_structure",
    "murnaghan_lr",
    "s3_symmetry",
    "transpose_pairs",
    "dvir_vanishing",
    "semigroup_spot",
    "schur_kron_eq4",
    "triple_cauchy_eq7",
    "hm_product_identity",
    "algorithm_agreement",
    "saturation_witness",
)

PROFILES = ("quick", "default", "thorough")

# Hard ceilings on every bound, whatever the profile or override.
GLOBAL_CAPS = {
    "n_max": 9,
    "size_max": 7,
    "offset_max": 3,
    "extra_max": 2,
    "h_max": 6,
    "free_max": 4,
    "d_max": 5,
    "vars_max": 3,
    "sample": 2000,
}

_PROFILE_BOUNDS = {
    "theorem1": ({"n_max": 3}, {"n_max": 5}, {"n_max": 6}),
    "theorem1_general": ({"n_max": 2, "offset_max": 1}, {"n_max": 4, "offset_max": 2},
                         {"n_max": 5, "offset_max": 2}),
    "lemma_shift": ({"n_max": 3, "extra_max": 1}, {"n_max": 5, "extra_max": 1},
                    {"n_max": 6, "extra_max": 1}),
    "lemma_walls": ({"n_max": 3}, {"n_max": 4}, {"n_max": 5}),
    "stable_range": ({"n_max": 5, "h_max": 4}, {"n_max": 8, "h_max": 4}, {"n_max": 9, "h_max": 5}),
    "lemma25_bound": ({"n_max": 4}, {"n_max": 6}, {"n_max": 7}),
    "lemma26_structure": ({"free_max": 1}, {"free_max": 2}, {"free_max": 3}),
    "murnaghan_lr": ({"size_max": 4}, {"size_max": 6}, {"size_max": 7}),
    "s3_symmetry": ({"n_max": 4}, {"n_max": 7}, {"n_max": 8}),
    "transpose_pairs": ({"n_max": 4}, {"n_max": 7}, {"n_max": 8}),
    "dvir_vanishing": ({"n_max": 5}, {"n_max": 7}, {"n_max": 8}),
    "semigroup_spot": ({"n_max": 3}, {"n_max": 4}, {"n_max": 5}),
    "schur_kron_eq4": ({"d_max": 3, "vars_max": 2}, {"d_max": 4, "vars_max": 2},
                       {"d_max": 5, "vars_max": 2}),
    "triple_cauchy_eq7": ({"d_max": 3, "vars_max": 2}, {"d_max": 4, "vars_max": 2},
                          {"d_max": 5, "vars_max": 2}),
    "hm_product_identity": ({"d_max": 3, "vars_max": 2}, {"d_max": 4, "vars_max": 2},
                            {"d_max": 5, "vars_max": 3}),
    "algorithm_agreement": ({"n_max": 4, "sample": 20}, {"n_max": 6, "sample": 150},
                            {"n_max": 7, "sample": 500}),
    "saturation_witness": ({}, {}, {}),
}

# Which algorithm each side uses.  Two sides of one equality never share an
# algorithm when an independent route exists.
_DEFAULT_ALGORITHMS = {
    "theorem1": {"kron": CHAR_SUM, "bdo_inner": MULTI_LR_SUM},
    "theorem1_general": {"kron": CHAR_SUM, "bdo_inner": MULTI_LR_SUM},
    "lemma_shift": {"base": CHAR_SUM, "constructed": MULTI_LR_SUM},
    "lemma_walls": {"base": CHAR_SUM, "constructed": MULTI_LR_SUM},
    "stable_range": {"base": MULTI_LR_SUM, "shifted": CHAR_SUM},
    "lemma25_bound": {"kron": CHAR_SUM},
    "murnaghan_lr": {"stabilization": None},
    "s3_symmetry": {"kron": MULTI_LR_SUM},
    "transpose_pairs": {"kron": MULTI_LR_SUM},
    "dvir_vanishing": {"kron": CHAR_SUM},
    "semigroup_spot": {"kron": CHAR_SUM, "scaled": MULTI_LR_SUM},
    "schur_kron_eq4": {"kron": CHAR_SUM},
    "triple_cauchy_eq7": {"kron": MULTI_LR_SUM},
    "algorithm_agreement": {"reference": CHAR_SUM},
    "saturation_witness": {"kron": None},
}

SAMPLE_SEED = 20240521
SAMPLE_SIZES = (7, 8)


class Case(NamedTuple):
    input: str
    expected: object
    got: object
    ok: bool


@dataclass(frozen=True)
class SuiteSpec:
    name: str
    bounds: dict = field(default_factory=dict)
    algorithms: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.name not in SUITE_NAMES:
            raise ValueError(f"unknown suite {self.name!r}; valid suites: {', '.join(SUITE_NAMES)}")
        for key, value in self.bounds.items():
            cap = GLOBAL_CAPS.get(key)
            if cap is None:
                raise ValueError(f"unknown bound {key!r} for suite {self.name}")
            if not isinstance(value, int) or value < 0 or value > cap:
                raise ValueError(f"bound {key}={value} outside 0..{cap}")

    @classmethod
    def for_profile(cls, name: str, profile: str = "default", **overrides) -> "SuiteSpec":
        if profile not in PROFILES:
            raise ValueError(f"unknown profile {profile!r}; choose from {', '.join(PROFILES)}")
        if name not in SUITE_NAMES:
            raise ValueError(f"unknown suite {name!r}; valid suites: {', '.join(SUITE_NAMES)}")
        bounds = dict(_PROFILE_BOUNDS[name][PROFILES.index(profile)])
        bounds.update(overrides)
        return cls(name, bounds, dict(_DEFAULT_ALGORITHMS.get(name, {})))

    def bound(self, key: str) -> int:
        return self.bounds[key]

    def algorithm(self, key: str):
        return self.algorithms.get(key, _DEFAULT_ALGORITHMS.get(self.name, {}).get(key))

    def to_dict(self) -> dict:
        return {"name": self.name, "bounds": dict(sorted(self.bounds.items())),
                "algorithms": dict(sorted(self.algorithms.items()))}


@dataclass
class VerificationReport:
    suite: SuiteSpec
    cases_run: int
    failures: list
    wall_time: float
    status: str
    failures_total: int = 0
    error: str | None = None

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_dict(self) -> dict:
        return {
            "suite": self.suite.to_dict(),
            "status": self.status,
            "cases_run": self.cases_run,
            "failures_total": self.failures_total,
            "failures": [{"input": i, "expected": str(e), "got": str(g)} for i, e, g in self.failures],
            "wall_time": round(self.wall_time, 3),
            "error": self.error,
        }


# ---------------------------------------------------------------------------
# sweeps


def _triples(n: int) -> Iterator[tuple]:
    ps = tuple(partitions_of(n))
    return itertools.product(ps, ps, ps)


def _all_triples(n_max: int, n_min: int = 1) -> Iterator[tuple]:
    for n in range(n_min, n_max + 1):
        yield from _triples(n)


def _txt(*parts) -> str:
    return " ".join(render(p) if isinstance(p, tuple) else str(p) for p in parts)


def _eq(inp: str, expected, got) -> Case:
    return Case(inp, expected, got, expected == got)


def _suite_theorem1(spec: SuiteSpec):
    algo, inner = spec.algorithm("kron"), spec.algorithm("bdo_inner")
    for lam, mu, nu in _all_triples(spec.bound("n_max")):
        k = kron_value(lam, mu, nu, algorithm=algo)
        g = reduced_by_bdo(theorem1_triple(lam, mu, nu), inner_algorithm=inner)
        yield _eq(_txt(lam, mu, nu), k, g)


def _suite_theorem1_general(spec: SuiteSpec):
    algo, inner = spec.algorithm("kron"), spec.algorithm("bdo_inner")
    top = spec.bound("offset_max")
    for lam, mu, nu in _all_triples(spec.bound("n_max")):
        k = kron_value(lam, mu, nu, algorithm=algo)
        for dl, dm, dc in itertools.product(range(top + 1), repeat=3):
            l, m, c = len(lam) + dl, len(mu) + dm, nu[0] + dc
            r = theorem1_general_triple(lam, mu, nu, l, m, c)
            g = reduced_by_bdo(r, inner_algorithm=inner)
            yield _eq(_txt(lam, mu, nu, f"l={l}", f"m={m}", f"c={c}"), k, g)


FIGURE_SHIFT = (((4, 2, 1), (3, 2, 1, 1), (3, 3, 1), 3, 4),
                ((8, 6, 5), (6, 5, 4, 4), (4, 4, 2, 1, 1, 1, 1, 1, 1, 1, 1, 1)))
FIGURE_WALLS = (((5, 2), (3, 3, 1), (4, 3), 2, 3, 4),
                ((16, 9, 6), (12, 7, 7, 5), (4, 4, 4, 4, 4, 4, 4, 3)))


def _constructed_cases(builder, args, displayed, base_algo, built_algo):
    lam, mu, nu = args[:3]
    built = tuple(tuple(p) for p in builder(*args))
    label = _txt(*args[:3], *args[3:])
    yield _eq(f"construct {label}", _txt(*displayed), _txt(*built))
    yield _eq(f"value {label}", kron_value(lam, mu, nu, algorithm=base_algo),
              kron_value(*built, algorithm=built_algo))


def _suite_lemma_shift(spec: SuiteSpec):
    base, built = spec.algorithm("base"), spec.algorithm("constructed")
    extra = spec.bound("extra_max")
    yield from _constructed_cases(shift_triple, *FIGURE_SHIFT, base, built)
    for lam, mu, nu in _all_triples(spec.bound("n_max")):
        k = kron_value(lam, mu, nu, algorithm=base)
        for dl, dm in itertools.product(range(extra + 1), repeat=2):
            l, m = len(lam) + dl, len(mu) + dm
            t = shift_triple(lam, mu, nu, l, m)
            yield _eq(_txt(lam, mu, nu, f"l={l}", f"m={m}"), k, kron_value(*t, algorithm=built))


def _suite_lemma_walls(spec: SuiteSpec):
    base, built = spec.algorithm("base"), spec.algorithm("constructed")
    yield from _constructed_cases(walls_triple, *FIGURE_WALLS, base, built)
    for lam, mu, nu in _all_triples(spec.bound("n_max")):
        l, m, c = len(lam), len(mu), nu[0]
        t = walls_triple(lam, mu, nu, l, m, c)
        yield _eq(_txt(lam, mu, nu, f"l={l}", f"m={m}", f"c={c}"),
                  kron_value(lam, mu, nu, algorithm=base), kron_value(*t, algorithm=built))


def _first_row_plus(p: tuple, h: int) -> Partition:
    return Partition((p[0] + h,) + tuple(p[1:]))


def _suite_stable_range(spec: SuiteSpec):
    base, shifted = spec.algorithm("base"), spec.algorithm("shifted")
    for lam, mu, nu in _all_triples(spec.bound("n_max")):
        if not (lam[0] >= len(mu) * nu[0] and mu[0] >= len(lam) * nu[0]):
            continue
        k = kron_value(lam, mu, nu, algorithm=base)
        for h in range(1, spec.bound("h_max") + 1):
            t = [_first_row_plus(p, h) for p in (lam, mu, nu)]
            yield _eq(_txt(lam, mu, nu, f"h={h}"), k, kron_value(*t, algorithm=shifted))


def _suite_lemma25_bound(spec: SuiteSpec):
    algo = spec.algorithm("kron")
    for a, b, c in _all_triples(spec.bound("n_max")):
        bound = count(a, b, c)
        k = kron_prime(a, b, c, algorithm=algo).value
        yield Case(_txt(a, b, c), f"<= {bound}", k, k <= bound)


# (a, b, c, h) boxes for the forced-structure family; the first is the
# illustrated instance, the rest are small variations.
FORCED_BOXES = ((5, 4, 2, 4), (2, 2, 1, 1), (3, 2, 1, 2), (2, 3, 2, 1), (3, 3, 1, 0))


def _bounded_partitions(n: int, parts: int, cap: int) -> list:
    if parts == 0:
        return [()] if n == 0 else []
    return [p + (0,) * (parts - len(p)) for p in partitions_of(n, max_length=parts, max_part=cap)]


def forced_family(a: int, b: int, c: int, h: int, f: int) -> Iterator[tuple]:
    """Marginals meeting every hypothesis with exactly ``f`` points off the forced cells.

    The forced cells give alpha = (bc+h, c^(a-1)), beta = (ac+h, c^(b-1)) and
    gamma = ((a+b-1)^c, 1^h); the f free points sit in [2,a] x [2,b] x [1,c]
    and are spread as partitions over the non-first planes.
    """
    box = (b - 1) * c
    for ex in _bounded_partitions(f, a - 1, box):
        for ey in _bounded_partitions(f, b - 1, (a - 1) * c):
            for ez in _bounded_partitions(f, c, (a - 1) * (b - 1)):
                alpha = (b * c + h,) + tuple(c + e for e in ex)
                beta = (a * c + h,) + tuple(c + e for e in ey)
                gamma = tuple(a + b - 1 + e for e in ez) + (1,) * h
                yield alpha, beta, gamma


def _suite_lemma26_structure(spec: SuiteSpec):
    for a, b, c, h in FORCED_BOXES:
        for f in range(spec.bound("free_max") + 1):
            for alpha, beta, gamma in forced_family(a, b, c, h, f):
                rep = check_forced_structure(marginals(alpha, beta, gamma), a, b, c, h)
                inp = f"{_txt(alpha, beta, gamma)} a={a} b={b} c={c} h={h}"
                got = f"arrays={rep.arrays} slabs={rep.forced_slabs_present} tail={rep.tail_exact}"
                if rep.derived and not all(rep.derived.values()):
                    bad = [k for k, v in rep.derived.items() if not v]
                    got += " derived failed: " + "; ".join(bad)
                yield Case(inp, "forced structure", got, rep.holds)


def _suite_murnaghan_lr(spec: SuiteSpec):
    algo = spec.algorithm("stabilization")
    for n in range(spec.bound("size_max") + 1):
        for alpha in partitions_of(n):
            for k in range(n + 1):
                for beta in partitions_of(k):
                    for gamma in partitions_of(n - k):
                        c = lr_coefficient(alpha, beta, gamma)
                        g = reduced_by_stabilization(ReducedTriple(alpha, beta, gamma),
                                                     algorithm=algo).value
                        yield _eq(_txt(alpha, beta, gamma), c, g)


_RAW = {CHAR_SUM: kron_char_sum, MULTI_LR_SUM: kron_multi_lr, CONTINGENCY_SUM: kron_contingency}


def _suite_s3_symmetry(spec: SuiteSpec):
    raw = _RAW[spec.algorithm("kron")]
    for t in _all_triples(spec.bound("n_max")):
        ref = raw(*t).value
        for perm in itertools.permutations(range(3)):
            u = tuple(t[i] for i in perm)
            yield _eq(f"{_txt(*t)} order={''.join(str(i + 1) for i in perm)}", ref, raw(*u).value)


def _suite_transpose_pairs(spec: SuiteSpec):
    raw = _RAW[spec.algorithm("kron")]
    for t in _all_triples(spec.bound("n_max")):
        ref = raw(*t).value
        for skip in range(3):
            u = tuple(p if i == skip else transpose(p) for i, p in enumerate(t))
            yield _eq(f"{_txt(*t)} keep={skip + 1}", ref, raw(*u).value)


def _suite_dvir_vanishing(spec: SuiteSpec):
    raw = _RAW[spec.algorithm("kron")]
    for t in _all_triples(spec.bound("n_max")):
        if dvir_vanishes(*t):
            yield _eq(_txt(*t), 0, raw(*t).value)


def _suite_semigroup_spot(spec: SuiteSpec):
    algo, scaled = spec.algorithm("kron"), spec.algorithm("scaled")
    for t in _all_triples(spec.bound("n_max")):
        if not kron_value(*t, algorithm=algo):
            continue
        for m in (2, 3):
            v = kron_value(*(scale(p, m) for p in t), algorithm=scaled)
            yield Case(f"{_txt(*t)} N={m}", "> 0", v, v > 0)


def _suite_schur_kron_eq4(spec: SuiteSpec):
    algo = spec.algorithm("kron")
    a = b = spec.bound("vars_max")
    oracle = lambda x, y, z: kron_value(x, y, z, algorithm=algo)  # noqa: E731
    for d in range(spec.bound("d_max") + 1):
        for lam in partitions_of(d):
            ok = verify_schur_kron_identity(lam, a, b, oracle)
            yield Case(f"{render(lam)} a={a} b={b}", True, ok, ok)


def _suite_triple_cauchy_eq7(spec: SuiteSpec):
    algo = spec.algorithm("kron")
    a = b = c = spec.bound("vars_max")
    oracle = lambda x, y, z: kron_value(x, y, z, algorithm=algo)  # noqa: E731
    for d in range(spec.bound("d_max") + 1):
        for e, prod, schur, arrays in triple_cauchy_checks(a, b, c, d, oracle):
            yield Case(f"D={d} exponent={','.join(map(str, e))}", prod, (schur, arrays),
                       prod == schur == arrays)


def _suite_hm_product(spec: SuiteSpec):
    top = spec.bound("vars_max")
    for m in range(spec.bound("d_max") + 1):
        for a, b in itertools.product(range(1, top + 1), repeat=2):
            ok = verify_hm_product_identity(m, a, b)
            yield Case(f"m={m} a={a} b={b}", True, ok, ok)


def agreement_sample(count_per_size: int, sizes=SAMPLE_SIZES, seed: int = SAMPLE_SEED) -> list:
    """Seeded sample of distinct ordered triples at each size in ``sizes``."""
    rng = random.Random(seed)
    out = []
    for n in sizes:
        space = list(_triples(n))
        out.extend(rng.sample(space, min(count_per_size, len(space))))
    return out


def _value(raw, t):
    """Coefficient, or the error text when the algorithm reports an impossible sum."""
    try:
        return raw(*t).value
    except KroneckerInternalError as exc:
        return f"internal error: {exc}"


def _suite_algorithm_agreement(spec: SuiteSpec):
    ref = _RAW[spec.algorithm("reference")]
    others = [a for a in (CHAR_SUM, MULTI_LR_SUM, CONTINGENCY_SUM) if a != spec.algorithm("reference")]
    for t in _all_triples(spec.bound("n_max")):
        want = _value(ref, t)
        got = tuple(_value(_RAW[a], t) for a in others)
        yield Case(_txt(*t), want, got, all(g == want for g in got))
    # the sampled sizes above n_max compare against the multi-LR sum only
    sizes = tuple(n for n in SAMPLE_SIZES if n > spec.bound("n_max"))
    other = kron_multi_lr if ref is not kron_multi_lr else kron_char_sum
    for t in agreement_sample(spec.bound("sample"), sizes):
        yield _eq(f"{_txt(*t)} sampled", _value(ref, t), _value(other, t))


SATURATION_CASES = ((((2, 2),) * 3, 1), (((1, 1),) * 3, 0))


def _suite_saturation_witness(spec: SuiteSpec):
    algo = spec.algorithm("kron")
    for t, want in SATURATION_CASES:
        yield _eq(_txt(*t), want, kron_value(*t, algorithm=algo))


_SUITES: dict[str, Callable] = {
    "theorem1": _suite_theorem1,
    "theorem1_general": _suite_theorem1_general,
    "lemma_shift": _suite_lemma_shift,
    "lemma_walls": _suite_lemma_walls,
    "stable_range": _suite_stable_range,
    "lemma25_bound": _suite_lemma25_bound,
    "lemma26_structure": _suite_lemma26_structure,
    "murnaghan_lr": _suite_murnaghan_lr,
    "s3_symmetry": _suite_s3_symmetry,
    "transpose_pairs": _suite_transpose_pairs,
    "dvir_vanishing": _suite_dvir_vanishing,
    "semigroup_spot": _suite_semigroup_spot,
    "schur_kron_eq4": _suite_schur_kron_eq4,
    "triple_cauchy_eq7": _suite_triple_cauchy_eq7,
    "hm_product_identity": _suite_hm_product,
    "algorithm_agreement": _suite_algorithm_agreement,
    "saturation_witness": _suite_saturation_witness,
}


# ---------------------------------------------------------------------------
# running


def run_suite(spec: SuiteSpec | str, failure_cap: int | None = None,
              profile: str = "default") -> VerificationReport:
    """Run one suite.  ``failure_cap`` limits the stored failures, not the count."""
    if isinstance(spec, str):
        spec = SuiteSpec.for_profile(spec, profile)
    start = time.perf_counter()
    cases = 0
    failures: list = []
    total_failed = 0
    error = None
    try:
        for case in _SUITES[spec.name](spec):
            cases += 1
            if not case.ok:
                total_failed += 1
                if failure_cap is None or len(failures) < failure_cap:
                    failures.append((case.input, case.expected, case.got))
    except Exception as exc:  # reported, never swallowed
        error = f"{type(exc).__name__}: {exc}"
        traceback.print_exc()
    elapsed = time.perf_counter() - start
    if error is None and cases == 0:
        error = "empty sweep: no cases at these bounds"
    if error is not None:
        status = "error"
    else:
        status = "pass" if total_failed == 0 else "fail"
    return VerificationReport(spec, cases, failures, elapsed, status, total_failed, error)


def _run_named(args) -> VerificationReport:
    name, profile, failure_cap = args
    return run_suite(SuiteSpec.for_profile(name, profile), failure_cap)


def run_all(profile: str = "default", failure_cap: int | None = None, jobs: int = 1,
            names=SUITE_NAMES) -> list:
    """Every suite at the profile's bounds, reported in :data:`SUITE_NAMES` order."""
    if profile not in PROFILES:
        raise ValueError(f"unknown profile {profile!r}; choose from {', '.join(PROFILES)}")
    work = [(name, profile, failure_cap) for name in names]
    if jobs <= 1:
        return [_run_named(w) for w in work]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_run_named, work))


def aggregate_status(reports) -> str:
    return "pass" if all(r.passed for r in reports) else "fail"


# ---------------------------------------------------------------------------
# serialization


def _bounds_text(spec: SuiteSpec) -> str:
    return ",".join(f"{k}={v}" for k, v in sorted(spec.bounds.items())) or "-"


def format_text(reports) -> str:
    lines = []
    for r in reports:
        line = (f"suite={r.suite.name} status={r.status} cases_run={r.cases_run} "
                f"failures={r.failures_total} wall_time={r.wall_time:.3f}s bounds={_bounds_text(r.suite)}")
        if r.error:
            line += f" error={r.error!r}"
        lines.append(line)
        for inp, exp, got in r.failures:
            lines.append(f"  failure input={inp!r} expected={exp} got={got}")
    return "\n".join(lines)


def format_json(reports) -> str:
    return json.dumps([r.to_dict() for r in reports], indent=2)


CSV_COLUMNS = ("suite", "status", "cases_run", "failures", "wall_time", "bounds", "error")


def format_csv(reports) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for r in reports:
        w.writerow([r.suite.name, r.status, r.cases_run, r.failures_total,
                    f"{r.wall_time:.3f}", _bounds_text(r.suite), r.error or ""])
    return buf.getvalue()


FORMATTERS = {"text": format_text, "json": format_json, "csv": format_csv}

"""Batch verification suites over seeded digraph instances.

Each suite replays one structural claim (monotonicity of a transformation,
a forbidden-pattern guarantee, a cop-number bound) on seeded random
digraphs, plus an exhaustive sweep of all small digraphs for the path
pattern bound.  One CSV row is written per checked fact.  Identical
configurations reproduce identical records; the elapsed-micros column is
the only field that may differ between runs.

Suites are registered under short stable tokens (lemma1 .. theorem3) used
by the command line and the CSV output:

    lemma1    clique substitution never lowers the cop number
    lemma2    arc subdivision never lowers the cop number
    lemma3    clique substitution keeps strong connectivity and leaves no
              induced claw orientation
    lemma4    subdividing by l pushes the underlying girth to at least l
              and keeps strong connectivity
    theorem1  the cop number is at least the source count; the doubled
              order-2 plane needs exactly 3 cops and has no induced P_2
    theorem3  strongly connected hosts free of the forward-exact path
              tuple on k vertices have cop number at most k - 2
"""

from __future__ import annotations

import csv
import random
import time
from dataclasses import dataclass, replace
from pathlib import Path

from .constructions import (
    _random_digraph_from,
    clique_substitute_all,
    gen_claw_orientations,
    gen_directed_path,
    gen_projective_plane_incidence_doubled,
    subdivide_arcs,
)
from .digraph import (
    Digraph,
    count_sources,
    is_strongly_connected,
    is_weakly_connected,
    underlying_girth,
)
from .errors import InputError, StateBudgetExceeded
from .patterns import find_induced, find_pk_star
from .solver import DEFAULT_STATE_BUDGET, cop_number

RETRY_CAP = 1000

CSV_HEADER = (
    "suite",
    "seed",
    "n",
    "arcs",
    "transform",
    "c_before",
    "c_after",
    "verdicts",
    "micros",
)


@dataclass(frozen=True)
class SuiteConfig:
    trials: int = 100
    n_max: int = 6
    p: float = 0.3
    k_values: tuple = (3, 4)
    state_budget: int = DEFAULT_STATE_BUDGET
    seed: int = 1

    def __post_init__(self):
        if self.trials < 1:
            raise InputError(f"trials must be >= 1, got {self.trials}")
        if self.n_max < 2:
            raise InputError(f"n_max must be >= 2, got {self.n_max}")
        if not 0.0 <= self.p <= 1.0:
            raise InputError(f"arc probability must be in [0, 1], got {self.p}")


@dataclass
class InstanceRecord:
    suite: str
    seed: int
    n: int
    arcs: int
    transform: str
    c_before: int | None
    c_after: int | None
    verdicts: str
    micros: int

    def row(self) -> list[str]:
        return [
            self.suite,
            str(self.seed),
            str(self.n),
            str(self.arcs),
            self.transform,
            "" if self.c_before is None else str(self.c_before),
            "" if self.c_after is None else str(self.c_after),
            self.verdicts,
            str(self.micros),
        ]


@dataclass
class ExperimentReport:
    suite: str
    records: list
    violations: list
    errors: list

    @property
    def instances_run(self) -> int:
        return len(self.records)

    @property
    def violations_found(self) -> int:
        return len(self.violations)

    @property
    def violating_seeds(self) -> list:
        return list(dict.fromkeys(self.violations))

    @property
    def passed(self) -> bool:
        return not self.violations


def _micros(t0: int) -> int:
    return (time.perf_counter_ns() - t0) // 1000


def _draw(seed: int, n_min: int, n_max: int, p: float) -> Digraph:
    """The instance a given attempt seed denotes: vertex count first, then
    arcs, from one seeded stream."""
    rng = random.Random(seed)
    n = rng.randint(n_min, n_max)
    return _random_digraph_from(rng, n, p)


def _find_seed(base: int, cfg: SuiteConfig, predicate) -> int | None:
    """Attempt seeds base*1000 .. base*1000+999 until the drawn instance
    satisfies the predicate.  None when the retry cap is hit."""
    for j in range(RETRY_CAP):
        s = base * 1000 + j
        if predicate(_draw(s, 2, cfg.n_max, cfg.p)):
            return s
    return None


def _any(_d: Digraph) -> bool:
    return True


def _run_sampled(token, cfg, predicate, instance_fn, **kw):
    records, violations, errors = [], [], []
    for i in range(cfg.trials):
        s = _find_seed(cfg.seed + i, cfg, predicate)
        if s is None:
            errors.append(
                f"instance {i}: no instance satisfied the predicate in {RETRY_CAP} draws"
            )
            continue
        recs, vio, errs = instance_fn(s, cfg, **kw)
        records.extend(recs)
        violations.extend(vio)
        errors.extend(errs)
    return ExperimentReport(token, records, violations, errors)


def _budget_error(token, seed, d, transform, exc):
    rec = InstanceRecord(
        token, seed, d.n, d.arc_count, transform, None, None, "error=state-budget", 0
    )
    return [rec], [], [f"seed {seed}: {exc}; raise state_budget to run this instance"]


def _clique_sub_instance(seed, cfg):
    t0 = time.perf_counter_ns()
    d = _draw(seed, 2, cfg.n_max, cfg.p)
    big = clique_substitute_all(d)
    try:
        c_before = cop_number(d, d.n, cfg.state_budget)
        c_after = cop_number(big, big.n, cfg.state_budget)
    except StateBudgetExceeded as exc:
        return _budget_error("lemma1", seed, d, "clique-sub", exc)
    ok = c_after >= c_before
    rec = InstanceRecord(
        "lemma1",
        seed,
        d.n,
        d.arc_count,
        "clique-sub",
        c_before,
        c_after,
        f"n_after={big.n};{'ok' if ok else 'violation'}",
        _micros(t0),
    )
    return [rec], ([] if ok else [seed]), []


def _subdivide_instance(seed, cfg):
    d = _draw(seed, 2, cfg.n_max, cfg.p)
    try:
        c_before = cop_number(d, d.n, cfg.state_budget)
    except StateBudgetExceeded as exc:
        return _budget_error("lemma2", seed, d, "subdivide", exc)
    records, violations, errors = [], [], []
    for m in (2, 3):
        t0 = time.perf_counter_ns()
        sub = subdivide_arcs(d, m)
        try:
            c_after = cop_number(sub, sub.n, cfg.state_budget)
        except StateBudgetExceeded as exc:
            r, _, e = _budget_error("lemma2", seed, d, f"subdivide-m{m}", exc)
            records.extend(r)
            errors.extend(e)
            continue
        ok = c_after >= c_before
        records.append(
            InstanceRecord(
                "lemma2",
                seed,
                d.n,
                d.arc_count,
                f"subdivide-m{m}",
                c_before,
                c_after,
                f"n_after={sub.n};{'ok' if ok else 'violation'}",
                _micros(t0),
            )
        )
        if not ok:
            violations.append(seed)
    return records, violations, errors


def _claw_instance(seed, cfg):
    t0 = time.perf_counter_ns()
    d = _draw(seed, 2, cfg.n_max, cfg.p)
    big = clique_substitute_all(d)
    sc = is_strongly_connected(big)
    found = []
    for i, claw in enumerate(gen_claw_orientations()):
        w = find_induced(big, claw)
        if w is not None:
            found.append((i, w.vertices))
    ok = sc and not found
    if found:
        detail = ";".join(
            f"claw{i}={'-'.join(map(str, vs))}" for i, vs in found
        )
    else:
        detail = "claws=absent"
    rec = InstanceRecord(
        "lemma3",
        seed,
        d.n,
        d.arc_count,
        "clique-sub",
        None,
        None,
        f"sc={int(sc)};{detail};{'ok' if ok else 'violation'}",
        _micros(t0),
    )
    return [rec], ([] if ok else [seed]), []


def _girth_instance(seed, cfg, l):
    t0 = time.perf_counter_ns()
    d = _draw(seed, 2, cfg.n_max, cfg.p)
    sub = subdivide_arcs(d, l)
    g = underlying_girth(sub)
    sc = is_strongly_connected(sub)
    ok = g >= l and sc
    g_text = "inf" if g == float("inf") else str(g)
    rec = InstanceRecord(
        "lemma4",
        seed,
        d.n,
        d.arc_count,
        f"subdivide-m{l}",
        None,
        None,
        f"girth={g_text};sc={int(sc)};{'ok' if ok else 'violation'}",
        _micros(t0),
    )
    return [rec], ([] if ok else [seed]), []


def _source_bound_instance(seed, cfg):
    t0 = time.perf_counter_ns()
    d = _draw(seed, 2, cfg.n_max, cfg.p)
    sources = count_sources(d)
    try:
        c = cop_number(d, d.n, cfg.state_budget)
    except StateBudgetExceeded as exc:
        return _budget_error("theorem1", seed, d, "", exc)
    ok = c >= sources
    rec = InstanceRecord(
        "theorem1",
        seed,
        d.n,
        d.arc_count,
        "",
        c,
        None,
        f"sources={sources};{'ok' if ok else 'violation'}",
        _micros(t0),
    )
    return [rec], ([] if ok else [seed]), []


def _plane_record(cfg):
    t0 = time.perf_counter_ns()
    plane = gen_projective_plane_incidence_doubled(2)
    induced = find_induced(plane, gen_directed_path(2))
    try:
        c = cop_number(plane, 3, cfg.state_budget)
    except StateBudgetExceeded as exc:
        return _budget_error("theorem1", -1, plane, "doubled-plane-q2", exc)
    ok = induced is None and c == 3
    rec = InstanceRecord(
        "theorem1",
        -1,
        plane.n,
        plane.arc_count,
        "doubled-plane-q2",
        c,
        None,
        f"p2_induced={'absent' if induced is None else 'present'};"
        f"{'ok' if ok else 'violation'}",
        _micros(t0),
    )
    return [rec], ([] if ok else [-1]), []


def _path_star_instance(d, seed, transform, cfg):
    records, violations, errors = [], [], []
    c = None
    for k in cfg.k_values:
        t0 = time.perf_counter_ns()
        w = find_pk_star(d, k)
        if w is None:
            if c is None:
                try:
                    c = cop_number(d, d.n, cfg.state_budget)
                except StateBudgetExceeded as exc:
                    r, _, e = _budget_error("theorem3", seed, d, transform, exc)
                    records.extend(r)
                    errors.extend(e)
                    continue
            ok = c <= k - 2
            verdict = f"k={k};free;{'ok' if ok else 'violation'}"
            if not ok:
                violations.append(seed)
            c_col = c
        else:
            verdict = f"k={k};witness={'-'.join(map(str, w.vertices))}"
            c_col = None
        records.append(
            InstanceRecord(
                "theorem3",
                seed,
                d.n,
                d.arc_count,
                transform,
                c_col,
                None,
                verdict,
                _micros(t0),
            )
        )
    return records, violations, errors


def iter_all_digraphs(n: int):
    """Every loop-free digraph on vertices 0..n-1, as (code, digraph); the
    code is the arc-subset bitmask over lexicographic ordered pairs."""
    pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
    for code in range(1 << len(pairs)):
        arcs = [pairs[b] for b in range(len(pairs)) if code >> b & 1]
        yield code, Digraph(n, arcs)


def _exhaustive_seed(n: int, code: int) -> int:
    return -((n << 20) | code) - 1


def _decode_exhaustive_seed(seed: int):
    s = -seed - 1
    return s >> 20, s & ((1 << 20) - 1)


def suite_clique_substitution(cfg: SuiteConfig) -> ExperimentReport:
    """Cop number of the whole-graph clique substitution is never below the
    cop number of the source (weakly connected instances)."""
    return _run_sampled("lemma1", cfg, is_weakly_connected, _clique_sub_instance)


def suite_arc_subdivision(cfg: SuiteConfig) -> ExperimentReport:
    """Cop number never drops under arc subdivision with m in {2, 3}."""
    return _run_sampled("lemma2", cfg, is_weakly_connected, _subdivide_instance)


def suite_claw_free_substitution(cfg: SuiteConfig) -> ExperimentReport:
    """Clique substitution of a strongly connected digraph stays strongly
    connected and contains no induced claw orientation."""
    return _run_sampled("lemma3", cfg, is_strongly_connected, _claw_instance)


def suite_girth_subdivision(cfg: SuiteConfig, l: int) -> ExperimentReport:
    """Subdividing a strongly connected digraph by l gives underlying girth
    at least l and keeps strong connectivity."""
    if l < 2:
        raise InputError(f"girth target must be >= 2, got {l}")
    return _run_sampled("lemma4", cfg, is_strongly_connected, _girth_instance, l=l)


def suite_source_bound_families(cfg: SuiteConfig) -> ExperimentReport:
    """Cop number is at least the source count on random instances, and the
    doubled order-2 plane has cop number 3 with no induced directed P_2."""
    report = _run_sampled("theorem1", cfg, _any, _source_bound_instance)
    recs, vio, errs = _plane_record(cfg)
    report.records.extend(recs)
    report.violations.extend(vio)
    report.errors.extend(errs)
    return report


def suite_path_star_bound(cfg: SuiteConfig) -> ExperimentReport:
    """Strongly connected digraphs free of the forward-exact k-tuple have
    at most k - 2 cops: exhaustive on small vertex counts, seeded random
    above that."""
    for k in cfg.k_values:
        if k not in (3, 4, 5):
            raise InputError(f"k values must be within {{3, 4, 5}}, got {k}")
    records, violations, errors = [], [], []
    for n in range(1, min(4, cfg.n_max) + 1):
        for code, d in iter_all_digraphs(n):
            if not is_strongly_connected(d):
                continue
            recs, vio, errs = _path_star_instance(
                d, _exhaustive_seed(n, code), "exhaustive", cfg
            )
            records.extend(recs)
            violations.extend(vio)
            errors.extend(errs)
    for i in range(cfg.trials):
        s = _find_seed(cfg.seed + i, cfg, is_strongly_connected)
        if s is None:
            errors.append(
                f"instance {i}: no instance satisfied the predicate in {RETRY_CAP} draws"
            )
            continue
        d = _draw(s, 2, cfg.n_max, cfg.p)
        recs, vio, errs = _path_star_instance(d, s, "random", cfg)
        records.extend(recs)
        violations.extend(vio)
        errors.extend(errs)
    return ExperimentReport("theorem3", records, violations, errors)


SUITE_FUNCS = {
    "lemma1": suite_clique_substitution,
    "lemma2": suite_arc_subdivision,
    "lemma3": suite_claw_free_substitution,
    "theorem1": suite_source_bound_families,
    "theorem3": suite_path_star_bound,
}

RUN_ORDER = ("lemma1", "lemma2", "lemma3", "lemma4", "theorem1", "theorem3")

DEFAULT_SUITE_CONFIGS = {
    "lemma1": SuiteConfig(trials=200, n_max=6),
    "lemma2": SuiteConfig(trials=200, n_max=5),
    "lemma3": SuiteConfig(trials=100, n_max=6),
    "lemma4": SuiteConfig(trials=100, n_max=6),
    "theorem1": SuiteConfig(trials=200, n_max=6),
    "theorem3": SuiteConfig(trials=300, n_max=7, k_values=(3, 4)),
}

GIRTH_TARGETS = (2, 3, 4)


def run_suite(token: str, cfg: SuiteConfig | None = None) -> ExperimentReport:
    """Run one registered suite; lemma4 covers all of its girth targets."""
    if token not in RUN_ORDER:
        raise InputError(f"unknown suite '{token}'; choose from {', '.join(RUN_ORDER)}")
    if cfg is None:
        cfg = DEFAULT_SUITE_CONFIGS[token]
    if token == "lemma4":
        merged = ExperimentReport("lemma4", [], [], [])
        for l in GIRTH_TARGETS:
            rep = suite_girth_subdivision(cfg, l)
            merged.records.extend(rep.records)
            merged.violations.extend(rep.violations)
            merged.errors.extend(rep.errors)
        return merged
    return SUITE_FUNCS[token](cfg)


def replay_instance(token: str, seed: int, cfg: SuiteConfig | None = None):
    """Recompute the records a recorded (suite, seed) pair denotes."""
    if token not in RUN_ORDER:
        raise InputError(f"unknown suite '{token}'")
    if cfg is None:
        cfg = DEFAULT_SUITE_CONFIGS[token]
    if token == "lemma1":
        return _clique_sub_instance(seed, cfg)[0]
    if token == "lemma2":
        return _subdivide_instance(seed, cfg)[0]
    if token == "lemma3":
        return _claw_instance(seed, cfg)[0]
    if token == "lemma4":
        records = []
        for l in GIRTH_TARGETS:
            records.extend(_girth_instance(seed, cfg, l)[0])
        return records
    if token == "theorem1":
        if seed == -1:
            return _plane_record(cfg)[0]
        return _source_bound_instance(seed, cfg)[0]
    if seed < 0:
        n, code = _decode_exhaustive_seed(seed)
        d = next(g for c, g in iter_all_digraphs(n) if c == code)
        return _path_star_instance(d, seed, "exhaustive", cfg)[0]
    d = _draw(seed, 2, cfg.n_max, cfg.p)
    return _path_star_instance(d, seed, "random", cfg)[0]


def write_report_csv(report: ExperimentReport, path) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        for rec in report.records:
            writer.writerow(rec.row())


def write_reports(reports, out_dir) -> None:
    """One CSV per suite plus a summary.csv in out_dir."""
    out = Path(out_dir)
    if out.exists() and not out.is_dir():
        raise InputError(f"{out} exists and is not a directory")
    out.mkdir(parents=True, exist_ok=True)
    for report in reports:
        write_report_csv(report, out / f"{report.suite}.csv")
    with open(out / "summary.csv", "w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(("suite", "instances", "violations", "errors", "violating_seeds"))
        for report in reports:
            writer.writerow(
                (
                    report.suite,
                    report.instances_run,
                    report.violations_found,
                    len(report.errors),
                    " ".join(map(str, report.violating_seeds)),
                )
            )


def run_all(out_dir=None, cfg: SuiteConfig | None = None):
    """Run every suite in order; write CSVs when out_dir is given."""
    reports = [run_suite(token, cfg) for token in RUN_ORDER]
    if out_dir is not None:
        write_reports(reports, out_dir)
    return reports


def config_with_overrides(token: str, **overrides) -> SuiteConfig:
    """The default config of a suite with the given fields replaced."""
    given = {k: v for k, v in overrides.items() if v is not None}
    return replace(DEFAULT_SUITE_CONFIGS[token], **given)

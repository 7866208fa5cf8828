"""Acceptance gate: the ten headline guarantees, one test and one printed
pass/fail line each.

Run with `pytest tests/test_acceptance.py -v -s` to see the lines; each
test also enforces its runtime budget.  Expected values marked as computed
come from the independent reference implementations in oracles.py.
"""

import time

from copgame import (
    DEFAULT_SUITE_CONFIGS,
    GamePosition,
    cop_number,
    containment_chain_check,
    find_induced,
    gen_directed_cycle,
    gen_directed_path,
    gen_projective_plane_incidence_doubled,
    gen_random_digraph,
    is_strongly_connected,
    iter_all_digraphs,
    run_suite,
    solve,
)

import oracles


def _report(num, label, ok, elapsed, budget):
    status = "PASS" if ok else "FAIL"
    print(f"criterion {num:2d} [{status}] {label} ({elapsed:.1f}s of {budget:.0f}s)")
    assert ok, f"criterion {num} failed: {label}"
    assert elapsed < budget, f"criterion {num} exceeded {budget:.0f}s: {elapsed:.1f}s"


def _seeded_digraph(i, n_max):
    return gen_random_digraph(2 + i % (n_max - 1), 0.3, i)


def _suite_criterion(num, label, token, expected_records, budget):
    cfg = DEFAULT_SUITE_CONFIGS[token]
    t0 = time.perf_counter()
    report = run_suite(token, cfg)
    elapsed = time.perf_counter() - t0
    ok = (
        report.passed
        and not report.errors
        and report.instances_run == expected_records
    )
    _report(num, label, ok, elapsed, budget)


def test_01_solver_matches_minimax_oracle():
    t0 = time.perf_counter()
    ok = True
    for i in range(100):
        d = _seeded_digraph(i, 5)
        for k in (1, 2):
            result = solve(d, k)
            table = oracles.minimax_cop_win(d, k)
            for (cw, r, side), expected in table.items():
                if result.win(GamePosition(cw, r, side)) != expected:
                    ok = False
    _report(1, "solver agrees with the minimax oracle on 100 games", ok,
            time.perf_counter() - t0, 60)


def test_02_directed_cycle_baseline():
    t0 = time.perf_counter()
    # computed with oracles.minimax_cop_number: one cop suffices only for
    # the bidirected pair; every longer directed cycle needs two
    expected = {n: (1 if n == 2 else 2) for n in range(2, 9)}
    ok = True
    for n, want in expected.items():
        d = gen_directed_cycle(n)
        if cop_number(d, 3) != want:
            ok = False
        if oracles.minimax_cop_number(d, 2) != want:
            ok = False
    _report(2, "directed cycle cop numbers match the frozen baseline", ok,
            time.perf_counter() - t0, 5)


def test_03_doubled_plane_order2():
    t0 = time.perf_counter()
    plane = gen_projective_plane_incidence_doubled(2)
    ok = (
        plane.n == 14
        and plane.arc_count == 42
        and cop_number(plane, 3) == 3
        and find_induced(plane, gen_directed_path(2)) is None
    )
    _report(3, "doubled order-2 plane needs 3 cops, no induced 2-path", ok,
            time.perf_counter() - t0, 120)


def test_04_clique_substitution_monotone():
    _suite_criterion(
        4, "clique substitution never lowers the cop number (200 seeds)",
        "lemma1", 200, 600,
    )


def test_05_subdivision_monotone():
    _suite_criterion(
        5, "arc subdivision never lowers the cop number (200 seeds x m=2,3)",
        "lemma2", 400, 600,
    )


def test_06_substitution_claw_free():
    _suite_criterion(
        6, "substituted digraphs stay strong and claw-free (100 seeds)",
        "lemma3", 100, 120,
    )


def test_07_subdivision_girth():
    _suite_criterion(
        7, "subdivision reaches girth targets 2,3,4 (100 seeds each)",
        "lemma4", 300, 120,
    )


def test_08_path_tuple_bound():
    cfg = DEFAULT_SUITE_CONFIGS["theorem3"]
    exhaustive = sum(
        1
        for n in range(1, 5)
        for _, d in iter_all_digraphs(n)
        if is_strongly_connected(d)
    )
    expected = (exhaustive + cfg.trials) * len(cfg.k_values)
    _suite_criterion(
        8, "path-tuple-free strong digraphs need at most k-2 cops",
        "theorem3", expected, 900,
    )


def test_09_containment_chain():
    t0 = time.perf_counter()
    ok = True
    for i in range(500):
        d = _seeded_digraph(i, 7)
        for k in (3, 4, 5):
            sub_free, star_free, induced_free = containment_chain_check(d, k)
            if sub_free and not star_free:
                ok = False
            if star_free and not induced_free:
                ok = False
    _report(9, "pattern freeness chain holds on 500 seeds, k=3,4,5", ok,
            time.perf_counter() - t0, 120)


def test_10_source_lower_bound():
    _suite_criterion(
        10, "cop number is at least the source count (200 seeds)",
        "theorem1", 201, 300,
    )

"""Acceptance suite: every criterion at full scale.

Each test runs one verification suite with max_n=6, trials=100000, seed=0,
single-threaded, and prints one PASS/FAIL line (visible even under output
capture).  Run ``python3 tests/test_acceptance.py`` for the table alone.
"""

import os
import sys

import pytest

from coxex.verify import run_suite

SCALE = {"max_n": 6, "trials": 100000, "seed": 0}

# (number, suite id, time limit in seconds or None, extra requirement on details)
CRITERIA = [
    (1, "counts", 1.0, lambda d: d == {"B3": 1, "B4": 10, "E6": 27, "E7": 127}),
    (2, "B-strong", 30.0, lambda d: d["n=4 exhaustive"]["systems"] == 65536
        and d["n=5 random"]["systems"] == d["n=6 random"]["systems"] == 100000),
    (3, "D-even", 60.0, lambda d: d["n=5 parity=0"]["systems"] == d["n=5 parity=1"]["systems"] == 65536),
    (4, "even-strong", None, lambda d: all(f"n={n} parity={p}" in d for n in range(1, 6) for p in (0, 1))),
    (5, "A-matroid", None, lambda d: set(d) == {"n=4 k=2", "n=5 k=2", "n=5 k=3"}),
    (6, "counterexamples", None, None),
    (7, "polytopes", 10.0, None),
    (8, "E-props", 600.0, lambda d: d["2_21 random"]["systems"] == d["3_21 random"]["systems"] == 100000),
    (9, "cross", None, lambda d: all(f"{t}{n} " in " ".join(d) for t in "CD" for n in (2, 3, 4))),
    (10, "spin-quadrics", 300.0, lambda d: d["weight zero n=5"] == {"generators": 16, "generator_rank": 6, "basis": 6}),
    (11, "realization", None, None),
    (12, "tropicalisation", None, None),
]


def evaluate(number, suite, limit, extra):
    os.environ["COXEX_THREADS"] = "1"
    res = run_suite(suite, **SCALE)
    problems = []
    if res.failures:
        problems.append(f"{res.failures} failures")
    if limit is not None and res.elapsed > limit:
        problems.append(f"{res.elapsed:.1f}s over the {limit:.0f}s limit")
    if extra is not None and not extra(res.details):
        problems.append("instance coverage differs from the criterion")
    verdict = "PASS" if not problems else "FAIL"
    line = f"criterion {number:>2} [{suite}] {verdict}: {res.instances} instances, {res.elapsed:.2f}s"
    if problems:
        line += " (" + "; ".join(problems) + ")"
    return not problems, line


@pytest.mark.parametrize("number,suite,limit,extra", CRITERIA, ids=[f"criterion_{c[0]:02d}_{c[1]}" for c in CRITERIA])
def test_criterion(number, suite, limit, extra, capsys):
    ok, line = evaluate(number, suite, limit, extra)
    with capsys.disabled():
        print("\n" + line)
    assert ok, line


if __name__ == "__main__":
    results = [evaluate(*c) for c in CRITERIA]
    for _, line in results:
        print(line)
    sys.exit(0 if all(ok for ok, _ in results) else 1)

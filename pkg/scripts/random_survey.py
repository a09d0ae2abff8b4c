#!/usr/bin/env python3
"""Randomized survey: closed formulas against brute force on random tori.

Prints one line per failing case and a tally per check; exits 1 on any
failure.
"""

import argparse
import dataclasses
import sys
import time
from collections import Counter

from tik.survey import SurveyConfig, run_case, sample_specs


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    for f in dataclasses.fields(SurveyConfig):
        ap.add_argument("--" + f.name.replace("_", "-"), type=type(f.default), default=f.default)
    cfg = SurveyConfig(**{k: v for k, v in vars(ap.parse_args()).items()})

    t0 = time.perf_counter()
    tally = Counter()
    shapes = Counter()
    failed = 0
    for spec in sample_specs(cfg):
        res = run_case(spec, cfg.points_limit)
        shapes[(spec.n, "CI" if res.is_ci else "non-CI")] += 1
        for k, v in res.checks.items():
            if v is not None:
                tally[(k, v)] += 1
        if res.failures:
            failed += 1
            print(f"FAIL q={spec.q} v={list(spec.v)} d={res.d}: {res.failures}")
    print(f"{cfg.cases} cases in {time.perf_counter() - t0:.1f}s")
    for (n, kind), c in sorted(shapes.items()):
        print(f"  n={n} {kind}: {c}")
    for key in sorted({k for k, _ in tally}):
        print(f"  {key}: {tally[(key, True)]} passed, {tally[(key, False)]} failed")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())

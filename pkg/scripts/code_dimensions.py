#!/usr/bin/env python3
"""Dimension of C_X(d) by degree, from both the Groebner route and the rank
of the evaluation matrix, plus brute-force minimum distance where affordable."""

import argparse

from tik import TorusSpec, analyze
from tik.caps import ResourceError
from tik.points_codes import code_params


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--q", type=int, default=13)
    ap.add_argument("--v", type=lambda s: [int(x) for x in s.split(",")], default=[4, 3, 2])
    ap.add_argument("--distance", action="store_true")
    args = ap.parse_args()
    spec = TorusSpec(args.q, args.v)
    rep = analyze(spec, ["gb"])
    d = 0
    while True:
        try:
            cp = code_params(spec, d, args.distance)
        except ResourceError:
            cp = code_params(spec, d, False)
        dist = "-" if cp.min_distance is None else cp.min_distance
        h_gb = rep.hilbert[d] if d < len(rep.hilbert) else rep.degree
        assert h_gb == cp.dimension, (d, h_gb, cp.dimension)
        print(f"d={d:3d}  n={cp.length}  k={cp.dimension}  H_gb={h_gb}  delta={dist}")
        if cp.dimension == cp.length:
            break
        d += 1


if __name__ == "__main__":
    main()

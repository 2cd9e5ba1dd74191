#!/usr/bin/env python3
"""Print theta_lambda for every lambda in a small box, one line each.

    python scripts/bernstein_table.py A 2 --bound 1
    python scripts/bernstein_table.py C 2 --flavor simply_connected --L 3,2,1
"""

import argparse

from hecke_walks import HeckeAlgebra, build_root_datum, theta
from hecke_walks.selftest import coweight_box

ap = argparse.ArgumentParser()
ap.add_argument("type")
ap.add_argument("rank", type=int)
ap.add_argument("--flavor", default="adjoint")
ap.add_argument("--L")
ap.add_argument("--bound", type=int, default=1)
args = ap.parse_args()

L = tuple(int(x) for x in args.L.split(",")) if args.L else None
H = HeckeAlgebra(build_root_datum(args.type, args.rank, args.flavor), L)
for lam in coweight_box(H.datum.dim, args.bound):
    print(f"theta{lam} = {theta(H, lam)}")

#!/usr/bin/env python3
"""Write SVG pictures of the non-folded walks for eps^lambda, lambda in a box.

    python scripts/render_walks.py C 2 out/ --bound 1
"""

import argparse
from pathlib import Path

from hecke_walks import STANDARD, HeckeAlgebra, build_root_datum
from hecke_walks.selftest import coweight_box
from hecke_walks.svg import render_walk

ap = argparse.ArgumentParser()
ap.add_argument("type")
ap.add_argument("rank", type=int, choices=[1, 2])
ap.add_argument("outdir", type=Path)
ap.add_argument("--flavor", default="adjoint")
ap.add_argument("--bound", type=int, default=1)
args = ap.parse_args()

H = HeckeAlgebra(build_root_datum(args.type, args.rank, args.flavor))
G = H.group
args.outdir.mkdir(parents=True, exist_ok=True)
for lam in coweight_box(H.datum.dim, args.bound):
    word = G.reduced_word(G.translation(lam))
    walk = H.walks.non_folded_walk(word, STANDARD)
    name = "eps_" + "_".join(str(c) for c in lam).replace("-", "m") + ".svg"
    (args.outdir / name).write_text(render_walk(H.ap, walk.word), encoding="utf-8")
    print(args.outdir / name)

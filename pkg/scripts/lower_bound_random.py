"""Random two-block vertex-amalgams against dim(G) >= dim(G1) + dim(G2) - 2.

Reports the slack distribution dim(G) - bound and any violations.

Usage:
    python scripts/lower_bound_random.py [--trials 500] [--max-block 7] [--seed 1]
"""

import argparse
import random
from collections import Counter

from metricdim.amalgam import BlockSpec, vertex_amalgamate
from metricdim.formulas import poisson_zhang_lower_bound
from metricdim.graph_core import random_connected_graph
from metricdim.solver import metric_dimension_exact


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--trials", type=int, default=500)
    ap.add_argument("--max-block", type=int, default=7)
    ap.add_argument("--seed", type=int, default=1)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    slack = Counter()
    violations = []
    for _ in range(args.trials):
        blocks, dims = [], []
        for _ in range(2):
            g = random_connected_graph(rng.randint(2, args.max_block), rng, extra_p=rng.uniform(0.1, 0.7))
            blocks.append(BlockSpec(g, rng.randrange(g.n)))
            dims.append(metric_dimension_exact(g).dim)
        amalgam, _ = vertex_amalgamate(blocks)
        d = metric_dimension_exact(amalgam).dim
        bound = poisson_zhang_lower_bound(*dims)
        slack[d - bound] += 1
        if d < bound:
            violations.append((sorted(blocks[0].graph.edges), sorted(blocks[1].graph.edges)))

    print(f"{args.trials} trials, {len(violations)} violations")
    for s in sorted(slack):
        print(f"  slack {s:+d}: {slack[s]}")


if __name__ == "__main__":
    main()

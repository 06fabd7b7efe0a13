"""Compare the two vertex-cover readings as upper bounds on the Schmidt measure.

For every hypergraph on n <= 4 vertices, the bipartite-rank lower bound is
checked against the minimum cover size under each reading. A cover in the
"exists" sense trivialises g for some choice of deletion modes; in the
"forall" sense it does so for every choice.
"""

import argparse
from collections import Counter

from hyperstate.entanglement import max_cut_rank, schmidt_upper_bound
from hyperstate.hypergraph import all_hypergraphs
from hyperstate.state import build_state


def main():
    parser = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("--max-n", type=int, default=4)
    parser.add_argument("--examples", type=int, default=5, help="counterexamples to print per n")
    args = parser.parse_args()

    for n in range(1, args.max_n + 1):
        violations = Counter()
        shown = 0
        for g in all_hypergraphs(n):
            r, part = max_cut_rank(build_state(g))
            lower = (r - 1).bit_length()
            for semantics in ("exists", "forall"):
                upper, cover = schmidt_upper_bound(g, semantics)
                if lower > upper:
                    violations[semantics] += 1
                    if semantics == "exists" and shown < args.examples:
                        shown += 1
                        print(f"  n={n} {g}: rank {r} across {sorted(part)} but cover {sorted(cover)}")
        print(f"n={n}: exists violations {violations['exists']}, forall violations {violations['forall']}")


if __name__ == "__main__":
    main()

"""Print the connectivity census for n = 1..4 next to the disconnected-count bound."""

import argparse

from hyperstate.entanglement import MAX_CENSUS_N, census


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=MAX_CENSUS_N)
    args = parser.parse_args()

    header = ("n", "total", "disconnected", "bound", "fraction", "contains [n]", "rank<=2", "graph")
    print("  ".join(f"{h:>12}" for h in header))
    for n in range(1, args.max_n + 1):
        r = census(n)
        row = (n, r.total, r.disconnected, r.discon_bound, f"{r.discon_fraction:.4f}",
               r.contains_full, r.stabilizer, r.graph_state)
        print("  ".join(f"{v:>12}" for v in row))
        for problem in r.failures():
            print(f"  n={n}: {problem}")


if __name__ == "__main__":
    main()

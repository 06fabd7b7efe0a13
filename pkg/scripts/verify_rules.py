"""Check every symbolic rewrite against the sign-table engine, exhaustively up to --max-n."""

import argparse
import itertools

from hyperstate.hypergraph import all_hypergraphs
from hyperstate.rules import apply_pauli_element, measure_z_rule
from hyperstate.state import PauliElement, SignState, apply_pauli, build_state, project_z


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=3)
    args = parser.parse_args()

    for n in range(1, args.max_n + 1):
        paulis = [PauliElement("".join(p), a) for p in itertools.product("IXYZ", repeat=n) for a in (1, 1j, -1, -1j)]
        cases = failures = 0
        for g in all_hypergraphs(n):
            s = build_state(g)
            for p in paulis:
                out, phase = apply_pauli_element(g, p)
                cases += 1
                failures += SignState(n, build_state(out).signs, phase) != apply_pauli(s, p)
            for k in g.vertices:
                for outcome in (1, -1):
                    prob, post = project_z(s, k, outcome)
                    cases += 1
                    failures += prob * 2 != 1 or post != build_state(measure_z_rule(g, k, outcome))
        print(f"n={n}: {cases} cases, {failures} failures")


if __name__ == "__main__":
    main()

"""Build prefix codes under a length cap and watch the cap relax.

An unconstrained Huffman code for skewed frequencies happily hands the rare
symbols very long words.  Capping the maximum length costs something; this
demo sweeps the cap from its feasibility floor upward and prints the price
of each cap until it meets the Huffman optimum.
"""

from mongedp import huffman_baseline, solve_llhc
from mongedp.llhc import InfeasibleDepthError

FREQS = (1, 1, 2, 2, 2, 4, 5, 9)


def main() -> None:
    base_cost, _ = huffman_baseline(FREQS, 2)
    print(f"frequencies: {FREQS}")
    print(f"unconstrained Huffman cost: {base_cost}\n")

    print("cap  cost  penalty  lengths (sorted weights)")
    for cap in range(1, 9):
        try:
            sol = solve_llhc(FREQS, 2, cap)
        except InfeasibleDepthError:
            print(f"{cap:>3}  infeasible: 2**{cap} < {len(FREQS)} symbols")
            continue
        lengths = " ".join(str(l) for l in sol.code.lengths)
        print(f"{cap:>3}  {sol.cost:>4}  {sol.cost - base_cost:>7}  {lengths}")

    print("\nwords at cap 4 (canonical assignment):")
    sol = solve_llhc(FREQS, 2, 4)
    for freq, length, word in zip(FREQS, sol.code.lengths, sol.code.words):
        print(f"  freq {freq:>2}  ->  {word:<6} ({length} bits)")

    # a ternary alphabet shortens everything; padding keeps the tree complete
    tern = solve_llhc(FREQS, 3, 3)
    print(f"\nsame weights, radix 3, cap 3: cost {tern.cost}, "
          f"tree height {tern.tree.height}, "
          f"{tern.tree.n_leaves - len(FREQS)} padding leaf")


if __name__ == "__main__":
    main()

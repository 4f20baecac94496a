"""Schedule paging rounds over ranked cells, trading rounds for radio time.

A subscriber is in one of several cells with known probabilities.  Paging
everything at once (one round) wastes capacity; paging one cell at a time
minimizes expected pages but costs latency.  For each round budget D the DP
returns the exact optimal grouping of the probability-ranked cells; costs
are exact fractions, printed as such.
"""

from fractions import Fraction

from mongedp import PagingInstance, solve_paging

# a mildly skewed profile over eight cells, summing to 1
PROFILE = (
    Fraction(30, 100), Fraction(20, 100), Fraction(15, 100), Fraction(12, 100),
    Fraction(10, 100), Fraction(6, 100), Fraction(4, 100), Fraction(3, 100),
)


def main() -> None:
    print("cell probabilities:", " ".join(str(p) for p in PROFILE), "\n")
    print("rounds  expected-cells-paged  grouping (cells per round)")
    for budget in range(1, len(PROFILE) + 1):
        sol = solve_paging(PagingInstance(p=PROFILE, D=budget))
        sizes = "+".join(str(b - a + 1) for a, b in sol.rounds)
        approx = float(sol.cost)
        print(f"{budget:>6}  {str(sol.cost):>15} ~{approx:.3f}  {sizes}")

    two = solve_paging(PagingInstance(p=PROFILE, D=2))
    first = two.rounds[0]
    print(
        f"\nwith two rounds, page cells 1..{first[1] + 1} first;"
        f" expected cost {two.cost} (~{float(two.cost):.3f})"
    )


if __name__ == "__main__":
    main()

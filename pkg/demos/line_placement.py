"""Place service centers on a line and watch marginal returns shrink.

Customers sit at increasing positions with integer weights; a center budget
D buys a partition into at most D contiguous groups, each served at its
leftmost customer.  The exact optimum for every budget comes from one DP per
budget; the table shows classic diminishing returns.
"""

import random
from itertools import accumulate

from mongedp import LineInstance, solve_dmedian


def main() -> None:
    rng = random.Random(2026)
    positions = tuple(accumulate(rng.randint(1, 9) for _ in range(14)))
    weights = tuple(rng.randint(1, 5) for _ in range(14))
    print("positions:", positions)
    print("weights:  ", weights, "\n")

    print("budget  cost  centers")
    prev = None
    for budget in range(1, len(positions) + 1):
        sol = solve_dmedian(LineInstance(v=positions, w=weights, D=budget))
        saved = "" if prev is None else f"  (saved {prev - sol.cost})"
        print(f"{budget:>6}  {sol.cost:>4}  {sol.centers}{saved}")
        prev = sol.cost
        if sol.cost == 0:
            break

    sol = solve_dmedian(LineInstance(v=positions, w=weights, D=4))
    print("\nwith 4 centers, the groups are:")
    for (a, b), center in zip(sol.groups, sol.centers):
        members = positions[a : b + 1]
        print(f"  center at {center:>3} serves positions {members}")


if __name__ == "__main__":
    main()

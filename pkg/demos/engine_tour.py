"""Drive the layered DP engine directly with a custom cost model.

Anything of the form  H(d, i) = min_j H(d-1, j) + c_d(i, j)  with Monge
per-level costs fits the engine: certify the model, solve for value and
an optimal state sequence in linear space, and cross-check against the
quadratic reference while the instance is still small enough for it.
"""

from mongedp import (
    INF,
    MongeCostModel,
    TableSizeError,
    is_monge_cost_model,
    measuring,
    naive_solve,
    solve_construction,
)

# segment the sequence x into `levels` runs, paying squared distance to each
# run's left endpoint plus a fixed per-run charge: a tiny 1-D clustering
X = (0, 1, 1, 3, 7, 8, 8, 9, 15, 16)
RUN_CHARGE = 5


def segment_model(x, levels):
    n = len(x) + 1  # state = items consumed so far

    def cost(d, i, j):
        if j >= i:  # runs must be nonempty
            return INF
        anchor = x[j]
        return RUN_CHARGE + sum((t - anchor) ** 2 for t in x[j:i])

    return MongeCostModel(n=n, levels=levels, cost=cost, band=None)


def main() -> None:
    model = segment_model(X, 3)
    print("certified Monge:", is_monge_cost_model(model))

    sol = solve_construction(model)
    print("optimal cost with 3 runs:", sol.value)
    bounds = list(zip(sol.sequence, sol.sequence[1:]))
    for a, b in bounds:
        print(f"  run {X[a:b]} anchored at {X[a]}")

    ref = naive_solve(model)
    print("reference solver agrees:", ref.value == sol.value)

    # the same call at a size the reference refuses, with live memory metered
    big = segment_model(tuple(range(3000)), 8)
    with measuring() as meter:
        sol = solve_construction(big)
    print(f"\n3000 items, 8 runs: cost {sol.value}")
    print(f"peak auxiliary memory: {meter.peak} words "
          f"({meter.peak / 3001:.1f} per state)")
    try:
        naive_solve(big)
    except TableSizeError as e:
        print("reference solver refuses this size:", e)


if __name__ == "__main__":
    main()

"""Length-limited prefix codes with exact minimum cost.

An optimal prefix-free code over N weighted symbols whose codewords all fit
in D digits corresponds to an r-ary tree of height at most D.  Counting
internal nodes from the deepest level upward turns tree construction into a
layered DP: after level d the state is the number of internal nodes on the
deepest d levels, and stepping from state j to state i prices the r*i - j
leaves that just became permanent at the cheapest weights, i.e. a prefix sum
of the ascending weight sequence.  Those transition costs are Monge, so the
banded engine builds an optimal tree in O(N * D) time and O(N + D) space.

This module owns the whole reduction: r-ary dummy padding, the cost model,
index sequence -> tree -> codeword reconstruction, and two independent
oracles (greedy unrestricted merging and exhaustive depth-multiset search).
State sequences are plain tuples of ints; "valid" means: starts at 0,
strictly increasing after its leading zeros, never exceeding the total
internal-node count, with r*i_k - i_{k-1} never exceeding the padded symbol
count.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction
from itertools import accumulate
from typing import List, NamedTuple, Optional, Sequence, Tuple, Union

from .dp_solver import solve_construction
from .monge_core import INF, Cost, MongeCostModel

Weight = Union[int, Fraction]

_DIGITS = "0123456789abcdefghijklmnopqrstuvwxyz"


class InfeasibleDepthError(ValueError):
    """No prefix-free code with the requested maximum length exists."""


class NonTreeSequenceError(ValueError):
    """The index sequence satisfies the count bounds but describes no tree."""


@dataclass(frozen=True)
class LLHCInstance:
    """A normalized coding instance: padded weights plus their prefix sums.

    p is sorted ascending and already includes the pad zero-weight dummies
    prepended so that (len(p) - 1) is divisible by r - 1; a complete r-ary
    tree on exactly len(p) leaves then exists.  Symbol s of the caller's
    sorted input sits at padded index pad + s.
    """

    p: Tuple[Weight, ...]
    r: int
    S: Tuple[Weight, ...]      # S[m] = sum of the m smallest padded weights
    n_states: int              # total internal nodes + 1
    pad: int

    @property
    def n_symbols(self) -> int:
        return len(self.p)


@dataclass(frozen=True)
class CodeTree:
    """Shape of a complete r-ary code tree, by counts only.

    levels[m] is the number of internal nodes at depth m (root first);
    leaf_depths is the ascending multiset of leaf depths.  Every internal
    node has exactly r children, so these counts pin the shape up to the
    order of siblings.
    """

    levels: Tuple[int, ...]
    leaf_depths: Tuple[int, ...]
    height: int

    @property
    def n_leaves(self) -> int:
        return len(self.leaf_depths)


@dataclass(frozen=True)
class PrefixCode:
    """Codeword lengths (and optionally canonical words) per input symbol.

    lengths follows the sorted order the solver was given.  words is None
    when the alphabet is too large to render one digit per character.
    """

    lengths: Tuple[int, ...]
    words: Optional[Tuple[str, ...]]
    cost: Weight


class LLHCSolution(NamedTuple):
    cost: Weight
    sequence: Tuple[int, ...]
    tree: CodeTree
    code: PrefixCode


def _check_sorted_weights(p: Sequence[Weight]) -> None:
    if any(b < a for a, b in zip(p, p[1:])):
        raise ValueError("frequencies must be sorted ascending")
    if p and p[0] < 0:
        raise ValueError("frequencies must be nonnegative")


def prefix_sums(p: Sequence[Weight]) -> Tuple[Weight, ...]:
    """S with S[0] = 0 and S[m] = sum of the first m weights; exact."""
    _check_sorted_weights(p)
    return tuple(accumulate(p, initial=0))


def normalize_rary(p: Sequence[Weight], r: int) -> LLHCInstance:
    """Pad with the minimal number of zero dummies so a complete tree exists.

    Prepends q <= r-2 zeros so that (N'-1) mod (r-1) == 0; for r = 2 the
    input comes back unchanged.  Requires at least two symbols — the
    single-symbol convention lives with the callers.
    """
    n = len(p)
    if n < 2:
        raise ValueError("need at least two symbols; N=1 is a caller special case")
    if r < 2:
        raise ValueError("alphabet size must be at least 2")
    _check_sorted_weights(p)
    q = -(n - 1) % (r - 1)
    padded = (0,) * q + tuple(p)
    return LLHCInstance(
        p=padded,
        r=r,
        S=tuple(accumulate(padded, initial=0)),
        n_states=(len(padded) - 1) // (r - 1) + 1,
        pad=q,
    )


def llhc_cost(d: int, i: int, j: int, instance: LLHCInstance) -> Cost:
    """Transition cost: the weight of the r*i - j leaves fixed by this step.

    Finite exactly when i = j = 0 or max(0, r*i - N) <= j < i; independent
    of the level d.
    """
    if i == 0:
        return 0 if j == 0 else INF
    if 0 <= j < i:
        k = instance.r * i - j
        if k <= len(instance.p):
            return instance.S[k]
    return INF


def llhc_model(instance: LLHCInstance, levels: int) -> MongeCostModel:
    """The layered Monge cost model whose optimum is the best height-limited tree."""
    S = instance.S
    r = instance.r
    n_sym = len(instance.p)

    def cost(d: int, i: int, j: int) -> Cost:
        if i == 0:
            return 0 if j == 0 else INF
        if 0 <= j < i:
            k = r * i - j
            if k <= n_sym:
                return S[k]
        return INF

    def band(d: int, i: int) -> Tuple[int, int]:
        if i == 0:
            return (0, 0)
        lo = r * i - n_sym
        return (lo if lo > 0 else 0, i - 1)

    return MongeCostModel(instance.n_states, levels, cost, band=band)


def _depth_reaches(r: int, depth: int, n: int) -> bool:
    """Whether r**depth >= n, without building huge powers."""
    if depth >= n.bit_length():
        return True  # 2**depth alone already exceeds n
    return r ** depth >= n


def validate_sequence(seq: Sequence[int], instance: LLHCInstance) -> None:
    """Raise ValueError unless seq is a valid internal-node count sequence."""
    if len(seq) == 0:
        raise ValueError("sequence must be nonempty")
    if seq[0] != 0:
        raise ValueError("sequence must start at 0")
    n_sym = len(instance.p)
    r = instance.r
    rising = False
    for k in range(1, len(seq)):
        prev, cur = seq[k - 1], seq[k]
        if cur < prev or (rising and cur == prev):
            raise ValueError(
                "sequence must be strictly increasing after its leading zeros"
            )
        rising = rising or cur > prev
        if r * cur - prev > n_sym:
            raise ValueError(
                f"step {prev} -> {cur} would fix {r * cur - prev} leaves "
                f"but only {n_sym} symbols exist"
            )
    if seq[-1] > instance.n_states - 1:
        raise ValueError("sequence exceeds the total internal-node count")


def is_complete_sequence(seq: Sequence[int], instance: LLHCInstance) -> bool:
    """Complete sequences account for every internal node of a full tree."""
    return bool(seq) and seq[-1] == instance.n_states - 1


def cost_of_sequence(seq: Sequence[int], instance: LLHCInstance) -> Weight:
    """Definitional cost: sum of S[r*i_k - i_{k-1}]; leading zeros are free."""
    validate_sequence(seq, instance)
    S = instance.S
    r = instance.r
    return sum(S[r * seq[k] - seq[k - 1]] for k in range(1, len(seq)))


def sequence_to_tree(seq: Sequence[int], r: int) -> CodeTree:
    """Rebuild the tree shape a complete sequence describes.

    Entry i_k counts the internal nodes on the deepest k levels, so
    consecutive differences give per-depth internal counts from the bottom
    up, and each level's leaves are whatever children its parents opened
    that deeper internals did not consume.  Sequences whose counts satisfy
    the size bounds but would need negative leaves somewhere (the counts
    cannot be arranged as one tree) raise NonTreeSequenceError.
    """
    if len(seq) == 0:
        raise ValueError("sequence must be nonempty")
    if seq[0] != 0:
        raise ValueError("sequence must start at 0")
    if any(b < a for a, b in zip(seq, seq[1:])):
        raise ValueError("sequence must be nondecreasing")
    if r < 2:
        raise ValueError("alphabet size must be at least 2")

    # leading zeros are padding: the tree starts at the last zero entry
    start = 0
    for k, v in enumerate(seq):
        if v == 0:
            start = k
    trimmed = list(seq[start:])
    h = len(trimmed) - 1
    if h == 0:
        return CodeTree(levels=(), leaf_depths=(0,), height=0)

    # internal nodes at depth m, root first
    a = [trimmed[h - m] - trimmed[h - m - 1] for m in range(h)]
    if a[0] != 1:
        raise NonTreeSequenceError(
            f"sequence needs {a[0]} roots; a tree has exactly one"
        )
    leaf_depths: List[int] = []
    for m in range(1, h + 1):
        below = a[m] if m < h else 0
        leaves = r * a[m - 1] - below
        if leaves < 0:
            raise NonTreeSequenceError(
                f"depth {m} would need {leaves} leaves; the counts fit no tree"
            )
        leaf_depths.extend([m] * leaves)
    return CodeTree(levels=tuple(a), leaf_depths=tuple(leaf_depths), height=h)


def assign_codewords(tree: CodeTree, instance: LLHCInstance) -> PrefixCode:
    """Give the deepest leaves to the lightest symbols, then emit canonically.

    Dummy padding symbols take the very deepest slots (they are the
    lightest) and are dropped from the output.  Canonical words go out in
    (length, symbol position) order using base-r counting, so they are
    reproducible and decodable from the lengths alone; ties between equal
    weights put earlier symbols deeper.
    """
    n_sym = len(instance.p)
    if tree.n_leaves != n_sym:
        raise ValueError(
            f"tree has {tree.n_leaves} leaves but the instance has {n_sym} symbols"
        )
    depth_desc = tree.leaf_depths[::-1]
    n_real = n_sym - instance.pad
    lengths = tuple(depth_desc[instance.pad + t] for t in range(n_real))
    cost = sum(
        w * l for w, l in zip(instance.p[instance.pad:], lengths)
    )

    words: Optional[Tuple[str, ...]] = None
    r = instance.r
    if r <= len(_DIGITS):
        by_len = sorted(range(n_real), key=lambda t: (lengths[t], t))
        out: List[str] = [""] * n_real
        code = 0
        prev_len = 0
        for t in by_len:
            l = lengths[t]
            code *= r ** (l - prev_len)
            digits = []
            c = code
            for _ in range(l):
                c, dig = divmod(c, r)
                digits.append(_DIGITS[dig])
            out[t] = "".join(reversed(digits))
            code += 1
            prev_len = l
        words = tuple(out)
    return PrefixCode(lengths=lengths, words=words, cost=cost)


def solve_llhc(p: Sequence[Weight], r: int, D: int) -> LLHCSolution:
    """Minimum-cost prefix code over sorted weights p with max length D.

    Returns the exact optimal cost, the internal-node count sequence the DP
    chose, the reconstructed tree shape, and the emitted code.  Raises
    InfeasibleDepthError when r**D < N, i.e. no code fits at all.
    """
    n = len(p)
    if D < 1:
        raise ValueError("maximum length must be at least 1")
    instance = normalize_rary(p, r)  # validates n, r, sortedness
    if not _depth_reaches(r, D, n):
        raise InfeasibleDepthError(
            f"no {r}-ary prefix code of maximum length {D} covers {n} symbols"
        )

    # depth budgets beyond the total internal-node count never bind: some
    # optimal tree always has height <= n_states - 1
    d_eff = min(D, instance.n_states - 1)
    sol = solve_construction(llhc_model(instance, d_eff))
    if sol.value == INF:
        raise AssertionError("feasible instance produced an infinite optimum")
    seq = tuple(sol.sequence)
    tree = sequence_to_tree(seq, r)
    code = assign_codewords(tree, instance)
    if code.cost != sol.value:
        raise RuntimeError(
            "internal error: emitted code cost differs from the DP optimum"
        )
    return LLHCSolution(cost=sol.value, sequence=seq, tree=tree, code=code)


def huffman_baseline(p: Sequence[Weight], r: int) -> Tuple[Weight, Tuple[int, ...]]:
    """Greedy unrestricted merging; the optimum when no length limit binds.

    Returns (cost, lengths) for the sorted input symbols.  Ties are merged
    first-in-first-out, so the result is deterministic.
    """
    _check_sorted_weights(p)
    if r < 2:
        raise ValueError("alphabet size must be at least 2")
    n = len(p)
    if n == 0:
        return 0, ()
    if n == 1:
        return 0, (0,)
    q = -(n - 1) % (r - 1)
    weights: List[Weight] = [0] * q + list(p)
    children: List[Optional[List[int]]] = [None] * len(weights)
    heap: List[Tuple[Weight, int, int]] = [
        (w, s, s) for s, w in enumerate(weights)
    ]
    order = len(weights)
    # entries are already ascending, which heapify keeps cheap
    heapq.heapify(heap)
    while len(heap) > 1:
        group = [heapq.heappop(heap) for _ in range(r)]
        node = len(weights)
        weights.append(sum(g[0] for g in group))
        children.append([g[2] for g in group])
        heapq.heappush(heap, (weights[node], order, node))
        order += 1

    depth = [0] * len(weights)
    root = heap[0][2]
    stack = [root]
    while stack:
        node = stack.pop()
        kids = children[node]
        if kids is None:
            continue
        for kid in kids:
            depth[kid] = depth[node] + 1
            stack.append(kid)
    lengths = tuple(depth[q + t] for t in range(n))
    cost = sum(w * l for w, l in zip(p, lengths))
    return cost, lengths


def brute_force_llhc(p: Sequence[Weight], r: int, D: int) -> Weight:
    """Exhaustive oracle: best cost over all depth multisets; tiny inputs only.

    Enumerates, level by level, how many leaves a complete r-ary tree places
    at each depth <= D, assigning lighter weights deeper.  Raises
    InfeasibleDepthError when no complete tree of height <= D has enough
    leaves.
    """
    instance = normalize_rary(p, r)
    n_sym = len(instance.p)
    if n_sym > 20:
        raise ValueError("oracle is exponential; use solve_llhc beyond ~16 symbols")
    if D < 1:
        raise ValueError("maximum length must be at least 1")
    d_cap = min(D, instance.n_states - 1)
    weights = instance.p
    best: Optional[Weight] = None

    # state: depth k, open internal nodes above, symbols still unplaced,
    # leaves-per-depth so far (deepest assignments made last)
    def rec(k: int, open_internal: int, remaining: int, depths: List[int]) -> None:
        nonlocal best
        if remaining == 0 and open_internal == 0:
            total: Weight = 0
            for idx, dep in enumerate(reversed(depths)):
                total += weights[idx] * dep
            if best is None or total < best:
                best = total
            return
        if k > d_cap or open_internal == 0:
            return
        slots = r * open_internal
        for leaves in range(min(slots, remaining) + 1):
            internal = slots - leaves
            left = remaining - leaves
            if internal == 0 and left != 0:
                continue
            if internal > 0:
                if left < r * internal:
                    continue
                if (left - internal) % (r - 1) != 0:
                    continue
                if not _depth_reaches(r, d_cap - k, (left + internal - 1) // internal):
                    continue
            depths.extend([k] * leaves)
            rec(k + 1, internal, left, depths)
            del depths[len(depths) - leaves:]

    rec(1, 1, n_sym, [])
    if best is None:
        raise InfeasibleDepthError(
            f"no {r}-ary prefix code of maximum length {D} covers {len(p)} symbols"
        )
    return best

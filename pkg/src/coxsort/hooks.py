"""
Valid hook configurations and preimage counting for one stack-sorting pass.

A hook on the plot of a permutation is an L rotated a quarter turn: a
vertical rise from its southwest endpoint followed by a horizontal run to
its northeast endpoint (both endpoints are plot points, the southwest one
lower and to the left).  A valid configuration places one hook per descent,
southwest endpoints on the descent tops, with no plot point above a hook
and no two hooks crossing (sharing a NE/SW endpoint is allowed).

The preimage count of a permutation under one sorting pass is the sum over
valid configurations of products of Catalan numbers of the induced coloring
composition; an exhaustive scan of S_n doubles as the test oracle.
"""
from __future__ import annotations

import functools
import itertools
import math

from .perm import (
    Perm,
    catalan,
    descents,
    left_to_right_maxima,
    stack_census,
    stack_sort,
    standardize,
)

# A hook is ((sw_pos, sw_val), (ne_pos, ne_val)).
Hook = tuple[tuple[int, int], tuple[int, int]]


def _hooks_conflict(h1: Hook, h2: Hook) -> bool:
    """Crossing/overlap test; a shared NE-SW endpoint is not a conflict."""
    (a1, va1), (b1, vb1) = h1
    (a2, va2), (b2, vb2) = h2
    if (b1, vb1) == (b2, vb2):
        return True
    # vertical of h2 against horizontal of h1 (and symmetrically)
    if a1 <= a2 <= b1 and va2 <= vb1 <= vb2 and a2 != b1:
        return True
    if a2 <= a1 <= b2 and va1 <= vb2 <= vb1 and a1 != b2:
        return True
    return False


def enumerate_vhcs(v) -> list[tuple[Hook, ...]]:
    """All valid hook configurations of the plot of v."""
    v = tuple(v)
    n = len(v)
    des = sorted(descents(v))
    candidates: list[list[Hook]] = []
    for d in des:
        opts = []
        for j in range(d + 1, n + 1):
            if v[j - 1] > v[d - 1] and all(v[l - 1] < v[j - 1] for l in range(d + 1, j)):
                opts.append(((d, v[d - 1]), (j, v[j - 1])))
        candidates.append(opts)

    out: list[tuple[Hook, ...]] = []
    chosen: list[Hook] = []

    def extend(i: int) -> None:
        if i == len(des):
            out.append(tuple(chosen))
            return
        for hook in candidates[i]:
            if all(not _hooks_conflict(prev, hook) for prev in chosen):
                chosen.append(hook)
                extend(i + 1)
                chosen.pop()

    extend(0)
    return out


def q_composition(v, hooks: tuple[Hook, ...]) -> tuple[int, ...]:
    """The coloring composition: each non-NE point looks upward (around the
    left of its own hook if it is a southwest endpoint) and takes the color
    of the lowest hook run covering it, or the sky.  Part 0 is the sky."""
    v = tuple(v)
    n = len(v)
    if n == 0:
        if hooks:
            raise ValueError("empty permutation admits no hooks")
        return ()  # the empty composition
    des = sorted(descents(v))
    if tuple(h[0] for h in hooks) != tuple((d, v[d - 1]) for d in des):
        raise ValueError("hooks do not sit on the descent tops")
    for (a, va), (b, vb) in hooks:
        if not (a < b and va < vb and v[a - 1] == va and v[b - 1] == vb):
            raise ValueError("malformed hook")
        if any(v[l - 1] > vb for l in range(a + 1, b)):
            raise ValueError("plot point above a hook")
    for h1, h2 in itertools.combinations(hooks, 2):
        if _hooks_conflict(h1, h2):
            raise ValueError("hooks cross or overlap")
    ne = {h[1] for h in hooks}
    parts = [0] * (len(hooks) + 1)
    for pos in range(1, n + 1):
        val = v[pos - 1]
        if (pos, val) in ne:
            continue
        best = None  # (ne_val, hook index)
        for idx, ((a, _), (b, vb)) in enumerate(hooks, start=1):
            if a < pos <= b and vb > val and (best is None or vb < best[0]):
                best = (vb, idx)
        parts[best[1] if best else 0] += 1
    return tuple(parts)


def fertility(v) -> int:
    """Sum of Catalan products over all valid hook configurations."""
    v = tuple(v)
    total = 0
    for hooks in enumerate_vhcs(v):
        total += math.prod(catalan(q) for q in q_composition(v, hooks))
    return total


DEFAULT_BRUTE_CAP = 9


def brute_fertility(v, cap: int = DEFAULT_BRUTE_CAP) -> int:
    """Oracle: exhaustive scan of S_n for preimages under one pass."""
    v = tuple(v)
    if len(v) > cap:
        raise ValueError(f"brute-force fertility capped at size {cap}")
    return stack_census(len(v)).get(standardize(v), 0) if v else 1


@functools.lru_cache(maxsize=None)
def _std_preimages(v: Perm) -> tuple[Perm, ...]:
    n = len(v)
    return tuple(u for u in itertools.permutations(range(1, n + 1))
                 if stack_sort(u) == v)


def preimages(v, cap: int = DEFAULT_BRUTE_CAP) -> list[Perm]:
    """All words over v's value set whose sorting pass yields v."""
    v = tuple(v)
    if len(v) > cap:
        raise ValueError(f"preimage enumeration capped at size {cap}")
    values = sorted(v)
    out = []
    for u in _std_preimages(standardize(v)):
        out.append(tuple(values[i - 1] for i in u))
    return out


def is_uniquely_sorted(v) -> bool:
    return fertility(v) == 1


def slmax(u) -> int:
    """Number of left-to-right maxima after one sorting pass."""
    return len(left_to_right_maxima(stack_sort(u)))


def t_stack_sortable(w, t: int) -> bool:
    v = tuple(w)
    for _ in range(t):
        v = stack_sort(v)
    return v == tuple(sorted(v))


def count_t_stack_sortable(n: int, t: int) -> int:
    return sum(1 for w in itertools.permutations(range(1, n + 1))
               if t_stack_sortable(w, t))


def two_stack_sortable_formula(n: int) -> int:
    """2/((n+1)(2n+1)) * C(3n, n), an exact integer."""
    num = 2 * math.comb(3 * n, n)
    den = (n + 1) * (2 * n + 1)
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError("formula did not produce an integer")
    return q

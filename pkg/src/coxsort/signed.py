"""
Hyperoctahedral groups B_n, embedded as the centrally symmetric elements of
S_{2n}: words w of length 2n with w(2n+1-i) = 2n+1 - w(i).

Elements are stored as their full one-line word.  The type-B sorting pass
is the permutree operator of the antisymmetric decoration u^n d^n restricted
to B_n; it lands back in B_n because that decoration is antisymmetric.

A signed window codec [±a1, ..., ±an] is provided for convenience: the
signed values -n..-1, 1..n map onto 1..2n in order (negatives first), the
window describes positions n+1..2n, and the left half follows by central
symmetry.
"""
from __future__ import annotations

import functools
import itertools
from typing import Iterator

from .perm import Perm, check_standard, forward_orbit, identity
from .permutree import is_antisymmetric, permutree_sort

Signed = Perm


def rank_of(w: Signed) -> int:
    if len(w) % 2:
        raise ValueError("centrally symmetric words have even length")
    return len(w) // 2


def is_centrally_symmetric(w: Perm) -> bool:
    m = len(w)
    return m % 2 == 0 and all(w[m - i] == m + 1 - w[i - 1] for i in range(1, m + 1))


def check_signed(w) -> Signed:
    t = check_standard(w)
    if not is_centrally_symmetric(t):
        raise ValueError(f"not centrally symmetric: {t}")
    return t


def _fold(b: int, n: int) -> int:
    # -n..-1 -> 1..n, 1..n -> n+1..2n
    return b + n + 1 if b < 0 else b + n


def from_signed_window(window) -> Signed:
    """Build the length-2n word from signed window notation [±a1,...,±an]."""
    n = len(window)
    if sorted(abs(a) for a in window) != list(range(1, n + 1)):
        raise ValueError(f"signed window must use magnitudes 1..{n} once each")
    right = [_fold(a, n) for a in window]
    left = [2 * n + 1 - x for x in reversed(right)]
    return check_signed(tuple(left + right))


def to_signed_window(w: Signed) -> tuple[int, ...]:
    n = rank_of(w)
    out = []
    for x in w[n:]:
        out.append(x - n if x > n else x - n - 1)
    return tuple(out)


def decoration_b(n: int) -> str:
    return "u" * n + "d" * n


def stack_b(w: Signed) -> Signed:
    """Type-B sorting pass; the result is centrally symmetric again."""
    v = permutree_sort(decoration_b(rank_of(w)), w)
    if not is_centrally_symmetric(v):
        raise AssertionError("sorting pass left the centrally symmetric subgroup")
    return v


def descents_b(w: Signed) -> set[int]:
    """{i in 1..n : w(i) > w(i+1)} (the type-B descent positions)."""
    n = rank_of(w)
    return {i for i in range(1, n + 1) if w[i - 1] > w[i]}


def orbit_b(w: Signed) -> list[Signed]:
    return forward_orbit(stack_b, check_signed(w))


def iter_hyperoctahedral(n: int) -> Iterator[Signed]:
    """All |B_n| = 2^n n! centrally symmetric words, sign vectors x S_n."""
    for u in itertools.permutations(range(1, n + 1)):
        for signs in itertools.product((1, -1), repeat=n):
            yield from_signed_window(tuple(s * x for s, x in zip(signs, u)))


DEFAULT_CENSUS_CAP = 6


@functools.lru_cache(maxsize=2)
def preimage_census(n: int, cap: int = DEFAULT_CENSUS_CAP) -> dict[Signed, int]:
    """Preimage counts of the type-B sorting pass over all of B_n."""
    if n > cap:
        raise ValueError(f"census capped at n={cap}")
    counts: dict[Signed, int] = {}
    for w in iter_hyperoctahedral(n):
        v = stack_b(w)
        counts[v] = counts.get(v, 0) + 1
    return counts


def not_sorted_after(n: int, iterations: int) -> int:
    """How many elements of B_n survive `iterations` sorting passes."""
    e = identity(2 * n)
    count = 0
    for w in iter_hyperoctahedral(n):
        v = w
        for _ in range(iterations):
            v = stack_b(v)
            if v == e:
                break
        if v != e:
            count += 1
    return count


def census_rows(n: int, cap: int = DEFAULT_CENSUS_CAP) -> list[dict]:
    """Per-element census: descents, orbit size, preimage count."""
    counts = preimage_census(n, cap)
    rows = []
    for w in sorted(iter_hyperoctahedral(n)):
        rows.append({
            "element": w,
            "descents": len(descents_b(w)),
            "orbit_size": len(orbit_b(w)),
            "preimages": counts.get(w, 0),
        })
    return rows

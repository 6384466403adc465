"""
Permutations of finite integer sets in one-line notation.

A permutation is stored as a tuple of distinct integers ``(w(1), ..., w(k))``;
positions are 1-based throughout.  A *standard* permutation is one whose
value set is exactly ``{1, ..., n}``.  Most functions accept any sequence of
distinct integers and return tuples.

The wire format used by the command-line tools is comma-separated one-line
notation, e.g. ``"4,7,2,3,1,6,5"``; negative values are permitted.
"""
from __future__ import annotations

import functools
import itertools
import math
from typing import Iterable, Iterator, Sequence

Perm = tuple[int, ...]

#: Inputs whose entries exceed this magnitude are rejected at the codec
#: boundary rather than risking silent wraparound in downstream consumers.
MAX_ABS_VALUE = 2**60


def check_permutation(values: Sequence[int]) -> Perm:
    """Validate one-line notation: distinct machine integers of sane size."""
    w = tuple(values)
    if len(set(w)) != len(w):
        raise ValueError(f"repeated value in one-line notation: {w}")
    for x in w:
        if abs(x) > MAX_ABS_VALUE:
            raise ValueError(f"value {x} out of supported range")
    return w


def is_standard(w: Sequence[int]) -> bool:
    return sorted(w) == list(range(1, len(w) + 1))


def check_standard(w: Sequence[int]) -> Perm:
    t = tuple(w)
    if not is_standard(t):
        raise ValueError(f"not a permutation of 1..{len(t)}: {t}")
    return t


def parse_perm(text: str) -> Perm:
    """Parse comma-separated one-line notation ("4,7,2,3,1,6,5")."""
    text = text.strip()
    if not text:
        return ()
    return check_permutation(tuple(int(part) for part in text.split(",")))


def format_perm(w: Sequence[int]) -> str:
    return ",".join(str(x) for x in w)


def identity(n: int) -> Perm:
    return tuple(range(1, n + 1))


def longest_element(n: int) -> Perm:
    return tuple(range(n, 0, -1))


def standardize(w: Sequence[int]) -> Perm:
    """Replace the i-th smallest value by i (order isomorphism onto 1..n)."""
    rank = {v: i for i, v in enumerate(sorted(w), start=1)}
    return tuple(rank[v] for v in w)


def inverse(w: Sequence[int]) -> Perm:
    """Inverse of a standard permutation."""
    inv = [0] * len(w)
    for i, v in enumerate(w, start=1):
        inv[v - 1] = i
    return tuple(inv)


def compose(u: Sequence[int], v: Sequence[int]) -> Perm:
    """(u o v)(i) = u(v(i)); both must be standard of the same size."""
    if len(u) != len(v):
        raise ValueError("size mismatch in compose")
    return tuple(u[x - 1] for x in v)


def direct_sum(u: Sequence[int], v: Sequence[int]) -> Perm:
    m = len(u)
    return tuple(u) + tuple(x + m for x in v)


def reverse(w: Sequence[int]) -> Perm:
    """rev(w) = w w0, i.e. the one-line word read right to left."""
    return tuple(reversed(w))


def stack_sort(w: Sequence[int]) -> Perm:
    """One pass of stack sorting: L m R -> sort(L) sort(R) m, recursively."""
    w = tuple(w)
    if len(w) <= 1:
        return w
    m = max(w)
    i = w.index(m)
    return stack_sort(w[:i]) + stack_sort(w[i + 1:]) + (m,)


def pop_stack(w: Sequence[int]) -> Perm:
    """Reverse every maximal descending run, keeping runs in place."""
    w = tuple(w)
    out: list[int] = []
    run: list[int] = []
    for x in w:
        if run and run[-1] > x:
            run.append(x)
        else:
            out.extend(reversed(run))
            run = [x]
    out.extend(reversed(run))
    return tuple(out)


def descents(w: Sequence[int]) -> set[int]:
    """{i : w(i) > w(i+1)}, 1-based."""
    return {i for i in range(1, len(w)) if w[i - 1] > w[i]}


def right_inversions(w: Sequence[int]) -> set[tuple[int, int]]:
    """{(i, j) : i < j, w(i) > w(j)} as 1-based position pairs."""
    n = len(w)
    return {(i, j) for i in range(1, n) for j in range(i + 1, n + 1)
            if w[i - 1] > w[j - 1]}


def left_inversions(w: Sequence[int]) -> set[tuple[int, int]]:
    return right_inversions(inverse(w))


def length(w: Sequence[int]) -> int:
    """Coxeter length = number of (right) inversions."""
    n = len(w)
    return sum(1 for i in range(n) for j in range(i + 1, n)
               if w[i] > w[j])


def left_to_right_maxima(w: Sequence[int]) -> tuple[int, ...]:
    """Positions whose value exceeds every value to its left."""
    out = []
    best = None
    for i, x in enumerate(w, start=1):
        if best is None or x > best:
            out.append(i)
            best = x
    return tuple(out)


def alpha_conjugate(w: Sequence[int]) -> Perm:
    """Conjugation by the longest element: w -> w0 w w0.

    One-line notation (n+1-w(n)) ... (n+1-w(1)); rotates the plot by 180
    degrees and is an automorphism of both weak orders.
    """
    n = len(w)
    return tuple(n + 1 - w[n - i] for i in range(1, n + 1))


def avoids_231(w: Sequence[int]) -> bool:
    """True iff no i < j < k has w(k) < w(i) < w(j)."""
    n = len(w)
    if n < 3:
        return True
    # suffix_min[j] = min of w[j:], sentinel at the end
    suffix_min = [0] * (n + 1)
    suffix_min[n] = max(w) + 1
    for j in range(n - 1, -1, -1):
        suffix_min[j] = min(w[j], suffix_min[j + 1])
    for i in range(n - 2):
        for j in range(i + 1, n - 1):
            if w[j] > w[i] and suffix_min[j + 1] < w[i]:
                return False
    return True


# ---------------------------------------------------------------------------
# Weak order

def leq_left_weak(v: Sequence[int], w: Sequence[int]) -> bool:
    """v <=_L w iff every right inversion of v is a right inversion of w."""
    if len(v) != len(w):
        raise ValueError("size mismatch in weak-order comparison")
    return inversion_mask(tuple(v)) & ~inversion_mask(tuple(w)) == 0


def leq_right_weak(v: Sequence[int], w: Sequence[int]) -> bool:
    """v <=_R w iff every left inversion of v is a left inversion of w."""
    return leq_left_weak(inverse(v), inverse(w))


@functools.lru_cache(maxsize=None)
def _pair_index(n: int) -> dict[tuple[int, int], int]:
    pairs = [(i, j) for i in range(1, n) for j in range(i + 1, n + 1)]
    return {p: b for b, p in enumerate(pairs)}


@functools.lru_cache(maxsize=None)
def _pairs(n: int) -> tuple[tuple[int, int], ...]:
    return tuple((i, j) for i in range(1, n) for j in range(i + 1, n + 1))


@functools.lru_cache(maxsize=None)
def _support_bits(n: int) -> tuple[tuple[tuple[int, int], ...], ...]:
    """For each pair (i,k): the bit pairs (bit(i,j), bit(j,k)) for i<j<k."""
    idx = _pair_index(n)
    out = []
    for (i, k) in _pairs(n):
        out.append(tuple((1 << idx[(i, j)], 1 << idx[(j, k)])
                         for j in range(i + 1, k)))
    return tuple(out)


def inversion_mask(w: Perm) -> int:
    """Right-inversion set packed into a bitmask (fixed pair order)."""
    n = len(w)
    mask = 0
    bit = 0
    for i in range(n - 1):
        wi = w[i]
        for j in range(i + 1, n):
            if wi > w[j]:
                mask |= 1 << bit
            bit += 1
    return mask


def perm_from_inversion_mask(n: int, mask: int) -> Perm:
    """Rebuild the permutation whose right-inversion set is `mask`.

    w(i) = 1 + #{j>i : (i,j) inverted} + #{j<i : (j,i) not inverted}.
    """
    idx = _pair_index(n)
    w = []
    for i in range(1, n + 1):
        rank = 1
        for j in range(i + 1, n + 1):
            if mask >> idx[(i, j)] & 1:
                rank += 1
        for j in range(1, i):
            if not mask >> idx[(j, i)] & 1:
                rank += 1
        w.append(rank)
    return tuple(w)


def _meet_mask(n: int, m1: int, m2: int) -> int:
    """Largest inversion set contained in m1 & m2.

    Starting from the intersection (which is transitively closed), repeatedly
    drop any inverted pair (i,k) admitting a witness i<j<k with neither (i,j)
    nor (j,k) inverted, until the complement is transitively closed.
    """
    support = _support_bits(n)
    mask = m1 & m2
    changed = True
    while changed:
        changed = False
        for b, sup in enumerate(support):
            bit = 1 << b
            if mask & bit and any(not mask & x and not mask & y for x, y in sup):
                mask &= ~bit
                changed = True
    return mask


def meet_left_weak(v: Sequence[int], w: Sequence[int]) -> Perm:
    """Meet (maximum common lower bound) in the left weak order."""
    if len(v) != len(w):
        raise ValueError("size mismatch in meet")
    v = check_standard(v)
    w = check_standard(w)
    n = len(v)
    mask = _meet_mask(n, inversion_mask(v), inversion_mask(w))
    m = perm_from_inversion_mask(n, mask)
    # soundness guard: the reconstruction realizes the mask and sits below both
    assert inversion_mask(m) == mask
    assert leq_left_weak(m, v) and leq_left_weak(m, w)
    return m


# ---------------------------------------------------------------------------
# Enumeration and ranking

def iter_perms(n: int) -> Iterator[Perm]:
    return iter(itertools.permutations(range(1, n + 1)))


@functools.lru_cache(maxsize=None)
def all_perms(n: int) -> tuple[Perm, ...]:
    """All of S_n in lexicographic order; index = Lehmer-code rank."""
    return tuple(itertools.permutations(range(1, n + 1)))


def lehmer_rank(w: Sequence[int]) -> int:
    """Rank of a standard permutation in lexicographic order."""
    n = len(w)
    rank = 0
    for i in range(n):
        smaller = sum(1 for j in range(i + 1, n) if w[j] < w[i])
        rank += smaller * math.factorial(n - 1 - i)
    return rank


def perm_unrank(n: int, rank: int) -> Perm:
    values = list(range(1, n + 1))
    out = []
    for i in range(n, 0, -1):
        f = math.factorial(i - 1)
        q, rank = divmod(rank, f)
        out.append(values.pop(q))
    return tuple(out)


def catalan(n: int) -> int:
    return math.comb(2 * n, n) // (n + 1)


def forward_orbit(step, w, limit: int = 10_000) -> list:
    """w, step(w), ... up to and including the first fixed point."""
    orbit = [w]
    for _ in range(limit):
        nxt = step(orbit[-1])
        if nxt == orbit[-1]:
            return orbit
        orbit.append(nxt)
    raise RuntimeError("orbit did not stabilize within limit")


@functools.lru_cache(maxsize=None)
def stack_census(n: int) -> dict[Perm, int]:
    """Image census of one stack-sorting pass over all of S_n."""
    counts: dict[Perm, int] = {}
    for w in iter_perms(n):
        v = stack_sort(w)
        counts[v] = counts.get(v, 0) + 1
    return counts

"""
Affine symmetric groups in window notation, the affine sorting pass, and
exact preimage counting.

An affine permutation of rank n is a bijection w of the integers with
w(i + n) = w(i) + n whose window values w(1)..w(n) sum to n(n+1)/2; it is
determined by the window.  The affine sorting pass reads the periodic
decreasing tree of w: the left-to-right maxima form an infinite left
branch, the word strictly between consecutive maxima hangs as a finite
all-down tree on the right of the later maximum, and the pass emits labels
in postorder.  The additive normalization of the postorder is pinned by the
window-sum constraint.

Preimage counts come in two independent shapes: a skyline decomposition
(choose a periodic subset of the left-to-right maxima; the count is the
product of finite preimage counts of the words under the skyline hooks)
and its hook-configuration expansion; both are computed and must agree.
"""
from __future__ import annotations

import functools
import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from . import series
from .hooks import (
    fertility as finite_fertility,
    preimages as finite_preimages,
    slmax,
    two_stack_sortable_formula,
    enumerate_vhcs,
    q_composition,
)
from .perm import Perm, catalan, standardize, stack_sort
from .permutree import DecreasingPermutree, insert, postorder_positions


@dataclass(frozen=True)
class AffinePermutation:
    """Rank-n affine permutation stored by its window [w(1), ..., w(n)]."""

    n: int
    window: tuple[int, ...]

    def __post_init__(self):
        if self.n < 1 or len(self.window) != self.n:
            raise ValueError("window length must equal the rank")
        n = self.n
        if len({v % n for v in self.window}) != n:
            raise ValueError(f"window residues collide mod {n}: {self.window}")
        target = n * (n + 1) // 2
        if sum(self.window) != target:
            raise ValueError(
                f"window sum {sum(self.window)} != {target}: {self.window}")

    def __str__(self) -> str:
        return "[" + ",".join(str(v) for v in self.window) + "]"

    def apply(self, i: int) -> int:
        j = (i - 1) % self.n + 1
        return self.window[j - 1] + (i - j)

    def position_of(self, value: int) -> int:
        """The unique i with w(i) = value."""
        n = self.n
        for j, v in enumerate(self.window, start=1):
            if (value - v) % n == 0:
                return j + (value - v)
        raise AssertionError("unreachable for a valid window")

    def inverse(self) -> "AffinePermutation":
        n = self.n
        win = [0] * n
        for j, v in enumerate(self.window, start=1):
            r = (v - 1) % n + 1
            win[r - 1] = j - (v - r)
        return AffinePermutation(n, tuple(win))

    def compose(self, other: "AffinePermutation") -> "AffinePermutation":
        """(self o other)(i) = self(other(i))."""
        if self.n != other.n:
            raise ValueError("rank mismatch")
        return AffinePermutation(
            self.n, tuple(self.apply(other.apply(i)) for i in range(1, self.n + 1)))

    def is_identity(self) -> bool:
        return self.window == tuple(range(1, self.n + 1))

    def descents(self) -> set[int]:
        """{i in 1..n : w(i) > w(i+1)}."""
        return {i for i in range(1, self.n + 1)
                if self.apply(i) > self.apply(i + 1)}

    def length(self) -> int:
        """Number of window-anchored inversions i in [n], i<j, w(i)>w(j)."""
        n = self.n
        total = 0
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                total += abs((self.apply(j) - self.apply(i)) // n)
        return total

    def right_mult_simple(self, i: int) -> "AffinePermutation":
        """w * s_i: swap the entries at positions i, i+1 (mod n)."""
        n = self.n
        win = list(self.window)
        if i == n:
            win[0], win[n - 1] = self.apply(0), self.apply(n + 1)
        else:
            win[i - 1], win[i] = win[i], win[i - 1]
        return AffinePermutation(n, tuple(win))

    def left_mult_simple(self, i: int) -> "AffinePermutation":
        """s_i * w: swap the values i, i+1 (mod n) wherever they occur."""
        n = self.n
        lo = (i - 1) % n + 1  # residue class of i
        hi = i % n + 1        # residue class of i + 1
        win = []
        for v in self.window:
            r = (v - 1) % n + 1
            if r == lo:
                win.append(v + 1)
            elif r == hi:
                win.append(v - 1)
            else:
                win.append(v)
        return AffinePermutation(n, tuple(win))

    def shift(self) -> "AffinePermutation":
        """shift(w)(i) = w(i+1) - 1."""
        return AffinePermutation(
            self.n, tuple(self.apply(i + 1) - 1 for i in range(1, self.n + 1)))


def affine_identity(n: int) -> AffinePermutation:
    return AffinePermutation(n, tuple(range(1, n + 1)))


def make_affine(n: int, window) -> AffinePermutation:
    return AffinePermutation(n, tuple(window))


def parse_window(text: str) -> AffinePermutation:
    """Parse "[3,-1,2,-2,7,12]" window notation."""
    body = text.strip()
    if body.startswith("[") and body.endswith("]"):
        body = body[1:-1]
    window = tuple(int(p) for p in body.split(",") if p.strip())
    return AffinePermutation(len(window), window)


def iota(u: Perm) -> AffinePermutation:
    """Embed a standard permutation as the affine one with that window."""
    return AffinePermutation(len(u), tuple(u))


def from_period_word(n: int, word) -> AffinePermutation:
    """Affine permutation whose one-line notation repeats `word` with +n per
    period, anchored by the window-sum constraint."""
    word = list(word)
    if len(word) != n:
        raise ValueError("period word must have length n")
    target = n * (n + 1) // 2
    shift, rem = divmod(sum(word) - target, n)
    if rem:
        raise ValueError("period word cannot be aligned to a valid window")

    def base(t: int) -> int:  # value at slot t, slots 1..n carry `word`
        j = (t - 1) % n + 1
        return word[j - 1] + (t - j)

    return AffinePermutation(n, tuple(base(i - shift) for i in range(1, n + 1)))


# ---------------------------------------------------------------------------
# The periodic decreasing tree and the sorting pass

def lr_maxima_positions(w: AffinePermutation) -> tuple[int, ...]:
    """Positions in 1..n whose value beats everything to its left.

    Only the n preceding positions need checking: anything further left is
    a periodic copy shifted down by a multiple of n.
    """
    out = []
    for i in range(1, w.n + 1):
        wi = w.apply(i)
        if all(w.apply(j) < wi for j in range(i - w.n, i)):
            out.append(i)
    return tuple(out)


@dataclass(frozen=True)
class AffineDecreasingTree:
    """One period of the periodic decreasing tree of an affine permutation.

    ``max_positions`` lists the left-to-right maxima positions in 1..n (the
    infinite left branch, one period); ``segments[j]`` is the word strictly
    between maxima j and j+1 and ``segment_trees[j]`` its finite all-down
    tree.  Labels are the window values.
    """

    source: AffinePermutation
    max_positions: tuple[int, ...]
    segments: tuple[tuple[int, ...], ...]
    segment_trees: tuple[DecreasingPermutree, ...]

    def child_records(self) -> list[dict]:
        """Per-residue child references as (residue, period offset) pairs."""
        n = self.source.n
        recs = []

        def ref(pos: int) -> dict:
            r = (pos - 1) % n + 1
            return {"residue": r, "offset": (pos - r) // n}

        for j, q in enumerate(self.max_positions):
            prev = (self.max_positions[j - 1] if j
                    else self.max_positions[-1] - n)
            rec = {"vertex": ref(q), "left_child": ref(prev), "right_child": None}
            seg_positions = range(q + 1, q + 1 + len(self.segments[j]))
            tree = self.segment_trees[j]
            if self.segments[j]:
                roots = [p for p in range(1, tree.n + 1) if not tree.parents(p)]
                rec["right_child"] = ref(seg_positions[roots[0] - 1])
            recs.append(rec)
        return recs

    def validate(self) -> None:
        w = self.source
        for j, q in enumerate(self.max_positions):
            nxt = (self.max_positions[j + 1] if j + 1 < len(self.max_positions)
                   else self.max_positions[0] + w.n)
            word = tuple(w.apply(p) for p in range(q + 1, nxt))
            if word != self.segments[j]:
                raise AssertionError("segment does not match the source window")
            if self.segment_trees[j].in_order() != word:
                raise AssertionError("segment tree in-order mismatch")
            if any(w.apply(p) >= w.apply(nxt) for p in range(q, nxt)):
                raise AssertionError("maxima chain is not increasing")


def affine_tree(w: AffinePermutation) -> AffineDecreasingTree:
    maxima = lr_maxima_positions(w)
    segments = []
    trees = []
    for j, q in enumerate(maxima):
        nxt = maxima[j + 1] if j + 1 < len(maxima) else maxima[0] + w.n
        word = tuple(w.apply(p) for p in range(q + 1, nxt))
        segments.append(word)
        trees.append(insert(word, "d" * len(word)) if word
                     else DecreasingPermutree("", (), frozenset()))
    return AffineDecreasingTree(w, maxima, tuple(segments), tuple(trees))


def _postorder_slots(w: AffinePermutation) -> list[int]:
    """One period of positions in global postorder: for each maximum, the
    postorder of its right-subtree segment, then the maximum itself."""
    tree = affine_tree(w)
    slots: list[int] = []
    for j, q in enumerate(tree.max_positions):
        if tree.segments[j]:
            local = postorder_positions(tree.segment_trees[j])
            slots.extend(q + p for p in local)
        slots.append(q)
    return slots


def _sort_and_project(w: AffinePermutation) -> tuple[AffinePermutation, AffinePermutation]:
    n = w.n
    slots = _postorder_slots(w)
    image = from_period_word(n, [w.apply(q) for q in slots])

    # projection window: position p gets its postorder index; the slot list
    # covers one residue per class, periodicity fills in the rest, and the
    # additive constant is pinned by the window-sum constraint
    by_residue = {(q - 1) % n: (t, q) for t, q in enumerate(slots, start=1)}
    win = []
    for p in range(1, n + 1):
        t, q = by_residue[(p - 1) % n]
        win.append(t + (p - q))
    shift, rem = divmod(sum(win) - n * (n + 1) // 2, n)
    if rem:
        raise AssertionError("postorder indices misaligned")
    projection = AffinePermutation(n, tuple(x - shift for x in win))

    if w.compose(projection.inverse()) != image:
        raise AssertionError("postorder reading disagrees with projection route")
    return image, projection


def affine_stack(w: AffinePermutation) -> AffinePermutation:
    """One affine sorting pass (postorder reading of the periodic tree)."""
    return _sort_and_project(w)[0]


def pi_down_affine(w: AffinePermutation) -> AffinePermutation:
    """Minimal element of w's class: the normalized postorder itself."""
    return _sort_and_project(w)[1]


def is_231_avoiding(w: AffinePermutation) -> bool:
    """No i < j < k with w(k) < w(i) < w(j).

    A pattern, if present, occurs with i in the window, j within n of i and
    k within n of j: the first position after i with a value above w(i) is
    at most i+n away, and likewise for the first drop below w(i) after it.
    """
    n = w.n
    vals = [w.apply(i) for i in range(1, 3 * n + 1)]
    for i in range(1, n + 1):
        for j in range(i + 1, i + n + 1):
            if vals[j - 1] > vals[i - 1]:
                for k in range(j + 1, j + n + 1):
                    if vals[k - 1] < vals[i - 1]:
                        return False
    return True


def pattern_231_positions(w: AffinePermutation):
    """A witness occurrence (i, j, k) or None; bounded scan, test oracle."""
    n = w.n
    for i in range(1, n + 1):
        for j in range(i + 1, i + n + 1):
            if w.apply(j) > w.apply(i):
                for k in range(j + 1, j + n + 1):
                    if w.apply(k) < w.apply(i):
                        return (i, j, k)
    return None


def enumerate_231_avoiders(n: int, cap: int = 6,
                           length_ceiling: int = 64) -> list[AffinePermutation]:
    """Breadth-first search of the weak order from the identity, collecting
    231-avoiders until the certified total C(2n-1, n) is reached."""
    if n > cap:
        raise ValueError(f"avoider enumeration capped at n={cap}")
    target = math.comb(2 * n - 1, n)
    found: list[AffinePermutation] = []
    layer = {affine_identity(n).window}
    seen_on_layer = layer
    length = 0
    while True:
        for win in sorted(layer):
            w = AffinePermutation(n, win)
            if is_231_avoiding(w):
                found.append(w)
        if len(found) == target:
            return found
        if len(found) > target:
            raise AssertionError("avoider count exceeded the certificate")
        if length >= length_ceiling:
            raise RuntimeError(
                f"certificate {target} not reached by length {length_ceiling}")
        nxt = set()
        for win in layer:
            w = AffinePermutation(n, win)
            for i in range(1, n + 1):
                if w.apply(i) < w.apply(i + 1):  # right product goes up
                    nxt.add(w.right_mult_simple(i).window)
        layer = nxt
        length += 1


def max_avoider_length(n: int, cap: int = 6) -> int:
    return max(w.length() for w in enumerate_231_avoiders(n, cap))


# ---------------------------------------------------------------------------
# Skylines and fertility

@dataclass(frozen=True)
class Skyline:
    """A nonempty periodic choice of left-to-right maxima of ``base``.

    Maxima are indexed so that position(m_1) <= 1 < position(m_2); ``r`` is
    the period count and ``segments[i]`` the word strictly under hook i+1.
    """

    base: AffinePermutation
    residues: tuple[int, ...]  # chosen LR-max positions within 1..n
    positions: tuple[int, ...]  # p_1 < ... < p_r with p_1 <= 1 < p_2
    values: tuple[int, ...]

    @property
    def r(self) -> int:
        return len(self.residues)

    def segments(self) -> tuple[tuple[int, ...], ...]:
        v = self.base
        ps = list(self.positions) + [self.positions[0] + v.n]
        return tuple(
            tuple(v.apply(q) for q in range(ps[i] + 1, ps[i + 1]))
            for i in range(self.r)
        )

    def hooks(self) -> tuple[tuple[tuple[int, int], tuple[int, int]], ...]:
        ps = list(self.positions) + [self.positions[0] + self.base.n]
        vs = list(self.values) + [self.values[0] + self.base.n]
        return tuple(
            (((ps[i], vs[i]), (ps[i + 1], vs[i + 1]))) for i in range(self.r)
        )


def skylines(v: AffinePermutation) -> list[Skyline]:
    maxima = lr_maxima_positions(v)
    out = []
    for k in range(1, len(maxima) + 1):
        for subset in itertools.combinations(maxima, k):
            # index so that position(m_1) <= 1 < position(m_2)
            if subset[0] == 1:
                positions = subset
            else:
                positions = (subset[-1] - v.n,) + subset[:-1]
            out.append(Skyline(v, subset, positions,
                               tuple(v.apply(p) for p in positions)))
    return out


@functools.lru_cache(maxsize=None)
def _segment_fertility(std: Perm) -> int:
    return finite_fertility(std)


def affine_fertility(v: AffinePermutation) -> int:
    """Preimage count under the affine sorting pass.

    Computed by the skyline decomposition (product of finite counts per
    segment) and re-derived as a sum of Catalan products over per-skyline
    hook configurations; the two must agree.
    """
    by_decomposition = 0
    by_hooks = 0
    for sky in skylines(v):
        segs = [standardize(z) for z in sky.segments()]
        by_decomposition += math.prod(_segment_fertility(z) for z in segs)
        term = 0
        for combo in itertools.product(*[enumerate_vhcs(z) for z in segs]):
            comp: tuple[int, ...] = ()
            for z, hooks in zip(segs, combo):
                comp += q_composition(z, hooks)
            term += math.prod(catalan(q) for q in comp)
        by_hooks += term
    if by_decomposition != by_hooks:
        raise AssertionError("skyline and hook-expansion counts disagree")
    return by_decomposition


def affine_preimages(v: AffinePermutation) -> list[AffinePermutation]:
    """Explicit preimages: per skyline, pick one finite preimage per segment
    and read the rebuilt tree in order (maxima followed by the choice)."""
    n = v.n
    out = []
    for sky in skylines(v):
        segs = sky.segments()
        choices = [finite_preimages(z) for z in segs]
        ms = list(sky.values) + [sky.values[0] + n]
        for combo in itertools.product(*choices):
            word: list[int] = []
            for i in range(sky.r):
                word.append(ms[i + 1])
                word.extend(combo[i])
            out.append(from_period_word(n, word))
    return out


def is_uniquely_sorted_affine(v: AffinePermutation) -> bool:
    """Fertility one; cross-checked against the image/descent criterion."""
    fert = affine_fertility(v)
    by_count = fert == 1
    in_image = fert > 0
    by_shape = in_image and (v.n % 2 == 0) and len(v.descents()) == v.n // 2
    if by_count != by_shape:
        raise AssertionError("uniquely-sorted characterizations disagree")
    return by_count


def uniquely_sorted_class_formula(k: int) -> int:
    return 3 * math.comb(4 * k, k) - 2 * sum(math.comb(4 * k, i) for i in range(k + 1))


def uniquely_sorted_class_count(k: int, cap: int = 6) -> int:
    """Number of fertility-one classes in rank 2k, checked vs the formula."""
    n = 2 * k
    count = sum(1 for v in enumerate_231_avoiders(n, cap)
                if is_uniquely_sorted_affine(v))
    expected = uniquely_sorted_class_formula(k)
    if count != expected:
        raise AssertionError(
            f"class count {count} != closed form {expected} at k={k}")
    return count


# ---------------------------------------------------------------------------
# 2-stack-sortable counting, three ways

def count_2ss_by_fertility(n: int, cap: int = 5) -> int:
    if n > cap:
        raise ValueError(f"fertility-sum route capped at n={cap}")
    return sum(affine_fertility(v) for v in enumerate_231_avoiders(n, cap=n))


@functools.lru_cache(maxsize=None)
def _slmax_weight(kappa: int) -> int:
    """Sum of (slmax(tau) + 1) over 2-stack-sortable tau of size kappa-1."""
    if kappa == 1:
        return 1
    total = 0
    for tau in itertools.permutations(range(1, kappa)):
        once = stack_sort(tau)
        if stack_sort(once) == tuple(sorted(once)):
            total += slmax(tau) + 1
    return total


def count_2ss_by_composition(n: int) -> int:
    total = 0
    for r in range(1, n + 1):
        for parts in itertools.product(range(1, n + 1), repeat=r):
            if sum(parts) != n:
                continue
            total += parts[0] * math.prod(_slmax_weight(k) for k in parts)
    return total


def _finite_count_series(order: int) -> series.Series:
    """I(q) = 1 + sum_{m>=1} |W_2(m)| q^m to the given order."""
    return series.make(
        [1] + [two_stack_sortable_formula(m) for m in range(1, order)], order)


def count_2ss_by_series(n: int) -> list[int]:
    """Counts for ranks 1..n from the generating-function identity: the
    coefficients of q I'(q) / (I(q) (I(q) - 1)) - 1.  The denominator's
    simple zero at the origin cancels against the numerator's, so both are
    divided by the variable before taking the reciprocal."""
    order = n + 2
    I = _finite_count_series(order)
    dI = series.derivative(I)
    i_minus_one = [c - (1 if k == 0 else 0) for k, c in enumerate(I)]
    denom = series.mul(I, series.shift_down(i_minus_one), order)
    ratio = series.divide(dI, denom, order)  # = Itilde + 1
    out = []
    for m in range(1, n + 1):
        if ratio[m].denominator != 1:
            raise AssertionError("non-integer coefficient in the count series")
        out.append(int(ratio[m]))
    return out


def verify_series_identity(order: int = 10) -> None:
    """Coefficientwise check of (Itilde + 1) * I * (I - 1) = q * I'(q)."""
    I = _finite_count_series(order)
    tilde_plus_one = series.make([1] + count_2ss_by_series(order - 2), order)
    i_minus_one = [c - (1 if k == 0 else 0) for k, c in enumerate(I)]
    lhs = series.mul(series.mul(tilde_plus_one, I, order), i_minus_one, order)
    q_dI = [Fraction(k) * I[k] for k in range(order)]
    if lhs[:order - 1] != q_dI[:order - 1]:
        raise AssertionError("series identity fails coefficientwise")


def count_2ss(n: int, cap: int = 5) -> int:
    """2-stack-sortable count of rank n, three routes asserted equal."""
    a = count_2ss_by_fertility(n, cap)
    b = count_2ss_by_composition(n)
    c = count_2ss_by_series(n)[n - 1]
    if not a == b == c:
        raise AssertionError(f"count routes disagree at n={n}: {a}, {b}, {c}")
    return a

"""
Lattice and semilattice congruences on the left weak order of S_n.

A congruence is carried as a partition of S_n (class ids indexed by the
Lehmer rank of each permutation).  Constructors cover the three sources used
here: grouping by permutree skeleton, connected components of the Hasse
edges covered by an order ideal of fences, and the closure generated by
declaring one weak-order interval [u, v] to be a class.

Hasse cover edges v <. s_i v are labeled (a, b; R) with a = v^{-1}(i),
b = v^{-1}(i+1), and R the positions strictly between a and b holding values
below i; a fence is the set of edges sharing a label, and lattice
congruences correspond to order ideals in the forcing order on fences.
"""
from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple

from . import permutree
from .perm import (
    Perm,
    all_perms,
    compose,
    descents,
    identity,
    inverse,
    inversion_mask,
    lehmer_rank,
    length,
    pop_stack,
    standardize,
    _meet_mask,
    perm_from_inversion_mask,
)


class Fence(NamedTuple):
    a: int
    b: int
    inner: frozenset[int]

    def __str__(self) -> str:
        inner = ",".join(str(x) for x in sorted(self.inner))
        return f"fen({self.a},{self.b};{{{inner}}})"


def all_fences(n: int) -> list[Fence]:
    if n < 2:
        raise ValueError("fences need n >= 2")
    out = []
    for a in range(1, n):
        for b in range(a + 1, n + 1):
            gap = range(a + 1, b)
            for r in range(len(gap) + 1):
                for sub in itertools.combinations(gap, r):
                    out.append(Fence(a, b, frozenset(sub)))
    return out


def forcing_leq(f: Fence, g: Fence) -> bool:
    """f forces g: f's interval contains g's and g's inner set restricts f's."""
    return (f.a <= g.a < g.b <= f.b
            and g.inner == f.inner & frozenset(range(g.a + 1, g.b)))


def is_order_ideal(fences: Iterable[Fence], universe: list[Fence]) -> bool:
    chosen = set(fences)
    return all(f in chosen
               for g in chosen for f in universe if forcing_leq(f, g))


@functools.lru_cache(maxsize=None)
def hasse_cover_edges(n: int) -> tuple[tuple[int, int, Fence], ...]:
    """All cover edges (rank of v, rank of s_i v, label) of (S_n, <=_L)."""
    perms = all_perms(n)
    out = []
    for rv, v in enumerate(perms):
        pos = {val: i for i, val in enumerate(v, start=1)}
        for i in range(1, n):
            a, b = pos[i], pos[i + 1]
            if a < b:
                w = list(v)
                w[a - 1], w[b - 1] = i + 1, i
                inner = frozenset(q for q in range(a + 1, b) if v[q - 1] < i)
                out.append((rv, lehmer_rank(tuple(w)), Fence(a, b, inner)))
    return tuple(out)


class _UnionFind:
    def __init__(self, size: int):
        self.parent = list(range(size))

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, x: int, y: int) -> bool:
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return False
        self.parent[ry] = rx
        return True


@dataclass(frozen=True)
class Congruence:
    """A partition of S_n with unique per-class weak-order minima."""

    n: int
    class_ids: tuple[int, ...]  # indexed by Lehmer rank
    provenance: str = "explicit"
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    @property
    def num_classes(self) -> int:
        return max(self.class_ids) + 1 if self.class_ids else 0

    def classes(self) -> tuple[tuple[int, ...], ...]:
        if "classes" not in self._cache:
            blocks: list[list[int]] = [[] for _ in range(self.num_classes)]
            for rank, cid in enumerate(self.class_ids):
                blocks[cid].append(rank)
            self._cache["classes"] = tuple(tuple(b) for b in blocks)
        return self._cache["classes"]

    def class_of(self, w: Perm) -> tuple[Perm, ...]:
        perms = all_perms(self.n)
        cid = self.class_ids[lehmer_rank(w)]
        return tuple(perms[r] for r in self.classes()[cid])

    def same_class(self, v: Perm, w: Perm) -> bool:
        return self.class_ids[lehmer_rank(v)] == self.class_ids[lehmer_rank(w)]

    def _extrema(self, want_max: bool) -> tuple[int, ...]:
        key = "maxima" if want_max else "minima"
        if key not in self._cache:
            perms = all_perms(self.n)
            lens = [length(p) for p in perms]
            masks = [inversion_mask(p) for p in perms]
            out = []
            for block in self.classes():
                best = (max if want_max else min)(block, key=lambda r: lens[r])
                ties = [r for r in block if lens[r] == lens[best]]
                if len(ties) != 1:
                    raise ValueError(
                        f"class has {len(ties)} length-extremal elements; "
                        "not a congruence with unique extrema"
                    )
                for r in block:
                    lo, hi = (r, best) if want_max else (best, r)
                    if masks[lo] & ~masks[hi]:
                        raise ValueError(
                            "length-extremal element does not bound its class"
                        )
                out.append(best)
            self._cache[key] = tuple(out)
        return self._cache[key]

    def class_min(self, w: Perm) -> Perm:
        mins = self._extrema(want_max=False)
        return all_perms(self.n)[mins[self.class_ids[lehmer_rank(w)]]]

    def class_max(self, w: Perm) -> Perm:
        maxs = self._extrema(want_max=True)
        return all_perms(self.n)[maxs[self.class_ids[lehmer_rank(w)]]]


def congruence_from_blocks(n: int, blocks: Iterable[Iterable[Perm]],
                           provenance: str = "explicit") -> Congruence:
    ids = [-1] * len(all_perms(n))
    for cid, block in enumerate(blocks):
        for w in block:
            ids[lehmer_rank(tuple(w))] = cid
    if -1 in ids:
        raise ValueError("blocks do not cover S_n")
    return Congruence(n, tuple(ids), provenance)


def _from_union_find(n: int, uf: _UnionFind, provenance: str) -> Congruence:
    reps: dict[int, int] = {}
    ids = []
    for rank in range(len(all_perms(n))):
        root = uf.find(rank)
        ids.append(reps.setdefault(root, len(reps)))
    return Congruence(n, tuple(ids), provenance)


def equality_congruence(n: int) -> Congruence:
    size = len(all_perms(n))
    return Congruence(n, tuple(range(size)), "equality")


def descent_congruence(n: int) -> Congruence:
    groups: dict[frozenset, list[Perm]] = {}
    for w in all_perms(n):
        groups.setdefault(frozenset(descents(w)), []).append(w)
    return congruence_from_blocks(n, groups.values(), "descent")


def congruence_from_decoration(decoration: str) -> Congruence:
    n = len(decoration)
    groups: dict[tuple, list[Perm]] = {}
    for w in all_perms(n):
        groups.setdefault(permutree.skeleton_key(decoration, w), []).append(w)
    return congruence_from_blocks(n, groups.values(), f"permutree:{decoration}")


def congruence_from_ideal(n: int, ideal: Iterable[Fence]) -> Congruence:
    fences = list(ideal)
    if not is_order_ideal(fences, all_fences(n)):
        raise ValueError("fence set is not downward closed in the forcing order")
    chosen = set(fences)
    uf = _UnionFind(len(all_perms(n)))
    for rv, rw, label in hasse_cover_edges(n):
        if label in chosen:
            uf.union(rv, rw)
    name = "fence-ideal:" + ";".join(sorted(str(f) for f in fences))
    return _from_union_find(n, uf, name)


def refine(c1: Congruence, c2: Congruence) -> Congruence:
    if c1.n != c2.n:
        raise ValueError("rank mismatch")
    pairs: dict[tuple[int, int], int] = {}
    ids = []
    for r in range(len(all_perms(c1.n))):
        key = (c1.class_ids[r], c2.class_ids[r])
        ids.append(pairs.setdefault(key, len(pairs)))
    return Congruence(c1.n, tuple(ids),
                      f"refine({c1.provenance},{c2.provenance})")


def refines(c1: Congruence, c2: Congruence) -> bool:
    """True iff every class of c1 sits inside a class of c2."""
    image: dict[int, int] = {}
    for r in range(len(all_perms(c1.n))):
        a, b = c1.class_ids[r], c2.class_ids[r]
        if image.setdefault(a, b) != b:
            return False
    return True


def is_essential(c: Congruence) -> bool:
    """Identity in a singleton class; checked equal to refining descents."""
    if "essential" not in c._cache:
        e_cid = c.class_ids[lehmer_rank(identity(c.n))]
        singleton = c.class_ids.count(e_cid) == 1
        via_descents = refines(c, descent_congruence(c.n))
        if singleton != via_descents:
            raise AssertionError("essentiality characterizations disagree")
        c._cache["essential"] = singleton
    return c._cache["essential"]


def sort_op(c: Congruence, w: Perm) -> Perm:
    """w . (class minimum)^{-1}; requires an essential congruence."""
    if not is_essential(c):
        raise ValueError("sorting operator needs an essential congruence")
    return compose(w, inverse(c.class_min(w)))


def up_op(c: Congruence, w: Perm) -> Perm:
    """(class maximum) . w^{-1}; requires per-class maxima to exist."""
    return compose(c.class_max(w), inverse(w))


def sort_census(c: Congruence) -> dict[Perm, int]:
    counts: dict[Perm, int] = {}
    for w in all_perms(c.n):
        v = sort_op(c, w)
        counts[v] = counts.get(v, 0) + 1
    return counts


# ---------------------------------------------------------------------------
# Interval-generated semilattice congruences

def congruence_from_interval(u: Perm, v: Perm, max_n: int = 6) -> Congruence:
    """Smallest semilattice congruence with [u, v] as a class.

    Closure is restricted to the down-set D of v: for x <= v the meet with
    any y equals the meet with v ^ y in D, so classes outside D stay
    singletons.  Pairs (x, class representative) are re-meeted against all
    of D until no class merges; the pass count is recorded in provenance.
    """
    from .perm import leq_left_weak

    n = len(u)
    if n > max_n:
        raise ValueError(f"interval closure capped at n={max_n}")
    if not leq_left_weak(u, v):
        raise ValueError("need u <= v in left weak order")

    perms = all_perms(n)
    masks = [inversion_mask(p) for p in perms]
    rank_u, rank_v = lehmer_rank(u), lehmer_rank(v)

    down = [r for r in range(len(perms)) if masks[r] & ~masks[rank_v] == 0]
    interval = [r for r in down if masks[rank_u] & ~masks[r] == 0]

    mask_to_rank = {masks[r]: r for r in down}
    meet_memo: dict[tuple[int, int], int] = {}

    def meet_rank(r1: int, r2: int) -> int:
        if r1 > r2:
            r1, r2 = r2, r1
        key = (r1, r2)
        got = meet_memo.get(key)
        if got is None:
            m = _meet_mask(n, masks[r1], masks[r2])
            got = mask_to_rank.get(m)
            if got is None:
                got = lehmer_rank(perm_from_inversion_mask(n, m))
            meet_memo[key] = got
        return got

    uf = _UnionFind(len(perms))
    for r in interval[1:]:
        uf.union(interval[0], r)

    passes = 0
    while True:
        passes += 1
        merged = False
        members: dict[int, list[int]] = {}
        for r in down:
            members.setdefault(uf.find(r), []).append(r)
        for block in members.values():
            if len(block) < 2:
                continue
            rep = block[0]
            for x in block[1:]:
                for y in down:
                    a, b = meet_rank(x, y), meet_rank(rep, y)
                    if uf.find(a) != uf.find(b):
                        uf.union(a, b)
                        merged = True
        if not merged:
            break

    cong = _from_union_find(
        n, uf, f"interval:{u}..{v} (passes={passes})")

    block = set(cong.classes()[cong.class_ids[rank_u]])
    if block != set(interval):
        raise AssertionError("interval [u,v] did not survive as a class")
    sizes = [len(b) for b in cong.classes()]
    for r in range(len(perms)):
        if masks[r] & ~masks[rank_v] and sizes[cong.class_ids[r]] != 1:
            raise AssertionError("element outside the down-set of v got merged")
    return cong


# ---------------------------------------------------------------------------
# Descent-bound verification

def max_descent_witness(n: int) -> Perm:
    """The permutation family whose pop-stack image has 2(n-1)/3 descents.

    Built recursively in steps of three: replace the top entry 3k by 3k+2,
    then append 3k+1, 3k+3, 3k; other sizes standardize a prefix.
    """
    if n < 3:
        raise ValueError("witness defined for n >= 3")
    m = -(-n // 3)
    zeta = [2, 3, 1]
    for k in range(1, m):
        top = 3 * k
        zeta = [x if x != top else top + 2 for x in zeta]
        zeta += [top + 1, top + 3, top]
    return standardize(tuple(zeta[:n]))


def interval_witness_pair(n: int) -> tuple[Perm, Perm]:
    """The zigzag pair u <= v whose quotient reaches n-2 descents."""
    if n < 2:
        raise ValueError("need n >= 2")
    k = -(-n // 2)
    u = tuple((i + 1) // 2 if i % 2 else k + i // 2 for i in range(1, n + 1))
    v = tuple(k - (i - 1) // 2 if i % 2 else n + 1 - i // 2 for i in range(1, n + 1))
    return u, v


def enumerate_ideals(n: int):
    """Yield every order ideal of the forcing order on fences."""
    fences = all_fences(n)
    # linear extension: larger intervals force smaller ones, so sort by span
    order = sorted(range(len(fences)),
                   key=lambda i: (-(fences[i].b - fences[i].a), fences[i]))
    below: list[list[int]] = []
    for idx, i in enumerate(order):
        below.append([jdx for jdx, j in enumerate(order[:idx])
                      if forcing_leq(fences[j], fences[i])])

    chosen = [False] * len(order)

    def rec(k: int):
        if k == len(order):
            yield frozenset(fences[order[i]] for i, c in enumerate(chosen) if c)
            return
        chosen[k] = False
        yield from rec(k + 1)
        if all(chosen[j] for j in below[k]):
            chosen[k] = True
            yield from rec(k + 1)
            chosen[k] = False

    yield from rec(0)


def verify_descent_bounds(n: int, max_n: int = 4) -> dict:
    """Exhaust essential lattice congruences of S_n; report the descent bound.

    Returns {n, bound, achieved, witness_congruence, witness_permutation}.
    """
    if n > max_n:
        raise ValueError(f"ideal enumeration capped at n={max_n}")
    bound = 2 * (n - 1) // 3
    achieved = -1
    witness_ideal: frozenset[Fence] = frozenset()
    witness_perm: Perm = identity(n)
    perms = all_perms(n)
    e_rank = lehmer_rank(identity(n))
    edges = hasse_cover_edges(n)
    for ideal in enumerate_ideals(n):
        uf = _UnionFind(len(perms))
        for rv, rw, label in edges:
            if label in ideal:
                uf.union(rv, rw)
        root_e = uf.find(e_rank)
        if any(uf.find(r) == root_e for r in range(len(perms)) if r != e_rank):
            continue  # not essential
        cong = _from_union_find(n, uf, "ideal")
        for w in perms:
            d = len(descents(sort_op(cong, w)))
            if d > achieved:
                achieved = d
                witness_ideal = ideal
                witness_perm = sort_op(cong, w)
    return {
        "n": n,
        "bound": bound,
        "achieved": achieved,
        "witness_congruence": sorted(str(f) for f in witness_ideal),
        "witness_permutation": witness_perm,
    }

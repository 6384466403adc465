"""
Permutrees: decorated plane trees on positions 1..n, built by a sweep-line
insertion over the plot of a permutation, with in-order / postorder readings.

Decorations are words over four symbols, encoded one character per position:

    'n'  plain     (at most one parent, at most one child)
    'u'  up        (up to two parents, one child; emits an upward wall)
    'd'  down      (one parent, up to two children; emits a downward wall)
    'b'  both      (up to two parents and two children; emits both walls)

The sorting operator attached to a decoration is the postorder reading
composed with the inverse of insertion; for the all-'d' decoration this is
exactly one stack-sorting pass, and for the all-'b' decoration it reverses
descending runs.
"""
from __future__ import annotations

import functools
from bisect import bisect_left, bisect_right, insort
from dataclasses import dataclass

from .perm import Perm, check_standard, compose, inverse, is_standard

SYMBOLS = "nudb"

COMPLEMENT = {"n": "n", "b": "b", "u": "d", "d": "u"}


def check_decoration(decoration: str, n: int | None = None) -> str:
    if not decoration:
        raise ValueError("decoration must be nonempty")
    bad = set(decoration) - set(SYMBOLS)
    if bad:
        raise ValueError(f"unknown decoration symbols {bad!r}; use one of {SYMBOLS!r}")
    if n is not None and len(decoration) != n:
        raise ValueError(f"decoration length {len(decoration)} != permutation size {n}")
    return decoration


def is_antisymmetric(decoration: str) -> bool:
    """Symbol at mirrored position 2n+1-i is the upside-down flip of symbol i."""
    m = len(decoration)
    return m % 2 == 0 and all(
        decoration[m - 1 - i] == COMPLEMENT[decoration[i]] for i in range(m)
    )


@dataclass(frozen=True)
class DecreasingPermutree:
    """A permutree together with its height labeling.

    ``labels[i-1]`` is the label of the vertex at horizontal position ``i``
    (so the in-order reading is just ``labels``).  ``edges`` holds pairs
    ``(child_position, parent_position)``; a child left of its parent is a
    left child.
    """

    decoration: str
    labels: Perm
    edges: frozenset[tuple[int, int]]

    @property
    def n(self) -> int:
        return len(self.labels)

    def children(self, pos: int) -> list[int]:
        return sorted(c for c, p in self.edges if p == pos)

    def parents(self, pos: int) -> list[int]:
        return sorted(p for c, p in self.edges if c == pos)

    def in_order(self) -> Perm:
        return self.labels

    def skeleton(self) -> tuple[str, tuple[tuple[int, int], ...]]:
        """Label-erased canonical form; equality = same congruence class."""
        return (self.decoration, tuple(sorted(self.edges)))

    def to_json_obj(self) -> list[dict]:
        out = []
        for pos in range(1, self.n + 1):
            out.append({
                "position": pos,
                "symbol": self.decoration[pos - 1],
                "label": self.labels[pos - 1],
                "children": [
                    {"position": c, "side": "left" if c < pos else "right"}
                    for c in self.children(pos)
                ],
            })
        return out


def insert(w, decoration: str) -> DecreasingPermutree:
    """Build the decreasing permutree of ``w`` by the bottom-to-top sweep.

    Walls start at every 'd'/'b' abscissa plus the two ends; one incoming
    strand lives in each gap.  Points are consumed by increasing value: an
    'n'/'u' point takes the strand covering its abscissa, a 'd'/'b' point
    takes the two strands flanking its wall and retires the downward wall.
    'n'/'d' points expel one strand; 'u'/'b' points expel two around a new
    upward wall at their abscissa.
    """
    w = tuple(w)
    n = len(w)
    check_decoration(decoration, n)
    if len(set(w)) != n:
        raise ValueError("repeated value in one-line notation")

    walls = [0] + [i for i in range(1, n + 1) if decoration[i - 1] in "db"] + [n + 1]
    strands: list[int | None] = [None] * (len(walls) - 1)
    edges = []

    for _, pos in sorted((v, i) for i, v in enumerate(w, start=1)):
        sym = decoration[pos - 1]
        if sym in "nu":
            g = bisect_right(walls, pos) - 1  # walls[g] < pos < walls[g+1]
            top = strands[g]
            if top is not None:
                edges.append((top, pos))
            if sym == "n":
                strands[g] = pos
            else:
                walls.insert(g + 1, pos)
                strands[g:g + 1] = [pos, pos]
        else:
            k = bisect_left(walls, pos)
            assert walls[k] == pos
            for top in (strands[k - 1], strands[k]):
                if top is not None:
                    edges.append((top, pos))
            if sym == "d":
                walls.pop(k)
                strands[k - 1:k + 1] = [pos]
            else:  # 'b': the downward wall is replaced by an upward one
                strands[k - 1:k + 1] = [pos, pos]

    return DecreasingPermutree(decoration, w, frozenset(edges))


def postorder_positions(tree: DecreasingPermutree) -> tuple[int, ...]:
    """Vertices in postorder: repeatedly take the leftmost vertex all of
    whose children have been taken.  The output is checked against the
    defining property (incomparable pairs appear in horizontal order)."""
    n = tree.n
    pending = [0] * (n + 1)  # number of unvisited children per position
    parents: list[list[int]] = [[] for _ in range(n + 1)]
    for c, p in tree.edges:
        pending[p] += 1
        parents[c].append(p)

    ready = sorted(pos for pos in range(1, n + 1) if pending[pos] == 0)
    order = []
    while ready:
        pos = ready.pop(0)
        order.append(pos)
        for p in parents[pos]:
            pending[p] -= 1
            if pending[p] == 0:
                insort(ready, p)
    if len(order) != n:
        raise AssertionError("greedy postorder stalled; not a permutree poset")

    _assert_postorder_valid(tree, order)
    return tuple(order)


def _assert_postorder_valid(tree: DecreasingPermutree, order: list[int]) -> None:
    n = tree.n
    below: dict[int, set[int]] = {pos: {pos} for pos in range(1, n + 1)}
    for pos in sorted(range(1, n + 1), key=lambda q: tree.labels[q - 1]):
        for c, p in tree.edges:
            if p == pos:
                below[pos] |= below[c]
    rank = {pos: i for i, pos in enumerate(order)}
    for x in range(1, n + 1):
        for y in range(x + 1, n + 1):
            if x in below[y] or y in below[x]:
                continue
            if rank[x] > rank[y]:
                raise AssertionError(
                    f"incomparable vertices {x},{y} out of horizontal order"
                )


def postorder_reading(tree: DecreasingPermutree) -> Perm:
    return tuple(tree.labels[pos - 1] for pos in postorder_positions(tree))


def in_order(tree: DecreasingPermutree) -> Perm:
    return tree.in_order()


def pi_down(decoration: str, w) -> Perm:
    """Minimal element of the decoration's congruence class of ``w``."""
    tree = insert(w, decoration)
    order = postorder_positions(tree)
    out = [0] * tree.n
    for idx, pos in enumerate(order, start=1):
        out[pos - 1] = idx
    return tuple(out)


def permutree_sort(decoration: str, w) -> Perm:
    """The sorting operator of the decoration: postorder o insertion^{-1}.

    For standard input the projection identity ``result = w . pi_down(w)^-1``
    is evaluated as well and the two must agree.
    """
    tree = insert(w, decoration)
    order = postorder_positions(tree)
    reading = tuple(tree.labels[pos - 1] for pos in order)
    if is_standard(w):
        down = [0] * tree.n
        for idx, pos in enumerate(order, start=1):
            down[pos - 1] = idx
        via_projection = compose(tuple(w), inverse(tuple(down)))
        if via_projection != reading:
            raise AssertionError("postorder reading disagrees with projection route")
    return reading


def same_congruence_class(decoration: str, v, w) -> bool:
    if len(v) != len(w):
        raise ValueError("size mismatch")
    return insert(v, decoration).skeleton() == insert(w, decoration).skeleton()


@functools.lru_cache(maxsize=None)
def _skeleton_key(decoration: str, w: Perm):
    return insert(w, decoration).skeleton()


def skeleton_key(decoration: str, w) -> tuple:
    """Cached skeleton of a standard permutation (class fingerprint)."""
    return _skeleton_key(decoration, check_standard(w))


def validate_permutree(tree: DecreasingPermutree) -> None:
    """Check the structural axioms of a decorated permutree.

    Multiplicities per symbol, the left/right ancestor-descendant locality
    conditions, and the wall reformulation: two vertices are comparable iff
    no wall emitted between them separates them.
    """
    n = tree.n
    dec = tree.decoration
    labels = tree.labels
    kids = {pos: tree.children(pos) for pos in range(1, n + 1)}
    pars = {pos: tree.parents(pos) for pos in range(1, n + 1)}

    for pos in range(1, n + 1):
        sym = dec[pos - 1]
        left_p = [p for p in pars[pos] if p < pos]
        right_p = [p for p in pars[pos] if p > pos]
        left_c = [c for c in kids[pos] if c < pos]
        right_c = [c for c in kids[pos] if c > pos]
        if sym in "nd" and len(pars[pos]) > 1:
            raise AssertionError(f"vertex {pos} ({sym}) has several parents")
        if sym in "nu" and len(kids[pos]) > 1:
            raise AssertionError(f"vertex {pos} ({sym}) has several children")
        if sym in "ub" and (len(left_p) > 1 or len(right_p) > 1):
            raise AssertionError(f"vertex {pos} ({sym}) has doubled sided parents")
        if sym in "db" and (len(left_c) > 1 or len(right_c) > 1):
            raise AssertionError(f"vertex {pos} ({sym}) has doubled sided children")

    above: dict[int, set[int]] = {pos: set() for pos in range(1, n + 1)}

    def ancestors(pos: int) -> set[int]:
        if not above[pos]:
            acc: set[int] = set()
            for p in pars[pos]:
                acc |= {p} | ancestors(p)
            above[pos] = acc
        return above[pos]

    below: dict[int, set[int]] = {pos: set() for pos in range(1, n + 1)}

    def descendants(pos: int) -> set[int]:
        if not below[pos]:
            acc: set[int] = set()
            for c in kids[pos]:
                acc |= {c} | descendants(c)
            below[pos] = acc
        return below[pos]

    for pos in range(1, n + 1):
        if dec[pos - 1] in "ub":
            for p in pars[pos]:
                side_left = p < pos
                for anc in {p} | ancestors(p):
                    if (anc < pos) != side_left:
                        raise AssertionError(
                            f"ancestors of a parent of {pos} cross over it"
                        )
        if dec[pos - 1] in "db":
            for c in kids[pos]:
                side_left = c < pos
                for des in {c} | descendants(c):
                    if (des < pos) != side_left:
                        raise AssertionError(
                            f"descendants of a child of {pos} cross over it"
                        )

    # Wall check.  A wall emitted strictly between two vertices and spanning
    # both of their heights blocks any connecting path, so separation always
    # implies incomparability.  The converse holds for all-'d' decorations
    # (the classic binary-tree statement) but not for mixed decorations.
    all_down = set(dec) == {"d"}
    for x in range(1, n + 1):
        for y in range(x + 1, n + 1):
            comparable = y in ancestors(x) or x in ancestors(y)
            separated = False
            for z in range(x + 1, y):
                sym = dec[z - 1]
                if sym in "ub" and labels[z - 1] < min(labels[x - 1], labels[y - 1]):
                    separated = True
                if sym in "db" and labels[z - 1] > max(labels[x - 1], labels[y - 1]):
                    separated = True
            if separated and comparable:
                raise AssertionError(f"edge crosses a wall between {x},{y}")
            if all_down and not separated and not comparable:
                raise AssertionError(f"wall criterion violated for {x},{y}")

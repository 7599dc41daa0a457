"""Exhaustive corpora of small posets and lattices.

Two independent generators produce every labelled poset on n elements:
one extends each poset on n-1 elements by a new element with a chosen
(down-set, up-set) pair, the other filters the 3^C(n,2) antisymmetric
candidate relations for transitivity. They must emit identical sets.
Unlabelled corpora dedupe through a canonical key: the minimum relation
matrix over all relabelings that respect the refined invariant classes.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations, product
from typing import Iterator, Sequence

from .errors import CapExceeded
from .lattice import Lattice
from .poset import Poset, bit_indices, mask_of, refined_invariants

POSET_SIZE_CAP = 7
LATTICE_SIZE_CAP = 8

_ALPHABET = "abcdefgh"


def _labels(n: int) -> list[str]:
    return list(_ALPHABET[:n])


def _down_closed_masks(down: Sequence[int], n: int) -> list[int]:
    """All down-closed subsets of a poset given by its down rows."""
    seen = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for ls in frontier:
            for i in range(n):
                if not ls >> i & 1 and down[i] & ~(1 << i) & ~ls == 0:
                    m = ls | 1 << i
                    if m not in seen:
                        seen.add(m)
                        nxt.append(m)
        frontier = nxt
    return sorted(seen)


def labelled_posets_by_extension(n: int) -> Iterator[tuple[int, ...]]:
    """Yield the up-rows of every labelled poset on n elements, built by
    adding one element at a time."""
    level: list[tuple[tuple[int, ...], tuple[int, ...]]] = [((), ())]
    for k in range(n):
        nxt = []
        for down, up in level:
            full = (1 << k) - 1
            lowers = _down_closed_masks(down, k)
            uppers = [full ^ m for m in lowers]
            for d_mask in lowers:
                allowed = full & ~d_mask
                for i in bit_indices(d_mask):
                    allowed &= up[i]
                for e_mask in uppers:
                    if e_mask & ~allowed:
                        continue
                    new_down = tuple(
                        down[j] | (1 << k if e_mask >> j & 1 else 0)
                        for j in range(k)
                    ) + (d_mask | 1 << k,)
                    new_up = tuple(
                        up[j] | (1 << k if d_mask >> j & 1 else 0)
                        for j in range(k)
                    ) + (e_mask | 1 << k,)
                    nxt.append((new_down, new_up))
        level = nxt
    for _, up in level:
        yield up


def labelled_posets_by_filtering(n: int) -> Iterator[tuple[int, ...]]:
    """Yield the same up-rows by deciding each unordered pair (below,
    above, or incomparable) and filtering for transitivity."""
    pairs = list(combinations(range(n), 2))
    for choice in product((0, 1, 2), repeat=len(pairs)):
        up = [1 << i for i in range(n)]
        for (i, j), c in zip(pairs, choice):
            if c == 1:
                up[i] |= 1 << j
            elif c == 2:
                up[j] |= 1 << i
        ok = True
        for i in range(n):
            row = up[i]
            for j in bit_indices(row):
                if up[j] & ~row:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            yield tuple(up)


def canonical_key(up: Sequence[int]) -> tuple[int, ...]:
    """Minimum up-row tuple over the invariant-respecting relabelings.

    Identical for isomorphic posets, distinct otherwise; the restriction
    to class-preserving permutations is sound because any isomorphism
    preserves the refined invariants.
    """
    n = len(up)
    down = [0] * n
    for i in range(n):
        for j in bit_indices(up[i]):
            down[j] |= 1 << i
    inv = refined_invariants(up, down)
    classes: dict = {}
    for i, v in enumerate(inv):
        classes.setdefault(v, []).append(i)
    blocks = [classes[v] for v in sorted(classes)]
    positions = []
    start = 0
    for b in blocks:
        positions.append(list(range(start, start + len(b))))
        start += len(b)
    best = None
    for combo in product(*(permutations(pos) for pos in positions)):
        pos_of = [0] * n
        for block, placed in zip(blocks, combo):
            for elem, p in zip(block, placed):
                pos_of[elem] = p
        rows = [0] * n
        for i in range(n):
            rows[pos_of[i]] = mask_of(pos_of[j] for j in bit_indices(up[i]))
        key = tuple(rows)
        if best is None or key < best:
            best = key
    return best


def enumerate_posets(n: int, up_to_iso: bool = True) -> list[Poset]:
    """Every poset on n elements, labelled a, b, c, ... One representative
    per isomorphism class unless up_to_iso is off."""
    if n > POSET_SIZE_CAP:
        raise CapExceeded("poset enumeration size", POSET_SIZE_CAP)
    labels = _labels(n)
    if not up_to_iso:
        return [Poset(labels, up) for up in labelled_posets_by_extension(n)]
    reps = {}
    for up in labelled_posets_by_extension(n):
        key = canonical_key(up)
        if key not in reps:
            reps[key] = up
    return [Poset(labels, up) for up in sorted(reps.values())]


def _rows_form_lattice(up: Sequence[int], n: int) -> bool:
    """Bottom plus binary joins; in a finite poset that already forces
    binary meets and a top."""
    full = (1 << n) - 1
    if not any(row == full for row in up):
        return False
    for i in range(n):
        for j in range(i + 1, n):
            ub = up[i] & up[j]
            if not any(ub & ~up[t] == 0 for t in bit_indices(ub)):
                return False
    return True


def enumerate_lattices(n: int) -> list[Lattice]:
    """Every lattice on n elements up to isomorphism."""
    if n > LATTICE_SIZE_CAP:
        raise CapExceeded("lattice enumeration size", LATTICE_SIZE_CAP)
    labels = _labels(n)
    reps = {}
    for up in labelled_posets_by_extension(n):
        if not _rows_form_lattice(up, n):
            continue
        key = canonical_key(up)
        if key not in reps:
            reps[key] = up
    return [Lattice.from_poset(Poset(labels, up)) for up in sorted(reps.values())]


@dataclass(frozen=True)
class CorpusSpec:
    max_size: int
    kind: str = "posets"
    up_to_iso: bool = True

    def __post_init__(self):
        if self.kind not in ("posets", "lattices"):
            raise ValueError(f"unknown corpus kind {self.kind!r}")
        cap = POSET_SIZE_CAP if self.kind == "posets" else LATTICE_SIZE_CAP
        if self.max_size > cap:
            raise CapExceeded(f"{self.kind} corpus max size", cap)


def corpus(spec: CorpusSpec) -> list:
    """All instances of the requested kind, sizes 0 through max_size."""
    if spec.kind == "posets":
        return [
            p
            for n in range(spec.max_size + 1)
            for p in enumerate_posets(n, spec.up_to_iso)
        ]
    return [
        t for n in range(spec.max_size + 1) for t in enumerate_lattices(n)
    ]

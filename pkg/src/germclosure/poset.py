"""Finite partial orders on labelled elements, bitmask backed.

The order relation is stored twice, as rows of up-sets and rows of
down-sets: ``up[i]`` is the bitmask of all j with i <= j and ``down[i]``
the bitmask of all j with j <= i. Element sets are plain ints throughout;
labels matter only at the I/O boundary.
"""

from __future__ import annotations

from functools import cached_property
from typing import Iterable, Iterator, Optional, Sequence

from .errors import CycleError, DuplicateLabel, UnknownLabel


def bit_indices(mask: int) -> Iterator[int]:
    """Yield the set bits of mask, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(indices: Iterable[int]) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


def set_label(p: "Poset", mask: int) -> str:
    """Set-notation label for a subset of p, '{a,b}' style."""
    return "{" + ",".join(p.labels[i] for i in bit_indices(mask)) + "}"


class Poset:
    """A finite poset. Construct via from_relations unless the rows are
    already known to be reflexive, antisymmetric and transitive."""

    def __init__(self, labels: Sequence[str], up: Sequence[int]):
        self.labels = tuple(labels)
        self.up = tuple(up)
        n = len(self.labels)
        down = [0] * n
        for i in range(n):
            m = self.up[i]
            while m:
                low = m & -m
                down[low.bit_length() - 1] |= 1 << i
                m ^= low
        self.down = tuple(down)

    @classmethod
    def from_relations(
        cls, labels: Sequence[str], pairs: Iterable[tuple[str, str]]
    ) -> "Poset":
        """Build the reflexive transitive closure of the given a<b pairs.

        Raises DuplicateLabel / UnknownLabel on bad names and CycleError if
        the closure would break antisymmetry.
        """
        index: dict[str, int] = {}
        for lab in labels:
            if lab in index:
                raise DuplicateLabel(lab)
            index[lab] = len(index)
        n = len(index)
        up = [1 << i for i in range(n)]
        for a, b in pairs:
            if a not in index:
                raise UnknownLabel(a)
            if b not in index:
                raise UnknownLabel(b)
            up[index[a]] |= 1 << index[b]
        for k in range(n):
            bit = 1 << k
            for i in range(n):
                if up[i] & bit:
                    up[i] |= up[k]
        for i in range(n):
            for j in bit_indices(up[i] & ~(1 << i)):
                if up[j] & (1 << i):
                    raise CycleError(labels[i], labels[j])
        return cls(labels, up)

    @property
    def n(self) -> int:
        return len(self.labels)

    @cached_property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @cached_property
    def _index(self) -> dict[str, int]:
        return {lab: i for i, lab in enumerate(self.labels)}

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise UnknownLabel(label) from None

    def leq(self, i: int, j: int) -> bool:
        return bool(self.up[i] >> j & 1)

    def lt(self, i: int, j: int) -> bool:
        return i != j and bool(self.up[i] >> j & 1)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Poset)
            and self.labels == other.labels
            and self.up == other.up
        )

    def __hash__(self) -> int:
        return hash((self.labels, self.up))

    def __repr__(self) -> str:
        return f"Poset({list(self.labels)}, {self.n} elements)"

    # -- intervals ---------------------------------------------------------

    def closed(self, u: int, v: int) -> int:
        """[u,v] as a mask (empty unless u <= v)."""
        return self.up[u] & self.down[v]

    def interval(self, kind: str, u: Optional[int] = None, v: Optional[int] = None) -> int:
        """One of the eight interval shapes, by kind token.

        Two-ended kinds take u and v; one-ended kinds take v only. The dot
        of the one-ended notations is written ``*``.
        """
        if kind in ("[u,v]", "[u,v[", "]u,v]", "]u,v["):
            if u is None or v is None:
                raise ValueError(f"interval kind {kind!r} needs both ends")
            m = self.up[u] & self.down[v]
            if kind[0] == "]":
                m &= ~(1 << u)
            if kind[-1] == "[":
                m &= ~(1 << v)
            return m
        if v is None:
            raise ValueError(f"interval kind {kind!r} needs v")
        if kind == "]*,v]":
            return self.down[v]
        if kind == "]*,v[":
            return self.down[v] & ~(1 << v)
        if kind == "[v,*[":
            return self.up[v]
        if kind == "]v,*[":
            return self.up[v] & ~(1 << v)
        raise ValueError(f"unknown interval kind {kind!r}")

    def strict_down(self, v: int) -> int:
        return self.down[v] & ~(1 << v)

    def strict_up(self, v: int) -> int:
        return self.up[v] & ~(1 << v)

    # -- bounds ------------------------------------------------------------

    def upper_bounds(self, mask: int) -> int:
        ub = self.full_mask
        for i in bit_indices(mask):
            ub &= self.up[i]
        return ub

    def lower_bounds(self, mask: int) -> int:
        lb = self.full_mask
        for i in bit_indices(mask):
            lb &= self.down[i]
        return lb

    def sup_of(self, mask: int) -> Optional[int]:
        """Least upper bound of the set, or None if there is none.

        sup_of(0) is the smallest element of the poset when one exists.
        """
        ub = self.upper_bounds(mask)
        for i in bit_indices(ub):
            if self.up[i] & ub == ub:
                return i
        return None

    def inf_of(self, mask: int) -> Optional[int]:
        """Greatest lower bound of the set, or None. Dual to sup_of."""
        lb = self.lower_bounds(mask)
        for i in bit_indices(lb):
            if self.down[i] & lb == lb:
                return i
        return None

    # -- derived posets ----------------------------------------------------

    def opposite(self) -> "Poset":
        """The same elements with the order reversed."""
        return Poset(self.labels, self.down)

    def full_subposet(self, mask: int) -> "Poset":
        """The induced order on the elements of mask, labels kept.

        Element k of the result is the k-th set bit of mask, so the parent
        indices are recoverable as sub_indices(mask).
        """
        keep = list(bit_indices(mask))
        pos = {p: k for k, p in enumerate(keep)}
        up = []
        for p in keep:
            m = 0
            for q in bit_indices(self.up[p] & mask):
                m |= 1 << pos[q]
            up.append(m)
        return Poset([self.labels[p] for p in keep], up)

    def sub_indices(self, mask: int) -> list[int]:
        return list(bit_indices(mask))

    # -- structure ---------------------------------------------------------

    @cached_property
    def covers_up(self) -> tuple[int, ...]:
        """covers_up[i] = elements j covering i (i < j, nothing between)."""
        out = []
        for i in range(self.n):
            strict = self.strict_up(i)
            m = 0
            for j in bit_indices(strict):
                if strict & self.strict_down(j) == 0:
                    m |= 1 << j
            out.append(m)
        return tuple(out)

    @cached_property
    def covers_down(self) -> tuple[int, ...]:
        """covers_down[i] = elements j covered by i."""
        out = [0] * self.n
        for i, m in enumerate(self.covers_up):
            for j in bit_indices(m):
                out[j] |= 1 << i
        return tuple(out)

    def cover_pairs(self) -> list[tuple[int, int]]:
        """All covering pairs (i, j) with j covering i, index order."""
        return [(i, j) for i in range(self.n) for j in bit_indices(self.covers_up[i])]

    def is_lower_set(self, mask: int) -> bool:
        for i in bit_indices(mask):
            if self.down[i] & ~mask:
                return False
        return True

    def lower_closure(self, mask: int) -> int:
        out = 0
        for i in bit_indices(mask):
            out |= self.down[i]
        return out

    def minimal_mask(self) -> int:
        return mask_of(i for i in range(self.n) if self.strict_down(i) == 0)

    def maximal_mask(self) -> int:
        return mask_of(i for i in range(self.n) if self.strict_up(i) == 0)

    def subset(self, labels: Iterable[str]) -> "ElemSet":
        return ElemSet(self, mask_of(self.index(lab) for lab in labels))

    def elem_set(self, mask: int) -> "ElemSet":
        return ElemSet(self, mask)


class ElemSet:
    """A subset of a poset's elements; iterates indices ascending."""

    def __init__(self, poset: Poset, mask: int):
        self.poset = poset
        self.mask = mask

    def __iter__(self) -> Iterator[int]:
        return bit_indices(self.mask)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __contains__(self, i: int) -> bool:
        return bool(self.mask >> i & 1)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, ElemSet)
            and self.poset == other.poset
            and self.mask == other.mask
        )

    def __hash__(self) -> int:
        return hash((self.poset, self.mask))

    def __and__(self, other: "ElemSet") -> "ElemSet":
        return ElemSet(self.poset, self.mask & other.mask)

    def __or__(self, other: "ElemSet") -> "ElemSet":
        return ElemSet(self.poset, self.mask | other.mask)

    def __sub__(self, other: "ElemSet") -> "ElemSet":
        return ElemSet(self.poset, self.mask & ~other.mask)

    def labels(self) -> tuple[str, ...]:
        return tuple(self.poset.labels[i] for i in self)

    def __repr__(self) -> str:
        return "{" + ",".join(self.labels()) + "}"


def chain(n: int, prefix: str = "u") -> Poset:
    """The chain u1 < u2 < ... < un."""
    labels = [f"{prefix}{i + 1}" for i in range(n)]
    up = [((1 << n) - 1) & ~((1 << i) - 1) for i in range(n)]
    return Poset(labels, up)


def antichain(n: int, prefix: str = "u") -> Poset:
    """n pairwise incomparable elements."""
    labels = [f"{prefix}{i + 1}" for i in range(n)]
    return Poset(labels, [1 << i for i in range(n)])


# -- isomorphism search ----------------------------------------------------


def refined_invariants(
    up: Sequence[int], down: Sequence[int], rounds: int = 2
) -> list:
    """Per-element order invariants, refined by neighborhood multisets.

    Comparable nested tuples, identical across isomorphic posets; used to
    prune isomorphism search and to order canonical-form classes.
    """
    n = len(up)
    inv: list = [(down[i].bit_count(), up[i].bit_count()) for i in range(n)]
    for _ in range(rounds):
        inv = [
            (
                inv[i],
                tuple(sorted(inv[j] for j in bit_indices(down[i] & ~(1 << i)))),
                tuple(sorted(inv[j] for j in bit_indices(up[i] & ~(1 << i)))),
            )
            for i in range(n)
        ]
    return inv


def _refined_invariants(p: Poset) -> list:
    return refined_invariants(p.up, p.down)


def isomorphisms(p: Poset, q: Poset, limit: Optional[int] = None) -> list[tuple[int, ...]]:
    """All order isomorphisms p -> q as index tuples f with f[i] in q.

    Candidate images are pruned by refined degree invariants before
    backtracking. Pass limit=1 to stop at the first hit.
    """
    if p.n != q.n:
        return []
    pinv = _refined_invariants(p)
    qinv = _refined_invariants(q)
    if sorted(pinv) != sorted(qinv):
        return []
    candidates = [[j for j in range(q.n) if qinv[j] == pinv[i]] for i in range(p.n)]
    order = sorted(range(p.n), key=lambda i: len(candidates[i]))
    found: list[tuple[int, ...]] = []
    f = [-1] * p.n
    used = [False] * q.n

    def place(k: int) -> bool:
        if k == p.n:
            found.append(tuple(f))
            return limit is not None and len(found) >= limit
        i = order[k]
        for j in candidates[i]:
            if used[j]:
                continue
            ok = True
            for kk in range(k):
                ii = order[kk]
                if p.leq(i, ii) != q.leq(j, f[ii]) or p.leq(ii, i) != q.leq(f[ii], j):
                    ok = False
                    break
            if ok:
                f[i] = j
                used[j] = True
                if place(k + 1):
                    return True
                used[j] = False
                f[i] = -1
        return False

    place(0)
    return found


def automorphism_count(p: Poset) -> int:
    return len(isomorphisms(p, p))

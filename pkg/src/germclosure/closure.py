"""The germ closure of a finite poset.

G(U) collects two families of lower sets of U, ordered by inclusion: the
cuts U_{<=B} over all subsets B (equivalently, all intersections of
principal lower sets, plus U itself for B empty), and the strict lower
cuts ]*,r[ of the germs r of U. The two families never overlap. U embeds
via u -> ]*,u], and for any germ extension S of U the map
s -> U_{<=s} is the one and only embedding of S onto a full subposet of
G(U) extending that.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .errors import NotAGermExtension
from .germs import GermCutCase, GermRecord, LambdaCase, grm, grm_mask, is_germ_extension
from .lattice import Lattice
from .poset import ElemSet, Poset, bit_indices, isomorphisms, mask_of, set_label


def lambda_sets(u: Poset) -> list[int]:
    """All cuts U_{<=B}, B over subsets of u, as masks sorted by
    (cardinality, bitmask). Computed as the intersection closure of the
    principal lower sets together with u itself."""
    sets = {u.full_mask}
    sets.update(u.down[i] for i in range(u.n))
    work = list(sets)
    while work:
        a = work.pop()
        for b in list(sets):
            c = a & b
            if c not in sets:
                sets.add(c)
                work.append(c)
    return sorted(sets, key=lambda m: (m.bit_count(), m))


def ghat_sets(u: Poset) -> list[tuple[int, GermRecord]]:
    """The strict lower cut of each germ of u, with the germ as witness.

    Distinct germs cannot share a cut (the germ is the sup of its cut),
    but the list keeps one entry per germ so a collapse would be visible.
    """
    return [(u.strict_down(rec.germ), rec) for rec in grm(u)]


@dataclass(frozen=True)
class GermClosure:
    """G(u): a poset of lower sets of the base, inclusion ordered.

    masks[i] is the subset element i stands for; cases[i] says which
    family it came from (LambdaCase with the largest cutting witness, or
    GermCutCase with the germ); embed[k] is the element ]*,k] the base
    element k maps to.
    """

    base: Poset
    poset: Poset
    masks: tuple[int, ...]
    cases: tuple[LambdaCase | GermCutCase, ...]
    embed: tuple[int, ...]

    @property
    def n(self) -> int:
        return self.poset.n

    def index_of(self, mask: int) -> int:
        return self._by_mask[mask]

    @cached_property
    def _by_mask(self) -> dict[int, int]:
        return {m: i for i, m in enumerate(self.masks)}

    def meet(self, i: int, j: int) -> int:
        """Meets are plain intersections."""
        return self.index_of(self.masks[i] & self.masks[j])

    def join(self, i: int, j: int) -> int:
        """Join of two elements: the intersection of every element
        containing both, which the closure always contains."""
        union = self.masks[i] | self.masks[j]
        out = self.base.full_mask
        for m in self.masks:
            if union & ~m == 0:
                out &= m
        return self.index_of(out)


def germ_closure(u: Poset) -> GermClosure:
    lam = lambda_sets(u)
    ghat = ghat_sets(u)
    lam_set = set(lam)
    assert not lam_set.intersection(m for m, _ in ghat), "cut families overlap"
    by_mask: dict[int, GermRecord] = {}
    for m, rec in ghat:
        assert m not in by_mask, "two germs share a strict lower cut"
        by_mask[m] = rec
    masks = sorted(lam + list(by_mask), key=lambda m: (m.bit_count(), m))
    cases: list[LambdaCase | GermCutCase] = []
    for m in masks:
        if m in lam_set:
            b = mask_of(i for i in range(u.n) if m & ~u.down[i] == 0)
            cases.append(LambdaCase(b))
        else:
            cases.append(GermCutCase(by_mask[m].germ))
    labels = [set_label(u, m) for m in masks]
    up = [
        mask_of(k for k, other in enumerate(masks) if m & ~other == 0)
        for m in masks
    ]
    poset = Poset(labels, up)
    index = {m: i for i, m in enumerate(masks)}
    embed = tuple(index[u.down[i]] for i in range(u.n))
    return GermClosure(u, poset, tuple(masks), tuple(cases), embed)


def canonical_embed(
    closure: GermClosure, s: Poset, inclusion: list[int] | None = None
) -> list[int]:
    """The embedding j(t) = U_{<=t} of a germ extension s into the closure.

    inclusion[k] locates base element k inside s; by default labels are
    matched. Raises NotAGermExtension when s does not germ-extend the
    image of the base; bad inclusions raise ValueError.
    """
    base = closure.base
    if inclusion is None:
        inclusion = [s.index(lab) for lab in base.labels]
    if len(inclusion) != base.n or len(set(inclusion)) != base.n:
        raise ValueError("inclusion is not injective on the base")
    if any(not 0 <= k < s.n for k in inclusion):
        raise ValueError("inclusion points outside the ambient poset")
    for i in range(base.n):
        for k in range(base.n):
            if base.leq(i, k) != s.leq(inclusion[i], inclusion[k]):
                raise ValueError("inclusion is not a full-subposet embedding")
    u_in_s = mask_of(inclusion)
    if not is_germ_extension(ElemSet(s, u_in_s)):
        raise NotAGermExtension(
            "the ambient poset does not germ-extend the embedded base"
        )
    j = []
    for t in range(s.n):
        shadow = mask_of(k for k in range(base.n) if s.leq(inclusion[k], t))
        j.append(closure.index_of(shadow))
    assert len(set(j)) == s.n, "canonical embedding is not injective"
    for t1 in range(s.n):
        for t2 in range(s.n):
            assert s.leq(t1, t2) == (
                closure.masks[j[t1]] & ~closure.masks[j[t2]] == 0
            ), "canonical embedding does not preserve the order both ways"
    for k in range(base.n):
        assert j[inclusion[k]] == closure.embed[k], "embedding moves the base"
    return j


def reconstruct_from_lattice(t: Lattice) -> tuple[GermClosure, list[int]]:
    """Strip the germs of the lattice t, close what is left, and exhibit
    the isomorphism t ≅ G(u) for u = t - Grm(t).

    Returns the closure of u and the index map t -> closure, asserted to
    be an order isomorphism.
    """
    t_poset = t.poset
    u_mask = t_poset.full_mask & ~grm_mask(t_poset)
    sub = t_poset.full_subposet(u_mask)
    closure = germ_closure(sub)
    j = canonical_embed(closure, t_poset, inclusion=t_poset.sub_indices(u_mask))
    assert closure.n == t_poset.n, (
        f"closure has {closure.n} elements but the input has {t_poset.n}"
    )
    return closure, j


def aut_transport(u: Poset) -> tuple[int, int]:
    """|Aut(u)| and |Aut(G(u))|, asserted equal via the two transports.

    Every base automorphism acts on the closure elementwise and lands in
    Aut(G(u)); every closure automorphism fixes the embedded copy of the
    base setwise and restricts to an automorphism of u.
    """
    closure = germ_closure(u)
    auts_u = isomorphisms(u, u)
    auts_g = isomorphisms(closure.poset, closure.poset)
    lifted = set()
    for alpha in auts_u:
        images = []
        for m in closure.masks:
            moved = mask_of(alpha[i] for i in bit_indices(m))
            images.append(closure.index_of(moved))
        assert len(set(images)) == closure.n
        lifted.add(tuple(images))
    assert lifted <= set(auts_g), "a lifted action is not an automorphism"
    assert len(lifted) == len(auts_u), "the lift is not injective"
    embedded = set(closure.embed)
    back = {e: k for k, e in enumerate(closure.embed)}
    for g in auts_g:
        assert {g[e] for e in embedded} == embedded, (
            "a closure automorphism moves the embedded base"
        )
        beta = [back[g[closure.embed[k]]] for k in range(u.n)]
        for i in range(u.n):
            for k in range(u.n):
                assert u.leq(i, k) == u.leq(beta[i], beta[k]), (
                    "a restricted automorphism does not preserve the base order"
                )
    assert len(auts_u) == len(auts_g), (
        f"|Aut(base)| = {len(auts_u)} but |Aut(closure)| = {len(auts_g)}"
    )
    return len(auts_u), len(auts_g)

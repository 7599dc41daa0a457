"""Executable checks for every structural fact the package relies on.

Each predicate streams (instance, ok, detail) results over an exhaustive
corpus; run_suite aggregates them into per-predicate reports carrying
replayable failure descriptions. Conditional facts count only instances
satisfying their hypothesis. The op-duality probe is advisory: it reports
rather than fails, since the duality is conjectural.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator

from .closure import (
    aut_transport,
    canonical_embed,
    germ_closure,
    ghat_sets,
    lambda_sets,
    reconstruct_from_lattice,
)
from .embed import irr_closure_equals_g_t, ghat_t, is_germ_extensible, unique_base, verify_partition
from .enumeration import CorpusSpec, corpus
from .germs import (
    LambdaCase,
    cogerm_candidates,
    detects,
    germ_cut_witness,
    grm,
    grm_mask,
    is_germ_extension,
    lambda_witness,
)
from .lattice import Lattice, lambda_e, lower_set_lattice
from .poset import ElemSet, Poset, bit_indices, isomorphisms, mask_of

PAIR_LIMIT = 4


@dataclass
class Context:
    posets: list[Poset]
    lattices: list[Lattice]
    pair_limit: int = PAIR_LIMIT


@dataclass(frozen=True)
class PredicateReport:
    name: str
    checked: int
    failures: tuple[tuple[str, str], ...]
    advisory: bool = False

    @property
    def ok(self) -> bool:
        return not self.failures


Result = tuple[str, bool, str]


def describe_poset(p: Poset) -> str:
    rels = " ".join(f"{p.labels[i]}<{p.labels[j]}" for i, j in p.cover_pairs())
    return f"elements: {' '.join(p.labels)}; relations: {rels}"


def _describe_pair(s: Poset, u_mask: int) -> str:
    u = ",".join(s.labels[i] for i in bit_indices(u_mask))
    return f"{describe_poset(s)}; U={{{u}}}"


def _compress(mask: int, keep: list[int]) -> int:
    return mask_of(k for k, p in enumerate(keep) if mask >> p & 1)


def _pairs(ctx: Context) -> Iterator[tuple[Poset, int]]:
    for s in ctx.posets:
        if s.n > ctx.pair_limit:
            continue
        for u_mask in range(1 << s.n):
            yield s, u_mask


def _extension_pairs(ctx: Context) -> Iterator[tuple[Poset, int]]:
    for s, u_mask in _pairs(ctx):
        if is_germ_extension(ElemSet(s, u_mask)):
            yield s, u_mask


# -- germ facts --------------------------------------------------------------


def _pred_cogerm_uniqueness(ctx: Context) -> Iterator[Result]:
    """Every germ admits exactly one cogerm."""
    for p in ctx.posets:
        for u in range(p.n):
            cands = cogerm_candidates(p, u)
            yield (
                f"{describe_poset(p)}; u={p.labels[u]}",
                len(cands) <= 1,
                f"cogerms {[p.labels[v] for v in cands]}",
            )


def _pred_germ_chain_nesting(ctx: Context) -> Iterator[Result]:
    """Distinct germs u, u' with cogerms v, v': u' > u forces
    v' >= u' > v >= u, and u' <= v forces u' <= v' < u <= v."""
    for p in ctx.posets:
        recs = grm(p)
        for a in recs:
            for b in recs:
                if a.germ == b.germ:
                    continue
                u, v = a.germ, a.cogerm
                u2, v2 = b.germ, b.cogerm
                inst = f"{describe_poset(p)}; germs {p.labels[u]},{p.labels[u2]}"
                if p.lt(u, u2):
                    ok = p.leq(u2, v2) and p.lt(v, u2) and p.leq(u, v)
                    yield inst, ok, "chain v' >= u' > v >= u broken"
                if p.leq(u2, v):
                    ok = p.leq(u2, v2) and p.lt(v2, u) and p.leq(u, v)
                    yield inst, ok, "chain u' <= v' < u <= v broken"


def _pred_base_detects(ctx: Context) -> Iterator[Result]:
    """A germ extension is detected by its base."""
    for s, u_mask in _extension_pairs(ctx):
        yield _describe_pair(s, u_mask), detects(ElemSet(s, u_mask)), "not detected"


def _pred_shadow_shape_exclusive(ctx: Context) -> Iterator[Result]:
    """In a germ extension, every shadow U_{<=s} is a cut U_{<=B} or a
    strict germ cut, never both, never neither."""
    for s, u_mask in _extension_pairs(ctx):
        u_set = ElemSet(s, u_mask)
        for t in range(s.n):
            b = lambda_witness(u_set, t)
            r = germ_cut_witness(u_set, t)
            yield (
                f"{_describe_pair(s, u_mask)}; s={s.labels[t]}",
                (b is None) != (r is None),
                "both shapes" if b is not None and r is not None else "neither shape",
            )


def _pred_shadows_force_extension(ctx: Context) -> Iterator[Result]:
    """Detection plus both shadow shapes everywhere forces a germ
    extension."""
    for s, u_mask in _pairs(ctx):
        u_set = ElemSet(s, u_mask)
        if not detects(u_set):
            continue
        if any(
            lambda_witness(u_set, t) is None and germ_cut_witness(u_set, t) is None
            for t in range(s.n)
        ):
            continue
        yield (
            _describe_pair(s, u_mask),
            is_germ_extension(u_set),
            "hypotheses hold but some non-base element is not a germ",
        )


def _pred_intermediate_extension(ctx: Context) -> Iterator[Result]:
    """Anything between a base and a germ extension of it is again a germ
    extension of the base."""
    for s, u_mask in _extension_pairs(ctx):
        rest = s.full_mask & ~u_mask
        sub_bits = list(bit_indices(rest))
        for pick in range(1 << len(sub_bits)):
            r_mask = u_mask | mask_of(sub_bits[k] for k in bit_indices(pick))
            sub = s.full_subposet(r_mask)
            keep = s.sub_indices(r_mask)
            ok = is_germ_extension(ElemSet(sub, _compress(u_mask, keep)))
            yield (
                f"{_describe_pair(s, u_mask)}; R={{{','.join(s.labels[i] for i in bit_indices(r_mask))}}}",
                ok,
                "intermediate poset is not a germ extension",
            )


def _count_base_fixing_embeddings(
    clos, s: Poset, inclusion: list[int], stop_at: int = 2
) -> int:
    """Order embeddings of s onto full subposets of the closure that fix
    the embedded base pointwise."""
    f = [-1] * s.n
    for k, si in enumerate(inclusion):
        f[si] = clos.embed[k]
    used = set(x for x in f if x >= 0)
    free = [t for t in range(s.n) if f[t] == -1]
    count = 0

    def walk(idx: int) -> bool:
        nonlocal count
        if idx == len(free):
            count += 1
            return count >= stop_at
        t = free[idx]
        for g in range(clos.n):
            if g in used:
                continue
            ok = all(
                s.leq(t, t2) == (clos.masks[g] & ~clos.masks[f[t2]] == 0)
                and s.leq(t2, t) == (clos.masks[f[t2]] & ~clos.masks[g] == 0)
                for t2 in range(s.n)
                if f[t2] >= 0
            )
            if ok:
                f[t] = g
                used.add(g)
                if walk(idx + 1):
                    return True
                used.discard(g)
                f[t] = -1
        return False

    walk(0)
    return count


def _pred_universal_property(ctx: Context) -> Iterator[Result]:
    """A germ extension embeds into the closure of its base by
    s -> U_{<=s}, and no other base-fixing embedding exists."""
    for s, u_mask in _extension_pairs(ctx):
        inclusion = s.sub_indices(u_mask)
        sub = s.full_subposet(u_mask)
        clos = germ_closure(sub)
        inst = _describe_pair(s, u_mask)
        try:
            canonical_embed(clos, s, inclusion)
        except AssertionError as e:
            yield inst, False, f"canonical embedding broke: {e}"
            continue
        n_embeddings = _count_base_fixing_embeddings(clos, s, inclusion)
        yield inst, n_embeddings == 1, f"{n_embeddings} base-fixing embeddings"


# -- closure facts -----------------------------------------------------------


def _pred_lambda_ghat_disjoint(ctx: Context) -> Iterator[Result]:
    """The cut family and the germ-cut family never overlap, and no two
    germs share a strict cut."""
    for p in ctx.posets:
        lam = set(lambda_sets(p))
        ghat = [m for m, _ in ghat_sets(p)]
        ok = not lam.intersection(ghat) and len(set(ghat)) == len(ghat)
        yield describe_poset(p), ok, "cut families overlap"


def _pred_closure_lattice(ctx: Context) -> Iterator[Result]:
    """The closure contains the empty set and all of U, is closed under
    intersection (incomparable pairs landing in the cut family), and is a
    lattice whose meets are intersections."""
    for p in ctx.posets:
        clos = germ_closure(p)
        inst = describe_poset(p)
        members = set(clos.masks)
        if 0 not in members or p.full_mask not in members:
            yield inst, False, "missing empty set or full base"
            continue
        lat = Lattice.from_poset(clos.poset)
        ok = True
        detail = ""
        for i in range(clos.n):
            for j in range(i + 1, clos.n):
                inter = clos.masks[i] & clos.masks[j]
                if inter not in members:
                    ok, detail = False, "not intersection closed"
                    break
                incomparable = (
                    clos.masks[i] & ~clos.masks[j] and clos.masks[j] & ~clos.masks[i]
                )
                if incomparable and not isinstance(
                    clos.cases[clos.index_of(inter)], LambdaCase
                ):
                    ok, detail = False, "incomparable meet outside the cut family"
                    break
                if lat.meet[i][j] != clos.index_of(inter):
                    ok, detail = False, "lattice meet is not intersection"
                    break
                if lat.join[i][j] != clos.join(i, j):
                    ok, detail = False, "joins disagree with least upper cover"
                    break
            if not ok:
                break
        yield inst, ok, detail


def _pred_germ_transfer(ctx: Context) -> Iterator[Result]:
    """Germs passing between a germ extension and its base: base elements
    that are ambient germs are base germs; each base germ keeps its chain
    and either stays an ambient germ with the same cogerm or sits right
    above an ambient germ outside the base with that cogerm."""
    for s, u_mask in _extension_pairs(ctx):
        sub = s.full_subposet(u_mask)
        keep = s.sub_indices(u_mask)
        inst = _describe_pair(s, u_mask)
        sub_germs = grm_mask(sub)
        for rec in grm(s):
            if u_mask >> rec.germ & 1:
                pos = keep.index(rec.germ)
                yield (
                    f"{inst}; s={s.labels[rec.germ]}",
                    bool(sub_germs >> pos & 1),
                    "ambient germ in the base is not a base germ",
                )
        s_germ_recs = {r.germ: r for r in grm(s)}
        for rec in grm(sub):
            r = keep[rec.germ]
            rhat = keep[rec.cogerm]
            inst_r = f"{inst}; r={s.labels[r]}"
            mapped = mask_of(keep[i] for i in bit_indices(sub.closed(rec.germ, rec.cogerm)))
            if s.closed(r, rhat) != mapped:
                yield inst_r, False, "[r,r^]_S differs from [r,r^]_U"
                continue
            cut = s.strict_down(r)
            case_a = s.sup_of(cut) == r
            greatest = next(
                (x for x in bit_indices(cut) if cut & ~s.down[x] == 0), None
            )
            if case_a == (greatest is not None):
                yield inst_r, False, "neither or both germ-passage cases triggered"
                continue
            if case_a:
                got = s_germ_recs.get(r)
                yield (
                    inst_r,
                    got is not None and got.cogerm == rhat,
                    "r is sup of its cut but not an ambient germ with cogerm r^",
                )
            else:
                got = s_germ_recs.get(greatest)
                above = s.strict_up(greatest)
                ok = (
                    not u_mask >> greatest & 1
                    and got is not None
                    and got.cogerm == rhat
                    and above >> r & 1
                    and above & ~s.up[r] == 0
                    and r not in s_germ_recs
                )
                yield inst_r, ok, "greatest-element case misbehaves"


def _pred_reconstruction(ctx: Context) -> Iterator[Result]:
    """Reconstruction: the embedded base is exactly the closure minus its
    germs, automorphisms transport bijectively, and stripping a lattice's
    germs and closing gives the lattice back."""
    for p in ctx.posets:
        clos = germ_closure(p)
        inst = describe_poset(p)
        image = mask_of(clos.embed)
        ok = image == clos.poset.full_mask & ~grm_mask(clos.poset)
        yield inst, ok, "embedded base is not closure minus germs"
        try:
            aut_transport(p)
            yield inst, True, ""
        except AssertionError as e:
            yield inst, False, f"automorphism transport broke: {e}"
    for t in ctx.lattices:
        inst = describe_poset(t.poset)
        try:
            reconstruct_from_lattice(t)
            yield inst, True, ""
        except AssertionError as e:
            yield inst, False, f"reconstruction broke: {e}"


# -- lattice embedding facts -------------------------------------------------


def _pred_nu_criterion(ctx: Context) -> Iterator[Result]:
    """ν is injective exactly when every germ clears its join, and ν is
    always monotone."""
    for t in ctx.lattices:
        for u_mask in range(1 << t.n):
            res = is_germ_extensible(t, ElemSet(t.poset, u_mask))
            inst = _describe_pair(t.poset, u_mask)
            direct = len(set(res.nu_image)) == res.closure.n
            yield inst, res.extensible == direct, (
                f"criterion says {res.extensible}, injectivity says {direct}"
            )
            monotone = all(
                t.poset.leq(res.nu_image[i], res.nu_image[j])
                for i in range(res.closure.n)
                for j in range(res.closure.n)
                if res.closure.masks[i] & ~res.closure.masks[j] == 0
            )
            if not monotone:
                yield inst, False, "ν is not monotone"


def _pred_partition(ctx: Context) -> Iterator[Result]:
    """Unique bases tile the powerset into intervals [U, Ḡ(U)], and the
    full lattice's own base is the lattice minus its germs."""
    for t in ctx.lattices:
        inst = describe_poset(t.poset)
        try:
            cells = verify_partition(t)
        except AssertionError as e:
            yield inst, False, f"partition broke: {e}"
            continue
        total = sum(len(c.members) for c in cells)
        yield inst, total == 1 << t.n, f"cells cover {total} of {1 << t.n} subsets"
        base = unique_base(t, ElemSet(t.poset, t.poset.full_mask))
        ok = base.mask == t.poset.full_mask & ~grm_mask(t.poset)
        yield inst, ok, "base of the whole lattice is not lattice minus germs"


def _pred_irr_closure(ctx: Context) -> Iterator[Result]:
    """The irreducibles are germ extensible and close onto G_T."""
    for t in ctx.lattices:
        yield describe_poset(t.poset), irr_closure_equals_g_t(t), "Ḡ(E) differs from G_T"


def _pred_closure_vs_lowerset(ctx: Context) -> Iterator[Result]:
    """Computing the closure inside the lower-set lattice by the operator
    route lands on the same two families."""
    for p in ctx.posets:
        lsl = lower_set_lattice(p)
        masks = lsl.element_masks
        lam_t = {masks[i] for i in bit_indices(lambda_e(lsl))}
        ghat_via_t = {masks[i] for i in bit_indices(ghat_t(lsl))}
        lam_u = set(lambda_sets(p))
        ghat_u = {m for m, _ in ghat_sets(p)}
        ok = lam_t == lam_u and ghat_via_t == ghat_u
        yield describe_poset(p), ok, (
            f"operator route gives Λ of {len(lam_t)} and Ĝ of {len(ghat_via_t)},"
            f" closure has {len(lam_u)} and {len(ghat_u)}"
        )


def _pred_op_duality_probe(ctx: Context) -> Iterator[Result]:
    """Advisory: G(U^op) and G(U)^op appear to be isomorphic."""
    for p in ctx.posets:
        a = germ_closure(p.opposite()).poset
        b = germ_closure(p).poset.opposite()
        ok = bool(isomorphisms(a, b, limit=1))
        yield describe_poset(p), ok, "closure of the opposite is not the opposite closure"


@dataclass(frozen=True)
class Predicate:
    name: str
    fn: Callable[[Context], Iterator[Result]]
    advisory: bool = False


PREDICATES: dict[str, Predicate] = {
    p.name: p
    for p in [
        Predicate("cogerm-uniqueness", _pred_cogerm_uniqueness),
        Predicate("germ-chain-nesting", _pred_germ_chain_nesting),
        Predicate("base-detects", _pred_base_detects),
        Predicate("shadow-shape-exclusive", _pred_shadow_shape_exclusive),
        Predicate("shadows-force-extension", _pred_shadows_force_extension),
        Predicate("intermediate-extension", _pred_intermediate_extension),
        Predicate("universal-property", _pred_universal_property),
        Predicate("lambda-ghat-disjoint", _pred_lambda_ghat_disjoint),
        Predicate("closure-lattice", _pred_closure_lattice),
        Predicate("germ-transfer", _pred_germ_transfer),
        Predicate("reconstruction", _pred_reconstruction),
        Predicate("nu-criterion", _pred_nu_criterion),
        Predicate("partition", _pred_partition),
        Predicate("irr-closure-is-g-t", _pred_irr_closure),
        Predicate("closure-vs-lowerset", _pred_closure_vs_lowerset),
        Predicate("op-duality-probe", _pred_op_duality_probe, advisory=True),
    ]
}


def run_suite(
    specs: CorpusSpec | list[CorpusSpec],
    predicates: list[str] | None = None,
    sink: Callable[[str, str, bool, str], None] | None = None,
) -> list[PredicateReport]:
    """Run the selected predicates (default: all) over the corpora the
    specs describe. sink, if given, receives every single instance result
    as (predicate, instance, ok, detail)."""
    if isinstance(specs, CorpusSpec):
        specs = [specs]
    posets: list[Poset] = []
    lattices: list[Lattice] = []
    for spec in specs:
        if spec.kind == "posets":
            posets.extend(corpus(spec))
        else:
            lattices.extend(corpus(spec))
    ctx = Context(posets, lattices)
    names = predicates if predicates is not None else list(PREDICATES)
    reports = []
    for name in names:
        pred = PREDICATES[name]
        checked = 0
        failures = []
        for instance, ok, detail in pred.fn(ctx):
            checked += 1
            if not ok:
                failures.append((instance, detail))
            if sink is not None:
                sink(name, instance, ok, detail)
        reports.append(PredicateReport(name, checked, tuple(failures), pred.advisory))
    return reports

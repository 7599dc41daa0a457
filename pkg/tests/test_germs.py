"""Germ detection against a naive set-based oracle, plus the germ
extension predicates."""

import pytest

from germclosure import (
    GermCutCase,
    LambdaCase,
    NotAGermExtension,
    Poset,
    antichain,
    chain,
    classify,
    cogerm_candidates,
    detects,
    enumerate_posets,
    grm,
    grm_mask,
    is_germ,
    is_germ_extension,
)
from germclosure.germs import germ_cut_witness, lambda_witness, u_below
from germclosure.poset import bit_indices, mask_of


def corpus_posets(max_n=5):
    return [p for n in range(max_n + 1) for p in enumerate_posets(n)]


def naive_germs(p: Poset) -> dict[str, set[str]]:
    """Oracle: the definition transcribed over label sets, no bitmask
    tricks shared with the implementation."""
    els = list(p.labels)

    def leq(a, b):
        return p.leq(p.index(a), p.index(b))

    def sup(subset):
        ubs = [x for x in els if all(leq(s, x) for s in subset)]
        least = [x for x in ubs if all(leq(x, y) for y in ubs)]
        return least[0] if least else None

    def inf(subset):
        lbs = [x for x in els if all(leq(x, s) for s in subset)]
        greatest = [x for x in lbs if all(leq(y, x) for y in lbs)]
        return greatest[0] if greatest else None

    found: dict[str, set[str]] = {}
    for u in els:
        below_u = {x for x in els if leq(x, u) and x != u}
        if sup(below_u) != u:
            continue
        for v in els:
            if not leq(u, v):
                continue
            above_v = {x for x in els if leq(v, x) and x != v}
            if inf(above_v) != v:
                continue
            seg = {x for x in els if leq(u, x) and leq(x, v)}
            above_u = {x for x in els if leq(u, x)}
            below_v = {x for x in els if leq(x, v)}
            if above_u != seg | above_v or seg & above_v:
                continue
            if below_v != below_u | seg or below_u & seg:
                continue
            if any(not (leq(x, y) or leq(y, x)) for x in seg for y in seg):
                continue
            found.setdefault(u, set()).add(v)
    return found


def test_grm_matches_naive_oracle_exhaustively():
    for p in corpus_posets():
        oracle = naive_germs(p)
        got = {rec.labels()[0]: {rec.labels()[1]} for rec in grm(p)}
        assert got == oracle, f"disagreement on {p!r}"


def test_oracle_never_sees_two_cogerms():
    for p in corpus_posets():
        for u, vs in naive_germs(p).items():
            assert len(vs) == 1, f"{u} has cogerms {vs} in {p!r}"


def test_chain_germs():
    """A chain has exactly one germ: the bottom, cogerm the top, the
    whole chain connecting them."""
    for n in range(1, 6):
        recs = grm(chain(n))
        assert len(recs) == 1
        assert recs[0].labels() == ("u1", f"u{n}")
        assert recs[0].chain == tuple(range(n))


def test_antichain_has_no_germs():
    for n in range(2, 6):
        assert grm(antichain(n)) == ()
    assert len(grm(antichain(1))) == 1


def test_example_posets(vee, wedge, npos):
    assert [r.labels() for r in grm(vee)] == [("c", "c")]
    assert [r.labels() for r in grm(wedge)] == [("c", "c")]
    assert grm(npos) == ()


def test_twelve_element_lattice_has_three_germs(twelve):
    got = {rec.labels() for rec in grm(twelve.poset)}
    assert got == {("bot", "bot"), ("M", "F"), ("top", "top")}


def test_sup_and_inf_fixpoint_forces_self_cogerm():
    """An element that is both the sup of what lies strictly below it and
    the inf of what lies strictly above it is a germ, its own cogerm."""
    checked = 0
    for p in corpus_posets(4):
        for u in range(p.n):
            if p.sup_of(p.strict_down(u)) != u:
                continue
            if p.inf_of(p.strict_up(u)) != u:
                continue
            rec = is_germ(p, u)
            assert rec is not None and rec.cogerm == u
            checked += 1
    assert checked > 0


def test_germ_cogerm_swaps_under_opposite():
    """Cogerms of a poset are the germs of its opposite, with the roles
    of u and v exchanged, bijectively."""
    for p in corpus_posets(4):
        forward = {(r.germ, r.cogerm) for r in grm(p)}
        backward = {(r.cogerm, r.germ) for r in grm(p.opposite())}
        assert forward == backward


def test_cogerm_candidates_public_contract(vee):
    assert cogerm_candidates(vee, vee.index("c")) == [vee.index("c")]
    assert cogerm_candidates(vee, vee.index("a")) == []


def test_detects():
    c2 = chain(2)
    assert detects(c2.subset(["u2"]))
    assert not detects(c2.subset(["u1"]))
    assert detects(c2.subset(["u1", "u2"]))
    a2 = antichain(2)
    assert not detects(a2.subset(["u1"]))


def test_is_germ_extension(vee):
    assert is_germ_extension(vee.subset(["a", "b"]))
    assert is_germ_extension(vee.subset(["a", "b", "c"]))
    assert not is_germ_extension(vee.subset(["a"]))
    assert is_germ_extension(chain(2).subset(["u2"]))
    assert not is_germ_extension(chain(2).subset(["u1"]))


def test_every_poset_extends_itself():
    for p in corpus_posets(4):
        assert is_germ_extension(p.elem_set(p.full_mask))


def test_u_below(vee):
    u = vee.subset(["a", "b"])
    assert u_below(u, vee.index("c")).labels() == ("a", "b")
    assert u_below(u, vee.index("a")).labels() == ("a",)


def test_classify_cases(vee):
    u = vee.subset(["a", "b"])
    # the shadow of c is all of U, the cut with empty witness
    case = classify(u, vee.index("c"))
    assert isinstance(case, LambdaCase)
    assert case.witness == 0
    case = classify(u, vee.index("a"))
    assert isinstance(case, LambdaCase)
    assert case.witness == mask_of([vee.index("a")])


def test_classify_finds_germ_cuts():
    """With s strictly between the base and the germ's cogerm, the shadow
    of s is the strict cut of a base germ."""
    s = Poset.from_relations(
        ["a", "b", "s", "c"], [("a", "s"), ("b", "s"), ("s", "c")]
    )
    u = s.subset(["a", "b", "c"])
    assert is_germ_extension(u)
    case = classify(u, s.index("s"))
    assert isinstance(case, GermCutCase)
    assert case.germ == s.index("c")


def test_classify_picks_largest_witness():
    c3 = chain(3)
    u = c3.subset(["u2", "u3"])
    case = classify(u, c3.index("u2"))
    assert isinstance(case, LambdaCase)
    # u2 is below both base elements, so the witness keeps them both
    assert case.witness == u.mask
    # the bottom of the chain shows the germ-cut shape instead
    case = classify(u, c3.index("u1"))
    assert isinstance(case, GermCutCase)
    assert case.germ == c3.index("u2")


def test_classify_rejects_non_extension():
    c2 = chain(2)
    with pytest.raises(NotAGermExtension):
        classify(c2.subset(["u1"]), c2.index("u2"))


def test_witnesses_are_exclusive_on_extensions(vee, wedge):
    for s, base in [(vee, ["a", "b"]), (wedge, ["a", "b"]), (chain(3), ["u2", "u3"])]:
        u = s.subset(base)
        assert is_germ_extension(u)
        for t in range(s.n):
            lam = lambda_witness(u, t)
            cut = germ_cut_witness(u, t)
            assert (lam is None) != (cut is None)


def test_grm_mask_agrees_with_records(npos, vee):
    assert grm_mask(npos) == 0
    assert grm_mask(vee) == mask_of([vee.index("c")])
    for p in corpus_posets(3):
        assert grm_mask(p) == mask_of(r.germ for r in grm(p))

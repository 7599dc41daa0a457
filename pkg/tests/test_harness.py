"""The fact suite itself: registry completeness, report aggregation, and
a green run over a small corpus."""

from germclosure import CorpusSpec, PredicateReport, run_suite
from germclosure.harness import PREDICATES, Context, describe_poset
from germclosure.poset import Poset, chain

EXPECTED_NAMES = {
    "cogerm-uniqueness",
    "germ-chain-nesting",
    "base-detects",
    "shadow-shape-exclusive",
    "shadows-force-extension",
    "intermediate-extension",
    "universal-property",
    "lambda-ghat-disjoint",
    "closure-lattice",
    "germ-transfer",
    "reconstruction",
    "nu-criterion",
    "partition",
    "irr-closure-is-g-t",
    "closure-vs-lowerset",
    "op-duality-probe",
}


def test_registry_names():
    assert set(PREDICATES) == EXPECTED_NAMES
    advisory = {n for n, p in PREDICATES.items() if p.advisory}
    assert advisory == {"op-duality-probe"}


def test_small_corpus_runs_green():
    reports = run_suite([CorpusSpec(3, "posets"), CorpusSpec(3, "lattices")])
    assert len(reports) == len(PREDICATES)
    for r in reports:
        assert r.ok, f"{r.name}: {r.failures[:3]}"


def test_reports_count_instances_and_stream_to_sink():
    rows = []

    def sink(pred, instance, ok, detail):
        rows.append((pred, ok))

    reports = run_suite(
        CorpusSpec(3, "posets"),
        predicates=["cogerm-uniqueness", "lambda-ghat-disjoint"],
        sink=sink,
    )
    assert [r.name for r in reports] == ["cogerm-uniqueness", "lambda-ghat-disjoint"]
    assert all(r.checked > 0 for r in reports)
    assert len(rows) == sum(r.checked for r in reports)
    assert all(ok for _, ok in rows)


def test_single_spec_accepted():
    reports = run_suite(CorpusSpec(2, "posets"), predicates=["base-detects"])
    assert len(reports) == 1


def test_report_ok_property():
    good = PredicateReport("x", 3, ())
    bad = PredicateReport("x", 3, (("inst", "why"),))
    assert good.ok and not bad.ok


def test_describe_poset_is_replayable():
    from germclosure.documents import parse_poset, to_poset

    p = Poset.from_relations(["a", "b", "c"], [("a", "c"), ("b", "c")])
    text = describe_poset(p).replace("; ", "\n")
    assert to_poset(parse_poset(text)) == p
    assert describe_poset(chain(2)) == "elements: u1 u2; relations: u1<u2"


def test_context_defaults():
    ctx = Context([chain(2)], [])
    assert ctx.pair_limit == 4

import pytest

from harmonise.errors import BadPrefix, ConflictingQualifiers, HasBlankNodes, InvalidIri, InvalidTerm, UnboundPrefix
from harmonise.rdf import (
    IRI,
    BlankNode,
    Graph,
    Literal,
    Namespace,
    NamespaceMap,
    Triple,
    bind,
    bnode,
    expand,
    graph_add,
    graph_equal_ground,
    graph_match,
    graph_union,
    make_iri,
    make_literal,
)
from harmonise.vocab import RDF_TYPE, SOSA_OBSERVATION, XSD_FLOAT

EX = Namespace("http://ex.org/")


def test_make_iri_accepts_qudt_unit():
    iri = make_iri("http://qudt.org/vocab/unit/DEG_C")
    assert iri.value == "http://qudt.org/vocab/unit/DEG_C"


@pytest.mark.parametrize(
    "text, position",
    [
        ("no-scheme", 0),
        ("http://ex.org/a b", 15),
        ("http://ex.org/<a>", 14),
        ('http://ex.org/"', 14),
        ("http://ex.org/a{b}", 15),
        ("http://ex.org/a|b", 15),
        ("http://ex.org/a^b", 15),
        ("http://ex.org/a`b", 15),
        ("http://ex.org/a\\b", 15),
        (":nothing-before-colon", 0),
        ("9http://x", 0),
    ],
)
def test_make_iri_rejects(text, position):
    with pytest.raises(InvalidIri) as err:
        make_iri(text)
    assert err.value.position == position


def test_make_literal_keeps_lexical_verbatim():
    lit = make_literal("4.6", XSD_FLOAT)
    assert lit.lexical == "4.6" and lit.datatype == XSD_FLOAT
    assert make_literal("4.60", XSD_FLOAT) != lit


def test_empty_and_language_literals():
    assert make_literal("").lexical == ""
    hei = make_literal("hei", lang="no")
    assert hei.lang == "no" and hei.datatype is None


def test_literal_with_datatype_and_lang_conflicts():
    with pytest.raises(ConflictingQualifiers):
        make_literal("x", XSD_FLOAT, "en")


def test_blank_node_labels():
    assert BlankNode("b_1").label == "b_1"
    with pytest.raises(InvalidTerm):
        BlankNode("no-dash")
    a, b = bnode(), bnode()
    assert a != b and a.label.startswith("b")


@pytest.mark.parametrize(
    "s, p, o",
    [
        (Literal("x"), EX.p, EX.o),  # literal subject
        (EX.s, Literal("x"), EX.o),  # literal predicate
        (EX.s, BlankNode("b"), EX.o),  # blank predicate
        (EX.s, EX.p, "plain string"),  # not a term
    ],
)
def test_triple_position_constraints(s, p, o):
    with pytest.raises(InvalidTerm):
        Triple(s, p, o)


def test_bind_and_expand():
    m = bind(NamespaceMap(), "unit", IRI("http://qudt.org/vocab/unit/"))
    assert len(m) == 1
    assert expand(m, "unit:DEG_C") == IRI("http://qudt.org/vocab/unit/DEG_C")


def test_bind_is_last_write_wins_and_does_not_mutate():
    m0 = NamespaceMap()
    m1 = bind(m0, "unit", IRI("http://x.org/"))
    m2 = bind(m1, "unit", IRI("http://y.org/"))
    assert m2["unit"] == IRI("http://y.org/")
    assert m1["unit"] == IRI("http://x.org/")
    assert len(m0) == 0


def test_bind_rejects_bad_prefix():
    with pytest.raises(BadPrefix):
        bind(NamespaceMap(), "9bad", IRI("http://x.org/"))


def test_expand_unbound_and_default_prefix():
    m = bind(NamespaceMap(), "", IRI("http://base.org/"))
    with pytest.raises(UnboundPrefix):
        expand(m, "nope:x")
    assert expand(m, ":x") == IRI("http://base.org/x")


def test_expand_to_invalid_iri():
    m = NamespaceMap({"ex": "http://ex.org/"})
    with pytest.raises(InvalidIri):
        expand(m, "ex:a b")


def _t(n):
    return Triple(EX[f"s{n}"], EX.p, Literal(str(n)))


def test_graph_add_is_idempotent_and_pure():
    t = _t(1)
    empty = Graph()
    g = graph_add(empty, t)
    assert list(g) == [t]
    assert len(empty) == 0
    assert graph_add(g, t) == g and len(graph_add(g, t)) == 1


def test_graph_add_golden_triples_in_any_order(golden):
    ts = list(golden)
    for order in (ts, ts[::-1], ts[3:] + ts[:3]):
        g = Graph()
        for t in order:
            g = graph_add(g, t)
        assert len(g) == 8


def test_graph_union(golden):
    obs_part = Graph(t for t in golden if "obs/" in t.subject.value)
    res_part = Graph(t for t in golden if "res/" in t.subject.value)
    assert (len(obs_part), len(res_part)) == (5, 3)
    assert len(graph_union(obs_part, res_part)) == 8
    assert graph_union(obs_part, Graph()) == obs_part
    assert graph_union(obs_part, res_part) == graph_union(res_part, obs_part)
    assert obs_part + res_part == golden


def test_graph_match(golden):
    hits = graph_match(golden, None, RDF_TYPE, SOSA_OBSERVATION)
    assert len(hits) == 1
    assert graph_match(Graph(), None, None, None) == []
    every = graph_match(golden)
    assert len(every) == 8
    assert [t.n3() for t in every] == sorted(t.n3() for t in golden)


def test_graph_match_exact_triple_round_trip():
    t = Triple(EX.s, EX.p, Literal('a "quoted"\nvalue'))
    g = graph_add(Graph(), t)
    assert graph_match(g, t.subject, t.predicate, t.object) == [t]
    assert graph_match(g, t.subject, t.predicate, t.object)[0].object.lexical == 'a "quoted"\nvalue'


def test_graph_equal_ground(golden):
    assert graph_equal_ground(golden, golden)
    assert not graph_equal_ground(Graph(), Graph([_t(1)]))
    with pytest.raises(HasBlankNodes):
        graph_equal_ground(Graph([Triple(BlankNode("x"), EX.p, EX.o)]), Graph())


def test_graph_accepts_tuples():
    g = Graph([(EX.s, EX.p, EX.o)])
    assert (EX.s, EX.p, EX.o) in g


def test_namespace_compact_prefers_longest_base():
    m = NamespaceMap({"a": "http://ex.org/", "b": "http://ex.org/deep/"})
    assert m.compact(IRI("http://ex.org/deep/x")) == ("b", "x")
    assert m.compact(IRI("http://other.org/x")) is None

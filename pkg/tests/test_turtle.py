import random

import pytest

from harmonise import IRI, Literal
from harmonise.rdf import graph_equal_ground
from harmonise.serialize import to_ntriples_canonical, to_turtle
from harmonise.turtle import TurtleParseError, parse_turtle, tokenize
from harmonise.vocab import XSD_BOOLEAN, XSD_DECIMAL, XSD_DOUBLE, XSD_FLOAT, XSD_INTEGER

from conftest import DATA, FIXTURES, OBS
from graphgen import NS, random_graph
from oracle import rdflib_triples

EX = "@prefix ex: <http://ex.org/> .\n"


def kinds(text):
    return [(t.kind, t.value) for t in tokenize(text) if t.kind != "EOF"]


def test_single_triple():
    g, ns = parse_turtle("@prefix ex: <http://ex.org/> . ex:a ex:b ex:c .")
    assert len(g) == 1
    assert ns["ex"] == IRI("http://ex.org/")


def test_reference_listing_parses_to_eight_triples(golden):
    g, ns = parse_turtle((FIXTURES / "golden_sea_temperature.ttl").read_text(encoding="utf-8"))
    assert len(g) == 8
    assert sum(1 for t in g if t.subject == IRI(OBS + "sea_temperature_1234")) == 5
    assert graph_equal_ground(g, golden)
    assert len(ns) == 8


def test_blank_node_property_list_is_unsupported_at_bracket():
    text = "@prefix ex: <http://ex.org/> .\nex:a ex:b [ ex:c ex:d ] ."
    with pytest.raises(TurtleParseError) as err:
        parse_turtle(text)
    d = err.value.diagnostic
    assert d.kind == "unsupported-construct"
    assert (d.line, d.column) == (2, 11)


def test_keyword_a_token():
    assert ("A", "a") in kinds("<http://x.org/s> a <http://x.org/C> .")


def test_string_escape_decoded():
    assert kinds(r'"x\ny"') == [("STRING", "x\ny")]


def test_decimal_token_keeps_lexical():
    assert kinds("4.6") == [("DECIMAL", "4.6")]
    assert kinds("4.60 -3 1e5 .5") == [("DECIMAL", "4.60"), ("INTEGER", "-3"), ("DOUBLE", "1e5"), ("DECIMAL", ".5")]


def test_tokens_carry_positions():
    toks = list(tokenize('# c\n  ex:a "s" .'))
    assert [(t.line, t.column) for t in toks[:3]] == [(2, 3), (2, 8), (2, 12)]


def test_bare_literals_preserve_lexical_form():
    g, _ = parse_turtle(EX + "ex:s ex:p 4.60, 007, -1.5E3, true .")
    objs = {t.object for t in g}
    assert objs == {
        Literal("4.60", XSD_DECIMAL),
        Literal("007", XSD_INTEGER),
        Literal("-1.5E3", XSD_DOUBLE),
        Literal("true", XSD_BOOLEAN),
    }


def test_strings_escapes_and_qualifiers():
    text = EX + (
        'ex:s ex:p "\\u00e6\\U0001F30A", """multi\nline "quoted" """, "hei"@no, '
        '"4.6"^^ex:float, \'single\', "t\\tab"^^<http://www.w3.org/2001/XMLSchema#float> .'
    )
    objs = {t.object for t in parse_turtle(text)[0]}
    assert Literal("æ\U0001f30a") in objs
    assert Literal('multi\nline "quoted" ') in objs
    assert Literal("hei", lang="no") in objs
    assert Literal("4.6", IRI("http://ex.org/float")) in objs
    assert Literal("single") in objs
    assert Literal("t\tab", XSD_FLOAT) in objs


def test_predicate_and_object_lists():
    g, _ = parse_turtle(EX + "ex:s ex:p ex:o1, ex:o2; ex:q ex:o3;; .\nex:t a ex:C .")
    assert len(g) == 4


def test_sparql_style_prefix_and_blank_nodes():
    g, _ = parse_turtle("PREFIX ex: <http://ex.org/>\n_:b1 ex:p _:b2 .")
    (t,) = g
    assert t.subject.label == "b1" and t.object.label == "b2"


def test_bom_and_comments_are_ignored():
    g, _ = parse_turtle("\ufeff# leading comment\n" + EX + "ex:a ex:b ex:c . # trailing\n")
    assert len(g) == 1


def test_shipped_vocabulary_snapshot_parses():
    g, _ = parse_turtle((DATA / "qudt_units.ttl").read_text(encoding="utf-8"))
    assert len(g) > 0


# (text, kind, line, column); the offending character sits at line/column
MALFORMED = [
    ("ex:a ex:b ex:c .", "unbound-prefix", 1, 1),
    (EX + "ex:a ex:b nope:c .", "unbound-prefix", 2, 11),
    (EX + "ex:a ex:b ex:c", "syntax", 2, 15),
    (EX + "ex:a ex:b .", "syntax", 2, 11),
    (EX + 'ex:a ex:b "unterminated .', "bad-literal", 2, 11),
    (EX + "ex:a ex:b ex:c ;\n  ex:d ( ex:e ) .", "unsupported-construct", 3, 8),
    ("@base <http://ex.org/> .", "unsupported-construct", 1, 1),
    ("BASE <http://ex.org/>", "unsupported-construct", 1, 1),
    (EX + "ex:a ex:b <relative> .", "unsupported-construct", 2, 11),
    (EX + "ex:a ex:b <http://ex.org/a b> .", "syntax", 2, 27),
    (EX + 'ex:a ex:b "x"@en^^ex:dt .', "syntax", 2, 17),
    (EX + 'ex:a ex:b "x"@123 .', "bad-literal", 2, 14),
    (EX + "ex:a ex:b ex:c . $", "syntax", 2, 18),
    (EX + "\n\n   ex:a ex:b ex:c .}", "syntax", 4, 20),
    (EX + 'ex:a "lit" ex:c .', "syntax", 2, 6),
    (EX + '"lit" ex:b ex:c .', "syntax", 2, 1),
    (EX + 'ex:a ex:b "bad \\q escape" .', "bad-literal", 2, 16),
    (EX + "ex:a ex:b ex:c , .", "syntax", 2, 18),
    ("@prefix ex <http://ex.org/> .", "syntax", 1, 9),
]


@pytest.mark.parametrize("text, kind, line, column", MALFORMED)
def test_diagnostic_positions(text, kind, line, column):
    with pytest.raises(TurtleParseError) as err:
        parse_turtle(text)
    d = err.value.diagnostic
    assert (d.kind, d.line, d.column) == (kind, line, column), d.message
    # splitting the input at the reported position lands on a real character
    assert 1 <= d.column <= len(text.split("\n")[d.line - 1]) + 1


def test_round_trip_through_both_writers():
    rng = random.Random(5)
    for _ in range(100):
        g = random_graph(rng)
        assert graph_equal_ground(parse_turtle(to_turtle(g, NS))[0], g)
        assert graph_equal_ground(parse_turtle(to_ntriples_canonical(g))[0], g)


def test_reader_agrees_with_rdflib_on_vocabulary_snapshot():
    text = (DATA / "qudt_units.ttl").read_text(encoding="utf-8")
    assert set(parse_turtle(text)[0]) == rdflib_triples(text, "turtle")

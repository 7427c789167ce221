import json

import pytest

from harmonise import IRI, BlankNode, Literal
from harmonise.errors import MalformedResults
from harmonise.sparql_results import parse_sparql_results_csv, parse_sparql_results_json
from harmonise.vocab import XSD_FLOAT

from conftest import DATA

DEG_C = "http://qudt.org/vocab/unit/DEG_C"


def doc(vars_, bindings):
    return json.dumps({"head": {"vars": vars_}, "results": {"bindings": bindings}})


def test_json_one_unit_row():
    rs = parse_sparql_results_json(doc(
        ["unit", "label"],
        [{"unit": {"type": "uri", "value": DEG_C}, "label": {"type": "literal", "value": "degree Celsius"}}],
    ))
    assert rs.vars == ["unit", "label"]
    assert rs.rows == [{"unit": IRI(DEG_C), "label": Literal("degree Celsius")}]


def test_json_empty():
    rs = parse_sparql_results_json('{"head":{"vars":[]},"results":{"bindings":[]}}')
    assert rs.vars == [] and rs.rows == []


def test_json_term_types():
    rs = parse_sparql_results_json(doc(
        ["a", "b", "c", "d"],
        [{
            "a": {"type": "bnode", "value": "n1"},
            "b": {"type": "literal", "value": "4.6", "datatype": XSD_FLOAT.value},
            "c": {"type": "literal", "value": "hei", "xml:lang": "no"},
        }],
    ))
    (row,) = rs.rows
    assert row == {"a": BlankNode("n1"), "b": Literal("4.6", XSD_FLOAT), "c": Literal("hei", lang="no")}
    assert "d" not in row


def test_json_row_order_and_count_preserved():
    bindings = [{"x": {"type": "literal", "value": str(i)}} for i in range(50, 0, -1)]
    rs = parse_sparql_results_json(doc(["x"], bindings))
    assert [r["x"].lexical for r in rs.rows] == [str(i) for i in range(50, 0, -1)]


@pytest.mark.parametrize(
    "text, path",
    [
        (doc(["unit"], [{"unit": {"type": "uri", "value": "no-scheme"}}]), "$.results.bindings[0].unit.value"),
        (doc(["unit"], [{}, {}, {"unit": {"type": "iri", "value": DEG_C}}]), "$.results.bindings[2].unit.type"),
        (doc(["u"], [{"v": {"type": "literal", "value": "x"}}]), "$.results.bindings[0].v"),
        (doc(["u"], [{"u": {"type": "literal"}}]), "$.results.bindings[0].u.value"),
        (doc(["u"], [{"u": {"type": "literal", "value": "x", "datatype": XSD_FLOAT.value, "xml:lang": "en"}}]),
         "$.results.bindings[0].u"),
        ('{"head": {}, "results": {"bindings": []}}', "$.head.vars"),
        ('{"head": {"vars": []}}', "$.results"),
        ("[1, 2]", "$"),
        ("{not json", "$"),
    ],
)
def test_json_malformed_names_path(text, path):
    with pytest.raises(MalformedResults) as err:
        parse_sparql_results_json(text)
    assert err.value.path == path


def test_csv_one_row():
    rs = parse_sparql_results_csv("unit,label\nDEG_C,degree Celsius\n")
    assert rs.vars == ["unit", "label"]
    assert rs.rows == [{"unit": Literal("DEG_C"), "label": Literal("degree Celsius")}]


def test_csv_header_only_and_quoting():
    assert parse_sparql_results_csv("unit,label\n").rows == []
    rs = parse_sparql_results_csv('a,b\n"a,b",\r\n')
    assert rs.rows == [{"a": Literal("a,b")}]


def test_csv_quoted_newline_and_quote():
    rs = parse_sparql_results_csv('a\n"line1\nline2 ""q"""\n')
    assert rs.rows == [{"a": Literal('line1\nline2 "q"')}]


def test_csv_ragged_row_rejected():
    with pytest.raises(MalformedResults) as err:
        parse_sparql_results_csv("a,b\n1,2\n1,2,3\n")
    assert err.value.path == "row 3"


def test_shipped_fixtures_have_the_same_rows():
    js = parse_sparql_results_json((DATA / "qudt_units.srj").read_text(encoding="utf-8"))
    cs = parse_sparql_results_csv((DATA / "qudt_units.csv").read_text(encoding="utf-8"))
    assert len(js.rows) == 5
    assert {r["unit"].value for r in js.rows} == {r["unit"].lexical for r in cs.rows}

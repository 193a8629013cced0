import pytest

from smalg.corpus import build_corpus
from smalg.fileformat import (
    ParseError,
    document_from_algebra,
    parse_algebra_text,
    render_algebra,
)
from smalg.residuated import check_axioms


def test_roundtrip_on_corpus(corpus):
    for name, doc in corpus.items():
        text = render_algebra(doc)
        again = parse_algebra_text(text)
        assert again == doc
        assert render_algebra(again) == text


def test_bundled_files_match_builders(corpus):
    built = build_corpus()
    assert set(built) == set(corpus)
    for name in built:
        assert corpus[name] == built[name]


def test_bundled_two_element_is_mv(corpus):
    doc = corpus["luk_chain_1"]
    assert doc.size == 2
    assert len(doc.signature.symbols) == 6
    assert check_axioms(doc.to_algebra(), "MV").ok


def test_bundled_tau_identity_is_faithful(corpus):
    sma = corpus["luk2_id"].to_state_morphism()
    assert sma is not None
    assert sma.is_faithful()


def test_whitespace_and_comments_tolerated():
    text = """
# a comment
algebra tiny

size 2
signature ∧/2 ∨/2 ⊙/2 →/2 0/0 1/0
table ∧
0 0
0 1
table ∨
0 1
1 1
table ⊙
0 0
0 1
table →
1 1
0 1
table 0
0
table 1
1
"""
    doc = parse_algebra_text(text)
    assert doc.name == "tiny"
    assert doc.size == 2


def _tiny(body_extra="", entry="0"):
    return f"""algebra t
size 3
signature f/2
table f
0 0 0
0 {entry} 0
0 0 0
{body_extra}"""


def test_entry_out_of_range_reports_location():
    with pytest.raises(ParseError) as err:
        parse_algebra_text(_tiny(entry="5"))
    assert "out of range" in str(err.value)
    assert err.value.line == 6


def test_duplicate_symbol_rejected():
    with pytest.raises(ParseError):
        parse_algebra_text("algebra t\nsize 2\nsignature f/1 f/2\n")


def test_missing_table_rejected():
    with pytest.raises(ParseError) as err:
        parse_algebra_text("algebra t\nsize 2\nsignature f/1\n")
    assert "missing tables" in str(err.value)


def test_wrong_row_width_rejected():
    text = "algebra t\nsize 2\nsignature f/1\ntable f\n0 1 0\n"
    with pytest.raises(ParseError):
        parse_algebra_text(text)


def test_bad_tau_length_rejected():
    with pytest.raises(ParseError) as err:
        parse_algebra_text(_tiny(body_extra="tau 0 1"))
    assert "tau row" in str(err.value)


def test_unknown_directive_rejected():
    with pytest.raises(ParseError):
        parse_algebra_text(_tiny(body_extra="frobnicate 1"))


def test_unknown_table_symbol_rejected():
    text = "algebra t\nsize 2\nsignature f/1\ntable g\n0 1\n"
    with pytest.raises(ParseError):
        parse_algebra_text(text)


def test_missing_header_rejected():
    with pytest.raises(ParseError):
        parse_algebra_text("size 2\n")


def test_bad_class_rejected():
    with pytest.raises(ParseError):
        parse_algebra_text(_tiny(body_extra="class NOPE"))


def test_names_row_roundtrip(corpus):
    doc = corpus["luk_chain_2"]
    assert doc.element_names == ("0", "1/2", "1")
    assert parse_algebra_text(render_algebra(doc)).element_names == ("0", "1/2", "1")


def test_invalid_tau_parses_but_fails_verification(two):
    doc = document_from_algebra(two, tau=(0, 0), name="bad")
    text = render_algebra(doc)
    parsed = parse_algebra_text(text)
    assert parsed.tau == (0, 0)
    with pytest.raises(Exception):
        parsed.to_state_morphism()

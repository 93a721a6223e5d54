"""Tests for the constraint DSL parser and renderer."""

import pytest

from core import (
    Difference,
    Exclusion,
    Inclusion,
    ParseError,
    SCPInstance,
    load_scp,
    parse_scp,
    render_scp
)


class TestParseScp:
    """parse_scp on well-formed documents"""

    def test_worked_example(self, worked_instance):
        """Declarations keep source order and set-valued lines expand in listed order."""
        assert worked_instance.universe == ('a', 'b', 'c', 'd', 'e', 'f', 'g')
        assert worked_instance.sets == ('X', 'Y', 'Z')
        assert worked_instance.constraints == (
            Difference('a', 'X', 'Y'),
            Difference('d', 'X', 'Y'),
            Difference('d', 'X', 'Z'),
            Difference('b', 'Y', 'X'),
            Difference('f', 'Y', 'X'),
            Difference('b', 'Z', 'X'),
            Difference('a', 'Z', 'Y'),
            Exclusion('c', 'X'),
            Inclusion('e', 'Z'),
        )

    def test_no_constraints(self):
        """A document with only headers has an empty constraint list."""
        instance = parse_scp("universe: a\nsets: X\n")
        assert instance == SCPInstance(('a',), ('X',), ())

    def test_empty_braces_expand_to_nothing(self):
        instance = parse_scp("universe: a b\nsets: X Y\nX \\ Y = {}\n")
        assert instance.constraints == ()

    def test_comments_and_whitespace(self):
        """Comments and blank lines are ignored, spacing around tokens is free."""
        source = (
            "# leading comment\n"
            "\n"
            "universe:a   b # trailing\n"
            "   sets: X Y\n"
            "X\\Y={a,b}\n"
            "a !in Y   # another\n"
        )
        instance = parse_scp(source)
        assert instance.constraints == (
            Difference('a', 'X', 'Y'),
            Difference('b', 'X', 'Y'),
            Exclusion('a', 'Y'),
        )

    def test_in_is_a_valid_element_name_position(self):
        """'in' is only a keyword in operator position."""
        instance = parse_scp("universe: x\nsets: S\nx in S\n")
        assert instance.constraints == (Inclusion('x', 'S'),)

    def test_load_scp(self, data_dir, worked_instance):
        assert load_scp(data_dir / 'worked_example.scp') == worked_instance

    def test_load_scp_missing_file(self, tmp_path):
        with pytest.raises(OSError):
            load_scp(tmp_path / 'missing.scp')

    def test_load_scp_invalid_utf8(self, tmp_path):
        path = tmp_path / 'latin1.scp'
        path.write_bytes(b"universe: a b\nsets: X\nb in X\nca\xe9 in X\n")
        with pytest.raises(ParseError) as excinfo:
            load_scp(path)
        assert (excinfo.value.line, excinfo.value.column) == (4, 3)
        assert "0xe9" in str(excinfo.value)


class TestParseErrors:
    """Every malformed document is a ParseError with a position"""

    @pytest.mark.parametrize("source, line, fragment", [
        ("universe: a\nsets: X\na in Q\n", 3, "unknown set 'Q'"),
        ("universe: a\nsets: X\nq in X\n", 3, "unknown element 'q'"),
        ("universe: a\nsets: X Y\nX \\ X = {a}\n", 3, "self-difference"),
        ("universe: a a\nsets: X\n", 1, "duplicate element 'a'"),
        ("universe: a\nsets: X X\n", 2, "duplicate set 'X'"),
        ("universe: a\nsets: a\n", 2, "both an element and a set"),
        ("universe: a\nuniverse: b\nsets: X\n", 2, "duplicate 'universe:'"),
        ("sets: X\nuniverse: a\n", 1, "must come after 'universe:'"),
        ("universe: a\nsets: X\nelements: b\n", 3, "unknown header"),
        ("universe:\nsets: X\n", 1, "declaration list is empty"),
        ("universe: a\na in X\nsets: X\n", 2, "before the 'sets:' header"),
        ("universe: a\nsets: X\na X\n", 3, "expected 'in', '!in'"),
        ("universe: a b\nsets: X Y\nX \\ Y = {a b}\n", 3, "expected ',' or '}'"),
        ("universe: a\nsets: X\na in X Y\n", 3, "unexpected"),
        ("universe: a\nsets: X\na in X;\n", 3, "unexpected character"),
    ])
    def test_rejected(self, source, line, fragment):
        with pytest.raises(ParseError) as excinfo:
            parse_scp(source)
        assert excinfo.value.line == line
        assert excinfo.value.column >= 1
        assert fragment in excinfo.value.message

    def test_unknown_set_column(self):
        """The column points at the offending identifier."""
        with pytest.raises(ParseError) as excinfo:
            parse_scp("universe: a\nsets: X\na in Q\n")
        assert excinfo.value.column == 6

    @pytest.mark.parametrize("source, header", [
        ("# comment only\n", "universe"),
        ("universe: a\n", "sets"),
        ("", "universe"),
    ])
    def test_missing_header(self, source, header):
        """Missing headers are reported just past the end of the document."""
        with pytest.raises(ParseError) as excinfo:
            parse_scp(source)
        assert f"missing '{header}:'" in excinfo.value.message
        assert excinfo.value.line == len(source.splitlines()) + 1

    def test_parse_error_is_value_error(self):
        with pytest.raises(ValueError):
            parse_scp("universe: a\nsets: X\na in\n")


class TestRenderScp:
    """render_scp produces text that re-parses to the same instance"""

    def test_round_trip(self, worked_instance):
        assert parse_scp(render_scp(worked_instance)) == worked_instance

    def test_groups_consecutive_differences(self, worked_instance):
        text = render_scp(worked_instance)
        assert "X \\ Y = {a, d}" in text.splitlines()
        assert "Y \\ X = {b, f}" in text.splitlines()

    def test_non_consecutive_differences_stay_separate(self):
        instance = SCPInstance(('a', 'b'), ('X', 'Y'), (
            Difference('a', 'X', 'Y'),
            Inclusion('b', 'Y'),
            Difference('b', 'X', 'Y'),
        ))
        text = render_scp(instance)
        assert text.count("X \\ Y") == 2
        assert parse_scp(text) == instance

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lnnroute import (
    Circuit,
    Gate,
    GateKind,
    Line,
    ParseError,
    load_real,
    parse_real,
    write_real,
)
from lnnroute.revlib import parse_real_document

from conftest import BAD, REVLIB, random_nct_circuit


class TestParse:
    def test_basic_gates(self):
        c = parse_real(".numvars 3\n.variables a b c\n.begin\nt3 a b c\nt1 a\n.end\n")
        assert c.num_lines == 3
        assert c.gates == (Gate.ccx(0, 1, 2), Gate.x(0))

    def test_variables_resolve_in_declaration_order(self):
        c = parse_real(".numvars 3\n.variables top mid bot\n.begin\nt2 bot top\n.end\n")
        assert c.gates == (Gate.cx(2, 0),)

    def test_swap_mnemonic(self):
        c = parse_real(".numvars 2\n.variables a b\n.begin\nf2 b a\n.end\n")
        assert c.gates[0].kind is GateKind.SWAP

    def test_wide_mct(self):
        c = parse_real(".numvars 5\n.variables a b c d e\n.begin\nt5 a b c d e\n.end\n")
        assert c.gates[0] == Gate.mcx([0, 1, 2, 3], 4)

    def test_comments_and_blanks_skipped(self):
        text = "# header\n\n.numvars 2\n.variables a b\n# mid\n.begin\nt1 a # trailing\n.end\n"
        assert len(parse_real(text).gates) == 1

    def test_header_metadata(self):
        header, circuit = parse_real_document(
            ".version 2.0\n.numvars 2\n.variables a b\n.inputs \"x 1\" y\n"
            ".outputs p q\n.constants 0-\n.garbage -1\n.begin\n.end\n"
        )
        assert header.version == "2.0"
        assert header.inputs == ("x 1", "y")
        assert circuit.lines == (Line("a", constant=0), Line("b", garbage=True))

    def test_missing_constants_default_to_none(self):
        c = parse_real(".numvars 2\n.variables a b\n.begin\n.end\n")
        assert all(ln.constant is None and not ln.garbage for ln in c.lines)

    def test_headerless_variables_synthesized(self):
        c = parse_real(".numvars 2\n.begin\nt2 x0 x1\n.end\n")
        assert c.gates == (Gate.cx(0, 1),)

    def test_pinned_fixture_shape(self):
        c = load_real(REVLIB / "3_17_13.real")
        assert c.num_lines == 3
        assert len(c.gates) == 6


class TestParseErrors:
    @pytest.mark.parametrize("name,needle", [
        ("negative_control.real", "negative"),
        ("fredkin3.real", "f2"),
        ("repeated_line.real", "twice"),
        ("missing_numvars.real", "numvars"),
        ("gate_before_begin.real", "before .begin"),
        ("unknown_mnemonic.real", "mnemonic"),
        ("undeclared_variable.real", "undeclared"),
    ])
    def test_bad_fixture(self, name, needle):
        with pytest.raises(ParseError, match=needle):
            load_real(BAD / name)

    def test_errors_carry_line_numbers(self):
        with pytest.raises(ParseError) as err:
            parse_real(".numvars 2\n.variables a b\n.begin\nt2 a a\n.end\n")
        assert err.value.line_number == 4
        assert "line 4" in str(err.value)

    def test_arity_mismatch(self):
        with pytest.raises(ParseError, match="3 lines"):
            parse_real(".numvars 3\n.variables a b c\n.begin\nt3 a b\n.end\n")

    def test_unknown_directive(self):
        with pytest.raises(ParseError, match="directive"):
            parse_real(".numvars 2\n.module m\n.begin\n.end\n")

    def test_constants_length_checked(self):
        with pytest.raises(ParseError, match="constants"):
            parse_real(".numvars 3\n.constants 0-\n.begin\n.end\n")

    def test_variable_count_checked(self):
        with pytest.raises(ParseError, match="variables"):
            parse_real(".numvars 3\n.variables a b\n.begin\n.end\n")

    def test_missing_end(self):
        with pytest.raises(ParseError, match="missing .end"):
            parse_real(".numvars 1\n.variables a\n.begin\nt1 a\n")

    def test_end_before_begin(self):
        with pytest.raises(ParseError, match=".end before"):
            parse_real(".numvars 1\n.end\n")

    def test_content_after_end(self):
        with pytest.raises(ParseError, match="after .end"):
            parse_real(".numvars 1\n.variables a\n.begin\n.end\nt1 a\n")

    def test_duplicate_numvars(self):
        with pytest.raises(ParseError, match="duplicate"):
            parse_real(".numvars 2\n.numvars 2\n.begin\n.end\n")

    @given(st.text(max_size=400))
    @settings(max_examples=300, deadline=None)
    def test_arbitrary_text_never_crashes(self, text):
        # totality: any input either parses or raises a located ParseError
        try:
            parse_real(text)
        except ParseError as err:
            assert err.line_number >= 1


class TestWrite:
    def test_round_trip_fixtures(self):
        for path in sorted(REVLIB.glob("*.real")):
            c = load_real(path)
            assert parse_real(write_real(c)) == c

    def test_round_trip_random_circuits(self):
        rng = random.Random(41)
        for _ in range(150):
            n = rng.randint(1, 9)
            c = random_nct_circuit(rng, n, rng.randint(0, 12), allow_swap=True)
            if rng.random() < 0.3:
                lines = tuple(
                    Line(f"v{i}", constant=rng.choice([None, 0, 1]), garbage=rng.random() < 0.2)
                    for i in range(n)
                )
                c = Circuit(n, c.gates, lines)
            assert parse_real(write_real(c)) == c

    def test_empty_circuit_document(self):
        doc = write_real(Circuit(1))
        assert ".numvars 1" in doc
        assert parse_real(doc) == Circuit(1)

    def test_swap_written_as_f2(self):
        doc = write_real(Circuit(2, (Gate.swap(0, 1),)))
        assert "f2 x0 x1" in doc

    def test_unwritable_name_rejected(self):
        with pytest.raises(ValueError, match="cannot be written"):
            write_real(Circuit(1, (), (Line("two words"),)))

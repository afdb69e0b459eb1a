import json

import pytest

from twistedhom import AbelianGroupStructure, goeritz_e2
from twistedhom.cli import (
    InputFormatError,
    JobSpec,
    example_to_text,
    main,
    parse_input_file,
    render_text,
    run,
)

E2_TEXT = example_to_text(goeritz_e2())

SMALL = """\
generators: a
relator: a a
ring: Z
rank: 1
action a: [-1]
"""


class TestParseInputFile:
    def test_e2_round_trip_objects(self):
        parsed = parse_input_file(E2_TEXT)
        ex = goeritz_e2()
        assert parsed.presentation == ex.presentation
        assert parsed.representation == ex.representation

    def test_dimension_mismatch_names_line(self):
        text = SMALL.replace("action a: [-1]", "action a: [-1 0; 0 1; 1 1]")
        with pytest.raises(InputFormatError) as err:
            parse_input_file(text)
        assert "3x2" in str(err.value) and err.value.line == 5

    def test_undeclared_generator_in_relator(self):
        text = SMALL.replace("relator: a a", "relator: a q")
        with pytest.raises(InputFormatError, match="unknown generator 'q'"):
            parse_input_file(text)

    def test_non_invertible_action(self):
        with pytest.raises(InputFormatError, match="not invertible"):
            parse_input_file(SMALL.replace("[-1]", "[2]"))

    def test_relation_lines(self):
        text = "generators: a b\nrelation: a b = b a\nring: Z\nrank: 1\naction a: [1]\naction b: [1]\n"
        parsed = parse_input_file(text)
        assert len(parsed.presentation.relators) == 1
        assert len(parsed.presentation.relators[0]) == 4

    def test_unknown_key(self):
        with pytest.raises(InputFormatError, match="unknown key"):
            parse_input_file(SMALL + "colour: red\n")

    def test_missing_rank(self):
        text = "generators: a\naction a: [1]\n"
        with pytest.raises(InputFormatError, match="rank"):
            parse_input_file(text)

    def test_missing_action(self):
        text = "generators: a b\nring: Z\nrank: 1\naction a: [1]\n"
        with pytest.raises(InputFormatError, match="missing action"):
            parse_input_file(text)

    def test_expect_lines(self):
        parsed = parse_input_file(SMALL + "expect coh1[Z]: Z/2\nexpect h0: Z/2\n")
        assert parsed.expected["coh1[Z]"] == AbelianGroupStructure(0, (2,))
        assert parsed.expected["h0"] == AbelianGroupStructure(0, (2,))

    def test_comments_and_blank_lines(self):
        parse_input_file("# comment\n\n" + SMALL)


def record_by_name(records, name):
    matches = [r for r in records if r["name"] == name]
    assert len(matches) == 1, name
    return matches[0]


class TestRun:
    def test_e2_h1_over_z(self):
        status, records = run(JobSpec(example="e2", computations=("h1",)))
        assert status == 0
        record = record_by_name(records, "h1")
        assert record["structure"] == "Z/2 + Z/2"
        assert record["match"] is True
        assert "H_1 = Z/2 + Z/2" in render_text(records)

    def test_e2_mod2_coh1_and_oracle_agree(self):
        from twistedhom import CoefficientRing

        status, records = run(
            JobSpec(example="e2", ring=CoefficientRing(2), computations=("coh1", "oracle"))
        )
        assert status == 0
        coh1 = record_by_name(records, "coh1")
        oracle = record_by_name(records, "oracle")
        order = 2 ** len(coh1["torsion"]) if coh1["free_rank"] == 0 else None
        assert order == 4 and oracle["h1_count"] == 4

    def test_e2_mod5_coh1_trivial(self):
        from twistedhom import CoefficientRing

        status, records = run(JobSpec(example="e2", ring=CoefficientRing(5), computations=("coh1",)))
        assert status == 0
        assert record_by_name(records, "coh1")["structure"] == "0"

    def test_expected_mismatch_fails_with_named_stage(self, tmp_path):
        path = tmp_path / "bad.grp"
        path.write_text(E2_TEXT.replace("expect h1[Z]: Z/2 + Z/2", "expect h1[Z]: Z/4"))
        status, records = run(JobSpec(path=str(path), computations=("h1",)))
        assert status == 1
        summary = record_by_name(records, "summary")
        assert summary["failed_stages"] == ["h1"]
        assert "MISMATCH" in render_text(records)

    def test_failing_kerf_precondition_named_without_losing_coh1(self, tmp_path):
        path = tmp_path / "badkerf.grp"
        path.write_text(SMALL + "kerf: [0]\n")
        status, records = run(JobSpec(path=str(path), computations=("coh1",)))
        assert status == 1
        assert record_by_name(records, "coh1")["structure"] == "Z/2"
        assert "not invertible" in record_by_name(records, "coh1-kerf")["error"]
        assert record_by_name(records, "summary")["failed_stages"] == ["coh1-kerf"]

    def test_check_stage_flags_bad_action(self, tmp_path):
        path = tmp_path / "bad.grp"
        # Order-4 action with an order-2 relator: parses fine, fails check.
        path.write_text(
            "generators: a\nrelator: a a\nring: Z\nrank: 2\naction a: [0 -1; 1 0]\n"
        )
        status, records = run(JobSpec(path=str(path), computations=("check",)))
        assert status == 1
        assert record_by_name(records, "check")["passed"] is False

    def test_uct_needs_integral_data(self, tmp_path):
        path = tmp_path / "mod2.grp"
        path.write_text(SMALL.replace("ring: Z", "ring: Z/2"))
        status, records = run(JobSpec(path=str(path), computations=("uct",)))
        assert status == 1
        assert "over Z" in record_by_name(records, "uct")["error"]

    def test_uct_and_full_pipeline(self):
        status, records = run(
            JobSpec(example="e2", computations=("check", "h0", "coh1", "h1", "uct", "oracle"))
        )
        assert status == 0
        assert record_by_name(records, "uct")["all_match"] is True

    def test_computation_order_normalized(self):
        _, records = run(JobSpec(example="e2", computations=("h1", "check", "h0")))
        names = [r["name"] for r in records if r["name"] != "summary"]
        assert names == ["check", "h0", "h1"]

    def test_requires_a_computation(self):
        with pytest.raises(ValueError):
            run(JobSpec(example="e2", computations=()))

    def test_requires_exactly_one_source(self):
        with pytest.raises(ValueError):
            run(JobSpec())
        with pytest.raises(ValueError):
            run(JobSpec(path="x", example="e2"))

    def test_unknown_example(self):
        with pytest.raises(ValueError, match="unknown example"):
            run(JobSpec(example="nope"))

    def test_text_and_structured_numeric_agreement(self):
        _, records = run(JobSpec(example="e2", computations=("h0", "coh1", "h1", "oracle")))
        text = render_text(records)
        for record in records:
            if record["name"] in ("h0", "coh1", "h1"):
                assert record["structure"] in text
            if record["name"] == "oracle":
                assert f"z1={record['z1_count']}" in text


class TestMain:
    def test_text_output(self, capsys):
        assert main(["--example", "e2", "--compute", "h1"]) == 0
        out = capsys.readouterr().out
        assert "H_1 = Z/2 + Z/2" in out

    def test_structured_output(self, capsys):
        assert main(["--example", "e2", "--compute", "h1", "--format", "structured"]) == 0
        lines = [json.loads(line) for line in capsys.readouterr().out.splitlines()]
        record = [r for r in lines if r.get("name") == "h1"][0]
        assert record["free_rank"] == 0 and record["torsion"] == [2, 2]

    def test_check_flag(self, capsys):
        assert main(["--example", "e2", "--check"]) == 0
        assert "check: ok" in capsys.readouterr().out

    def test_ring_flag(self, capsys):
        assert main(["--example", "e2", "--ring", "Z/5", "--compute", "coh1"]) == 0
        assert "H^1 = 0" in capsys.readouterr().out

    def test_parse_error_exit_2(self, tmp_path, capsys):
        path = tmp_path / "broken.grp"
        path.write_text("generators: a\nrank: one\n")
        assert main([str(path)]) == 2
        assert "line 2" in capsys.readouterr().err

    def test_missing_file_exit_2(self, capsys):
        assert main(["/nonexistent/file.grp"]) == 2

    def test_unknown_compute_exit_2(self, capsys):
        assert main(["--example", "e2", "--compute", "zeta"]) == 2

    def test_shipped_e2_file(self, capsys):
        import pathlib

        path = pathlib.Path(__file__).resolve().parent.parent / "demos" / "e2.grp"
        assert main([str(path), "--compute", "check,h0,coh1,h1"]) == 0
        out = capsys.readouterr().out
        assert "H_1 = Z/2 + Z/2" in out

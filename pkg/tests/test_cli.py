"""End-to-end tests for the command-line surface.

Every invocation goes through ``stratikit.cli.main(argv)`` in-process; stdout
is captured and parsed back as JSON, so these tests pin both the exit-code
contract and the report shape.
"""

import contextlib
import io
import json

import pytest

from stratikit import cli, config


def run_cli(argv, stdin_text=None):
    """Invoke main(argv); returns (exit_code, parsed stdout or None, stderr)."""
    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        if stdin_text is None:
            code = cli.main(argv)
        else:
            old = cli.sys.stdin
            cli.sys.stdin = io.StringIO(stdin_text)
            try:
                code = cli.main(argv)
            finally:
                cli.sys.stdin = old
    text = out.getvalue()
    return code, json.loads(text) if text else None, err.getvalue()


# -- info ---------------------------------------------------------------------


def test_info_reports_invariants():
    code, report, _ = run_cli(["info", "example:cent-3-1"])
    assert code == 0
    assert report["schema"] == 1
    assert report["command"] == "info"
    assert report["input"] == "cent-3-1"
    assert report["dimension"] == 6
    assert report["vertices"] == 2
    assert report["cartan"] == [[1, 1], [1, 3]]
    assert report["radical_layers"] == [2, 3, 1]
    assert report["gorenstein"] == ["2", "2"]
    assert report["dominant"] == "2"
    assert report["flags"]["gendo_symmetric"] is True
    assert report["flags"]["minimal_auslander_gorenstein"] is True


def test_info_on_schur_family_flag_form():
    code, report, _ = run_cli(["info", "family:schur", "--m", "2"])
    assert code == 0
    assert report["input"] == "schur-A2"
    assert report["dimension"] == 5
    assert report["global_dimension"] == "2"
    assert report["dominant"] == "2"


# -- stratify / tilting / ringel-dual ------------------------------------------


def test_stratify_uses_record_order_and_honors_override():
    code, report, _ = run_cli(["stratify", "example:cent-2-1"])
    assert code == 0
    assert report["order"] == [1, 0]
    assert report["properly_stratified"] is True
    assert report["standard_dims"] == [1, 2]
    assert report["proper_standard_dims"] == [1, 2]
    assert report["costandard_dims"] == [1, 2]

    code, report, _ = run_cli(["stratify", "example:cent-2-1", "--order", "0,1"])
    assert code == 0
    assert report["order"] == [0, 1]
    assert report["standardly_stratified"] is False
    assert report["certificate"]["right"]["verdict"] is False


def test_tilting_report_with_gorenstein_cross_check():
    code, report, _ = run_cli(["tilting", "example:gigs-kxy"])
    assert code == 0
    assert report["order"] == [3, 2, 1, 0]
    assert report["tilting_dims"] == [1, 5, 3, 11]
    assert report["cotilting_dims"] == [1, 5, 3, 11]
    assert report["pd_tilting"] == "2"
    assert report["tilting_equals_cotilting"] is True
    assert report["gorenstein"] == ["4", "4"]
    assert report["gorenstein_cross_check"] is True


def test_ringel_dual_serializes_a_loadable_algebra():
    code, report, _ = run_cli(["ringel-dual", "example:cent-3-1"])
    assert code == 0
    assert report["dimension"] == 9
    assert report["invariant_isomorphic_to_input"] is False

    from stratikit.families import catalogue_example
    from stratikit.io import load_algebra
    from stratikit.verify import invariant_isomorphic

    reloaded = load_algebra(report["dual"])
    assert reloaded["algebra"].dim == 9
    same, _ = invariant_isomorphic(
        reloaded["algebra"], catalogue_example("cent-3-2")["algebra"], 12
    )
    assert same is True


def test_ringel_dual_detects_self_duality():
    code, report, _ = run_cli(["ringel-dual", "example:cent-4-13"])
    assert code == 0
    assert report["invariant_isomorphic_to_input"] is True


# -- verify ---------------------------------------------------------------------


def test_verify_main_equivalence_with_all_statements_false():
    code, report, _ = run_cli(["verify", "MAIN", "example:rad-square-zero-2v"])
    assert code == 0
    assert report["verdict"] == "pass"
    values = {s["name"]: s.get("value") for s in report["steps"]}
    assert values["statement 1: Gorenstein"] is False
    assert values["statement 2: tilting = cotilting"] is False
    assert values["statement 3: tilting is costandardly filtered"] is False


def test_verify_accepts_lowercase_and_hyphens():
    code, report, _ = run_cli(["verify", "self-dual-cent", "example:cent-2-1"])
    assert code == 0
    assert report["property"] == "SELF_DUAL_CENT"
    assert report["verdict"] == "pass"


def test_verify_reads_family_records_from_stdin():
    code, record, _ = run_cli(["family", "cent", "--n", "3", "--parts", "1"])
    assert code == 0
    code, report, _ = run_cli(
        ["verify", "RINGEL_GIGS"], stdin_text=json.dumps(record)
    )
    assert code == 0
    assert report["verdict"] == "pass"
    assert report["input"] == "cent-3-1"
    steps = {s["name"]: s["value"] for s in report["steps"]}
    assert steps["Ringel dual dimension"] == 9
    assert steps["syzygy-partner dimension"] == 9


def test_verify_exit_codes_cover_all_verdicts(monkeypatch):
    # hypothesis-not-met is a successful run of the checker
    code, report, _ = run_cli(["verify", "MAZOV", "example:brauer-B2"])
    assert code == 0
    assert report["verdict"] == "hypothesis-not-met"

    # undecided at the cutoff exits 3
    code, report, _ = run_cli(["verify", "DOMDIM_T", "example:brauer-B1"])
    assert code == 3
    assert report["verdict"] == "inconclusive"

    # a failed property exits 1 (no catalogue input fails, so stub one)
    monkeypatch.setattr(
        cli, "verify_property", lambda *a, **kw: {"verdict": "fail"}
    )
    code, report, _ = run_cli(["verify", "MAIN", "example:cent-2-1"])
    assert code == 1
    assert report["verdict"] == "fail"


def test_usage_and_input_errors_exit_2():
    code, report, err = run_cli(["verify", "NO_SUCH_PROPERTY", "example:cent-2-1"])
    assert code == 2 and report is None and "error:" in err

    code, report, err = run_cli(["info", "/no/such/file.json"])
    assert code == 2 and report is None and "error:" in err

    code, report, err = run_cli(["family", "cent", "--n", "3"])
    assert code == 2 and report is None and "--parts" in err

    code, report, err = run_cli(["info", "-"], stdin_text='{"schema": 99}')
    assert code == 2 and report is None and "error:" in err

    code, report, err = run_cli(["info", "example:no-such-example"])
    assert code == 2 and report is None and "error:" in err


# -- family ---------------------------------------------------------------------


def test_family_record_round_trips_through_load():
    code, record, _ = run_cli(["family", "cent", "--n", "4", "--parts", "1,3"])
    assert code == 0
    assert record["id"] == "cent-4-13"
    assert record["construction"] == {"kind": "cent", "n": 4, "parts": [1, 3]}
    assert record["order"] == [2, 1, 0]
    assert len(record["basis"]) == 18

    from stratikit.io import load_algebra

    reloaded = load_algebra(record)
    assert reloaded["algebra"].dim == 18
    assert reloaded["order"] == (2, 1, 0)


def test_family_example_and_brauer_forms():
    code, record, _ = run_cli(["family", "example", "--id", "gigs-kxy"])
    assert code == 0
    assert len(record["basis"]) == 29

    code, record, _ = run_cli(["family", "brauer", "--n", "1"])
    assert code == 0
    assert record["id"] == "brauer-B1"
    assert len(record["basis"]) == 2


# -- suite ----------------------------------------------------------------------


def test_suite_filters_and_summary():
    code, report, _ = run_cli(
        ["suite", "--examples", "cent-3-1", "--properties", "main,ringel-gigs"]
    )
    assert code == 0
    assert [(r["property"], r["verdict"]) for r in report["results"]] == [
        ("MAIN", "pass"),
        ("RINGEL_GIGS", "pass"),
    ]
    assert report["summary"] == {
        "pass": 2, "fail": 0, "hypothesis-not-met": 0, "inconclusive": 0,
    }


def test_suite_exit_is_inconclusive_aware():
    code, report, _ = run_cli(
        ["suite", "--examples", "brauer-B1", "--properties", "domdim-t"]
    )
    assert code == 3
    assert report["summary"]["inconclusive"] == 1


# -- determinism, seeds, fields, output ------------------------------------------


def test_reports_are_byte_identical_across_runs():
    argv = ["suite", "--examples", "cent-2-1,rad-square-zero-2v"]
    out1, out2 = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out1):
        assert cli.main(argv) == 0
    with contextlib.redirect_stdout(out2):
        assert cli.main(argv) == 0
    assert out1.getvalue() == out2.getvalue()


def test_seed_flag_env_and_restoration(monkeypatch):
    code, report, _ = run_cli(["info", "example:cent-2-1", "--seed", "9"])
    assert code == 0 and report["seed"] == 9

    monkeypatch.setenv("STRATIKIT_SEED", "17")
    code, report, _ = run_cli(["info", "example:cent-2-1"])
    assert code == 0 and report["seed"] == 17

    # the flag wins over the environment
    code, report, _ = run_cli(["info", "example:cent-2-1", "--seed", "4"])
    assert code == 0 and report["seed"] == 4

    # the process-wide seed is restored afterwards
    assert config.get_seed() == 0


def test_field_selection_changes_nothing_but_the_field():
    verdicts = {}
    for token in ("Q", "F101", "32003"):
        code, report, _ = run_cli(
            ["verify", "MAIN", "example:cent-3-1", "--field", token]
        )
        assert code == 0
        verdicts[token] = report["verdict"]
    assert set(verdicts.values()) == {"pass"}

    code, report, _ = run_cli(["info", "example:cent-2-1", "--field", "Q"])
    assert report["field"] == "Q" and report["dimension"] == 5
    code, report, _ = run_cli(["info", "example:cent-2-1", "--field", "F101"])
    assert report["field"] == {"p": 101}


def test_output_flag_writes_the_report_to_a_file(tmp_path):
    path = tmp_path / "report.json"
    out = io.StringIO()
    with contextlib.redirect_stdout(out):
        code = cli.main(["info", "example:cent-2-1", "--output", str(path)])
    assert code == 0
    assert out.getvalue() == ""
    report = json.loads(path.read_text())
    assert report["dimension"] == 5


def test_witness_detail_is_opt_in():
    def keys_anywhere(value):
        if isinstance(value, dict):
            yield from value
            for v in value.values():
                yield from keys_anywhere(v)
        elif isinstance(value, list):
            for v in value:
                yield from keys_anywhere(v)

    code, report, _ = run_cli(["ringel-dual", "example:cent-3-1"])
    assert code == 0
    assert "detail" not in set(keys_anywhere(report))

    code, report, _ = run_cli(["ringel-dual", "example:cent-3-1", "--witnesses"])
    assert code == 0
    assert "detail" in set(keys_anywhere(report))

"""End-to-end runs of the command-line interface, in process."""
from __future__ import annotations

import json
import shutil

from dpdelta import catalog_root, load as load_config, same_decomposition
from dpdelta.cli import main
from dpdelta.zariski import decomposition_from_json, parametric_decompose

DECOMPOSE_TEXT = """\
A1-nodal: anti_k - v*E, tau = 1
  [0, 1/2]  N = {empty}
      P^2 = 1 - 2*v^2, P.E = 2*v
  [1/2, 1]  N = {C: -1 + 2*v}
      P^2 = 2 - 4*v + 2*v^2, P.E = 2 - 2*v
"""


class TestDecompose:
    def test_text_output(self, capsys):
        assert main(["decompose", "--case", "A1-nodal", "--flag", "E"]) == 0
        assert capsys.readouterr().out == DECOMPOSE_TEXT

    def test_json_output_round_trips(self, capsys, a1_nodal):
        assert main(["decompose", "--case", "A1-nodal", "--flag", "E", "--json"]) == 0
        data = json.loads(capsys.readouterr().out)
        back = decomposition_from_json(a1_nodal, data)
        assert same_decomposition(back, parametric_decompose(a1_nodal, "E"))

    def test_variant_selects_configuration(self, capsys):
        rc = main(
            ["decompose", "--case", "A2-nodal", "--variant", "blowup", "--flag", "EP"]
        )
        assert rc == 0
        head = capsys.readouterr().out.splitlines()[0]
        # the stored pullback coefficient stretches the domain to tau = 2
        assert head == "A2-nodal-blowup: anti_k - v*EP, tau = 2"

    def test_explicit_config_file(self, capsys):
        path = catalog_root() / "A1-nodal" / "config_base.json"
        assert main(["decompose", "--config", str(path), "--flag", "E"]) == 0
        assert capsys.readouterr().out == DECOMPOSE_TEXT

    def test_both_sources_rejected(self, capsys):
        rc = main(
            ["decompose", "--config", "x.json", "--case", "A1-nodal", "--flag", "E"]
        )
        assert rc == 2
        err = capsys.readouterr().err
        assert err == "error: give either --config or --case, not both\n"

    def test_source_required(self, capsys):
        assert main(["decompose", "--flag", "E"]) == 2
        assert (
            capsys.readouterr().err
            == "error: one of --config or --case is required\n"
        )

    def test_missing_config_file(self, capsys):
        rc = main(["decompose", "--config", "/nonexistent.json", "--flag", "E"])
        assert rc == 2
        assert "no such file" in capsys.readouterr().err


class TestScalars:
    def test_s(self, capsys):
        assert main(["s", "--case", "A1-nodal", "--flag", "E"]) == 0
        out = capsys.readouterr().out
        assert out == "S(E) = 1/2 on A1-nodal; A = 1, A/S = 2\n"

    def test_s_orbifold_discrepancy(self, capsys):
        assert main(["s", "--case", "A1-cuspidal", "--flag", "Ebar"]) == 0
        out = capsys.readouterr().out
        assert out == "S(Ebar) = 5/3 on A1-cuspidal; A = 3, A/S = 9/5\n"

    def test_sw(self, capsys):
        assert main(["sw", "--case", "A1-nodal", "--flag", "E", "--point", "node"]) == 0
        out = capsys.readouterr().out
        assert out == (
            "S(W;node) = 1/2 on flag E of A1-nodal; A_O = 1, ratio = 2\n"
        )

    def test_sw_nontrivial_different(self, capsys):
        assert main(["sw", "--case", "A1-cuspidal", "--flag", "Ebar", "--point", "p1"]) == 0
        out = capsys.readouterr().out
        assert out == (
            "S(W;p1) = 1/12 on flag Ebar of A1-cuspidal; A_O = 1/2, ratio = 6\n"
        )


class TestDeltaCase:
    def test_certified(self, capsys):
        assert main(["delta-case", "--case", "A8"]) == 0
        assert capsys.readouterr().out == "delta(A8) = 1\n"

    def test_refused_certification(self, capsys, tmp_path, monkeypatch):
        target = tmp_path / "A1-nodal"
        shutil.copytree(catalog_root() / "A1-nodal", target)
        cfg_path = target / "config_base.json"
        data = json.loads(cfg_path.read_text(encoding="utf-8"))
        for point in data["points"]:
            if point["id"] == "node":
                point["different"] = "9/10"
        cfg_path.write_text(json.dumps(data), encoding="utf-8")
        monkeypatch.setenv("DPDELTA_CATALOG", str(tmp_path))

        assert main(["delta-case", "--case", "A1-nodal"]) == 1
        err = capsys.readouterr().err
        assert err == (
            "not certified: no flag with A/S = 2 has matching point bounds\n"
        )


class TestVerify:
    def test_single_case(self, capsys):
        assert main(["verify", "--case", "A1-nodal"]) == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines[0].startswith("A1-nodal: ")
        assert lines[-1] == "1 case, all PASS"

    def test_all_cases(self, capsys):
        assert main(["verify", "--all"]) == 0
        lines = capsys.readouterr().out.splitlines()
        assert len(lines) == 20
        assert lines[-1] == "19 cases, all PASS"

    def test_default_is_all(self, capsys):
        assert main(["verify"]) == 0
        assert capsys.readouterr().out.splitlines()[-1] == "19 cases, all PASS"

    def test_failure_exit_code(self, capsys, tmp_path, monkeypatch):
        target = tmp_path / "A1-nodal"
        shutil.copytree(catalog_root() / "A1-nodal", target)
        expected = target / "expected.json"
        data = json.loads(expected.read_text(encoding="utf-8"))
        data["delta"] = "3"
        expected.write_text(json.dumps(data), encoding="utf-8")
        monkeypatch.setenv("DPDELTA_CATALOG", str(tmp_path))

        assert main(["verify", "--case", "A1-nodal"]) == 1
        out = capsys.readouterr().out
        assert "delta=3 FAIL (expected 3, got 2)" in out
        assert out.splitlines()[-1] == "1 of 1 cases FAILED"


class TestTable:
    def test_full_table(self, capsys):
        assert main(["table"]) == 0
        lines = capsys.readouterr().out.splitlines()
        assert len(lines) == 16
        assert lines[0] == (
            "A1, 2A1, 3A1, 4A1, 5A1, 6A1, 7A1, 8A1  (all nodal): 2"
        )
        assert lines[-1] == "E8: 3/11"

    def test_singularity_query(self, capsys):
        assert main(["table", "--singularities", "A7:red+A1"]) == 0
        assert capsys.readouterr().out == "1\n"

    def test_underdetermined_query(self, capsys):
        assert main(["table", "--singularities", "A1"]) == 1
        err = capsys.readouterr().err
        assert err == (
            "undetermined: the composite delta depends on unspecified flags: "
            "2, 9/5\n"
        )

    def test_unparsable_query(self, capsys):
        assert main(["table", "--singularities", "garbage"]) == 2
        assert (
            capsys.readouterr().err
            == "error: cannot parse singularity 'garbage'\n"
        )


class TestBlowup:
    def test_writes_new_configuration(self, capsys, tmp_path):
        src = tmp_path / "src.json"
        shutil.copyfile(catalog_root() / "A2-nodal" / "config_base.json", src)
        out = tmp_path / "blown.json"
        rc = main(
            [
                "blowup",
                "--config", str(src),
                "--point", "corner",
                "--out", str(out),
                "--ep", "EP2",
            ]
        )
        assert rc == 0
        assert capsys.readouterr().out == (
            f"blew up A2-nodal at corner: wrote A2-nodal^corner to {out}; "
            "a(EP2) = 2, pullback coefficient = 2\n"
        )
        blown = load_config(out)
        assert blown.curve_names[-1] == "EP2"
        assert blown.discrepancy_of("EP2") == 2

    def test_unknown_point(self, capsys, tmp_path):
        src = tmp_path / "src.json"
        shutil.copyfile(catalog_root() / "A2-nodal" / "config_base.json", src)
        rc = main(
            [
                "blowup",
                "--config", str(src),
                "--point", "nope",
                "--out", str(tmp_path / "x.json"),
            ]
        )
        assert rc == 2
        assert "unknown point 'nope'" in capsys.readouterr().err


class TestOracle:
    def test_agreement(self, capsys):
        rc = main(
            ["oracle", "--case", "A1-nodal", "--flag", "E", "--trials", "5", "--seed", "3"]
        )
        assert rc == 0
        assert capsys.readouterr().out == (
            "oracle on A1-nodal/E: 5 samples (seed 3, tau = 1), "
            "0 mismatches, 0 ambiguous -> agrees\n"
        )

    def test_variant_with_pullback(self, capsys):
        rc = main(
            [
                "oracle",
                "--case", "A2-nodal",
                "--variant", "blowup",
                "--flag", "EP",
                "--trials", "5",
            ]
        )
        assert rc == 0
        assert "tau = 2" in capsys.readouterr().out

    def test_unknown_flag(self, capsys):
        assert main(["oracle", "--case", "A1-nodal", "--flag", "C"]) == 2
        assert (
            capsys.readouterr().err
            == "error: case A1-nodal stores no flag row for 'C'\n"
        )


class TestParsing:
    def test_unknown_command(self, capsys):
        assert main(["frobnicate"]) == 2

    def test_help_exits_zero(self, capsys):
        assert main(["--help"]) == 0
        assert "decompose" in capsys.readouterr().out

    def test_missing_required_option(self, capsys):
        assert main(["decompose", "--case", "A1-nodal"]) == 2

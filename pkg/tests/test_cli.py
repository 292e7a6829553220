import json

import pytest

from nonloose.cli import main

UNKNOT = "l 1\nr 1\n"
TREFOIL = "l 1 ; l 2 ; x 1 ; x 1 ; x 1 ; r 2 ; r 1\n"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, *argv):
    code, out = run(capsys, *argv)
    return code, json.loads(out)


@pytest.fixture
def unknot_file(tmp_path):
    path = tmp_path / "unknot.front"
    path.write_text(UNKNOT)
    return str(path)


@pytest.fixture
def trefoil_file(tmp_path):
    path = tmp_path / "trefoil.front"
    path.write_text(TREFOIL)
    return str(path)


class TestFrontCommands:
    def test_invariants(self, capsys, unknot_file):
        code, doc = run_json(capsys, "front-invariants", unknot_file)
        assert code == 0
        assert doc["tb"] == -1 and doc["rot"] == 0

    def test_invariants_trefoil(self, capsys, trefoil_file):
        code, doc = run_json(capsys, "front-invariants", trefoil_file)
        assert code == 0
        assert (doc["tb"], doc["rot"], doc["writhe"]) == (1, 0, 3)

    def test_stabilize(self, capsys, unknot_file):
        code, doc = run_json(capsys, "front-stabilize", unknot_file, "--sign", "+")
        assert code == 0
        assert (doc["tb"], doc["rot"]) == (-2, 1)
        assert doc["word"].count("l") == 2

    def test_destab_roundtrip(self, capsys, tmp_path, unknot_file):
        _, stab = run_json(capsys, "front-stabilize", unknot_file, "--sign", "-")
        stabbed = tmp_path / "stabbed.front"
        stabbed.write_text(stab["word"])
        code, doc = run_json(capsys, "front-destab", str(stabbed))
        assert code == 0
        assert doc["found"] is True
        assert (doc["tb"], doc["rot"]) == (-1, 0)

    def test_destab_absent(self, capsys, trefoil_file):
        code, doc = run_json(capsys, "front-destab", trefoil_file)
        assert code == 0
        assert doc == {"found": False}

    def test_parse_error_exit_code(self, capsys, tmp_path):
        bad = tmp_path / "bad.front"
        bad.write_text("l 1\nr 2\n")
        code, doc = run_json(capsys, "front-invariants", str(bad))
        assert code == 1
        assert doc["error"]["type"] == "PositionOutOfRange"

    def test_missing_file(self, capsys):
        code, doc = run_json(capsys, "front-invariants", "/no/such/file")
        assert code == 1
        assert doc["error"]["type"] == "InputError"


class TestSurgeryCommands:
    def test_dual_invariants(self, capsys):
        code, doc = run_json(
            capsys,
            "dual-invariants",
            "--tb", "-15", "--rot", "-2", "--chi", "-7", "--stab", "+1",
        )
        assert code == 0
        assert doc == {"tb_q": "1/14", "rot_q": "8/7", "r": 14, "chi": -7}

    def test_dual_meridional_error(self, capsys):
        code, doc = run_json(
            capsys, "dual-invariants", "--tb", "-1", "--rot", "0", "--chi", "1"
        )
        assert code == 1
        assert doc["error"]["type"] == "MeridionalSlope"

    def test_surgery_invariants(self, capsys, tmp_path):
        diagram = {
            "components": [
                {"id": "Lstar", "tb": -16, "rot": -1, "coeff": "passive"},
                {"id": "L", "tb": -15, "rot": -2, "coeff": "+1"},
            ],
            "lk": [["Lstar", "L", -15]],
            "distinguished": "Lstar",
        }
        path = tmp_path / "diagram.json"
        path.write_text(json.dumps(diagram))
        code, doc = run_json(capsys, "surgery-invariants", str(path), "--chi", "-7")
        assert code == 0
        assert doc == {"tb_q": "1/14", "rot_q": "8/7", "r": 14, "chi": -7}

    def test_surgery_bad_json(self, capsys, tmp_path):
        path = tmp_path / "diagram.json"
        path.write_text("{nope")
        code, doc = run_json(capsys, "surgery-invariants", str(path), "--chi", "1")
        assert code == 1
        assert doc["error"]["type"] == "InputError"


class TestCertifyCommands:
    def test_bennequin_classical(self, capsys):
        code, doc = run_json(
            capsys, "certify-bennequin", "--tb", "0", "--rot", "3", "--chi", "-1"
        )
        assert code == 0
        assert doc == {"check": "classical", "result": "Violated"}

    def test_bennequin_rational(self, capsys):
        code, doc = run_json(
            capsys,
            "certify-bennequin",
            "--tb-q", "15/14", "--rot-q", "1/7", "--order", "14", "--chi", "-7",
        )
        assert code == 0
        assert doc == {"check": "rational", "result": "Holds"}

    def test_bennequin_transverse(self, capsys):
        code, doc = run_json(
            capsys,
            "certify-bennequin",
            "--sl-q=-15/14", "--order", "14", "--chi", "-7",
        )
        assert code == 0
        assert doc == {"check": "transverse", "result": "Holds"}

    def test_unknot(self, capsys):
        code, doc = run_json(capsys, "certify-unknot", "--tb", "2", "--rot", "1")
        assert code == 0
        assert doc["verdict"] == "Inconclusive"
        assert doc["details"]["if_nonloose"] == {"depth": 1, "tension": 1, "order_bar": 0}

    def test_dual_flagship(self, capsys):
        code, doc = run_json(
            capsys,
            "certify-dual",
            "--tb", "-15", "--rot", "-2", "--chi", "-7",
            "--surgery-overtwisted", "--complement-tight",
        )
        assert code == 0
        assert doc["stabilized_dual"] == {"tb_q": "1/14", "rot_q": "8/7", "r": 14, "chi": -7}
        assert doc["bennequin_rational"] == "Violated"
        assert doc["tension"]["verdict"] == "TensionExactlyOne"
        assert doc["depth"]["verdict"] == "DepthAtLeastTwo"

    def test_tension(self, capsys):
        code, doc = run_json(
            capsys, "certify-tension", "--tb", "3", "--rot", "0", "--chi", "-1"
        )
        assert code == 0
        assert doc["bound"] == 3

    def test_tension_rational(self, capsys):
        code, doc = run_json(
            capsys,
            "certify-tension",
            "--tb-q", "15/14", "--rot-q", "1/7", "--order", "14", "--chi", "-7",
            "--side", "positive_only",
        )
        assert code == 0
        assert doc["bound"] == 1 and doc["witness"] == [1, 0]

    def test_search_examples(self, capsys):
        code, doc = run_json(capsys, "search-examples", "--p-max", "5")
        assert code == 0
        entries = {(c["knot"], c["t"], c["d"]) for c in doc["certificates"]}
        assert ("torus(-5,2)", 1, ">=2") in entries
        assert ("torus(-5,3)", 1, ">=2") in entries


class TestKnotRecordCommand:
    def test_family(self, capsys):
        code, doc = run_json(
            capsys, "knot-record", "--family", "negative-torus", "--p", "-5", "--q", "3"
        )
        assert code == 0
        assert doc["max_tb"] == -15 and doc["chi"] == -7

    def test_tag(self, capsys):
        code, doc = run_json(capsys, "knot-record", "--tag", "L2q(3)")
        assert code == 0
        assert doc["max_tb"] == 3

    def test_records_lookup(self, capsys, tmp_path):
        records = [
            {
                "family": "custom",
                "max_tb": -4,
                "rot_at_max_tb": [1],
                "chi": -3,
                "ambient": "tight-S3",
            }
        ]
        path = tmp_path / "records.json"
        path.write_text(json.dumps(records))
        code, doc = run_json(
            capsys, "--records", str(path), "knot-record", "--name", "custom"
        )
        assert code == 0
        assert doc["max_tb"] == -4

    def test_records_default_path(self, capsys, tmp_path, monkeypatch):
        monkeypatch.setenv("HOME", str(tmp_path))
        records_dir = tmp_path / ".config" / "nonloose"
        records_dir.mkdir(parents=True)
        (records_dir / "records.json").write_text(
            json.dumps([{"family": "house", "max_tb": -2, "chi": -1}])
        )
        # DEFAULT_RECORDS_PATH is computed at import time, so patch it directly
        import nonloose.cli as cli_mod

        monkeypatch.setattr(
            cli_mod, "DEFAULT_RECORDS_PATH", records_dir / "records.json"
        )
        code, doc = run_json(capsys, "knot-record", "--name", "house")
        assert code == 0
        assert doc["max_tb"] == -2

    def test_domain_error(self, capsys):
        code, doc = run_json(
            capsys, "knot-record", "--family", "negative-torus", "--p", "-4", "--q", "2"
        )
        assert code == 1
        assert doc["error"]["type"] == "InvalidParams"


class TestHarness:
    def test_usage_error_exit_code(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["no-such-command"])
        assert exc.value.code == 2

    def test_determinism(self, capsys, trefoil_file):
        _, first = run(capsys, "front-invariants", trefoil_file)
        _, second = run(capsys, "front-invariants", trefoil_file)
        assert first == second
        _, a = run(capsys, "search-examples", "--p-max", "6")
        _, b = run(capsys, "search-examples", "--p-max", "6")
        assert a == b

    def test_text_format(self, capsys, unknot_file):
        code, out = run(capsys, "--format", "text", "front-invariants", unknot_file)
        assert code == 0
        assert "tb: -1" in out and "rot: 0" in out

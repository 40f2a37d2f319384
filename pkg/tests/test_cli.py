import json
import logging

import pytest

from gauss_homotopy import cli
from gauss_homotopy.cli import EXIT_INPUT_ERROR, EXIT_NONTRIVIAL, EXIT_OK, run
from gauss_homotopy.commands.base import dump_json
from gauss_homotopy.core import CONFIG_ENV_VAR
from gauss_homotopy.utils.checkpoint import save_checkpoint
from gauss_homotopy.validators import validate_error_record, validate_report


@pytest.fixture(autouse=True)
def no_config_env(monkeypatch):
    monkeypatch.delenv(CONFIG_ENV_VAR, raising=False)


def _json(capsys, argv):
    status = run(["--json", *argv])
    return status, json.loads(capsys.readouterr().out)


class TestExitStatus:
    def test_z_nontrivial(self, capsys):
        assert run(["z", "ABACDCEBED"]) == EXIT_OK
        assert "nonzero" in capsys.readouterr().out

    def test_expect_trivial(self):
        assert run(["--expect-trivial", "z", "ABACDCEBED"]) == EXIT_NONTRIVIAL
        assert run(["--expect-trivial", "z", "ABACDCBD"]) == EXIT_OK
        assert run(["--expect-trivial", "zo", "ABACDCBD"]) == EXIT_NONTRIVIAL

    def test_bad_input(self, capsys):
        assert run(["z", "ABA"]) == EXIT_INPUT_ERROR
        assert capsys.readouterr().out == ""

    def test_usage_error(self):
        with pytest.raises(SystemExit) as exc:
            run([])
        assert exc.value.code == 2

    def test_illegal_move(self):
        assert run(["apply", "ABAB", "H1@1:1"]) == EXIT_INPUT_ERROR


class TestJsonReports:
    def test_round_trip(self, capsys):
        run(["--json", "s", "CEBE|ABAC"])
        out = capsys.readouterr().out
        data = json.loads(out)
        assert dump_json(data) + "\n" == out
        assert validate_report(data) == (True, [])
        assert data["result"]["encoding"] == "00;01/00;10"
        assert data["result"]["matrices"] == [[[0, 0], [0, 1]], [[0, 0], [1, 0]]]

    def test_z_report(self, capsys):
        status, data = _json(capsys, ["z", "ABACDCEBED"])
        assert status == EXIT_OK
        assert data["nontrivial"] is True
        assert len(data["result"]["z_keys"]) == 2
        assert data["result"]["word"] == "ABACDCEBED"
        assert "z-image (S-keyed)" in data["notes"]

    def test_zo_separates(self, capsys):
        _, z = _json(capsys, ["z", "ABACDCBD"])
        _, zo = _json(capsys, ["zo", "ABACDCBD"])
        assert z["result"]["nonzero"] is False
        assert zo["result"]["nonzero"] is True

    def test_cover_tower(self, capsys):
        _, data = _json(capsys, ["cover", "--iterate", "ABCADBECED"])
        assert data["result"] == {"cover": "ACADCD", "tower": ["ABCADBECED", "ACADCD", "CC"]}

    def test_height(self, capsys):
        _, data = _json(capsys, ["height", "ABACDCEBED"])
        assert data["result"]["syntactic_height"] == 1
        assert data["result"]["base"] == "DD"

    def test_moves_lists_results(self, capsys):
        _, data = _json(capsys, ["moves", "AA"])
        assert data["result"]["moves"] == [{"move": "H1@1:1", "result": "-"}, {"move": "SHIFT@1", "result": "AA"}]

    def test_selftest(self, capsys):
        status, data = _json(capsys, ["paper-selftest", "--seed", "3", "--table-trials", "1"])
        assert status == EXIT_OK
        assert data["result"]["seed"] == 3
        assert data["result"]["failed"] == 0


class TestCertificates:
    def test_search_then_apply(self, capsys, tmp_path):
        cert = tmp_path / "cert.txt"
        status, data = _json(capsys, ["search", "ABACDCBD", "-", "--rank-cap", "4", "--certificate", str(cert)])
        assert status == EXIT_OK
        assert data["result"]["verdict"] == "equivalent"
        assert cert.read_text(encoding="utf-8").splitlines() == data["result"]["certificate"]

        status, data = _json(capsys, ["apply", "ABACDCBD", "--certificate", str(cert)])
        assert status == EXIT_OK
        assert data["result"]["result"] == "-"

    def test_not_equivalent(self, capsys):
        _, data = _json(capsys, ["search", "ABACDCEBED", "-", "--rank-cap", "5"])
        assert data["result"]["verdict"] == "not-equivalent-within-bounds"
        assert data["result"]["certificate"] is None

    def test_missing_certificate_file(self, tmp_path):
        assert run(["apply", "ABAB", "--certificate", str(tmp_path / "missing.txt")]) == EXIT_INPUT_ERROR


class TestConfig:
    def test_yaml_slack(self, capsys, tmp_path):
        config = tmp_path / "config.yaml"
        config.write_text("rank_slack: 0\n", encoding="utf-8")
        _, data = _json(capsys, ["--config", str(config), "search", "ABAB", "-"])
        assert data["result"]["rank_cap"] == 2

    def test_env_var(self, capsys, tmp_path, monkeypatch):
        config = tmp_path / "config.yaml"
        config.write_text("policy: open\n", encoding="utf-8")
        monkeypatch.setenv(CONFIG_ENV_VAR, str(config))
        _, data = _json(capsys, ["search", "ABACDCBD", "-", "--rank-cap", "4"])
        assert "policy: open" in data["notes"]

    def test_flag_beats_config(self, capsys, tmp_path):
        config = tmp_path / "config.yaml"
        config.write_text("policy: open\n", encoding="utf-8")
        _, data = _json(capsys, ["--config", str(config), "search", "ABAB", "-", "--policy", "closed"])
        assert "policy: closed" in data["notes"]

    def test_invalid_config(self, tmp_path):
        config = tmp_path / "config.yaml"
        config.write_text("policy: spiral\n", encoding="utf-8")
        assert run(["--config", str(config), "canon", "AA"]) == EXIT_INPUT_ERROR


class TestBatch:
    LINES = ["z ABACDCEBED", "", "# comment", "z ABA", "canon XYXY", "batch other.txt"]

    def _write(self, tmp_path, lines):
        path = tmp_path / "inputs.txt"
        path.write_text("\n".join(lines) + "\n", encoding="utf-8")
        return path

    def test_one_record_per_line(self, capsys, tmp_path):
        path = self._write(tmp_path, self.LINES)
        assert run(["batch", str(path)]) == EXIT_INPUT_ERROR
        records = [json.loads(line) for line in capsys.readouterr().out.splitlines()]
        assert len(records) == len(self.LINES)
        assert records[0]["nontrivial"] is True
        assert records[1] == {} and records[2] == {}
        assert validate_error_record(records[3]) == (True, [])
        assert records[3]["line"] == 4
        assert records[4]["canonical"] == "ABAB"
        assert "error" in records[5]

    def test_clean_batch(self, tmp_path):
        path = self._write(tmp_path, ["canon XYXY", "validate AB|BA"])
        assert run(["batch", str(path), "--output", str(tmp_path / "out.jsonl")]) == EXIT_OK

    def test_output_file_and_workers(self, tmp_path):
        path = self._write(tmp_path, ["s CEBE|ABAC", "z ABACDCEBED", "cover ABCADBECED"] * 2)
        out = tmp_path / "nested" / "out.jsonl"
        assert run(["batch", str(path), "--output", str(out), "--workers", "2"]) == EXIT_OK
        records = [json.loads(line) for line in out.read_text(encoding="utf-8").splitlines()]
        assert [r["command"] for r in records] == ["s", "z", "cover"] * 2
        assert not (tmp_path / "nested" / "out.jsonl.checkpoint.json").exists()

    def test_resume(self, tmp_path):
        path = self._write(tmp_path, ["canon XYXY", "canon AA"])
        out = tmp_path / "out.jsonl"
        marker = dump_json({"resumed": True}, indent=None)
        save_checkpoint(str(out), [marker], 1, str(path))
        assert run(["batch", str(path), "--output", str(out), "--resume"]) == EXIT_OK
        lines = out.read_text(encoding="utf-8").splitlines()
        assert lines[0] == marker
        assert json.loads(lines[1])["canonical"] == "AA"

    def test_missing_file(self, tmp_path):
        assert run(["batch", str(tmp_path / "missing.txt")]) == EXIT_INPUT_ERROR

    def test_help_line_becomes_an_error_record(self, capsys, tmp_path):
        path = self._write(tmp_path, ["canon XYXY", "z -h", "canon AA"])
        assert run(["batch", str(path)]) == EXIT_INPUT_ERROR
        records = [json.loads(line) for line in capsys.readouterr().out.splitlines()]
        assert len(records) == 3
        assert records[0]["canonical"] == "ABAB"
        assert validate_error_record(records[1]) == (True, [])
        assert records[1]["line"] == 2
        assert records[2]["canonical"] == "AA"

    def test_undecodable_file(self, tmp_path):
        path = tmp_path / "inputs.txt"
        path.write_bytes(b"z \xff\xfe\n")
        assert run(["batch", str(path)]) == EXIT_INPUT_ERROR

    def test_expect_trivial(self, tmp_path):
        path = self._write(tmp_path, ["z ABACDCBD", "z ABACDCEBED"])
        assert run(["batch", str(path)]) == EXIT_OK
        assert run(["--expect-trivial", "batch", str(path)]) == EXIT_NONTRIVIAL
        trivial = self._write(tmp_path, ["z ABACDCBD", "canon AA"])
        assert run(["--expect-trivial", "batch", str(trivial)]) == EXIT_OK

    def test_records_are_schema_checked(self, capsys, tmp_path, monkeypatch, caplog):
        path = self._write(tmp_path, ["z ABAB"])
        assert run(["batch", str(path)]) == EXIT_OK
        record = json.loads(capsys.readouterr().out)
        assert validate_report(record) == (True, [])

        monkeypatch.setattr(cli, "validate_report", lambda data: (False, ["[(root)] broken"]))
        with caplog.at_level(logging.WARNING, logger="gauss_homotopy"):
            assert run(["batch", str(path)]) == EXIT_OK
        assert "failed schema validation" in caplog.text

    def test_workers_do_not_change_records(self, tmp_path):
        path = self._write(tmp_path, ["search ABACDCBD - --rank-cap 4", "search XAXYBYAB ABAB --rank-cap 4", "z ABAB"])
        serial, parallel = tmp_path / "serial.jsonl", tmp_path / "parallel.jsonl"
        assert run(["batch", str(path), "--output", str(serial)]) == EXIT_OK
        assert run(["batch", str(path), "--output", str(parallel), "--workers", "2"]) == EXIT_OK
        assert serial.read_text(encoding="utf-8") == parallel.read_text(encoding="utf-8")

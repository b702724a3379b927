"""End-to-end tests of the command line: exit codes, report shape, determinism."""

import json

import pytest

from besselsum import cli
from besselsum.core.reports import CheckReport


def _run(capsys, argv):
    code = cli.run(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture(autouse=True)
def _home(isolated_home):
    return isolated_home


class TestExitCodes:
    def test_passing_identity(self, capsys):
        code, out, _ = _run(capsys, ["verify-identity", "--lattice", "2,1;0,3", "--x", "1,0",
                                     "--t", "0.7,1.3", "--no-meta"])
        assert code == 0
        data = json.loads(out)
        assert data["passed"] is True
        assert data["items"][0]["kind"] == "identity"
        assert data["items"][0]["abs_residual"] < 1e-9

    def test_character_identity(self, capsys):
        code, _, _ = _run(capsys, ["verify-identity", "--lattice", "12", "--q", "12", "--chi", "kronecker:12"])
        assert code == 0

    def test_json_character(self, capsys):
        code, _, _ = _run(capsys, ["verify-identity", "--lattice", "12", "--q", "12", "--chi", '{"kronecker": 12}'])
        assert code == 0

    def test_malformed_lattice_is_bad_input(self, capsys):
        code, out, err = _run(capsys, ["verify-identity", "--lattice", "1,2;3"])
        assert code == 2
        assert out == ""
        assert "lattice" in err

    def test_missing_required_flag(self, capsys):
        code, out, _ = _run(capsys, ["heat-kernel"])
        assert code == 2
        assert out == ""

    def test_unknown_command(self, capsys):
        code, out, _ = _run(capsys, ["frobnicate"])
        assert code == 2
        assert out == ""

    def test_library_error_fails_the_run(self, capsys):
        code, out, _ = _run(capsys, ["verify-identity", "--lattice", "5", "--q", "5", "--chi", "principal:5"])
        assert code == 1
        item = json.loads(out)["items"][0]
        assert item["kind"] == "error"
        assert item["field"] == "chi"

    def test_imprimitive_can_be_allowed(self, capsys):
        code, out, _ = _run(capsys, ["verify-identity", "--lattice", "5", "--q", "5", "--chi", "principal:5",
                                     "--allow-imprimitive"])
        assert json.loads(out)["items"][0]["guarantee"] == "none"
        assert code in (0, 1)

    def test_version(self, capsys):
        code, out, _ = _run(capsys, ["--version"])
        assert code == 0
        assert out.startswith("besselsum ")


class TestReports:
    def test_no_meta_is_byte_stable(self, capsys):
        argv = ["heat-kernel", "--lattice", "1,1;0,1", "--t", "1.0", "--y", "0,0;1,2", "--no-meta"]
        _, first, _ = _run(capsys, argv)
        _, second, _ = _run(capsys, argv)
        assert first == second
        assert "meta" not in json.loads(first)

    def test_meta_present_by_default(self, capsys):
        _, out, _ = _run(capsys, ["eta-check", "--tau", "1i"])
        data = json.loads(out)
        assert "started_at" in data["meta"]
        assert len(data["meta"]["wall_clock_seconds"]) == len(data["items"])

    def test_csv(self, capsys):
        code, out, _ = _run(capsys, ["one-dimensional", "--m", "2", "--t", "0.5", "--format", "csv"])
        assert code == 0
        assert out.splitlines()[0].startswith("name,kind,passed")
        assert len(out.splitlines()) == 1 + 7

    def test_summary_goes_to_stderr(self, capsys):
        _, out, err = _run(capsys, ["theta-identity", "--t", "0.25", "--summary", "--no-meta"])
        json.loads(out)
        assert "jacobi" in err

    def test_digest_depends_on_arguments(self, capsys):
        _, a, _ = _run(capsys, ["eta-probe", "--L", "5", "--t", "0.2", "--no-meta"])
        _, b, _ = _run(capsys, ["eta-probe", "--L", "5", "--t", "0.3", "--no-meta"])
        assert json.loads(a)["config_digest"] != json.loads(b)["config_digest"]


class TestCommands:
    def test_code_macwilliams(self, capsys):
        code, out, _ = _run(capsys, ["code-macwilliams", "--code", "m=2,n=3,gen=111", "--x", "1"])
        assert code == 0
        names = [item["name"] for item in json.loads(out)["items"]]
        assert "binary macwilliams exact" in names

    def test_code_cwe_from_parts(self, capsys):
        code, out, _ = _run(capsys, ["code-cwe", "--m", "3", "--n", "2", "--generators", "12", "--t", "0.5"])
        assert code == 0
        assert json.loads(out)["items"][0]["value"] == 3

    def test_code_needs_a_definition(self, capsys):
        code, out, _ = _run(capsys, ["code-cwe"])
        assert code == 2
        assert out == ""

    def test_heat_solve_with_oracle(self, capsys):
        code, out, _ = _run(capsys, ["heat-solve", "--lattice", "1", "--t", "1.5",
                                     "--u0", "coset:m=2,n=1,gen=0", "--radius", "2", "--oracle", "--step", "0.02"])
        assert code == 0
        names = [item["name"] for item in json.loads(out)["items"]]
        assert any(name.startswith("formula-vs-rk4") for name in names)
        assert any(name.startswith("code-heat") for name in names)

    def test_heat_steps_from_config(self, capsys, tmp_path):
        path = tmp_path / "heat.toml"
        path.write_text("[heat]\nsteps_per_unit = 20\n", encoding="utf-8")
        code, out, _ = _run(capsys, ["heat-solve", "--lattice", "1", "--t", "1.0", "--oracle",
                                     "--oracle-radius", "20", "--config", str(path)])
        assert code == 0
        oracle = [item for item in json.loads(out)["items"] if item["name"].startswith("formula-vs-rk4")]
        assert oracle[0]["extras"]["rk4_steps"] == 20

    def test_eta_probe(self, capsys):
        code, out, _ = _run(capsys, ["eta-probe", "--L", "5,25", "--t", "0.2"])
        assert code == 0
        assert json.loads(out)["items"][-1]["kind"] == "check"

    def test_eta_probe_rejects_l(self, capsys):
        code, out, _ = _run(capsys, ["eta-probe", "--L", "6"])
        assert code == 1
        assert json.loads(out)["items"][0]["field"] == "L"

    def test_continuum_limit(self, capsys):
        code, out, _ = _run(capsys, ["continuum-limit", "--lattice", "1", "--L", "8,16,32"])
        assert code == 0
        assert json.loads(out)["items"][-2]["name"] == "continuum-limit decreasing"

    def test_threads_from_environment(self, capsys, mocker, monkeypatch):
        monkeypatch.setenv("BESSELSUM_THREADS", "3")
        seen = {}

        def fake(args):
            seen["threads"] = args.threads
            seen["config"] = args.config
            return [(CheckReport("fake", True), 0.0)]

        mocker.patch.dict(cli.COMMANDS, {"suite": fake})
        code, _, _ = _run(capsys, ["suite", "--quick"])
        assert code == 0
        assert seen["threads"] == 3
        assert "tolerances" in seen["config"]

    def test_config_file_flag(self, capsys, tmp_path, mocker):
        path = tmp_path / "custom.toml"
        path.write_text("[runtime]\nthreads = 4\n", encoding="utf-8")
        seen = {}

        def fake(args):
            seen["threads"] = args.threads
            return [(CheckReport("fake", True), 0.0)]

        mocker.patch.dict(cli.COMMANDS, {"suite": fake})
        _run(capsys, ["suite", "--config", str(path)])
        assert seen["threads"] == 4

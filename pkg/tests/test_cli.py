import json
import os
import subprocess
import sys

import pytest

from sudoku_chroma.cli import main
from sudoku_chroma.io import parse_edgelist


@pytest.fixture
def files(tmp_path):
    def write(name, text):
        path = tmp_path / name
        path.write_text(text)
        return str(path)

    return write


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestGen:
    def test_path(self, capsys):
        code, out, _ = run(capsys, "gen", "--family", "path:6")
        assert code == 0 and out == "6 5\n0 1\n1 2\n2 3\n3 4\n4 5\n"

    def test_bistar(self, capsys):
        code, out, _ = run(capsys, "gen", "--family", "bistar:3,2")
        G = parse_edgelist(out)
        assert code == 0 and G.n == 7 and G.m == 6

    def test_attach(self, capsys):
        _, out, _ = run(capsys, "gen", "--family", "attach:path:6@2-3:K5")
        assert parse_edgelist(out).n == 9

    def test_bad_spec(self, capsys):
        code, _, err = run(capsys, "gen", "--family", "tree:4")
        assert code == 3 and "expected one of" in err

    def test_out_file(self, capsys, tmp_path):
        target = tmp_path / "g.txt"
        assert run(capsys, "gen", "--family", "cycle:4", "--out", str(target))[0] == 0
        assert target.read_text().startswith("4 4\n")


class TestCount:
    def test_p6_instance(self, capsys, files):
        g = files("p6.txt", "6 5\n0 1\n1 2\n2 3\n3 4\n4 5\n")
        c = files("c.txt", "0 1\n2 2\n4 1\n5 3\n")
        code, out, _ = run(capsys, "count", "--graph", g, "--coloring", c, "--k", "3")
        assert (code, out) == (1, "ExactlyOne\n")

    def test_triangle_empty(self, capsys, files):
        g = files("k3.txt", "3 3\n0 1\n1 2\n0 2\n")
        c = files("c.txt", "")
        code, out, _ = run(capsys, "count", "--graph", g, "--coloring", c, "--k", "3")
        assert (code, out) == (2, "AtLeast(2)\n")

    def test_zero(self, capsys, files):
        g = files("k3.txt", "3 3\n0 1\n1 2\n0 2\n")
        c = files("c.txt", "0 1\n1 2\n")
        code, out, _ = run(capsys, "count", "--graph", g, "--coloring", c, "--k", "2")
        assert (code, out) == (0, "Zero\n")

    def test_improper(self, capsys, files):
        g = files("k2.txt", "2 1\n0 1\n")
        c = files("c.txt", "0 1\n1 1\n")
        code, _, err = run(capsys, "count", "--graph", g, "--coloring", c, "--k", "3")
        assert code == 3 and "improper" in err.lower()

    def test_parse_error_line(self, capsys, files):
        g = files("bad.txt", "3 1\n0 7\n")
        c = files("c.txt", "")
        code, _, err = run(capsys, "count", "--graph", g, "--coloring", c, "--k", "3")
        assert code == 3 and "line 2" in err

    def test_bad_cap(self, capsys, files):
        g = files("k2.txt", "2 1\n0 1\n")
        c = files("c.txt", "")
        assert run(capsys, "count", "--graph", g, "--coloring", c, "--k", "3", "--cap", "1")[0] == 3

    def test_missing_flag_is_usage_error(self, capsys):
        with pytest.raises(SystemExit) as info:
            main(["count", "--k", "3"])
        assert info.value.code == 3


class TestSn:
    def test_p6_json(self, capsys):
        code, out, _ = run(capsys, "sn", "--family", "path:6", "--k", "3", "--format", "json")
        data = json.loads(out)
        assert code == 0 and data["sn"] == 4 and data["S"] == [0, 1, 3, 5] and data["n"] == 6

    def test_k34(self, capsys):
        code, out, _ = run(capsys, "sn", "--family", "kmn:3,4", "--k", "3", "--format", "json")
        assert json.loads(out)["sn"] == 3

    def test_c4_k4(self, capsys, files):
        g = files("c4.txt", "4 4\n0 1\n1 2\n2 3\n0 3\n")
        code, out, _ = run(capsys, "sn", "--graph", g, "--k", "4", "--format", "json")
        assert json.loads(out)["sn"] == 4

    def test_graph6_input_and_chromatic_default(self, capsys, files):
        g = files("k4.g6", "C~\n")
        _, out, _ = run(capsys, "sn", "--graph", g, "--format", "json")
        assert json.loads(out)["k"] == 4

    def test_text_and_csv(self, capsys):
        _, out, _ = run(capsys, "sn", "--family", "cycle:6", "--k", "3")
        assert out.startswith("sn = 3")
        _, out, _ = run(capsys, "sn", "--family", "cycle:6", "--k", "3", "--format", "csv")
        assert out.splitlines()[0] == "n,k,sn,S,C0,F"

    def test_chromatic_violation(self, capsys):
        code, _, err = run(capsys, "sn", "--family", "cycle:5", "--k", "2")
        assert code == 4 and "chromatic" in err

    def test_limit(self, capsys):
        code, _, err = run(capsys, "sn", "--family", "cycle:8", "--k", "3", "--limit", "5")
        assert code == 4 and "limit" in err

    def test_env_limit(self):
        env = dict(os.environ, SUDOKU_CHROMA_LIMIT="5")
        proc = subprocess.run([sys.executable, "-m", "sudoku_chroma", "sn", "--family", "cycle:8", "--k", "3"],
                              capture_output=True, text=True, env=env)
        assert proc.returncode == 4


class TestCheck:
    def certificate(self, capsys, files):
        _, out, _ = run(capsys, "sn", "--family", "path:6", "--k", "3", "--format", "json")
        g = files("p6.txt", "6 5\n0 1\n1 2\n2 3\n3 4\n4 5\n")
        return g, json.loads(out)

    def test_pass(self, capsys, files):
        g, data = self.certificate(capsys, files)
        c = files("cert.json", json.dumps(data))
        assert run(capsys, "check", "--graph", g, "--certificate", c)[:2] == (0, "PASS\n")

    def test_mutated_f(self, capsys, files):
        g, data = self.certificate(capsys, files)
        v, col = data["F"][2]
        data["F"][2] = [v, 1 if col != 1 else 2]
        c = files("cert.json", json.dumps(data))
        code, out, _ = run(capsys, "check", "--graph", g, "--certificate", c)
        assert code == 1 and out.startswith("FAIL") and "mismatch" in out

    def test_dropped_vertex(self, capsys, files):
        g, data = self.certificate(capsys, files)
        data["C0"] = data["C0"][1:]
        data["S"] = data["S"][1:]
        data["sn"] -= 1
        c = files("cert.json", json.dumps(data))
        code, out, _ = run(capsys, "check", "--graph", g, "--certificate", c)
        assert code == 1 and "NotUnique" in out

    def test_malformed(self, capsys, files):
        g, _ = self.certificate(capsys, files)
        c = files("cert.json", "{not json")
        assert run(capsys, "check", "--graph", g, "--certificate", c)[0] == 3

    def test_fresh_process(self, tmp_path):
        cert = tmp_path / "cert.json"
        graph = tmp_path / "g.txt"
        base = [sys.executable, "-m", "sudoku_chroma"]
        subprocess.run(base + ["gen", "--family", "bistar:3,2", "--out", str(graph)], check=True)
        subprocess.run(base + ["sn", "--graph", str(graph), "--k", "3", "--format", "json",
                               "--out", str(cert)], check=True)
        proc = subprocess.run(base + ["check", "--graph", str(graph), "--certificate", str(cert)],
                              capture_output=True, text=True)
        assert proc.returncode == 0 and proc.stdout == "PASS\n"


class TestSuite:
    def test_default_sections(self, capsys):
        code, out, _ = run(capsys, "suite", "--section", "families", "--section", "apex")
        assert code == 0 and "0 mismatch/error" in out

    def test_wrong_predictor_fixture(self, capsys, files):
        m = files("m.json", json.dumps({"sections": [
            {"name": "bad", "kind": "family", "instances": [{"spec": "path:6", "expect": 5}]}]}))
        code, out, _ = run(capsys, "suite", "--manifest", m)
        assert code == 1 and "mismatch" in out

    def test_census_csv(self, capsys):
        code, out, _ = run(capsys, "suite", "--section", "census", "--format", "csv")
        rows = out.splitlines()
        assert code == 0 and rows[0].split(",")[:3] == ["instance_id", "family", "params"]
        assert len(rows) == 1 + sum([1, 1, 1, 3, 5, 17, 44])

    def test_thread_determinism(self, capsys):
        def report(threads):
            _, out, _ = run(capsys, "suite", "--section", "families", "--section", "max-degree",
                            "--format", "json", "--threads", str(threads))
            rows = json.loads(out)
            for r in rows:
                r.pop("millis")
            return json.dumps(rows)

        assert report(1) == report(4)

    def test_missing_manifest(self, capsys, tmp_path):
        assert run(capsys, "suite", "--manifest", str(tmp_path / "nope.json"))[0] == 3

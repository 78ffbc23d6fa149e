import json

import pytest

from clusterchar.cli import main
from clusterchar.quivers import kronecker, linear_an


@pytest.fixture
def a4_file(tmp_path):
    path = tmp_path / "a4.json"
    path.write_text(json.dumps(linear_an(4).to_json()))
    return str(path)


@pytest.fixture
def a2_file(tmp_path):
    path = tmp_path / "a2.json"
    path.write_text(json.dumps(linear_an(2).to_json()))
    return str(path)


@pytest.fixture
def kronecker_rep_file(tmp_path):
    from clusterchar.catalog import kronecker_rep

    path = tmp_path / "kron.json"
    path.write_text(json.dumps(kronecker_rep().to_json()))
    return str(path)


class TestFpoly:
    def test_text(self, kronecker_rep_file, capsys):
        assert main(["fpoly", "--rep", kronecker_rep_file]) == 0
        out = capsys.readouterr().out.strip()
        assert out == "1 + 2*y2 + y1*y2 + y2^2 + 2*y1*y2^2 + y1^2*y2^2"

    def test_missing_rep_flag(self, capsys):
        assert main(["fpoly"]) == 2

    def test_missing_file(self, capsys):
        assert main(["fpoly", "--rep", "/nonexistent.json"]) == 2

    def test_garbage_file(self, tmp_path, capsys):
        path = tmp_path / "bad.json"
        path.write_text("{not json")
        assert main(["fpoly", "--rep", str(path)]) == 2


class TestGrassmannian:
    def test_table(self, kronecker_rep_file, capsys):
        assert main(["grassmannian", "--rep", kronecker_rep_file]) == 0
        lines = capsys.readouterr().out.strip().splitlines()
        assert "0,1 -> 2" in lines
        assert "1,0 -> 0" in lines
        assert len(lines) == 9  # lexicographic over e <= (2,2)

    def test_single_e(self, kronecker_rep_file, capsys):
        assert main(["grassmannian", "--rep", kronecker_rep_file, "--e", "1,1"]) == 0
        assert capsys.readouterr().out.strip() == "1,1 -> 1"

    def test_json(self, kronecker_rep_file, capsys):
        assert main(["grassmannian", "--rep", kronecker_rep_file, "--json"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert {"e": [0, 1], "chi": 2} in doc["table"]


class TestCC:
    def test_module(self, a4_file, capsys):
        assert main(["cc", "--quiver", a4_file, "--object", "[1,3]"]) == 0
        out = capsys.readouterr().out.strip()
        assert out == "x3^-1 + x2^-1*x3^-1*x4 + x1^-1*x2^-1*x4 + x1^-1*x4"

    def test_summand_json(self, a4_file, capsys):
        assert main(["cc", "--quiver", a4_file, "--object", "T2", "--json"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["cc"]["canonical"] == "x2"
        assert doc["index"] == [0, 1, 0, 0]

    def test_index_command(self, a4_file, capsys):
        assert main(["index", "--quiver", a4_file, "--object", "[2,2]"]) == 0
        assert capsys.readouterr().out.strip() == "(0,-1,1,0)"


class TestCCTable:
    def test_size(self, a4_file, capsys):
        assert main(["cc-table", "--quiver", a4_file, "--json"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert len(doc["entries"]) == 14
        displays = {e["cc"]["display"] for e in doc["entries"]}
        assert "(x1 + x3)/x2" in displays


class TestArQuiver:
    def test_json(self, a4_file, capsys):
        assert main(["ar-quiver", "--quiver", a4_file, "--json"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert len(doc["vertices"]) == 10
        assert len(doc["meshes"]) == 6

    def test_text(self, a4_file, capsys):
        assert main(["ar-quiver", "--quiver", a4_file]) == 0
        out = capsys.readouterr().out
        assert "4/3/2/1" in out
        assert "tau" in out


class TestMutate:
    def test_sequence(self, a2_file, capsys):
        assert main(["mutate", "--quiver", a2_file, "--seq", "1,2"]) == 0
        out = capsys.readouterr().out
        assert "u1 = x1^-1 + x1^-1*x2" in out
        assert "u2 = x1^-1*x2^-1 + x2^-1 + x1^-1" in out

    def test_empty_sequence(self, a2_file, capsys):
        assert main(["mutate", "--quiver", a2_file]) == 0
        out = capsys.readouterr().out
        assert "u1 = x1" in out


class TestEnumerate:
    def test_a2(self, a2_file, capsys):
        assert main(["enumerate", "--quiver", a2_file, "--json"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc == {
            "status": "closed",
            "seeds": 5,
            "variables": 5,
            "variable_list": doc["variable_list"],
        }
        assert len(doc["variable_list"]) == 5

    def test_kronecker_depth_exceeded(self, tmp_path, capsys):
        path = tmp_path / "kron.json"
        path.write_text(json.dumps(kronecker().to_json()))
        assert main(["enumerate", "--quiver", str(path), "--max-depth", "4", "--json"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["status"] == "depth-exceeded"
        assert doc["variables"] >= 5


class TestVerify:
    def test_grass_suite(self, capsys):
        assert main(["verify", "--suite", "grass"]) == 0
        out = capsys.readouterr().out
        assert "PASS kronecker-grass-table" in out

    def test_char_suite_json(self, capsys):
        assert main(["verify", "--suite", "char", "--json"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["ok"] is True
        names = {c["name"] for c in doc["checks"]}
        assert "index-pins" in names and "iota-consistency" in names

    def test_broken_build_fails(self, capsys, monkeypatch):
        # negative control: flip the sign of the exchange matrix and the
        # character pins must fail, driving a nonzero exit code
        import clusterchar.charcat as charcat_mod

        real_b_matrix = charcat_mod.b_matrix

        def flipped(quiver):
            return tuple(tuple(-x for x in row) for row in real_b_matrix(quiver))

        monkeypatch.setattr(charcat_mod, "b_matrix", flipped)
        charcat_mod._cc_cached.cache_clear()
        charcat_mod.cc_table.cache_clear()
        try:
            code = main(["verify", "--suite", "char"])
            out = capsys.readouterr().out
        finally:
            charcat_mod._cc_cached.cache_clear()
            charcat_mod.cc_table.cache_clear()
        assert code == 1
        assert "FAIL cc-pins" in out

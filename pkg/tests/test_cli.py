"""End-to-end tests for the command-line interface."""

import json

import pytest

from vposets.cli import main

from helpers import FIGURE_POSET_STR, FIGURE_POSET_TEXT, FIGURE_TREE_TEXT

FIGURE_TREE_STR = "y^5 + y^3 + x*y^2 + x^2*y + x^3"


@pytest.fixture
def tree_file(tmp_path):
    f = tmp_path / "fig.tree"
    f.write_text(FIGURE_TREE_TEXT)
    return str(f)


@pytest.fixture
def poset_file(tmp_path):
    f = tmp_path / "fig.poset"
    f.write_text(FIGURE_POSET_TEXT)
    return str(f)


@pytest.fixture
def n_poset_file(tmp_path):
    f = tmp_path / "n.poset"
    f.write_text("4\n3 1\n4 1\n4 2\n")
    return str(f)


class TestTreePoly:
    def test_default(self, tree_file, capsys):
        assert main(["tree-poly", tree_file]) == 0
        assert capsys.readouterr().out.strip() == FIGURE_TREE_STR

    def test_dc_byte_identical(self, tree_file, capsys):
        main(["tree-poly", tree_file])
        default = capsys.readouterr().out
        main(["tree-poly", tree_file, "--dc"])
        assert capsys.readouterr().out == default

    def test_dc_identical_across_inputs(self, tmp_path, capsys):
        for text in ("()", "(()())", "((())()())", "((((()))))"):
            f = tmp_path / "t.tree"
            f.write_text(text)
            main(["tree-poly", str(f)])
            default = capsys.readouterr().out
            main(["tree-poly", str(f), "--dc"])
            assert capsys.readouterr().out == default

    def test_eval(self, tree_file, capsys):
        assert main(["tree-poly", tree_file, "--eval", "2", "2"]) == 0
        out = capsys.readouterr().out
        assert "P(2,2) = 64" in out

    def test_json(self, tree_file, capsys):
        assert main(["tree-poly", tree_file, "--json", "--eval", "1", "2"]) == 0
        obj = json.loads(capsys.readouterr().out)
        assert obj["polynomial"][0] == [1, 0, 5]
        assert obj["eval"] == {"x": 1, "y": 2, "value": 47}

    def test_stdin(self, capsys, monkeypatch):
        import io

        monkeypatch.setattr("sys.stdin", io.StringIO("(()())"))
        assert main(["tree-poly", "-"]) == 0
        assert capsys.readouterr().out.strip() == "y^2 + x^2"

    def test_parse_error_status(self, tmp_path, capsys):
        f = tmp_path / "bad.tree"
        f.write_text("((")
        assert main(["tree-poly", str(f)]) == 2
        assert "error" in capsys.readouterr().err

    def test_missing_file_status(self, capsys):
        assert main(["tree-poly", "/nonexistent/file"]) == 2


class TestPosetPoly:
    def test_default(self, poset_file, capsys):
        assert main(["poset-poly", poset_file]) == 0
        assert capsys.readouterr().out.strip() == FIGURE_POSET_STR

    def test_expansion_byte_identical(self, poset_file, capsys):
        main(["poset-poly", poset_file])
        default = capsys.readouterr().out
        main(["poset-poly", poset_file, "--expansion"])
        assert capsys.readouterr().out == default

    def test_non_v_poset_status(self, n_poset_file, capsys):
        assert main(["poset-poly", n_poset_file]) == 1
        err = capsys.readouterr().err
        assert "not a V-poset" in err and "N" in err


class TestCheck:
    def test_v_poset(self, poset_file, capsys):
        assert main(["check", poset_file]) == 0
        out = capsys.readouterr().out
        assert out.startswith("VPOSET (g ")

    def test_not_v_poset(self, n_poset_file, capsys):
        assert main(["check", n_poset_file]) == 1
        out = capsys.readouterr().out.strip()
        assert out == "NOT-VPOSET N 1 2 3 4"

    def test_union_sexpr(self, tmp_path, capsys):
        f = tmp_path / "anti.poset"
        f.write_text("2\n")
        assert main(["check", str(f)]) == 0
        assert capsys.readouterr().out.strip() == "VPOSET (union (g empty) (g empty))"


class TestCounts:
    def test_tree(self, tree_file, capsys):
        assert main(["counts", tree_file]) == 0
        lines = capsys.readouterr().out.strip().splitlines()
        rows = [line.split("\t") for line in lines[1:]]
        assert len(rows) == 6
        assert all(row[-1] == "ok" for row in rows)
        assert rows[0][1] == "5" and rows[3][1] == "16" and rows[4][1] == "47"

    def test_poset(self, poset_file, capsys):
        assert main(["counts", poset_file]) == 0
        lines = capsys.readouterr().out.strip().splitlines()
        rows = [line.split("\t") for line in lines[1:]]
        assert all(row[-1] == "ok" for row in rows)
        assert rows[3][1] == "64" and rows[4][1] == "779"

    def test_non_v_poset(self, n_poset_file):
        assert main(["counts", n_poset_file]) == 1


class TestCensus:
    def test_last_line_at_eight(self, capsys):
        assert main(["census", "--max", "8"]) == 0
        lines = capsys.readouterr().out.strip().splitlines()
        assert lines[-1] == "8\t1184\t1184"
        assert lines[0] == "1\t1\t1"

    def test_series_only_beyond_eight(self, capsys):
        assert main(["census", "--max", "9"]) == 0
        lines = capsys.readouterr().out.strip().splitlines()
        assert lines[-1] == "9\t3823"

    def test_connected_column(self, capsys):
        assert main(["census", "--max", "3", "--connected"]) == 0
        lines = capsys.readouterr().out.strip().splitlines()
        assert lines[2] == "3\t5\t3\t5"


class TestAsymptotics:
    def test_json_result(self, capsys):
        assert main(["asymptotics"]) == 0
        obj = json.loads(capsys.readouterr().out)
        assert set(obj) == {"rho", "rhoInv", "constant", "truncationOrder"}
        assert abs(obj["rhoInv"] - 3.79599) < 1e-4
        assert abs(obj["constant"] - 0.726213) < 1e-4
        assert obj["truncationOrder"] == 100

    def test_order_flag(self, capsys):
        assert main(["asymptotics", "--order", "80"]) == 0
        assert json.loads(capsys.readouterr().out)["truncationOrder"] == 80

    def test_too_small_order(self, capsys):
        assert main(["asymptotics", "--order", "10"]) == 2


class TestCollide:
    def test_small_run(self, capsys):
        assert main(["collide", "--max", "6"]) == 0
        out = capsys.readouterr().out
        assert "trees examined: 37" in out
        assert "full-polynomial collisions: none" in out

    def test_figure_pair_reported(self, capsys):
        assert main(["collide", "--max", "8"]) == 0
        out = capsys.readouterr().out
        assert "x^3 + 3*x^2 + 3*x + 3" in out

    def test_bound_status(self, capsys):
        assert main(["collide", "--max", "13"]) == 3


class TestUsageErrors:
    def test_unknown_command(self):
        with pytest.raises(SystemExit) as exc:
            main(["frobnicate"])
        assert exc.value.code == 2

    def test_missing_argument(self):
        with pytest.raises(SystemExit) as exc:
            main(["census"])
        assert exc.value.code == 2

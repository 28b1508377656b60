import json

import pytest

from matchpoly.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestPolyAndFactor:
    def test_poly_text(self, capsys):
        code, out, _ = run(capsys, "poly", "--graph", "builtin:P:7")
        assert code == 0
        assert out.strip() == "x^7 - 6*x^5 + 10*x^3 - 4*x"

    def test_poly_json(self, capsys):
        code, out, _ = run(capsys, "poly", "--graph", "builtin:paper:T9", "--json")
        data = json.loads(out)
        assert data["schema"] == 1
        assert data["poly"]["coeffs"] == [0, 5, 0, -18, 0, 20, 0, -8, 0, 1]

    def test_poly_from_file(self, capsys, tmp_path):
        f = tmp_path / "g.json"
        f.write_text('{"n":2,"edges":[[0,1]]}')
        code, out, _ = run(capsys, "poly", "--graph", str(f))
        assert code == 0 and out.strip() == "x^2 - 1"

    def test_factor(self, capsys):
        code, out, _ = run(capsys, "factor", "--graph", "builtin:paper:T9")
        assert code == 0
        assert "(x - 1)^1" in out

    def test_missing_file(self, capsys):
        code, _, err = run(capsys, "poly", "--graph", "/nonexistent/g.json")
        assert code == 2 and "error" in err


class TestThetaResolution:
    def test_text_form(self, capsys):
        code, out, _ = run(
            capsys, "partition", "--graph", "builtin:paper:T9", "--theta", "x - 1"
        )
        assert code == 0 and "A: ['v5']" in out

    def test_json_array_form(self, capsys):
        code, out, _ = run(
            capsys, "partition", "--graph", "builtin:paper:T9", "--theta", "[-1, 1]"
        )
        assert code == 0 and "A: ['v5']" in out

    def test_factor_k_form(self, capsys):
        code, out, _ = run(
            capsys, "partition", "--graph", "builtin:paper:T9", "--theta", "factor:1"
        )
        assert code == 0 and "A: ['v5']" in out

    def test_factor_k_out_of_range(self, capsys):
        code, _, err = run(
            capsys, "partition", "--graph", "builtin:paper:T9", "--theta", "factor:9"
        )
        assert code == 2 and "out of range" in err

    def test_reducible_theta_rejected(self, capsys):
        code, _, err = run(
            capsys, "partition", "--graph", "builtin:paper:T9", "--theta", "x^2 - 1"
        )
        assert code == 2 and "irreducible" in err


class TestCommands:
    def test_classify_one_vertex(self, capsys):
        code, out, _ = run(
            capsys, "classify", "--graph", "builtin:paper:T9",
            "--theta", "x - 1", "--vertex", "v5",
        )
        assert code == 0
        assert "positive" in out and "special" in out

    def test_partition_json_schema(self, capsys):
        code, out, _ = run(
            capsys, "partition", "--graph", "builtin:paper:T9",
            "--theta", "x - 1", "--json",
        )
        data = json.loads(out)
        assert data["D"] == ["v6", "v7", "v8", "v9"]
        assert data["signs"]["v1"] == "neutral"

    def test_eigvec(self, capsys):
        code, out, _ = run(
            capsys, "eigvec", "--graph", "builtin:paper:T9", "--theta", "x - 1"
        )
        assert code == 0 and "support: ['v6', 'v7', 'v8', 'v9']" in out

    def test_cover(self, capsys):
        code, out, _ = run(capsys, "cover", "--graph", "builtin:paper:G14")
        assert code == 0 and "2 path(s)" in out

    def test_cover_with_extremality(self, capsys):
        code, out, _ = run(
            capsys, "cover", "--graph", "builtin:star:4", "--theta", "[0, 1]"
        )
        assert code == 0 and "extremal" in out

    def test_certify_exit_codes(self, capsys):
        code, out, _ = run(capsys, "certify", "--graph", "builtin:paper:T9")
        assert code == 0 and "holds" in out
        code, out, _ = run(capsys, "certify", "--graph", "builtin:paper:G14")
        assert code == 1 and "FAILS" in out

    def test_dot_export(self, capsys, tmp_path):
        dot = tmp_path / "t9.dot"
        code, _, _ = run(
            capsys, "poly", "--graph", "builtin:paper:T9", "--dot", str(dot)
        )
        assert code == 0
        text = dot.read_text()
        assert text.startswith("graph G {") and "--" in text


class TestSweepCommand:
    def test_clean_sweep(self, capsys):
        code, out, err = run(capsys, "sweep", "stability", "--max-n", "5", "--jobs", "1")
        assert code == 0
        assert "all" in out and "passed" in out
        assert "sweep stability" in err

    def test_json_byte_identical_across_jobs(self, capsys):
        _, out1, _ = run(
            capsys, "sweep", "main-theorem", "--max-n", "6", "--jobs", "1", "--json"
        )
        _, out2, _ = run(
            capsys, "sweep", "main-theorem", "--max-n", "6", "--jobs", "2", "--json"
        )
        assert out1 == out2
        assert json.loads(out1)["schema"] == 1

    def test_bad_size_exit(self, capsys):
        code, _, err = run(capsys, "sweep", "gallai", "--max-n", "99")
        assert code == 2 and "error" in err

    def test_unknown_campaign_usage_error(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["sweep", "bogus", "--max-n", "5"])
        assert exc.value.code == 2


class TestDemos:
    def test_t9(self, capsys):
        code, out, _ = run(capsys, "demo", "t9")
        assert code == 0
        assert "x^9 - 8*x^7 + 20*x^5 - 18*x^3 + 5*x" in out
        assert "stable = True" in out
        assert "not special" in out

    def test_g14(self, capsys):
        code, out, _ = run(capsys, "demo", "g14")
        assert code == 0
        assert "biconditional FAILS" in out
        assert "sqrt(3) is not a root" in out

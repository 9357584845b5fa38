"""명령행 통합 테스트 (파일 입력부터 표준 출력까지)"""
import json

import pytest

from src.app.main import main

PATH3 = "vertices a b c\nedge a b\nedge b c\n"
FREE3 = "vertices a b c\n"
PATH_PLUS_ISOLATED = "vertices a b c d\nedge a b\nedge b c\n"
TWO_EDGES = "vertices a b c d\nedge a b\nedge c d\n"


def run_json(capsys, argv):
    code = main(argv)
    out = capsys.readouterr().out
    return code, json.loads(out) if out.strip() else None


class TestCliques:
    """cliques 명령"""

    def test_path(self, capsys, graph_file):
        code, report = run_json(capsys, ["cliques", graph_file("path3.graph", PATH3)])
        assert code == 0
        assert report["count"] == 6
        assert report["recursive_count"] == 6
        assert report["max_clique_size"] == 2
        assert report["cliques"][4] == ["a", "b"]
        assert report["irreducible"] is False

    def test_parse_error_exit_code(self, capsys, graph_file):
        code = main(["cliques", graph_file("bad.graph", "vertices a\nedge a a\n")])
        assert code == 2
        assert "2번째 줄" in capsys.readouterr().err

    def test_missing_file(self, capsys, tmp_path):
        assert main(["cliques", str(tmp_path / "none.graph")]) == 2

    def test_invalid_utf8_exit_code(self, capsys, tmp_path):
        path = tmp_path / "binary.graph"
        path.write_bytes(b"\xff\xfe")
        assert main(["cliques", str(path)]) == 2
        assert "UTF-8" in capsys.readouterr().err


class TestKTheory:
    """ktheory 명령"""

    def test_path_at_q_one(self, capsys, graph_file):
        code, report = run_json(capsys, ["ktheory", graph_file("path3.graph", PATH3), "--q", "1"])
        assert code == 0
        assert report["rank"] == 6
        assert report["k1"] == 0
        assert report["pairing"] == ["1/1", "1/2", "1/2", "1/2", "1/4", "1/4"]
        assert report["trace_image"] == "1/4"
        assert report["unit_index"] == 0

    def test_per_vertex_q(self, capsys, graph_file):
        path = graph_file("path3.graph", PATH3)
        code, report = run_json(capsys, ["ktheory", path, "--q", "a=1/3,b=1/2,c=1"])
        assert code == 0
        assert report["q"] == {"a": "1/3", "b": "1/2", "c": "1/1"}
        assert report["pairing"][4] == "1/2"

    def test_unknown_vertex_in_q(self, capsys, graph_file):
        path = graph_file("path3.graph", PATH3)
        assert main(["ktheory", path, "--q", "a=1/3,b=1/2,c=1,z=1"]) == 1
        assert "z" in capsys.readouterr().err

    def test_q_out_of_range_is_usage_error(self, capsys, graph_file):
        assert main(["ktheory", graph_file("path3.graph", PATH3), "--q", "3/2"]) == 2

    def test_malformed_q(self, capsys, graph_file):
        assert main(["ktheory", graph_file("path3.graph", PATH3), "--q", "half"]) == 2

    def test_text_format(self, capsys, graph_file):
        code = main(["ktheory", graph_file("path3.graph", PATH3), "--format", "text"])
        out = capsys.readouterr().out
        assert code == 0
        assert "K_0 = Z^6" in out
        assert "pairing: (1/1, 1/2, 1/2, 1/2, 1/4, 1/4)" in out

    def test_output_is_deterministic(self, capsys, graph_file):
        path = graph_file("path3.graph", PATH3)
        main(["ktheory", path, "--q", "1/3"])
        first = capsys.readouterr().out
        main(["ktheory", path, "--q", "1/3"])
        assert capsys.readouterr().out == first


class TestCompare:
    """compare 명령"""

    def test_identical_pairing(self, capsys, graph_file):
        code, report = run_json(capsys, [
            "compare", graph_file("p.graph", PATH_PLUS_ISOLATED), graph_file("e.graph", TWO_EDGES),
        ])
        assert code == 0
        assert report["verdict"] == "Isomorphic"
        assert report["ranks"] == [7, 7]

    def test_rank_mismatch(self, capsys, graph_file):
        code, report = run_json(capsys, [
            "compare", graph_file("f.graph", FREE3), graph_file("p.graph", PATH_PLUS_ISOLATED),
        ])
        assert report["verdict"] == "NotIsomorphic"

    def test_second_parameter(self, capsys, graph_file):
        path = graph_file("f.graph", "vertices a\n")
        code, report = run_json(capsys, ["compare", path, path, "--q", "2/3", "--q-second", "1/4"])
        assert report["verdict"] == "Unknown"


class TestClassify:
    """classify 명령"""

    def test_invariant_isomorphic(self, capsys):
        code, report = run_json(capsys, ["classify", "-n", "3", "--q1", "6/7", "--q2", "5/8"])
        assert code == 0
        assert report["verdict"] == "InvariantIsomorphic_AlgebraOpen"
        assert (report["order1"], report["order2"]) == (13, 13)
        assert report["regime1"] == "Simple"

    def test_regime_mismatch(self, capsys):
        code, report = run_json(capsys, ["classify", "-n", "3", "--q1", "1/2", "--q2", "2/3"])
        assert report["verdict"] == "NotIsomorphic_RegimeMismatch"
        assert report["invariants"][0] is None

    def test_thickness_scan(self, capsys):
        code, report = run_json(capsys, ["classify", "-n", "5", "--q1", "1/3", "--q2", "1/4", "--thickness"])
        assert [t["order"] for t in report["thickness"]] == [3, 4, 5]

    def test_small_rank_is_domain_error(self, capsys):
        assert main(["classify", "-n", "2", "--q1", "1/2", "--q2", "1/3"]) == 1


class TestGrowth:
    """growth 명령"""

    def test_free_product(self, capsys, graph_file):
        code, report = run_json(capsys, ["growth", graph_file("free3.graph", FREE3), "-L", "3"])
        assert code == 0
        assert report["growth"] == [1, 3, 6, 12]

    def test_element_cap_flag(self, capsys, graph_file):
        path = graph_file("free3.graph", FREE3)
        assert main(["growth", path, "-L", "20", "--element-cap", "100"]) == 1

    def test_element_cap_environment(self, capsys, graph_file, monkeypatch):
        monkeypatch.setenv("HECKE_ELEMENT_CAP", "100")
        path = graph_file("free3.graph", FREE3)
        assert main(["growth", path, "-L", "20"]) == 1

    def test_flag_wins_over_environment(self, capsys, graph_file, monkeypatch):
        monkeypatch.setenv("HECKE_ELEMENT_CAP", "100")
        path = graph_file("free3.graph", FREE3)
        assert main(["growth", path, "-L", "8", "--element-cap", "100000"]) == 0

    def test_missing_radius(self, capsys, graph_file):
        assert main(["growth", graph_file("free3.graph", FREE3)]) == 2


class TestVerify:
    """verify 명령"""

    def test_free_product_report(self, capsys, graph_file):
        code, report = run_json(capsys, ["verify", graph_file("free3.graph", FREE3), "--q", "1/4", "-L", "4"])
        assert code == 0
        assert report["passed"] is True
        assert report["relations"]["passed"] is True
        assert len(report["traces"]) == 4
        assert report["series"][-1]["radius"] == 30
        assert report["series"][-1]["t_target"] == "2/5"

    def test_exact_mode(self, capsys, graph_file):
        code, report = run_json(capsys, [
            "verify", graph_file("path3.graph", PATH3), "--q", "4/9", "-L", "4", "--exact",
        ])
        assert code == 0
        relations = report["relations"]
        assert relations["exact"] is True
        assert relations["involution"] == relations["commutation"] == relations["symmetry"] == 0

    def test_exact_mode_rejects_non_squares(self, capsys, graph_file):
        assert main(["verify", graph_file("path3.graph", PATH3), "--q", "1/2", "--exact"]) == 1

    def test_no_series_outside_free_products(self, capsys, graph_file):
        code, report = run_json(capsys, ["verify", graph_file("path3.graph", PATH3), "--q", "1/2", "-L", "3"])
        assert report["series"] == []


class TestUsage:
    """인자 오류"""

    def test_unknown_command(self, capsys):
        assert main(["frobnicate"]) == 2

    def test_no_command(self, capsys):
        assert main([]) == 2

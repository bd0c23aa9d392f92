"""Reports, cache, and the command-line interface."""

import json

from brieskorn import build_analysis, render_json, render_text
from brieskorn.cli import main
from brieskorn.matrices import render_matrix_text
from brieskorn.report import cached_analysis
from conftest import REFERENCE_QX


class TestReport:
    def test_sections_without_p(self):
        report = build_analysis(2, 3, 5)
        assert report["seifert"]["r_invariant"] == 1
        assert report["diagonalization"]["found"] is False
        assert "equivariant" not in report
        assert any("does not bound a smooth contractible"
                   in c for c in report["conclusions"])

    def test_full_report(self):
        report = build_analysis(3, 16, 113, 5)
        assert report["obstruction"]["status"] == "infeasible"
        ll = report["locally_linear"]
        assert ll["rho_quotient"] == ["0", "7/5", "3/5", "3/5", "7/5"]
        assert [c["rho_match"] for c in ll["candidates"]] == [True]
        assert any("locally linear action with exactly one fixed point"
                   in c for c in report["conclusions"])
        assert any("does not extend to a smooth action"
                   in c for c in report["conclusions"])

    def test_json_roundtrip_and_recompute(self):
        report = build_analysis(3, 16, 113, 5)
        loaded = json.loads(render_json(report))
        assert loaded == report
        assert loaded == build_analysis(3, 16, 113, 5)

    def test_deterministic_rendering(self):
        a = build_analysis(2, 3, 7, 5)
        b = build_analysis(2, 3, 7, 5)
        assert render_json(a) == render_json(b)
        assert render_text(a) == render_text(b)

    def test_no_floats_anywhere(self):
        def walk(x):
            if isinstance(x, float):
                raise AssertionError("float in report")
            if isinstance(x, dict):
                for v in x.values():
                    walk(v)
            if isinstance(x, list):
                for v in x:
                    walk(v)
        walk(build_analysis(3, 16, 113, 5))


class TestCache:
    def test_cache_never_changes_verdict(self, tmp_cache):
        fresh = cached_analysis(3, 16, 113, 5)
        assert tmp_cache.exists()
        cached = cached_analysis(3, 16, 113, 5)
        uncached = cached_analysis(3, 16, 113, 5, use_cache=False)
        assert fresh == cached == uncached

    def test_cache_disabled_writes_nothing(self, tmp_cache):
        cached_analysis(2, 3, 7, use_cache=False)
        assert not tmp_cache.exists()


class TestCLI:
    def test_analyze_text(self, tmp_cache, capsys):
        assert main(["analyze", "3", "16", "113", "--p", "5"]) == 0
        out = capsys.readouterr().out
        assert "obstruction: infeasible" in out
        assert "rho match: True" in out

    def test_analyze_json_file(self, tmp_cache, tmp_path, capsys):
        path = tmp_path / "report.json"
        assert main(["analyze", "3", "16", "113", "--p", "5",
                     "--json", str(path)]) == 0
        data = json.loads(path.read_text())
        assert data["obstruction"]["status"] == "infeasible"
        assert data == build_analysis(3, 16, 113, 5)

    def test_analyze_rejects_dividing_p(self, tmp_cache, capsys):
        assert main(["analyze", "3", "16", "113", "--p", "3"]) == 1
        assert "not free" in capsys.readouterr().err

    def test_analyze_rejects_bad_triple(self, tmp_cache, capsys):
        assert main(["analyze", "2", "4", "5"]) == 1

    def test_analyze_rejects_even_p(self, tmp_cache, capsys):
        assert main(["analyze", "3", "5", "7", "--p", "2"]) == 1

    def test_family_batch(self, tmp_cache, tmp_path):
        path = tmp_path / "family.json"
        assert main(["family", "stern", "--r", "3", "--s-range", "5..15",
                     "--p", "5", "--json", str(path)]) == 0
        rows = json.loads(path.read_text())["rows"]
        by_s = {row["s"]: row for row in rows}
        for s in (5, 10, 15):
            assert by_s[s]["obstruction"] == "infeasible"
            assert any(c["rho_match"]
                       for c in by_s[s]["locally_linear_candidates"])
        assert all(row["delta"] == -1 for row in rows if "delta" in row)

    def test_family_empty_range(self, tmp_cache, capsys):
        assert main(["family", "casson-harer", "--r", "3",
                     "--s-range", "5..4"]) == 0
        assert capsys.readouterr().out == ""

    def test_family_casson_harer_text(self, tmp_cache, capsys):
        assert main(["family", "casson-harer", "--r", "3",
                     "--s-range", "1..5"]) == 0
        out = capsys.readouterr().out
        assert out.count("delta=-1") == 5

    def test_diagonalize_reference_matrix(self, tmp_path, capsys):
        from brieskorn import signed_permutation_equal
        from brieskorn.matrices import parse_matrix_text
        from conftest import REFERENCE_CINV
        path = tmp_path / "qx.txt"
        path.write_text(render_matrix_text(REFERENCE_QX) + "\n")
        assert main(["diagonalize", "--matrix", str(path)]) == 0
        out = capsys.readouterr().out
        assert "diagonalization found" in out
        printed_c_inv = parse_matrix_text(out.split("C_inv =\n", 1)[1])
        assert signed_permutation_equal(printed_c_inv, REFERENCE_CINV,
                                        axis="row")

    def test_diagonalize_e8_certificate(self, tmp_path, capsys):
        from brieskorn import (BrieskornTriple, canonical_resolution,
                               intersection_matrix, seifert_invariants)
        g = canonical_resolution(seifert_invariants(BrieskornTriple.of(2, 3, 5)))
        path = tmp_path / "e8.txt"
        path.write_text(render_matrix_text(intersection_matrix(g)) + "\n")
        assert main(["diagonalize", "--matrix", str(path)]) == 0
        assert "0 root pairs < 8 required" in capsys.readouterr().out

    def test_diagonalize_malformed_file(self, tmp_path, capsys):
        path = tmp_path / "bad.txt"
        path.write_text("1 2\n3\n")
        assert main(["diagonalize", "--matrix", str(path)]) == 1

    def test_rho_command(self, capsys):
        assert main(["rho", "--lens", "5", "3", "8"]) == 0
        out = capsys.readouterr().out
        assert "rho(0) = 0" in out and "rho(1) = 7/5" in out

    def test_eta_command(self, tmp_cache, capsys):
        assert main(["eta", "3", "16", "113", "--p", "5"]) == 0
        out = capsys.readouterr().out
        assert out.count("eta(zeta^") == 4

    def test_graph_formats(self, capsys):
        assert main(["graph", "3", "16", "113", "--format", "json"]) == 0
        data = json.loads(capsys.readouterr().out)
        assert len(data["weights"]) == 11
        assert main(["graph", "2", "3", "5", "--format", "dot"]) == 0
        assert "graph plumbing" in capsys.readouterr().out
        assert main(["graph", "2", "3", "5", "--format", "tgf"]) == 0
        assert "#" in capsys.readouterr().out

    def test_unknown_flag_is_input_error(self, capsys):
        assert main(["analyze", "3", "16", "113", "--bogus"]) == 1

    def test_output_bit_stable(self, tmp_cache, capsys):
        main(["analyze", "2", "3", "7", "--p", "5", "--no-cache"])
        first = capsys.readouterr().out
        main(["analyze", "2", "3", "7", "--p", "5", "--no-cache"])
        assert capsys.readouterr().out == first

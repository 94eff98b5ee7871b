import io
import json
import sys

import pytest

from degbasis.cli import main


def run(argv, stdin_text="", capsys=None, monkeypatch=None):
    if monkeypatch is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin_text))
    code = main(argv)
    out = capsys.readouterr() if capsys is not None else None
    return code, out


def write(tmp_path, name, text):
    p = tmp_path / name
    p.write_text(text)
    return str(p)


class TestCheck:
    def test_graphic_sequence_exits_zero(self, tmp_path, capsys):
        path = write(tmp_path, "in.json", '{"degrees": [2, 2, 2]}\n')
        code, out = run(["check", "--in", path], capsys=capsys)
        assert code == 0
        assert json.loads(out.out) == {"degrees": [2, 2, 2], "graphic": True}

    def test_non_graphic_sequence_exits_two(self, tmp_path, capsys):
        path = write(tmp_path, "in.json", '{"degrees": [3, 1, 1]}\n')
        code, out = run(["check", "--in", path], capsys=capsys)
        assert code == 2
        got = json.loads(out.out)
        assert got["graphic"] is False
        assert "reason" in got

    def test_json_array_input(self, tmp_path, capsys):
        path = write(
            tmp_path, "in.json",
            '[{"degrees": [1, 1]}, {"k": 2, "counts": [0, 0, 4]}]',
        )
        code, out = run(["check", "--in", path], capsys=capsys)
        assert code == 0
        lines = out.out.strip().split("\n")
        assert len(lines) == 2
        assert all(json.loads(line)["graphic"] for line in lines)

    def test_csv_round_trip(self, tmp_path, capsys):
        path = write(tmp_path, "in.csv", "2,2,2\n3,3,1,1\n\n")
        code, out = run(["check", "--format", "csv", "--in", path], capsys=capsys)
        assert code == 2
        assert out.out == "true\nfalse\ntrue\n"

    def test_blank_csv_line_is_the_empty_sequence(self, tmp_path, capsys):
        path = write(tmp_path, "in.csv", "\n")
        code, out = run(["check", "--format", "csv", "--in", path], capsys=capsys)
        assert code == 0
        assert out.out == "true\n"

    def test_bipartite_family_flag(self, tmp_path, capsys):
        path = write(tmp_path, "in.json", '{"degrees": [2, 2, 2]}\n')
        code, out = run(["check", "--family", "bipartite", "--in", path], capsys=capsys)
        assert code == 2
        assert json.loads(out.out)["graphic"] is False

    def test_stdin_default(self, capsys, monkeypatch):
        code, out = run(
            ["check"], stdin_text='{"degrees": [1, 1]}\n',
            capsys=capsys, monkeypatch=monkeypatch,
        )
        assert code == 0
        assert json.loads(out.out)["graphic"] is True

    def test_output_file(self, tmp_path, capsys):
        inp = write(tmp_path, "in.json", '{"degrees": [1, 1]}\n')
        outp = str(tmp_path / "out.json")
        code, _ = run(["check", "--in", inp, "--out", outp], capsys=capsys)
        assert code == 0
        assert json.loads(open(outp).read())["graphic"] is True


class TestRealize:
    def test_realization_has_exact_degrees(self, tmp_path, capsys):
        path = write(tmp_path, "in.json", '{"degrees": [2, 2, 2]}\n')
        code, out = run(["realize", "--in", path], capsys=capsys)
        assert code == 0
        got = json.loads(out.out)
        assert got == {"n": 3, "edges": [[0, 1], [0, 2], [1, 2]]}

    def test_non_graphic_reports_error(self, tmp_path, capsys):
        path = write(tmp_path, "in.json", '{"degrees": [3, 1, 1]}\n')
        code, out = run(["realize", "--in", path], capsys=capsys)
        assert code == 2
        assert json.loads(out.out)["error"] == "not-realizable"

    def test_bipartite_realization_carries_sides(self, tmp_path, capsys):
        path = write(tmp_path, "in.json", '{"k": 2, "counts": [0, 0, 4]}\n')
        code, out = run(["realize", "--family", "bipartite", "--in", path], capsys=capsys)
        assert code == 0
        assert json.loads(out.out)["sides"] == [0, 0, 1, 1]

    def test_csv_is_a_usage_error(self, tmp_path, capsys):
        path = write(tmp_path, "in.csv", "2,2,2\n")
        code, _ = run(["realize", "--format", "csv", "--in", path], capsys=capsys)
        assert code == 1


class TestBasis:
    def test_k1_basis_is_frozen(self, capsys):
        code, out = run(["basis", "-k", "1"], capsys=capsys)
        assert code == 0
        got = json.loads(out.out)
        assert got["family"] == "graph"
        assert got["modulus"] == [1, 2]
        assert [e["counts"] for e in got["elements"]] == [[0, 0], [1, 0], [0, 2]]

    def test_deterministic_output(self, capsys):
        code1, out1 = run(["basis", "-k", "2"], capsys=capsys)
        code2, out2 = run(["basis", "-k", "2"], capsys=capsys)
        assert code1 == code2 == 0
        assert out1.out == out2.out

    def test_bipartite_modulus(self, capsys):
        code, out = run(["basis", "-k", "2", "--family", "bipartite"], capsys=capsys)
        assert code == 0
        assert json.loads(out.out)["modulus"] == [1, 2, 4]


class TestDecompose:
    def test_frozen_decomposition(self, tmp_path, capsys):
        path = write(tmp_path, "in.json", '{"k": 1, "counts": [3, 4]}\n')
        code, out = run(["decompose", "-k", "1", "--in", path], capsys=capsys)
        assert code == 0
        got = json.loads(out.out)
        assert got["decomposition"]["base"] == {"k": 1, "counts": [0, 2]}
        assert got["decomposition"]["coefficients"] == [3, 1]
        assert got["max_component"] == 2

    def test_csv_output(self, tmp_path, capsys):
        path = write(tmp_path, "in.csv", "1,1,1,1,0,0,0\n")
        code, out = run(
            ["decompose", "-k", "1", "--format", "csv", "--in", path], capsys=capsys
        )
        assert code == 0
        assert out.out == "0 2,3 1\n"

    def test_degree_above_cap_is_an_item_error(self, tmp_path, capsys):
        path = write(tmp_path, "in.json", '{"degrees": [4, 4, 4, 4]}\n')
        code, out = run(["decompose", "-k", "3", "--in", path], capsys=capsys)
        assert code == 2
        assert json.loads(out.out)["error"] == "DegreeExceedsCap"

    def test_non_member_is_an_item_error(self, tmp_path, capsys):
        path = write(tmp_path, "in.json", '{"degrees": [1, 1, 1]}\n')
        code, out = run(["decompose", "-k", "1", "--in", path], capsys=capsys)
        assert code == 2
        assert json.loads(out.out)["error"] == "NotMember"

    def test_realization_matches_input_counts(self, tmp_path, capsys):
        path = write(tmp_path, "in.json", '{"k": 2, "counts": [2, 4, 5]}\n')
        code, out = run(["decompose", "-k", "2", "--in", path], capsys=capsys)
        assert code == 0
        got = json.loads(out.out)
        degs = []
        for comp in got["realization"]["components"]:
            n, edges = comp["n"], comp["edges"]
            cnt = [0] * n
            for u, v in edges:
                cnt[u] += 1
                cnt[v] += 1
            degs.extend(cnt)
        counts = [degs.count(d) for d in range(3)]
        assert counts == [2, 4, 5]


class TestVerify:
    def test_graph_verify_is_complete(self, capsys):
        code, out = run(["verify", "-k", "2"], capsys=capsys)
        assert code == 0
        got = json.loads(out.out)
        assert got["oracle_agreement"]["disagreements"] == []
        assert got["basis"]["complete"] is True
        assert got["basis"]["members_checked"] == 2797

    def test_verify_bound_flag(self, capsys):
        code, out = run(["verify", "-k", "1", "--verify-bound", "50"], capsys=capsys)
        assert code == 0
        got = json.loads(out.out)
        assert got["basis"]["checked_up_to"] == 50
        assert got["basis"]["members_checked"] == 676


class TestWqoPair:
    def test_true_pair_exits_zero(self, tmp_path, capsys):
        path = write(
            tmp_path, "in.json", '[{"degrees": [1, 1]}, {"degrees": [2, 1, 1]}]'
        )
        code, out = run(["wqo-pair", "--in", path], capsys=capsys)
        assert code == 0
        got = json.loads(out.out)
        assert got["result"] is True
        assert got["witness"]["kind"] == "embedding"

    def test_false_pair_exits_two(self, tmp_path, capsys):
        path = write(
            tmp_path, "in.json",
            '[{"degrees": [3, 3, 3, 3]}, {"degrees": [3, 3, 3, 3, 3, 3]}]',
        )
        code, out = run(["wqo-pair", "--in", path], capsys=capsys)
        assert code == 2
        assert json.loads(out.out)["result"] is False

    def test_budget_exhaustion_exits_three(self, tmp_path, capsys):
        path = write(
            tmp_path, "in.json",
            '[{"degrees": [3,3,3,3,3,3,3,3]}, {"degrees": [3,3,3,3,3,3,3,3,3,3]}]',
        )
        code, out = run(["wqo-pair", "--budget", "50", "--in", path], capsys=capsys)
        assert code == 3
        assert json.loads(out.out)["result"] == "budget-exceeded"

    def test_wrong_arity_is_usage_error(self, tmp_path, capsys):
        path = write(tmp_path, "in.json", '{"degrees": [1, 1]}\n')
        code, _ = run(["wqo-pair", "--in", path], capsys=capsys)
        assert code == 1


class TestProbe:
    def test_default_probe_finds_the_counterexample(self, capsys):
        code, out = run(["probe-cor3"], capsys=capsys)
        assert code == 2
        got = json.loads(out.out)
        assert got["pointwise"] == "less-or-equal"
        assert got["rao"]["result"] is False
        assert got["claim_applicable"] is True
        assert got["claim_holds"] is False

    def test_holding_pair_exits_zero(self, tmp_path, capsys):
        path = write(
            tmp_path, "in.json", '[{"degrees": [1, 1]}, {"degrees": [1, 1, 0]}]'
        )
        code, out = run(["probe-cor3", "--in", path], capsys=capsys)
        assert code == 0
        assert json.loads(out.out)["claim_holds"] is True


class TestErrors:
    def test_unknown_subcommand_exits_one(self, capsys):
        assert main(["frobnicate"]) == 1

    def test_missing_input_file_exits_one(self, capsys):
        code, out = run(["check", "--in", "/does/not/exist.json"], capsys=capsys)
        assert code == 1
        assert "cannot read" in out.err

    def test_malformed_json_reports_line(self, tmp_path, capsys):
        path = write(tmp_path, "in.json", '{"degrees": [1, 1]}\n{oops}\n')
        code, out = run(["check", "--in", path], capsys=capsys)
        assert code == 1
        assert "line 2" in out.err

    def test_malformed_csv_reports_line(self, tmp_path, capsys):
        path = write(tmp_path, "in.csv", "1,1\n1,x\n")
        code, out = run(["check", "--format", "csv", "--in", path], capsys=capsys)
        assert code == 1
        assert "line 2" in out.err

    def test_record_without_known_fields_is_rejected(self, tmp_path, capsys):
        path = write(tmp_path, "in.json", '{"nope": []}\n')
        code, out = run(["check", "--in", path], capsys=capsys)
        assert code == 1
        assert "degrees" in out.err

    def test_structured_subcommands_reject_csv(self, capsys):
        for cmd in ["basis", "verify", "wqo-pair", "probe-cor3"]:
            assert main([cmd, "--format", "csv"]) == 1

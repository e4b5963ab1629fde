import io
import json

import networkx as nx
import pytest

from wcbetti.cli import EXIT_GUARD, EXIT_INPUT, EXIT_OK, EXIT_VIOLATION, main
from wcbetti.graph import path_graph
from wcbetti.graphio import format_edge_list, to_graph6

from conftest import from_networkx


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def run_json(*argv):
    code, text = run(*argv, "--format", "json")
    return code, [json.loads(line) for line in text.splitlines()]


@pytest.fixture
def square(tmp_path):
    p = tmp_path / "square.txt"
    p.write_text("n 4\n1 2\n2 3\n3 4\n4 1\n")
    return str(p)


@pytest.fixture
def tree8(tmp_path):
    T = nx.random_labeled_tree(8, seed=8) if hasattr(nx, "random_labeled_tree") else nx.random_tree(8, seed=8)
    p = tmp_path / "tree8.txt"
    p.write_text(format_edge_list(from_networkx(T)))
    return str(p)


class TestBetti:
    def test_single_edge(self):
        code, [rec] = run_json("betti", "--builtin", "k2")
        assert code == EXIT_OK
        assert rec["betti"] == [{"i": 1, "sigma": [1, 2], "dim": 1}]
        assert rec["graded"] == [{"i": 1, "j": 2, "dim": 1}]
        assert set(rec) == {"n", "field", "betti", "graded", "pdim", "reg"}

    def test_katzman_two_fields(self):
        code, recs = run_json("betti", "--builtin", "katzman", "--field", "q", "--field", "fp:2")
        assert code == EXIT_OK
        assert [(r["field"], r["pdim"], r["reg"]) for r in recs] == [("Q", 8, 2), ("F2", 9, 3)]

    def test_square_file(self, square):
        code, [rec] = run_json("betti", "--edges", square)
        assert (code, rec["pdim"], rec["reg"]) == (EXIT_OK, 3, 1)
        assert all(r["sigma"] == sorted(r["sigma"]) for r in rec["betti"])

    def test_table_format(self):
        code, text = run("betti", "--builtin", "c4")
        assert code == EXIT_OK and "pdim 3  reg 1" in text

    def test_deterministic(self):
        assert run("betti", "--builtin", "katzman", "--field", "fp:3") == run("betti", "--builtin", "katzman",
                                                                               "--field", "fp:3")


class TestInvariants:
    def test_square(self):
        code, [rec] = run_json("invariants", "--builtin", "c4")
        assert code == EXIT_OK
        assert (rec["weakly_chordal"], rec["imn"], rec["d"], rec["big_height"]) == (True, 1, 3, 2)
        assert rec["fields"]["Q"] == {"pdim": 3, "reg": 1}
        assert rec["identities_hold"] is True

    def test_pentagon(self):
        code, [rec] = run_json("invariants", "--builtin", "c5")
        assert code == EXIT_OK and rec["weakly_chordal"] is False and rec["identities_hold"] is None

    def test_edge(self):
        _, [rec] = run_json("invariants", "--builtin", "k2")
        assert (rec["imn"], rec["d"], rec["big_height"]) == (1, 1, 1)
        assert rec["fields"]["Q"] == {"pdim": 1, "reg": 1}


class TestCertificate:
    def test_square_one_block(self):
        code, [rec] = run_json("certificate", "--builtin", "c4", "--sigma", "1,2,3,4", "--r", "1")
        assert code == EXIT_OK
        assert rec["fields"]["Q"]["beta"] == 1
        assert rec["family"]["blocks"][0]["X"] == [1, 3] and rec["family"]["blocks"][0]["Y"] == [2, 4]
        assert rec["fields"]["Q"]["extracted"] is not None

    def test_square_two_blocks(self):
        code, [rec] = run_json("certificate", "--builtin", "c4", "--sigma", "1,2,3,4", "--r", "2")
        assert code == EXIT_OK and rec["family"] is None and rec["fields"]["Q"]["beta"] == 0

    def test_pentagon(self):
        code, text = run("certificate", "--builtin", "c5", "--r", "2")
        assert code == EXIT_OK
        assert "family: none" in text and "Q: beta_3,sigma = 1" in text
        assert "hypothesis not met: graph not weakly chordal" in text

    @pytest.mark.parametrize("argv", [["--sigma", "1,x", "--r", "1"], ["--sigma", "1,9", "--r", "1"], ["--r", "0"]])
    def test_bad_arguments(self, argv):
        assert run("certificate", "--builtin", "c4", *argv)[0] == EXIT_INPUT


class TestVerify:
    def test_square(self):
        code, text = run("verify", "--builtin", "c4")
        assert code == EXIT_OK and "0 sufficiency violations, 0 necessity violations" in text

    def test_pentagon(self):
        code, [rec] = run_json("verify", "--builtin", "c5")
        v = rec["fields"]["Q"]
        assert v["sufficiency_violations"] == []
        assert v["necessity_violations"] == [{"sigma": [1, 2, 3, 4, 5], "r": 2}]
        assert code == EXIT_OK

    def test_tree_two_fields(self, tree8):
        code, [rec] = run_json("verify", "--edges", tree8, "--field", "q", "--field", "fp:3")
        assert code == EXIT_OK and rec["weakly_chordal"] and rec["tables_identical"]
        assert all(v["ok"] and not v["necessity_violations"] for v in rec["fields"].values())


class TestInputs:
    def test_graph6(self):
        g6 = to_graph6(path_graph(4))
        assert run("show", "--g6", g6) == (EXIT_OK, "n 4\n1 2\n2 3\n3 4\n")

    def test_show_round_trip(self, square):
        code, text = run("show", "--edges", square)
        assert text == "n 4\n1 2\n1 4\n2 3\n3 4\n"

    def test_parse_error(self, tmp_path):
        p = tmp_path / "bad.txt"
        p.write_text("n 3\n1 5\n")
        assert run("betti", "--edges", str(p))[0] == EXIT_INPUT
        assert run("betti", "--g6", "A")[0] == EXIT_INPUT
        assert run("betti", "--edges", str(tmp_path / "missing.txt"))[0] == EXIT_INPUT

    def test_bad_field_and_builtin(self):
        assert run("betti", "--builtin", "k2", "--field", "fp:4")[0] == EXIT_INPUT
        assert run("betti", "--builtin", "nope")[0] == EXIT_INPUT

    def test_two_sources_rejected(self):
        with pytest.raises(SystemExit) as exc:
            run("betti", "--builtin", "k2", "--g6", "A_")
        assert exc.value.code == EXIT_INPUT

    def test_guard(self, tmp_path):
        p = tmp_path / "p17.txt"
        p.write_text(format_edge_list(path_graph(17)))
        assert run("betti", "--edges", str(p))[0] == EXIT_GUARD
        assert run("betti", "--edges", str(p), "--max-n", "4")[0] == EXIT_GUARD


def test_violation_exit_code(monkeypatch):
    import wcbetti.cli as cli
    from wcbetti.certificates import EquivalenceReport

    real = cli.cert.verify_equivalence

    def broken(G, f, max_n=16):
        rep = real(G, f, max_n=max_n)
        return EquivalenceReport(rep.weakly_chordal, rep.field, rep.cells, [((1, 2), 1)],
                                 rep.necessity_violations, rep.nonzero, rep.feasible)

    monkeypatch.setattr(cli.cert, "verify_equivalence", broken)
    code, text = run("verify", "--builtin", "k2")
    assert code == EXIT_VIOLATION and "sufficiency: sigma=[1, 2] r=1" in text

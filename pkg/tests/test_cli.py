import pytest

from conftest import complete, cycle
from permls.cli import main
from permls.dimacs import read_graph, read_vertex_set, write_graph, write_vertex_set
from permls.graph_core import Graph, certify_separability, is_vertex_cover, subdivide_twice


def report(capsys) -> dict[str, str]:
    out = capsys.readouterr().out
    pairs = {}
    for line in out.splitlines():
        key, _, value = line.partition(" ")
        pairs.setdefault(key, value)
    return pairs


@pytest.fixture
def files(tmp_path):
    def make(g, cover=None, name="inst"):
        gp = tmp_path / f"{name}.gr"
        write_graph(gp, g)
        if cover is None:
            return str(gp)
        cp = tmp_path / f"{name}.cover"
        write_vertex_set(cp, cover)
        return str(gp), str(cp)
    return make


class TestSolve:
    def test_strict_single_edge(self, files, capsys, tmp_path):
        gp, cp = files(Graph(2, [(0, 1)]), {0, 1})
        out = tmp_path / "new.cover"
        assert main(["solve", "--graph", gp, "--cover", cp, "-k", "1", "--engine", "strict",
                     "--output", str(out)]) == 0
        r = report(capsys)
        assert r["status"] == "improved" and r["new_cover_size"] == "1"
        assert len(read_vertex_set(out)[0]) == 1

    def test_permissive_triangle_optimum(self, files, capsys):
        gp, cp = files(complete(3), {0, 1})
        assert main(["solve", "--graph", gp, "--cover", cp, "-k", "2", "--beta", "2"]) == 1
        r = report(capsys)
        assert r["status"] == "no-improvement" and r["negative"] == "exact"
        assert r["q"] == "6" and r["mode"] == "universal"

    def test_non_cover(self, files, capsys):
        gp, cp = files(complete(3), {0})
        assert main(["solve", "--graph", gp, "--cover", cp, "-k", "2"]) == 2
        assert "cover check failed" in report(capsys)["error"]

    def test_not_separable(self, files, capsys):
        gp, cp = files(complete(5), {0, 1, 2, 3})
        assert main(["solve", "--graph", gp, "--cover", cp, "-k", "2", "--beta", "2"]) == 2
        assert "separable" in report(capsys)["error"]

    def test_missing_file(self, tmp_path, capsys):
        assert main(["solve", "--graph", str(tmp_path / "nope.gr"), "--cover", "x", "-k", "1"]) == 2
        assert "not found" in report(capsys)["error"]

    def test_malformed_graph(self, tmp_path, capsys):
        bad = tmp_path / "bad.gr"
        bad.write_text("p edge 2 1\ne 1 9\n")
        assert main(["solve", "--graph", str(bad), "--cover", str(bad), "-k", "1"]) == 2
        assert "malformed" in report(capsys)["error"]

    def test_randomized_report_is_replayable(self, files, capsys):
        gp, cp = files(cycle(9), {0, 1, 3, 4, 6, 7})
        args = ["solve", "--graph", gp, "--cover", cp, "-k", "3", "--beta", "2",
                "--mode", "randomized", "--seed", "4"]
        code = main(args)
        first = report(capsys)
        assert main(args) == code
        second = report(capsys)
        first.pop("wall_ms"), second.pop("wall_ms")
        assert first == second and first["seed"] == "4" and first["mode"] == "randomized"

    def test_iterate_reaches_local_optimum(self, files, capsys, tmp_path):
        g = cycle(12)
        gp, cp = files(g, set(range(12)))
        out = tmp_path / "final.cover"
        assert main(["solve", "--graph", gp, "--cover", cp, "-k", "2", "--beta", "2",
                     "--iterate", "--output", str(out)]) == 0
        r = report(capsys)
        final = read_vertex_set(out)[0]
        assert is_vertex_cover(g, final) and int(r["steps"]) >= 1
        assert r["final_negative"] == "exact"

    def test_auto_beta(self, files, capsys):
        gp, cp = files(Graph(2, [(0, 1)]), {0, 1})
        assert main(["solve", "--graph", gp, "--cover", cp, "-k", "1"]) == 0
        assert report(capsys)["beta"] == "1"


class TestReduce:
    def test_clique_to_hallset(self, files, capsys, tmp_path):
        gp = files(complete(5))
        prefix = tmp_path / "out" / "k5"
        assert main(["reduce", "clique-to-hallset", "--graph", gp, "-k", "4", "--out", str(prefix)]) == 0
        r = report(capsys)
        assert r["k_prime"] == "6" and r["t"] == "1"
        g, params = read_graph(f"{prefix}.gr")
        assert params["k_prime"] == "6" and g.n == 16
        assert len(read_vertex_set(f"{prefix}.a", g.n)[0]) == 10

    def test_gate(self, files, capsys, tmp_path):
        gp = files(complete(5))
        assert main(["reduce", "clique-to-hallset", "--graph", gp, "-k", "3",
                     "--out", str(tmp_path / "x")]) == 2
        assert "k >= 4" in report(capsys)["error"]

    def test_two_subdivided(self, files, capsys, tmp_path):
        gp = files(complete(5))
        prefix = tmp_path / "k5s"
        assert main(["reduce", "clique-to-hallset-2sub", "--graph", gp, "-k", "4", "--out", str(prefix)]) == 0
        assert report(capsys)["k_prime"] == "24"

    def test_hallset_to_lsvc(self, files, capsys, tmp_path):
        g = Graph(4, [(0, 2), (0, 3), (1, 2), (1, 3)])
        gp = files(g)
        a = tmp_path / "a.set"
        write_vertex_set(a, {0, 1})
        prefix = tmp_path / "lsvc"
        assert main(["reduce", "hallset-to-lsvc", "--graph", gp, "-k", "2", "--a-side", str(a),
                     "--out", str(prefix)]) == 0
        r = report(capsys)
        assert r["k_prime"] == "3"
        assert read_graph(f"{prefix}.gr")[1]["k_prime"] == "3"
        assert read_vertex_set(f"{prefix}.cover")[0] == {0, 1}

    def test_subdivide_triangle(self, files, capsys, tmp_path):
        prefix = tmp_path / "tri"
        assert main(["reduce", "subdivide", "--graph", files(complete(3)), "--out", str(prefix)]) == 0
        r = report(capsys)
        assert r["cover_shift"] == "3"
        g, _ = read_graph(f"{prefix}.gr")
        assert g == subdivide_twice(complete(3)) and g.n == 9

    def test_round_trip_is_byte_stable(self, files, capsys, tmp_path):
        prefix = tmp_path / "c5"
        main(["reduce", "clique-to-hallset", "--graph", files(cycle(5)), "-k", "4", "--out", str(prefix)])
        text = (tmp_path / "c5.gr").read_text()
        g, params = read_graph(tmp_path / "c5.gr")
        write_graph(tmp_path / "again.gr", g, params)
        assert (tmp_path / "again.gr").read_text() == text


class TestGen:
    def test_random(self, capsys, tmp_path):
        prefix = tmp_path / "r"
        assert main(["gen", "random", "--n", "10", "--p", "0.4", "--seed", "3", "--out", str(prefix)]) == 0
        g, _ = read_graph(f"{prefix}.gr")
        assert is_vertex_cover(g, read_vertex_set(f"{prefix}.cover")[0])

    def test_subdivided(self, capsys, tmp_path):
        prefix = tmp_path / "s"
        assert main(["gen", "subdivided", "--n", "8", "--m", "10", "--out", str(prefix)]) == 0
        g, _ = read_graph(f"{prefix}.gr")
        assert g.n == 28
        certify_separability(g, 2)
        assert is_vertex_cover(g, read_vertex_set(f"{prefix}.cover")[0])


class TestCheck:
    def test_separability_two_subdivided(self, files, capsys):
        gp = files(subdivide_twice(complete(5)))
        assert main(["check", "separability", "--graph", gp, "--beta", "2"]) == 0
        r = report(capsys)
        assert r["result"] == "pass" and r["two_subdivided"] == "yes"

    def test_separability_fail(self, files, capsys):
        assert main(["check", "separability", "--graph", files(complete(5)), "--beta", "2"]) == 1

    def test_cover_fail(self, files, capsys):
        gp, cp = files(complete(3), {0})
        assert main(["check", "cover", "--graph", gp, "--cover", cp]) == 1
        r = report(capsys)
        assert r["result"] == "fail" and "uncovered" in r["violation"]

    def test_structural_witness_single_edge(self, files, capsys, tmp_path):
        gp, cp = files(Graph(2, [(0, 1)]), {0, 1})
        star = tmp_path / "star.set"
        write_vertex_set(star, {0})
        assert main(["check", "structural-witness", "--graph", gp, "--cover", cp,
                     "--set", str(star), "-k", "1"]) == 0

    def test_structural_witness_fail(self, files, capsys, tmp_path):
        gp, cp = files(Graph(2, [(0, 1)]), {0, 1})
        star = tmp_path / "star.set"
        write_vertex_set(star, {0, 1})
        assert main(["check", "structural-witness", "--graph", gp, "--cover", cp,
                     "--set", str(star), "-k", "2"]) == 1
        assert "independent" in report(capsys)["violation"]

    def test_hall_witness(self, files, capsys, tmp_path):
        g = Graph(3, [(0, 2), (1, 2)])
        gp = files(g)
        a = tmp_path / "a.set"
        write_vertex_set(a, {0, 1})
        assert main(["check", "hall-witness", "--graph", gp, "--a-side", str(a), "--set", str(a)]) == 0
        w = tmp_path / "w.set"
        write_vertex_set(w, {0})
        assert main(["check", "hall-witness", "--graph", gp, "--a-side", str(a), "--set", str(w)]) == 1

    def test_missing_flag(self, files, capsys):
        assert main(["check", "cover", "--graph", files(complete(3))]) == 2

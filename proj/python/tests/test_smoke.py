import math
import os
import pathlib

import pytest

import bqalg

DATA = pathlib.Path(os.environ.get("BQALG_DATA", pathlib.Path(__file__).parents[2] / "data"))


def example():
    q = bqalg.Quiver(3)
    for arrow in [("a", 1, 2), ("b", 2, 3), ("c", 3, 1), ("d", 2, 1), ("e", 3, 2), ("f", 1, 3)]:
        q.add_arrow(*arrow)
    return q


def linear(n):
    q = bqalg.Quiver(n)
    for i in range(1, n):
        q.add_arrow(f"a{i}", i, i + 1)
    return q


def test_example_global_dimensions():
    q = example()
    ideal = bqalg.build_I(q)
    assert sorted(ideal) == sorted([["a", "d"], ["f", "c"], ["f", "e"], ["b", "c"], ["b", "e"]])
    assert bqalg.gldim(bqalg.Algebra(q, ideal)) == 2
    prime = bqalg.Algebra(q, bqalg.build_Iprime(q, 3))
    assert ["a", "b"] in prime.relations
    assert bqalg.gldim(prime) == 3
    assert bqalg.is_strongly_qh(prime)


def test_linear_quiver_pdims():
    for n in range(2, 7):
        q = linear(n)
        rels = [[f"a{i}", f"a{i + 1}"] for i in range(1, n - 1)]
        a = bqalg.Algebra(q, rels)
        assert bqalg.simple_pdims(a) == [n - i for i in range(1, n + 1)]


def test_loop_is_infinite():
    q = bqalg.Quiver(1)
    q.add_arrow("a", 1, 1)
    a = bqalg.Algebra(q, [["a", "a", "a"]])
    assert a.dimension == 3
    assert math.isinf(bqalg.gldim(a))
    with pytest.raises(bqalg.InfiniteResolutionError):
        bqalg.resolve(a, "S:1")
    truncated = bqalg.resolve(a, "S:1", max_deg=3)
    assert not truncated["complete"]
    assert truncated["betti"] == [[1]] * 4
    assert not bqalg.gldim2_exists(q)


def test_engines_agree():
    q = example()
    a = bqalg.Algebra(q, bqalg.build_Iprime(q, 3))
    for module in ["S:1", "S:2", "S:3", "Delta:1", "Delta:2", "Gamma:1", "Gamma:2"]:
        chain = bqalg.resolve(a, module, max_deg=6)
        for p in (2, 101):
            assert bqalg.matrix_resolve(a, module, 6, p) == chain


def test_planner_certificate():
    q = example()
    cert = bqalg.achieve_gldim(q, 3)
    assert cert["kind"] == "prop_x1"
    assert cert["verified_gldim"] == 3
    assert bqalg.gldim(bqalg.Algebra(q, cert["ideal"])) == 3
    assert bqalg.achieve_gldim(q, 7) is None


def test_qv_round_trip_and_render():
    q, rels = bqalg.parse_qv((DATA / "example.qv").read_text())
    assert q.vertex_count == 3 and len(rels) == 5
    q2, rels2 = bqalg.parse_qv(bqalg.emit_qv(q, rels))
    assert q2.arrows == q.arrows and sorted(rels2) == sorted(rels)
    dot = bqalg.render_dot(bqalg.Algebra(q, rels), "P:1")
    assert dot.startswith("digraph")


def test_errors():
    with pytest.raises(bqalg.ParseError):
        bqalg.parse_qv("quiver 2\narrow a 1 7\n")
    q = example()
    with pytest.raises(bqalg.InvalidInput):
        bqalg.Algebra(q, [["a", "zz"]])
    with pytest.raises(bqalg.InvalidInput):
        bqalg.pdim(bqalg.Algebra(q, bqalg.build_I(q)), "S:9")
    with pytest.raises(bqalg.NotAdmissibleError):
        bqalg.resolve(bqalg.Algebra(q, []), "S:1")


def test_cli_in_process():
    code, out, err = bqalg.run_cli(["gldim", str(DATA / "example.qv")])
    assert code == 0 and out.splitlines()[0] == "2"
    code, out, err = bqalg.run_cli(["corollary", str(DATA / "loop.qv")])
    assert code == 1
    code, _, err = bqalg.run_cli(["gldim", str(DATA / "missing.qv")])
    assert code == 2 and err

import random

import pytest

from kauer.errors import InvalidGraphError, SubsetError
from kauer.graph import (BrauerGraph, canonical_form, components, edge_halfedges, edge_name, edge_names,
                         edges, euler_characteristic, faces, is_bipartite, is_connected, is_isomorphic,
                         relabel, source_map, validate, vertices)
from kauer.permutation import Permutation

from oracles import as_dicts, bipartite_brute, isomorphic_brute
from strategies import random_graph

EX1 = "(1+ 2+ 3+ 4+)(1- 2- 4- 3-)"


def test_counts_example1():
    g = BrauerGraph.from_cycles(EX1)
    assert len(vertices(g)) == 2
    assert len(edges(g)) == 4
    assert sum(len(f) for f in faces(g)) == 8
    assert euler_characteristic(g) == len(vertices(g)) - len(edges(g)) + len(faces(g))


def test_faces_apply_pairing_first():
    g = BrauerGraph.from_cycles("(1+ 2+)")
    # sigma*iota: 1- -> 1+ -> 2+
    assert g.face_permutation("1-") == "2+"
    assert g.face_permutation("2-") == "1+"


def test_truncated_vertices_are_fixed_points():
    g = BrauerGraph.from_cycles("(1+ 2+ 3+ 1- 3- 4+)", halfedges=[f"{k}{s}" for k in "1234" for s in "+-"])
    assert ("2-",) in vertices(g)
    assert ("4-",) in vertices(g)
    assert len(vertices(g)) == 3


def test_single_edge():
    g = BrauerGraph.from_cycles("", halfedges=["1+", "1-"])
    assert vertices(g) == (("1+",), ("1-",))
    assert edge_names(g) == ["1"]
    assert is_bipartite(g)


def test_from_cycles_adds_implicit_partners():
    g = BrauerGraph.from_cycles("(1+ 2+)")
    assert set(g.halfedges) == {"1+", "1-", "2+", "2-"}


def test_validate_reports_each_violation():
    hs = ("a", "b", "c")
    io = Permutation({"a": "b", "b": "a", "c": "c"}, hs)
    g = BrauerGraph(hs, io, Permutation.identity(hs), check=False)
    problems = validate(g)
    assert [p.halfedge for p in problems] == ["c"]
    assert "pairing fixes c" in str(problems[0])
    with pytest.raises(InvalidGraphError) as exc:
        BrauerGraph(hs, io, Permutation.identity(hs))
    assert exc.value.violations[0].halfedge == "c"


def test_validate_bad_tokens_and_unknown():
    hs = ("a b", "x")
    io = Permutation({"a b": "x", "x": "a b"}, hs)
    sig = Permutation.identity(["a b", "x", "y"])
    msgs = [str(p) for p in validate(BrauerGraph(hs, io, sig, check=False))]
    assert any("malformed token" in m for m in msgs)
    assert any("unknown half-edge y" in m for m in msgs)


def test_implicit_pairing_needs_partner():
    with pytest.raises(InvalidGraphError):
        BrauerGraph.from_cycles("(1+ 2+)", halfedges=["1+", "1-", "2+"])


def test_edge_names_and_lookup():
    g = BrauerGraph.from_cycles(EX1)
    assert edge_names(g) == ["1", "2", "3", "4"]
    assert edge_name(g, "3-") == "3"
    assert edge_halfedges(g, "3") == ("3+", "3-")
    assert edge_halfedges(g, "3-") == ("3+", "3-")
    with pytest.raises(SubsetError):
        edge_halfedges(g, "9")


def test_edge_names_explicit_pairing():
    g = BrauerGraph.from_cycles("(a b c d)", iota="(a c)(b d)")
    assert edge_names(g) == ["a", "b"]
    assert edge_halfedges(g, "c") == ("a", "c")


def test_source_map():
    g = BrauerGraph.from_cycles(EX1)
    assert source_map(g)["3-"] == ("1-", "2-", "4-", "3-")


def test_components():
    g = BrauerGraph.from_cycles("(1+ 1-)(2+ 2-)")
    assert len(components(g)) == 2
    assert not is_connected(g)
    assert is_connected(BrauerGraph.from_cycles(EX1))


def test_bipartite_witness_and_odd_walk():
    g = BrauerGraph.from_cycles(EX1)
    res = is_bipartite(g)
    assert res
    c = res.coloring
    assert all(c[g.sigma(h)] == c[h] and c[g.iota(h)] == 1 - c[h] for h in g.halfedges)

    three = BrauerGraph.from_cycles("(1+ 2+ 3+ 3-)(1- 2-)")
    res = is_bipartite(three)
    assert not res
    walk = res.odd_walk
    assert len(walk) % 2 == 1
    src = source_map(three)
    # each step leaves the vertex where the previous one arrived, and it closes up
    for a, b in zip(walk, walk[1:] + walk[:1]):
        assert src[three.iota(a)] == src[b]


def test_triangle_is_not_bipartite():
    g = BrauerGraph.from_cycles("(1+ 3-)(2+ 1-)(3+ 2-)")
    res = is_bipartite(g)
    assert not res
    assert len(res.odd_walk) == 3


@pytest.mark.parametrize("seed", range(5))
def test_bipartite_matches_brute_force(seed):
    rng = random.Random(seed)
    for _ in range(100):
        g = random_graph(rng, 6)
        _, io, sg = as_dicts(g)
        assert bool(is_bipartite(g)) == bipartite_brute(io, sg)


def test_isomorphism_mapping_is_valid():
    g = BrauerGraph.from_cycles(EX1)
    phi = {h: ("e" + h[0] + ("p" if h[1] == "+" else "m")) for h in g.halfedges}
    partner = {v: phi[g.iota(k)] for k, v in phi.items()}
    h = relabel(g, phi)
    assert h.iota == Permutation(partner, h.halfedges)
    res = is_isomorphic(g, h)
    assert res
    m = res.mapping
    assert all(m[g.sigma(x)] == h.sigma(m[x]) and m[g.iota(x)] == h.iota(m[x]) for x in g.halfedges)
    assert canonical_form(g) == canonical_form(h)


def test_not_isomorphic():
    a = BrauerGraph.from_cycles("(1+ 2+ 3+ 4+ 5+)(1- 2- 3- 4- 5-)")
    b = BrauerGraph.from_cycles("(1+ 2+ 3+ 4+ 5+)(1- 4- 5- 2- 3-)")
    assert not is_isomorphic(a, b)
    assert canonical_form(a) != canonical_form(b)


def test_mirror_image_is_a_different_graph():
    # reversing every cyclic order is not an isomorphism in general
    g = BrauerGraph.from_cycles("(1+ 2+ 3+)(1- 2- 3-)")
    r = g.with_sigma(g.sigma.inverse())
    assert isomorphic_brute(g, r) == bool(is_isomorphic(g, r))


def test_empty_graph_canonical_form():
    g = BrauerGraph((), Permutation({}, ()), Permutation({}, ()))
    assert canonical_form(g) == b""


@pytest.mark.parametrize("seed", range(5))
def test_isomorphism_matches_brute_force(seed):
    rng = random.Random(100 + seed)
    for _ in range(60):
        g = random_graph(rng, 5)
        hs = list(g.halfedges)
        if rng.random() < 0.5:
            # relabel by a random bijection onto fresh names
            img = [f"z{i}" for i in range(len(hs))]
            rng.shuffle(img)
            h = relabel(g, dict(zip(hs, img)))
        else:
            h = random_graph(rng, 5)
        assert isomorphic_brute(g, h) == bool(is_isomorphic(g, h))
        assert (canonical_form(g) == canonical_form(h)) == bool(is_isomorphic(g, h))


def test_disconnected_isomorphism():
    g = BrauerGraph.from_cycles("(1+ 1-)(2+ 3+)")
    h = BrauerGraph.from_cycles("(3+ 3-)(1+ 2+)")
    res = is_isomorphic(g, h)
    assert res and isomorphic_brute(g, h)

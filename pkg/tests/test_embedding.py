"""Rotation systems, face tracing, validation, 3-edge-cuts."""

from collections import Counter
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from barnette.corpus import build_named, generate_prism
from barnette.embedding import (
    NonPlanarError,
    PlanarEmbedding,
    RotationFormatError,
    edge_key,
    enumerate_3_edge_cuts,
    parse_embedding,
    serialize_embedding,
    trace_faces,
    two_coloring,
    validate,
)

CUBE_DOC = """\
# the 3-cube as a rotation system
n 8
0: 1 4 3
1: 2 5 0
2: 3 6 1
3: 2 0 7
4: 5 7 0
5: 6 4 1
6: 2 7 5
7: 6 3 4
"""


def brute_force_3_edge_cuts(emb):
    """All-triples oracle: remove each triple, test connectivity."""
    edges = emb.edges
    cuts = []
    for triple in combinations(edges, 3):
        banned = set(triple)
        seen = {0}
        stack = [0]
        while stack:
            v = stack.pop()
            for u in emb.rotations[v]:
                if u not in seen and edge_key(v, u) not in banned:
                    seen.add(u)
                    stack.append(u)
        if len(seen) < emb.vertex_count:
            common = set(triple[0]) & set(triple[1]) & set(triple[2])
            if not common:  # a shared endpoint means a trivial vertex star
                cuts.append(tuple(sorted(triple)))
    return sorted(cuts)


class TestParse:
    def test_cube_document(self):
        emb = parse_embedding(CUBE_DOC)
        assert emb.vertex_count == 8
        assert emb.edge_count == 12

    def test_asymmetric_adjacency(self):
        doc = "n 4\n0: 1 2 3\n1: 2 3\n2: 0 1 3\n3: 0 1 2\n"
        with pytest.raises(RotationFormatError, match="asymmetric"):
            parse_embedding(doc)

    def test_duplicate_neighbor(self):
        doc = "n 3\n0: 1 1 2\n1: 0 2\n2: 0 1\n"
        with pytest.raises(RotationFormatError, match="duplicate"):
            parse_embedding(doc)

    def test_out_of_range_vertex(self):
        doc = "n 3\n0: 1 5\n1: 0\n2:\n"
        with pytest.raises(RotationFormatError, match="out of range"):
            parse_embedding(doc)

    def test_syntax_error_reports_line(self):
        doc = "n 4\n0: 1\nbogus line here\n"
        with pytest.raises(RotationFormatError) as err:
            parse_embedding(doc)
        assert err.value.line == 3

    def test_missing_vertex_line(self):
        with pytest.raises(RotationFormatError, match="missing rotation line"):
            parse_embedding("n 2\n0: 1\n")

    def test_comments_and_blank_lines(self):
        emb = parse_embedding("# header\n\n" + CUBE_DOC)
        assert emb.vertex_count == 8

    def test_outer_directive(self):
        doc = CUBE_DOC.replace("n 8", "n 8\nouter 0 4 5 1")
        emb = parse_embedding(doc)
        assert set(emb.outer_face.vertices) == {0, 4, 5, 1}

    def test_outer_directive_no_match(self):
        doc = CUBE_DOC.replace("n 8", "n 8\nouter 0 1 6 7")
        with pytest.raises(RotationFormatError, match="matches no traced face"):
            parse_embedding(doc)

    def test_roundtrip_corpus(self, corpus_graphs):
        for name, g in corpus_graphs.items():
            doc = serialize_embedding(g.embedding)
            again = parse_embedding(doc)
            assert again == g.embedding, name
            assert serialize_embedding(again) == doc, name


class TestFaces:
    def test_cube_six_squares(self, cube):
        faces = trace_faces(cube)
        assert len(faces) == 6
        assert all(f.length == 4 for f in faces)

    def test_hex_prism_face_profile(self, hex_prism):
        profile = Counter(f.length for f in trace_faces(hex_prism))
        assert profile == {6: 2, 4: 6}

    def test_truncated_octahedron_face_profile(self):
        emb = build_named("truncated_octahedron").embedding
        profile = Counter(f.length for f in trace_faces(emb))
        assert profile == {4: 6, 6: 8}
        assert len(trace_faces(emb)) == 14

    def test_dart_partition(self, corpus_graphs):
        for name, g in corpus_graphs.items():
            faces = trace_faces(g.embedding)
            assert sum(f.length for f in faces) == 2 * g.embedding.edge_count, name

    def test_euler_identity(self, corpus_graphs):
        for name, g in corpus_graphs.items():
            emb = g.embedding
            f = len(trace_faces(emb))
            assert emb.vertex_count - emb.edge_count + f == 2, name

    def test_bipartite_faces_all_even(self, corpus_graphs):
        for name, g in corpus_graphs.items():
            emb = g.embedding
            if two_coloring(emb) is None:
                continue
            assert all(f.length % 2 == 0 for f in trace_faces(emb)), name

    def test_nonplanar_rotation_rejected(self):
        # K5 has no sphere embedding, so every rotation system fails Euler.
        rots = [[u for u in range(5) if u != v] for v in range(5)]
        with pytest.raises(NonPlanarError):
            trace_faces(PlanarEmbedding(rots))

    def test_disconnected_rejected(self):
        rots = [[1, 2], [0, 2], [0, 1], [4, 5], [3, 5], [3, 4]]
        with pytest.raises(NonPlanarError):
            trace_faces(PlanarEmbedding(rots))

    def test_outer_default_longest_then_lexicographic(self, hex_prism):
        # Two hexagonal faces tie on length; the smaller vertex set wins.
        assert sorted(hex_prism.outer_face.vertices) == [0, 1, 2, 3, 4, 5]


class TestValidate:
    def test_cube_all_flags(self, cube):
        rep = validate(cube)
        assert rep.is_cubic and rep.is_bipartite
        assert rep.is_planar_embedding and rep.vertex_connectivity_at_least_3
        assert rep.is_barnette
        colors = rep.two_coloring
        assert all(colors[u] != colors[v] for u, v in cube.edges)

    def test_path_graph_not_cubic(self):
        emb = PlanarEmbedding([[1], [0, 2], [1, 3], [2]])
        rep = validate(emb)
        assert not rep.is_cubic
        assert not rep.is_barnette

    def test_k4_not_bipartite(self):
        k4 = PlanarEmbedding([[1, 2, 3], [2, 0, 3], [3, 0, 1], [1, 0, 2]])
        rep = validate(k4)
        assert rep.is_cubic
        assert rep.is_planar_embedding
        assert rep.vertex_connectivity_at_least_3
        assert not rep.is_bipartite
        assert not rep.is_barnette

    def test_flow_based_connectivity_matches_exhaustive(self):
        # Same verdicts from both 3-connectivity routes on small graphs.
        from barnette.embedding import _three_connected_exhaustive, _three_connected_flow

        for name in ["cube", "prism_6", "two_cubes_bridge", "tutte_graph"]:
            emb = build_named(name).embedding
            assert _three_connected_exhaustive(emb) == _three_connected_flow(emb), name
        path = PlanarEmbedding([[1], [0, 2], [1, 3], [2]])
        assert not _three_connected_flow(path)

    def test_large_prism_uses_flow_route(self):
        emb = generate_prism(60).embedding  # n = 240 > exhaustive limit
        assert validate(emb).is_barnette


class TestEdgeCuts:
    def test_cube_has_none(self, cube):
        assert enumerate_3_edge_cuts(cube) == []
        assert brute_force_3_edge_cuts(cube) == []

    def test_bridge_gadget_single_cut(self):
        emb = build_named("two_cubes_bridge").embedding
        cuts = enumerate_3_edge_cuts(emb)
        assert len(cuts) == 1
        assert len(cuts[0].side_a) == 7 and len(cuts[0].side_b) == 7
        assert [c.edges for c in cuts] == brute_force_3_edge_cuts(emb)

    def test_tutte_graph_three_cuts(self, tutte):
        cuts = enumerate_3_edge_cuts(tutte)
        assert len(cuts) == 3
        for cut in cuts:
            assert min(len(cut.side_a), len(cut.side_b)) == 15
        assert [c.edges for c in cuts] == brute_force_3_edge_cuts(tutte)

    def test_agrees_with_brute_force_corpus(self, corpus_graphs):
        for name, g in corpus_graphs.items():
            emb = g.embedding
            if emb.edge_count > 60 or not emb.is_cubic():
                continue
            got = [c.edges for c in enumerate_3_edge_cuts(emb)]
            assert got == brute_force_3_edge_cuts(emb), name


@settings(max_examples=20, deadline=None)
@given(k=st.integers(min_value=2, max_value=30))
def test_prism_structure_property(k):
    emb = generate_prism(k).embedding
    faces = trace_faces(emb)
    assert emb.vertex_count == 4 * k
    assert emb.edge_count == 6 * k
    profile = Counter(f.length for f in faces)
    if k == 2:
        assert profile == {4: 6}
    else:
        assert profile == {2 * k: 2, 4: 2 * k}
    assert sum(f.length for f in faces) == 2 * emb.edge_count


@settings(max_examples=15, deadline=None)
@given(k=st.integers(min_value=2, max_value=20))
def test_prism_roundtrip_property(k):
    emb = generate_prism(k).embedding
    assert parse_embedding(serialize_embedding(emb)) == emb

"""Named constructions, fragments, composition, manifest."""

from collections import Counter

import pytest

from barnette.cli import parse_machine_records
from barnette.corpus import (
    CompositionError,
    bipartite_fragment_family,
    build_fragment,
    build_named,
    compose_fragments,
    corpus_names,
    cycle_fragment,
    delete_vertex,
    dual_embedding,
    fragment_names,
    generate_prism,
    glue_fragments,
    manifest_lines,
    truncate_embedding,
)
from barnette.embedding import EmbeddingError, trace_faces, two_coloring, validate
from barnette.oracle import find_hamiltonian_cycle, hamiltonian_path_profile


class TestNamed:
    def test_metadata_matches_validation(self, corpus_graphs):
        for name, g in corpus_graphs.items():
            assert validate(g.embedding).is_barnette == g.expected.barnette, name

    def test_cube_is_smallest_barnette(self):
        g = build_named("cube")
        assert g.embedding.vertex_count == 8
        assert validate(g.embedding).is_barnette

    def test_dodecahedron_cubic_planar_not_bipartite(self):
        g = build_named("dodecahedron")
        rep = validate(g.embedding)
        assert rep.is_cubic and rep.is_planar_embedding
        assert rep.vertex_connectivity_at_least_3
        assert not rep.is_bipartite
        r = find_hamiltonian_cycle(g.embedding)
        assert r.certificate is not None  # the original Hamiltonian example

    def test_tutte_graph_counterexample(self):
        g = build_named("tutte_graph")
        assert g.embedding.vertex_count == 46
        assert g.embedding.edge_count == 69
        r = find_hamiltonian_cycle(g.embedding)
        assert r.proved_absent
        assert g.expected.hamiltonian is False

    def test_unknown_name(self):
        with pytest.raises(KeyError):
            build_named("petersen")
        with pytest.raises(KeyError):
            build_named("prism_7")  # odd ring has no bipartite prism here
        with pytest.raises(KeyError):
            build_named("prism_2")

    def test_names_listing_buildable(self):
        for name in corpus_names():
            g = build_named(name)
            assert g.name == name


class TestPrisms:
    def test_k2_is_the_cube(self):
        g = generate_prism(2)
        assert g.embedding.vertex_count == 8
        faces = trace_faces(g.embedding)
        assert Counter(f.length for f in faces) == {4: 6}
        assert validate(g.embedding).is_barnette

    def test_k3_face_profile(self):
        g = generate_prism(3)
        assert Counter(f.length for f in trace_faces(g.embedding)) == {6: 2, 4: 6}

    def test_bench_scale_construction(self):
        g = generate_prism(25000)
        assert g.embedding.vertex_count == 100000
        assert g.embedding.edge_count == 150000

    def test_k_below_two_rejected(self):
        with pytest.raises(ValueError):
            generate_prism(1)


class TestDualTruncate:
    def test_octahedron_from_cube(self, cube):
        octa = dual_embedding(cube)
        assert octa.vertex_count == 6 and octa.edge_count == 12
        assert Counter(f.length for f in trace_faces(octa)) == {3: 8}

    def test_truncated_octahedron(self, cube):
        to = truncate_embedding(dual_embedding(cube))
        assert to.vertex_count == 24 and to.edge_count == 36
        assert Counter(f.length for f in trace_faces(to)) == {4: 6, 6: 8}
        assert validate(to).is_barnette

    def test_dual_is_involution_on_sizes(self, cube):
        dd = dual_embedding(dual_embedding(cube))
        assert dd.vertex_count == cube.vertex_count
        assert dd.edge_count == cube.edge_count


class TestFragments:
    def test_terminal_degrees(self):
        for name in fragment_names():
            frag = build_fragment(name)
            for t in frag.terminals:
                assert frag.embedding.degree(t) == 2, name

    def test_tutte_fragment_shape(self):
        frag = build_fragment("tutte_fragment")
        assert frag.embedding.vertex_count == 15
        assert frag.embedding.edge_count == 21

    def test_delete_vertex_requires_degree_3(self):
        frag = build_fragment("cube_minus_vertex")
        with pytest.raises(EmbeddingError):
            delete_vertex(frag.embedding, frag.terminals[0])

    def test_cycle_fragment(self):
        frag = cycle_fragment(6, (0, 2, 4))
        assert frag.embedding.vertex_count == 6
        assert len(trace_faces(frag.embedding)) == 2


class TestComposition:
    def test_three_tutte_fragments_rebuild_the_counterexample(self):
        frag = build_fragment("tutte_fragment")
        emb = compose_fragments([frag, frag, frag])
        assert emb.vertex_count == 46 and emb.edge_count == 69
        rep = validate(emb)
        assert rep.is_cubic and rep.is_planar_embedding
        assert rep.vertex_connectivity_at_least_3
        assert not rep.is_bipartite
        r = find_hamiltonian_cycle(emb)
        assert r.proved_absent

    def test_glue_two_cube_fragments(self):
        a = delete_vertex(build_named("cube").embedding, 7)
        b = delete_vertex(build_named("cube").embedding, 1)
        emb = glue_fragments(a, b)
        assert emb.vertex_count == 14
        assert validate(emb).is_barnette

    def test_three_squares_not_cubic(self):
        frags = [cycle_fragment(4, (0, 1, 2))] * 3
        with pytest.raises(CompositionError):
            compose_fragments(frags)
        emb = compose_fragments(frags, require_cubic=False)
        assert emb.vertex_count == 13
        # the stranded degree-2 corners block every spanning cycle
        r = find_hamiltonian_cycle(emb)
        assert r.proved_absent

    def test_wrong_fragment_count(self):
        frag = build_fragment("cube_minus_vertex")
        with pytest.raises(CompositionError):
            compose_fragments([frag, frag])

    def test_chain_has_two_disjoint_cuts(self):
        from barnette.embedding import enumerate_3_edge_cuts

        emb = build_named("three_cubes_chain").embedding
        cuts = enumerate_3_edge_cuts(emb)
        assert len(cuts) == 2
        assert not (set(cuts[0].edges) & set(cuts[1].edges))


class TestFragmentSweep:
    def test_family_is_compose_compatible(self):
        family = bipartite_fragment_family()
        assert len(family) >= 30
        for name, frag in family:
            emb = frag.embedding
            assert emb.vertex_count <= 14, name
            assert two_coloring(emb) is not None, name
            assert all(f.length % 2 == 0 for f in trace_faces(emb)), name
            degs = Counter(emb.degree(v) for v in range(emb.vertex_count))
            assert degs[2] == 3 and degs[3] == emb.vertex_count - 3, name

    def test_no_tutte_like_profile_in_family(self):
        # The counterexample hunt: a bipartite fragment whose profile
        # matches the classical one would threaten the conjecture.
        hits = []
        for name, frag in bipartite_fragment_family():
            prof = hamiltonian_path_profile(frag.embedding, frag.terminals)
            assert not prof.undecided_pairs, name
            if len(prof.feasible_pairs) <= 2:
                hits.append((name, sorted(map(sorted, prof.feasible_pairs))))
        assert hits == [], f"candidate counterexample fragments found: {hits}"


class TestManifest:
    def test_lines_round_trip_as_machine_records(self):
        lines = manifest_lines()
        records = parse_machine_records("\n".join(lines))
        assert len(records) == len(corpus_names())
        by_name = {r["name"]: r for r in records}
        assert by_name["cube"]["n"] == "8"
        assert by_name["tutte_graph"]["hamiltonian"] == "false"
        assert by_name["prism_6"]["barnette"] == "true"

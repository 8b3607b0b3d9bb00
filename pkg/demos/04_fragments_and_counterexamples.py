"""Fragments, path profiles, and the counterexample hunt.

A 3-terminal fragment blocks Hamiltonicity when its spanning paths
avoid one terminal pairing: wire three such pieces around a hub and no
cycle can survive.  That is how the classical counterexample works, and
the same machinery asks whether a bipartite (all-even-face) fragment
could do the same job.  None in the desk-scale family does.
"""

from barnette import (
    bipartite_fragment_family,
    build_fragment,
    compose_fragments,
    find_hamiltonian_cycle,
    hamiltonian_path_profile,
    validate,
)

frag = build_fragment("tutte_fragment")
x, y, z = frag.terminals
profile = hamiltonian_path_profile(frag.embedding, frag.terminals)
print(f"tutte fragment: 15 vertices, terminals x={x} y={y} z={z}")
print(f"feasible spanning-path pairs: "
      f"{sorted(tuple(sorted(p)) for p in profile.feasible_pairs)}")
print("  -> paths exist only into the hub corner z; the x-y traverse is blocked")

# Three copies around a hub rebuild the counterexample.
whole = compose_fragments([frag, frag, frag])
rep = validate(whole)
r = find_hamiltonian_cycle(whole)
print(f"\nhub composition: n={whole.vertex_count}, cubic={rep.is_cubic}, "
      f"3-connected={rep.vertex_connectivity_at_least_3}")
print(f"Hamiltonian: {r.certificate is not None} "
      f"(nonexistence proved: {r.proved_absent})")

# The bipartite sweep: every compose-compatible even-face fragment cut
# from the shipped corpus, profiled.  A hit here would be a candidate
# counterexample to the conjecture itself.
family = bipartite_fragment_family(max_vertices=14)
print(f"\nbipartite fragment sweep over {len(family)} pieces:")
hits = []
for name, piece in family:
    p = hamiltonian_path_profile(piece.embedding, piece.terminals)
    if len(p.feasible_pairs) <= 2:
        hits.append(name)
print(f"fragments with a blocked terminal pairing: {hits or 'none'}")
print("every bipartite piece keeps all three pairings open, so this "
      "family contains no counterexample seed")

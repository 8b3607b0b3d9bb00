"""The chamber expansion, door by door.

Every outer edge except one (the entrance) is committed to the cycle up
front.  The entrance opens the face behind it: walking that face's
boundary, odd positions join the cycle and even positions become new
doors.  Doors queue up FIFO, so the openings sweep around the graph in
one angular direction: the trace below is the spiral.
"""

from barnette import EdgeRole, build_named, carve, chamber_count, verify_cycle

prism = build_named("prism_10")  # C10 x K2, 20 vertices
emb = prism.embedding
print(f"graph: {prism.name}, n={emb.vertex_count}, outer cycle "
      f"{list(emb.outer_face.vertices)}")

result = carve(emb, entrance=(0, 1))
print(f"\nstatus: {result.status.value}")
print("door openings, in order:")
for ev in result.trace:
    print(f"  {ev.record()}")

print(f"\ncycle found: {list(result.cycle)}")
cert = verify_cycle(emb, result.cycle)
print(f"independent verifier agrees: {cert.is_hamiltonian}")

h_o = result.role_class(EdgeRole.OUTER_HAMILTONIAN)
h_i = result.role_class(EdgeRole.INNER_HAMILTONIAN)
d_i = result.role_class(EdgeRole.INNER_DOOR)
print(f"\nedge partition: |H_o|={len(h_o)} |H_i|={len(h_i)} |D_i|={len(d_i)} "
      f"entrance={result.entrances}")
print(f"|H_o| + |H_i| = n: {len(h_o) + len(h_i) == emb.vertex_count}")

print(f"\nchambers induced by the cycle: {chamber_count(emb, result.cycle)} "
      f"(single-chamber by construction)")

# The door-selection direction is a knob; the left walk spirals the
# other way but must find a cycle of its own.
left = carve(emb, entrance=(0, 1), left_walk=True)
print(f"\nleft-walk run: {left.status.value}, doors "
      f"{[ev.door for ev in left.trace]}")

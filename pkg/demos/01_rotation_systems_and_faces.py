"""Rotation systems and face tracing.

A plane graph is stored as one counterclockwise neighbor ordering per
vertex.  Everything else (faces, the outer cycle, planarity itself) is
derived by walking darts, so this demo builds the cube two ways and
inspects what falls out.
"""

from barnette import (
    PlanarEmbedding,
    parse_embedding,
    serialize_embedding,
    trace_faces,
    validate,
)

# The 3-cube: outer square 0-1-2-3, inner square 4-5-6-7, spokes i..i+4.
cube = PlanarEmbedding([
    [1, 4, 3],
    [2, 5, 0],
    [3, 6, 1],
    [2, 0, 7],
    [5, 7, 0],
    [6, 4, 1],
    [2, 7, 5],
    [6, 3, 4],
])

print("faces of the cube:")
for face in trace_faces(cube):
    outer = "  <- outer" if face.id == cube.outer_face_id else ""
    print(f"  face {face.id}: {list(face.vertices)}{outer}")

f = len(trace_faces(cube))
print(f"\nEuler check: V - E + F = {cube.vertex_count} - {cube.edge_count} + {f} "
      f"= {cube.vertex_count - cube.edge_count + f}")

report = validate(cube)
print(f"\nclass membership: cubic={report.is_cubic} bipartite={report.is_bipartite} "
      f"planar={report.is_planar_embedding} "
      f"3-connected={report.vertex_connectivity_at_least_3}")
print(f"the cube is the smallest member of the conjecture's class: "
      f"{report.is_barnette}")

# The same graph round-trips through the text format.
doc = serialize_embedding(cube)
print("\nrotation document:")
print(doc)
assert parse_embedding(doc) == cube

# A rotation system that cannot live on the sphere fails loudly.
k5 = [[u for u in range(5) if u != v] for v in range(5)]
try:
    trace_faces(PlanarEmbedding(k5))
except Exception as exc:
    print(f"K5 rejected: {exc}")

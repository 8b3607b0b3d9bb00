"""Ground truth by exhaustive search.

The oracle decides Hamiltonicity by edge-state backtracking with unit
propagation, so it can both find cycles and prove their absence.  The
carve algorithm is never trusted without it.
"""

from barnette import (
    build_named,
    enumerate_hamiltonian_cycles,
    find_hamiltonian_cycle,
    longest_cycle,
    verify_cycle,
)

cube = build_named("cube").embedding
certs, _ = enumerate_hamiltonian_cycles(cube)
print(f"the cube has exactly {len(certs)} Hamiltonian cycles:")
for c in certs:
    print(f"  {list(c.vertices)}")

# The classical 46-vertex counterexample to Tait's conjecture: cubic,
# planar, 3-connected, and provably non-Hamiltonian.
tutte = build_named("tutte_graph").embedding
r = find_hamiltonian_cycle(tutte)
print(f"\ntutte graph (n=46): cycle found: {r.certificate is not None}, "
      f"nonexistence proved: {r.proved_absent} "
      f"after {r.expansions} branch expansions")

lc = longest_cycle(tutte)
print(f"longest cycle: {lc.certificate.length} (= n - 1), "
      f"verified: {verify_cycle(tutte, lc.certificate.vertices).is_cycle}")

# Budgets are counted in branch expansions, so runs are reproducible;
# an exhausted budget is reported as undecided, never as absence.
tiny = find_hamiltonian_cycle(tutte, budget=10)
print(f"\nwith a 10-expansion budget: found={tiny.certificate is not None} "
      f"proved_absent={tiny.proved_absent} exhausted={tiny.exhausted}")

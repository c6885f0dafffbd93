"""Preparing a TMEECS by sending excited atoms through a cavity.

Start from the single-mode excited state with m photons on mode a, let an
excited atom interact briefly with mode b, and keep the run only if the atom
leaves in its ground state.  Each success adds one photon to mode b.
"""
import math

from ecslab import entanglement, prep
from ecslab.states import StateSpec

start = StateSpec("SMEECS", "minus", 1.0, 2)

for backend in (prep.FIRST_ORDER, prep.EXACT):
    out = prep.run_chain(start, g=1.0, t=1e-2, atoms=2, backend=backend)
    print(f"{backend:12s} fidelity={out.fidelity_to_target:.12f}  success={out.success_prob:.3e}  "
          f"per atom={[f'{p:.3e}' for p in out.per_atom_probs]}")
    print(f"{'':12s} concurrence of the prepared state: {entanglement.concurrence_oracle(out.post_state):.10f}")

print("\nExact evolution leaves a small error that grows like (gt)^4:")
spec = StateSpec("SMEECS", "plus", math.sqrt(2), 1)
for gt in (1e-3, 2e-3, 4e-3, 8e-3):
    out = prep.run_chain(spec, 1.0, gt, 1, backend=prep.EXACT)
    print(f"   gt={gt:.0e}  infidelity={out.infidelity:.3e}")

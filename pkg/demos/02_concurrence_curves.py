"""Concurrence against |alpha|^2 for the ECS and the two-mode excited states.

The minus branch of the symmetric TMEECS is maximally entangled everywhere;
the plus branch starts at zero and rises faster the more photons are added.
Each value is shown next to the purity-based Fock-space oracle.
"""
import math

from ecslab import entanglement as E
from ecslab.states import StateSpec

families = [
    ("ECS +", StateSpec("ECS", "plus", 1.0)),
    ("TMEECS + (1,1)", StateSpec("TMEECS", "plus", 1.0, 1, 1)),
    ("TMEECS + (3,3)", StateSpec("TMEECS", "plus", 1.0, 3, 3)),
    ("TMEECS - (2,2)", StateSpec("TMEECS", "minus", 1.0, 2, 2)),
    ("TMEECS - (1,3)", StateSpec("TMEECS", "minus", 1.0, 1, 3)),
]

for label, template in families:
    print(label)
    for x in [0.01, 0.1, 0.5, 1.0, 2.0]:
        spec = StateSpec(template.family, template.sign, math.sqrt(x), template.m, template.n)
        rep = E.analyze(spec)
        print(f"   |alpha|^2={x:5.2f}  C={rep.closed_form:.10f}  oracle={rep.oracle:.10f}")

print("\nWeak-field slopes, C ~ coefficient * |alpha|^2 (plus branch):")
for m in (1, 2, 3):
    asym = E.weak_field_asymptote("TMEECS", "plus", m, m)
    exact = E.concurrence_tmeecs("plus", 1e-2, m, m) / 1e-4
    print(f"   m={m}: coefficient {asym.coefficient:.4f}, measured {exact:.4f}")

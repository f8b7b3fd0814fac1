"""The free-group corollary, step by step.

On the free group on a, b the automaton

    Theta = [[a - 1, b - 1],
             [0,     0    ]]

is not surjective (the pattern "second coordinate 1 at the identity" has no
preimage) and looks injective on every window we try. Its adjoint is the
mirror image: a kernel element is visible at radius 0, while every finite
window of the adjoint has full row rank.

Run:  python3 demos/free_group_corollary.py [F2|F5|Q]
"""

import sys

from lcaduality.document import format_configuration
from lcaduality import (
    check_pre_injectivity,
    check_surjectivity,
    field_from_name,
    free_group_corollary,
    replay_witness,
)


def show(label, theta, verdict):
    d = verdict.dimensions
    print(f"  {label:<28} r={verdict.radius}  {verdict.status.value:<12} "
          f"rows={d['rows']:<4} cols={d['cols']:<4} rank={d['rank']}")
    if verdict.witness is not None:
        print(f"    witness {verdict.witness.kind}, replays: {replay_witness(theta, verdict.witness)}")


field = field_from_name(sys.argv[1] if len(sys.argv) > 1 else "F2")
THETA, ADJ = free_group_corollary(field)
print(f"Theta over {field.name}:")
for row in THETA.format_grid():
    print("   ", " | ".join(row))
print("Adjoint:")
for row in ADJ.format_grid():
    print("   ", " | ".join(row))

print("\nTheta")
show("surjectivity", THETA, check_surjectivity(THETA, 0))
for r in range(4):
    show("pre-injectivity", THETA, check_pre_injectivity(THETA, r))

print("\nAdjoint")
v = check_pre_injectivity(ADJ, 0)
show("pre-injectivity", ADJ, v)
print("    kernel element:", "; ".join(line.strip() for line in format_configuration(v.witness.configuration)))
for r in range(3):
    show("surjectivity", ADJ, check_surjectivity(ADJ, r))

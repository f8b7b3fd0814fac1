"""Exact duality on a finite group.

On S3 every configuration is finitely supported, so both sides of the duality
are finite-dimensional and can be compared outright: the kernel of Theta is the
orthogonal complement of the image of its adjoint, and the other way round.
This script samples a few random automata and prints the report for each.

Run:  python3 demos/finite_duality.py
"""

from lcaduality import PrimeField, analyze, random_lca, symmetric_group, verify_duality_finite
from lcaduality.groups import saturation_radius

G = symmetric_group(3)
F = PrimeField(3)
r = saturation_radius(G)
print(f"group {G.describe()} of order {G.order}, field {F.name}, support radius {r}\n")

for seed in range(6):
    theta = random_lca(G, F, 2, r, seed=seed)
    report = verify_duality_finite(theta)
    d = report.dimensions
    props = ", ".join(f"{v.property}={v.status.value}" for v in analyze(theta))
    print(f"seed {seed}: ker {d['dim_ker']}, im {d['dim_im']}, ker* {d['dim_ker_adjoint']}, "
          f"im* {d['dim_im_adjoint']} (space {d['space']})")
    for name, ok in report.equations.items():
        print(f"    {name:<42} {ok}")
    print(f"    transpose identity {report.transpose_identity}, routes agree {report.routes_agree}")
    print(f"    {props}\n")

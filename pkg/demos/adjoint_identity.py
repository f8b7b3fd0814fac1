"""The adjoint identity <Theta* omega | c> = <omega | Theta c>, checked on random data.

Run:  python3 demos/adjoint_identity.py
"""

from lcaduality import QQ, Configuration, LCAMatrix, translate, translate_right, FreeGroup, PrimeField, adjoint, evolve, pair, random_configuration, random_lca
from lcaduality.document import format_configuration


def show(c):
    return "; ".join(line.strip() for line in format_configuration(c))


G = FreeGroup(2)
for F in (PrimeField(5), QQ):
    theta = random_lca(G, F, 2, 1, seed=11)
    omega = random_configuration(G, F, 2, 1, seed=12)
    c = random_configuration(G, F, 2, 1, seed=13)
    print(f"over {F.name}")
    print("  Theta  =", theta.format_grid())
    print("  Theta* =", adjoint(theta).format_grid())
    print("  omega support:", len(omega.support()), "sites;  c support:", len(c.support()), "sites")
    left = pair(evolve(adjoint(theta), omega), c)
    right = pair(omega, evolve(theta, c))
    print(f"  <Theta* omega | c> = {F.format(left)}")
    print(f"  <omega | Theta c>  = {F.format(right)}")
    assert left == right
    print()

# Evolution multiplies supports on the left, so it commutes with right
# translation on every group but with left translation only when G is abelian.
theta = LCAMatrix.from_coefficients(G, QQ, 1, {G.gen(0): [[1]]})
c = Configuration.delta(G, QQ, 1, G.identity, 0)
b = G.gen(1)
print("Theta = [a], c = delta at 1, g = b")
print("  evolve(translate(b, c))       :", show(evolve(theta, translate(b, c))))
print("  translate(b, evolve(c))       :", show(translate(b, evolve(theta, c))))
print("  evolve(translate_right(b, c)) :", show(evolve(theta, translate_right(b, c))))
print("  translate_right(b, evolve(c)) :", show(translate_right(b, evolve(theta, c))))

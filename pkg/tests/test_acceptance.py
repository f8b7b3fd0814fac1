"""Exit criteria. Each test is one criterion; a PASS/FAIL line per test is
printed in the terminal summary. All comparisons are exact (zero tolerance).
"""

import random
import time

import pytest

from lcaduality import cli
from lcaduality.analyzer import (
    INJECTIVE,
    POST_SURJECTIVE,
    PRE_INJECTIVE,
    SURJECTIVE,
    GardenOfEden,
    KernelElement,
    MEPPair,
    PreimageTable,
    Status,
    analyze,
    full_matrix,
    mep_pair,
    replay_witness,
    verify_duality_finite,
)
from lcaduality.constructions import random_configuration, random_lca
from lcaduality.engine import Configuration, WindowPattern, evolve, pair
from lcaduality.fields import QQ, PrimeField
from lcaduality.groupring import adjoint
from lcaduality.groups import CyclicGroup, FreeAbelianGroup, FreeGroup, ball, saturation_radius, symmetric_group

from oracles import dot, finite_matrix, pull_evolve, sympy_in_column_space, sympy_nullspace, sympy_rank

F2, F3, F5 = PrimeField(2), PrimeField(3), PrimeField(5)

ADJOINT_GROUPS = [FreeGroup(2), FreeAbelianGroup(2), CyclicGroup(6), symmetric_group(3)]
ADJOINT_FIELDS = [F2, F5, QQ]
FINITE_GROUPS = [CyclicGroup(2), CyclicGroup(6), symmetric_group(3)]
FINITE_FIELDS = [F2, F3]
SAMPLE_PER_CELL = 100


def finite_sample():
    """100 random automata per (group, field) cell, n cycling through 1..3."""
    for gi, G in enumerate(FINITE_GROUPS):
        for F in FINITE_FIELDS:
            r = saturation_radius(G)
            for k in range(SAMPLE_PER_CELL):
                yield G, F, random_lca(G, F, 1 + k % 3, r, seed=10_000 * gi + 1_000 * F.p + k)


@pytest.fixture(scope="module")
def sample():
    return list(finite_sample())


@pytest.fixture(scope="module")
def sample_verdicts(sample):
    out = []
    for G, F, theta in sample:
        mine = {v.property: v for v in analyze(theta)}
        dual = {v.property: v for v in analyze(adjoint(theta))}
        out.append((theta, mine, dual))
    return out


def test_adjoint_identity_1000_triples():
    count = 0
    for k in range(1000):
        G = ADJOINT_GROUPS[k % 4]
        F = ADJOINT_FIELDS[(k // 4) % 3]
        n = 1 + (k // 12) % 3
        theta = random_lca(G, F, n, 2, seed=k)
        omega = random_configuration(G, F, n, 2, seed=50_000 + k)
        c = random_configuration(G, F, n, 2, seed=90_000 + k)
        assert pair(evolve(adjoint(theta), omega), c) == pair(omega, evolve(theta, c))
        count += 1
    assert count == 1000


def test_anti_involution_laws_200_pairs():
    groups = ADJOINT_GROUPS + [FreeGroup(1)]
    for k in range(200):
        G = groups[k % len(groups)]
        F = ADJOINT_FIELDS[k % 3]
        n = 1 + k % 3
        theta = random_lca(G, F, n, 1, seed=k)
        phi = random_lca(G, F, n, 1, seed=7_000 + k)
        assert adjoint(adjoint(theta)) == theta
        assert adjoint(theta @ phi) == adjoint(phi) @ adjoint(theta)


def test_main_theorem_finite_groups(sample):
    assert len(sample) == len(FINITE_GROUPS) * len(FINITE_FIELDS) * SAMPLE_PER_CELL
    for G, F, theta in sample:
        rep = verify_duality_finite(theta)
        assert all(rep.equations.values()), rep
        assert rep.transpose_identity and rep.routes_agree
        N = theta.n * G.order
        assert rep.dimensions["dim_ker"] + rep.dimensions["dim_im"] == N
        assert rep.dimensions["dim_ker_adjoint"] + rep.dimensions["dim_im_adjoint"] == N

        # independent oracle: site-by-site evaluation and sympy elimination
        M, _ = finite_matrix(theta)
        Mstar, _ = finite_matrix(adjoint(theta))
        assert [list(r) for r in full_matrix(theta, list(range(G.order))).rows] == M
        rk, rk_star = sympy_rank(F, M, N), sympy_rank(F, Mstar, N)
        assert rep.dimensions["dim_im"] == rk and rep.dimensions["dim_im_adjoint"] == rk_star
        ker, ker_star = sympy_nullspace(F, M, N), sympy_nullspace(F, Mstar, N)
        cols = [[row[j] for row in M] for j in range(N)]
        cols_star = [[row[j] for row in Mstar] for j in range(N)]
        # ker(M)^perp = im(M*): inclusion plus equal dimension
        assert all(dot(F, u, v) == 0 for u in ker for v in cols_star)
        assert rk_star == N - len(ker)
        # im(M)^perp = ker(M*)
        assert all(dot(F, u, v) == 0 for u in ker_star for v in cols)
        assert len(ker_star) == N - rk


def test_duality_of_properties_finite_groups(sample_verdicts):
    exceptions = 0
    for theta, mine, dual in sample_verdicts:
        for v in list(mine.values()) + list(dual.values()):
            assert v.status is not Status.INCONCLUSIVE
        exceptions += mine[PRE_INJECTIVE].holds != dual[SURJECTIVE].holds
        exceptions += mine[INJECTIVE].holds != dual[POST_SURJECTIVE].holds
        # oracle agreement: on a finite group every property is "M(Theta) invertible"
        G, F, n = theta.group, theta.field, theta.n
        M, N = finite_matrix(theta)
        invertible = sympy_rank(F, M, N) == N
        assert all(v.holds == invertible for v in mine.values())
    assert exceptions == 0
    holds = [mine[INJECTIVE].holds for _, mine, _ in sample_verdicts]
    assert 0 < sum(holds) < len(holds)


def test_post_surjective_implies_pre_injective_finite(sample_verdicts):
    post = [m for _, m, _ in sample_verdicts if m[POST_SURJECTIVE].holds]
    assert post
    assert all(m[PRE_INJECTIVE].holds for m in post)


@pytest.mark.parametrize("field", ["F2", "F5", "Q"])
def test_corollary_reproduction(field):
    t0 = time.perf_counter()
    out, ok = cli.run_demo("free-corollary", field)
    elapsed = time.perf_counter() - t0
    assert ok
    assert elapsed < 10.0
    checks = {(c["target"], c["verdict"]["property"], c["verdict"]["radius"]): c["verdict"] for c in out["checks"]}

    goe = checks[("theta", SURJECTIVE, 0)]
    assert goe["status"] == "refuted"
    assert goe["witness"] == {"kind": "garden-of-eden", "window": ["1"], "values": [["0", "1"]]}
    for r in range(4):
        v = checks[("theta", PRE_INJECTIVE, r)]
        assert v["status"] == "inconclusive" and v["witness"] is None
        assert v["dimensions"]["rank"] == v["dimensions"]["cols"] == 2 * len(ball(FreeGroup(2), r))
    assert checks[("theta", PRE_INJECTIVE, 3)]["dimensions"]["window"] == 53

    kern = checks[("adjoint", PRE_INJECTIVE, 0)]
    assert kern["status"] == "refuted"
    assert kern["witness"] == {"kind": "kernel-element", "configuration": [["1", ["0", "1"]]]}
    for r in range(3):
        v = checks[("adjoint", SURJECTIVE, r)]
        assert v["status"] == "inconclusive"
        assert v["dimensions"]["rank"] == v["dimensions"]["rows"]


# -- witness soundness and corruption fuzzing ---------------------------------


def _emitted_witnesses():
    out = []
    for G, F, theta in finite_sample():
        if theta.n == 1 or G.order == 6 and F.p == 3:
            for v in analyze(theta):
                if v.witness is not None:
                    out.append((theta, v.witness))
    infinite = [FreeGroup(1), FreeGroup(2), FreeAbelianGroup(2)]
    for k in range(60):
        G = infinite[k % 3]
        F = ADJOINT_FIELDS[k % 3]
        theta = random_lca(G, F, 1 + k % 2, 1, seed=300 + k, density=0.3)
        for v in analyze(theta, r=2):
            if v.witness is not None:
                out.append((theta, v.witness))
            if isinstance(v.witness, KernelElement):
                out.append((theta, mep_pair(theta, v.witness)))
    return out


def _valid_by_oracle(theta, w):
    G, F, n = theta.group, theta.field, theta.n

    def img(T, c):
        return pull_evolve(T, c)

    if isinstance(w, KernelElement):
        return bool(w.configuration) and not img(theta, w.configuration)
    if isinstance(w, MEPPair):
        return w.x != w.y and img(theta, w.x) == img(theta, w.y)
    if isinstance(w, PreimageTable):
        T = adjoint(theta) if w.of_adjoint else theta
        e = G.identity
        return all(img(T, z) == {e: tuple(F.one if j == i else F.zero for j in range(n))} for i, z in enumerate(w.preimages))
    if isinstance(w, GardenOfEden):
        window = list(w.pattern.window)
        support = list(theta.coefficient_matrices())
        domain = sorted({G.mul(G.inv(s), g) for g in window for s in support}, key=G.sort_key)
        cols = []
        for h in domain:
            for j in range(n):
                image = img(theta, Configuration.delta(G, F, n, h, j))
                cols.append([image.get(g, (F.zero,) * n)[i] for g in window for i in range(n)])
        rows = [[c[r] for c in cols] for r in range(n * len(window))]
        return not sympy_in_column_space(F, rows, len(cols), w.pattern.flat())
    raise AssertionError(w)


def _mutate_config(rng, c):
    G, F, n = c.group, c.field, c.n
    values = {g: list(v) for g, v in c.items()}
    g = rng.choice(list(values)) if values else G.identity
    values.setdefault(g, [F.zero] * n)
    i = rng.randrange(n)
    delta = F(rng.randrange(1, F.p)) if F.characteristic else F(rng.choice([-2, -1, 1, 2, 3]))
    values[g][i] = F.add(values[g][i], delta)
    return Configuration(G, F, n, values)


def _mutate(rng, w):
    if isinstance(w, KernelElement):
        return KernelElement(_mutate_config(rng, w.configuration))
    if isinstance(w, MEPPair):
        return MEPPair(_mutate_config(rng, w.x), w.y) if rng.random() < 0.5 else MEPPair(w.x, _mutate_config(rng, w.y))
    if isinstance(w, PreimageTable):
        zs = list(w.preimages)
        k = rng.randrange(len(zs))
        zs[k] = _mutate_config(rng, zs[k])
        return PreimageTable(tuple(zs), w.of_adjoint)
    if isinstance(w, GardenOfEden):
        p = w.pattern
        F = FIELD_OF[id(w)]
        values = [list(v) for v in p.values]
        pos, i = rng.randrange(len(values)), rng.randrange(len(values[0]))
        delta = F(rng.randrange(1, F.p)) if F.characteristic else F(rng.choice([-2, -1, 1, 2, 3]))
        values[pos][i] = F.add(values[pos][i], delta)
        return GardenOfEden(WindowPattern(p.window, tuple(tuple(v) for v in values)))
    raise AssertionError(w)


FIELD_OF = {}


def test_witness_soundness_and_corruption():
    witnesses = _emitted_witnesses()
    kinds = {type(w).__name__ for _, w in witnesses}
    assert kinds == {"KernelElement", "GardenOfEden", "PreimageTable", "MEPPair"}
    for theta, w in witnesses:
        assert replay_witness(theta, w), w
        FIELD_OF[id(w)] = theta.field

    rng = random.Random(20170625)
    corrupted = still_valid = 0
    attempts = 0
    while corrupted < 500:
        attempts += 1
        assert attempts < 5000
        theta, w = rng.choice(witnesses)
        bad = _mutate(rng, w)
        valid = _valid_by_oracle(theta, bad)
        assert replay_witness(theta, bad) == valid
        if valid:
            still_valid += 1
        else:
            corrupted += 1
    print(f"{len(witnesses)} witnesses replayed; {corrupted} corrupted mutants rejected, {still_valid} valid mutants accepted")


def test_determinism_of_reports(tmp_path):
    doc = tmp_path / "corollary.lca"
    doc.write_text("field: F5\ngroup: free(2)\nmatrix:\n  a - 1, b - 1\n  0, 0\n")
    runs = [
        ["analyze", str(doc), "--radius", "2"],
        ["demo", "free-corollary", "--field", "F2"],
        ["demo", "laplacian", "--field", "Q"],
    ]
    for argv in runs:
        first, second = cli.run(argv), cli.run(argv)
        assert first[0] == 0
        assert first[1].encode() == second[1].encode()

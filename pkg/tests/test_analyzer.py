import pytest

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
    check_injectivity,
    check_post_surjectivity,
    check_pre_injectivity,
    check_surjectivity,
    mep_pair,
    replay_witness,
    verify_duality_finite,
)
from lcaduality.constructions import free_group_corollary, random_lca, shift
from lcaduality.document import parse_entry
from lcaduality.engine import Configuration, WindowPattern
from lcaduality.errors import ResourceError, UnsupportedOperation, UsageError
from lcaduality.fields import QQ, PrimeField
from lcaduality.groupring import LCAMatrix, adjoint
from lcaduality.groups import CyclicGroup, FreeGroup, symmetric_group

from oracles import finite_matrix, sympy_rank

F2, F3, F5 = PrimeField(2), PrimeField(3), PrimeField(5)
FIELDS3 = [F2, F5, QQ]


def cyclic_sum(F=F2):
    G = CyclicGroup(2)
    return LCAMatrix([[parse_entry("1 + t", G, F)]])


@pytest.mark.parametrize("F", FIELDS3)
def test_adjoint_of_corollary_fails_pre_injectivity_at_radius_0(F):
    theta, dual = free_group_corollary(F)
    v = check_pre_injectivity(dual, 0)
    assert v.status is Status.REFUTED
    G = theta.group
    assert v.witness == KernelElement(Configuration.delta(G, F, 2, G.identity, 1))
    assert replay_witness(dual, v.witness)


def test_corollary_pre_injective_up_to_radius_2():
    theta, _ = free_group_corollary(F2)
    v = check_pre_injectivity(theta, 2)
    assert v.status is Status.INCONCLUSIVE
    assert v.dimensions["rank"] == v.dimensions["cols"] == 34


def test_cyclic_sum_all_refuted():
    theta = cyclic_sum()
    v = check_pre_injectivity(theta)
    assert v.status is Status.REFUTED
    assert v.witness.configuration == Configuration(theta.group, F2, 1, {0: [1], 1: [1]})
    s = check_surjectivity(theta)
    assert s.status is Status.REFUTED
    assert s.witness.pattern == WindowPattern((0, 1), ((1,), (0,)))
    i = check_injectivity(theta)
    assert i.status is Status.REFUTED and i.witness.configuration == v.witness.configuration
    p = check_post_surjectivity(theta)
    assert p.status is Status.REFUTED
    for w in (v, s, i, p):
        assert replay_witness(theta, w.witness)


@pytest.mark.parametrize("F", FIELDS3)
def test_corollary_garden_of_eden(F):
    theta, dual = free_group_corollary(F)
    v = check_surjectivity(theta, 0)
    assert v.status is Status.REFUTED
    assert v.witness.pattern == WindowPattern((theta.group.identity,), ((0, 1),))


def test_corollary_adjoint_windows_full_rank_f2():
    _, dual = free_group_corollary(F2)
    v = check_surjectivity(dual, 2)
    assert v.status is Status.INCONCLUSIVE
    assert v.dimensions["rows"] == v.dimensions["rank"] == 34


def test_shift_post_surjective_and_injective(free1):
    t = free1.gen(0)
    theta = shift(free1, t, 1, QQ)
    v = check_post_surjectivity(theta, 1)
    assert v.status is Status.CERTIFIED
    assert v.witness.preimages == (Configuration.delta(free1, QQ, 1, free1.inv(t), 0),)
    assert replay_witness(theta, v.witness)
    inj = check_injectivity(theta, 1)
    assert inj.status is Status.CERTIFIED and inj.proof == "duality-transfer"
    assert inj.witness.of_adjoint and replay_witness(theta, inj.witness)


@pytest.mark.parametrize("r", range(5))
def test_one_plus_t_never_post_surjective(free1, r):
    theta = LCAMatrix([[parse_entry("1 + t", free1, F2)]])
    assert check_post_surjectivity(theta, r).status is Status.INCONCLUSIVE


def test_identity_post_surjective_at_radius_0(free2):
    v = check_post_surjectivity(LCAMatrix.identity(free2, F3, 2), 0)
    assert v.status is Status.CERTIFIED


def test_corollary_injectivity_inconclusive():
    theta, _ = free_group_corollary(F2)
    for r in range(3):
        assert check_injectivity(theta, r).status is Status.INCONCLUSIVE


def test_resource_cap(free2):
    theta, _ = free_group_corollary(F2)
    with pytest.raises(ResourceError):
        check_pre_injectivity(theta, 5, cap=100)
    with pytest.raises(UsageError):
        check_surjectivity(theta, -1)


def test_mep_pair():
    theta, dual = free_group_corollary(F2)
    k = check_pre_injectivity(dual, 0).witness
    pair = mep_pair(dual, k)
    assert pair.x == k.configuration and not pair.y
    assert replay_witness(dual, pair)
    c = cyclic_sum()
    pair2 = mep_pair(c, check_pre_injectivity(c).witness)
    assert replay_witness(c, pair2)
    with pytest.raises(UsageError):
        mep_pair(theta, Configuration.delta(theta.group, F2, 2, theta.group.identity, 0))


def test_replay_rejects_corruption(free1):
    _, dual = free_group_corollary(F2)
    G = dual.group
    bad = KernelElement(Configuration.delta(G, F2, 2, G.identity, 0))
    assert not replay_witness(dual, bad)
    theta = shift(free1, free1.gen(0), 1, QQ)
    good = check_post_surjectivity(theta, 1).witness
    z = good.preimages[0].scale(2)
    assert not replay_witness(theta, PreimageTable((z,)))
    assert not replay_witness(theta, PreimageTable(()))
    assert not replay_witness(theta, "not a witness")
    assert not replay_witness(theta, MEPPair(z, z))


def test_verify_duality_cyclic_sum():
    rep = verify_duality_finite(cyclic_sum())
    assert rep.all_hold
    assert rep.dimensions["dim_ker"] == rep.dimensions["dim_im"] == 1
    assert all(rep.equations.values())


def test_verify_duality_invertible(s3):
    s, r = s3.generators()
    theta = LCAMatrix([[parse_entry("0", s3, F3), parse_entry("s", s3, F3)], [parse_entry("r^-1", s3, F3), parse_entry("0", s3, F3)]])
    rep = verify_duality_finite(theta)
    assert rep.all_hold and rep.dimensions["dim_ker"] == 0 and rep.dimensions["dim_im"] == 12


def test_verify_duality_errors(free2):
    with pytest.raises(UnsupportedOperation):
        verify_duality_finite(LCAMatrix.identity(free2, F2, 1))
    with pytest.raises(ResourceError):
        verify_duality_finite(LCAMatrix.identity(CyclicGroup(50), F2, 2), cap=64)


FINITE = [("cyclic6", lambda: CyclicGroup(6)), ("s3", symmetric_group), ("cyclic2", lambda: CyclicGroup(2))]


@pytest.mark.parametrize("gname, make", FINITE)
@pytest.mark.parametrize("F", [F2, F3])
def test_finite_verdicts_match_oracle(gname, make, F):
    G = make()
    for seed in range(25):
        n = 1 + seed % 3
        theta = random_lca(G, F, n, 1, seed)
        rows, N = finite_matrix(theta)
        full = sympy_rank(F, rows, N) == N
        verdicts = analyze(theta)
        for v in verdicts:
            assert v.status is (Status.CERTIFIED if full else Status.REFUTED), (v, full)
            if v.witness is not None:
                assert replay_witness(theta, v.witness)
        dual = {v.property: v.holds for v in analyze(adjoint(theta))}
        mine = {v.property: v.holds for v in verdicts}
        assert mine[PRE_INJECTIVE] == dual[SURJECTIVE]
        assert mine[INJECTIVE] == dual[POST_SURJECTIVE]


@pytest.mark.parametrize("seed", range(12))
def test_monotonicity_free(seed):
    G = FreeGroup(2)
    theta = random_lca(G, F2, 1 + seed % 2, 1, seed, density=0.3)
    pre = [check_pre_injectivity(theta, r).status for r in range(3)]
    sur = [check_surjectivity(theta, r).status for r in range(3)]
    for seq in (pre, sur):
        for a, b in zip(seq, seq[1:]):
            if a is Status.REFUTED:
                assert b is Status.REFUTED


@pytest.mark.parametrize("seed", range(15))
def test_witnesses_sound_on_infinite_groups(seed):
    for G in (FreeGroup(2), FreeGroup(1)):
        theta = random_lca(G, F3, 1 + seed % 2, 1, seed, density=0.35)
        for v in analyze(theta, r=2):
            if v.status is Status.REFUTED:
                assert v.witness is not None
            if v.witness is not None:
                assert replay_witness(theta, v.witness)

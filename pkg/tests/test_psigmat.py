import pytest

from conftest import grp, perm_subgroup, sig
from sigmagroups.catalog import CATALOG, SIGMA_SPECS
from sigmagroups.group import is_normal, permutes, quotient
from sigmagroups.lattice import all_subgroups, normal_subgroups
from sigmagroups.psigmat import (PsigmaTVerdict, chain_certifies, conjugacy_class,
                                 hall_set_certifies, is_psigmat, is_psigmat_bruteforce,
                                 is_psigmat_subnormal_criterion, is_s_permutable,
                                 is_sigma_quasinormal, is_sigma_subnormal,
                                 is_special_psigmat, normal_sigma_hall_subgroups,
                                 replay_witness, sigma_quasinormal_witness,
                                 sigma_subnormal_chain, special_psigmat_certificate,
                                 theoremA_premises, theoremB_premises, theoremC_criterion)
from sigmagroups.residuals import is_hall_subgroup
from sigmagroups.sigma import (SigmaPartition, complete_hall_sigma_sets, is_sigma_nilpotent,
                               is_sigma_primary)

SIGMA0 = SigmaPartition.sigma0()
EXAMPLE_SIGMA = "3,5|*"
KEYS = list(CATALOG)
UP_TO_48 = [k for k, e in CATALOG.items() if e.build().order <= 48]


def order_two(G):
    return [A for A in all_subgroups(G) if A.order == 2]


def c15(G):
    return next(A for A in all_subgroups(G) if A.order == 15)


# -- sigma-quasinormality --

def test_normal_subgroups_are_quasinormal(c5s3, S4):
    for G in (c5s3, S4):
        for spec in SIGMA_SPECS:
            for N in normal_subgroups(G):
                assert is_sigma_quasinormal(N, G, sig(spec))


def test_sigma_primary_group_everything_quasinormal(S4):
    s = sig("2,3|*")
    assert is_sigma_primary(S4, s)
    for A in all_subgroups(S4):
        w = sigma_quasinormal_witness(A, S4, s)
        assert w.members == (S4.whole(),)


def test_involution_of_c5s3_not_quasinormal(c5s3):
    s = sig(EXAMPLE_SIGMA)
    A = order_two(c5s3)[0]
    assert not is_sigma_quasinormal(A, c5s3, s)
    # every Hall set fails against some conjugate of its Sylow 2
    for hs in complete_hall_sigma_sets(c5s3, s):
        assert not hall_set_certifies(A, c5s3, s, hs)


def test_witness_replays(S4):
    s = sig("2|3|*")
    for A in all_subgroups(S4):
        w = sigma_quasinormal_witness(A, S4, s)
        if w is not None:
            assert hall_set_certifies(A, S4, s, w)


def test_conjugacy_class(S4):
    t = perm_subgroup(S4, "(1 2)")
    assert len(conjugacy_class(t, S4.whole())) == 6
    V4 = perm_subgroup(S4, "(1 2)(3 4)", "(1 3)(2 4)")
    assert conjugacy_class(V4, S4.whole()) == [V4]


@pytest.mark.parametrize("key", UP_TO_48)
def test_sigma0_quasinormal_is_s_permutable(key):
    G = grp(key)
    for A in all_subgroups(G):
        assert is_sigma_quasinormal(A, G, SIGMA0) == is_s_permutable(A, G)


# -- sigma-subnormality --

def test_subnormal_examples(c5s3, S4):
    assert sigma_subnormal_chain(S4.whole(), S4, SIGMA0) == [S4.whole()]
    s = sig("2,3|*")
    for A in all_subgroups(S4):
        assert is_sigma_subnormal(A, S4, s)
    K = perm_subgroup(S4, "(1 2)(3 4)")
    chain = sigma_subnormal_chain(K, S4, SIGMA0)
    assert [M.order for M in chain] == [2, 4, 12, 24]
    assert chain_certifies(chain, K, S4, SIGMA0)
    for A in order_two(c5s3):
        assert not is_sigma_subnormal(A, c5s3, sig(EXAMPLE_SIGMA))


def test_chain_certifies_rejects_bad_chains(S4):
    t = perm_subgroup(S4, "(1 2)")
    assert not is_sigma_subnormal(t, S4, SIGMA0)
    S3 = perm_subgroup(S4, "(1 2)", "(1 2 3)")
    assert not chain_certifies([t, S3, S4.whole()], t, S4, SIGMA0)
    assert not chain_certifies([], t, S4, SIGMA0)


@pytest.mark.parametrize("key", UP_TO_48)
def test_sigma0_subnormal_is_classical(key):
    G = grp(key)
    classical = {G.whole()}
    frontier = [G.whole()]
    while frontier:
        B = frontier.pop()
        for N in normal_subgroups(B):
            if N not in classical:
                classical.add(N)
                frontier.append(N)
    for A in all_subgroups(G):
        assert is_sigma_subnormal(A, G, SIGMA0) == (A in classical)


@pytest.mark.parametrize("key", KEYS)
@pytest.mark.parametrize("spec", SIGMA_SPECS)
def test_quasinormal_implies_subnormal(key, spec):
    G, s = grp(key), sig(spec)
    for A in all_subgroups(G):
        if is_sigma_quasinormal(A, G, s):
            assert is_sigma_subnormal(A, G, s)


# -- PsigmaT --

def test_psigmat_fixtures(c5s3, S4):
    assert is_psigmat_bruteforce(grp("D8xC3"), SIGMA0).value
    assert is_psigmat_bruteforce(c5s3, sig(EXAMPLE_SIGMA)).value
    v = is_psigmat_bruteforce(S4, SIGMA0)
    assert not v.value and v.route == "bruteforce"
    K, H = v.witness
    V4 = perm_subgroup(S4, "(1 2)(3 4)", "(1 3)(2 4)")
    assert H == V4 and K.order == 2 and K < V4
    assert replay_witness(v, S4, SIGMA0)


def test_named_witness_pair_replays(S4):
    K = perm_subgroup(S4, "(1 2)(3 4)")
    V4 = perm_subgroup(S4, "(1 2)(3 4)", "(1 3)(2 4)")
    forged = PsigmaTVerdict(False, "bruteforce", (K, V4))
    assert replay_witness(forged, S4, SIGMA0)
    C3 = perm_subgroup(S4, "(1 2 3)")
    assert not permutes(K, C3)   # K<(1 2 3)> has six elements but is not a subgroup
    assert not is_normal(K, S4.whole())


def test_forged_witness_is_rejected(S4, c5s3):
    A4 = perm_subgroup(S4, "(1 2 3)", "(1 2)(3 4)")
    V4 = perm_subgroup(S4, "(1 2)(3 4)", "(1 3)(2 4)")
    assert not replay_witness(PsigmaTVerdict(False, "bruteforce", (V4, A4)), S4, SIGMA0)
    assert not replay_witness(PsigmaTVerdict(True, "bruteforce", (V4, A4)), S4, SIGMA0)


def test_subnormal_route_fixtures(c5s3, S4):
    assert is_psigmat_subnormal_criterion(grp("C1"), SIGMA0).value
    assert is_psigmat_subnormal_criterion(c5s3, sig(EXAMPLE_SIGMA)).value
    v = is_psigmat_subnormal_criterion(S4, SIGMA0)
    assert not v.value and replay_witness(v, S4, SIGMA0)
    A4 = grp("A4")
    s = sig("2|3|*")
    assert (is_psigmat_bruteforce(A4, s).value
            == is_psigmat_subnormal_criterion(A4, s).value)


@pytest.mark.parametrize("key", ["Q8", "D8", "S3", "C12", "D8xC3", "C24"])
def test_classical_pst_true(key):
    assert is_psigmat(grp(key), sig("2|3|*"))


@pytest.mark.parametrize("key", KEYS)
@pytest.mark.parametrize("spec", SIGMA_SPECS)
def test_routes_agree_when_hall_sets_exist(key, spec):
    G, s = grp(key), sig(spec)
    if not complete_hall_sigma_sets(G, s):
        pytest.skip("no complete Hall sigma-set")
    bf, sn = is_psigmat_bruteforce(G, s), is_psigmat_subnormal_criterion(G, s)
    assert bf.value == sn.value
    assert replay_witness(bf, G, s) and replay_witness(sn, G, s)


@pytest.mark.parametrize("spec", ["2|*", "3,5|*", "2,5|3|*"])
def test_routes_split_without_hall_sets(A5, spec):
    """With no complete Hall sigma-set nothing is quasinormal: transitivity holds
    vacuously while A5, subnormal in itself, is not quasinormal."""
    s = sig(spec)
    assert complete_hall_sigma_sets(A5, s) == []
    assert is_psigmat_bruteforce(A5, s).value
    sn = is_psigmat_subnormal_criterion(A5, s)
    assert not sn.value and sn.witness[0] == A5.trivial()
    assert replay_witness(sn, A5, s)


@pytest.mark.parametrize("key", ["C12", "C24", "D8xC3", "Q8"])
@pytest.mark.parametrize("spec", SIGMA_SPECS)
def test_sigma_nilpotent_groups_are_psigmat(key, spec):
    G, s = grp(key), sig(spec)
    assert is_sigma_nilpotent(G, s)
    assert is_psigmat(G, s)


# -- special PsigmaT --

def test_special_c5s3(c5s3):
    cert = special_psigmat_certificate(c5s3, sig(EXAMPLE_SIGMA))
    assert cert is not None
    assert (cert.residual.order, cert.hall.order, cert.complement.order) == (3, 15, 5)
    assert cert.block == 0


def test_special_fixtures(S4):
    cert = special_psigmat_certificate(grp("C12"), SIGMA0)
    assert cert is not None and cert.residual.is_trivial() and cert.complement == cert.hall
    assert not is_special_psigmat(S4, SIGMA0)
    assert is_special_psigmat(grp("C1"), SIGMA0)


@pytest.mark.parametrize("key", KEYS)
@pytest.mark.parametrize("spec", SIGMA_SPECS)
def test_special_implies_psigmat(key, spec):
    G, s = grp(key), sig(spec)
    if is_special_psigmat(G, s):
        assert is_psigmat(G, s)


@pytest.mark.parametrize("key", ["S4", "C5xS3", "SL(2,3)", "D12", "C5:C4", "D8xC3"])
@pytest.mark.parametrize("spec", SIGMA_SPECS)
def test_quotient_closure(key, spec):
    G, s = grp(key), sig(spec)
    pst, special = is_psigmat(G, s), is_special_psigmat(G, s)
    for N in normal_subgroups(G):
        Q = quotient(G, N).group
        if pst:
            assert is_psigmat(Q, s)
        if special:
            assert is_special_psigmat(Q, s)


# -- theorem premises --

def test_theorem_C_examples(c5s3, S4):
    r = theoremC_criterion(c5s3, sig(EXAMPLE_SIGMA))
    assert r.applicable and r.verdict
    assert r.detail["residual_order"] == 3
    r = theoremC_criterion(grp("C12"), sig("2|3|*"))
    assert r.applicable and r.verdict
    r = theoremC_criterion(S4, SIGMA0)
    assert r.applicable and not r.verdict
    assert not r.detail["residual_hall"] and not r.detail["residual_abelian"]


def test_theorem_C_inapplicable(A5):
    r = theoremC_criterion(A5, sig("2,3|5|*"))
    assert not r.applicable and not r.detail["wielandt_set_found"]


@pytest.mark.parametrize("key", KEYS)
@pytest.mark.parametrize("spec", SIGMA_SPECS)
def test_theorem_C_equivalence(key, spec):
    G, s = grp(key), sig(spec)
    r = theoremC_criterion(G, s)
    if r.applicable:
        assert r.verdict == is_psigmat(G, s)


def test_theorem_A_B_examples(c5s3, S4):
    s = sig(EXAMPLE_SIGMA)
    D = c15(c5s3)
    assert theoremA_premises(c5s3, s, D)
    assert theoremB_premises(c5s3, s, D)
    assert not theoremA_premises(S4, SIGMA0, S4.whole())
    A4 = perm_subgroup(S4, "(1 2 3)", "(1 2)(3 4)")
    assert not is_hall_subgroup(A4, S4)
    assert not theoremB_premises(S4, SIGMA0, A4)
    # D trivial: B reduces to sigma-nilpotency of G
    assert theoremB_premises(grp("C12"), SIGMA0, grp("C12").trivial())
    assert not theoremB_premises(S4, SIGMA0, S4.trivial())


@pytest.mark.parametrize("key", KEYS)
@pytest.mark.parametrize("spec", SIGMA_SPECS)
def test_theorem_A_B_implications(key, spec):
    G, s = grp(key), sig(spec)
    for D in normal_sigma_hall_subgroups(G, s):
        if theoremA_premises(G, s, D) or theoremB_premises(G, s, D):
            assert is_psigmat(G, s)

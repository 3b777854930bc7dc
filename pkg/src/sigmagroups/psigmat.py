"""Deciders for sigma-quasinormality, sigma-subnormality and the PsigmaT property,
plus premise evaluators for the three transitivity theorems.

Every decider takes an ambient group, which may be a whole ``FiniteGroup`` or
a ``Subgroup`` of one; "K is sigma-quasinormal in H" is decided inside ``H``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from .group import (FiniteGroup, Subgroup, as_subgroup, conjugate_subgroup, core_in,
                    is_normal, permutes, prime_divisors, quotient)
from .lattice import all_subgroups, normal_subgroups, subgroups_between
from .residuals import (O_upper, induces_power_automorphisms, is_hall_subgroup,
                        sigma_nilpotent_residual)
from .sigma import (HallSigmaSet, SigmaPartition, find_generalized_wielandt_set,
                    hall_block_subgroups, is_sigma_full_sylow_type, is_sigma_nilpotent,
                    is_sigma_primary, is_sigma_soluble, sigma_of)


def conjugacy_class(H: Subgroup, B: Subgroup) -> list[Subgroup]:
    """The distinct conjugates ``H^x`` for ``x`` in ``B``, in canonical order."""
    cache = H.parent._cache.setdefault("conj_class", {})
    key = (H.mask, B.mask)
    hit = cache.get(key)
    if hit is None:
        hit = sorted({conjugate_subgroup(H, x) for x in B.members}, key=lambda s: s.key)
        cache[key] = hit
    return hit


# -- sigma-quasinormality --

def sigma_quasinormal_witness(A: Subgroup, G: FiniteGroup | Subgroup,
                              sigma: SigmaPartition) -> HallSigmaSet | None:
    """A complete Hall sigma-set of ``G`` all of whose conjugates permute with ``A``.

    The condition on a Hall set is a conjunction over its members, so a
    witness exists iff every block has some Hall subgroup whose whole
    conjugacy class permutes with ``A``; the first such one per block is used.
    """
    B = as_subgroup(G)
    if not A <= B:
        raise ValueError("A is not contained in G")
    P = B.parent
    key = ("sqn", sigma, A.mask, B.mask)
    if key in P._cache:
        return P._cache[key]
    chosen = []
    for i in sorted(sigma_of(B.order, sigma)):
        pick = None
        for H in hall_block_subgroups(B, sigma, i):
            if all(permutes(A, C) for C in conjugacy_class(H, B)):
                pick = H
                break
        if pick is None:
            P._cache[key] = None
            return None
        chosen.append((i, pick))
    res = HallSigmaSet(tuple(chosen))
    P._cache[key] = res
    return res


def is_sigma_quasinormal(A: Subgroup, G: FiniteGroup | Subgroup, sigma: SigmaPartition) -> bool:
    return sigma_quasinormal_witness(A, G, sigma) is not None


def hall_set_certifies(A: Subgroup, G: FiniteGroup | Subgroup, sigma: SigmaPartition,
                       hall_set: HallSigmaSet) -> bool:
    """Replay: ``hall_set`` is a complete Hall sigma-set of ``G`` and ``A`` permutes
    with every conjugate of every member."""
    B = as_subgroup(G)
    if set(hall_set.blocks) != set(sigma_of(B.order, sigma)):
        return False
    for i, H in hall_set.entries:
        if H not in hall_block_subgroups(B, sigma, i):
            return False
        for x in B.members:
            if not permutes(A, conjugate_subgroup(H, x)):
                return False
    return True


def is_s_permutable(A: Subgroup, G: FiniteGroup | Subgroup) -> bool:
    """Classical check: ``A`` permutes with every Sylow subgroup of ``G``.

    Independent of the Hall-set machinery: Sylow subgroups are found by order
    and permutability is decided by closure of the product set.
    """
    B = as_subgroup(G)
    P = B.parent
    for p in prime_divisors(B.order):
        pk = 1
        while B.order % (pk * p) == 0:
            pk *= p
        for S in all_subgroups(B):
            if S.order != pk:
                continue
            prod = {P.mul(a, s) for a in A.members for s in S.members}
            if any(P.mul(x, y) not in prod for x in prod for y in prod):
                return False
    return True


# -- sigma-subnormality --

def _step_ok(M: Subgroup, B: Subgroup, sigma: SigmaPartition) -> bool:
    if is_normal(M, B):
        return True
    return len(sigma_of(B.order // core_in(M, B).order, sigma)) <= 1


def sigma_subnormal_chain(A: Subgroup, G: FiniteGroup | Subgroup,
                          sigma: SigmaPartition) -> list[Subgroup] | None:
    """An ascending chain from ``A`` to ``G`` witnessing sigma-subnormality, or None.

    Memoised search downward from ``G``: ``A`` is sigma-subnormal in ``B`` iff
    ``A == B`` or some ``A <= M < B`` with a valid step ``M -> B`` has ``A``
    sigma-subnormal in ``M``.  Larger intermediate subgroups are tried first.
    """
    B = as_subgroup(G)
    if not A <= B:
        raise ValueError("A is not contained in G")
    memo = B.parent._cache.setdefault(("ssn", sigma), {})
    return _chain(A, B, sigma, memo)


def _chain(A, B, sigma, memo):
    if A == B:
        return [A]
    key = (A.mask, B.mask)
    if key in memo:
        return memo[key]
    res = None
    if is_sigma_primary(B, sigma):
        res = [A, B]
    else:
        for M in sorted(subgroups_between(A, B), key=lambda s: (-s.order, s.members)):
            if M == B or not _step_ok(M, B, sigma):
                continue
            sub = _chain(A, M, sigma, memo)
            if sub is not None:
                res = sub + [B]
                break
    memo[key] = res
    return res


def is_sigma_subnormal(A: Subgroup, G: FiniteGroup | Subgroup, sigma: SigmaPartition) -> bool:
    return sigma_subnormal_chain(A, G, sigma) is not None


def chain_certifies(chain: list[Subgroup], A: Subgroup, G: FiniteGroup | Subgroup,
                    sigma: SigmaPartition) -> bool:
    """Replay a subnormal chain step by step."""
    B = as_subgroup(G)
    if not chain or chain[0] != A or chain[-1] != B:
        return False
    for lo, hi in zip(chain, chain[1:]):
        if not lo <= hi:
            return False
        if not (is_normal(lo, hi)
                or len(sigma_of(hi.order // core_in(lo, hi).order, sigma)) <= 1):
            return False
    return True


# -- PsigmaT --

@dataclass(frozen=True)
class PsigmaTVerdict:
    value: bool
    route: str
    witness: Any = None

    def __bool__(self):
        return self.value


def is_psigmat_bruteforce(G: FiniteGroup | Subgroup, sigma: SigmaPartition) -> PsigmaTVerdict:
    """Transitivity checked over all pairs ``K <= H <= G``.

    The witness on failure is the first pair ``(K, H)`` in canonical order
    (by ``H`` then ``K``) with ``K`` quasinormal in ``H``, ``H`` in ``G``,
    but ``K`` not in ``G``.
    """
    B = as_subgroup(G)
    key = ("pst_bf", sigma, B.mask)
    hit = B.parent._cache.get(key)
    if hit is not None:
        return hit
    verdict = PsigmaTVerdict(True, "bruteforce")
    for H in all_subgroups(B):
        if not is_sigma_quasinormal(H, B, sigma):
            continue
        for K in all_subgroups(H):
            if (is_sigma_quasinormal(K, H, sigma)
                    and not is_sigma_quasinormal(K, B, sigma)):
                verdict = PsigmaTVerdict(False, "bruteforce", (K, H))
                break
        if not verdict.value:
            break
    B.parent._cache[key] = verdict
    return verdict


def is_psigmat_subnormal_criterion(G: FiniteGroup | Subgroup,
                                   sigma: SigmaPartition) -> PsigmaTVerdict:
    """Every sigma-subnormal subgroup is sigma-quasinormal.

    The witness on failure is ``(A, chain)`` for the first offending ``A``.
    """
    B = as_subgroup(G)
    key = ("pst_sn", sigma, B.mask)
    hit = B.parent._cache.get(key)
    if hit is not None:
        return hit
    verdict = PsigmaTVerdict(True, "subnormal")
    for A in all_subgroups(B):
        chain = sigma_subnormal_chain(A, B, sigma)
        if chain is not None and not is_sigma_quasinormal(A, B, sigma):
            verdict = PsigmaTVerdict(False, "subnormal", (A, chain))
            break
    B.parent._cache[key] = verdict
    return verdict


def is_psigmat(G: FiniteGroup | Subgroup, sigma: SigmaPartition) -> bool:
    return is_psigmat_bruteforce(G, sigma).value


def replay_witness(verdict: PsigmaTVerdict, G: FiniteGroup | Subgroup,
                   sigma: SigmaPartition) -> bool:
    """Re-derive a failing verdict's witness from the primitive predicates."""
    if verdict.value:
        return verdict.witness is None
    if verdict.route == "bruteforce":
        K, H = verdict.witness
        B = as_subgroup(G)
        qn_kh = sigma_quasinormal_witness(K, H, sigma)
        qn_hg = sigma_quasinormal_witness(H, B, sigma)
        return (K <= H <= B
                and qn_kh is not None and hall_set_certifies(K, H, sigma, qn_kh)
                and qn_hg is not None and hall_set_certifies(H, B, sigma, qn_hg)
                and not _qn_exhaustive(K, B, sigma))
    if verdict.route == "subnormal":
        A, chain = verdict.witness
        return chain_certifies(chain, A, G, sigma) and not _qn_exhaustive(A, G, sigma)
    return False


def _qn_exhaustive(A: Subgroup, G: FiniteGroup | Subgroup, sigma: SigmaPartition) -> bool:
    """Sigma-quasinormality by trying every complete Hall sigma-set in full."""
    from .sigma import complete_hall_sigma_sets

    return any(hall_set_certifies(A, G, sigma, hs) for hs in complete_hall_sigma_sets(G, sigma))


# -- special PsigmaT --

@dataclass(frozen=True)
class SpecialCertificate:
    residual: Subgroup
    hall: Subgroup
    complement: Subgroup
    block: int


def special_psigmat_certificate(G: FiniteGroup | Subgroup,
                                sigma: SigmaPartition) -> SpecialCertificate | None:
    """Search for ``(D, E, S, i)``: ``D`` the sigma-nilpotent residual, a normal Hall
    subgroup on which ``G`` acts by power automorphisms, inside a Hall
    ``sigma_i``-subgroup ``E = D x S`` with ``S`` normal in ``E``."""
    B = as_subgroup(G)
    D = sigma_nilpotent_residual(B, sigma)
    if not is_hall_subgroup(D, B) or not induces_power_automorphisms(B, D):
        return None
    blocks = sorted(sigma_of(B.order, sigma))
    if not blocks:
        # trivial group: the trivial subgroup is Hall for any block
        return SpecialCertificate(D, B, B, sigma.block_of(2))
    for i in blocks:
        for E in hall_block_subgroups(B, sigma, i):
            if not D <= E:
                continue
            for S in normal_subgroups(E):
                if S.order * D.order == E.order and (S & D).is_trivial():
                    return SpecialCertificate(D, E, S, i)
    return None


def is_special_psigmat(G: FiniteGroup | Subgroup, sigma: SigmaPartition) -> bool:
    return special_psigmat_certificate(G, sigma) is not None


# -- theorem premises --

@dataclass
class TheoremCResult:
    applicable: bool
    verdict: bool
    detail: dict = field(default_factory=dict)


def theoremC_criterion(G: FiniteGroup, sigma: SigmaPartition) -> TheoremCResult:
    """Evaluate the residual-based PsigmaT criterion and whether its hypotheses hold.

    The verdict is computed even when the hypotheses fail; callers compare it
    with the PsigmaT verdict only when ``applicable`` is set.
    """
    soluble = is_sigma_soluble(G, sigma)
    wielandt = find_generalized_wielandt_set(G, sigma)
    D = sigma_nilpotent_residual(G, sigma)
    abelian = all(G.mul(a, b) == G.mul(b, a) for a in D.members for b in D.members)
    hall = is_hall_subgroup(D, G)
    odd = D.order % 2 == 1
    power = induces_power_automorphisms(G, D)
    quotients = {}
    for i in sorted(sigma_of(D.order, sigma)):
        O = O_upper(D, sigma, i)
        quotients[sigma.block_label(i)] = is_special_psigmat(quotient(G, O).group, sigma)
    cond_i = abelian and hall and odd and power
    cond_ii = all(quotients.values())
    detail = {
        "sigma_soluble": soluble,
        "wielandt_set_found": wielandt is not None,
        "residual_order": D.order,
        "residual_abelian": abelian,
        "residual_hall": hall,
        "residual_odd": odd,
        "power_automorphisms": power,
        "quotients_special": quotients,
    }
    return TheoremCResult(soluble and wielandt is not None, cond_i and cond_ii, detail)


def is_sigma_hall(D: Subgroup, G: FiniteGroup | Subgroup, sigma: SigmaPartition) -> bool:
    """``D`` is a Hall ``Pi``-subgroup for ``Pi = sigma(D)``."""
    B = as_subgroup(G)
    return not (sigma_of(D.order, sigma) & sigma_of(B.order // D.order, sigma))


def normal_sigma_hall_subgroups(G: FiniteGroup | Subgroup,
                                sigma: SigmaPartition) -> list[Subgroup]:
    return [D for D in normal_subgroups(G) if is_sigma_hall(D, G, sigma)]


def theoremA_premises(G: FiniteGroup, sigma: SigmaPartition, D: Subgroup) -> bool:
    """Normal sigma-Hall ``D``, ``G/D`` PsigmaT, every sigma-subnormal subgroup of ``D``
    normal in ``G``, and ``G`` sigma-full of Sylow type."""
    W = G.whole()
    if not (is_normal(D, W) and is_sigma_hall(D, W, sigma)):
        return False
    if not is_psigmat(quotient(G, D).group, sigma):
        return False
    for A in all_subgroups(D):
        if is_sigma_subnormal(A, D, sigma) and not is_normal(A, W):
            return False
    return is_sigma_full_sylow_type(G, sigma)


def theoremB_premises(G: FiniteGroup, sigma: SigmaPartition, D: Subgroup) -> bool:
    """Normal Hall sigma-nilpotent ``D`` with sigma-nilpotent ``G/D``, and
    ``G/O^{sigma_i}(D)`` special PsigmaT for every block ``i`` of ``D``."""
    W = G.whole()
    if not (is_normal(D, W) and is_hall_subgroup(D, W)):
        return False
    if not (is_sigma_nilpotent(D, sigma) and is_sigma_nilpotent(quotient(G, D).group, sigma)):
        return False
    return all(is_special_psigmat(quotient(G, O_upper(D, sigma, i)).group, sigma)
               for i in sorted(sigma_of(D.order, sigma)))

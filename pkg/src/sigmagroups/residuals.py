"""Residuals, block radicals, and the Hall / power-automorphism predicates."""

from __future__ import annotations

from .group import (FiniteGroup, GroupError, Subgroup, as_subgroup, conjugate_subgroup,
                    coprime, is_normal, quotient, subgroup_as_group)
from .lattice import all_subgroups, normal_subgroups
from .sigma import SigmaPartition, is_Pi_number, is_sigma_nilpotent


def _quotient_is_sigma_nilpotent(B: Subgroup, N: Subgroup, sigma: SigmaPartition) -> bool:
    if B.is_whole():
        return is_sigma_nilpotent(quotient(B.parent, N).group, sigma)
    H, emb = subgroup_as_group(B)
    pos = {x: i for i, x in enumerate(emb)}
    return is_sigma_nilpotent(quotient(H, H.subgroup(pos[x] for x in N.members)).group, sigma)


def sigma_nilpotent_residual(G: FiniteGroup | Subgroup, sigma: SigmaPartition) -> Subgroup:
    """Intersection of the normal subgroups with sigma-nilpotent quotient."""
    B = as_subgroup(G)
    P = B.parent
    key = ("residual", sigma, B.mask)
    hit = P._cache.get(key)
    if hit is not None:
        return hit
    mask = B.mask
    for N in normal_subgroups(B):
        if mask & ~N.mask == 0:
            continue
        if _quotient_is_sigma_nilpotent(B, N, sigma):
            mask &= N.mask
    D = P._sub(mask)
    if not _quotient_is_sigma_nilpotent(B, D, sigma):
        raise AssertionError("residual quotient is not sigma-nilpotent")
    P._cache[key] = D
    return D


def nilpotent_residual(G: FiniteGroup | Subgroup) -> Subgroup:
    return sigma_nilpotent_residual(G, SigmaPartition.sigma0())


def O_upper(G: FiniteGroup | Subgroup, sigma: SigmaPartition, i: int) -> Subgroup:
    """Smallest normal subgroup whose quotient is a ``sigma_i``-group."""
    B = as_subgroup(G)
    mask = B.mask
    for N in normal_subgroups(B):
        if is_Pi_number(B.order // N.order, (i,), sigma):
            mask &= N.mask
    return B.parent._sub(mask)


def O_lower(G: FiniteGroup | Subgroup, sigma: SigmaPartition, i: int) -> Subgroup:
    """Largest normal ``sigma_i``-subgroup."""
    B = as_subgroup(G)
    R = B.parent.trivial()
    for N in normal_subgroups(B):
        if is_Pi_number(N.order, (i,), sigma):
            R = R.join(N)
    if not (is_Pi_number(R.order, (i,), sigma) and is_normal(R, B)):
        raise AssertionError("join of normal sigma_i-subgroups left the class")
    return R


def is_hall_subgroup(A: Subgroup, G: FiniteGroup | Subgroup) -> bool:
    B = as_subgroup(G)
    if not A <= B:
        raise GroupError("A is not contained in G")
    return coprime(A.order, B.order // A.order)


def induces_power_automorphisms(G: FiniteGroup | Subgroup, D: Subgroup) -> bool:
    """Whether conjugation by each ``g`` in ``G`` sends every ``x`` in ``D`` into ``<x>``."""
    B = as_subgroup(G)
    if not (D <= B and is_normal(D, B)):
        raise GroupError("D is not normal in G")
    P = B.parent
    for x in D.members:
        cyc = P.generate([x])
        # power automorphisms compose, so generators suffice
        for g in B.generators():
            if P.conj(x, g) not in cyc:
                return False
    return True


def induces_power_automorphisms_by_subgroups(G: FiniteGroup | Subgroup, D: Subgroup) -> bool:
    """Same predicate, decided as: every subgroup of ``D`` is normal in ``G``."""
    B = as_subgroup(G)
    if not (D <= B and is_normal(D, B)):
        raise GroupError("D is not normal in G")
    return all(conjugate_subgroup(S, g) == S for S in all_subgroups(D) for g in B.members)

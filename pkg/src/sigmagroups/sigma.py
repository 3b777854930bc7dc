"""Partitions of the primes and the classifiers built on them.

Blocks are addressed by integer index.  Explicit blocks get ``0..k-1``.  With
a rest block, every other prime maps to index ``k``; without one, each other
prime ``p`` is a singleton block with index ``k + p``.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterable, Mapping
from dataclasses import dataclass

from .group import (FiniteGroup, GroupError, Subgroup, as_subgroup, conjugate_subgroup,
                    is_prime, prime_divisors)
from .lattice import all_subgroups, chief_series


@dataclass(frozen=True)
class SigmaPartition:
    blocks: tuple[frozenset[int], ...]
    has_rest_block: bool = True

    def __post_init__(self):
        blocks = tuple(frozenset(int(p) for p in b) for b in self.blocks)
        seen: set[int] = set()
        for b in blocks:
            if not b:
                raise GroupError("blocks must be non-empty")
            for p in b:
                if not is_prime(p):
                    raise GroupError(f"{p} is not prime")
                if p in seen:
                    raise GroupError(f"prime {p} appears in two blocks")
                seen.add(p)
        object.__setattr__(self, "blocks", blocks)
        object.__setattr__(self, "_lookup", {p: i for i, b in enumerate(blocks) for p in b})

    @classmethod
    def sigma0(cls) -> SigmaPartition:
        """The partition into singletons ``{{2}, {3}, {5}, ...}``."""
        return cls((), has_rest_block=False)

    def block_of(self, p: int) -> int:
        i = self._lookup.get(p)
        if i is not None:
            return i
        k = len(self.blocks)
        return k if self.has_rest_block else k + p

    def block_label(self, i: int) -> str:
        k = len(self.blocks)
        if i < k:
            return "{" + ",".join(map(str, sorted(self.blocks[i]))) + "}"
        if self.has_rest_block and i == k:
            return "*"
        return "{" + str(i - k) + "}"

    def contains(self, i: int, p: int) -> bool:
        return self.block_of(p) == i

    def __str__(self) -> str:
        parts = [",".join(map(str, sorted(b))) for b in self.blocks]
        if self.has_rest_block:
            parts.append("*")
        return "|".join(parts) if parts else "sigma0"

    def is_classical_on(self, n: int) -> bool:
        """Whether each block meets ``pi(n)`` in at most one prime."""
        blocks = [self.block_of(p) for p in prime_divisors(n)]
        return len(blocks) == len(set(blocks))


def sigma_of(n: int, sigma: SigmaPartition) -> frozenset[int]:
    """Indices of the blocks containing a prime divisor of ``n``."""
    if n < 1:
        raise GroupError("n must be positive")
    return frozenset(sigma.block_of(p) for p in prime_divisors(n))


def is_Pi_number(n: int, Pi: Iterable[int], sigma: SigmaPartition) -> bool:
    return sigma_of(n, sigma) <= frozenset(Pi)


def is_sigma_primary(G: FiniteGroup | Subgroup, sigma: SigmaPartition) -> bool:
    return len(sigma_of(len(G), sigma)) <= 1


def sigma_elements(G: FiniteGroup | Subgroup, sigma: SigmaPartition, i: int) -> int:
    """Bitmask of the elements of ``G`` whose order is a ``{sigma_i}``-number."""
    B = as_subgroup(G)
    P = B.parent
    mask = 0
    for x in B.members:
        if is_Pi_number(P.element_order(x), (i,), sigma):
            mask |= P._bit[x]
    return mask


def is_sigma_nilpotent(G: FiniteGroup | Subgroup, sigma: SigmaPartition) -> bool:
    """Each block's elements form a subgroup and those subgroups fill ``G``.

    When that holds the subgroups are characteristic with coprime orders, so
    ``G`` is their internal direct product; the converse is immediate.
    """
    B = as_subgroup(G)
    P = B.parent
    key = ("snil", sigma, B.mask)
    hit = P._cache.get(key)
    if hit is not None:
        return hit
    total = 1
    ok = True
    for i in sorted(sigma_of(B.order, sigma)):
        mask = sigma_elements(B, sigma, i)
        if P._closure_mask(_bits_list(mask)) != mask:
            ok = False
            break
        total *= bin(mask).count("1")
    ok = ok and total == B.order
    P._cache[key] = ok
    return ok


def _bits_list(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def is_sigma_soluble(G: FiniteGroup | Subgroup, sigma: SigmaPartition) -> bool:
    """Every factor of the chief series is sigma-primary."""
    return all(len(sigma_of(f.order, sigma)) <= 1 for f in chief_series(G).factors)


def hall_Pi_subgroups(G: FiniteGroup | Subgroup, Pi: Iterable[int],
                      sigma: SigmaPartition) -> list[Subgroup]:
    B = as_subgroup(G)
    Pi = frozenset(Pi)
    target = 1
    for p in prime_divisors(B.order):
        if sigma.block_of(p) in Pi:
            n = B.order
            while n % p == 0:
                n //= p
                target *= p
    return [A for A in all_subgroups(B) if A.order == target]


def hall_block_subgroups(G: FiniteGroup | Subgroup, sigma: SigmaPartition,
                         i: int) -> list[Subgroup]:
    B = as_subgroup(G)
    key = ("hall", sigma, i, B.mask)
    hit = B.parent._cache.get(key)
    if hit is None:
        hit = hall_Pi_subgroups(B, (i,), sigma)
        B.parent._cache[key] = hit
    return hit


@dataclass(frozen=True)
class HallSigmaSet:
    """One Hall ``sigma_i``-subgroup for each block ``i`` in ``sigma(G)``."""

    entries: tuple[tuple[int, Subgroup], ...]

    @classmethod
    def from_mapping(cls, m: Mapping[int, Subgroup]) -> HallSigmaSet:
        return cls(tuple(sorted(m.items())))

    def __getitem__(self, i: int) -> Subgroup:
        return dict(self.entries)[i]

    def __len__(self):
        return len(self.entries)

    @property
    def blocks(self) -> tuple[int, ...]:
        return tuple(i for i, _ in self.entries)

    @property
    def members(self) -> tuple[Subgroup, ...]:
        return tuple(H for _, H in self.entries)


def complete_hall_sigma_sets(G: FiniteGroup | Subgroup,
                             sigma: SigmaPartition) -> list[HallSigmaSet]:
    B = as_subgroup(G)
    blocks = sorted(sigma_of(B.order, sigma))
    choices = [hall_block_subgroups(B, sigma, i) for i in blocks]
    return [HallSigmaSet(tuple(zip(blocks, combo))) for combo in itertools.product(*choices)]


def _is_D_block(E: Subgroup, sigma: SigmaPartition, i: int) -> bool:
    """``E`` has a Hall ``sigma_i``-subgroup containing a conjugate of every ``sigma_i``-subgroup."""
    halls = hall_block_subgroups(E, sigma, i)
    if not halls:
        return False
    small = [S for S in all_subgroups(E) if is_Pi_number(S.order, (i,), sigma)]
    for H in halls:
        conj = {conjugate_subgroup(H, x) for x in E.members}
        if all(any(S <= C for C in conj) for S in small):
            return True
    return False


def is_sigma_full_sylow_type(G: FiniteGroup | Subgroup, sigma: SigmaPartition) -> bool:
    B = as_subgroup(G)
    key = ("full", sigma, B.mask)
    hit = B.parent._cache.get(key)
    if hit is None:
        hit = all(_is_D_block(E, sigma, i)
                  for E in all_subgroups(B) for i in sorted(sigma_of(E.order, sigma)))
        B.parent._cache[key] = hit
    return hit


# Which reading of "pi-supersoluble" is in force; see is_pi_supersoluble.
SUPERSOLUBLE_DEFINITION = "chief_factors"


def is_pi_supersoluble(G: FiniteGroup | Subgroup, primes: Iterable[int],
                       definition: str | None = None) -> bool:
    """``"chief_factors"``: every chief factor of order divisible by a prime
    in ``primes`` has prime order.  ``"strict"``: the group is supersoluble and
    ``pi(G)`` is contained in ``primes``.
    """
    definition = definition or SUPERSOLUBLE_DEFINITION
    primes = frozenset(primes)
    factors = chief_series(G).factors
    if definition == "chief_factors":
        return all(is_prime(f.order) for f in factors
                   if any(f.order % p == 0 for p in primes))
    if definition == "strict":
        return (all(is_prime(f.order) for f in factors)
                and set(prime_divisors(len(G))) <= primes)
    raise ValueError(f"unknown supersolubility definition {definition!r}")


def find_generalized_wielandt_set(G: FiniteGroup | Subgroup, sigma: SigmaPartition,
                                  definition: str | None = None) -> HallSigmaSet | None:
    """First complete Hall sigma-set whose members are pi(residual)-supersoluble."""
    from .residuals import sigma_nilpotent_residual

    B = as_subgroup(G)
    primes = prime_divisors(sigma_nilpotent_residual(B, sigma).order)
    blocks = sorted(sigma_of(B.order, sigma))
    good = []
    for i in blocks:
        cands = [H for H in hall_block_subgroups(B, sigma, i)
                 if is_pi_supersoluble(H, primes, definition)]
        if not cands:
            return None
        good.append(cands[0])
    return HallSigmaSet(tuple(zip(blocks, good)))

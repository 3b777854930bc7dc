"""Subgroup lattice: enumeration, normal structure, Frattini subgroup, chief series."""

from __future__ import annotations

from dataclasses import dataclass

from .group import FiniteGroup, Subgroup, as_subgroup, is_normal, order_cap, OrderCapExceeded


def all_subgroups(G: FiniteGroup | Subgroup, cap: int | None = None) -> list[Subgroup]:
    """Every subgroup, sorted by ``(size, members)``.

    Seeds with the cyclic subgroups and joins with cyclic subgroups until no
    new subgroup appears.  For a subgroup argument the parent's list is filtered.
    """
    B = as_subgroup(G)
    P = B.parent
    if not B.is_whole():
        cache = P._cache.setdefault("subs_in", {})
        hit = cache.get(B.mask)
        if hit is None:
            hit = [S for S in all_subgroups(P, cap) if S <= B]
            cache[B.mask] = hit
        return hit
    hit = P._cache.get("subgroups")
    if hit is not None:
        return hit
    cap = order_cap() if cap is None else cap
    if P.order > cap:
        raise OrderCapExceeded(f"group order {P.order} exceeds the order cap {cap}")
    cyclic: dict[int, Subgroup] = {}
    for x in range(P.order):
        C = P.generate([x])
        cyclic.setdefault(C.mask, C)
    seeds = sorted(cyclic.values(), key=lambda s: s.key)
    found = dict(cyclic)
    work = list(seeds)
    while work:
        X = work.pop()
        for C in seeds:
            if C.mask & ~X.mask == 0:
                continue
            Y = X.join(C)
            if Y.mask not in found:
                found[Y.mask] = Y
                work.append(Y)
    out = sorted(found.values(), key=lambda s: s.key)
    P._cache["subgroups"] = out
    return out


def subgroups_between(A: Subgroup, B: Subgroup) -> list[Subgroup]:
    """Subgroups ``M`` with ``A <= M <= B``."""
    return [M for M in all_subgroups(B) if A.mask & ~M.mask == 0]


def normal_subgroups(G: FiniteGroup | Subgroup) -> list[Subgroup]:
    B = as_subgroup(G)
    cache = B.parent._cache.setdefault("normal_subs", {})
    hit = cache.get(B.mask)
    if hit is None:
        hit = [S for S in all_subgroups(B) if is_normal(S, B)]
        cache[B.mask] = hit
    return hit


def minimal_normal_subgroups(G: FiniteGroup | Subgroup) -> list[Subgroup]:
    nontrivial = [N for N in normal_subgroups(G) if N.order > 1]
    return [N for N in nontrivial if not any(M < N for M in nontrivial)]


def maximal_subgroups(G: FiniteGroup | Subgroup) -> list[Subgroup]:
    B = as_subgroup(G)
    proper = [S for S in all_subgroups(B) if S != B]
    return [S for S in proper if not any(S < T for T in proper)]


def frattini(G: FiniteGroup | Subgroup) -> Subgroup:
    """Intersection of the maximal subgroups (the whole group if there are none)."""
    B = as_subgroup(G)
    mask = B.mask
    for M in maximal_subgroups(B):
        mask &= M.mask
    return B.parent._sub(mask)


@dataclass(frozen=True)
class ChiefFactor:
    order: int
    cyclic: bool


@dataclass(frozen=True)
class ChiefSeries:
    chain: tuple[Subgroup, ...]

    @property
    def factors(self) -> tuple[ChiefFactor, ...]:
        return tuple(ChiefFactor(hi.order // lo.order, _is_cyclic_factor(hi, lo))
                     for lo, hi in zip(self.chain, self.chain[1:]))

    @property
    def factor_orders(self) -> list[int]:
        return [f.order for f in self.factors]


def _is_cyclic_factor(H: Subgroup, K: Subgroup) -> bool:
    """Whether ``H/K`` is cyclic: some ``h`` has order ``|H:K|`` modulo ``K``."""
    target = H.order // K.order
    rows = H.parent._rows
    for h in H.members:
        y, k = h, 1
        while y not in K:
            y = rows[y][h]
            k += 1
        if k == target:
            return True
    return False


def minimal_normal_over(B: Subgroup, K: Subgroup) -> list[Subgroup]:
    """Normal subgroups of ``B`` minimal subject to properly containing ``K``.

    These are the pullbacks of the minimal normal subgroups of ``B/K``.
    """
    above = [N for N in normal_subgroups(B) if K < N]
    return [N for N in above if not any(K < M < N for M in above)]


def chief_series(G: FiniteGroup | Subgroup) -> ChiefSeries:
    """Chief series built bottom-up, taking the least minimal normal step each time."""
    B = as_subgroup(G)
    cache = B.parent._cache.setdefault("chief", {})
    hit = cache.get(B.mask)
    if hit is not None:
        return hit
    K = B.parent.trivial()
    chain = [K]
    while K != B:
        K = minimal_normal_over(B, K)[0]
        chain.append(K)
    hit = ChiefSeries(tuple(chain))
    cache[B.mask] = hit
    return hit


def all_chief_series(G: FiniteGroup | Subgroup):
    """Yield every chief series of ``G`` (exponentially many in general)."""
    B = as_subgroup(G)

    def extend(chain):
        if chain[-1] == B:
            yield ChiefSeries(tuple(chain))
            return
        for N in minimal_normal_over(B, chain[-1]):
            yield from extend(chain + [N])

    yield from extend([B.parent.trivial()])

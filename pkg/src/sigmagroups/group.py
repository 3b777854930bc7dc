"""Finite groups as multiplication tables, plus subgroup handles.

Elements of a group of order ``n`` are the integers ``0..n-1`` with ``0`` the
identity.  Subgroups are stored as bitmasks over the parent's elements and are
interned, so two handles for the same subgroup are the same object.
"""

from __future__ import annotations

import os
from collections.abc import Iterable, Sequence
from math import gcd
from typing import NamedTuple

import numpy as np

from .perm import Perm

DEFAULT_ORDER_CAP = 200
ORDER_CAP_ENV = "SIGMAGROUPS_ORDER_CAP"


class GroupError(ValueError):
    """Malformed group data or an invalid operation on a group."""


class OrderCapExceeded(GroupError):
    pass


def order_cap() -> int:
    """Current default order cap (environment override, else 200)."""
    raw = os.environ.get(ORDER_CAP_ENV)
    if raw is None or not raw.strip():
        return DEFAULT_ORDER_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise GroupError(f"{ORDER_CAP_ENV} must be an integer, got {raw!r}") from None
    if cap < 1:
        raise GroupError(f"{ORDER_CAP_ENV} must be positive")
    return cap


def _check_cap(n: int, cap: int | None) -> None:
    cap = order_cap() if cap is None else cap
    if n > cap:
        raise OrderCapExceeded(f"group order {n} exceeds the order cap {cap}")


def iter_bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class FiniteGroup:
    """An immutable group given by its multiplication table.

    ``mult[x, y]`` is the index of ``x*y``.  The constructor validates the table
    (full associativity up to order 64, 10**4 sampled triples beyond).
    """

    def __init__(self, mult, labels: Sequence[str] | None = None,
                 generators: Sequence[int] | None = None, name: str = "G",
                 perms: Sequence[Perm] | None = None):
        table = np.array(mult, dtype=np.int64)
        if table.ndim != 2 or table.shape[0] != table.shape[1] or table.shape[0] == 0:
            raise GroupError("multiplication table must be a non-empty square array")
        n = table.shape[0]
        if table.min() < 0 or table.max() >= n:
            raise GroupError("table entries out of range")
        ar = np.arange(n)
        if not (np.array_equal(table[0], ar) and np.array_equal(table[:, 0], ar)):
            raise GroupError("element 0 must be the identity")
        for r in range(n):
            if len(np.unique(table[r])) != n or len(np.unique(table[:, r])) != n:
                raise GroupError("table is not a Latin square")
        _check_associative(table)
        inv = np.argmin(table, axis=1)
        table.setflags(write=False)
        inv.setflags(write=False)

        self.mult = table
        self.inv = inv
        self.order = n
        self.identity = 0
        self.name = name
        self.labels = tuple(labels) if labels is not None else tuple(str(i) for i in range(n))
        if len(self.labels) != n:
            raise GroupError("one label per element required")
        self.perms = tuple(perms) if perms is not None else None
        self._rows: list[list[int]] = table.tolist()
        self._inv: list[int] = inv.tolist()
        self._bit = [1 << i for i in range(n)]
        self._full_mask = (1 << n) - 1
        self._interned: dict[int, Subgroup] = {}
        self._cache: dict = {}
        if generators is None:
            generators = self.whole().generators()
        self.generators = tuple(int(g) for g in generators)
        if self._closure_mask(self.generators) != self._full_mask:
            raise GroupError("generators do not generate the whole table")

    def __repr__(self):
        return f"<FiniteGroup {self.name} of order {self.order}>"

    def __len__(self):
        return self.order

    # -- elements --

    def mul(self, x: int, y: int) -> int:
        return self._rows[x][y]

    def inverse(self, x: int) -> int:
        return self._inv[x]

    def power(self, x: int, k: int) -> int:
        if k < 0:
            x, k = self._inv[x], -k
        r = 0
        for _ in range(k):
            r = self._rows[r][x]
        return r

    def conj(self, a: int, g: int) -> int:
        """``g^-1 a g``."""
        return self._rows[self._rows[self._inv[g]][a]][g]

    def element_order(self, x: int) -> int:
        k, y = 1, x
        while y != 0:
            y = self._rows[y][x]
            k += 1
        return k

    def order_signature(self) -> tuple[int, ...]:
        """Sorted multiset of element orders."""
        return tuple(sorted(self.element_order(x) for x in range(self.order)))

    def index_of_perm(self, p: Perm) -> int:
        if self.perms is None:
            raise GroupError(f"{self.name} is not a permutation group")
        try:
            return self.perms.index(p)
        except ValueError:
            raise GroupError(f"{p} is not an element of {self.name}") from None

    def index_of_label(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise GroupError(f"no element labelled {label!r}") from None

    # -- subgroups --

    def _closure_mask(self, gens: Iterable[int], start: Sequence[int] = (0,)) -> int:
        rows, bit = self._rows, self._bit
        gens = [g for g in gens if g != 0]
        elems = list(start)
        mask = 0
        for x in elems:
            mask |= bit[x]
        i = 0
        while i < len(elems):
            row = rows[elems[i]]
            for g in gens:
                y = row[g]
                if not (mask >> y) & 1:
                    mask |= bit[y]
                    elems.append(y)
            i += 1
        return mask

    def _sub(self, mask: int) -> Subgroup:
        s = self._interned.get(mask)
        if s is None:
            s = Subgroup(self, mask)
            self._interned[mask] = s
        return s

    def whole(self) -> Subgroup:
        return self._sub(self._full_mask)

    def trivial(self) -> Subgroup:
        return self._sub(1)

    def generate(self, elements: Iterable[int]) -> Subgroup:
        """The subgroup generated by ``elements``."""
        els = [int(e) for e in elements]
        for e in els:
            if not 0 <= e < self.order:
                raise GroupError(f"element {e} out of range")
        return self._sub(self._closure_mask(els))

    def subgroup(self, members: Iterable[int]) -> Subgroup:
        """Handle for an explicit member set; raises if it is not a subgroup."""
        mask = 0
        for e in members:
            if not 0 <= e < self.order:
                raise GroupError(f"element {e} out of range")
            mask |= self._bit[e]
        if self._closure_mask(iter_bits(mask)) != mask:
            raise GroupError("member set is not closed under multiplication")
        return self._sub(mask)


class Subgroup:
    """A subgroup of ``parent``, identified by its member bitmask."""

    __slots__ = ("parent", "mask", "members", "order", "_gens")

    def __init__(self, parent: FiniteGroup, mask: int):
        self.parent = parent
        self.mask = mask
        self.members = tuple(iter_bits(mask))
        self.order = len(self.members)
        self._gens: tuple[int, ...] | None = None

    def __repr__(self):
        if self.order <= 8:
            body = ", ".join(self.parent.labels[m] for m in self.members)
            return f"<Subgroup of {self.parent.name} order {self.order}: {body}>"
        return f"<Subgroup of {self.parent.name} order {self.order}>"

    def __len__(self):
        return self.order

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, x: int) -> bool:
        return bool((self.mask >> x) & 1)

    def __eq__(self, other):
        if not isinstance(other, Subgroup):
            return NotImplemented
        return self.parent is other.parent and self.mask == other.mask

    def __hash__(self):
        return hash(self.mask)

    def __le__(self, other: Subgroup) -> bool:
        _same_parent(self, other)
        return self.mask & ~other.mask == 0

    def __lt__(self, other: Subgroup) -> bool:
        return self <= other and self.mask != other.mask

    def __and__(self, other: Subgroup) -> Subgroup:
        _same_parent(self, other)
        return self.parent._sub(self.mask & other.mask)

    @property
    def key(self) -> tuple:
        """Canonical sort key: size first, then member list."""
        return (self.order, self.members)

    def is_trivial(self) -> bool:
        return self.mask == 1

    def is_whole(self) -> bool:
        return self.mask == self.parent._full_mask

    def index_in(self, other: Subgroup) -> int:
        return other.order // self.order

    def generators(self) -> tuple[int, ...]:
        """A small generating set, chosen greedily in element order."""
        if self._gens is None:
            gens: list[int] = []
            cur = 1
            for m in self.members:
                if not (cur >> m) & 1:
                    gens.append(m)
                    cur = self.parent._closure_mask(gens)
                    if cur == self.mask:
                        break
            self._gens = tuple(gens)
        return self._gens

    def join(self, other: Subgroup) -> Subgroup:
        _same_parent(self, other)
        if other <= self:
            return self
        if self <= other:
            return other
        g = self.parent
        return g._sub(g._closure_mask(self.generators() + other.generators(), self.members))

    def join_element(self, x: int) -> Subgroup:
        if x in self:
            return self
        g = self.parent
        return g._sub(g._closure_mask(self.generators() + (x,), self.members))


def _same_parent(a: Subgroup, b: Subgroup) -> None:
    if a.parent is not b.parent:
        raise GroupError("subgroups belong to different groups")


def as_subgroup(G: FiniteGroup | Subgroup) -> Subgroup:
    """Treat a group as its own whole subgroup; subgroups pass through."""
    return G.whole() if isinstance(G, FiniteGroup) else G


def _check_associative(table: np.ndarray) -> None:
    n = table.shape[0]
    if n <= 64:
        left = table[table]                      # (ab)c
        right = table[np.arange(n)[:, None, None], table[None, :, :]]  # a(bc)
        ok = np.array_equal(left, right)
    else:
        rng = np.random.default_rng(0)
        a, b, c = rng.integers(0, n, size=(3, 10_000))
        ok = np.array_equal(table[table[a, b], c], table[a, table[b, c]])
    if not ok:
        raise GroupError("multiplication table is not associative")


# -- constructions --

def group_from_generators(degree: int, gens: Sequence[Perm], cap: int | None = None,
                          name: str = "G") -> FiniteGroup:
    """Close ``gens`` under composition.

    Elements are numbered breadth-first from the identity, applying the
    generators in input order.
    """
    if degree < 1:
        raise GroupError("degree must be positive")
    cap = order_cap() if cap is None else cap
    gens = list(gens)
    for g in gens:
        if not isinstance(g, Perm):
            g = Perm(tuple(g))
        if g.degree != degree:
            raise GroupError(f"generator {g} has degree {g.degree}, expected {degree}")
    gens = [g if isinstance(g, Perm) else Perm(tuple(g)) for g in gens]
    ident = Perm.identity(degree)
    elems = [ident]
    index = {ident: 0}
    i = 0
    while i < len(elems):
        x = elems[i]
        for g in gens:
            y = x * g
            if y not in index:
                index[y] = len(elems)
                elems.append(y)
                if len(elems) > cap:
                    raise OrderCapExceeded(f"closure exceeds the order cap {cap}")
        i += 1
    table = [[index[x * y] for y in elems] for x in elems]
    gen_idx = []
    for g in gens:
        k = index[g]
        if k != 0 and k not in gen_idx:
            gen_idx.append(k)
    return FiniteGroup(table, labels=[str(p) for p in elems], generators=gen_idx,
                       name=name, perms=elems)


def direct_product(G: FiniteGroup, H: FiniteGroup, cap: int | None = None,
                   name: str | None = None) -> FiniteGroup:
    """``G x H`` with element ``(g, h)`` at index ``g*|H| + h``."""
    _check_cap(G.order * H.order, cap)
    m = H.order
    g1 = np.repeat(np.arange(G.order), m)
    h1 = np.tile(np.arange(m), G.order)
    table = G.mult[g1[:, None], g1[None, :]] * m + H.mult[h1[:, None], h1[None, :]]
    labels = [f"({a},{b})" for a in G.labels for b in H.labels]
    gens = [g * m for g in G.generators] + list(H.generators)
    return FiniteGroup(table, labels=labels, generators=gens,
                       name=name or f"{G.name}x{H.name}")


def is_automorphism(N: FiniteGroup, phi: Sequence[int]) -> bool:
    phi = np.asarray(phi)
    if phi.shape != (N.order,) or sorted(phi.tolist()) != list(range(N.order)):
        return False
    return bool(np.array_equal(phi[N.mult], N.mult[phi[:, None], phi[None, :]]))


def automorphism_from_images(N: FiniteGroup, images: Sequence[int]) -> tuple[int, ...]:
    """Extend ``N.generators[k] -> images[k]`` to an automorphism of ``N``."""
    if len(images) != len(N.generators):
        raise GroupError("one image per generator required")
    phi = {0: 0}
    queue = [0]
    rows = N._rows
    for x in queue:
        for g, gi in zip(N.generators, images):
            y = rows[x][g]
            fy = rows[phi[x]][gi]
            if y in phi:
                if phi[y] != fy:
                    raise GroupError("generator images do not define a homomorphism")
            else:
                phi[y] = fy
                queue.append(y)
    out = tuple(phi[x] for x in range(N.order))
    if not is_automorphism(N, out):
        raise GroupError("generator images do not define an automorphism")
    return out


def action_from_generators(N: FiniteGroup, H: FiniteGroup,
                           auts: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    """Extend ``H.generators[k] -> auts[k]`` to a map ``H -> Aut(N)``.

    The resulting action satisfies ``act[h1*h2] == act[h1] o act[h2]``.
    """
    if len(auts) != len(H.generators):
        raise GroupError("one automorphism per generator required")
    ident = tuple(range(N.order))
    act = {0: ident}
    queue = [0]
    for h in queue:
        for g, a in zip(H.generators, auts):
            y = H.mul(h, g)
            comp = tuple(act[h][a[n]] for n in range(N.order))
            if y in act:
                if act[y] != comp:
                    raise GroupError("action is not a homomorphism")
            else:
                act[y] = comp
                queue.append(y)
    return [act[h] for h in range(H.order)]


def semidirect_product(N: FiniteGroup, H: FiniteGroup, action: Sequence[Sequence[int]],
                       cap: int | None = None, name: str | None = None) -> FiniteGroup:
    """``N x| H`` where ``action[h]`` is the automorphism of ``N`` induced by ``h``.

    Multiplication is ``(n1, h1)(n2, h2) = (n1 * action[h1](n2), h1 h2)``;
    element ``(n, h)`` sits at index ``n*|H| + h``.
    """
    _check_cap(N.order * H.order, cap)
    if len(action) != H.order:
        raise GroupError("action needs one automorphism per element of H")
    act = np.array(action, dtype=np.int64)
    for h in range(H.order):
        if not is_automorphism(N, act[h]):
            raise GroupError(f"action image of element {h} is not an automorphism")
    if not np.array_equal(act[0], np.arange(N.order)):
        raise GroupError("identity must act trivially")
    for h1 in range(H.order):
        for h2 in range(H.order):
            if not np.array_equal(act[H.mult[h1, h2]], act[h1][act[h2]]):
                raise GroupError("action is not a homomorphism")
    m = H.order
    n_of = np.repeat(np.arange(N.order), m)
    h_of = np.tile(np.arange(m), N.order)
    twisted = act[h_of[:, None], n_of[None, :]]
    table = N.mult[n_of[:, None], twisted] * m + H.mult[h_of[:, None], h_of[None, :]]
    labels = [f"({a},{b})" for a in N.labels for b in H.labels]
    gens = [g * m for g in N.generators] + list(H.generators)
    return FiniteGroup(table, labels=labels, generators=gens,
                       name=name or f"{N.name}:{H.name}")


class Quotient(NamedTuple):
    group: FiniteGroup
    projection: tuple[int, ...]


def quotient(G: FiniteGroup, N: Subgroup) -> Quotient:
    """``G/N`` with cosets numbered by their least element; cached per ``N``."""
    if N.parent is not G:
        raise GroupError("N is not a subgroup of G")
    key = ("quotient", N.mask)
    hit = G._cache.get(key)
    if hit is not None:
        return hit
    if not is_normal(N, G.whole()):
        raise GroupError("N is not normal in G")
    proj = [-1] * G.order
    reps = []
    rows = G._rows
    for x in range(G.order):
        if proj[x] < 0:
            k = len(reps)
            reps.append(x)
            for n in N.members:
                proj[rows[x][n]] = k
    table = [[proj[rows[a][b]] for b in reps] for a in reps]
    gens = []
    for g in G.generators:
        if proj[g] != 0 and proj[g] not in gens:
            gens.append(proj[g])
    labels = [G.labels[r] + "N" if N.order > 1 else G.labels[r] for r in reps]
    Q = FiniteGroup(table, labels=labels, generators=gens, name=f"{G.name}/{N.order}")
    res = Quotient(Q, tuple(proj))
    G._cache[key] = res
    return res


def image(q: Quotient, A: Subgroup) -> Subgroup:
    """Image of ``A`` in the quotient."""
    bit = q.group._bit
    mask = 0
    for a in A.members:
        mask |= bit[q.projection[a]]
    return q.group._sub(mask)


def preimage(q: Quotient, G: FiniteGroup, B: Subgroup) -> Subgroup:
    mask = 0
    for x, px in enumerate(q.projection):
        if px in B:
            mask |= G._bit[x]
    return G._sub(mask)


def subgroup_as_group(A: Subgroup) -> tuple[FiniteGroup, tuple[int, ...]]:
    """Re-index ``A`` as a standalone group; returns it with the embedding."""
    G = A.parent
    key = ("as_group", A.mask)
    hit = G._cache.get(key)
    if hit is not None:
        return hit
    emb = A.members
    pos = {x: i for i, x in enumerate(emb)}
    rows = G._rows
    table = [[pos[rows[a][b]] for b in emb] for a in emb]
    res = (FiniteGroup(table, labels=[G.labels[x] for x in emb],
                       name=f"{G.name}[{A.order}]"), emb)
    G._cache[key] = res
    return res


# -- subgroup operations --

def conjugate_subgroup(A: Subgroup, g: int) -> Subgroup:
    """``A^g = {g^-1 a g}``."""
    G = A.parent
    if not 0 <= g < G.order:
        raise GroupError(f"element {g} out of range")
    rows, bit = G._rows, G._bit
    gi = rows[G._inv[g]]
    mask = 0
    for a in A.members:
        mask |= bit[rows[gi[a]][g]]
    return G._sub(mask)


def _require_le(A: Subgroup, B: Subgroup) -> None:
    if not A <= B:
        raise GroupError("first subgroup is not contained in the second")


def is_normal(A: Subgroup, B: Subgroup) -> bool:
    """Whether ``A`` is normal in ``B`` (``A`` must lie in ``B``)."""
    _require_le(A, B)
    if A.order == B.order or A.order == 1 or 2 * A.order == B.order:
        return True
    G = A.parent
    cache = G._cache.setdefault("normal", {})
    key = (A.mask, B.mask)
    hit = cache.get(key)
    if hit is None:
        hit = all(conjugate_subgroup(A, b) == A for b in B.generators())
        cache[key] = hit
    return hit


def core_in(A: Subgroup, B: Subgroup) -> Subgroup:
    """Largest subgroup of ``A`` normal in ``B``."""
    _require_le(A, B)
    mask = A.mask
    for b in B.members:
        mask &= conjugate_subgroup(A, b).mask
        if mask == 1:
            break
    return A.parent._sub(mask)


def _product_mask(A: Subgroup, B: Subgroup) -> int:
    rows, bit = A.parent._rows, A.parent._bit
    mask = 0
    bm = B.members
    for a in A.members:
        row = rows[a]
        for b in bm:
            mask |= bit[row[b]]
    return mask


def product_set(A: Subgroup, B: Subgroup) -> frozenset[int]:
    _same_parent(A, B)
    return frozenset(iter_bits(_product_mask(A, B)))


def permutes(A: Subgroup, B: Subgroup) -> bool:
    """Whether ``AB == BA``, i.e. ``AB`` is a subgroup."""
    _same_parent(A, B)
    if A <= B or B <= A:
        return True
    G = A.parent
    cache = G._cache.setdefault("permutes", {})
    key = (A.mask, B.mask) if A.mask < B.mask else (B.mask, A.mask)
    hit = cache.get(key)
    if hit is None:
        size = A.order * B.order // (A & B).order
        if G.order % size:
            hit = False
        else:
            hit = _product_mask(A, B) == _product_mask(B, A)
        cache[key] = hit
    return hit


def element_order(G: FiniteGroup, x: int) -> int:
    if not 0 <= x < G.order:
        raise GroupError(f"element {x} out of range")
    return G.element_order(x)


def prime_divisors(n: int) -> tuple[int, ...]:
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return tuple(out)


def is_prime(n: int) -> bool:
    return n >= 2 and prime_divisors(n) == (n,)


def coprime(a: int, b: int) -> bool:
    return gcd(a, b) == 1

"""Standard group builders, the text formats, and the bundled corpus."""

from __future__ import annotations

import re
from collections.abc import Callable
from dataclasses import dataclass
from pathlib import Path

from .group import (FiniteGroup, GroupError, action_from_generators, automorphism_from_images,
                    direct_product, group_from_generators, is_prime, semidirect_product)
from .perm import Perm, PermError
from .sigma import SigmaPartition


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


# -- text formats --

def parse_group_file(text: str, cap: int | None = None, name: str = "G") -> FiniteGroup:
    """Parse ``degree: n`` followed by ``gen: <cycles>`` lines (``#`` comments)."""
    degree = None
    gens: list[tuple[int, str]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition(":")
        if not sep:
            raise ParseError(f"expected 'key: value', got {line!r}", lineno)
        key, value = key.strip().lower(), value.strip()
        if key == "degree":
            if degree is not None:
                raise ParseError("duplicate degree header", lineno)
            if gens:
                raise ParseError("degree must precede generators", lineno)
            try:
                degree = int(value)
            except ValueError:
                raise ParseError(f"bad degree {value!r}", lineno) from None
            if degree < 1:
                raise ParseError("degree must be positive", lineno)
        elif key == "gen":
            if degree is None:
                raise ParseError("gen line before degree header", lineno)
            gens.append((lineno, value))
        else:
            raise ParseError(f"unknown key {key!r}", lineno)
    if degree is None:
        raise ParseError("missing degree header")
    perms = []
    for lineno, value in gens:
        try:
            perms.append(Perm.from_cycles(value, degree))
        except PermError as e:
            raise ParseError(str(e), lineno) from None
    return group_from_generators(degree, perms, cap=cap, name=name)


def parse_sigma_spec(text: str) -> SigmaPartition:
    """``3,5|*`` style: blocks split by ``|``, primes by ``,``, ``*`` the rest block.

    Without ``*`` the remaining primes are singleton blocks; ``sigma0`` alone
    denotes the all-singletons partition.
    """
    text = text.strip()
    if text in ("sigma0", "σ0"):
        return SigmaPartition.sigma0()
    if not text:
        raise ParseError("empty sigma spec")
    blocks = []
    rest = False
    for part in text.split("|"):
        part = part.strip()
        if part == "*":
            if rest:
                raise ParseError("more than one '*' block")
            rest = True
            continue
        if not part:
            raise ParseError("empty block")
        primes = []
        for tok in part.split(","):
            tok = tok.strip()
            if not tok.isdigit() or not is_prime(int(tok)):
                raise ParseError(f"{tok!r} is not a prime")
            primes.append(int(tok))
        if len(set(primes)) != len(primes):
            raise ParseError(f"repeated prime in block {part!r}")
        blocks.append(frozenset(primes))
    try:
        return SigmaPartition(tuple(blocks), rest)
    except GroupError as e:
        raise ParseError(str(e)) from None


# -- builders --

def _cycle(*pts: int) -> str:
    return "(" + " ".join(map(str, pts)) + ")"


def cyclic(n: int, cap: int | None = None) -> FiniteGroup:
    if n < 1:
        raise GroupError("cyclic(n) needs n >= 1")
    gens = [] if n == 1 else [Perm.from_cycles(_cycle(*range(1, n + 1)), n)]
    return group_from_generators(n, gens, cap=cap, name=f"C{n}")


def dihedral(order: int, cap: int | None = None) -> FiniteGroup:
    """Dihedral group of the given (even) order."""
    if order < 2 or order % 2:
        raise GroupError("dihedral order must be even and positive")
    n = order // 2
    name = f"D{order}"
    if n == 1:
        G = cyclic(2, cap)
        G.name = name
        return G
    if n == 2:
        gens = ["(1 2)(3 4)", "(1 3)(2 4)"]
        return group_from_generators(4, [Perm.from_cycles(g, 4) for g in gens], cap=cap, name=name)
    rot = _cycle(*range(1, n + 1))
    refl = "".join(_cycle(i, n + 1 - i) for i in range(1, n // 2 + 1))
    return group_from_generators(n, [Perm.from_cycles(rot, n), Perm.from_cycles(refl, n)],
                                 cap=cap, name=name)


def symmetric(n: int, cap: int | None = None) -> FiniteGroup:
    if not 1 <= n <= 5:
        raise GroupError("symmetric(n) supports 1 <= n <= 5")
    gens = []
    if n >= 2:
        gens = [Perm.from_cycles(_cycle(*range(1, n + 1)), n), Perm.from_cycles("(1 2)", n)]
    return group_from_generators(n, gens, cap=cap, name=f"S{n}")


def alternating(n: int, cap: int | None = None) -> FiniteGroup:
    if not 1 <= n <= 5:
        raise GroupError("alternating(n) supports 1 <= n <= 5")
    gens = [Perm.from_cycles(_cycle(1, 2, k), n) for k in range(3, n + 1)]
    return group_from_generators(n, gens, cap=cap, name=f"A{n}")


def quaternion8(cap: int | None = None) -> FiniteGroup:
    """Q8 in its regular representation; generators are ``i`` and ``j``."""
    gens = ["(1 2 4 7)(3 6 8 5)", "(1 3 4 8)(2 5 7 6)"]
    return group_from_generators(8, [Perm.from_cycles(g, 8) for g in gens], cap=cap, name="Q8")


def power_automorphism(N: FiniteGroup, k: int) -> tuple[int, ...]:
    """``x -> x^k`` on an abelian group."""
    return tuple(N.power(x, k) for x in range(N.order))


def s3_as_semidirect(cap: int | None = None) -> FiniteGroup:
    """``C3 x| C2`` with the generator of ``C2`` inverting ``C3``."""
    C3, C2 = cyclic(3), cyclic(2)
    act = action_from_generators(C3, C2, [power_automorphism(C3, -1)])
    return semidirect_product(C3, C2, act, cap=cap, name="C3:C2")


def paper_example(cap: int | None = None) -> FiniteGroup:
    """``C5 x (C3 x| C2)``, order 30."""
    return direct_product(cyclic(5), s3_as_semidirect(), cap=cap, name="C5xS3")


def c5_semidirect_c4(cap: int | None = None) -> FiniteGroup:
    C5, C4 = cyclic(5), cyclic(4)
    act = action_from_generators(C5, C4, [power_automorphism(C5, 2)])
    return semidirect_product(C5, C4, act, cap=cap, name="C5:C4")


def sl23(cap: int | None = None) -> FiniteGroup:
    """``Q8 x| C3`` with ``C3`` cycling ``i -> j -> k``; isomorphic to SL(2,3)."""
    Q, C3 = quaternion8(), cyclic(3)
    i, j = Q.generators
    rho = automorphism_from_images(Q, [j, Q.mul(i, j)])
    act = action_from_generators(Q, C3, [rho])
    return semidirect_product(Q, C3, act, cap=cap, name="SL(2,3)")


_FUNCS: dict[str, Callable[..., FiniteGroup]] = {
    "cyclic": cyclic,
    "dihedral": dihedral,
    "symmetric": symmetric,
    "alternating": alternating,
    "quaternion8": quaternion8,
    "paper_example": paper_example,
    "sl23": sl23,
}


@dataclass(frozen=True)
class CatalogEntry:
    key: str
    provenance: str
    build: Callable[[], FiniteGroup]

    @property
    def group(self) -> FiniteGroup:
        return self.build()


def _entries() -> list[CatalogEntry]:
    out = [CatalogEntry(f"C{n}", f"cyclic({n})", lambda n=n: cyclic(n)) for n in range(1, 25)]
    out += [CatalogEntry(f"D{m}", f"dihedral({m})", lambda m=m: dihedral(m))
            for m in range(4, 25, 2)]
    out += [
        CatalogEntry("S3", "symmetric(3)", lambda: symmetric(3)),
        CatalogEntry("S4", "symmetric(4)", lambda: symmetric(4)),
        CatalogEntry("A4", "alternating(4)", lambda: alternating(4)),
        CatalogEntry("A5", "alternating(5)", lambda: alternating(5)),
        CatalogEntry("Q8", "quaternion8()", quaternion8),
        CatalogEntry("C5xS3", "paper_example()", paper_example),
        CatalogEntry("D8xC3", "direct_product(dihedral(8), cyclic(3))",
                     lambda: direct_product(dihedral(8), cyclic(3), name="D8xC3")),
        CatalogEntry("C5:C4", "semidirect_product(C5, C4, x -> x^2)", c5_semidirect_c4),
        CatalogEntry("A4xC5", "direct_product(alternating(4), cyclic(5))",
                     lambda: direct_product(alternating(4), cyclic(5), name="A4xC5")),
        CatalogEntry("SL(2,3)", "semidirect_product(Q8, C3, i -> j -> k)", sl23),
    ]
    return out


CATALOG: dict[str, CatalogEntry] = {e.key: e for e in _entries()}

SIGMA_SPECS: tuple[str, ...] = ("*", "2|*", "3,5|*", "2,3|*", "2|3|*", "2|3|5|*", "2,5|3|*")

_CALL_RE = re.compile(r"^([a-z_0-9]+)\(\s*(\d*)\s*\)$")


def build(name: str, cap: int | None = None) -> FiniteGroup:
    """Build from a catalog key (``S4``) or a builder call (``cyclic(12)``)."""
    name = name.strip()
    if name in CATALOG:
        G = CATALOG[name].build()
        if cap is not None and G.order > cap:
            from .group import OrderCapExceeded
            raise OrderCapExceeded(f"group order {G.order} exceeds the order cap {cap}")
        return G
    m = _CALL_RE.match(name if "(" in name else name + "()")
    if m and m.group(1) in _FUNCS:
        args = [int(m.group(2))] if m.group(2) else []
        try:
            return _FUNCS[m.group(1)](*args, cap=cap)
        except TypeError:
            raise ParseError(f"bad arguments for builder {name!r}") from None
    raise ParseError(f"unknown builder {name!r}")


def resolve_group(source: str, cap: int | None = None) -> tuple[str, FiniteGroup]:
    """``builder:NAME`` or a path to a group file; returns ``(key, group)``."""
    if source.startswith("builder:"):
        name = source[len("builder:"):]
        return name, build(name, cap)
    path = Path(source)
    try:
        text = path.read_text()
    except OSError as e:
        raise ParseError(f"cannot read group file {source!r}: {e.strerror}") from None
    return source, parse_group_file(text, cap=cap, name=path.stem)

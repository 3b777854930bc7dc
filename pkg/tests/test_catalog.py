import pytest
from hypothesis import given, strategies as st

from sigmagroups import catalog
from sigmagroups.catalog import (CATALOG, SIGMA_SPECS, ParseError, build, parse_group_file,
                                 parse_sigma_spec, resolve_group)
from sigmagroups.group import GroupError, OrderCapExceeded, is_normal
from sigmagroups.lattice import all_subgroups
from sigmagroups.sigma import SigmaPartition

PRIMES = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]


def test_group_file_examples():
    assert parse_group_file("degree: 3\ngen: (1 2 3)\ngen: (1 2)\n").order == 6
    assert parse_group_file("degree: 4\ngen: (1 2)(3 4)\ngen: (1 3)(2 4)").order == 4
    assert parse_group_file("# nothing here\ndegree: 5\n").order == 1


@pytest.mark.parametrize("text, line", [
    ("degree: 3\ngen: (1 2 4)", 2),
    ("gen: (1 2)", 1),
    ("degree: 3\n\nwhat: 1", 3),
    ("degree: x", 1),
    ("degree: 3\ndegree: 3", 2),
    ("degree: 3\ngen (1 2)", 2),
])
def test_group_file_errors_carry_line(text, line):
    with pytest.raises(ParseError) as exc:
        parse_group_file(text)
    assert exc.value.line == line
    assert f"line {line}" in str(exc.value)


def test_group_file_missing_degree():
    with pytest.raises(ParseError):
        parse_group_file("# only a comment\n")


def test_group_file_cap():
    text = "degree: 5\ngen: (1 2 3 4 5)\ngen: (1 2)\n"
    with pytest.raises(OrderCapExceeded):
        parse_group_file(text, cap=50)


def test_sigma_spec_examples():
    s = parse_sigma_spec("3,5|*")
    assert s.blocks == (frozenset({3, 5}),) and s.has_rest_block
    s = parse_sigma_spec("2|3|5|7|*")
    assert [s.block_of(p) for p in (2, 3, 5, 7, 11, 13)] == [0, 1, 2, 3, 4, 4]
    assert parse_sigma_spec("sigma0") == SigmaPartition.sigma0()
    s = parse_sigma_spec("3,5")
    assert not s.has_rest_block and s.block_of(2) != s.block_of(7)


@pytest.mark.parametrize("bad", ["2,3|3|*", "4|*", "*|*", "", "2||3", "2,2", "a", "2|x,3"])
def test_sigma_spec_errors(bad):
    with pytest.raises(ParseError):
        parse_sigma_spec(bad)


@st.composite
def partitions(draw):
    primes = draw(st.lists(st.sampled_from(PRIMES), unique=True, max_size=8))
    cuts = sorted(draw(st.sets(st.integers(1, max(len(primes) - 1, 1)), max_size=4)))
    blocks, start = [], 0
    for c in cuts + [len(primes)]:
        if primes[start:c]:
            blocks.append(frozenset(primes[start:c]))
        start = max(start, c)
    rest = draw(st.booleans())
    return SigmaPartition(tuple(blocks), rest)


@given(partitions())
def test_sigma_spec_roundtrip(s):
    assert parse_sigma_spec(str(s)) == s


@given(partitions(), st.sampled_from(PRIMES))
def test_block_lookup_consistent(s, p):
    i = s.block_of(p)
    assert s.contains(i, p)
    if i < len(s.blocks):
        assert p in s.blocks[i]


def test_builders():
    assert catalog.cyclic(1).order == 1
    assert catalog.dihedral(2).order == 2 and catalog.dihedral(4).order == 4
    assert catalog.quaternion8().order == 8
    assert catalog.alternating(5).order == 60
    S4 = catalog.symmetric(4)
    assert S4.order == 24 and len(all_subgroups(S4)) == 30
    assert catalog.sl23().order == 24
    with pytest.raises(GroupError):
        catalog.symmetric(6)


def test_c5s3_structure():
    G = catalog.paper_example()
    assert G.order == 30
    subs = all_subgroups(G)
    c15 = [A for A in subs if A.order == 15]
    assert len(c15) == 1 and is_normal(c15[0], G.whole())
    assert sum(A.order == 2 for A in subs) == 3


@pytest.mark.parametrize("key", list(CATALOG))
def test_catalog_entries_build(key):
    G = CATALOG[key].build()
    assert G.order >= 1
    assert CATALOG[key].provenance


def test_quaternion_and_sl23_are_not_dihedral():
    Q = catalog.quaternion8()
    assert sum(Q.element_order(x) == 2 for x in range(8)) == 1
    SL = catalog.sl23()
    assert sum(SL.element_order(x) == 2 for x in range(24)) == 1


def test_build_names():
    assert build("cyclic(12)").order == 12
    assert build("paper_example").order == 30
    assert build("S4").order == 24
    with pytest.raises(ParseError):
        build("nonsense(3)")
    with pytest.raises(OrderCapExceeded):
        build("A5", cap=50)


def test_resolve_group(tmp_path):
    f = tmp_path / "s3.grp"
    f.write_text("degree: 3\ngen: (1 2 3)\ngen: (1 2)\n")
    key, G = resolve_group(str(f))
    assert key == str(f) and G.order == 6
    assert resolve_group("builder:C5xS3")[1].order == 30
    with pytest.raises(ParseError):
        resolve_group(str(tmp_path / "missing.grp"))


def test_spec_list_is_parseable():
    for spec in SIGMA_SPECS:
        assert str(parse_sigma_spec(spec)) == spec

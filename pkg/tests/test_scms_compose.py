from __future__ import annotations

import pytest

from multimagic import (
    DegreeMismatch,
    EvenDegreeRequired,
    IngredientInvalid,
    NoSuchObject,
    NotNormalized,
    OrderMismatch,
    ScmsFamily,
    SeedNotMultimagic,
    Square,
    assemble_pgms,
    build_diagonal_ls,
    build_odls_pair,
    build_scms_complement,
    build_scms_kotzig,
    complement,
    compose_outer,
    composition_sum,
    extend_scms,
    kotzig_exists,
    odls_pair_exists,
    product,
    uniform_pgms,
    verify_multimagic,
    verify_pgms,
    verify_scms,
)
from multimagic.latin import LatinSquare

from .conftest import as_lists, direct_constant, line_sums, oracle_diagonal, oracle_multimagic, oracle_orthogonal


def oracle_scms(members, t):
    n = len(members[0])
    if not all(oracle_multimagic(m, t) for m in members):
        return False
    totals = [sum(col) for col in zip(*(line_sums(m, t + 1) for m in members))]
    return set(totals) == {len(members) * direct_constant(n, t + 1)}


# --- families ----------------------------------------------------------------


@pytest.mark.parametrize("m", range(2, 7))
@pytest.mark.parametrize("n", range(1, 12))
def test_kotzig_families_for_all_feasible_sizes(m, n):
    if not (kotzig_exists(m, n) and odls_pair_exists(n)):
        return
    fam = build_scms_kotzig(m, n)
    assert verify_scms(fam, 1).ok
    assert oracle_scms([as_lists(s) for s in fam], 1)


def test_relabelled_partners_stay_orthogonal():
    n = 7
    a, b = build_odls_pair(n)
    fam = build_scms_kotzig(4, n)
    for member in fam:
        g = as_lists(member)
        relabelled = [[v % n for v in row] for row in g]
        top = [[v // n for v in row] for row in g]
        assert top == as_lists(a)
        assert oracle_diagonal(relabelled) and oracle_orthogonal(top, relabelled)


def test_kotzig_family_errors():
    with pytest.raises(NoSuchObject, match="KA"):
        build_scms_kotzig(3, 4)
    with pytest.raises(NoSuchObject, match="orthogonal"):
        build_scms_kotzig(2, 6)
    with pytest.raises(ValueError):
        build_scms_kotzig(2, 4, kotzig=[[0, 1, 2, 3], [0, 1, 2, 3]])


def test_published_order_4_pair_is_a_family(b0, b1):
    assert oracle_scms([as_lists(b0), as_lists(b1)], 1)
    bad = verify_scms([b0, b0], 1)
    assert not bad.ok and bad.problems


def test_extension(b0, b1, ex4):
    fam = ScmsFamily.of([b0, b1], 1)
    assert extend_scms(fam, 1) == fam
    eight = extend_scms(fam, 4)
    assert eight.size == 8 and verify_scms(eight, 1).ok
    five = ScmsFamily.of([ex4[k].square for k in ("c0", "c1", "c2")], 1)
    six = extend_scms(five, 2)
    assert six.size == 6 and verify_scms(six, 1).ok


def test_family_needs_matching_orders(b0, pf8):
    with pytest.raises(OrderMismatch):
        ScmsFamily.of([b0, pf8], 1)
    with pytest.raises(OrderMismatch):
        verify_scms([b0, pf8], 1)


def test_complement_pair_sums(pf8):
    comp = complement(pf8)
    assert oracle_multimagic(as_lists(comp), 2)
    cubes = [x + y for x, y in zip(line_sums(as_lists(pf8), 3), line_sums(as_lists(comp), 3))]
    assert set(cubes) == {2 * direct_constant(8, 3)}


def test_complement_keeps_every_catalog_square_at_its_degree(catalog):
    for e in catalog.seeds():
        comp = complement(e.square)
        assert oracle_multimagic(as_lists(comp), e.verified_degree)


def test_complement_errors(pf8, b0):
    with pytest.raises(NotNormalized):
        complement([[1, 2], [3, 4]])
    with pytest.raises(EvenDegreeRequired):
        build_scms_complement(pf8, 1)
    with pytest.raises(EvenDegreeRequired):
        build_scms_complement(pf8, 3)
    with pytest.raises(SeedNotMultimagic):
        build_scms_complement(b0, 2)


def test_complement_family_repeats(pf8):
    fam = build_scms_complement(pf8, 2, 3)
    assert fam.size == 6 and fam.degree == 2
    assert oracle_scms([as_lists(s) for s in fam], 2)


# --- partitioned grids and composition ----------------------------------------


def test_grid_block_placement(b0, b1):
    fam = ScmsFamily.of([b0, b1] * 2, 1)
    d = build_diagonal_ls(4)
    grid = assemble_pgms(fam, d)
    for u in range(4):
        for v in range(4):
            assert grid.block(u, v) == fam[d.cells[u][v]]


def test_grid_depends_only_on_placement(ex4):
    members = [ex4[k].square for k in ("c0", "c1", "c2")]
    fam = extend_scms(ScmsFamily.of(members, 1), 2)
    d = build_diagonal_ls(6)
    perm = [3, 0, 5, 1, 4, 2]
    permuted = ScmsFamily(tuple(fam[perm[k]] for k in range(6)), 1)
    inverse = [perm.index(k) for k in range(6)]
    relabelled = LatinSquare(tuple(tuple(inverse[v] for v in row) for row in d.cells))
    assert assemble_pgms(fam, d).square == assemble_pgms(permuted, relabelled).square


def test_assembly_errors(b0, b1):
    fam = ScmsFamily.of([b0, b1], 1)
    with pytest.raises(OrderMismatch):
        assemble_pgms(fam, build_diagonal_ls(4))
    four = extend_scms(fam, 2)
    with pytest.raises(DegreeMismatch):
        assemble_pgms(four, build_diagonal_ls(4), degree=3)
    with pytest.raises(IngredientInvalid):
        assemble_pgms(four, [[0, 1, 2, 3], [1, 0, 3, 2], [2, 3, 0, 1], [3, 2, 1, 0]])
    not_family = ScmsFamily.of([b0] * 4, 1)
    with pytest.raises(IngredientInvalid):
        assemble_pgms(not_family, build_diagonal_ls(4))


def test_pgms_verifier_on_published_grid(big_b):
    assert verify_pgms(big_b, 8, 4, 2).ok
    # the same cells are not a 4 x 8 partition; its blocks of order 8 are not bimagic
    assert not verify_pgms(big_b, 4, 8, 2).ok
    broken = [list(r) for r in as_lists(big_b)]
    broken[0][0], broken[0][1] = broken[0][1], broken[0][0]
    rep = verify_pgms(broken, 8, 4, 2)
    assert not rep.ok and "FAILED" in rep.summary()


def test_composition_guards(pf8, b0, b1):
    fam = extend_scms(ScmsFamily.of([b0, b1], 1), 4)
    grid = assemble_pgms(fam, build_diagonal_ls(8))
    with pytest.raises(OrderMismatch):
        compose_outer(b0, grid)
    weak = Square(pf8.cells, 1)
    with pytest.raises(DegreeMismatch):
        compose_outer(weak, grid)
    not_magic = Square(tuple(tuple(range(8 * i, 8 * i + 8)) for i in range(8)))
    with pytest.raises(IngredientInvalid):
        compose_outer(not_magic, grid)


def test_unchecked_composition_is_verbatim(pf8, big_b, big_c):
    from multimagic.compose import PartitionedSquare

    part = PartitionedSquare(big_b, 8, 4, 2)
    assert compose_outer(pf8, part, check=False).cells == big_c.cells


@pytest.mark.parametrize("m", range(1, 9))
@pytest.mark.parametrize("n", range(1, 9))
def test_composition_sum_identity(m, n):
    for e in range(1, 4):
        assert composition_sum(m, n, e) == direct_constant(m * n, e)


def test_composed_entries_are_consecutive(pf8):
    fam = build_scms_kotzig(8, 5)
    out = compose_outer(pf8, assemble_pgms(fam, build_diagonal_ls(8)))
    assert sorted(v for r in as_lists(out) for v in r) == list(range(40 * 40))
    assert oracle_multimagic(as_lists(out), 2)


def test_product_matches_uniform_composition(pf8, b0):
    grid = uniform_pgms(pf8, 8, 2)
    assert product(pf8, pf8, 2) == compose_outer(pf8, grid, check=False)
    one = Square(((0,),))
    assert product(one, b0, 1).cells == b0.cells


def test_product_rejects_weak_factor(pf8, b0):
    with pytest.raises(IngredientInvalid):
        product(pf8, b0, 2)
    assert oracle_multimagic(as_lists(product(pf8, b0, 1)), 1)
    assert not verify_multimagic(product(pf8, b0, 1), 2).overall

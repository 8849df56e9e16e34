from __future__ import annotations

from types import SimpleNamespace

import pytest

from multimagic import (
    MissingSeed,
    UnsupportedDegree,
    decompose_exponent,
    execute,
    omega_membership,
    plan,
    product,
)
from multimagic.catalog import CatalogEntry
from multimagic.planner import CatalogSeed, Omega, Product, ScmsCompose, Status, enumerate_parts

from .conftest import as_lists, oracle_multimagic


def brute_omegas(n):
    out = set()
    if 8 <= n <= 64:
        out.add(Omega.ONE)
    pairs = [(a, n // a) for a in range(1, n + 1) if n % a == 0]
    if any(a >= 4 and b >= 4 and a % 2 == b % 2 and 6 not in (a, b) for a, b in pairs):
        out.add(Omega.TWO)
    if n % 4 == 0 and n >= 4:
        out.add(Omega.THREE)
    if n > 64 and any(8 <= a <= 64 and a % 4 == 2 and b >= 5 and b % 2 for a, b in pairs):
        out.add(Omega.FOUR)
    return out


def test_omega_examples():
    assert omega_membership(8) == {Omega.ONE, Omega.THREE}
    assert omega_membership(25) == {Omega.ONE, Omega.TWO}
    assert omega_membership(90) == {Omega.FOUR}
    assert omega_membership(7) == set()


def test_omega_matches_factor_enumeration():
    for n in range(1, 501):
        assert omega_membership(n) == brute_omegas(n), n


@pytest.mark.parametrize("m,parts", [(8, (4, 4)), (9, (5, 4)), (13, (7, 6)), (14, (7, 7)), (15, (7, 4, 4))])
def test_decompose_examples(m, parts):
    assert decompose_exponent(m) == parts


def test_decompose_is_minimal_and_largest():
    for m in range(8, 101):
        options = enumerate_parts(m)
        fewest = min(len(p) for p in options)
        assert decompose_exponent(m) == max(p for p in options if len(p) == fewest)
    with pytest.raises(ValueError):
        decompose_exponent(7)


def test_plan_rejects_other_degrees(catalog):
    for t in (1, 4):
        with pytest.raises(UnsupportedDegree):
            plan(16, t, catalog)


def test_catalog_hit_executes_unchanged(catalog, pf8):
    verdict = plan(8, 2, catalog)
    assert verdict.recipe == CatalogSeed("pfeffermann-8", 8, 2)
    assert execute(verdict.recipe, catalog) == pf8


def test_64_is_composed_and_executes(catalog):
    verdict = plan(64, 2, catalog)
    assert verdict.status is Status.PLANNABLE
    assert isinstance(verdict.recipe, ScmsCompose) and verdict.recipe.inner_order == 8
    assert oracle_multimagic(as_lists(execute(verdict.recipe, catalog)), 2)


def test_explicit_product_recipe_executes(catalog, pf8):
    seed = CatalogSeed("pfeffermann-8", 8, 2)
    out = execute(Product(seed, seed), catalog)
    assert out == product(pf8, pf8, 2)
    assert oracle_multimagic(as_lists(out), 2)


def test_missing_seed(catalog):
    with pytest.raises(MissingSeed):
        execute(CatalogSeed("no-such-seed", 8, 2), catalog)


def test_order_2_mod_4_note(catalog):
    verdict = plan(90, 2, catalog)
    assert verdict.status is not Status.PLANNABLE
    assert any("2 mod 4" in note for note in verdict.notes)
    assert Omega.FOUR in verdict.omegas


def test_small_orders_never_need_impossible_seeds(catalog):
    for n in range(1, 8):
        verdict = plan(n, 2, catalog)
        assert all(order >= 8 for order, _ in verdict.missing)


def test_plannable_orders_execute_soundly(catalog):
    seen = 0
    for n in range(1, 201):
        verdict = plan(n, 2, catalog)
        if verdict.status is not Status.PLANNABLE:
            continue
        sq = execute(verdict.recipe, catalog)
        assert sq.order == n
        assert oracle_multimagic(as_lists(sq), 2), n
        seen += 1
    assert seen >= 15


def test_trimagic_plan_after_ingesting_order_12(catalog):
    # a stand-in record: planning only reads id, order, degree and kind
    tri = SimpleNamespace(id="tri-12", order=12, verified_degree=3, kind="square")
    verdict = plan(96, 3, list(catalog) + [tri])
    assert verdict.status is Status.PLANNABLE
    recipe = verdict.recipe
    assert isinstance(recipe, ScmsCompose)
    assert recipe.source == "complement"
    assert recipe.outer == CatalogSeed("tri-12", 12, 3)
    assert recipe.inner_order == 8
    assert recipe.inner == CatalogSeed("pfeffermann-8", 8, 2)


def test_needs_ingestion_lists_unlocking_seeds(catalog):
    verdict = plan(96, 3, catalog)
    assert verdict.status is Status.NEEDS_INGESTION
    assert (12, 3) in verdict.missing
    text = verdict.explain()
    assert "MS(12,3)" in text and "needs_ingestion" in text


def test_plans_are_monotone_in_the_catalog(catalog, pf8):
    tri = SimpleNamespace(id="tri-12", order=12, verified_degree=3, kind="square")
    bigger = list(catalog.with_entry(CatalogEntry("square-64", product(pf8, pf8, 2), 64, 2, "test"))) + [tri]
    for n in range(1, 201):
        for t in (2, 3):
            before = plan(n, t, catalog).status
            after = plan(n, t, bigger).status
            if before is Status.PLANNABLE:
                assert after is Status.PLANNABLE
            if after is Status.UNSUPPORTED:
                assert before is Status.UNSUPPORTED


def test_explain_mentions_the_ingredients(catalog):
    text = plan(40, 2, catalog).explain()
    assert "pfeffermann-8" in text and "KA(8,5)" in text


def test_plan_is_deterministic(catalog):
    assert plan(200, 2, catalog) == plan(200, 2, catalog)

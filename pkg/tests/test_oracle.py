"""Brute-force layer: enumeration, partitions, searches, and the ways they
corroborate the closed-form counts."""

import random

import pytest

from twistedmaps.canonical import (CanonClass, all_classes, canonical_order,
                                   is_exceptional, stabilizer_size)
from twistedmaps.census import (count_maps, map_type, orbit_counts,
                                reflexible_orbit_counts, type_obstruction)
from twistedmaps.gfield import make_field
from twistedmaps.oracle import (SELFDUAL_TABLE, brute_reflexible, class_quads,
                                closure_order, enumerate_orbits,
                                enumerate_quads, fused_records, galois_fuse,
                                generated_level, is_reflexible,
                                orbit_count_summary, orbit_partition,
                                orbit_records, pair_quad, quad_pair,
                                reflexible_orbit_tally, self_duality,
                                selfdual_cells, selfdual_table)
from twistedmaps.twisted_group import (TwElem, all_group_elements, conjugate,
                                       order)


def test_block_sizes_at_tiny_q(F9, F25):
    sizes3 = {(c.form, c.i): len(list(class_quads(F9, c)))
              for c in all_classes(3)}
    assert sizes3 == {("dia", 1): 16, ("off", 1): 40}
    sizes5 = {(c.form, c.i): len(list(class_quads(F25, c)))
              for c in all_classes(5)}
    assert sizes5 == {("dia", 1): 264, ("off", 1): 312, ("off", 3): 240}


def test_generic_block_sizes_match_polynomials(F9, F25, F49):
    # without the exceptional exclusion the block size depends only on form
    for F, q in ((F9, 3), (F25, 5), (F49, 7)):
        for cls in all_classes(q):
            if is_exceptional(cls, q):
                continue
            n = len(list(class_quads(F, cls)))
            if cls.form == "dia":
                assert n == (q * q - 1) * (q * q - 3) // 2
            else:
                assert n == (q * q - 1) * (q * q + 1) // 2


def test_quads_are_distinct_and_round_trip(F25):
    for cls in all_classes(5):
        quads = list(class_quads(F25, cls))
        assert len(set(quads)) == len(quads)
        for quad in quads[::7]:
            x, y = quad_pair(F25, cls, quad)
            assert pair_quad(F25, cls, x) == quad


def test_pairs_have_involutory_product_and_canonical_y(F9, F25):
    for F, q in ((F9, 3), (F25, 5)):
        for cls in all_classes(q):
            for quad in list(class_quads(F, cls))[::11]:
                x, y = quad_pair(F, cls, quad)
                assert x.i == 1 and y.i == 1
                xy = x * y
                assert not xy.is_identity()
                assert (xy * xy).is_identity()
                assert order(y) == canonical_order(cls, q)


def test_exceptional_blocks_drop_order4_partners(F9, F25):
    # in an exceptional class y itself has order 4, so quads whose x also
    # has order 4 are not admissible and must be filtered out
    checked = 0
    for F, q in ((F9, 3), (F25, 5)):
        for cls in all_classes(q):
            orders = {order(quad_pair(F, cls, quad)[0])
                      for quad in class_quads(F, cls)}
            if is_exceptional(cls, q):
                assert canonical_order(cls, q) == 4
                assert 4 not in orders
                checked += 1
            else:
                assert 4 in orders  # the filter only bites where y forces it
    assert checked == 2


def test_orbit_counts_match_closed_forms_small_q(orbits3, orbits5):
    for q, orbits in ((3, orbits3), (5, orbits5), (7, None)):
        summary = orbit_count_summary(q, orbits=orbits)
        assert summary == orbit_counts(q)


def test_orbit_sizes_are_the_stabilizer_sizes(orbits3, orbits5):
    for q, orbits in ((3, orbits3), (5, orbits5)):
        for cls, cls_orbits in orbits.items():
            expect = stabilizer_size(cls, q)
            assert all(len(orbit) == expect for orbit in cls_orbits)


def test_orbits_cover_every_quad_once(orbits5):
    blocks = enumerate_quads(5)
    for cls, cls_orbits in orbits5.items():
        seen = [quad for orbit in cls_orbits for quad in orbit]
        assert sorted(seen) == sorted(blocks[cls])
        assert len(set(seen)) == len(seen)


def test_threaded_enumeration_equals_serial():
    assert enumerate_orbits(5, threads=2) == enumerate_orbits(5)


def test_reflexible_tallies_match_formulas(orbits3, orbits5):
    for q, orbits in ((3, orbits3), (5, orbits5), (7, None)):
        tally = reflexible_orbit_tally(q, orbits=orbits)
        expect = reflexible_orbit_counts(q)
        assert tally["dia"] == expect["dia_total"]
        assert tally["off"] == expect["off_total"]
        assert tally["total"] == expect["total"]


def test_reflexible_search_agrees_with_element_scan_q3(F9, orbits3):
    everything = list(all_group_elements(F9, "Gbar"))
    for cls, cls_orbits in orbits3.items():
        for orbit in cls_orbits:
            pair = quad_pair(F9, cls, orbit[0])
            fast = is_reflexible(pair)
            slow = brute_reflexible(pair, everything)
            assert (fast is None) == (slow is None)


def test_reflexible_search_agrees_with_involution_scan_q5(F25, orbits5):
    invs = [g for g in all_group_elements(F25, "Gbar")
            if not g.is_identity() and (g * g).is_identity()]
    assert len(invs) == 755
    for cls, cls_orbits in orbits5.items():
        for orbit in cls_orbits:
            pair = quad_pair(F25, cls, orbit[0])
            fast = is_reflexible(pair)
            slow = brute_reflexible(pair, invs)
            assert (fast is None) == (slow is None)


def test_reflexible_witness_actually_inverts(F25, orbits5):
    rng = random.Random(20260823)
    picks = [(cls, orbit) for cls, cls_orbits in orbits5.items()
             for orbit in cls_orbits]
    for cls, orbit in rng.sample(picks, 12):
        x, y = quad_pair(F25, cls, orbit[0])
        g = is_reflexible((x, y))
        if g is not None:
            assert conjugate(x, g) == x.inv()
            assert conjugate(y, g) == y.inv()


def test_selfduality_requires_equal_orders(F9, orbits3):
    cls = CanonClass("dia", 1)
    pair = quad_pair(F9, cls, orbits3[cls][0][0])
    x, y = pair
    assert order(x) != order(y)
    with pytest.raises(ValueError):
        self_duality(pair)


def test_selfdual_table_matches_reference_rows(orbits3, orbits5):
    for q, orbits in ((3, orbits3), (5, orbits5), (7, None)):
        table = selfdual_table(q, orbits=orbits)
        assert table["dia"] == SELFDUAL_TABLE[q]["dia"]
        assert table["off"] == SELFDUAL_TABLE[q]["off"]
        assert table["maps"] == count_maps(*_pf(q))


def _pf(q):
    return {3: (3, 1), 5: (5, 1), 7: (7, 1), 9: (3, 2)}[q]


def test_selfdual_search_agrees_with_element_scan_q3(F9, orbits3):
    everything = list(all_group_elements(F9, "Gbar"))
    for cls, cls_orbits in orbits3.items():
        for orbit in cls_orbits:
            x, y = quad_pair(F9, cls, orbit[0])
            if order(x) != order(y):
                continue
            pos, neg = self_duality((x, y))
            slow_pos = any(conjugate(x, g) == y and conjugate(y, g) == x
                           for g in everything)
            slow_neg = any(conjugate(x, g) == y.inv()
                           and conjugate(y, g) == x.inv()
                           for g in everything)
            assert (pos is not None) == slow_pos
            assert (neg is not None) == slow_neg


def test_selfdual_witnesses_swap_q5(F25, orbits5):
    seen = 0
    for cls, cls_orbits in orbits5.items():
        for orbit in cls_orbits:
            x, y = quad_pair(F25, cls, orbit[0])
            if order(x) != order(y):
                continue
            pos, neg = self_duality((x, y))
            if pos is not None:
                assert conjugate(x, pos) == y and conjugate(y, pos) == x
                seen += 1
            if neg is not None:
                assert conjugate(x, neg) == y.inv()
                assert conjugate(y, neg) == x.inv()
    assert seen == 15 + 10  # positives across both forms at q=5


def test_closure_reaches_the_whole_group_q3(F9, orbits3):
    for cls, cls_orbits in orbits3.items():
        for orbit in cls_orbits:
            pair = quad_pair(F9, cls, orbit[0])
            assert closure_order(pair) == 720  # |M(9)| = 9 * 80


def test_closure_reaches_the_whole_group_q5_sampled(F25, orbits5):
    rng = random.Random(7)
    picks = [(cls, orbit) for cls, cls_orbits in orbits5.items()
             for orbit in cls_orbits]
    for cls, orbit in rng.sample(picks, 2):
        pair = quad_pair(F25, cls, orbit[0])
        assert closure_order(pair) == 15600  # |M(25)| = 25 * 624


def test_levels_are_the_only_admissible_ones(orbits3, records9):
    recs3 = orbit_records(3, orbits=orbits3)
    assert all(r.level == 1 for r in recs3)
    assert len(recs3) == 7
    # f = 2 admits no proper twisted level, so everything generates
    assert all(r.level == 2 for r in records9)
    assert len(records9) == 790


def test_embedded_subfield_pairs_sit_at_level_one(F9, orbits3):
    Fbig = make_field(3, 6)

    def lift(g):
        M = tuple(Fbig.embed_from(F9, e) for e in g.matrix)
        return TwElem(Fbig, M, g.i)

    for cls, cls_orbits in orbits3.items():
        for orbit in cls_orbits:
            x, y = quad_pair(F9, cls, orbit[0])
            pair = (lift(x), lift(y))
            assert generated_level(pair) == 1
            assert closure_order(pair) == 720


def test_generic_pair_at_q27_sits_at_level_three():
    Fbig = make_field(3, 6)
    cls = CanonClass("dia", 1)
    quad = next(iter(class_quads(Fbig, cls)))
    pair = quad_pair(Fbig, cls, quad)
    assert generated_level(pair) == 3


def test_galois_fusion_at_q9(orbits9, records9):
    bundles = galois_fuse(orbits9, 3, 2)
    assert len(bundles) == 395
    assert all(len(b) == 2 for b in bundles)
    fused = fused_records(9, orbits=orbits9)
    assert len(fused) == 395
    assert sum(r.size for r in fused) == sum(r.size for r in records9)
    assert selfdual_cells(fused) == {"dia": SELFDUAL_TABLE[9]["dia"],
                                     "off": SELFDUAL_TABLE[9]["off"]}


def test_fusion_is_trivial_at_prime_q(orbits3):
    assert fused_records(3, orbits=orbits3) == orbit_records(3, orbits=orbits3)


def test_records_are_sorted_and_unique(records9):
    keys = [(r.form, r.i, r.key) for r in records9]
    assert keys == sorted(keys)
    assert len(set(keys)) == len(keys)


def test_record_types_respect_the_order_obstruction(orbits3, orbits5,
                                                    records9):
    recs = (orbit_records(3, orbits=orbits3)
            + orbit_records(5, orbits=orbits5) + list(records9))
    for r in recs:
        assert not type_obstruction(r.k, r.l)


def test_record_types_agree_with_map_type(F9, orbits3):
    for r in orbit_records(3, orbits=orbits3):
        cls = CanonClass(r.form, r.i)
        pair = quad_pair(F9, cls, r.key)
        assert map_type(pair) == (r.k, r.l)


def test_reflexible_counts_at_q9_split_by_form(records9):
    expect = reflexible_orbit_counts(9)
    for form in ("dia", "off"):
        got = sum(1 for r in records9 if r.form == form and r.reflexible)
        assert got == expect[form + "_total"]


def test_partition_rejects_nothing_is_lost_under_threads(orbits9):
    # the threaded path at composite f must agree with the serial fixture
    assert enumerate_orbits(9, threads=3) == orbits9

"""One-vertex extension search and bounded census."""

import pytest

from vogankm import catalog, classify, subdiagram, validate
from vogankm._iso import are_isomorphic, canonical_key
from vogankm.exceptions import RankBoundExceeded
from vogankm.hypersearch import census, contains_isomorphic, extend


@pytest.fixture(scope="module")
def e9():
    e10 = catalog.lookup("E10").gcm
    return subdiagram(e10, range(9)).gcm  # affine rank-9 diagram


class TestExtend:
    def test_e9_extension_recovers_e10(self, e9):
        results = extend(e9, 1)
        e10 = catalog.lookup("E10").gcm
        assert contains_isomorphic(results, e10) is not None

    def test_all_results_hyperbolic(self, e9):
        for g in extend(e9, 1):
            assert classify(g).hyperbolic

    def test_rank2_from_a1(self):
        results = extend(validate([[2]]), 4)
        keys = {canonical_key(g.a) for g in results}
        assert canonical_key(validate([[2, -1], [-1, 2]]).a) not in keys  # finite
        assert canonical_key(validate([[2, -2], [-2, 2]]).a) not in keys  # affine
        assert canonical_key(validate([[2, -3], [-3, 2]]).a) in keys
        assert canonical_key(validate([[2, -4], [-2, 2]]).a) in keys
        # every emitted rank-2 has entry product > 4
        assert all(g.a[0][1] * g.a[1][0] > 4 for g in results)

    def test_no_isomorphic_pair(self, e9):
        results = extend(e9, 1)
        for i in range(len(results)):
            for j in range(i + 1, len(results)):
                assert not are_isomorphic(results[i].a, results[j].a)

    def test_empty_result_is_valid(self):
        # the rank-2 affine diagram with all labels 1 has no simply-laced
        # hyperbolic extension at rank 3
        base = validate([[2, -2], [-2, 2]])
        results = extend(base, 1)
        for g in results:
            assert classify(g).hyperbolic


class TestCensus:
    def test_rank2_product_at_most_4_empty(self):
        assert census(2, 2) == []

    def test_rank2_label3(self):
        results = census(2, 3)
        keys = sorted(canonical_key(g.a) for g in results)
        want = sorted([
            canonical_key(validate([[2, -2], [-3, 2]]).a),
            canonical_key(validate([[2, -3], [-3, 2]]).a),
        ])
        assert keys == want

    def test_rank3_label2_contains_catalog_shapes(self):
        results = census(3, 2)
        for name in ("AC2(1)", "AD3(2)"):
            target = catalog.lookup(name).gcm
            assert contains_isomorphic(results, target) is not None

    def test_rank4_simply_laced_census_contains_catalog_entries(self):
        results = census(4, 1)
        for name in ("Example2-rank4", "Example3-rank4"):
            target = catalog.lookup(name).gcm
            assert contains_isomorphic(results, target) is not None

    def test_monotone_in_label_bound(self):
        small = {canonical_key(g.a) for g in census(3, 1)}
        large = {canonical_key(g.a) for g in census(3, 2)}
        assert small <= large

    def test_posthoc_recheck_and_dedup_rank_le_4(self):
        for rank, label in ((2, 3), (3, 2), (4, 1)):
            results = census(rank, label)
            for g in results:
                assert classify(g).hyperbolic
            for i in range(len(results)):
                for j in range(i + 1, len(results)):
                    assert not are_isomorphic(results[i].a, results[j].a)

    def test_census_intersects_catalog_at_rank3(self):
        results = census(3, 3)
        keys = {canonical_key(g.a) for g in results}
        for name in ("GG3", "G'G3", "G'G'3", "AC2(1)", "AD3(2)", "AGG3", "AG'G'3"):
            assert canonical_key(catalog.lookup(name).gcm.a) in keys, name

    def test_rank_bound(self):
        with pytest.raises(RankBoundExceeded):
            census(9, 1)

    def test_deterministic_order(self):
        first = [g.a for g in census(3, 2)]
        second = [g.a for g in census(3, 2)]
        assert first == second

"""Catalog integrity: hyperbolicity, figure structure, claims, families.

The expected singleton partitions, claim verdicts, and property outcomes in
this module were computed with an independent frozenset-based sweep
implementation and frozen; the library must reproduce them exactly.
"""

import pytest

from conftest import naive_orbit_partition
from vogankm import catalog, classify, diagram_of
from vogankm.catalog import FIGURE_CERTAIN, FIGURE_INFERRED
from vogankm.exceptions import NoClaims, UnknownEntry, UnknownVertexLabel
from vogankm.vogan import all_classes
from vogankm._iso import are_isomorphic

ALL_NAMES = [
    "E10", "Example2-rank4", "Example3-rank4", "Example4-rank5",
    "Example5-rank5", "Example6-rank5", "GG3", "G'G3", "G'G'3", "AC2(1)",
    "AD3(2)", "AGG3", "AG'G'3", "AC3,4(1)", "HG2(1)", "HF4(1)", "HA2(2)",
    "H'A2(2)", "HC6(1)-instance", "HD-family-instance", "H2D4(1)",
]

# frozen ground truth (independent sweep implementation), by entry name:
# (singleton partition in labels, borel-de-siebenthal holds, claim verdicts)
EXPECTED = {
    "E10": ([("0", "2", "3", "4", "7", "8"), ("1", "5", "6", "9")], True,
            ["Match", "Mismatch"]),
    "Example2-rank4": ([("1", "3", "4"), ("2",)], True, ["Match", "Match"]),
    "Example3-rank4": ([("1", "3"), ("2", "4")], False, ["Match", "Mismatch"]),
    "Example4-rank5": ([("1", "2"), ("3",), ("4", "5")], True,
                       ["Mismatch", "Match"]),
    "Example5-rank5": ([("1", "3"), ("2",), ("4", "5")], False,
                       ["Mismatch", "Mismatch", "Mismatch"]),
    "Example6-rank5": ([("1",), ("2",), ("3",), ("4",), ("5",)], False,
                       ["Match"] * 5),
    "GG3": ([("1", "3"), ("2",)], True, ["Match", "Match"]),
    "G'G3": ([("1", "3"), ("2",)], True, ["Mismatch", "Mismatch"]),
    "G'G'3": ([("1", "3"), ("2",)], True, ["Match", "Match"]),
    "AC2(1)": ([("1", "2"), ("3",)], False, ["Match", "Match"]),
    "AD3(2)": ([("1", "2"), ("3",)], True, ["Match", "Match"]),
    "AGG3": ([("1", "2", "3")], False, ["Mismatch", "Mismatch"]),
    "AG'G'3": ([("1", "2", "3")], False, ["Match", "Mismatch"]),
    "AC3,4(1)": ([("1", "4"), ("2", "3")], True, ["Match", "Match"]),
    "HG2(1)": ([("1", "4"), ("2", "3")], True,
               ["Match", "Mismatch", "Mismatch", "Mismatch"]),
    "HF4(1)": ([("1", "4"), ("2", "3"), ("5", "6")], True,
               ["Match", "Match", "Mismatch", "Mismatch", "Match"]),
    "HA2(2)": ([("1",), ("2",), ("3",)], True, ["Mismatch", "Match"]),
    "H'A2(2)": ([("1", "2"), ("3",)], True, ["Match", "Match"]),
    "HC6(1)-instance": ([("1",), ("2",), ("3", "5"), ("4",), ("6",)], False,
                        ["Mismatch", "Match", "Match", "Mismatch"]),
    "HD-family-instance": ([("1", "2", "3", "6"), ("4", "5"), ("7", "8")],
                           False, []),
    "H2D4(1)": ([("1",), ("2", "3"), ("4", "5", "6")], True,
                ["Mismatch", "Match", "Mismatch"]),
}

# vertex count and multiset of edge entry-pairs read off each source figure
FIGURE_EDGES = {
    "E10": (10, [(1, 1)] * 9),
    "Example2-rank4": (4, [(1, 1)] * 4),
    "Example3-rank4": (4, [(1, 1)] * 5),
    "Example4-rank5": (5, [(1, 1)] * 3 + [(1, 2)]),
    "Example5-rank5": (5, [(1, 1)] * 3 + [(1, 2)] * 2),
    "Example6-rank5": (5, [(1, 1)] * 2 + [(1, 2)] * 2),
    "GG3": (3, [(1, 3)] * 2),
    "G'G3": (3, [(1, 3)] * 2),
    "G'G'3": (3, [(1, 3)] * 2),
    "AC2(1)": (3, [(1, 1)] + [(1, 2)] * 2),
    "AD3(2)": (3, [(1, 1)] + [(1, 2)] * 2),
    "AGG3": (3, [(1, 1)] + [(1, 3)] * 2),
    "AG'G'3": (3, [(1, 1)] + [(1, 3)] * 2),
    "AC3,4(1)": (4, [(1, 1)] * 2 + [(1, 2)] * 2),
    "HG2(1)": (4, [(1, 1)] * 2 + [(1, 3)]),
    "HF4(1)": (6, [(1, 1)] * 4 + [(1, 2)]),
    "HA2(2)": (3, [(1, 1), (1, 4)]),
    "H'A2(2)": (3, [(1, 1), (1, 4)]),
    "HC6(1)-instance": (6, [(1, 1)] * 3 + [(1, 2)] * 2),
    "HD-family-instance": (8, [(1, 1)] * 7),
    "H2D4(1)": (6, [(1, 1)] * 5),
}


def entry_report(name):
    entry = catalog.lookup(name)
    claims = catalog.expectations(name) if entry.claimed_partitions else []
    return entry, all_classes(entry.gcm, name=name, expectations=claims,
                              labels=entry.labels)


class TestEntries:
    def test_name_list(self):
        assert catalog.names() == ALL_NAMES

    @pytest.mark.parametrize("name", ALL_NAMES)
    def test_every_entry_hyperbolic(self, name):
        t = classify(catalog.lookup(name).gcm)
        assert t.hyperbolic, f"{name} must classify hyperbolic"

    @pytest.mark.parametrize("name", ALL_NAMES)
    def test_every_vertex_deletion_is_finite_or_affine(self, name):
        # the defining property, asserted directly and exhaustively
        from vogankm import TypeTag, connected_components, subdiagram

        g = catalog.lookup(name).gcm
        for v in range(g.n):
            keep = [x for x in range(g.n) if x != v]
            sub = subdiagram(g, keep).gcm
            for _, tag in classify(sub).components:
                assert tag in (TypeTag.FINITE, TypeTag.AFFINE)

    @pytest.mark.parametrize("name", ALL_NAMES)
    def test_figure_structure(self, name):
        want_n, want_edges = FIGURE_EDGES[name]
        g = catalog.lookup(name).gcm
        diag = diagram_of(g)
        assert g.n == want_n
        got = sorted(tuple(sorted((e.aij_abs, e.aji_abs))) for e in diag.edges)
        assert got == sorted(want_edges)

    def test_provenance_values(self):
        for name in ALL_NAMES:
            e = catalog.lookup(name)
            assert e.provenance in (FIGURE_CERTAIN, FIGURE_INFERRED)
        certain = [n for n in ALL_NAMES
                   if catalog.lookup(n).provenance == FIGURE_CERTAIN]
        assert certain == ["E10", "Example2-rank4", "Example3-rank4"]

    def test_lookup_suggestions(self):
        with pytest.raises(UnknownEntry) as err:
            catalog.lookup("E-10")
        assert "E10" in err.value.suggestions

    def test_no_claims(self):
        with pytest.raises(NoClaims):
            catalog.expectations("HD-family-instance")

    def test_unknown_vertex_label(self):
        with pytest.raises(UnknownVertexLabel):
            catalog.lookup("E10").index_of("x")


class TestComputedAgainstFrozen:
    @pytest.mark.parametrize("name", ALL_NAMES)
    def test_singleton_partition_and_bds(self, name):
        entry, report = entry_report(name)
        want_singletons, want_bds, _ = EXPECTED[name]
        got = sorted(
            tuple(sorted(entry.labels[p[0]] for p in c.members if len(p) == 1))
            for c in report.classes
            if any(len(p) == 1 for p in c.members)
        )
        assert got == sorted(want_singletons)
        assert report.bds_holds == want_bds

    @pytest.mark.parametrize("name", ALL_NAMES)
    def test_claim_verdicts(self, name):
        _, report = entry_report(name)
        want = EXPECTED[name][2]
        assert [v.verdict for v in report.verdicts] == want

    @pytest.mark.parametrize("name", ["Example2-rank4", "GG3", "HA2(2)", "AC3,4(1)"])
    def test_partition_matches_naive_oracle(self, name):
        entry = catalog.lookup(name)
        g = entry.gcm
        from vogankm import automorphisms
        oracle = naive_orbit_partition([list(r) for r in g.a], automorphisms(g))
        oracle_sets = {frozenset(map(tuple, (sorted(p) for p in cls))) for cls in oracle}
        report = all_classes(g)
        lib_sets = {frozenset(c.members) for c in report.classes}
        assert lib_sets == oracle_sets


class TestFamilies:
    def test_hc_instance_matches_family(self):
        inst = catalog.lookup("HC6(1)-instance").gcm
        assert catalog.hc_family(6).a == inst.a

    def test_hd_instance_matches_family(self):
        inst = catalog.lookup("HD-family-instance").gcm
        assert are_isomorphic(catalog.hd_family(8).a, inst.a)

    def test_hd6_matches_h2d4(self):
        inst = catalog.lookup("H2D4(1)").gcm
        assert are_isomorphic(catalog.hd_family(6).a, inst.a)

    def test_family_hyperbolicity_ranges(self):
        # the double-edged family dies early; the simply-laced one reaches rank 10
        for rank in (4, 5, 6):
            assert classify(catalog.hc_family(rank)).hyperbolic
        assert not classify(catalog.hc_family(7)).hyperbolic
        for rank in (6, 7, 8, 9, 10):
            assert classify(catalog.hd_family(rank)).hyperbolic
        assert not classify(catalog.hd_family(11)).hyperbolic

    def test_family_rank_bounds(self):
        with pytest.raises(ValueError):
            catalog.hc_family(3)
        with pytest.raises(ValueError):
            catalog.hd_family(5)

"""ASCII and DOT rendering."""

from vogankm import catalog, involution, validate
from vogankm.render import render_ascii, render_dot


class TestAscii:
    def test_e10_chain_with_branch(self):
        e = catalog.lookup("E10")
        text = render_ascii(e.gcm, labels=e.labels)
        lines = text.splitlines()
        assert lines[0] == "(1)---(2)---(3)---(4)---(5)---(6)---(7)---(8)---(9)"
        assert "|" in lines[1]
        assert "(0)" in lines[2]

    def test_rank1(self):
        assert render_ascii(validate([[2]])) == "(0)\n"

    def test_bold_edge_pair_annotation(self):
        text = render_ascii(validate([[2, -3], [-3, 2]]))
        assert "3,3" in text

    def test_painted_vertices_filled(self):
        e = catalog.lookup("E10")
        text = render_ascii(e.gcm, painted={9, 8, 6}, labels=e.labels)
        assert "*9*" in text and "*8*" in text and "*6*" in text and "(7)" in text

    def test_arrowed_double_edge(self):
        g = catalog.lookup("HF4(1)").gcm
        text = render_ascii(g, labels=catalog.lookup("HF4(1)").labels)
        assert "=2=>" in text or "<=2=" in text

    def test_sigma_arc(self):
        g = catalog.lookup("Example2-rank4").gcm
        sigma = involution(g, (2, 1, 0, 3))
        text = render_ascii(g, sigma, labels=catalog.lookup("Example2-rank4").labels)
        assert "sigma: (1) <~~> (3)" in text

    def test_cycle_falls_back_to_edge_list(self):
        e = catalog.lookup("Example3-rank4")
        text = render_ascii(e.gcm, labels=e.labels)
        assert text.startswith("vertices:")
        assert "1 --- 2" in text

    def test_deterministic(self):
        e = catalog.lookup("Example5-rank5")
        one = render_ascii(e.gcm, labels=e.labels)
        two = render_ascii(e.gcm, labels=e.labels)
        assert one == two


class TestDot:
    def test_structure(self):
        e = catalog.lookup("E10")
        text = render_dot(e.gcm, painted={9}, labels=e.labels, name="E10")
        assert text.startswith('graph "E10" {')
        assert text.rstrip().endswith("}")
        assert 'v0 [label="0"]' in text
        assert "style=filled fillcolor=black" in text
        assert "v8 -- v9;" in text

    def test_multiple_edge_direction(self):
        g = validate([[2, -2], [-1, 2]])
        text = render_dot(g)
        # arrow points at vertex 0 (the larger-entry row)
        assert 'v0 -- v1 [label="2" dir=back];' in text

    def test_bold_edge(self):
        text = render_dot(validate([[2, -5], [-1, 2]]))
        assert 'label="5,1"' in text and "style=bold" in text

    def test_sigma_dashed_arc(self):
        g = catalog.lookup("Example2-rank4").gcm
        sigma = involution(g, (2, 1, 0, 3))
        text = render_dot(g, sigma)
        assert "v0 -- v2 [style=dashed dir=both constraint=false];" in text

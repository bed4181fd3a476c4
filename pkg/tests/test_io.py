import pytest

from rvckit.families import complete_graph, path_graph
from rvckit.gadgets import build_gadget
from rvckit.graphs import EMPTY_PAIRS, all_vertex_pairs, coloring, pair_set
from rvckit.io import (
    InstanceFormatError,
    emit_dot,
    emit_gadget,
    emit_instance,
    label_text,
    parse_gadget,
    parse_instance,
    parse_label,
)


class TestParseInstance:
    def test_minimal(self):
        g, pairs, col = parse_instance('{"n": 3, "edges": [[0, 1], [1, 2]]}')
        assert g.n == 3 and g.edges == frozenset({(0, 1), (1, 2)})
        assert pairs is None and col is None

    def test_full(self):
        text = (
            '{"n": 3, "edges": [[0, 1], [1, 2]],'
            ' "pairs": [[0, 2]], "coloring": [1, 2, 1], "k": 3}'
        )
        g, pairs, col = parse_instance(text)
        assert list(pairs) == [(0, 2)]
        assert col.colors == (1, 2, 1) and col.k == 3

    def test_budget_inferred_without_k(self):
        _, _, col = parse_instance('{"n": 2, "edges": [[0, 1]], "coloring": [2, 1]}')
        assert col.k == 2

    def test_empty_pairs_differ_from_absent(self):
        _, pairs, _ = parse_instance('{"n": 2, "edges": [[0, 1]], "pairs": []}')
        assert pairs is not None and len(pairs) == 0

    @pytest.mark.parametrize(
        "text,needle",
        [
            ("not json", "invalid JSON at line 1"),
            ("[1, 2]", "must be a JSON object"),
            ('{"edges": []}', "'n'"),
            ('{"n": 0, "edges": []}', "'n'"),
            ('{"n": true, "edges": []}', "'n'"),
            ('{"n": 2}', "'edges'"),
            ('{"n": 2, "edges": [[0]]}', "edges[0]"),
            ('{"n": 2, "edges": [[0, 9]]}', "bad edge list"),
            ('{"n": 2, "edges": [[0, 0]]}', "bad edge list"),
            ('{"n": 2, "edges": [], "pairs": [[0, 0]]}', "bad pair list"),
            ('{"n": 2, "edges": [], "pairs": [3]}', "pairs[0]"),
            ('{"n": 2, "edges": [], "coloring": [1]}', "2 vertices"),
            ('{"n": 2, "edges": [], "coloring": [1, "x"]}', "list of integers"),
            ('{"n": 2, "edges": [], "coloring": [1, 5], "k": 2}', "bad coloring"),
        ],
    )
    def test_diagnostics(self, text, needle):
        with pytest.raises(InstanceFormatError, match=None) as err:
            parse_instance(text)
        assert needle in str(err.value)


class TestEmitInstance:
    def test_round_trip(self):
        g = path_graph(4)
        p = pair_set([(0, 3)])
        c = coloring([1, 2, 2, 1], k=2)
        g2, p2, c2 = parse_instance(emit_instance(g, pairs=p, coloring=c))
        assert (g2, p2, c2) == (g, p, c)

    def test_key_order_and_layout(self):
        text = emit_instance(path_graph(3), pairs=EMPTY_PAIRS, k=2)
        assert text == '{\n  "n": 3,\n  "edges": [[0, 1], [1, 2]],\n  "pairs": [],\n  "k": 2\n}\n'

    def test_absent_keys_stay_absent(self):
        text = emit_instance(path_graph(3))
        assert '"pairs"' not in text and '"coloring"' not in text

    def test_deterministic(self):
        g = complete_graph(4)
        assert emit_instance(g) == emit_instance(g)

    def test_conflicting_budgets_rejected(self):
        with pytest.raises(ValueError):
            emit_instance(path_graph(2), coloring=coloring([1, 1], k=2), k=3)


class TestLabels:
    @pytest.mark.parametrize(
        "label,k,text",
        [
            (("hub",), 2, "u"),
            (("v", 0, 0, 1), 2, "v_{0,0}^{(1)}"),
            (("v", 2, 3, 2), 5, "v_{2,3}^{(2)}"),
            (("u", 0, 1, 2), 3, "u_{0,1}^{(2)}"),
            (("w", 1, 2, 1), 3, "w_{1,2}^{(1)}"),
            (("base", 4), 3, "v_{4,3}"),
        ],
    )
    def test_text_and_parse_are_inverse(self, label, k, text):
        assert label_text(label, k) == text
        assert parse_label(text, k) == label

    def test_parse_rejects_garbage(self):
        with pytest.raises(InstanceFormatError):
            parse_label("x_{0,0}", 2)
        with pytest.raises(InstanceFormatError):
            parse_label("v_{0,3}", 2)  # base label at the wrong level


class TestGadgetFiles:
    def test_round_trip(self):
        g = path_graph(3)
        gg = build_gadget(g, pair_set([(0, 2)]), 3)
        assert parse_gadget(emit_gadget(gg)) == gg

    def test_round_trip_with_hub(self):
        g = complete_graph(3)
        gg = build_gadget(g, all_vertex_pairs(g), 2)
        assert parse_gadget(emit_gadget(gg)) == gg

    def test_requires_gadget_keys(self):
        with pytest.raises(InstanceFormatError, match="pairs"):
            parse_gadget('{"n": 2, "edges": [[0, 1]], "k": 2, "labels": ["u", "u"]}')
        with pytest.raises(InstanceFormatError, match="'k'"):
            parse_gadget('{"n": 2, "edges": [[0, 1]], "pairs": [], "labels": ["u", "u"]}')
        with pytest.raises(InstanceFormatError, match="label"):
            parse_gadget('{"n": 2, "edges": [[0, 1]], "pairs": [], "k": 2}')

    def test_requires_contiguous_base(self):
        text = (
            '{"n": 2, "edges": [[0, 1]], "pairs": [], "k": 2,'
            ' "labels": ["v_{1,2}", "v_{2,2}"]}'
        )
        with pytest.raises(InstanceFormatError, match="base"):
            parse_gadget(text)


class TestDot:
    def test_plain_graph(self):
        text = emit_dot(path_graph(3), pairs=pair_set([(0, 2)]))
        assert "graph G {" in text
        assert "  0 -- 1;" in text
        assert "0 -- 2 [style=dashed, color=red, constraint=false];" in text
        assert text == emit_dot(path_graph(3), pairs=pair_set([(0, 2)]))

    def test_gadget_rendering(self):
        g = complete_graph(3)
        gg = build_gadget(g, all_vertex_pairs(g), 2)
        text = emit_dot(gg)
        assert 'label="hub"' in text
        assert 'label="level 0"' in text
        assert 'label="level 2"' in text
        assert "shape=doublecircle" in text
        assert "[penwidth=2]" in text
        assert "style=dashed" in text

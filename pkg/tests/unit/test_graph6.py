"""
Unit tests for graph6 encoding and decoding
"""
import io

import networkx as nx
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from src.graphs.constructions import complete_graph, empty_graph
from src.graphs.core import Graph
from src.graphs.graph6 import decode, encode, encode_str, iter_records
from src.lib.errors import Graph6ParseError


def _nx_graph6(g: Graph) -> bytes:
    return nx.to_graph6_bytes(g.to_networkx(), header=False).strip()


@st.composite
def graphs(draw, max_n=20):
    n = draw(st.integers(min_value=1, max_value=max_n))
    upper = draw(arrays(np.bool_, (n, n)))
    upper = np.triu(upper, 1)
    return Graph(upper | upper.T)


class TestGraph6Encoding:
    """Bit-exact agreement with the reference encoder"""

    @pytest.mark.unit
    def test_known_records(self):
        assert encode_str(complete_graph(4)) == "C~"
        assert encode_str(empty_graph(0)) == "?"
        assert encode_str(empty_graph(1)) == "@"

    @pytest.mark.unit
    def test_matches_networkx_on_fixtures(self, small_graphs):
        for g in small_graphs:
            assert encode(g) == _nx_graph6(g)

    @pytest.mark.unit
    def test_long_size_prefix(self):
        g = Graph.from_edges(70, [(0, 69), (3, 4)])
        record = encode(g)
        assert record[0] == 126
        assert record == _nx_graph6(g)
        assert decode(record) == g

    @pytest.mark.unit
    @settings(max_examples=60, deadline=None)
    @given(graphs())
    def test_property_matches_networkx(self, g):
        assert encode(g) == _nx_graph6(g)
        assert decode(encode(g)) == g

    @pytest.mark.unit
    @pytest.mark.slow
    @settings(max_examples=10_000, deadline=None)
    @given(graphs(max_n=30))
    def test_full_volume_round_trip(self, g):
        record = encode(g)
        assert record == _nx_graph6(g)
        assert decode(record) == g


class TestGraph6Decoding:
    """Malformed records and stream handling"""

    @pytest.mark.unit
    def test_accepts_header_and_whitespace(self, k24):
        assert decode(b">>graph6<<" + encode(k24) + b"\n") == k24
        assert decode("  " + encode_str(k24) + "\r\n") == k24

    @pytest.mark.unit
    def test_empty_record(self):
        with pytest.raises(Graph6ParseError) as exc:
            decode(b"")
        assert exc.value.offset == 0

    @pytest.mark.unit
    def test_truncated_body(self):
        # order 4 needs one edge byte
        with pytest.raises(Graph6ParseError) as exc:
            decode(b"C")
        assert exc.value.offset == 1

    @pytest.mark.unit
    def test_byte_out_of_range(self):
        with pytest.raises(Graph6ParseError) as exc:
            decode(b"C!")
        assert exc.value.offset == 1

    @pytest.mark.unit
    def test_extra_bytes(self):
        with pytest.raises(Graph6ParseError):
            decode(b"C~~")

    @pytest.mark.unit
    def test_nonzero_padding(self):
        # order 2 has one edge bit and five padding bits; "~" sets them all
        with pytest.raises(Graph6ParseError):
            decode(b"A~")

    @pytest.mark.unit
    def test_iter_records_counts_malformed(self, k24, triangle):
        stream = io.StringIO(f">>graph6<<\n{encode_str(k24)}\n\nC!\n{encode_str(triangle)}\n")
        items = list(iter_records(stream))
        assert [line for line, _ in items] == [2, 4, 5]
        assert items[0][1] == k24
        assert isinstance(items[1][1], Graph6ParseError)
        assert items[2][1] == triangle

    @pytest.mark.unit
    def test_iter_records_accepts_bytes(self, k24):
        stream = io.BytesIO(encode(k24) + b"\n")
        assert [g for _, g in iter_records(stream)] == [k24]

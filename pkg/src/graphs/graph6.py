"""
graph6 encoding and decoding

Bit-exact with the standard format: N(n) size prefix, then the upper
triangle of the adjacency matrix column by column (x(0,1), x(0,2), x(1,2),
x(0,3), ...), packed six bits per byte offset by 63, zero padded.
"""
import logging
from typing import IO, Iterable, Iterator, Tuple, Union

import numpy as np

from ..lib.errors import Graph6ParseError, InvalidGraphError
from .core import Graph

logger = logging.getLogger(__name__)

HEADER = b">>graph6<<"
MAX_ORDER = 68719476735  # 2^36 - 1


def _encode_size(n: int) -> bytes:
    if n < 0 or n > MAX_ORDER:
        raise InvalidGraphError(f"graph6 cannot encode order {n}")
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126] + [((n >> shift) & 63) + 63 for shift in (12, 6, 0)])
    return bytes([126, 126] + [((n >> shift) & 63) + 63 for shift in (30, 24, 18, 12, 6, 0)])


def _column_order(n: int) -> Tuple[np.ndarray, np.ndarray]:
    """Strict upper triangle (i, j) pairs ordered by j, then i"""
    i_idx, j_idx = np.triu_indices(n, k=1)
    order = np.lexsort((i_idx, j_idx))
    return i_idx[order], j_idx[order]


def _upper_triangle_bits(g: Graph) -> np.ndarray:
    i_idx, j_idx = _column_order(g.n)
    return g.adjacency[i_idx, j_idx]


def encode(g: Graph) -> bytes:
    """graph6 record for g, without header or trailing newline"""
    bits = _upper_triangle_bits(g).astype(np.uint8)
    pad = (-len(bits)) % 6
    if pad:
        bits = np.concatenate([bits, np.zeros(pad, dtype=np.uint8)])
    groups = bits.reshape(-1, 6)
    values = groups @ np.array([32, 16, 8, 4, 2, 1], dtype=np.uint8)
    return _encode_size(g.n) + bytes((values + 63).astype(np.uint8).tolist())


def encode_str(g: Graph) -> str:
    return encode(g).decode("ascii")


def _decode_size(record: bytes) -> Tuple[int, int]:
    """Returns (n, offset of the first edge byte)"""
    if not record:
        raise Graph6ParseError("empty graph6 record", 0, record)

    def group(offset: int) -> int:
        if offset >= len(record):
            raise Graph6ParseError("truncated size prefix", offset, record)
        value = record[offset]
        if not 63 <= value <= 126:
            raise Graph6ParseError(f"byte {value} outside graph6 range 63..126", offset, record)
        return value - 63

    if record[0] != 126:
        return group(0), 1
    if len(record) > 1 and record[1] == 126:
        n = 0
        for offset in range(2, 8):
            n = (n << 6) | group(offset)
        return n, 8
    n = 0
    for offset in range(1, 4):
        n = (n << 6) | group(offset)
    return n, 4


def decode(data: Union[bytes, str]) -> Graph:
    """
    Parse one graph6 record. An optional >>graph6<< header and surrounding
    whitespace are accepted; byte offsets in errors refer to the stripped record.
    """
    record = data.encode("latin-1", errors="replace") if isinstance(data, str) else bytes(data)
    record = record.strip()
    if record.startswith(HEADER):
        record = record[len(HEADER):]

    n, start = _decode_size(record)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = record[start:]
    if len(body) != nbytes:
        raise Graph6ParseError(
            f"expected {nbytes} edge bytes for order {n}, found {len(body)}",
            start + min(len(body), nbytes),
            record,
        )

    values = np.frombuffer(body, dtype=np.uint8).astype(np.int64)
    bad = np.flatnonzero((values < 63) | (values > 126))
    if len(bad):
        offset = start + int(bad[0])
        raise Graph6ParseError(f"byte {record[offset]} outside graph6 range 63..126", offset, record)

    values -= 63
    bits = ((values[:, None] >> np.arange(5, -1, -1)) & 1).reshape(-1)
    if bits[nbits:].any():
        raise Graph6ParseError("non-zero padding bits", len(record) - 1, record)

    i_idx, j_idx = _column_order(n)
    adj = np.zeros((n, n), dtype=bool)
    set_bits = bits[:nbits].astype(bool)
    adj[i_idx[set_bits], j_idx[set_bits]] = True
    adj |= adj.T
    return Graph(adj)


def iter_records(stream: Union[IO, Iterable]) -> Iterator[Tuple[int, Union[Graph, Graph6ParseError]]]:
    """
    Walk a newline-delimited graph6 stream, yielding (line number, graph or
    parse error). Blank lines and bare headers are skipped; malformed records
    are yielded as errors so callers can count them.
    """
    for line_no, line in enumerate(stream, start=1):
        raw = line.encode("latin-1", errors="replace") if isinstance(line, str) else bytes(line)
        raw = raw.strip()
        if not raw or raw == HEADER:
            continue
        try:
            yield line_no, decode(raw)
        except Graph6ParseError as e:
            logger.debug("Skipping malformed graph6 record on line %d: %s", line_no, e)
            yield line_no, e

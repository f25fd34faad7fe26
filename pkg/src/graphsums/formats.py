"""Text formats read by the command line.

Edge lists::

    # comment
    n 3
    1 2
    1 3
    2 3

A line ``i j +`` or ``i j -`` makes the file a signed root set instead.
``L i j <delta>`` adds ``delta`` to entry (i, j) of the Laplacian; it is
only useful for building deliberately broken fixtures.

Weight files hold ``i j <integer or fraction>`` lines, core files hold
``i j [multiplicity]`` lines with multiplicity 1 or 2.
"""

from __future__ import annotations

from fractions import Fraction
from pathlib import Path

from .errors import DuplicateEdge, LoopEdge, ParseError
from .graph import Graph
from .ring import normalize
from .roots import RootSet

__all__ = ["parse_edge_list", "read_input", "parse_weights", "read_weights", "parse_core", "read_core"]

_MINUS = {"-", "−"}


def _lines(text):
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield no, line.split()


def _int(tok, no, what="vertex"):
    try:
        return int(tok)
    except ValueError:
        raise ParseError(f"expected an integer {what}, got {tok!r}", no) from None


def _vertex(tok, n, no):
    v = _int(tok, no)
    if not 1 <= v <= n:
        raise ParseError(f"vertex {v} outside 1..{n}", no)
    return v


def _scalar(tok, no):
    try:
        return normalize(Fraction(tok))
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"expected an integer or fraction, got {tok!r}", no) from None


def parse_edge_list(text, weights="symbolic"):
    """Return a :class:`Graph` or, if any line carries a sign, a :class:`RootSet`."""
    n = None
    plain = []
    signed = []
    shifts = []
    seen = set()
    for no, toks in _lines(text):
        if toks[0] == "n":
            if n is not None:
                raise ParseError("repeated header", no)
            if len(toks) != 2:
                raise ParseError("header must read 'n <count>'", no)
            n = _int(toks[1], no, "vertex count")
            if n < 1:
                raise ParseError("vertex count must be positive", no)
            continue
        if n is None:
            raise ParseError("missing 'n <count>' header before the first edge", no)
        if toks[0] == "L":
            if len(toks) != 4:
                raise ParseError("Laplacian shift must read 'L i j <delta>'", no)
            shifts.append((_vertex(toks[1], n, no), _vertex(toks[2], n, no), _scalar(toks[3], no)))
            continue
        if len(toks) not in (2, 3):
            raise ParseError(f"expected 'i j [sign]', got {' '.join(toks)!r}", no)
        i, j = _vertex(toks[0], n, no), _vertex(toks[1], n, no)
        if i == j:
            raise LoopEdge(f"loop at vertex {i}", no)
        pair = (min(i, j), max(i, j))
        if len(toks) == 3:
            sign = toks[2]
            if sign in _MINUS:
                sign = "-"
            elif sign != "+":
                raise ParseError(f"sign must be '+' or '-', got {sign!r}", no)
            key = (*pair, sign)
            if key in seen:
                raise DuplicateEdge(f"root {sign}{pair} listed twice", no)
            seen.add(key)
            signed.append(key)
        else:
            if pair in seen:
                raise DuplicateEdge(f"edge {pair} listed twice", no)
            seen.add(pair)
            plain.append(pair)
    if n is None:
        raise ParseError("empty input: missing 'n <count>' header", 1)
    if signed and plain:
        raise ParseError("mix of signed and unsigned edges", None)
    if signed:
        if shifts:
            raise ParseError("Laplacian shifts apply to unsigned graphs only", None)
        return RootSet(n, signed)
    G = Graph.from_edges(n, plain, "symbolic")
    if weights != "symbolic":
        G = G.with_weights(weights)
    if shifts:
        G = Graph(G.n, G.edges, G.weights, tuple(shifts))
    return G


def read_input(path, weights="symbolic"):
    return parse_edge_list(Path(path).read_text(), weights)


def parse_weights(text):
    """``{(i, j): value}`` from ``i j <value>`` lines."""
    out = {}
    for no, toks in _lines(text):
        if len(toks) != 3:
            raise ParseError("weight lines read 'i j <value>'", no)
        i, j = _int(toks[0], no), _int(toks[1], no)
        if i == j:
            raise LoopEdge(f"loop at vertex {i}", no)
        pair = (min(i, j), max(i, j))
        if pair in out:
            raise DuplicateEdge(f"weight for {pair} given twice", no)
        out[pair] = _scalar(toks[2], no)
    return out


def read_weights(path):
    return parse_weights(Path(path).read_text())


def parse_core(text):
    """``{(i, j): multiplicity}`` from ``i j [1|2]`` lines (a header line
    ``n <count>`` is allowed and ignored)."""
    out = {}
    for no, toks in _lines(text):
        if toks[0] == "n":
            continue
        if len(toks) not in (2, 3):
            raise ParseError("core lines read 'i j [multiplicity]'", no)
        i, j = _int(toks[0], no), _int(toks[1], no)
        if i == j:
            raise LoopEdge(f"loop at vertex {i}", no)
        k = _int(toks[2], no, "multiplicity") if len(toks) == 3 else 1
        if k not in (1, 2):
            raise ParseError(f"multiplicity must be 1 or 2, got {k}", no)
        pair = (min(i, j), max(i, j))
        if pair in out:
            raise DuplicateEdge(f"edge {pair} listed twice", no)
        out[pair] = k
    return out


def read_core(path):
    return parse_core(Path(path).read_text())

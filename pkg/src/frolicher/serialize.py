"""On-disk formats: JSON complex documents, zigzag multisets, dot lists.

Rationals serialize as strings ``"n"`` or ``"n/d"`` with d > 0 and the
fraction in lowest terms.  Dimension grids serialize as ``dims[p][q]``.
Zero maps and maps touching a zero-dimensional spot are omitted from the
document; the parser rejects the latter if present.  Round trip is exact:
``parse(serialize(K))`` reproduces ``K`` including every matrix entry.
"""

import json
import re
from collections import Counter
from fractions import Fraction

import numpy as np

from . import linalg
from .bicomplex import DoubleComplex
from .zigzag import canonicalize_shape


class ParseError(ValueError):
    """Malformed document (structure, not mathematics)."""


def fraction_to_str(x):
    f = Fraction(x)
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def str_to_fraction(s):
    if isinstance(s, bool):
        raise ParseError(f"not a rational: {s!r}")
    if isinstance(s, int):
        return Fraction(s)
    if not isinstance(s, str):
        raise ParseError(f"not a rational: {s!r}")
    try:
        f = Fraction(s)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad rational {s!r}: {exc}")
    return f


def complex_to_doc(K):
    doc = {
        "p_max": K.p_max,
        "q_max": K.q_max,
        "dims": [[int(K.dims[p, q]) for q in range(K.q_max + 1)]
                 for p in range(K.p_max + 1)],
    }
    for key, accessor, limit in (("d_horiz", K.dh, (K.p_max, K.q_max + 1)),
                                 ("d_vert", K.dv, (K.p_max + 1, K.q_max))):
        entries = []
        for p in range(limit[0]):
            for q in range(limit[1]):
                m = accessor(p, q)
                if m.size == 0 or linalg.is_zero(m):
                    continue
                entries.append({
                    "p": p,
                    "q": q,
                    "m": [[fraction_to_str(m[i, j]) for j in range(m.shape[1])]
                          for i in range(m.shape[0])],
                })
        doc[key] = entries
    return doc


def complex_to_json(K):
    return json.dumps(complex_to_doc(K), indent=2) + "\n"


def _require(cond, msg):
    if not cond:
        raise ParseError(msg)


def _int_field(doc, key, minimum=0):
    v = doc.get(key)
    _require(isinstance(v, int) and not isinstance(v, bool) and v >= minimum,
             f"{key!r} must be an integer >= {minimum}")
    return v


def doc_to_complex(doc):
    _require(isinstance(doc, dict), "complex document must be a JSON object")
    p_max = _int_field(doc, "p_max")
    q_max = _int_field(doc, "q_max")
    dims = doc.get("dims")
    _require(isinstance(dims, list) and len(dims) == p_max + 1,
             f"'dims' must be a list of {p_max + 1} columns")
    for col in dims:
        _require(isinstance(col, list) and len(col) == q_max + 1
                 and all(isinstance(x, int) and not isinstance(x, bool)
                         and x >= 0 for x in col),
                 "'dims' entries must be non-negative integers, dims[p][q]")
    grid = np.array(dims, dtype=np.int64)

    def parse_maps(key, horiz):
        maps = {}
        raw = doc.get(key, [])
        _require(isinstance(raw, list), f"{key!r} must be a list")
        for item in raw:
            _require(isinstance(item, dict) and {"p", "q", "m"} <= set(item),
                     f"each {key} entry needs keys p, q, m")
            p = item["p"]
            q = item["q"]
            _require(isinstance(p, int) and isinstance(q, int),
                     f"{key} indices must be integers")
            tgt = (p + 1, q) if horiz else (p, q + 1)
            _require(0 <= p <= p_max and 0 <= q <= q_max
                     and tgt[0] <= p_max and tgt[1] <= q_max,
                     f"{key} map at ({p},{q}) leaves the grid")
            _require((p, q) not in maps, f"duplicate {key} map at ({p},{q})")
            _require(grid[p, q] > 0 and grid[tgt] > 0,
                     f"{key} map at ({p},{q}) touches a zero-dimensional spot "
                     "and must be omitted")
            m = item["m"]
            _require(isinstance(m, list) and m and all(
                isinstance(row, list) and len(row) == len(m[0]) and row
                for row in m), f"{key} matrix at ({p},{q}) must be a "
                "non-empty rectangular array")
            entries = [[str_to_fraction(x) for x in row] for row in m]
            maps[(p, q)] = linalg.from_rows(len(m), len(m[0]), entries)
        return maps

    return DoubleComplex(p_max, q_max, grid,
                         parse_maps("d_horiz", True),
                         parse_maps("d_vert", False))


def json_to_complex(text):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}")
    return doc_to_complex(doc)


def multiset_to_doc(multiset, grid):
    p_max, q_max = grid
    return {
        "grid": {"p_max": p_max, "q_max": q_max},
        "zigzags": [{"dots": [[p, q] for p, q in shape.dots], "mult": mult}
                    for shape, mult in sorted(multiset.items()) if mult > 0],
    }


def multiset_to_json(multiset, grid):
    return json.dumps(multiset_to_doc(multiset, grid), indent=2) + "\n"


def doc_to_multiset(doc):
    """Returns ``(multiset, (p_max, q_max))``; dots are canonicalized."""
    _require(isinstance(doc, dict), "multiset document must be a JSON object")
    g = doc.get("grid")
    _require(isinstance(g, dict), "'grid' must be an object")
    p_max = _int_field(g, "p_max")
    q_max = _int_field(g, "q_max")
    raw = doc.get("zigzags", [])
    _require(isinstance(raw, list), "'zigzags' must be a list")
    out = Counter()
    for item in raw:
        _require(isinstance(item, dict) and {"dots", "mult"} <= set(item),
                 "each zigzag entry needs keys dots, mult")
        dots = item["dots"]
        _require(isinstance(dots, list) and all(
            isinstance(d, list) and len(d) == 2
            and all(isinstance(x, int) for x in d) for d in dots),
            "'dots' must be a list of [p, q] pairs")
        mult = item["mult"]
        _require(isinstance(mult, int) and mult >= 0,
                 "'mult' must be a non-negative integer")
        shape = canonicalize_shape([tuple(d) for d in dots])
        out[shape] += mult
    return out, (p_max, q_max)


def json_to_multiset(text):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}")
    return doc_to_multiset(doc)


_DOT_LIST = re.compile(r"\s*\(\s*(\d+)\s*,\s*(\d+)\s*\)\s*")


def parse_dot_list(text):
    """Parse the textual shape encoding ``(p,q),(p,q),...``."""
    dots = []
    pos = 0
    while pos < len(text):
        m = _DOT_LIST.match(text, pos)
        if not m:
            raise ParseError(f"bad dot list near {text[pos:pos + 12]!r}")
        dots.append((int(m.group(1)), int(m.group(2))))
        pos = m.end()
        if pos < len(text):
            if text[pos] != ",":
                raise ParseError(f"expected ',' near {text[pos:pos + 12]!r}")
            pos += 1
    if not dots:
        raise ParseError("empty dot list")
    return dots

"""Map file schema (JSON) and CSV/SVG emitters for scalar clouds and ranges.

A map file looks like::

    {"field": "real", "k": 1,
     "factors": [{"dim": 2, "p": 2}], "codomain": {"dim": 2, "p": 2},
     "coefficients": [2.0, 0.0, 0.0, 1.0]}

Coefficients are flat in row-major order over [j, i_1, ..., i_k]; complex
entries are [re, im] pairs; p is a number or the string "inf".  Floats are
serialized with round-trip precision, so save followed by load is the
identity.
"""

from __future__ import annotations

import json
import math

import numpy as np

from .spaces import FieldTag, SpaceSpec
from .multilinear import MultilinearMap

__all__ = ["MapFileError", "load_map", "save_map", "map_to_dict",
           "map_from_dict", "emit_plot"]


class MapFileError(ValueError):
    """Schema violation in a map file, with the offending field path."""


def _fail(path, msg):
    raise MapFileError(f"{path}: {msg}")


def _parse_p(value, path):
    if value == "inf":
        return math.inf
    if isinstance(value, (int, float)) and not isinstance(value, bool):
        if value >= 1:
            return float(value)
        _fail(path, f"p must be >= 1 or \"inf\", got {value}")
    _fail(path, f"p must be a number or \"inf\", got {value!r}")


def _parse_space(obj, path, tag):
    if not isinstance(obj, dict):
        _fail(path, f"expected an object with dim and p, got {type(obj).__name__}")
    if "dim" not in obj:
        _fail(path + ".dim", "missing")
    dim = obj["dim"]
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 1:
        _fail(path + ".dim", f"must be a positive integer, got {dim!r}")
    if "p" not in obj:
        _fail(path + ".p", "missing")
    return SpaceSpec(dim, _parse_p(obj["p"], path + ".p"), tag)


def _parse_scalar(entry, complex_field, path):
    if complex_field:
        if (not isinstance(entry, list) or len(entry) != 2
                or not all(isinstance(v, (int, float)) and not isinstance(v, bool)
                           for v in entry)):
            _fail(path, f"complex entry must be an [re, im] pair, got {entry!r}")
        return complex(entry[0], entry[1])
    if not isinstance(entry, (int, float)) or isinstance(entry, bool):
        _fail(path, f"real entry must be a number, got {entry!r}")
    return float(entry)


def map_from_dict(doc, source="map file") -> MultilinearMap:
    if not isinstance(doc, dict):
        _fail(source, "top level must be a JSON object")
    fld = doc.get("field")
    if fld not in ("real", "complex"):
        _fail("field", f"must be \"real\" or \"complex\", got {fld!r}")
    tag = FieldTag.COMPLEX if fld == "complex" else FieldTag.REAL
    k = doc.get("k")
    if not isinstance(k, int) or isinstance(k, bool) or k < 1:
        _fail("k", f"must be a positive integer, got {k!r}")
    factors_doc = doc.get("factors")
    if not isinstance(factors_doc, list) or len(factors_doc) != k:
        got = len(factors_doc) if isinstance(factors_doc, list) else factors_doc
        _fail("factors", f"expected a list of {k} spaces, got {got!r}")
    factors = tuple(_parse_space(f, f"factors[{i}]", tag)
                    for i, f in enumerate(factors_doc))
    codomain = _parse_space(doc.get("codomain"), "codomain", tag)
    coeffs_doc = doc.get("coefficients")
    expected = codomain.dim
    for s in factors:
        expected *= s.dim
    if not isinstance(coeffs_doc, list):
        _fail("coefficients", "must be a flat list")
    if len(coeffs_doc) != expected:
        _fail("coefficients",
              f"expected {expected} entries "
              f"(codomain.dim * product of factor dims), got {len(coeffs_doc)}")
    flat = [_parse_scalar(e, tag is FieldTag.COMPLEX, f"coefficients[{i}]")
            for i, e in enumerate(coeffs_doc)]
    shape = (codomain.dim,) + tuple(s.dim for s in factors)
    coeffs = np.array(flat, dtype=tag.dtype).reshape(shape)
    return MultilinearMap(factors, codomain, coeffs)


def load_map(path) -> MultilinearMap:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise MapFileError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise MapFileError(f"{path}: invalid JSON at line {exc.lineno}, "
                           f"column {exc.colno}: {exc.msg}") from exc
    return map_from_dict(doc, source=str(path))


def _emit_p(p: float):
    return "inf" if p == math.inf else (int(p) if float(p).is_integer() else p)


def map_to_dict(T: MultilinearMap) -> dict:
    complex_field = T.field is FieldTag.COMPLEX
    flat = T.coeffs.reshape(-1)
    if complex_field:
        coeffs = [[float(v.real), float(v.imag)] for v in flat]
    else:
        coeffs = [float(v) for v in flat]
    return {
        "field": "complex" if complex_field else "real",
        "k": T.k,
        "factors": [{"dim": s.dim, "p": _emit_p(s.p)} for s in T.factors],
        "codomain": {"dim": T.codomain.dim, "p": _emit_p(T.codomain.p)},
        "coefficients": coeffs,
    }


def save_map(T: MultilinearMap, path):
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(map_to_dict(T), fh, indent=1)
        fh.write("\n")


# ---------------------------------------------------------------------------
# plotting


def _omega_rows(samples):
    return [(float(np.real(s.value)), float(np.imag(s.value)),
             float(s.attain_residual), int(s.witness_id)) for s in samples]


def _range_rows(region):
    return [(float(t), float(g), float(z.real), float(z.imag))
            for t, g, z in zip(region.angles, region.support_values,
                               region.boundary_points)]


def _svg_scatter(points, path, polyline=False):
    xs = [p[0] for p in points] + [0.0]
    ys = [p[1] for p in points] + [0.0]
    lo = min(min(xs), min(ys))
    hi = max(max(xs), max(ys))
    span = max(hi - lo, 1e-9)
    pad = 0.1 * span
    lo, span = lo - pad, span + 2 * pad
    size = 420.0

    def sx(x):
        return (x - lo) / span * size

    def sy(y):
        return size - (y - lo) / span * size

    parts = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{size:.0f}" '
             f'height="{size:.0f}" viewBox="0 0 {size:.0f} {size:.0f}">']
    parts.append(f'<line x1="{sx(0):.2f}" y1="{sy(0)-8:.2f}" x2="{sx(0):.2f}" '
                 f'y2="{sy(0)+8:.2f}" stroke="red" stroke-width="1.5"/>')
    parts.append(f'<line x1="{sx(0)-8:.2f}" y1="{sy(0):.2f}" x2="{sx(0)+8:.2f}" '
                 f'y2="{sy(0):.2f}" stroke="red" stroke-width="1.5"/>')
    if polyline and len(points) > 1:
        coords = " ".join(f"{sx(x):.2f},{sy(y):.2f}" for x, y in points)
        closing = f" {sx(points[0][0]):.2f},{sy(points[0][1]):.2f}"
        parts.append(f'<polyline points="{coords}{closing}" fill="none" '
                     f'stroke="steelblue" stroke-width="1.2"/>')
    for x, y in points:
        parts.append(f'<circle cx="{sx(x):.2f}" cy="{sy(y):.2f}" r="2.4" '
                     f'fill="steelblue"/>')
    parts.append("</svg>")
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("\n".join(parts) + "\n")


def emit_plot(data, path, format: str = "csv"):
    """Write a scalar cloud (list of samples) or a range region to disk.

    CSV columns: re, im, attain_residual, witness_id for clouds;
    theta, support_value, boundary_re, boundary_im for ranges.
    """
    from .orthogonality import RangeRegion

    if format not in ("csv", "svg"):
        raise ValueError(f"format must be csv or svg, got {format!r}")
    if isinstance(data, RangeRegion):
        rows = _range_rows(data)
        header = "theta,support_value,boundary_re,boundary_im"
        points = [(r[2], r[3]) for r in rows]
        polyline = True
    else:
        data = list(data)
        rows = _omega_rows(data)
        header = "re,im,attain_residual,witness_id"
        points = [(r[0], r[1]) for r in rows]
        polyline = False
    if not rows:
        raise ValueError("no data to plot")
    if format == "csv":
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(header + "\n")
            for row in rows:
                fh.write(",".join(repr(v) if isinstance(v, float) else str(v)
                                  for v in row) + "\n")
    else:
        _svg_scatter(points, path, polyline=polyline)

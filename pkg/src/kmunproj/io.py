"""JSON job descriptions: parsing against a declared context, with error locations."""

from __future__ import annotations

import json
import re
from pathlib import Path

from .linalg import PolyMatrix, ShapeError, SkewMatrix
from .ring import ParseError, VarContext, to_string
from .unproj import CiData, JerryData, TomData, jerry_data_from_matrix, tom_data_from_matrix


class InputError(ValueError):
    def __init__(self, where, msg):
        self.where = where
        super().__init__(f"{where}: {msg}" if where else msg)


def load(source):
    """Read a job from a path or an inline JSON string."""
    text = source
    where = "<inline>"
    if not source.lstrip().startswith("{"):
        try:
            text = Path(source).read_text()
        except OSError as exc:
            raise InputError(source, f"cannot read input ({exc.strerror})") from None
        where = source
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(where, f"invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    if not isinstance(data, dict):
        raise InputError(where, "top-level JSON value must be an object")
    return data


def require(data, key, where=""):
    if key not in data:
        raise InputError(where, f"missing required field {key!r}")
    return data[key]


def context(data, order=None):
    names = require(data, "vars")
    if not isinstance(names, list):
        raise InputError("vars", "must be a list of variable names")
    try:
        return VarContext(tuple(names), order or data.get("order", "grevlex"))
    except ValueError as exc:
        raise InputError("vars", str(exc)) from None


def poly(ctx, value, where):
    if isinstance(value, bool) or not isinstance(value, (str, int)):
        raise InputError(where, "expected an expression string or integer")
    try:
        return ctx.poly(value)
    except ParseError as exc:
        raise InputError(where, str(exc)) from None
    except ValueError as exc:
        raise InputError(where, str(exc)) from None


def poly_list(ctx, values, where):
    if not isinstance(values, list):
        raise InputError(where, "expected a list of expressions")
    return [poly(ctx, v, f"{where}[{i}]") for i, v in enumerate(values)]


def matrix(ctx, data, where="matrix"):
    if isinstance(data, list):
        data = {"rows": len(data), "cols": len(data[0]) if data else 0, "entries": data}
    if not isinstance(data, dict):
        raise InputError(where, "expected a matrix object")
    rows = require(data, "rows", where)
    cols = require(data, "cols", where)
    entries = require(data, "entries", where)
    if not isinstance(entries, list) or len(entries) != rows:
        raise InputError(f"{where}.entries", f"expected {rows} rows")
    flat = []
    for i, r in enumerate(entries):
        if not isinstance(r, list) or len(r) != cols:
            raise InputError(f"{where}.entries[{i}]", f"expected {cols} entries")
        flat += [poly(ctx, e, f"{where}.entries[{i}][{j}]") for j, e in enumerate(r)]
    return PolyMatrix(ctx, rows, cols, flat)


def skew(ctx, data, where="matrix"):
    m = matrix(ctx, data, where)
    try:
        return SkewMatrix.from_matrix(m)
    except ValueError as exc:
        raise InputError(where, str(exc)) from None


_TOM_KEY = re.compile(r"a([2-5])([2-5])_([1-4])\Z")
_JERRY_KEY = re.compile(r"([ab])([1-3])_([1-4])\Z|c_([1-4])\Z")


def tom_data(ctx, data):
    if "matrix" in data:
        A = skew(ctx, data["matrix"])
        try:
            return tom_data_from_matrix(A, require(data, "z"))
        except (ValueError, KeyError) as exc:
            raise InputError("matrix", str(exc)) from None
    x = poly_list(ctx, require(data, "x"), "x")
    z = poly_list(ctx, require(data, "z"), "z")
    coeffs = {}
    for key, val in data.get("coeffs", {}).items():
        m = _TOM_KEY.match(key)
        if not m:
            raise InputError(f"coeffs.{key}", "expected a key like 'a24_1' (i<j in 2..5, k in 1..4)")
        i, j, k = map(int, m.groups())
        coeffs[(i, j, k)] = poly(ctx, val, f"coeffs.{key}")
    try:
        return TomData(ctx, x, z, coeffs)
    except ValueError as exc:
        raise InputError("coeffs", str(exc)) from None


def jerry_data(ctx, data):
    if "matrix" in data:
        A = skew(ctx, data["matrix"])
        try:
            return jerry_data_from_matrix(A, require(data, "z"))
        except (ValueError, KeyError) as exc:
            raise InputError("matrix", str(exc)) from None
    x = poly_list(ctx, require(data, "x"), "x")
    z = poly_list(ctx, require(data, "z"), "z")
    a, b, c = {}, {}, {}
    for key, val in data.get("coeffs", {}).items():
        m = _JERRY_KEY.match(key)
        if not m:
            raise InputError(f"coeffs.{key}", "expected a key like 'a1_2', 'b3_4' or 'c_1'")
        p = poly(ctx, val, f"coeffs.{key}")
        if m.group(4):
            c[int(m.group(4))] = p
        else:
            (a if m.group(1) == "a" else b)[(int(m.group(2)), int(m.group(3)))] = p
    try:
        return JerryData(ctx, x, z, a, b, c)
    except ValueError as exc:
        raise InputError("x/z", str(exc)) from None


def ci_data(ctx, data):
    Q = matrix(ctx, require(data, "Q"), "Q")
    w = poly_list(ctx, require(data, "w"), "w")
    try:
        d = CiData.from_matrix(Q, w)
    except ShapeError as exc:
        raise InputError("Q", str(exc)) from None
    if "v" in data:
        v = poly_list(ctx, data["v"], "v")
        try:
            d = CiData(ctx, tuple(v), tuple(w), Q)
        except ValueError as exc:
            raise InputError("v", str(exc)) from None
    return d


def unprojection_data(ctx, data, kind):
    if kind == "tom":
        return tom_data(ctx, data)
    if kind == "jerry":
        return jerry_data(ctx, data)
    if kind == "ci":
        return ci_data(ctx, data)
    raise InputError("kind", f"unknown kind {kind!r} (tom, jerry, ci)")


def dump_polys(ps):
    return [to_string(p) for p in ps]

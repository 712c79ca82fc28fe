"""JSON descriptors: parsing with field-level diagnostics, serialization.

Rationals serialize as canonical "p/q" strings (integral values
included, e.g. "1/1"). Complex values extend that to "p/q+r/si"; a
value with a sqrt component prints as "(a)+(b)*sqrt(q)". AlgNum
serializes as {"a": [re, im], "b": [re, im]}, RatFunc as {"num": [...],
"den": [...]} with ascending-degree AlgNum coefficient arrays.

Parse errors raise DescriptorError whose message names the offending
field; the CLI maps that to the input-error exit code.
"""

from __future__ import annotations

import json
from typing import Any

from .localfields import FieldPair
from .ratfunc import RatFunc
from .rational import parse_rat, rat_str
from .scalars import AlgNum, GaussRat
from .segments import GenericRep, MultChar, Segment
from .series import Poly, Series


class DescriptorError(ValueError):
    """Malformed descriptor; the message names the offending field."""


def _fail(path: str, message: str):
    raise DescriptorError("%s: %s" % (path, message))


def _get(obj: dict, key: str, path: str):
    if not isinstance(obj, dict):
        _fail(path, "expected a JSON object")
    if key not in obj:
        _fail("%s.%s" % (path, key), "missing")
    return obj[key]


def parse_gauss(v: Any, path: str) -> GaussRat:
    if not (isinstance(v, list) and len(v) == 2):
        _fail(path, 'expected ["p/q", "p/q"]')
    parts = []
    for k, s in enumerate(v):
        if not isinstance(s, str):
            _fail("%s[%d]" % (path, k), "expected a rational string")
        try:
            parts.append(parse_rat(s))
        except ValueError as exc:
            _fail("%s[%d]" % (path, k), str(exc))
    return GaussRat(parts[0], parts[1])


def gauss_json(g: GaussRat) -> list[str]:
    return [rat_str(g.re), rat_str(g.im)]


def parse_field(d: Any, path: str = "field") -> FieldPair:
    q_F = _get(d, "qF", path)
    ramified = _get(d, "ramified", path)
    if not isinstance(q_F, int) or isinstance(q_F, bool):
        _fail(path + ".qF", "expected an integer")
    if not isinstance(ramified, bool):
        _fail(path + ".ramified", "expected a boolean")
    ext = d.get("extConductor")
    if ext is not None and (not isinstance(ext, int) or isinstance(ext, bool)):
        _fail(path + ".extConductor", "expected an integer or null")
    try:
        return FieldPair(q_F, ramified, ext)
    except ValueError as exc:
        _fail(path, str(exc))


def field_json(fp: FieldPair) -> dict:
    return {"qF": fp.q_F, "ramified": fp.ramified, "extConductor": fp.ext_conductor}


def parse_rho(d: Any, path: str) -> MultChar:
    label = _get(d, "unitLabel", path)
    cond = _get(d, "unitConductor", path)
    if not isinstance(label, str):
        _fail(path + ".unitLabel", "expected a string")
    if not isinstance(cond, int) or isinstance(cond, bool):
        _fail(path + ".unitConductor", "expected an integer")
    at = parse_gauss(_get(d, "atUnif", path), path + ".atUnif")
    sig_label = d.get("sigmaUnitLabel", label if cond == 0 else None)
    if sig_label is None:
        _fail(path + ".sigmaUnitLabel", "missing (required for ramified characters)")
    if not isinstance(sig_label, str):
        _fail(path + ".sigmaUnitLabel", "expected a string")
    if "sigmaAtUnif" in d:
        sig_at = parse_gauss(d["sigmaAtUnif"], path + ".sigmaAtUnif")
    elif cond == 0:
        sig_at = at
    else:
        _fail(path + ".sigmaAtUnif", "missing (required for ramified characters)")
    try:
        return MultChar(label, cond, at, sig_label, sig_at)
    except ValueError as exc:
        _fail(path, str(exc))


def rho_json(rho: MultChar) -> dict:
    return {
        "unitLabel": rho.unit_label,
        "unitConductor": rho.unit_conductor,
        "atUnif": gauss_json(rho.at_unif),
        "sigmaUnitLabel": rho.sigma_unit_label,
        "sigmaAtUnif": gauss_json(rho.sigma_at_unif),
    }


def parse_rep(d: Any, path: str = "rep") -> tuple[FieldPair, list[Segment]]:
    """Parse a representation descriptor WITHOUT the genericity check,
    so callers can report non-generic input instead of erroring."""
    fp = parse_field(_get(d, "field", path), path + ".field")
    raw = _get(d, "segments", path)
    if not isinstance(raw, list):
        _fail(path + ".segments", "expected a list")
    if not raw:
        _fail(path + ".segments", "at least one segment is required (n >= 1)")
    segments = []
    for i, seg in enumerate(raw):
        spath = "%s.segments[%d]" % (path, i)
        k = _get(seg, "k", spath)
        if not isinstance(k, int) or isinstance(k, bool) or k < 1:
            _fail(spath + ".k", "expected a positive integer")
        rho = parse_rho(_get(seg, "rho", spath), spath + ".rho")
        segments.append(Segment(rho, k))
    return fp, segments


def segment_json(seg: Segment) -> dict:
    return {"k": seg.k, "rho": rho_json(seg.rho)}


def rep_json(rep: GenericRep) -> dict:
    return {
        "field": field_json(rep.fp),
        "segments": [segment_json(s) for s in rep.segments],
    }


def load_rep_file(path: str) -> tuple[FieldPair, list[Segment]]:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise DescriptorError("cannot read %s: %s" % (path, exc)) from None
    except json.JSONDecodeError as exc:
        raise DescriptorError("%s: invalid JSON (%s)" % (path, exc)) from None
    return parse_rep(data)


def algnum_json(x: AlgNum) -> dict:
    return {"a": gauss_json(x.a), "b": gauss_json(x.b)}


def poly_json(p: Poly) -> list[dict]:
    return [algnum_json(c) for c in p.coeffs]


def ratfunc_json(rf: RatFunc) -> dict:
    return {"num": poly_json(rf.num), "den": poly_json(rf.den)}


def series_json(s: Series) -> list[dict]:
    return [algnum_json(c) for c in s.coeffs]


def value_str(x: AlgNum | None) -> str:
    """Edge-value string: "pole" for a pole, canonical "p/q" for plain
    rationals, the extended scalar form otherwise."""
    if x is None:
        return "pole"
    if x.is_rational_real():
        return rat_str(x.a.re)
    return str(x)

"""JSON instance/result formats and the CSV/geometry tables.

Instance file::

    {"n": 2, "degree": 1,
     "coefficients": [ [[[re, im], [re, im]], [[re, im], [re, im]]],   # A_0
                       ... ],                                         # up to A_m
     "claims": [ {"label": "...", "region": {...}} ]}                 # optional

Complex numbers are always ``[re, im]`` pairs.  Floats are written with 17
significant digits so every binary64 value round-trips exactly.
"""

from __future__ import annotations

import csv
import hashlib
import io
import json
import math
from dataclasses import dataclass
from typing import Any, Sequence

import numpy as np

from .bounds import Annulus, BoundResult, Disk, ExclusionDisk, Region, TightnessRow
from .errors import InstanceFormatError, InvalidPolynomial
from .matpoly import MatrixPolynomial


# --------------------------------------------------------------------------
# deterministic JSON emitter


def format_float(x: float) -> str:
    x = float(x)
    if not math.isfinite(x):
        raise ValueError(f"cannot serialize non-finite value {x}")
    return f"{x:.17g}"


def _is_flat(seq) -> bool:
    return all(not isinstance(v, (list, tuple, dict)) for v in seq)


def _emit(obj: Any, indent: int, level: int) -> str:
    pad = " " * (indent * (level + 1))
    end = " " * (indent * level)
    if obj is None:
        return "null"
    if isinstance(obj, bool):
        return "true" if obj else "false"
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        return format_float(obj)
    if isinstance(obj, str):
        return json.dumps(obj, ensure_ascii=False)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{pad}{json.dumps(str(k))}: {_emit(v, indent, level + 1)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + end + "}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        if _is_flat(obj) or all(isinstance(v, (list, tuple)) and _is_flat(v) for v in obj):
            return "[" + ", ".join(_emit(v, indent, level + 1) for v in obj) + "]"
        items = [pad + _emit(v, indent, level + 1) for v in obj]
        return "[\n" + ",\n".join(items) + "\n" + end + "]"
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def dumps(obj: Any, indent: int = 2) -> str:
    return _emit(obj, indent, 0) + "\n"


# --------------------------------------------------------------------------
# instances


def complex_pair(z: complex) -> list[float]:
    z = complex(z)
    return [z.real, z.imag]


def matrix_to_json(a: np.ndarray) -> list:
    return [[complex_pair(v) for v in row] for row in np.asarray(a)]


def instance_to_dict(p: MatrixPolynomial) -> dict:
    return {
        "n": p.n,
        "degree": p.degree,
        "coefficients": [matrix_to_json(c) for c in p.coefficients],
    }


def serialize_instance(p: MatrixPolynomial, claims: Sequence["Claim"] = ()) -> str:
    doc = instance_to_dict(p)
    if claims:
        doc["claims"] = [{"label": c.label, "region": region_to_dict(c.region)} for c in claims]
    return dumps(doc)


def instance_digest(p: MatrixPolynomial) -> str:
    return "sha256:" + hashlib.sha256(dumps(instance_to_dict(p)).encode("utf-8")).hexdigest()


def _reject_constant(token: str):
    raise InstanceFormatError(f"non-finite number {token!r} is not allowed")


def _number(value, where: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise InstanceFormatError(f"{where}: expected a number, got {json.dumps(value)[:40]}")
    x = float(value)
    if not math.isfinite(x):
        raise InstanceFormatError(f"{where}: non-finite number")
    return x


def _pair(value, where: str) -> complex:
    if not isinstance(value, list) or len(value) != 2:
        raise InstanceFormatError(f"{where}: expected an [re, im] pair")
    return complex(_number(value[0], where + "[0]"), _number(value[1], where + "[1]"))


def _integer(doc: dict, key: str) -> int:
    if key not in doc:
        raise InstanceFormatError(f"missing field {key!r}")
    v = doc[key]
    if isinstance(v, bool) or not isinstance(v, int) or v < 0:
        raise InstanceFormatError(f"field {key!r}: expected a nonnegative integer")
    return v


@dataclass(frozen=True)
class Claim:
    """A user-asserted region that ``verify`` checks against the spectrum."""

    label: str
    region: Region


def loads_json(text: str, source: str = "<input>") -> Any:
    try:
        return json.loads(text, parse_constant=_reject_constant)
    except json.JSONDecodeError as exc:
        raise InstanceFormatError(
            f"{source}: invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}"
        ) from exc


def parse_instance(text: str, source: str = "<input>") -> tuple[MatrixPolynomial, list[Claim]]:
    doc = loads_json(text, source)
    if not isinstance(doc, dict):
        raise InstanceFormatError(f"{source}: top-level value must be an object")
    try:
        n = _integer(doc, "n")
        degree = _integer(doc, "degree")
        coeffs = doc.get("coefficients")
        if not isinstance(coeffs, list):
            raise InstanceFormatError("missing or non-list field 'coefficients'")
        if n < 1:
            raise InstanceFormatError("field 'n' must be at least 1")
        if len(coeffs) != degree + 1:
            raise InstanceFormatError(
                f"coefficients: expected degree+1 = {degree + 1} matrices, got {len(coeffs)}"
            )
        mats = []
        for j, mat in enumerate(coeffs):
            where = f"coefficients[{j}]"
            if not isinstance(mat, list) or len(mat) != n:
                raise InstanceFormatError(f"{where}: expected {n} rows")
            rows = []
            for i, row in enumerate(mat):
                if not isinstance(row, list) or len(row) != n:
                    raise InstanceFormatError(f"{where}[{i}]: expected row length {n}")
                rows.append([_pair(v, f"{where}[{i}][{c}]") for c, v in enumerate(row)])
            mats.append(np.array(rows, dtype=np.complex128))
        claims = [_parse_claim(c, f"claims[{i}]") for i, c in enumerate(doc.get("claims", []))]
        return MatrixPolynomial(mats), claims
    except InvalidPolynomial as exc:
        raise InstanceFormatError(f"{source}: {exc}") from exc
    except InstanceFormatError as exc:
        raise InstanceFormatError(f"{source}: {exc}") from exc


def _parse_claim(doc, where: str) -> Claim:
    if not isinstance(doc, dict) or "region" not in doc:
        raise InstanceFormatError(f"{where}: expected an object with a 'region'")
    return Claim(str(doc.get("label", where)), region_from_dict(doc["region"], where + ".region"))


# --------------------------------------------------------------------------
# regions and results


def region_to_dict(region: Region) -> dict:
    if isinstance(region, Annulus):
        return {"variant": "annulus", "center": [0.0, 0.0],
                "r_inner": region.r_inner, "r_outer": region.r_outer}
    return {"variant": region.kind, "center": complex_pair(region.center),
            "radius": region.radius}


def region_from_dict(doc, where: str = "region") -> Region:
    if not isinstance(doc, dict):
        raise InstanceFormatError(f"{where}: expected an object")
    variant = doc.get("variant")
    try:
        if variant == "annulus":
            return Annulus(_number(doc.get("r_inner"), where + ".r_inner"),
                           _number(doc.get("r_outer"), where + ".r_outer"))
        if variant in ("disk", "exclusion_disk"):
            center = _pair(doc.get("center"), where + ".center")
            radius = _number(doc.get("radius"), where + ".radius")
            if radius < 0:
                raise InstanceFormatError(f"{where}.radius: must be nonnegative")
            cls = Disk if variant == "disk" else ExclusionDisk
            return cls(center, radius)
    except ValueError as exc:
        if isinstance(exc, InstanceFormatError):
            raise
        raise InstanceFormatError(f"{where}: {exc}") from exc
    raise InstanceFormatError(f"{where}.variant: expected disk, annulus or exclusion_disk")


def witness_to_dict(result: BoundResult) -> dict:
    w = result.witness
    return {
        "t": w.t, "k": w.k, "alpha": w.alpha,
        "C": None if w.C is None else matrix_to_json(w.C),
        "norm": None if w.norm is None else w.norm.value,
    }


def bound_record(result: BoundResult, slack: float | None = None,
                 verdict: str | None = None, with_verdict: bool = False) -> dict:
    rec = {
        "theorem_id": result.theorem_id.value,
        "hypothesis_ok": result.hypothesis_ok,
        "witness": witness_to_dict(result),
        "region": None if result.region is None else region_to_dict(result.region),
        "diagnostics": list(result.diagnostics),
    }
    if with_verdict:
        rec["slack"] = slack
        rec["verdict"] = verdict
    return rec


def spectrum_record(spectrum) -> dict:
    return {
        "eigenvalues": [complex_pair(z) for z in spectrum.eigenvalues],
        "residuals": [r if math.isfinite(r) else None for r in spectrum.residuals],
        "max_residual": spectrum.max_residual if math.isfinite(spectrum.max_residual) else None,
    }


def region_radii(region: Region) -> tuple[float | None, float | None]:
    if isinstance(region, Annulus):
        return region.r_inner, region.r_outer
    if isinstance(region, ExclusionDisk):
        return region.radius, None
    return None, region.radius


def _csv_text(header: Sequence[str], rows: Sequence[Sequence]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow(["" if v is None else (format_float(v) if isinstance(v, float) else v)
                         for v in row])
    return buf.getvalue()


def bounds_csv(results: Sequence[BoundResult]) -> str:
    rows = []
    for r in results:
        if r.region is None:
            rows.append([r.theorem_id.value, "false", None, None, None, None])
            continue
        inner, outer = region_radii(r.region)
        c = complex(r.region.center)
        rows.append([r.theorem_id.value, "true", c.real, c.imag, inner, outer])
    return _csv_text(["theorem_id", "hypothesis_ok", "center_re", "center_im",
                      "radius_inner", "radius_outer"], rows)


def geometry_csv(rows: Sequence[TightnessRow]) -> str:
    out = []
    for row in rows:
        inner, outer = region_radii(row.region)
        c = complex(row.region.center)
        tid = getattr(row.theorem_id, "value", row.theorem_id)
        out.append([tid, row.region.kind, c.real, c.imag, inner, outer])
    return _csv_text(["theorem_id", "variant", "center_re", "center_im",
                      "radius_inner", "radius_outer"], out)


def tightness_csv(rows: Sequence[TightnessRow]) -> str:
    out = [[getattr(r.theorem_id, "value", r.theorem_id), r.region.kind, r.slack, r.inner_margin]
           for r in rows]
    return _csv_text(["theorem_id", "variant", "slack", "inner_margin"], out)


def tightness_table(rows: Sequence[TightnessRow]) -> str:
    header = ("theorem", "region", "slack", "inner_margin")
    body = [(str(getattr(r.theorem_id, "value", r.theorem_id)), r.region.kind,
             f"{r.slack:.6e}", "" if r.inner_margin is None else f"{r.inner_margin:.6e}")
            for r in rows]
    widths = [max(len(h), *(len(b[i]) for b in body)) if body else len(h)
              for i, h in enumerate(header)]
    lines = ["  ".join(h.ljust(w) for h, w in zip(header, widths))]
    lines.append("  ".join("-" * w for w in widths))
    lines.extend("  ".join(c.ljust(w) for c, w in zip(b, widths)) for b in body)
    return "\n".join(lines) + "\n"

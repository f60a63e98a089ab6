"""Instance files and curve CSV."""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass, astuple
from fractions import Fraction
from typing import Iterable, TextIO

from ._numeric import as_scalar
from .bounds import poa_formula, segment_of, spoa_formula, spoa_simple
from .model import Instance, Job

CURVE_HEADER = ("s", "poa", "spoa", "spoa_simple", "segment")


class InstanceFormatError(ValueError):
    pass


def _scalar_field(value, where):
    if isinstance(value, bool) or not isinstance(value, (Fraction, str)):
        raise InstanceFormatError(f"{where}: expected a number or 'p/q' string, got {value!r}")
    try:
        return as_scalar(value)
    except (ValueError, TypeError) as exc:
        raise InstanceFormatError(f"{where}: {exc}") from exc


def parse_instance(text: str) -> Instance:
    """Parse an instance document. Numbers are read exactly (``0.1`` is 1/10)."""
    try:
        doc = json.loads(text, parse_float=Fraction, parse_int=Fraction)
    except json.JSONDecodeError as exc:
        raise InstanceFormatError(f"invalid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise InstanceFormatError("top level must be an object")
    unknown = set(doc) - {"s", "jobs"}
    if unknown:
        raise InstanceFormatError(f"unknown fields: {sorted(unknown)}")
    if "s" not in doc or "jobs" not in doc:
        raise InstanceFormatError("fields 's' and 'jobs' are required")
    s = _scalar_field(doc["s"], "s")
    if s < 1:
        raise InstanceFormatError(f"s must be >= 1, got {s}")
    if not isinstance(doc["jobs"], list):
        raise InstanceFormatError("'jobs' must be a list")
    jobs = []
    for i, raw in enumerate(doc["jobs"]):
        where = f"jobs[{i}]"
        if not isinstance(raw, dict):
            raise InstanceFormatError(f"{where}: must be an object")
        if set(raw) != {"size", "favorite"}:
            raise InstanceFormatError(f"{where}: fields must be exactly 'size' and 'favorite'")
        size = _scalar_field(raw["size"], f"{where}.size")
        if size <= 0:
            raise InstanceFormatError(f"{where}.size must be positive")
        fav = raw["favorite"]
        if not isinstance(fav, Fraction) or fav not in (1, 2):
            raise InstanceFormatError(f"{where}.favorite must be 1 or 2")
        jobs.append(Job(size, int(fav)))
    return Instance(s, tuple(jobs))


def load_instance(path) -> Instance:
    with open(path, encoding="utf-8") as fh:
        return parse_instance(fh.read())


def _encode(value) -> str | float:
    if isinstance(value, Fraction):
        return str(value)
    return value


def dump_instance(inst: Instance) -> str:
    doc = {
        "s": _encode(inst.s),
        "jobs": [{"size": _encode(j.size), "favorite": int(j.favorite)} for j in inst.jobs],
    }
    return json.dumps(doc, indent=2)


@dataclass(frozen=True)
class CurveRow:
    s: float
    poa: float
    spoa: float
    spoa_simple: float
    segment: int


def curve_rows(s_min, s_max, step) -> list[CurveRow]:
    """Rows on ``s_min, s_min + step, ...`` up to ``s_max`` inclusive. The grid
    is built from exact decimal inputs, so the endpoint is never lost to
    rounding."""
    s_min, s_max, step = as_scalar(s_min), as_scalar(s_max), as_scalar(step)
    if not 1 <= s_min < s_max:
        raise ValueError("need 1 <= s_min < s_max")
    if step <= 0:
        raise ValueError("step must be positive")
    count = int((s_max - s_min) // step) + 1
    rows = []
    for i in range(count):
        s = s_min + i * step
        rows.append(CurveRow(float(s), float(poa_formula(s)), float(spoa_formula(s)),
                             float(spoa_simple(s)), segment_of(s)))
    return rows


def _fmt(v) -> str:
    return str(v) if isinstance(v, int) else f"{v:.12g}"


def write_curve_csv(rows: Iterable[CurveRow], fh: TextIO) -> None:
    writer = csv.writer(fh, lineterminator="\n")
    writer.writerow(CURVE_HEADER)
    for row in rows:
        writer.writerow([_fmt(v) for v in astuple(row)])


def read_curve_csv(fh: TextIO) -> list[CurveRow]:
    reader = csv.reader(fh)
    header = next(reader)
    if tuple(header) != CURVE_HEADER:
        raise ValueError(f"unexpected header {header}")
    return [CurveRow(float(r[0]), float(r[1]), float(r[2]), float(r[3]), int(r[4])) for r in reader]

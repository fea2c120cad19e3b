"""JSON documents for Hopf algebras.

Scalars are written as exact strings (``"-1/2"``, ``"2 mod 3"``,
``"z^2 + 1"``); sparse tensors as sorted index/scalar lists.  Parsing re-runs
the full axiom check, so a parsed document is always a verified Hopf algebra.
See docs/algebra_document.md for the schema.
"""
from __future__ import annotations

import json
from pathlib import Path

from .hopf import HopfAlgebra, is_grouplike, verify_hopf
from .scalars import FieldError, FieldSpec

FORMAT_VERSION = 1


class DocumentError(ValueError):
    pass


def _expected_to_json(expected) -> dict:
    if expected is None:
        return {}
    out = {}
    for key in ("exponent", "semisimple", "cosemisimple", "group_exponent"):
        v = getattr(expected, key, None) if not isinstance(expected, dict) else expected.get(key)
        if v is not None:
            out[key] = v
    return out


def emit(H: HopfAlgebra, expected=None, extra: dict | None = None) -> dict:
    """Canonical document for H (sorted sparse entries, zero scalars omitted)."""
    F = H.field
    fmt = F.format
    d = H.dim
    mult = [[i, j, k, fmt(c)] for (i, j), v in sorted(H.mult.items()) for k, c in sorted(v.items()) if c]
    comult = [[i, j, k, fmt(c)] for i in range(d) for (j, k), c in sorted(H.comult[i].items()) if c]
    antipode = sorted([i, j, fmt(c)] for j in range(d) for i, c in H.antipode[j].items() if c)
    meta: dict = {}
    if H.grouplikes:
        meta["grouplikes"] = [[[i, fmt(c)] for i, c in sorted(g.items())] for g in H.grouplikes]
    if H.flags:
        meta["flags"] = {k: bool(v) for k, v in sorted(H.flags.items())}
    exp = _expected_to_json(expected)
    if exp:
        meta["expected"] = exp
    if extra:
        meta.update(extra)
    return {
        "format_version": FORMAT_VERSION,
        "name": H.name,
        "field": F.to_dict(),
        "dimension": d,
        "labels": list(H.labels),
        "unit": [fmt(H.unit.get(i, F.zero)) for i in range(d)],
        "counit": [fmt(c) for c in H.counit],
        "mult": mult,
        "comult": comult,
        "antipode": antipode,
        "metadata": meta,
    }


def dumps(doc: dict) -> str:
    """Stable text form: one sparse entry per line."""
    lines = ["{"]
    keys = list(doc)
    for n, key in enumerate(keys):
        value = doc[key]
        comma = "," if n < len(keys) - 1 else ""
        if key in ("mult", "comult", "antipode") and value:
            lines.append(f"  {json.dumps(key)}: [")
            for m, entry in enumerate(value):
                lines.append(f"    {json.dumps(entry)}{',' if m < len(value) - 1 else ''}")
            lines.append(f"  ]{comma}")
        else:
            lines.append(f"  {json.dumps(key)}: {json.dumps(value, sort_keys=True)}{comma}")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _scalar(F: FieldSpec, text, where: str):
    if not isinstance(text, str):
        raise DocumentError(f"{where}: scalar must be a string, got {text!r}")
    try:
        return F.parse(text)
    except (FieldError, ValueError, ZeroDivisionError) as exc:
        raise DocumentError(f"{where}: malformed scalar {text!r} ({exc})") from None


def _index(x, d: int, where: str) -> int:
    if not isinstance(x, int) or isinstance(x, bool) or not 0 <= x < d:
        raise DocumentError(f"{where}: index {x!r} out of range for dimension {d}")
    return x


def parse(doc: dict, verify: bool = True) -> HopfAlgebra:
    """Document -> verified HopfAlgebra; raises DocumentError naming the problem."""
    if not isinstance(doc, dict):
        raise DocumentError("document must be a JSON object")
    version = doc.get("format_version")
    if version != FORMAT_VERSION:
        raise DocumentError(f"unsupported format_version {version!r} (supported: {FORMAT_VERSION})")
    for key in ("field", "dimension", "labels", "unit", "counit", "mult", "comult", "antipode"):
        if key not in doc:
            raise DocumentError(f"missing field {key!r}")
    try:
        F = FieldSpec.from_dict(doc["field"])
    except (FieldError, KeyError, TypeError) as exc:
        raise DocumentError(f"bad field spec: {exc}") from None
    d = doc["dimension"]
    if not isinstance(d, int) or d < 1:
        raise DocumentError("dimension must be a positive integer")
    labels = doc["labels"]
    if len(labels) != d or len(set(labels)) != d:
        raise DocumentError("labels must be distinct and match the dimension")
    for key in ("unit", "counit"):
        if len(doc[key]) != d:
            raise DocumentError(f"{key} must have {d} entries")
    unit = {}
    for i, t in enumerate(doc["unit"]):
        c = _scalar(F, t, f"unit[{i}]")
        if c:
            unit[i] = c
    counit = tuple(_scalar(F, t, f"counit[{i}]") for i, t in enumerate(doc["counit"]))

    mult: dict = {}
    for n, entry in enumerate(doc["mult"]):
        if len(entry) != 4:
            raise DocumentError(f"mult[{n}]: expected [i, j, k, scalar]")
        i, j, k = (_index(x, d, f"mult[{n}]") for x in entry[:3])
        c = _scalar(F, entry[3], f"mult[{n}]")
        if (k in mult.get((i, j), {})):
            raise DocumentError(f"mult[{n}]: duplicate entry")
        if c:
            mult.setdefault((i, j), {})[k] = c
    comult = [dict() for _ in range(d)]
    for n, entry in enumerate(doc["comult"]):
        if len(entry) != 4:
            raise DocumentError(f"comult[{n}]: expected [i, j, k, scalar]")
        i, j, k = (_index(x, d, f"comult[{n}]") for x in entry[:3])
        c = _scalar(F, entry[3], f"comult[{n}]")
        if (j, k) in comult[i]:
            raise DocumentError(f"comult[{n}]: duplicate entry")
        if c:
            comult[i][(j, k)] = c
    antipode = [dict() for _ in range(d)]
    for n, entry in enumerate(doc["antipode"]):
        if len(entry) != 3:
            raise DocumentError(f"antipode[{n}]: expected [i, j, scalar]")
        i, j = (_index(x, d, f"antipode[{n}]") for x in entry[:2])
        c = _scalar(F, entry[2], f"antipode[{n}]")
        if i in antipode[j]:
            raise DocumentError(f"antipode[{n}]: duplicate entry")
        if c:
            antipode[j][i] = c

    meta = doc.get("metadata") or {}
    grouplikes = []
    for n, g in enumerate(meta.get("grouplikes", [])):
        v = {}
        for i, t in g:
            c = _scalar(F, t, f"metadata.grouplikes[{n}]")
            if c:
                v[_index(i, d, f"metadata.grouplikes[{n}]")] = c
        grouplikes.append(v)
    flags = {k: bool(v) for k, v in (meta.get("flags") or {}).items()}
    H = HopfAlgebra(F, tuple(labels), mult, unit, tuple(comult), counit, tuple(antipode),
                    grouplikes=tuple(grouplikes), flags=flags, name=doc.get("name", ""))
    if verify:
        rep = verify_hopf(H)
        if not rep.passed:
            raise DocumentError(f"axiom check failed: {', '.join(rep.failures)}")
        for n, g in enumerate(H.grouplikes):
            if not is_grouplike(H, g):
                raise DocumentError(f"metadata.grouplikes[{n}] is not grouplike")
    return H


def expected_of(doc: dict) -> dict:
    return dict((doc.get("metadata") or {}).get("expected", {}))


def loads(text: str, verify: bool = True) -> HopfAlgebra:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"not valid JSON: {exc}") from None
    return parse(doc, verify)


def load(path, verify: bool = True) -> tuple[HopfAlgebra, dict]:
    """Read a document file; returns (algebra, raw document)."""
    text = Path(path).read_text()
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"{path}: not valid JSON: {exc}") from None
    return parse(doc, verify), doc


def save(H: HopfAlgebra, path, expected=None, extra: dict | None = None) -> str:
    text = dumps(emit(H, expected, extra))
    Path(path).write_text(text)
    return text


__all__ = ["DocumentError", "FORMAT_VERSION", "dumps", "emit", "expected_of", "load", "loads", "parse", "save"]

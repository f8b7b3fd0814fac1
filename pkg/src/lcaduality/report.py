"""JSON serialization of configurations, witnesses and verdicts.

Key order is fixed by construction (dicts are built in a stable order and
never sorted), so identical inputs give byte-identical reports. Scalars are
written as strings (``"3"``, ``"-1/2"``) and group elements as words.
"""

from __future__ import annotations

import json

from .analyzer import (
    FiniteDualityReport,
    GardenOfEden,
    KernelElement,
    MEPPair,
    PreimageTable,
    Status,
    Verdict,
)
from .engine import Configuration, WindowPattern
from .errors import UsageError


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def configuration_to_json(c: Configuration):
    G, F = c.group, c.field
    return [[G.format(g), [F.format(x) for x in v]] for g, v in c.items()]


def configuration_from_json(data, group, field, n) -> Configuration:
    values = {}
    for word, vec in data:
        g = group.parse_word(word)
        if g in values:
            raise UsageError(f"site {word!r} listed twice")
        values[g] = [field.parse(x) for x in vec]
    return Configuration(group, field, n, values)


def pattern_to_json(p: WindowPattern, group, field):
    return {
        "window": [group.format(g) for g in p.window],
        "values": [[field.format(x) for x in v] for v in p.values],
    }


def witness_to_json(w, group, field):
    if w is None:
        return None
    if isinstance(w, KernelElement):
        return {"kind": w.kind, "configuration": configuration_to_json(w.configuration)}
    if isinstance(w, GardenOfEden):
        return {"kind": w.kind, **pattern_to_json(w.pattern, group, field)}
    if isinstance(w, PreimageTable):
        return {
            "kind": w.kind,
            "of_adjoint": w.of_adjoint,
            "preimages": [configuration_to_json(z) for z in w.preimages],
        }
    if isinstance(w, MEPPair):
        return {"kind": w.kind, "x": configuration_to_json(w.x), "y": configuration_to_json(w.y)}
    raise UsageError(f"not a witness: {w!r}")


def witness_from_json(data, group, field, n):
    kind = data["kind"]
    if kind == KernelElement.kind:
        return KernelElement(configuration_from_json(data["configuration"], group, field, n))
    if kind == GardenOfEden.kind:
        window = tuple(group.parse_word(w) for w in data["window"])
        values = tuple(tuple(field.parse(x) for x in v) for v in data["values"])
        return GardenOfEden(WindowPattern(window, values))
    if kind == PreimageTable.kind:
        zs = tuple(configuration_from_json(z, group, field, n) for z in data["preimages"])
        return PreimageTable(zs, bool(data.get("of_adjoint", False)))
    if kind == MEPPair.kind:
        return MEPPair(
            configuration_from_json(data["x"], group, field, n),
            configuration_from_json(data["y"], group, field, n),
        )
    raise UsageError(f"unknown witness kind {kind!r}")


def verdict_to_json(v: Verdict, group, field, timing=None):
    out = {
        "property": v.property,
        "status": v.status.value,
        "radius": v.radius,
        "witness": witness_to_json(v.witness, group, field),
        "proof": v.proof,
        "dimensions": dict(v.dimensions),
    }
    if timing is not None:
        out["timing"] = round(timing, 6)
    return out


def verdict_from_json(data, group, field, n) -> Verdict:
    w = data.get("witness")
    return Verdict(
        data["property"],
        Status(data["status"]),
        data["radius"],
        None if w is None else witness_from_json(w, group, field, n),
        data.get("proof"),
        data.get("dimensions", {}),
    )


def duality_report_to_json(r: FiniteDualityReport):
    return {
        "group_order": r.order,
        "n": r.n,
        "equations": dict(r.equations),
        "transpose_identity": r.transpose_identity,
        "routes_agree": r.routes_agree,
        "dimensions": dict(r.dimensions),
        "all_hold": r.all_hold,
    }

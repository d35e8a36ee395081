"""JSON automaton files.

Two kinds: "simple" stores one row-major complex matrix per "symbol|sign"
key plus a direction table keyed "state|symbol"; "general" stores the sparse
transition table as a list of records.  Complex numbers are {"re":..,"im":..}
objects; floats are serialized with Python's round-trip repr, so
parse(emit(a)) reproduces every amplitude bit for bit.
"""

from __future__ import annotations

import json
from typing import Any

import numpy as np

from .automaton import (AcceptanceType, CounterDomain, GeneralQf1ca,
                        Observation, SimpleQf1ca)
from .core import Direction


class FormatError(ValueError):
    """The document is not a valid automaton file."""


def _c_out(z: complex) -> dict[str, float]:
    return {"re": float(z.real), "im": float(z.imag)}


def _c_in(obj: Any) -> complex:
    try:
        return complex(float(obj["re"]), float(obj["im"]))
    except (TypeError, KeyError) as exc:
        raise FormatError(f"bad complex value {obj!r}") from exc


def emit(a: SimpleQf1ca | GeneralQf1ca) -> str:
    doc: dict[str, Any] = {
        "kind": "simple" if isinstance(a, SimpleQf1ca) else "general",
        "alphabet": list(a.alphabet),
        "states": list(a.states),
        "initial": a.initial,
        "accepting": sorted(a.accepting),
        "rejecting": sorted(a.rejecting),
        "acceptance": a.acceptance.value,
        "observation": a.observation.value,
        "counter_domain": a.counter_domain.value,
    }
    if isinstance(a, SimpleQf1ca):
        doc["unitaries"] = {
            f"{symbol}|{s}": [[_c_out(complex(z)) for z in row] for row in np.asarray(m)]
            for (symbol, s), m in sorted(a.unitaries.items())}
        doc["direction"] = {
            f"{q}|{symbol}": d.value
            for (q, symbol), d in sorted(a.direction.items())}
    else:
        records = []
        for (q, symbol, s), targets in sorted(a.delta.items()):
            for (q2, d), amp in sorted(targets.items(), key=lambda kv: (kv[0][0], kv[0][1].value)):
                records.append({"from": q, "symbol": symbol, "sign": s,
                                "to": q2, "dir": d.value, "amp": _c_out(amp)})
        doc["delta"] = records
    return json.dumps(doc, indent=2) + "\n"


def _common(doc: dict[str, Any]) -> dict[str, Any]:
    try:
        return {
            "alphabet": tuple(doc["alphabet"]),
            "states": tuple(doc["states"]),
            "initial": doc["initial"],
            "accepting": frozenset(doc["accepting"]),
            "rejecting": frozenset(doc["rejecting"]),
            "acceptance": AcceptanceType(doc.get("acceptance", "state_and_zero")),
            "observation": Observation(doc.get("observation", "mm")),
            "counter_domain": CounterDomain(doc.get("counter_domain", "int")),
        }
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"bad automaton document: {exc}") from exc


def parse(text: str) -> SimpleQf1ca | GeneralQf1ca:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise FormatError("top level must be an object")
    kind = doc.get("kind")
    fields = _common(doc)
    n = len(fields["states"])
    if kind == "simple":
        unitaries = {}
        for key, rows in doc.get("unitaries", {}).items():
            symbol, _, s = key.rpartition("|")
            if not symbol or s not in ("0", "1"):
                raise FormatError(f"bad unitary key {key!r}")
            m = np.array([[_c_in(z) for z in row] for row in rows], dtype=complex)
            if m.shape != (n, n):
                raise FormatError(f"matrix {key!r} has shape {m.shape}, expected {(n, n)}")
            unitaries[(symbol, int(s))] = m
        direction = {}
        for key, value in doc.get("direction", {}).items():
            q, _, symbol = key.rpartition("|")
            if not q:
                raise FormatError(f"bad direction key {key!r}")
            try:
                direction[(q, symbol)] = Direction(value)
            except ValueError as exc:
                raise FormatError(f"bad direction {value!r} at {key!r}") from exc
        return SimpleQf1ca(unitaries=unitaries, direction=direction, **fields)
    if kind == "general":
        delta: dict[tuple[str, str, int], dict[tuple[str, Direction], complex]] = {}
        for rec in doc.get("delta", []):
            try:
                key = (rec["from"], rec["symbol"], int(rec["sign"]))
                target = (rec["to"], Direction(rec["dir"]))
                amp = _c_in(rec["amp"])
            except (KeyError, TypeError, ValueError) as exc:
                raise FormatError(f"bad delta record {rec!r}") from exc
            delta.setdefault(key, {})[target] = amp
        return GeneralQf1ca(delta=delta, **fields)
    raise FormatError(f"unknown kind {kind!r}")


def load(path: str) -> SimpleQf1ca | GeneralQf1ca:
    with open(path, encoding="utf-8") as fh:
        return parse(fh.read())


def save(a: SimpleQf1ca | GeneralQf1ca, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(emit(a))

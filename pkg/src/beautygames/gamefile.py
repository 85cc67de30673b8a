"""JSON game documents.

Layout::

    {
      "realizations": [{"id": "Heads", "probability": "1/2", "awakenings": ["I"]}, ...],
      "infosets": [{"label": "I", "actions": ["Left", "Right"],
                    "symmetry_class": "S", "decline_action": "Right"}, ...],
      "payoffs": {"Heads": [{"profile": ["Left"], "value": "3"}, ...], ...}
    }

``symmetry_class`` and ``decline_action`` are optional.  Rationals are always
strings.  Unknown keys anywhere are an error.
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

from .errors import ModelError
from .game import Game, GameSpec, InformationSet, Realization
from .rational import format_rational, parse_rational

_TOP = {"realizations", "infosets", "payoffs"}
_REAL = {"id", "probability", "awakenings"}
_SET = {"label", "actions", "symmetry_class", "decline_action"}
_ENTRY = {"profile", "value"}


def _expect(cond, where, message):
    if not cond:
        raise ModelError("PARSE_ERROR", f"{where}: {message}")


def _keys(obj, allowed, required, where):
    _expect(isinstance(obj, dict), where, "expected an object")
    unknown = set(obj) - allowed
    _expect(not unknown, where, f"unknown keys {sorted(unknown)}")
    missing = required - set(obj)
    _expect(not missing, where, f"missing keys {sorted(missing)}")


def _labels(value, where):
    _expect(isinstance(value, list) and all(isinstance(x, str) for x in value),
            where, "expected a list of strings")
    return tuple(value)


def _no_duplicate_keys(pairs):
    seen = {}
    for k, v in pairs:
        if k in seen:
            raise ModelError("PARSE_ERROR", f"duplicate key {k!r}")
        seen[k] = v
    return seen


def from_dict(doc) -> GameSpec:
    _keys(doc, _TOP, _TOP, "document")
    _expect(isinstance(doc["realizations"], list), "realizations", "expected a list")
    _expect(isinstance(doc["infosets"], list), "infosets", "expected a list")
    _expect(isinstance(doc["payoffs"], dict), "payoffs", "expected an object")

    reals = []
    for n, r in enumerate(doc["realizations"]):
        where = f"realizations[{n}]"
        _keys(r, _REAL, _REAL, where)
        _expect(isinstance(r["id"], str), where, "id must be a string")
        reals.append(Realization(r["id"], parse_rational(r["probability"]),
                                 _labels(r["awakenings"], f"{where}.awakenings")))

    sets = []
    for n, s in enumerate(doc["infosets"]):
        where = f"infosets[{n}]"
        _keys(s, _SET, {"label", "actions"}, where)
        _expect(isinstance(s["label"], str), where, "label must be a string")
        for opt in ("symmetry_class", "decline_action"):
            _expect(s.get(opt) is None or isinstance(s[opt], str), where, f"{opt} must be a string")
        sets.append(InformationSet(s["label"], _labels(s["actions"], f"{where}.actions"),
                                   s.get("symmetry_class"), s.get("decline_action")))

    payoffs = {}
    for rid, entries in doc["payoffs"].items():
        where = f"payoffs.{rid}"
        _expect(isinstance(entries, list), where, "expected a list")
        table = {}
        for n, e in enumerate(entries):
            _keys(e, _ENTRY, _ENTRY, f"{where}[{n}]")
            prof = _labels(e["profile"], f"{where}[{n}].profile")
            _expect(prof not in table, f"{where}[{n}]", f"profile {list(prof)} listed twice")
            table[prof] = parse_rational(e["value"])
        payoffs[rid] = table
    return GameSpec(tuple(reals), tuple(sets), payoffs)


def loads(text: str) -> GameSpec:
    """Parse a JSON game document.  Malformed JSON raises ``PARSE_ERROR`` with line/column."""
    try:
        doc = json.loads(text, object_pairs_hook=_no_duplicate_keys)
    except json.JSONDecodeError as exc:
        raise ModelError("PARSE_ERROR",
                         f"line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    return from_dict(doc)


def load(path) -> GameSpec:
    return loads(Path(path).read_text())


def to_dict(game) -> dict:
    spec = game.spec if isinstance(game, Game) else game
    infosets = []
    for s in spec.infosets:
        d = {"label": s.label, "actions": list(s.actions)}
        if s.symmetry_class is not None:
            d["symmetry_class"] = s.symmetry_class
        if s.decline_action is not None:
            d["decline_action"] = s.decline_action
        infosets.append(d)
    return {
        "realizations": [
            {"id": r.id, "probability": format_rational(r.probability),
             "awakenings": list(r.awakenings)}
            for r in spec.realizations
        ],
        "infosets": infosets,
        "payoffs": {
            rid: [{"profile": list(p), "value": format_rational(v)} for p, v in table.items()]
            for rid, table in spec.payoffs.items()
        },
    }


def dumps(game, indent: int | None = 2) -> str:
    return json.dumps(to_dict(game), indent=indent)


def dump(game, path) -> None:
    Path(path).write_text(dumps(game) + "\n")


def load_weights(text: str) -> dict[str, Fraction]:
    """Custom credence weights: a JSON object mapping ``"r/i"`` event keys to rationals."""
    try:
        doc = json.loads(text, object_pairs_hook=_no_duplicate_keys)
    except json.JSONDecodeError as exc:
        raise ModelError("PARSE_ERROR",
                         f"line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    _expect(isinstance(doc, dict), "weights", "expected an object of event -> rational")
    return {k: parse_rational(v) for k, v in doc.items()}


def dumps_weights(weights) -> str:
    return json.dumps({str(k): format_rational(v) for k, v in weights.items()}, indent=2)

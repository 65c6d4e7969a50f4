"""JSON readers and writers for vectors, words and Seifert matrices.

Word documents look like::

    {"genus": 3, "factors": [
        {"type": "bp", "spine": [{"x": [...], "y": [...]}], "c": [...], "power": 1, "side": "TB"},
        {"type": "sep", "power": 2, "F": 1},
        {"type": "general", "c": [...], "power": -1},
        {"type": "conj", "by": [[...], ...], "inner": {...}}]}

In this form every factor is its own block of the gluing word; a factor's
"side" tags the block and "F" declares its F value.  On a separating factor
"F" is the value of a single twist and the block value is power * F.  Blocks
with several factors use {"genus": g, "blocks": [{"factors": [...], "F": n,
"side": "TA"}]}.
"""
from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Dict

from .engine import AnnotatedWord, Block
from .errors import AnnotationError, CassonError
from .exterior import ExteriorCubeVector, w_split
from .johnson import BoundingPair, Conjugated, General, Separating, TwistGenerator, TwistWord
from .symplectic import HomologyVector, SymplecticMatrix


def load_json(path: str | Path) -> Any:
    try:
        with open(path) as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise CassonError(f"{path}: malformed JSON ({exc})") from exc
    except OSError as exc:
        raise CassonError(f"{path}: {exc.strerror}") from exc


def dump_json(doc: Any) -> str:
    return json.dumps(doc, indent=2)


def _int(x: Any, what: str) -> int:
    if isinstance(x, bool) or not isinstance(x, int):
        raise CassonError(f"{what} must be an integer, got {x!r}")
    return x


def parse_vector(data: Any, genus: int) -> HomologyVector:
    if not isinstance(data, list) or len(data) != 2 * genus:
        raise CassonError(f"expected a list of {2 * genus} integers, got {data!r}")
    return HomologyVector(genus, tuple(_int(x, "coordinate") for x in data))


def parse_matrix(data: Any, genus: int) -> SymplecticMatrix:
    if not isinstance(data, list) or len(data) != 2 * genus:
        raise CassonError(f"expected a {2 * genus}x{2 * genus} matrix")
    rows = []
    for r in data:
        if not isinstance(r, list) or len(r) != 2 * genus:
            raise CassonError(f"expected a {2 * genus}x{2 * genus} matrix")
        rows.append([_int(x, "matrix entry") for x in r])
    return SymplecticMatrix(genus, rows)


def parse_factor(d: Dict[str, Any], genus: int) -> TwistGenerator:
    try:
        return _parse_factor(d, genus)
    except KeyError as exc:
        raise CassonError(f"factor is missing field {exc}") from None
    except (TypeError, AttributeError) as exc:
        raise CassonError(f"malformed factor: {exc}") from None


def _parse_factor(d: Dict[str, Any], genus: int) -> TwistGenerator:
    if not isinstance(d, dict) or "type" not in d:
        raise CassonError("factor must be an object with a 'type'")
    kind = d["type"]
    power = _int(d.get("power", 1), "power")
    if kind == "general":
        return General(parse_vector(d["c"], genus), power)
    if kind == "sep":
        f = d.get("F")
        return Separating(genus, power, None if f is None else _int(f, "F"))
    if kind == "bp":
        spine = tuple((parse_vector(p["x"], genus), parse_vector(p["y"], genus)) for p in d["spine"])
        return BoundingPair(spine, parse_vector(d["c"], genus), power)
    if kind == "conj":
        return Conjugated(parse_matrix(d["by"], genus), _parse_factor(d["inner"], genus))
    raise CassonError(f"unknown factor type {kind!r}")


def factor_to_json(f: TwistGenerator) -> Dict[str, Any]:
    if isinstance(f, General):
        return {"type": "general", "c": f.c.to_json(), "power": f.power}
    if isinstance(f, Separating):
        out: Dict[str, Any] = {"type": "sep", "power": f.power}
        if f.f_value is not None:
            out["F"] = f.f_value
        return out
    if isinstance(f, BoundingPair):
        return {"type": "bp", "spine": [{"x": x.to_json(), "y": y.to_json()} for x, y in f.spine],
                "c": f.c.to_json(), "power": f.power}
    return {"type": "conj", "by": f.by.to_json(), "inner": factor_to_json(f.inner)}


def _genus(doc: Any) -> int:
    if not isinstance(doc, dict) or "genus" not in doc:
        raise CassonError("document must be an object with an explicit 'genus'")
    g = _int(doc["genus"], "genus")
    if g < 1:
        raise CassonError("genus must be positive")
    return g


def _list(doc: Any, key: str) -> list:
    if not isinstance(doc, dict) or not isinstance(doc.get(key), list):
        raise CassonError(f"expected a list under {key!r}")
    return doc[key]


def _word_key(doc: Dict[str, Any]) -> str:
    if "blocks" in doc:
        return "blocks"
    if "factors" in doc:
        return "factors"
    raise CassonError("word document needs 'factors' or 'blocks'")


def parse_word(doc: Any) -> TwistWord:
    g = _genus(doc)
    if _word_key(doc) == "blocks":
        factors = [parse_factor(f, g) for b in _list(doc, "blocks") for f in _list(b, "factors")]
    else:
        factors = [parse_factor(f, g) for f in _list(doc, "factors")]
    return TwistWord(g, tuple(factors))


def parse_annotated(doc: Any) -> AnnotatedWord:
    g = _genus(doc)
    blocks = []
    if _word_key(doc) == "blocks":
        for i, b in enumerate(_list(doc, "blocks")):
            try:
                factors = tuple(parse_factor(f, g) for f in b["factors"])
                declared = b.get("F")
                blocks.append(Block(TwistWord(g, factors),
                                    None if declared is None else _int(declared, "F"),
                                    b.get("side")))
            except (CassonError, KeyError, TypeError) as exc:
                raise AnnotationError(str(exc), i) from exc
    else:
        for i, f in enumerate(_list(doc, "factors")):
            try:
                factor = parse_factor(f, g)
                declared = None
                if f.get("type") != "sep" and f.get("F") is not None:
                    declared = _int(f["F"], "F")
                blocks.append(Block(TwistWord(g, (factor,)), declared, f.get("side")))
            except (CassonError, KeyError, TypeError) as exc:
                raise AnnotationError(str(exc), i) from exc
    return AnnotatedWord(g, tuple(blocks))


def annotated_to_json(w: AnnotatedWord) -> Dict[str, Any]:
    single = all(len(b.word.factors) == 1 for b in w.blocks)
    if single:
        factors = []
        for b in w.blocks:
            d = factor_to_json(b.word.factors[0])
            if b.side is not None:
                d["side"] = b.side
            if b.declared_F is not None and d["type"] != "sep":
                d["F"] = b.declared_F
            factors.append(d)
        return {"genus": w.genus, "factors": factors}
    blocks = []
    for b in w.blocks:
        d: Dict[str, Any] = {"factors": [factor_to_json(f) for f in b.word.factors]}
        if b.declared_F is not None:
            d["F"] = b.declared_F
        if b.side is not None:
            d["side"] = b.side
        blocks.append(d)
    return {"genus": w.genus, "blocks": blocks}


def tau_to_json(t: ExteriorCubeVector) -> Dict[str, Any]:
    sp = w_split(t)
    return {"genus": t.genus, "terms": t.to_json(), "W_A": sp.wA.to_json(),
            "W_AB": sp.wAB.to_json(), "W_B": sp.wB.to_json()}


def parse_tau_or_word(doc: Any) -> ExteriorCubeVector:
    """A tau vector document {"genus", "tau": [...]} or any word document."""
    g = _genus(doc)
    if "tau" in doc:
        data = doc["tau"]
        if isinstance(data, dict):
            data = data.get("terms", [])
        return ExteriorCubeVector.from_json(g, data)
    from .johnson import tau
    return tau(parse_word(doc))


def parse_seifert(doc: Any):
    data = doc.get("seifert") if isinstance(doc, dict) else doc
    if not isinstance(data, list) or any(not isinstance(r, list) for r in data):
        raise CassonError("Seifert matrix must be a list of integer rows")
    return [[_int(x, "Seifert entry") for x in r] for r in data]

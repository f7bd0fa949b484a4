"""JSON class documents and text rendering.

A class document is ``{"n": int, "basis": tag, "terms": [...]}`` with one
record ``{"family": "A"|"A'"|"B"|"B'"|"C", "i": int, "j": int, "coeff": "p"
or "p/q"}`` per term.  Coefficients travel as exact rational strings, never
as floats.  ``parse_class(emit_class(X)) == X`` for every canonical class;
emission is deterministic (canonical term order).
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Union

from .chow import BasisId, BasisSymbol, Family, GradedClass
from .errors import ParseError


def format_symbol(sym: BasisSymbol) -> str:
    return str(sym)


def format_class(X: GradedClass) -> str:
    return str(X)


def format_rational(value: Fraction) -> str:
    return str(value)


def basis_tag(X: GradedClass) -> str:
    """The first of MS, ES, BB containing every term family, else "mixed"."""
    fams = X.families()
    for basis in (BasisId.MS, BasisId.ES, BasisId.BB):
        if fams <= set(basis.families):
            return basis.value
    return "mixed"


def symbol_to_doc(sym: BasisSymbol) -> dict:
    return {"family": sym.family.value, "i": sym.i, "j": sym.j}


def _parse_rational(value) -> Fraction:
    if isinstance(value, bool) or isinstance(value, float):
        raise ParseError(f"coefficient {value!r} is not an exact rational string")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"bad rational string {value!r}") from exc
    raise ParseError(f"coefficient {value!r} is not an exact rational string")


def _load_json(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON at position {exc.pos}: {exc.msg}") from exc


def _require_int(doc: dict, key: str, what: str) -> int:
    if key not in doc:
        raise ParseError(f"{what} is missing field {key!r}")
    value = doc[key]
    if not isinstance(value, int) or isinstance(value, bool):
        raise ParseError(f"{what} field {key!r} must be an integer, got {value!r}")
    return value


def parse_symbol(source: Union[str, dict], n: int) -> BasisSymbol:
    """Read ``{"family": ..., "i": ..., "j": ...}`` (dict or JSON text)."""
    doc = _load_json(source) if isinstance(source, str) else source
    if not isinstance(doc, dict):
        raise ParseError(f"symbol document must be an object, got {doc!r}")
    fam = doc.get("family")
    try:
        family = Family(fam)
    except ValueError:
        raise ParseError(f"unknown family {fam!r}") from None
    i = _require_int(doc, "i", "symbol document")
    j = _require_int(doc, "j", "symbol document")
    return BasisSymbol(family, i, j, n)  # InvalidIndex propagates


def emit_class(X: GradedClass) -> dict:
    """Class document for X, with terms in canonical order."""
    return {
        "n": X.n,
        "basis": basis_tag(X),
        "terms": [
            {**symbol_to_doc(sym), "coeff": format_rational(c)} for sym, c in X.items()
        ],
    }


def class_to_json(X: GradedClass) -> str:
    return json.dumps(emit_class(X))


def parse_class(source: Union[str, dict]) -> GradedClass:
    """Read a class document (dict or JSON text) back into a GradedClass."""
    doc = _load_json(source) if isinstance(source, str) else source
    if not isinstance(doc, dict):
        raise ParseError(f"class document must be an object, got {doc!r}")
    n = _require_int(doc, "n", "class document")
    terms_doc = doc.get("terms")
    if not isinstance(terms_doc, list):
        raise ParseError("class document is missing the list field 'terms'")
    terms = []
    for record in terms_doc:
        if not isinstance(record, dict):
            raise ParseError(f"term record must be an object, got {record!r}")
        if "coeff" not in record:
            raise ParseError(f"term record {record!r} is missing field 'coeff'")
        sym = parse_symbol(record, n)
        terms.append((sym, _parse_rational(record["coeff"])))
    return GradedClass(n, terms)

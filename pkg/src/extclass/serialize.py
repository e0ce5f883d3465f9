"""JSON algebra files and ``catalog:`` references.

File shape::

    {"dim": 3, "field": "Q", "name": "g1",
     "brackets": [{"i": 2, "j": 3, "out": [["1", 1]]}]}

Indices are 1-based with ``i < j``; omitted brackets are zero.  The field is
``"Q"``, ``"Qi"`` or ``{"Fp": p}`` and scalars are strings in that field's
grammar.
"""
from __future__ import annotations

import json
import re

from .algebra import Algebra, pairs
from .catalog import CATALOG, TABLE1_NAMES, Catalog
from .errors import CatalogError, ExtclassError, ParseError
from .fields import Field

__all__ = ["algebra_to_json", "algebra_from_json", "dumps_algebra", "loads_algebra", "load_algebra", "resolve"]


def algebra_to_json(A: Algebra) -> dict:
    F = A.field
    brackets = []
    for (i, j), v in zip(pairs(A.dim), A.products):
        out = [[F.format(c), k + 1] for k, c in enumerate(v) if c]
        if out:
            brackets.append({"i": i + 1, "j": j + 1, "out": out})
    doc = {"dim": A.dim, "field": F.to_json()}
    if A.name:
        doc["name"] = A.name
    doc["brackets"] = brackets
    return doc


def dumps_algebra(A: Algebra) -> str:
    return json.dumps(algebra_to_json(A), indent=2)


def _int(obj, where: str) -> int:
    if isinstance(obj, bool) or not isinstance(obj, int):
        raise ParseError(f"{where}: expected an integer, got {obj!r}")
    return obj


def algebra_from_json(doc) -> Algebra:
    if not isinstance(doc, dict):
        raise ParseError("top level must be an object")
    unknown = set(doc) - {"dim", "field", "name", "brackets"}
    if unknown:
        raise ParseError(f"unknown keys {sorted(unknown)}")
    if "dim" not in doc:
        raise ParseError("missing 'dim'")
    n = _int(doc["dim"], "dim")
    if n < 0:
        raise ParseError("dim must be nonnegative")
    F = Field.from_json(doc.get("field", "Q"))
    name = doc.get("name")
    if name is not None and not isinstance(name, str):
        raise ParseError("name must be a string")
    table = {}
    brackets = doc.get("brackets", [])
    if not isinstance(brackets, list):
        raise ParseError("brackets must be a list")
    for b, entry in enumerate(brackets):
        where = f"brackets[{b}]"
        if not isinstance(entry, dict) or set(entry) != {"i", "j", "out"}:
            raise ParseError(f"{where}: expected keys i, j, out")
        i, j = _int(entry["i"], f"{where}.i"), _int(entry["j"], f"{where}.j")
        if not 1 <= i < j <= n:
            raise ParseError(f"{where}: need 1 <= i < j <= {n}, got i={i}, j={j}")
        if (i, j) in table:
            raise ParseError(f"{where}: bracket [e{i}, e{j}] given twice")
        out = {}
        if not isinstance(entry["out"], list):
            raise ParseError(f"{where}.out must be a list")
        for t, term in enumerate(entry["out"]):
            tw = f"{where}.out[{t}]"
            if not (isinstance(term, list) and len(term) == 2 and isinstance(term[0], str)):
                raise ParseError(f"{tw}: expected [scalar-string, basis-index]")
            k = _int(term[1], tw)
            if not 1 <= k <= n:
                raise ParseError(f"{tw}: basis index {k} out of range 1..{n}")
            try:
                c = F.parse(term[0])
            except ParseError as exc:
                raise ParseError(f"{tw}: {exc}") from None
            out[k] = out.get(k, F.zero) + c
        table[(i, j)] = out
    return Algebra.from_table(n, table, F, name)


def _position(text: str, offset: int) -> tuple[int, int]:
    line = text.count("\n", 0, offset) + 1
    column = offset - (text.rfind("\n", 0, offset) + 1) + 1
    return line, column


def loads_algebra(text: str) -> Algebra:
    """Parse an algebra file; syntax errors carry line and column."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from None
    try:
        return algebra_from_json(doc)
    except ParseError as exc:
        # locate the offending bracket entry in the source when possible
        m = re.match(r"brackets\[(\d+)\]", str(exc))
        if m and exc.line is None:
            starts = [k.start() for k in re.finditer(r"\{\s*\"[ijo]", text)]
            idx = int(m.group(1))
            if idx < len(starts):
                raise ParseError(str(exc), *_position(text, starts[idx])) from None
        raise


def load_algebra(path: str) -> Algebra:
    with open(path, encoding="utf-8") as fh:
        return loads_algebra(fh.read())


_ROW_RE = re.compile(r"^(?:A_?\{?)?(\d+)\s*,\s*(\d+)\}?$")


def resolve(ref: str, alpha=None, field: Field | None = None, catalog: Catalog = CATALOG) -> Algebra:
    """Resolve ``catalog:NAME`` (base family name or ``A_{n,i}`` / ``n,i``) or a file path.

    ``NAME^a`` is shorthand for a parameter, e.g. ``catalog:g3^1/2``.
    """
    if not ref.startswith("catalog:"):
        try:
            A = load_algebra(ref)
        except OSError as exc:
            raise ParseError(f"cannot read {ref}: {exc.strerror}") from None
        return A.over(field) if field is not None else A
    body = ref[len("catalog:"):]
    if "^" in body:
        body, alpha_text = body.split("^", 1)
        if alpha is not None:
            raise ParseError("parameter given twice")
        alpha = alpha_text
    try:
        if body in TABLE1_NAMES:
            return catalog.table1(body, alpha, field)
        m = _ROW_RE.match(body)
        if m:
            return catalog.main_theorem(int(m.group(1)), int(m.group(2)), alpha, field)
    except (CatalogError, ExtclassError) as exc:
        raise ParseError(str(exc)) from None
    raise ParseError(f"unknown catalog reference {ref!r}")

"""Reading and writing structure-constant files.

A file is a JSON object with exactly these keys::

    {
      "dim": 3,
      "basis": ["X", "Y", "Z"],            # optional, defaults to e1..en
      "params": ["alpha", "beta"],         # optional; present => a family
      "brackets": [
        {"left": 1, "right": 2, "terms": [{"target": 3, "coeff": "1"}]}
      ]
    }

Indices are 1-based with ``left < right``; each ``(left, right)`` pair may
appear once. Coefficients are strings in the grammar of
:mod:`liekit.expr`. Unknown keys anywhere are an error.
"""

from __future__ import annotations

import json
import re
from typing import Union

from .algebra import LieAlgebra
from .expr import ParseError, parse_coefficient
from .families import LieFamily

_NAME_RE = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")


class AlgebraFileError(ValueError):
    """Invalid algebra file; ``line``/``column`` locate JSON syntax errors."""

    def __init__(self, message: str, line: int = None, column: int = None):
        self.line = line
        self.column = column
        where = f" (line {line}, column {column})" if line is not None else ""
        super().__init__(message + where)


def _require_keys(obj, allowed: set, required: set, where: str) -> None:
    if not isinstance(obj, dict):
        raise AlgebraFileError(f"{where}: expected an object")
    unknown = set(obj) - allowed
    if unknown:
        raise AlgebraFileError(f"{where}: unknown key(s) {', '.join(sorted(unknown))}")
    missing = required - set(obj)
    if missing:
        raise AlgebraFileError(f"{where}: missing key(s) {', '.join(sorted(missing))}")


def _int(value, where: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise AlgebraFileError(f"{where}: expected an integer")
    return value


def _names(value, where: str) -> list:
    if not isinstance(value, list) or not all(isinstance(v, str) for v in value):
        raise AlgebraFileError(f"{where}: expected a list of strings")
    if len(set(value)) != len(value):
        raise AlgebraFileError(f"{where}: duplicate names")
    return value


def parse_algebra(text: str) -> Union[LieAlgebra, LieFamily]:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise AlgebraFileError(f"syntax error: {exc.msg}", exc.lineno, exc.colno) from None
    _require_keys(data, {"dim", "basis", "params", "brackets"}, {"dim", "brackets"}, "file")
    dim = _int(data["dim"], "dim")
    if dim < 0:
        raise AlgebraFileError("dim: must be nonnegative")
    labels = None
    if "basis" in data:
        labels = _names(data["basis"], "basis")
        if len(labels) != dim:
            raise AlgebraFileError(f"basis: {len(labels)} names for dimension {dim}")
    params = None
    if "params" in data:
        params = _names(data["params"], "params")
        for p in params:
            if not _NAME_RE.match(p):
                raise AlgebraFileError(f"params: {p!r} is not a valid identifier")
    if not isinstance(data["brackets"], list):
        raise AlgebraFileError("brackets: expected a list")
    table = {}
    for n, rec in enumerate(data["brackets"]):
        where = f"brackets[{n}]"
        _require_keys(rec, {"left", "right", "terms"}, {"left", "right", "terms"}, where)
        left = _int(rec["left"], f"{where}.left")
        right = _int(rec["right"], f"{where}.right")
        for idx, name in ((left, "left"), (right, "right")):
            if not 1 <= idx <= dim:
                raise AlgebraFileError(f"{where}.{name}: index {idx} out of range 1..{dim}")
        if left >= right:
            raise AlgebraFileError(f"{where}: need left < right, got {left} >= {right}")
        if (left, right) in table:
            raise AlgebraFileError(f"{where}: duplicate bracket [{left}, {right}]")
        if not isinstance(rec["terms"], list):
            raise AlgebraFileError(f"{where}.terms: expected a list")
        terms = {}
        for m, term in enumerate(rec["terms"]):
            twhere = f"{where}.terms[{m}]"
            _require_keys(term, {"target", "coeff"}, {"target", "coeff"}, twhere)
            target = _int(term["target"], f"{twhere}.target")
            if not 1 <= target <= dim:
                raise AlgebraFileError(f"{twhere}.target: index {target} out of range 1..{dim}")
            if target in terms:
                raise AlgebraFileError(f"{twhere}: duplicate target {target}")
            coeff = term["coeff"]
            if not isinstance(coeff, str):
                raise AlgebraFileError(f"{twhere}.coeff: expected a string")
            try:
                terms[target] = parse_coefficient(coeff, params or ())
            except ParseError as exc:
                raise AlgebraFileError(f"{twhere}.coeff: {exc}") from None
        table[(left, right)] = terms
    if params is not None:
        return LieFamily(dim, params, table, labels=labels)
    return LieAlgebra(dim, {k: {t: c.constant_value() for t, c in v.items()} for k, v in table.items()},
                      labels=labels)


def load_algebra(path) -> Union[LieAlgebra, LieFamily]:
    with open(path, encoding="utf-8") as fh:
        return parse_algebra(fh.read())


def render_algebra(obj: Union[LieAlgebra, LieFamily]) -> str:
    """Canonical text for an algebra or family; one bracket per line."""
    head = [f'  "dim": {obj.dim}', f'  "basis": {json.dumps(list(obj.labels))}']
    if isinstance(obj, LieFamily):
        head.append(f'  "params": {json.dumps(list(obj.params))}')
    records = []
    for (i, j), terms in obj.table.items():
        rec = {"left": i, "right": j, "terms": [{"target": k, "coeff": str(c)} for k, c in terms]}
        records.append("    " + json.dumps(rec))
    if records:
        body = '  "brackets": [\n' + ",\n".join(records) + "\n  ]"
    else:
        body = '  "brackets": []'
    return "{\n" + ",\n".join(head + [body]) + "\n}\n"

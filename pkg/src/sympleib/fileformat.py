"""JSON files for algebras, forms and extension data.

Rationals travel as integers or "p/q" strings; floats are refused.  Basis
indices are 1-based in files, matching how product tables are written.
Serialization is canonical (sorted sparse entries, two-space indent), so
parse/serialize round trips are bit-exact.
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path
from typing import Any, Mapping

from .algebra import Algebra
from .exactlin import Matrix, Rational, rat
from .extension import ExtensionData, SymplecticLie
from .symplectic import SkewForm, form_from_pairs


class FileFormatError(ValueError):
    """Malformed input file; maps to the usage exit code."""


def rational_to_json(value: Rational) -> int | str:
    frac = Fraction(value)
    if frac.denominator == 1:
        return int(frac)
    return f"{frac.numerator}/{frac.denominator}"


def rational_from_json(value: object, where: str) -> Fraction:
    try:
        return rat(value)
    except (TypeError, ValueError) as exc:
        raise FileFormatError(f"{where}: {exc}") from None


def _expect(condition: bool, message: str) -> None:
    if not condition:
        raise FileFormatError(message)


def form_to_entries(form: SkewForm) -> list[list[int | str]]:
    entries: list[list[int | str]] = []
    for i in range(form.dim):
        for j in range(i + 1, form.dim):
            if form.w.entries[i][j] != 0:
                entries.append([i + 1, j + 1,
                                rational_to_json(form.w.entries[i][j])])
    return entries


def algebra_to_dict(algebra: Algebra, form: SkewForm | None = None
                    ) -> dict[str, Any]:
    doc: dict[str, Any] = {"dim": algebra.dim}
    if algebra.labels:
        doc["labels"] = list(algebra.labels)
    products = []
    for i in range(algebra.dim):
        for j in range(algebra.dim):
            value = algebra.c[i][j]
            if any(x != 0 for x in value):
                products.append({
                    "left": i + 1,
                    "right": j + 1,
                    "value": [rational_to_json(x) for x in value],
                })
    doc["products"] = products
    if form is not None:
        doc["form"] = form_to_entries(form)
    return doc


def dumps(doc: Mapping[str, Any]) -> str:
    return json.dumps(doc, indent=2) + "\n"


def serialize_algebra(algebra: Algebra, form: SkewForm | None = None) -> str:
    return dumps(algebra_to_dict(algebra, form))


def loads(text: str) -> dict[str, Any]:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FileFormatError(
            f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}"
        ) from None
    _expect(isinstance(doc, dict), "top level must be an object")
    return doc


def algebra_from_dict(doc: Mapping[str, Any]
                      ) -> tuple[Algebra, SkewForm | None]:
    _expect("dim" in doc, "missing field: dim")
    dim = doc["dim"]
    _expect(isinstance(dim, int) and not isinstance(dim, bool) and dim >= 0,
            "dim must be a non-negative integer")
    labels = doc.get("labels", [])
    _expect(isinstance(labels, list) and all(isinstance(s, str) for s in labels),
            "labels must be a list of strings")
    _expect(not labels or len(labels) == dim,
            "labels must have one entry per basis vector")

    table: dict[tuple[int, int], list[Fraction]] = {}
    for k, item in enumerate(doc.get("products", [])):
        where = f"products[{k}]"
        _expect(isinstance(item, dict), f"{where}: must be an object")
        for key in ("left", "right", "value"):
            _expect(key in item, f"{where}: missing field: {key}")
        i, j = item["left"], item["right"]
        for name, idx in (("left", i), ("right", j)):
            _expect(isinstance(idx, int) and not isinstance(idx, bool)
                    and 1 <= idx <= dim,
                    f"{where}: {name} index out of range 1..{dim}")
        _expect((i, j) not in table, f"{where}: duplicate product ({i}, {j})")
        value = item["value"]
        _expect(isinstance(value, list) and len(value) == dim,
                f"{where}: value must be a vector of length {dim}")
        table[(i, j)] = [rational_from_json(x, f"{where}.value[{n}]")
                         for n, x in enumerate(value)]

    algebra = Algebra.from_table(dim, table, labels=tuple(labels))

    form = None
    if "form" in doc:
        pairs: dict[tuple[int, int], Fraction] = {}
        for k, item in enumerate(doc["form"]):
            where = f"form[{k}]"
            _expect(isinstance(item, list) and len(item) == 3,
                    f"{where}: must be [i, j, value]")
            i, j, value = item
            for idx in (i, j):
                _expect(isinstance(idx, int) and not isinstance(idx, bool)
                        and 1 <= idx <= dim,
                        f"{where}: index out of range 1..{dim}")
            _expect(i < j, f"{where}: only strict upper-triangle entries")
            _expect((i, j) not in pairs, f"{where}: duplicate entry ({i}, {j})")
            pairs[(i, j)] = rational_from_json(value, f"{where}[2]")
        form = form_from_pairs(dim, pairs)
    return algebra, form


def parse_algebra(text: str) -> tuple[Algebra, SkewForm | None]:
    return algebra_from_dict(loads(text))


def load_algebra(path: str | Path) -> tuple[Algebra, SkewForm | None]:
    return parse_algebra(Path(path).read_text(encoding="utf-8"))


def _matrix_from_json(rows: object, m: int, where: str) -> Matrix:
    _expect(isinstance(rows, list) and len(rows) == m,
            f"{where}: expected {m} rows")
    parsed = []
    for r, row in enumerate(rows):
        _expect(isinstance(row, list) and len(row) == m,
                f"{where}[{r}]: expected {m} entries")
        parsed.append([rational_from_json(x, f"{where}[{r}][{c}]")
                       for c, x in enumerate(row)])
    return Matrix.from_rows(parsed)


def _vector_table_from_json(data: object, p: int, m: int, where: str) -> list:
    _expect(isinstance(data, list) and len(data) == p,
            f"{where}: expected {p} rows")
    out = []
    for i, row in enumerate(data):
        _expect(isinstance(row, list) and len(row) == p,
                f"{where}[{i}]: expected {p} entries")
        vecs = []
        for j, vec in enumerate(row):
            _expect(isinstance(vec, list) and len(vec) == m,
                    f"{where}[{i}][{j}]: expected a vector of length {m}")
            vecs.append([rational_from_json(x, f"{where}[{i}][{j}][{n}]")
                         for n, x in enumerate(vec)])
        out.append(vecs)
    return out


def _cube_from_json(data: object, p: int, where: str) -> list:
    _expect(isinstance(data, list) and len(data) == p,
            f"{where}: expected {p} layers")
    out = []
    for i, layer in enumerate(data):
        _expect(isinstance(layer, list) and len(layer) == p,
                f"{where}[{i}]: expected {p} rows")
        rows = []
        for j, row in enumerate(layer):
            _expect(isinstance(row, list) and len(row) == p,
                    f"{where}[{i}][{j}]: expected {p} entries")
            rows.append([rational_from_json(x, f"{where}[{i}][{j}][{n}]")
                         for n, x in enumerate(row)])
        out.append(rows)
    return out


def parse_extension(text: str, base_dir: str | Path = "."
                    ) -> tuple[SymplecticLie, ExtensionData]:
    doc = loads(text)
    for key in ("g", "p", "F", "G", "theta", "psi", "xi", "omega"):
        _expect(key in doc, f"missing field: {key}")

    g_entry = doc["g"]
    if isinstance(g_entry, str):
        g_path = Path(base_dir) / g_entry
        try:
            g_text = g_path.read_text(encoding="utf-8")
        except OSError as exc:
            raise FileFormatError(f"cannot read g file {g_path}: {exc}") from None
        algebra, form = parse_algebra(g_text)
    elif isinstance(g_entry, dict):
        algebra, form = algebra_from_dict(g_entry)
    else:
        raise FileFormatError("g must be an inline algebra object or a path")
    _expect(form is not None, "the g algebra needs a form")

    p = doc["p"]
    _expect(isinstance(p, int) and not isinstance(p, bool) and p >= 1,
            "p must be a positive integer")
    m = algebra.dim

    def matrices(key: str) -> list[Matrix]:
        data = doc[key]
        _expect(isinstance(data, list) and len(data) == p,
                f"{key}: expected {p} matrices")
        return [_matrix_from_json(rows, m, f"{key}[{i}]")
                for i, rows in enumerate(data)]

    gs = SymplecticLie(algebra, form)
    try:
        data = ExtensionData(
            p, matrices("F"), matrices("G"),
            _vector_table_from_json(doc["theta"], p, m, "theta"),
            _vector_table_from_json(doc["psi"], p, m, "psi"),
            _vector_table_from_json(doc["xi"], p, m, "xi"),
            _cube_from_json(doc["omega"], p, "omega"),
        )
    except ValueError as exc:
        raise FileFormatError(str(exc)) from None
    return gs, data


def load_extension(path: str | Path) -> tuple[SymplecticLie, ExtensionData]:
    p = Path(path)
    return parse_extension(p.read_text(encoding="utf-8"), p.parent)

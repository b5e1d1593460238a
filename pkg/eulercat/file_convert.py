# Copyright the eulercat developers
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Reading and writing matrix and category files, and rendering reports as text.

Matrix files hold the dimension m on the first line and then m rows of m
nonnegative integers separated by whitespace; ``#`` starts a comment. Category
files are JSON documents::

    {
      "objects": ["a1", "a2"],
      "arrows": [{"name": "f", "src": "a1", "tgt": "a2"}, ...],
      "identities": {"a1": "id_a1", ...},
      "composition": [["g", "f", "gf"], ...]
    }

where each composition triple ``[g, f, h]`` states ``g . f = h``.
"""

import json
from collections.abc import Sequence
from fractions import Fraction
from pathlib import Path
from typing import Any, Optional, Union

from .categories import Arrow, CatPresentation, CountMatrix
from .euler import EulerReport, Weighting
from .polyrat import render_rational, render_ratfunc, render_vector

PathLike = Union[str, Path]


class MatrixParseError(ValueError):
    """Raised when a matrix file does not follow the matrix grammar"""

    def __init__(self, reason: str, line: int, column: int = 1) -> None:
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {reason}")


class CategoryFileError(ValueError):
    """Raised when a category file is not a well-formed category document"""

    def __init__(self, reason: str) -> None:
        super().__init__(f"Malformed category file: {reason}")


def _content_lines(text: str) -> list[tuple[int, str]]:
    """Non-blank lines with comments removed, with their line numbers."""
    lines = []
    for number, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("#", 1)[0].rstrip()
        if content.strip():
            lines.append((number, content))
    return lines


def _tokens(content: str) -> list[tuple[str, int]]:
    """Whitespace-separated tokens with their 1-based columns."""
    tokens = []
    column = 0
    while column < len(content):
        if content[column].isspace():
            column += 1
            continue
        start = column
        while column < len(content) and not content[column].isspace():
            column += 1
        tokens.append((content[start:column], start + 1))
    return tokens


def _natural(token: str, line: int, column: int, what: str) -> int:
    try:
        value = int(token)
    except ValueError:
        raise MatrixParseError(
            f"expected an integer {what}, found '{token}'", line, column
        ) from None
    if value < 0:
        raise MatrixParseError(f"negative {what} {value}", line, column)
    return value


def parse_matrix_file(text: str) -> CountMatrix:
    """Parse the matrix grammar into a :py:class:`CountMatrix`.

    :raises MatrixParseError: with the line and column of the first problem.
    """
    lines = _content_lines(text)
    if not lines:
        raise MatrixParseError("empty matrix file", 1)
    number, content = lines[0]
    header = _tokens(content)
    if len(header) != 1:
        raise MatrixParseError(
            "the first line must hold only the dimension", number, header[1][1]
        )
    m = _natural(header[0][0], number, header[0][1], "dimension")
    if m == 0:
        raise MatrixParseError("the dimension must be positive", number, header[0][1])

    rows: list[list[int]] = []
    for number, content in lines[1:]:
        if len(rows) == m:
            raise MatrixParseError(f"expected {m} rows, found more", number)
        tokens = _tokens(content)
        if len(tokens) != m:
            column = tokens[m][1] if len(tokens) > m else len(content) + 1
            raise MatrixParseError(
                f"row length mismatch: expected {m} entries, found {len(tokens)}",
                number,
                column,
            )
        rows.append([_natural(tok, number, col, "entry") for tok, col in tokens])
    if len(rows) < m:
        last = lines[-1][0]
        raise MatrixParseError(f"expected {m} rows, found {len(rows)}", last + 1)
    return CountMatrix(rows)


def read_matrix_file(path: PathLike) -> CountMatrix:
    return parse_matrix_file(Path(path).read_text())


def render_matrix(z: CountMatrix) -> str:
    """The matrix file text for ``z``."""
    rows = [" ".join(str(x) for x in row) for row in z.entries]
    return "\n".join([str(z.dim), *rows]) + "\n"


def category_to_dict(category: CatPresentation) -> dict[str, Any]:
    return {
        "objects": list(category.objects),
        "arrows": [
            {"name": a.name, "src": a.src, "tgt": a.tgt} for a in category.arrows
        ],
        "identities": dict(category.identities),
        "composition": [[g, f, gf] for (g, f), gf in category.composition.items()],
    }


def _expect(condition: bool, reason: str) -> None:
    if not condition:
        raise CategoryFileError(reason)


def _names(value: Any, what: str) -> list[str]:
    _expect(
        isinstance(value, list) and all(isinstance(x, str) for x in value),
        f"'{what}' must be a list of strings",
    )
    return list(value)


def category_from_dict(document: Any) -> CatPresentation:
    """Build a presentation from a parsed category document.

    Only the shape of the document is checked here; the category axioms are left
    to :py:func:`eulercat.categories.validate`.

    :raises CategoryFileError: if a field is missing or of the wrong type.
    """
    _expect(isinstance(document, dict), "expected a JSON object at top level")
    missing = [
        key
        for key in ("objects", "arrows", "identities", "composition")
        if key not in document
    ]
    _expect(not missing, f"missing field(s) {', '.join(missing)}")

    objects = _names(document["objects"], "objects")

    arrows = []
    _expect(isinstance(document["arrows"], list), "'arrows' must be a list")
    for entry in document["arrows"]:
        _expect(
            isinstance(entry, dict)
            and all(isinstance(entry.get(k), str) for k in ("name", "src", "tgt")),
            f"arrow {entry!r} must have string fields name, src and tgt",
        )
        arrows.append(Arrow(entry["name"], entry["src"], entry["tgt"]))

    identities = document["identities"]
    _expect(
        isinstance(identities, dict)
        and all(isinstance(v, str) for v in identities.values()),
        "'identities' must map object names to arrow names",
    )

    composition: dict[tuple[str, str], str] = {}
    _expect(isinstance(document["composition"], list), "'composition' must be a list")
    for triple in document["composition"]:
        names = _names(triple, "composition")
        _expect(len(names) == 3, f"composition entry {triple!r} must be [g, f, gf]")
        g, f, gf = names
        _expect(
            composition.get((g, f), gf) == gf,
            f"composite of {g} and {f} given twice with different values",
        )
        composition[(g, f)] = gf

    return CatPresentation(
        objects=tuple(objects),
        arrows=tuple(arrows),
        identities=dict(identities),
        composition=composition,
    )


def read_category_file(path: PathLike) -> CatPresentation:
    try:
        document = json.loads(Path(path).read_text())
    except json.JSONDecodeError as e:
        raise CategoryFileError(f"line {e.lineno}, column {e.colno}: {e.msg}") from e
    return category_from_dict(document)


def render_category(category: CatPresentation) -> str:
    return json.dumps(category_to_dict(category), indent=2) + "\n"


def write_category_file(category: CatPresentation, path: PathLike) -> None:
    Path(path).write_text(render_category(category))


def _optional_rational(x: Optional[Fraction]) -> str:
    return "undefined" if x is None else render_rational(x)


def _weighting(w: Optional[Weighting]) -> str:
    return "none" if w is None else render_vector(w.values)


def _flag(value: bool) -> str:
    return "true" if value else "false"


def render_report(report: EulerReport) -> str:
    """The text printed by ``eulercat report``; byte-identical for equal reports."""
    data = report.char_data
    lines = [
        f"Z: {report.z}",
        f"weighting: {_weighting(report.weighting)}",
        f"coweighting: {_weighting(report.coweighting)}",
        f"chi: {_optional_rational(report.chi)}",
        f"has_mobius: {_flag(report.has_mobius)}",
        f"f(t): {render_ratfunc(report.f)}",
        f"g(u): {render_ratfunc(report.g)}",
        f"d: {render_vector(data.d)}",
        f"e: {render_vector(data.e)}",
        f"l: {data.l}",
        f"chi_sigma: {_optional_rational(report.chi_sigma)}",
        f"diagonalizable: {_flag(report.diagonalizable)}",
        f"series: {render_vector(report.series_prefix.coefficients)}",
    ]
    return "\n".join(lines) + "\n"


def render_checks(report: EulerReport) -> str:
    return "".join(f"{check}\n" for check in report.checks)


def render_counts(values: Sequence[int]) -> str:
    return "[" + ", ".join(str(v) for v in values) + "]"

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

"""Command-line front end.

Exit codes: 0 on success, 1 when a check or a stated value fails, 2 on bad input.
"""

import argparse
import logging
import sys
from collections.abc import Iterable, Sequence
from pathlib import Path
from typing import Optional

from .catalogue import CATALOGUE, CatalogueEntry, evaluate, render_row
from .categories import (
    CatPresentation,
    CountMatrix,
    InvalidCategoryError,
    Verdict,
    category_from_matrix,
    count_matrix,
    count_nondegenerate_chains,
    ensure_valid,
    is_category_matrix,
    random_category_matrix,
)
from .config import EulerConfig
from .euler import (
    DEFAULT_NERVE_LIMIT,
    NERVE_CHAIN_LIMIT,
    build_report,
    f_series_ratfunc,
    nerve_within_limit,
)
from .file_convert import (
    CategoryFileError,
    MatrixParseError,
    read_category_file,
    read_matrix_file,
    render_category,
    render_checks,
    render_counts,
    render_matrix,
    render_report,
    write_category_file,
)
from .polyrat import ratfunc_series, render_ratfunc, render_vector

_logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INPUT = 2

MATRIX = "matrix"
CATEGORY = "category"


class InputError(Exception):
    """Raised for unreadable or malformed input; reported with exit code 2"""


def _input_format(path: Path, requested: Optional[str]) -> str:
    if requested is not None:
        return requested
    return CATEGORY if path.suffix.lower() == ".json" else MATRIX


def load_input(
    path: Path, requested: Optional[str] = None
) -> tuple[CountMatrix, Optional[CatPresentation]]:
    """Read a matrix or a category file.

    Category files are checked against the category axioms.

    :raises InputError: if the file cannot be read or parsed.
    :raises InvalidCategoryError: if a category file breaks an axiom.
    """
    try:
        if _input_format(path, requested) == MATRIX:
            return read_matrix_file(path), None
        category = read_category_file(path)
    except (OSError, MatrixParseError, CategoryFileError, ValueError) as e:
        raise InputError(f"{path}: {e}") from e
    ensure_valid(category)
    return count_matrix(category), category


def _error(message: str) -> None:
    sys.stderr.write(f"eulercat: error: {message}\n")


def cmd_report(
    path: Path, terms: int, config: EulerConfig, fmt: Optional[str] = None
) -> int:
    try:
        z, category = load_input(path, fmt)
    except (InputError, InvalidCategoryError) as e:
        _error(str(e))
        return EXIT_INPUT
    report = build_report(
        z,
        terms,
        presentation=category,
        subset_limit=config.subset_limit,
        oracle_limit=config.oracle_limit,
        nerve_limit=config.nerve_limit,
    )
    sys.stdout.write(render_report(report))
    return EXIT_OK


def cmd_series(
    path: Path,
    terms: int,
    fmt: Optional[str] = None,
    nerve_limit: int = DEFAULT_NERVE_LIMIT,
) -> int:
    """Print ``f`` and its first ``terms`` coefficients; for a category file with
    at most ``nerve_limit`` arrows also the chain counts of the nerve."""
    try:
        z, category = load_input(path, fmt)
    except (InputError, InvalidCategoryError) as e:
        _error(str(e))
        return EXIT_INPUT
    f = f_series_ratfunc(z)
    prefix = ratfunc_series(f, terms - 1)
    sys.stdout.write(f"f(t): {render_ratfunc(f)}\n")
    sys.stdout.write(f"series: {render_vector(prefix.coefficients)}\n")
    if category is not None and nerve_within_limit(category, nerve_limit):
        depth = min(terms, NERVE_CHAIN_LIMIT + 1)
        counts = [count_nondegenerate_chains(category, n) for n in range(depth)]
        sys.stdout.write(f"chains: {render_counts(counts)}\n")
        if tuple(counts) != prefix.coefficients[:depth]:
            _error("chain counts disagree with the series coefficients")
            return EXIT_FAILED
    return EXIT_OK


def cmd_verify(path: Path, config: EulerConfig, fmt: Optional[str] = None) -> int:
    try:
        z, category = load_input(path, fmt)
    except InputError as e:
        _error(str(e))
        return EXIT_INPUT
    except InvalidCategoryError as e:
        sys.stdout.write("category-axioms: FAIL\n")
        for violation in e.violations:
            sys.stdout.write(f"  {violation}\n")
        return EXIT_FAILED
    report = build_report(
        z,
        config.series_terms,
        presentation=category,
        subset_limit=config.subset_limit,
        oracle_limit=config.oracle_limit,
        nerve_limit=config.nerve_limit,
    )
    sys.stdout.write(render_checks(report))
    return EXIT_OK if report.passed else EXIT_FAILED


def cmd_examples(
    name_filter: Optional[str] = None,
    entries: Iterable[CatalogueEntry] = CATALOGUE,
) -> int:
    rows = evaluate(entries, name_filter)
    if not rows:
        _error(f"no catalogue entry matches '{name_filter}'")
        return EXIT_INPUT
    for row in rows:
        sys.stdout.write(render_row(row) + "\n")
    passed = sum(row.passed for row in rows)
    sys.stdout.write(f"{passed}/{len(rows)} rows passed\n")
    return EXIT_OK if passed == len(rows) else EXIT_FAILED


def cmd_gen(
    m: int, max_entry: int, seed: int, output: Optional[Path], fmt: str = MATRIX
) -> int:
    try:
        z = random_category_matrix(m, max_entry, seed)
    except ValueError as e:
        _error(str(e))
        return EXIT_INPUT
    text = (
        render_category(category_from_matrix(z))
        if fmt == CATEGORY
        else render_matrix(z)
    )
    if output is None:
        sys.stdout.write(text)
        return EXIT_OK
    try:
        output.write_text(text)
    except OSError as e:
        _error(f"{output}: {e}")
        return EXIT_INPUT
    return EXIT_OK


def cmd_check_matrix(
    path: Path, budget: int, emit_witness: Optional[Path] = None
) -> int:
    try:
        z = read_matrix_file(path)
    except (OSError, MatrixParseError, ValueError) as e:
        _error(f"{path}: {e}")
        return EXIT_INPUT
    result = is_category_matrix(z, budget)
    sys.stdout.write(f"{result.verdict.value}\n")
    if result.verdict is Verdict.YES and emit_witness is not None:
        assert result.witness is not None
        try:
            write_category_file(result.witness, emit_witness)
        except OSError as e:
            _error(f"{emit_witness}: {e}")
            return EXIT_INPUT
    return EXIT_OK


def _nonnegative(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text}")
    return value


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eulercat",
        description="Euler characteristics of finite categories from their "
        "count matrices",
    )
    parser.add_argument("--config", type=Path, help="JSON config file")
    parser.add_argument(
        "-v", "--verbose", action="store_true", help="debug logging on stderr"
    )
    commands = parser.add_subparsers(dest="command", required=True)
    formats = (MATRIX, CATEGORY)

    report = commands.add_parser("report", help="print every invariant")
    report.add_argument("-i", "--input", type=Path, required=True)
    report.add_argument("--format", choices=formats)
    report.add_argument("--terms", type=_nonnegative)

    series = commands.add_parser("series", help="print the chain generating function")
    series.add_argument("-i", "--input", type=Path, required=True)
    series.add_argument("-n", "--terms", type=_nonnegative, required=True)
    series.add_argument("--format", choices=formats)

    verify = commands.add_parser("verify", help="run the internal cross-checks")
    verify.add_argument("-i", "--input", type=Path, required=True)
    verify.add_argument("--format", choices=formats)

    examples = commands.add_parser("examples", help="recompute the worked examples")
    examples.add_argument("--filter", dest="name_filter")

    gen = commands.add_parser("gen", help="random matrix of a category")
    gen.add_argument("-m", type=_positive, required=True)
    gen.add_argument("--max-entry", type=_positive, required=True)
    gen.add_argument("--seed", type=int, required=True)
    gen.add_argument("-o", "--output", type=Path)
    gen.add_argument("--format", choices=formats, default=MATRIX)

    check = commands.add_parser(
        "check-matrix", help="decide whether a matrix is the matrix of a category"
    )
    check.add_argument("-i", "--input", type=Path, required=True)
    check.add_argument("--budget", type=_nonnegative)
    check.add_argument("--emit-witness", type=Path)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        config = EulerConfig()
        if args.config is not None:
            config = EulerConfig.from_config_file(args.config)
    except (OSError, ValueError) as e:
        _error(f"{args.config}: {e}")
        return EXIT_INPUT
    _logger.debug("Running %s with %s", args.command, config)

    if args.command == "report":
        terms = config.series_terms if args.terms is None else args.terms
        return cmd_report(args.input, terms, config, args.format)
    if args.command == "series":
        return cmd_series(args.input, args.terms, args.format, config.nerve_limit)
    if args.command == "verify":
        return cmd_verify(args.input, config, args.format)
    if args.command == "examples":
        return cmd_examples(args.name_filter)
    if args.command == "gen":
        return cmd_gen(args.m, args.max_entry, args.seed, args.output, args.format)
    budget = config.search_budget if args.budget is None else args.budget
    return cmd_check_matrix(args.input, budget, args.emit_witness)


if __name__ == "__main__":
    sys.exit(main())

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

"""Finite categories listed in full: every arrow and every composite is given
explicitly."""

import itertools
import logging
from collections import defaultdict
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field
from typing import Optional

from ..exactmath import QMatrix

_logger = logging.getLogger(__name__)

UNKNOWN_OBJECT = "unknown-object"
UNKNOWN_ARROW = "unknown-arrow"
DUPLICATE_NAME = "duplicate-name"
IDENTITY = "identity"
SOURCE_TARGET_MISMATCH = "source/target mismatch"
UNDEFINED_COMPOSITE = "composition undefined for composable pair"
IDENTITY_LAW = "identity law"
ASSOCIATIVITY = "associativity"


@dataclass(frozen=True)
class Arrow:
    name: str
    src: str
    tgt: str


@dataclass(frozen=True)
class Violation:
    """A failed category axiom, with the names that witness the failure."""

    law: str
    witnesses: tuple[str, ...]

    def __str__(self) -> str:
        return f"{self.law}: {', '.join(self.witnesses)}"


class InvalidCategoryError(ValueError):
    """Raised when an operation needs a presentation that satisfies the axioms"""

    def __init__(self, violations: Sequence[Violation]) -> None:
        self.violations = tuple(violations)
        shown = "; ".join(str(v) for v in self.violations[:5])
        more = len(self.violations) - 5
        super().__init__(
            f"Not a category ({len(self.violations)} violations): {shown}"
            + (f" and {more} more" if more > 0 else "")
        )


@dataclass(frozen=True)
class CatPresentation:
    """A finite category listed in full.

    :param objects: Object names; their order fixes the order of the rows and
        columns of the count matrix.
    :param arrows: Every arrow, identities included.
    :param identities: Identity arrow name for each object.
    :param composition: ``composition[(g, f)]`` is the name of ``g . f``, defined
        exactly when ``tgt(f) == src(g)``.
    """

    objects: tuple[str, ...]
    arrows: tuple[Arrow, ...]
    identities: Mapping[str, str] = field(hash=False)
    composition: Mapping[tuple[str, str], str] = field(hash=False)

    def arrow(self, name: str) -> Arrow:
        return self._arrow_map()[name]

    def _arrow_map(self) -> dict[str, Arrow]:
        return {a.name: a for a in self.arrows}

    def hom(self, src: str, tgt: str) -> list[Arrow]:
        return [a for a in self.arrows if a.src == src and a.tgt == tgt]

    def is_identity(self, name: str) -> bool:
        return name in set(self.identities.values())

    def compose(self, g: str, f: str) -> Optional[str]:
        return self.composition.get((g, f))

    def non_identity_arrows(self) -> list[Arrow]:
        ids = set(self.identities.values())
        return [a for a in self.arrows if a.name not in ids]


def validate(category: CatPresentation) -> list[Violation]:
    """Check the category axioms; an empty list means ``category`` is valid.

    Structural problems (unknown names, bad identities, ill-typed composites) are
    reported first; the unit and associativity laws are only checked once the
    composition table is total and well typed.
    """
    violations: list[Violation] = []
    objects = set(category.objects)
    if len(objects) != len(category.objects):
        dupes = sorted({o for o in category.objects if category.objects.count(o) > 1})
        violations.append(Violation(DUPLICATE_NAME, tuple(dupes)))
    names = [a.name for a in category.arrows]
    if len(set(names)) != len(names):
        dupes = sorted({n for n in names if names.count(n) > 1})
        violations.append(Violation(DUPLICATE_NAME, tuple(dupes)))
    arrows = category._arrow_map()

    for a in category.arrows:
        for end in (a.src, a.tgt):
            if end not in objects:
                violations.append(Violation(UNKNOWN_OBJECT, (a.name, end)))

    for obj in category.objects:
        ident = category.identities.get(obj)
        if ident is None:
            violations.append(Violation(IDENTITY, (obj,)))
        elif ident not in arrows:
            violations.append(Violation(UNKNOWN_ARROW, (ident,)))
        elif arrows[ident].src != obj or arrows[ident].tgt != obj:
            violations.append(Violation(IDENTITY, (obj, ident)))
    for obj in category.identities:
        if obj not in objects:
            violations.append(Violation(UNKNOWN_OBJECT, (obj,)))

    for (g, f), gf in category.composition.items():
        missing = [n for n in (g, f, gf) if n not in arrows]
        if missing:
            violations.append(Violation(UNKNOWN_ARROW, tuple(missing)))
            continue
        if arrows[f].tgt != arrows[g].src:
            violations.append(Violation(SOURCE_TARGET_MISMATCH, (g, f)))
        elif arrows[gf].src != arrows[f].src or arrows[gf].tgt != arrows[g].tgt:
            violations.append(Violation(SOURCE_TARGET_MISMATCH, (g, f, gf)))

    for f in category.arrows:
        for g in category.arrows:
            if f.tgt == g.src and (g.name, f.name) not in category.composition:
                violations.append(Violation(UNDEFINED_COMPOSITE, (g.name, f.name)))

    if violations:
        return violations

    comp = category.composition
    for f in category.arrows:
        id_src, id_tgt = category.identities[f.src], category.identities[f.tgt]
        if comp[(f.name, id_src)] != f.name:
            violations.append(Violation(IDENTITY_LAW, (f.name, id_src)))
        if comp[(id_tgt, f.name)] != f.name:
            violations.append(Violation(IDENTITY_LAW, (id_tgt, f.name)))

    outgoing = _outgoing(category)
    for f in category.arrows:
        for g in outgoing[f.tgt]:
            gf = comp[(g.name, f.name)]
            for h in outgoing[g.tgt]:
                if comp[(h.name, gf)] != comp[(comp[(h.name, g.name)], f.name)]:
                    witnesses = (h.name, g.name, f.name)
                    violations.append(Violation(ASSOCIATIVITY, witnesses))
    return violations


def ensure_valid(category: CatPresentation) -> None:
    violations = validate(category)
    if violations:
        raise InvalidCategoryError(violations)


def _outgoing(category: CatPresentation) -> dict[str, list[Arrow]]:
    out: dict[str, list[Arrow]] = defaultdict(list)
    for a in category.arrows:
        out[a.src].append(a)
    return out


@dataclass(frozen=True)
class CountMatrix:
    """A square matrix of natural numbers; ``entries[i][j]`` counts arrows i -> j."""

    entries: tuple[tuple[int, ...], ...]

    def __init__(self, entries: Iterable[Iterable[int]]):
        rows = tuple(tuple(int(x) for x in row) for row in entries)
        if any(len(row) != len(rows) for row in rows):
            raise ValueError("A count matrix must be square.")
        if any(x < 0 for row in rows for x in row):
            raise ValueError("Count matrix entries must be nonnegative.")
        object.__setattr__(self, "entries", rows)

    @property
    def dim(self) -> int:
        return len(self.entries)

    def __getitem__(self, index: tuple[int, int]) -> int:
        i, j = index
        return self.entries[i][j]

    def total(self) -> int:
        return sum(sum(row) for row in self.entries)

    def to_qmatrix(self) -> QMatrix:
        return QMatrix(self.entries)

    def to_lists(self) -> list[list[int]]:
        return [list(row) for row in self.entries]

    def is_reflexive(self) -> bool:
        return all(self.entries[i][i] >= 1 for i in range(self.dim))

    def is_transitive(self) -> bool:
        n = self.dim
        return all(
            self.entries[i][k] >= 1
            for i, j, k in itertools.product(range(n), repeat=3)
            if self.entries[i][j] >= 1 and self.entries[j][k] >= 1
        )

    def permuted(self, order: Sequence[int]) -> "CountMatrix":
        """Reorder objects: row/column ``a`` of the result is ``order[a]`` here."""
        if sorted(order) != list(range(self.dim)):
            raise ValueError(
                f"{list(order)} is not a permutation of range({self.dim})."
            )
        return CountMatrix([[self.entries[i][j] for j in order] for i in order])

    def __str__(self) -> str:
        return str(self.to_lists())


def count_matrix(category: CatPresentation) -> CountMatrix:
    """``Z[i][j]`` = number of arrows from object i to object j."""
    ensure_valid(category)
    index = {o: k for k, o in enumerate(category.objects)}
    counts = [[0] * len(index) for _ in index]
    for a in category.arrows:
        counts[index[a.src]][index[a.tgt]] += 1
    return CountMatrix(counts)


def count_nondegenerate_chains(category: CatPresentation, n: int) -> int:
    """Number of chains ``x_0 -> ... -> x_n`` of non-identity arrows.

    Counted by walking the chains themselves, not through the count matrix. A
    0-chain is an object.
    """
    ensure_valid(category)
    if n < 0:
        raise ValueError("Chain length must be nonnegative.")
    if n == 0:
        return len(category.objects)
    outgoing: dict[str, list[Arrow]] = defaultdict(list)
    for a in category.non_identity_arrows():
        outgoing[a.src].append(a)

    def extend(obj: str, remaining: int) -> int:
        if remaining == 1:
            return len(outgoing[obj])
        return sum(extend(a.tgt, remaining - 1) for a in outgoing[obj])

    return sum(extend(obj, n) for obj in category.objects)


def is_isomorphic(category: CatPresentation, a: str, b: str) -> bool:
    """Whether some ``f: a -> b`` and ``g: b -> a`` are mutually inverse."""
    if a == b:
        return True
    id_a, id_b = category.identities[a], category.identities[b]
    return any(
        category.compose(g.name, f.name) == id_a
        and category.compose(f.name, g.name) == id_b
        for f in category.hom(a, b)
        for g in category.hom(b, a)
    )


def full_subcategory(
    category: CatPresentation, objects: Sequence[str]
) -> CatPresentation:
    keep = set(objects)
    arrows = tuple(a for a in category.arrows if a.src in keep and a.tgt in keep)
    names = {a.name for a in arrows}
    return CatPresentation(
        objects=tuple(o for o in category.objects if o in keep),
        arrows=arrows,
        identities={o: category.identities[o] for o in category.objects if o in keep},
        composition={
            (g, f): gf
            for (g, f), gf in category.composition.items()
            if g in names and f in names
        },
    )


def skeleton(category: CatPresentation) -> CatPresentation:
    """Full subcategory on the first object of each isomorphism class.

    Representatives are taken in presentation order, so a skeletal category is
    returned unchanged.
    """
    ensure_valid(category)
    representatives: list[str] = []
    for obj in category.objects:
        if not any(is_isomorphic(category, rep, obj) for rep in representatives):
            representatives.append(obj)
    _logger.debug(
        "Skeleton keeps %d of %d objects", len(representatives), len(category.objects)
    )
    return full_subcategory(category, representatives)


def is_skeletal(category: CatPresentation) -> bool:
    return not any(
        is_isomorphic(category, a, b)
        for a, b in itertools.combinations(category.objects, 2)
    )

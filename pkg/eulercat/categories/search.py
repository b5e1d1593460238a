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

"""Deciding whether a matrix of natural numbers is the matrix of a category."""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .builder import _skeleton_arrows, category_from_matrix, hom_names
from .presentation import CatPresentation, CountMatrix

_logger = logging.getLogger(__name__)

DEFAULT_BUDGET = 10


class Verdict(str, Enum):
    YES = "yes"
    NO = "no"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class SearchResult:
    """Answer of :py:func:`is_category_matrix`; ``witness`` is set iff ``yes``."""

    verdict: Verdict
    witness: Optional[CatPresentation] = None
    nodes: int = 0


class _Search:
    """Backtracking over composition tables with the identities fixed.

    Arrows are integers; ``table[(g, f)]`` holds ``g . f`` for composable
    non-identity pairs once assigned.
    """

    def __init__(self, z: CountMatrix):
        self.z = z
        objects, arrows = _skeleton_arrows(z)
        self.objects = objects
        self.arrows = arrows
        self.index = {a.name: k for k, a in enumerate(arrows)}
        obj_index = {o: i for i, o in enumerate(objects)}
        self.src = [obj_index[a.src] for a in arrows]
        self.tgt = [obj_index[a.tgt] for a in arrows]
        # hom-sets of a category with this matrix all agree up to relabelling, so
        # the identity may be fixed to the first arrow of each diagonal hom-set
        self.identity = [self.index[hom_names(z, i, i)[0]] for i in range(z.dim)]
        self.is_identity = set(self.identity)
        self.hom = {
            (i, j): [self.index[name] for name in hom_names(z, i, j)]
            for i in range(z.dim)
            for j in range(z.dim)
        }
        self.cells = [
            (g, f)
            for g in range(len(arrows))
            for f in range(len(arrows))
            if self.tgt[f] == self.src[g]
            and f not in self.is_identity
            and g not in self.is_identity
        ]
        self.table: dict[tuple[int, int], int] = {}
        self.nodes = 0

    def compose(self, g: int, f: int) -> Optional[int]:
        if f in self.is_identity:
            return g
        if g in self.is_identity:
            return f
        return self.table.get((g, f))

    def _consistent(self, g: int, f: int) -> bool:
        """Associativity on the triples ending or starting with the new cell.

        Only triples whose both bracketings are already known are checked; the
        remaining ones are caught by :py:meth:`_full_check`.
        """
        gf = self.table[(g, f)]
        n = len(self.arrows)
        # (h . g) . f == h . (g . f)
        for h in range(n):
            if self.src[h] != self.tgt[g]:
                continue
            hg = self.compose(h, g)
            if hg is None:
                continue
            left = self.compose(hg, f)
            right = self.compose(h, gf)
            if left is not None and right is not None and left != right:
                return False
        # (g . f) . e == g . (f . e)
        for e in range(n):
            if self.tgt[e] != self.src[f]:
                continue
            fe = self.compose(f, e)
            if fe is None:
                continue
            left = self.compose(gf, e)
            right = self.compose(g, fe)
            if left is not None and right is not None and left != right:
                return False
        return True

    def _full_check(self) -> bool:
        n = len(self.arrows)
        for f in range(n):
            for g in range(n):
                if self.tgt[f] != self.src[g]:
                    continue
                gf = self.compose(g, f)
                for h in range(n):
                    if self.src[h] != self.tgt[g]:
                        continue
                    hg = self.compose(h, g)
                    assert gf is not None and hg is not None
                    if self.compose(h, gf) != self.compose(hg, f):
                        return False
        return True

    def run(self, position: int = 0) -> bool:
        self.nodes += 1
        if position == len(self.cells):
            return self._full_check()
        g, f = self.cells[position]
        for value in self.hom[(self.src[f], self.tgt[g])]:
            self.table[(g, f)] = value
            if self._consistent(g, f) and self.run(position + 1):
                return True
            del self.table[(g, f)]
        return False

    def witness(self) -> CatPresentation:
        names = [a.name for a in self.arrows]
        composition = {}
        for f in range(len(self.arrows)):
            for g in range(len(self.arrows)):
                if self.tgt[f] == self.src[g]:
                    gf = self.compose(g, f)
                    assert gf is not None
                    composition[(names[g], names[f])] = names[gf]
        return CatPresentation(
            objects=self.objects,
            arrows=self.arrows,
            identities={self.objects[i]: names[k] for i, k in enumerate(self.identity)},
            composition=composition,
        )


def is_category_matrix(
    z: CountMatrix, budget: int = DEFAULT_BUDGET, use_lemma: bool = True
) -> SearchResult:
    """Decide whether ``z`` counts the arrows of some finite category.

    Reflexivity and transitivity are checked first (both are necessary). With
    ``use_lemma`` a transitive matrix whose diagonal entries are all at least 2 is
    answered directly by :py:func:`category_from_matrix`. Otherwise the
    composition tables are searched exhaustively, provided the total number of
    arrows is within ``budget``.

    :param z: Candidate matrix.
    :param budget: Largest total arrow count for the exhaustive search.
    :param use_lemma: Whether to short-cut matrices with diagonal entries >= 2.
    :return: ``yes`` with a witness, ``no``, or ``inconclusive`` when the search
        would exceed the budget.
    """
    if not z.is_reflexive() or not z.is_transitive():
        return SearchResult(Verdict.NO)
    if use_lemma and all(z[i, i] >= 2 for i in range(z.dim)):
        return SearchResult(Verdict.YES, category_from_matrix(z))
    if z.total() > budget:
        _logger.debug("%d arrows exceed the search budget %d", z.total(), budget)
        return SearchResult(Verdict.INCONCLUSIVE)
    search = _Search(z)
    found = search.run()
    _logger.debug("Searched %d nodes over %d cells", search.nodes, len(search.cells))
    if found:
        return SearchResult(Verdict.YES, search.witness(), search.nodes)
    return SearchResult(Verdict.NO, None, search.nodes)

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

"""Constructions of categories and of category matrices."""

from collections.abc import Sequence

import numpy as np

from ..exactmath import IndexOutOfRangeError
from .presentation import Arrow, CatPresentation, CountMatrix


class LemmaHypothesisError(ValueError):
    """Raised when a matrix is not known to be the matrix of a category"""

    def __init__(self, reason: str) -> None:
        super().__init__(
            "Expected a transitive matrix with every diagonal entry at least 2: "
            + reason
        )


def object_name(i: int) -> str:
    return f"a{i + 1}"


def arrow_name(i: int, j: int, k: int) -> str:
    """Name of the k-th arrow from object i to object j; k = 0 is an identity."""
    if i == j and k == 0:
        return f"id_{object_name(i)}"
    return f"{object_name(i)}_{object_name(j)}_{k}"


def hom_names(z: CountMatrix, i: int, j: int) -> list[str]:
    """Arrow names of the hom-set i -> j, identity first on the diagonal."""
    start = 0 if i == j else 1
    return [arrow_name(i, j, k) for k in range(start, start + z[i, j])]


def _skeleton_arrows(z: CountMatrix) -> tuple[tuple[str, ...], tuple[Arrow, ...]]:
    objects = tuple(object_name(i) for i in range(z.dim))
    arrows = tuple(
        Arrow(name, objects[i], objects[j])
        for i in range(z.dim)
        for j in range(z.dim)
        for name in hom_names(z, i, j)
    )
    return objects, arrows


def category_from_matrix(z: CountMatrix) -> CatPresentation:
    """Put a category structure on ``z`` arrows.

    Object i gets identity ``1_i`` (the first arrow of its hom-set); for each
    nonempty hom-set a designated arrow ``phi_ij`` is the lowest-indexed
    non-identity arrow. Composites involving an identity are forced, and every
    other composite ``i -> j -> k`` is ``phi_ik``.

    :param z: A transitive matrix whose diagonal entries are all at least 2.
    :raises LemmaHypothesisError: if ``z`` is not of that form.
    """
    n = z.dim
    small = [i for i in range(n) if z[i, i] < 2]
    if small:
        raise LemmaHypothesisError(
            f"diagonal entry {z[small[0], small[0]]} at index {small[0]}"
        )
    if not z.is_transitive():
        raise LemmaHypothesisError("the matrix is not transitive")

    objects, arrows = _skeleton_arrows(z)
    phi = {
        (i, j): hom_names(z, i, j)[1 if i == j else 0]
        for i in range(n)
        for j in range(n)
        if z[i, j]
    }
    identity = {i: arrow_name(i, i, 0) for i in range(n)}
    index = {o: i for i, o in enumerate(objects)}

    composition: dict[tuple[str, str], str] = {}
    for f in arrows:
        for g in arrows:
            if f.tgt != g.src:
                continue
            if f.name == identity[index[f.src]]:
                composition[(g.name, f.name)] = g.name
            elif g.name == identity[index[g.src]]:
                composition[(g.name, f.name)] = f.name
            else:
                composition[(g.name, f.name)] = phi[(index[f.src], index[g.tgt])]
    return CatPresentation(
        objects=objects,
        arrows=arrows,
        identities={objects[i]: identity[i] for i in range(n)},
        composition=composition,
    )


def random_category_matrix(m: int, max_entry: int, seed: int) -> CountMatrix:
    """A random matrix of positive integers with diagonal entries at least 2.

    Off-diagonal entries are uniform in ``[1, max_entry]`` and diagonal entries in
    ``[2, max_entry]``; the same seed gives the same matrix.
    """
    if m < 1 or max_entry < 2:
        raise ValueError("Need m >= 1 and max_entry >= 2.")
    rng = np.random.default_rng(seed)
    entries = rng.integers(1, max_entry + 1, size=(m, m))
    np.fill_diagonal(entries, rng.integers(2, max_entry + 1, size=m))
    return CountMatrix(entries.tolist())


def duplicate_object(z: CountMatrix, i: int) -> CountMatrix:
    """Append a copy of object ``i``: its row and column are repeated, and the new
    diagonal entry is ``z[i, i]``."""
    if not 0 <= i < z.dim:
        raise IndexOutOfRangeError(i, z.dim)
    source = list(range(z.dim)) + [i]
    return CountMatrix([[z[a, b] for b in source] for a in source])


def monoid_category(order: int) -> CatPresentation:
    """The cyclic group of the given order as a one-object category."""
    if order < 1:
        raise ValueError("A monoid has at least one element.")
    names = ["e"] + [f"g{k}" for k in range(1, order)]
    composition = {
        (names[a], names[b]): names[(a + b) % order]
        for a in range(order)
        for b in range(order)
    }
    return CatPresentation(
        objects=("*",),
        arrows=tuple(Arrow(name, "*", "*") for name in names),
        identities={"*": "e"},
        composition=composition,
    )


def indiscrete_category(objects: Sequence[str]) -> CatPresentation:
    """Exactly one arrow between any two objects."""
    arrows = tuple(
        Arrow(f"{a}->{b}" if a != b else f"id_{a}", a, b)
        for a in objects
        for b in objects
    )
    name = {(a.src, a.tgt): a.name for a in arrows}
    return CatPresentation(
        objects=tuple(objects),
        arrows=arrows,
        identities={a: name[(a, a)] for a in objects},
        composition={
            (name[(b, c)], name[(a, b)]): name[(a, c)]
            for a in objects
            for b in objects
            for c in objects
        },
    )


def discrete_category(objects: Sequence[str]) -> CatPresentation:
    return CatPresentation(
        objects=tuple(objects),
        arrows=tuple(Arrow(f"id_{a}", a, a) for a in objects),
        identities={a: f"id_{a}" for a in objects},
        composition={(f"id_{a}", f"id_{a}"): f"id_{a}" for a in objects},
    )


def disjoint_union(first: CatPresentation, second: CatPresentation) -> CatPresentation:
    """Side-by-side union; object and arrow names must not clash."""
    clash = set(first.objects) & set(second.objects) or {
        a.name for a in first.arrows
    } & {a.name for a in second.arrows}
    if clash:
        raise ValueError(f"Names used in both categories: {sorted(clash)}")
    return CatPresentation(
        objects=first.objects + second.objects,
        arrows=first.arrows + second.arrows,
        identities={**first.identities, **second.identities},
        composition={**first.composition, **second.composition},
    )

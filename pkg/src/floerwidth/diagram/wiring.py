"""Build diagrams from crossing wirings: braid closures, plats and knot families built on them."""

from __future__ import annotations

from collections.abc import Hashable, Iterable, Iterator, Sequence
from itertools import count
from typing import NamedTuple

from networkx.utils import UnionFind

from floerwidth.core.exceptions import InvalidDiagramError
from floerwidth.core.types import PDTuple, Quadrant
from floerwidth.diagram.model import LinkDiagram

Wiring = Sequence[tuple[Hashable, Hashable, Hashable, Hashable]]


def from_wiring(
    crossings: Wiring,
    unknots: int = 0,
    incoming: Iterable[Quadrant] | None = None,
) -> LinkDiagram:
    """
    Number the arcs of a wired crossing list and orient every component.

    Each tuple lists four arc labels counterclockwise with the under strand on
    slots 0 and 2; labels may be any hashable values, each used exactly twice.
    Components are walked in crossing order and numbered consecutively from 1,
    and each tuple is rotated so that its incoming under arc comes first.
    ``incoming`` optionally names (crossing, slot) ends known to point into
    their crossing, so that walks keep that direction.
    """
    ends: dict[Hashable, list[Quadrant]] = {}
    for index, crossing in enumerate(crossings):
        for slot, label in enumerate(crossing):
            ends.setdefault(label, []).append((index, slot))
    partners: dict[Quadrant, Quadrant] = {}
    for label, pair in ends.items():
        if len(pair) != 2:
            raise InvalidDiagramError(
                f"wiring label {label!r} is used {len(pair)} times, expected 2",
                crossing=pair[0][0],
            )
        partners[pair[0]] = pair[1]
        partners[pair[1]] = pair[0]

    known_incoming = set(incoming or ())
    labels: dict[Quadrant, int] = {}
    arriving: set[Quadrant] = set()
    walks: list[list[Quadrant]] = []
    fresh = count(1)
    for index in range(len(crossings)):
        for slot in (2, 1, 3, 0):
            start = (index, slot)
            if start in labels or start in known_incoming:
                continue
            current = start
            walks.append([])
            while True:
                far = partners[current]
                walks[-1].extend((current, far))
                labels[current] = labels[far] = next(fresh)
                arriving.add(far)
                current = (far[0], (far[1] + 2) % 4)
                if current == start:
                    break

    # Two-arc components that only pass over must run the way the numbering
    # reads them: lowest arc into the lower-indexed crossing.
    swap: dict[int, int] = {}
    for walk in walks:
        if len(walk) != 4 or any(slot % 2 == 0 for _, slot in walk):
            continue
        lowest = labels[walk[0]]
        head = walk[1]
        if head[0] != min(walk[0][0], walk[1][0]):
            swap.update({lowest: lowest + 1, lowest + 1: lowest})

    numbered: list[PDTuple] = []
    for index in range(len(crossings)):
        a, b, c, d = (labels[(index, slot)] for slot in range(4))
        a, b, c, d = (swap.get(a, a), swap.get(b, b), swap.get(c, c), swap.get(d, d))
        numbered.append((a, b, c, d) if (index, 0) in arriving else (c, d, a, b))
    return LinkDiagram(crossings=tuple(numbered), unknots=unknots)


def close_up(
    crossings: Sequence[PDTuple],
    identify: Iterable[tuple[int, int]],
    labels: Iterable[int],
    unknots: int = 0,
    incoming: set[Quadrant] | None = None,
) -> LinkDiagram:
    """
    Glue arc labels together and renumber.

    Every label in ``labels`` ends up on a crossing or, if its class is used by
    no crossing, in a new unknot circle.
    """
    merged = UnionFind(labels)
    for first, second in identify:
        merged.union(first, second)
    wired: list[PDTuple] = [
        (merged[a], merged[b], merged[c], merged[d]) for a, b, c, d in crossings
    ]
    present = {merged[label] for crossing in crossings for label in crossing}
    loops = {merged[label] for label in list(merged)} - present
    return from_wiring(wired, unknots=unknots + len(loops), incoming=incoming)


def _weave(
    word: Sequence[int], strands: int
) -> tuple[list[tuple[int, int, int, int]], list[int], int, set[Quadrant]]:
    """Stack the generators of ``word`` bottom to top on ``strands`` upward strands."""
    fresh = count(strands)
    current = list(range(strands))
    crossings: list[tuple[int, int, int, int]] = []
    incoming: set[Quadrant] = set()
    for generator in word:
        position = abs(generator) - 1
        if generator == 0 or position + 1 >= strands:
            raise ValueError(f"generator {generator} does not act on {strands} strands")
        left, right = current[position], current[position + 1]
        up_left, up_right = next(fresh), next(fresh)
        index = len(crossings)
        if generator > 0:
            crossings.append((right, up_left, up_right, left))
            incoming.update({(index, 0), (index, 3)})
        else:
            crossings.append((left, right, up_left, up_right))
            incoming.update({(index, 0), (index, 1)})
        current[position], current[position + 1] = up_right, up_left
    return crossings, current, next(fresh), incoming


def braid_closure(word: Sequence[int]) -> LinkDiagram:
    """
    Closure of a braid word; generator i > 0 is a positive crossing of strands i and i+1.

    Strands that meet no crossing become unknot circles.
    """
    if not word:
        raise ValueError("braid word is empty")
    if 0 in word:
        raise ValueError("generator index 0 is not allowed")
    strands = max(abs(generator) for generator in word) + 1
    crossings, top, used, incoming = _weave(word, strands)
    identify = zip(top, range(strands), strict=True)
    return close_up(crossings, identify, range(used), incoming=incoming)


def plat_closure(
    word: Sequence[int],
    strands: int,
    bottom_caps: Sequence[tuple[int, int]],
    top_caps: Sequence[tuple[int, int]] | None = None,
) -> LinkDiagram:
    """
    Plat closure of a braid word on an even number of strands.

    Caps are pairs of 1-based strand positions joined below and above the braid.
    """
    if strands < 2 or strands % 2:
        raise ValueError(f"plat closure needs an even number of strands, got {strands}")
    top_caps = bottom_caps if top_caps is None else top_caps
    for caps in (bottom_caps, top_caps):
        positions = sorted(p for cap in caps for p in cap)
        if positions != list(range(1, strands + 1)):
            raise ValueError(f"caps {list(caps)} must pair every strand 1..{strands} once")
    crossings, top, used, _ = _weave(word, strands)
    identify = [(p - 1, q - 1) for p, q in bottom_caps]
    identify += [(top[p - 1], top[q - 1]) for p, q in top_caps]
    return close_up(crossings, identify, range(used))


def rational_knot(coefficients: Sequence[int]) -> LinkDiagram:
    """
    2-bridge knot or link from Conway notation, as an alternating 4-plat.

    Twist regions alternate between positive sigma_2 and negative sigma_1
    powers; an even-length notation ends with (a_n - 1, 1).
    """
    if not coefficients or any(a < 1 for a in coefficients):
        raise ValueError("Conway notation needs positive integers")
    terms = list(coefficients)
    if len(terms) % 2 == 0:
        terms[-1:] = [terms[-1] - 1, 1]
    word: list[int] = []
    for k, twists in enumerate(terms):
        word.extend([2] * twists if k % 2 == 0 else [-1] * twists)
    return plat_closure(word, 4, [(1, 2), (3, 4)])


def pretzel_knot(twists: Sequence[int]) -> LinkDiagram:
    """Pretzel diagram P(p1, ..., pk): one vertical twist column per entry."""
    if len(twists) < 2 or 0 in twists:
        raise ValueError("pretzel notation needs at least two nonzero twist counts")
    strands = 2 * len(twists)
    word: list[int] = []
    for column, twist in enumerate(twists):
        generator = 2 * column + 1
        word.extend([generator if twist > 0 else -generator] * abs(twist))
    caps = [(2 * k, 2 * k + 1) for k in range(1, len(twists))] + [(1, strands)]
    return plat_closure(word, strands, caps)


class _Tangle(NamedTuple):
    """Wired crossings of a four-ended tangle and the labels at its NW, NE, SW, SE ends."""

    crossings: tuple[tuple[int, int, int, int], ...]
    ends: tuple[int, int, int, int]


def _twists(fresh: Iterator[int], twists: int) -> _Tangle:
    """Horizontal twists; a positive crossing has its over strand running SW to NE."""
    nw, sw = next(fresh), next(fresh)
    west = (nw, sw)
    crossings: list[tuple[int, int, int, int]] = []
    for _ in range(abs(twists)):
        ne, se = next(fresh), next(fresh)
        crossings.append((nw, sw, se, ne) if twists > 0 else (sw, se, ne, nw))
        nw, sw = ne, se
    return _Tangle(tuple(crossings), (west[0], nw, west[1], sw))


def _reflect(tangle: _Tangle) -> _Tangle:
    """Mirror in the NW-SE diagonal: NE and SW trade places."""
    nw, ne, sw, se = tangle.ends
    return _Tangle(tuple((a, d, c, b) for a, b, c, d in tangle.crossings), (nw, sw, ne, se))


def _add(left: _Tangle, right: _Tangle) -> _Tangle:
    """Place ``right`` beside ``left``, gluing NE to NW and SE to SW."""
    nw, ne, sw, se = right.ends
    glue = {nw: left.ends[1], sw: left.ends[3]}
    crossings = tuple(
        (glue.get(a, a), glue.get(b, b), glue.get(c, c), glue.get(d, d))
        for a, b, c, d in right.crossings
    )
    return _Tangle(
        left.crossings + crossings,
        (left.ends[0], glue.get(ne, ne), left.ends[2], glue.get(se, se)),
    )


def _rational_tangle(fresh: Iterator[int], terms: Sequence[int]) -> _Tangle:
    tangle = _twists(fresh, terms[0])
    for twists in terms[1:]:
        tangle = _add(_reflect(tangle), _twists(fresh, twists))
    return tangle


def montesinos_knot(tangles: Sequence[Sequence[int]]) -> LinkDiagram:
    """
    Montesinos diagram from a row of rational tangles in Conway notation.

    Each tangle is reflected into a column and the columns are added left to
    right before the top and bottom ends are joined, so ``[[3], [2, 1], [2]]``
    is ``3,21,2`` and a trailing ``[-1]`` column is the ``-`` suffix. With
    every term positive the diagram is alternating.
    """
    if not tangles or any(not terms or 0 in terms for terms in tangles):
        raise ValueError("Montesinos notation needs nonempty tangles of nonzero twists")
    fresh = count(1)
    row = _reflect(_rational_tangle(fresh, tangles[0]))
    for terms in tangles[1:]:
        row = _add(row, _reflect(_rational_tangle(fresh, terms)))
    nw, ne, sw, se = row.ends
    close = {ne: nw, se: sw}
    return from_wiring(
        [
            (close.get(a, a), close.get(b, b), close.get(c, c), close.get(d, d))
            for a, b, c, d in row.crossings
        ]
    )

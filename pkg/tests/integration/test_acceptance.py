"""End-to-end invariant checks over the bundled catalog and random braid and plat closures."""

from __future__ import annotations

import random
from collections import Counter

import pytest
import sympy as sp

from floerwidth.catalog.loader import CatalogLoader
from floerwidth.core.types import CheckName
from floerwidth.diagram.model import LinkDiagram, change_crossing, mirror
from floerwidth.diagram.parser import canonical_form
from floerwidth.diagram.wiring import braid_closure, plat_closure
from floerwidth.skein.normalized import skein_check
from floerwidth.states.width import (
    X,
    bigrading_table,
    graded_euler_characteristic,
    predict_width_change,
    width,
)
from floerwidth.tait.graphs import (
    cycle_conditions,
    is_alternating,
    labeled_tait_graphs,
    spanning_tree_count,
)
from floerwidth.turaev.genus import predict_genus_change, turaev_genus_diagram, turaev_report
from floerwidth.verify.runner import VerificationRunner


@pytest.fixture(scope="module")
def bundled():
    return CatalogLoader().load_bundled().catalog


def _random_knot_braids(count: int, seed: int) -> list[list[int]]:
    """Braid words on 2-4 strands using every generator, closing up to a knot."""
    rng = random.Random(seed)
    words: list[list[int]] = []
    while len(words) < count:
        strands = rng.randint(2, 4)
        length = rng.randint(strands - 1, 10)
        word = [rng.choice([1, -1]) * rng.randint(1, strands - 1) for _ in range(length)]
        if {abs(g) for g in word} != set(range(1, strands)):
            continue
        if braid_closure(word).is_knot:
            words.append(word)
    return words


def _noncrossing_caps(rng: random.Random, positions: list[int]) -> list[tuple[int, int]]:
    """Random planar pairing of an even run of strand positions."""
    if not positions:
        return []
    partner = 2 * rng.randrange(len(positions) // 2) + 1
    inside, outside = positions[1:partner], positions[partner + 1 :]
    return [
        (positions[0], positions[partner]),
        *_noncrossing_caps(rng, inside),
        *_noncrossing_caps(rng, outside),
    ]


def _random_knot_plats(count: int, seed: int) -> list[LinkDiagram]:
    """Plat closures on 4-8 strands with random words and caps, closing up to a knot."""
    rng = random.Random(seed)
    diagrams: list[LinkDiagram] = []
    while len(diagrams) < count:
        strands = rng.choice([4, 6, 8])
        word = [
            rng.choice([1, -1]) * rng.randint(1, strands - 1)
            for _ in range(rng.randint(1, 10))
        ]
        positions = list(range(1, strands + 1))
        bottom = _noncrossing_caps(rng, positions)
        top = _noncrossing_caps(rng, positions)
        diagram = plat_closure(word, strands, bottom, top)
        if diagram.is_knot and diagram.crossing_count:
            diagrams.append(diagram)
    return diagrams


class TestKnot819:
    """Tests for the worked example of the torus knot 8_19."""

    def test_bigrading_table(self, knot_8_19, table_8_19):
        """Test every nonzero count of the state table."""
        table = bigrading_table(knot_8_19)
        expected = {(a, m): n for a, row in table_8_19.items() for m, n in row.items()}
        assert table.as_dict() == expected
        assert table.total == 27
        assert (table.diagonal_max, table.diagonal_min, table.width) == (3, 2, 2)

    def test_cellulation(self, knot_8_19):
        """Test V, E, F and the torus."""
        report = turaev_report(knot_8_19)
        assert (report.vertices, report.edges, report.faces) == (3, 8, 5)
        assert report.genus == (1,)

    def test_euler_characteristic(self, knot_8_19):
        """Test the graded Euler characteristic is the Alexander polynomial."""
        polynomial = graded_euler_characteristic(bigrading_table(knot_8_19))
        expected = X**3 - X**2 + 1 - X**-2 + X**-3
        assert sp.expand(polynomial - expected) == 0

    def test_canonical_form(self, knot_8_19):
        """Test the sorted PD text."""
        assert canonical_form(knot_8_19).startswith("PD[X(2,8,3,7),X(4,2,5,1)")


class TestBundledCatalog:
    """Tests for theorems across the bundled catalog."""

    def test_alternating_entries(self, bundled):
        """Test reduced alternating diagrams have width one and genus zero."""
        for entry in bundled.entries:
            diagram = entry.diagram()
            if not is_alternating(diagram):
                continue
            assert width(diagram) == 1, entry.name
            assert turaev_genus_diagram(diagram) == 0, entry.name

    def test_width_is_genus_plus_one(self, bundled):
        """Test width against the Turaev genus and the declared values."""
        for entry in bundled.entries:
            diagram = entry.diagram()
            value = width(diagram)
            assert value == turaev_genus_diagram(diagram) + 1, entry.name
            if entry.known_width is not None:
                assert value == entry.known_width, entry.name

    def test_state_count_is_spanning_tree_count(self, bundled):
        """Test the number of Kauffman states."""
        for entry in bundled.filter(8):
            diagram = entry.diagram()
            _, t1, t2 = labeled_tait_graphs(diagram)
            total = bigrading_table(diagram).total
            assert total == spanning_tree_count(t1) == spanning_tree_count(t2), entry.name

    def test_skein_residuals(self, bundled):
        """Test the skein relations at every crossing."""
        for entry in bundled.filter(8):
            diagram = entry.diagram()
            for crossing in range(diagram.crossing_count):
                assert skein_check(diagram, crossing).residuals == (0, 0, 0), entry.name

    @pytest.mark.slow
    def test_crossing_change_predictions(self, bundled):
        """Test predicted width changes at every crossing up to eight crossings."""
        for entry in bundled.filter(8):
            diagram = entry.diagram()
            before = width(diagram)
            for crossing in range(diagram.crossing_count):
                after = width(change_crossing(diagram, crossing))
                assert after - before == predict_width_change(diagram, crossing), (
                    entry.name,
                    crossing,
                )

    @pytest.mark.slow
    def test_full_verification(self, bundled):
        """Test every check on every entry."""
        summary = VerificationRunner(list(CheckName)).run(bundled)
        assert summary.failures == []


class TestCrossingChangeCases:
    """Tests for every cycle-condition case of the crossing-change predictions."""

    def test_every_case_occurs_and_holds(self, bundled):
        """Test predicted width and genus changes over small knots, mirrors and changes."""
        diagrams = []
        for entry in bundled.filter(5):
            for base in (entry.diagram(), mirror(entry.diagram())):
                diagrams.append(base)
                diagrams.extend(change_crossing(base, c) for c in range(base.crossing_count))

        seen: Counter[tuple[bool, bool]] = Counter()
        for diagram in diagrams:
            before_width = width(diagram)
            before_genus = turaev_genus_diagram(diagram)
            for crossing in range(diagram.crossing_count):
                conditions = cycle_conditions(diagram, crossing)
                seen[(conditions.positive_in_cycle, conditions.negative_in_cycle)] += 1
                changed = change_crossing(diagram, crossing)
                predicted = predict_width_change(diagram, crossing)
                assert width(changed) - before_width == predicted, (str(diagram), crossing)
                assert turaev_genus_diagram(changed) - before_genus == predicted
                assert predict_genus_change(diagram, crossing) == predicted

        assert set(seen) == {(True, True), (True, False), (False, True), (False, False)}

    def test_changed_trefoil(self, trefoil):
        """Test the width drops back at the crossing that was changed."""
        changed = change_crossing(trefoil, 0)
        conditions = cycle_conditions(changed, 0)
        assert (conditions.positive_in_cycle, conditions.negative_in_cycle) == (False, False)
        assert width(changed) == 2
        assert width(change_crossing(changed, 0)) == 1


class TestRandomBraids:
    """Tests for random braid closures with at most ten crossings."""

    @pytest.mark.slow
    def test_width_is_genus_plus_one(self):
        """Test a thousand random knot diagrams."""
        for word in _random_knot_braids(1000, seed=20):
            diagram = braid_closure(word)
            assert width(diagram) == turaev_genus_diagram(diagram) + 1, word

    def test_small_sample(self):
        """Test a quick sample of the same family."""
        for word in _random_knot_braids(25, seed=7):
            diagram = braid_closure(word)
            assert diagram.crossing_count <= 10
            assert width(diagram) == turaev_genus_diagram(diagram) + 1, word


class TestRandomPlats:
    """Tests for random plat closures on up to eight strands with random caps."""

    @pytest.mark.slow
    def test_width_is_genus_plus_one(self):
        """Test a thousand random knot diagrams."""
        for diagram in _random_knot_plats(1000, seed=31):
            assert width(diagram) == turaev_genus_diagram(diagram) + 1, str(diagram)

    def test_small_sample(self):
        """Test a quick sample of the same family."""
        diagrams = _random_knot_plats(25, seed=5)
        assert {d.crossing_count for d in diagrams} <= set(range(1, 11))
        for diagram in diagrams:
            assert width(diagram) == turaev_genus_diagram(diagram) + 1, str(diagram)

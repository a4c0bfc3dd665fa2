"""The 4-valent plane graph of a diagram: faces, checkerboard coloring, marked edge."""

from __future__ import annotations

from collections import deque

from pydantic import BaseModel, ConfigDict, Field

from floerwidth.core.exceptions import NonPlanarDiagramError, SplitDiagramError, UnknownArcError
from floerwidth.core.types import FaceColor, Quadrant
from floerwidth.diagram.model import LinkDiagram, slot_partners


class PlaneMap(BaseModel):
    """
    Faces and coloring of a non-split diagram.

    Faces are numbered in order of their first quadrant (crossing-major,
    quadrant-minor). The black class is the face on the left of the lowest
    arc, so crossing changes keep the coloring.
    """

    model_config = ConfigDict(frozen=True)

    diagram: LinkDiagram
    faces: tuple[tuple[Quadrant, ...], ...] = Field(..., description="Quadrants of each face")
    face_of: dict[Quadrant, int] = Field(..., description="Face index of each quadrant")
    colors: tuple[FaceColor, ...] = Field(..., description="Color of each face")
    marked_edge: int = Field(..., description="The marked arc epsilon")
    q_face: int = Field(..., description="Black face incident to the marked arc")
    r_face: int = Field(..., description="White face incident to the marked arc")

    @property
    def face_count(self) -> int:
        return len(self.faces)

    def faces_of_color(self, color: FaceColor) -> list[int]:
        return [face for face, c in enumerate(self.colors) if c is color]

    def sides(self, arc: int) -> tuple[int, int]:
        """(left, right) faces of an arc, looking along its orientation."""
        crossing, slot = self.diagram.tail(arc)
        return self.face_of[(crossing, slot)], self.face_of[(crossing, (slot - 1) % 4)]

    def quadrant_color(self, crossing: int, quadrant: int) -> FaceColor:
        return self.colors[self.face_of[(crossing, quadrant)]]


def _two_color(
    faces: list[tuple[Quadrant, ...]], face_of: dict[Quadrant, int], crossings: int
) -> list[int]:
    """Parity classes: quadrants 0,2 of a crossing agree, quadrants 0,1 differ."""
    links: dict[int, list[tuple[int, int]]] = {face: [] for face in range(len(faces))}
    for crossing in range(crossings):
        f = [face_of[(crossing, q)] for q in range(4)]
        for u, v, parity in ((f[0], f[2], 0), (f[1], f[3], 0), (f[0], f[1], 1)):
            links[u].append((v, parity))
            links[v].append((u, parity))
    parity_of: dict[int, int] = {}
    for root in range(len(faces)):
        if root in parity_of:
            continue
        parity_of[root] = 0
        queue = deque([root])
        while queue:
            face = queue.popleft()
            for other, parity in links[face]:
                expected = parity_of[face] ^ parity
                if other not in parity_of:
                    parity_of[other] = expected
                    queue.append(other)
                elif parity_of[other] != expected:
                    raise NonPlanarDiagramError(
                        "checkerboard coloring conflict",
                        crossing=faces[other][0][0],
                        details={"faces": [face, other]},
                    )
    return [parity_of[face] for face in range(len(faces))]


def build_map(
    diagram: LinkDiagram,
    marked_edge: int | None = None,
    flip_colors: bool = False,
) -> PlaneMap:
    """
    Build the plane map of a non-split diagram with at least one crossing.

    Args:
        diagram: Validated diagram.
        marked_edge: The arc epsilon; defaults to the lowest arc.
        flip_colors: Swap the roles of black and white.

    Raises:
        SplitDiagramError: Diagram is split or crossingless.
        UnknownArcError: ``marked_edge`` is not an arc of the diagram.
        NonPlanarDiagramError: Coloring conflict.
    """
    if diagram.is_split or not diagram.crossings:
        raise SplitDiagramError(diagram.split_part_count, diagram.crossing_count)
    arcs = diagram.arcs
    epsilon = arcs[0] if marked_edge is None else marked_edge
    if epsilon not in arcs:
        raise UnknownArcError(epsilon)

    partners = slot_partners(diagram.crossings)
    faces = list(diagram.orientation.faces)
    face_of = {quadrant: n for n, face in enumerate(faces) for quadrant in face}
    for (crossing, slot), (other, other_slot) in partners.items():
        if face_of[(crossing, slot)] != face_of[(other, (other_slot - 1) % 4)]:
            raise NonPlanarDiagramError("face tracing is inconsistent", crossing=crossing)

    parity = _two_color(faces, face_of, diagram.crossing_count)
    crossing, slot = diagram.tail(arcs[0])
    black_parity = parity[face_of[(crossing, slot)]] ^ int(flip_colors)
    colors = tuple(
        FaceColor.BLACK if p == black_parity else FaceColor.WHITE for p in parity
    )

    crossing, slot = diagram.tail(epsilon)
    left, right = face_of[(crossing, slot)], face_of[(crossing, (slot - 1) % 4)]
    q_face, r_face = (left, right) if colors[left] is FaceColor.BLACK else (right, left)

    return PlaneMap(
        diagram=diagram,
        faces=tuple(faces),
        face_of=face_of,
        colors=colors,
        marked_edge=epsilon,
        q_face=q_face,
        r_face=r_face,
    )

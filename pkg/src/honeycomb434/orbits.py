"""Vertex orbits, transporter witnesses and stabilizers on the torus."""

from __future__ import annotations

from typing import NamedTuple

from .isometry import IDENTITY, Isometry
from .quotient import SubgroupError, TorusGroup, TorusSubgroup

Vec = tuple[int, int, int]

Acting = TorusGroup | TorusSubgroup


class Orbit(NamedTuple):
    index: int
    representative: Vec
    vertices: tuple[Vec, ...]  # sorted lexicographically
    # for each vertex, an element of the acting group sending the
    # representative to it; witness[representative] is the identity
    witness: dict[Vec, Isometry]


class OrbitDecomposition(NamedTuple):
    group: Acting
    orbits: tuple[Orbit, ...]
    vertex_orbit: dict[Vec, int]

    def orbit_of(self, v: Vec) -> Orbit:
        return self.orbits[self.vertex_orbit[tuple(v)]]


class Stabilizer(NamedTuple):
    vertex: Vec
    elements: frozenset[Isometry]

    @property
    def order(self) -> int:
        return len(self.elements)


def decompose(acting: Acting) -> OrbitDecomposition:
    """Partition the torus vertices into orbits of the acting group.

    Vertices are scanned in lexicographic order and each orbit is grown by
    breadth-first application of the generator elements only, so the
    representative is the lexicographically smallest vertex of its orbit,
    discovery order is deterministic, and witnesses stay short.
    """
    gens = acting.generator_elements
    identity = acting.parent.reduce(IDENTITY)
    orbits: list[Orbit] = []
    vertex_orbit: dict[Vec, int] = {}
    for start in acting.vertices():
        if start in vertex_orbit:
            continue
        idx = len(orbits)
        witness: dict[Vec, Isometry] = {start: identity}
        vertex_orbit[start] = idx
        frontier = [start]
        while frontier:
            nxt = []
            for v in frontier:
                for g in gens:
                    w = acting.act(g, v)
                    if w not in witness:
                        witness[w] = acting.mul(g, witness[v])
                        vertex_orbit[w] = idx
                        nxt.append(w)
            frontier = nxt
        orbits.append(Orbit(idx, start, tuple(sorted(witness)), witness))
    return OrbitDecomposition(acting, tuple(orbits), vertex_orbit)


def stabilizer(acting: Acting, v) -> Stabilizer:
    """All elements of the acting group fixing the vertex on the torus."""
    v = tuple(c % acting.parent.modulus for c in v)
    return Stabilizer(v, frozenset(g for g in acting.elements if acting.act(g, v) == v))


def stabilizer_contained(acting: Acting, v, j: TorusSubgroup) -> bool:
    """Does J contain the full stabilizer of v in the acting group?

    This is the admissibility condition for coloring the orbit of v by the
    left cosets of J."""
    if not j.elements <= acting.elements:
        raise SubgroupError("J is not contained in the acting group")
    return stabilizer(acting, v).elements <= j.elements

"""Crystal-structure models built on top of vertex colorings.

Each model pairs a colored torus with element symbols for the
non-background colors.  Four presets cover the classic cubic families:
rock salt (two interpenetrating face-centered patterns), the NbO net
(ordered vacancies on a rock-salt frame), the ReO3 net (corner-sharing
octahedra with an empty body position), and the perovskite net (ReO3
plus an occupied body position).  Other compounds with the same
geometry, e.g. BaTiO3 or AgCl, come from `substitute`.

Exports: `xyz` lists occupied sites over a block of unit cells (one
unit cell per torus period), `off` renders every site as a small
colored cube, and `report` summarizes the group data, the color table,
and the derived stoichiometry.
"""

from __future__ import annotations

from typing import Iterable, Mapping, NamedTuple

from .coloring import (
    OrbitPlan,
    VertexColoring,
    build_coloring,
    color_group,
    stoichiometry,
)
from .orbits import decompose
from .quotient import TorusSubgroup, build_group, build_subgroup, certify_translations, index

Vec = tuple[int, int, int]

PALETTE: dict[str, tuple[int, int, int]] = {
    "light-blue": (120, 180, 255),
    "white": (245, 245, 245),
    "dark-blue": (20, 60, 160),
    "green": (40, 160, 70),
    "red": (200, 30, 40),
    "orange": (240, 140, 30),
    "black": (20, 20, 20),
    "yellow": (240, 210, 40),
    "brown": (140, 90, 50),
}
FALLBACK_COLOR = (128, 128, 128)

# generating words for the subgroup lattice the presets draw from
WORDS_FULL = ("P", "Q", "R", "S")
WORDS_HALF = ("Q", "R", "S", "PQP")  # index 2: alternating-parity subgroup
WORDS_QUARTER = ("Q", "R", "S", "QPQRQPQRP")  # index 4: adds the body-center inversion
WORDS_EIGHTH = ("Q", "R", "S", "(SRQPQR)^2")  # index 8: translations doubled


class CrystalModel(NamedTuple):
    family: str
    coloring: VertexColoring

    @property
    def modulus(self) -> int:
        return self.coloring.modulus

    @property
    def element_map(self) -> dict[str, str]:
        return {
            info.label: info.element
            for info in self.coloring.color_table
            if info.element is not None
        }

    @property
    def composition(self) -> tuple[tuple[str, int], ...]:
        """(element, sites per period) for the occupied colors, table order."""
        counts = self.coloring.counts()
        return tuple(
            (info.element, counts[info.label])
            for info in self.coloring.color_table
            if not info.background and info.element is not None
        )

    @property
    def formula(self) -> str:
        return formula_of(self.coloring)


def formula_of(coloring: VertexColoring) -> str:
    """Reduced formula: subscripts ascending, ties kept in color-table
    order; the element order mirrors the reduced ratio."""
    st = stoichiometry(coloring)
    symbols = {info.label: info.element for info in coloring.color_table}
    missing = [label for label in st.ratio_labels if symbols[label] is None]
    if missing:
        raise ValueError(f"colors without element symbols: {missing}")
    return "".join(
        symbols[label] + (str(c) if c > 1 else "")
        for label, c in zip(st.ratio_labels, st.ratio)
    )


class _Preset(NamedTuple):
    group: tuple[str, ...]
    plans: tuple[tuple[Vec, tuple[str, ...], tuple[str, ...]], ...]  # anchor, subgroup words, labels
    background: str | None
    elements: dict[str, str]


_PRESETS: dict[str, _Preset] = {
    "rock-salt": _Preset(
        group=WORDS_FULL,
        plans=(((0, 0, 0), WORDS_HALF, ("light-blue", "white")),),
        background=None,
        elements={"light-blue": "Na", "white": "Cl"},
    ),
    "nbo": _Preset(
        group=WORDS_QUARTER,
        plans=(((0, 0, 1), WORDS_EIGHTH, ("dark-blue", "green")),),
        background="white",
        elements={"dark-blue": "O", "green": "Nb"},
    ),
    "reo3": _Preset(
        group=WORDS_EIGHTH,
        plans=(
            ((0, 0, 0), WORDS_EIGHTH, ("red",)),
            ((0, 0, 1), WORDS_EIGHTH, ("orange",)),
        ),
        background="white",
        elements={"red": "Re", "orange": "O"},
    ),
    "perovskite": _Preset(
        group=WORDS_EIGHTH,
        plans=(
            ((0, 0, 0), WORDS_EIGHTH, ("black",)),
            ((0, 1, 1), WORDS_EIGHTH, ("brown",)),
            ((1, 1, 1), WORDS_EIGHTH, ("yellow",)),
        ),
        background="white",
        elements={"black": "Ca", "brown": "O", "yellow": "Ti"},
    ),
}

_DISPLAY = {"rock-salt": "rock-salt", "nbo": "NbO", "reo3": "ReO3", "perovskite": "perovskite"}
PRESET_NAMES = tuple(sorted(_DISPLAY.values()))


def preset(name: str, modulus: int = 2, radius: int = 24) -> CrystalModel:
    """Build one of the bundled families on the torus of the given period.

    Names are case-insensitive.  Plans pick their orbit through an anchor
    vertex, so the construction fails loudly if a larger period splits the
    pattern."""
    key = name.lower()
    try:
        entry = _PRESETS[key]
    except KeyError:
        raise ValueError(f"unknown family {name!r}; known: {', '.join(PRESET_NAMES)}") from None
    group = build_group(modulus)
    h = certify_translations(build_subgroup(group, entry.group), radius)
    decomp = decompose(h)
    cache: dict[tuple[str, ...], TorusSubgroup] = {}
    plans = []
    for anchor, words, labels in entry.plans:
        if words not in cache:
            cache[words] = certify_translations(build_subgroup(group, words), radius)
        plans.append(OrbitPlan(decomp.orbit_of(anchor).index, cache[words], labels))
    coloring = build_coloring(h, plans, background=entry.background)
    return CrystalModel(_DISPLAY[key], coloring.with_elements(entry.elements))


def substitute(
    model: CrystalModel, elements: Mapping[str, str], family: str | None = None
) -> CrystalModel:
    """Same geometry, different occupants.  The map must cover exactly the
    non-background colors."""
    need = {
        info.label for info in model.coloring.color_table if not info.background
    }
    if set(elements) != need:
        raise ValueError(
            f"substitution must name exactly the occupied colors {sorted(need)}, "
            f"got {sorted(elements)}"
        )
    return CrystalModel(family or model.family, model.coloring.with_elements(elements))


def _region_shape(model: CrystalModel, region) -> tuple[int, int, int]:
    a, b, c = (int(r) for r in region)
    if min(a, b, c) < 0:
        raise ValueError(f"region must be non-negative, got {region}")
    n = model.modulus
    return a * n, b * n, c * n


def export_xyz(model: CrystalModel, region=(1, 1, 1)) -> str:
    """Occupied sites over region unit cells, one period per cell, as an
    xyz file in lattice units.  Vacancies are omitted."""
    sx, sy, sz = _region_shape(model, region)
    coloring = model.coloring
    table = coloring.color_table
    rows = []
    for x in range(sx):
        for y in range(sy):
            for z in range(sz):
                info = table[coloring.color_id((x, y, z))]
                if info.background:
                    continue
                if info.element is None:
                    raise ValueError(f"color {info.label!r} has no element symbol")
                rows.append(f"{info.element} {x} {y} {z}")
    a, b, c = (int(r) for r in region)
    comment = (
        f"{model.family} {model.formula} region={a}x{b}x{c} modulus={model.modulus}"
    )
    return "\n".join([str(len(rows)), comment, *rows]) + "\n"


_CUBE_CORNERS = (
    (-1, -1, -1), (1, -1, -1), (1, 1, -1), (-1, 1, -1),
    (-1, -1, 1), (1, -1, 1), (1, 1, 1), (-1, 1, 1),
)
_CUBE_FACES = (
    (0, 3, 2, 1), (4, 5, 6, 7), (0, 1, 5, 4),
    (1, 2, 6, 5), (2, 3, 7, 6), (3, 0, 4, 7),
)


def export_off(model: CrystalModel, region=(1, 1, 1), half_width: float = 0.2) -> str:
    """Every site of the region as a small axis-aligned cube with
    face colors from the palette; vacancies are drawn too."""
    sx, sy, sz = _region_shape(model, region)
    coloring = model.coloring
    verts: list[str] = []
    faces: list[str] = []
    for x in range(sx):
        for y in range(sy):
            for z in range(sz):
                label = coloring.label_of((x, y, z))
                r, g, b = PALETTE.get(label, FALLBACK_COLOR)
                base = len(verts)
                for dx, dy, dz in _CUBE_CORNERS:
                    verts.append(
                        f"{x + dx * half_width:.3f} "
                        f"{y + dy * half_width:.3f} "
                        f"{z + dz * half_width:.3f}"
                    )
                for quad in _CUBE_FACES:
                    idx = " ".join(str(base + i) for i in quad)
                    faces.append(f"4 {idx} {r} {g} {b}")
    head = ["OFF", f"{len(verts)} {len(faces)} 0"]
    return "\n".join(head + verts + faces) + "\n"


def export_report(model: CrystalModel) -> str:
    """Plain-text summary: group orders and indices, certificates, orbit
    sizes, color table, the computed color group, ratio and formula."""
    coloring = model.coloring
    recipe = coloring.recipe
    if recipe is None:
        raise ValueError("model carries no construction recipe")
    h = recipe.group
    group = h.parent
    lines = [
        f"family: {model.family}",
        f"modulus: {coloring.modulus}",
        f"full group order: {group.order}",
    ]
    cert = "yes" if getattr(h, "certified", True) else "no"
    lines.append(
        f"coloring group: order {h.order}, index {index(group, h)} in full group, "
        f"certificate {cert}"
    )
    decomp = decompose(h)
    lines.append(f"orbits: {len(decomp.orbits)}")
    for orb in decomp.orbits:
        lines.append(
            f"  orbit {orb.index}: representative {orb.representative}, size {len(orb.vertices)}"
        )
    for plan in recipe.plans:
        j = plan.subgroup
        lines.append(
            f"plan for orbit {plan.orbit}: subgroup order {j.order}, "
            f"index {index(h, j)}, certificate {'yes' if j.certified else 'no'}, "
            f"labels {', '.join(plan.labels)}"
        )
    counts = coloring.counts()
    lines.append("colors:")
    for info in coloring.color_table:
        extra = f", element {info.element}" if info.element else ""
        flag = ", background" if info.background else ""
        lines.append(f"  {info.label}: {counts[info.label]} per period{extra}{flag}")
    cg = color_group(coloring)
    verdict = "perfect" if cg.subgroup.order == group.order else "proper subgroup"
    lines.append(f"color group: order {cg.subgroup.order} of {group.order} ({verdict})")
    st = stoichiometry(coloring)
    lines.append(f"ratio: {st.ratio_text}")
    lines.append(f"formula: {model.formula}")
    return "\n".join(lines) + "\n"


EXPORTERS = {
    "xyz": export_xyz,
    "off": export_off,
    "report": lambda model, region=(1, 1, 1): export_report(model),
}


def export(model: CrystalModel, fmt: str, region=(1, 1, 1)) -> str:
    try:
        fn = EXPORTERS[fmt]
    except KeyError:
        raise ValueError(f"unknown export format {fmt!r}; known: {', '.join(sorted(EXPORTERS))}") from None
    return fn(model, region=region)

"""Coset colorings of the torus vertices and their symmetry analysis.

A coloring is built from a subgroup H acting on the vertices plus, for each
H-orbit to be colored, a subgroup J <= H containing the stabilizer of the
orbit representative x.  The left cosets hJ then partition the orbit into
[H:J] classes of equal size; each class gets one color, with Jx itself
wearing the first listed label.  Orbits without a plan may share a single
background color, and labels may be merged across orbits when the merged
plans use the same J at the same coset position.

The induced map sigma(h), sending the color of a class to the color of its
h-image, is a permutation of the colors for every h in H; `color_group`
finds all elements of the full torus group with that property, which is the
whole group exactly when the coloring is perfect.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, NamedTuple

import numpy as np

from .isometry import IDENTITY, Isometry
from .orbits import OrbitDecomposition, decompose, stabilizer
from .quotient import (
    TorusGroup,
    TorusSubgroup,
    element_key,
    index,
    left_cosets,
)

Vec = tuple[int, int, int]


class PlanError(ValueError):
    """A coloring plan violates one of the construction's preconditions."""


class ColorInfo(NamedTuple):
    label: str
    element: str | None = None
    background: bool = False


class OrbitPlan(NamedTuple):
    """Color one orbit (by its index in the decomposition of H) with the
    left cosets of `subgroup`, one label per coset."""

    orbit: int
    subgroup: TorusSubgroup
    labels: tuple[str, ...]


class ColoringRecipe(NamedTuple):
    """Provenance of a built coloring; enough to rebuild or audit it."""

    group: TorusGroup | TorusSubgroup
    plans: tuple[OrbitPlan, ...]
    merges: tuple[tuple[str, str], ...]
    background: str | None


class ColorPermutation(NamedTuple):
    element: Isometry
    mapping: tuple[int, ...]  # mapping[c] = color id of the image class


class ColorGroupResult(NamedTuple):
    """All elements that permute the color classes, with their sigma table.

    `subgroup` carries no generating words; it is derived element-wise."""

    subgroup: TorusSubgroup
    sigma: dict[Isometry, tuple[int, ...]]


@dataclass(frozen=True, eq=False)
class VertexColoring:
    """A total, onto assignment of color ids to the N^3 torus vertices."""

    modulus: int
    color_table: tuple[ColorInfo, ...]
    assignment: np.ndarray  # shape (N, N, N), entry = color id
    recipe: ColoringRecipe | None = None

    def __eq__(self, other):
        if not isinstance(other, VertexColoring):
            return NotImplemented
        return (
            self.modulus == other.modulus
            and self.color_table == other.color_table
            and self.assignment.tobytes() == other.assignment.tobytes()
        )

    __hash__ = None

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(info.label for info in self.color_table)

    @property
    def background_labels(self) -> frozenset[str]:
        return frozenset(i.label for i in self.color_table if i.background)

    def color_id(self, v) -> int:
        n = self.modulus
        x, y, z = (c % n for c in v)
        return int(self.assignment[x, y, z])

    def label_of(self, v) -> str:
        return self.color_table[self.color_id(v)].label

    def vertices(self) -> tuple[Vec, ...]:
        n = self.modulus
        return tuple((x, y, z) for x in range(n) for y in range(n) for z in range(n))

    def classes(self) -> dict[str, tuple[Vec, ...]]:
        out: dict[str, list[Vec]] = {info.label: [] for info in self.color_table}
        for v in self.vertices():
            out[self.label_of(v)].append(v)
        return {label: tuple(vs) for label, vs in out.items()}

    def counts(self) -> dict[str, int]:
        flat = self.assignment.ravel()
        return {
            info.label: int((flat == cid).sum())
            for cid, info in enumerate(self.color_table)
        }

    def with_elements(self, elements: Mapping[str, str]) -> "VertexColoring":
        """Copy with element symbols attached to the given labels."""
        unknown = set(elements) - set(self.labels)
        if unknown:
            raise KeyError(f"unknown color labels: {sorted(unknown)}")
        table = tuple(
            ColorInfo(i.label, elements.get(i.label, i.element), i.background)
            for i in self.color_table
        )
        return VertexColoring(self.modulus, table, self.assignment, self.recipe)

    def to_text(self) -> str:
        """Serialize: header, color table block, one line per vertex."""
        lines = [f"modulus {self.modulus}"]
        for info in self.color_table:
            parts = ["color", info.label]
            if info.element is not None:
                parts += ["element", info.element]
            if info.background:
                parts.append("background")
            lines.append(" ".join(parts))
        for v in self.vertices():
            lines.append(f"{v[0]} {v[1]} {v[2]} {self.label_of(v)}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "VertexColoring":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if not lines or not lines[0].startswith("modulus "):
            raise ValueError("expected a 'modulus N' header line")
        n = int(lines[0].split()[1])
        table: list[ColorInfo] = []
        body = 1
        for ln in lines[1:]:
            if not ln.startswith("color "):
                break
            body += 1
            parts = ln.split()
            label = parts[1]
            element = None
            background = False
            rest = parts[2:]
            while rest:
                if rest[0] == "element" and len(rest) >= 2:
                    element = rest[1]
                    rest = rest[2:]
                elif rest[0] == "background":
                    background = True
                    rest = rest[1:]
                else:
                    raise ValueError(f"bad color line: {ln!r}")
            table.append(ColorInfo(label, element, background))
        ids = {info.label: cid for cid, info in enumerate(table)}
        assignment = np.full((n, n, n), -1, dtype=np.int16)
        for ln in lines[body:]:
            parts = ln.split()
            if len(parts) != 4:
                raise ValueError(f"bad vertex line: {ln!r}")
            x, y, z = (int(p) % n for p in parts[:3])
            if parts[3] not in ids:
                raise ValueError(f"undeclared color {parts[3]!r}")
            assignment[x, y, z] = ids[parts[3]]
        if (assignment < 0).any():
            raise ValueError("coloring is not total: some vertex has no line")
        used = set(np.unique(assignment).tolist())
        if used != set(range(len(table))):
            raise ValueError("coloring is not onto: some declared color is unused")
        return cls(n, tuple(table), assignment)


def _ordered_cosets(h: TorusGroup | TorusSubgroup, j: TorusSubgroup):
    """Cosets of J in H with J itself first, the rest in canonical order.

    Returns (cosets, position) where position maps every element of H to
    its coset's index in that ordering.  Jx must get the first label, which
    pins J's own position; the canonical order of the remaining cosets
    keeps ids deterministic.
    """
    table = left_cosets(h, j)
    ident = j.parent.reduce(IDENTITY)
    first = table.ids[ident]
    order = [first] + [c for c in range(len(table.cosets)) if c != first]
    rank = {cid: pos for pos, cid in enumerate(order)}
    position = {el: rank[cid] for el, cid in table.ids.items()}
    return tuple(table.cosets[cid] for cid in order), position


def build_coloring(
    h: TorusGroup | TorusSubgroup,
    plans: Iterable[OrbitPlan],
    merges: Iterable[tuple[str, str]] = (),
    background: str | None = None,
    background_labels: Iterable[str] = (),
) -> VertexColoring:
    """Color the torus by the orbit/coset scheme.

    Every planned orbit is partitioned into the left-coset images of its
    representative and labeled in coset order (J's own class first); all
    unplanned orbits share the `background` label, which is flagged as
    background in the color table along with any label listed in
    `background_labels`.  A label may appear more than once only if the
    duplication is declared in `merges`; merged labels must come from
    plans over the same subgroup at the same coset position, which keeps
    every element of H acting on the merged classes consistently.
    """
    group = h.parent
    n = group.modulus
    decomp = decompose(h)
    plans = tuple(plans)
    merges = tuple((a, b) for a, b in merges)

    by_orbit: dict[int, OrbitPlan] = {}
    for plan in plans:
        if not 0 <= plan.orbit < len(decomp.orbits):
            raise PlanError(
                f"orbit index {plan.orbit} out of range; H has {len(decomp.orbits)} orbits"
            )
        if plan.orbit in by_orbit:
            raise PlanError(f"orbit {plan.orbit} has two plans")
        by_orbit[plan.orbit] = plan
    unplanned = [o.index for o in decomp.orbits if o.index not in by_orbit]
    if unplanned and background is None:
        raise PlanError(f"orbits {unplanned} are unplanned and no background label was given")
    if background is not None and not unplanned:
        raise PlanError("background label given but every orbit has a plan")

    for plan in plans:
        if not plan.subgroup.elements <= h.elements:
            raise PlanError(f"plan for orbit {plan.orbit}: subgroup is not contained in H")
        rep = decomp.orbits[plan.orbit].representative
        stab = stabilizer(h, rep)
        loose = sorted(stab.elements - plan.subgroup.elements, key=element_key)
        if loose:
            raise PlanError(
                f"plan for orbit {plan.orbit}: stabilizer of {rep} is not inside the "
                f"subgroup; offending element {loose[0]}"
            )
        k = index(h, plan.subgroup)
        if len(plan.labels) != k:
            raise PlanError(
                f"plan for orbit {plan.orbit}: {k} cosets but {len(plan.labels)} labels"
            )
        if background is not None and background in plan.labels:
            raise PlanError(f"background label {background!r} also appears in a plan")

    # Union-find over labels for the declared merges.
    parent: dict[str, str] = {}

    def find(a: str) -> str:
        while parent.get(a, a) != a:
            parent[a] = parent.get(parent[a], parent[a])
            a = parent[a]
        return a

    occurrences: list[tuple[str, int | None, int]] = [
        (label, pi, pos)
        for pi, plan in enumerate(plans)
        for pos, label in enumerate(plan.labels)
    ]
    if background is not None:
        occurrences.append((background, None, 0))
    known = {label for label, _, _ in occurrences}
    for a, b in merges:
        if a not in known or b not in known:
            raise PlanError(f"merge ({a!r}, {b!r}) names a label no plan uses")
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[rb] = ra

    merged_ok = {(a, b) for a, b in merges} | {(b, a) for a, b in merges}
    groups: dict[str, list[tuple[str, int | None, int]]] = {}
    for occ in occurrences:
        groups.setdefault(find(occ[0]), []).append(occ)
    for root, occs in groups.items():
        if len(occs) == 1:
            continue
        for i in range(len(occs)):
            for jx in range(i + 1, len(occs)):
                la, pa, qa = occs[i]
                lb, pb, qb = occs[jx]
                if (la, lb) not in merged_ok:
                    raise PlanError(
                        f"label {la!r} is reused without a merge declaration"
                        if la == lb
                        else f"labels {la!r} and {lb!r} collide without a merge declaration"
                    )
                if pa == pb:
                    raise PlanError(f"cannot merge two colors of the same orbit plan ({la!r})")
                ja = h.elements if pa is None else plans[pa].subgroup.elements
                jb = h.elements if pb is None else plans[pb].subgroup.elements
                if ja != jb:
                    raise PlanError(
                        f"merge of {la!r} and {lb!r}: the plans use different subgroups"
                    )
                if qa != qb:
                    raise PlanError(
                        f"merge of {la!r} and {lb!r}: labels sit at different coset positions"
                    )

    # Color table in first-occurrence order of merge roots.
    table_ids: dict[str, int] = {}
    order: list[str] = []
    occ_color: dict[tuple[int | None, int], int] = {}
    for label, pi, pos in occurrences:
        root = find(label)
        if root not in table_ids:
            table_ids[root] = len(order)
            order.append(root)
        occ_color[(pi, pos)] = table_ids[root]

    flagged = set(background_labels)
    if background is not None:
        flagged.add(find(background))
    unknown_flags = flagged - set(order)
    if unknown_flags:
        raise PlanError(f"background_labels not in the color table: {sorted(unknown_flags)}")
    table = tuple(ColorInfo(label, None, label in flagged) for label in order)

    assignment = np.full((n, n, n), -1, dtype=np.int16)
    for pi, plan in enumerate(plans):
        rep = decomp.orbits[plan.orbit].representative
        cosets, _ = _ordered_cosets(h, plan.subgroup)
        for pos, coset in enumerate(cosets):
            cid = occ_color[(pi, pos)]
            for el in coset:
                v = h.act(el, rep)
                prev = assignment[v]
                if prev >= 0 and prev != cid:
                    raise AssertionError(f"vertex {v} colored twice; broken plan validation")
                assignment[v] = cid
    for oi in unplanned:
        cid = occ_color[(None, 0)]
        for v in decomp.orbits[oi].vertices:
            assignment[v] = cid
    if (assignment < 0).any():
        raise AssertionError("coloring is not total; broken orbit bookkeeping")

    recipe = ColoringRecipe(h, plans, merges, background)
    return VertexColoring(n, table, assignment, recipe)


def color_action(coloring: VertexColoring, g: Isometry) -> ColorPermutation | None:
    """The permutation g induces on color classes, or None if g maps some
    class across several classes (no permutation is induced)."""
    n = coloring.modulus
    g = Isometry(g.perm, g.signs, tuple(t % n for t in g.trans))
    a = coloring.assignment
    idx = np.indices((n, n, n))
    image = [(g.signs[i] * idx[g.perm[i]] + g.trans[i]) % n for i in range(3)]
    b = a[image[0], image[1], image[2]]
    k = len(coloring.color_table)
    mapping = np.full(k, -1, dtype=np.int16)
    mapping[a.ravel()] = b.ravel()
    if not (mapping[a] == b).all():
        return None
    perm = mapping.tolist()
    if sorted(perm) != list(range(k)):
        return None
    return ColorPermutation(g, tuple(int(c) for c in perm))


def color_group(coloring: VertexColoring, group: TorusGroup | None = None) -> ColorGroupResult:
    """All elements of the full torus group that permute the color classes.

    The coloring is perfect exactly when the result is the whole group."""
    from .quotient import build_group

    if group is None:
        group = build_group(coloring.modulus)
    sigma: dict[Isometry, tuple[int, ...]] = {}
    members = []
    for g in sorted(group.elements, key=element_key):
        perm = color_action(coloring, g)
        if perm is not None:
            sigma[g] = perm.mapping
            members.append(g)
    sub = TorusSubgroup(group, (), frozenset(members), None)
    return ColorGroupResult(sub, sigma)


class PartResult(NamedTuple):
    part: str
    ok: bool
    detail: str


class TheoremReport(NamedTuple):
    parts: tuple[PartResult, ...]

    @property
    def ok(self) -> bool:
        return all(p.ok for p in self.parts)


def verify_theorem(
    h: TorusGroup | TorusSubgroup,
    j: TorusSubgroup,
    x,
    coloring: VertexColoring,
) -> TheoremReport:
    """Check the four structural claims behind the coset coloring of the
    orbit of x:

    1. the H-action on that orbit's colors matches left multiplication on
       the cosets of J, through the coset -> color correspondence;
    2. the orbit carries exactly [H:J] colors;
    3. H has at most as many orbits of colors as orbits of vertices;
    4. (a) Stab_H(x) <= J, and (b) per period, |orbit(x)| equals
       [H:J] * [J : Stab_J(x)].

    Returns a report with one entry per part; failures carry the
    counterexample."""
    n = h.parent.modulus
    x = tuple(c % n for c in x)
    decomp = decompose(h)
    orbit = decomp.orbit_of(x)
    cosets, position = _ordered_cosets(h, j)
    k = len(cosets)
    h_sorted = sorted(h.elements, key=element_key)
    parts: list[PartResult] = []

    # coset position -> color, read off a representative element of each coset
    coset_color = []
    for coset in cosets:
        g0 = min(coset, key=element_key)
        coset_color.append(coloring.color_id(h.act(g0, x)))

    ok1, detail1 = True, f"checked {len(h_sorted)} elements on {k} cosets"
    sigma_cache: dict[Isometry, tuple[int, ...]] = {}
    for g in h_sorted:
        act = color_action(coloring, g)
        if act is None:
            ok1, detail1 = False, f"element {g} does not permute the colors"
            break
        sigma_cache[g] = act.mapping
        for pos, coset in enumerate(cosets):
            g0 = min(coset, key=element_key)
            moved = position[h.mul(g, g0)]
            if coset_color[moved] != act.mapping[coset_color[pos]]:
                ok1 = False
                detail1 = (
                    f"element {g} sends coset {pos} to {moved} but color "
                    f"{coset_color[pos]} to {act.mapping[coset_color[pos]]}"
                )
                break
        if not ok1:
            break
    parts.append(PartResult("1: coset action equivalence", ok1, detail1))

    orbit_colors = {coloring.color_id(v) for v in orbit.vertices}
    parts.append(
        PartResult(
            "2: colors on orbit = [H:J]",
            len(orbit_colors) == k,
            f"{len(orbit_colors)} colors vs index {k}",
        )
    )

    if len(sigma_cache) == len(h_sorted):
        roots = list(range(len(coloring.color_table)))

        def find(c):
            while roots[c] != c:
                roots[c] = roots[roots[c]]
                c = roots[c]
            return c

        for mapping in sigma_cache.values():
            for c, d in enumerate(mapping):
                rc, rd = find(c), find(d)
                if rc != rd:
                    roots[rd] = rc
        n_color_orbits = len({find(c) for c in range(len(roots))})
        ok3 = n_color_orbits <= len(decomp.orbits)
        detail3 = f"{n_color_orbits} color orbits vs {len(decomp.orbits)} vertex orbits"
    else:
        ok3, detail3 = False, "sigma undefined for some element of H"
    parts.append(PartResult("3: color orbits <= vertex orbits", ok3, detail3))

    stab = stabilizer(h, x)
    loose = sorted(stab.elements - j.elements, key=element_key)
    parts.append(
        PartResult(
            "4a: Stab_H(x) inside J",
            not loose,
            "contained" if not loose else f"offending element {loose[0]}",
        )
    )

    stab_j = sum(1 for g in j.elements if j.act(g, x) == x)
    lhs = len(orbit.vertices)
    rhs = k * (len(j.elements) // stab_j)
    parts.append(
        PartResult(
            "4b: |orbit| = [H:J]*[J:Stab]",
            lhs == rhs,
            f"{lhs} = {k}*{len(j.elements) // stab_j}" if lhs == rhs else f"{lhs} != {rhs}",
        )
    )
    return TheoremReport(tuple(parts))


class Stoichiometry(NamedTuple):
    counts: tuple[tuple[str, int], ...]  # every color, table order
    ratio: tuple[int, ...]  # non-background counts, gcd-reduced
    ratio_text: str
    ratio_labels: tuple[str, ...]


def stoichiometry(coloring: VertexColoring) -> Stoichiometry:
    """Vertex counts per color per period; the reduced ratio covers only
    the non-background colors, smallest count first (ties keep color-table
    order, matching the formula convention)."""
    from math import gcd

    counts = coloring.counts()
    ordered = tuple((info.label, counts[info.label]) for info in coloring.color_table)
    fg = [(info.label, counts[info.label]) for info in coloring.color_table if not info.background]
    fg.sort(key=lambda t: t[1])
    g = 0
    for _, c in fg:
        g = gcd(g, c)
    ratio = tuple(c // g for _, c in fg) if g else ()
    return Stoichiometry(
        ordered,
        ratio,
        ":".join(str(r) for r in ratio),
        tuple(label for label, _ in fg),
    )

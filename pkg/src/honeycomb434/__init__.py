"""Exact symmetry computations and crystal colorings on the cubic honeycomb.

The vertices of the honeycomb are the integer lattice points; the full
symmetry group is generated by four mirror reflections P, Q, R, S.  This
package works in the finite quotient modulo an even period N, with
translation certificates tying subgroups given by generator words back to
the infinite group.  On top of that sit orbit/stabilizer computations,
coset colorings with their color groups, and crystal-structure models
(rock salt, NbO, ReO3, perovskite) with xyz/off/report exports.
"""

from .isometry import (
    BASE_VERTEX,
    GENERATORS,
    IDENTITY,
    MIRROR_NORMALS,
    RELATORS,
    Isometry,
    WordError,
    check_presentation,
    dihedral_angle,
    dihedral_angle_check,
    eval_word,
    generator,
    parse_word,
    perturbed_generators,
    presentation_holds,
    translation,
)
from .quotient import (
    DEFAULT_RADIUS,
    CertificationError,
    CosetTable,
    IntegerLattice,
    SubgroupError,
    TorusGroup,
    TorusSubgroup,
    Witness,
    build_group,
    build_subgroup,
    certify_translations,
    element_key,
    index,
    left_cosets,
    member,
)
from .orbits import (
    Orbit,
    OrbitDecomposition,
    Stabilizer,
    decompose,
    stabilizer,
    stabilizer_contained,
)
from .coloring import (
    ColorGroupResult,
    ColorInfo,
    ColorPermutation,
    ColoringRecipe,
    OrbitPlan,
    PlanError,
    Stoichiometry,
    TheoremReport,
    VertexColoring,
    build_coloring,
    color_action,
    color_group,
    stoichiometry,
    verify_theorem,
)
from .crystal import (
    PALETTE,
    PRESET_NAMES,
    CrystalModel,
    export,
    export_off,
    export_report,
    export_xyz,
    formula_of,
    preset,
    substitute,
)

__version__ = "0.1.0"

__all__ = [
    "BASE_VERTEX",
    "GENERATORS",
    "IDENTITY",
    "MIRROR_NORMALS",
    "RELATORS",
    "Isometry",
    "WordError",
    "check_presentation",
    "dihedral_angle",
    "dihedral_angle_check",
    "eval_word",
    "generator",
    "parse_word",
    "perturbed_generators",
    "presentation_holds",
    "translation",
    "DEFAULT_RADIUS",
    "CertificationError",
    "CosetTable",
    "IntegerLattice",
    "SubgroupError",
    "TorusGroup",
    "TorusSubgroup",
    "Witness",
    "build_group",
    "build_subgroup",
    "certify_translations",
    "element_key",
    "index",
    "left_cosets",
    "member",
    "Orbit",
    "OrbitDecomposition",
    "Stabilizer",
    "decompose",
    "stabilizer",
    "stabilizer_contained",
    "ColorGroupResult",
    "ColorInfo",
    "ColorPermutation",
    "ColoringRecipe",
    "OrbitPlan",
    "PlanError",
    "Stoichiometry",
    "TheoremReport",
    "VertexColoring",
    "build_coloring",
    "color_action",
    "color_group",
    "stoichiometry",
    "verify_theorem",
    "PALETTE",
    "PRESET_NAMES",
    "CrystalModel",
    "export",
    "export_off",
    "export_report",
    "export_xyz",
    "formula_of",
    "preset",
    "substitute",
    "__version__",
]

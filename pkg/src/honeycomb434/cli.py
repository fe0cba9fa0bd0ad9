"""Command-line driver.

Thin shell over the library: `check` validates the generator relations,
`subgroup` and `orbits` answer index/orbit queries for generating words
given on the command line, `color` and `export` run config-driven
coloring pipelines.  Configs are JSON (see the bundled files under
`honeycomb434/configs/`); `--config` accepts a path or a bundled name.

Exit codes: 0 success, 2 parse/config problem, 3 failed precondition
(bad plan, uncertified subgroup), 4 failed verification, 5 I/O failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from importlib import resources
from pathlib import Path
from typing import NamedTuple

from .coloring import (
    OrbitPlan,
    PlanError,
    VertexColoring,
    build_coloring,
    color_group,
    verify_theorem,
)
from .crystal import EXPORTERS, CrystalModel, export
from .isometry import (
    WordError,
    check_presentation,
    dihedral_angle_check,
    parse_word,
    perturbed_generators,
)
from .orbits import decompose, stabilizer
from .quotient import (
    DEFAULT_RADIUS,
    CertificationError,
    SubgroupError,
    TorusSubgroup,
    build_group,
    build_subgroup,
    certify_translations,
    index,
)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_PRECONDITION = 3
EXIT_VERIFICATION = 4
EXIT_IO = 5


class ConfigError(ValueError):
    """The config document is malformed or references undefined names."""


def _fail(message: str) -> None:
    print(message, file=sys.stderr)


def cmd_check(args) -> int:
    generators = perturbed_generators() if args.perturb else None
    checks = check_presentation(generators)
    broken = 0
    for check in checks:
        if check.ok:
            print(f"relator {check.relator}: ok")
        else:
            broken += 1
            residual = (
                f"translation {check.residual.translation}"
                if check.residual.is_translation
                else repr(check.residual)
            )
            print(f"relator {check.relator}: FAIL, evaluates to {residual}")
    angles, angles_ok = dihedral_angle_check()
    print("mirror angles:", " ".join(c.angle for c in angles))
    print("angle multiset:", "ok" if angles_ok else "FAIL")
    if broken or not angles_ok:
        print(f"check failed: {broken} relator(s) broken")
        return EXIT_VERIFICATION
    print("check passed: 10 relators hold, angle multiset matches")
    return EXIT_OK


def _certified_subgroup(modulus: int, words, radius: int) -> TorusSubgroup:
    group = build_group(modulus)
    return certify_translations(build_subgroup(group, tuple(words)), radius)


def cmd_subgroup(args) -> int:
    sub = _certified_subgroup(args.modulus, args.words, args.radius)
    idx = index(sub.parent, sub)
    print(f"modulus {args.modulus}: order {sub.order}, index {idx}, certificate yes")
    for witness in sub.translation_certificate:
        print(f"  translation {witness.target}: {''.join(witness.word)}")
    if args.cross_check:
        doubled = _certified_subgroup(args.modulus * 2, args.words, args.radius)
        idx2 = index(doubled.parent, doubled)
        agree = "agrees" if idx2 == idx else "DISAGREES"
        print(f"modulus {args.modulus * 2}: order {doubled.order}, index {idx2} ({agree})")
        if idx2 != idx:
            return EXIT_VERIFICATION
    return EXIT_OK


def cmd_orbits(args) -> int:
    sub = _certified_subgroup(args.modulus, args.words, args.radius)
    decomp = decompose(sub)
    print(
        f"modulus {args.modulus}: {len(decomp.orbits)} orbit(s) "
        f"under a subgroup of order {sub.order}"
    )
    for orbit in decomp.orbits:
        stab = stabilizer(sub, orbit.representative)
        print(
            f"  orbit {orbit.index}: representative {orbit.representative}, "
            f"size {len(orbit.vertices)}, stabilizer order {stab.order}"
        )
    return EXIT_OK


class _BuiltConfig(NamedTuple):
    config: dict
    model: CrystalModel
    subgroup: TorusSubgroup  # the coloring group H
    plans: tuple[OrbitPlan, ...]


def load_config(source: str) -> dict:
    path = Path(source)
    if path.exists():
        text = path.read_text()
    else:
        name = source.lower()
        try:
            text = resources.files("honeycomb434.configs").joinpath(f"{name}.json").read_text()
        except FileNotFoundError:
            raise ConfigError(
                f"config {source!r} is neither an existing file nor a bundled name"
            ) from None
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config {source!r} is not valid JSON: {exc}") from None
    validate_config(data)
    return data


def validate_config(data) -> None:
    def need(cond: bool, message: str) -> None:
        if not cond:
            raise ConfigError(message)

    need(isinstance(data, dict), "config must be a JSON object")
    need(isinstance(data.get("family"), str), "config needs a string 'family'")
    need(isinstance(data.get("modulus", 2), int), "'modulus' must be an integer")
    need(isinstance(data.get("radius", DEFAULT_RADIUS), int), "'radius' must be an integer")
    subgroups = data.get("subgroups")
    need(isinstance(subgroups, dict) and subgroups, "config needs a 'subgroups' table")
    for name, words in subgroups.items():
        need(
            isinstance(words, list) and words and all(isinstance(w, str) for w in words),
            f"subgroup {name!r} must list generating words",
        )
        for word in words:
            try:
                parse_word(word)
            except WordError as exc:
                raise ConfigError(f"subgroup {name!r}: {exc}") from None
    coloring = data.get("coloring")
    need(isinstance(coloring, dict), "config needs a 'coloring' section")
    need(coloring.get("group") in subgroups, "'coloring.group' must name a defined subgroup")
    plans = coloring.get("plans")
    need(isinstance(plans, list) and plans, "'coloring.plans' must be a non-empty list")
    for plan in plans:
        need(isinstance(plan, dict), "each plan must be an object")
        need(
            isinstance(plan.get("orbit"), int) and plan["orbit"] >= 0,
            "each plan needs a non-negative 'orbit' index",
        )
        need(plan.get("subgroup") in subgroups, "each plan's 'subgroup' must be defined")
        labels = plan.get("labels")
        need(
            isinstance(labels, list) and labels and all(isinstance(s, str) for s in labels),
            "each plan needs a non-empty 'labels' list",
        )
    merges = coloring.get("merges", [])
    need(
        isinstance(merges, list)
        and all(isinstance(m, list) and len(m) == 2 and all(isinstance(s, str) for s in m) for m in merges),
        "'coloring.merges' must be a list of label pairs",
    )
    background = coloring.get("background")
    need(
        background is None or isinstance(background, str),
        "'coloring.background' must be a label or null",
    )
    need(
        isinstance(coloring.get("output", "out.coloring"), str),
        "'coloring.output' must be a filename",
    )
    elements = data.get("elements", {})
    need(
        isinstance(elements, dict)
        and all(isinstance(k, str) and isinstance(v, str) for k, v in elements.items()),
        "'elements' must map labels to symbols",
    )
    for request in data.get("exports", []):
        need(isinstance(request, dict), "each export must be an object")
        need(
            request.get("format") in EXPORTERS,
            f"export format must be one of {', '.join(sorted(EXPORTERS))}",
        )
        region = request.get("region", [1, 1, 1])
        need(
            isinstance(region, list)
            and len(region) == 3
            and all(isinstance(r, int) and r >= 0 for r in region),
            "'region' must be three non-negative integers",
        )
        path = request.get("path")
        need(isinstance(path, str) and path, "each export needs a 'path'")
        need(not Path(path).is_absolute(), "export paths must be relative to --out-dir")


def build_from_config(config: dict, radius_override: int | None = None) -> _BuiltConfig:
    modulus = config.get("modulus", 2)
    radius = radius_override if radius_override is not None else config.get("radius", DEFAULT_RADIUS)
    group = build_group(modulus)
    subgroups = {
        name: certify_translations(build_subgroup(group, tuple(words)), radius)
        for name, words in config["subgroups"].items()
    }
    section = config["coloring"]
    h = subgroups[section["group"]]
    plans = tuple(
        OrbitPlan(p["orbit"], subgroups[p["subgroup"]], tuple(p["labels"]))
        for p in section["plans"]
    )
    merges = tuple((a, b) for a, b in section.get("merges", []))
    coloring = build_coloring(h, plans, merges, section.get("background"))
    coloring = coloring.with_elements(config.get("elements", {}))
    return _BuiltConfig(config, CrystalModel(config["family"], coloring), h, plans)


def cmd_color(args) -> int:
    built = build_from_config(load_config(args.config), args.radius)
    coloring = built.model.coloring
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    out_path = out_dir / built.config["coloring"].get(
        "output", f"{built.config['family']}.coloring"
    )
    out_path.write_text(coloring.to_text())
    print(f"wrote {out_path}")
    counts = coloring.counts()
    for info in coloring.color_table:
        tag = " (background)" if info.background else ""
        print(f"color {info.label}: {counts[info.label]} per period{tag}")
    decomp = decompose(built.subgroup)
    failures = 0
    for plan in built.plans:
        rep = decomp.orbits[plan.orbit].representative
        report = verify_theorem(built.subgroup, plan.subgroup, rep, coloring)
        for part in report.parts:
            status = "ok" if part.ok else f"FAIL ({part.detail})"
            print(f"orbit {plan.orbit}, part {part.part}: {status}")
        failures += sum(1 for part in report.parts if not part.ok)
    group_order = built.subgroup.parent.order
    cg = color_group(coloring)
    verdict = "perfect" if cg.subgroup.order == group_order else "not perfect"
    print(f"color group: order {cg.subgroup.order} of {group_order} ({verdict})")
    if failures:
        print(f"verification failed: {failures} theorem part(s) violated")
        return EXIT_VERIFICATION
    return EXIT_OK


def cmd_export(args) -> int:
    built = build_from_config(load_config(args.config), args.radius)
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    requests = built.config.get("exports", [])
    if not requests:
        _fail("config lists no exports")
        return EXIT_USAGE
    for request in requests:
        region = tuple(request.get("region", [1, 1, 1]))
        text = export(built.model, request["format"], region)
        target = out_dir / request["path"]
        target.parent.mkdir(parents=True, exist_ok=True)
        target.write_text(text)
        print(f"wrote {target} ({request['format']})")
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="honeycomb434",
        description="Exact symmetry computations and crystal colorings on the cubic honeycomb.",
    )
    commands = parser.add_subparsers(dest="command", required=True, metavar="command")

    p = commands.add_parser("check", help="verify the generator relations and mirror angles")
    p.add_argument(
        "--perturb",
        action="store_true",
        help="replace one mirror by a parallel plane and watch the relations fail",
    )
    p.set_defaults(fn=cmd_check)

    def word_arguments(p) -> None:
        p.add_argument("words", nargs="+", help="generating words over P, Q, R, S")
        p.add_argument("--modulus", type=int, default=2, help="torus period (even, default 2)")
        p.add_argument(
            "--radius",
            type=int,
            default=DEFAULT_RADIUS,
            help=f"word-length bound for the translation certificate (default {DEFAULT_RADIUS})",
        )

    p = commands.add_parser(
        "subgroup", help="order, index and translation certificate of a subgroup"
    )
    word_arguments(p)
    p.add_argument(
        "--cross-check",
        action=argparse.BooleanOptionalAction,
        default=True,
        help="recompute at twice the modulus and compare the index",
    )
    p.set_defaults(fn=cmd_subgroup)

    p = commands.add_parser("orbits", help="orbit decomposition of the torus under a subgroup")
    word_arguments(p)
    p.set_defaults(fn=cmd_orbits)

    def config_arguments(p) -> None:
        p.add_argument("--config", required=True, help="config file path or bundled name")
        p.add_argument("--out-dir", default=".", help="directory for output files")
        p.add_argument(
            "--radius", type=int, default=None, help="override the config's certificate radius"
        )

    p = commands.add_parser(
        "color", help="build a coloring from a config, verify it, write the class file"
    )
    config_arguments(p)
    p.set_defaults(fn=cmd_color)

    p = commands.add_parser("export", help="write the exports requested by a config")
    config_arguments(p)
    p.set_defaults(fn=cmd_export)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    try:
        return args.fn(args)
    except (PlanError, SubgroupError) as exc:
        _fail(f"precondition failed: {exc}")
        return EXIT_PRECONDITION
    except CertificationError as exc:
        _fail(f"certification failed: {exc}")
        if not exc.definitive:
            _fail("advice: retry with a larger --radius to search longer words")
        return EXIT_PRECONDITION
    except (ConfigError, WordError) as exc:
        _fail(f"error: {exc}")
        return EXIT_USAGE
    except ValueError as exc:
        _fail(f"error: {exc}")
        return EXIT_USAGE
    except OSError as exc:
        _fail(f"i/o error: {exc}")
        return EXIT_IO


if __name__ == "__main__":
    raise SystemExit(main())

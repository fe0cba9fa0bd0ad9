#!/usr/bin/env python3
"""Tour of the four generating mirrors.

The symmetry group of the unit-cube tiling of 3-space is generated by four
reflections P, Q, R, S.  This script applies them to points, confirms the
defining relations, and shows what breaks when one mirror is moved.
"""

from honeycomb434 import (
    GENERATORS,
    MIRROR_NORMALS,
    check_presentation,
    dihedral_angle_check,
    eval_word,
    perturbed_generators,
)


def main() -> None:
    print("== the four mirrors ==")
    planes = {"P": "z = 1/2", "Q": "z = x", "R": "x = y", "S": "y = 0"}
    for sym in "PQRS":
        g = GENERATORS[sym]
        print(f"  {sym}: reflection in {planes[sym]:8s}  normal {MIRROR_NORMALS[sym]}")
        print(f"     (1,2,3) -> {g.apply((1, 2, 3))}")

    print()
    print("== defining relations ==")
    for check in check_presentation():
        print(f"  {check.relator:8s} -> {'identity' if check.ok else check.residual}")

    angles, ok = dihedral_angle_check()
    print()
    print("== mirror angles ==")
    for a in angles:
        print(f"  {a.pair[0]}{a.pair[1]}: {a.angle}")
    print(f"  multiset as required: {ok}")

    print()
    print("== words ==")
    for text in ("PQP", "PQRQP", "(SRQPQR)^2", "PQRSRQP"):
        el = eval_word(text)
        kind = f"pure translation by {el.trans}" if el.is_translation else "not a translation"
        print(f"  {text:12s} -> perm={el.perm} signs={el.signs} trans={el.trans}  ({kind})")
    print(f"  PQRSRQP fixes (1,1,1): {eval_word('PQRSRQP').apply((1, 1, 1)) == (1, 1, 1)}")

    print()
    print("== a moved mirror ==")
    print("  replacing Q by the reflection in z = -1/2 (now parallel to P):")
    for check in check_presentation(perturbed_generators()):
        if not check.ok:
            print(f"  {check.relator}: broken, evaluates to {check.residual}")


if __name__ == "__main__":
    main()

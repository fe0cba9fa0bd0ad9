#!/usr/bin/env python3
"""Finite quotients, subgroups from words, and translation certificates.

Reducing coordinates mod an even N turns the infinite symmetry group into
a finite one of order 48*N^3.  A subgroup given by generator words only
represents its infinite counterpart faithfully if it contains the three
axis translations by N; the certificate search proves that with explicit
witness words.
"""

from honeycomb434 import (
    CertificationError,
    build_group,
    build_subgroup,
    certify_translations,
    index,
    left_cosets,
)

NAMED = {
    "full group": ("P", "Q", "R", "S"),
    "index 2": ("Q", "R", "S", "PQP"),
    "index 4": ("Q", "R", "S", "QPQRQPQRP"),
    "index 8": ("Q", "R", "S", "(SRQPQR)^2"),
}


def main() -> None:
    for n in (2, 4):
        group = build_group(n)
        print(f"== modulus {n}: full group order {group.order} ==")
        for name, words in NAMED.items():
            sub = certify_translations(build_subgroup(group, words), radius=12)
            print(
                f"  {name:10s} <{','.join(words)}>: "
                f"order {sub.order}, index {index(group, sub)}"
            )
        print()

    group = build_group(2)
    sub = certify_translations(build_subgroup(group, NAMED["index 8"]), radius=12)
    print("== witness words for the index-8 subgroup, modulus 2 ==")
    for witness in sub.translation_certificate:
        word = "".join(witness.word)
        shown = word if len(word) <= 60 else f"{word[:57]}... ({len(word)} letters)"
        print(f"  translation {witness.target}: {shown}")

    print()
    print("== cosets of the index-8 subgroup ==")
    table = left_cosets(group, sub)
    for i, rep in enumerate(table.representatives):
        print(f"  coset {i}: size {len(table.cosets[i])}, smallest element {rep}")

    print()
    print("== when certification cannot succeed ==")
    try:
        certify_translations(build_subgroup(group, ("Q", "R")), radius=12)
    except CertificationError as exc:
        print(f"  <Q,R>: {exc}")
        print(f"  definitive: {exc.definitive} (the subgroup is finite)")
    try:
        certify_translations(build_subgroup(group, NAMED["index 4"]), radius=4)
    except CertificationError as exc:
        print(f"  <{','.join(NAMED['index 4'])}> at radius 4: {exc}")
        print(f"  definitive: {exc.definitive} (a larger radius succeeds)")


if __name__ == "__main__":
    main()

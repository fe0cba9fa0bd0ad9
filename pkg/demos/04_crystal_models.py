#!/usr/bin/env python3
"""Cubic crystal models built from the bundled coloring presets.

Each preset turns one of the reference colorings into a crystal: colors
become element symbols, background colors become vacancies, and the result
exports as xyz atom lists, colored OFF meshes, or a plain-text report.
"""

import tempfile
from pathlib import Path

from honeycomb434 import PRESET_NAMES, export, preset, substitute


def main() -> None:
    print("== the bundled families ==")
    for name in PRESET_NAMES:
        model = preset(name)
        parts = ", ".join(f"{el} x{c}" for el, c in model.composition)
        print(f"  {model.family:10s} formula {model.formula:8s} per period: {parts}")

    print()
    print("== same geometry, different occupants ==")
    pv = preset("perovskite")
    for mapping, family in [
        ({"black": "Ba", "yellow": "Ti", "brown": "O"}, "BaTiO3"),
        ({"black": "Pb", "yellow": "Zr", "brown": "O"}, "PbZrO3"),
        ({"black": "Pb", "yellow": "Ti", "brown": "O"}, "PbTiO3"),
    ]:
        model = substitute(pv, mapping, family=family)
        print(f"  {model.family}: formula {model.formula}")
    rs = preset("rock-salt")
    for mapping in [{"light-blue": "Ag", "white": "Cl"},
                    {"light-blue": "K", "white": "Br"}]:
        model = substitute(rs, mapping)
        print(f"  rock-salt variant: formula {model.formula}")

    print()
    print("== one period of NbO as xyz (vacant corners omitted) ==")
    for line in export(preset("NbO"), "xyz").splitlines():
        print(f"  {line}")

    print()
    print("== export formats ==")
    with tempfile.TemporaryDirectory() as tmp:
        out = Path(tmp)
        model = preset("ReO3")
        for fmt, fname in (("xyz", "reo3.xyz"), ("off", "reo3.off"),
                           ("report", "reo3-report.txt")):
            path = out / fname
            path.write_text(export(model, fmt, region=(1, 1, 1)))
            print(f"  wrote {fname}: {path.stat().st_size} bytes")
        print()
        print("== the ReO3 report ==")
        for line in (out / "reo3-report.txt").read_text().splitlines():
            print(f"  {line}")


if __name__ == "__main__":
    main()

"""Degree-d components of the featured ideals: size, Betti numbers, linearity.

    python scripts/component_linearity.py --family fano --extra 2
"""

import argparse
import time
from dataclasses import dataclass

from syzygy.families import fano, k4_matroid, matroidal_presentation, uniform_matroid
from syzygy.monomial import Monomial
from syzygy.presentation import component_presentation, is_crit_monotone, presentation_from_generators
from syzygy.resolution import betti, build_resolution

FAMILIES = {
    "J": lambda: presentation_from_generators(
        4, [Monomial((1, 1, 0, 1)), Monomial((1, 0, 1, 1)), Monomial((0, 1, 1, 1))]
    ),
    "U24": lambda: matroidal_presentation(uniform_matroid(2, 4)),
    "U35": lambda: matroidal_presentation(uniform_matroid(3, 5)),
    "K4": lambda: matroidal_presentation(k4_matroid()),
    "fano": lambda: matroidal_presentation(fano()),
}


@dataclass
class ComponentConfig:
    family: str = "J"
    extra: int = 2
    mode: str = "generic"


def run(cfg: ComponentConfig) -> None:
    p = FAMILIES[cfg.family]()
    top = max(p.degrees)
    for d in range(top, top + cfg.extra + 1):
        start = time.perf_counter()
        c = component_presentation(p, d)
        r = build_resolution(c, cfg.mode)
        linear = all(m.degree == 1 for image in r.differential.values() for m, _ in image)
        print(
            f"d={d} generators={len(c)} crit_monotone={is_crit_monotone(c)} "
            f"linear={linear} betti={betti(r)} {time.perf_counter() - start:.2f}s"
        )


if __name__ == "__main__":
    parser = argparse.ArgumentParser()
    parser.add_argument("--family", choices=sorted(FAMILIES), default="J")
    parser.add_argument("--extra", type=int, default=2)
    parser.add_argument("--mode", choices=("ek", "generic"), default="generic")
    a = parser.parse_args()
    run(ComponentConfig(a.family, a.extra, a.mode))

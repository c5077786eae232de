"""Product table of the Fano ideal or one of its restrictions.

    python scripts/fano_table.py --restrict 1,2,3,4
    python scripts/fano_table.py --all
"""

import argparse
import time
from dataclasses import dataclass

from syzygy.dga import DGA, format_table, product_table, verify_dga
from syzygy.families import fano, matroidal_presentation
from syzygy.presentation import restrict
from syzygy.resolution import betti


@dataclass
class TableConfig:
    restrict_to: tuple | None = (1, 2, 3, 4)
    show_zero: bool = False
    verify: bool = False


def run(cfg: TableConfig) -> None:
    p = matroidal_presentation(fano())
    if cfg.restrict_to:
        p = restrict(p, cfg.restrict_to, order="declex")
    A = DGA(p)
    print(p.describe())
    print("betti", *betti(A.r))
    start = time.perf_counter()
    rows = product_table(p, A)
    print(format_table(p, rows, nonzero_only=not cfg.show_zero))
    print(f"{len(rows)} products in {time.perf_counter() - start:.2f}s")
    if cfg.verify:
        report = verify_dga(p, algebra=A)
        print(report.summary())


if __name__ == "__main__":
    parser = argparse.ArgumentParser()
    parser.add_argument("--restrict", default="1,2,3,4")
    parser.add_argument("--all", action="store_true", help="use all seven variables")
    parser.add_argument("--show-zero", action="store_true")
    parser.add_argument("--verify", action="store_true")
    args = parser.parse_args()
    chosen = None if args.all else tuple(int(v) for v in args.restrict.split(","))
    run(TableConfig(chosen, args.show_zero, args.verify))

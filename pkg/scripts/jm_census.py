"""Tabulate JM partition counts by core and weight.

For every ell-core up to a size bound and every weight up to a bound, print
the number of JM partitions with that core and weight.  With --list, also
print the partitions themselves.

Example:
    python3 scripts/jm_census.py --ell 3 --max-core 6 --max-weight 4
"""

from __future__ import annotations

import argparse

from laddercrystal.jm import count_jm, enumerate_jm
from laddercrystal.partitions import all_partitions
from laddercrystal.rimhooks import is_core
from laddercrystal.strings import format_partition


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--ell", type=int, default=3)
    parser.add_argument("--max-core", type=int, default=6, help="largest core size")
    parser.add_argument("--max-weight", type=int, default=4)
    parser.add_argument("--list", action="store_true", help="print the partitions too")
    args = parser.parse_args(argv)

    total = 0
    for n in range(args.max_core + 1):
        for core in all_partitions(n):
            if not is_core(core, args.ell):
                continue
            counts = [count_jm(core, w, args.ell) for w in range(1, args.max_weight + 1)]
            total += sum(counts)
            row = " ".join(f"w={w}:{c}" for w, c in enumerate(counts, start=1))
            print(f"core {format_partition(core):<12} {row}")
            if args.list:
                for w in range(1, args.max_weight + 1):
                    names = ", ".join(
                        format_partition(lam) for lam in enumerate_jm(core, w, args.ell)
                    )
                    print(f"    w={w}: {names or '-'}")
    print(f"total JM partitions counted: {total}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())

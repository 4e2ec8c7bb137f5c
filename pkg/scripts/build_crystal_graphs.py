"""Build the classical and ladder crystals and write DOT/JSON renderings.

Example:
    python3 scripts/build_crystal_graphs.py --ell 3 --depth 8 --outdir out
"""

from __future__ import annotations

import argparse
import json
from dataclasses import dataclass
from pathlib import Path

from laddercrystal.graph import CLASSICAL, LADDER, build_crystal, export_dot
from laddercrystal.strings import format_partition


@dataclass(frozen=True)
class BuildConfig:
    ell: int
    depth: int
    outdir: Path


def run(config: BuildConfig) -> None:
    config.outdir.mkdir(parents=True, exist_ok=True)
    for model in (CLASSICAL, LADDER):
        graph = build_crystal(config.ell, config.depth, model)
        stem = f"{model}_ell{config.ell}_depth{config.depth}"
        (config.outdir / f"{stem}.dot").write_text(export_dot(graph), encoding="utf-8")
        payload = {
            "model": graph.model,
            "ell": graph.ell,
            "depth": graph.depth,
            "level_sizes": [len(level) for level in graph.levels],
            "levels": [[format_partition(lam) for lam in level] for level in graph.levels],
            "edges": [
                [format_partition(src), format_partition(dst), i]
                for src, dst, i in graph.edges
            ],
        }
        (config.outdir / f"{stem}.json").write_text(
            json.dumps(payload, indent=2) + "\n", encoding="utf-8"
        )
        sizes = " ".join(str(len(level)) for level in graph.levels)
        print(f"{model}: {len(graph.nodes)} nodes, {len(graph.edges)} edges, levels {sizes}")


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--ell", type=int, default=3)
    parser.add_argument("--depth", type=int, default=8)
    parser.add_argument("--outdir", type=Path, default=Path("out"))
    args = parser.parse_args(argv)
    run(BuildConfig(ell=args.ell, depth=args.depth, outdir=args.outdir))
    return 0


if __name__ == "__main__":
    raise SystemExit(main())

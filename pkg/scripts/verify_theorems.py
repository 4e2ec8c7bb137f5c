"""Run the crystal-isomorphism and theorem suites across several moduli.

Exits nonzero if any check fails, printing the first few counterexamples.

Example:
    python3 scripts/verify_theorems.py --ell 3 --ell 4 --depth 10 --nmax 10
"""

from __future__ import annotations

import argparse

from laddercrystal.graph import theorem_suite, verify_isomorphism


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument(
        "--ell", type=int, action="append", help="modulus, repeatable (default 3 4 5)"
    )
    parser.add_argument("--depth", type=int, default=10, help="crystal depth for the isomorphism")
    parser.add_argument("--nmax", type=int, default=10, help="size bound for the theorem sweep")
    args = parser.parse_args(argv)
    moduli = args.ell or [3, 4, 5]

    failed = False
    for ell in moduli:
        for report in (verify_isomorphism(ell, args.depth), theorem_suite(ell, args.nmax)):
            status = "ok" if report.passed else "FAILED"
            print(
                f"ell={ell} {report.suite} {report.params}: "
                f"{report.checks} checks, {len(report.failures)} failures [{status}]"
            )
            for failure in report.failures[:5]:
                print(f"  {failure}")
            failed = failed or not report.passed
    return 1 if failed else 0


if __name__ == "__main__":
    raise SystemExit(main())

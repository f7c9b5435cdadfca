#!/usr/bin/env python3
"""Run the acceptance criteria standalone, one PASS/FAIL line each.

Exit status 0 iff every criterion holds.
"""

import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent.parent / "tests"))

from test_acceptance import CRITERIA  # noqa: E402


def main() -> int:
    failures = 0
    for number, label, check in CRITERIA:
        try:
            check()
        except Exception as exc:
            failures += 1
            print(f"ACCEPTANCE {number:2d} FAIL: {label} -- {exc}")
        else:
            print(f"ACCEPTANCE {number:2d} PASS: {label}")
    print(f"{len(CRITERIA) - failures}/{len(CRITERIA)} criteria passed")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())

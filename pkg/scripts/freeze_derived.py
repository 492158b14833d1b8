"""Regenerate tests/data/derived.json from the brute-force oracle in tests/oracle.py.

Run from the repository root: python3 scripts/freeze_derived.py
"""

import json
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "tests"))

import oracle  # noqa: E402

NSYM = ("r", "h", "e", "psi", "phi")
QSYM = ("M", "F", "For", "Psi", "Phi")
DEGREES = (1, 2, 3, 4)


def _fmt(x):
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _dump(A):
    return [[_fmt(x) for x in row] for row in A]


def main():
    data = {"nsym": {}, "qsym": {}}
    for n in DEGREES:
        for x in NSYM:
            for y in NSYM:
                data["nsym"][f"{x}>{y}>{n}"] = _dump(oracle.nsym_matrix(x, y, n))
        for x in QSYM:
            for y in QSYM:
                data["qsym"][f"{x}>{y}>{n}"] = _dump(oracle.qsym_matrix(x, y, n))
    out = ROOT / "tests" / "data" / "derived.json"
    out.write_text(json.dumps(data, indent=1, sort_keys=True) + "\n")
    print(f"wrote {out}")


if __name__ == "__main__":
    main()

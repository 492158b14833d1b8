"""Write every transition matrix up to a degree as CSV files.

    python3 scripts/export_matrices.py --n 4 --dir matrices/

Files are named <space>_<from>_<to>_<n>.csv, plus named_<name>_<n>.csv.
"""

import argparse
from pathlib import Path

from nsymkit.nsym import BASES as NSYM_BASES
from nsymkit.qsym import BASES as QSYM_BASES
from nsymkit.transmat import NAMED, cob_matrix, named_matrix


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=4)
    ap.add_argument("--dir", default="matrices")
    args = ap.parse_args(argv)

    out = Path(args.dir)
    out.mkdir(parents=True, exist_ok=True)
    count = 0
    for n in range(1, args.n + 1):
        for space, bases in (("nsym", NSYM_BASES), ("qsym", QSYM_BASES)):
            for frm in bases:
                for to in bases:
                    if frm != to:
                        (out / f"{space}_{frm}_{to}_{n}.csv").write_text(cob_matrix(space, frm, to, n).to_csv())
                        count += 1
        for name in NAMED:
            (out / f"named_{name}_{n}.csv").write_text(named_matrix(name, n).to_csv())
            count += 1
    print(f"wrote {count} files to {out}")


if __name__ == "__main__":
    main()

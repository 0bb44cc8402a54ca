"""CSV data for the resonant cosine series at a = pi/2, 3pi/2 and 1e5 pi + pi/2.

Brute force is only attempted (with ``--brute-force``) for the two small
values; the largest needs 1e9 terms.

    python3 scripts/figure2_data.py [outdir] [--brute-force]
"""
import math
import sys
from pathlib import Path

from sparsedft.cli import render
from sparsedft.experiments import run_example3

CASES = (("pi_2", math.pi / 2), ("3pi_2", 1.5 * math.pi), ("1e5pi_pi_2", 1e5 * math.pi + math.pi / 2))


def main(argv=None):
    argv = sys.argv[1:] if argv is None else argv
    bf = "--brute-force" in argv
    args = [a for a in argv if not a.startswith("--")]
    out = Path(args[0] if args else ".")
    out.mkdir(parents=True, exist_ok=True)
    for label, a in CASES:
        path = out / f"figure2_a{label}.csv"
        path.write_text(render(run_example3(a, brute_force=bf and a < 10), "csv"))
        print(path)


if __name__ == "__main__":
    main()

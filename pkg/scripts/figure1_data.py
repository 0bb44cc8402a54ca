"""CSV data for the Lorentzian cosine series at a = 1, 5 and 1e5.

Writes one file per ``a`` into the output directory (default: current).

    python3 scripts/figure1_data.py [outdir] [--brute-force]
"""
import sys
from pathlib import Path

from sparsedft.cli import render
from sparsedft.experiments import run_example2


def main(argv=None):
    argv = sys.argv[1:] if argv is None else argv
    bf = "--brute-force" in argv
    args = [a for a in argv if not a.startswith("--")]
    out = Path(args[0] if args else ".")
    out.mkdir(parents=True, exist_ok=True)
    for a in (1.0, 5.0, 1e5):
        path = out / f"figure1_a{a:g}.csv"
        path.write_text(render(run_example2(a, brute_force=bf), "csv"))
        print(path)


if __name__ == "__main__":
    main()

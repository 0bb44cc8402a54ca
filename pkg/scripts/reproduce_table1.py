"""Print the zeta-sum table (q = 1.15, M = 151) as text or CSV.

    python3 scripts/reproduce_table1.py [--csv]
"""
import sys

from sparsedft.cli import render, render_zeta_table
from sparsedft.experiments import run_zeta


def main(argv=None):
    argv = sys.argv[1:] if argv is None else argv
    rows = run_zeta()
    sys.stdout.write(render(rows, "csv") if "--csv" in argv else render_zeta_table(rows))


if __name__ == "__main__":
    main()

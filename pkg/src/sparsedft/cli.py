"""Command-line front end.

    python -m sparsedft --command zeta
    python -m sparsedft --command example2 --a 5 --format csv --out fig1_a5.csv
    python -m sparsedft --command dft --samples-file f.txt --nodes-file nodes.txt --k 0.1,0.2
    python -m sparsedft --command verify

Exit status is 0 on success, 1 on invalid input and 2 when ``verify``
finds a failing property.
"""
import argparse
import csv
import io
import json
import math
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

import numpy as np

from .errors import SparseDFTError
from .experiments import TABLE_P, make_grid, run_example2, run_example3, run_zeta
from .nodes import DEFAULT_M, HybridSpec, QSequenceSpec, hybrid_nodes, q_sequence
from .transform import (NodeSequence, SampledFunction, cosine_transform, dft,
                        series_sum, sine_transform)
from .verify import run_verify

COMMANDS = ("sum", "dft", "sin", "cos", "zeta", "example2", "example3", "nodes", "verify")
EXIT_OK, EXIT_INVALID, EXIT_VERIFY = 0, 1, 2


@dataclass
class RunConfig:
    command: str
    p: tuple = TABLE_P
    a: Optional[float] = None
    x_min: Optional[float] = None
    x_max: Optional[float] = None
    x_count: Optional[int] = None
    k: tuple = (0.0,)
    q: float = 1.15
    M: int = DEFAULT_M
    strategy: str = "q"
    N0: Optional[int] = None
    N: Optional[int] = None
    nodes_file: Optional[str] = None
    samples_file: Optional[str] = None
    format: str = "table"
    out: Optional[str] = None
    force: bool = False
    brute_force: bool = False
    seed: int = 0
    columns: list = field(default_factory=list)


def _floats(text):
    return tuple(float(v) for v in text.split(",") if v.strip())


def build_parser():
    ap = argparse.ArgumentParser(
        prog="sparsedft",
        description="Weighted sparse-node series sums and discrete Fourier transforms.")
    ap.add_argument("--command", required=True, choices=COMMANDS)
    ap.add_argument("--p", type=_floats, default=TABLE_P,
                    help="comma-separated exponents for the zeta command")
    ap.add_argument("--a", type=float, help="parameter a of the example series")
    ap.add_argument("--x-min", type=float)
    ap.add_argument("--x-max", type=float)
    ap.add_argument("--x-count", type=int)
    ap.add_argument("--k", type=_floats, default=(0.0,),
                    help="comma-separated wavenumbers for dft/sin/cos")
    ap.add_argument("--q", type=float, default=1.15)
    ap.add_argument("--M", type=int, default=DEFAULT_M)
    ap.add_argument("--strategy", choices=("q", "hybrid"), default="q",
                    help="node plan for the nodes command")
    ap.add_argument("--N0", type=int, help="flat-region boundary for --strategy hybrid")
    ap.add_argument("--N", type=int, help="cutoff for --strategy hybrid")
    ap.add_argument("--nodes-file")
    ap.add_argument("--samples-file", help='lines of "n re im"')
    ap.add_argument("--format", choices=("table", "json", "csv"), default="table")
    ap.add_argument("--out")
    ap.add_argument("--force", action="store_true",
                    help="allow brute-force sums beyond the default term limit")
    ap.add_argument("--brute-force", action="store_true",
                    help="add a term-by-term reference column to example2/example3")
    ap.add_argument("--seed", type=int, default=0)
    return ap


def parse_config(argv=None):
    ns = build_parser().parse_args(argv)
    cfg = RunConfig(**{k: v for k, v in vars(ns).items()})
    if cfg.x_min is not None and cfg.x_max is not None and not cfg.x_min < cfg.x_max:
        raise SparseDFTError("--x-min must be below --x-max")
    if cfg.x_count is not None and cfg.x_count < 1:
        raise SparseDFTError("--x-count must be positive")
    return cfg


def load_samples(path):
    """Read ``n re im`` lines into a table-backed :class:`SampledFunction`."""
    ns, vals = [], []
    for lineno, line in enumerate(Path(path).read_text().splitlines(), 1):
        parts = line.split()
        if not parts:
            continue
        if len(parts) not in (2, 3):
            raise SparseDFTError(f"{path}:{lineno}: expected 'n re im', got {line!r}")
        ns.append(int(parts[0]))
        im = float(parts[2]) if len(parts) == 3 else 0.0
        vals.append(complex(float(parts[1]), im))
    return SampledFunction.from_table(ns, vals), sorted(ns)


def _fmt(v):
    if v is None:
        return ""
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    return f"{float(v):.10g}"


def _jsonable(v):
    if v is None or isinstance(v, (int, np.integer)):
        return None if v is None else int(v)
    return float(_fmt(v))


def render(rows, fmt, title=None):
    """Format rows as text; CSV and JSON carry the same 10-digit values."""
    if not rows:
        return ""
    cols = list(rows[0])
    if fmt == "json":
        return json.dumps([{c: _jsonable(r[c]) for c in cols} for r in rows], indent=1) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(cols)
        for r in rows:
            w.writerow([_fmt(r[c]) for c in cols])
        return buf.getvalue()
    lines = [] if title is None else [title]
    lines.append("  ".join(f"{c:>14s}" for c in cols))
    for r in rows:
        lines.append("  ".join(f"{_fmt(r[c]):>14s}" for c in cols))
    return "\n".join(lines) + "\n"


def render_zeta_table(rows):
    head = f"{'p':>4s} {'zeta(p)':>9s} {'S':>9s} {'Delta':>9s} {'M':>5s} {'cutoff':>12s} {'c':>10s}"
    out = [head]
    for r in rows:
        z = "" if r["zeta"] is None else f"{r['zeta']:.4f}"
        d = "" if r["delta"] is None else f"{r['delta'] + 0.0:.4f}".replace("-0.0000", "0.0000")
        out.append(f"{r['p']:>4g} {z:>9s} {r['S']:>9.4f} {d:>9s} {r['M']:>5d} "
                   f"{r['cutoff']:>12d} {r['efficiency']:>10.3e}")
    return "\n".join(out) + "\n"


def _nodes_for_user_data(cfg, sample_ns):
    if cfg.nodes_file:
        return NodeSequence.load(cfg.nodes_file)
    return NodeSequence(sample_ns)


def run(cfg):
    """Execute a configuration; returns ``(text, exit_code)``."""
    c = cfg.command
    if c == "zeta":
        rows = run_zeta(cfg.p, cfg.q, cfg.M)
        if cfg.format == "table":
            return render_zeta_table(rows), EXIT_OK
        return render(rows, cfg.format), EXIT_OK
    if c in ("example2", "example3"):
        if cfg.a is None:
            raise SparseDFTError(f"--a is required for {c}")
        xs = make_grid(cfg.x_min, cfg.x_max, cfg.x_count)
        driver = run_example2 if c == "example2" else run_example3
        if cfg.brute_force and not cfg.force:
            spec_N = (HybridSpec.for_lorentzian(cfg.a).N if c == "example2"
                      else max(1, math.floor(cfg.a / math.pi)) * 10_000)
            if spec_N > 10**8:
                raise SparseDFTError(f"brute force over {spec_N} terms needs --force")
        rows = driver(cfg.a, xs, cfg.M, brute_force=cfg.brute_force)
        return render(rows, cfg.format, f"# {c} a={cfg.a:g}"), EXIT_OK
    if c == "nodes":
        if cfg.strategy == "q":
            seq = q_sequence(QSequenceSpec(cfg.q, cfg.M))
        else:
            if cfg.N0 is not None and cfg.N is not None:
                spec = HybridSpec(cfg.N0, cfg.N, cfg.M)
            elif cfg.a is not None:
                spec = HybridSpec.for_lorentzian(cfg.a, cfg.M)
            else:
                raise SparseDFTError("--strategy hybrid needs --a or both --N0 and --N")
            seq = hybrid_nodes(spec)
        return seq.to_text(), EXIT_OK
    if c == "verify":
        checks = run_verify(cfg.seed)
        text = "".join(ch.line() + "\n" for ch in checks)
        ok = all(ch.passed for ch in checks)
        text += ("all properties passed\n" if ok
                 else f"{sum(not ch.passed for ch in checks)} property check(s) failed\n")
        return text, EXIT_OK if ok else EXIT_VERIFY
    # user data: sum, dft, sin, cos
    if not cfg.samples_file:
        raise SparseDFTError(f"--samples-file is required for {c}")
    f, sample_ns = load_samples(cfg.samples_file)
    nodes = _nodes_for_user_data(cfg, sample_ns)
    rows = []
    if c == "sum":
        res = series_sum(f, nodes)
        v = complex(res.value)
        rows.append({"re": v.real, "im": v.imag, "M": res.node_count,
                     "cutoff": res.cutoff, "efficiency": res.efficiency})
    else:
        for k in cfg.k:
            if c == "dft":
                res = dft(f, nodes, k)
                v = res.value
            else:
                tr = sine_transform if c == "sin" else cosine_transform
                v = complex(tr(f, nodes, k))
            rows.append({"k": k, "re": v.real, "im": v.imag, "M": len(nodes),
                         "cutoff": nodes.stop, "efficiency": nodes.stop / len(nodes)})
    return render(rows, cfg.format), EXIT_OK


def main(argv=None):
    try:
        cfg = parse_config(argv)
        text, code = run(cfg)
    except (SparseDFTError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    if cfg.out:
        Path(cfg.out).write_text(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())

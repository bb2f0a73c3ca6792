"""Command-line front-end: transform, compress, filter, encode, bench.

Vectors travel as CSV (one "re,im" line per entry) or JSON (array of
[re, im] pairs), selected by file extension; values are emitted with 17
significant digits so files round-trip exactly.  Exit codes: 0 success,
2 bad arguments or domain errors, 3 length mismatch, 4 non-unitary
matrix file.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
import time

import numpy as np

from .core import (
    GTTOperator,
    OpCounter,
    dft_matrix,
    gtt_apply,
    gtt_inverse_apply,
    hadamard,
    make_base_matrix,
    u3,
)
from .encode import compare_transforms, optimize_theta
from .errors import (
    BadSampleCount,
    BadShape,
    GTTError,
    LengthMismatch,
    NotUnitary,
    ZeroVector,
)
from .protocols import compress_fully_quantum, compress_hybrid, filter_natural
from .signals import builtin_signal

_ANGLE_TOKENS = {
    "pi": math.pi,
    "pi/2": math.pi / 2.0,
    "pi/4": math.pi / 4.0,
    "pi/8": math.pi / 8.0,
}


def parse_angle(token: str) -> float:
    token = token.strip().lower()
    if token in _ANGLE_TOKENS:
        return _ANGLE_TOKENS[token]
    if token.startswith("-") and token[1:] in _ANGLE_TOKENS:
        return -_ANGLE_TOKENS[token[1:]]
    try:
        return float(token)
    except ValueError:
        raise BadShape(f"cannot parse angle {token!r}") from None


def _fmt(x: float) -> str:
    return format(float(x), ".17g")


def read_vector(path: str) -> np.ndarray:
    if path.endswith(".json"):
        with open(path) as fh:
            pairs = json.load(fh)
        return np.array([complex(re, im) for re, im in pairs], dtype=np.complex128)
    entries = []
    with open(path) as fh:
        for line in fh:
            line = line.strip()
            if not line:
                continue
            parts = line.split(",")
            if len(parts) == 1:
                entries.append(complex(float(parts[0]), 0.0))
            elif len(parts) == 2:
                entries.append(complex(float(parts[0]), float(parts[1])))
            else:
                raise BadShape(f"bad CSV vector line: {line!r}")
    if not entries:
        raise BadShape(f"empty vector file: {path}")
    return np.array(entries, dtype=np.complex128)


def write_vector(v: np.ndarray, path: str | None) -> None:
    v = np.asarray(v, dtype=np.complex128)
    if path is None:
        for z in v:
            sys.stdout.write(f"{_fmt(z.real)},{_fmt(z.imag)}\n")
        return
    if path.endswith(".json"):
        pairs = [[float(z.real), float(z.imag)] for z in v]
        with open(path, "w") as fh:
            json.dump(pairs, fh)
            fh.write("\n")
        return
    with open(path, "w") as fh:
        for z in v:
            fh.write(f"{_fmt(z.real)},{_fmt(z.imag)}\n")


def read_matrix(path: str) -> np.ndarray:
    """b x b complex matrix: JSON rows of [re, im] pairs, or CSV rows with
    2b interleaved re,im values."""
    if path.endswith(".json"):
        with open(path) as fh:
            rows = json.load(fh)
        return np.array(
            [[complex(re, im) for re, im in row] for row in rows],
            dtype=np.complex128,
        )
    rows = []
    with open(path) as fh:
        for line in fh:
            line = line.strip()
            if not line:
                continue
            vals = [float(t) for t in line.split(",")]
            if len(vals) % 2 != 0:
                raise BadShape(f"matrix row needs re,im pairs: {line!r}")
            rows.append([complex(vals[i], vals[i + 1]) for i in range(0, len(vals), 2)])
    return np.array(rows, dtype=np.complex128)


def parse_base(spec: str) -> np.ndarray:
    spec = spec.strip()
    low = spec.lower()
    if low == "hadamard":
        return hadamard()
    if low.startswith("dft:"):
        return dft_matrix(int(low[4:]))
    if low.startswith("u3:"):
        angles = [parse_angle(t) for t in spec[3:].split(",")]
        if len(angles) != 3:
            raise BadShape(f"u3 base needs 3 angles, got {len(angles)}")
        return u3(*angles)
    W = read_matrix(spec)
    if W.ndim != 2 or W.shape[0] != W.shape[1]:
        raise BadShape(f"matrix file {spec} is not square: shape {W.shape}")
    return make_base_matrix(W.shape[0], W)


def _load_signal(spec: str) -> np.ndarray:
    if spec.lower() in ("s1", "s2", "s3", "table2"):
        return builtin_signal(spec)
    return read_vector(spec)


def _normalized(v: np.ndarray) -> np.ndarray:
    nrm = np.linalg.norm(v)
    if nrm == 0.0:
        raise ZeroVector("input vector is zero")
    return v / nrm


def _write_json(report: dict, path: str | None) -> None:
    text = json.dumps(report, indent=2)
    if path is None:
        sys.stdout.write(text + "\n")
    else:
        with open(path, "w") as fh:
            fh.write(text + "\n")


def _pairs(v) -> list:
    return [[float(z.real), float(z.imag)] for z in np.asarray(v)]


def cmd_transform(args) -> int:
    W = parse_base(args.base)
    op = GTTOperator(W, args.n)
    x = read_vector(args.input)
    y = gtt_inverse_apply(op, x) if args.inverse else gtt_apply(op, x)
    write_vector(y, args.out)
    return 0


def cmd_compress(args) -> int:
    W = parse_base(args.base)
    op = GTTOperator(W, args.n)
    state = _normalized(_load_signal(args.input))
    result = compress_hybrid(state, op, args.k)
    report = {
        "indices": list(result.selection.indices),
        "k": result.selection.k,
        "mass": result.selection.mass,
        "compressed": _pairs(result.compressed),
        "fidelity": result.fidelity,
        "discarded_norm": result.discarded_norm,
        "reconstructed": _pairs(result.reconstructed),
    }
    if args.mode == "quantum":
        outcome = compress_fully_quantum(state, op, result.selection)
        report["success_probability"] = outcome.success_probability
        report["transmitted"] = _pairs(outcome.transmitted)
    _write_json(report, args.out)
    return 0


def cmd_filter(args) -> int:
    theta = parse_angle(args.theta)
    op = GTTOperator(u3(theta, 0.0, math.pi), args.n)
    state = _normalized(read_vector(args.input))
    out = filter_natural(state, op, args.cutoff)
    prefix = args.out_prefix
    write_vector(out.low_branch, f"{prefix}.low.csv")
    write_vector(out.high_branch, f"{prefix}.high.csv")
    write_vector(out.low_spectrum, f"{prefix}.low_spectrum.csv")
    write_vector(out.high_spectrum, f"{prefix}.high_spectrum.csv")
    with open(f"{prefix}.stems.tsv", "w") as fh:
        fh.write("index\tlow\thigh\n")
        for i in range(op.N):
            fh.write(
                f"{i}\t{_fmt(abs(out.low_branch[i]))}\t{_fmt(abs(out.high_branch[i]))}\n"
            )
    return 0


def cmd_encode(args) -> int:
    signal = _normalized(_load_signal(args.signal))
    restarts = None
    if args.restarts:
        restarts = [parse_angle(t) for t in args.restarts.split(",")]
    if args.theta is not None:
        theta = parse_angle(args.theta)
        report = compare_transforms(signal, args.k, params=(theta, 0.0, math.pi))
    else:
        report = optimize_theta(signal, args.k, restarts=restarts, vary_all=args.vary_all)
    _write_json(
        {
            "k": report.k,
            "theta": report.optimal_params.theta,
            "phi": report.optimal_params.phi,
            "lambda": report.optimal_params.lam,
            "gtt_fidelity": report.gtt_fidelity,
            "hadamard_fidelity": report.hadamard_fidelity,
            "dft_fidelity": report.dft_fidelity,
            "optimizer_evals": report.optimizer_evals,
        },
        args.out,
    )
    return 0


def cmd_bench(args) -> int:
    rows = []
    rng = np.random.default_rng(0)
    for spec in args.bases.split(","):
        W = parse_base(spec)
        b = W.shape[0]
        for n_str in args.sizes.split(","):
            n = int(n_str)
            op = GTTOperator(W, n)
            x = rng.standard_normal(op.N) + 1j * rng.standard_normal(op.N)
            counter = OpCounter()
            t0 = time.perf_counter()
            gtt_apply(op, x, counter)
            elapsed = time.perf_counter() - t0
            bound = 4 * op.N * b * n
            rows.append(
                {
                    "base": spec,
                    "b": b,
                    "n": n,
                    "N": op.N,
                    "mults": counter.mults,
                    "adds": counter.adds,
                    "total": counter.total,
                    "bound": bound,
                    "within_bound": counter.total <= bound,
                    "seconds": elapsed,
                }
            )
    _write_json({"results": rows}, args.out)
    if not all(r["within_bound"] for r in rows):
        sys.stderr.write("error: arithmetic work bound exceeded\n")
        return 2
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="gtt", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    t = sub.add_parser("transform", help="apply the forward or inverse transform")
    t.add_argument("input", help="vector file (.csv or .json)")
    t.add_argument("--base", required=True, help="hadamard | dft:b | u3:t,p,l | matrix file")
    t.add_argument("--n", type=int, required=True, help="tensor power")
    t.add_argument("--inverse", action="store_true")
    t.add_argument("--out", default=None, help="output vector file (default stdout)")
    t.set_defaults(func=cmd_transform)

    c = sub.add_parser("compress", help="top-k spectral compression")
    c.add_argument("input", help="vector file or built-in signal name")
    c.add_argument("--base", required=True)
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--k", type=int, required=True)
    c.add_argument("--mode", choices=("hybrid", "quantum"), default="hybrid")
    c.add_argument("--out", default=None, help="JSON report path (default stdout)")
    c.set_defaults(func=cmd_compress)

    f = sub.add_parser("filter", help="natural-order low/high-pass split")
    f.add_argument("input", help="vector file")
    f.add_argument("--theta", required=True, help="base angle (phi=0, lambda=pi)")
    f.add_argument("--n", type=int, required=True)
    f.add_argument("--cutoff", type=int, required=True)
    f.add_argument("--out-prefix", required=True)
    f.set_defaults(func=cmd_filter)

    e = sub.add_parser("encode", help="optimize theta for top-k fidelity")
    e.add_argument("--signal", required=True, help="vector file or s1|s2|s3|table2")
    e.add_argument("--k", type=int, required=True)
    e.add_argument("--restarts", default=None, help="comma-separated theta seeds")
    e.add_argument("--theta", default=None, help="skip optimization, evaluate this angle")
    e.add_argument("--vary-all", action="store_true", help="also tune phi and lambda")
    e.add_argument("--out", default=None)
    e.set_defaults(func=cmd_encode)

    bench = sub.add_parser("bench", help="instrumented op counts and timings")
    bench.add_argument("--bases", default="hadamard", help="comma-separated base specs")
    bench.add_argument("--sizes", default="4,8,12", help="comma-separated tensor powers")
    bench.add_argument("--out", default=None)
    bench.set_defaults(func=cmd_bench)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (LengthMismatch, BadSampleCount) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 3
    except NotUnitary as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 4
    except (GTTError, OSError, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())

"""
Command line front end.

    vecellipse simulate  --dims 3 --count 5 --seed 7 --samples 360 --out run/
    vecellipse analyze   signal.csv --out run/ [--plot]
    vecellipse synth     --spectrum run/spectrum.json --out run/
    vecellipse decompose --c 2,0 --s 0,1

Exit codes: 0 success, 2 usage or file-system error, 3 parse error,
4 numeric/domain error.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

import numpy as np

from . import __version__
from .ellipse import (
    DEFAULT_POLARIZATION_TOL,
    DEFAULT_ZERO_TOL,
    EllipseAB,
    EllipseCS,
    Sinusoid,
    ab_from_cs,
    cs_from_sinusoids,
    eval_superposition,
    planarity_residual,
)
from .io import (
    ParseError,
    dumps,
    ellipse_record,
    parse_vector,
    read_spectrum,
    signal_from_csv,
    spectrum_to_dict,
    write_csv,
    write_json,
)
from .plotting import ellipse_figure, save_svg
from .spectrum import EllipseSpectrum, SpectralBin, ellipse_spectrum, n_bins, synthesize_spectrum

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_PARSE = 3
EXIT_DOMAIN = 4

# zero-bin threshold relative to the largest sample norm
ANALYZE_ZERO_TOL = 1e-10


@dataclass
class RunConfig:
    command: str
    out: Path = Path(".")
    dims: int = 3
    count: int = 5
    seed: int = 0
    samples: int = 360
    tol: float = DEFAULT_POLARIZATION_TOL
    input: Optional[Path] = None
    spectrum: Optional[Path] = None
    time_column: bool = False
    sample_interval: Optional[float] = None
    plot: bool = False
    plot_top: int = 3
    dc: Optional[str] = None
    nyquist: Optional[str] = None
    bins: list = field(default_factory=list)
    c: Optional[str] = None
    s: Optional[str] = None
    json: Optional[str] = None

    @classmethod
    def from_args(cls, ns: argparse.Namespace) -> "RunConfig":
        kw = {k: v for k, v in vars(ns).items() if k in cls.__dataclass_fields__ and v is not None}
        return cls(**kw)


def draw_sinusoids(rng: np.random.Generator, dims: int, count: int, omega: float) -> list[Sinusoid]:
    """
    Random sinusoids: unit directions from normalised Gaussian draws, amplitude
    uniform in [0.5, 1.5], phase uniform in [0, 2 pi).

    Draw order is fixed (all directions, then amplitudes, then phases) and is
    part of the seed contract.
    """
    raw = rng.standard_normal((count, dims))
    amps = rng.uniform(0.5, 1.5, count)
    phases = rng.uniform(0.0, 2.0 * math.pi, count)
    terms = []
    for k in range(count):
        norm = np.linalg.norm(raw[k])
        direction = raw[k] / norm if norm > 0 else np.eye(dims)[0]
        terms.append(Sinusoid(amps[k] * direction, omega, phases[k]))
    return terms


def _ensure_dir(path: Path) -> Path:
    path.mkdir(parents=True, exist_ok=True)
    return path


def cmd_simulate(cfg: RunConfig) -> int:
    if cfg.dims < 2:
        raise ValueError(f"--dims must be at least 2, got {cfg.dims}")
    if cfg.count < 1:
        raise ValueError(f"--count must be at least 1, got {cfg.count}")
    if cfg.samples < 1:
        raise ValueError(f"--samples must be at least 1, got {cfg.samples}")
    if not 0 <= cfg.seed < 2**64:
        raise ValueError("--seed must be an unsigned 64-bit integer")
    out = _ensure_dir(cfg.out)

    omega = 2.0 * math.pi
    rng = np.random.Generator(np.random.PCG64(cfg.seed))
    terms = draw_sinusoids(rng, cfg.dims, cfg.count, omega)
    cs = cs_from_sinusoids(terms)
    ab = ab_from_cs(cs)

    t = np.arange(cfg.samples) / cfg.samples
    resultant = eval_superposition(terms, t)
    parts = [term(t) for term in terms]
    table = np.column_stack([t, resultant, *parts])
    header = ["t"] + [f"f{j + 1}" for j in range(cfg.dims)]
    for k in range(cfg.count):
        header += [f"n{k + 1}_{j + 1}" for j in range(cfg.dims)]
    write_csv(out / "trajectory.csv", table, header)

    scale = sum(term.amplitude for term in terms)
    params = {
        "seed": cfg.seed,
        "dims": cfg.dims,
        "count": cfg.count,
        "omega": omega,
        "samples": cfg.samples,
        "sinusoids": [
            {"direction": term.direction.tolist(), "amplitude": term.amplitude, "phi": term.phi}
            for term in terms
        ],
        "cs": {"c": cs.c.tolist(), "s": cs.s.tolist()},
        "ab": ellipse_record(ab, cfg.tol, DEFAULT_ZERO_TOL * scale),
        "planarity_residual": planarity_residual(resultant, cs),
    }
    write_json(out / "params.json", params)

    fig = ellipse_figure(ab, cs, title=f"{cfg.count} sinusoids in R^{cfg.dims}, seed {cfg.seed}")
    save_svg(fig, out / "ellipse.svg")
    for name in ("trajectory.csv", "ellipse.svg", "params.json"):
        print(out / name)
    return EXIT_OK


def cmd_analyze(cfg: RunConfig) -> int:
    sig = signal_from_csv(cfg.input, cfg.time_column, cfg.sample_interval)
    spec = ellipse_spectrum(sig)
    scale = float(np.max(np.linalg.norm(sig.samples, axis=1)))
    tol_abs = ANALYZE_ZERO_TOL * scale
    out = _ensure_dir(cfg.out)
    write_json(out / "spectrum.json", spectrum_to_dict(spec, cfg.tol, tol_abs))
    print(out / "spectrum.json")

    if cfg.plot:
        ranked = sorted(spec.bins, key=lambda b: (-b.component.power, b.u))
        for b in ranked[: cfg.plot_top]:
            if b.component.norm_a <= tol_abs:
                break
            fig = ellipse_figure(b.component, title=f"bin u={b.u} of M={spec.n_samples}")
            path = out / f"bin_{b.u:04d}.svg"
            save_svg(fig, path)
            print(path)
    return EXIT_OK


def _parse_bin(text: str, m: int) -> SpectralBin:
    parts = text.split(":")
    if len(parts) != 4:
        raise ParseError(f"--bin expects U:A:B:PSI, got {text!r}")
    try:
        u = int(parts[0])
        psi = float(parts[3])
    except ValueError:
        raise ParseError(f"--bin: bad index or phase in {text!r}") from None
    a = parse_vector(parts[1], "--bin a")
    b = parse_vector(parts[2], "--bin b")
    if not 1 <= u <= n_bins(m):
        raise ValueError(f"bin u={u} outside 1..ceil(M/2)-1 = {n_bins(m)} for M={m}")
    return SpectralBin(u, EllipseAB(a, b, psi, 2.0 * math.pi * u / m))


def _inline_spectrum(cfg: RunConfig) -> EllipseSpectrum:
    m = cfg.samples
    if m < 1:
        raise ValueError(f"--samples must be at least 1, got {m}")
    bins = [_parse_bin(text, m) for text in cfg.bins]
    if cfg.dc is not None:
        dc = parse_vector(cfg.dc, "--dc")
    elif bins:
        dc = np.zeros(bins[0].component.dim)
    else:
        raise ParseError("synth needs --spectrum, or --dc and/or --bin")
    nyq = parse_vector(cfg.nyquist, "--nyquist") if cfg.nyquist is not None else None
    if nyq is None and m % 2 == 0:
        nyq = np.zeros(dc.size)
    return EllipseSpectrum(m, dc.size, dc, tuple(bins), nyq, cfg.sample_interval)


def cmd_synth(cfg: RunConfig) -> int:
    spec = read_spectrum(cfg.spectrum) if cfg.spectrum is not None else _inline_spectrum(cfg)
    sig = synthesize_spectrum(spec)
    out = _ensure_dir(cfg.out)
    data = sig.samples
    if cfg.time_column:
        dt = sig.sample_interval if sig.sample_interval is not None else 1.0
        data = np.column_stack([np.arange(sig.n_samples) * dt, data])
    write_csv(out / "signal.csv", data)
    print(out / "signal.csv")
    return EXIT_OK


def cmd_decompose(cfg: RunConfig) -> int:
    if cfg.json is not None:
        src = Path(cfg.json).read_text(encoding="utf-8") if Path(cfg.json).is_file() else cfg.json
        try:
            d = json.loads(src)
            c, s = d["c"], d["s"]
        except (json.JSONDecodeError, KeyError, TypeError):
            raise ParseError("--json must be an object with list fields 'c' and 's'") from None
        try:
            c = np.array(c, dtype=float)
            s = np.array(s, dtype=float)
        except (TypeError, ValueError):
            raise ParseError("--json: c and s must be lists of numbers") from None
    elif cfg.c is not None and cfg.s is not None:
        c = parse_vector(cfg.c, "--c")
        s = parse_vector(cfg.s, "--s")
    else:
        raise ParseError("decompose needs --c and --s, or --json")
    if c.shape != s.shape:
        raise ValueError(f"c and s differ in dimension: {c.size} != {s.size}")
    ab = ab_from_cs(EllipseCS(c, s))
    tol_abs = DEFAULT_ZERO_TOL * max(float(np.linalg.norm(c)), float(np.linalg.norm(s)))
    print(dumps(ellipse_record(ab, cfg.tol, tol_abs)))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="vecellipse", description=__doc__.split("\n\n")[0].strip())
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, out=True):
        sp.add_argument("--tol", type=float, help="relative polarization tolerance (default 1e-6)")
        if out:
            sp.add_argument("--out", type=Path, help="output directory (default: current)")

    sp = sub.add_parser("simulate", help="random same-frequency sinusoids and their ellipse")
    sp.add_argument("--dims", type=int, default=3)
    sp.add_argument("--count", type=int, default=5)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--samples", type=int, default=360, help="samples per cycle")
    common(sp)

    sp = sub.add_parser("analyze", help="ellipse spectrum of a CSV signal")
    sp.add_argument("input", type=Path)
    sp.add_argument("--time-column", action="store_true", help="first CSV column is time")
    sp.add_argument("--sample-interval", type=float)
    sp.add_argument("--plot", action="store_true", help="write SVGs of the dominant bins")
    sp.add_argument("--plot-top", type=int, default=3)
    common(sp)

    sp = sub.add_parser("synth", help="signal CSV from an ellipse spectrum")
    sp.add_argument("--spectrum", type=Path, help="spectrum.json to synthesize")
    sp.add_argument("--samples", type=int, default=8, help="M for inline spectra")
    sp.add_argument("--dc", help="inline DC vector, e.g. --dc=1,2")
    sp.add_argument("--nyquist", help="inline Nyquist vector (even M)")
    sp.add_argument("--bin", dest="bins", action="append", default=[], metavar="U:A:B:PSI",
                    help="inline bin, e.g. 1:1,0:0,0.5:0 (repeatable)")
    sp.add_argument("--sample-interval", type=float)
    sp.add_argument("--time-column", action="store_true", help="write a leading time column")
    common(sp)

    sp = sub.add_parser("decompose", help="major/minor axes from c and s vectors")
    sp.add_argument("--c", help="sine vector, e.g. --c=2,0")
    sp.add_argument("--s", help="cosine vector")
    sp.add_argument("--json", help="JSON text or file with fields c and s")
    common(sp, out=False)
    return p


COMMANDS = {
    "simulate": cmd_simulate,
    "analyze": cmd_analyze,
    "synth": cmd_synth,
    "decompose": cmd_decompose,
}


def main(argv=None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    cfg = RunConfig.from_args(ns)
    try:
        return COMMANDS[cfg.command](cfg)
    except ParseError as exc:
        print(f"vecellipse: parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except OSError as exc:
        print(f"vecellipse: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"vecellipse: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())

"""CSV and JSON reading/writing with fixed, round-trip safe number formatting."""

from __future__ import annotations

import csv
import json
import math
from pathlib import Path

import numpy as np

from .ellipse import EllipseAB, classify_polarization
from .spectrum import EllipseSpectrum, SpectralBin, VectorSignal, n_bins


class ParseError(ValueError):
    """Malformed input file or value; ``line`` is 1-based when known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


def fmt(x: float) -> str:
    """17 significant digits, with signed zero folded to 0."""
    return format(float(x) + 0.0, ".17g")


def dumps(obj, indent: int = 2, _level: int = 0) -> str:
    """
    JSON text with floats written by :func:`fmt`; dict order is kept.

    Lists of plain numbers stay on one line.
    """
    pad = " " * (indent * (_level + 1))
    end = " " * (indent * _level)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{pad}{json.dumps(str(k))}: {dumps(v, indent, _level + 1)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + end + "}"
    if isinstance(obj, (list, tuple, np.ndarray)):
        seq = list(obj)
        if all(isinstance(v, (int, float, np.number)) and not isinstance(v, bool) for v in seq):
            return "[" + ", ".join(dumps(v) for v in seq) + "]"
        items = [pad + dumps(v, indent, _level + 1) for v in seq]
        return "[\n" + ",\n".join(items) + "\n" + end + "]"
    if isinstance(obj, bool) or obj is None:
        return json.dumps(obj)
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        if not math.isfinite(obj):
            raise ValueError(f"cannot write non-finite number {obj}")
        return fmt(obj)
    return json.dumps(str(obj))


def write_json(path, obj) -> None:
    Path(path).write_text(dumps(obj) + "\n", encoding="utf-8")


def parse_vector(text: str, name: str = "vector") -> np.ndarray:
    """Parse ``"1,2,3"`` into a float array."""
    try:
        v = np.array([float(p) for p in text.split(",")], dtype=float)
    except ValueError:
        raise ParseError(f"{name}: expected comma-separated numbers, got {text!r}") from None
    if not np.all(np.isfinite(v)):
        raise ParseError(f"{name}: non-finite entry in {text!r}")
    return v


def _is_number(cell: str) -> bool:
    try:
        float(cell)
    except ValueError:
        return False
    return True


def read_csv(path, time_column: bool = False):
    """
    Read an ``M x N`` numeric CSV, returning ``(samples, times)``.

    A first row with any non-numeric cell is taken as a header. With
    ``time_column`` the leading column is split off as ``times``; otherwise
    ``times`` is None.
    """
    rows = []
    width = None
    with open(path, newline="", encoding="utf-8") as fh:
        for lineno, row in enumerate(csv.reader(fh), start=1):
            if not row or all(not c.strip() for c in row):
                continue
            cells = [c.strip() for c in row]
            if not rows and width is None and not all(map(_is_number, cells)):
                width = len(cells)
                continue
            if width is None:
                width = len(cells)
            elif len(cells) != width:
                raise ParseError(f"expected {width} columns, found {len(cells)}", lineno)
            values = []
            for col, cell in enumerate(cells, start=1):
                try:
                    v = float(cell)
                except ValueError:
                    raise ParseError(f"column {col}: non-numeric cell {cell!r}", lineno) from None
                if not math.isfinite(v):
                    raise ParseError(f"column {col}: non-finite value {cell!r}", lineno)
                values.append(v)
            rows.append(values)
    if not rows:
        raise ParseError(f"{path}: no data rows")
    data = np.array(rows, dtype=float)
    if time_column:
        if data.shape[1] < 2:
            raise ParseError("time column requested but rows have fewer than 2 columns")
        return data[:, 1:], data[:, 0]
    return data, None


def write_csv(path, data, header=None) -> None:
    lines = []
    if header is not None:
        lines.append(",".join(header))
    for row in np.atleast_2d(data):
        lines.append(",".join(fmt(v) for v in row))
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def ellipse_record(e: EllipseAB, tol_rel: float, tol_abs: float) -> dict:
    return {
        "a": e.a.tolist(),
        "b": e.b.tolist(),
        "psi": e.psi,
        "polarization": classify_polarization(e, tol_rel, tol_abs).kind.value,
        "norm_a": e.norm_a,
        "norm_b": e.norm_b,
    }


def spectrum_to_dict(spec: EllipseSpectrum, tol_rel: float, tol_abs: float) -> dict:
    """Field order: n_samples, dim, [sample_interval], dc, [nyquist], bins."""
    out = {"n_samples": spec.n_samples, "dim": spec.dim}
    if spec.sample_interval is not None:
        out["sample_interval"] = spec.sample_interval
    out["dc"] = spec.dc.tolist()
    if spec.nyquist is not None:
        out["nyquist"] = spec.nyquist.tolist()
    bins = []
    for b in spec.bins:
        e = b.component
        rec = {"u": b.u, "freq_cycles_per_record": b.freq_cycles_per_record()}
        if spec.sample_interval is not None:
            rec["freq_hz"] = b.freq_hz(spec.n_samples, spec.sample_interval)
        rec.update(
            a=e.a.tolist(),
            b=e.b.tolist(),
            psi=e.psi,
            polarization=classify_polarization(e, tol_rel, tol_abs).kind.value,
            power=e.power,
        )
        bins.append(rec)
    out["bins"] = bins
    return out


def _field(d: dict, key: str, where: str):
    if key not in d:
        raise ParseError(f"{where}: missing field {key!r}")
    return d[key]


def _vec(value, where: str) -> np.ndarray:
    try:
        v = np.array(value, dtype=float)
    except (TypeError, ValueError):
        raise ParseError(f"{where}: expected a list of numbers") from None
    if v.ndim != 1 or not np.all(np.isfinite(v)):
        raise ParseError(f"{where}: expected a list of finite numbers")
    return v


def spectrum_from_dict(d: dict) -> EllipseSpectrum:
    """
    Build an :class:`EllipseSpectrum` from parsed ``spectrum.json`` content.

    Structural problems raise :class:`ParseError`; out-of-range bins or
    inconsistent dimensions raise plain ValueError.
    """
    if not isinstance(d, dict):
        raise ParseError("spectrum: top level must be an object")
    m_raw = _field(d, "n_samples", "spectrum")
    dim_raw = _field(d, "dim", "spectrum")
    if not all(isinstance(v, int) and not isinstance(v, bool) for v in (m_raw, dim_raw)):
        raise ParseError("spectrum: n_samples and dim must be integers")
    m, dim = m_raw, dim_raw
    if m < 1 or dim < 1:
        raise ValueError(f"n_samples and dim must be positive, got {m} and {dim}")
    dc = _vec(_field(d, "dc", "spectrum"), "dc")
    nyq = _vec(d["nyquist"], "nyquist") if d.get("nyquist") is not None else None
    dt = d.get("sample_interval")
    raw_bins = d.get("bins", [])
    if not isinstance(raw_bins, list):
        raise ParseError("spectrum: bins must be a list")
    bins = []
    for k, rb in enumerate(raw_bins):
        where = f"bins[{k}]"
        if not isinstance(rb, dict):
            raise ParseError(f"{where}: expected an object")
        u = _field(rb, "u", where)
        psi = _field(rb, "psi", where)
        if not isinstance(u, int) or isinstance(u, bool) or not isinstance(psi, (int, float)):
            raise ParseError(f"{where}: u must be an integer and psi a number")
        a = _vec(_field(rb, "a", where), f"{where}.a")
        b = _vec(_field(rb, "b", where), f"{where}.b")
        if not 1 <= u <= n_bins(m):
            raise ValueError(f"{where}: bin u={u} outside 1..ceil(M/2)-1 = {n_bins(m)} for M={m}")
        omega = 2.0 * math.pi * u / m
        bins.append(SpectralBin(u, EllipseAB(a, b, psi, omega)))
    return EllipseSpectrum(m, dim, dc, tuple(bins), nyq, None if dt is None else float(dt))


def read_spectrum(path) -> EllipseSpectrum:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"{path}: {exc.strerror}") from None
    try:
        d = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON ({exc.msg})", exc.lineno) from None
    return spectrum_from_dict(d)


def signal_from_csv(path, time_column: bool = False, sample_interval=None) -> VectorSignal:
    """
    Load a :class:`VectorSignal`; a time column, when present and uniform,
    supplies the sample interval unless one is given explicitly.
    """
    data, times = read_csv(path, time_column)
    if sample_interval is None and times is not None and times.size >= 2:
        dt = (times[-1] - times[0]) / (times.size - 1)
        if dt > 0:
            sample_interval = dt
    return VectorSignal(data, sample_interval)

"""State files, factory specs and report formatting.

A state file is JSON::

    {"dims": [2, 2], "kind": "pure", "data": [[0.7071, 0], 0, 0, [0.7071, 0]]}

``kind`` is ``pure``, ``density`` or ``basis``. ``data`` holds row-major
complex entries as ``[re, im]`` pairs, or plain reals. Matrices may also be
given as nested rows.
"""
from __future__ import annotations

import csv
import io
import json
import math
from pathlib import Path

import numpy as np

from . import states
from .tensor import DensityOperator, PureState, ValidationError

FACTORIES = ("ghz", "w", "cluster", "product", "wnoise", "ghzdiag")


def _one(x) -> complex:
    if isinstance(x, (int, float)) and not isinstance(x, bool):
        return complex(x)
    if isinstance(x, (list, tuple)) and len(x) == 2 and all(isinstance(v, (int, float)) for v in x):
        return complex(x[0], x[1])
    raise ValidationError(f"cannot read complex entry {x!r}")


def _decode_entries(data, side: int | None = None) -> np.ndarray:
    """Flat row-major entries, or ``side`` nested rows of ``side`` entries."""
    if not isinstance(data, list):
        raise ValidationError("'data' must be a list")
    # flat data has side**2 entries, so len(data) == side means nested rows
    if side is not None and len(data) == side and all(isinstance(row, list) and len(row) == side for row in data):
        return np.array([[_one(x) for x in row] for row in data], dtype=complex).reshape(-1)
    return np.array([_one(x) for x in data], dtype=complex)


def _encode_entries(values: np.ndarray) -> list:
    return [[float(z.real), float(z.imag)] for z in np.asarray(values).reshape(-1)]


def state_from_dict(doc: dict):
    try:
        dims = tuple(int(d) for d in doc["dims"])
        kind = doc["kind"]
        side = int(np.prod(dims)) if kind in ("density", "basis") else None
        data = _decode_entries(doc["data"], side)
    except (KeyError, TypeError) as exc:
        raise ValidationError(f"malformed state document: {exc}") from None
    d = int(np.prod(dims))
    if kind == "pure":
        return PureState(data.reshape(-1), dims)
    if kind in ("density", "basis"):
        if data.size != d * d:
            raise ValidationError(f"{kind} needs {d * d} entries for dims {dims}, got {data.size}")
        mat = data.reshape(d, d)
        return DensityOperator(mat, dims) if kind == "density" else mat
    raise ValidationError(f"unknown state kind {kind!r}")


def state_to_dict(state) -> dict:
    if isinstance(state, PureState):
        return {"dims": list(state.dims), "kind": "pure", "data": _encode_entries(state.amplitudes)}
    if isinstance(state, DensityOperator):
        return {"dims": list(state.dims), "kind": "density", "data": _encode_entries(state.matrix)}
    raise TypeError(f"cannot serialize {type(state).__name__}")


def read_state_file(path) -> PureState | DensityOperator:
    try:
        doc = json.loads(Path(path).read_text())
    except OSError as exc:
        raise ValidationError(f"cannot read state file {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise ValidationError(f"state file {path} is not valid JSON: {exc}") from None
    out = state_from_dict(doc)
    if isinstance(out, np.ndarray):
        raise ValidationError(f"{path} holds a basis, not a state")
    return out


def read_basis_file(path) -> np.ndarray:
    doc = json.loads(Path(path).read_text())
    if doc.get("kind") != "basis":
        raise ValidationError(f"{path} is not a basis file (kind must be 'basis')")
    return state_from_dict(doc)


def _int_arg(text: str, what: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise ValidationError(f"{what} must be an integer, got {text!r}") from None


def _options(parts: list[str]) -> dict[str, str]:
    out = {}
    for part in parts:
        if "=" not in part:
            raise ValidationError(f"expected key=value, got {part!r}")
        k, v = part.split("=", 1)
        out[k] = v
    return out


def _angle(text: str) -> float:
    t = text.strip().lower()
    if t in ("pi", "+pi"):
        return math.pi
    if t == "-pi":
        return -math.pi
    return float(t)


def parse_factory(spec: str):
    """Build a state from ``ghz:6``, ``w:3``, ``cluster:12``, ``product:3``,
    ``ghz:3:phase=pi:pattern=010``, ``ghzdiag:0.7,0.3,0,0,0,0,0,0`` or
    ``wnoise:<spec>:p=0.8``."""
    head, _, rest = spec.partition(":")
    if head == "wnoise":
        inner, sep, last = rest.rpartition(":")
        if not sep or not last.startswith("p="):
            raise ValidationError(f"wnoise spec must end with ':p=<weight>', got {spec!r}")
        psi = parse_factory(inner)
        if not isinstance(psi, PureState):
            raise ValidationError("wnoise needs a pure inner state")
        return states.white_noise_mix(psi, float(last[2:]))
    if head == "ghzdiag":
        return states.ghz_diagonal([float(x) for x in rest.split(",")])
    parts = rest.split(":") if rest else []
    if not parts:
        raise ValidationError(f"factory spec {spec!r} needs a party count")
    n = _int_arg(parts[0], "party count")
    opts = _options(parts[1:])
    if head == "ghz":
        pattern = [int(c) for c in opts["pattern"]] if "pattern" in opts else None
        return states.ghz(n, _angle(opts.get("phase", "0")), pattern)
    if opts:
        raise ValidationError(f"factory {head!r} takes no options")
    if head == "w":
        return states.w_state(n)
    if head == "cluster":
        return states.linear_cluster(n)
    if head == "product":
        if n < 1:
            raise ValidationError("product state needs at least one party")
        return states.product_state((2,) * n)
    raise ValidationError(f"unknown factory {head!r}; choose from {FACTORIES}")


def load_source(source: str):
    """A factory spec or a path to a state file."""
    head = source.split(":", 1)[0]
    if head in FACTORIES and ":" in source:
        return parse_factory(source)
    return read_state_file(source)


def as_density(state) -> DensityOperator:
    return state.density() if isinstance(state, PureState) else state


def round_sig(obj, digits: int | None = 6):
    """Round every float in a nested structure to ``digits`` significant digits."""
    if digits is None:
        return obj
    if isinstance(obj, float):
        if not math.isfinite(obj) or obj == 0.0:
            return obj
        return float(f"{obj:.{digits}g}")
    if isinstance(obj, dict):
        return {k: round_sig(v, digits) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [round_sig(v, digits) for v in obj]
    return obj


def dumps_json(obj, digits: int | None = 6) -> str:
    return json.dumps(round_sig(obj, digits), indent=2) + "\n"


def format_number(x, digits: int | None = 6) -> str:
    if isinstance(x, (int, np.integer)) and not isinstance(x, bool):
        return str(int(x))
    x = float(x)
    return repr(x) if digits is None else f"{x:.{digits}g}"


def dumps_csv(header: list[str], rows: list[list], comments: list[str] = (), digits: int | None = 6) -> str:
    buf = io.StringIO()
    for line in comments:
        buf.write(f"# {line}\n")
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([v if isinstance(v, str) else format_number(v, digits) for v in row])
    return buf.getvalue()

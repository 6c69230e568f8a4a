"""Canonical JSON and input parsing shared by the command line tools.

Output is byte-stable: keys are sorted, floats use ``%.17g`` and
non-finite floats become the strings ``"inf"``, ``"-inf"`` and ``"nan"``.
"""

from __future__ import annotations

import json
import math
from pathlib import Path

from .braid import BraidWord, GeometricBraid, from_word
from .looppoly import LoopPoly
from .mixedpoly import MixedPoly
from .trigpoly import TrigPoly

__all__ = ["dumps", "load_json", "load_poly", "load_loop", "load_trig", "load_braid"]


def _encode(x, out: list):
    if x is None:
        out.append("null")
    elif isinstance(x, bool):
        out.append("true" if x else "false")
    elif isinstance(x, int):
        out.append(str(x))
    elif isinstance(x, float):
        if math.isfinite(x):
            text = "%.17g" % x
            if not any(c in text for c in ".en"):
                text += ".0"
            out.append(text)
        else:
            out.append(json.dumps("nan" if math.isnan(x) else ("inf" if x > 0 else "-inf")))
    elif isinstance(x, complex):
        _encode([x.real, x.imag], out)
    elif isinstance(x, str):
        out.append(json.dumps(x, ensure_ascii=False))
    elif isinstance(x, dict):
        out.append("{")
        for i, key in enumerate(sorted(x, key=str)):
            if i:
                out.append(", ")
            out.append(json.dumps(str(key), ensure_ascii=False))
            out.append(": ")
            _encode(x[key], out)
        out.append("}")
    elif isinstance(x, (list, tuple)):
        out.append("[")
        for i, v in enumerate(x):
            if i:
                out.append(", ")
            _encode(v, out)
        out.append("]")
    elif hasattr(x, "item"):
        _encode(x.item(), out)
    elif hasattr(x, "tolist"):
        _encode(x.tolist(), out)
    else:
        raise TypeError(f"cannot encode {type(x).__name__}")


def dumps(obj) -> str:
    out: list = []
    _encode(obj, out)
    return "".join(out) + "\n"


def load_json(path) -> dict:
    return json.loads(Path(path).read_text())


def load_trig(obj) -> TrigPoly:
    """A TrigPoly from ``{"freqs": [[l, re, im], ...]}``, a number or ``[re, im]``."""
    if isinstance(obj, dict):
        return TrigPoly.from_json(obj)
    if isinstance(obj, (list, tuple)):
        return TrigPoly.constant(complex(obj[0], obj[1]))
    return TrigPoly.constant(complex(obj))


def load_loop(obj) -> LoopPoly:
    if "loop" in obj:
        obj = obj["loop"]
    return LoopPoly([load_trig(c) for c in obj["coeffs"]])


def load_poly(obj) -> MixedPoly:
    if "poly" in obj:
        obj = obj["poly"]
    return MixedPoly.from_json(obj)


def load_braid(word: str | None = None, strands_file=None) -> GeometricBraid:
    """A geometric braid from a word such as ``"s=2: s1 s1"`` or a strand CSV file."""
    if (word is None) == (strands_file is None):
        raise ValueError("give exactly one of a braid word or a strand file")
    if word is not None:
        return from_word(BraidWord.parse(word))
    return GeometricBraid.from_csv(Path(strands_file).read_text())

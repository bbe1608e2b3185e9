"""
Hand-transcribed reference data and the small expression syntax it uses.

Weights are written as ``"2w1+w8"`` (``w`` alone means ``w1``), root
combinations as ``"2a1+a2"``; ``"0"`` is zero.  Every data file is pinned by a
SHA-256 digest in ``data/SHA256SUMS`` and checked on load.
"""
from __future__ import annotations

import copy
import hashlib
import json
import re
from functools import lru_cache
from importlib import resources
from typing import Sequence

_TERM = re.compile(r"([+-]?)(\d*)([wa])(\d*)")


class FixtureError(RuntimeError):
    """A data file is missing, malformed or does not match its checksum."""


def parse_expr(text: str, rank: int, letter: str = "w") -> tuple[int, ...]:
    """Parse ``"2w1-w3"`` into a coordinate tuple of length ``rank``."""
    out = [0] * rank
    s = text.replace(" ", "")
    if s == "0":
        return tuple(out)
    pos = 0
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos or m.group(3) != letter:
            raise ValueError(f"cannot parse {text!r} at offset {pos}")
        sign = -1 if m.group(1) == "-" else 1
        coef = int(m.group(2)) if m.group(2) else 1
        idx = int(m.group(4)) if m.group(4) else 1
        if not 1 <= idx <= rank:
            raise ValueError(f"index {idx} out of range in {text!r}")
        out[idx - 1] += sign * coef
        pos = m.end()
    return tuple(out)


def _format(v: Sequence[int], letter: str) -> str:
    parts = []
    for i, c in enumerate(v):
        if not c:
            continue
        mag = "" if abs(c) == 1 else str(abs(c))
        sign = "-" if c < 0 else "+"
        parts.append(f"{sign}{mag}{letter}{i + 1}")
    if not parts:
        return "0"
    s = "".join(parts)
    return s[1:] if s[0] == "+" else s


def format_weight(v: Sequence[int]) -> str:
    return _format(v, "w")


def format_root(v: Sequence[int]) -> str:
    return _format(v, "a")


def _data_dir():
    return resources.files("chevh1") / "data"


@lru_cache(maxsize=None)
def _checksums() -> dict[str, str]:
    text = (_data_dir() / "SHA256SUMS").read_text()
    out = {}
    for line in text.splitlines():
        if line.strip():
            digest, name = line.split()
            out[name] = digest
    return out


def load(name: str) -> dict:
    """Load ``data/<name>`` after checking its SHA-256 digest.

    Returns a fresh copy, so callers cannot alter the cached reference data.
    """
    return copy.deepcopy(_load_verified(name))


@lru_cache(maxsize=None)
def _load_verified(name: str) -> dict:
    raw = (_data_dir() / name).read_bytes()
    want = _checksums().get(name)
    if want is None:
        raise FixtureError(f"no checksum recorded for {name}")
    got = hashlib.sha256(raw).hexdigest()
    if got != want:
        raise FixtureError(f"checksum mismatch for {name}: {got} != {want}")
    return json.loads(raw)


def hasse_figures() -> dict:
    return load("hasse_figures.json")


def weight_tables() -> dict:
    return load("weight_tables.json")


def paper_tables() -> dict:
    return load("paper_tables.json")

"""Shipped matrix fixtures, checked against SHA-256 digests on load."""

from __future__ import annotations

import hashlib
from importlib import resources
from pathlib import Path
from typing import Optional

from .linalg import IntMatrix
from .matio import parse_text


class FixtureError(RuntimeError):
    pass


def _package_dir() -> Path:
    return Path(str(resources.files(__package__) / "fixtures"))


def manifest() -> dict[str, str]:
    out = {}
    for line in (_package_dir() / "SHA256SUMS").read_text().splitlines():
        if line.strip():
            digest, name = line.split()
            out[name] = digest
    return out


def load(name: str, directory: Optional[Path] = None) -> IntMatrix:
    """Load ``name`` (e.g. ``"b_31"``) from ``directory`` or the package."""
    fname = name if name.endswith(".txt") else name + ".txt"
    path = Path(directory or _package_dir()) / fname
    try:
        raw = path.read_bytes()
    except OSError as exc:
        raise FixtureError(f"{fname}: {exc.strerror}") from None
    expected = manifest().get(fname)
    if expected is None:
        raise FixtureError(f"{fname} is not a known fixture")
    if hashlib.sha256(raw).hexdigest() != expected:
        raise FixtureError(f"{fname}: digest mismatch")
    return parse_text(raw.decode())


def path(name: str) -> Path:
    fname = name if name.endswith(".txt") else name + ".txt"
    return _package_dir() / fname

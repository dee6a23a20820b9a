"""Named example graphs, transcribed by hand and guarded by SHA-256 checksums.

Each fixture lives in a DIMACS file next to this module; ``c label i name``
comment lines carry the vertex names used in the drawings.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from importlib import resources

from ..errors import CongreedyError
from ..graph import Graph, parse_graph


class FixtureChecksumError(CongreedyError):
    pass


@dataclass(frozen=True)
class Fixture:
    name: str
    graph: Graph
    expected: dict = field(default_factory=dict)
    provenance: str = ""
    expensive: bool = False


_META = {
    "fish": (
        {"chi": 3, "chi_c": 3, "gamma_c": 4, "verdict": "bad", "bad_ordering": ["v1", "v2", "v3", "v4", "v5", "v6"]},
        "fish: transcribed drawing; verdict and bad ordering v1..v6 as published, numbers re-derived by the oracles",
        False,
    ),
    "gem": (
        {"chi": 3, "chi_c": 3, "gamma_c": 4, "verdict": "bad", "bad_ordering": ["v1", "v2", "v3", "v4", "v5"]},
        "gem: transcribed drawing; verdict and bad ordering v1..v5 as published, numbers re-derived by the oracles",
        False,
    ),
    "ugly-cubic": (
        {"chi": 3, "chi_c": 4, "verdict": "ugly"},
        "planar cubic graph on 18 vertices, published as ugly; chi and chi_c re-derived by the oracles",
        False,
    ),
    "ugly-claw-free": (
        {"verdict": "ugly"},
        "planar claw-free graph on 30 vertices, published as ugly; full check needs --expensive",
        True,
    ),
    "ugly-line": (
        {"verdict": "ugly"},
        "planar line graph on 42 vertices, published as ugly; full check needs --expensive",
        True,
    ),
}

NAMES = tuple(_META)


def _read(filename: str) -> bytes:
    return resources.files(__package__).joinpath(filename).read_bytes()


def checksums() -> dict[str, str]:
    out = {}
    for line in _read("SHA256SUMS").decode().splitlines():
        if line.strip():
            digest, name = line.split()
            out[name] = digest
    return out


def _labels(text: str) -> list[str] | None:
    labels: dict[int, str] = {}
    for line in text.splitlines():
        parts = line.split()
        if len(parts) == 4 and parts[:2] == ["c", "label"]:
            labels[int(parts[2]) - 1] = parts[3]
    if not labels:
        return None
    return [labels[i] for i in range(len(labels))]


def load(name: str) -> Fixture:
    if name not in _META:
        raise KeyError(f"unknown fixture {name!r}; choose from {', '.join(NAMES)}")
    filename = f"{name}.col"
    raw = _read(filename)
    if hashlib.sha256(raw).hexdigest() != checksums().get(filename):
        raise FixtureChecksumError(f"{filename} does not match its recorded checksum")
    text = raw.decode()
    g = parse_graph(text, "dimacs")
    labels = _labels(text)
    if labels is not None:
        g = Graph(g.n, g.edges, tuple(labels))
    expected, provenance, expensive = _META[name]
    return Fixture(name, g, dict(expected), provenance, expensive)


def vertex_by_label(g: Graph, label: str) -> int:
    if g.labels is None:
        return int(label)
    return g.labels.index(label)

"""
Worked examples, each bound to the scheme that computes it and, where one
exists, to an independent oracle.

``REGISTRY`` maps an entry name to a :class:`GalleryEntry`.  ``run`` and
``oracle`` take an argparse-style namespace (the entry's arguments plus
``fuel``, ``seed`` and ``depth``) and return text; ``sample`` draws such
arguments from inside the entry's bounds.  Entries with ``cli`` set become
subcommands of the command line.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable


@dataclass(frozen=True)
class GalleryEntry:
    name: str
    scheme: str
    summary: str
    run: Callable[[Any], str]
    oracle: Callable[[Any], str] | None = None
    arguments: tuple = field(default=())   # (flags, argparse keyword dict) pairs
    bounds: str = ""                        # where run and oracle are expected to agree
    sample: Callable[[Any], dict] | None = None   # rng -> arguments inside the bounds
    cli: bool = True


REGISTRY: dict[str, GalleryEntry] = {}


def register(entry: GalleryEntry) -> GalleryEntry:
    if entry.name in REGISTRY:
        raise ValueError(f"duplicate gallery entry {entry.name!r}")
    REGISTRY[entry.name] = entry
    return entry


def get(name: str) -> GalleryEntry:
    return REGISTRY[name]


from . import entries  # noqa: E402,F401  (populates REGISTRY)

"""Finite categories, Grothendieck constructions and the fibrewise/global
monoidal transfer.

Entities cross the boundary as their canonical JSON text; see the README for
the interchange format.
"""

from ._catkit import (
    CatError,
    ParseError,
    canonical,
    check,
    cli,
    cocartesian_witness,
    fibrewise_to_global,
    global_to_fibrewise,
    grothendieck,
    indexed_of,
    kind,
    monoidal_grothendieck,
    roundtrip,
)

__all__ = [
    "CatError",
    "ParseError",
    "canonical",
    "check",
    "cli",
    "cocartesian_witness",
    "fibrewise_to_global",
    "global_to_fibrewise",
    "grothendieck",
    "indexed_of",
    "kind",
    "monoidal_grothendieck",
    "roundtrip",
]

"""Process-wide configuration.

A single base seed feeds every randomized search (module decomposition,
isomorphism testing).  All searches are verified constructions — the seed
only affects which certified witness is found first — so results are
deterministic for a fixed seed.
"""

from __future__ import annotations

_STATE = {"seed": 0}


def set_seed(seed) -> None:
    _STATE["seed"] = int(seed)


def get_seed() -> int:
    return _STATE["seed"]


def stream_seed(base: int) -> int:
    """Derive the seed of a named random stream from the global seed."""
    return (int(base) * 1000003 + _STATE["seed"] * 7919 + 1) % (2**31 - 1)

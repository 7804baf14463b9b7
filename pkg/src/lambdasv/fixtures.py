"""Loading of the transcribed reference tables.

The tables live as JSON under ``lambdasv/fixtures``; a different directory can
be selected with ``$LAMBDASV_FIXTURES`` or by passing ``directory`` explicitly.
"""

from __future__ import annotations

import json
import os
from pathlib import Path

from .exactnum import D_SV, CVec4

ENV_VAR = "LAMBDASV_FIXTURES"
PACKAGE_DIR = Path(__file__).with_name("fixtures")

STATES = "table1_states.json"
TYPES = "table1_types.json"
BASES = "table2_bases.json"
OPPOSITES = {"J": "table3_opposites_J.json",
             "J1": "table5_opposites_J1.json",
             "J2": "table6_opposites_J2.json"}
BASIS_PAIRS = "table4_basis_pairs_J.json"


class FixtureError(RuntimeError):
    """A fixture file is missing or malformed."""


def fixture_dir(directory: str | os.PathLike | None = None) -> Path:
    if directory is not None:
        return Path(directory)
    env = os.environ.get(ENV_VAR)
    return Path(env) if env else PACKAGE_DIR


def _load(name: str, directory=None):
    path = fixture_dir(directory) / name
    try:
        with open(path) as fh:
            return json.load(fh)
    except FileNotFoundError as exc:
        raise FixtureError(f"missing fixture {path}") from exc
    except json.JSONDecodeError as exc:
        raise FixtureError(f"corrupt fixture {path}: {exc}") from exc


def load_states(directory=None) -> list[CVec4]:
    """The 120 table vectors, in table index order (index 1 first)."""
    raw = _load(STATES, directory)
    try:
        vecs = [CVec4.from_tuples(D_SV, row) for row in raw]
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise FixtureError(f"malformed state fixture: {exc}") from exc
    if len(vecs) != 120:
        raise FixtureError(f"expected 120 states, found {len(vecs)}")
    bad = [k for k, v in enumerate(vecs, start=1) if not v.is_unit()]
    if bad:
        raise FixtureError(f"state rows {bad[:5]} are not unit vectors")
    return vecs


def load_types(directory=None) -> list[int]:
    raw = _load(TYPES, directory)
    if len(raw) != 120 or not all(t in (1, 2, 3, 4) for t in raw):
        raise FixtureError("malformed type fixture")
    return list(raw)


def load_bases(directory=None) -> tuple[list[tuple[int, int, int, int]], list[int]]:
    """The 210 table bases (as table-index quadruples) and the 30 underlined basis ids."""
    raw = _load(BASES, directory)
    try:
        bases = [tuple(int(x) for x in b) for b in raw["bases"]]
        underlined = [int(x) for x in raw["underlined"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise FixtureError(f"malformed basis fixture: {exc}") from exc
    if len(bases) != 210 or any(len(b) != 4 for b in bases) or len(underlined) != 30:
        raise FixtureError("basis fixture has the wrong shape")
    return bases, underlined


def _pairs(name: str, n: int, directory=None) -> dict[int, int]:
    raw = _load(name, directory)
    try:
        pairs = {int(a): int(b) for a, b in raw}
    except (TypeError, ValueError) as exc:
        raise FixtureError(f"malformed pair fixture {name}: {exc}") from exc
    if sorted(pairs) != list(range(1, n + 1)):
        raise FixtureError(f"pair fixture {name} does not cover 1..{n}")
    return pairs


def load_opposites(which: str, directory=None) -> dict[int, int]:
    return _pairs(OPPOSITES[which], 120, directory)


def load_basis_pairs(directory=None) -> dict[int, int]:
    return _pairs(BASIS_PAIRS, 210, directory)

import json
import os
from dataclasses import dataclass, field
from functools import lru_cache

from dacite import Config, from_dict
from sympy import Matrix

from config import STOKES_TABLES_FIXTURE, P2_COLLECTIONS_FIXTURE, G24_CONNECTION_FIXTURE, QMONO_FIXTURES_PATH
from core.errors import FixtureError
from core.types import BundleKind
from logger import get_logger

logger = get_logger()


@dataclass
class StokesEntry:
    r: int
    k: int
    chamber: int
    S: Matrix


@dataclass
class CollectionItem:
    kind: BundleKind
    p: int = 0
    twist: int = 0


@dataclass
class CollectionRow:
    chamber: int
    S: Matrix
    collection: list[CollectionItem] = field(default_factory=list)


_CONFIG = Config(type_hooks={Matrix: Matrix}, cast=[BundleKind])


def get_fixture_path(name: str) -> str:
    return os.path.join(QMONO_FIXTURES_PATH, name)


@lru_cache(maxsize=None)
def load_fixture(name: str) -> dict:
    path = get_fixture_path(name)
    if not os.path.isfile(path):
        raise FixtureError(f"fixture {name} not found under {QMONO_FIXTURES_PATH}")
    try:
        with open(path, "r", encoding="utf-8") as handle:
            payload = json.load(handle)
    except json.JSONDecodeError as exc:
        raise FixtureError(f"fixture {name} is not valid JSON: {exc}") from exc
    logger.debug(f"[FIXTURE] loaded {path}")
    return payload


def _records(name: str, key: str, data_class) -> list:
    payload = load_fixture(name)
    try:
        return [from_dict(data_class=data_class, data=item, config=_CONFIG) for item in payload[key]]
    except (KeyError, TypeError, ValueError) as exc:
        raise FixtureError(f"fixture {name} is malformed: {exc}") from exc


def stokes_tables() -> dict[tuple[int, int, int], Matrix]:
    """Tabulated Stokes matrices keyed by (r, k, chamber)."""
    return {(e.r, e.k, e.chamber): e.S for e in _records(STOKES_TABLES_FIXTURE, "tables", StokesEntry)}


def p2_collection_rows() -> list[CollectionRow]:
    return sorted(_records(P2_COLLECTIONS_FIXTURE, "rows", CollectionRow), key=lambda row: row.chamber)


def g24_columns() -> list[list[str]]:
    payload = load_fixture(G24_CONNECTION_FIXTURE)
    if "columns" not in payload:
        raise FixtureError(f"fixture {G24_CONNECTION_FIXTURE} has no columns")
    return payload["columns"]

import logging
import os
from fractions import Fraction
from functools import lru_cache
from typing import Any, Dict

import orjson
from pydantic import BaseModel

from config import FIXTURES_DIR, SUPPORTED_FIXTURE_TYPES
from errors import QuiverParseError, UnsupportedInput

# Configure logging
logger = logging.getLogger(__name__)


def fixture_path(dynkin_type: str, fixtures_dir: str = FIXTURES_DIR) -> str:
    if dynkin_type not in SUPPORTED_FIXTURE_TYPES:
        raise UnsupportedInput(
            f"No published data for {dynkin_type}; available: {', '.join(SUPPORTED_FIXTURE_TYPES)}"
        )
    return os.path.join(fixtures_dir, f"{dynkin_type.lower()}.json")


def read_json(path: str) -> Any:
    try:
        with open(path, "rb") as handle:
            return orjson.loads(handle.read())
    except FileNotFoundError:
        raise UnsupportedInput(f"File not found: {path}")
    except orjson.JSONDecodeError as e:
        raise QuiverParseError(f"Invalid JSON in {path}: {str(e)}")


@lru_cache(maxsize=8)
def load_fixture(dynkin_type: str, fixtures_dir: str = FIXTURES_DIR) -> Dict[str, Any]:
    """Fixture document for a Dynkin type, read once per process."""
    path = fixture_path(dynkin_type, fixtures_dir)
    data = read_json(path)
    logger.info(f"Loaded fixture {path}")
    return data


def serialize_doc(doc):
    """Convert models and exact numbers into JSON-ready values."""
    if doc is None:
        return None

    if isinstance(doc, BaseModel):
        return serialize_doc(doc.model_dump())

    if isinstance(doc, (list, tuple)):
        return [serialize_doc(item) for item in doc]

    if isinstance(doc, dict):
        return {str(k): serialize_doc(v) for k, v in doc.items()}

    if isinstance(doc, bytes):
        return doc.hex()

    if isinstance(doc, Fraction):
        return str(doc) if doc.denominator != 1 else int(doc)

    return doc


def dumps(data: Any) -> bytes:
    return orjson.dumps(serialize_doc(data), option=orjson.OPT_INDENT_2 | orjson.OPT_SORT_KEYS)


def write_json(path: str, data: Any) -> None:
    try:
        directory = os.path.dirname(os.path.abspath(path))
        os.makedirs(directory, exist_ok=True)
        with open(path, "wb") as handle:
            handle.write(dumps(data))
        logger.info(f"Wrote {path}")
    except Exception as e:
        logger.error(f"Error in write_json: {str(e)}")
        raise

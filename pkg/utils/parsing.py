import re
from typing import Optional, Tuple

import orjson
from pydantic import ValidationError

from errors import QuiverParseError
from models.quiver import Quiver, VertexPermutation

_TUPLE_RE = re.compile(r'\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\)')
_TUPLE_LIST_RE = re.compile(r'^\s*\(\s*-?\d+\s*,\s*-?\d+\s*\)(\s*,?\s*\(\s*-?\d+\s*,\s*-?\d+\s*\))*\s*,?\s*$')
_CYCLE_RE = re.compile(r'\(([\d,\s]+)\)')
_LABEL_RE = re.compile(r'^\s*A_?\{?(\d+)\}?(\^\{?op\}?)?\s*@\s*(E[678])\s*$', re.IGNORECASE)


def parse_quiver_text(text: str, n: Optional[int] = None) -> Quiver:
    """
    Parse the arrow tuple format "(1,2), (2,3), ..." where (a,b) is an arrow a -> b.

    Args:
        text (str): comma-separated tuples
        n (int): vertex count; defaults to the largest label

    Returns:
        Quiver: validated quiver

    Raises:
        QuiverParseError: malformed tuples, loops or 2-cycles
    """
    if not text or not isinstance(text, str):
        raise QuiverParseError("Empty quiver text")
    if not _TUPLE_LIST_RE.match(text):
        raise QuiverParseError(f"Malformed tuple list: {text!r}")

    arrows = [(int(s), int(t)) for s, t in _TUPLE_RE.findall(text)]
    for source, target in arrows:
        if source < 1 or target < 1:
            raise QuiverParseError(f"Vertex labels start at 1: ({source},{target})")
        if source == target:
            raise QuiverParseError(f"Loop at vertex {source}")
    try:
        return Quiver.from_arrows(arrows, n=n)
    except (ValidationError, ValueError) as e:
        raise QuiverParseError(f"Invalid quiver: {_first_error(e)}")


def parse_quiver_json(payload) -> Quiver:
    """Parse {"n": int, "arrows": [[s, t], ...]} given as text, bytes or an already decoded dict."""
    try:
        data = orjson.loads(payload) if isinstance(payload, (str, bytes)) else payload
    except orjson.JSONDecodeError as e:
        raise QuiverParseError(f"Invalid JSON: {str(e)}")

    if not isinstance(data, dict) or "arrows" not in data:
        raise QuiverParseError('Quiver JSON needs an "arrows" list')
    arrows = data["arrows"]
    if not isinstance(arrows, list) or not all(
        isinstance(arrow, (list, tuple)) and len(arrow) == 2 and all(isinstance(v, int) for v in arrow)
        for arrow in arrows
    ):
        raise QuiverParseError('"arrows" must be a list of [source, target] integer pairs')
    for source, target in arrows:
        if source == target:
            raise QuiverParseError(f"Loop at vertex {source}")
    try:
        return Quiver.from_arrows(arrows, n=data.get("n"))
    except (ValidationError, ValueError) as e:
        raise QuiverParseError(f"Invalid quiver: {_first_error(e)}")


def parse_quiver(value: str) -> Quiver:
    """Accept either the tuple format or the JSON format."""
    stripped = value.strip()
    if stripped.startswith("{"):
        return parse_quiver_json(stripped)
    return parse_quiver_text(stripped)


def parse_permutation(text: str, n: int) -> VertexPermutation:
    """
    Parse disjoint-cycle notation such as "(135)(67)"; "(1)" is the identity.

    Cycles on more than nine vertices may separate entries with commas: "(1,10)".
    """
    if not text or not re.fullmatch(r'\s*(\([\d,\s]+\)\s*)+', text):
        raise QuiverParseError(f"Malformed permutation: {text!r}")

    mapping = {}
    for body in _CYCLE_RE.findall(text):
        if "," in body:
            cycle = [int(v) for v in body.split(",") if v.strip()]
        else:
            cycle = [int(ch) for ch in body if not ch.isspace()]
        if len(set(cycle)) != len(cycle) or any(v < 1 or v > n for v in cycle):
            raise QuiverParseError(f"Invalid cycle ({body}) for {n} vertices")
        if len(cycle) == 1:
            continue
        for position, vertex in enumerate(cycle):
            if vertex in mapping:
                raise QuiverParseError(f"Cycles in {text!r} are not disjoint")
            mapping[vertex] = cycle[(position + 1) % len(cycle)]
    return VertexPermutation.from_mapping(mapping, n)


def parse_label(text: str) -> Optional[Tuple[str, bool, str]]:
    """
    Split a catalog label reference "A7@E6" or "A5^op@E8" into ("A7", is_opposite, "E6").

    Returns None when the text is not a label reference.
    """
    match = _LABEL_RE.match(text or "")
    if not match:
        return None
    return f"A{int(match.group(1))}", bool(match.group(2)), match.group(3).upper()


def _first_error(e: Exception) -> str:
    if isinstance(e, ValidationError):
        errors = e.errors()
        if errors:
            return errors[0]["msg"]
    return str(e)

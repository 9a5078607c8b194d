import json
import logging
import re
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Sequence, Tuple

from commons.constants import (
    CATALOG_GL_UPPER, CATALOG_HEISENBERG, CATALOG_SP, KEY_ALGEBRA, KEY_BRACKETS, KEY_C, KEY_COEFFS, KEY_DIM, KEY_I,
    KEY_J, KEY_K, KEY_LABELS, KEY_OUT, LABEL_HEIS_Z, LABEL_MATRIX_ENTRY,
)
from commons.errors import ParseError
from commons.utils import to_rational
from exact_core.subspace import Subspace
from lie_structures.algebra_ops import make_algebra
from lie_structures.catalog import load_catalog, parse_catalog_name
from lie_structures.models import Functional, NilpotentLieAlgebra, WeightedLeviAction
from orbit_method.root_datum import RootDatum, gl_root_datum, sp_root_datum

logger = logging.getLogger(__name__)

SHORTHAND_PSI_AB = re.compile(r"^psi_ab\(\s*([^,()]+)\s*,\s*([^,()]+)\s*\)$")
SHORTHAND_F = re.compile(r"^f\(\s*([^,()]+)\s*\)$")
ASSIGNMENT = re.compile(r"^([A-Za-z_][A-Za-z0-9_]*)=(.*)$", re.DOTALL)


@dataclass(frozen=True)
class AlgebraInput:
    """Parsed algebra argument: a catalog entry with its Levi action, or a bare JSON table"""
    spec: str
    algebra: NilpotentLieAlgebra
    levi: Optional[WeightedLeviAction] = None
    family: Optional[str] = None
    parameter: Optional[int] = None

    def root_datum(self) -> Optional[RootDatum]:
        if self.family == CATALOG_GL_UPPER:
            return gl_root_datum(self.parameter)
        if self.family == CATALOG_SP:
            return sp_root_datum(self.parameter)
        return None

    def require_levi(self) -> WeightedLeviAction:
        if self.levi is None:
            raise ParseError(KEY_ALGEBRA, "this command needs a catalog algebra with a Levi action")
        return self.levi


def _load_json(text: str, field: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(field, e.msg, e.lineno)


def algebra_from_dict(payload: Dict[str, Any]) -> NilpotentLieAlgebra:
    """{"dim": n, "labels": [...], "brackets": [{"i": .., "j": .., "out": [{"k": .., "c": "p/q"}]}]}"""
    if KEY_DIM not in payload:
        raise ParseError(KEY_DIM, "missing")
    dim = payload[KEY_DIM]
    if not isinstance(dim, int) or dim < 0:
        raise ParseError(KEY_DIM, f"expected a non-negative integer, got {dim!r}")
    brackets = {}
    for position, entry in enumerate(payload.get(KEY_BRACKETS, [])):
        try:
            pair = (int(entry[KEY_I]), int(entry[KEY_J]))
            out = {int(o[KEY_K]): to_rational(o[KEY_C], f"{KEY_BRACKETS}[{position}].{KEY_C}") for o in entry[KEY_OUT]}
        except (KeyError, TypeError, ValueError) as e:
            raise ParseError(f"{KEY_BRACKETS}[{position}]", f"malformed bracket entry ({e})")
        brackets[pair] = out
    return make_algebra(dim, brackets, payload.get(KEY_LABELS), payload.get("name", "custom"))


def parse_algebra(spec: str) -> AlgebraInput:
    """Catalog name ("gl_upper:4", "sp:3", "heis:2") or an inline JSON algebra"""
    text = spec.strip()
    if text.startswith("{"):
        return AlgebraInput(spec, algebra_from_dict(_load_json(text, KEY_ALGEBRA)))
    family, parameter = parse_catalog_name(text)
    algebra, levi = load_catalog(text)
    return AlgebraInput(text, algebra, levi, family, parameter)


def _f_shorthand(source: AlgebraInput, a) -> Functional:
    alg = source.algebra
    if source.family == CATALOG_GL_UPPER:
        label = LABEL_MATRIX_ENTRY.format(i=1, j=source.parameter)
    elif source.family == CATALOG_SP:
        label = LABEL_MATRIX_ENTRY.format(i=1, j=2 * source.parameter)
    elif source.family == CATALOG_HEISENBERG:
        label = LABEL_HEIS_Z
    else:
        raise ParseError("functional", "f(a) needs a catalog algebra")
    return Functional.from_labels(alg, {label: a})


def parse_functional(source: AlgebraInput, text: str) -> Functional:
    """
    Functional in one of the accepted spellings

    Args:
        source: the parsed algebra
        text: {"label": "p/q", ...}, {"algebra": .., "coeffs": {..}}, psi_ab(a,b) on gl_upper:4,
            or f(a) for the corner functional of gl_upper:n / sp:n (the central z* on heis:m)
    """
    stripped = text.strip()
    match = SHORTHAND_PSI_AB.match(stripped)
    if match:
        if source.family != CATALOG_GL_UPPER or source.parameter != 4:
            raise ParseError("functional", "psi_ab(a,b) is defined on gl_upper:4 only")
        a = to_rational(match.group(1), "a")
        b = to_rational(match.group(2), "b")
        return Functional.from_labels(source.algebra, {"e_1,4": a, "e_2,3": b})
    match = SHORTHAND_F.match(stripped)
    if match:
        return _f_shorthand(source, to_rational(match.group(1), "a"))
    payload = _load_json(stripped, "functional")
    if not isinstance(payload, dict):
        raise ParseError("functional", "expected a JSON object")
    if KEY_COEFFS in payload and payload.get(KEY_ALGEBRA) == source.spec:
        payload = payload[KEY_COEFFS]
    return Functional.from_dict(source.algebra, payload)


def _coordinate(alg: NilpotentLieAlgebra, entry: Any, field: str) -> int:
    """A basis position given by label or 0-based index"""
    if isinstance(entry, str):
        return alg.label_index(entry)
    if isinstance(entry, bool) or not isinstance(entry, int) or not 0 <= entry < alg.dim:
        raise ParseError(field, f"{entry!r} is not a basis index of a {alg.dim}-dimensional algebra")
    return entry


def parse_flag(source: AlgebraInput, text: str) -> List[Subspace]:
    """JSON list of coordinate sets, each given by indices or labels"""
    payload = _load_json(text, "flag")
    if not isinstance(payload, list):
        raise ParseError("flag", "expected a list of coordinate sets")
    alg = source.algebra
    terms = []
    for position, term in enumerate(payload):
        if not isinstance(term, list):
            raise ParseError(f"flag[{position}]", "expected a list")
        coords = [_coordinate(alg, c, f"flag[{position}]") for c in term]
        terms.append(Subspace.from_coordinates(alg.dim, coords))
    return terms


def parse_coordinate_set(source: AlgebraInput, text: str) -> Subspace:
    payload = _load_json(text, "subalgebra")
    if not isinstance(payload, list):
        raise ParseError("subalgebra", "expected a list of coordinates")
    alg = source.algebra
    coords = [_coordinate(alg, c, "subalgebra") for c in payload]
    return Subspace.from_coordinates(alg.dim, coords)


def parse_lambda(text: str) -> Tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(",") if part.strip() != "")
    except ValueError:
        raise ParseError("lambda", f"expected comma-separated integers, got '{text}'")


def split_arguments(arguments: Sequence[str]) -> Tuple[List[str], Dict[str, str]]:
    """
    Separate positional arguments from key=value ones

    JSON objects and shorthands never start with an identifier followed by '=', so
    psi={"e_1,4":"1"} is an assignment while {"e_1,4":"1"} is positional.
    """
    positional = []
    assignments = {}
    for argument in arguments:
        match = ASSIGNMENT.match(argument)
        if match:
            assignments[match.group(1)] = match.group(2)
        else:
            positional.append(argument)
    return positional, assignments


def load_arguments_file(path: str) -> Dict[str, str]:
    """
    Read command arguments from a JSON file

    The file holds one object whose values are argument strings or JSON values; JSON values
    are turned back into their text form, so {"algebra": {...}, "psi": {...}} works as well
    as {"algebra": "gl_upper:4", "psi": "psi_ab(1,1)"}.
    """
    try:
        with open(path, 'r') as f:
            text = f.read()
    except OSError as e:
        raise ParseError("file", f"cannot read {path}: {e.strerror}")
    payload = _load_json(text, "file")
    if not isinstance(payload, dict):
        raise ParseError("file", "expected a JSON object of arguments")
    return {key: value if isinstance(value, str) else json.dumps(value) for key, value in payload.items()}

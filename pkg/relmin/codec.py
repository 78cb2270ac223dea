"""
JSON encodings. Rationals travel as "p/q" or "p" strings so nothing passes
through floating point.

    CD element     {"level": l, "coeffs": ["p/q", ...]}            (2^l entries)
    Heisenberg     {"a": CD, "x": [CD...], "f": [CD...], "level": l, "n": n, "pairing": "xf"|"fx"}
    matrix         {"size": m, "level": l, "rows": [[CD...], ...]}  (row-major)

Decoders also accept a bare rational string wherever a CD element is
expected; it is read as a real element of the surrounding level.
"""
import json
from fractions import Fraction
from typing import Any, Dict, List, Sequence, Union

from relmin.algebra.cayley_dickson import CDElement
from relmin.algebra.scalars import format_rational, to_rational
from relmin.errors import MalformedInputError, ShapeError
from relmin.groups.heisenberg import BiadditiveMap, HeisenbergElement, Pairing
from relmin.groups.unitriangular import UniTriMatrix

JSONValue = Union[Dict[str, Any], List[Any], str, int]


def encode_rational(q: Fraction) -> str:
    return format_rational(q)


def decode_rational(value: Any) -> Fraction:
    if isinstance(value, (str, int)) and not isinstance(value, bool):
        return to_rational(value)
    raise MalformedInputError(f"expected a rational string; got {value!r}")


def require_key(obj: Any, key: str) -> Any:
    if not isinstance(obj, dict):
        raise MalformedInputError(f"expected a JSON object; got {obj!r}")
    if key not in obj:
        raise MalformedInputError(f"missing key {key!r}")
    return obj[key]


def require_int(obj: Any, key: str) -> int:
    value = require_key(obj, key)
    if isinstance(value, bool) or not isinstance(value, int):
        raise MalformedInputError(f"{key!r} must be an integer; got {value!r}")
    return value


def _build(factory, *args):
    """Construct a value from decoded JSON; shape problems are input problems."""
    try:
        return factory(*args)
    except ShapeError as exc:
        raise MalformedInputError(str(exc)) from exc


def encode_cd(x: CDElement, compact: bool = False) -> JSONValue:
    """`compact` writes level-0 elements as bare rational strings."""
    if compact and x.level == 0:
        return encode_rational(x.coeffs[0])
    return {"level": x.level, "coeffs": [encode_rational(c) for c in x.coeffs]}


def decode_cd(value: Any, level: int = None) -> CDElement:
    if isinstance(value, dict):
        lvl = require_int(value, "level")
        if level is not None and lvl != level:
            raise MalformedInputError(f"element of level {lvl} where level {level} is expected")
        coeffs = require_key(value, "coeffs")
        if not isinstance(coeffs, list):
            raise MalformedInputError("'coeffs' must be a list")
        return _build(CDElement, lvl, tuple(decode_rational(c) for c in coeffs))
    return _build(CDElement.scalar, 0 if level is None else level, decode_rational(value))


def encode_vector(v: Sequence[CDElement], compact: bool = False) -> List[JSONValue]:
    return [encode_cd(c, compact) for c in v]


def decode_vector(value: Any, level: int, length: int = None) -> tuple:
    if not isinstance(value, list):
        raise MalformedInputError(f"expected a list of elements; got {value!r}")
    if length is not None and len(value) != length:
        raise MalformedInputError(f"expected {length} entries; got {len(value)}")
    return tuple(decode_cd(c, level) for c in value)


def encode_biadditive(w: BiadditiveMap) -> Dict[str, Any]:
    return {"level": w.scalar_level, "n": w.dim, "pairing": w.pairing.value}


def decode_biadditive(obj: Any) -> BiadditiveMap:
    level = require_int(obj, "level")
    n = require_int(obj, "n")
    pairing = obj.get("pairing", Pairing.X_THEN_F.value)
    try:
        return BiadditiveMap(level, n, Pairing(pairing))
    except ValueError as exc:
        raise MalformedInputError(str(exc)) from exc


def encode_heisenberg(u: HeisenbergElement) -> Dict[str, Any]:
    out = {"a": encode_cd(u.a), "x": encode_vector(u.x), "f": encode_vector(u.f)}
    out.update(encode_biadditive(u.w))
    return out


def decode_heisenberg(obj: Any, w: BiadditiveMap = None) -> HeisenbergElement:
    if w is None:
        w = decode_biadditive(obj)
    a = decode_cd(require_key(obj, "a"), w.scalar_level)
    x = decode_vector(require_key(obj, "x"), w.scalar_level, w.dim)
    f = decode_vector(require_key(obj, "f"), w.scalar_level, w.dim)
    return HeisenbergElement(w, a, x, f)


def encode_matrix(M: UniTriMatrix) -> Dict[str, Any]:
    return {
        "size": M.size,
        "level": M.level,
        "rows": [[encode_cd(e) for e in row] for row in M.rows],
    }


def decode_matrix(obj: Any) -> UniTriMatrix:
    size = require_int(obj, "size")
    level = require_int(obj, "level")
    rows = require_key(obj, "rows")
    if not isinstance(rows, list) or len(rows) != size:
        raise MalformedInputError(f"'rows' must hold {size} rows")
    return _build(UniTriMatrix, level, tuple(decode_vector(row, level, size) for row in rows))


def read_request(path: str = None, text: str = None) -> Dict[str, Any]:
    """Load a JSON request object from a file path or from inline text."""
    if path is not None:
        try:
            with open(path, encoding="utf-8") as f:
                text = f.read()
        except OSError as exc:
            raise MalformedInputError(f"cannot read {path}: {exc}") from exc
    if text is None:
        raise MalformedInputError("no request given: pass --input PATH or --args JSON")
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedInputError(f"invalid JSON: {exc}") from exc
    if not isinstance(obj, dict):
        raise MalformedInputError("the request must be a JSON object")
    return obj


def optional_biadditive(obj: Dict[str, Any]):
    """The group described by top-level level/n keys, or None when they are absent."""
    if "level" in obj and "n" in obj:
        return decode_biadditive(obj)
    return None

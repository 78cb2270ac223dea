import argparse
import json

from relmin.codec import (
    decode_heisenberg,
    decode_matrix,
    decode_rational,
    encode_heisenberg,
    encode_matrix,
    optional_biadditive,
    read_request,
    require_int,
    require_key,
)
from relmin.config import configure_logging, load_settings
from relmin.errors import MalformedInputError
from relmin.groups.heisenberg import h_mul
from relmin.groups.unitriangular import (
    CornerCase,
    corner_case,
    corner_elem,
    corner_in_subset_b,
    delete_reduction,
    heisenberg_realization,
    reduced_corner_position,
    ut_mul,
)

KINDS = ("h_mul", "ut_mul", "realize", "reduce", "corner")


def _h_mul(request: dict) -> dict:
    w = optional_biadditive(request)
    u1 = decode_heisenberg(require_key(request, "u1"), w)
    u2 = decode_heisenberg(require_key(request, "u2"), w or u1.w)
    return encode_heisenberg(h_mul(u1, u2))


def _ut_mul(request: dict) -> dict:
    m1 = decode_matrix(require_key(request, "m1"))
    m2 = decode_matrix(require_key(request, "m2"))
    return encode_matrix(ut_mul(m1, m2))


def _realize(request: dict) -> dict:
    u = decode_heisenberg(require_key(request, "u"), optional_biadditive(request))
    return encode_matrix(heisenberg_realization(u))


def _reduce(request: dict) -> dict:
    M = decode_matrix(require_key(request, "matrix"))
    return encode_matrix(delete_reduction(M, require_int(request, "i")))


def _corner(request: dict) -> dict:
    n, i, j = (require_int(request, key) for key in ("n", "i", "j"))
    a = decode_rational(request.get("a", "1"))
    case = corner_case(n, i, j)
    out = {
        "matrix": encode_matrix(corner_elem(n, i, j, a)),
        "case": case.value,
        "in_subset_b": corner_in_subset_b(n, i, j, a),
    }
    if case is CornerCase.INTERIOR:
        out["reduced_position"] = dict(zip(("n", "i", "j"), reduced_corner_position(n, i, j)))
    return out


HANDLERS = {
    "h_mul": _h_mul,
    "ut_mul": _ut_mul,
    "realize": _realize,
    "reduce": _reduce,
    "corner": _corner,
}


def run_compute(kind: str, request: dict) -> dict:
    handler = HANDLERS.get(kind)
    if handler is None:
        raise MalformedInputError(f"unknown compute kind {kind!r}")
    return handler(request)


def compute_command(argv=None) -> int:
    settings = load_settings()
    parser = argparse.ArgumentParser(
        prog="relmin compute",
        description="Evaluate a group operation exactly from a JSON request"
    )
    parser.add_argument("kind", choices=KINDS, help="Operation to evaluate")
    source = parser.add_mutually_exclusive_group(required=True)
    source.add_argument("--input", help="Path to a JSON request file")
    source.add_argument("--args", help="Inline JSON request")
    parser.add_argument("--log-level", default=settings.log_level, help="Logging level (stderr)")

    args = parser.parse_args(argv)
    configure_logging(args.log_level)

    request = read_request(args.input, args.args)
    print(json.dumps(run_compute(args.kind, request), indent=2))
    return 0

import argparse
import json

from relmin.codec import (
    decode_biadditive,
    decode_rational,
    decode_vector,
    encode_cd,
    encode_rational,
    encode_vector,
    read_request,
    require_int,
    require_key,
)
from relmin.config import configure_logging, load_settings
from relmin.errors import MalformedInputError
from relmin.witness.engines import (
    EscalationRequest,
    break_compatibility,
    break_compatibility_dual,
    escalate_unbounded,
)
from relmin.witness.oracle import KroneckerOracle

KINDS = ("break_compat", "break_compat_dual", "escalate")


def _compatibility(request: dict, dual: bool) -> dict:
    key = "f" if dual else "x"
    vector = require_key(request, key)
    if not isinstance(vector, list):
        raise MalformedInputError(f"{key!r} must be a list")
    w = decode_biadditive({
        "level": request.get("level", 0),
        "n": request.get("n", len(vector)),
        "pairing": request.get("pairing", "xf"),
    })
    vector = decode_vector(vector, w.scalar_level, w.dim)
    eps0 = decode_rational(require_key(request, "eps0"))
    if dual:
        found = break_compatibility_dual(w, vector, eps0)
        out = {"x": encode_vector(found.vector, compact=True)}
    else:
        found = break_compatibility(w, vector, eps0)
        out = {"a": encode_vector(found.vector, compact=True)}
    out.update({
        "index": found.index + 1,
        "w_value": encode_cd(found.w_value, compact=True),
        "max_abs_sq": encode_rational(found.max_abs_sq),
        "eps0_sq": encode_rational(eps0 * eps0),
    })
    return out


def _escalation(request: dict) -> dict:
    request.setdefault("n0", 2)
    req = EscalationRequest.for_integer(require_int(request, "n0"), require_int(request, "m"),
                                        decode_rational(request.get("r", "1")))
    oracle = KroneckerOracle(decode_rational(request.get("delta1", "1/2")),
                             decode_rational(request.get("delta2", "1/2")))
    escalation = escalate_unbounded(oracle, oracle.root, req)
    out = {"n0": req.n0, "m": req.m, "r": encode_rational(req.r),
           "c_squared": encode_rational(req.c_squared)}
    out.update(escalation.to_dict(oracle))
    out["root"] = oracle.describe(oracle.root)
    return out


def run_witness(kind: str, request: dict) -> dict:
    if kind == "escalate":
        return _escalation(request)
    if kind in ("break_compat", "break_compat_dual"):
        return _compatibility(request, dual=kind == "break_compat_dual")
    raise MalformedInputError(f"unknown witness kind {kind!r}")


def witness_command(argv=None) -> int:
    settings = load_settings()
    parser = argparse.ArgumentParser(
        prog="relmin witness",
        description="Construct a witness from a JSON request and print it with its verified values"
    )
    parser.add_argument("kind", choices=KINDS, help="Witness to construct")
    source = parser.add_mutually_exclusive_group(required=True)
    source.add_argument("--input", help="Path to a JSON request file")
    source.add_argument("--args", help="Inline JSON request")
    parser.add_argument("--log-level", default=settings.log_level, help="Logging level (stderr)")

    args = parser.parse_args(argv)
    configure_logging(args.log_level)

    request = read_request(args.input, args.args)
    print(json.dumps(run_witness(args.kind, request), indent=2))
    return 0

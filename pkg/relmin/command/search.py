import argparse
import json

from relmin.algebra.cayley_dickson import MAX_LEVEL, cd_mul, cd_norm_form, find_composition_violation
from relmin.codec import encode_cd, encode_rational
from relmin.config import configure_logging, load_settings


def search_command(argv=None) -> int:
    settings = load_settings()
    parser = argparse.ArgumentParser(
        prog="relmin search",
        description="Search the structured candidate set for a pair with N(xy) != N(x)N(y)"
    )
    parser.add_argument("--level", type=int, default=settings.level, help="Cayley-Dickson level (0..4)")
    parser.add_argument("--bound", type=int, default=1, help="Largest candidate coefficient magnitude")
    parser.add_argument("--log-level", default=settings.log_level, help="Logging level (stderr)")

    args = parser.parse_args(argv)
    if not 0 <= args.level <= MAX_LEVEL:
        parser.error(f"--level must be in 0..{MAX_LEVEL}")
    if args.bound < 1:
        parser.error("--bound must be >= 1")
    configure_logging(args.log_level)

    pair = find_composition_violation(args.level, args.bound)
    result = {"level": args.level, "bound": args.bound, "found": pair is not None}
    if pair is not None:
        x, y = pair
        result.update({
            "x": encode_cd(x),
            "y": encode_cd(y),
            "abs_sq_product": encode_rational(cd_norm_form(cd_mul(x, y))),
            "product_of_abs_sq": encode_rational(cd_norm_form(x) * cd_norm_form(y)),
        })
    print(json.dumps(result, indent=2))
    return 0

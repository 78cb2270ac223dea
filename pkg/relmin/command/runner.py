import json
import sys

from relmin.command.compute import compute_command
from relmin.command.search import search_command
from relmin.command.verify import verify_command
from relmin.command.witness import witness_command
from relmin.errors import MalformedInputError, RelminError

USAGE = "Usage: relmin <verify|witness|compute|search> [options]"

COMMANDS = {
    "verify": verify_command,
    "witness": witness_command,
    "compute": compute_command,
    "search": search_command,
}


def error_payload(exc: RelminError) -> dict:
    payload = {
        "error": type(exc).__name__,
        "reason": getattr(exc, "reason", str(exc)),
        "details": getattr(exc, "details", {}),
    }
    if getattr(exc, "value", None) is not None:
        payload["details"] = {"value": str(exc.value)}
    return payload


def main(argv=None) -> int:
    """
    Exit codes: 0 when everything passed, 1 for a failed property or a
    precondition error, 2 for malformed input.
    """
    argv = sys.argv[1:] if argv is None else list(argv)
    if not argv:
        print(USAGE, file=sys.stderr)
        return 2

    cmd, *rest = argv
    handler = COMMANDS.get(cmd)
    if handler is None:
        print(f"Unknown command: {cmd!r}", file=sys.stderr)
        print(USAGE, file=sys.stderr)
        return 2

    try:
        return handler(rest)
    except SystemExit as exc:
        # argparse reports usage errors with code 2 and --help with 0
        return exc.code if isinstance(exc.code, int) else 2
    except MalformedInputError as exc:
        print(f"relmin {cmd}: error: {exc}", file=sys.stderr)
        return 2
    except RelminError as exc:
        print(json.dumps(error_payload(exc), indent=2))
        return 1


if __name__ == "__main__":
    sys.exit(main())

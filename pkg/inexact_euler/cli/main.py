"""inexact-euler command line."""

import argparse
import logging
import sys
from pathlib import Path
from typing import Dict, List, Optional, Sequence

from inexact_euler.cli.commands import COMMANDS, run_command
from inexact_euler.cli.config import load_config
from inexact_euler.enums import Plane
from inexact_euler.exceptions import ConfigurationError, InexactEulerError

logger = logging.getLogger(__name__)

EXIT_OK = 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="inexact-euler",
        description="Randomized Euler schemes under inexact information: experiments and checks.",
        epilog="Any config key can also be given as --key value.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--config", type=Path, default=None, help="key = value file with a [%s] section" % name)
        p.add_argument("--seed", type=int, default=None)
        p.add_argument("--threads", type=int, default=None)
        p.add_argument("--out", type=str, default=None)
        p.add_argument("--force", action="store_true", default=None,
                       help="downgrade step-size precondition failures to warnings")
        p.add_argument("--log-level", dest="log_level", default=None)
        if name == "stability":
            p.add_argument("--plane", choices=[plane.value for plane in Plane], default=None)
    return parser


def parse_overrides(extra: Sequence[str]) -> Dict[str, str]:
    """
    Turn ["--n-list", "64,128"] into {"n_list": "64,128"}.

    Raises:
        ConfigurationError: On a stray value or a key without a value
    """
    overrides: Dict[str, str] = {}
    items = list(extra)
    i = 0
    while i < len(items):
        token = items[i]
        if not token.startswith("--") or len(token) == 2:
            raise ConfigurationError(f"unexpected argument '{token}'")
        key, eq, value = token[2:].partition("=")
        if not eq:
            if i + 1 >= len(items) or items[i + 1].startswith("--"):
                raise ConfigurationError(f"option '{token}' needs a value")
            value = items[i + 1]
            i += 1
        overrides[key.replace("-", "_")] = value
        i += 1
    return overrides


def main(argv: Optional[List[str]] = None) -> int:
    """
    Run one subcommand.

    Returns:
        0 on success, otherwise the exit code of the error (2 config, 3 numerical, 4 bound violation)
    """
    parser = build_parser()
    args, extra = parser.parse_known_args(argv)
    try:
        overrides = parse_overrides(extra)
        for key in ("seed", "threads", "out", "force", "log_level", "plane"):
            value = getattr(args, key, None)
            if value is not None:
                overrides[key] = value
        cfg = load_config(args.command, args.config, overrides)
        logging.basicConfig(
            level=getattr(logging, cfg.log_level),
            format="%(asctime)s %(levelname)s %(name)s: %(message)s",
            stream=sys.stderr,
        )
        written = run_command(args.command, cfg)
    except InexactEulerError as exc:
        logger.debug("%s failed", args.command, exc_info=True)
        print(exc.to_json(), file=sys.stderr)
        return exc.exit_code
    for path in written:
        print(path)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())

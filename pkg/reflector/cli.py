"""Command-line entrypoint.

Runs both as a script (`python reflector/cli.py ...`) and as a module
(`python -m reflector.cli ...`).
"""

from __future__ import annotations

import logging
import sys
from typing import Optional, Sequence

try:
    # Script mode: `python reflector/cli.py`
    from cli_factory import create_cli
    from reflib import config
    from reflib.errors import ReflectorError
except ModuleNotFoundError:
    # Package mode: `python -m reflector.cli`
    from .cli_factory import create_cli
    from .reflib import config
    from .reflib.errors import ReflectorError

log = logging.getLogger('reflector')

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_ERROR = 2


def _log_level(verbose: int) -> int:
    if verbose >= 2:
        return logging.DEBUG
    if verbose == 1:
        return logging.INFO
    return getattr(logging, config.LOG_LEVEL, logging.WARNING)


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = create_cli()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=_log_level(args.verbose),
        format='%(levelname)s %(name)s: %(message)s',
        stream=sys.stderr,
    )
    if args.cap is not None:
        config.SUBSET_CAP = args.cap

    try:
        outcome = args.handler(args)
    except ReflectorError as e:
        print(f"error: {e}", file=sys.stderr)
        if e.witness is not None:
            print(f"witness: {e.witness}", file=sys.stderr)
        return EXIT_ERROR
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_ERROR

    if args.out:
        try:
            with open(args.out, 'w', encoding='utf-8') as fh:
                fh.write(outcome.text)
        except OSError as e:
            print(f"error: {e}", file=sys.stderr)
            return EXIT_ERROR
        log.info("wrote %s", args.out)
    else:
        sys.stdout.write(outcome.text)
    return EXIT_FAIL if outcome.failed else EXIT_OK


if __name__ == '__main__':
    sys.exit(main())

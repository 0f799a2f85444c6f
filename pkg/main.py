#!/usr/bin/env python3
"""
regrade - regular gradings on finite-dimensional algebras
Entry point for the `regrade` command
"""

import logging
import sys

import cli
import config


def setup_logging():
    """Configure logging once; reports go to stdout, logs to stderr"""
    handlers = [logging.StreamHandler(sys.stderr)]
    log_file = config.get_log_file()
    if log_file:
        handlers.append(logging.FileHandler(log_file))
    level = logging.DEBUG if config.DEBUG else config.get_log_level()
    logging.basicConfig(level=level, format=config.LOG_FORMAT, handlers=handlers)


logger = logging.getLogger(__name__)


def main():
    """Main function to run one regrade command"""
    setup_logging()
    try:
        logger.info(f"🚀 regrade {' '.join(sys.argv[1:])}")
        sys.exit(cli.run(sys.argv[1:]))
    except KeyboardInterrupt:
        logger.info("Interrupted")
        sys.exit(130)


if __name__ == "__main__":
    main()

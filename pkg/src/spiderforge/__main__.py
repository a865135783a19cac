"""Spiderforge command-line entry point – delegates to cli.main()."""

from spiderforge.cli import main

if __name__ == "__main__":
    main()

#!/usr/bin/env python3
"""Census driver: classify every graph in a graph6 stream and summarize.

Usage:
    python scripts/run_census.py tests/data/connected_bipartite_le7.g6 \
        [--workers 4] [--props mg|full] [--json]

Thin wrapper over the ``toricgraphs census`` subcommand so the experiment
is reproducible from a checkout without installing the package.
"""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from toricgraphs.cli import main

if __name__ == "__main__":
    sys.exit(main(["census", *sys.argv[1:]]))

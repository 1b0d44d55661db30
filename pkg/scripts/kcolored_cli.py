#!/usr/bin/env python3
"""Script to run the kcolored pipeline: count, search, bound, verify

Examples:
    python scripts/kcolored_cli.py search --n 27 --k 2 --seed 1 --out data/instances/k2_n27.txt
    python scripts/kcolored_cli.py bound --instance data/instances/k2_n27.txt --compare-samples 100
    python scripts/kcolored_cli.py verify --instance data/instances/small.txt --t-max 2
"""

import sys
from pathlib import Path

# Add src to path
sys.path.insert(0, str(Path(__file__).parent.parent / "src"))

from kcolored.cli import main  # noqa: E402

if __name__ == "__main__":
    sys.exit(main())

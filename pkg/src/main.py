import sys
from pathlib import Path

# Add 'src' to path to ensure imports work regardless of where it's run from
sys.path.append(str(Path(__file__).parent))

from fusion.cli import cli


def main():
    """
    Entry point for the fusion toolkit.

    python src/main.py decompose --type A2 --lambda 1,0 --mu 0,1
    python src/main.py verify --type C2 --max 3
    """
    cli(obj={})


if __name__ == "__main__":
    main()

"""
Hilbert lab - main entry point.

    python -m hilbertlab.main verify-lemma --depth 3
"""

from hilbertlab.cli import cli

if __name__ == "__main__":
    cli()

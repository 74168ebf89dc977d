"""
latnak - Exact derived-category computations for Nakayama and lattice algebras
"""

from importlib.metadata import version

from latnak.constants import PACKAGE_NAME

__version__ = version(PACKAGE_NAME)


def main() -> None:
    from latnak.cli.app import app

    app()


__all__ = ["main"]

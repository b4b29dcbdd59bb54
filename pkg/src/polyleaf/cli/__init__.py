"""Command-line surface: expression parsing, dispatch and JSON reports."""

from polyleaf.cli.main import main, run
from polyleaf.cli.parser import ParsedExpr, parse_poly, parse_polynomial

__all__ = ["ParsedExpr", "main", "parse_poly", "parse_polynomial", "run"]

"""Python interface to the germlab core.

Germs are given as a dict in the germ-file format, a JSON string, or a path
to a germ file. Report functions return the parsed JSON report.
"""

import json
import os

from ._core import (
    REPORT_SCHEMA,
    BudgetExhausted,
    GermlabError,
    ParseError,
    __version__,
    groebner_basis,
    krull_dimension,
    milnor_number,
    run,
)

__all__ = [
    "REPORT_SCHEMA",
    "BudgetExhausted",
    "GermlabError",
    "ParseError",
    "Result",
    "analyze",
    "foliate",
    "groebner_basis",
    "krull_dimension",
    "milnor",
    "milnor_number",
    "newton",
    "run",
    "run_command",
    "sigma",
]


class Result:
    def __init__(self, exit_code, report, text, csv):
        self.exit_code = exit_code
        self.report = report
        self.text = text
        self.csv = csv

    def __repr__(self):
        return f"Result(exit_code={self.exit_code}, command={self.report.get('command')!r})"


def _germ_text(germ):
    if isinstance(germ, dict):
        return json.dumps(germ), ""
    if isinstance(germ, os.PathLike) or (isinstance(germ, str) and not germ.lstrip().startswith("{")):
        path = os.fspath(germ)
        with open(path, encoding="utf-8") as fh:
            return fh.read(), path
    return germ, ""


def run_command(command, germ, **options):
    text, name = _germ_text(germ)
    options.setdefault("input_name", name)
    code, report, out_text, csv = run(command, text, **options)
    return Result(code, json.loads(report), out_text, csv)


def analyze(germ, **options):
    return run_command("analyze", germ, **options).report


def sigma(germ, **options):
    return run_command("sigma", germ, **options).report


def newton(germ, **options):
    return run_command("newton", germ, **options).report


def foliate(germ, **options):
    return run_command("foliate", germ, **options).report


def milnor(germ, **options):
    """Milnor number of a hypersurface germ file; None if not isolated."""
    value = run_command("milnor", germ, **options).report.get("milnor_number")
    return value if isinstance(value, int) else None

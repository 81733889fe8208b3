"""Command-line front end, instance generator and counterexample hunter."""

from multimatrix.cli.generate import InstanceKind, generate, random_graph, random_multimatrix
from multimatrix.cli.hunt import HuntConfig, HuntFinding, HuntReport, Target, hunt, shrink
from multimatrix.cli.report import Report, parse_report, strip_timing

__all__ = [
    "HuntConfig",
    "HuntFinding",
    "HuntReport",
    "InstanceKind",
    "Report",
    "Target",
    "generate",
    "hunt",
    "parse_report",
    "random_graph",
    "random_multimatrix",
    "shrink",
    "strip_timing",
]

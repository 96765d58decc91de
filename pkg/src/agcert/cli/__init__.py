"""Command-line verification: scenarios, certificates and exit codes."""

from .certificate import Certificate, Check
from .registry import ScenarioError, load_builtin, run_scenario

SCENARIOS = [
    "quartic",
    "triple-root-criterion",
    "pencil",
    "falsify-pencil",
    "p138-invariants",
    "adjunction-searches",
    "bolza-curve",
    "weighted-bezout-m48",
    "mirror24",
    "conics",
    "quotient-map-61",
    "orbifold-W",
    "sd16",
    "quotient-invariants-s2",
]

__all__ = ["Certificate", "Check", "SCENARIOS", "ScenarioError", "load_builtin", "run_scenario"]

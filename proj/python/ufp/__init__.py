"""Python front end for the unbounded forecasting game engine.

Scalars are returned as strings; exact values look like "p/q" and can be fed
straight to fractions.Fraction.
"""

import json

from ufp import _core
from ufp._core import ParseError, ProtocolError

__all__ = [
    "ParseError",
    "ProtocolError",
    "analyze",
    "divergence",
    "kolmogorov_sum",
    "payoff",
    "play",
    "verify",
]

payoff = _core.payoff
kolmogorov_sum = _core.kolmogorov_sum
divergence = _core.divergence


def play(forecaster, skeptic, rounds, *, variant="standard", mode="exact",
         sign_policy="positive", stop_on_bankruptcy=False):
    """Play one game. Returns (records, verdict) as plain dicts."""
    jsonl, verdict = _core.play(forecaster, skeptic, rounds, variant, mode,
                                sign_policy, stop_on_bankruptcy)
    records = [json.loads(line) for line in jsonl.splitlines() if line]
    return records, json.loads(verdict)


def analyze(records):
    """Verdict for a list of record dicts (or a JSON-lines string)."""
    if not isinstance(records, str):
        records = "".join(json.dumps(r) + "\n" for r in records)
    return json.loads(_core.analyze(records))


def verify():
    """Run the acceptance suite. Returns (all_passed, report_text)."""
    return _core.verify()

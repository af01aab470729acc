from pathlib import Path

import pytest

from graphshare.formats import parse_set_share
from graphshare.setscheme import token

FIXTURES = Path(__file__).parent / "fixtures"

# the five (3,5) shares of S = {0, 2, 13}, as printed in the worked example
PAPER_SHARES = {
    1: [-48, -25, -18, -5, 0, 1, 2, 9, 10, 13, 19, 24, 40, 52, 88],
    2: [-92, -48, -18, -3, 0, 2, 3, 4, 10, 11, 12, 13, 37, 61, 90],
    3: [-75, -53, -44, -25, -10, -3, 0, 1, 2, 11, 13, 40, 46, 58, 61],
    4: [-81, -75, -44, -10, -5, 0, 2, 3, 12, 13, 23, 24, 50, 52, 90],
    5: [-92, -81, -53, 0, 2, 4, 9, 13, 19, 23, 37, 46, 50, 58, 88],
}
PAPER_SECRET = [0, 2, 13]

# the random draws of the worked example, in the order the dealer makes them
PAPER_FRESH = [
    [-48, -25, -18, -5, 1, 9, 10, 19, 24, 40, 52, 88],
    [-92, -3, 3, 4, 11, 12, 37, 61, 90],
    [-75, -53, -44, -10, 46, 58],
    [-81, 23, 50],
]
PAPER_PICKS = [
    [-48, -18, 10], [-25, 1, 40], [-5, 24, 52], [9, 19, 88],
    [-3, 11, 61], [3, 12, 90], [-92, 4, 37],
    [-75, -44, -10], [-53, 46, 58],
    [-81, 23, 50],
]


def tokens(values):
    return frozenset(token(v) for v in values)


class ScriptedRandom:
    """Replays fixed draws; any call it was not scripted for is an error."""

    def __init__(self, ranges=(), samples=(), random_values=()):
        self.ranges = list(ranges)
        self.samples = [list(s) for s in samples]
        self.random_values = list(random_values)

    def randrange(self, *args):
        lo, hi = (0, args[0]) if len(args) == 1 else args[:2]
        value = self.ranges.pop(0)
        assert lo <= value < hi
        return value

    def sample(self, population, k):
        picked = self.samples.pop(0)
        assert len(picked) == k
        assert all(p in population for p in picked)
        return picked

    def random(self):
        return self.random_values.pop(0)


@pytest.fixture
def paper_shares():
    return {i: parse_set_share((FIXTURES / f"s{i}.sshare").read_text(), f"s{i}.sshare")
            for i in range(1, 6)}


@pytest.fixture
def paper_replay_rng():
    fresh = [v for batch in PAPER_FRESH for v in batch]
    picks = [tokens(p) for p in PAPER_PICKS]
    # sample() must return tokens in the population's own representation
    return ScriptedRandom(ranges=fresh, samples=[sorted(p) for p in picks])


def pytest_terminal_summary(terminalreporter):
    rows = []
    for outcome in ("passed", "failed"):
        for rep in terminalreporter.stats.get(outcome, []):
            if getattr(rep, "when", None) == "call" and "test_acceptance.py" in rep.nodeid:
                rows.append((rep.nodeid.split("::")[-1], outcome))
    if not rows:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in sorted(rows):
        terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {name}")

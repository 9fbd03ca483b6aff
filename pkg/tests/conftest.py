from __future__ import annotations

import hypothesis.strategies as st
from hypothesis import settings

from braidmono import BraidWord

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


def letters(d: int, max_size: int = 10):
    if d < 2:
        return st.just(())
    return st.lists(
        st.integers(1, d - 1).flatmap(lambda i: st.sampled_from((i, -i))), max_size=max_size
    ).map(tuple)


def braids(d: int, max_size: int = 10):
    return letters(d, max_size).map(lambda ls: BraidWord(d, ls))


@st.composite
def sized_braids(draw, min_d: int = 2, max_d: int = 5, max_size: int = 10):
    d = draw(st.integers(min_d, max_d))
    return draw(braids(d, max_size))


def free_words(rank: int, max_size: int = 8):
    return st.lists(
        st.integers(1, rank).flatmap(lambda i: st.sampled_from((i, -i))), max_size=max_size
    ).map(tuple)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)

from hypothesis import strategies as st

from modcat.trees import LEAF, Node


def binary_trees(max_leaves=12):
    return st.recursive(st.just(LEAF), lambda children: st.builds(Node, children, children), max_leaves=max_leaves)


# filled by test_acceptance, echoed after the run
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)

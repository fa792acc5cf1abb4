import pytest

from racgcomp.graph import DefiningGraph, complete_graph, cycle_graph, edgeless_graph, path_graph

CRITERIA = {
    1: "finite-index fixture",
    2: "non-terminating fixtures",
    3: "reflection pipeline",
    4: "tree completions",
    5: "torsion",
    6: "normality and core graphs",
    7: "separability",
    8: "power membership",
    9: "embeddability",
    10: "word engine cross-validation",
    11: "hyperplane origin invariant",
}

_results = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number")


def pytest_runtest_logreport(report):
    crit = getattr(report, "criterion", None)
    if crit is None:
        return
    ok = report.passed if report.when == "call" else not report.failed
    prev = _results.get(crit, True)
    _results[crit] = prev and ok


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    m = item.get_closest_marker("criterion")
    if m is not None:
        rep.criterion = m.args[0]


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(CRITERIA):
        if n in _results:
            status = "PASS" if _results[n] else "FAIL"
            terminalreporter.write_line(f"{status} criterion {n}: {CRITERIA[n]}")


# shared graphs ----------------------------------------------------------------

def ladder():
    """Two rows a-c-e / b-d-f joined by rungs."""
    return DefiningGraph(list("abcdef"), [("a", "b"), ("c", "d"), ("e", "f"),
                                          ("a", "c"), ("c", "e"), ("b", "d"), ("d", "f")])


def square_cylinder():
    """{c,d} joined to {a,b,e,f}; ⟨abcde⟩ has an infinite completion here."""
    return DefiningGraph(list("abcdef"), [(x, y) for x in "cd" for y in "abef"])


@pytest.fixture
def p3():
    return path_graph("abc")


@pytest.fixture
def p4():
    return path_graph("abcd")


@pytest.fixture
def c4():
    return cycle_graph("abcd")


@pytest.fixture
def c5():
    return cycle_graph("abcde")


TEST_GRAPHS = {
    "p3": path_graph("abc"),
    "p4": path_graph("abcd"),
    "c4": cycle_graph("abcd"),
    "c5": cycle_graph("abcde"),
    "ladder": ladder(),
    "k23": DefiningGraph(list("abcde"), [(x, y) for x in "ab" for y in "cde"]),
    "edge": complete_graph("ab"),
    "triangle": complete_graph("abc"),
    "free3": edgeless_graph("abc"),
}

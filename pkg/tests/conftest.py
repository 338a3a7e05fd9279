import pytest

ACCEPTANCE = pytest.StashKey[dict]()
CRITERIA = {
    1: "example 1 reproduction",
    2: "example 2 reproduction",
    3: "closed-form grid agreement",
    4: "general-G2 factorization",
    5: "identity suite",
    6: "exact-mode identity",
    7: "cospectral family",
    8: "endpoint identities",
}


@pytest.fixture
def acceptance(request):
    """Record ``(criterion, passed, detail)``; summarized after the run."""
    store = request.config.stash.setdefault(ACCEPTANCE, {})

    def record(number: int, passed: bool, detail: str) -> bool:
        line = f"ACCEPTANCE {number} {'PASS' if passed else 'FAIL'} {CRITERIA[number]}: {detail}"
        store[number] = line
        print(line)
        return passed

    return record


def pytest_terminal_summary(terminalreporter, config):
    store = config.stash.get(ACCEPTANCE, None)
    if store is None:
        return
    terminalreporter.section("acceptance criteria")
    for number, name in CRITERIA.items():
        terminalreporter.write_line(store.get(number, f"ACCEPTANCE {number} FAIL {name}: not run"))

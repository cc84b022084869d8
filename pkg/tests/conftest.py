import pytest


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    if report.when != "call" or "test_acceptance" not in str(item.fspath):
        return
    criterion = getattr(item.function, "_criterion", None)
    if criterion is None:
        return
    if report.passed:
        print(f"\nACCEPTANCE PASS: {criterion}")
    elif report.failed:
        print(f"\nACCEPTANCE FAIL: {criterion}")
    elif report.skipped:
        print(f"\nACCEPTANCE SKIP: {criterion}")

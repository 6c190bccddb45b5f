import pytest

import scheme_forge as sf

# criterion label -> "PASS"/"FAIL", filled in by test_acceptance.py
ACCEPTANCE_RESULTS: dict[str, str] = {}


@pytest.fixture(scope="session")
def z5():
    return sf.orbital_scheme(sf.cyclotomic_frobenius(5))


@pytest.fixture(scope="session")
def z13():
    return sf.orbital_scheme(sf.cyclotomic_frobenius(13))


@pytest.fixture(scope="session")
def z17():
    return sf.orbital_scheme(sf.cyclotomic_frobenius(17))


@pytest.fixture(scope="session")
def z29():
    return sf.orbital_scheme(sf.cyclotomic_frobenius(29))


@pytest.fixture(scope="session")
def v25():
    return sf.orbital_scheme(sf.vector_frobenius(5, 2))


@pytest.fixture(scope="session")
def battery(z5, z13, z17, z29, v25):
    return {"z5": z5, "z13": z13, "z17": z17, "z29": z29, "v25": v25}


@pytest.fixture(scope="session")
def auts(battery):
    return {name: sf.automorphism_group(s) for name, s in battery.items()}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(ACCEPTANCE_RESULTS):
        terminalreporter.write_line("%s: %s" % (label, ACCEPTANCE_RESULTS[label]))

import pytest
from hypothesis import HealthCheck, settings, strategies as st

from agcert.arith import NumberField, Rat

settings.register_profile(
    "agcert",
    deadline=None,
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large],
)
settings.load_profile("agcert")

SQRT_M2 = NumberField([2, 0, 1], gen="r")
ZETA8 = NumberField([1, 0, 0, 0, 1], gen="z")
CUBIC = NumberField([-2, 0, 0, 1], gen="c")  # Q(2^(1/3))

small_ints = st.integers(min_value=-9, max_value=9)
rationals = st.builds(
    lambda p, q: Rat(p, q),
    st.integers(min_value=-50, max_value=50),
    st.integers(min_value=1, max_value=12),
)


def elements(field):
    return st.lists(rationals, min_size=field.degree, max_size=field.degree).map(field.from_coeffs)


@pytest.fixture
def k2():
    return SQRT_M2


ACCEPTANCE = {}


def record_acceptance(n, ok, detail):
    line = f"{'PASS' if ok else 'FAIL'} {n}: {detail}"
    ACCEPTANCE[str(n)] = line
    print(line)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE, key=lambda k: (int(k.rstrip("s")), k)):
        terminalreporter.write_line(ACCEPTANCE[key])

from fractions import Fraction

from hypothesis import settings, strategies as st

from quatbridge.algebra import Quaternion
from quatbridge.scalars import EXACT, GaussRational

settings.register_profile("quatbridge", deadline=None)
settings.load_profile("quatbridge")

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)
gauss = st.builds(GaussRational, rationals, rationals)
quaternions = st.builds(lambda *c: Quaternion(*c, mode=EXACT), gauss, gauss, gauss, gauss)
vectors = st.builds(lambda *c: Quaternion(0, *c, mode=EXACT), gauss, gauss, gauss)
small_complex = st.complex_numbers(max_magnitude=10, allow_nan=False, allow_infinity=False)


def half(x=1):
    return Fraction(x, 2)


def pytest_terminal_summary(terminalreporter):
    import sys

    module = sys.modules.get("test_acceptance")
    if module is None or not module.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(module.RESULTS, key=lambda k: (len(k.rstrip("abc")), k)):
        status, text = module.RESULTS[key]
        terminalreporter.write_line(f"{status}  {key:4s} {text}")

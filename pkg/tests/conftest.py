import sys
from pathlib import Path

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile(
    "default", deadline=None, max_examples=40,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large],
)
settings.load_profile("default")


def block_specs(max_total: int, max_colors: int = 6, min_block: int = 1):
    """Block-size tuples with sum <= max_total (any order, repeats allowed)."""
    @st.composite
    def build(draw):
        total = draw(st.integers(1, max_total))
        blocks = []
        while total >= min_block and len(blocks) < max_colors:
            b = draw(st.integers(min_block, total))
            blocks.append(b)
            total -= b
            if not draw(st.booleans()):
                break
        return tuple(blocks) if blocks else (min_block,)
    return build()


int_matrices = st.integers(1, 4).flatmap(
    lambda r: st.integers(1, 5).flatmap(
        lambda c: st.lists(st.lists(st.integers(-4, 4), min_size=c, max_size=c),
                           min_size=r, max_size=r)))


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(results):
        terminalreporter.write_line(results[n])

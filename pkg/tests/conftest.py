import itertools

from hypothesis import strategies as st

from kostant_osc.partitions import Partition


@st.composite
def partitions_st(draw, max_size=8, max_len=None):
    n = draw(st.integers(0, max_size))
    parts = []
    left = n
    while left:
        if max_len is not None and len(parts) == max_len:
            break
        top = min(left, parts[-1] if parts else left)
        p = draw(st.integers(1, top))
        parts.append(p)
        left -= p
    return Partition(parts)


def ssyt(shape, n):
    """Brute force: all semistandard tableaux of the given shape with entries 1..n."""
    cells = [(i, j) for i, row in enumerate(shape) for j in range(row)]
    for vals in itertools.product(range(1, n + 1), repeat=len(cells)):
        t = dict(zip(cells, vals))
        if all(t[(i, j)] <= t[(i, j + 1)] for (i, j) in cells if (i, j + 1) in t) and \
                all(t[(i, j)] < t[(i + 1, j)] for (i, j) in cells if (i + 1, j) in t):
            yield t


def ssyt_polynomial(shape, n):
    """Schur polynomial by tableau enumeration, as {exponent tuple: count}."""
    out = {}
    for t in ssyt(shape, n):
        e = [0] * n
        for v in t.values():
            e[v - 1] += 1
        out[tuple(e)] = out.get(tuple(e), 0) + 1
    return out


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)

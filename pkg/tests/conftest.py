"""Shared brute-force oracles and acceptance reporting."""
from __future__ import annotations


def poly_multiply(p: list[int], q: list[int]) -> list[int]:
    out = [0] * (len(p) + len(q) - 1)
    for i, x in enumerate(p):
        for j, y in enumerate(q):
            out[i + j] += x * y
    return out


def poly_power_coeffs(l: int, k: int) -> list[int]:
    """Coefficient vector of (1 + x + ... + x**l)**k by naive multiplication."""
    acc = [1]
    base = [1] * (l + 1)
    for _ in range(k):
        acc = poly_multiply(acc, base)
    return acc


def is_unimodal(seq) -> bool:
    """Weakly rises to a peak, then weakly falls; plateaus allowed."""
    rising = True
    for prev, cur in zip(seq, seq[1:]):
        if rising:
            if cur < prev:
                rising = False
        elif cur > prev:
            return False
    return True


ACCEPTANCE_LINES: list[str] = []


def record_criterion(num: int, description: str, ok: bool, detail: str = "") -> None:
    tag = "PASS" if ok else "FAIL"
    suffix = f"  ({detail})" if detail else ""
    ACCEPTANCE_LINES.append(f"{tag}  criterion {num}: {description}{suffix}")


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)

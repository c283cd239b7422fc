"""Shared enumeration helpers for the test suite."""


def partitions_of(total, cap=None):
    """All partitions of total with parts at most cap, largest part first."""
    cap = total if cap is None else cap
    if total == 0:
        return [()]
    out = []
    for first in range(min(total, cap), 0, -1):
        out.extend((first,) + rest for rest in partitions_of(total - first, first))
    return out


def partitions_upto(m, include_empty=True):
    """All partitions of size 0..m in increasing size order."""
    out = [()] if include_empty else []
    for total in range(1, m + 1):
        out.extend(partitions_of(total))
    return out

"""Pass/fail records shared by the verification routines and the CLI."""

from dataclasses import dataclass


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""

    def line(self):
        tail = (": " + self.detail) if self.detail else ""
        return "%s %s%s" % ("PASS" if self.passed else "FAIL", self.name, tail)


def series_detail(residual, limit=3):
    """Where a residual series first fails to vanish."""
    if residual.is_zero():
        return "zero to O(q^%d)" % residual.precision
    e, c = residual.items()[0]
    return "first nonzero residual %s at q^%d" % (c, e)
